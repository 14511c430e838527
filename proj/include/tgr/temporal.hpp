#pragma once

#include <algorithm>
#include <cassert>
#include <optional>
#include <queue>
#include <string>
#include <thread>
#include <utility>
#include <vector>

#include "tgr/errors.hpp"
#include "tgr/graph.hpp"
#include "tgr/instance.hpp"
#include "tgr/labeling.hpp"
#include "tgr/util.hpp"

namespace tgr {

/// One traversal of an edge: departure at `depart`, arrival one time unit
/// later.
struct TemporalStep {
    int from = 0;
    int to = 0;
    int depart = 0;
    int arrive = 0;
};

/// A temporal path as a sequence of steps with strictly increasing
/// departures.  Duration is measured from the first departure to the last
/// arrival.
struct TemporalPath {
    std::vector<TemporalStep> steps;

    bool empty() const { return steps.empty(); }
    int departure() const { return steps.front().depart; }
    int arrival() const { return steps.back().arrive; }
    int duration() const { return steps.empty() ? 0 : arrival() - departure(); }
};

/// Total time spent waiting at intermediate vertices of a path.  Waiting
/// before the first departure does not count: duration starts there.
inline int waiting_time(const TemporalPath& path) {
    int total = 0;
    for (std::size_t i = 1; i < path.steps.size(); ++i)
        total += path.steps[i].depart - path.steps[i - 1].arrive;
    return total;
}

/// Earliest-arrival table from one source at one start time.
/// arrival[source] is the start time itself (presence, not a traversal).
struct EarliestArrival {
    int source = 0;
    int start = 0;
    std::vector<int> arrival;      // kInf where unreachable
    std::vector<int> parent_edge;  // settling edge index, -1 at source/unreached
};

/// Computes earliest arrivals from `source` when present there at time
/// `start`.  An edge labeled t departs at the next time congruent to t mod
/// delta and arrives one unit later, so waiting is free and at most
/// delta - 1 per hop.
///
/// Earliest arrival over walks equals earliest arrival over vertex-simple
/// paths: revisiting a vertex cannot beat waiting at it, because the walk
/// is already present there at the earlier visit.  The Dijkstra sweep below
/// therefore also yields simple witness paths: parent arrivals strictly
/// decrease along the chain and every vertex settles once.
///
/// Determinism: the queue is keyed (arrival, lex rank) and out-edges are
/// scanned in lex-target order; ties keep the first parent found.
inline EarliestArrival earliest_arrival(const DiGraph& g, const Labeling& lab,
                                        int source, int start) {
    assert(static_cast<int>(lab.labels.size()) == g.m());
    EarliestArrival ea;
    ea.source = source;
    ea.start = start;
    ea.arrival.assign(g.n(), kInf);
    ea.parent_edge.assign(g.n(), -1);
    ea.arrival[source] = start;

    using Key = std::pair<int, int>;  // (arrival, lex rank)
    std::priority_queue<Key, std::vector<Key>, std::greater<Key>> queue;
    std::vector<bool> settled(g.n(), false);
    queue.emplace(start, g.lex_rank(source));
    std::vector<int> by_rank(g.n());
    for (int v = 0; v < g.n(); ++v) by_rank[g.lex_rank(v)] = v;

    while (!queue.empty()) {
        auto [time, rank] = queue.top();
        queue.pop();
        int x = by_rank[rank];
        if (settled[x]) continue;
        settled[x] = true;
        for (int e : g.out_lex(x)) {
            int y = g.edge(e).to;
            int depart = time + mod_gap(time, lab.label(e), lab.delta);
            int arrive = depart + 1;
            if (arrive < ea.arrival[y]) {
                ea.arrival[y] = arrive;
                ea.parent_edge[y] = e;
                queue.emplace(arrive, g.lex_rank(y));
            }
        }
    }
    return ea;
}

/// Fastest duration from u to v: the minimum over start phases s in
/// [0, delta) of earliest arrival minus s.  Phases cover all start times
/// because shifting the start by delta shifts every arrival by delta.
/// kInf when v is unreachable from u; 0 on the diagonal.
inline int fastest_duration(const DiGraph& g, const Labeling& lab, int u, int v) {
    if (u == v) return 0;
    int best = kInf;
    for (int s = 0; s < lab.delta; ++s) {
        EarliestArrival ea = earliest_arrival(g, lab, u, s);
        if (ea.arrival[v] != kInf) best = std::min(best, ea.arrival[v] - s);
    }
    return best;
}

/// Fastest temporal path from u to v (empty when unreachable or u == v).
/// The witness departs exactly at the minimizing phase s (smallest such s):
/// were the first departure later, starting at that later phase would give
/// a strictly smaller duration.
inline TemporalPath fastest_path(const DiGraph& g, const Labeling& lab, int u, int v) {
    TemporalPath path;
    if (u == v) return path;
    int best = kInf, best_s = -1;
    std::optional<EarliestArrival> best_ea;
    for (int s = 0; s < lab.delta; ++s) {
        EarliestArrival ea = earliest_arrival(g, lab, u, s);
        if (ea.arrival[v] != kInf && ea.arrival[v] - s < best) {
            best = ea.arrival[v] - s;
            best_s = s;
            best_ea = std::move(ea);
        }
    }
    if (!best_ea) return path;
    for (int y = v; y != u;) {
        int e = best_ea->parent_edge[y];
        assert(e >= 0);
        const Edge& ed = g.edge(e);
        path.steps.push_back(TemporalStep{ed.from, ed.to, best_ea->arrival[y] - 1,
                                          best_ea->arrival[y]});
        y = ed.from;
    }
    std::reverse(path.steps.begin(), path.steps.end());
    assert(path.departure() == best_s);
    assert(path.duration() == best);
    return path;
}

/// Duration of traversing a fixed vertex path greedily: depart on the
/// first edge at its phase and take every further edge at its next
/// availability.  Because waiting never helps on a fixed path (departing
/// later can only delay every later arrival by the same or more), this is
/// the fastest duration achievable along exactly this path.
inline int greedy_path_duration(const DiGraph& g, const Labeling& lab,
                                const std::vector<int>& vertices) {
    assert(vertices.size() >= 2);
    int first = g.edge_index(vertices[0], vertices[1]);
    assert(first >= 0);
    const int start = lab.label(first);
    int t = start;
    for (std::size_t i = 0; i + 1 < vertices.size(); ++i) {
        int e = g.edge_index(vertices[i], vertices[i + 1]);
        assert(e >= 0);
        t += mod_gap(t, lab.label(e), lab.delta) + 1;
    }
    return t - start;
}

/// All-pairs fastest durations.
struct DurationMatrix {
    std::vector<std::vector<int>> durations;  // [u][v], kInf unreachable, 0 diagonal
};

/// Computes the fastest-duration matrix, optionally splitting source rows
/// across threads.  Rows are independent, so the result does not depend on
/// the thread count.
inline DurationMatrix duration_matrix(const DiGraph& g, const Labeling& lab,
                                      int threads = 1) {
    DurationMatrix dm;
    dm.durations.assign(g.n(), std::vector<int>(g.n(), kInf));
    auto fill_row = [&](int u) {
        dm.durations[u][u] = 0;
        std::vector<int>& row = dm.durations[u];
        for (int s = 0; s < lab.delta; ++s) {
            EarliestArrival ea = earliest_arrival(g, lab, u, s);
            for (int v = 0; v < g.n(); ++v) {
                if (v == u || ea.arrival[v] == kInf) continue;
                row[v] = std::min(row[v], ea.arrival[v] - s);
            }
        }
    };
    threads = std::max(1, std::min(threads, g.n()));
    if (threads == 1) {
        for (int u = 0; u < g.n(); ++u) fill_row(u);
    } else {
        std::vector<std::thread> pool;
        pool.reserve(threads);
        for (int w = 0; w < threads; ++w)
            pool.emplace_back([&, w] {
                for (int u = w; u < g.n(); u += threads) fill_row(u);
            });
        for (std::thread& t : pool) t.join();
    }
    return dm;
}

/// One violated bound found by verify_labeling.
struct Violation {
    int from = 0;
    int to = 0;
    int bound = 0;
    int duration = 0;  // achieved fastest duration (> bound)
};

/// Result of checking a labeling against an instance's bounds.
struct VerifyReport {
    bool ok = true;
    std::vector<Violation> violations;  // lexicographic (from id, to id) order
};

/// Checks every bound of the instance under the labeling.
inline VerifyReport verify_labeling(const Instance& inst, const Labeling& lab) {
    if (lab.delta != inst.delta)
        throw ValidationError("labeling delta " + std::to_string(lab.delta) +
                              " does not match instance delta " + std::to_string(inst.delta));
    VerifyReport report;
    for (auto [u, v] : inst.bounded_pairs()) {
        int d = fastest_duration(inst.graph, lab, u, v);
        if (d > inst.bound(u, v)) {
            report.ok = false;
            report.violations.push_back(Violation{u, v, inst.bound(u, v), d});
        }
    }
    return report;
}

}  // namespace tgr
