#pragma once

#include <algorithm>
#include <cassert>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "tgr/distances.hpp"
#include "tgr/errors.hpp"
#include "tgr/graph.hpp"
#include "tgr/util.hpp"

namespace tgr {

/// One upper bound on the fastest duration from `from` to `to`.
/// Used as the exchange format between parsers, builders and Instance::make.
struct BoundSpec {
    std::string from;
    std::string to;
    int d = 0;
};

/// A realization-problem instance: a directed graph, a period delta, and a
/// partial map of duration upper bounds on ordered vertex pairs.
///
/// Construction validates the input and normalizes the bound map: a bound
/// that no periodic labeling can violate is dropped.  A pair absent from
/// `bounds` is unconstrained; bound() reports kInf for it.
class Instance {
public:
    DiGraph graph;
    int delta = 1;
    /// Surviving bounds keyed by (from index, to index); values are finite.
    std::map<std::pair<int, int>, int> bounds;
    /// Static (unit-length) shortest-path distances, dist[u][v]; kInf when
    /// v is unreachable from u (possible only when strong connectivity was
    /// waived at construction).
    std::vector<std::vector<int>> dist;

    /// Validates and builds an instance from id-based bound specs.
    ///
    /// Checks run in a fixed order so error messages are deterministic:
    /// 1. delta >= 1;
    /// 2. strong connectivity (unless waived: some generated instances are
    ///    intentionally one-way, and every *bounded* pair is still checked
    ///    for reachability below);
    /// 3. per bound: endpoints exist, from != to, d >= 1, the pair is
    ///    reachable, d is not below the static distance, and the pair is
    ///    not bounded twice.
    ///
    /// A bound with d >= (dist-1)*delta + 1 is dropped: every labeling
    /// admits a path that waits at most delta-1 time units at each of the
    /// dist-1 intermediate vertices, so such a bound cannot bind.  In
    /// particular every bound on a pair at distance 1 is dropped, and at
    /// delta = 1 every valid bound is dropped.
    static Instance make(DiGraph graph, int delta,
                         const std::vector<BoundSpec>& bound_specs,
                         bool require_strong_connectivity = true) {
        std::vector<std::tuple<int, int, int>> indexed;
        indexed.reserve(bound_specs.size());
        for (const BoundSpec& b : bound_specs) {
            if (!graph.has_vertex(b.from))
                throw ValidationError("bound references unknown vertex '" + b.from + "'");
            if (!graph.has_vertex(b.to))
                throw ValidationError("bound references unknown vertex '" + b.to + "'");
            indexed.emplace_back(graph.vertex(b.from), graph.vertex(b.to), b.d);
        }
        return make_indexed(std::move(graph), delta, indexed, require_strong_connectivity);
    }

    /// Same as make(), with bounds already given as vertex indices.
    static Instance make_indexed(DiGraph graph, int delta,
                                 const std::vector<std::tuple<int, int, int>>& bound_specs,
                                 bool require_strong_connectivity = true) {
        if (delta < 1)
            throw ValidationError("delta must be >= 1, got " + std::to_string(delta));
        if (require_strong_connectivity) {
            if (auto bad = unreachable_witness(graph))
                throw ValidationError("graph is not strongly connected: no directed path from '" +
                                      graph.id(bad->first) + "' to '" + graph.id(bad->second) + "'");
        }

        Instance inst;
        inst.delta = delta;
        inst.dist = static_distances_partial(graph);
        for (auto [u, v, d] : bound_specs) {
            assert(u >= 0 && u < graph.n() && v >= 0 && v < graph.n());
            const std::string pair_name = "(" + graph.id(u) + ", " + graph.id(v) + ")";
            if (u == v)
                throw ValidationError("bound on " + pair_name + ": bounds on a vertex and itself are not allowed");
            if (d == kInf) continue;  // an explicit "unbounded" entry carries no constraint
            if (d < 1)
                throw ValidationError("bound on " + pair_name + ": duration bound must be >= 1, got " +
                                      std::to_string(d));
            const int dh = inst.dist[u][v];
            if (dh == kInf)
                throw ValidationError("bound on " + pair_name + ": no directed path from '" +
                                      graph.id(u) + "' to '" + graph.id(v) + "'");
            if (d < dh)
                throw ValidationError("bound on " + pair_name + ": bound " + std::to_string(d) +
                                      " is below the static distance " + std::to_string(dh));
            if (inst.bounds.count({u, v}))
                throw ValidationError("duplicate bound on " + pair_name);
            if (d >= (dh - 1) * delta + 1) continue;  // unachievable to violate: drop
            inst.bounds[{u, v}] = d;
        }
        inst.graph = std::move(graph);
        return inst;
    }

    /// Upper bound for the ordered pair, kInf when unconstrained.
    int bound(int u, int v) const {
        auto it = bounds.find({u, v});
        return it == bounds.end() ? kInf : it->second;
    }

    int bound(const std::string& u, const std::string& v) const {
        return bound(graph.vertex(u), graph.vertex(v));
    }

    /// Static distance between two vertices (kInf when unreachable).
    int distance(int u, int v) const { return dist[u][v]; }

    /// Bounded pairs in lexicographic (from id, to id) order.
    std::vector<std::pair<int, int>> bounded_pairs() const {
        std::vector<std::pair<int, int>> pairs;
        pairs.reserve(bounds.size());
        for (const auto& [pair, d] : bounds) pairs.push_back(pair);
        std::sort(pairs.begin(), pairs.end(), [&](const auto& a, const auto& b) {
            if (graph.lex_rank(a.first) != graph.lex_rank(b.first))
                return graph.lex_rank(a.first) < graph.lex_rank(b.first);
            return graph.lex_rank(a.second) < graph.lex_rank(b.second);
        });
        return pairs;
    }
};

/// Slack of one bounded pair: how much the bound exceeds the static distance.
struct PairSlack {
    int from = 0;
    int to = 0;
    int bound = 0;
    int distance = 0;
    int slack = 0;  // bound - distance, >= 0 after validation
};

/// Slack summary of an instance.  k_min is the smallest per-pair slack and
/// kInf when no bound survived normalization (then the instance is trivially
/// feasible: nothing constrains the labeling).
struct SlackReport {
    int k_min = kInf;
    std::vector<PairSlack> per_pair;  // lexicographic (from id, to id) order
};

inline SlackReport slack(const Instance& inst) {
    SlackReport report;
    for (auto [u, v] : inst.bounded_pairs()) {
        PairSlack ps;
        ps.from = u;
        ps.to = v;
        ps.bound = inst.bound(u, v);
        ps.distance = inst.dist[u][v];
        ps.slack = ps.bound - ps.distance;
        assert(ps.slack >= 0);
        report.k_min = std::min(report.k_min, ps.slack);
        report.per_pair.push_back(ps);
    }
    return report;
}

}  // namespace tgr
