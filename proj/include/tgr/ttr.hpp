#pragma once

#include <cassert>
#include <map>
#include <string>
#include <tuple>
#include <utility>
#include <vector>

#include "tgr/distances.hpp"
#include "tgr/errors.hpp"
#include "tgr/graph.hpp"
#include "tgr/instance.hpp"
#include "tgr/labeling.hpp"
#include "tgr/util.hpp"

namespace tgr {

/// Returns the digraph with both directions of every skeleton edge.
/// The skeleton must hold each undirected edge exactly once.
inline DiGraph bidirect(const DiGraph& skeleton) {
    DiGraph g;
    for (const std::string& id : skeleton.ids()) g.add_vertex(id);
    for (const Edge& e : skeleton.edges()) {
        g.add_edge(e.from, e.to);
        g.add_edge(e.to, e.from);
    }
    return g;
}

/// An undirected realization-problem instance: one phase per undirected
/// edge, usable in both directions at that phase.  Bounds stay ordered
/// (durations need not be symmetric: waiting differs by direction).
///
/// The skeleton stores each undirected edge once, in input orientation;
/// that orientation also fixes which way gadgets are spliced in when the
/// instance is lifted to a directed one.
class TtrInstance {
public:
    DiGraph skeleton;
    int delta = 1;
    std::map<std::pair<int, int>, int> bounds;  // (from, to) skeleton indices
    std::vector<std::vector<int>> dist;         // undirected hop distances

    /// Validates and builds an undirected instance.  The same checks and
    /// bound normalization as for directed instances apply, with distances
    /// measured in the underlying undirected graph; connectivity replaces
    /// strong connectivity.
    static TtrInstance make(DiGraph skeleton, int delta,
                            const std::vector<BoundSpec>& bound_specs) {
        if (delta < 1)
            throw ValidationError("delta must be >= 1, got " + std::to_string(delta));
        for (const Edge& e : skeleton.edges())
            if (skeleton.has_edge(e.to, e.from))
                throw ValidationError("undirected edge {" + skeleton.id(e.from) + ", " +
                                      skeleton.id(e.to) + "} is listed in both orientations");

        TtrInstance ttr;
        ttr.delta = delta;
        DiGraph both = bidirect(skeleton);
        if (auto bad = unreachable_witness(both))
            throw ValidationError("graph is not connected: no path from '" +
                                  both.id(bad->first) + "' to '" + both.id(bad->second) + "'");
        ttr.dist = static_distances(both);

        for (const BoundSpec& b : bound_specs) {
            if (!skeleton.has_vertex(b.from))
                throw ValidationError("bound references unknown vertex '" + b.from + "'");
            if (!skeleton.has_vertex(b.to))
                throw ValidationError("bound references unknown vertex '" + b.to + "'");
            const int u = skeleton.vertex(b.from), v = skeleton.vertex(b.to);
            const std::string pair_name = "(" + b.from + ", " + b.to + ")";
            if (u == v)
                throw ValidationError("bound on " + pair_name + ": bounds on a vertex and itself are not allowed");
            if (b.d == kInf) continue;
            if (b.d < 1)
                throw ValidationError("bound on " + pair_name + ": duration bound must be >= 1, got " +
                                      std::to_string(b.d));
            const int dh = ttr.dist[u][v];
            if (b.d < dh)
                throw ValidationError("bound on " + pair_name + ": bound " + std::to_string(b.d) +
                                      " is below the static distance " + std::to_string(dh));
            if (ttr.bounds.count({u, v}))
                throw ValidationError("duplicate bound on " + pair_name);
            if (b.d >= (dh - 1) * delta + 1) continue;  // unachievable to violate: drop
            ttr.bounds[{u, v}] = b.d;
        }
        ttr.skeleton = std::move(skeleton);
        return ttr;
    }

    /// Upper bound for the ordered pair, kInf when unconstrained.
    int bound(int u, int v) const {
        auto it = bounds.find({u, v});
        return it == bounds.end() ? kInf : it->second;
    }

    /// Bounded pairs in lexicographic (from id, to id) order.
    std::vector<std::pair<int, int>> bounded_pairs() const {
        std::vector<std::pair<int, int>> pairs;
        pairs.reserve(bounds.size());
        for (const auto& [pair, d] : bounds) pairs.push_back(pair);
        std::sort(pairs.begin(), pairs.end(), [&](const auto& a, const auto& b) {
            if (skeleton.lex_rank(a.first) != skeleton.lex_rank(b.first))
                return skeleton.lex_rank(a.first) < skeleton.lex_rank(b.first);
            return skeleton.lex_rank(a.second) < skeleton.lex_rank(b.second);
        });
        return pairs;
    }
};

/// Slack summary of an undirected instance (same semantics as slack()).
inline SlackReport ttr_slack(const TtrInstance& ttr) {
    SlackReport report;
    for (auto [u, v] : ttr.bounded_pairs()) {
        PairSlack ps;
        ps.from = u;
        ps.to = v;
        ps.bound = ttr.bound(u, v);
        ps.distance = ttr.dist[u][v];
        ps.slack = ps.bound - ps.distance;
        assert(ps.slack >= 0);
        report.k_min = std::min(report.k_min, ps.slack);
        report.per_pair.push_back(ps);
    }
    return report;
}

/// Lifts a per-skeleton-edge phase assignment to a labeling of the
/// bidirected graph (both directions get the edge's phase).  `both` must be
/// bidirect(skeleton of ttr).
inline Labeling mirror_labels(const TtrInstance& ttr, const DiGraph& both,
                              const std::vector<int>& edge_phase) {
    assert(static_cast<int>(edge_phase.size()) == ttr.skeleton.m());
    std::vector<int> labels(both.m(), -1);
    for (int e = 0; e < ttr.skeleton.m(); ++e) {
        const Edge& ed = ttr.skeleton.edge(e);
        const std::string& a = ttr.skeleton.id(ed.from);
        const std::string& b = ttr.skeleton.id(ed.to);
        labels[both.edge_index(both.vertex(a), both.vertex(b))] = edge_phase[e];
        labels[both.edge_index(both.vertex(b), both.vertex(a))] = edge_phase[e];
    }
    return make_labeling(both, ttr.delta, std::move(labels));
}

}  // namespace tgr
