#pragma once

#include <algorithm>
#include <cassert>
#include <deque>
#include <map>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "tgr/distances.hpp"
#include "tgr/errors.hpp"
#include "tgr/graph.hpp"
#include "tgr/instance.hpp"
#include "tgr/labeling.hpp"
#include "tgr/search.hpp"
#include "tgr/temporal.hpp"
#include "tgr/topology.hpp"
#include "tgr/util.hpp"

namespace tgr {

namespace detail {

/// Union-find over items carrying a phase offset to their class root,
/// maintaining constraints of the form phase(b) - phase(a) == rel (mod
/// delta).  unite() reports false exactly when a constraint contradicts
/// the accumulated ones.
class OffsetUnionFind {
public:
    OffsetUnionFind(int n, int delta) : parent_(n), offset_(n, 0), delta_(delta) {
        for (int i = 0; i < n; ++i) parent_[i] = i;
    }

    /// Root of x's class; `off` receives phase(x) - phase(root) mod delta.
    int find(int x, int& off) {
        if (parent_[x] == x) {
            off = 0;
            return x;
        }
        int parent_off;
        int root = find(parent_[x], parent_off);
        parent_[x] = root;
        offset_[x] = floor_mod(offset_[x] + parent_off, delta_);
        off = offset_[x];
        return root;
    }

    /// Adds phase(b) == phase(a) + rel (mod delta); false on contradiction.
    bool unite(int a, int b, int rel) {
        int oa, ob;
        int ra = find(a, oa);
        int rb = find(b, ob);
        if (ra == rb) return floor_mod(ob - oa - rel, delta_) == 0;
        parent_[rb] = ra;
        offset_[rb] = floor_mod(oa + rel - ob, delta_);
        return true;
    }

private:
    std::vector<int> parent_;
    std::vector<int> offset_;
    int delta_;
};

/// Lex rank of an edge by (from id, to id); the anchoring order for
/// phase classes and the scan order for edge-indexed reports.
inline std::vector<int> edges_by_lex(const DiGraph& g) {
    std::vector<int> order(g.m());
    for (int e = 0; e < g.m(); ++e) order[e] = e;
    std::sort(order.begin(), order.end(), [&](int a, int b) {
        const Edge& ea = g.edge(a);
        const Edge& eb = g.edge(b);
        if (g.lex_rank(ea.from) != g.lex_rank(eb.from))
            return g.lex_rank(ea.from) < g.lex_rank(eb.from);
        return g.lex_rank(ea.to) < g.lex_rank(eb.to);
    });
    return order;
}

/// Wraps a constructed labeling in a Feasible certificate after checking
/// it.  Construction routes are backed by correctness arguments, so a
/// failed check is an internal defect.
inline Certificate certify_constructed(const Instance& inst, Labeling lab,
                                       const std::string& route) {
    if (!verify_labeling(inst, lab).ok)
        throw std::logic_error("internal error: constructed labeling fails verification (route " +
                               route + ")");
    Certificate cert;
    cert.status = Status::Feasible;
    cert.witness = std::move(lab);
    cert.exhausted = false;
    cert.route = route;
    return cert;
}

}  // namespace detail

/// Period 1 collapses every gap to zero: each edge is usable at every
/// time step, every bound normalizes away, and the all-zero labeling
/// realizes every instance.
inline Certificate solve_delta1(const Instance& inst) {
    if (inst.delta != 1)
        throw DomainError("this route is defined for delta = 1 only");
    assert(inst.bounds.empty());  // every bound drops at delta = 1
    return detail::certify_constructed(
        inst, Labeling{1, std::vector<int>(inst.graph.m(), 0)}, "delta1");
}

/// Labels a tree from a root so that paths run without waiting except at
/// their topmost vertex: an edge leaving a vertex at depth h away from the
/// root gets phase h, and the reverse edge entering it gets phase -h (mod
/// delta).  Descending chains phase h, h+1, ...; ascending chains -h,
/// -(h-1), ...; a path turning at depth a therefore waits exactly
/// (2a mod delta) there and nowhere else.
///
/// The graph's underlying shape must be a tree (any subset of directions
/// is fine).  Throws DomainError otherwise.
inline Labeling root_labeling(const DiGraph& g, int delta, int root) {
    TopologyClass topo = classify(g);
    if (!topo.tree) throw DomainError("root labeling is defined on trees only");
    if (delta < 1) throw DomainError("delta must be >= 1");

    // Undirected BFS depths from the root.
    std::vector<int> depth(g.n(), -1);
    std::deque<int> queue{root};
    depth[root] = 0;
    while (!queue.empty()) {
        int u = queue.front();
        queue.pop_front();
        for (int w : g.undirected_neighbors(u))
            if (depth[w] == -1) {
                depth[w] = depth[u] + 1;
                queue.push_back(w);
            }
    }

    std::vector<int> labels(g.m());
    for (int e = 0; e < g.m(); ++e) {
        const Edge& ed = g.edge(e);
        if (depth[ed.from] < depth[ed.to])
            labels[e] = floor_mod(depth[ed.from], delta);  // away from the root
        else
            labels[e] = floor_mod(-depth[ed.from], delta);  // toward the root
    }
    return Labeling{delta, std::move(labels)};
}

inline Labeling root_labeling(const DiGraph& g, int delta, const std::string& root_id) {
    return root_labeling(g, delta, g.vertex(root_id));
}

/// True when every instance with this shape, period and minimum slack is
/// feasible outright:
///   - delta 1 (nothing constrains anything),
///   - trees at delta 2 (two-coloring gives exact durations),
///   - trees whose slack absorbs the worst turnaround wait of a root
///     labeling: 2a mod delta is at most delta - 1 for odd delta and
///     delta - 2 for even delta.
/// k_min == kInf (no surviving bounds) passes every comparison.
inline bool always_feasible_region(int delta, int k_min, const TopologyClass& topo) {
    if (delta == 1) return true;
    if (!topo.tree) return false;
    if (delta == 2) return true;
    if (k_min == kInf) return true;
    if (delta % 2 == 1) return delta <= k_min + 1;
    return delta <= k_min + 2;
}

/// Constructs a labeling for instances inside the always-feasible region.
inline Certificate solve_always_feasible_tree(const Instance& inst) {
    TopologyClass topo = classify(inst.graph);
    if (!always_feasible_region(inst.delta, slack(inst).k_min, topo))
        throw DomainError("instance is outside the always-feasible region");
    if (inst.delta == 1) return solve_delta1(inst);
    int root = inst.graph.vertices_by_lex().front();
    return detail::certify_constructed(inst, root_labeling(inst.graph, inst.delta, root),
                                       "alg1");
}

/// Period-2 labeling for bipartite graphs: edges leaving side 0 get phase
/// 0, edges leaving side 1 get phase 1.  Every directed path alternates
/// sides, so it never waits and all durations equal static distances,
/// meeting every valid bound.  Throws DomainError unless delta == 2 and
/// the underlying graph is bipartite (trees included).
inline Certificate bipartite_labeling(const Instance& inst) {
    if (inst.delta != 2)
        throw DomainError("the bipartite route is defined for delta = 2 only");
    TopologyClass topo = classify(inst.graph);
    if (!topo.bipartite)
        throw DomainError("the bipartite route needs a bipartite underlying graph");
    std::vector<int> labels(inst.graph.m());
    for (int e = 0; e < inst.graph.m(); ++e)
        labels[e] = topo.side[inst.graph.edge(e).from];
    return detail::certify_constructed(inst, Labeling{2, std::move(labels)}, "bipartite");
}

/// True when every ordered pair at static distance >= 2 carries the bound
/// equal to that distance.  (Distance-1 pairs need no bound: a single hop
/// always has duration 1.)
inline bool all_pairs_exact(const Instance& inst) {
    const int n = inst.graph.n();
    for (int u = 0; u < n; ++u)
        for (int v = 0; v < n; ++v) {
            if (u == v || inst.dist[u][v] < 2) continue;
            if (inst.bound(u, v) != inst.dist[u][v]) return false;
        }
    return true;
}

/// Verdict of the all-pairs-exact tree criterion.
struct TreeExactReport {
    bool feasible = true;
    /// Lex-smallest branching pair violating 2 * dist == 0 (mod delta).
    std::optional<std::pair<int, int>> violating_pair;
};

/// Decides feasibility of an all-pairs-exact tree instance.
///
/// Exactness forces zero waiting along every path, and the only waits a
/// tree labeling can concentrate are turnarounds: a path turning at depth
/// a below its top waits 2a mod delta.  Between two branching vertices
/// (undirected degree >= 3) some pair of leaf-to-leaf paths turns at each,
/// forcing 2 * dist(u, v) == 0 (mod delta); conversely when all branching
/// pairs satisfy this, chaining phases away from one branching vertex
/// realizes the instance.  Throws DomainError unless the instance is a
/// bidirected tree with all pairs exact.
inline TreeExactReport exact_tree_decide(const Instance& inst) {
    TopologyClass topo = classify(inst.graph);
    if (!topo.tree || !topo.bidirected)
        throw DomainError("the exact-tree route is defined on bidirected trees only");
    if (!all_pairs_exact(inst))
        throw DomainError("the exact-tree route needs every pair bounded to its distance");
    TreeExactReport report;
    for (std::size_t i = 0; i < topo.branching.size() && report.feasible; ++i)
        for (std::size_t j = i + 1; j < topo.branching.size(); ++j) {
            int u = topo.branching[i], v = topo.branching[j];
            if (floor_mod(2 * inst.dist[u][v], inst.delta) != 0) {
                report.feasible = false;
                report.violating_pair = std::make_pair(u, v);
                break;
            }
        }
    return report;
}

/// Constructs a labeling for a feasible all-pairs-exact tree instance (or
/// reports infeasibility per exact_tree_decide).
///
/// Zero waiting everywhere means every directed two-edge subpath a->b->c
/// (a != c) chains: phase(b, c) == phase(a, b) + 1 (mod delta).  These
/// couplings are closed under union-find with offsets; anchoring each
/// class's lex-smallest edge at phase 0 yields a concrete labeling.  When
/// the branching criterion holds the couplings are consistent, so a
/// contradiction here would be an internal defect.
inline Certificate exact_tree_construct(const Instance& inst) {
    TreeExactReport decided = exact_tree_decide(inst);
    if (!decided.feasible) {
        Certificate cert;
        cert.status = Status::Infeasible;
        cert.exhausted = true;
        cert.route = "exact_tree";
        auto [u, v] = *decided.violating_pair;
        cert.reason = "branching vertices '" + inst.graph.id(u) + "' and '" + inst.graph.id(v) +
                      "' lie at distance " + std::to_string(inst.dist[u][v]) +
                      ", whose double is not divisible by the period";
        return cert;
    }

    const DiGraph& g = inst.graph;
    detail::OffsetUnionFind uf(g.m(), inst.delta);
    for (int b = 0; b < g.n(); ++b)
        for (int in_e : g.in(b))
            for (int out_e : g.out(b)) {
                if (g.edge(in_e).from == g.edge(out_e).to) continue;
                if (!uf.unite(in_e, out_e, 1))
                    throw std::logic_error(
                        "internal error: exact-tree couplings conflict after the criterion passed");
            }

    // Anchor each coupling class at its lex-smallest edge.
    std::vector<int> labels(g.m(), -1);
    std::map<int, int> anchor_offset;  // class root -> offset of its anchor edge
    for (int e : detail::edges_by_lex(g)) {
        int off;
        int root = uf.find(e, off);
        auto [it, fresh] = anchor_offset.emplace(root, off);
        labels[e] = floor_mod(off - it->second, inst.delta);
    }
    return detail::certify_constructed(inst, Labeling{inst.delta, std::move(labels)},
                                       "exact_tree");
}

/// A maximal group of zero-slack bounds whose witness paths share directed
/// edges, together with the structure the coupling argument runs on.
struct ZeroSlackComponent {
    std::vector<std::pair<int, int>> pairs;  // zero-slack pairs, lex order
    std::vector<int> edges;                  // directed edge indices, lex order
    std::vector<int> vertices;               // covered vertices, lex order
    std::vector<int> branching;  // vertices with >= 2 in, >= 2 out and >= 3
                                 // distinct neighbors within the component
};

/// Groups the zero-slack bounds of a tree instance by overlap of their
/// unique paths.  Throws DomainError when the underlying graph is not a
/// tree (paths would not be unique).
inline std::vector<ZeroSlackComponent> zero_slack_components(const Instance& inst) {
    TopologyClass topo = classify(inst.graph);
    if (!topo.tree)
        throw DomainError("zero-slack components are defined on trees only");
    const DiGraph& g = inst.graph;

    std::vector<std::pair<int, int>> pairs;
    std::vector<std::vector<int>> path_edges;
    for (auto [u, v] : inst.bounded_pairs()) {
        if (inst.bound(u, v) != inst.dist[u][v]) continue;
        std::vector<int> path = shortest_path_vertices(g, u, v);
        assert(!path.empty());
        std::vector<int> edges;
        for (std::size_t i = 1; i < path.size(); ++i) {
            int e = g.edge_index(path[i - 1], path[i]);
            assert(e >= 0);
            edges.push_back(e);
        }
        pairs.emplace_back(u, v);
        path_edges.push_back(std::move(edges));
    }

    // Merge pairs sharing a directed edge.
    detail::OffsetUnionFind uf(static_cast<int>(pairs.size()), 1);
    std::map<int, int> edge_owner;
    for (int p = 0; p < static_cast<int>(pairs.size()); ++p)
        for (int e : path_edges[p]) {
            auto [it, fresh] = edge_owner.emplace(e, p);
            if (!fresh) uf.unite(it->second, p, 0);
        }

    std::map<int, int> root_to_component;
    std::vector<ZeroSlackComponent> components;
    std::vector<std::set<int>> edge_sets;
    for (int p = 0; p < static_cast<int>(pairs.size()); ++p) {
        int off;
        int root = uf.find(p, off);
        auto [it, fresh] = root_to_component.emplace(root, static_cast<int>(components.size()));
        if (fresh) {
            components.emplace_back();
            edge_sets.emplace_back();
        }
        ZeroSlackComponent& comp = components[it->second];
        comp.pairs.push_back(pairs[p]);  // bounded_pairs order is lex already
        for (int e : path_edges[p]) edge_sets[it->second].insert(e);
    }

    auto lex_vertex_sort = [&](std::vector<int>& xs) {
        std::sort(xs.begin(), xs.end(),
                  [&](int a, int b) { return g.lex_rank(a) < g.lex_rank(b); });
    };
    for (std::size_t c = 0; c < components.size(); ++c) {
        ZeroSlackComponent& comp = components[c];
        comp.edges.assign(edge_sets[c].begin(), edge_sets[c].end());
        std::sort(comp.edges.begin(), comp.edges.end(), [&](int a, int b) {
            const Edge& ea = g.edge(a);
            const Edge& eb = g.edge(b);
            if (g.lex_rank(ea.from) != g.lex_rank(eb.from))
                return g.lex_rank(ea.from) < g.lex_rank(eb.from);
            return g.lex_rank(ea.to) < g.lex_rank(eb.to);
        });
        std::map<int, std::set<int>> out_nb, in_nb, all_nb;
        for (int e : comp.edges) {
            out_nb[g.edge(e).from].insert(g.edge(e).to);
            in_nb[g.edge(e).to].insert(g.edge(e).from);
            all_nb[g.edge(e).from].insert(g.edge(e).to);
            all_nb[g.edge(e).to].insert(g.edge(e).from);
        }
        for (const auto& [w, nb] : all_nb) {
            comp.vertices.push_back(w);
            if (out_nb[w].size() >= 2 && in_nb[w].size() >= 2 && nb.size() >= 3)
                comp.branching.push_back(w);
        }
        lex_vertex_sort(comp.vertices);
        lex_vertex_sort(comp.branching);
    }
    return components;
}

/// Verdict of the tree necessary condition.
struct NecessityVerdict {
    bool pass = true;
    std::string reason;  // "branching_pair_violation" or "coupling_conflict"
    std::optional<std::pair<int, int>> witness_pair;
};

/// Sound necessary condition for tree instances: each zero-slack bound
/// forces its unique path to run without waiting, coupling consecutive
/// edges by phase(next) == phase(prev) + 1 (mod delta).  A contradiction
/// among the couplings of one component proves infeasibility.
///
/// When a contradiction surfaces and the component contains a pair of
/// branching vertices u, v with 2 * dist(u, v) != 0 (mod delta), the
/// verdict names that pair; structural conflicts without such a pair are
/// reported as plain coupling conflicts.  Passing says nothing about
/// feasibility (the condition is necessary, not sufficient).
inline NecessityVerdict necessary_condition(const Instance& inst) {
    std::vector<ZeroSlackComponent> components = zero_slack_components(inst);
    const DiGraph& g = inst.graph;
    NecessityVerdict verdict;
    for (const ZeroSlackComponent& comp : components) {
        // Re-derive the couplings of this component's pairs.
        std::map<int, int> local;  // edge index -> dense id
        for (int e : comp.edges) local.emplace(e, static_cast<int>(local.size()));
        detail::OffsetUnionFind uf(static_cast<int>(local.size()), inst.delta);
        bool conflict = false;
        for (auto [u, v] : comp.pairs) {
            std::vector<int> path = shortest_path_vertices(g, u, v);
            for (std::size_t i = 2; i < path.size() && !conflict; ++i) {
                int prev = g.edge_index(path[i - 2], path[i - 1]);
                int next = g.edge_index(path[i - 1], path[i]);
                conflict = !uf.unite(local.at(prev), local.at(next), 1);
            }
            if (conflict) break;
        }
        if (!conflict) continue;
        verdict.pass = false;
        verdict.reason = "coupling_conflict";
        for (std::size_t i = 0; i < comp.branching.size() && !verdict.witness_pair; ++i)
            for (std::size_t j = i + 1; j < comp.branching.size(); ++j) {
                int u = comp.branching[i], v = comp.branching[j];
                if (floor_mod(2 * inst.dist[u][v], inst.delta) != 0) {
                    verdict.reason = "branching_pair_violation";
                    verdict.witness_pair = std::make_pair(u, v);
                    break;
                }
            }
        return verdict;
    }
    return verdict;
}

/// Period-2 solver for odd-unicyclic instances whose surviving bounds are
/// all exact.
///
/// At period 2 a zero-slack bound forces alternating phases along its
/// unique shortest path (unique because the two routes around an odd cycle
/// differ in parity).  Put the forced disequalities into a conflict graph
/// over directed edges: the instance is feasible iff that graph is
/// bipartite, and a two-coloring read off a BFS (component roots at the
/// lex-smallest constrained edge, phase 0) is a witness.  Unconstrained
/// edges get phase 0.  Throws DomainError unless delta == 2, the graph is
/// odd-unicyclic and every surviving bound is exact.
inline Certificate odd_cycle_delta2_solve(const Instance& inst) {
    if (inst.delta != 2)
        throw DomainError("the odd-cycle route is defined for delta = 2 only");
    TopologyClass topo = classify(inst.graph);
    if (!topo.unicyclic || topo.cycle.size() % 2 == 0)
        throw DomainError("the odd-cycle route needs a unicyclic graph with an odd cycle");
    for (auto [u, v] : inst.bounded_pairs())
        if (inst.bound(u, v) != inst.dist[u][v])
            throw DomainError("the odd-cycle route needs every surviving bound to be exact");

    const DiGraph& g = inst.graph;
    std::vector<std::set<int>> adjacent(g.m());  // "must differ" between edges
    for (auto [u, v] : inst.bounded_pairs()) {
        std::vector<int> path = shortest_path_vertices(g, u, v);
        assert(static_cast<int>(path.size()) == inst.dist[u][v] + 1);
        for (std::size_t i = 2; i < path.size(); ++i) {
            int prev = g.edge_index(path[i - 2], path[i - 1]);
            int next = g.edge_index(path[i - 1], path[i]);
            assert(prev >= 0 && next >= 0);
            adjacent[prev].insert(next);
            adjacent[next].insert(prev);
        }
    }

    std::vector<int> color(g.m(), -1);
    for (int root : detail::edges_by_lex(g)) {
        if (color[root] != -1) continue;
        if (adjacent[root].empty()) {
            color[root] = 0;  // unconstrained edge
            continue;
        }
        color[root] = 0;
        std::deque<int> queue{root};
        while (!queue.empty()) {
            int e = queue.front();
            queue.pop_front();
            for (int f : adjacent[e]) {
                if (color[f] == -1) {
                    color[f] = 1 - color[e];
                    queue.push_back(f);
                } else if (color[f] == color[e]) {
                    Certificate cert;
                    cert.status = Status::Infeasible;
                    cert.exhausted = true;
                    cert.route = "odd_cycle";
                    cert.reason =
                        "the forced phase alternations close an odd cycle: edges (" +
                        g.id(g.edge(e).from) + ", " + g.id(g.edge(e).to) + ") and (" +
                        g.id(g.edge(f).from) + ", " + g.id(g.edge(f).to) +
                        ") must both equal and differ";
                    return cert;
                }
            }
        }
    }
    return detail::certify_constructed(inst, Labeling{2, std::move(color)}, "odd_cycle");
}

/// Routes an instance to the cheapest solver whose preconditions hold,
/// falling back to exhaustive search.  The certificate's `route` names the
/// solver that produced it.
inline Certificate auto_solve(const Instance& inst, SearchConfig cfg = {}) {
    if (inst.delta == 1) return solve_delta1(inst);
    TopologyClass topo = classify(inst.graph);
    int k_min = slack(inst).k_min;
    if (always_feasible_region(inst.delta, k_min, topo))
        return solve_always_feasible_tree(inst);
    if (inst.delta == 2 && topo.bipartite) return bipartite_labeling(inst);
    if (topo.tree && topo.bidirected && all_pairs_exact(inst))
        return exact_tree_construct(inst);
    if (inst.delta == 2 && topo.unicyclic && topo.cycle.size() % 2 == 1) {
        bool all_exact_bounds = true;
        for (auto [u, v] : inst.bounded_pairs())
            all_exact_bounds = all_exact_bounds && inst.bound(u, v) == inst.dist[u][v];
        if (all_exact_bounds) return odd_cycle_delta2_solve(inst);
    }
    if (topo.tree) {
        NecessityVerdict verdict = necessary_condition(inst);
        if (!verdict.pass) {
            Certificate cert;
            cert.status = Status::Infeasible;
            cert.exhausted = true;
            cert.route = "necessary_fail";
            cert.reason = verdict.reason;
            if (verdict.witness_pair)
                cert.reason += ": branching vertices '" + inst.graph.id(verdict.witness_pair->first) +
                               "' and '" + inst.graph.id(verdict.witness_pair->second) + "'";
            return cert;
        }
    }
    return solve_exact(inst, cfg);
}

}  // namespace tgr
