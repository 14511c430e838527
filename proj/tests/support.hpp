#pragma once

// Shared oracles and generators for the test suite.  Everything here
// recomputes expected values from first principles (definition-level brute
// force over labelings, colorings, truth tables), sharing no machinery with
// the solver paths under test beyond the reference duration oracle.

#include <algorithm>
#include <array>
#include <cstdint>
#include <map>
#include <random>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include <tgr/cnf.hpp>
#include <tgr/distances.hpp>
#include <tgr/graph.hpp>
#include <tgr/instance.hpp>
#include <tgr/labeling.hpp>
#include <tgr/oracle.hpp>
#include <tgr/ttr.hpp>
#include <tgr/util.hpp>

namespace support {

/// Builds a graph from id lists; keeps call sites compact.
inline tgr::DiGraph graph_of(const std::vector<std::string>& ids,
                             const std::vector<std::pair<std::string, std::string>>& edges) {
    tgr::DiGraph g;
    for (const std::string& id : ids) g.add_vertex(id);
    for (const auto& [a, b] : edges) g.add_edge(a, b);
    return g;
}

/// Adds both directions of every listed undirected edge.
inline tgr::DiGraph bidirected_of(const std::vector<std::string>& ids,
                                  const std::vector<std::pair<std::string, std::string>>& edges) {
    tgr::DiGraph g;
    for (const std::string& id : ids) g.add_vertex(id);
    for (const auto& [a, b] : edges) {
        g.add_edge(a, b);
        g.add_edge(b, a);
    }
    return g;
}

/// Advances an odometer over digit vectors base `base`; false after the last.
inline bool next_vector(std::vector<int>& digits, int base) {
    std::size_t i = 0;
    while (i < digits.size() && ++digits[i] == base) digits[i++] = 0;
    return i < digits.size();
}

/// True when the labeling meets every bound, judged by the reference oracle.
inline bool oracle_satisfies(const tgr::Instance& inst, const tgr::Labeling& lab) {
    for (auto [u, v] : inst.bounded_pairs())
        if (tgr::fastest_duration_oracle(inst.graph, lab, u, v) > inst.bound(u, v))
            return false;
    return true;
}

/// All feasible labelings by exhaustive delta^m enumeration (sorted by label
/// vector, the solver's enumeration order).  `cap` > 0 stops early.
inline std::vector<tgr::Labeling> brute_solutions(const tgr::Instance& inst,
                                                  std::size_t cap = 0) {
    std::vector<tgr::Labeling> out;
    std::vector<int> labels(inst.graph.m(), 0);
    do {
        tgr::Labeling lab{inst.delta, labels};
        if (oracle_satisfies(inst, lab)) {
            out.push_back(lab);
            if (cap && out.size() >= cap) break;
        }
    } while (next_vector(labels, inst.delta));
    std::sort(out.begin(), out.end(),
              [](const tgr::Labeling& a, const tgr::Labeling& b) { return a.labels < b.labels; });
    return out;
}

inline bool brute_feasible(const tgr::Instance& inst) {
    return !brute_solutions(inst, 1).empty();
}

/// Feasibility of an undirected instance by brute force over the per-edge
/// phase vectors, checked with the reference oracle on the bidirected graph.
inline bool ttr_brute_feasible(const tgr::TtrInstance& ttr) {
    tgr::DiGraph both = tgr::bidirect(ttr.skeleton);
    std::vector<int> phase(ttr.skeleton.m(), 0);
    do {
        tgr::Labeling lab = tgr::mirror_labels(ttr, both, phase);
        bool ok = true;
        for (auto [u, v] : ttr.bounded_pairs()) {
            int bu = both.vertex(ttr.skeleton.id(u));
            int bv = both.vertex(ttr.skeleton.id(v));
            if (tgr::fastest_duration_oracle(both, lab, bu, bv) > ttr.bound(u, v)) {
                ok = false;
                break;
            }
        }
        if (ok) return true;
    } while (next_vector(phase, ttr.delta));
    return false;
}

/// Proper-colorability of the underlying undirected graph with `colors`
/// colors, by exhaustive assignment.
inline bool colorable(const tgr::DiGraph& g, int colors) {
    std::vector<int> color(g.n(), 0);
    do {
        bool ok = true;
        for (const tgr::Edge& e : g.edges())
            if (color[e.from] == color[e.to]) {
                ok = false;
                break;
            }
        if (ok) return true;
    } while (next_vector(color, colors));
    return false;
}

/// Not-all-equal satisfiability by truth table.
inline bool nae_satisfiable(const tgr::MonotoneCnf& cnf) {
    const int n = static_cast<int>(cnf.variables.size());
    for (int mask = 0; mask < (1 << n); ++mask) {
        std::vector<int> assignment(n);
        for (int i = 0; i < n; ++i) assignment[i] = (mask >> i) & 1;
        if (cnf.nae_satisfied(assignment)) return true;
    }
    return false;
}

inline std::string vid(int i) { return "v" + std::to_string(i); }

/// Random digraph on n vertices with m distinct edges (no self-loops).
/// Not necessarily connected; suitable for engine-vs-oracle comparisons.
inline tgr::DiGraph random_digraph(std::mt19937& rng, int n, int m) {
    std::vector<std::pair<int, int>> pool;
    for (int u = 0; u < n; ++u)
        for (int v = 0; v < n; ++v)
            if (u != v) pool.emplace_back(u, v);
    std::shuffle(pool.begin(), pool.end(), rng);
    m = std::min<int>(m, static_cast<int>(pool.size()));
    tgr::DiGraph g;
    for (int v = 0; v < n; ++v) g.add_vertex(vid(v));
    for (int e = 0; e < m; ++e) g.add_edge(pool[e].first, pool[e].second);
    return g;
}

/// Random strongly connected digraph: a directed Hamiltonian cycle in random
/// vertex order plus `extra` further random edges.
inline tgr::DiGraph random_strong_digraph(std::mt19937& rng, int n, int extra) {
    std::vector<int> order(n);
    for (int v = 0; v < n; ++v) order[v] = v;
    std::shuffle(order.begin(), order.end(), rng);
    tgr::DiGraph g;
    for (int v = 0; v < n; ++v) g.add_vertex(vid(v));
    for (int i = 0; i < n; ++i) g.add_edge(order[i], order[(i + 1) % n]);
    std::vector<std::pair<int, int>> pool;
    for (int u = 0; u < n; ++u)
        for (int v = 0; v < n; ++v)
            if (u != v && !g.has_edge(u, v)) pool.emplace_back(u, v);
    std::shuffle(pool.begin(), pool.end(), rng);
    extra = std::min<int>(extra, static_cast<int>(pool.size()));
    for (int e = 0; e < extra; ++e) g.add_edge(pool[e].first, pool[e].second);
    return g;
}

inline tgr::Labeling random_labeling(std::mt19937& rng, const tgr::DiGraph& g, int delta) {
    std::uniform_int_distribution<int> pick(0, delta - 1);
    std::vector<int> labels(g.m());
    for (int& t : labels) t = pick(rng);
    return tgr::Labeling{delta, std::move(labels)};
}

/// Random labeled tree: vertex i attaches to a uniform earlier vertex.
/// Returns the undirected edge list.
inline std::vector<std::pair<int, int>> random_tree_edges(std::mt19937& rng, int n) {
    std::vector<std::pair<int, int>> edges;
    for (int v = 1; v < n; ++v) {
        std::uniform_int_distribution<int> pick(0, v - 1);
        edges.emplace_back(pick(rng), v);
    }
    return edges;
}

inline tgr::DiGraph bidirected_tree_graph(const std::vector<std::pair<int, int>>& edges, int n) {
    tgr::DiGraph g;
    for (int v = 0; v < n; ++v) g.add_vertex(vid(v));
    for (auto [a, b] : edges) {
        g.add_edge(a, b);
        g.add_edge(b, a);
    }
    return g;
}

inline tgr::DiGraph random_bidirected_tree(std::mt19937& rng, int n) {
    return bidirected_tree_graph(random_tree_edges(rng, n), n);
}

/// Random instance on a given strongly connected graph: `count` bounds on
/// distinct ordered pairs at static distance >= 2, each drawn from the
/// surviving range [dist, (dist-1)*delta].
inline tgr::Instance random_instance(std::mt19937& rng, tgr::DiGraph g, int delta, int count) {
    std::vector<std::vector<int>> dist = tgr::static_distances(g);
    std::vector<std::pair<int, int>> eligible;
    for (int u = 0; u < g.n(); ++u)
        for (int v = 0; v < g.n(); ++v)
            if (u != v && dist[u][v] >= 2) eligible.emplace_back(u, v);
    std::shuffle(eligible.begin(), eligible.end(), rng);
    count = std::min<int>(count, static_cast<int>(eligible.size()));
    std::vector<std::tuple<int, int, int>> bounds;
    for (int i = 0; i < count; ++i) {
        auto [u, v] = eligible[i];
        std::uniform_int_distribution<int> pick(dist[u][v], (dist[u][v] - 1) * delta);
        bounds.emplace_back(u, v, pick(rng));
    }
    return tgr::Instance::make_indexed(std::move(g), delta, bounds);
}

/// All-pairs-exact instance over a bidirected graph: every ordered pair at
/// distance >= 2 bounded to exactly its static distance.
inline tgr::Instance all_pairs_exact_instance(tgr::DiGraph g, int delta) {
    std::vector<std::vector<int>> dist = tgr::static_distances(g);
    std::vector<std::tuple<int, int, int>> bounds;
    for (int u = 0; u < g.n(); ++u)
        for (int v = 0; v < g.n(); ++v)
            if (u != v && dist[u][v] >= 2) bounds.emplace_back(u, v, dist[u][v]);
    return tgr::Instance::make_indexed(std::move(g), delta, bounds);
}

namespace detail {

/// Canonical encoding of the tree rooted at `root` (AHU: sorted children).
inline std::string ahu_encode(const std::vector<std::vector<int>>& adj, int root, int parent) {
    std::vector<std::string> child_codes;
    for (int w : adj[root])
        if (w != parent) child_codes.push_back(ahu_encode(adj, w, root));
    std::sort(child_codes.begin(), child_codes.end());
    std::string code = "(";
    for (const std::string& c : child_codes) code += c;
    code += ")";
    return code;
}

/// Canonical form of a free tree: AHU encoding rooted at its center(s).
inline std::string free_tree_code(const std::vector<std::pair<int, int>>& edges, int n) {
    if (n == 1) return "()";
    std::vector<std::vector<int>> adj(n);
    for (auto [a, b] : edges) {
        adj[a].push_back(b);
        adj[b].push_back(a);
    }
    // Peel leaves layer by layer; the last one or two vertices are centers.
    std::vector<int> degree(n);
    for (int v = 0; v < n; ++v) degree[v] = static_cast<int>(adj[v].size());
    std::vector<int> layer;
    for (int v = 0; v < n; ++v)
        if (degree[v] <= 1) layer.push_back(v);
    int remaining = n;
    std::vector<int> centers = layer;
    while (remaining > 2) {
        remaining -= static_cast<int>(layer.size());
        std::vector<int> next;
        for (int v : layer)
            for (int w : adj[v])
                if (--degree[w] == 1) next.push_back(w);
        layer = next;
        centers = layer;
    }
    std::string best;
    for (int c : centers) {
        std::string code = ahu_encode(adj, c, -1);
        if (best.empty() || code < best) best = code;
    }
    return best;
}

/// Decodes a Pruefer sequence over {0..n-1} into a labeled tree edge list.
inline std::vector<std::pair<int, int>> pruefer_decode(const std::vector<int>& seq, int n) {
    std::vector<int> degree(n, 1);
    for (int s : seq) ++degree[s];
    std::set<int> leaves;
    for (int v = 0; v < n; ++v)
        if (degree[v] == 1) leaves.insert(v);
    std::vector<std::pair<int, int>> edges;
    for (int s : seq) {
        int leaf = *leaves.begin();
        leaves.erase(leaves.begin());
        edges.emplace_back(leaf, s);
        if (--degree[s] == 1) leaves.insert(s);
    }
    int a = *leaves.begin();
    int b = *std::next(leaves.begin());
    edges.emplace_back(a, b);
    return edges;
}

}  // namespace detail

/// All free (unlabeled) trees on exactly n vertices, one labeled
/// representative each, as undirected edge lists.  Enumerated by decoding
/// every Pruefer sequence and deduplicating canonical forms.
inline std::vector<std::vector<std::pair<int, int>>> all_free_trees(int n) {
    if (n == 1) return {{}};
    if (n == 2) return {{{0, 1}}};
    std::vector<std::vector<std::pair<int, int>>> out;
    std::set<std::string> seen;
    std::vector<int> seq(n - 2, 0);
    do {
        std::vector<std::pair<int, int>> edges = detail::pruefer_decode(seq, n);
        if (seen.insert(detail::free_tree_code(edges, n)).second) out.push_back(edges);
    } while (next_vector(seq, n));
    return out;
}

/// All simple undirected graphs on exactly n vertices up to isomorphism
/// (canonical representative per class), as graphs with one orientation per
/// edge.  Intended for n <= 6.
inline std::vector<tgr::DiGraph> all_graphs_up_to_iso(int n) {
    std::vector<std::pair<int, int>> pairs;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) pairs.emplace_back(i, j);
    const int bits = static_cast<int>(pairs.size());
    std::map<std::pair<int, int>, int> pair_index;
    for (int b = 0; b < bits; ++b) pair_index[pairs[b]] = b;

    // Per permutation, where each edge bit lands.
    std::vector<int> perm(n);
    for (int v = 0; v < n; ++v) perm[v] = v;
    std::vector<std::vector<int>> bit_maps;
    do {
        std::vector<int> bm(bits);
        for (int b = 0; b < bits; ++b) {
            int i = perm[pairs[b].first], j = perm[pairs[b].second];
            bm[b] = pair_index.at({std::min(i, j), std::max(i, j)});
        }
        bit_maps.push_back(bm);
    } while (std::next_permutation(perm.begin(), perm.end()));

    std::vector<tgr::DiGraph> out;
    for (std::uint32_t mask = 0; mask < (1u << bits); ++mask) {
        bool canonical = true;
        for (const std::vector<int>& bm : bit_maps) {
            std::uint32_t image = 0;
            for (int b = 0; b < bits; ++b)
                if (mask & (1u << b)) image |= 1u << bm[b];
            if (image < mask) {
                canonical = false;
                break;
            }
        }
        if (!canonical) continue;
        tgr::DiGraph g;
        for (int v = 0; v < n; ++v) g.add_vertex(vid(v));
        for (int b = 0; b < bits; ++b)
            if (mask & (1u << b)) g.add_edge(pairs[b].first, pairs[b].second);
        out.push_back(std::move(g));
    }
    return out;
}

}  // namespace support
