#pragma once

#include <algorithm>
#include <cassert>
#include <deque>
#include <vector>

#include "tgr/graph.hpp"

namespace tgr {

/// Shape report for the underlying undirected graph of a digraph, plus the
/// witnesses solver routing needs (bipartition sides, the unique cycle of a
/// unicyclic graph, an odd closed walk when not bipartite).  All vertex
/// lists are deterministic: traversals proceed in lexicographic id order.
struct TopologyClass {
    bool connected = false;
    bool bidirected = false;  // every directed edge has its reverse
    int undirected_edges = 0;

    bool tree = false;  // connected with n - 1 undirected edges
    bool path = false;  // tree with maximum undirected degree <= 2
    bool star = false;  // tree with at most one vertex of undirected degree >= 2

    bool unicyclic = false;        // connected with exactly n undirected edges
    std::vector<int> cycle;        // the unique cycle, in walk order from the
                                   // lex-smallest cycle vertex (empty otherwise)

    bool bipartite = false;
    std::vector<int> side;             // per-vertex 0/1; lex-smallest vertex of
                                       // each component sits on side 0
    std::vector<int> odd_closed_walk;  // vertices of an odd cycle when not bipartite

    std::vector<int> branching;  // vertices of undirected degree >= 3, lex order
};

/// Classifies the underlying undirected graph of g.
inline TopologyClass classify(const DiGraph& g) {
    TopologyClass tc;
    const int n = g.n();

    // Undirected adjacency with lex-ordered neighbor lists.
    std::vector<std::vector<int>> adj(n);
    for (int v = 0; v < n; ++v) {
        adj[v] = g.undirected_neighbors(v);
        std::sort(adj[v].begin(), adj[v].end(),
                  [&](int a, int b) { return g.lex_rank(a) < g.lex_rank(b); });
        tc.undirected_edges += static_cast<int>(adj[v].size());
    }
    tc.undirected_edges /= 2;

    tc.bidirected = true;
    for (const Edge& e : g.edges())
        if (!g.has_edge(e.to, e.from)) {
            tc.bidirected = false;
            break;
        }

    // Connectivity from the lex-smallest vertex.
    std::vector<bool> seen(n, false);
    if (n > 0) {
        std::deque<int> queue{g.vertices_by_lex().front()};
        seen[queue.front()] = true;
        while (!queue.empty()) {
            int u = queue.front();
            queue.pop_front();
            for (int w : adj[u])
                if (!seen[w]) {
                    seen[w] = true;
                    queue.push_back(w);
                }
        }
    }
    tc.connected = std::all_of(seen.begin(), seen.end(), [](bool b) { return b; });
    if (n == 0) tc.connected = true;

    for (int v : g.vertices_by_lex())
        if (static_cast<int>(adj[v].size()) >= 3) tc.branching.push_back(v);

    tc.tree = tc.connected && tc.undirected_edges == n - 1;
    if (tc.tree) {
        int high_degree = 0;
        std::size_t max_degree = 0;
        for (int v = 0; v < n; ++v) {
            max_degree = std::max(max_degree, adj[v].size());
            if (adj[v].size() >= 2) ++high_degree;
        }
        tc.path = max_degree <= 2;
        tc.star = high_degree <= 1;
    }

    tc.unicyclic = tc.connected && tc.undirected_edges == n;
    if (tc.unicyclic) {
        // Peel leaves; what survives is the unique cycle.
        std::vector<int> degree(n);
        std::deque<int> leaves;
        for (int v = 0; v < n; ++v) {
            degree[v] = static_cast<int>(adj[v].size());
            if (degree[v] == 1) leaves.push_back(v);
        }
        std::vector<bool> removed(n, false);
        while (!leaves.empty()) {
            int u = leaves.front();
            leaves.pop_front();
            removed[u] = true;
            for (int w : adj[u])
                if (!removed[w] && --degree[w] == 1) leaves.push_back(w);
        }
        int start = -1;
        for (int v : g.vertices_by_lex())
            if (!removed[v]) {
                start = v;
                break;
            }
        assert(start != -1);
        int prev = -1, cur = start;
        do {
            tc.cycle.push_back(cur);
            int next = -1;
            for (int w : adj[cur])
                if (!removed[w] && w != prev) {
                    next = w;
                    break;
                }
            assert(next != -1);  // every cycle vertex keeps two cycle neighbors
            prev = cur;
            cur = next;
        } while (cur != start);
        assert(tc.cycle.size() >= 2);
    }

    // 2-coloring; on failure, reconstruct an odd cycle from the BFS tree.
    tc.bipartite = true;
    tc.side.assign(n, -1);
    std::vector<int> parent(n, -1);
    for (int root : g.vertices_by_lex()) {
        if (tc.side[root] != -1 || !tc.bipartite) continue;
        tc.side[root] = 0;
        std::deque<int> queue{root};
        while (!queue.empty() && tc.bipartite) {
            int u = queue.front();
            queue.pop_front();
            for (int w : adj[u]) {
                if (tc.side[w] == -1) {
                    tc.side[w] = 1 - tc.side[u];
                    parent[w] = u;
                    queue.push_back(w);
                } else if (tc.side[w] == tc.side[u]) {
                    // Same side across an edge: u->ancestor and w->ancestor
                    // paths plus the edge (u, w) close an odd cycle.
                    std::vector<int> up_u{u}, up_w{w};
                    int a = u, b = w;
                    auto depth = [&](int x) {
                        int d = 0;
                        for (; parent[x] != -1; x = parent[x]) ++d;
                        return d;
                    };
                    int da = depth(a), db = depth(b);
                    while (da > db) { a = parent[a]; up_u.push_back(a); --da; }
                    while (db > da) { b = parent[b]; up_w.push_back(b); --db; }
                    while (a != b) {
                        a = parent[a]; up_u.push_back(a);
                        b = parent[b]; up_w.push_back(b);
                    }
                    tc.odd_closed_walk = up_u;  // u .. lca
                    up_w.pop_back();            // drop the shared lca
                    std::reverse(up_w.begin(), up_w.end());
                    tc.odd_closed_walk.insert(tc.odd_closed_walk.end(), up_w.begin(), up_w.end());
                    assert(tc.odd_closed_walk.size() % 2 == 1);
                    tc.bipartite = false;
                    break;
                }
            }
        }
    }
    if (!tc.bipartite) tc.side.clear();

    return tc;
}

}  // namespace tgr
