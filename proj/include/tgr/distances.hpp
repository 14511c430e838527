#pragma once

#include <deque>
#include <optional>
#include <vector>

#include <tgr/graph.hpp>
#include <tgr/util.hpp>

namespace tgr {

/// Hop distances from source by breadth-first traversal; kInf when unreachable.
inline std::vector<int> bfs_distances(const DiGraph& g, int source) {
    std::vector<int> dist(g.n(), kInf);
    dist[source] = 0;
    std::deque<int> queue{source};
    while (!queue.empty()) {
        int v = queue.front();
        queue.pop_front();
        for (int e : g.out(v)) {
            int w = g.edge(e).to;
            if (dist[w] == kInf) {
                dist[w] = dist[v] + 1;
                queue.push_back(w);
            }
        }
    }
    return dist;
}

/// Some ordered pair (u,v) with v unreachable from u, if one exists.
inline std::optional<std::pair<int, int>> unreachable_witness(const DiGraph& g) {
    if (g.n() == 0) return std::nullopt;
    for (int u : g.vertices_by_lex()) {
        std::vector<int> dist = bfs_distances(g, u);
        for (int v : g.vertices_by_lex())
            if (dist[v] == kInf) return std::make_pair(u, v);
    }
    return std::nullopt;
}

/// All-pairs hop distance matrix d̂. Signals a broken strong-connectivity
/// precondition when some pair is unreachable.
inline std::vector<std::vector<int>> static_distances(const DiGraph& g) {
    std::vector<std::vector<int>> dist(g.n());
    for (int u = 0; u < g.n(); ++u) {
        dist[u] = bfs_distances(g, u);
        for (int v = 0; v < g.n(); ++v)
            if (dist[u][v] == kInf)
                throw DomainError("graph is not strongly connected: no path from '" +
                                  g.id(u) + "' to '" + g.id(v) + "'");
    }
    return dist;
}

/// As static_distances but tolerates unreachable pairs (kInf entries).
inline std::vector<std::vector<int>> static_distances_partial(const DiGraph& g) {
    std::vector<std::vector<int>> dist(g.n());
    for (int u = 0; u < g.n(); ++u) dist[u] = bfs_distances(g, u);
    return dist;
}

/// Deterministic shortest u-v path as a vertex sequence: breadth-first layers,
/// parents resolved in lexicographic scan order. Empty when unreachable.
inline std::vector<int> shortest_path_vertices(const DiGraph& g, int u, int v) {
    std::vector<int> parent(g.n(), -1), dist(g.n(), kInf);
    dist[u] = 0;
    std::deque<int> queue{u};
    while (!queue.empty()) {
        int x = queue.front();
        queue.pop_front();
        for (int e : g.out_lex(x)) {
            int w = g.edge(e).to;
            if (dist[w] == kInf) {
                dist[w] = dist[x] + 1;
                parent[w] = x;
                queue.push_back(w);
            }
        }
    }
    if (dist[v] == kInf) return {};
    std::vector<int> path;
    for (int x = v; x != -1; x = parent[x]) path.push_back(x);
    std::reverse(path.begin(), path.end());
    return path;
}

} // namespace tgr
