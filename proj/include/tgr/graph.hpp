#pragma once

#include <algorithm>
#include <map>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include <tgr/errors.hpp>

namespace tgr {

/// Directed edge between vertex indices.
struct Edge {
    int from;
    int to;
};

/**
 * Directed graph over opaque string vertex ids.
 *
 * - No self-loops, no duplicate edges.
 * - Vertices and edges iterate in insertion order (deterministic).
 * - Lexicographic id ranks are cached for deterministic tie-breaking in
 *   traversals (the id strings themselves are never interpreted).
 */
class DiGraph {
public:
    int add_vertex(const std::string& id) {
        if (index_.count(id))
            throw InputError("duplicate vertex id '" + id + "'");
        int v = static_cast<int>(ids_.size());
        index_.emplace(id, v);
        ids_.push_back(id);
        out_.emplace_back();
        in_.emplace_back();
        dirty_ = true;
        return v;
    }

    /// Adds the vertex if missing; returns its index either way.
    int ensure_vertex(const std::string& id) {
        auto it = index_.find(id);
        return it != index_.end() ? it->second : add_vertex(id);
    }

    bool has_vertex(const std::string& id) const { return index_.count(id) > 0; }

    int vertex(const std::string& id) const {
        auto it = index_.find(id);
        if (it == index_.end())
            throw InputError("unknown vertex id '" + id + "'");
        return it->second;
    }

    int add_edge(int u, int v) {
        if (u == v)
            throw InputError("self-loop on vertex '" + ids_[u] + "'");
        if (edge_index_.count({u, v}))
            throw InputError("duplicate edge (" + ids_[u] + ", " + ids_[v] + ")");
        int e = static_cast<int>(edges_.size());
        edges_.push_back({u, v});
        edge_index_.emplace(std::make_pair(u, v), e);
        out_[u].push_back(e);
        in_[v].push_back(e);
        dirty_ = true;
        return e;
    }

    int add_edge(const std::string& u, const std::string& v) {
        return add_edge(vertex(u), vertex(v));
    }

    bool has_edge(int u, int v) const { return edge_index_.count({u, v}) > 0; }

    /// Edge index, or -1 when the edge is absent.
    int edge_index(int u, int v) const {
        auto it = edge_index_.find({u, v});
        return it != edge_index_.end() ? it->second : -1;
    }

    int n() const { return static_cast<int>(ids_.size()); }
    int m() const { return static_cast<int>(edges_.size()); }

    const std::string& id(int v) const { return ids_[v]; }
    const std::vector<std::string>& ids() const { return ids_; }
    const Edge& edge(int e) const { return edges_[e]; }
    const std::vector<Edge>& edges() const { return edges_; }

    /// Out-/in-edge indices in insertion order.
    const std::vector<int>& out(int v) const { return out_[v]; }
    const std::vector<int>& in(int v) const { return in_[v]; }
    int out_degree(int v) const { return static_cast<int>(out_[v].size()); }
    int in_degree(int v) const { return static_cast<int>(in_[v].size()); }

    /// Distinct undirected neighbors of v (sources or targets), ascending index.
    std::vector<int> undirected_neighbors(int v) const {
        std::set<int> nb;
        for (int e : out_[v]) nb.insert(edges_[e].to);
        for (int e : in_[v]) nb.insert(edges_[e].from);
        return {nb.begin(), nb.end()};
    }

    /// True when every edge has its antiparallel partner.
    bool symmetric_edges() const {
        for (const Edge& e : edges_)
            if (!has_edge(e.to, e.from)) return false;
        return true;
    }

    /// Rank of v's id in lexicographic order over all ids.
    int lex_rank(int v) const {
        refresh();
        return lex_rank_[v];
    }

    /// Vertex indices sorted by id.
    const std::vector<int>& vertices_by_lex() const {
        refresh();
        return by_lex_;
    }

    /// Out-edge indices of v sorted by target id (deterministic scan order).
    const std::vector<int>& out_lex(int v) const {
        refresh();
        return out_lex_[v];
    }

private:
    std::vector<std::string> ids_;
    std::map<std::string, int> index_;
    std::vector<Edge> edges_;
    std::map<std::pair<int, int>, int> edge_index_;
    std::vector<std::vector<int>> out_, in_;

    mutable bool dirty_ = true;
    mutable std::vector<int> lex_rank_, by_lex_;
    mutable std::vector<std::vector<int>> out_lex_;

    void refresh() const {
        if (!dirty_) return;
        int nn = n();
        by_lex_.resize(nn);
        for (int v = 0; v < nn; ++v) by_lex_[v] = v;
        std::sort(by_lex_.begin(), by_lex_.end(),
                  [&](int a, int b) { return ids_[a] < ids_[b]; });
        lex_rank_.assign(nn, 0);
        for (int r = 0; r < nn; ++r) lex_rank_[by_lex_[r]] = r;
        out_lex_ = out_;
        for (int v = 0; v < nn; ++v)
            std::sort(out_lex_[v].begin(), out_lex_[v].end(), [&](int a, int b) {
                return lex_rank_[edges_[a].to] < lex_rank_[edges_[b].to];
            });
        dirty_ = false;
    }
};

} // namespace tgr
