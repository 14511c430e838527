#pragma once

#include <algorithm>
#include <cassert>
#include <chrono>
#include <cstdint>
#include <optional>
#include <queue>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "tgr/distances.hpp"
#include "tgr/errors.hpp"
#include "tgr/graph.hpp"
#include "tgr/instance.hpp"
#include "tgr/labeling.hpp"
#include "tgr/temporal.hpp"
#include "tgr/util.hpp"

namespace tgr {

/// Budget and strategy knobs for the exact solver.
struct SearchConfig {
    std::uint64_t max_nodes = 0;  // 0 = unlimited; a node is one edge assignment
    int timeout_ms = 0;           // 0 = unlimited; checked every 1024 nodes
    std::size_t max_solutions = 0;  // enumeration cap, 0 = unlimited
    /// Fix the first decision edge to phase 0 (sound for deciding: shifting
    /// a solution realizes every phase on every edge).  Unset picks the
    /// mode default: on when solving, off when enumerating (enumeration
    /// must see every solution unless the caller opts in).
    std::optional<bool> symmetry_break;
};

enum class Status { Feasible, Infeasible, Unknown };

inline const char* to_string(Status s) {
    switch (s) {
        case Status::Feasible: return "feasible";
        case Status::Infeasible: return "infeasible";
        default: return "unknown";
    }
}

/// Outcome of a solve or enumeration run.  Infeasible is only reported
/// after exhausting the search space; a blown budget yields Unknown (or
/// Feasible with truncated=true when solutions were already in hand).
struct Certificate {
    Status status = Status::Unknown;
    std::optional<Labeling> witness;  // one feasible labeling when found
    std::vector<Labeling> solutions;  // enumeration mode: all found, sorted by
                                      // label vector in edge-index order
    bool exhausted = false;           // the whole search space was explored
    bool truncated = false;           // enumeration stopped before exhaustion
    std::uint64_t nodes = 0;
    std::string route;   // solver that produced this certificate
    std::string reason;  // diagnostic for Infeasible/Unknown
};

namespace detail {

/// Earliest arrivals under the optimistic relaxation: an unassigned edge
/// (label -1) departs immediately, an assigned edge waits for its phase.
/// Same deterministic ordering contract as earliest_arrival().
struct OptimisticEA {
    std::vector<int> arrival;
    std::vector<int> parent_edge;
};

inline OptimisticEA optimistic_ea(const DiGraph& g, const std::vector<int>& labels,
                                  int delta, int source, int start) {
    OptimisticEA ea;
    ea.arrival.assign(g.n(), kInf);
    ea.parent_edge.assign(g.n(), -1);
    ea.arrival[source] = start;
    using Key = std::pair<int, int>;
    std::priority_queue<Key, std::vector<Key>, std::greater<Key>> queue;
    std::vector<bool> settled(g.n(), false);
    std::vector<int> by_rank(g.n());
    for (int v = 0; v < g.n(); ++v) by_rank[g.lex_rank(v)] = v;
    queue.emplace(start, g.lex_rank(source));
    while (!queue.empty()) {
        auto [time, rank] = queue.top();
        queue.pop();
        int x = by_rank[rank];
        if (settled[x]) continue;
        settled[x] = true;
        for (int e : g.out_lex(x)) {
            int y = g.edge(e).to;
            int depart = labels[e] < 0 ? time : time + mod_gap(time, labels[e], delta);
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

}  // namespace detail

/// Lower-bound state of one bound under a partial assignment.
struct BoundState {
    int from = 0;
    int to = 0;
    int bound = 0;
    int lower_bound = 0;  // optimistic fastest duration; exact when total
};

struct PropagationReport {
    bool conflict = false;  // some lower bound already exceeds its bound
    std::vector<BoundState> bounds;  // lexicographic (from id, to id) order
};

/// Computes the optimistic duration lower bound for every bound of the
/// instance under a partial assignment (labels[e] in [0, delta) or -1).
///
/// The relaxation is admissible: completing the assignment can only add
/// waiting, never remove it, so true fastest durations dominate these
/// values.  On a total assignment they coincide.
inline PropagationReport propagate(const Instance& inst, const std::vector<int>& labels) {
    if (static_cast<int>(labels.size()) != inst.graph.m())
        throw ValidationError("partial assignment must cover every edge (use -1 for unassigned)");
    for (int t : labels)
        if (t != -1 && (t < 0 || t >= inst.delta))
            throw ValidationError("partial assignment phase outside [0, delta)");
    PropagationReport report;
    for (auto [u, v] : inst.bounded_pairs()) {
        int best = kInf;
        for (int s = 0; s < inst.delta; ++s) {
            auto ea = detail::optimistic_ea(inst.graph, labels, inst.delta, u, s);
            if (ea.arrival[v] != kInf) best = std::min(best, ea.arrival[v] - s);
        }
        assert(best != kInf);  // bounded pairs are reachable by validation
        report.bounds.push_back(BoundState{u, v, inst.bound(u, v), best});
        if (best > inst.bound(u, v)) report.conflict = true;
    }
    return report;
}

/// Exhaustive labeling search with incremental lower-bound propagation.
///
/// For every bound the solver keeps the optimistic lower bound together
/// with one witness path achieving it.  Assigning a phase to an edge kept
/// off a bound's witness cannot change that bound's optimum: the witness
/// still achieves the old value, and restricting a relaxation never lowers
/// it.  So only bounds whose witness uses the assigned edge are recomputed,
/// and the stored values stay exact for the current partial assignment.
/// At a leaf they equal the true fastest durations, so every reached leaf
/// is a solution.
///
/// Determinism: static decision order (most-constraining edge first),
/// ascending phases, deterministic tie-breaks everywhere; node counts are
/// reproducible run to run.
class ExactSolver {
public:
    ExactSolver(const Instance& inst, SearchConfig cfg) : inst_(inst), cfg_(cfg) {
        build_bounds();
        build_order();
    }

    /// Decides feasibility, stopping at the first solution.
    Certificate solve() {
        bool sym = cfg_.symmetry_break.value_or(true);
        return run(/*enumerate=*/false, sym);
    }

    /// Collects all solutions (all with the first decision edge at phase 0
    /// when symmetry_break is explicitly enabled).
    Certificate enumerate() {
        bool sym = cfg_.symmetry_break.value_or(false);
        return run(/*enumerate=*/true, sym);
    }

private:
    struct BoundEntry {
        int u, v, cap;
        int lb = 0;
        std::vector<char> witness;  // edge-index membership of the witness path
    };
    struct TrailEntry {
        int bound_index;
        int old_lb;
        std::vector<char> old_witness;
    };

    const Instance& inst_;
    SearchConfig cfg_;
    std::vector<BoundEntry> bounds_;
    std::vector<int> order_;   // edge indices in decision order
    std::vector<int> labels_;  // current partial assignment, -1 unassigned

    Certificate cert_;
    bool enumerate_mode_ = false;
    bool budget_hit_ = false;
    std::chrono::steady_clock::time_point deadline_;
    bool has_deadline_ = false;

    void build_bounds() {
        for (auto [u, v] : inst_.bounded_pairs())
            bounds_.push_back(BoundEntry{u, v, inst_.bound(u, v), 0, {}});
    }

    /// Static decision order: edges used by more static shortest paths of
    /// bounded pairs come first; ties break on (from id, to id).
    void build_order() {
        const DiGraph& g = inst_.graph;
        std::vector<int> score(g.m(), 0);
        for (const BoundEntry& b : bounds_) {
            std::vector<int> path = shortest_path_vertices(g, b.u, b.v);
            for (std::size_t i = 1; i < path.size(); ++i) {
                int e = g.edge_index(path[i - 1], path[i]);
                assert(e >= 0);
                ++score[e];
            }
        }
        order_.resize(g.m());
        for (int e = 0; e < g.m(); ++e) order_[e] = e;
        std::sort(order_.begin(), order_.end(), [&](int a, int b) {
            if (score[a] != score[b]) return score[a] > score[b];
            const Edge& ea = g.edge(a);
            const Edge& eb = g.edge(b);
            if (g.lex_rank(ea.from) != g.lex_rank(eb.from))
                return g.lex_rank(ea.from) < g.lex_rank(eb.from);
            return g.lex_rank(ea.to) < g.lex_rank(eb.to);
        });
    }

    /// Fresh optimistic bound + witness for bounds_[i] under labels_.
    /// Witness: parent chain at the smallest minimizing start phase.
    void recompute(int i) {
        BoundEntry& b = bounds_[i];
        int best = kInf;
        detail::OptimisticEA best_ea;
        for (int s = 0; s < inst_.delta; ++s) {
            auto ea = detail::optimistic_ea(inst_.graph, labels_, inst_.delta, b.u, s);
            if (ea.arrival[b.v] != kInf && ea.arrival[b.v] - s < best) {
                best = ea.arrival[b.v] - s;
                best_ea = std::move(ea);
            }
        }
        assert(best != kInf);
        b.lb = best;
        b.witness.assign(inst_.graph.m(), 0);
        for (int y = b.v; y != b.u;) {
            int e = best_ea.parent_edge[y];
            assert(e >= 0);
            b.witness[e] = 1;
            y = inst_.graph.edge(e).from;
        }
    }

    bool over_budget() {
        if (cfg_.max_nodes && cert_.nodes >= cfg_.max_nodes) return true;
        if (has_deadline_ && (cert_.nodes & 1023) == 0 &&
            std::chrono::steady_clock::now() >= deadline_)
            return true;
        return false;
    }

    /// Assigns labels_[e] = value and refreshes affected bounds.  Returns
    /// false on conflict (with all changes rolled back into `trail` by the
    /// caller via undo()).
    bool assign(int e, int value, std::vector<TrailEntry>& trail) {
        labels_[e] = value;
        for (int i = 0; i < static_cast<int>(bounds_.size()); ++i) {
            if (!bounds_[i].witness[e]) continue;
            trail.push_back(TrailEntry{i, bounds_[i].lb, bounds_[i].witness});
            recompute(i);
            if (bounds_[i].lb > bounds_[i].cap) return false;
        }
        return true;
    }

    void undo(int e, std::vector<TrailEntry>& trail) {
        // Restore in reverse so repeated recomputes of one bound unwind.
        for (auto it = trail.rbegin(); it != trail.rend(); ++it) {
            bounds_[it->bound_index].lb = it->old_lb;
            bounds_[it->bound_index].witness = std::move(it->old_witness);
        }
        trail.clear();
        labels_[e] = -1;
    }

    /// Returns true to abort the entire search.
    bool dfs(std::size_t depth, bool symmetry) {
        if (depth == order_.size()) return take_leaf();
        int e = order_[depth];
        int values = (symmetry && depth == 0) ? 1 : inst_.delta;
        for (int value = 0; value < values; ++value) {
            if (over_budget()) {
                budget_hit_ = true;
                return true;
            }
            ++cert_.nodes;
            std::vector<TrailEntry> trail;
            bool viable = assign(e, value, trail);
            if (viable && dfs(depth + 1, symmetry)) {
                undo(e, trail);
                return true;
            }
            undo(e, trail);
        }
        return false;
    }

    bool take_leaf() {
        Labeling lab{inst_.delta, labels_};
        // Leaf lower bounds are exact, so this must hold; treat failure as
        // an internal defect, not an input condition.
        if (!verify_labeling(inst_, lab).ok)
            throw std::logic_error("internal error: leaf labeling fails verification");
        if (!enumerate_mode_) {
            cert_.witness = std::move(lab);
            return true;
        }
        cert_.solutions.push_back(std::move(lab));
        if (cfg_.max_solutions && cert_.solutions.size() >= cfg_.max_solutions) {
            cert_.truncated = true;
            return true;
        }
        return false;
    }

    Certificate run(bool enumerate, bool symmetry) {
        cert_ = Certificate{};
        cert_.route = "search";
        enumerate_mode_ = enumerate;
        budget_hit_ = false;
        labels_.assign(inst_.graph.m(), -1);
        if (cfg_.timeout_ms > 0) {
            has_deadline_ = true;
            deadline_ = std::chrono::steady_clock::now() +
                        std::chrono::milliseconds(cfg_.timeout_ms);
        }
        for (int i = 0; i < static_cast<int>(bounds_.size()); ++i) {
            recompute(i);
            // With nothing assigned the optimum is the static distance,
            // which validation already capped by every bound.
            assert(bounds_[i].lb <= bounds_[i].cap);
        }

        bool aborted = dfs(0, symmetry);
        cert_.exhausted = !aborted;
        if (enumerate_mode_ && aborted) cert_.truncated = true;

        if (enumerate_mode_) {
            std::sort(cert_.solutions.begin(), cert_.solutions.end(),
                      [](const Labeling& a, const Labeling& b) { return a.labels < b.labels; });
            if (!cert_.solutions.empty()) {
                cert_.status = Status::Feasible;
                cert_.witness = cert_.solutions.front();
                if (budget_hit_) cert_.reason = "budget exhausted before completing enumeration";
            } else if (budget_hit_) {
                cert_.status = Status::Unknown;
                cert_.reason = "budget exhausted before finding a labeling";
            } else {
                cert_.status = Status::Infeasible;
                cert_.reason = "exhausted the labeling space without finding a solution";
            }
        } else {
            if (cert_.witness) {
                cert_.status = Status::Feasible;
            } else if (budget_hit_) {
                cert_.status = Status::Unknown;
                cert_.reason = "budget exhausted before finding a labeling";
            } else {
                cert_.status = Status::Infeasible;
                cert_.reason = "exhausted the labeling space without finding a solution";
            }
        }
        return cert_;
    }
};

/// Decides feasibility by exhaustive search (first solution wins).
inline Certificate solve_exact(const Instance& inst, SearchConfig cfg = {}) {
    return ExactSolver(inst, cfg).solve();
}

/// Enumerates all feasible labelings (sorted by label vector).
inline Certificate enumerate_solutions(const Instance& inst, SearchConfig cfg = {}) {
    return ExactSolver(inst, cfg).enumerate();
}

}  // namespace tgr
