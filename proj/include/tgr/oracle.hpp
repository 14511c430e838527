#pragma once

#include <cassert>
#include <vector>

#include "tgr/graph.hpp"
#include "tgr/labeling.hpp"
#include "tgr/util.hpp"

namespace tgr {

/// Reference implementation of fastest duration, computed directly from
/// the definition: enumerate every vertex-simple path and simulate it.
///
/// For a fixed path the fastest traversal is forced: the first edge departs
/// at its label (durations are invariant under whole-period shifts of the
/// departure), and every later edge departs at the first usable time at or
/// after the previous arrival - extra whole-period waits never help.  No
/// shared machinery with the earliest-arrival engine, so the two sides
/// cross-check each other in tests.
///
/// Exponential in the number of simple paths; intended for small graphs.
inline int fastest_duration_oracle(const DiGraph& g, const Labeling& lab, int u, int v) {
    assert(static_cast<int>(lab.labels.size()) == g.m());
    if (u == v) return 0;
    int best = kInf;
    std::vector<bool> on_path(g.n(), false);
    std::vector<int> edge_stack;

    auto simulate = [&]() {
        int depart0 = lab.label(edge_stack.front());
        int arrive = depart0 + 1;
        for (std::size_t i = 1; i < edge_stack.size(); ++i) {
            int depart = arrive + mod_gap(arrive, lab.label(edge_stack[i]), lab.delta);
            arrive = depart + 1;
        }
        return arrive - depart0;
    };

    auto dfs = [&](auto&& self, int x) -> void {
        if (x == v) {
            best = std::min(best, simulate());
            return;
        }
        on_path[x] = true;
        for (int e : g.out(x)) {
            int y = g.edge(e).to;
            if (on_path[y]) continue;
            edge_stack.push_back(e);
            self(self, y);
            edge_stack.pop_back();
        }
        on_path[x] = false;
    };
    dfs(dfs, u);
    return best;
}

}  // namespace tgr
