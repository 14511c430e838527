#pragma once

#include <cassert>
#include <cctype>
#include <map>
#include <set>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "tgr/cnf.hpp"
#include "tgr/errors.hpp"
#include "tgr/gadgets.hpp"
#include "tgr/graph.hpp"
#include "tgr/instance.hpp"
#include "tgr/topology.hpp"
#include "tgr/ttr.hpp"
#include "tgr/util.hpp"

namespace tgr {

/// Lifts a graph-coloring question to an undirected-instance question: a
/// fresh hub is joined to every vertex of the input graph, and each input
/// edge {v, w} becomes the two bounds D(v, w) = D(w, v) = delta on the
/// star.  A trip v -> hub -> w under phases p_v, p_w takes
/// 2 + ((p_w - p_v - 1) mod delta), which stays within delta in both
/// directions exactly when p_v != p_w -- so the instance is feasible
/// precisely when the input graph is delta-colorable, with spoke phases
/// as colors.
inline TtrInstance star_from_coloring(const DiGraph& g, int delta) {
    if (delta < 3)
        throw DomainError("the coloring lift needs period >= 3");
    if (g.n() == 0) throw DomainError("the coloring lift needs a nonempty graph");

    std::string hub = "u";
    bool clash = true;
    while (clash) {
        clash = false;
        for (int v = 0; v < g.n(); ++v)
            if (g.id(v) == hub) {
                hub = "_" + hub;
                clash = true;
                break;
            }
    }

    DiGraph star;
    star.add_vertex(hub);
    for (int v = 0; v < g.n(); ++v) star.add_vertex(g.id(v));
    for (int v = 0; v < g.n(); ++v) star.add_edge(hub, g.id(v));

    std::vector<BoundSpec> bounds;
    for (const Edge& e : g.edges()) {
        bounds.push_back(BoundSpec{g.id(e.from), g.id(e.to), delta});
        bounds.push_back(BoundSpec{g.id(e.to), g.id(e.from), delta});
    }
    return TtrInstance::make(std::move(star), delta, bounds);
}

/// A monotone 3-CNF formula turned into a period-2 instance that is
/// feasible exactly when some assignment makes every clause
/// not-all-equal.  See nae3sat_to_ditgr.
struct NaeReduction {
    Instance instance;
    bool symmetric = false;
    // Per variable: the directed edge whose phase reads out its value.
    std::map<std::string, std::pair<std::string, std::string>> readout;
};

namespace detail {

inline std::string clause_id(int local, int clause) {
    return std::to_string(local) + "_" + std::to_string(clause);
}

}  // namespace detail

/// Builds the period-2 instance of a monotone not-all-equal 3-SAT formula.
///
/// Each clause (x, y, z) becomes a directed 11-cycle.  Eight duration-2
/// bounds chain the arc 3 -> 4 -> ... -> 10 -> 0 -> 1 without waiting, so
/// its phases alternate x, ~x, x, ... once lambda(3,4) is read as x; the
/// edges (1,2) and (2,3) carry y and z.  The bound D(0,4) = 5 allows the
/// four-edge arc 0 -> 4 at most one wait, and since the three waits there
/// have odd total parity, one wait is available exactly when x, y, z are
/// not all equal.
///
/// Occurrences of one variable across clauses are chained through
/// two-edge corridors, each squeezed to zero waiting by two duration-2
/// bounds, which copies the value between the occurrence edges
/// (x: (7,8), y: (1,2), z: (2,3) of the owning clause).  A corridor whose
/// two ends would both be a clause's vertex 2 (a y-occurrence feeding a
/// z-occurrence) is rerouted to run from the later clause's vertex 3 to
/// the earlier clause's vertex 1, which copies the value equally well and
/// avoids degenerate corridor edges.
///
/// The symmetric variant mirrors every edge and every bound; the mirrored
/// bounds squeeze the mirrored arcs the same way, so the instance carries
/// two independent copies of the formula's constraints and feasibility is
/// unchanged.  Multi-clause asymmetric outputs are not strongly connected
/// (corridors only point forward), so the instance is built without the
/// strong-connectivity requirement; every bounded pair stays reachable.
inline NaeReduction nae3sat_to_ditgr(const MonotoneCnf& cnf, bool symmetric = false) {
    if (cnf.clauses.empty()) throw DomainError("the formula has no clauses");
    const int delta = 2;

    DiGraph g;
    for (std::size_t i = 0; i < cnf.clauses.size(); ++i)
        for (int j = 0; j <= 10; ++j)
            g.add_vertex(detail::clause_id(j, static_cast<int>(i)));
    for (std::size_t i = 0; i < cnf.clauses.size(); ++i)
        for (int j = 0; j <= 10; ++j)
            g.add_edge(detail::clause_id(j, static_cast<int>(i)),
                       detail::clause_id((j + 1) % 11, static_cast<int>(i)));

    std::map<std::pair<std::string, std::string>, int> bounds;
    auto add_bound = [&](const std::string& from, const std::string& to, int d) {
        auto [it, fresh] = bounds.emplace(std::make_pair(from, to), d);
        assert(fresh || it->second == d);
        (void)it;
        (void)fresh;
    };
    for (std::size_t i = 0; i < cnf.clauses.size(); ++i) {
        const int c = static_cast<int>(i);
        add_bound(detail::clause_id(0, c), detail::clause_id(4, c), 5);
        for (int j : {3, 4, 5, 6, 7, 8, 9, 10}) {
            add_bound(detail::clause_id(j, c), detail::clause_id((j + 2) % 11, c), 2);
        }
    }

    // Occurrence edges per slot: x rides (7,8), y rides (1,2), z rides (2,3).
    auto occurrence_edge = [&](int slot, int clause) -> std::pair<std::string, std::string> {
        static const int tail[3] = {7, 1, 2};
        return {detail::clause_id(tail[slot], clause),
                detail::clause_id(tail[slot] + 1, clause)};
    };

    NaeReduction red;
    std::map<std::string, std::pair<int, int>> last_occurrence;  // variable -> (clause, slot)
    for (std::size_t i = 0; i < cnf.clauses.size(); ++i) {
        const int c = static_cast<int>(i);
        for (int slot = 0; slot < 3; ++slot) {
            const std::string& var = cnf.variables[cnf.clauses[i][slot]];
            if (!last_occurrence.count(var)) {
                // First occurrence: its value edge is the variable's readout.
                static const int readout_tail[3] = {3, 1, 2};
                red.readout[var] = {detail::clause_id(readout_tail[slot], c),
                                    detail::clause_id(readout_tail[slot] + 1, c)};
                last_occurrence[var] = {c, slot};
                continue;
            }
            auto [pc, ps] = last_occurrence[var];
            auto [p, a] = occurrence_edge(ps, pc);
            auto [b, q] = occurrence_edge(slot, c);
            if (a == detail::clause_id(2, pc) && b == detail::clause_id(2, c)) {
                // y-occurrence feeding a z-occurrence: reroute the corridor.
                a = detail::clause_id(3, c);
                p = detail::clause_id(2, c);
                b = detail::clause_id(1, pc);
                q = detail::clause_id(2, pc);
            }
            g.add_edge(a, b);
            add_bound(p, b, 2);
            add_bound(a, q, 2);
            last_occurrence[var] = {c, slot};
        }
    }

    if (symmetric) {
        for (const Edge& e : std::vector<Edge>(g.edges()))
            if (g.edge_index(e.to, e.from) < 0) g.add_edge(g.id(e.to), g.id(e.from));
        for (const auto& [pair, d] : std::map<std::pair<std::string, std::string>, int>(bounds))
            add_bound(pair.second, pair.first, d);
    }

    std::vector<BoundSpec> specs;
    specs.reserve(bounds.size());
    for (const auto& [pair, d] : bounds) specs.push_back(BoundSpec{pair.first, pair.second, d});
    red.symmetric = symmetric;
    red.instance = Instance::make(std::move(g), delta, specs,
                                  /*require_strong_connectivity=*/false);
    return red;
}

/// Reads a variable assignment off a labeling of the reduced instance.
inline std::map<std::string, bool> nae_assignment(const NaeReduction& red, const Labeling& lab) {
    std::map<std::string, bool> assignment;
    for (const auto& [var, edge] : red.readout) {
        int e = red.instance.graph.edge_index(red.instance.graph.vertex(edge.first),
                                              red.instance.graph.vertex(edge.second));
        assert(e >= 0);
        assignment[var] = lab.label(e) == 1;
    }
    return assignment;
}

/// An undirected tree instance spliced into a directed one; see
/// reduce_ttr_to_dittr.
struct SpliceReduction {
    Instance instance;
    std::string family;  // gadget family used for every splice
    int delta = 0;
    int k = 0;
    std::string prefix;  // namespace of the splice-local vertex ids
    std::vector<std::pair<std::string, std::string>> spliced;  // host edges, skeleton order
};

/// Splices one gadget copy onto every edge of an undirected tree instance,
/// turning it into a directed instance that is feasible exactly when the
/// undirected one is.  The host edge is identified with the copy's
/// designated edge and the rest of the copy hangs off it, so host
/// distances are untouched and the host's bounds transfer verbatim.  In
/// any solution the gadget pins both directions of each host edge to one
/// phase (giving back an undirected solution); conversely an undirected
/// solution extends by shifting each copy's reference to its edge's phase.
/// Requires every host bound to leave slack at least k and picks the
/// slack-k gadget for the host's period, so the combined instance keeps
/// minimum slack >= k.
inline SpliceReduction reduce_ttr_to_dittr(const TtrInstance& ttr, int k) {
    TopologyClass topo = classify(bidirect(ttr.skeleton));
    if (!topo.tree)
        throw DomainError("the splice reduction is defined on tree instances");
    SlackReport host_slack = ttr_slack(ttr);
    if (host_slack.k_min < k)
        throw DomainError("a bound leaves slack below the requested " + std::to_string(k));

    Gadget gadget = select_gadget(ttr.delta, k);

    // Splice-local ids live under "g{copy}." -- escalate the prefix until
    // no host id could collide with it.
    std::string prefix = "g";
    for (bool clash = true; clash;) {
        clash = false;
        for (int v = 0; v < ttr.skeleton.n(); ++v) {
            const std::string& id = ttr.skeleton.id(v);
            if (id.size() <= prefix.size() || id.compare(0, prefix.size(), prefix) != 0)
                continue;
            std::size_t pos = prefix.size();
            while (pos < id.size() && std::isdigit(static_cast<unsigned char>(id[pos]))) ++pos;
            if (pos > prefix.size() && pos < id.size() && id[pos] == '.') {
                prefix += "g";
                clash = true;
                break;
            }
        }
    }

    DiGraph g;
    for (int v = 0; v < ttr.skeleton.n(); ++v) g.add_vertex(ttr.skeleton.id(v));

    SpliceReduction red;
    red.family = gadget.family;
    red.delta = ttr.delta;
    red.k = k;
    red.prefix = prefix;

    std::vector<BoundSpec> bounds;
    const DiGraph& gg = gadget.instance.graph;
    for (std::size_t idx = 0; idx < ttr.skeleton.edges().size(); ++idx) {
        const Edge& host = ttr.skeleton.edges()[idx];
        red.spliced.emplace_back(ttr.skeleton.id(host.from), ttr.skeleton.id(host.to));
        auto rename = [&](int gv) -> std::string {
            if (gg.id(gv) == gadget.designated.first) return ttr.skeleton.id(host.from);
            if (gg.id(gv) == gadget.designated.second) return ttr.skeleton.id(host.to);
            return prefix + std::to_string(idx) + "." + gg.id(gv);
        };
        for (int gv = 0; gv < gg.n(); ++gv) {
            std::string id = rename(gv);
            if (!g.has_vertex(id)) g.add_vertex(id);
        }
        for (const Edge& e : gg.edges()) g.add_edge(rename(e.from), rename(e.to));
        for (auto [u, v] : gadget.instance.bounded_pairs())
            bounds.push_back(BoundSpec{rename(u), rename(v), gadget.instance.bound(u, v)});
    }
    for (auto [u, v] : ttr.bounded_pairs())
        bounds.push_back(
            BoundSpec{ttr.skeleton.id(u), ttr.skeleton.id(v), ttr.bound(u, v)});

    red.instance = Instance::make(std::move(g), ttr.delta, bounds);
    return red;
}

}  // namespace tgr
