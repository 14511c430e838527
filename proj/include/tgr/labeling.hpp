#pragma once

#include <cassert>
#include <string>
#include <vector>

#include "tgr/errors.hpp"
#include "tgr/graph.hpp"
#include "tgr/util.hpp"

namespace tgr {

/// One edge label in id form, the exchange format for parsers and output.
struct LabelSpec {
    std::string from;
    std::string to;
    int t = 0;
};

/// A periodic labeling of a digraph: labels[i] is the phase in [0, delta)
/// of the edge with index i.  The labeling is total by construction.
struct Labeling {
    int delta = 1;
    std::vector<int> labels;

    int label(int edge_index) const {
        assert(edge_index >= 0 && edge_index < static_cast<int>(labels.size()));
        return labels[edge_index];
    }
};

/// Validates and builds a total labeling from id-based label specs.
/// Every edge of the graph must be labeled exactly once, with a phase in
/// [0, delta).
inline Labeling make_labeling(const DiGraph& g, int delta,
                              const std::vector<LabelSpec>& specs) {
    if (delta < 1)
        throw ValidationError("delta must be >= 1, got " + std::to_string(delta));
    Labeling lab;
    lab.delta = delta;
    lab.labels.assign(g.m(), -1);
    for (const LabelSpec& s : specs) {
        if (!g.has_vertex(s.from) || !g.has_vertex(s.to) ||
            !g.has_edge(g.vertex(s.from), g.vertex(s.to)))
            throw ValidationError("label on (" + s.from + ", " + s.to +
                                  "): no such edge in the graph");
        int e = g.edge_index(g.vertex(s.from), g.vertex(s.to));
        if (lab.labels[e] != -1)
            throw ValidationError("duplicate label on (" + s.from + ", " + s.to + ")");
        if (s.t < 0 || s.t >= delta)
            throw ValidationError("label on (" + s.from + ", " + s.to + "): phase " +
                                  std::to_string(s.t) + " is outside [0, " +
                                  std::to_string(delta) + ")");
        lab.labels[e] = s.t;
    }
    for (int e = 0; e < g.m(); ++e)
        if (lab.labels[e] == -1)
            throw ValidationError("edge (" + g.id(g.edge(e).from) + ", " +
                                  g.id(g.edge(e).to) + ") is missing a label");
    return lab;
}

/// Convenience for in-memory construction from an index-aligned vector.
inline Labeling make_labeling(const DiGraph& g, int delta, std::vector<int> labels) {
    assert(static_cast<int>(labels.size()) == g.m());
    for (int t : labels) assert(t >= 0 && t < delta);
    (void)g;
    return Labeling{delta, std::move(labels)};
}

/// Shifts every label by s modulo delta.  Shifting is duration-preserving:
/// a path departing at time t under the original labeling departs at t + s
/// under the shifted one, with identical waiting at every stop.
inline Labeling shift_labeling(const Labeling& lab, int s) {
    Labeling out;
    out.delta = lab.delta;
    out.labels.reserve(lab.labels.size());
    for (int t : lab.labels) out.labels.push_back(floor_mod(t + s, lab.delta));
    return out;
}

}  // namespace tgr
