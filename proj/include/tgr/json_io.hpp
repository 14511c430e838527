#pragma once

#include <array>
#include <initializer_list>
#include <string>
#include <vector>

#include "../../vendor/json.hpp"
#include "tgr/cnf.hpp"
#include "tgr/errors.hpp"
#include "tgr/graph.hpp"
#include "tgr/instance.hpp"
#include "tgr/labeling.hpp"
#include "tgr/ttr.hpp"

namespace tgr {

using json = nlohmann::ordered_json;

/// Parses text into JSON, converting syntax errors to ParseError.
inline json load_json_text(const std::string& text) {
    json doc = json::parse(text, nullptr, /*allow_exceptions=*/false);
    if (doc.is_discarded()) throw ParseError("input is not valid JSON");
    return doc;
}

namespace detail {

inline void require_object(const json& doc, const std::string& what) {
    if (!doc.is_object()) throw ParseError(what + " must be a JSON object");
}

/// Rejects members outside the allowed set; documents are strict so typos
/// fail loudly instead of being silently ignored.
inline void require_keys(const json& doc, const std::string& what,
                         std::initializer_list<const char*> required,
                         std::initializer_list<const char*> optional = {}) {
    require_object(doc, what);
    for (const char* key : required)
        if (!doc.contains(key))
            throw ParseError(what + " is missing required member '" + key + "'");
    for (const auto& [key, value] : doc.items()) {
        bool known = false;
        for (const char* k : required) known = known || key == k;
        for (const char* k : optional) known = known || key == k;
        if (!known) throw ParseError(what + " has unknown member '" + key + "'");
    }
}

inline int require_int(const json& v, const std::string& what) {
    if (!v.is_number_integer()) throw ParseError(what + " must be an integer");
    return v.get<int>();
}

inline std::string require_string(const json& v, const std::string& what) {
    if (!v.is_string()) throw ParseError(what + " must be a string");
    return v.get<std::string>();
}

/// Builds a digraph from "vertices" / "edges" members.  Semantic problems
/// (duplicates, self-loops, unknown endpoints) surface as ValidationError.
inline DiGraph parse_graph_members(const json& doc) {
    const json& vs = doc.at("vertices");
    if (!vs.is_array()) throw ParseError("'vertices' must be an array");
    const json& es = doc.at("edges");
    if (!es.is_array()) throw ParseError("'edges' must be an array");
    DiGraph g;
    try {
        for (const json& v : vs) g.add_vertex(require_string(v, "vertex id"));
        for (const json& e : es) {
            if (!e.is_array() || e.size() != 2)
                throw ParseError("each edge must be a [from, to] pair");
            g.add_edge(require_string(e[0], "edge endpoint"),
                       require_string(e[1], "edge endpoint"));
        }
    } catch (const ParseError&) {
        throw;
    } catch (const InputError& err) {
        throw ValidationError(err.what());
    }
    return g;
}

inline std::vector<BoundSpec> parse_bound_members(const json& doc) {
    const json& bs = doc.at("bounds");
    if (!bs.is_array()) throw ParseError("'bounds' must be an array");
    std::vector<BoundSpec> specs;
    specs.reserve(bs.size());
    for (const json& b : bs) {
        require_keys(b, "bound entry", {"from", "to", "d"});
        specs.push_back(BoundSpec{require_string(b.at("from"), "bound 'from'"),
                                  require_string(b.at("to"), "bound 'to'"),
                                  require_int(b.at("d"), "bound 'd'")});
    }
    return specs;
}

inline bool undirected_flag(const json& doc) {
    if (!doc.contains("undirected")) return false;
    if (!doc.at("undirected").is_boolean())
        throw ParseError("'undirected' must be a boolean");
    return doc.at("undirected").get<bool>();
}

}  // namespace detail

/// True when the document describes an undirected instance.
inline bool is_undirected_document(const json& doc) {
    detail::require_object(doc, "instance document");
    return detail::undirected_flag(doc);
}

/// Parses a directed instance document.  A wrapper object holding the
/// instance under an "instance" member (as emitted for gadgets, alongside a
/// "sidecar") is unwrapped transparently.
inline Instance parse_instance(const json& document) {
    detail::require_object(document, "instance document");
    const json* doc = &document;
    if (!document.contains("delta") && document.contains("instance")) {
        detail::require_keys(document, "wrapped instance document", {"instance"}, {"sidecar"});
        doc = &document.at("instance");
    }
    detail::require_keys(*doc, "instance document", {"delta", "vertices", "edges", "bounds"},
                         {"undirected"});
    if (detail::undirected_flag(*doc))
        throw ParseError("document is marked undirected; expected a directed instance");
    int delta = detail::require_int(doc->at("delta"), "'delta'");
    DiGraph g = detail::parse_graph_members(*doc);
    return Instance::make(std::move(g), delta, detail::parse_bound_members(*doc));
}

inline Instance parse_instance_text(const std::string& text) {
    return parse_instance(load_json_text(text));
}

/// Parses an undirected instance document ("undirected": true required).
/// Wrapper objects holding the instance under an "instance" member (as
/// emitted by the reduction commands) are unwrapped transparently.
inline TtrInstance parse_ttr(const json& document) {
    detail::require_object(document, "instance document");
    const json* doc = &document;
    if (!document.contains("delta") && document.contains("instance")) {
        detail::require_keys(document, "wrapped instance document", {"instance"}, {"sidecar"});
        doc = &document.at("instance");
    }
    detail::require_keys(*doc, "instance document",
                         {"delta", "vertices", "edges", "bounds", "undirected"});
    if (!detail::undirected_flag(*doc))
        throw ParseError("document is not marked undirected; expected \"undirected\": true");
    int delta = detail::require_int(doc->at("delta"), "'delta'");
    DiGraph g = detail::parse_graph_members(*doc);
    return TtrInstance::make(std::move(g), delta, detail::parse_bound_members(*doc));
}

inline TtrInstance parse_ttr_text(const std::string& text) {
    return parse_ttr(load_json_text(text));
}

/// Parses a labeling document against the graph it is meant to label.
inline Labeling parse_labeling(const json& doc, const DiGraph& g) {
    detail::require_keys(doc, "labeling document", {"delta", "labels"});
    int delta = detail::require_int(doc.at("delta"), "'delta'");
    const json& ls = doc.at("labels");
    if (!ls.is_array()) throw ParseError("'labels' must be an array");
    std::vector<LabelSpec> specs;
    specs.reserve(ls.size());
    for (const json& l : ls) {
        detail::require_keys(l, "label entry", {"from", "to", "t"});
        specs.push_back(LabelSpec{detail::require_string(l.at("from"), "label 'from'"),
                                  detail::require_string(l.at("to"), "label 'to'"),
                                  detail::require_int(l.at("t"), "label 't'")});
    }
    return make_labeling(g, delta, specs);
}

inline Labeling parse_labeling_text(const std::string& text, const DiGraph& g) {
    return parse_labeling(load_json_text(text), g);
}

/// Parses a plain undirected graph document ({"vertices", "edges"}); each
/// edge must appear in exactly one orientation.
inline DiGraph parse_undirected_graph(const json& doc) {
    detail::require_keys(doc, "graph document", {"vertices", "edges"});
    DiGraph g = detail::parse_graph_members(doc);
    for (const Edge& e : g.edges())
        if (g.has_edge(e.to, e.from))
            throw ValidationError("undirected edge {" + g.id(e.from) + ", " + g.id(e.to) +
                                  "} is listed in both orientations");
    return g;
}

inline DiGraph parse_undirected_graph_text(const std::string& text) {
    return parse_undirected_graph(load_json_text(text));
}

/// Parses a monotone 3-CNF document ({"variables", "clauses"}).
inline MonotoneCnf parse_cnf(const json& doc) {
    detail::require_keys(doc, "formula document", {"variables", "clauses"});
    const json& vs = doc.at("variables");
    if (!vs.is_array()) throw ParseError("'variables' must be an array");
    std::vector<std::string> variables;
    for (const json& v : vs) variables.push_back(detail::require_string(v, "variable name"));
    const json& cs = doc.at("clauses");
    if (!cs.is_array()) throw ParseError("'clauses' must be an array");
    std::vector<std::array<std::string, 3>> clauses;
    for (const json& c : cs) {
        if (!c.is_array() || c.size() != 3)
            throw ParseError("each clause must be an array of exactly three variables");
        clauses.push_back({detail::require_string(c[0], "clause literal"),
                           detail::require_string(c[1], "clause literal"),
                           detail::require_string(c[2], "clause literal")});
    }
    return MonotoneCnf::make(std::move(variables), clauses);
}

inline MonotoneCnf parse_cnf_text(const std::string& text) {
    return parse_cnf(load_json_text(text));
}

/// Serializes an instance: vertices in insertion order, edges in edge-index
/// order, bounds in lexicographic pair order.  parse_instance round-trips
/// the result.
inline json instance_json(const Instance& inst) {
    json doc;
    doc["delta"] = inst.delta;
    doc["vertices"] = json::array();
    for (const std::string& id : inst.graph.ids()) doc["vertices"].push_back(id);
    doc["edges"] = json::array();
    for (const Edge& e : inst.graph.edges())
        doc["edges"].push_back(json::array({inst.graph.id(e.from), inst.graph.id(e.to)}));
    doc["bounds"] = json::array();
    for (auto [u, v] : inst.bounded_pairs())
        doc["bounds"].push_back(
            {{"from", inst.graph.id(u)}, {"to", inst.graph.id(v)}, {"d", inst.bound(u, v)}});
    return doc;
}

/// Serializes an undirected instance; parse_ttr round-trips the result.
inline json ttr_json(const TtrInstance& ttr) {
    json doc;
    doc["delta"] = ttr.delta;
    doc["undirected"] = true;
    doc["vertices"] = json::array();
    for (const std::string& id : ttr.skeleton.ids()) doc["vertices"].push_back(id);
    doc["edges"] = json::array();
    for (const Edge& e : ttr.skeleton.edges())
        doc["edges"].push_back(json::array({ttr.skeleton.id(e.from), ttr.skeleton.id(e.to)}));
    doc["bounds"] = json::array();
    for (auto [u, v] : ttr.bounded_pairs())
        doc["bounds"].push_back(
            {{"from", ttr.skeleton.id(u)}, {"to", ttr.skeleton.id(v)}, {"d", ttr.bound(u, v)}});
    return doc;
}

/// Serializes a labeling of g in edge-index order.
inline json labeling_json(const DiGraph& g, const Labeling& lab) {
    json doc;
    doc["delta"] = lab.delta;
    doc["labels"] = json::array();
    for (int e = 0; e < g.m(); ++e)
        doc["labels"].push_back({{"from", g.id(g.edge(e).from)},
                                 {"to", g.id(g.edge(e).to)},
                                 {"t", lab.label(e)}});
    return doc;
}

}  // namespace tgr
