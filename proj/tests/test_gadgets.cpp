// Splice gadget families: construction shapes, family selection, reference
// labelings, comb waiting profiles, and enumeration-backed certification.

#include <algorithm>
#include <map>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include <catch2/catch_amalgamated.hpp>

#include <tgr/gadgets.hpp>
#include <tgr/instance.hpp>
#include <tgr/labeling.hpp>
#include <tgr/search.hpp>
#include <tgr/temporal.hpp>
#include <tgr/topology.hpp>

#include "support.hpp"

using Catch::Matchers::ContainsSubstring;
using Catch::Matchers::MessageMatches;

namespace {

int label_of(const tgr::DiGraph& g, const tgr::Labeling& lab, const std::string& from,
             const std::string& to) {
    int e = g.edge_index(g.vertex(from), g.vertex(to));
    REQUIRE(e >= 0);
    return lab.label(e);
}

std::pair<int, int> designated_labels(const tgr::Gadget& gd, const tgr::Labeling& lab) {
    return {label_of(gd.instance.graph, lab, gd.designated.first, gd.designated.second),
            label_of(gd.instance.graph, lab, gd.designated.second, gd.designated.first)};
}

// Rebuilds the gadget with one directed bound loosened by `bump`.
tgr::Gadget loosened(const tgr::Gadget& gd, const std::string& from, const std::string& to,
                     int bump) {
    tgr::Gadget copy = gd;
    const tgr::DiGraph& g = gd.instance.graph;
    std::vector<tgr::BoundSpec> bounds;
    for (auto [u, v] : gd.instance.bounded_pairs()) {
        int d = gd.instance.bound(u, v);
        if (g.id(u) == from && g.id(v) == to) d += bump;
        bounds.push_back(tgr::BoundSpec{g.id(u), g.id(v), d});
    }
    copy.instance = tgr::Instance::make(tgr::DiGraph(gd.instance.graph), gd.delta, bounds);
    return copy;
}

void check_struct_invariants(const tgr::Gadget& gd) {
    CAPTURE(gd.family, gd.delta, gd.k);
    const tgr::DiGraph& g = gd.instance.graph;
    tgr::TopologyClass topo = tgr::classify(g);
    CHECK(topo.tree);
    CHECK(topo.bidirected);
    CHECK(gd.instance.delta == gd.delta);
    CHECK(gd.kappa >= gd.k);
    REQUIRE(g.has_vertex(gd.designated.first));
    REQUIRE(g.has_vertex(gd.designated.second));
    CHECK(g.edge_index(g.vertex(gd.designated.first), g.vertex(gd.designated.second)) >= 0);
    CHECK(g.edge_index(g.vertex(gd.designated.second), g.vertex(gd.designated.first)) >= 0);
}

}  // namespace

TEST_CASE("odd-k0 gadget shape") {
    SECTION("period 3") {
        tgr::Gadget gd = tgr::gadget_odd_k0(3);
        CHECK(gd.family == "odd-k0");
        CHECK(gd.delta == 3);
        CHECK(gd.k == 0);
        CHECK(gd.kappa == 0);
        CHECK(gd.instance.graph.n() == 5);
        CHECK(gd.instance.graph.m() == 8);
        CHECK(gd.instance.bounds.size() == 6);
        CHECK(gd.instance.bound("1", "2") == 2);
        CHECK(gd.instance.bound("2", "1") == 2);
        CHECK(gd.instance.bound("1", "5") == 3);
        CHECK(gd.instance.bound("5", "1") == 3);
        CHECK(gd.instance.bound("2", "5") == 3);
        CHECK(gd.instance.bound("5", "2") == 3);
        CHECK(gd.designated == std::pair<std::string, std::string>{"4", "5"});
        CHECK(gd.main_path.empty());
        CHECK(gd.tooth.empty());
        tgr::SlackReport report = tgr::slack(gd.instance);
        CHECK(report.k_min == 0);
        for (const tgr::PairSlack& ps : report.per_pair) CHECK(ps.slack == 0);
        check_struct_invariants(gd);
    }
    SECTION("period 5") {
        tgr::Gadget gd = tgr::gadget_odd_k0(5);
        CHECK(gd.instance.graph.n() == 6);
        CHECK(gd.instance.graph.m() == 10);
        CHECK(gd.instance.bound("1", "6") == 4);
        CHECK(gd.instance.bound("6", "2") == 4);
        CHECK(gd.designated == std::pair<std::string, std::string>{"5", "6"});
        check_struct_invariants(gd);
    }
    SECTION("period 7") {
        tgr::Gadget gd = tgr::gadget_odd_k0(7);
        CHECK(gd.instance.graph.n() == 7);
        CHECK(gd.instance.bound("1", "7") == 5);
        CHECK(gd.designated == std::pair<std::string, std::string>{"6", "7"});
    }
    SECTION("rejects even or small periods") {
        CHECK_THROWS_MATCHES(tgr::gadget_odd_k0(2), tgr::DomainError,
                             MessageMatches(ContainsSubstring("odd period >= 3")));
        CHECK_THROWS_AS(tgr::gadget_odd_k0(4), tgr::DomainError);
        CHECK_THROWS_AS(tgr::gadget_odd_k0(1), tgr::DomainError);
    }
}

TEST_CASE("odd-quarter gadget shape") {
    SECTION("period 5 slack 1") {
        tgr::Gadget gd = tgr::gadget_odd_quarter(5, 1);
        CHECK(gd.family == "odd-quarter");
        CHECK(gd.k == 1);
        CHECK(gd.kappa == 1);
        CHECK(gd.instance.graph.n() == 6);
        CHECK(gd.instance.graph.m() == 10);
        CHECK(gd.instance.bounds.size() == 4);
        CHECK(gd.instance.bound("2", "1") == 3);
        CHECK(gd.instance.bound("5", "6") == 3);
        CHECK(gd.instance.bound("2", "6") == 4);
        CHECK(gd.instance.bound("5", "1") == 4);
        CHECK(gd.designated == std::pair<std::string, std::string>{"3", "4"});
        tgr::SlackReport report = tgr::slack(gd.instance);
        CHECK(report.k_min == 1);
        for (const tgr::PairSlack& ps : report.per_pair) CHECK(ps.slack == 1);
        check_struct_invariants(gd);
    }
    SECTION("even slack is realized at the next odd budget") {
        tgr::Gadget gd = tgr::gadget_odd_quarter(13, 2);
        CHECK(gd.k == 2);
        CHECK(gd.kappa == 3);
        CHECK(gd.instance.graph.n() == 8);
        CHECK(gd.instance.bound("2", "1") == 5);
        CHECK(gd.instance.bound("2", "8") == 8);
        CHECK(gd.designated == std::pair<std::string, std::string>{"4", "5"});
        check_struct_invariants(gd);

        tgr::Gadget odd = tgr::gadget_odd_quarter(13, 3);
        CHECK(odd.kappa == 3);
        CHECK(odd.instance.graph.n() == 8);
        CHECK(odd.designated == std::pair<std::string, std::string>{"4", "5"});
    }
    SECTION("period must cover the realized budget") {
        CHECK_THROWS_MATCHES(tgr::gadget_odd_quarter(11, 3), tgr::DomainError,
                             MessageMatches(ContainsSubstring("needs >= 13")));
        CHECK_THROWS_MATCHES(tgr::gadget_odd_quarter(5, 2), tgr::DomainError,
                             MessageMatches(ContainsSubstring("needs >= 13")));
        CHECK_THROWS_AS(tgr::gadget_odd_quarter(4, 1), tgr::DomainError);
        CHECK_THROWS_MATCHES(tgr::gadget_odd_quarter(5, 0), tgr::DomainError,
                             MessageMatches(ContainsSubstring("slack k >= 1")));
    }
}

TEST_CASE("delta4 gadget shape") {
    tgr::Gadget gd = tgr::gadget_delta4();
    CHECK(gd.family == "delta4");
    CHECK(gd.delta == 4);
    CHECK(gd.k == 0);
    CHECK(gd.kappa == 0);
    CHECK(gd.instance.graph.n() == 8);
    CHECK(gd.instance.graph.m() == 14);
    CHECK(gd.instance.bounds.size() == 10);
    CHECK(gd.instance.bound("1", "2") == 2);
    CHECK(gd.instance.bound("5", "7") == 2);
    CHECK(gd.instance.bound("8", "4") == 3);
    CHECK(gd.instance.bound("2", "5") == 3);
    CHECK(gd.instance.bound("8", "1") == 6);
    CHECK(gd.instance.bound("2", "7") == 6);
    CHECK(gd.designated == std::pair<std::string, std::string>{"4", "5"});
    check_struct_invariants(gd);

    tgr::SlackReport report = tgr::slack(gd.instance);
    CHECK(report.k_min == 0);
    int ones = 0;
    for (const tgr::PairSlack& ps : report.per_pair) {
        const std::string from = gd.instance.graph.id(ps.from);
        const std::string to = gd.instance.graph.id(ps.to);
        if ((from == "8" && to == "1") || (from == "2" && to == "7")) {
            CHECK(ps.slack == 1);
            CHECK(ps.distance == 5);
            ++ones;
        } else {
            CHECK(ps.slack == 0);
        }
    }
    CHECK(ones == 2);
}

TEST_CASE("odd comb gadget shape") {
    SECTION("period 3") {
        tgr::Gadget gd = tgr::gadget_odd_comb(3, 1);
        CHECK(gd.family == "odd-comb");
        CHECK(gd.k == 1);
        CHECK(gd.kappa == 1);
        CHECK(gd.instance.graph.n() == 14);
        CHECK(gd.instance.graph.m() == 26);
        CHECK(gd.instance.bounds.size() == 42);
        CHECK(gd.instance.bound("b0", "b6") == 9);
        CHECK(gd.instance.bound("b2", "b3") == 4);
        CHECK(gd.designated == std::pair<std::string, std::string>{"0", "b0"});
        REQUIRE(gd.main_path.size() == 7);
        CHECK(gd.main_path.front() == "0");
        CHECK(gd.main_path.back() == "6");
        CHECK(gd.tooth.at("0") == "b0");
        CHECK(gd.tooth.at("4") == "b4");
        tgr::SlackReport report = tgr::slack(gd.instance);
        CHECK(report.k_min == 1);
        for (const tgr::PairSlack& ps : report.per_pair) CHECK(ps.slack == 1);
        check_struct_invariants(gd);
    }
    SECTION("smaller requested slack keeps the same instance") {
        tgr::Gadget strong = tgr::gadget_odd_comb(3, 1);
        tgr::Gadget weak = tgr::gadget_odd_comb(3, 0);
        CHECK(weak.k == 0);
        CHECK(weak.kappa == 1);
        CHECK(weak.instance.graph.n() == strong.instance.graph.n());
        CHECK(weak.instance.bounds.size() == strong.instance.bounds.size());
    }
    SECTION("rejects out-of-range requests") {
        CHECK_THROWS_MATCHES(tgr::gadget_odd_comb(3, 2), tgr::DomainError,
                             MessageMatches(ContainsSubstring("slack at most 1")));
        CHECK_THROWS_AS(tgr::gadget_odd_comb(4, 1), tgr::DomainError);
        CHECK_THROWS_AS(tgr::gadget_odd_comb(1, 0), tgr::DomainError);
    }
}

TEST_CASE("even comb gadget shape") {
    SECTION("period 4") {
        tgr::Gadget gd = tgr::gadget_even_comb(4, 1);
        CHECK(gd.family == "even-comb");
        CHECK(gd.k == 1);
        CHECK(gd.kappa == 1);
        CHECK(gd.instance.graph.n() == 29);
        CHECK(gd.instance.graph.m() == 56);
        CHECK(gd.instance.bounds.size() == 49);
        CHECK(gd.designated == std::pair<std::string, std::string>{"0", "b0"});

        // A connector run replaces the unbarred spine at position 10.
        CHECK_FALSE(gd.instance.graph.has_vertex("10"));
        CHECK(gd.instance.graph.has_vertex("b10"));

        const std::vector<std::string> weave{
            "b0", "0",  "1",  "2",  "3",  "b3",  "b4",  "b5",  "b6", "6",  "7",
            "8",  "9",  "b9", "b10", "b11", "11", "12", "13", "14", "b14"};
        CHECK(gd.main_path == weave);

        const tgr::DiGraph& g = gd.instance.graph;
        CHECK(gd.instance.dist[g.vertex("b0")][g.vertex("b14")] == 20);
        CHECK(gd.instance.bound("b0", "b14") == 21);
        CHECK(gd.instance.bound("b0", "b1") == 4);
        CHECK(gd.instance.bound("3", "4") == 4);
        CHECK(gd.tooth.empty());
        tgr::SlackReport report = tgr::slack(gd.instance);
        CHECK(report.k_min == 1);
        check_struct_invariants(gd);
    }
    SECTION("period 6") {
        tgr::Gadget gd = tgr::gadget_even_comb(6, 3);
        CHECK(gd.kappa == 3);
        CHECK(gd.designated == std::pair<std::string, std::string>{"0", "b0"});
        CHECK(tgr::slack(gd.instance).k_min == 3);
        check_struct_invariants(gd);
    }
    SECTION("rejects out-of-range requests") {
        CHECK_THROWS_MATCHES(tgr::gadget_even_comb(4, 2), tgr::DomainError,
                             MessageMatches(ContainsSubstring("slack at most 1")));
        CHECK_THROWS_MATCHES(tgr::gadget_even_comb(6, 4), tgr::DomainError,
                             MessageMatches(ContainsSubstring("slack at most 3")));
        CHECK_THROWS_AS(tgr::gadget_even_comb(5, 1), tgr::DomainError);
        CHECK_THROWS_AS(tgr::gadget_even_comb(2, 0), tgr::DomainError);
    }
}

TEST_CASE("even comb subgadget shape") {
    tgr::Gadget gd = tgr::even_comb_subgadget(4);
    CHECK(gd.family == "even-comb-subgadget");
    CHECK(gd.k == 1);
    CHECK(gd.kappa == 1);
    CHECK(gd.instance.graph.n() == 8);
    CHECK(gd.instance.graph.m() == 14);
    CHECK(gd.instance.bounds.size() == 12);
    CHECK(gd.instance.bound("b0", "b3") == 6);
    CHECK(gd.designated == std::pair<std::string, std::string>{"0", "b0"});
    CHECK(gd.main_path == std::vector<std::string>{"0", "1", "2", "3"});
    CHECK(gd.tooth.at("2") == "b2");
    check_struct_invariants(gd);

    CHECK_THROWS_AS(tgr::even_comb_subgadget(5), tgr::DomainError);
    CHECK_THROWS_AS(tgr::even_comb_subgadget(2), tgr::DomainError);
}

TEST_CASE("select_gadget picks the right family") {
    CHECK(tgr::select_gadget(3, 0).family == "odd-k0");
    CHECK(tgr::select_gadget(5, 0).family == "odd-k0");
    CHECK(tgr::select_gadget(4, 0).family == "delta4");
    CHECK(tgr::select_gadget(6, 0).family == "even-comb");
    CHECK(tgr::select_gadget(5, 1).family == "odd-quarter");
    CHECK(tgr::select_gadget(13, 3).family == "odd-quarter");
    CHECK(tgr::select_gadget(13, 2).family == "odd-quarter");
    CHECK(tgr::select_gadget(3, 1).family == "odd-comb");
    CHECK(tgr::select_gadget(5, 3).family == "odd-comb");
    CHECK(tgr::select_gadget(7, 4).family == "odd-comb");
    CHECK(tgr::select_gadget(4, 1).family == "even-comb");
    CHECK(tgr::select_gadget(6, 2).family == "even-comb");

    CHECK_THROWS_MATCHES(tgr::select_gadget(1, 0), tgr::DomainError,
                         MessageMatches(ContainsSubstring("no splice gadget exists")));
    CHECK_THROWS_MATCHES(tgr::select_gadget(2, 0), tgr::DomainError,
                         MessageMatches(ContainsSubstring("no splice gadget exists")));
    CHECK_THROWS_MATCHES(tgr::select_gadget(3, -1), tgr::DomainError,
                         MessageMatches(ContainsSubstring("slack must be >= 0")));
    CHECK_THROWS_MATCHES(tgr::select_gadget(3, 2), tgr::DomainError,
                         MessageMatches(ContainsSubstring("always feasible")));
    CHECK_THROWS_MATCHES(tgr::select_gadget(4, 2), tgr::DomainError,
                         MessageMatches(ContainsSubstring("always feasible")));
    CHECK_THROWS_AS(tgr::select_gadget(5, 4), tgr::DomainError);
    CHECK_THROWS_AS(tgr::select_gadget(6, 4), tgr::DomainError);
}

TEST_CASE("reference labelings verify and pin the designated edge") {
    std::vector<tgr::Gadget> gadgets;
    gadgets.push_back(tgr::gadget_odd_k0(3));
    gadgets.push_back(tgr::gadget_odd_k0(5));
    gadgets.push_back(tgr::gadget_odd_k0(7));
    gadgets.push_back(tgr::gadget_odd_quarter(5, 1));
    gadgets.push_back(tgr::gadget_odd_quarter(13, 3));
    gadgets.push_back(tgr::gadget_odd_quarter(13, 2));
    gadgets.push_back(tgr::gadget_delta4());
    gadgets.push_back(tgr::gadget_odd_comb(3, 1));
    gadgets.push_back(tgr::gadget_odd_comb(5, 3));
    gadgets.push_back(tgr::gadget_even_comb(4, 1));
    gadgets.push_back(tgr::gadget_even_comb(6, 3));
    gadgets.push_back(tgr::even_comb_subgadget(4));
    gadgets.push_back(tgr::even_comb_subgadget(6));

    for (const tgr::Gadget& gd : gadgets) {
        CAPTURE(gd.family, gd.delta, gd.k);
        tgr::Labeling ref = tgr::reference_labeling(gd);
        CHECK(tgr::verify_labeling(gd.instance, ref).ok);
        auto [uv, vu] = designated_labels(gd, ref);
        CHECK(uv == vu);
        for (int s = 0; s < gd.delta; ++s)
            CHECK(tgr::verify_labeling(gd.instance, tgr::shift_labeling(ref, s)).ok);
    }

    SECTION("exact labels of the smallest family") {
        tgr::Gadget gd = tgr::gadget_odd_k0(3);
        tgr::Labeling ref = tgr::reference_labeling(gd);
        const tgr::DiGraph& g = gd.instance.graph;
        CHECK(label_of(g, ref, "1", "3") == 2);
        CHECK(label_of(g, ref, "2", "3") == 2);
        CHECK(label_of(g, ref, "3", "1") == 0);
        CHECK(label_of(g, ref, "3", "2") == 0);
        CHECK(label_of(g, ref, "3", "4") == 0);
        CHECK(label_of(g, ref, "4", "3") == 2);
        CHECK(label_of(g, ref, "4", "5") == 1);
        CHECK(label_of(g, ref, "5", "4") == 1);
    }

    SECTION("unknown family is rejected") {
        tgr::Gadget gd = tgr::gadget_odd_k0(3);
        gd.family = "bogus";
        CHECK_THROWS_MATCHES(tgr::reference_labeling(gd), tgr::DomainError,
                             MessageMatches(ContainsSubstring("unknown gadget family")));
    }
}

TEST_CASE("waiting profiles measure forced lateness along a comb") {
    tgr::Gadget gd = tgr::gadget_odd_comb(3, 1);

    SECTION("reference labeling stays within the slack budget") {
        tgr::WaitingProfile wp = tgr::waiting_profile(gd, tgr::reference_labeling(gd));
        const std::vector<int> expected{tgr::kNoProfile, 0, 0, 0, 1, 1, 1};
        CHECK(wp.w_plus == expected);
        CHECK(wp.w_minus == expected);
    }

    SECTION("the all-zero labeling blows the budget immediately") {
        const tgr::DiGraph& g = gd.instance.graph;
        tgr::Labeling zero =
            tgr::make_labeling(g, gd.delta, std::vector<int>(g.m(), 0));
        tgr::WaitingProfile wp = tgr::waiting_profile(gd, zero);
        const std::vector<int> expected{tgr::kNoProfile, 2, 4, 6, 8, 10, 12};
        CHECK(wp.w_plus == expected);
        CHECK(wp.w_minus == expected);
        CHECK(wp.w_plus[1] > gd.kappa);
    }

    SECTION("every solution keeps the profile within the budget") {
        tgr::Certificate cert = tgr::enumerate_solutions(gd.instance);
        REQUIRE(cert.status == tgr::Status::Feasible);
        for (const tgr::Labeling& sol : cert.solutions) {
            tgr::WaitingProfile wp = tgr::waiting_profile(gd, sol);
            for (std::size_t i = 1; i < wp.w_plus.size(); ++i) {
                CAPTURE(i);
                CHECK(wp.w_plus[i] <= gd.kappa);
                CHECK(wp.w_minus[i] <= gd.kappa);
            }
        }
    }

    SECTION("defined only for combs with teeth") {
        tgr::Gadget k0 = tgr::gadget_odd_k0(3);
        CHECK_THROWS_MATCHES(
            tgr::waiting_profile(k0, tgr::reference_labeling(k0)), tgr::DomainError,
            MessageMatches(ContainsSubstring("comb gadgets with teeth")));
        tgr::Gadget even = tgr::gadget_even_comb(4, 1);
        CHECK_THROWS_AS(tgr::waiting_profile(even, tgr::reference_labeling(even)),
                        tgr::DomainError);
    }
}

TEST_CASE("certification confirms the designated-edge property") {
    SECTION("odd-k0 period 3, cross-checked against the full labeling sweep") {
        tgr::Gadget gd = tgr::gadget_odd_k0(3);
        tgr::CertificationReport report = tgr::certify_gadget(gd);
        CHECK(report.certified);
        CHECK(report.status == tgr::Status::Feasible);
        CHECK(report.feasible);
        CHECK(report.designated_consistent);
        CHECK(report.shifts_complete);
        CHECK(report.solution_count == 3);
        CHECK_FALSE(report.counterexample.has_value());
        CHECK(report.reason.empty());

        // Independent ground truth: all 3^8 labelings, checked by the oracle.
        std::vector<tgr::Labeling> all = support::brute_solutions(gd.instance);
        REQUIRE(all.size() == 3);
        std::set<int> phases;
        for (const tgr::Labeling& sol : all) {
            auto [uv, vu] = designated_labels(gd, sol);
            CHECK(uv == vu);
            phases.insert(uv);
        }
        CHECK(phases == std::set<int>{0, 1, 2});
    }

    SECTION("the symmetry-broken slice certifies the same property") {
        tgr::SearchConfig cfg;
        cfg.symmetry_break = true;
        tgr::CertificationReport report = tgr::certify_gadget(tgr::gadget_odd_k0(3), cfg);
        CHECK(report.certified);
        CHECK(report.solution_count == 1);
    }

    SECTION("larger families certify with pinned solution counts") {
        tgr::CertificationReport k0 = tgr::certify_gadget(tgr::gadget_odd_k0(5));
        CHECK(k0.certified);
        CHECK(k0.solution_count == 5);

        tgr::CertificationReport quarter =
            tgr::certify_gadget(tgr::gadget_odd_quarter(5, 1));
        CHECK(quarter.certified);
        CHECK(quarter.solution_count == 3125);

        tgr::CertificationReport d4 = tgr::certify_gadget(tgr::gadget_delta4());
        CHECK(d4.certified);
        CHECK(d4.solution_count == 64);

        tgr::CertificationReport comb = tgr::certify_gadget(tgr::gadget_odd_comb(3, 1));
        CHECK(comb.certified);
        CHECK(comb.solution_count == 6);
    }

    SECTION("budget exhaustion reports Unknown") {
        tgr::SearchConfig cfg;
        cfg.max_nodes = 5;
        tgr::CertificationReport report = tgr::certify_gadget(tgr::gadget_odd_k0(5), cfg);
        CHECK(report.status == tgr::Status::Unknown);
        CHECK_FALSE(report.certified);
        CHECK(report.nodes <= 5);
        CHECK_THAT(report.reason, ContainsSubstring("budget"));
    }
}

TEST_CASE("loosened bounds break certification exactly where the coupling lives") {
    SECTION("delta4 loses designated consistency through a long bound") {
        tgr::Gadget gd = tgr::gadget_delta4();
        for (const auto& [from, to] : {std::pair<std::string, std::string>{"8", "1"},
                                       std::pair<std::string, std::string>{"2", "7"}}) {
            CAPTURE(from, to);
            tgr::Gadget bad = loosened(gd, from, to, 1);
            tgr::CertificationReport report = tgr::certify_gadget(bad);
            CHECK_FALSE(report.certified);
            CHECK(report.status == tgr::Status::Infeasible);
            CHECK(report.feasible);
            CHECK_FALSE(report.designated_consistent);
            CHECK(report.solution_count == 128);
            CHECK_THAT(report.reason, ContainsSubstring("differently"));
            REQUIRE(report.counterexample.has_value());
            CHECK(tgr::verify_labeling(bad.instance, *report.counterexample).ok);
            auto [uv, vu] = designated_labels(bad, *report.counterexample);
            CHECK(uv != vu);
        }
    }

    SECTION("a leaf-pair bound only widens the solution set") {
        tgr::Gadget bad = loosened(tgr::gadget_delta4(), "1", "2", 1);
        tgr::CertificationReport report = tgr::certify_gadget(bad);
        CHECK(report.certified);
        CHECK(report.solution_count == 128);
    }

    SECTION("odd-k0 period 3 is rigid against every single loosening") {
        tgr::Gadget gd = tgr::gadget_odd_k0(3);
        for (auto [u, v] : gd.instance.bounded_pairs()) {
            std::string from = gd.instance.graph.id(u), to = gd.instance.graph.id(v);
            CAPTURE(from, to);
            tgr::CertificationReport report = tgr::certify_gadget(loosened(gd, from, to, 1));
            CHECK(report.certified);
            CHECK(report.solution_count == 3);
        }
    }
}

TEST_CASE("the single-subgadget claim") {
    SECTION("holds at period 4") {
        tgr::ClaimReport report =
            tgr::certify_even_subgadget_claim(tgr::even_comb_subgadget(4));
        CHECK(report.holds);
        CHECK(report.status == tgr::Status::Feasible);
        CHECK(report.solution_count == 20);
        CHECK_FALSE(report.counterexample.has_value());
    }

    SECTION("is stated only for that family") {
        CHECK_THROWS_MATCHES(
            tgr::certify_even_subgadget_claim(tgr::gadget_odd_k0(3)), tgr::DomainError,
            MessageMatches(ContainsSubstring("single even-comb subgadgets")));
    }

    SECTION("budget exhaustion reports Unknown") {
        tgr::SearchConfig cfg;
        cfg.max_nodes = 5;
        tgr::ClaimReport report =
            tgr::certify_even_subgadget_claim(tgr::even_comb_subgadget(4), cfg);
        CHECK(report.status == tgr::Status::Unknown);
        CHECK_FALSE(report.holds);
    }
}
