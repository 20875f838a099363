#include <algorithm>
#include <functional>
#include <numeric>
#include <random>

#include "doctest.h"
#include "strebel/dessins.hpp"
#include "strebel/json_io.hpp"
#include "strebel/ribbon.hpp"

using namespace strebel;

namespace {

// g relabelled by pi: h -> pi(h)
RibbonGraph relabel(const RibbonGraph& g, const Perm& pi) {
    Perm pinv = inverse(pi);
    Perm s = compose(pi, compose(g.sigma, pinv)), a = compose(pi, compose(g.alpha, pinv));
    std::vector<Q> lengths;
    if (!g.lengths.empty()) {
        lengths.resize(g.E);
        RibbonGraph tmp = build(s, a);
        for (int h = 0; h < g.half_edges(); ++h) lengths[tmp.edge_of[pi[h]]] = g.lengths[g.edge_of[h]];
    }
    return build(s, a, lengths);
}

// all fixed-point-free involutions on n points
void involutions(std::vector<int>& a, std::vector<Perm>& out) {
    auto it = std::find(a.begin(), a.end(), -1);
    if (it == a.end()) {
        out.push_back(a);
        return;
    }
    int i = static_cast<int>(it - a.begin());
    for (int j = i + 1; j < static_cast<int>(a.size()); ++j)
        if (a[j] == -1) {
            a[i] = j, a[j] = i;
            involutions(a, out);
            a[i] = a[j] = -1;
        }
}

bool connected(const Perm& s, const Perm& a) {
    int n = static_cast<int>(s.size());
    std::vector<int> seen(n, 0), stack{0};
    seen[0] = 1;
    while (!stack.empty()) {
        int h = stack.back();
        stack.pop_back();
        for (int k : {s[h], a[h]})
            if (!seen[k]) seen[k] = 1, stack.push_back(k);
    }
    return std::count(seen.begin(), seen.end(), 1) == n;
}

}  // namespace

TEST_CASE("catalog graphs") {
    RibbonGraph k4 = catalog_graph("k4");
    CHECK(k4.V == 4);
    CHECK(k4.E == 6);
    CHECK(k4.F == 4);
    CHECK(k4.genus == 0);
    CHECK(!k4.has_loop());
    CHECK(catalog_graph("theta4").F == 4);
    CHECK(automorphisms(catalog_graph("theta3")).order == 6);
    CHECK_THROWS(catalog_graph("nope"));
}

TEST_CASE("build rejects malformed permutations") {
    CHECK_THROWS_AS(build({1, 0}, {0, 1}), MalformedGraph);      // alpha has fixed points
    CHECK_THROWS_AS(build({0, 0}, {1, 0}), MalformedGraph);      // sigma not a permutation
    CHECK_THROWS_AS(build({1, 0, 3, 2}, {1, 0, 3, 2}), MalformedGraph);  // disconnected
}

TEST_CASE("enumeration count matches the mass formula") {
    // sum over classes of 1/|Aut| = #(alpha giving connected genus-0 graphs) / |C(sigma)|
    Perm sigma = from_cycles({{0, 1, 2}, {3, 4, 5}}, 6);
    std::vector<int> a(6, -1);
    std::vector<Perm> all;
    involutions(a, all);
    CHECK(all.size() == 15);
    int good = 0;
    for (auto& alpha : all) {
        if (!connected(sigma, alpha)) continue;
        if (build(sigma, alpha).genus == 0) ++good;
    }
    Q mass(0);
    for (auto& g : enumerate({3, 3}, EnumerateOptions{})) mass += Q(1, automorphisms(g).order);
    CHECK(mass == Q(good, 18));  // centralizer of a (3,3) permutation has order 3*3*2
}

TEST_CASE("desk-scale enumeration") {
    EnumerateOptions o;
    o.faces = 4;
    o.loopless = true;
    CHECK(enumerate({4, 4}, o).size() == 1);
    auto g3 = enumerate({3, 3, 3, 3}, o);
    CHECK(g3.size() == 2);
    int feasible = 0;
    for (auto& g : g3) feasible += metric_feasible(g, {1, 1, 1, 1}).status != Feasibility::Infeasible;
    CHECK(feasible == 1);
    o.loopless = false;
    auto with_loops = enumerate({3, 3, 3, 3}, o);
    CHECK(with_loops.size() > 2);
    feasible = 0;
    for (auto& g : with_loops) feasible += metric_feasible(g, {1, 1, 1, 1}).status != Feasibility::Infeasible;
    CHECK(feasible == 1);
}

TEST_CASE("canonical form is a relabelling invariant") {
    std::mt19937 rng(5);
    for (auto name : {"k4", "theta4", "theta3", "fake"}) {
        RibbonGraph g = catalog_graph(name);
        Perm pi(g.half_edges());
        std::iota(pi.begin(), pi.end(), 0);
        for (int k = 0; k < 5; ++k) {
            std::shuffle(pi.begin(), pi.end(), rng);
            RibbonGraph h = relabel(g, pi);
            CHECK(canonical_form(h) == canonical_form(g));
            CHECK(isomorphism(g, h));
        }
    }
}

TEST_CASE("metric feasibility") {
    auto k4 = metric_feasible(catalog_graph("k4"), {1, 1, 1, 1});
    CHECK(k4.status == Feasibility::Family);
    CHECK(k4.dimension == 2);
    REQUIRE(k4.witness);
    RibbonGraph w = build(catalog_graph("k4").sigma, catalog_graph("k4").alpha, *k4.witness);
    for (auto& f : w.face_lengths()) CHECK(f == 1);
    CHECK(metric_feasible(catalog_graph("theta4"), {1, 1, 1, 1}).dimension == 1);
    CHECK(metric_feasible(catalog_graph("fake"), {1, 1, 1, 1}).status == Feasibility::Infeasible);
}

TEST_CASE("automorphisms of K4 with pair labels") {
    auto a = automorphisms(catalog_graph("k4"), k4_pair_labels());
    CHECK(a.order == 12);
    CHECK(a.face_fixing_order == 1);
    CHECK(a.label_preserving_order == 4);
    CHECK(a.label_action_order == 3);
}

TEST_CASE("smoothing bivalent vertices") {
    RibbonGraph g = build({1, 0, 2, 3}, {2, 3, 0, 1}, {Q(1), Q(2)});
    RibbonGraph s = smooth_bivalent(g);
    CHECK(s.E == 1);
    CHECK(s.lengths[0] == 3);
}

TEST_CASE("graph JSON round trip") {
    for (auto g : {k4_metric(Q(1, 3), Q(1, 6), Q(1, 2)), catalog_graph("theta4")}) {
        Json j = to_json(g);
        RibbonGraph h = ribbon_from_json(Json::parse(j.dump()));
        CHECK(h.sigma == g.sigma);
        CHECK(h.alpha == g.alpha);
        CHECK(h.lengths == g.lengths);
        CHECK(to_json(h) == j);
    }
    CHECK_THROWS_AS(ribbon_from_json(Json::parse(R"({"sigma": [[0,1]], "alpha": [[0]]})")), MalformedGraph);
    CHECK_THROWS_AS(ribbon_from_json(Json::parse(R"({"alpha": []})")), MalformedGraph);
}

TEST_CASE("dessins from metric K4") {
    MetricDessin m = dessin_from_metric(Q(1, 2), Q(1, 4), Q(1, 4));
    CHECK(m.dessin.degree() == 8);
    DessinPassport p = passport(m.dessin);
    CHECK(genus(m.dessin) == 0);
    CHECK(compatible(p, passport(catalog("deg8"))));
    MetricDessin t = dessin_from_metric(Q(1, 3), Q(1, 3), Q(1, 3));
    CHECK(t.dessin.degree() == 12);
    CHECK(compatible(passport(t.dessin), passport(catalog("deg12theta"))));
}

TEST_CASE("dessin degree equals the minimal degree for d <= 12") {
    for (long d = 3; d <= 12; ++d)
        for (long i = 1; i < d; ++i)
            for (long j = 1; i + j < d; ++j) {
                long k = d - i - j;
                if (std::gcd(std::gcd(i, j), k) != 1) continue;
                MetricDessin m = dessin_from_metric(Q(i, d), Q(j, d), Q(k, d));
                CHECK(m.dessin.degree() == min_degree(Q(i, d), Q(j, d), Q(k, d)).min_degree);
            }
}

TEST_CASE("degree-6 dessins and their metric graphs") {
    for (auto [d, gamma] : {std::pair{"D1", "Gamma1"}, {"D2", "Gamma2"}, {"D3", "Gamma3"}}) {
        DualResult r = dual_graph_correspondence(catalog_dessin(d));
        CHECK(r.matches == gamma);
        CHECK(r.graph.E == 6);
        for (auto& f : r.graph.face_lengths()) CHECK(f == 1);
    }
}
