#pragma once
// Dessins d'enfants as permutation pairs on darts (edges of the bipartite graph),
// the metric-to-dessin subdivision and the x^2 dual construction for degree-6 maps.

#include <string>
#include <vector>

#include "strebel/belyi.hpp"
#include "strebel/ribbon.hpp"

namespace strebel {

struct Dessin {
    Perm sigma0, sigma1;  // counter-clockwise rotation at black / white vertices
    int degree() const { return static_cast<int>(sigma0.size()); }
    Perm faces() const { return compose(sigma0, sigma1); }
};
// validates transitivity and sizes
Dessin make_dessin(Perm sigma0, Perm sigma1);

struct DessinPassport {
    std::vector<int> black, white, faces;
};
DessinPassport passport(const Dessin& d);
std::string to_string(const DessinPassport& p);
int genus(const Dessin& d);

// the bipartite graph as a ribbon graph; darts become edges, black vertices first
RibbonGraph as_ribbon(const Dessin& d);
// proper 2-colouring of a ribbon graph; fails on odd cycles
std::optional<Dessin> bicolour(const RibbonGraph& g);

// faces <-> over 1, {black, white} <-> {over 0, over inf}
bool compatible(const DessinPassport& d, const Passport& map);

struct MetricDessin {
    Dessin dessin;
    RibbonGraph subdivided;  // K4 with each edge cut into unit segments
    long d = 0;
    bool even = false;
    std::vector<long> segments;  // per K4 edge, catalog order
};
MetricDessin dessin_from_metric(const Q& a, const Q& b, const Q& c);

// D1, D2, D3: the degree-6 candidates (black over 1 with (3,3), white over 0 with (1,2,3))
Dessin catalog_dessin(const std::string& name);
// Gamma1, Gamma2, Gamma3 as metric K4 graphs
RibbonGraph catalog_gamma(const std::string& name);

struct DualResult {
    RibbonGraph lifted;    // 12 segments of length 1/6 before smoothing
    RibbonGraph graph;     // after smoothing bivalent vertices
    std::string matches;   // Gamma name with an orientation-preserving metric isomorphism, or ""
    std::string mirror_matches;
};
DualResult dual_graph_correspondence(const Dessin& d);

}  // namespace strebel
