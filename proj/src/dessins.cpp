#include "strebel/dessins.hpp"

#include <algorithm>
#include <numeric>

namespace strebel {

Dessin make_dessin(Perm s0, Perm s1) {
    if (s0.empty() || s0.size() != s1.size()) throw std::invalid_argument("dessin permutations must have equal nonzero size");
    // as_ribbon checks that both are permutations and that the group is transitive
    Dessin d{std::move(s0), std::move(s1)};
    as_ribbon(d);
    return d;
}

DessinPassport passport(const Dessin& d) {
    DessinPassport p{cycle_type(d.sigma0), cycle_type(d.sigma1), cycle_type(d.faces())};
    auto sum = [](const std::vector<int>& v) { return std::accumulate(v.begin(), v.end(), 0); };
    if (sum(p.black) != d.degree() || sum(p.white) != d.degree() || sum(p.faces) != d.degree())
        throw std::logic_error("dessin cycle types do not sum to the degree");
    return p;
}

std::string to_string(const DessinPassport& p) {
    return to_string(p.black) + "/" + to_string(p.white) + "/" + to_string(p.faces);
}

RibbonGraph as_ribbon(const Dessin& d) {
    int n = d.degree();
    Perm s(2 * n), a(2 * n);
    for (int k = 0; k < n; ++k) {
        s[2 * k] = 2 * d.sigma0.at(k);
        s[2 * k + 1] = 2 * d.sigma1.at(k) + 1;
        a[2 * k] = 2 * k + 1;
        a[2 * k + 1] = 2 * k;
    }
    return build(s, a);
}

int genus(const Dessin& d) { return as_ribbon(d).genus; }

std::optional<Dessin> bicolour(const RibbonGraph& g) {
    std::vector<int> colour(g.V, -1);
    colour[g.vertex_of[0]] = 0;
    std::vector<int> stack{g.vertex_of[0]};
    while (!stack.empty()) {
        int v = stack.back();
        stack.pop_back();
        for (int h : g.vertices[v]) {
            int w = g.vertex_of[g.alpha[h]];
            if (colour[w] < 0) {
                colour[w] = 1 - colour[v];
                stack.push_back(w);
            } else if (colour[w] == colour[v]) {
                return std::nullopt;
            }
        }
    }
    Perm s0(g.E), s1(g.E);
    for (int e = 0; e < g.E; ++e) {
        int h = g.edges[e][0];
        int hb = colour[g.vertex_of[h]] == 0 ? h : g.alpha[h];
        int hw = g.alpha[hb];
        s0[e] = g.edge_of[g.sigma[hb]];
        s1[e] = g.edge_of[g.sigma[hw]];
    }
    return make_dessin(s0, s1);
}

bool compatible(const DessinPassport& d, const Passport& map) {
    if (d.faces != map.over1) return false;
    return (d.black == map.over0 && d.white == map.overInf) || (d.black == map.overInf && d.white == map.over0);
}

namespace {

// cut edge e into counts[e] equal pieces; original half-edges keep their indices
RibbonGraph subdivide(const RibbonGraph& g, const std::vector<long>& counts) {
    Perm s = g.sigma, a = g.alpha;
    std::vector<std::pair<int, int>> pairs;  // alpha pairs
    std::vector<Q> pair_len;
    for (int e = 0; e < g.E; ++e) {
        int h = g.edges[e][0], t = g.alpha[h];
        long m = counts[e];
        Q piece = g.lengths.empty() ? Q(1) : g.lengths[e] / Q(m);
        int prev = h;
        for (long j = 1; j < m; ++j) {
            int x = static_cast<int>(s.size()), y = x + 1;
            s.push_back(y);
            s.push_back(x);
            a.push_back(-1);
            a.push_back(-1);
            pairs.push_back({prev, x});
            pair_len.push_back(piece);
            prev = y;
        }
        pairs.push_back({prev, t});
        pair_len.push_back(piece);
    }
    for (auto [u, v] : pairs) {
        a[u] = v;
        a[v] = u;
    }
    RibbonGraph tmp = build(s, a);
    std::vector<Q> lens(tmp.E);
    for (size_t k = 0; k < pairs.size(); ++k) lens[tmp.edge_of[pairs[k].first]] = pair_len[k];
    return build(tmp.sigma, tmp.alpha, lens);
}

}  // namespace

MetricDessin dessin_from_metric(const Q& a, const Q& b, const Q& c) {
    MinDegreeResult md = min_degree(a, b, c);
    MetricDessin r;
    r.d = md.d;
    r.even = md.even;
    RibbonGraph k4 = k4_metric(a, b, c);
    long mult = r.even ? r.d : 2 * r.d;
    for (const Q& p : k4.lengths) {
        Q n = p * Q(mult);
        if (bmp::denominator(n) != 1) throw std::logic_error("segment count is not an integer");
        r.segments.push_back(bmp::numerator(n).convert_to<long>());
    }
    r.subdivided = subdivide(k4, r.segments);
    auto d = bicolour(r.subdivided);
    if (!d) throw std::logic_error("subdivided K4 is not bipartite");
    r.dessin = *d;
    if (r.dessin.degree() != md.min_degree || genus(r.dessin) != 0)
        throw std::logic_error("dessin degree or genus mismatch");
    return r;
}

Dessin catalog_dessin(const std::string& name) {
    // vertices b1, b2 (black), w0, w1, w2 (white); each edge runs black -> white
    enum { b1, b2, w0, w1, w2 };
    std::vector<EmbeddedEdge> e;
    if (name == "D1")
        e = {{b1, w0, 0, 0}, {b1, w2, 180, 90}, {b1, w0, 270, 90}, {b2, w1, 0, 180}, {b2, w0, 90, 270}, {b2, w2, 180, 270}};
    else if (name == "D2")
        e = {{b1, w2, 250, 40}, {b1, w2, 220, 70}, {b1, w0, 270, 90}, {b2, w1, 0, 180}, {b2, w0, 90, 270}, {b2, w2, 125, 305}};
    else if (name == "D3")
        e = {{b1, w2, 0, 0}, {b1, w2, 180, 180}, {b1, w0, 270, 90}, {b2, w0, 0, 0}, {b2, w1, 59, 239}, {b2, w0, 90, 270}};
    else
        throw std::invalid_argument("unknown dessin '" + name + "'");
    auto d = bicolour(from_embedding(5, e));
    if (!d) throw std::logic_error("catalog dessin is not bipartite");
    return *d;
}

RibbonGraph catalog_gamma(const std::string& name) {
    if (name == "Gamma1") return k4_metric(Q(1) / 3, Q(1) / 6, Q(1) / 2);
    if (name == "Gamma2") return k4_metric(Q(1) / 3, Q(1) / 2, Q(1) / 6);
    if (name == "Gamma3") return k4_metric(Q(2) / 3, Q(1) / 6, Q(1) / 6);
    throw std::invalid_argument("unknown graph '" + name + "'");
}

DualResult dual_graph_correspondence(const Dessin& ds) {
    int n = ds.degree();
    DessinPassport pp = passport(ds);
    if (n != 6 || pp.black != std::vector<int>{3, 3} || pp.white != std::vector<int>{1, 2, 3})
        throw std::invalid_argument("unsupported dessin: expected black (3,3) and white (1,2,3) in degree 6");
    // rotations of the dual picture around the preimages of 0 and infinity
    Perm r0 = ds.sigma1;
    Perm rinf = compose(inverse(ds.sigma1), inverse(ds.sigma0));
    Perm face = compose(rinf, r0);
    std::vector<int> c0(n, 0);
    for (int k = 0; k < n; ++k) c0[k] = r0[k] == k;
    Cycles inf_cycles = cycles_of(rinf), face_cycles = cycles_of(face);
    int singles = 0;
    for (auto& cy : inf_cycles) singles += cy.size() == 1;
    if (singles != 1) throw std::invalid_argument("unsupported dessin: expected one simple pole over infinity");

    // the double cover branches over the univalent white vertex and the simple pole only
    std::optional<std::vector<int>> cinf;
    for (int mask = 0; mask < (1 << n) && !cinf; ++mask) {
        std::vector<int> c(n);
        for (int k = 0; k < n; ++k) c[k] = (mask >> k) & 1;
        bool ok = true;
        for (auto& cy : inf_cycles) {
            int par = 0;
            for (int k : cy) par ^= c[k];
            ok = ok && par == (cy.size() == 1 ? 1 : 0);
        }
        for (auto& cy : face_cycles) {
            int par = 0;
            for (int k : cy) par ^= c0[k] ^ c[r0[k]];
            ok = ok && par == 0;
        }
        if (ok) cinf = c;
    }
    if (!cinf) throw std::logic_error("no consistent double cover");

    // lifted dart (k, s) has index 2k+s; segment half-edges 2i (white end), 2i+1 (pole end)
    int m = 2 * n;
    Perm s(2 * m), a(2 * m);
    for (int k = 0; k < n; ++k)
        for (int sh = 0; sh < 2; ++sh) {
            int i = 2 * k + sh;
            int i0 = 2 * r0[k] + (sh ^ c0[k]);
            int iinf = 2 * rinf[k] + (sh ^ (*cinf)[k]);
            s[2 * i] = 2 * i0;
            s[2 * i + 1] = 2 * iinf + 1;
            a[2 * i] = 2 * i + 1;
            a[2 * i + 1] = 2 * i;
        }
    DualResult r;
    r.lifted = build(s, a, std::vector<Q>(m, Q(1) / 6));
    r.graph = smooth_bivalent(r.lifted);
    RibbonGraph mir = mirror(r.graph);
    for (std::string g : {"Gamma1", "Gamma2", "Gamma3"}) {
        RibbonGraph gam = catalog_gamma(g);
        if (r.matches.empty() && isomorphism(r.graph, gam)) r.matches = g;
        if (r.mirror_matches.empty() && isomorphism(mir, gam)) r.mirror_matches = g;
    }
    return r;
}

}  // namespace strebel
