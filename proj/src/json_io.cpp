#include "strebel/json_io.hpp"

namespace strebel {

Json to_json(const RibbonGraph& g) {
    Json j;
    j["sigma"] = g.vertices;
    Json alpha = Json::array();
    for (auto& e : g.edges) alpha.push_back(e);
    j["alpha"] = alpha;
    if (!g.lengths.empty()) {
        Json l = Json::object();
        for (size_t k = 0; k < g.lengths.size(); ++k) l[std::to_string(k)] = to_string(g.lengths[k]);
        j["lengths"] = l;
    }
    return j;
}

RibbonGraph ribbon_from_json(const Json& j) {
    try {
        Cycles sigma = j.at("sigma").get<Cycles>();
        Cycles alpha = j.at("alpha").get<Cycles>();
        int n = 0;
        for (auto& c : sigma) n += static_cast<int>(c.size());
        for (auto& c : alpha)
            if (c.size() != 2) throw MalformedGraph("alpha entries must be pairs");
        RibbonGraph g = build(from_cycles(sigma, n), from_cycles(alpha, n));
        if (!j.contains("lengths")) return g;
        // lengths are keyed by the position of the pair in "alpha"
        std::vector<Q> lens(g.E);
        const Json& l = j.at("lengths");
        if (static_cast<int>(l.size()) != g.E) throw MalformedGraph("one length per edge expected");
        for (size_t k = 0; k < alpha.size(); ++k) {
            const Json& v = l.at(std::to_string(k));
            lens[g.edge_of[alpha[k][0]]] = v.is_string() ? parse_rational(v.get<std::string>()) : parse_rational(v.dump());
        }
        return build(g.sigma, g.alpha, lens);
    } catch (const Json::exception& e) {
        throw MalformedGraph(std::string("bad graph JSON: ") + e.what());
    }
}

Json to_json(cd z) { return Json{{"re", z.real()}, {"im", z.imag()}}; }
cd cd_from_json(const Json& j) { return {j.at("re").get<double>(), j.at("im").get<double>()}; }

Json to_json(const ExactRatFunc& f) { return Json{{"num", coeff_strings(f.num())}, {"den", coeff_strings(f.den())}}; }

ExactRatFunc map_from_json(const Json& j) {
    try {
        auto num = parse_poly(j.at("num").get<std::vector<std::string>>());
        auto den = j.contains("den") ? parse_poly(j.at("den").get<std::vector<std::string>>()) : ExactPoly(GaussRat(1));
        if (den.zero()) throw ParseError("map denominator is zero");
        return ExactRatFunc(num, den);
    } catch (const Json::exception& e) {
        throw ParseError(std::string("bad map JSON: ") + e.what());
    }
}

Json to_json(const Passport& p) {
    return Json{{"degree", p.degree}, {"over0", p.over0}, {"over1", p.over1}, {"overInf", p.overInf}, {"belyi", p.is_belyi}};
}

Json to_json(const DessinPassport& p) { return Json{{"black", p.black}, {"white", p.white}, {"faces", p.faces}}; }

Json to_json(const ZeroClassification& c) {
    Json zs = Json::array();
    for (auto& z : c.zeros) {
        Json e{{"approx", to_json(cd(to_double(z.approx.re), to_double(z.approx.im)))}, {"multiplicity", z.multiplicity}};
        if (z.exact) e["exact"] = to_string(*z.exact);
        zs.push_back(e);
    }
    return Json{{"partition", to_string(c.partition)}, {"zeros", zs}, {"discriminant", to_string(c.discriminant)}};
}

Json to_json(const Divisor& d) {
    Json es = Json::array();
    for (auto& e : d.entries) {
        Json x{{"kind", e.is_zero ? "zero" : "pole"},
               {"weight", to_string(e.weight)},
               {"angle_over_pi", to_string(e.angle_over_pi)}};
        x["point"] = e.at_infinity ? Json("inf") : to_json(cd(to_double(e.point.re), to_double(e.point.im)));
        es.push_back(x);
    }
    return Json{{"entries", es}, {"degree", to_string(d.degree())}};
}

Json to_json(const QuadDiff& q) {
    Json poles = Json::array();
    for (auto& p : q.poles) poles.push_back(to_string(p));
    return Json{{"numerator", coeff_strings(q.R.num())}, {"denominator", coeff_strings(q.R.den())}, {"poles", poles}};
}

Json to_json(const PeriodSet& p) {
    Json zs = Json::array(), ps = Json::array();
    for (cd z : p.zeros) zs.push_back(to_json(z));
    for (size_t k = 0; k < p.P.size(); ++k)
        ps.push_back(Json{{"pair", {kZeroPairs[k].first, kZeroPairs[k].second}}, {"period", to_json(p.P[k])}});
    return Json{{"zeros", zs}, {"periods", ps}, {"residual", p.residual}};
}

Json to_json(const FindMuResult& r) {
    return Json{{"mu", to_json(r.mu)},
                {"residual", r.residual},
                {"iterations", r.iterations},
                {"homotopy_steps", r.homotopy_steps},
                {"periods", to_json(r.periods)}};
}

Json to_json(const EdgeLengths& e) {
    Json tr = Json::array();
    for (auto& t : e.traces) tr.push_back(Json{{"from", t.from}, {"to", t.to}, {"length", t.length}});
    Json zs = Json::array();
    for (cd z : e.zeros) zs.push_back(to_json(z));
    return Json{{"zeros", zs}, {"traces", tr}, {"pair_lengths", e.pair}, {"abc", e.abc}, {"sum", e.sum()}};
}

Json to_json(const TrajectoryTrace& t, bool with_points) {
    Json j{{"length", t.length}, {"closed", t.closed}, {"closure_gap", t.closure_gap}, {"hit", t.hit}, {"steps", t.points.size()}};
    if (!t.diagnostic.empty()) j["diagnostic"] = t.diagnostic;
    if (with_points) {
        Json pts = Json::array();
        for (cd z : t.points) pts.push_back({z.real(), z.imag()});
        j["points"] = pts;
    }
    return j;
}

Json to_json(const FeasibilityResult& f) {
    Json j{{"status", to_string(f.status)}, {"dimension", f.dimension}};
    auto qs = [](const std::vector<Q>& v) {
        std::vector<std::string> s;
        for (auto& x : v) s.push_back(to_string(x));
        return s;
    };
    if (!f.particular.empty()) j["particular"] = qs(f.particular);
    Json b = Json::array();
    for (auto& v : f.basis) b.push_back(qs(v));
    j["basis"] = b;
    if (f.witness) j["witness"] = qs(*f.witness);
    return j;
}

}  // namespace strebel
