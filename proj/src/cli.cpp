#include "strebel/cli.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <functional>
#include <sstream>

#include "CLI11.hpp"
#include "strebel/belyi.hpp"
#include "strebel/dessins.hpp"
#include "strebel/json_io.hpp"
#include "strebel/periods.hpp"
#include "strebel/qdiff.hpp"
#include "strebel/ribbon.hpp"
#include "strebel/suite.hpp"
#include "strebel/svg.hpp"
#include "strebel/trajectory.hpp"

namespace strebel::cli {

namespace {

// bad input that is only detected after argument parsing
struct UsageError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

// solver tolerances below this are not reachable in double precision
constexpr double kDoubleFloor = 1e-14;

struct RunConfig {
    unsigned bits = kDefaultBits;
    double tol = 1e-11;
    bool json = false;
    std::string suite = "all";
};

std::string num(double v) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.15g", v);
    return buf;
}

std::string num(cd z) {
    std::string s = num(z.real());
    double im = z.imag();
    return s + (std::signbit(im) ? "-" : "+") + num(std::abs(im)) + "*i";
}

std::string num(const BigComplex& z) { return num(cd(to_double(z.re), to_double(z.im))); }

cd parse_cd(const std::string& s) {
    GaussRat g = parse_gauss(s);
    return {to_double(g.re), to_double(g.im)};
}

std::string read_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw UsageError("cannot open '" + path + "'");
    std::stringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

void write_file(const std::string& path, const std::string& text) {
    std::ofstream o(path, std::ios::binary);
    if (!o || !(o << text)) throw std::runtime_error("cannot write '" + path + "'");
}

Json parse_json(const std::string& text) {
    try {
        return Json::parse(text);
    } catch (const Json::exception& e) {
        throw UsageError(std::string("invalid JSON: ") + e.what());
    }
}

// catalog name, inline JSON or a JSON file
Json load_json_arg(const std::string& arg) {
    if (!arg.empty() && arg.front() == '{') return parse_json(arg);
    return parse_json(read_file(arg));
}

RationalMap load_map(const std::string& arg) {
    auto names = catalog_names();
    if (std::find(names.begin(), names.end(), arg) != names.end()) return catalog(arg);
    return map_from_json(load_json_arg(arg));
}

RibbonGraph load_graph(const std::string& arg) {
    auto names = catalog_graph_names();
    if (std::find(names.begin(), names.end(), arg) != names.end()) return catalog_graph(arg);
    if (arg.rfind("Gamma", 0) == 0) return catalog_gamma(arg);
    return ribbon_from_json(load_json_arg(arg));
}

std::vector<Q> parse_rationals(const std::string& csv) {
    std::vector<Q> v;
    std::stringstream ss(csv);
    std::string item;
    while (std::getline(ss, item, ',')) v.push_back(parse_rational(item));
    return v;
}

std::string join(const std::vector<int>& v) {
    std::string s;
    for (size_t i = 0; i < v.size(); ++i) s += (i ? "," : "") + std::to_string(v[i]);
    return s;
}

std::string cycles_text(const Cycles& c) {
    std::string s;
    for (auto& cyc : c) {
        s += "(";
        for (size_t i = 0; i < cyc.size(); ++i) s += (i ? " " : "") + std::to_string(cyc[i]);
        s += ")";
    }
    return s;
}

void print_graph(std::ostream& out, const RibbonGraph& g) {
    out << "sigma " << cycles_text(g.vertices) << "\nalpha " << cycles_text(g.edges) << "\nfaces "
        << cycles_text(g.faces) << "\nV " << g.V << " E " << g.E << " F " << g.F << " genus " << g.genus << "\n";
    if (!g.lengths.empty()) {
        out << "lengths";
        for (auto& l : g.lengths) out << " " << to_string(l);
        out << "\n";
    }
}

Field trace_field(const std::string& map, const std::string& lambda, const std::string& mu) {
    if (map == "q0p") return q0p_field();
    if (map == "q0") return q0_field();
    if (map == "family") {
        if (lambda.empty() || mu.empty()) throw UsageError("--map family needs --lambda and --mu");
        return family_field(parse_cd(lambda), parse_cd(mu));
    }
    throw UsageError("unknown map '" + map + "' (q0p, q0, family)");
}

SvgScene scene_for(const Field& f) {
    SvgScene s;
    for (size_t k = 0; k < f.a.size(); ++k) (f.m[k] > 0 ? s.dots : s.circles).push_back(f.a[k]);
    return s;
}

}  // namespace

int run(const std::vector<std::string>& args_in, std::ostream& out, std::ostream& err) {
    RunConfig cfg;
    std::function<int()> action;
    CLI::App app{"Strebel differentials on the four-punctured sphere", "strebel"};
    app.require_subcommand(1);
    app.set_help_all_flag("--help-all", "Show help for all subcommands");

    // --- quadratic differentials -------------------------------------------
    std::string lambda, mu, map = "", qname = "q0";

    auto* classify = app.add_subcommand("classify", "Zero configuration of q_{lambda,mu}");
    classify->add_option("--lambda", lambda, "lambda in Q(i)")->required();
    classify->add_option("--mu", mu, "mu in Q(i)")->required();
    classify->add_flag("--json", cfg.json);
    classify->callback([&] {
        action = [&] {
            GaussRat l = parse_gauss(lambda), m = parse_gauss(mu);
            auto c = classify_zeros(l, m);
            if (cfg.json) {
                Json j = to_json(c);
                j["lambda"] = to_string(l);
                j["mu"] = to_string(m);
                out << j.dump(2) << "\n";
                return 0;
            }
            out << "partition " << to_string(c.partition) << "\ndiscriminant " << to_string(c.discriminant) << "\n";
            for (auto& z : c.zeros)
                out << "zero " << (z.exact ? to_string(*z.exact) : num(z.approx)) << " multiplicity "
                    << z.multiplicity << "\n";
            return 0;
        };
    });

    std::string mol;
    auto* mol_cmd = app.add_subcommand("mu-of-lambda", "Closed-form mu with two double zeros, real lambda");
    mol_cmd->add_option("lambda", mol, "real rational lambda")->required();
    mol_cmd->callback([&] {
        action = [&] {
            out << to_string(mu_double_zero(parse_gauss(mol))) << "\n";
            return 0;
        };
    });

    auto* divisor = app.add_subcommand("divisor", "Divisor of the cone spherical metric of q_{lambda,mu}");
    divisor->add_option("--lambda", lambda)->required();
    divisor->add_option("--mu", mu)->required();
    divisor->add_flag("--json", cfg.json);
    divisor->callback([&] {
        action = [&] {
            Divisor d = divisor_of(family(parse_gauss(lambda), parse_gauss(mu)));
            if (cfg.json) {
                out << to_json(d).dump(2) << "\n";
                return 0;
            }
            for (auto& e : d.entries)
                out << (e.is_zero ? "zero " : "pole ") << (e.at_infinity ? std::string("inf") : num(e.point))
                    << " weight " << to_string(e.weight) << " angle " << to_string(e.angle_over_pi) << "pi\n";
            out << "degree " << to_string(d.degree()) << "\n";
            return 0;
        };
    });

    auto* pull = app.add_subcommand("pullback", "f^*q for a rational map f");
    pull->add_option("--map", map, "catalog name, inline JSON or JSON file")->required();
    pull->add_option("--qdiff", qname, "q0 or q0p")->capture_default_str();
    pull->add_flag("--json", cfg.json);
    pull->callback([&] {
        action = [&] {
            QuadDiff q = pullback(load_map(map), catalog_qdiff(qname));
            if (cfg.json) {
                out << to_json(q).dump(2) << "\n";
                return 0;
            }
            out << "R = (" << to_string(q.R.num()) << ") / (" << to_string(q.R.den()) << ")\npoles";
            for (auto& p : q.poles) out << " " << to_string(p);
            out << "\n";
            return 0;
        };
    });

    // --- Belyi maps ------------------------------------------------------------
    auto* belyi = app.add_subcommand("belyi", "Belyi maps and passports");
    belyi->require_subcommand(1);

    auto* bpass = belyi->add_subcommand("passport", "Ramification over 0, 1, infinity");
    bpass->add_option("--map", map)->required();
    bpass->add_flag("--json", cfg.json);
    bpass->callback([&] {
        action = [&] {
            Passport p = passport(load_map(map));
            out << (cfg.json ? to_json(p).dump(2) : to_string(p) + (p.is_belyi ? "" : "  (not Belyi)")) << "\n";
            return 0;
        };
    });

    std::vector<std::string> abc;
    auto min_degree_action = [&] {
        action = [&] {
            if (abc.size() != 3) throw UsageError("three rationals expected");
            auto r = min_degree(parse_rational(abc[0]), parse_rational(abc[1]), parse_rational(abc[2]));
            out << r.min_degree << "\nd " << r.d << " (" << (r.even ? "even" : "odd") << ")\n";
            return 0;
        };
    };
    auto* bmin = belyi->add_subcommand("min-degree", "Minimal Belyi degree for edge lengths a, b, c");
    bmin->add_option("abc", abc, "a b c with a+b+c = 1")->expected(3)->required();
    bmin->callback(min_degree_action);
    auto* top_min = app.add_subcommand("min-degree", "Alias of belyi min-degree");
    top_min->add_option("abc", abc)->expected(3)->required();
    top_min->callback(min_degree_action);

    auto* bdeg8 = belyi->add_subcommand("verify-deg8", "Check the degree-8 map identities");
    bdeg8->callback([&] {
        action = [&] {
            Deg8Report r = verify_deg8();
            out << "f-1 identity " << (r.f_minus_one_identity ? "ok" : "FAILED") << "\npassport " << to_string(r.pass)
                << "\npullback " << (r.pullback_matches ? "ok" : "FAILED") << "\nresidue " << to_string(r.residue_before)
                << " -> " << to_string(r.residue_after) << " after /4\n"
                << (r.ok() ? "verified" : "FAILED") << "\n";
            return r.ok() ? 0 : 1;
        };
    });

    unsigned ex_bits = 192;
    auto* bex = belyi->add_subcommand("example43", "Sextic-root family of degree-12 maps");
    bex->add_option("--bits", ex_bits, "working precision")->capture_default_str()->check(CLI::Range(64u, 4096u));
    bex->add_flag("--json", cfg.json);
    bex->callback([&] {
        action = [&] {
            auto rows = example43_solve(ex_bits);
            Json arr = Json::array();
            bool ok = true;
            for (auto& r : rows) {
                ok = ok && r.g_residual < Real(1e-30) && r.f_passport.degree == 12;
                if (cfg.json) {
                    Json orbit = Json::array();
                    for (auto& l : r.lambda_orbit) orbit.push_back(to_string(l));
                    arr.push_back(Json{{"label", r.label},
                                       {"a5", to_string(r.a5)},
                                       {"lambda", to_string(r.lambda)},
                                       {"mu", to_string(r.mu)},
                                       {"lambda_orbit", orbit},
                                       {"g_residual", r.g_residual.str(3)},
                                       {"passport", to_json(r.f_passport)}});
                    continue;
                }
                out << r.label << "  a5 " << num(r.a5) << "\n    lambda " << num(r.lambda) << "  mu " << num(r.mu)
                    << "\n    |g(1)-g(a5)| " << r.g_residual.str(3) << "  passport " << to_string(r.f_passport)
                    << "\n";
            }
            if (cfg.json) out << arr.dump(2) << "\n";
            return ok ? 0 : 1;
        };
    });

    // --- ribbon graphs -----------------------------------------------------------
    auto* ribbon = app.add_subcommand("ribbon", "Ribbon graphs and dessins");
    ribbon->require_subcommand(1);

    std::string degrees, feasible_csv;
    EnumerateOptions eo;
    auto* ren = ribbon->add_subcommand("enumerate", "Ribbon graphs with given vertex degrees");
    ren->add_option("--degrees", degrees, "comma-separated vertex degrees")->required();
    ren->add_option("--genus", eo.genus)->capture_default_str();
    ren->add_option("--faces", eo.faces, "number of faces (default any)");
    ren->add_flag("--loopless", eo.loopless);
    ren->add_flag("--mirrors", eo.identify_mirrors, "identify mirror images");
    ren->add_option("--feasible", feasible_csv, "keep graphs metrisable with these face lengths");
    ren->add_flag("--json", cfg.json);
    ren->callback([&] {
        action = [&] {
            std::vector<int> deg;
            for (auto& q : parse_rationals(degrees)) {
                if (denominator(q) != 1 || q < 1) throw UsageError("degrees must be positive integers");
                deg.push_back(static_cast<int>(numerator(q)));
            }
            auto graphs = enumerate(deg, eo);
            std::vector<Q> res = feasible_csv.empty() ? std::vector<Q>{} : parse_rationals(feasible_csv);
            Json arr = Json::array();
            std::vector<std::pair<RibbonGraph, FeasibilityResult>> kept;
            for (auto& g : graphs) {
                FeasibilityResult fr;
                if (!res.empty()) {
                    if (static_cast<int>(res.size()) != g.F) continue;
                    fr = metric_feasible(g, res);
                    if (fr.status == Feasibility::Infeasible) continue;
                }
                kept.emplace_back(g, fr);
            }
            if (cfg.json) {
                for (auto& [g, fr] : kept) {
                    Json j = to_json(g);
                    if (!res.empty()) j["feasibility"] = to_json(fr);
                    arr.push_back(j);
                }
                out << Json{{"count", kept.size()}, {"graphs", arr}}.dump(2) << "\n";
                return 0;
            }
            out << kept.size() << " classes\n";
            for (size_t i = 0; i < kept.size(); ++i) {
                out << "# " << i << "\n";
                print_graph(out, kept[i].first);
                if (!res.empty())
                    out << "feasible " << to_string(kept[i].second.status) << " dimension " << kept[i].second.dimension
                        << "\n";
            }
            return 0;
        };
    });

    std::string graph_arg, labels_csv;
    auto* raut = ribbon->add_subcommand("aut", "Automorphism group orders");
    raut->add_option("graph", graph_arg, "catalog name (k4, theta4, theta3, fake, Gamma1..3) or graph JSON")->required();
    raut->add_option("--labels", labels_csv, "edge labels, comma separated (k4 defaults to its pair labels)");
    raut->add_flag("--json", cfg.json);
    raut->callback([&] {
        action = [&] {
            RibbonGraph g = load_graph(graph_arg);
            std::vector<int> labels;
            if (!labels_csv.empty())
                for (auto& q : parse_rationals(labels_csv)) labels.push_back(static_cast<int>(numerator(q)));
            else if (graph_arg == "k4")
                labels = k4_pair_labels();
            if (!labels.empty() && static_cast<int>(labels.size()) != g.E) throw UsageError("one label per edge expected");
            auto a = automorphisms(g, labels);
            if (cfg.json) {
                out << Json{{"order", a.order},
                            {"face_fixing_order", a.face_fixing_order},
                            {"label_preserving_order", a.label_preserving_order},
                            {"label_action_order", a.label_action_order}}
                           .dump(2)
                    << "\n";
                return 0;
            }
            out << "order " << a.order << "\nface-fixing " << a.face_fixing_order << "\nlabel-preserving "
                << a.label_preserving_order << "\nlabel action " << a.label_action_order << "\n";
            return 0;
        };
    });

    auto* rdes = ribbon->add_subcommand("dessin", "Dessin from the metric K4 with lengths a, b, c");
    rdes->add_option("abc", abc)->expected(3)->required();
    rdes->add_flag("--json", cfg.json);
    rdes->callback([&] {
        action = [&] {
            if (abc.size() != 3) throw UsageError("three rationals expected");
            auto md = dessin_from_metric(parse_rational(abc[0]), parse_rational(abc[1]), parse_rational(abc[2]));
            DessinPassport p = passport(md.dessin);
            if (cfg.json) {
                out << Json{{"degree", md.dessin.degree()},
                            {"d", md.d},
                            {"even", md.even},
                            {"segments", md.segments},
                            {"sigma0", cycles_of(md.dessin.sigma0)},
                            {"sigma1", cycles_of(md.dessin.sigma1)},
                            {"passport", to_json(p)}}
                           .dump(2)
                    << "\n";
                return 0;
            }
            out << "degree " << md.dessin.degree() << "\nd " << md.d << (md.even ? " (even)" : " (odd)")
                << "\nsegments " << join(std::vector<int>(md.segments.begin(), md.segments.end())) << "\nsigma0 "
                << cycles_text(cycles_of(md.dessin.sigma0)) << "\nsigma1 " << cycles_text(cycles_of(md.dessin.sigma1))
                << "\npassport " << to_string(p) << "\n";
            return 0;
        };
    });

    std::string dessin_name;
    auto* rdual = ribbon->add_subcommand("dual", "Metric graph of a degree-6 dessin under x^2");
    rdual->add_option("dessin", dessin_name, "D1, D2 or D3")->required();
    rdual->callback([&] {
        action = [&] {
            DualResult r = dual_graph_correspondence(catalog_dessin(dessin_name));
            print_graph(out, r.graph);
            out << "matches " << (r.matches.empty() ? "none" : r.matches) << "\nmirror matches "
                << (r.mirror_matches.empty() ? "none" : r.mirror_matches) << "\n";
            return 0;
        };
    });

    std::string svg_out;
    auto* rsvg = ribbon->add_subcommand("svg", "Draw a catalog graph");
    rsvg->add_option("graph", graph_arg, "k4, theta4, theta3 or fake")->required();
    rsvg->add_option("-o,--out", svg_out, "output file (default stdout)");
    rsvg->callback([&] {
        action = [&] {
            std::string s = render_drawing(catalog_drawing(graph_arg));
            if (svg_out.empty()) out << s;
            else write_file(svg_out, s);
            return 0;
        };
    });

    // --- periods and trajectories ---------------------------------------------
    auto* per = app.add_subcommand("periods", "Zero-to-zero periods of q_{lambda,mu}");
    per->add_option("--lambda", lambda)->required();
    per->add_option("--mu", mu)->required();
    per->add_flag("--json", cfg.json);
    per->callback([&] {
        action = [&] {
            PeriodSet p = periods(parse_cd(lambda), parse_cd(mu));
            if (cfg.json) {
                out << to_json(p).dump(2) << "\n";
                return 0;
            }
            for (size_t k = 0; k < p.zeros.size(); ++k) out << "zero " << k << " " << num(p.zeros[k]) << "\n";
            for (size_t k = 0; k < p.P.size(); ++k)
                out << "P" << kZeroPairs[k].first << kZeroPairs[k].second << " " << num(p.P[k]) << "\n";
            out << "residual " << num(p.residual) << "\n";
            return 0;
        };
    });

    std::string seed;
    auto* fm = app.add_subcommand("find-mu", "Solve for the Strebel accessory parameter mu");
    fm->add_option("--lambda", lambda)->required();
    fm->add_option("--tol", cfg.tol, "residual tolerance")->capture_default_str();
    fm->add_option("--seed", seed, "starting mu (default: homotopy)");
    fm->add_flag("--json", cfg.json);
    fm->callback([&] {
        action = [&] {
            double floor = std::max(std::ldexp(1.0, 16 - static_cast<int>(cfg.bits)), kDoubleFloor);
            if (!(cfg.tol >= floor)) throw UsageError("--tol must be at least " + num(floor));
            std::optional<cd> s;
            if (!seed.empty()) s = parse_cd(seed);
            FindMuResult r = find_mu(parse_cd(lambda), s, cfg.tol);
            if (cfg.json) {
                out << to_json(r).dump(2) << "\n";
                return 0;
            }
            out << "mu " << num(r.mu) << "\nresidual " << num(r.residual) << "\niterations " << r.iterations
                << "\nhomotopy steps " << r.homotopy_steps << "\n";
            return 0;
        };
    });

    auto* el = app.add_subcommand("edge-lengths", "Critical graph edge lengths (K4 case)");
    el->add_option("--lambda", lambda)->required();
    el->add_option("--mu", mu, "default: solve with find-mu");
    el->add_flag("--json", cfg.json);
    el->callback([&] {
        action = [&] {
            cd l = parse_cd(lambda);
            cd m = mu.empty() ? find_mu(l).mu : parse_cd(mu);
            EdgeLengths e = edge_lengths(l, m);
            if (cfg.json) {
                Json j = to_json(e);
                j["mu"] = to_json(m);
                out << j.dump(2) << "\n";
                return 0;
            }
            if (mu.empty()) out << "mu " << num(m) << "\n";
            for (size_t k = 0; k < e.pair.size(); ++k)
                out << "edge " << kZeroPairs[k].first << "-" << kZeroPairs[k].second << " " << num(e.pair[k]) << "\n";
            out << "a b c " << num(e.abc[0]) << " " << num(e.abc[1]) << " " << num(e.abc[2]) << "\nsum " << num(e.sum())
                << "\n";
            return 0;
        };
    });

    std::string tmap = "q0p", start, direction = "0";
    bool with_points = false;
    auto* tr = app.add_subcommand("trace", "Follow a horizontal trajectory");
    tr->add_option("--map", tmap, "q0p, q0 or family")->capture_default_str();
    tr->add_option("--lambda", lambda, "family only");
    tr->add_option("--mu", mu, "family only");
    tr->add_option("--start", start, "starting point re+im*i")->required();
    tr->add_option("--direction", direction, "preferred initial direction (0: principal branch)");
    tr->add_option("--svg", svg_out, "write the trajectory as SVG");
    tr->add_flag("--points", with_points, "include the sampled points in JSON");
    tr->add_flag("--json", cfg.json);
    tr->callback([&] {
        action = [&] {
            Field f = trace_field(tmap, lambda, mu);
            TrajectoryTrace t = trace_trajectory(f, parse_cd(start), parse_cd(direction));
            if (!svg_out.empty()) {
                SvgScene s = scene_for(f);
                s.polylines.push_back(t.points);
                write_file(svg_out, render_svg(s));
            }
            if (cfg.json) {
                out << to_json(t, with_points).dump(2) << "\n";
            } else {
                out << "length " << num(t.length) << "\n";
                if (t.closed) out << "closed, gap " << num(t.closure_gap) << "\n";
                if (t.hit >= 0) out << "reached critical point " << num(f.a[t.hit]) << "\n";
                if (!t.diagnostic.empty()) out << "stopped: " << t.diagnostic << "\n";
            }
            return t.closed || t.hit >= 0 ? 0 : 1;
        };
    });

    // --- verification -------------------------------------------------------------
    int only = 0;
    bool list = false;
    auto* rep = app.add_subcommand("reproduce-paper", "Run the verification suite");
    rep->add_option("--suite", cfg.suite, "all, thm1, examples, exact, ribbon, periods")->capture_default_str();
    rep->add_option("--criterion", only, "run a single criterion 1-14")->check(CLI::Range(1, kCriteria));
    rep->add_flag("--list", list, "list the criteria of the suite");
    rep->add_flag("--json", cfg.json);
    rep->callback([&] {
        action = [&] {
            std::vector<int> ids = only ? std::vector<int>{only} : suite_criteria(cfg.suite);
            Json arr = Json::array();
            bool ok = true;
            for (int id : ids) {
                if (list) {
                    out << id << "\n";
                    continue;
                }
                CriterionResult r = run_criterion(id);
                ok = ok && r.pass;
                if (cfg.json)
                    arr.push_back(Json{{"id", r.id}, {"title", r.title}, {"pass", r.pass}, {"detail", r.detail}, {"seconds", r.seconds}});
                else
                    out << format_line(r) << std::endl;
            }
            if (cfg.json && !list) out << arr.dump(2) << "\n";
            return ok ? 0 : 1;
        };
    });

    std::vector<std::string> args(args_in.rbegin(), args_in.rend());  // CLI11 consumes from the back
    try {
        app.parse(args);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e, out, err);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e, out, err);
    } catch (const CLI::ParseError& e) {
        app.exit(e, out, err);
        return 2;
    }

    try {
        cfg.bits = precision_from_env();
        PrecisionGuard guard(cfg.bits);
        return action ? action() : 2;
    } catch (const UsageError& e) {
        err << "usage error: " << e.what() << "\n";
        return 2;
    } catch (const ParseError& e) {
        err << "parse error: " << e.what() << "\n";
        return 2;
    } catch (const MalformedGraph& e) {
        err << "malformed graph: " << e.what() << "\n";
        return 2;
    } catch (const DegenerateFamily& e) {
        err << "degenerate family: " << e.what() << "\n";
        return 2;
    } catch (const std::domain_error& e) {
        err << "invalid input: " << e.what() << "\n";
        return 2;
    } catch (const NewtonDivergence& e) {
        err << "solver diverged: " << e.what() << "\n";
        return 1;
    } catch (const std::invalid_argument& e) {
        err << "invalid argument: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return 1;
    }
}

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
    std::vector<std::string> args;
    for (int i = 1; i < argc; ++i) args.emplace_back(argv[i]);
    return run(args, out, err);
}

}  // namespace strebel::cli
