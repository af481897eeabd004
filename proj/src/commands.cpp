#include "twistlab/commands.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <ostream>
#include <sstream>

#include "twistlab/io.hpp"

namespace twistlab {

using nlohmann::json;

namespace {

std::string num(double v) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.10g", v == 0.0 ? 0.0 : v);
    return buf;
}

std::string num(const std::optional<double>& v) { return v ? num(*v) : std::string(); }

Field field_for(char mode) {
    switch (mode) {
        case 'p': return Field::prime();
        case 'q': return Field::rationals();
        default: throw ConfigError(std::string("unknown field mode '") + mode + "' (use p or q)");
    }
}

std::string projective_label(const GradedAlgebra& a, int v) { return "P" + a.vertices()[static_cast<std::size_t>(v)]; }

/// End cohomology {0:1, d:1} (spherical) or {0:1, 2:1, ..., 2d:1} (P-object).
std::optional<int> model_degree(TwistKind kind, const HomSpaceDims& end) {
    if (kind == TwistKind::spherical) {
        if (end.size() != 2 || !end.contains(0)) return std::nullopt;
        const int d = std::prev(end.end())->first;
        if (d < 1) return std::nullopt;
        return end == expected_end_dims(kind, d) ? std::optional<int>(d) : std::nullopt;
    }
    const int d = static_cast<int>(end.size()) - 1;
    if (d < 1) return std::nullopt;
    return end == expected_end_dims(kind, d) ? std::optional<int>(d) : std::nullopt;
}

}  // namespace

// ------------------------------------------------------------------ config

void RunConfig::check() const {
    if (instance.empty() == algebra_path.empty()) throw ConfigError("give exactly one of an instance or an algebra file");
    if (!(tstep > 0)) throw ConfigError("t grid step must be positive");
    if (tmin > tmax) throw ConfigError("tmin exceeds tmax");
    if (n_max < 4) throw ConfigError("n_max must be at least 4");
    if (tail_k < 2 || tail_k > n_max) throw ConfigError("tail k must lie in [2, n_max]");
    if (field != 0 && field != 'p' && field != 'q') throw ConfigError("field mode must be p or q");
}

std::vector<double> RunConfig::grid() const {
    std::vector<double> out;
    const long long count = static_cast<long long>(std::floor((tmax - tmin) / tstep + 1e-9)) + 1;
    for (long long i = 0; i < count; ++i) {
        double t = tmin + static_cast<double>(i) * tstep;
        t = std::round(t * 1e12) / 1e12;
        if (t == 0.0) t = 0.0;  // no "-0" in output
        out.push_back(t);
    }
    return out;
}

Setup resolve(const RunConfig& config) {
    config.check();
    Setup s;
    std::optional<TwistedComplex> distinguished;
    if (!config.instance.empty()) {
        const InstanceDescriptor* desc = nullptr;
        try {
            desc = &find_instance(config.instance);
        } catch (const std::out_of_range& e) {
            throw ConfigError(e.what());
        }
        s.algebra = desc->algebra(field_for(config.field ? config.field : 'p'));
        distinguished = desc->object(s.algebra);
        s.word = config.functor.empty() ? desc->default_functor : config.functor;
    } else {
        GradedAlgebra a;
        try {
            a = load_algebra(config.algebra_path);
        } catch (const ParseError& e) {
            throw ConfigError(e.what());
        }
        if (config.field) a = a.with_field(field_for(config.field));
        const ValidationReport rep = validate(a);
        if (!rep.ok()) throw ConfigError("invalid algebra:\n" + rep.to_string());
        s.algebra = std::make_shared<const GradedAlgebra>(std::move(a));
        if (config.functor.empty()) throw ConfigError("--functor is required with --algebra");
        s.word = config.functor;
    }
    try {
        s.phi = EndofunctorSpec::parse(s.word, s.algebra, distinguished);
    } catch (const std::invalid_argument& e) {
        throw ConfigError(e.what());
    }

    const auto& steps = s.phi.steps();
    if (steps.size() == 1 && steps.front().object &&
        (steps.front().kind == FunctorStep::Kind::spherical_twist || steps.front().kind == FunctorStep::Kind::p_twist)) {
        const TwistKind kind =
            steps.front().kind == FunctorStep::Kind::spherical_twist ? TwistKind::spherical : TwistKind::p_object;
        const TwistedComplex& e = *steps.front().object;
        const auto d = model_degree(kind, hom_dims(e, e));
        if (d) {
            s.model.emplace(e, kind, *d, false);
            s.model_note = (kind == TwistKind::spherical ? "spherical, d = " : "P-object, d = ") + std::to_string(*d) +
                           " (End cohomology dimension-checked)";
        } else {
            s.model_note = "twist object has the wrong End cohomology";
        }
    } else {
        s.model_note = "not a single twist; no envelope";
    }
    if (s.model) {
        const auto ps = projectives(s.algebra);
        if (auto w = ker_SR_witness(*s.model, ps)) s.kernel_witness = projective_label(*s.algebra, static_cast<int>(*w));
        s.split_generator = split_gen_criterion(*s.model, std::max(config.n_max, 8));
    }
    return s;
}

// ----------------------------------------------------------------- entropy

EntropyReport run_entropy(const RunConfig& config) {
    const auto start = std::chrono::steady_clock::now();
    EntropyReport r;
    r.config = config;
    r.setup = resolve(config);
    const Setup& s = r.setup;
    const TwistedComplex g = TwistedComplex::generator(s.algebra);
    const Iteration orbit = iterate(s.phi, g, config.n_max);
    r.incomplete = orbit.incomplete;
    r.note = orbit.note;

    std::optional<TwistBound> bound;
    if (s.model && !orbit.incomplete) {
        try {
            bound = cert_twist_bound(*s.model, g, g, config.n_max);
        } catch (const std::exception& e) {
            r.note += (r.note.empty() ? "" : "; ") + std::string("no certificate: ") + e.what();
        }
    }

    for (double t : config.grid()) {
        const GrowthSeries series = growth_series(orbit, t);
        EntropySummary sum;
        sum.t = t;
        try {
            sum.estimate = entropy_estimate(series, config.tail_k, default_tolerance(t));
        } catch (const std::exception& e) {
            sum.note = e.what();
        }
        if (s.model) sum.envelope = twist_envelope(s.model->cotwist_slope(), t, s.kernel_witness.has_value());
        if (bound) sum.cert_upper = cert_log_eval(bound->certificate, t) / config.n_max;

        if (orbit.incomplete || !sum.estimate) {
            sum.verdict = Verdict::incomplete;
        } else if (!sum.envelope) {
            sum.verdict = Verdict::hypothesis_not_met;
        } else {
            sum.verdict = judge(*sum.estimate, *sum.envelope, true, default_tolerance(t));
            // Above the upper bound only counts against the bound when its
            // split-generator hypothesis holds.
            if (sum.verdict == Verdict::outside_envelope && !s.split_generator &&
                sum.estimate->value > sum.envelope->upper)
                sum.verdict = Verdict::hypothesis_not_met;
        }

        for (std::size_t i = 0; i < series.n.size(); ++i) {
            EntropyRow row;
            row.t = t;
            row.n = series.n[i];
            row.eps = std::exp(series.log_eps[i]);
            if (orbit.incomplete) row.verdict = to_string(Verdict::incomplete);
            if (i + 1 == series.n.size()) {
                if (sum.estimate) {
                    row.h_tailfit = sum.estimate->tail_fit;
                    row.h_fekete = sum.estimate->fekete;
                }
                row.cert_upper = sum.cert_upper;
                if (sum.envelope) {
                    row.lower = sum.envelope->lower;
                    row.upper = sum.envelope->upper;
                }
                row.verdict = to_string(sum.verdict);
            }
            r.rows.push_back(std::move(row));
        }
        r.summaries.push_back(std::move(sum));
    }
    r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    return r;
}

std::string entropy_csv(const EntropyReport& report) {
    std::ostringstream os;
    os << "t,n,eps,h_tailfit,h_fekete,cert_upper,lower_bound,upper_bound,verdict\n";
    for (const EntropyRow& r : report.rows)
        os << num(r.t) << ',' << r.n << ',' << num(r.eps) << ',' << num(r.h_tailfit) << ',' << num(r.h_fekete) << ','
           << num(r.cert_upper) << ',' << num(r.lower) << ',' << num(r.upper) << ',' << r.verdict << '\n';
    return os.str();
}

std::string entropy_svg(const EntropyReport& report) {
    constexpr double W = 640, H = 400, L = 60, R = 150, T = 30, B = 50;
    struct Series {
        const char* name;
        const char* color;
        const char* dash;
        std::vector<std::pair<double, double>> pts;
    };
    std::vector<Series> series = {{"estimate (tail fit)", "#1f77b4", "", {}},
                                  {"envelope upper", "#d62728", "6,4", {}},
                                  {"envelope lower", "#2ca02c", "6,4", {}},
                                  {"certificate bound", "#7f7f7f", "2,3", {}}};
    for (const EntropySummary& s : report.summaries) {
        if (s.estimate) series[0].pts.emplace_back(s.t, s.estimate->value);
        if (s.envelope) {
            series[1].pts.emplace_back(s.t, s.envelope->upper);
            series[2].pts.emplace_back(s.t, s.envelope->lower);
        }
        if (s.cert_upper) series[3].pts.emplace_back(s.t, *s.cert_upper);
    }
    double x0 = report.config.tmin, x1 = report.config.tmax;
    if (x1 <= x0) x1 = x0 + 1;
    double y0 = 0, y1 = 0;
    for (const Series& s : series)
        for (const auto& [x, y] : s.pts) {
            y0 = std::min(y0, y);
            y1 = std::max(y1, y);
        }
    if (y1 - y0 < 1e-9) y1 = y0 + 1;
    const double pad = 0.05 * (y1 - y0);
    y0 -= pad;
    y1 += pad;
    const auto px = [&](double x) { return L + (x - x0) / (x1 - x0) * (W - L - R); };
    const auto py = [&](double y) { return H - B - (y - y0) / (y1 - y0) * (H - T - B); };

    std::ostringstream os;
    os << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << W << "\" height=\"" << H << "\" viewBox=\"0 0 " << W
       << ' ' << H << "\" font-family=\"sans-serif\" font-size=\"12\">\n";
    os << "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";
    const std::string title = (report.config.instance.empty() ? report.config.algebra_path : report.config.instance) +
                              "  " + report.setup.word + "  n_max = " + std::to_string(report.config.n_max);
    os << "<text x=\"" << L << "\" y=\"18\">" << title << "</text>\n";
    os << "<line x1=\"" << L << "\" y1=\"" << H - B << "\" x2=\"" << W - R << "\" y2=\"" << H - B
       << "\" stroke=\"black\"/>\n";
    os << "<line x1=\"" << L << "\" y1=\"" << T << "\" x2=\"" << L << "\" y2=\"" << H - B << "\" stroke=\"black\"/>\n";
    for (int i = 0; i <= 4; ++i) {
        const double x = x0 + (x1 - x0) * i / 4, y = y0 + (y1 - y0) * i / 4;
        os << "<text x=\"" << num(px(x)) << "\" y=\"" << H - B + 16 << "\" text-anchor=\"middle\">" << num(x)
           << "</text>\n";
        os << "<text x=\"" << L - 6 << "\" y=\"" << num(py(y) + 4) << "\" text-anchor=\"end\">" << num(std::round(y * 1000) / 1000)
           << "</text>\n";
    }
    os << "<text x=\"" << (L + W - R) / 2 << "\" y=\"" << H - 12 << "\" text-anchor=\"middle\">t</text>\n";
    os << "<text x=\"16\" y=\"" << (T + H - B) / 2 << "\" transform=\"rotate(-90 16 " << (T + H - B) / 2
       << ")\" text-anchor=\"middle\">h_t</text>\n";
    int legend = 0;
    for (const Series& s : series) {
        if (s.pts.empty()) continue;
        os << "<polyline fill=\"none\" stroke=\"" << s.color << "\" stroke-width=\"2\"";
        if (*s.dash) os << " stroke-dasharray=\"" << s.dash << '"';
        os << " points=\"";
        for (const auto& [x, y] : s.pts) os << num(px(x)) << ',' << num(py(y)) << ' ';
        os << "\"/>\n";
        const double ly = T + 10 + 18 * legend++;
        os << "<line x1=\"" << W - R + 10 << "\" y1=\"" << ly << "\" x2=\"" << W - R + 30 << "\" y2=\"" << ly
           << "\" stroke=\"" << s.color << "\" stroke-width=\"2\"" << (*s.dash ? std::string(" stroke-dasharray=\"") + s.dash + "\"" : "")
           << "/>\n";
        os << "<text x=\"" << W - R + 34 << "\" y=\"" << ly + 4 << "\">" << s.name << "</text>\n";
    }
    os << "</svg>\n";
    return os.str();
}

// ------------------------------------------------------------------ verify

std::string to_string(CheckStatus s) {
    switch (s) {
        case CheckStatus::pass: return "pass";
        case CheckStatus::fail: return "FAIL";
        case CheckStatus::hypothesis_not_met: return "hypothesis-not-met";
    }
    return "?";
}

bool VerifyReport::any_fail() const {
    return std::any_of(lines.begin(), lines.end(), [](const CheckLine& l) { return l.status == CheckStatus::fail; });
}

VerifyReport run_verify(const std::string& instance, int n_max, char field) {
    RunConfig cfg;
    cfg.instance = instance;
    cfg.n_max = n_max;
    cfg.field = field;
    cfg.tmin = -1;
    cfg.tmax = 1;
    cfg.tstep = 0.5;
    const EntropyReport er = run_entropy(cfg);
    const Setup& s = er.setup;
    VerifyReport rep;
    rep.instance = instance;
    if (!s.model) throw ConfigError("instance functor is not a model twist: " + s.model_note);
    const ModelSphericalFunctor& m = *s.model;
    const TwistedComplex& e = m.object();
    const auto add = [&](std::string name, CheckStatus st, std::string hyp, std::string detail) {
        rep.lines.push_back({std::move(name), st, std::move(hyp), std::move(detail)});
    };
    const auto pass_if = [](bool ok) { return ok ? CheckStatus::pass : CheckStatus::fail; };

    const ObjectCheck oc = m.kind() == TwistKind::spherical ? check_spherical(e, m.d()) : check_p_object(e, m.d());
    std::string ocd = "End " + to_string(hom_dims(e, e));
    for (const auto& f : oc.failures) ocd += "; " + f;
    add(m.kind() == TwistKind::spherical ? "spherical object" : "P-object", pass_if(oc.ok()),
        "dimension-checked (duality on shifted projectives)", ocd);

    add("split-generator image of the right adjoint", s.split_generator ? CheckStatus::pass : CheckStatus::hypothesis_not_met,
        "machine-checked (cotwist shift " + std::to_string(m.cotwist_shift()) + ")", s.split_generator ? "criterion met" : "criterion not met");
    add("kernel of SR nonzero", s.kernel_witness ? CheckStatus::pass : CheckStatus::hypothesis_not_met, "machine-checked",
        s.kernel_witness ? "witness " + *s.kernel_witness : "no projective in the perp");

    const std::string upper_hyp = s.split_generator ? "machine-checked" : "not met";
    const std::string lower_hyp = std::string("dimension-checked") + (s.kernel_witness ? ", kernel witness machine-checked" : "");
    std::optional<double> h0;
    for (const EntropySummary& sum : er.summaries) {
        const std::string at = " at t = " + num(sum.t);
        if (!sum.estimate || !sum.envelope) {
            add("entropy estimate" + at, CheckStatus::fail, "", sum.note.empty() ? "no estimate" : sum.note);
            continue;
        }
        const double h = sum.estimate->value, tol = default_tolerance(sum.t);
        if (sum.t == 0) h0 = h;
        const std::string hd = "h = " + num(h);
        add("twist upper bound" + at,
            !s.split_generator ? CheckStatus::hypothesis_not_met : pass_if(h <= sum.envelope->upper + tol), upper_hyp,
            hd + ", upper " + num(sum.envelope->upper) + " (" + sum.envelope->upper_source + "), tol " + num(tol));
        add("twist lower bound" + at, pass_if(h >= sum.envelope->lower - tol), lower_hyp,
            hd + ", lower " + num(sum.envelope->lower) + " (" + sum.envelope->lower_source + "), tol " + num(tol));
        if (sum.cert_upper)
            add("certificate bound" + at, pass_if(*sum.cert_upper >= h), "none", hd + ", certificate " + num(*sum.cert_upper));
    }
    if (h0)
        add("h_0 of the twist equals h_0 of the shifted cotwist",
            !s.split_generator ? CheckStatus::hypothesis_not_met : pass_if(std::abs(*h0) <= default_tolerance(0)), upper_hyp,
            "h_0 = " + num(*h0) + ", cotwist value 0");

    // dims(T^n E) against dims(E[c n]) with c the shift of T on E
    {
        const int c = m.kind() == TwistKind::spherical ? 1 - m.d() : -2 * m.d();
        TwistedComplex cur = e;
        bool ok = true;
        int n = 1;
        for (; n <= 6 && ok; ++n) {
            cur = m.twist(cur);
            ok = hom_profile(cur) == hom_profile(shift(e, c * n));
        }
        add("powers of the twist on E are shifts", pass_if(ok), "none",
            ok ? "dims(T^n E) = dims(E[" + std::to_string(c) + " * n]) for n <= 6" : "mismatch at n = " + std::to_string(n - 1));
    }
    {
        const auto ps = projectives(s.algebra);
        const auto perp = find_perp(e, ps);
        bool ok = true;
        std::string labels;
        for (std::size_t i : perp) {
            labels += (labels.empty() ? "" : ", ") + projective_label(*s.algebra, static_cast<int>(i));
            TwistedComplex cur = ps[i];
            for (int n = 0; n < 6 && ok; ++n) {
                cur = m.twist(cur);
                ok = hom_profile(cur) == hom_profile(ps[i]);
            }
        }
        add("perp objects are fixed", perp.empty() ? CheckStatus::hypothesis_not_met : pass_if(ok), "machine-checked",
            perp.empty() ? "no projective in the perp" : labels + " stable under 6 iterations");
    }

    const IntMatrix chi = euler_data(*s.algebra).chi;
    const IntMatrix fm = functor_matrix(s.phi, s.algebra);
    const double rho = spectral_radius(fm);
    const auto witness = cotwist_eigen_witness(m);
    if (h0) {
        const bool hyp = s.split_generator && witness.has_value();
        std::string why = witness ? "eigen witness found" : "no eigen witness (class of E vanishes numerically)";
        if (!s.split_generator) why += "; split-generator criterion not met";
        add("Gromov-type inequality for the twist", hyp ? pass_if(*h0 <= std::log(rho) + default_tolerance(0)) : CheckStatus::hypothesis_not_met,
            hyp ? "machine-checked (cotwist is a shift: h_0 = log rho = 0)" : "not met",
            why + "; h_0 = " + num(*h0) + ", log rho = " + num(std::log(rho)));
        const GYReport gy = gy_check(fm, chi, *h0);
        add("Gromov-Yomdin equality (" + gy.label + ")", pass_if(gy.equality_holds), "smoothness not established",
            "h_0 = " + num(gy.h0) + ", log rho = " + num(gy.log_rho) + ", tol " + num(gy.tolerance));
    }
    return rep;
}

std::string format_verify(const VerifyReport& report) {
    std::ostringstream os;
    int pass = 0, fail = 0, hnm = 0;
    os << "instance " << report.instance << '\n';
    for (const CheckLine& l : report.lines) {
        os << to_string(l.status) << "  " << l.name << ": " << l.detail;
        if (!l.hypotheses.empty()) os << " [hypotheses: " << l.hypotheses << ']';
        os << '\n';
        (l.status == CheckStatus::pass ? pass : l.status == CheckStatus::fail ? fail : hnm)++;
    }
    os << "summary: " << pass << " pass, " << fail << " fail, " << hnm << " hypothesis-not-met\n";
    return os.str();
}

// ----------------------------------------------------------------- ktheory

std::string ktheory_report(const std::string& instance, const std::string& functor, int n_max) {
    RunConfig cfg;
    cfg.instance = instance;
    cfg.functor = functor;
    cfg.n_max = n_max;
    cfg.tmin = cfg.tmax = 0;
    const EntropyReport er = run_entropy(cfg);
    const Setup& s = er.setup;
    const EulerData ed = euler_data(*s.algebra);
    const IntMatrix fm = functor_matrix(s.phi, s.algebra);
    const Spectrum sp = spectrum(fm);
    const NumericalGroup ng = numerical_group(ed.chi);

    json doc;
    doc["instance"] = instance;
    doc["functor"] = s.word;
    doc["vertices"] = ed.vertices;
    doc["chi"] = ed.chi.to_rows();
    doc["functor_matrix"] = fm.to_rows();
    doc["charpoly"] = polynomial_to_string(sp.charpoly);
    json coeffs = json::array();
    for (const auto& c : sp.charpoly) coeffs.push_back(scalar_to_json(Scalar(c)));
    doc["charpoly_coefficients"] = coeffs;
    json ints = json::array();
    for (const auto& [root, mult] : sp.integer_roots) ints.push_back({{"root", scalar_to_json(Scalar(root))}, {"multiplicity", mult}});
    doc["integer_roots"] = ints;
    json others = json::array();
    for (const auto& z : sp.other_roots) others.push_back({z.real(), z.imag()});
    doc["other_roots"] = others;
    doc["spectral_radius"] = sp.spectral_radius;
    doc["radius_exact"] = sp.radius_exact;
    doc["gelfand_estimate"] = sp.gelfand_estimate;
    json radical = json::array();
    for (const auto& v : ng.radical_basis) radical.push_back(v);
    json inv = json::array();
    for (const auto& c : ng.invariants) inv.push_back(scalar_to_json(Scalar(c)));
    doc["numerical_group"] = {{"rank", ng.rank}, {"radical_basis", radical}, {"smith_invariants", inv}};
    if (ng.rank > 0) doc["numerical_charpoly"] = polynomial_to_string(numerical_charpoly(fm, ng));

    const EntropySummary& sum = er.summaries.front();
    if (sum.estimate) {
        const GYReport gy = gy_check(fm, ed.chi, sum.estimate->value);
        doc["h0_estimate"] = sum.estimate->value;
        doc["gy_check"] = {{"log_rho", gy.log_rho},
                           {"h0", gy.h0},
                           {"difference", gy.difference},
                           {"tolerance", gy.tolerance},
                           {"numerical_group_trivial", gy.numerical_group_trivial},
                           {"equality", gy.equality_holds ? "pass" : "fail"},
                           {"yomdin_inequality", gy.inequality_holds ? "pass" : "fail"},
                           {"label", gy.label}};
    } else {
        doc["h0_estimate"] = nullptr;
        doc["gy_check"] = {{"label", "incomplete"}, {"note", sum.note}};
    }
    if (s.model) {
        if (auto w = cotwist_eigen_witness(*s.model)) {
            const double rho_c = 1.0;  // [C_S] = +-1 on the rank-1 source
            doc["cotwist_eigen_witness"] = {{"image", w->image},
                                            {"eigenvalue", w->eigenvalue},
                                            {"cotwist_radius_le_twist_radius", rho_c <= sp.spectral_radius + 1e-9}};
        } else {
            doc["cotwist_eigen_witness"] = nullptr;
        }
    }
    return doc.dump(2) + "\n";
}

// ---------------------------------------------------------------- commands

int cmd_validate(const std::string& path, std::ostream& out, std::ostream& err) {
    GradedAlgebra a;
    try {
        a = load_algebra(path);
    } catch (const ParseError& e) {
        err << "error: " << e.what() << '\n';
        return 2;
    }
    const ValidationReport rep = validate(a);
    if (rep.ok()) {
        out << "valid: " << a.num_vertices() << " vertices, dimension " << a.dim() << ", field " << a.field().name() << '\n';
        return 0;
    }
    out << "invalid: " << rep.to_string();
    return 1;
}

int cmd_entropy(const RunConfig& config, std::ostream& out, std::ostream& err) {
    EntropyReport r;
    try {
        r = run_entropy(config);
    } catch (const ConfigError& e) {
        err << "error: " << e.what() << '\n';
        return 2;
    }
    const std::string csv = entropy_csv(r);
    try {
        if (config.csv_path.empty() || config.csv_path == "-")
            out << csv;
        else
            write_text_file(config.csv_path, csv);
        if (!config.svg_path.empty()) write_text_file(config.svg_path, entropy_svg(r));
    } catch (const std::exception& e) {
        err << "error: " << e.what() << '\n';
        return 2;
    }
    err << "functor " << r.setup.word << ": " << r.setup.model_note << '\n';
    if (r.setup.model)
        err << "envelope: upper max(0, " << r.setup.model->cotwist_slope() << "t) [split-generator hypothesis "
            << (r.setup.split_generator ? "machine-checked" : "not met") << "], lower "
            << (r.setup.kernel_witness ? "0 for negative slope t (kernel witness " + *r.setup.kernel_witness + ")"
                                       : std::to_string(r.setup.model->cotwist_slope()) + "t")
            << '\n';
    if (!r.note.empty()) err << "note: " << r.note << '\n';
    bool bad = false;
    for (const EntropySummary& s : r.summaries) bad = bad || s.verdict == Verdict::outside_envelope;
    return bad ? 1 : 0;
}

int cmd_verify(const std::string& instance, int n_max, std::ostream& out, std::ostream& err) {
    try {
        const VerifyReport rep = run_verify(instance, n_max);
        out << format_verify(rep);
        return rep.any_fail() ? 1 : 0;
    } catch (const ConfigError& e) {
        err << "error: " << e.what() << '\n';
        return 2;
    }
}

int cmd_ktheory(const std::string& instance, const std::string& functor, std::ostream& out, std::ostream& err) {
    try {
        out << ktheory_report(instance, functor);
        return 0;
    } catch (const ConfigError& e) {
        err << "error: " << e.what() << '\n';
        return 2;
    }
}

int cmd_zoo_list(std::ostream& out) {
    for (const InstanceDescriptor& i : catalog()) {
        out << i.name << "  " << (i.kind == TwistKind::spherical ? "spherical" : "P-object") << " d=" << i.d << "  "
            << i.default_functor;
        if (!i.expected_perp.empty()) {
            out << "  perp:";
            for (const auto& p : i.expected_perp) out << ' ' << p;
        }
        out << '\n';
    }
    return 0;
}

int cmd_zoo_emit(const std::string& name, std::ostream& out, std::ostream& err) {
    try {
        out << dump_algebra(*find_instance(name).algebra());
        return 0;
    } catch (const std::out_of_range& e) {
        err << "error: " << e.what() << '\n';
        return 2;
    }
}

}  // namespace twistlab
