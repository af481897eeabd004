#include "twistlab/entropy.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

namespace twistlab {

namespace {

constexpr double kNegInf = -std::numeric_limits<double>::infinity();

double log_sum_exp(const std::vector<double>& terms) {
    double hi = kNegInf;
    for (double v : terms) hi = std::max(hi, v);
    if (hi == kNegInf) return kNegInf;
    double s = 0;
    for (double v : terms) s += std::exp(v - hi);
    return hi + std::log(s);
}

}  // namespace

double weighted_dim(const HomSpaceDims& dims, double t) { return std::exp(log_weighted_dim(dims, t)); }

double log_weighted_dim(const HomSpaceDims& dims, double t) {
    std::vector<double> terms;
    for (const auto& [m, d] : dims)
        if (d > 0) terms.push_back(std::log(static_cast<double>(d)) - static_cast<double>(m) * t);
    return log_sum_exp(terms);
}

double weighted_dim(const TwistedComplex& g, const TwistedComplex& x, double t) {
    return weighted_dim(hom_dims(g, x), t);
}

GrowthSeries growth_series(const Iteration& orbit, double t) {
    GrowthSeries s;
    s.t = t;
    s.complete = !orbit.incomplete;
    for (const IterationStep& step : orbit.steps) {
        s.n.push_back(step.n);
        s.log_eps.push_back(log_weighted_dim(step.dims, t));
    }
    return s;
}

EntropyEstimate entropy_estimate(const GrowthSeries& series, int tail_k, double tolerance) {
    if (series.n.size() != series.log_eps.size()) throw std::invalid_argument("malformed growth series");
    std::vector<std::pair<int, double>> pts;
    for (std::size_t i = 0; i < series.n.size(); ++i)
        if (series.n[i] >= 1) pts.emplace_back(series.n[i], series.log_eps[i]);
    if (pts.size() < 4) throw std::invalid_argument("entropy_estimate needs at least four steps");
    if (tail_k < 2) throw std::invalid_argument("tail length must be at least 2");
    for (const auto& [n, le] : pts)
        if (le == kNegInf) throw std::domain_error("orbit reaches the zero object at n = " + std::to_string(n));

    EntropyEstimate e;
    const std::size_t k = std::min(pts.size(), static_cast<std::size_t>(tail_k));
    const std::size_t start = pts.size() - k;
    double mx = 0, my = 0;
    for (std::size_t i = start; i < pts.size(); ++i) {
        mx += pts[i].first;
        my += pts[i].second;
    }
    mx /= static_cast<double>(k);
    my /= static_cast<double>(k);
    double sxx = 0, sxy = 0;
    for (std::size_t i = start; i < pts.size(); ++i) {
        sxx += (pts[i].first - mx) * (pts[i].first - mx);
        sxy += (pts[i].first - mx) * (pts[i].second - my);
    }
    e.tail_fit = sxy / sxx;
    double rss = 0;
    for (std::size_t i = start; i < pts.size(); ++i) {
        const double r = pts[i].second - (my + e.tail_fit * (pts[i].first - mx));
        rss += r * r;
    }
    e.fit_residual = std::sqrt(rss / static_cast<double>(k));
    double lo = std::numeric_limits<double>::infinity(), hi = -lo;
    for (std::size_t i = start + 1; i < pts.size(); ++i) {
        const double inc = (pts[i].second - pts[i - 1].second) / (pts[i].first - pts[i - 1].first);
        lo = std::min(lo, inc);
        hi = std::max(hi, inc);
    }
    e.increment_spread = hi - lo;
    e.n_first = pts[start].first;
    e.n_last = pts.back().first;

    const double base = pts.front().second;
    const int n1 = pts.front().first;
    double fek = std::numeric_limits<double>::infinity();
    for (std::size_t i = 1; i < pts.size(); ++i)
        fek = std::min(fek, (pts[i].second - base) / (pts[i].first - n1));
    e.fekete = fek;
    e.value = e.tail_fit;
    e.flagged = std::abs(e.tail_fit - e.fekete) > tolerance;
    return e;
}

FeketeLimit fekete_limit(const std::vector<double>& a) {
    if (a.size() < 2) throw std::invalid_argument("fekete_limit needs at least two terms");
    std::vector<double> log_a, log_prefix;
    double running = 0;  // log(1 + a_1 + ... + a_n)
    for (double v : a) {
        if (!(v > 0)) throw std::domain_error("fekete_limit needs positive terms");
        const double lv = std::log(v);
        log_a.push_back(lv);
        running = log_prefix.empty() ? log_sum_exp({0.0, lv}) : log_sum_exp({running, lv});
        log_prefix.push_back(running);
    }
    const std::size_t nn = a.size();
    const std::size_t mm = nn / 2;
    FeketeLimit out;
    const double span = static_cast<double>(nn - mm);
    out.first = (log_a[nn - 1] - log_a[mm - 1]) / span;
    out.second = (log_prefix[nn - 1] - log_prefix[mm - 1]) / span;
    out.first_inf = std::numeric_limits<double>::infinity();
    for (std::size_t i = 0; i < nn; ++i) out.first_inf = std::min(out.first_inf, log_a[i] / static_cast<double>(i + 1));
    return out;
}

// -------------------------------------------------------------- certificates

long long DecompCertificate::size() const {
    long long s = 0;
    for (const auto& [n, c] : shifts) s += c;
    return s;
}

DecompCertificate make_certificate(std::string base, std::string object, const std::vector<int>& shifts) {
    DecompCertificate c{std::move(base), std::move(object), {}};
    for (int n : shifts) ++c.shifts[n];
    return c;
}

double cert_log_eval(const DecompCertificate& c, double t) {
    std::vector<double> terms;
    for (const auto& [n, count] : c.shifts) terms.push_back(std::log(static_cast<double>(count)) + n * t);
    return log_sum_exp(terms);
}

double cert_eval(const DecompCertificate& c, double t) { return std::exp(cert_log_eval(c, t)); }

DecompCertificate cert_compose(const DecompCertificate& c1, const DecompCertificate& c2) {
    if (c1.object != c2.base)
        throw std::invalid_argument("cert_compose: '" + c1.object + "' is not the base '" + c2.base + "'");
    DecompCertificate out{c1.base, c2.object, {}};
    for (const auto& [a, ca] : c1.shifts)
        for (const auto& [b, cb] : c2.shifts) out.shifts[a + b] += ca * cb;
    return out;
}

DecompCertificate cert_triangle(const DecompCertificate& c1, const DecompCertificate& c2, std::string object) {
    if (c1.base != c2.base) throw std::invalid_argument("cert_triangle: bases '" + c1.base + "' and '" + c2.base + "' differ");
    DecompCertificate out{c1.base, std::move(object), c1.shifts};
    for (const auto& [n, c] : c2.shifts) out.shifts[n] += c;
    return out;
}

DecompCertificate cert_refine(const DecompCertificate& c, const DecompCertificate& c1, const DecompCertificate& c2) {
    if (c1.base != c2.base) throw std::invalid_argument("cert_refine: triangle pieces have different bases");
    DecompCertificate out{c1.base, c.object, {}};
    for (const auto& [n, count] : c.shifts) {
        for (const auto& [m, k] : c1.shifts) out.shifts[n + m] += count * k;
        for (const auto& [m, k] : c2.shifts) out.shifts[n + m] += count * k;
    }
    return out;
}

DecompCertificate tower_certificate(const TwistedComplex& x, std::string base, std::string object) {
    DecompCertificate c{std::move(base), std::move(object), {}};
    for (const Summand& s : x.summands()) ++c.shifts[s.shift];
    return c;
}

double TwistBound::m_t(double t) const { return std::max(cert_eval(base, t), 1.0 + cert_eval(twist, t)); }

double TwistBound::closed_form(double t) const {
    double s = 1.0;
    for (const DecompCertificate& c : steps) s += cert_eval(c, t);
    return m_t(t) * s;
}

TwistBound cert_twist_bound(const ModelSphericalFunctor& s, const TwistedComplex& g, const TwistedComplex& g_prime,
                            int n) {
    if (n < 1) throw std::invalid_argument("cert_twist_bound needs n >= 1");
    const AlgebraPtr& alg = g_prime.algebra_ptr();
    if (!(g_prime.summands() == TwistedComplex::generator(alg).summands()) || !g_prime.differential().empty())
        throw std::invalid_argument("cert_twist_bound: G' must be the sum of all projectives");
    const bool same = g.summands() == g_prime.summands() && g.differential() == g_prime.differential();
    if (s.kind() == TwistKind::p_object && !same)
        throw std::invalid_argument("cert_twist_bound: P-object bound needs G = G'");

    TwistBound out;
    out.base = same ? make_certificate("G'", "G", {0}) : tower_certificate(g, "G'", "G");
    out.twist = tower_certificate(shift(s.twist(g_prime), -1), "G'", "T G'[-1]");

    const HomSpaceDims rg = hom_dims(s.object(), g);
    const HomSpaceDims rg_prime = hom_dims(s.object(), g_prime);
    if (rg_prime.empty()) throw std::invalid_argument("cert_twist_bound: R G' vanishes");
    const int slope = s.cotwist_slope();
    // The source generator as a piece of R G': the field sits in R G' in
    // degree m0, so it is a summand of R G'[m0].
    const int m0 = rg_prime.begin()->first;
    const DecompCertificate gen_over_rg = make_certificate("RG'", "K", {m0});
    const DecompCertificate identity = make_certificate("G'", "G'", {0});

    DecompCertificate total = out.base;
    for (int i = 0; i < n; ++i) {
        const std::string label = "(C_S[2])^" + std::to_string(i) + " RG[1]";
        DecompCertificate step;
        if (s.kind() == TwistKind::spherical) {
            DecompCertificate over_gen{"K", label, {}};
            for (const auto& [m, dim] : rg) over_gen.shifts[-m + 1 + i * slope] += dim;
            step = cert_compose(gen_over_rg, over_gen);
        } else {
            step = make_certificate("RG'", label, {1 + i * slope});
        }
        out.steps.push_back(step);
        if (step.shifts.empty()) continue;
        DecompCertificate refined = cert_refine(step, out.twist, identity);
        total = cert_triangle(total, refined, "T^" + std::to_string(i + 1) + " G");
    }
    total.object = "T^" + std::to_string(n) + " G";
    out.certificate = std::move(total);
    return out;
}

// ---------------------------------------------------------------- envelope

Envelope twist_envelope(int slope, double t, bool kernel_witness) {
    const double c = slope * t;
    Envelope e;
    e.upper = std::max(0.0, c);
    e.upper_source = "twist-upper-bound";
    if (kernel_witness && c < 0) {
        e.lower = 0.0;
        e.lower_source = "twist-lower-bound-kernel";
    } else {
        e.lower = c;
        e.lower_source = "twist-lower-bound-cotwist";
    }
    return e;
}

std::string to_string(Verdict v) {
    switch (v) {
        case Verdict::within_envelope: return "within-envelope";
        case Verdict::outside_envelope: return "outside-envelope";
        case Verdict::incomplete: return "incomplete";
        case Verdict::hypothesis_not_met: return "hypothesis-not-met";
    }
    return "?";
}

double default_tolerance(double t) { return 0.05 + 0.05 * std::abs(t); }

Verdict judge(const EntropyEstimate& estimate, const Envelope& envelope, bool complete, double tolerance) {
    if (!complete) return Verdict::incomplete;
    const double h = estimate.value;
    return (h >= envelope.lower - tolerance && h <= envelope.upper + tolerance) ? Verdict::within_envelope
                                                                                : Verdict::outside_envelope;
}

}  // namespace twistlab
