#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "twistlab/functor.hpp"

namespace twistlab {

/// sum_m dims[m] * exp(-m t), and its logarithm computed without overflow.
double weighted_dim(const HomSpaceDims& dims, double t);
double log_weighted_dim(const HomSpaceDims& dims, double t);
/// Weighted Hom dims of Hom(G, X).
double weighted_dim(const TwistedComplex& g, const TwistedComplex& x, double t);

/// log eps_t(n) along an orbit. Entries of the zero object are -inf.
struct GrowthSeries {
    double t = 0.0;
    std::vector<int> n;
    std::vector<double> log_eps;
    bool complete = true;
};

GrowthSeries growth_series(const Iteration& orbit, double t);

enum class EstimateMethod { tail_fit, fekete };

struct EntropyEstimate {
    double value = 0.0;  // the tail fit
    EstimateMethod method = EstimateMethod::tail_fit;
    double tail_fit = 0.0;
    double fekete = 0.0;
    double fit_residual = 0.0;  // RMS residual of the tail fit
    double increment_spread = 0.0;  // max - min of the last increments
    int n_first = 0;
    int n_last = 0;
    bool flagged = false;  // the two methods disagree beyond tolerance
};

/// Tail fit: least-squares slope of log eps over the last tail_k entries.
/// Fekete: min over n >= 2 of (log eps(n) - log eps(1)) / (n - 1), the
/// infimum for the sequence normalized by the step-one value. Needs at
/// least four entries with n >= 1; throws std::invalid_argument otherwise
/// and std::domain_error on a zero object.
EntropyEstimate entropy_estimate(const GrowthSeries& series, int tail_k = 4, double tolerance = 0.05);

/// Limit estimates for a positive sequence a_1, a_2, ...: the first of
/// (1/n) log a_n, the second of (1/n) log(1 + a_1 + ... + a_n). Both use
/// the tail difference (log s_N - log s_M) / (N - M) with M = N / 2, which
/// removes the constant offset of a linear log-growth.
struct FeketeLimit {
    double first = 0.0;
    double second = 0.0;
    double first_inf = 0.0;  // min_n (1/n) log a_n
};

FeketeLimit fekete_limit(const std::vector<double>& a);

/// A tower certificate: the multiset of shifts n_i of base copies used to
/// build the object, worth sum_i exp(n_i t).
struct DecompCertificate {
    std::string base;
    std::string object;
    std::map<int, long long> shifts;  // shift -> multiplicity

    long long size() const;
    friend bool operator==(const DecompCertificate&, const DecompCertificate&) = default;
};

DecompCertificate make_certificate(std::string base, std::string object, const std::vector<int>& shifts);
double cert_eval(const DecompCertificate& c, double t);
double cert_log_eval(const DecompCertificate& c, double t);
/// c1 certifies E' over E, c2 certifies E'' over E'; the result certifies
/// E'' over E with all pairwise sums. Throws on label mismatch.
DecompCertificate cert_compose(const DecompCertificate& c1, const DecompCertificate& c2);
/// For a triangle F' -> F -> F'': union of the two certificates.
DecompCertificate cert_triangle(const DecompCertificate& c1, const DecompCertificate& c2, std::string object);
/// c certifies F over E; c1 and c2 certify E' and E'' over G for a triangle
/// E' -> E -> E''. Each shift n of c becomes (c1 + n) and (c2 + n).
DecompCertificate cert_refine(const DecompCertificate& c, const DecompCertificate& c1, const DecompCertificate& c2);
/// Certificate of X over the sum of all projectives: one shift per summand.
DecompCertificate tower_certificate(const TwistedComplex& x, std::string base, std::string object);

struct TwistBound {
    DecompCertificate certificate;  // of T^n G over G'
    DecompCertificate base;         // of G over G'
    DecompCertificate twist;        // of T G'[-1] over G'
    std::vector<DecompCertificate> steps;  // of (C_S[2])^i R G[1] over R G', i < n
    /// max(eval(base), 1 + eval(twist)).
    double m_t(double t) const;
    /// M_t (1 + sum_i eval(steps[i])), the closed-form bound the certificate obeys.
    double closed_form(double t) const;
};

/// Unrolls T^n G through the twist triangles. G' must be the sum of all
/// projectives. For P-objects G must equal G'.
TwistBound cert_twist_bound(const ModelSphericalFunctor& s, const TwistedComplex& g, const TwistedComplex& g_prime,
                            int n);

/// Predicted range of h_t for a twist with h_t(C_S[2]) = slope * t.
struct Envelope {
    double lower = 0.0;
    double upper = 0.0;
    std::string lower_source;
    std::string upper_source;
};

Envelope twist_envelope(int slope, double t, bool kernel_witness);

enum class Verdict { within_envelope, outside_envelope, incomplete, hypothesis_not_met };
std::string to_string(Verdict v);

double default_tolerance(double t);
Verdict judge(const EntropyEstimate& estimate, const Envelope& envelope, bool complete, double tolerance);

}  // namespace twistlab
