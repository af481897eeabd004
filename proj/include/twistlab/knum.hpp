#pragma once

#include <complex>
#include <optional>
#include <string>
#include <vector>

#include <gmpxx.h>

#include "twistlab/functor.hpp"

namespace twistlab {

using KClass = std::vector<long long>;

/// Sum over summands of (-1)^shift times the unit vector of the vertex.
KClass k_class(const TwistedComplex& x);

struct EulerData {
    IntMatrix chi;  // chi(j, i) = chi(P_i, P_j)
    std::vector<std::string> vertices;
};

EulerData euler_data(const GradedAlgebra& a);

/// chi(X, Y) from the classes of X and Y.
long long euler_pairing(const IntMatrix& chi, const KClass& x, const KClass& y);

/// Column j is k_class(phi P_j).
IntMatrix functor_matrix(const EndofunctorSpec& phi, const AlgebraPtr& algebra);

/// Monic characteristic polynomial det(lambda I - M), coefficients from the
/// constant term up. Exact (Faddeev-LeVerrier over the rationals).
std::vector<mpz_class> characteristic_polynomial(const IntMatrix& m);
std::string polynomial_to_string(const std::vector<mpz_class>& coeffs);

struct Spectrum {
    std::vector<mpz_class> charpoly;
    std::vector<std::pair<mpz_class, int>> integer_roots;  // root, multiplicity
    std::vector<std::complex<double>> other_roots;
    /// Largest modulus over all roots; exact when attained by an integer root.
    double spectral_radius = 0.0;
    bool radius_exact = false;
    /// ||M^k||^(1/k) for a large k, as an independent cross-check.
    double gelfand_estimate = 0.0;
};

Spectrum spectrum(const IntMatrix& m);
double spectral_radius(const IntMatrix& m);

/// Euler form radical and the induced action on the numerical group.
struct NumericalGroup {
    std::size_t rank = 0;               // rank of the numerical group
    std::vector<KClass> radical_basis;  // integer basis of {v : chi(v, -) = 0}
    std::vector<mpz_class> invariants;  // nonzero Smith invariants of chi
};

NumericalGroup numerical_group(const IntMatrix& chi);
/// Characteristic polynomial of the functor matrix on the numerical group
/// (the quotient by the radical, which the matrix preserves).
std::vector<mpz_class> numerical_charpoly(const IntMatrix& functor, const NumericalGroup& group);

struct GYReport {
    double log_rho = 0.0;
    double h0 = 0.0;
    double difference = 0.0;
    double tolerance = 0.05;
    bool numerical_group_trivial = false;
    bool equality_holds = false;  // |h0 - log rho| <= tolerance
    bool inequality_holds = false;  // h0 >= log rho - tolerance
    std::string label;  // "consistency experiment" unless smoothness is established
};

/// Compares an entropy estimate at t = 0 with log of the spectral radius on
/// the numerical group (on K_0 when the numerical group is zero).
GYReport gy_check(const IntMatrix& functor, const IntMatrix& chi, double h0_estimate, double tolerance = 0.05,
                  bool smooth = false);

struct EigenWitness {
    KClass image;      // [S] v = k_class(E)
    int eigenvalue;    // of [C_S] on the rank-1 source lattice
};

/// For the one-vertex model source: [C_S] acts by (-1)^cotwist and [S] sends
/// the generator to k_class(E). A witness exists iff k_class(E) pairs
/// nontrivially with some projective.
std::optional<EigenWitness> cotwist_eigen_witness(const ModelSphericalFunctor& s);

}  // namespace twistlab
