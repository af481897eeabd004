#include "twistlab/knum.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace twistlab {

KClass k_class(const TwistedComplex& x) {
    KClass out(x.algebra().num_vertices(), 0);
    for (const Summand& s : x.summands()) out[static_cast<std::size_t>(s.vertex)] += (s.shift % 2 == 0) ? 1 : -1;
    return out;
}

EulerData euler_data(const GradedAlgebra& a) { return {cartan_euler(a), a.vertices()}; }

long long euler_pairing(const IntMatrix& chi, const KClass& x, const KClass& y) {
    if (x.size() != chi.cols() || y.size() != chi.rows()) throw std::invalid_argument("euler_pairing: size mismatch");
    long long s = 0;
    for (std::size_t i = 0; i < x.size(); ++i)
        for (std::size_t j = 0; j < y.size(); ++j) s += x[i] * y[j] * chi(j, i);
    return s;
}

IntMatrix functor_matrix(const EndofunctorSpec& phi, const AlgebraPtr& algebra) {
    const std::size_t n = algebra->num_vertices();
    IntMatrix m(n, n);
    for (std::size_t j = 0; j < n; ++j) {
        const KClass c = k_class(phi.apply(TwistedComplex::projective(algebra, static_cast<int>(j))));
        for (std::size_t i = 0; i < n; ++i) m(i, j) = c[i];
    }
    return m;
}

// ------------------------------------------------------------- polynomials

namespace {

using QMatrix = std::vector<std::vector<mpq_class>>;

QMatrix to_q(const IntMatrix& m) {
    QMatrix q(m.rows(), std::vector<mpq_class>(m.cols()));
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = 0; j < m.cols(); ++j) q[i][j] = mpq_class(static_cast<long>(m(i, j)));
    return q;
}

QMatrix mul(const QMatrix& a, const QMatrix& b) {
    const std::size_t n = a.size();
    const std::size_t k = b.size();
    const std::size_t m = k ? b[0].size() : 0;
    QMatrix out(n, std::vector<mpq_class>(m));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t l = 0; l < k; ++l) {
            if (sgn(a[i][l]) == 0) continue;
            for (std::size_t j = 0; j < m; ++j) out[i][j] += a[i][l] * b[l][j];
        }
    return out;
}

std::vector<mpq_class> charpoly_q(const QMatrix& a) {
    const std::size_t n = a.size();
    std::vector<mpq_class> c(n + 1);
    c[n] = 1;
    QMatrix mk(n, std::vector<mpq_class>(n));
    for (std::size_t k = 1; k <= n; ++k) {
        QMatrix next = mul(a, mk);
        for (std::size_t i = 0; i < n; ++i) next[i][i] += c[n - k + 1];
        mk = std::move(next);
        const QMatrix am = mul(a, mk);
        mpq_class tr = 0;
        for (std::size_t i = 0; i < n; ++i) tr += am[i][i];
        c[n - k] = -tr / static_cast<long>(k);
    }
    return c;
}

std::vector<mpz_class> to_integer_poly(const std::vector<mpq_class>& c) {
    std::vector<mpz_class> out;
    for (const mpq_class& q : c) {
        if (q.get_den() != 1) throw std::logic_error("characteristic polynomial is not integral");
        out.push_back(q.get_num());
    }
    return out;
}

// Divides p by (x - r), returning the quotient; p(r) must be zero.
std::vector<mpz_class> deflate(const std::vector<mpz_class>& p, const mpz_class& r) {
    const std::size_t n = p.size() - 1;
    std::vector<mpz_class> q(n);
    mpz_class carry = 0;
    for (std::size_t k = n; k-- > 0;) {
        carry = p[k + 1] + carry * r;
        q[k] = carry;
    }
    return q;
}

mpz_class evaluate(const std::vector<mpz_class>& p, const mpz_class& x) {
    mpz_class v = 0;
    for (std::size_t k = p.size(); k-- > 0;) v = v * x + p[k];
    return v;
}

std::vector<std::complex<long double>> numeric_roots(const std::vector<mpz_class>& p) {
    const std::size_t n = p.size() - 1;
    std::vector<std::complex<long double>> roots;
    if (n == 0) return roots;
    std::vector<long double> c(p.size());
    for (std::size_t k = 0; k < p.size(); ++k) c[k] = static_cast<long double>(p[k].get_d());
    long double bound = 0;
    for (std::size_t k = 0; k < n; ++k) bound = std::max(bound, std::abs(c[k]));
    bound += 1;
    const auto eval = [&](std::complex<long double> z) {
        std::complex<long double> v = 0, dv = 0;
        for (std::size_t k = n + 1; k-- > 0;) {
            dv = dv * z + v;
            v = v * z + c[k];
        }
        return std::pair{v, dv};
    };
    for (std::size_t k = 0; k < n; ++k)
        roots.push_back(std::polar(bound * 0.5L, 2.0L * 3.14159265358979323846L * (static_cast<long double>(k) + 0.25L) /
                                                     static_cast<long double>(n)));
    // Aberth iteration.
    for (int iter = 0; iter < 500; ++iter) {
        long double change = 0;
        for (std::size_t i = 0; i < n; ++i) {
            const auto [v, dv] = eval(roots[i]);
            if (std::abs(v) == 0) continue;
            const std::complex<long double> ratio = v / dv;
            std::complex<long double> sum = 0;
            for (std::size_t j = 0; j < n; ++j)
                if (j != i) sum += 1.0L / (roots[i] - roots[j]);
            const std::complex<long double> step = ratio / (1.0L - ratio * sum);
            roots[i] -= step;
            change = std::max(change, std::abs(step));
        }
        if (change < 1e-17L) break;
    }
    return roots;
}

double gelfand(const IntMatrix& m) {
    const std::size_t n = m.rows();
    if (n == 0) return 0.0;
    std::vector<double> a(n * n);
    for (std::size_t i = 0; i < n * n; ++i) a[i] = static_cast<double>(m(i / n, i % n));
    const auto norm = [&](const std::vector<double>& x) {
        double s = 0;
        for (double v : x) s += v * v;
        return std::sqrt(s);
    };
    double log_scale = 0;
    const int squarings = 8;
    for (int s = 0; s < squarings; ++s) {
        const double nv = norm(a);
        if (nv == 0) return 0.0;
        for (double& v : a) v /= nv;
        log_scale = 2 * (log_scale + std::log(nv));
        std::vector<double> b(n * n, 0.0);
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t k = 0; k < n; ++k)
                for (std::size_t j = 0; j < n; ++j) b[i * n + j] += a[i * n + k] * a[k * n + j];
        a = std::move(b);
    }
    const double nv = norm(a);
    if (nv == 0) return 0.0;
    return std::exp((log_scale + std::log(nv)) / static_cast<double>(1 << squarings));
}

}  // namespace

std::vector<mpz_class> characteristic_polynomial(const IntMatrix& m) {
    if (m.rows() != m.cols()) throw std::invalid_argument("characteristic_polynomial: matrix not square");
    return to_integer_poly(charpoly_q(to_q(m)));
}

std::string polynomial_to_string(const std::vector<mpz_class>& c) {
    std::ostringstream os;
    bool first = true;
    for (std::size_t k = c.size(); k-- > 0;) {
        if (c[k] == 0) continue;
        mpz_class coef = c[k];
        if (!first) os << (coef < 0 ? " - " : " + ");
        else if (coef < 0) os << "-";
        mpz_class mag = abs(coef);
        if (mag != 1 || k == 0) os << mag.get_str();
        if (k >= 1) os << (mag != 1 ? "*x" : "x");
        if (k >= 2) os << '^' << k;
        first = false;
    }
    return first ? "0" : os.str();
}

Spectrum spectrum(const IntMatrix& m) {
    Spectrum out;
    out.charpoly = characteristic_polynomial(m);
    std::vector<mpz_class> rest = out.charpoly;
    const auto add_root = [&](const mpz_class& r) {
        for (auto& [root, mult] : out.integer_roots)
            if (root == r) {
                ++mult;
                return;
            }
        out.integer_roots.emplace_back(r, 1);
    };
    while (rest.size() > 1 && rest[0] == 0) {
        rest.erase(rest.begin());
        add_root(0);
    }
    // Integer roots divide the constant term; bounded trial division.
    bool found = true;
    while (found && rest.size() > 1) {
        found = false;
        const mpz_class c0 = abs(rest[0]);
        const mpz_class limit = c0 < 1000000 ? c0 : mpz_class(1000000);
        for (mpz_class d = 1; d <= limit && !found; ++d) {
            if (c0 % d != 0) continue;
            for (const mpz_class& r : {mpz_class(d), mpz_class(-d)})
                if (evaluate(rest, r) == 0) {
                    rest = deflate(rest, r);
                    add_root(r);
                    found = true;
                    break;
                }
        }
    }
    std::sort(out.integer_roots.begin(), out.integer_roots.end(),
              [](const auto& a, const auto& b) { return a.first < b.first; });
    for (const auto& z : numeric_roots(rest))
        out.other_roots.emplace_back(static_cast<double>(z.real()), static_cast<double>(z.imag()));

    double best_int = -1;
    for (const auto& [r, mult] : out.integer_roots) best_int = std::max(best_int, std::abs(r.get_d()));
    double best_other = -1;
    for (const auto& z : out.other_roots) best_other = std::max(best_other, std::abs(z));
    out.radius_exact = best_int >= 0 && best_int >= best_other;
    out.spectral_radius = std::max({0.0, best_int, best_other});
    out.gelfand_estimate = gelfand(m);
    return out;
}

double spectral_radius(const IntMatrix& m) { return spectrum(m).spectral_radius; }

// ---------------------------------------------------------- numerical group

namespace {

std::vector<mpz_class> smith_invariants(const IntMatrix& chi) {
    std::vector<std::vector<mpz_class>> a(chi.rows(), std::vector<mpz_class>(chi.cols()));
    for (std::size_t i = 0; i < chi.rows(); ++i)
        for (std::size_t j = 0; j < chi.cols(); ++j) a[i][j] = static_cast<long>(chi(i, j));
    const std::size_t rows = chi.rows(), cols = chi.cols();
    std::vector<mpz_class> diag;
    for (std::size_t t = 0; t < std::min(rows, cols); ++t) {
        // Pivot: smallest nonzero magnitude in the remaining block.
        for (;;) {
            std::size_t pr = rows, pc = cols;
            for (std::size_t i = t; i < rows; ++i)
                for (std::size_t j = t; j < cols; ++j)
                    if (a[i][j] != 0 && (pr == rows || abs(a[i][j]) < abs(a[pr][pc]))) {
                        pr = i;
                        pc = j;
                    }
            if (pr == rows) return diag;
            std::swap(a[t], a[pr]);
            for (auto& row : a) std::swap(row[t], row[pc]);
            bool clean = true;
            for (std::size_t i = t + 1; i < rows; ++i) {
                const mpz_class q = a[i][t] / a[t][t];
                for (std::size_t j = t; j < cols; ++j) a[i][j] -= q * a[t][j];
                if (a[i][t] != 0) clean = false;
            }
            for (std::size_t j = t + 1; j < cols; ++j) {
                const mpz_class q = a[t][j] / a[t][t];
                for (std::size_t i = t; i < rows; ++i) a[i][j] -= q * a[i][t];
                if (a[t][j] != 0) clean = false;
            }
            if (!clean) continue;
            // Divisibility of the rest by the pivot.
            bool divides = true;
            for (std::size_t i = t + 1; i < rows && divides; ++i)
                for (std::size_t j = t + 1; j < cols; ++j)
                    if (a[i][j] % a[t][t] != 0) {
                        for (std::size_t k = t; k < cols; ++k) a[t][k] += a[i][k];
                        divides = false;
                        break;
                    }
            if (divides) break;
        }
        diag.push_back(abs(a[t][t]));
    }
    return diag;
}

std::vector<mpz_class> poly_divide(const std::vector<mpz_class>& num, const std::vector<mpz_class>& den) {
    std::vector<mpz_class> rem = num;
    const std::size_t dn = den.size() - 1;
    if (den.back() != 1) throw std::logic_error("poly_divide: divisor must be monic");
    if (num.size() < den.size()) throw std::logic_error("poly_divide: degree");
    std::vector<mpz_class> q(num.size() - dn);
    for (std::size_t k = q.size(); k-- > 0;) {
        q[k] = rem[k + dn];
        for (std::size_t j = 0; j <= dn; ++j) rem[k + j] -= q[k] * den[j];
    }
    for (std::size_t k = 0; k < dn; ++k)
        if (rem[k] != 0) throw std::logic_error("radical is not invariant under the functor matrix");
    return q;
}

}  // namespace

NumericalGroup numerical_group(const IntMatrix& chi) {
    NumericalGroup out;
    const ExactMatrix q = to_exact(chi, Field::rationals());
    for (const Vector& v : kernel_basis(q)) {
        mpz_class l = 1;
        for (const Scalar& s : v) l = lcm(l, s.get_den());
        KClass k;
        mpz_class g = 0;
        std::vector<mpz_class> ints;
        for (const Scalar& s : v) {
            const mpz_class z = s.get_num() * (l / s.get_den());
            ints.push_back(z);
            g = gcd(g, z);
        }
        for (const mpz_class& z : ints) k.push_back(mpz_class(z / g).get_si());
        out.radical_basis.push_back(std::move(k));
    }
    out.rank = chi.cols() - out.radical_basis.size();
    for (const mpz_class& d : smith_invariants(chi))
        if (d != 0) out.invariants.push_back(d);
    return out;
}

std::vector<mpz_class> numerical_charpoly(const IntMatrix& functor, const NumericalGroup& group) {
    const std::vector<mpz_class> full = characteristic_polynomial(functor);
    const std::size_t r = group.radical_basis.size();
    if (r == 0) return full;
    const std::size_t n = functor.rows();
    // Solve functor * R = R * Q for the restriction Q.
    ExactMatrix basis(Field::rationals(), n, r);
    for (std::size_t c = 0; c < r; ++c)
        for (std::size_t i = 0; i < n; ++i) basis.set(i, c, Scalar(static_cast<long>(group.radical_basis[c][i])));
    QMatrix restricted(r, std::vector<mpq_class>(r));
    for (std::size_t c = 0; c < r; ++c) {
        const KClass image = functor * group.radical_basis[c];
        Vector rhs;
        for (long long v : image) rhs.emplace_back(static_cast<long>(v));
        const auto sol = solve(basis, rhs);
        if (!sol) throw std::logic_error("radical is not invariant under the functor matrix");
        for (std::size_t k = 0; k < r; ++k) restricted[k][c] = (*sol)[k];
    }
    return poly_divide(full, to_integer_poly(charpoly_q(restricted)));
}

GYReport gy_check(const IntMatrix& functor, const IntMatrix& chi, double h0_estimate, double tolerance, bool smooth) {
    GYReport out;
    out.h0 = h0_estimate;
    out.tolerance = tolerance;
    const NumericalGroup group = numerical_group(chi);
    out.numerical_group_trivial = group.rank == 0;
    double rho = 0;
    if (out.numerical_group_trivial) {
        rho = spectral_radius(functor);
    } else {
        std::vector<mpz_class> cp = numerical_charpoly(functor, group);
        // Roots of cp: reuse the spectrum machinery on its companion matrix.
        const std::size_t d = cp.size() - 1;
        IntMatrix companion(d, d);
        for (std::size_t i = 1; i < d; ++i) companion(i, i - 1) = 1;
        for (std::size_t i = 0; i < d; ++i) companion(i, d - 1) = -cp[i].get_si();
        rho = spectral_radius(companion);
    }
    out.log_rho = std::log(rho);
    out.difference = out.h0 - out.log_rho;
    out.equality_holds = std::abs(out.difference) <= tolerance;
    out.inequality_holds = out.h0 >= out.log_rho - tolerance;
    out.label = smooth ? "verification" : "consistency experiment";
    return out;
}

std::optional<EigenWitness> cotwist_eigen_witness(const ModelSphericalFunctor& s) {
    const TwistedComplex& e = s.object();
    if (e.is_zero()) return std::nullopt;
    const KClass ke = k_class(e);
    const IntMatrix chi = cartan_euler(e.algebra());
    bool nonzero = false;
    for (std::size_t j = 0; j < chi.rows() && !nonzero; ++j) {
        KClass pj(chi.rows(), 0);
        pj[j] = 1;
        nonzero = euler_pairing(chi, ke, pj) != 0;
    }
    if (!nonzero) return std::nullopt;
    return EigenWitness{ke, s.cotwist_shift() % 2 == 0 ? 1 : -1};
}

}  // namespace twistlab
