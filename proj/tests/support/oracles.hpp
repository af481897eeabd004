#pragma once
// Independent reference computations for the tests. Nothing here calls the
// library's linear algebra or Hom machinery; only the algebra's structure
// constants and the complexes' raw data are read.

#include <cstdint>
#include <map>
#include <random>
#include <vector>

#include "twistlab/complex.hpp"
#include "twistlab/zoo.hpp"

namespace oracle {

using i64 = std::int64_t;

inline i64 mod(i64 a, i64 p) { return ((a % p) + p) % p; }

inline i64 pow_mod(i64 b, i64 e, i64 p) {
    i64 r = 1;
    b = mod(b, p);
    while (e) {
        if (e & 1) r = static_cast<i64>((__int128)r * b % p);
        b = static_cast<i64>((__int128)b * b % p);
        e >>= 1;
    }
    return r;
}

/// Plain Gaussian elimination mod p.
inline std::size_t rank_mod_p(std::vector<std::vector<i64>> m, i64 p) {
    std::size_t r = 0;
    const std::size_t cols = m.empty() ? 0 : m.front().size();
    for (std::size_t c = 0; c < cols && r < m.size(); ++c) {
        std::size_t piv = r;
        while (piv < m.size() && mod(m[piv][c], p) == 0) ++piv;
        if (piv == m.size()) continue;
        std::swap(m[piv], m[r]);
        const i64 inv = pow_mod(m[r][c], p - 2, p);
        for (auto& v : m[r]) v = mod(v * inv, p);
        for (std::size_t i = 0; i < m.size(); ++i) {
            if (i == r) continue;
            const i64 f = mod(m[i][c], p);
            if (f == 0) continue;
            for (std::size_t j = 0; j < cols; ++j) m[i][j] = mod(m[i][j] - f * m[r][j], p);
        }
        ++r;
    }
    return r;
}

/// Rank over Q as the largest rank modulo three large primes. Exact unless
/// all three divide the same nonzero minor, impossible for the small
/// entries used in tests.
inline std::size_t rank_rational(const std::vector<std::vector<i64>>& m) {
    std::size_t best = 0;
    for (i64 p : {1000003LL, 998244353LL, 1000000007LL}) best = std::max(best, rank_mod_p(m, p));
    return best;
}

using Entry = std::map<int, i64>;  // basis -> coefficient mod p

inline i64 residue(const twistlab::Scalar& s, i64 p) {
    const mpz_class num = s.get_num(), den = s.get_den();
    const i64 n = mod(mpz_class(num % p).get_si(), p);
    const i64 d = mod(mpz_class(den % p).get_si(), p);
    return mod(n * pow_mod(d, p - 2, p), p);
}

/// product(x, y) as "y then x", read straight from the structure constants.
inline Entry mul(const twistlab::GradedAlgebra& a, const Entry& x, const Entry& y, i64 p) {
    Entry out;
    for (const auto& [bx, cx] : x)
        for (const auto& [by, cy] : y)
            for (const auto& t : a.product(bx, by)) out[t.basis] = mod(out[t.basis] + cx * cy % p * mod(t.coeff, p), p);
    for (auto it = out.begin(); it != out.end();) it = it->second == 0 ? out.erase(it) : std::next(it);
    return out;
}

inline std::map<std::pair<int, int>, Entry> raw_differential(const twistlab::TwistedComplex& x, i64 p) {
    std::map<std::pair<int, int>, Entry> d;
    for (const auto& [key, el] : x.differential())
        for (const auto& [b, c] : el) d[key][b] = residue(c, p);
    return d;
}

/// dim H^m Hom(X, Y) for every m, from the definition: chains are basis
/// elements e from summand a of X to summand b of Y in degree
/// deg e + shift(a) - shift(b), d(f) = dY f - (-1)^m f dX.
inline std::map<int, long long> hom_dims(const twistlab::TwistedComplex& x, const twistlab::TwistedComplex& y) {
    const twistlab::GradedAlgebra& a = x.algebra();
    // over Q, work modulo a large prime (structure constants are tiny)
    const i64 p = a.field().characteristic() == 0 ? 1000003 : a.field().characteristic();
    struct Gen {
        int src, dst, basis;
    };
    std::map<int, std::vector<Gen>> gens;
    for (int s = 0; s < static_cast<int>(x.size()); ++s)
        for (int t = 0; t < static_cast<int>(y.size()); ++t) {
            const auto& sx = x.summands()[static_cast<std::size_t>(s)];
            const auto& ty = y.summands()[static_cast<std::size_t>(t)];
            for (int b = 0; b < static_cast<int>(a.dim()); ++b) {
                const auto& e = a.element(b);
                if (e.src == sx.vertex && e.dst == ty.vertex) gens[e.degree + sx.shift - ty.shift].push_back({s, t, b});
            }
        }
    const auto dx = raw_differential(x, p), dy = raw_differential(y, p);
    auto index = [&](int m, int s, int t, int b) -> long {
        const auto& g = gens[m];
        for (std::size_t i = 0; i < g.size(); ++i)
            if (g[i].src == s && g[i].dst == t && g[i].basis == b) return static_cast<long>(i);
        return -1;
    };
    // matrix of d: C^m -> C^{m+1}
    auto dmat = [&](int m) {
        const auto src = gens.count(m) ? gens[m] : std::vector<Gen>{};
        const std::size_t rows = gens.count(m + 1) ? gens[m + 1].size() : 0;
        std::vector<std::vector<i64>> mat(rows, std::vector<i64>(src.size(), 0));
        const i64 sign = (m % 2 == 0) ? 1 : p - 1;
        for (std::size_t j = 0; j < src.size(); ++j) {
            const Gen& g = src[j];
            const Entry f{{g.basis, 1}};
            // dY f: entries (t', s) from dY[t'][t] * f
            for (const auto& [key, e] : dy) {
                if (key.second != g.dst) continue;
                for (const auto& [b, c] : mul(a, e, f, p)) {
                    const long i = index(m + 1, g.src, key.first, b);
                    if (i >= 0) mat[static_cast<std::size_t>(i)][j] = mod(mat[static_cast<std::size_t>(i)][j] + c, p);
                }
            }
            // -(-1)^m f dX: entries (t, s') from f * dX[s][s']
            for (const auto& [key, e] : dx) {
                if (key.first != g.src) continue;
                for (const auto& [b, c] : mul(a, f, e, p)) {
                    const long i = index(m + 1, key.second, g.dst, b);
                    if (i >= 0) mat[static_cast<std::size_t>(i)][j] = mod(mat[static_cast<std::size_t>(i)][j] - sign * c, p);
                }
            }
        }
        return mat;
    };
    std::map<int, long long> out;
    if (gens.empty()) return out;
    const int lo = gens.begin()->first, hi = std::prev(gens.end())->first;
    std::map<int, std::size_t> rk;
    for (int m = lo - 1; m <= hi; ++m) {
        auto mat = dmat(m);
        rk[m] = mat.empty() ? 0 : rank_mod_p(mat, p);
    }
    for (int m = lo; m <= hi; ++m) {
        const long long n = gens.count(m) ? static_cast<long long>(gens[m].size()) : 0;
        const long long h = n - static_cast<long long>(rk[m]) - static_cast<long long>(rk[m - 1]);
        if (h != 0) out[m] = h;
    }
    return out;
}

/// dims against the sum of all projectives.
inline std::map<int, long long> generator_dims(const twistlab::TwistedComplex& x) {
    return oracle::hom_dims(twistlab::TwistedComplex::generator(x.algebra_ptr()), x);
}

/// Sum_m (-1)^m dim H^m Hom(X, Y).
inline long long euler_characteristic(const std::map<int, long long>& dims) {
    long long s = 0;
    for (const auto& [m, d] : dims) s += (m % 2 == 0 ? d : -d);
    return s;
}

}  // namespace oracle

namespace gen {

using Rng = std::mt19937_64;

inline int uniform(Rng& rng, int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng); }

/// A random closed degree-0 map X -> Y: a random combination of cocycle
/// representatives plus a random coboundary.
inline twistlab::ChainMap random_closed_map(const twistlab::TwistedComplex& x, const twistlab::TwistedComplex& y, Rng& rng) {
    using namespace twistlab;
    const Field& f = x.algebra().field();
    const HomComplex h(x, y);
    ChainMap out(x, y, 0);
    for (const ChainMap& r : h.representatives(0))
        out = add(out, scale(r, f.from_int(uniform(rng, -2, 2))));
    const std::size_t n = h.chain_dim(-1);
    if (n > 0 && uniform(rng, 0, 1)) {
        Vector v(n);
        for (auto& c : v) c = f.from_int(uniform(rng, -1, 1));
        out = add(out, hom_differential(h.to_map(-1, v)));
    }
    return out;
}

/// Small random complexes built from projectives by shifts, sums and cones
/// of random closed maps (so delta^2 = 0 holds by construction, and
/// invertible components appear often enough to give minimize work).
inline twistlab::TwistedComplex random_complex(const twistlab::AlgebraPtr& a, Rng& rng, int ops = 3,
                                               std::size_t max_size = 8) {
    using namespace twistlab;
    const int nv = static_cast<int>(a->num_vertices());
    auto proj = [&] { return TwistedComplex::projective(a, uniform(rng, 0, nv - 1), uniform(rng, -2, 2)); };
    TwistedComplex x = proj();
    for (int k = 0; k < ops; ++k) {
        TwistedComplex next;
        switch (uniform(rng, 0, 4)) {
            case 0: next = direct_sum(x, proj()); break;
            case 1: next = shift(x, uniform(rng, -1, 1)); break;
            case 2: {  // cone of X -> P
                const TwistedComplex p = proj();
                next = cone(random_closed_map(x, p, rng));
                break;
            }
            case 3: {  // cone of P -> X
                const TwistedComplex p = proj();
                next = cone(random_closed_map(p, x, rng));
                break;
            }
            default: next = cone(random_closed_map(x, x, rng)); break;
        }
        if (next.size() <= max_size) x = std::move(next);
    }
    return x;
}

}  // namespace gen
