#include "twistlab/complex.hpp"

#include <algorithm>
#include <cstdlib>
#include <set>
#include <string>

namespace twistlab {

// ------------------------------------------------------------------ elements

namespace {

void normalize(const Field& f, std::map<int, Scalar>& acc, Element& out) {
    out.clear();
    for (auto& [b, c] : acc)
        if (!f.is_zero(c)) out.emplace_back(b, c);
}

}  // namespace

Element element_mul(const GradedAlgebra& a, const Element& left, const Element& right) {
    const Field& f = a.field();
    std::map<int, Scalar> acc;
    for (const auto& [bl, cl] : left)
        for (const auto& [br, cr] : right) {
            const Product& p = a.product(bl, br);
            if (p.empty()) continue;
            const Scalar c = f.mul(cl, cr);
            for (const Term& t : p) {
                Scalar& slot = acc[t.basis];
                slot = f.add(slot, f.mul(c, f.from_int(t.coeff)));
            }
        }
    Element out;
    normalize(f, acc, out);
    return out;
}

void element_axpy(const Field& f, Element& acc, const Scalar& coeff, const Element& x) {
    if (f.is_zero(coeff) || x.empty()) return;
    Element out;
    out.reserve(acc.size() + x.size());
    std::size_t i = 0, j = 0;
    while (i < acc.size() || j < x.size()) {
        if (j == x.size() || (i < acc.size() && acc[i].first < x[j].first)) {
            out.push_back(std::move(acc[i++]));
        } else if (i == acc.size() || x[j].first < acc[i].first) {
            out.emplace_back(x[j].first, f.mul(coeff, x[j].second));
            ++j;
        } else {
            Scalar v = f.add(acc[i].second, f.mul(coeff, x[j].second));
            if (!f.is_zero(v)) out.emplace_back(acc[i].first, std::move(v));
            ++i;
            ++j;
        }
    }
    acc = std::move(out);
}

Element element_scale(const Field& f, const Element& x, const Scalar& c) {
    Element out;
    if (f.is_zero(c)) return out;
    out.reserve(x.size());
    for (const auto& [b, v] : x) out.emplace_back(b, f.mul(v, c));
    return out;
}

Element basis_element(const GradedAlgebra& a, int basis, long long coeff) {
    Scalar c = a.field().from_int(coeff);
    if (a.field().is_zero(c)) return {};
    return {{basis, c}};
}

std::size_t summand_cap() {
    if (const char* env = std::getenv("TWISTLAB_CAP")) {
        try {
            const long long v = std::stoll(env);
            if (v > 0) return static_cast<std::size_t>(v);
        } catch (const std::exception&) {
        }
    }
    return 20000;
}

namespace {

void check_cap(std::size_t n) {
    if (n > summand_cap())
        throw CapExceeded("summand cap exceeded: " + std::to_string(n) + " > " + std::to_string(summand_cap()));
}

void accumulate(const Field& f, MorphismMatrix& m, std::pair<int, int> key, const Scalar& c, const Element& e) {
    if (e.empty() || f.is_zero(c)) return;
    auto it = m.find(key);
    if (it == m.end()) {
        m.emplace(key, element_scale(f, e, c));
        return;
    }
    element_axpy(f, it->second, c, e);
    if (it->second.empty()) m.erase(it);
}

// Components of a morphism matrix grouped by source column or target row.
std::vector<std::vector<std::pair<int, const Element*>>> by_column(const MorphismMatrix& m, std::size_t cols) {
    std::vector<std::vector<std::pair<int, const Element*>>> out(cols);
    for (const auto& [key, e] : m) out[static_cast<std::size_t>(key.second)].emplace_back(key.first, &e);
    return out;
}

std::vector<std::vector<std::pair<int, const Element*>>> by_row(const MorphismMatrix& m, std::size_t rows) {
    std::vector<std::vector<std::pair<int, const Element*>>> out(rows);
    for (const auto& [key, e] : m) out[static_cast<std::size_t>(key.first)].emplace_back(key.second, &e);
    return out;
}

// Product of two morphism matrices: (outer after inner).
MorphismMatrix multiply(const GradedAlgebra& a, const MorphismMatrix& outer, const MorphismMatrix& inner,
                        std::size_t middle) {
    const Field& f = a.field();
    MorphismMatrix out;
    const auto inner_rows = by_row(inner, middle);
    for (const auto& [okey, oe] : outer) {
        const int mid = okey.second;
        for (const auto& [src, ie] : inner_rows[static_cast<std::size_t>(mid)])
            accumulate(f, out, {okey.first, src}, f.one(), element_mul(a, oe, *ie));
    }
    return out;
}

void check_entries(const GradedAlgebra& a, const std::vector<Summand>& src, const std::vector<Summand>& dst,
                   const MorphismMatrix& m, int degree, const char* what) {
    for (const auto& [key, e] : m) {
        const auto [row, col] = key;
        if (row < 0 || col < 0 || static_cast<std::size_t>(row) >= dst.size() ||
            static_cast<std::size_t>(col) >= src.size())
            throw std::invalid_argument(std::string(what) + ": entry index out of range");
        for (const auto& [b, c] : e) {
            const BasisElement& be = a.element(b);
            if (be.src != src[static_cast<std::size_t>(col)].vertex || be.dst != dst[static_cast<std::size_t>(row)].vertex)
                throw std::invalid_argument(std::string(what) + ": entry (" + std::to_string(row) + "," +
                                            std::to_string(col) + ") has element " + be.name +
                                            " with the wrong endpoints");
            if (be.degree + src[static_cast<std::size_t>(col)].shift - dst[static_cast<std::size_t>(row)].shift != degree)
                throw std::invalid_argument(std::string(what) + ": entry (" + std::to_string(row) + "," +
                                            std::to_string(col) + ") element " + be.name + " has the wrong degree");
        }
    }
}

MorphismMatrix cleaned(const Field& f, MorphismMatrix m) {
    for (auto it = m.begin(); it != m.end();) {
        std::erase_if(it->second, [&](const auto& t) { return f.is_zero(t.second); });
        std::sort(it->second.begin(), it->second.end(), [](const auto& x, const auto& y) { return x.first < y.first; });
        it = it->second.empty() ? m.erase(it) : std::next(it);
    }
    return m;
}

}  // namespace

std::optional<Element> degree_zero_inverse(const GradedAlgebra& a, int vertex, const Element& u) {
    const Field& f = a.field();
    const int e = a.idempotent(vertex);
    if (u.empty()) return std::nullopt;
    for (const auto& [b, c] : u) {
        const BasisElement& be = a.element(b);
        if (be.src != vertex || be.dst != vertex || be.degree != 0) return std::nullopt;
    }
    if (u.size() == 1 && u.front().first == e) return Element{{e, f.inv(u.front().second)}};
    std::vector<int> corner;
    for (int b : a.elements_between(vertex, vertex))
        if (a.element(b).degree == 0) corner.push_back(b);
    std::map<int, std::size_t> row;
    for (std::size_t i = 0; i < corner.size(); ++i) row[corner[i]] = i;
    ExactMatrix m(f, corner.size(), corner.size());
    for (std::size_t k = 0; k < corner.size(); ++k)
        for (const auto& [b, c] : element_mul(a, u, {{corner[k], f.one()}})) m.accumulate(row.at(b), k, c);
    Vector rhs(corner.size(), f.zero());
    rhs[row.at(e)] = f.one();
    const auto sol = solve(m, rhs);
    if (!sol) return std::nullopt;
    Element inv;
    for (std::size_t k = 0; k < corner.size(); ++k)
        if (!f.is_zero((*sol)[k])) inv.emplace_back(corner[k], (*sol)[k]);
    if (element_mul(a, inv, u) != Element{{e, f.one()}}) return std::nullopt;
    return inv;
}

// ------------------------------------------------------------ TwistedComplex

TwistedComplex::TwistedComplex(AlgebraPtr algebra, std::vector<Summand> summands, MorphismMatrix differential,
                               bool check_square_zero)
    : algebra_(std::move(algebra)), summands_(std::move(summands)) {
    if (!algebra_) throw std::invalid_argument("twisted complex needs an algebra");
    check_cap(summands_.size());
    for (const Summand& s : summands_)
        if (s.vertex < 0 || static_cast<std::size_t>(s.vertex) >= algebra_->num_vertices())
            throw std::invalid_argument("summand vertex out of range");
    differential_ = cleaned(algebra_->field(), std::move(differential));
    check_entries(*algebra_, summands_, summands_, differential_, 1, "differential");
    if (check_square_zero && !is_square_zero()) throw std::invalid_argument("differential does not square to zero");
}

TwistedComplex TwistedComplex::zero(AlgebraPtr algebra) { return TwistedComplex(std::move(algebra), {}, {}); }

TwistedComplex TwistedComplex::projective(AlgebraPtr algebra, int vertex, int shift) {
    return TwistedComplex(std::move(algebra), {{vertex, shift}}, {});
}

TwistedComplex TwistedComplex::generator(AlgebraPtr algebra) {
    std::vector<Summand> s;
    for (int v = 0; v < static_cast<int>(algebra->num_vertices()); ++v) s.push_back({v, 0});
    return TwistedComplex(std::move(algebra), std::move(s), {});
}

bool TwistedComplex::is_square_zero() const {
    return multiply(*algebra_, differential_, differential_, summands_.size()).empty();
}

bool same_algebra(const TwistedComplex& x, const TwistedComplex& y) {
    if (!x.algebra_ptr() || !y.algebra_ptr()) return false;
    return x.algebra_ptr() == y.algebra_ptr() || x.algebra() == y.algebra();
}

// ------------------------------------------------------------------ ChainMap

ChainMap::ChainMap(TwistedComplex source, TwistedComplex target, int degree, MorphismMatrix components)
    : source_(std::move(source)), target_(std::move(target)), degree_(degree) {
    if (!same_algebra(source_, target_)) throw std::invalid_argument("chain map between different algebras");
    components_ = cleaned(source_.algebra().field(), std::move(components));
    check_entries(source_.algebra(), source_.summands(), target_.summands(), components_, degree_, "chain map");
}

ChainMap ChainMap::identity(const TwistedComplex& x) {
    MorphismMatrix m;
    for (int i = 0; i < static_cast<int>(x.size()); ++i)
        m[{i, i}] = basis_element(x.algebra(), x.algebra().idempotent(x.summands()[static_cast<std::size_t>(i)].vertex));
    return ChainMap(x, x, 0, std::move(m));
}

ChainMap compose(const ChainMap& g, const ChainMap& f) {
    if (g.source().summands() != f.target().summands()) throw std::invalid_argument("compose: shape mismatch");
    return ChainMap(f.source(), g.target(), f.degree() + g.degree(),
                    multiply(f.source().algebra(), g.components(), f.components(), f.target().size()));
}

ChainMap add(const ChainMap& f, const ChainMap& g) {
    if (f.degree() != g.degree() || f.source().summands() != g.source().summands() ||
        f.target().summands() != g.target().summands())
        throw std::invalid_argument("add: shape mismatch");
    const Field& field = f.source().algebra().field();
    MorphismMatrix m = f.components();
    for (const auto& [key, e] : g.components()) accumulate(field, m, key, field.one(), e);
    return ChainMap(f.source(), f.target(), f.degree(), std::move(m));
}

ChainMap scale(const ChainMap& f, const Scalar& c) {
    const Field& field = f.source().algebra().field();
    MorphismMatrix m;
    for (const auto& [key, e] : f.components()) accumulate(field, m, key, c, e);
    return ChainMap(f.source(), f.target(), f.degree(), std::move(m));
}

ChainMap hom_differential(const ChainMap& f) {
    const GradedAlgebra& a = f.source().algebra();
    const Field& field = a.field();
    MorphismMatrix out = multiply(a, f.target().differential(), f.components(), f.target().size());
    const MorphismMatrix right = multiply(a, f.components(), f.source().differential(), f.source().size());
    const Scalar sign = f.degree() % 2 == 0 ? field.neg(field.one()) : field.one();
    for (const auto& [key, e] : right) accumulate(field, out, key, sign, e);
    return ChainMap(f.source(), f.target(), f.degree() + 1, std::move(out));
}

bool is_closed(const ChainMap& f) { return hom_differential(f).is_zero(); }

// ---------------------------------------------------------------- operations

TwistedComplex shift(const TwistedComplex& x, int n) {
    std::vector<Summand> s = x.summands();
    for (Summand& su : s) su.shift += n;
    MorphismMatrix d = x.differential();
    if (n % 2 != 0) {
        const Field& f = x.algebra().field();
        for (auto& [key, e] : d) e = element_scale(f, e, f.neg(f.one()));
    }
    return TwistedComplex(x.algebra_ptr(), std::move(s), std::move(d), false);
}

TwistedComplex direct_sum(const TwistedComplex& x, const TwistedComplex& y) {
    if (!same_algebra(x, y)) throw std::invalid_argument("direct_sum: algebra mismatch");
    check_cap(x.size() + y.size());
    std::vector<Summand> s = x.summands();
    s.insert(s.end(), y.summands().begin(), y.summands().end());
    MorphismMatrix d = x.differential();
    const int off = static_cast<int>(x.size());
    for (const auto& [key, e] : y.differential()) d[{key.first + off, key.second + off}] = e;
    return TwistedComplex(x.algebra_ptr(), std::move(s), std::move(d), false);
}

TwistedComplex direct_sum(const std::vector<TwistedComplex>& parts, AlgebraPtr algebra) {
    TwistedComplex out = TwistedComplex::zero(std::move(algebra));
    for (const TwistedComplex& p : parts) out = direct_sum(out, p);
    return out;
}

namespace {
ConeObserver& cone_observer() {
    static ConeObserver observer;
    return observer;
}
}  // namespace

void set_cone_observer(ConeObserver observer) { cone_observer() = std::move(observer); }

TwistedComplex cone(const ChainMap& f) {
    if (f.degree() != 0) throw std::invalid_argument("cone: map must have degree 0");
    if (!is_closed(f)) throw std::invalid_argument("cone: map is not closed");
    const TwistedComplex& x = f.source();
    const TwistedComplex& y = f.target();
    check_cap(x.size() + y.size());
    const Field& field = x.algebra().field();
    std::vector<Summand> s = y.summands();
    for (Summand su : x.summands()) {
        su.shift += 1;
        s.push_back(su);
    }
    const int off = static_cast<int>(y.size());
    MorphismMatrix d = y.differential();
    for (const auto& [key, e] : f.components()) d[{key.first, key.second + off}] = e;
    for (const auto& [key, e] : x.differential())
        d[{key.first + off, key.second + off}] = element_scale(field, e, field.neg(field.one()));
    TwistedComplex out(x.algebra_ptr(), std::move(s), std::move(d));
    if (cone_observer()) cone_observer()(f, out);
    return out;
}

TwistedComplex minimize(const TwistedComplex& x) {
    const GradedAlgebra& a = x.algebra();
    const Field& f = a.field();
    const std::size_t n = x.size();
    MorphismMatrix d = x.differential();
    std::vector<std::set<int>> rows_of_col(n), cols_of_row(n);
    for (const auto& [key, e] : d) {
        rows_of_col[static_cast<std::size_t>(key.second)].insert(key.first);
        cols_of_row[static_cast<std::size_t>(key.first)].insert(key.second);
    }
    std::vector<bool> alive(n, true);

    const auto set_entry = [&](int row, int col, Element e) {
        if (e.empty()) {
            d.erase({row, col});
            rows_of_col[static_cast<std::size_t>(col)].erase(row);
            cols_of_row[static_cast<std::size_t>(row)].erase(col);
        } else {
            d[{row, col}] = std::move(e);
            rows_of_col[static_cast<std::size_t>(col)].insert(row);
            cols_of_row[static_cast<std::size_t>(row)].insert(col);
        }
    };
    // An entry b <- a can be cancelled when it is an invertible degree-0
    // endomorphism of P_v and a, b carry no other entries between them.
    const auto pivot_inverse = [&](int b, int a_, const Element& e) -> std::optional<Element> {
        if (a_ == b) return std::nullopt;
        const Summand& sa = x.summands()[static_cast<std::size_t>(a_)];
        const Summand& sb = x.summands()[static_cast<std::size_t>(b)];
        if (sa.vertex != sb.vertex) return std::nullopt;
        if (d.contains({a_, a_}) || d.contains({b, b}) || d.contains({a_, b})) return std::nullopt;
        return degree_zero_inverse(a, sa.vertex, e);
    };

    for (;;) {
        int b = -1, src = -1;
        Element inv;
        for (const auto& [key, e] : d)
            if (auto p = pivot_inverse(key.first, key.second, e)) {
                b = key.first;
                src = key.second;
                inv = std::move(*p);
                break;
            }
        if (b < 0) break;
        const Scalar minus_one = f.neg(f.one());

        std::vector<std::pair<int, Element>> into_y;  // y <- src
        for (int y : rows_of_col[static_cast<std::size_t>(src)])
            if (y != b) into_y.emplace_back(y, d.at({y, src}));
        std::vector<std::pair<int, Element>> from_x;  // b <- x, premultiplied by the inverse
        for (int xc : cols_of_row[static_cast<std::size_t>(b)])
            if (xc != src) from_x.emplace_back(xc, element_mul(a, inv, d.at({b, xc})));

        for (const auto& [y, ey] : into_y)
            for (const auto& [xc, ex] : from_x) {
                if (y == b || y == src || xc == b || xc == src) continue;
                Element cur;
                if (auto found = d.find({y, xc}); found != d.end()) cur = found->second;
                element_axpy(f, cur, minus_one, element_mul(a, ey, ex));
                set_entry(y, xc, std::move(cur));
            }
        for (int k : {b, src}) {
            for (int r : std::set<int>(rows_of_col[static_cast<std::size_t>(k)])) set_entry(r, k, {});
            for (int c : std::set<int>(cols_of_row[static_cast<std::size_t>(k)])) set_entry(k, c, {});
            alive[static_cast<std::size_t>(k)] = false;
        }
    }

    std::vector<int> new_index(n, -1);
    std::vector<Summand> s;
    for (std::size_t i = 0; i < n; ++i)
        if (alive[i]) {
            new_index[i] = static_cast<int>(s.size());
            s.push_back(x.summands()[i]);
        }
    MorphismMatrix nd;
    for (auto& [key, e] : d)
        nd[{new_index[static_cast<std::size_t>(key.first)], new_index[static_cast<std::size_t>(key.second)]}] = e;
    return TwistedComplex(x.algebra_ptr(), std::move(s), std::move(nd));
}

// ---------------------------------------------------------------- HomComplex

HomComplex::HomComplex(const TwistedComplex& x, const TwistedComplex& y) : x_(x), y_(y) {
    if (!same_algebra(x, y)) throw std::invalid_argument("hom_complex: algebra mismatch");
    const GradedAlgebra& a = x.algebra();
    for (int i = 0; i < static_cast<int>(x.size()); ++i) {
        const Summand& sa = x.summands()[static_cast<std::size_t>(i)];
        for (int j = 0; j < static_cast<int>(y.size()); ++j) {
            const Summand& sb = y.summands()[static_cast<std::size_t>(j)];
            for (int e : a.elements_between(sa.vertex, sb.vertex)) {
                const int m = a.element(e).degree + sa.shift - sb.shift;
                auto& list = gens_[m];
                index_[m].emplace(std::make_tuple(i, j, e), list.size());
                list.push_back({i, j, e});
            }
        }
    }
}

const std::vector<HomComplex::Generator>& HomComplex::generators(int m) const {
    static const std::vector<Generator> empty;
    auto it = gens_.find(m);
    return it == gens_.end() ? empty : it->second;
}

std::size_t HomComplex::chain_dim(int m) const { return generators(m).size(); }

std::map<int, std::size_t> HomComplex::chain_dims() const {
    std::map<int, std::size_t> out;
    for (const auto& [m, g] : gens_) out[m] = g.size();
    return out;
}

std::size_t HomComplex::index_of(int m, int src, int dst, int basis) const {
    return index_.at(m).at(std::make_tuple(src, dst, basis));
}

SparseMatrix HomComplex::differential_matrix(int m) const {
    const GradedAlgebra& a = x_.algebra();
    const Field& f = a.field();
    SparseMatrix out(f, chain_dim(m + 1), chain_dim(m));
    if (out.rows() == 0 || out.cols() == 0) return out;
    const auto y_cols = by_column(y_.differential(), y_.size());
    const auto x_rows = by_row(x_.differential(), x_.size());
    const Scalar sign = m % 2 == 0 ? f.neg(f.one()) : f.one();
    const auto& gens = generators(m);
    for (std::size_t col = 0; col < gens.size(); ++col) {
        const Generator& g = gens[col];
        const Element e{{g.basis, f.one()}};
        for (const auto& [b2, dy] : y_cols[static_cast<std::size_t>(g.dst)])
            for (const auto& [k, c] : element_mul(a, *dy, e)) out.accumulate(index_of(m + 1, g.src, b2, k), col, c);
        for (const auto& [a2, dx] : x_rows[static_cast<std::size_t>(g.src)])
            for (const auto& [k, c] : element_mul(a, e, *dx))
                out.accumulate(index_of(m + 1, a2, g.dst, k), col, f.mul(sign, c));
    }
    out.canonicalize();
    return out;
}

HomSpaceDims HomComplex::cohomology() const {
    HomSpaceDims out;
    if (gens_.empty()) return out;
    const int lo = gens_.begin()->first;
    const int hi = gens_.rbegin()->first;
    std::map<int, std::size_t> ranks;
    for (int m = lo; m <= hi; ++m) ranks[m] = rank(differential_matrix(m));
    for (int m = lo; m <= hi; ++m) {
        const std::size_t prev = m > lo ? ranks[m - 1] : 0;
        const long long h = static_cast<long long>(chain_dim(m)) - static_cast<long long>(ranks[m] + prev);
        if (h != 0) out[m] = h;
    }
    return out;
}

Vector HomComplex::to_vector(const ChainMap& f) const {
    const Field& field = x_.algebra().field();
    Vector v(chain_dim(f.degree()));
    for (const auto& [key, e] : f.components())
        for (const auto& [b, c] : e) {
            const std::size_t i = index_of(f.degree(), key.second, key.first, b);
            v[i] = field.add(v[i], c);
        }
    return v;
}

ChainMap HomComplex::to_map(int m, const Vector& v) const {
    const Field& field = x_.algebra().field();
    const auto& gens = generators(m);
    if (v.size() != gens.size()) throw std::invalid_argument("to_map: vector length mismatch");
    MorphismMatrix comp;
    for (std::size_t i = 0; i < gens.size(); ++i)
        if (!field.is_zero(v[i])) accumulate(field, comp, {gens[i].dst, gens[i].src}, v[i], {{gens[i].basis, field.one()}});
    return ChainMap(x_, y_, m, std::move(comp));
}

std::vector<ChainMap> HomComplex::representatives(int m) const {
    const Field& f = x_.algebra().field();
    const std::size_t n = chain_dim(m);
    if (n == 0) return {};
    const ExactMatrix dm = differential_matrix(m).to_dense();
    std::vector<Vector> cycles = kernel_basis(dm.rows() == 0 ? ExactMatrix(f, 0, n) : dm);
    const ExactMatrix prev = differential_matrix(m - 1).to_dense();
    // Columns: boundaries first, then cycles; cycle columns that become pivots
    // are independent modulo boundaries.
    ExactMatrix stacked(f, n, prev.cols() + cycles.size());
    for (std::size_t r = 0; r < n; ++r) {
        for (std::size_t c = 0; c < prev.cols(); ++c) stacked.set(r, c, prev.at(r, c));
        for (std::size_t k = 0; k < cycles.size(); ++k) stacked.set(r, prev.cols() + k, cycles[k][r]);
    }
    std::vector<ChainMap> reps;
    for (std::size_t c : gauss_reduce(stacked).pivots)
        if (c >= prev.cols()) reps.push_back(to_map(m, cycles[c - prev.cols()]));
    return reps;
}

std::optional<Vector> HomComplex::class_coordinates(const ChainMap& closed) const {
    const int m = closed.degree();
    const Field& f = x_.algebra().field();
    const Vector z = to_vector(closed);
    const ExactMatrix dm = differential_matrix(m).to_dense();
    if (dm.rows() > 0) {
        const Vector dz = dm.apply(z);
        if (std::any_of(dz.begin(), dz.end(), [&](const Scalar& s) { return !f.is_zero(s); })) return std::nullopt;
    }
    const std::vector<ChainMap> reps = representatives(m);
    const ExactMatrix prev = differential_matrix(m - 1).to_dense();
    ExactMatrix sys(f, z.size(), reps.size() + prev.cols());
    for (std::size_t k = 0; k < reps.size(); ++k) {
        const Vector r = to_vector(reps[k]);
        for (std::size_t i = 0; i < z.size(); ++i) sys.set(i, k, r[i]);
    }
    for (std::size_t i = 0; i < z.size(); ++i)
        for (std::size_t c = 0; c < prev.cols(); ++c) sys.set(i, reps.size() + c, prev.at(i, c));
    if (z.empty()) return Vector{};
    const auto sol = solve(sys, z);
    if (!sol) return std::nullopt;
    return Vector(sol->begin(), sol->begin() + static_cast<std::ptrdiff_t>(reps.size()));
}

std::optional<ChainMap> HomComplex::primitive(const ChainMap& target) const {
    const int m = target.degree();
    const Vector z = to_vector(target);
    const Field& f = x_.algebra().field();
    if (std::all_of(z.begin(), z.end(), [&](const Scalar& s) { return f.is_zero(s); }))
        return ChainMap(x_, y_, m - 1);
    const ExactMatrix prev = differential_matrix(m - 1).to_dense();
    if (prev.cols() == 0) return std::nullopt;
    const auto sol = solve(prev, z);
    if (!sol) return std::nullopt;
    return to_map(m - 1, *sol);
}

HomComplexResult hom_complex(const TwistedComplex& x, const TwistedComplex& y, bool with_representatives) {
    const HomComplex h(x, y);
    HomComplexResult out{h.chain_dims(), h.cohomology(), {}};
    if (with_representatives)
        for (const auto& [m, d] : out.cohomology) out.representatives[m] = h.representatives(m);
    return out;
}

HomSpaceDims hom_dims(const TwistedComplex& x, const TwistedComplex& y) { return HomComplex(x, y).cohomology(); }

std::vector<HomSpaceDims> hom_profile(const TwistedComplex& x) {
    std::vector<HomSpaceDims> out;
    for (int v = 0; v < static_cast<int>(x.algebra().num_vertices()); ++v)
        out.push_back(hom_dims(TwistedComplex::projective(x.algebra_ptr(), v), x));
    return out;
}

HomSpaceDims generator_dims(const TwistedComplex& x) {
    HomSpaceDims out;
    for (const HomSpaceDims& d : hom_profile(x)) out += d;
    return out;
}

}  // namespace twistlab
