#include "twistlab/exactlin.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

namespace twistlab {

// ---------------------------------------------------------------- ExactMatrix

ExactMatrix::ExactMatrix(Field field, std::size_t rows, std::size_t cols)
    : field_(field), rows_(rows), cols_(cols), data_(rows * cols) {}

ExactMatrix ExactMatrix::identity(Field field, std::size_t n) {
    ExactMatrix m(field, n, n);
    for (std::size_t i = 0; i < n; ++i) m.set(i, i, field.one());
    return m;
}

ExactMatrix ExactMatrix::from_rows(Field field, const std::vector<std::vector<long long>>& rows) {
    const std::size_t r = rows.size();
    const std::size_t c = r == 0 ? 0 : rows.front().size();
    ExactMatrix m(field, r, c);
    for (std::size_t i = 0; i < r; ++i) {
        if (rows[i].size() != c) throw std::invalid_argument("ragged matrix rows");
        for (std::size_t j = 0; j < c; ++j) m.set(i, j, field.from_int(rows[i][j]));
    }
    return m;
}

void ExactMatrix::accumulate(std::size_t r, std::size_t c, const Scalar& v) {
    Scalar& slot = data_[r * cols_ + c];
    slot = field_.add(slot, v);
}

std::size_t ExactMatrix::nonzeros() const {
    return static_cast<std::size_t>(
        std::count_if(data_.begin(), data_.end(), [](const Scalar& s) { return sgn(s) != 0; }));
}

Vector ExactMatrix::column(std::size_t c) const {
    Vector v(rows_);
    for (std::size_t r = 0; r < rows_; ++r) v[r] = at(r, c);
    return v;
}

Vector ExactMatrix::apply(const Vector& x) const {
    if (x.size() != cols_) throw std::invalid_argument("dimension mismatch in apply");
    Vector y(rows_);
    for (std::size_t r = 0; r < rows_; ++r)
        for (std::size_t c = 0; c < cols_; ++c)
            if (sgn(at(r, c)) != 0 && sgn(x[c]) != 0) y[r] = field_.add(y[r], field_.mul(at(r, c), x[c]));
    return y;
}

ExactMatrix ExactMatrix::operator*(const ExactMatrix& rhs) const {
    if (cols_ != rhs.rows_ || field_ != rhs.field_) throw std::invalid_argument("matrix product mismatch");
    ExactMatrix out(field_, rows_, rhs.cols_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t k = 0; k < cols_; ++k) {
            if (sgn(at(i, k)) == 0) continue;
            for (std::size_t j = 0; j < rhs.cols_; ++j)
                if (sgn(rhs.at(k, j)) != 0) out.accumulate(i, j, field_.mul(at(i, k), rhs.at(k, j)));
        }
    return out;
}

ExactMatrix ExactMatrix::transposed() const {
    ExactMatrix t(field_, cols_, rows_);
    for (std::size_t r = 0; r < rows_; ++r)
        for (std::size_t c = 0; c < cols_; ++c) t.set(c, r, at(r, c));
    return t;
}

// --------------------------------------------------------------- SparseMatrix

SparseMatrix::SparseMatrix(Field field, std::size_t rows, std::size_t cols)
    : field_(field), rows_(rows), cols_(cols), data_(rows) {}

void SparseMatrix::accumulate(std::size_t r, std::size_t c, const Scalar& v) {
    if (r >= rows_ || c >= cols_) throw std::out_of_range("sparse entry out of range");
    data_[r].emplace_back(c, v);
}

void SparseMatrix::canonicalize() {
    for (Row& row : data_) {
        std::sort(row.begin(), row.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
        Row merged;
        for (auto& [c, v] : row) {
            if (!merged.empty() && merged.back().first == c)
                merged.back().second = field_.add(merged.back().second, v);
            else
                merged.emplace_back(c, v);
        }
        std::erase_if(merged, [](const auto& e) { return sgn(e.second) == 0; });
        row = std::move(merged);
    }
}

std::size_t SparseMatrix::nonzeros() const {
    std::size_t n = 0;
    for (const Row& row : data_) n += row.size();
    return n;
}

ExactMatrix SparseMatrix::to_dense() const {
    ExactMatrix m(field_, rows_, cols_);
    for (std::size_t r = 0; r < rows_; ++r)
        for (const auto& [c, v] : data_[r]) m.accumulate(r, c, v);
    return m;
}

// ---------------------------------------------------------------- elimination

namespace {

struct ModP {
    using T = std::int64_t;
    std::int64_t p;
    T add(T a, T b) const { T s = a + b; return s >= p ? s - p : s; }
    T sub(T a, T b) const { T s = a - b; return s < 0 ? s + p : s; }
    T mul(T a, T b) const { return (a * b) % p; }
    T inv(T a) const {
        // extended Euclid; a != 0
        std::int64_t t = 0, nt = 1, r = p, nr = a;
        while (nr != 0) {
            std::int64_t q = r / nr;
            t -= q * nt; std::swap(t, nt);
            r -= q * nr; std::swap(r, nr);
        }
        return t < 0 ? t + p : t;
    }
    static bool is_zero(T a) { return a == 0; }
    T convert(const Field& f, const Scalar& s) const { return f.residue(s); }
};

struct Rat {
    using T = mpq_class;
    T add(const T& a, const T& b) const { return a + b; }
    T sub(const T& a, const T& b) const { return a - b; }
    T mul(const T& a, const T& b) const { return a * b; }
    T inv(const T& a) const { return 1 / a; }
    static bool is_zero(const T& a) { return sgn(a) == 0; }
    T convert(const Field&, const Scalar& s) const { return s; }
};

template <class A>
std::size_t dense_rank(const A& ar, std::vector<typename A::T> data, std::size_t rows, std::size_t cols) {
    using T = typename A::T;
    std::size_t rank = 0;
    for (std::size_t c = 0; c < cols && rank < rows; ++c) {
        std::size_t piv = rank;
        while (piv < rows && A::is_zero(data[piv * cols + c])) ++piv;
        if (piv == rows) continue;
        if (piv != rank)
            for (std::size_t k = c; k < cols; ++k) std::swap(data[piv * cols + k], data[rank * cols + k]);
        const T inv = ar.inv(data[rank * cols + c]);
        for (std::size_t r = rank + 1; r < rows; ++r) {
            if (A::is_zero(data[r * cols + c])) continue;
            const T f = ar.mul(data[r * cols + c], inv);
            for (std::size_t k = c; k < cols; ++k)
                if (!A::is_zero(data[rank * cols + k]))
                    data[r * cols + k] = ar.sub(data[r * cols + k], ar.mul(f, data[rank * cols + k]));
        }
        ++rank;
    }
    return rank;
}

// Echelon basis kept as a map from leading column to a row whose leading
// coefficient is 1; each incoming row is reduced against it.
template <class A>
std::size_t sparse_rank(const A& ar, std::vector<std::vector<std::pair<std::size_t, typename A::T>>> rows) {
    using T = typename A::T;
    using SRow = std::vector<std::pair<std::size_t, T>>;
    std::map<std::size_t, SRow> pivots;
    for (SRow& row : rows) {
        while (!row.empty()) {
            auto it = pivots.find(row.front().first);
            if (it == pivots.end()) {
                const T inv = ar.inv(row.front().second);
                for (auto& e : row) e.second = ar.mul(e.second, inv);
                pivots.emplace(row.front().first, std::move(row));
                break;
            }
            const T f = row.front().second;
            const SRow& p = it->second;
            SRow next;
            next.reserve(row.size() + p.size());
            std::size_t i = 0, j = 0;
            while (i < row.size() || j < p.size()) {
                if (j == p.size() || (i < row.size() && row[i].first < p[j].first)) {
                    next.push_back(row[i++]);
                } else if (i == row.size() || p[j].first < row[i].first) {
                    next.emplace_back(p[j].first, ar.sub(T(0), ar.mul(f, p[j].second)));
                    ++j;
                } else {
                    T v = ar.sub(row[i].second, ar.mul(f, p[j].second));
                    if (!A::is_zero(v)) next.emplace_back(row[i].first, v);
                    ++i; ++j;
                }
            }
            row = std::move(next);
        }
    }
    return pivots.size();
}

template <class A>
std::size_t rank_dense_with(const A& ar, const ExactMatrix& m) {
    std::vector<typename A::T> data;
    data.reserve(m.rows() * m.cols());
    for (std::size_t r = 0; r < m.rows(); ++r)
        for (std::size_t c = 0; c < m.cols(); ++c) data.push_back(ar.convert(m.field(), m.at(r, c)));
    return dense_rank(ar, std::move(data), m.rows(), m.cols());
}

template <class A>
std::size_t rank_sparse_with(const A& ar, const SparseMatrix& m) {
    std::vector<std::vector<std::pair<std::size_t, typename A::T>>> rows(m.rows());
    for (std::size_t r = 0; r < m.rows(); ++r)
        for (const auto& [c, v] : m.row_data()[r]) rows[r].emplace_back(c, ar.convert(m.field(), v));
    return sparse_rank(ar, std::move(rows));
}

SparseMatrix to_sparse(const ExactMatrix& m) {
    SparseMatrix s(m.field(), m.rows(), m.cols());
    for (std::size_t r = 0; r < m.rows(); ++r)
        for (std::size_t c = 0; c < m.cols(); ++c)
            if (sgn(m.at(r, c)) != 0) s.accumulate(r, c, m.at(r, c));
    return s;
}

double density(std::size_t nnz, std::size_t rows, std::size_t cols) {
    return rows * cols == 0 ? 0.0 : static_cast<double>(nnz) / static_cast<double>(rows * cols);
}

}  // namespace

std::size_t rank(const ExactMatrix& m, const LinOptions& opts) {
    if (m.rows() == 0 || m.cols() == 0) return 0;
    if (density(m.nonzeros(), m.rows(), m.cols()) <= opts.sparse_density) return rank(to_sparse(m), opts);
    if (m.field().is_prime()) return rank_dense_with(ModP{m.field().characteristic()}, m);
    return rank_dense_with(Rat{}, m);
}

std::size_t rank(const SparseMatrix& m, const LinOptions& opts) {
    if (m.rows() == 0 || m.cols() == 0) return 0;
    SparseMatrix canon = m;
    canon.canonicalize();
    if (density(canon.nonzeros(), m.rows(), m.cols()) > opts.sparse_density) return rank(canon.to_dense(), opts);
    if (m.field().is_prime()) return rank_sparse_with(ModP{m.field().characteristic()}, canon);
    return rank_sparse_with(Rat{}, canon);
}

// ------------------------------------------------------------ row reduction

GaussResult gauss_reduce(const ExactMatrix& m) {
    const Field& f = m.field();
    GaussResult out{{}, m, {}};
    ExactMatrix& a = out.reduced;
    std::size_t row = 0;
    for (std::size_t c = 0; c < a.cols() && row < a.rows(); ++c) {
        std::size_t piv = row;
        while (piv < a.rows() && f.is_zero(a.at(piv, c))) ++piv;
        if (piv == a.rows()) continue;
        if (piv != row) {
            for (std::size_t k = 0; k < a.cols(); ++k) {
                Scalar tmp = a.at(piv, k);
                a.set(piv, k, a.at(row, k));
                a.set(row, k, tmp);
            }
            out.ops.push_back({RowOp::Kind::swap, row, piv, f.one()});
        }
        if (a.at(row, c) != 1) {
            const Scalar inv = f.inv(a.at(row, c));
            for (std::size_t k = 0; k < a.cols(); ++k) a.set(row, k, f.mul(a.at(row, k), inv));
            out.ops.push_back({RowOp::Kind::scale, row, row, inv});
        }
        for (std::size_t r = 0; r < a.rows(); ++r) {
            if (r == row || f.is_zero(a.at(r, c))) continue;
            const Scalar factor = f.neg(a.at(r, c));
            for (std::size_t k = 0; k < a.cols(); ++k)
                if (!f.is_zero(a.at(row, k))) a.accumulate(r, k, f.mul(factor, a.at(row, k)));
            out.ops.push_back({RowOp::Kind::add_multiple, r, row, factor});
        }
        out.pivots.push_back(c);
        ++row;
    }
    return out;
}

ExactMatrix GaussResult::transform() const {
    const Field& f = reduced.field();
    ExactMatrix t = ExactMatrix::identity(f, reduced.rows());
    for (const RowOp& op : ops) {
        for (std::size_t k = 0; k < t.cols(); ++k) {
            switch (op.kind) {
                case RowOp::Kind::swap: {
                    Scalar tmp = t.at(op.target, k);
                    t.set(op.target, k, t.at(op.source, k));
                    t.set(op.source, k, tmp);
                    break;
                }
                case RowOp::Kind::scale:
                    t.set(op.target, k, f.mul(t.at(op.target, k), op.factor));
                    break;
                case RowOp::Kind::add_multiple:
                    t.accumulate(op.target, k, f.mul(op.factor, t.at(op.source, k)));
                    break;
            }
        }
    }
    return t;
}

std::vector<Vector> kernel_basis(const ExactMatrix& m) {
    const Field& f = m.field();
    const GaussResult g = gauss_reduce(m);
    std::vector<bool> is_pivot(m.cols(), false);
    for (std::size_t c : g.pivots) is_pivot[c] = true;
    std::vector<Vector> basis;
    for (std::size_t free = 0; free < m.cols(); ++free) {
        if (is_pivot[free]) continue;
        Vector v(m.cols());
        v[free] = f.one();
        for (std::size_t i = 0; i < g.pivots.size(); ++i) v[g.pivots[i]] = f.neg(g.reduced.at(i, free));
        basis.push_back(std::move(v));
    }
    return basis;
}

std::optional<Vector> solve(const ExactMatrix& m, const Vector& b) {
    if (b.size() != m.rows()) throw std::invalid_argument("dimension mismatch in solve");
    const Field& f = m.field();
    ExactMatrix aug(f, m.rows(), m.cols() + 1);
    for (std::size_t r = 0; r < m.rows(); ++r) {
        for (std::size_t c = 0; c < m.cols(); ++c) aug.set(r, c, m.at(r, c));
        aug.set(r, m.cols(), b[r]);
    }
    const GaussResult g = gauss_reduce(aug);
    if (!g.pivots.empty() && g.pivots.back() == m.cols()) return std::nullopt;
    Vector x(m.cols());
    for (std::size_t i = 0; i < g.pivots.size(); ++i) x[g.pivots[i]] = g.reduced.at(i, m.cols());
    return x;
}

// ------------------------------------------------------------------ IntMatrix

IntMatrix::IntMatrix(std::initializer_list<std::initializer_list<long long>> rows) {
    rows_ = rows.size();
    cols_ = rows_ == 0 ? 0 : rows.begin()->size();
    for (const auto& r : rows) {
        if (r.size() != cols_) throw std::invalid_argument("ragged matrix rows");
        data_.insert(data_.end(), r.begin(), r.end());
    }
}

IntMatrix IntMatrix::identity(std::size_t n) {
    IntMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
    return m;
}

IntMatrix IntMatrix::operator*(const IntMatrix& rhs) const {
    if (cols_ != rhs.rows_) throw std::invalid_argument("matrix product mismatch");
    IntMatrix out(rows_, rhs.cols_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t k = 0; k < cols_; ++k)
            for (std::size_t j = 0; j < rhs.cols_; ++j) out(i, j) += (*this)(i, k) * rhs(k, j);
    return out;
}

std::vector<long long> IntMatrix::operator*(const std::vector<long long>& v) const {
    if (v.size() != cols_) throw std::invalid_argument("matrix-vector mismatch");
    std::vector<long long> out(rows_, 0);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < cols_; ++j) out[i] += (*this)(i, j) * v[j];
    return out;
}

IntMatrix IntMatrix::transposed() const {
    IntMatrix t(cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
    return t;
}

std::vector<std::vector<long long>> IntMatrix::to_rows() const {
    std::vector<std::vector<long long>> out(rows_, std::vector<long long>(cols_));
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < cols_; ++j) out[i][j] = (*this)(i, j);
    return out;
}

ExactMatrix to_exact(const IntMatrix& m, Field field) { return ExactMatrix::from_rows(field, m.to_rows()); }

RankCrossCheck rank_cross_check(const IntMatrix& m, std::uint32_t p) {
    RankCrossCheck out;
    out.rank_rationals = rank(to_exact(m, Field::rationals()));
    out.rank_prime = rank(to_exact(m, Field::prime(p)));
    out.agree = out.rank_rationals == out.rank_prime;
    return out;
}

}  // namespace twistlab
