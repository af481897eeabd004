#pragma once

#include <cstddef>
#include <optional>
#include <utility>
#include <vector>

#include "twistlab/field.hpp"

namespace twistlab {

using Vector = std::vector<Scalar>;

/// Dense matrix over a Field. Entries are always stored normalized for the field.
class ExactMatrix {
public:
    ExactMatrix() = default;
    ExactMatrix(Field field, std::size_t rows, std::size_t cols);

    static ExactMatrix identity(Field field, std::size_t n);
    static ExactMatrix from_rows(Field field, const std::vector<std::vector<long long>>& rows);

    const Field& field() const { return field_; }
    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    const Scalar& at(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }
    void set(std::size_t r, std::size_t c, const Scalar& v) { data_[r * cols_ + c] = v; }
    /// Adds v into entry (r, c) using field arithmetic.
    void accumulate(std::size_t r, std::size_t c, const Scalar& v);

    std::size_t nonzeros() const;
    Vector column(std::size_t c) const;
    Vector apply(const Vector& x) const;
    ExactMatrix operator*(const ExactMatrix& rhs) const;
    ExactMatrix transposed() const;

    friend bool operator==(const ExactMatrix& a, const ExactMatrix& b) {
        return a.field_ == b.field_ && a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
    }

private:
    Field field_;
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<Scalar> data_;
};

/// Row-sparse matrix, used for Hom-complex differentials.
class SparseMatrix {
public:
    using Row = std::vector<std::pair<std::size_t, Scalar>>;

    SparseMatrix(Field field, std::size_t rows, std::size_t cols);

    const Field& field() const { return field_; }
    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    const std::vector<Row>& row_data() const { return data_; }

    void accumulate(std::size_t r, std::size_t c, const Scalar& v);
    /// Sorts each row by column and drops zeros.
    void canonicalize();
    std::size_t nonzeros() const;
    ExactMatrix to_dense() const;

private:
    Field field_;
    std::size_t rows_;
    std::size_t cols_;
    std::vector<Row> data_;
};

struct LinOptions {
    /// Matrices whose fraction of nonzero entries is at most this use the
    /// sparse elimination path.
    double sparse_density = 0.05;
};

std::size_t rank(const ExactMatrix& m, const LinOptions& opts = {});
std::size_t rank(const SparseMatrix& m, const LinOptions& opts = {});

/// Linearly independent vectors spanning the right kernel; exactly
/// cols - rank(m) of them.
std::vector<Vector> kernel_basis(const ExactMatrix& m);

struct RowOp {
    enum class Kind { swap, scale, add_multiple };
    Kind kind;
    std::size_t target;  // row being modified (or first row of a swap)
    std::size_t source;  // second row of a swap / row added for add_multiple
    Scalar factor;       // scale factor or multiple
};

struct GaussResult {
    std::vector<std::size_t> pivots;  // pivot column of each nonzero row
    ExactMatrix reduced;              // reduced row-echelon form
    std::vector<RowOp> ops;           // nontrivial row operations, in order

    /// Product of the recorded elementary operations: transform() * input == reduced.
    ExactMatrix transform() const;
};

GaussResult gauss_reduce(const ExactMatrix& m);

/// Some x with m * x == b, or nullopt when b is outside the column span.
std::optional<Vector> solve(const ExactMatrix& m, const Vector& b);

/// Integer matrix for Euler forms and K-theory.
class IntMatrix {
public:
    IntMatrix() = default;
    IntMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols, 0) {}
    IntMatrix(std::initializer_list<std::initializer_list<long long>> rows);

    static IntMatrix identity(std::size_t n);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    long long& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
    long long operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

    IntMatrix operator*(const IntMatrix& rhs) const;
    std::vector<long long> operator*(const std::vector<long long>& v) const;
    IntMatrix transposed() const;
    std::vector<std::vector<long long>> to_rows() const;

    friend bool operator==(const IntMatrix& a, const IntMatrix& b) {
        return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
    }

private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<long long> data_;
};

ExactMatrix to_exact(const IntMatrix& m, Field field);

/// Rank of an integer matrix over Q and over F_p. The two agree for all but
/// finitely many p; `agree` flags a characteristic accident.
struct RankCrossCheck {
    std::size_t rank_rationals = 0;
    std::size_t rank_prime = 0;
    bool agree = true;
};
RankCrossCheck rank_cross_check(const IntMatrix& m, std::uint32_t p = kDefaultPrime);

}  // namespace twistlab
