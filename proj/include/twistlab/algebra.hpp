#pragma once

#include <map>
#include <string>
#include <vector>

#include "twistlab/exactlin.hpp"
#include "twistlab/field.hpp"

namespace twistlab {

/// A homogeneous basis element: a morphism from vertex `src` to vertex `dst`.
struct BasisElement {
    std::string name;
    int src = 0;
    int dst = 0;
    int degree = 0;

    friend bool operator==(const BasisElement&, const BasisElement&) = default;
};

/// One term of a structure-constant expansion.
struct Term {
    int basis = 0;
    long long coeff = 0;

    friend bool operator==(const Term&, const Term&) = default;
};

using Product = std::vector<Term>;

/// Graded dimensions: degree -> dimension, zero entries omitted.
using HomSpaceDims = std::map<int, long long>;

long long total_dim(const HomSpaceDims& dims);
/// Degree-wise translation: result[m - n] = dims[m] (the dims of Hom(-, X[n])).
HomSpaceDims translate(const HomSpaceDims& dims, int n);
HomSpaceDims& operator+=(HomSpaceDims& a, const HomSpaceDims& b);
std::string to_string(const HomSpaceDims& dims);

/// Finite-dimensional graded algebra presented by a basis of homogeneous
/// elements between vertices, a multiplication table and one idempotent per
/// vertex. The grading is the cohomological grading; there is no differential.
///
/// Product convention: product(x, y) is "y then x", so it can be nonzero only
/// when dst(y) == src(x), and the result runs from src(y) to dst(x).
class GradedAlgebra {
public:
    GradedAlgebra() = default;
    GradedAlgebra(Field field, std::vector<std::string> vertices, std::vector<BasisElement> basis,
                  std::vector<int> idempotents);

    const Field& field() const { return field_; }
    /// Same presentation over a different coefficient field.
    GradedAlgebra with_field(Field field) const;

    std::size_t num_vertices() const { return vertices_.size(); }
    std::size_t dim() const { return basis_.size(); }
    const std::vector<std::string>& vertices() const { return vertices_; }
    const std::vector<BasisElement>& basis() const { return basis_; }
    const BasisElement& element(int i) const { return basis_.at(static_cast<std::size_t>(i)); }
    int idempotent(int vertex) const { return idempotents_.at(static_cast<std::size_t>(vertex)); }
    const std::vector<int>& idempotents() const { return idempotents_; }
    bool is_idempotent(int basis_index) const;

    /// Throws std::out_of_range for unknown names.
    int vertex_index(const std::string& name) const;
    int basis_index(const std::string& name) const;

    void set_product(int left, int right, Product result);
    const Product& product(int left, int right) const;

    /// Basis indices with the given source and target, in basis order.
    const std::vector<int>& elements_between(int src, int dst) const;

    friend bool operator==(const GradedAlgebra& a, const GradedAlgebra& b) {
        return a.field_ == b.field_ && a.vertices_ == b.vertices_ && a.basis_ == b.basis_ &&
               a.idempotents_ == b.idempotents_ && a.mult_ == b.mult_;
    }

private:
    Field field_;
    std::vector<std::string> vertices_;
    std::vector<BasisElement> basis_;
    std::vector<int> idempotents_;
    std::vector<Product> mult_;                     // dim x dim, row = left
    std::vector<std::vector<int>> between_;         // src * nv + dst
};

struct Violation {
    std::string kind;  // "associativity", "unit", "idempotent", "degree", "bookkeeping", "structure"
    std::vector<std::string> elements;
    std::string detail;
};

struct ValidationReport {
    std::vector<Violation> violations;
    bool ok() const { return violations.empty(); }
    std::string to_string() const;
};

/// Checks associativity on all basis triples, the idempotent/unit laws, degree
/// additivity and source/target bookkeeping. Violations are reported, never thrown.
ValidationReport validate(const GradedAlgebra& a);

/// Graded dimensions of the span of basis elements from vertex i to vertex j.
HomSpaceDims hom_space(const GradedAlgebra& a, int i, int j);

/// chi(j, i) = sum_m (-1)^m dim hom_space(a, i, j)[m], the Euler pairing of
/// the projectives P_i and P_j.
IntMatrix cartan_euler(const GradedAlgebra& a);

}  // namespace twistlab
