#pragma once

#include <string>
#include <vector>

#include "twistlab/functor.hpp"

namespace twistlab {

/// One vertex, basis {1, eps}, deg eps = d, eps^2 = 0.
GradedAlgebra make_lambda(int d, Field field = Field());
/// Zigzag algebra of type A_n: arrows a_i: i -> i+1 and b_i: i+1 -> i in
/// degree 1, loops x_i in degree 2 with b_i a_i = x_i and a_i b_i = x_{i+1},
/// all other length-2 and longer paths zero. Dimension 4n - 2.
GradedAlgebra make_zigzag(int n, Field field = Field());
/// K[h]/(h^{d+1}), deg h = 2.
GradedAlgebra make_truncated(int d, Field field = Field());

std::vector<TwistedComplex> projectives(const AlgebraPtr& algebra);

struct ObjectCheck {
    bool end_ok = false;
    bool duality_ok = false;
    std::vector<std::string> failures;
    bool ok() const { return end_ok && duality_ok; }
};

/// End cohomology {0:1, d:1} exactly; the duality
/// dim H^m Hom(E, F) = dim H^{d-m} Hom(F, E) for F in all projectives shifted
/// by up to |d| + 2. The duality part is dimension-level only.
ObjectCheck check_spherical(const TwistedComplex& e, int d);
/// End cohomology {0:1, 2:1, ..., 2d:1}; the same duality with 2d.
ObjectCheck check_p_object(const TwistedComplex& e, int d);

/// Indices of the candidates F with Hom*(E, F) = 0.
std::vector<std::size_t> find_perp(const TwistedComplex& e, const std::vector<TwistedComplex>& candidates);

/// Whether Hom(C_S^n G, G) = 0 for some 1 <= n <= n_max in the one-vertex
/// source. C_S is the shift [cotwist]; the source generator has Ext in
/// degree 0 (field) or degrees {0, -1} (the simple K[h]-module).
bool split_gen_criterion(TwistKind kind, int cotwist_shift, int n_max);
bool split_gen_criterion(const ModelSphericalFunctor& s, int n_max);

struct Prediction {
    std::string quantity;
    std::string value;
    std::string basis;  // "theorem" or "oracle", with what produced it
};

struct InstanceDescriptor {
    std::string name;
    std::string family;  // "lambda", "zigzag", "truncated"
    int parameter = 0;
    TwistKind kind = TwistKind::spherical;
    int d = 0;
    std::string object_label;     // vertex label of the distinguished projective
    std::string default_functor;  // word understood by EndofunctorSpec::parse
    IntMatrix expected_euler;
    std::vector<std::string> expected_perp;  // labels among the projectives
    std::vector<Prediction> predictions;

    AlgebraPtr algebra(Field field = Field()) const;
    TwistedComplex object(const AlgebraPtr& algebra) const;
    ModelSphericalFunctor functor(const AlgebraPtr& algebra) const;
    /// Cotwist plus two: h_t(C_S[2]) = slope * t.
    int cotwist_slope() const { return kind == TwistKind::spherical ? 1 - d : -2 * d; }
};

const std::vector<InstanceDescriptor>& catalog();
/// Throws std::out_of_range for unknown names.
const InstanceDescriptor& find_instance(const std::string& name);

}  // namespace twistlab
