#pragma once

#include <functional>
#include <map>
#include <memory>
#include <optional>
#include <stdexcept>
#include <tuple>
#include <utility>
#include <vector>

#include "twistlab/algebra.hpp"
#include "twistlab/exactlin.hpp"

namespace twistlab {

/// Linear combination of basis elements; sorted by basis index, no zero
/// coefficients.
using Element = std::vector<std::pair<int, Scalar>>;

Element element_mul(const GradedAlgebra& a, const Element& left, const Element& right);
/// acc += coeff * x
void element_axpy(const Field& f, Element& acc, const Scalar& coeff, const Element& x);
Element element_scale(const Field& f, const Element& x, const Scalar& c);
Element basis_element(const GradedAlgebra& a, int basis, long long coeff = 1);
/// Two-sided inverse of a degree-0 endomorphism of P_vertex, if it exists.
std::optional<Element> degree_zero_inverse(const GradedAlgebra& a, int vertex, const Element& u);

/// P_vertex placed at homological shift `shift`, i.e. P_vertex[shift].
struct Summand {
    int vertex = 0;
    int shift = 0;

    friend bool operator==(const Summand&, const Summand&) = default;
    friend auto operator<=>(const Summand&, const Summand&) = default;
};

/// Matrix of algebra elements keyed by (target summand, source summand).
using MorphismMatrix = std::map<std::pair<int, int>, Element>;

using AlgebraPtr = std::shared_ptr<const GradedAlgebra>;

class CapExceeded : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Summand cap for iterated constructions; TWISTLAB_CAP overrides the
/// default of 20000.
std::size_t summand_cap();

/// One-sided twisted complex of shifted indecomposable projectives: an object
/// of the perfect derived category. The differential entry (b, a) maps
/// summand a to summand b and has cohomological degree 1:
/// deg(entry) + shift(a) - shift(b) == 1.
class TwistedComplex {
public:
    TwistedComplex() = default;
    /// Validates entry degrees and endpoints; with check_square_zero also
    /// asserts delta * delta == 0. Throws std::invalid_argument.
    TwistedComplex(AlgebraPtr algebra, std::vector<Summand> summands, MorphismMatrix differential,
                   bool check_square_zero = true);

    static TwistedComplex zero(AlgebraPtr algebra);
    static TwistedComplex projective(AlgebraPtr algebra, int vertex, int shift = 0);
    /// Direct sum of all indecomposable projectives at shift 0.
    static TwistedComplex generator(AlgebraPtr algebra);

    const GradedAlgebra& algebra() const { return *algebra_; }
    const AlgebraPtr& algebra_ptr() const { return algebra_; }
    const std::vector<Summand>& summands() const { return summands_; }
    const MorphismMatrix& differential() const { return differential_; }
    std::size_t size() const { return summands_.size(); }
    bool is_zero() const { return summands_.empty(); }

    bool is_square_zero() const;

private:
    AlgebraPtr algebra_;
    std::vector<Summand> summands_;
    MorphismMatrix differential_;
};

bool same_algebra(const TwistedComplex& x, const TwistedComplex& y);

/// Morphism of twisted complexes of a fixed cohomological degree. Component
/// (b, a) maps source summand a to target summand b.
class ChainMap {
public:
    ChainMap(TwistedComplex source, TwistedComplex target, int degree, MorphismMatrix components = {});

    static ChainMap identity(const TwistedComplex& x);

    const TwistedComplex& source() const { return source_; }
    const TwistedComplex& target() const { return target_; }
    int degree() const { return degree_; }
    const MorphismMatrix& components() const { return components_; }
    bool is_zero() const { return components_.empty(); }

private:
    TwistedComplex source_;
    TwistedComplex target_;
    int degree_;
    MorphismMatrix components_;
};

/// g after f.
ChainMap compose(const ChainMap& g, const ChainMap& f);
ChainMap add(const ChainMap& f, const ChainMap& g);
ChainMap scale(const ChainMap& f, const Scalar& c);
/// d(f) = delta_target * f - (-1)^|f| f * delta_source.
ChainMap hom_differential(const ChainMap& f);
bool is_closed(const ChainMap& f);

/// Shifts every summand by n and multiplies the differential by (-1)^n.
TwistedComplex shift(const TwistedComplex& x, int n);
TwistedComplex direct_sum(const TwistedComplex& x, const TwistedComplex& y);
TwistedComplex direct_sum(const std::vector<TwistedComplex>& parts, AlgebraPtr algebra);
/// Cone of a closed degree-0 map: target summands, then source summands
/// shifted by one; differential [[delta_Y, f], [0, -delta_X]].
TwistedComplex cone(const ChainMap& f);
/// Hook called with every map and the cone built from it (instrumentation).
/// Pass an empty function to remove it.
using ConeObserver = std::function<void(const ChainMap&, const TwistedComplex&)>;
void set_cone_observer(ConeObserver observer);
/// Gaussian elimination of every differential entry that is an invertible
/// degree-0 endomorphism of a projective. The result is homotopy equivalent to x.
TwistedComplex minimize(const TwistedComplex& x);

/// The dg Hom complex Hom(X, Y). Degree-m chains are spanned by algebra
/// elements e: summand a of X -> summand b of Y with deg(e) + shift(a) - shift(b) == m.
class HomComplex {
public:
    HomComplex(const TwistedComplex& x, const TwistedComplex& y);

    const TwistedComplex& source() const { return x_; }
    const TwistedComplex& target() const { return y_; }

    std::map<int, std::size_t> chain_dims() const;
    std::size_t chain_dim(int m) const;
    HomSpaceDims cohomology() const;

    /// Closed chains of degree m whose classes form a basis of H^m.
    std::vector<ChainMap> representatives(int m) const;
    /// Coordinates of the class of a closed map in the representatives(m)
    /// basis; nullopt if the map is not closed.
    std::optional<Vector> class_coordinates(const ChainMap& closed) const;
    /// Some k with d(k) == f; nullopt when f is not exact.
    std::optional<ChainMap> primitive(const ChainMap& f) const;

    Vector to_vector(const ChainMap& f) const;
    ChainMap to_map(int m, const Vector& v) const;

private:
    struct Generator {
        int src;    // summand of x
        int dst;    // summand of y
        int basis;  // algebra basis element
    };

    const std::vector<Generator>& generators(int m) const;
    /// Matrix of d: C^m -> C^{m+1}.
    SparseMatrix differential_matrix(int m) const;
    std::size_t index_of(int m, int src, int dst, int basis) const;

    TwistedComplex x_;
    TwistedComplex y_;
    std::map<int, std::vector<Generator>> gens_;
    std::map<int, std::map<std::tuple<int, int, int>, std::size_t>> index_;
};

struct HomComplexResult {
    std::map<int, std::size_t> chain_dims;
    HomSpaceDims cohomology;
    std::map<int, std::vector<ChainMap>> representatives;  // filled on request
};

HomComplexResult hom_complex(const TwistedComplex& x, const TwistedComplex& y, bool with_representatives = false);
/// Cohomology dims of Hom(X, Y).
HomSpaceDims hom_dims(const TwistedComplex& x, const TwistedComplex& y);

/// Per-vertex cohomology dims of Hom(P_v, X): the profile used for
/// dimension-level equality of objects.
std::vector<HomSpaceDims> hom_profile(const TwistedComplex& x);
/// dims of Hom(G, X) with G the sum of all projectives.
HomSpaceDims generator_dims(const TwistedComplex& x);

}  // namespace twistlab
