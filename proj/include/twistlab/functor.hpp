#pragma once

#include <optional>
#include <string>
#include <vector>

#include "twistlab/complex.hpp"

namespace twistlab {

enum class TwistKind { spherical, p_object };

/// End-cohomology dims a spherical(d) object ({0:1, d:1}) or a P^d-object
/// ({0:1, 2:1, ..., 2d:1}) must have.
HomSpaceDims expected_end_dims(TwistKind kind, int d);

/// The model functor S = - (x) E out of a one-vertex source (the field for a
/// spherical object, K[h] with deg h = 2 for a P-object). Its cotwist is the
/// pure shift [cotwist_shift()].
class ModelSphericalFunctor {
public:
    /// Throws std::invalid_argument when d < 1, or when check is set and the
    /// End cohomology of E has the wrong dims.
    ModelSphericalFunctor(TwistedComplex e, TwistKind kind, int d, bool check = true);

    const TwistedComplex& object() const { return e_; }
    TwistKind kind() const { return kind_; }
    int d() const { return d_; }
    /// -1-d (spherical) or -2-2d (P-object).
    int cotwist_shift() const { return kind_ == TwistKind::spherical ? -1 - d_ : -2 - 2 * d_; }
    /// Shift of h_t(C_S[2]) = (cotwist + 2) t.
    int cotwist_slope() const { return cotwist_shift() + 2; }

    /// The twist T_S applied to F.
    TwistedComplex twist(const TwistedComplex& f) const;

private:
    TwistedComplex e_;
    TwistKind kind_;
    int d_;
};

/// Thrown when a P-twist cannot be assembled: no degree-2 class h, or the
/// composite ev o (h* (x) id - id (x) h) is not null-homotopic.
class DegenerateInstance : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Cone(Hom*(E, F) (x) E -> F), minimized unless reduce is off. With check, E must have End
/// cohomology {0:1, d:1} for some d >= 1.
TwistedComplex spherical_twist(const TwistedComplex& e, const TwistedComplex& f, bool check = true,
                               bool reduce = true);

/// Cone(Cone(Hom*(E,F) (x) E[-2] -> Hom*(E,F) (x) E) -> F) along
/// h* (x) id - id (x) h and evaluation, minimized. With check, E must have End
/// cohomology {0:1, 2:1, ..., 2d:1}.
TwistedComplex p_twist(const TwistedComplex& e, const TwistedComplex& f, bool check = true, bool reduce = true);

/// One letter of an endofunctor word.
struct FunctorStep {
    enum class Kind { identity, shift, spherical_twist, p_twist };
    Kind kind = Kind::identity;
    int amount = 0;     // shift amount
    std::string label;  // object label for twists
    std::optional<TwistedComplex> object;
};

/// A word in shifts and twists, applied right to left as written:
/// "stwist:P1;shift:2" shifts first, then twists.
class EndofunctorSpec {
public:
    EndofunctorSpec() = default;
    explicit EndofunctorSpec(std::vector<FunctorStep> steps);

    static EndofunctorSpec identity();
    static EndofunctorSpec shift(int n);
    static EndofunctorSpec spherical_twist(const TwistedComplex& e, std::string label = "E");
    static EndofunctorSpec p_twist(const TwistedComplex& e, std::string label = "E");

    /// Parses letters "id", "shift:N", "stwist:L", "ptwist:L" joined by ';'.
    /// Labels are "P<vertex name>" or "E" for `distinguished`. Twist objects
    /// are checked once here. Throws std::invalid_argument.
    static EndofunctorSpec parse(const std::string& word, const AlgebraPtr& algebra,
                                 const std::optional<TwistedComplex>& distinguished = std::nullopt);

    const std::vector<FunctorStep>& steps() const { return steps_; }
    std::string to_string() const;

    TwistedComplex apply(const TwistedComplex& x) const;

    /// Minimize after each twist (on by default).
    bool reduce() const { return reduce_; }
    void set_reduce(bool on) { reduce_ = on; }

private:
    std::vector<FunctorStep> steps_;
    bool reduce_ = true;
};

/// outer after inner.
EndofunctorSpec compose(const EndofunctorSpec& outer, const EndofunctorSpec& inner);

struct IterationStep {
    int n = 0;
    TwistedComplex object;
    HomSpaceDims dims;  // of Hom(G, phi^n G)
};

struct Iteration {
    std::vector<IterationStep> steps;  // n = 0, 1, ..., n_max unless incomplete
    bool incomplete = false;
    std::string note;
};

/// Orbit G, phi G, ..., phi^n_max G with exact Hom dims against G. Stops at
/// the summand cap and marks the result incomplete.
Iteration iterate(const EndofunctorSpec& phi, const TwistedComplex& g, int n_max);

/// Whether F and phi F have the same Hom profile against every projective.
bool is_dim_fixed_point(const EndofunctorSpec& phi, const TwistedComplex& f);

/// Index of the first candidate F with Hom*(E, F) = 0, i.e. SR F = 0.
std::optional<std::size_t> ker_SR_witness(const ModelSphericalFunctor& s, const std::vector<TwistedComplex>& candidates);

}  // namespace twistlab
