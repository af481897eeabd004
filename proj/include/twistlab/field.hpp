#pragma once

#include <cstdint>
#include <string>

#include <gmpxx.h>

namespace twistlab {

/// Field elements are exact rationals. In prime-field mode every value is kept
/// as its canonical residue in [0, p) with denominator 1.
using Scalar = mpq_class;

enum class FieldKind { rationals, prime };

inline constexpr std::uint32_t kDefaultPrime = 32003;

/// The coefficient field. Cheap to copy; all operations are const.
class Field {
public:
    Field() = default;  // prime field of characteristic 32003

    static Field rationals();
    /// Throws std::invalid_argument unless p is an odd prime below 2^31.
    static Field prime(std::uint32_t p = kDefaultPrime);
    /// 0 selects the rationals.
    static Field from_characteristic(std::uint32_t characteristic);

    FieldKind kind() const { return kind_; }
    std::uint32_t characteristic() const { return kind_ == FieldKind::rationals ? 0 : p_; }
    bool is_prime() const { return kind_ == FieldKind::prime; }

    Scalar zero() const { return Scalar(0); }
    Scalar one() const { return Scalar(1); }
    Scalar from_int(long long v) const;
    /// Maps a rational into the field; throws std::domain_error when the
    /// denominator vanishes mod p.
    Scalar from_rational(const mpq_class& q) const;

    Scalar add(const Scalar& a, const Scalar& b) const;
    Scalar sub(const Scalar& a, const Scalar& b) const;
    Scalar mul(const Scalar& a, const Scalar& b) const;
    Scalar neg(const Scalar& a) const;
    /// Throws std::domain_error on zero.
    Scalar inv(const Scalar& a) const;
    bool is_zero(const Scalar& a) const { return sgn(a) == 0; }

    /// Residue as machine integer (prime mode only).
    std::int64_t residue(const Scalar& a) const;

    std::string name() const;

    friend bool operator==(const Field& a, const Field& b) {
        return a.kind_ == b.kind_ && (a.kind_ == FieldKind::rationals || a.p_ == b.p_);
    }
    friend bool operator!=(const Field& a, const Field& b) { return !(a == b); }

private:
    Field(FieldKind kind, std::uint32_t p) : kind_(kind), p_(p) {}
    Scalar reduce(const mpz_class& z) const;

    FieldKind kind_ = FieldKind::prime;
    std::uint32_t p_ = kDefaultPrime;
};

bool is_prime(std::uint32_t n);

/// Text form: integers print as "3", proper fractions as "-1/2".
std::string to_string(const Scalar& s);
/// Parses "3", "-7", "1/2".
Scalar parse_scalar(const std::string& text);

}  // namespace twistlab
