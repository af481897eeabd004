#include "twistlab/field.hpp"

#include <stdexcept>

namespace twistlab {

bool is_prime(std::uint32_t n) {
    if (n < 2) return false;
    if (n % 2 == 0) return n == 2;
    for (std::uint64_t d = 3; d * d <= n; d += 2)
        if (n % d == 0) return false;
    return true;
}

Field Field::rationals() { return Field(FieldKind::rationals, 0); }

Field Field::prime(std::uint32_t p) {
    if (p == 2 || !twistlab::is_prime(p) || p >= (1u << 31))
        throw std::invalid_argument("field characteristic must be an odd prime below 2^31, got " +
                                    std::to_string(p));
    return Field(FieldKind::prime, p);
}

Field Field::from_characteristic(std::uint32_t characteristic) {
    return characteristic == 0 ? rationals() : prime(characteristic);
}

Scalar Field::reduce(const mpz_class& z) const {
    mpz_class r;
    mpz_fdiv_r_ui(r.get_mpz_t(), z.get_mpz_t(), p_);
    return Scalar(r);
}

Scalar Field::from_int(long long v) const {
    if (kind_ == FieldKind::rationals) return Scalar(static_cast<long>(v));
    long long r = v % static_cast<long long>(p_);
    if (r < 0) r += p_;
    return Scalar(static_cast<long>(r));
}

Scalar Field::from_rational(const mpq_class& q) const {
    if (kind_ == FieldKind::rationals) return q;
    Scalar num = reduce(q.get_num());
    Scalar den = reduce(q.get_den());
    if (is_zero(den)) throw std::domain_error("denominator vanishes in " + name());
    return mul(num, inv(den));
}

Scalar Field::add(const Scalar& a, const Scalar& b) const {
    if (kind_ == FieldKind::rationals) return a + b;
    mpz_class s = a.get_num() + b.get_num();
    if (s >= p_) s -= p_;
    return Scalar(s);
}

Scalar Field::sub(const Scalar& a, const Scalar& b) const {
    if (kind_ == FieldKind::rationals) return a - b;
    mpz_class s = a.get_num() - b.get_num();
    if (s < 0) s += p_;
    return Scalar(s);
}

Scalar Field::mul(const Scalar& a, const Scalar& b) const {
    if (kind_ == FieldKind::rationals) return a * b;
    return reduce(a.get_num() * b.get_num());
}

Scalar Field::neg(const Scalar& a) const {
    if (kind_ == FieldKind::rationals) return -a;
    if (is_zero(a)) return a;
    return Scalar(mpz_class(p_) - a.get_num());
}

Scalar Field::inv(const Scalar& a) const {
    if (is_zero(a)) throw std::domain_error("division by zero");
    if (kind_ == FieldKind::rationals) return 1 / a;
    mpz_class r;
    mpz_class p(p_);
    mpz_invert(r.get_mpz_t(), a.get_num_mpz_t(), p.get_mpz_t());
    return Scalar(r);
}

std::int64_t Field::residue(const Scalar& a) const {
    if (kind_ != FieldKind::prime) throw std::logic_error("residue() requires a prime field");
    return a.get_num().get_si();
}

std::string Field::name() const {
    return kind_ == FieldKind::rationals ? "Q" : "F_" + std::to_string(p_);
}

std::string to_string(const Scalar& s) { return s.get_str(); }

Scalar parse_scalar(const std::string& text) {
    Scalar q;
    if (q.set_str(text, 10) != 0) throw std::invalid_argument("not a rational number: '" + text + "'");
    if (q.get_den() == 0) throw std::invalid_argument("zero denominator: '" + text + "'");
    q.canonicalize();
    return q;
}

}  // namespace twistlab
