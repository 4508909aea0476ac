#pragma once

#include <cstdint>
#include <string>
#include <string_view>

#include <gmpxx.h>

#include "colie/errors.hpp"

namespace colie {

enum class FieldKind : std::uint8_t { Rationals, PrimeField };

/// Identifies the coefficient field: the rationals or Z/p for a prime p.
class FieldSpec {
public:
    static FieldSpec rationals() { return FieldSpec(FieldKind::Rationals, 0); }

    /// Throws PreconditionError unless `p` is prime.
    static FieldSpec prime_field(std::uint64_t p);

    FieldKind kind() const { return kind_; }
    bool is_rationals() const { return kind_ == FieldKind::Rationals; }
    bool is_prime_field() const { return kind_ == FieldKind::PrimeField; }

    /// Valid only for prime fields.
    std::uint64_t prime() const;

    /// 0 for the rationals, p for Z/p.
    std::uint64_t characteristic() const { return p_; }

    bool operator==(const FieldSpec&) const = default;

    std::string str() const;

private:
    FieldSpec(FieldKind kind, std::uint64_t p) : kind_(kind), p_(p) {}

    FieldKind kind_;
    std::uint64_t p_;
};

/// Exact field element. Rationals are kept reduced with positive
/// denominator; prime-field elements are canonical residues in [0, p)
/// stored in the numerator with denominator 1.
class Scalar {
public:
    static Scalar zero(const FieldSpec& f);
    static Scalar one(const FieldSpec& f);
    static Scalar of_int(long long n, const FieldSpec& f);
    static Scalar of_mpz(const mpz_class& n, const FieldSpec& f);

    /// num/den reduced into the field; in Z/p this is num * den^{-1}.
    /// Throws DivisionByZero if den vanishes (in the field).
    static Scalar of_ratio(long long num, long long den, const FieldSpec& f);

    const FieldSpec& field() const { return field_; }
    const mpq_class& value() const { return v_; }

    bool is_zero() const { return sgn(v_) == 0; }
    bool is_one() const { return v_ == 1; }

    Scalar operator+(const Scalar& o) const;
    Scalar operator-(const Scalar& o) const;
    Scalar operator*(const Scalar& o) const;
    Scalar operator/(const Scalar& o) const;
    Scalar operator-() const;

    Scalar& operator+=(const Scalar& o) { return *this = *this + o; }
    Scalar& operator-=(const Scalar& o) { return *this = *this - o; }
    Scalar& operator*=(const Scalar& o) { return *this = *this * o; }

    Scalar inv() const;

    /// Equality requires matching fields; comparing across fields throws.
    bool operator==(const Scalar& o) const;
    bool operator!=(const Scalar& o) const { return !(*this == o); }

    /// "n" or "n/d"; prime-field values print their canonical residue.
    std::string str() const;

private:
    Scalar(FieldSpec f, mpq_class v) : field_(f), v_(std::move(v)) {}

    Scalar reduced(mpq_class v) const;
    void check_same_field(const Scalar& o) const;

    FieldSpec field_;
    mpq_class v_;
};

/// Grammar: optional sign, digits, optionally "/" and a nonzero denominator.
/// Prime fields reduce the result to its canonical residue.
Scalar parse_scalar(std::string_view text, const FieldSpec& f);

} // namespace colie
