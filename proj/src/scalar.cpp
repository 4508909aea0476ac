#include "colie/scalar.hpp"

#include <cctype>

namespace colie {

namespace {

bool is_prime_u64(std::uint64_t p) {
    if (p < 2) return false;
    mpz_class n;
    mpz_import(n.get_mpz_t(), 1, -1, sizeof(p), 0, 0, &p);
    return mpz_probab_prime_p(n.get_mpz_t(), 40) != 0;
}

// Canonical residue of an integer mod p, in [0, p).
mpz_class residue(const mpz_class& n, std::uint64_t p) {
    mpz_class m, out;
    mpz_import(m.get_mpz_t(), 1, -1, sizeof(p), 0, 0, &p);
    mpz_fdiv_r(out.get_mpz_t(), n.get_mpz_t(), m.get_mpz_t());
    return out;
}

} // namespace

FieldSpec FieldSpec::prime_field(std::uint64_t p) {
    if (!is_prime_u64(p))
        throw PreconditionError("prime field modulus must be prime, got " + std::to_string(p));
    return FieldSpec(FieldKind::PrimeField, p);
}

std::uint64_t FieldSpec::prime() const {
    if (kind_ != FieldKind::PrimeField)
        throw PreconditionError("prime() called on the rationals");
    return p_;
}

std::string FieldSpec::str() const {
    return is_rationals() ? "Q" : "F" + std::to_string(p_);
}

Scalar Scalar::zero(const FieldSpec& f) { return Scalar(f, mpq_class(0)); }

Scalar Scalar::one(const FieldSpec& f) { return Scalar(f, mpq_class(1)); }

Scalar Scalar::of_int(long long n, const FieldSpec& f) {
    mpz_class z;
    bool neg = n < 0;
    unsigned long long mag = neg ? 0ULL - static_cast<unsigned long long>(n)
                                 : static_cast<unsigned long long>(n);
    mpz_import(z.get_mpz_t(), 1, -1, sizeof(mag), 0, 0, &mag);
    if (neg) z = -z;
    return of_mpz(z, f);
}

Scalar Scalar::of_mpz(const mpz_class& n, const FieldSpec& f) {
    if (f.is_prime_field()) return Scalar(f, mpq_class(residue(n, f.prime())));
    return Scalar(f, mpq_class(n));
}

Scalar Scalar::of_ratio(long long num, long long den, const FieldSpec& f) {
    return of_int(num, f) / of_int(den, f);
}

Scalar Scalar::reduced(mpq_class v) const {
    v.canonicalize();
    if (field_.is_prime_field()) {
        std::uint64_t p = field_.prime();
        mpz_class d = residue(v.get_den(), p);
        if (sgn(d) == 0) throw DivisionByZero("denominator divisible by " + std::to_string(p));
        // d^{-1} mod p exists since p is prime and d is nonzero mod p.
        mpz_class m, dinv;
        mpz_import(m.get_mpz_t(), 1, -1, sizeof(p), 0, 0, &p);
        mpz_invert(dinv.get_mpz_t(), d.get_mpz_t(), m.get_mpz_t());
        return Scalar(field_, mpq_class(residue(v.get_num() * dinv, p)));
    }
    return Scalar(field_, std::move(v));
}

void Scalar::check_same_field(const Scalar& o) const {
    if (field_ != o.field_)
        throw FieldMismatch("scalar fields differ: " + field_.str() + " vs " + o.field_.str());
}

Scalar Scalar::operator+(const Scalar& o) const {
    check_same_field(o);
    return reduced(v_ + o.v_);
}

Scalar Scalar::operator-(const Scalar& o) const {
    check_same_field(o);
    return reduced(v_ - o.v_);
}

Scalar Scalar::operator*(const Scalar& o) const {
    check_same_field(o);
    return reduced(v_ * o.v_);
}

Scalar Scalar::operator/(const Scalar& o) const {
    check_same_field(o);
    if (o.is_zero()) throw DivisionByZero();
    return reduced(v_ / o.v_);
}

Scalar Scalar::operator-() const { return reduced(-v_); }

Scalar Scalar::inv() const { return one(field_) / *this; }

bool Scalar::operator==(const Scalar& o) const {
    check_same_field(o);
    return v_ == o.v_;
}

std::string Scalar::str() const { return v_.get_str(); }

Scalar parse_scalar(std::string_view text, const FieldSpec& f) {
    std::size_t i = 0;
    auto fail = [&](const std::string& msg, std::size_t at) -> Scalar {
        throw ParseError("scalar: " + msg, at);
    };
    if (text.empty()) return fail("empty input", 0);

    bool neg = false;
    if (text[i] == '+' || text[i] == '-') {
        neg = text[i] == '-';
        ++i;
    }
    std::size_t num_start = i;
    while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) ++i;
    if (i == num_start) return fail("expected digits", i);
    mpz_class num(std::string(text.substr(num_start, i - num_start)), 10);
    if (neg) num = -num;

    mpz_class den(1);
    if (i < text.size() && text[i] == '/') {
        ++i;
        std::size_t den_start = i;
        while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) ++i;
        if (i == den_start) return fail("expected denominator digits", i);
        den = mpz_class(std::string(text.substr(den_start, i - den_start)), 10);
    }
    if (i != text.size()) return fail("trailing characters", i);

    if (sgn(den) == 0) throw ParseError("scalar: zero denominator", text.find('/') + 1);
    return Scalar::of_mpz(num, f) / Scalar::of_mpz(den, f);
}

} // namespace colie
