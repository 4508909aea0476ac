#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "colie/scalar.hpp"

namespace colie {

/// Element of K[eps]/(eps^k): coefficients c[0] + c[1] eps + ... up to
/// order k-1. Order k >= 1 is fixed per value; mixing orders throws.
class Jet {
public:
    Jet(const FieldSpec& f, std::size_t order);
    /// From explicit coefficients (eps^0 first); order = coeffs.size() >= 1.
    explicit Jet(std::vector<Scalar> coeffs);

    static Jet constant(const Scalar& c, std::size_t order);
    static Jet eps(const FieldSpec& f, std::size_t order);

    std::size_t order() const { return c_.size(); }
    const FieldSpec& field() const { return c_.front().field(); }
    const Scalar& coeff(std::size_t i) const;

    Jet operator+(const Jet& o) const;
    Jet operator-(const Jet& o) const;
    Jet operator*(const Jet& o) const;
    Jet operator-() const;
    Jet& operator+=(const Jet& o) { return *this = *this + o; }
    Jet& operator-=(const Jet& o) { return *this = *this - o; }

    Jet scaled(const Scalar& c) const;

    bool is_zero() const;
    bool operator==(const Jet& o) const;
    bool operator!=(const Jet& o) const { return !(*this == o); }

    std::string str() const;

private:
    void check_compatible(const Jet& o) const;

    std::vector<Scalar> c_;
};

} // namespace colie
