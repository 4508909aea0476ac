#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "colie/jet.hpp"
#include "colie/scalar.hpp"

namespace colie {

/// Dense square matrix over an exact ring R (Scalar or Jet). Entries are
/// value types carrying their own field/order, so a fill value seeds every
/// slot and mixed-ring arithmetic is rejected by the entry ops themselves.
template <class R>
class SquareMat {
public:
    SquareMat(std::size_t n, const R& fill) : n_(n), e_(n * n, fill) {
        if (n == 0) throw PreconditionError("matrix size must be positive");
    }

    static SquareMat identity(std::size_t n, const R& zero, const R& one) {
        SquareMat m(n, zero);
        for (std::size_t i = 0; i < n; ++i) m.at(i, i) = one;
        return m;
    }

    std::size_t size() const { return n_; }

    R& at(std::size_t i, std::size_t j) { return e_[i * n_ + j]; }
    const R& at(std::size_t i, std::size_t j) const { return e_[i * n_ + j]; }

    SquareMat operator+(const SquareMat& o) const {
        check_size(o);
        SquareMat out = *this;
        for (std::size_t k = 0; k < e_.size(); ++k) out.e_[k] += o.e_[k];
        return out;
    }

    SquareMat operator-(const SquareMat& o) const {
        check_size(o);
        SquareMat out = *this;
        for (std::size_t k = 0; k < e_.size(); ++k) out.e_[k] -= o.e_[k];
        return out;
    }

    SquareMat operator-() const {
        SquareMat out = *this;
        for (auto& x : out.e_) x = -x;
        return out;
    }

    SquareMat& operator+=(const SquareMat& o) {
        check_size(o);
        for (std::size_t k = 0; k < e_.size(); ++k) e_[k] += o.e_[k];
        return *this;
    }

    SquareMat& operator-=(const SquareMat& o) {
        check_size(o);
        for (std::size_t k = 0; k < e_.size(); ++k) e_[k] -= o.e_[k];
        return *this;
    }

    SquareMat operator*(const SquareMat& o) const {
        check_size(o);
        SquareMat out(n_, e_.front() - e_.front()); // zero of the shared ring
        for (std::size_t i = 0; i < n_; ++i)
            for (std::size_t k = 0; k < n_; ++k) {
                const R& a = at(i, k);
                if (a.is_zero()) continue;
                for (std::size_t j = 0; j < n_; ++j) out.at(i, j) += a * o.at(k, j);
            }
        return out;
    }

    SquareMat scaled(const R& c) const {
        SquareMat out = *this;
        for (auto& x : out.e_) x = x * c;
        return out;
    }

    SquareMat transposed() const {
        SquareMat out = *this;
        for (std::size_t i = 0; i < n_; ++i)
            for (std::size_t j = 0; j < n_; ++j) out.at(j, i) = at(i, j);
        return out;
    }

    bool is_zero() const {
        for (const auto& x : e_)
            if (!x.is_zero()) return false;
        return true;
    }

    bool operator==(const SquareMat& o) const {
        check_size(o);
        for (std::size_t k = 0; k < e_.size(); ++k)
            if (e_[k] != o.e_[k]) return false;
        return true;
    }
    bool operator!=(const SquareMat& o) const { return !(*this == o); }

private:
    void check_size(const SquareMat& o) const {
        if (n_ != o.n_) throw PreconditionError("matrix size mismatch");
    }

    std::size_t n_;
    std::vector<R> e_;
};

template <class R>
SquareMat<R> commutator(const SquareMat<R>& a, const SquareMat<R>& b) {
    return a * b - b * a;
}

SquareMat<Scalar> scalar_mat_zero(std::size_t n, const FieldSpec& f);
SquareMat<Scalar> scalar_mat_identity(std::size_t n, const FieldSpec& f);
SquareMat<Jet> jet_mat_zero(std::size_t n, const FieldSpec& f, std::size_t order);

/// Entry-wise lift into K[eps]/(eps^k).
SquareMat<Jet> to_jet(const SquareMat<Scalar>& m, std::size_t order);

/// Entry-wise coefficient extraction.
SquareMat<Scalar> jet_coeff(const SquareMat<Jet>& m, std::size_t i);

/// Gauss-Jordan over the exact field; nullopt when singular.
std::optional<SquareMat<Scalar>> try_inverse(const SquareMat<Scalar>& m);

std::string matrix_str(const SquareMat<Scalar>& m);

} // namespace colie
