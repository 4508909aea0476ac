#pragma once

#include <map>
#include <optional>

#include "colie/symplectic.hpp"

namespace colie {

/// Element of the (mixed) tensor algebra on a space: a finite sum of words
/// with nonzero coefficients. Zero stores no terms. Lengths may mix; the
/// empty word is the length-0 monomial.
class TensorElem {
public:
    explicit TensorElem(SpacePtr space);
    static TensorElem monomial(SpacePtr space, Word w, Scalar c);

    const SpacePtr& space() const { return space_; }
    const FieldSpec& field() const { return space_->field(); }
    const std::map<Word, Scalar>& terms() const { return terms_; }

    bool is_zero() const { return terms_.empty(); }

    /// Accumulates c on w, dropping the term if it cancels.
    void add_term(const Word& w, const Scalar& c);

    TensorElem operator+(const TensorElem& o) const;
    TensorElem operator-(const TensorElem& o) const;
    TensorElem operator-() const;
    TensorElem scaled(const Scalar& c) const;
    TensorElem& operator+=(const TensorElem& o);

    bool operator==(const TensorElem& o) const;
    bool operator!=(const TensorElem& o) const { return !(*this == o); }

    /// All terms share this length; nullopt when zero or mixed.
    std::optional<std::size_t> homogeneous_length() const;

private:
    SpacePtr space_;
    std::map<Word, Scalar> terms_;
};

/// Form value on single letters, from the Gram matrix of the shared space.
Scalar form_value(const SpacePtr& space, Letter a, Letter b);

/// Signed reversal: on a length-l word acts as (-1)^l times reversal,
/// extended linearly. An algebra antiautomorphism of order 2.
TensorElem signed_reverse(const TensorElem& a);

/// Plain reversal without signs, extended linearly.
TensorElem plain_reverse(const TensorElem& a);

/// Linear extension of the left cyclic shift applied r times.
TensorElem rotate(const TensorElem& a, std::size_t r);

/// Does signed_reverse(a) == sign * a hold? sign must be +1 or -1.
bool is_signed_reverse_eigenvector(const TensorElem& a, int sign);

/// (a + sign * signed_reverse(a)) / 2. Characteristic 2 is rejected.
TensorElem signed_reverse_projection(const TensorElem& a, int sign);

/// Basis of the sign-eigenspace of signed reversal on words of length l:
/// one vector per reversal orbit (fixed words give single terms when the
/// sign matches, pairs give w + sign_factor * reversed(w)).
std::vector<TensorElem> signed_reverse_eigenbasis(const SpacePtr& space, std::size_t l, int sign);

/// Basis of { a in V^{(x)l} : rotate(a, 1) == a }, computed as an exact
/// kernel of (shift - id) on the r^l-dimensional word space.
std::vector<TensorElem> cyclic_invariant_basis(const SpacePtr& space, std::size_t l);

/// Writes a homogeneous element of length l >= 1 as sum_i e_i (x) p_i and
/// returns the tails p_i (length l-1), indexed by first letter. Throws on
/// zero, mixed-length or length-0 input.
std::vector<TensorElem> first_letter_decompose(const TensorElem& a);

} // namespace colie
