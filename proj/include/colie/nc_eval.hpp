#pragma once

#include <vector>

#include "colie/matrix.hpp"
#include "colie/tensor.hpp"

namespace colie {

/// How an empty segment-operator result behaves when used as a factor.
/// EmptyWord is the supported convention (empty word = identity);
/// LiteralZero annihilates the enclosing term and exists only to give the
/// verification suites a known-broken variant for sensitivity self-tests.
enum class SegmentMode : std::uint8_t { EmptyWord, LiteralZero };

/// Ordered product of the letters' images, extended linearly with the word
/// coefficients. The empty word evaluates to the identity. The assignment
/// maps basis index i to images[i]; its length must equal the space
/// dimension, all matrices square of one size over one ring.
template <class R>
SquareMat<R> nc_eval(const TensorElem& t, const std::vector<SquareMat<R>>& images);

/// First-order expansion of one word w of length n at `base` along
/// `direction`, as a matrix over Jet(k = 2):
///   w(base) + eps * sum_k prefix_k(base) * direction[w_k] * suffix_k(base)
/// where prefix_k / suffix_k are the segment words D(n,k) and D(k,1) of w.
/// Agrees with nc_eval of w at the jet assignment base + eps*direction.
SquareMat<Jet> expand_first_order(const Word& w, const std::vector<SquareMat<Scalar>>& base,
                                  const std::vector<SquareMat<Scalar>>& direction,
                                  SegmentMode mode = SegmentMode::EmptyWord);

/// eps-coefficient of the expansion above, extended linearly over t.
SquareMat<Scalar> directional_derivative(const TensorElem& t,
                                         const std::vector<SquareMat<Scalar>>& base,
                                         const std::vector<SquareMat<Scalar>>& direction,
                                         SegmentMode mode = SegmentMode::EmptyWord);

extern template SquareMat<Scalar> nc_eval(const TensorElem&,
                                          const std::vector<SquareMat<Scalar>>&);
extern template SquareMat<Jet> nc_eval(const TensorElem&, const std::vector<SquareMat<Jet>>&);

} // namespace colie
