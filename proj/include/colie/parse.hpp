#pragma once

#include <string_view>

#include "colie/coinv.hpp"

namespace colie {

/// Word syntax. Spaces whose basis names are all single characters use the
/// letters concatenated ("xyx"); other spaces use dot-separated 1-based
/// indices ("1.2.1"). The empty word is spelled "()" in both syntaxes.
Word parse_word(std::string_view text, const SpacePtr& space);

/// Element grammar: terms joined by '+' / '-', each term an optional
/// scalar coefficient and '*' followed by a word ("2*xy - 1/3*xxyy", "xy").
/// The result is projected to classes. "0" denotes the zero element.
CoinvElem parse_element(std::string_view text, const SpacePtr& space);

/// Rows separated by ';', entries by ',', scalars per the scalar grammar.
/// Must be square.
SquareMat<Scalar> parse_matrix(std::string_view text, const FieldSpec& f);

std::string word_str(const Word& w, const SpacePtr& space);
std::string element_str(const CoinvElem& a);
std::string tensor_str(const TensorElem& t);

} // namespace colie
