#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <vector>

#include "colie/errors.hpp"

namespace colie {

/// 0-based index into the basis of the underlying space.
using Letter = std::uint32_t;

/// Finite sequence of basis letters; the empty word is allowed and acts as
/// the length-0 monomial. Ordering is by length first, then lexicographic.
class Word {
public:
    Word() = default;
    explicit Word(std::vector<Letter> letters) : letters_(std::move(letters)) {}
    static Word single(Letter x) { return Word({x}); }

    std::size_t length() const { return letters_.size(); }
    bool empty() const { return letters_.empty(); }

    /// 1-based access matching the position conventions of the segment
    /// operators below.
    Letter letter_at(std::size_t pos) const;

    Letter operator[](std::size_t i) const { return letters_[i]; }
    const std::vector<Letter>& letters() const { return letters_; }

    Word concat(const Word& o) const;

    /// Left cyclic shift applied r times: (a1 a2 ... al) -> (a2 ... al a1).
    Word rotated(std::size_t r) const;

    Word reversed() const;

    /// Segment operator on 1-based positions i, j in [1, l]:
    ///   i <  j : letters i+1 .. j-1 (the gap strictly between i and j),
    ///   i == j : the word with position i removed,
    ///   i >  j : letters i+1 .. l followed by 1 .. j-1 (wrap around).
    /// Cyclically adjacent positions -- j == i+1, and (i, j) == (l, 1) --
    /// yield the empty word, which concatenates as the identity.
    Word segment(std::size_t i, std::size_t j) const;

    std::strong_ordering operator<=>(const Word& o) const;
    bool operator==(const Word& o) const { return letters_ == o.letters_; }

    /// Largest letter value + 1, or 0 for the empty word.
    std::size_t min_dim() const;

private:
    std::vector<Letter> letters_;
};

/// All r^l words of length l over letters {0, ..., r-1}, in lexicographic
/// order. l == 0 yields just the empty word.
std::vector<Word> all_words(std::size_t r, std::size_t l);

} // namespace colie
