#pragma once

#include <compare>

#include "colie/word.hpp"

namespace colie {

/// Index r minimizing w.rotated(r) lexicographically (smallest such r).
/// Runs in O(l) time (Booth's algorithm).
std::size_t least_rotation_index(const Word& w);

Word canonical_rotation(const Word& w);

/// Cyclic equivalence class of a word, keyed by its lexicographically
/// least rotation.
class Necklace {
public:
    explicit Necklace(const Word& w) : rep_(canonical_rotation(w)) {}

    const Word& rep() const { return rep_; }
    std::size_t length() const { return rep_.length(); }

    std::strong_ordering operator<=>(const Necklace& o) const { return rep_ <=> o.rep_; }
    bool operator==(const Necklace& o) const { return rep_ == o.rep_; }

private:
    Word rep_;
};

} // namespace colie
