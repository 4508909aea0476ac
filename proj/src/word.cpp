#include "colie/word.hpp"

#include <algorithm>

namespace colie {

Letter Word::letter_at(std::size_t pos) const {
    if (pos < 1 || pos > letters_.size())
        throw PreconditionError("word position out of range: " + std::to_string(pos) +
                                " for length " + std::to_string(letters_.size()));
    return letters_[pos - 1];
}

Word Word::concat(const Word& o) const {
    std::vector<Letter> out = letters_;
    out.insert(out.end(), o.letters_.begin(), o.letters_.end());
    return Word(std::move(out));
}

Word Word::rotated(std::size_t r) const {
    if (letters_.empty()) return *this;
    r %= letters_.size();
    std::vector<Letter> out = letters_;
    std::rotate(out.begin(), out.begin() + static_cast<std::ptrdiff_t>(r), out.end());
    return Word(std::move(out));
}

Word Word::reversed() const {
    std::vector<Letter> out(letters_.rbegin(), letters_.rend());
    return Word(std::move(out));
}

Word Word::segment(std::size_t i, std::size_t j) const {
    const std::size_t l = letters_.size();
    if (i < 1 || i > l || j < 1 || j > l)
        throw PreconditionError("segment positions out of range");
    std::vector<Letter> out;
    if (i < j) {
        for (std::size_t k = i + 1; k < j; ++k) out.push_back(letters_[k - 1]);
    } else if (i == j) {
        // Everything but position i, read cyclically from i+1.
        out.reserve(l - 1);
        for (std::size_t k = 1; k < l; ++k) out.push_back(letters_[(i - 1 + k) % l]);
    } else {
        for (std::size_t k = i + 1; k <= l; ++k) out.push_back(letters_[k - 1]);
        for (std::size_t k = 1; k < j; ++k) out.push_back(letters_[k - 1]);
    }
    return Word(std::move(out));
}

std::strong_ordering Word::operator<=>(const Word& o) const {
    if (auto c = letters_.size() <=> o.letters_.size(); c != 0) return c;
    return letters_ <=> o.letters_;
}

std::size_t Word::min_dim() const {
    std::size_t d = 0;
    for (Letter x : letters_) d = std::max<std::size_t>(d, std::size_t(x) + 1);
    return d;
}

std::vector<Word> all_words(std::size_t r, std::size_t l) {
    std::vector<Word> out;
    if (l == 0) {
        out.emplace_back();
        return out;
    }
    if (r == 0) return out;
    std::vector<Letter> cur(l, 0);
    for (;;) {
        out.emplace_back(cur);
        std::size_t k = l;
        while (k > 0 && cur[k - 1] == r - 1) cur[--k] = 0;
        if (k == 0) break;
        ++cur[k - 1];
    }
    return out;
}

} // namespace colie
