#include "colie/necklace.hpp"

namespace colie {

std::size_t least_rotation_index(const Word& w) {
    const auto& base = w.letters();
    const std::size_t l = base.size();
    if (l <= 1) return 0;

    std::vector<Letter> s(base);
    s.insert(s.end(), base.begin(), base.end());
    // Failure function over the doubled word; k tracks the best start found.
    std::vector<std::ptrdiff_t> f(s.size(), -1);
    std::size_t k = 0;
    for (std::size_t j = 1; j < s.size(); ++j) {
        Letter sj = s[j];
        std::ptrdiff_t i = f[j - k - 1];
        while (i != -1 && sj != s[k + static_cast<std::size_t>(i) + 1]) {
            if (sj < s[k + static_cast<std::size_t>(i) + 1]) k = j - static_cast<std::size_t>(i) - 1;
            i = f[static_cast<std::size_t>(i)];
        }
        if (i == -1 && sj != s[k]) {
            if (sj < s[k]) k = j;
            f[j - k] = -1;
        } else {
            f[j - k] = i + 1;
        }
    }
    return k % l;
}

Word canonical_rotation(const Word& w) { return w.rotated(least_rotation_index(w)); }

} // namespace colie
