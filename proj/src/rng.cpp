#include "colie/rng.hpp"

namespace colie {

Scalar random_scalar(Rng& rng, const FieldSpec& f, std::uint64_t bound, bool nonzero) {
    if (bound == 0) throw PreconditionError("bound must be positive");
    for (;;) {
        Scalar s = Scalar::zero(f);
        if (f.is_prime_field()) {
            s = Scalar::of_int(static_cast<long long>(rng.below(f.prime())), f);
        } else {
            long long num = rng.range(-static_cast<std::int64_t>(bound),
                                      static_cast<std::int64_t>(bound));
            long long den = rng.range(1, static_cast<std::int64_t>(bound));
            s = Scalar::of_ratio(num, den, f);
        }
        if (!nonzero || !s.is_zero()) return s;
    }
}

Word random_word(Rng& rng, std::size_t dim, std::size_t len) {
    if (dim == 0) throw PreconditionError("dim must be positive");
    std::vector<Letter> letters(len);
    for (auto& x : letters) x = static_cast<Letter>(rng.below(dim));
    return Word(std::move(letters));
}

} // namespace colie
