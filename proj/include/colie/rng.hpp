#pragma once

#include <cstdint>

#include "colie/scalar.hpp"
#include "colie/word.hpp"

namespace colie {

/// SplitMix64 stream. Hand-rolled (not <random>) so that seeded runs are
/// byte-identical across platforms and standard library versions.
class Rng {
public:
    explicit Rng(std::uint64_t seed) : state_(seed) {}

    /// State such that Rng(trial_seed(m, t)) is trial t's stream. The trial
    /// index passes through the output mixer: a plain additive offset would
    /// make trial t+1's stream a one-draw shift of trial t's.
    static std::uint64_t trial_seed(std::uint64_t master, std::uint64_t trial) {
        Rng m(master);
        Rng t(m.next() + trial);
        return t.next();
    }

    /// Stream for one trial of a suite run: distinct trials get well
    /// separated streams, deterministically in (master, trial).
    static Rng for_trial(std::uint64_t master, std::uint64_t trial) {
        return Rng(trial_seed(master, trial));
    }

    std::uint64_t next() {
        std::uint64_t z = (state_ += 0x9E3779B97F4A7C15ull);
        z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
        z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
        return z ^ (z >> 31);
    }

    /// Uniform-ish value in [0, n); the modulo bias is irrelevant for test
    /// data generation. n >= 1.
    std::uint64_t below(std::uint64_t n) {
        if (n == 0) throw PreconditionError("below(0)");
        return next() % n;
    }

    /// Inclusive integer range.
    std::int64_t range(std::int64_t lo, std::int64_t hi) {
        if (lo > hi) throw PreconditionError("empty range");
        return lo + static_cast<std::int64_t>(below(static_cast<std::uint64_t>(hi - lo) + 1));
    }

private:
    std::uint64_t state_;
};

/// Height-bounded random scalar: over the rationals, numerator in
/// [-bound, bound] and denominator in [1, bound]; over Z/p, any residue.
Scalar random_scalar(Rng& rng, const FieldSpec& f, std::uint64_t bound, bool nonzero);

Word random_word(Rng& rng, std::size_t dim, std::size_t len);

} // namespace colie
