/// Deterministic per-trial random streams. Each trial derives its own
/// generator from (seed, trial index) via splitmix64, so results do not
/// depend on execution order or thread count.
#pragma once

#include <tropid/scalar.hpp>

#include <cstdint>
#include <random>

namespace tropid {

inline std::uint64_t splitmix64(std::uint64_t& state) {
    state += 0x9E3779B97F4A7C15ULL;
    std::uint64_t z = state;
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    return z ^ (z >> 31);
}

class TrialRng {
public:
    TrialRng(std::uint64_t seed, std::uint64_t trial) {
        std::uint64_t s = seed;
        std::uint64_t a = splitmix64(s);
        s = a ^ trial;
        eng_.seed(splitmix64(s));
    }

    /// Uniform integer in [lo, hi]; engine-stable across platforms.
    long uniform(long lo, long hi) {
        std::uint64_t span = static_cast<std::uint64_t>(hi - lo) + 1;
        return lo + static_cast<long>(eng_() % span);
    }

    bool chance_one_in(unsigned n) { return eng_() % n == 0; }

    /// Sampling distribution shared by all monoid samplers: -inf with
    /// probability 1/5, otherwise numerator uniform in [-20, 20] and
    /// denominator uniform in [1, 5], reduced to lowest terms.
    TropScalar entry(bool allow_neg_infinity = true) {
        if (allow_neg_infinity && chance_one_in(5)) return TropScalar::neg_infinity();
        long num = uniform(-20, 20);
        long den = uniform(1, 5);
        return TropScalar::rational(num, den);
    }

    /// Same distribution conditioned on a nonpositive value (numerator in
    /// [-20, 0]).
    TropScalar nonpositive_entry(bool allow_neg_infinity = true) {
        if (allow_neg_infinity && chance_one_in(5)) return TropScalar::neg_infinity();
        long num = uniform(-20, 0);
        long den = uniform(1, 5);
        return TropScalar::rational(num, den);
    }

    std::mt19937_64& engine() { return eng_; }

private:
    std::mt19937_64 eng_;
};

}  // namespace tropid
