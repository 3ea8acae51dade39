#pragma once

#include <cstdint>
#include <random>

#include "cubica/rational.hpp"

namespace cubica {

// Deterministic RNG wrapper.  mt19937_64 is specified bit-exactly, so a
// (seed, call sequence) pair reproduces byte-identical reports everywhere.
class Rng {
public:
    explicit Rng(std::uint64_t seed) : engine_(seed) {}

    // Uniform integer in [lo, hi].
    long long range(long long lo, long long hi) {
        return std::uniform_int_distribution<long long>(lo, hi)(engine_);
    }

    bool flip() { return range(0, 1) == 1; }

    // Small exact rational, numerator in [-max_num, max_num], denominator in
    // [1, max_den]; never reduced to anything surprising (cpp_rational
    // canonicalizes).
    Rational rational(long long max_num = 5, long long max_den = 4) {
        return Rational(range(-max_num, max_num), range(1, max_den));
    }

    Rational nonzero_rational(long long max_num = 5, long long max_den = 4) {
        for (;;) {
            Rational r = rational(max_num, max_den);
            if (r != 0) return r;
        }
    }

private:
    std::mt19937_64 engine_;
};

}  // namespace cubica
