#pragma once

#include "isharp/numeric.hpp"

#include <cstdint>
#include <random>

namespace isharp {

// Deterministic random source for the property suites. Draws go through
// hand-rolled reductions of mt19937_64 output so a seed reproduces the same
// sample stream on every platform and standard library.
class Rng {
  public:
    explicit Rng(std::uint64_t seed) : engine_(seed) {}

    std::uint64_t raw() { return engine_(); }

    // Uniform in [0, n); n >= 1.
    long below(long n) { return static_cast<long>(raw() % static_cast<std::uint64_t>(n)); }

    // Uniform in [lo, hi] inclusive.
    long range(long lo, long hi) { return lo + below(hi - lo + 1); }

    // Uniform over {lo..hi} \ {0}; lo < 0 < hi.
    long nonzero(long lo, long hi) {
        for (;;) {
            const long v = range(lo, hi);
            if (v != 0) return v;
        }
    }

    Rat rational(long lo, long hi, long max_den) {
        return Rat(range(lo, hi), range(1, max_den));
    }

    Rat nonzero_rational(long bound, long max_den) {
        return Rat(nonzero(-bound, bound), range(1, max_den));
    }

  private:
    std::mt19937_64 engine_;
};

}  // namespace isharp
