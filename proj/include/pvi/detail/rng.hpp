#pragma once

#include <complex>
#include <cstdint>

namespace pvi::detail {

// xorshift64* with a fixed scramble; deterministic across platforms so that
// seeded CLI runs and tests reproduce byte-identical output.
struct Rng {
    std::uint64_t s;

    explicit Rng(std::uint64_t seed)
        : s(seed ? seed : 0x9e3779b97f4a7c15ull) {}

    std::uint64_t next_u64() {
        s ^= s >> 12;
        s ^= s << 25;
        s ^= s >> 27;
        return s * 0x2545F4914F6CDD1Dull;
    }

    // uniform in [0, 1)
    double uniform() { return double(next_u64() >> 11) * 0x1.0p-53; }

    double uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }

    std::complex<double> box(double lo, double hi) {
        const double re = uniform(lo, hi);
        const double im = uniform(lo, hi);
        return {re, im};
    }
};

} // namespace pvi::detail
