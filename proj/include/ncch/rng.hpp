#pragma once

#include "ncch/rational.hpp"

#include <cstdint>
#include <random>

namespace ncch {

// Seeded generator with platform-independent draws. mt19937_64 output is
// pinned by the standard; std::uniform_int_distribution is not, so the
// bounded draw is done here by rejection sampling.
class DetRng {
public:
    explicit DetRng(std::uint64_t seed) : eng_(seed) {}

    std::uint64_t next() { return eng_(); }

    // Uniform on [lo, hi], inclusive.
    std::int64_t uniform(std::int64_t lo, std::int64_t hi)
    {
        const std::uint64_t range = static_cast<std::uint64_t>(hi - lo) + 1;
        if (range == 0)
            return static_cast<std::int64_t>(next()); // full 64-bit range
        const std::uint64_t limit = UINT64_MAX - UINT64_MAX % range;
        std::uint64_t draw;
        do {
            draw = next();
        } while (draw >= limit);
        return lo + static_cast<std::int64_t>(draw % range);
    }

    // Uniform nonzero integer in [-bound, bound].
    std::int64_t nonzero(std::int64_t bound)
    {
        std::int64_t v;
        do {
            v = uniform(-bound, bound);
        } while (v == 0);
        return v;
    }

    // Small exact scalar; numerators in [-9, 9], denominators in [1, 4].
    Rational rational_entry()
    {
        return rational(uniform(-9, 9), uniform(1, 4));
    }

private:
    std::mt19937_64 eng_;
};

} // namespace ncch
