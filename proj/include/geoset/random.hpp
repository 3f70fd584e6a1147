#pragma once

#include <cstdint>
#include <random>

#include "geoset/rational.hpp"

namespace geoset {

using Rng = std::mt19937_64;

// Uniform draw from [0, n). Rejection on the raw 64-bit stream so results are
// identical on every platform (std::uniform_int_distribution is not portable).
inline std::uint64_t rand_below(Rng& rng, std::uint64_t n) {
    if (n == 0) return 0;
    const std::uint64_t limit = UINT64_MAX - UINT64_MAX % n;
    std::uint64_t draw;
    do {
        draw = rng();
    } while (draw >= limit);
    return draw % n;
}

inline long rand_int(Rng& rng, long lo, long hi) {  // inclusive bounds
    return lo + static_cast<long>(rand_below(rng, static_cast<std::uint64_t>(hi - lo + 1)));
}

// Uniform draw from the grid {lo, lo + 1/den, lo + 2/den, ...} ∩ [lo, hi].
inline Rational rand_rational(Rng& rng, const Rational& lo, const Rational& hi, unsigned den) {
    const Rational span = (hi - lo) * static_cast<long>(den);
    mpz_class steps_z;
    mpz_fdiv_q(steps_z.get_mpz_t(), span.get_num_mpz_t(), span.get_den_mpz_t());
    const std::uint64_t steps = mpz_get_ui(steps_z.get_mpz_t());
    const std::uint64_t i = rand_below(rng, steps + 1);
    return lo + make_rational(static_cast<long>(i), static_cast<long>(den));
}

}  // namespace geoset
