#pragma once

#include "wreathpow/rational.hpp"

namespace wreathpow {

// Directed-rounding brackets for the transcendental leaves of the bound
// formulas. Each function returns an exact rational that is >= (round up)
// or <= (round down) the true value, so composite bound expressions stay
// sound without any floating-point round trip.

enum class Round { Up, Down };

/// natural logarithm of a positive integer
Rational ln_bracket(long x, Round dir);

/// log base p of n (both integers >= 1, p >= 2); exact when n is a power of p
Rational log_base_bracket(long n, long p, Round dir);

/// Euler-Mascheroni constant
Rational euler_gamma_bracket(Round dir);

} // namespace wreathpow
