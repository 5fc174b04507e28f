#pragma once

#include <numeric>
#include <stdexcept>
#include <vector>

namespace wreathpow {

// Small-integer number theory used by the cyclotomic layer and the
// class enumeration. Arguments stay in the low thousands, so trial
// division is plenty.

inline bool is_prime(long n) {
    if (n < 2) return false;
    for (long d = 2; d * d <= n; ++d)
        if (n % d == 0) return false;
    return true;
}

inline std::vector<long> divisors(long n) {
    std::vector<long> small, large;
    for (long d = 1; d * d <= n; ++d) {
        if (n % d == 0) {
            small.push_back(d);
            if (d != n / d) large.push_back(n / d);
        }
    }
    for (auto it = large.rbegin(); it != large.rend(); ++it) small.push_back(*it);
    return small;
}

inline long euler_phi(long n) {
    long result = n;
    for (long p = 2; p * p <= n; ++p) {
        if (n % p == 0) {
            while (n % p == 0) n /= p;
            result -= result / p;
        }
    }
    if (n > 1) result -= result / n;
    return result;
}

inline int mobius(long n) {
    int mu = 1;
    for (long p = 2; p * p <= n; ++p) {
        if (n % p == 0) {
            n /= p;
            if (n % p == 0) return 0;
            mu = -mu;
        }
    }
    if (n > 1) mu = -mu;
    return mu;
}

/// p'-part of k: strip every factor of p from k.
inline long p_prime_part(long k, long p) {
    if (!is_prime(p)) throw std::invalid_argument("p_prime_part: p must be prime");
    if (k < 1) throw std::invalid_argument("p_prime_part: k must be positive");
    while (k % p == 0) k /= p;
    return k;
}

} // namespace wreathpow
