#pragma once

#include <vector>

#include "clausen/rational.hpp"

namespace clausen::detail {

inline Integer binomial_int(long long n, long long k) {
    if (k < 0 || k > n) return 0;
    if (k > n - k) k = n - k;
    Integer r = 1;
    for (long long i = 1; i <= k; ++i) {
        r *= n - k + i;
        r /= i;
    }
    return r;
}

/// B_0..B_n (B_1 = -1/2 convention), cached.
inline const std::vector<Rational>& bernoulli_numbers(std::size_t n) {
    static std::vector<Rational> cache{Rational(1)};
    // grow-only; computed before any threaded use (callers warm it up front)
    while (cache.size() <= n) {
        const long long m = static_cast<long long>(cache.size());
        Rational acc = 0;
        for (long long k = 0; k < m; ++k)
            acc += Rational(binomial_int(m + 1, k)) * cache[static_cast<std::size_t>(k)];
        cache.push_back(-acc / Rational(m + 1));
    }
    return cache;
}

/// Bernoulli polynomial B_n(x) = sum_k C(n,k) B_k x^(n-k), exact.
inline Rational bernoulli_poly(long long n, const Rational& x) {
    const auto& B = bernoulli_numbers(static_cast<std::size_t>(n));
    Rational acc = 0;
    Rational xpow = 1; // x^(n-k) built from the top power downwards
    // iterate k = n .. 0 so powers of x rise from x^0
    for (long long k = n; k >= 0; --k) {
        acc += Rational(binomial_int(n, k)) * B[static_cast<std::size_t>(k)] * xpow;
        xpow *= x;
    }
    return acc;
}

} // namespace clausen::detail
