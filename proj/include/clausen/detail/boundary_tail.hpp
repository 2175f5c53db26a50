#pragma once

#include <cmath>
#include <cstddef>
#include <vector>

#include "clausen/detail/bernoulli.hpp"
#include "clausen/gamma.hpp"
#include "clausen/rational.hpp"

namespace clausen::detail {

/// Hurwitz zeta(s, a) for real s > 1 and large a, by Euler-Maclaurin on the
/// empty prefix: a^(1-s)/(s-1) + a^(-s)/2 + sum_i B_{2i}/(2i)! (s)_{2i-1} a^(1-s-2i).
/// Caller guarantees a >> |s| (we use a >= 4096, |s| <= ~80).
struct ZetaResult {
    long double value;
    long double trunc_error; // magnitude of the first dropped correction
};

inline ZetaResult hurwitz_zeta_large_a(long double s, long double a) {
    const long double log_a = std::log(a);
    const long double lead = std::exp((1.0L - s) * log_a) / (s - 1.0L);
    long double acc = lead + 0.5L * std::exp(-s * log_a);
    long double poch = s; // (s)_{2i-1} built incrementally
    long double err = 0.0L;
    constexpr int I = 8;
    for (int i = 1; i <= I + 1; ++i) {
        // (s)_{2i-1} = s (s+1) ... (s+2i-2); step multiplies (s+2i-3)(s+2i-2)
        if (i > 1) poch *= (s + 2.0L * i - 3.0L) * (s + 2.0L * i - 2.0L);
        const long double b2i =
            to_real(bernoulli_numbers(static_cast<std::size_t>(2 * i))[static_cast<std::size_t>(2 * i)]);
        long double fact = 1.0L;
        for (int j = 2; j <= 2 * i; ++j) fact *= j;
        const long double corr = b2i / fact * poch * std::exp((1.0L - s - 2.0L * i) * log_a);
        if (i <= I)
            acc += corr;
        else
            err = std::abs(corr);
    }
    return {acc, err};
}

struct TailResult {
    long double value;
    long double error;
};

/// Remainder sum_{r=N}^inf of the z = 1 series with term ratio
/// prod(a_i + r) / (prod(b_j + r)), where the b list already contains the
/// factorial's implicit 1 and #num = #den.  Terms behave like
/// C r^(-1-omega) (1 + c_1/r + ...): the c_j come exactly from the Stirling
/// series of log Gamma (Bernoulli polynomials of the rational parameters,
/// exact series exponentiation), and each power law is summed by Hurwitz zeta.
inline TailResult unit_argument_tail(const std::vector<Rational>& num,
                                     const std::vector<Rational>& den_with_one,
                                     const Rational& omega, long long N) {
    constexpr int J = 12;
    // log of the term, minus its -(1+omega) log r part, as a series in 1/r:
    // e_n = (-1)^(n+1)/(n(n+1)) [ sum_i B_{n+1}(a_i) - sum_j B_{n+1}(b_j) ]
    std::vector<Rational> e(J + 1, Rational(0));
    for (int n = 1; n <= J; ++n) {
        Rational s = 0;
        for (const auto& a : num) s += bernoulli_poly(n + 1, a);
        for (const auto& b : den_with_one) s -= bernoulli_poly(n + 1, b);
        s /= Rational(static_cast<long long>(n) * (n + 1));
        e[static_cast<std::size_t>(n)] = (n % 2 == 0) ? -s : s;
    }
    // c = exp(e): j c_j = sum_{i=1..j} i e_i c_{j-i}
    std::vector<Rational> c(J + 1, Rational(0));
    c[0] = 1;
    for (int j = 1; j <= J; ++j) {
        Rational s = 0;
        for (int i = 1; i <= j; ++i)
            s += Rational(i) * e[static_cast<std::size_t>(i)] * c[static_cast<std::size_t>(j - i)];
        c[static_cast<std::size_t>(j)] = s / Rational(j);
    }
    // C = prod Gamma(b_j) / prod Gamma(a_i); signs from negative non-integer
    // arguments come out of gamma_real itself.
    long double C = 1.0L;
    for (const auto& b : den_with_one) C *= gamma_real(to_real(b));
    for (const auto& a : num) C /= gamma_real(to_real(a));

    const long double a0 = static_cast<long double>(N);
    const long double w = to_real(omega);
    long double acc = 0.0L, err = 0.0L;
    long double last = 0.0L;
    for (int j = 0; j <= J; ++j) {
        const auto zeta = hurwitz_zeta_large_a(1.0L + w + j, a0);
        last = to_real(c[static_cast<std::size_t>(j)]) * zeta.value;
        acc += last;
        err += std::abs(to_real(c[static_cast<std::size_t>(j)])) * zeta.trunc_error;
    }
    err += std::abs(last); // asymptotic series truncation, dominated by the last kept order
    return {C * acc, std::abs(C) * err + std::abs(C * acc) * 1e-17L};
}

} // namespace clausen::detail
