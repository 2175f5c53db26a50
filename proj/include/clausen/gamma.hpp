#pragma once

#include <cmath>

#include "clausen/detail/lanczos.hpp"
#include "clausen/errors.hpp"
#include "clausen/rational.hpp"

namespace clausen {

/// High-precision real type used by every float route (x86-64 extended
/// double: 64-bit mantissa, 18-19 significant digits).
using RealHP = long double;

namespace detail {

inline constexpr RealHP pi_hp = 3.14159265358979323846264338327950288L;

} // namespace detail

/// sin(pi x) with exact integer reduction, accurate for large |x|.
inline RealHP sin_pi(RealHP x) {
    const RealHP n = std::floor(x);
    RealHP r = x - n;                         // r in [0, 1)
    const bool negate = std::fmod(n, 2.0L) != 0.0L;
    if (r > 0.5L) r = 1.0L - r;               // sin(pi r) symmetric about 1/2
    const RealHP s = std::sin(detail::pi_hp * r);
    return negate ? -s : s;
}

/// cos(pi x) via the shifted sine, so half-integers map to exact zeros.
inline RealHP cos_pi(RealHP x) { return sin_pi(x + 0.5L); }

/// cos(pi r) for exact rational r: reduces r mod 2 exactly first, so the
/// result cannot drift for large numerators.
inline RealHP cos_pi_rational(const Rational& r) {
    const Integer num = numerator(r), den = denominator(r); // den > 0
    Integer q = num / (2 * den);
    if (num % (2 * den) != 0 && num < 0) q -= 1;            // floor division
    const Rational reduced = r - Rational(2 * q);           // in [0, 2)
    return cos_pi(to_real(reduced));
}

/// Gamma on the reals.  Poles at 0, -1, -2, ... raise; elsewhere the Lanczos
/// form is used directly for x >= 1/2 and via reflection below that, keeping
/// at least 13 significant digits over [-170, 170].
inline RealHP gamma_real(RealHP x) {
    if (x <= 0.0L && x == std::floor(x))
        throw pole_in_closed_form("gamma_real: pole at nonpositive integer");
    if (x >= 0.5L) {
        const RealHP zgh = x + detail::lanczos_g - 0.5L;
        return std::pow(zgh, x - 0.5L) * std::exp(-zgh) * detail::lanczos_sum(x);
    }
    // Gamma(x) Gamma(1-x) = pi / sin(pi x)
    const RealHP s = sin_pi(x);
    return detail::pi_hp / (s * gamma_real(1.0L - x));
}

/// log Gamma on the positive axis.
inline RealHP log_gamma(RealHP x) {
    if (x <= 0.0L) throw invalid_instance("log_gamma requires x > 0");
    if (x < 0.5L) return log_gamma(x + 1.0L) - std::log(x);
    const RealHP zgh = x + detail::lanczos_g - 0.5L;
    return (x - 0.5L) * std::log(zgh) - zgh + std::log(detail::lanczos_sum(x));
}

/// Float shifted factorial (a)_p by direct product; pole semantics mirror the
/// exact version (integer a in [1, -p] for negative p).
inline RealHP pochhammer_float(RealHP a, long long p) {
    if (p == 0) return 1.0L;
    if (p > 0) {
        RealHP prod = 1.0L;
        for (long long i = 0; i < p; ++i) prod *= a + static_cast<RealHP>(i);
        return prod;
    }
    RealHP prod = 1.0L;
    for (long long i = 1; i <= -p; ++i) {
        const RealHP f = a - static_cast<RealHP>(i);
        if (f == 0.0L) throw pole_in_closed_form("pochhammer_float: undefined Gamma quotient");
        prod *= f;
    }
    return 1.0L / prod;
}

} // namespace clausen
