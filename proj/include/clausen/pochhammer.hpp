#pragma once

#include <cstdint>

#include "clausen/errors.hpp"
#include "clausen/rational.hpp"

namespace clausen {

/// Outcome of an exact shifted-factorial evaluation.  A Pole means the
/// underlying Gamma quotient is undefined (numerator Gamma pole that nothing
/// cancels); it is data, not an exception, so callers can branch on it.
struct PochhammerResult {
    bool pole = false;
    Rational value;

    static PochhammerResult of(Rational v) { return {false, std::move(v)}; }
    static PochhammerResult at_pole() { return {true, Rational(0)}; }

    bool is_pole() const { return pole; }

    const Rational& value_or_throw(const char* context = "pochhammer") const {
        if (pole) throw pole_in_closed_form(std::string(context) + ": undefined Gamma quotient");
        return value;
    }
};

inline Integer factorial_exact(long long n) {
    if (n < 0) throw invalid_instance("factorial of negative integer");
    Integer f = 1;
    for (long long i = 2; i <= n; ++i) f *= i;
    return f;
}

/// (alpha)_p for any rational alpha and any integer p (both signs).
///
/// p >= 1 is the rising product alpha(alpha+1)...(alpha+p-1); for
/// nonpositive-integer alpha = -k that product is (-1)^p k!/(k-p)! while
/// p <= k and 0 once p > k.  p = -n divides by (alpha-1)...(alpha-n), which
/// is a pole exactly when alpha is an integer in [1, n].
inline PochhammerResult pochhammer_exact(const Rational& alpha, long long p) {
    if (p == 0) return PochhammerResult::of(Rational(1));
    if (p > 0) {
        Rational prod = 1;
        Rational factor = alpha;
        for (long long i = 0; i < p; ++i, factor += 1) {
            if (factor == 0) return PochhammerResult::of(Rational(0));
            prod *= factor;
        }
        return PochhammerResult::of(prod);
    }
    Rational prod = 1;
    Rational factor = alpha - 1;
    for (long long i = 0; i < -p; ++i, factor -= 1) {
        if (factor == 0) return PochhammerResult::at_pole();
        prod *= factor;
    }
    return PochhammerResult::of(1 / prod);
}

/// Limit value of (-m + eps)_r / (-l + eps)_r as eps -> 0, for 0 <= m <= l
/// and r >= l + 1 (both Pochhammers vanish; the quotient does not).
/// Equals (-1)^(l-m) m! (r-1-m)! / (l! (r-1-l)!).
inline Rational pochhammer_negint_ratio(long long m, long long l, long long r) {
    if (m < 0 || l < m || r < l + 1)
        throw invalid_instance("pochhammer_negint_ratio requires 0 <= m <= l < r");
    Rational value(factorial_exact(m) * factorial_exact(r - 1 - m),
                   factorial_exact(l) * factorial_exact(r - 1 - l));
    if ((l - m) % 2 != 0) value = -value;
    return value;
}

} // namespace clausen
