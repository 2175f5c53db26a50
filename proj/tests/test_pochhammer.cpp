#include <catch2/catch_amalgamated.hpp>

#include <cmath>

#include "clausen/pochhammer.hpp"

using namespace clausen;

namespace {

Rational poch(const Rational& a, long long p) { return pochhammer_exact(a, p).value_or_throw(); }

// Independent factorial-form oracle for nonpositive-integer bases:
// (-k)_n = (-1)^n k!/(k-n)! while n <= k.
Rational negint_rising_oracle(long long k, long long n) {
    if (n > k) return Rational(0);
    Rational v(factorial_exact(k), factorial_exact(k - n));
    return (n % 2 == 0) ? v : -v;
}

} // namespace

TEST_CASE("pinned shifted-factorial values") {
    CHECK(poch(Rational(7, 3), 0) == Rational(1));
    CHECK(poch(Rational(-3), 5) == Rational(0));
    CHECK(poch(Rational(-3), 2) == Rational(6));
    CHECK(poch(Rational(1, 2), 3) == Rational(15, 8));
    CHECK(poch(Rational(3), -1) == Rational(1, 2));
}

TEST_CASE("rising factorials on nonpositive-integer bases match the factorial form") {
    for (long long k = 0; k <= 9; ++k)
        for (long long n = 0; n <= 12; ++n) {
            CAPTURE(k, n);
            CHECK(poch(Rational(-k), n) == negint_rising_oracle(k, n));
        }
}

TEST_CASE("negative shifts invert rising factorials: (a)_{-n} (a-n)_n = 1") {
    const Rational bases[] = {Rational(1, 2), Rational(-7, 3), Rational(5), Rational(-4),
                              Rational(22, 7), Rational(-1, 6)};
    for (const Rational& a : bases)
        for (long long n = 1; n <= 8; ++n) {
            const auto inv = pochhammer_exact(a, -n);
            if (inv.is_pole()) {
                // Poles only for integer a in [1, n]; the identity is vacuous there.
                CHECK((is_integer(a) && a >= 1 && a <= n));
                continue;
            }
            CAPTURE(to_string(a), n);
            CHECK(inv.value * poch(a - n, n) == Rational(1));
        }
}

TEST_CASE("recurrence (a)_{p+1} = (a)_p (a+p) across both signs") {
    const Rational bases[] = {Rational(3, 4), Rational(-9, 2), Rational(6), Rational(-2)};
    for (const Rational& a : bases)
        for (long long p = -6; p <= 6; ++p) {
            const auto lhs = pochhammer_exact(a, p + 1);
            const auto rhs = pochhammer_exact(a, p);
            if (lhs.is_pole() || rhs.is_pole()) continue;
            CAPTURE(to_string(a), p);
            CHECK(lhs.value == rhs.value * (a + p));
        }
}

TEST_CASE("poles arise exactly for integer bases in [1, n] with negative shift") {
    CHECK(pochhammer_exact(Rational(1), -1).is_pole());
    CHECK(pochhammer_exact(Rational(2), -5).is_pole());
    CHECK(pochhammer_exact(Rational(5), -5).is_pole());
    CHECK_FALSE(pochhammer_exact(Rational(6), -5).is_pole());
    CHECK_FALSE(pochhammer_exact(Rational(0), -3).is_pole());
    CHECK_FALSE(pochhammer_exact(Rational(-2), -3).is_pole());
    CHECK_FALSE(pochhammer_exact(Rational(1, 2), -9).is_pole());
    CHECK_THROWS_AS(pochhammer_exact(Rational(1), -1).value_or_throw(), pole_in_closed_form);
    // Nonpositive integer bases with negative shift take the finite product value.
    CHECK(poch(Rational(0), -2) == Rational(1, 2));   // 1/((-1)(-2))
    CHECK(poch(Rational(-1), -2) == Rational(1, 6));  // 1/((-2)(-3))
}

TEST_CASE("pinned degenerate-quotient limits") {
    CHECK(pochhammer_negint_ratio(1, 2, 3) == Rational(-1, 2));
    CHECK(pochhammer_negint_ratio(0, 1, 2) == Rational(-1));
    CHECK(pochhammer_negint_ratio(2, 2, 3) == Rational(1));
}

TEST_CASE("degenerate-quotient limit matches a perturbed float evaluation") {
    // Oracle: evaluate (-m+eps)_r/(-l+eps)_r directly at small eps.
    const long double eps = 1e-9L;
    for (long long m = 0; m <= 4; ++m)
        for (long long l = m; l <= 6; ++l)
            for (long long r = l + 1; r <= l + 4; ++r) {
                long double num = 1.0L, den = 1.0L;
                for (long long i = 0; i < r; ++i) {
                    num *= (-(long double)m + eps + i);
                    den *= (-(long double)l + eps + i);
                }
                const long double expected = num / den;
                const long double got = to_real(pochhammer_negint_ratio(m, l, r));
                CAPTURE(m, l, r);
                CHECK(std::abs(got - expected) <= 1e-5L * std::abs(expected));
            }
}

TEST_CASE("degenerate-quotient recurrence in r") {
    // ratio(m,l,r+1)/ratio(m,l,r) = (r-m)/(r-l).
    for (long long m = 0; m <= 3; ++m)
        for (long long l = m; l <= 5; ++l)
            for (long long r = l + 1; r <= l + 5; ++r) {
                CAPTURE(m, l, r);
                CHECK(pochhammer_negint_ratio(m, l, r + 1) * Rational(r - l) ==
                      pochhammer_negint_ratio(m, l, r) * Rational(r - m));
            }
}

TEST_CASE("degenerate-quotient preconditions") {
    CHECK_THROWS_AS(pochhammer_negint_ratio(3, 2, 4), invalid_instance);
    CHECK_THROWS_AS(pochhammer_negint_ratio(1, 2, 2), invalid_instance);
    CHECK_THROWS_AS(pochhammer_negint_ratio(-1, 2, 4), invalid_instance);
}
