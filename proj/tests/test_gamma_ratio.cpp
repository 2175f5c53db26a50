#include <catch2/catch_amalgamated.hpp>

#include <cmath>

#include "clausen/gamma.hpp"
#include "clausen/gamma_ratio.hpp"

using namespace clausen;

namespace {

// Brute-force probe: evaluate the ratio at a small concrete eps.
long double numeric_ratio(const GammaRatio& r, long double eps) {
    long double v = 1.0L;
    for (const auto& f : r.num) v *= gamma_real(to_real(f.arg) + to_real(f.eps_coeff) * eps);
    for (const auto& f : r.den) v /= gamma_real(to_real(f.arg) + to_real(f.eps_coeff) * eps);
    return v;
}

long double rel(long double a, long double b) {
    return std::abs(a - b) / std::max({std::abs(a), std::abs(b), 1e-300L});
}

} // namespace

TEST_CASE("regular factors pair across integer shifts") {
    // Gamma(7/3)/Gamma(1/3) = (1/3)(4/3)
    auto r = GammaRatio{}.times(Rational(7, 3)).over(Rational(1, 3));
    CHECK(gamma_ratio_limit(r).value_or_throw() == Rational(4, 9));

    // downward shift: Gamma(1/2)/Gamma(5/2) = 1/((3/2)(1/2))
    auto d = GammaRatio{}.times(Rational(1, 2)).over(Rational(5, 2));
    CHECK(gamma_ratio_limit(d).value_or_throw() == Rational(4, 3));

    // two fractional classes at once
    auto two = GammaRatio{}
                   .times(Rational(5, 2))
                   .times(Rational(7, 3))
                   .over(Rational(1, 2))
                   .over(Rational(10, 3));
    const auto got = gamma_ratio_limit(two).value_or_throw();
    CHECK(got == Rational(9, 28));
    CHECK(rel(to_real(got), numeric_ratio(two, 0.0L)) < 1e-15L);
}

TEST_CASE("pinned ratio of two approaching poles") {
    // lim Gamma(1 - m + eps/2) / Gamma(1 - 2m + eps) = 2 (-1)^m (2m-1)!/(m-1)!
    for (long long m = 1; m <= 5; ++m) {
        auto r = GammaRatio{}.times(Rational(1 - m), Rational(1, 2)).over(Rational(1 - 2 * m), 1);
        Rational want = 2 * Rational(factorial_exact(2 * m - 1)) / Rational(factorial_exact(m - 1));
        if (m % 2 != 0) want = -want;
        CAPTURE(m);
        CHECK(gamma_ratio_limit(r).value_or_throw() == want);
        CHECK(rel(to_real(want), numeric_ratio(r, 1e-7L)) < 1e-4L);
    }
}

TEST_CASE("unequal eps coefficients and orders") {
    // lim Gamma(-1 + 2eps)/Gamma(-3 + eps) = (-1/2) / (-1/6) = 3
    auto r = GammaRatio{}.times(Rational(-1), 2).over(Rational(-3), 1);
    CHECK(gamma_ratio_limit(r).value_or_throw() == Rational(3));
    CHECK(rel(3.0L, numeric_ratio(r, 1e-7L)) < 1e-4L);

    // negative coefficient flips the residue sign
    auto n = GammaRatio{}.times(Rational(0), Rational(-1)).over(Rational(0), 1);
    CHECK(gamma_ratio_limit(n).value_or_throw() == Rational(-1));
}

TEST_CASE("mixed poles and regular pairs") {
    // [Gamma(-2 + eps) Gamma(7/4)] / [Gamma(-4 + 3eps) Gamma(3/4)]
    //   poles: (1/2) / (1/(24*3)) = 36;  regular: (3/4)_1 = 3/4  ->  27
    auto r = GammaRatio{}
                 .times(Rational(-2), 1)
                 .times(Rational(7, 4))
                 .over(Rational(-4), 3)
                 .over(Rational(3, 4));
    CHECK(gamma_ratio_limit(r).value_or_throw() == Rational(27));
    CHECK(rel(27.0L, numeric_ratio(r, 1e-7L)) < 1e-4L);
}

TEST_CASE("surplus poles decide divergence or vanishing") {
    auto diverges = GammaRatio{}.times(Rational(-2), 1).over(Rational(1, 2), 1);
    CHECK(gamma_ratio_limit(diverges).is_pole());

    auto vanishes = GammaRatio{}.times(Rational(1, 2), 1).over(Rational(-3), 1);
    const auto z = gamma_ratio_limit(vanishes);
    REQUIRE_FALSE(z.is_pole());
    CHECK(z.value_or_throw() == Rational(0));
    CHECK(std::abs(numeric_ratio(vanishes, 1e-7L)) < 1e-5L);

    // unpairable regular factors are irrelevant once the denominator wins
    auto zr = GammaRatio{}.times(Rational(1, 3)).over(Rational(-1), 1).over(Rational(1, 5));
    CHECK(gamma_ratio_limit(zr).value_or_throw() == Rational(0));
}

TEST_CASE("unpairable regular factors are refused") {
    CHECK_THROWS_AS(gamma_ratio_limit(GammaRatio{}.times(Rational(1, 3)).over(Rational(1, 2))),
                    not_rational);
    CHECK_THROWS_AS(gamma_ratio_limit(GammaRatio{}.times(Rational(1, 3))), not_rational);
    CHECK_THROWS_AS(gamma_ratio_limit(GammaRatio{}.over(Rational(2, 7))), not_rational);
    // balanced pole counts do not excuse a leftover
    CHECK_THROWS_AS(gamma_ratio_limit(
                        GammaRatio{}.times(Rational(-1), 1).times(Rational(1, 3)).over(Rational(-2), 1)),
                    not_rational);
}

TEST_CASE("pinned pole without a perturbation is rejected") {
    CHECK_THROWS_AS(gamma_ratio_limit(GammaRatio{}.times(Rational(-2))), invalid_instance);
    CHECK_THROWS_AS(gamma_ratio_limit(GammaRatio{}.over(Rational(0), 0)), invalid_instance);
}

TEST_CASE("empty ratio is one") {
    CHECK(gamma_ratio_limit(GammaRatio{}).value_or_throw() == Rational(1));
}
