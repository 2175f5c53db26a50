#pragma once

#include <algorithm>
#include <functional>
#include <initializer_list>
#include <optional>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "clausen/errors.hpp"
#include "clausen/gamma.hpp"
#include "clausen/gamma_ratio.hpp"
#include "clausen/pochhammer.hpp"
#include "clausen/rational.hpp"
#include "clausen/series.hpp"

// Catalog of 3F2(1) summation theorems in four classical families (Watson,
// Saalschutz, Whipple, Dixon), each in non-terminating, terminating and
// truncated variants.  Exact entries have rational closed forms evaluated in
// exact arithmetic; float entries have Gamma-quotient closed forms evaluated
// in long double.  Every truncated variant is linked to the terminating (or
// non-terminating) variant it specializes, and those links are checkable.

namespace clausen {

enum class TheoremMode { Exact, Float };

struct TheoremInstance;

/// Named side condition; the label is what a rejection reports.
struct Condition {
    std::string label;
    std::function<bool(const TheoremInstance&)> holds;
};

struct TheoremEntry {
    std::string family;   // watson | saalschutz | whipple | dixon
    std::string variant;  // nt | term-* | trunc-*
    std::string tag;      // stable catalog tag, unique across entries
    TheoremMode mode = TheoremMode::Exact;
    bool rhs_is_zero = false;
    bool uses_m = false;
    bool uses_k = false;
    std::vector<std::string> rationals;  // required rational parameters, display order
    std::function<HypergeometricSpec(const TheoremInstance&)> lhs;
    std::function<Rational(const TheoremInstance&)> rhs_exact;
    std::function<RealHP(const TheoremInstance&)> rhs_float;
    std::vector<Condition> conditions;

    std::string id() const { return family + "." + variant; }
};

/// A theorem with all parameters bound.  Unused fields stay at their defaults
/// and are never read by the entry's closed forms.
struct TheoremInstance {
    const TheoremEntry* entry = nullptr;
    long long m = 0, k = 0;
    Rational alpha, beta, gamma, delta;
};

/// Parameter assignment as supplied by a caller; instantiate() checks it
/// against the entry's declared parameter list.
struct Binding {
    std::optional<long long> m, k;
    std::optional<Rational> alpha, beta, gamma, delta;
};

namespace detail {

/// (a)_n as an exact rational; a vanishing factor raises pole_in_closed_form.
inline Rational P(const Rational& a, long long n) {
    return pochhammer_exact(a, n).value_or_throw("closed form");
}

inline Rational pow2(long long e) { return Rational(Integer(1) << static_cast<unsigned>(e)); }

/// Exact quotient; a vanishing denominator is a pole of the closed form, not
/// an arithmetic fault.
inline Rational over(const Rational& num, const Rational& den) {
    if (den == 0) throw pole_in_closed_form("closed form has a vanishing denominator");
    return num / den;
}

inline HypergeometricSpec f32(Rational a1, Rational a2, Rational a3, Rational b1, Rational b2,
                              std::optional<long long> trunc = std::nullopt) {
    return {{std::move(a1), std::move(a2), std::move(a3)},
            {std::move(b1), std::move(b2)},
            Rational(1),
            trunc};
}

inline RealHP gamma_quotient(std::initializer_list<RealHP> num, std::initializer_list<RealHP> den) {
    RealHP v = 1.0L;
    for (RealHP x : num) v *= gamma_real(x);
    for (RealHP x : den) v /= gamma_real(x);
    return v;
}

using ParamFn = std::function<Rational(const TheoremInstance&)>;

inline Condition not_zneg(const std::string& expr, ParamFn v) {
    return {expr + " not a nonpositive integer",
            [v = std::move(v)](const TheoremInstance& i) { return !is_nonpositive_integer(v(i)); }};
}

inline Condition not_int(const std::string& expr, ParamFn v) {
    return {expr + " not an integer",
            [v = std::move(v)](const TheoremInstance& i) { return !is_integer(v(i)); }};
}

inline Condition positive(const std::string& expr, ParamFn v) {
    return {expr + " > 0", [v = std::move(v)](const TheoremInstance& i) { return v(i) > 0; }};
}

/// Gamma arguments {num, den} of the reflected Dixon closed form
///   cos(pi a/2) G(1-a) G(1+a-b) G(1+a-g) G(1+a/2-b-g)
///           / [ G(1-a/2) G(1+a/2-b) G(1+a/2-g) G(1+a-b-g) ].
/// Shared between the float evaluator and the derivation check for the
/// terminating gamma = -m specialization.
inline std::pair<std::vector<Rational>, std::vector<Rational>>
dixon_reflected_args(const Rational& a, const Rational& b, const Rational& g) {
    return {{1 - a, 1 + a - b, 1 + a - g, 1 + a / 2 - b - g},
            {1 - a / 2, 1 + a / 2 - b, 1 + a / 2 - g, 1 + a - b - g}};
}

/// Same quotient with gamma pinned at -m, every argument shifted into the
/// right half plane.
inline std::pair<std::vector<Rational>, std::vector<Rational>>
dixon_term_gamma_args(const Rational& a, const Rational& b, long long m) {
    return {{1 - a, 1 + a - b, 1 + a + m, 1 + a / 2 - b + m},
            {1 - a / 2, 1 + a / 2 - b, 1 + a / 2 + m, 1 + a - b + m}};
}

} // namespace detail

inline const std::vector<TheoremEntry>& theorem_catalog() {
    static const std::vector<TheoremEntry> cat = [] {
        using detail::f32;
        using detail::gamma_quotient;
        using detail::not_int;
        using detail::not_zneg;
        using detail::over;
        using detail::P;
        using detail::positive;
        using detail::pow2;
        using TI = TheoremInstance;
        std::vector<TheoremEntry> c;

        // ---- Watson family -------------------------------------------------

        // 3F2[a, b, g; (1+a+b)/2, 2g; 1] as a Gamma quotient.
        c.push_back({
            .family = "watson",
            .variant = "nt",
            .tag = "2.1",
            .mode = TheoremMode::Float,
            .rationals = {"alpha", "beta", "gamma"},
            .lhs = [](const TI& i) { return f32(i.alpha, i.beta, i.gamma, (1 + i.alpha + i.beta) / 2, 2 * i.gamma); },
            .rhs_float =
                [](const TI& i) {
                    const RealHP a = to_real(i.alpha), b = to_real(i.beta), g = to_real(i.gamma);
                    return gamma_quotient(
                        {0.5L, g + 0.5L, (1 + a + b) / 2, g + (1 - a - b) / 2},
                        {(1 + a) / 2, (1 + b) / 2, g + (1 - a) / 2, g + (1 - b) / 2});
                },
            .conditions =
                {positive("gamma + (1-alpha-beta)/2", [](const TI& i) { return i.gamma + (1 - i.alpha - i.beta) / 2; }),
                 not_zneg("(1+alpha+beta)/2", [](const TI& i) { return (1 + i.alpha + i.beta) / 2; }),
                 not_zneg("gamma", [](const TI& i) { return i.gamma; }),
                 not_zneg("2*gamma", [](const TI& i) { return 2 * i.gamma; })},
        });

        // 3F2[-2m, b, g; (1-2m+b)/2, 2g; 1]
        //   = (1/2)_m (g+(1-b)/2)_m / ((g+1/2)_m ((1-b)/2)_m)
        c.push_back({
            .family = "watson",
            .variant = "term-even",
            .tag = "2.2",
            .uses_m = true,
            .rationals = {"beta", "gamma"},
            .lhs = [](const TI& i) { return f32(Rational(-2 * i.m), i.beta, i.gamma, (1 - 2 * i.m + i.beta) / 2, 2 * i.gamma); },
            .rhs_exact =
                [](const TI& i) {
                    return over(P(Rational(1, 2), i.m) * P(i.gamma + (1 - i.beta) / 2, i.m),
                                P(i.gamma + Rational(1, 2), i.m) * P((1 - i.beta) / 2, i.m));
                },
            .conditions =
                {not_zneg("beta", [](const TI& i) { return i.beta; }),
                 not_zneg("gamma", [](const TI& i) { return i.gamma; }),
                 not_zneg("2*gamma", [](const TI& i) { return 2 * i.gamma; }),
                 not_zneg("(1+beta)/2 - m", [](const TI& i) { return (1 + i.beta) / 2 - i.m; })},
        });

        // 3F2[-2m-1, b, g; (b-2m)/2, 2g; 1] = 0
        c.push_back({
            .family = "watson",
            .variant = "term-odd",
            .tag = "2.3",
            .rhs_is_zero = true,
            .uses_m = true,
            .rationals = {"beta", "gamma"},
            .lhs = [](const TI& i) { return f32(Rational(-2 * i.m - 1), i.beta, i.gamma, (i.beta - 2 * i.m) / 2, 2 * i.gamma); },
            .rhs_exact = [](const TI&) { return Rational(0); },
            .conditions =
                {not_zneg("beta", [](const TI& i) { return i.beta; }),
                 not_zneg("gamma", [](const TI& i) { return i.gamma; }),
                 not_zneg("2*gamma", [](const TI& i) { return 2 * i.gamma; }),
                 not_zneg("(beta-2m)/2", [](const TI& i) { return (i.beta - 2 * i.m) / 2; })},
        });

        // 3F2[-m, a, b; -2m, (1+a+b)/2; 1]_m
        //   = ((1+a)/2)_m ((1+b)/2)_m / ((1/2)_m ((1+a+b)/2)_m)
        c.push_back({
            .family = "watson",
            .variant = "trunc-m",
            .tag = "2.4",
            .uses_m = true,
            .rationals = {"alpha", "beta"},
            .lhs = [](const TI& i) { return f32(Rational(-i.m), i.alpha, i.beta, Rational(-2 * i.m), (1 + i.alpha + i.beta) / 2, i.m); },
            .rhs_exact =
                [](const TI& i) {
                    return over(P((1 + i.alpha) / 2, i.m) * P((1 + i.beta) / 2, i.m),
                                P(Rational(1, 2), i.m) * P((1 + i.alpha + i.beta) / 2, i.m));
                },
            .conditions =
                {not_zneg("alpha", [](const TI& i) { return i.alpha; }),
                 not_zneg("beta", [](const TI& i) { return i.beta; }),
                 not_zneg("(1+alpha+beta)/2", [](const TI& i) { return (1 + i.alpha + i.beta) / 2; })},
        });

        // 3F2[-2m, b, -m-k-1/2; -2m-2k-1, (1+b)/2-m; 1]_{2m}
        //   = (1/2)_m ((2+b+2k)/2)_m / (((1-b)/2)_m (1+k)_m)
        c.push_back({
            .family = "watson",
            .variant = "trunc-2m",
            .tag = "2.5",
            .uses_m = true,
            .uses_k = true,
            .rationals = {"beta"},
            .lhs =
                [](const TI& i) {
                    return f32(Rational(-2 * i.m), i.beta, Rational(-2 * i.m - 2 * i.k - 1) / 2,
                               Rational(-2 * i.m - 2 * i.k - 1), (1 + i.beta) / 2 - i.m, 2 * i.m);
                },
            .rhs_exact =
                [](const TI& i) {
                    return over(P(Rational(1, 2), i.m) * P((2 + i.beta + 2 * i.k) / 2, i.m),
                                P((1 - i.beta) / 2, i.m) * P(Rational(1 + i.k), i.m));
                },
            .conditions =
                {not_zneg("beta", [](const TI& i) { return i.beta; }),
                 not_zneg("(1+beta)/2 - m", [](const TI& i) { return (1 + i.beta) / 2 - i.m; })},
        });

        // 3F2[-2m-1, b, -m-k-1/2; -2m-2k-1, b/2-m; 1]_{2m+1} = 0
        c.push_back({
            .family = "watson",
            .variant = "trunc-2m1",
            .tag = "2.6",
            .rhs_is_zero = true,
            .uses_m = true,
            .uses_k = true,
            .rationals = {"beta"},
            .lhs =
                [](const TI& i) {
                    return f32(Rational(-2 * i.m - 1), i.beta, Rational(-2 * i.m - 2 * i.k - 1) / 2,
                               Rational(-2 * i.m - 2 * i.k - 1), i.beta / 2 - i.m, 2 * i.m + 1);
                },
            .rhs_exact = [](const TI&) { return Rational(0); },
            .conditions =
                {not_zneg("beta", [](const TI& i) { return i.beta; }),
                 not_zneg("beta/2 - m", [](const TI& i) { return i.beta / 2 - i.m; })},
        });

        // ---- Saalschutz family ----------------------------------------------

        // 3F2[a, b, g+d-a-b-1; g, d; 1]: two-part Gamma form with an auxiliary
        // 3F2(1) that converges whenever d-a-b > 0.
        c.push_back({
            .family = "saalschutz",
            .variant = "nt",
            .tag = "2.7",
            .mode = TheoremMode::Float,
            .rationals = {"alpha", "beta", "gamma", "delta"},
            .lhs = [](const TI& i) { return f32(i.alpha, i.beta, i.gamma + i.delta - i.alpha - i.beta - 1, i.gamma, i.delta); },
            .rhs_float =
                [](const TI& i) {
                    const RealHP a = to_real(i.alpha), b = to_real(i.beta);
                    const RealHP g = to_real(i.gamma), d = to_real(i.delta);
                    const RealHP first = gamma_quotient({g, d, g - a - b, d - a - b},
                                                        {g - a, g - b, d - a, d - b});
                    const auto aux = eval_nonterminating_float(
                        f32(i.gamma - i.alpha, i.gamma - i.beta, Rational(1),
                            i.gamma - i.alpha - i.beta + 1, i.gamma + i.delta - i.alpha - i.beta));
                    const RealHP second =
                        gamma_quotient({g, d}, {a, b, g + d - a - b}) / (a + b - g);
                    return first + second * aux.value;
                },
            .conditions =
                {positive("gamma - alpha - beta", [](const TI& i) { return i.gamma - i.alpha - i.beta; }),
                 positive("delta - alpha - beta", [](const TI& i) { return i.delta - i.alpha - i.beta; })},
        });

        // 3F2[a, b, -m; g, 1+a+b-g-m; 1] = (g-a)_m (g-b)_m / ((g)_m (g-a-b)_m)
        c.push_back({
            .family = "saalschutz",
            .variant = "term",
            .tag = "2.8",
            .uses_m = true,
            .rationals = {"alpha", "beta", "gamma"},
            .lhs = [](const TI& i) { return f32(i.alpha, i.beta, Rational(-i.m), i.gamma, 1 + i.alpha + i.beta - i.gamma - i.m); },
            .rhs_exact =
                [](const TI& i) {
                    return over(P(i.gamma - i.alpha, i.m) * P(i.gamma - i.beta, i.m),
                                P(i.gamma, i.m) * P(i.gamma - i.alpha - i.beta, i.m));
                },
            .conditions =
                {not_zneg("alpha", [](const TI& i) { return i.alpha; }),
                 not_zneg("beta", [](const TI& i) { return i.beta; }),
                 not_zneg("gamma", [](const TI& i) { return i.gamma; }),
                 not_zneg("1+alpha+beta-gamma-m", [](const TI& i) { return 1 + i.alpha + i.beta - i.gamma - i.m; })},
        });

        // 3F2[-m, a, b; -m-k, 1+a+b+k; 1]_m
        //   = (1+a+k)_m (1+b+k)_m / ((1+k)_m (1+a+b+k)_m)
        c.push_back({
            .family = "saalschutz",
            .variant = "trunc",
            .tag = "2.8c",
            .uses_m = true,
            .uses_k = true,
            .rationals = {"alpha", "beta"},
            .lhs = [](const TI& i) { return f32(Rational(-i.m), i.alpha, i.beta, Rational(-i.m - i.k), 1 + i.alpha + i.beta + i.k, i.m); },
            .rhs_exact =
                [](const TI& i) {
                    return over(P(1 + i.alpha + i.k, i.m) * P(1 + i.beta + i.k, i.m),
                                P(Rational(1 + i.k), i.m) * P(1 + i.alpha + i.beta + i.k, i.m));
                },
            .conditions =
                {not_zneg("alpha", [](const TI& i) { return i.alpha; }),
                 not_zneg("beta", [](const TI& i) { return i.beta; }),
                 not_zneg("1+alpha+beta+k", [](const TI& i) { return 1 + i.alpha + i.beta + i.k; })},
        });

        // 3F2[-m, a+m, 1+a-b-g; 1+a-b, 1+a-g; 1]
        //   = (b)_m (g)_m / ((1+a-b)_m (1+a-g)_m)
        c.push_back({
            .family = "saalschutz",
            .variant = "term-b",
            .tag = "2.8a",
            .uses_m = true,
            .rationals = {"alpha", "beta", "gamma"},
            .lhs =
                [](const TI& i) {
                    return f32(Rational(-i.m), i.alpha + i.m, 1 + i.alpha - i.beta - i.gamma,
                               1 + i.alpha - i.beta, 1 + i.alpha - i.gamma);
                },
            .rhs_exact =
                [](const TI& i) {
                    return over(P(i.beta, i.m) * P(i.gamma, i.m),
                                P(1 + i.alpha - i.beta, i.m) * P(1 + i.alpha - i.gamma, i.m));
                },
            .conditions =
                {not_zneg("alpha + m", [](const TI& i) { return i.alpha + i.m; }),
                 not_zneg("1+alpha-beta-gamma", [](const TI& i) { return 1 + i.alpha - i.beta - i.gamma; }),
                 not_zneg("1+alpha-beta", [](const TI& i) { return 1 + i.alpha - i.beta; }),
                 not_zneg("1+alpha-gamma", [](const TI& i) { return 1 + i.alpha - i.gamma; })},
        });

        // 3F2[-m, b-k-1, -m-k-g; -m-k, b-g-m-k; 1]_m
        //   = (b)_m (g)_m / ((1+k)_m (1+k+g-b)_m)
        c.push_back({
            .family = "saalschutz",
            .variant = "trunc-b",
            .tag = "2.8b",
            .uses_m = true,
            .uses_k = true,
            .rationals = {"beta", "gamma"},
            .lhs =
                [](const TI& i) {
                    return f32(Rational(-i.m), i.beta - i.k - 1, Rational(-i.m - i.k) - i.gamma,
                               Rational(-i.m - i.k), i.beta - i.gamma - i.m - i.k, i.m);
                },
            .rhs_exact =
                [](const TI& i) {
                    return over(P(i.beta, i.m) * P(i.gamma, i.m),
                                P(Rational(1 + i.k), i.m) * P(1 + i.k + i.gamma - i.beta, i.m));
                },
            .conditions =
                {not_zneg("beta-k-1", [](const TI& i) { return i.beta - i.k - 1; }),
                 not_zneg("-m-k-gamma", [](const TI& i) { return Rational(-i.m - i.k) - i.gamma; }),
                 not_zneg("beta-gamma-m-k", [](const TI& i) { return i.beta - i.gamma - i.m - i.k; })},
        });

        // ---- Whipple family -------------------------------------------------

        // 3F2[a, 1-a, b; g, 2b-g+1; 1] as a Gamma quotient with a 2^(1-2b) scale.
        c.push_back({
            .family = "whipple",
            .variant = "nt",
            .tag = "2.9",
            .mode = TheoremMode::Float,
            .rationals = {"alpha", "beta", "gamma"},
            .lhs = [](const TI& i) { return f32(i.alpha, 1 - i.alpha, i.beta, i.gamma, 2 * i.beta - i.gamma + 1); },
            .rhs_float =
                [](const TI& i) {
                    const RealHP a = to_real(i.alpha), b = to_real(i.beta), g = to_real(i.gamma);
                    return detail::pi_hp * std::pow(2.0L, 1 - 2 * b) *
                           gamma_quotient({g, 2 * b - g + 1},
                                          {(a + 2 * b - g + 1) / 2, (a + g) / 2,
                                           (2 - a + 2 * b - g) / 2, (1 - a + g) / 2});
                },
            .conditions =
                {positive("beta", [](const TI& i) { return i.beta; }),
                 not_zneg("gamma", [](const TI& i) { return i.gamma; }),
                 not_zneg("2*beta-gamma+1", [](const TI& i) { return 2 * i.beta - i.gamma + 1; })},
        });

        // 3F2[-2m, 1+2m, b; g, 1+2b-g; 1]
        //   = ((2-g)/2)_m ((1-2b+g)/2)_m / (((1+g)/2)_m ((2+2b-g)/2)_m)
        c.push_back({
            .family = "whipple",
            .variant = "term-even",
            .tag = "2.10",
            .uses_m = true,
            .rationals = {"beta", "gamma"},
            .lhs = [](const TI& i) { return f32(Rational(-2 * i.m), Rational(1 + 2 * i.m), i.beta, i.gamma, 1 + 2 * i.beta - i.gamma); },
            .rhs_exact =
                [](const TI& i) {
                    return over(P((2 - i.gamma) / 2, i.m) * P((1 - 2 * i.beta + i.gamma) / 2, i.m),
                                P((1 + i.gamma) / 2, i.m) * P((2 + 2 * i.beta - i.gamma) / 2, i.m));
                },
            .conditions =
                {not_zneg("beta", [](const TI& i) { return i.beta; }),
                 not_zneg("gamma", [](const TI& i) { return i.gamma; }),
                 not_zneg("1+2*beta-gamma", [](const TI& i) { return 1 + 2 * i.beta - i.gamma; })},
        });

        // 3F2[-2m-1, 2+2m, b; g, 1+2b-g; 1]
        //   = (g-1)(2b-g) ((3-g)/2)_m ((2-2b+g)/2)_m
        //     / (g (1+2b-g) ((2+g)/2)_m ((3+2b-g)/2)_m)
        c.push_back({
            .family = "whipple",
            .variant = "term-odd",
            .tag = "2.11",
            .uses_m = true,
            .rationals = {"beta", "gamma"},
            .lhs = [](const TI& i) { return f32(Rational(-2 * i.m - 1), Rational(2 + 2 * i.m), i.beta, i.gamma, 1 + 2 * i.beta - i.gamma); },
            .rhs_exact =
                [](const TI& i) {
                    return over((i.gamma - 1) * (2 * i.beta - i.gamma) * P((3 - i.gamma) / 2, i.m) *
                                    P((2 - 2 * i.beta + i.gamma) / 2, i.m),
                                i.gamma * (1 + 2 * i.beta - i.gamma) * P((2 + i.gamma) / 2, i.m) *
                                    P((3 + 2 * i.beta - i.gamma) / 2, i.m));
                },
            .conditions =
                {not_zneg("beta", [](const TI& i) { return i.beta; }),
                 not_zneg("gamma", [](const TI& i) { return i.gamma; }),
                 not_zneg("1+2*beta-gamma", [](const TI& i) { return 1 + 2 * i.beta - i.gamma; })},
        });

        // 3F2[-m, a, 1-a; g, 1-g-2m; 1]
        //   = ((g+a)/2)_m ((g-a+1)/2)_m / ((g/2)_m ((g+1)/2)_m)
        c.push_back({
            .family = "whipple",
            .variant = "term-b",
            .tag = "2.13",
            .uses_m = true,
            .rationals = {"alpha", "gamma"},
            .lhs = [](const TI& i) { return f32(Rational(-i.m), i.alpha, 1 - i.alpha, i.gamma, 1 - i.gamma - 2 * i.m); },
            .rhs_exact =
                [](const TI& i) {
                    return over(P((i.gamma + i.alpha) / 2, i.m) * P((i.gamma - i.alpha + 1) / 2, i.m),
                                P(i.gamma / 2, i.m) * P((i.gamma + 1) / 2, i.m));
                },
            .conditions =
                {not_zneg("alpha", [](const TI& i) { return i.alpha; }),
                 not_zneg("1-alpha", [](const TI& i) { return 1 - i.alpha; }),
                 not_zneg("gamma", [](const TI& i) { return i.gamma; }),
                 not_zneg("1-gamma-2m", [](const TI& i) { return 1 - i.gamma - 2 * i.m; }),
                 not_zneg("(alpha+gamma+2m)/2", [](const TI& i) { return (i.alpha + i.gamma + 2 * i.m) / 2; }),
                 not_zneg("(1-alpha+gamma+2m)/2", [](const TI& i) { return (1 - i.alpha + i.gamma + 2 * i.m) / 2; })},
        });

        // 3F2[-m, a, 1-a; -2m-k, 1+k; 1]_m
        //   = ((2-a+k)/2)_m ((1+a+k)/2)_m / (((2+k)/2)_m ((1+k)/2)_m)
        c.push_back({
            .family = "whipple",
            .variant = "trunc-m",
            .tag = "2.14a",
            .uses_m = true,
            .uses_k = true,
            .rationals = {"alpha"},
            .lhs = [](const TI& i) { return f32(Rational(-i.m), i.alpha, 1 - i.alpha, Rational(-2 * i.m - i.k), Rational(1 + i.k), i.m); },
            .rhs_exact =
                [](const TI& i) {
                    return over(P((2 - i.alpha + i.k) / 2, i.m) * P((1 + i.alpha + i.k) / 2, i.m),
                                P(Rational(2 + i.k, 2), i.m) * P(Rational(1 + i.k, 2), i.m));
                },
            .conditions =
                {not_zneg("alpha", [](const TI& i) { return i.alpha; }),
                 not_zneg("1-alpha", [](const TI& i) { return 1 - i.alpha; })},
        });

        // 3F2[-2m, 1+2m, b; -2m-2k, 2b+2m+2k+1; 1]_{2m}
        //   = (1+2b+2k)_{2m} (1+k)_{2m} / ((1+2k)_{2m} (1+b+k)_{2m})
        c.push_back({
            .family = "whipple",
            .variant = "trunc-2m-a",
            .tag = "2.15",
            .uses_m = true,
            .uses_k = true,
            .rationals = {"beta"},
            .lhs =
                [](const TI& i) {
                    return f32(Rational(-2 * i.m), Rational(1 + 2 * i.m), i.beta,
                               Rational(-2 * i.m - 2 * i.k), 2 * i.beta + 2 * i.m + 2 * i.k + 1, 2 * i.m);
                },
            .rhs_exact =
                [](const TI& i) {
                    return over(P(1 + 2 * i.beta + 2 * i.k, 2 * i.m) * P(Rational(1 + i.k), 2 * i.m),
                                P(Rational(1 + 2 * i.k), 2 * i.m) * P(1 + i.beta + i.k, 2 * i.m));
                },
            .conditions =
                {not_zneg("beta", [](const TI& i) { return i.beta; }),
                 not_zneg("2*beta+2m+2k+1", [](const TI& i) { return 2 * i.beta + 2 * i.m + 2 * i.k + 1; })},
        });

        // 3F2[-2m, 1+2m, b; -2m-2k-1, 2b+2+2m+2k; 1]_{2m}
        //   = (2+2b+2k)_{2m} ((3+2k)/2)_{2m} / ((2+2k)_{2m} ((3+2b+2k)/2)_{2m})
        c.push_back({
            .family = "whipple",
            .variant = "trunc-2m-b",
            .tag = "2.15a",
            .uses_m = true,
            .uses_k = true,
            .rationals = {"beta"},
            .lhs =
                [](const TI& i) {
                    return f32(Rational(-2 * i.m), Rational(1 + 2 * i.m), i.beta,
                               Rational(-2 * i.m - 2 * i.k - 1), 2 * i.beta + 2 + 2 * i.m + 2 * i.k, 2 * i.m);
                },
            .rhs_exact =
                [](const TI& i) {
                    return over(P(2 + 2 * i.beta + 2 * i.k, 2 * i.m) * P(Rational(3 + 2 * i.k, 2), 2 * i.m),
                                P(Rational(2 + 2 * i.k), 2 * i.m) * P((3 + 2 * i.beta + 2 * i.k) / 2, 2 * i.m));
                },
            .conditions =
                {not_zneg("beta", [](const TI& i) { return i.beta; }),
                 not_zneg("2*beta+2m+2k+2", [](const TI& i) { return 2 * i.beta + 2 * i.m + 2 * i.k + 2; })},
        });

        // 3F2[-2m-1, 2+2m, b; -2m-2k-1, 2b+2m+2k+2; 1]_{2m+1}
        //   = (k+1)(2b+2m+2k+1) (2b+2k+1)_{2m} (2+k)_{2m}
        //     / ((2m+2k+1)(b+k+1) (2k+1)_{2m} (2+b+k)_{2m})
        c.push_back({
            .family = "whipple",
            .variant = "trunc-2m1-a",
            .tag = "2.16",
            .uses_m = true,
            .uses_k = true,
            .rationals = {"beta"},
            .lhs =
                [](const TI& i) {
                    return f32(Rational(-2 * i.m - 1), Rational(2 + 2 * i.m), i.beta,
                               Rational(-2 * i.m - 2 * i.k - 1), 2 * i.beta + 2 * i.m + 2 * i.k + 2,
                               2 * i.m + 1);
                },
            .rhs_exact =
                [](const TI& i) {
                    return over(Rational(i.k + 1) * (2 * i.beta + 2 * i.m + 2 * i.k + 1) *
                                    P(2 * i.beta + 2 * i.k + 1, 2 * i.m) * P(Rational(2 + i.k), 2 * i.m),
                                Rational(2 * i.m + 2 * i.k + 1) * (i.beta + i.k + 1) *
                                    P(Rational(2 * i.k + 1), 2 * i.m) * P(2 + i.beta + i.k, 2 * i.m));
                },
            .conditions =
                {not_zneg("beta", [](const TI& i) { return i.beta; }),
                 not_zneg("2*beta+2m+2k+2", [](const TI& i) { return 2 * i.beta + 2 * i.m + 2 * i.k + 2; })},
        });

        // 3F2[-2m-1, 2+2m, b; -2m-2k-2, 2b+2m+2k+3; 1]_{2m+1}
        //   = (2k+3)(b+m+k+1) (2b+2k+2)_{2m} ((5+2k)/2)_{2m}
        //     / ((m+k+1)(2b+2k+3) (2k+2)_{2m} ((5+2b+2k)/2)_{2m})
        c.push_back({
            .family = "whipple",
            .variant = "trunc-2m1-b",
            .tag = "2.16a",
            .uses_m = true,
            .uses_k = true,
            .rationals = {"beta"},
            .lhs =
                [](const TI& i) {
                    return f32(Rational(-2 * i.m - 1), Rational(2 + 2 * i.m), i.beta,
                               Rational(-2 * i.m - 2 * i.k - 2), 2 * i.beta + 2 * i.m + 2 * i.k + 3,
                               2 * i.m + 1);
                },
            .rhs_exact =
                [](const TI& i) {
                    return over(Rational(2 * i.k + 3) * (i.beta + i.m + i.k + 1) *
                                    P(2 * i.beta + 2 * i.k + 2, 2 * i.m) * P(Rational(5 + 2 * i.k, 2), 2 * i.m),
                                Rational(i.m + i.k + 1) * (2 * i.beta + 2 * i.k + 3) *
                                    P(Rational(2 * i.k + 2), 2 * i.m) * P((5 + 2 * i.beta + 2 * i.k) / 2, 2 * i.m));
                },
            .conditions =
                {not_zneg("beta", [](const TI& i) { return i.beta; }),
                 not_zneg("2*beta+2m+2k+3", [](const TI& i) { return 2 * i.beta + 2 * i.m + 2 * i.k + 3; })},
        });

        // ---- Dixon family ---------------------------------------------------

        // 3F2[a, b, g; 1+a-b, 1+a-g; 1] as a Gamma quotient.
        c.push_back({
            .family = "dixon",
            .variant = "nt",
            .tag = "2.18",
            .mode = TheoremMode::Float,
            .rationals = {"alpha", "beta", "gamma"},
            .lhs = [](const TI& i) { return f32(i.alpha, i.beta, i.gamma, 1 + i.alpha - i.beta, 1 + i.alpha - i.gamma); },
            .rhs_float =
                [](const TI& i) {
                    const RealHP a = to_real(i.alpha), b = to_real(i.beta), g = to_real(i.gamma);
                    return gamma_quotient(
                        {1 + a / 2, 1 + a - b, 1 + a - g, 1 + a / 2 - b - g},
                        {1 + a, 1 + a / 2 - b, 1 + a / 2 - g, 1 + a - b - g});
                },
            .conditions =
                {positive("2+alpha-2*beta-2*gamma", [](const TI& i) { return 2 + i.alpha - 2 * i.beta - 2 * i.gamma; }),
                 not_zneg("1+alpha-beta", [](const TI& i) { return 1 + i.alpha - i.beta; }),
                 not_zneg("1+alpha-gamma", [](const TI& i) { return 1 + i.alpha - i.gamma; }),
                 not_zneg("1+alpha/2", [](const TI& i) { return 1 + i.alpha / 2; }),
                 not_zneg("1+alpha/2-beta-gamma", [](const TI& i) { return 1 + i.alpha / 2 - i.beta - i.gamma; })},
        });

        // Same sum, written with the reflected quotient cos(pi a/2) G(1-a)/G(1-a/2)
        // in place of G(1+a/2)/G(1+a); the two agree wherever both make sense.
        c.push_back({
            .family = "dixon",
            .variant = "nt-reflect",
            .tag = "2.19",
            .mode = TheoremMode::Float,
            .rationals = {"alpha", "beta", "gamma"},
            .lhs = [](const TI& i) { return f32(i.alpha, i.beta, i.gamma, 1 + i.alpha - i.beta, 1 + i.alpha - i.gamma); },
            .rhs_float =
                [](const TI& i) {
                    const auto [num, den] = detail::dixon_reflected_args(i.alpha, i.beta, i.gamma);
                    RealHP v = cos_pi_rational(i.alpha / 2);
                    for (const auto& x : num) v *= gamma_real(to_real(x));
                    for (const auto& x : den) v /= gamma_real(to_real(x));
                    return v;
                },
            .conditions =
                {positive("2+alpha-2*beta-2*gamma", [](const TI& i) { return 2 + i.alpha - 2 * i.beta - 2 * i.gamma; }),
                 not_int("alpha", [](const TI& i) { return i.alpha; }),
                 not_zneg("1+alpha-beta", [](const TI& i) { return 1 + i.alpha - i.beta; }),
                 not_zneg("1+alpha-gamma", [](const TI& i) { return 1 + i.alpha - i.gamma; }),
                 not_zneg("1+alpha/2-beta-gamma", [](const TI& i) { return 1 + i.alpha / 2 - i.beta - i.gamma; })},
        });

        // 3F2[-2m, b, g; 1-2m-b, 1-2m-g; 1]
        //   = (b)_m (g)_m 2^{2m} (1/2)_m (b+g)_{2m} / ((b)_{2m} (g)_{2m} (b+g)_m)
        c.push_back({
            .family = "dixon",
            .variant = "term-even",
            .tag = "2.20",
            .uses_m = true,
            .rationals = {"beta", "gamma"},
            .lhs = [](const TI& i) { return f32(Rational(-2 * i.m), i.beta, i.gamma, 1 - 2 * i.m - i.beta, 1 - 2 * i.m - i.gamma); },
            .rhs_exact =
                [](const TI& i) {
                    return over(P(i.beta, i.m) * P(i.gamma, i.m) * pow2(2 * i.m) * P(Rational(1, 2), i.m) *
                                    P(i.beta + i.gamma, 2 * i.m),
                                P(i.beta, 2 * i.m) * P(i.gamma, 2 * i.m) * P(i.beta + i.gamma, i.m));
                },
            .conditions =
                {not_int("beta", [](const TI& i) { return i.beta; }),
                 not_int("gamma", [](const TI& i) { return i.gamma; })},
        });

        // 3F2[-2m-1, b, g; -2m-b, -2m-g; 1] = 0
        c.push_back({
            .family = "dixon",
            .variant = "term-odd",
            .tag = "2.21",
            .rhs_is_zero = true,
            .uses_m = true,
            .rationals = {"beta", "gamma"},
            .lhs = [](const TI& i) { return f32(Rational(-2 * i.m - 1), i.beta, i.gamma, Rational(-2 * i.m) - i.beta, Rational(-2 * i.m) - i.gamma); },
            .rhs_exact = [](const TI&) { return Rational(0); },
            .conditions =
                {not_int("beta", [](const TI& i) { return i.beta; }),
                 not_int("gamma", [](const TI& i) { return i.gamma; })},
        });

        // 3F2[-2m, 1+k, g; -2m-k, 1-2m-g; 1]_{2m}
        //   = (1+k)_m (g)_m 2^{2m} (1/2)_m (1+k+g)_{2m} / ((1+k)_{2m} (g)_{2m} (1+k+g)_m)
        c.push_back({
            .family = "dixon",
            .variant = "trunc-a",
            .tag = "2.22",
            .uses_m = true,
            .uses_k = true,
            .rationals = {"gamma"},
            .lhs =
                [](const TI& i) {
                    return f32(Rational(-2 * i.m), Rational(1 + i.k), i.gamma, Rational(-2 * i.m - i.k),
                               1 - 2 * i.m - i.gamma, 2 * i.m);
                },
            .rhs_exact =
                [](const TI& i) {
                    return over(P(Rational(1 + i.k), i.m) * P(i.gamma, i.m) * pow2(2 * i.m) *
                                    P(Rational(1, 2), i.m) * P(1 + i.k + i.gamma, 2 * i.m),
                                P(Rational(1 + i.k), 2 * i.m) * P(i.gamma, 2 * i.m) * P(1 + i.k + i.gamma, i.m));
                },
            .conditions =
                {not_zneg("gamma", [](const TI& i) { return i.gamma; }),
                 not_zneg("1-2m-gamma", [](const TI& i) { return 1 - 2 * i.m - i.gamma; })},
        });

        // 3F2[-2m, 1+k, 1+k; -2m-k, -2m-k; 1]_{2m}
        //   = (1+k)_m^2 2^{2m} (1/2)_m (2+2k)_{2m} / ((1+k)_{2m}^2 (2+2k)_m)
        c.push_back({
            .family = "dixon",
            .variant = "trunc-b",
            .tag = "2.23",
            .uses_m = true,
            .uses_k = true,
            .lhs =
                [](const TI& i) {
                    return f32(Rational(-2 * i.m), Rational(1 + i.k), Rational(1 + i.k),
                               Rational(-2 * i.m - i.k), Rational(-2 * i.m - i.k), 2 * i.m);
                },
            .rhs_exact =
                [](const TI& i) {
                    const Rational km = P(Rational(1 + i.k), i.m), k2m = P(Rational(1 + i.k), 2 * i.m);
                    return over(km * km * pow2(2 * i.m) * P(Rational(1, 2), i.m) *
                                    P(Rational(2 + 2 * i.k), 2 * i.m),
                                k2m * k2m * P(Rational(2 + 2 * i.k), i.m));
                },
        });

        // 3F2[-2m-1, 1+k, g; -2m-1-k, -2m-g; 1]_{2m+1} = 0
        c.push_back({
            .family = "dixon",
            .variant = "trunc-c",
            .tag = "2.24",
            .rhs_is_zero = true,
            .uses_m = true,
            .uses_k = true,
            .rationals = {"gamma"},
            .lhs =
                [](const TI& i) {
                    return f32(Rational(-2 * i.m - 1), Rational(1 + i.k), i.gamma,
                               Rational(-2 * i.m - 1 - i.k), Rational(-2 * i.m) - i.gamma, 2 * i.m + 1);
                },
            .rhs_exact = [](const TI&) { return Rational(0); },
            .conditions =
                {not_zneg("gamma", [](const TI& i) { return i.gamma; }),
                 not_zneg("-2m-gamma", [](const TI& i) { return Rational(-2 * i.m) - i.gamma; })},
        });

        // 3F2[-2m-1, 1+k, 1+k; -2m-1-k, -2m-1-k; 1]_{2m+1} = 0
        c.push_back({
            .family = "dixon",
            .variant = "trunc-d",
            .tag = "2.25",
            .rhs_is_zero = true,
            .uses_m = true,
            .uses_k = true,
            .lhs =
                [](const TI& i) {
                    return f32(Rational(-2 * i.m - 1), Rational(1 + i.k), Rational(1 + i.k),
                               Rational(-2 * i.m - 1 - i.k), Rational(-2 * i.m - 1 - i.k), 2 * i.m + 1);
                },
            .rhs_exact = [](const TI&) { return Rational(0); },
        });

        // 3F2[-2m, a, g; 1+a+2m, 1+a-g; 1]
        //   = (1+a)_{2m} (1+a/2-g)_{2m} / ((1+a/2)_{2m} (1+a-g)_{2m})
        c.push_back({
            .family = "dixon",
            .variant = "term-alpha-even",
            .tag = "2.20a",
            .uses_m = true,
            .rationals = {"alpha", "gamma"},
            .lhs = [](const TI& i) { return f32(Rational(-2 * i.m), i.alpha, i.gamma, 1 + i.alpha + 2 * i.m, 1 + i.alpha - i.gamma); },
            .rhs_exact =
                [](const TI& i) {
                    return over(P(1 + i.alpha, 2 * i.m) * P(1 + i.alpha / 2 - i.gamma, 2 * i.m),
                                P(1 + i.alpha / 2, 2 * i.m) * P(1 + i.alpha - i.gamma, 2 * i.m));
                },
            .conditions =
                {not_int("alpha", [](const TI& i) { return i.alpha; }),
                 not_int("gamma", [](const TI& i) { return i.gamma; })},
        });

        // 3F2[-2m-1, a, g; 2+a+2m, 1+a-g; 1]
        //   = (1+a)(2+a-2g) (2+a)_{2m} (2+a/2-g)_{2m}
        //     / ((2+a)(1+a-g) (2+a/2)_{2m} (2+a-g)_{2m})
        c.push_back({
            .family = "dixon",
            .variant = "term-alpha-odd",
            .tag = "2.20b",
            .uses_m = true,
            .rationals = {"alpha", "gamma"},
            .lhs = [](const TI& i) { return f32(Rational(-2 * i.m - 1), i.alpha, i.gamma, 2 + i.alpha + 2 * i.m, 1 + i.alpha - i.gamma); },
            .rhs_exact =
                [](const TI& i) {
                    return over((1 + i.alpha) * (2 + i.alpha - 2 * i.gamma) * P(2 + i.alpha, 2 * i.m) *
                                    P(2 + i.alpha / 2 - i.gamma, 2 * i.m),
                                (2 + i.alpha) * (1 + i.alpha - i.gamma) * P(2 + i.alpha / 2, 2 * i.m) *
                                    P(2 + i.alpha - i.gamma, 2 * i.m));
                },
            .conditions =
                {not_int("alpha", [](const TI& i) { return i.alpha; }),
                 not_int("gamma", [](const TI& i) { return i.gamma; })},
        });

        // 3F2[-2m, a, 1+a+2m+k; -2m-k, 1+a+2m; 1]_{2m}
        //   = (1+a)_{2m} (1+a/2+k)_{2m} / ((1+a/2)_{2m} (1+k)_{2m})
        c.push_back({
            .family = "dixon",
            .variant = "trunc-e",
            .tag = "2.20c",
            .uses_m = true,
            .uses_k = true,
            .rationals = {"alpha"},
            .lhs =
                [](const TI& i) {
                    return f32(Rational(-2 * i.m), i.alpha, 1 + i.alpha + 2 * i.m + i.k,
                               Rational(-2 * i.m - i.k), 1 + i.alpha + 2 * i.m, 2 * i.m);
                },
            .rhs_exact =
                [](const TI& i) {
                    return over(P(1 + i.alpha, 2 * i.m) * P(1 + i.alpha / 2 + i.k, 2 * i.m),
                                P(1 + i.alpha / 2, 2 * i.m) * P(Rational(1 + i.k), 2 * i.m));
                },
            .conditions =
                {not_zneg("alpha", [](const TI& i) { return i.alpha; }),
                 not_zneg("1+alpha+2m+k", [](const TI& i) { return 1 + i.alpha + 2 * i.m + i.k; }),
                 not_zneg("1+alpha+2m", [](const TI& i) { return 1 + i.alpha + 2 * i.m; })},
        });

        // 3F2[-2m-1, a, 2+a+2m+k; -2m-k-1, 2+a+2m; 1]_{2m+1}
        //   = (1+a)(2+2k+a+4m) (2+a)_{2m} (1+a/2+k)_{2m}
        //     / ((2+a)(1+2m+k) (2+a/2)_{2m} (1+k)_{2m})
        c.push_back({
            .family = "dixon",
            .variant = "trunc-f",
            .tag = "2.20d",
            .uses_m = true,
            .uses_k = true,
            .rationals = {"alpha"},
            .lhs =
                [](const TI& i) {
                    return f32(Rational(-2 * i.m - 1), i.alpha, 2 + i.alpha + 2 * i.m + i.k,
                               Rational(-2 * i.m - i.k - 1), 2 + i.alpha + 2 * i.m, 2 * i.m + 1);
                },
            .rhs_exact =
                [](const TI& i) {
                    return over((1 + i.alpha) * (2 + 2 * i.k + i.alpha + 4 * i.m) * P(2 + i.alpha, 2 * i.m) *
                                    P(1 + i.alpha / 2 + i.k, 2 * i.m),
                                (2 + i.alpha) * Rational(1 + 2 * i.m + i.k) * P(2 + i.alpha / 2, 2 * i.m) *
                                    P(Rational(1 + i.k), 2 * i.m));
                },
            .conditions =
                {not_zneg("alpha", [](const TI& i) { return i.alpha; }),
                 not_zneg("2+alpha+2m+k", [](const TI& i) { return 2 + i.alpha + 2 * i.m + i.k; }),
                 not_zneg("2+alpha+2m", [](const TI& i) { return 2 + i.alpha + 2 * i.m; })},
        });

        // 3F2[a, b, -m; 1+a-b, 1+a+m; 1]: reflected Dixon quotient pinned at the
        // integer shift m.  Terminating on the left, transcendental on the right.
        c.push_back({
            .family = "dixon",
            .variant = "term-gamma",
            .tag = "2.26",
            .mode = TheoremMode::Float,
            .uses_m = true,
            .rationals = {"alpha", "beta"},
            .lhs = [](const TI& i) { return f32(i.alpha, i.beta, Rational(-i.m), 1 + i.alpha - i.beta, Rational(1 + i.m) + i.alpha); },
            .rhs_float =
                [](const TI& i) {
                    const auto [num, den] = detail::dixon_term_gamma_args(i.alpha, i.beta, i.m);
                    RealHP v = cos_pi_rational(i.alpha / 2);
                    for (const auto& x : num) v *= gamma_real(to_real(x));
                    for (const auto& x : den) v /= gamma_real(to_real(x));
                    return v;
                },
            .conditions =
                {not_int("alpha", [](const TI& i) { return i.alpha; }),
                 not_zneg("beta", [](const TI& i) { return i.beta; }),
                 not_zneg("1+alpha-beta", [](const TI& i) { return 1 + i.alpha - i.beta; }),
                 not_zneg("1+alpha+m", [](const TI& i) { return Rational(1 + i.m) + i.alpha; })},
        });

        // 3F2[-m, a, g; 1+a+m, 1+a-g; 1]
        //   = (1+a)_m (1+a/2-g)_m / ((1+a/2)_m (1+a-g)_m)
        c.push_back({
            .family = "dixon",
            .variant = "term-m",
            .tag = "2.27",
            .uses_m = true,
            .rationals = {"alpha", "gamma"},
            .lhs = [](const TI& i) { return f32(Rational(-i.m), i.alpha, i.gamma, Rational(1 + i.m) + i.alpha, 1 + i.alpha - i.gamma); },
            .rhs_exact =
                [](const TI& i) {
                    return over(P(1 + i.alpha, i.m) * P(1 + i.alpha / 2 - i.gamma, i.m),
                                P(1 + i.alpha / 2, i.m) * P(1 + i.alpha - i.gamma, i.m));
                },
            .conditions =
                {not_zneg("alpha", [](const TI& i) { return i.alpha; }),
                 not_zneg("gamma", [](const TI& i) { return i.gamma; }),
                 not_zneg("1+alpha+m", [](const TI& i) { return Rational(1 + i.m) + i.alpha; }),
                 not_zneg("1+alpha-gamma", [](const TI& i) { return 1 + i.alpha - i.gamma; })},
        });

        return c;
    }();
    return cat;
}

inline const TheoremEntry& find_theorem(const std::string& id) {
    for (const auto& e : theorem_catalog())
        if (e.id() == id) return e;
    throw invalid_instance("unknown theorem id '" + id + "'");
}

namespace detail {

inline void require_param(bool present, bool wanted, const std::string& name, const std::string& id) {
    if (wanted && !present) throw invalid_instance(id + ": missing parameter " + name);
    if (!wanted && present) throw invalid_instance(id + ": unknown parameter " + name);
}

} // namespace detail

/// Bind parameters to a catalog entry, checking the parameter list, the m/k
/// ranges, every named side condition, and that no denominator Pochhammer
/// vanishes inside the summation range.  permissive additionally admits
/// m = 0 / k = 0 (degenerate but well defined instances).
inline TheoremInstance instantiate(const std::string& id, const Binding& b, bool permissive = false) {
    const TheoremEntry& e = find_theorem(id);

    detail::require_param(b.m.has_value(), e.uses_m, "m", id);
    detail::require_param(b.k.has_value(), e.uses_k, "k", id);
    const auto wants = [&e](const char* n) {
        return std::find(e.rationals.begin(), e.rationals.end(), n) != e.rationals.end();
    };
    detail::require_param(b.alpha.has_value(), wants("alpha"), "alpha", id);
    detail::require_param(b.beta.has_value(), wants("beta"), "beta", id);
    detail::require_param(b.gamma.has_value(), wants("gamma"), "gamma", id);
    detail::require_param(b.delta.has_value(), wants("delta"), "delta", id);

    const long long lo = permissive ? 0 : 1;
    if (e.uses_m && *b.m < lo)
        throw invalid_instance(id + ": m must be >= " + std::to_string(lo));
    if (e.uses_k && *b.k < lo)
        throw invalid_instance(id + ": k must be >= " + std::to_string(lo));

    TheoremInstance inst;
    inst.entry = &e;
    inst.m = b.m.value_or(0);
    inst.k = b.k.value_or(0);
    inst.alpha = b.alpha.value_or(Rational(0));
    inst.beta = b.beta.value_or(Rational(0));
    inst.gamma = b.gamma.value_or(Rational(0));
    inst.delta = b.delta.value_or(Rational(0));

    for (const auto& cond : e.conditions)
        if (!cond.holds(inst)) throw side_condition_violated(id + ": requires " + cond.label);

    // A denominator parameter -l contributes a zero factor from term l+1 on;
    // it is admissible only when the sum stops at or before that term.  A
    // non-terminating entry can never carry one.
    const HypergeometricSpec spec = e.lhs(inst);
    std::optional<long long> last;
    if (spec.truncation)
        last = *spec.truncation;
    else if (detail::has_terminating_numerator(spec))
        last = detail::termination_index(spec);
    for (const auto& d : spec.den)
        if (is_nonpositive_integer(d) && (!last || -d < *last))
            throw side_condition_violated(id + ": denominator parameter " + d.str() +
                                          " has a Pochhammer zero inside the summation range");

    return inst;
}

struct VerificationReport {
    std::string id;
    std::string tag;
    TheoremMode mode = TheoremMode::Exact;
    std::string verdict;  // equal | mismatch | inapplicable
    std::optional<Rational> lhs_exact, rhs_exact;
    RealHP lhs_float = 0.0L, rhs_float = 0.0L;
    RealHP abs_error = 0.0L, rel_error = 0.0L, tolerance = 0.0L;
    long long terms = 0;
    std::string diagnostic;
};

/// Evaluate both sides of a bound theorem.  Exact entries must agree as
/// identical rationals; float entries within float_tol relative error.
/// Evaluation errors (poles, divergence) produce verdict "inapplicable".
inline VerificationReport verify(const TheoremInstance& inst, RealHP float_tol = 1e-10L) {
    const TheoremEntry& e = *inst.entry;
    VerificationReport rep;
    rep.id = e.id();
    rep.tag = e.tag;
    rep.mode = e.mode;
    try {
        const HypergeometricSpec spec = e.lhs(inst);
        if (e.mode == TheoremMode::Exact) {
            const Rational lhs = spec.truncation ? eval_truncated(spec) : eval_terminating(spec);
            const Rational rhs = e.rhs_exact(inst);
            rep.lhs_exact = lhs;
            rep.rhs_exact = rhs;
            rep.lhs_float = to_real(lhs);
            rep.rhs_float = to_real(rhs);
            rep.abs_error = std::abs(to_real(lhs - rhs));
            rep.terms = 1 + (spec.truncation ? *spec.truncation : detail::termination_index(spec));
            rep.verdict = (lhs == rhs) ? "equal" : "mismatch";
        } else {
            const FloatEval lhs = eval_nonterminating_float(spec);
            const RealHP rhs = e.rhs_float(inst);
            rep.lhs_float = lhs.value;
            rep.rhs_float = rhs;
            rep.terms = lhs.terms;
            rep.tolerance = float_tol;
            rep.abs_error = std::abs(lhs.value - rhs);
            const RealHP scale = std::max(std::abs(lhs.value), std::abs(rhs));
            rep.rel_error = scale > 0.0L ? rep.abs_error / scale : rep.abs_error;
            rep.verdict = (rep.rel_error <= float_tol) ? "equal" : "mismatch";
        }
    } catch (const evaluation_error& err) {
        rep.verdict = "inapplicable";
        rep.diagnostic = err.what();
    }
    return rep;
}

struct TheoremRow {
    std::string id, tag, mode, params, rhs;
};

inline std::vector<TheoremRow> list_theorems() {
    std::vector<TheoremRow> rows;
    for (const auto& e : theorem_catalog()) {
        TheoremRow r;
        r.id = e.id();
        r.tag = e.tag;
        r.mode = e.mode == TheoremMode::Exact ? "exact" : "float";
        std::ostringstream ps;
        bool first = true;
        if (e.uses_m) { ps << "m"; first = false; }
        if (e.uses_k) { ps << (first ? "" : ", ") << "k"; first = false; }
        for (const auto& n : e.rationals) { ps << (first ? "" : ", ") << n; first = false; }
        r.params = ps.str();
        r.rhs = e.rhs_is_zero ? "zero" : (e.mode == TheoremMode::Exact ? "rational" : "gamma");
        rows.push_back(std::move(r));
    }
    return rows;
}

// ---- Derivation edges -----------------------------------------------------

/// Parameters a derivation check draws; edges read the fields they declare.
struct EdgeBinding {
    long long m = 1, k = 1;
    Rational alpha, beta, gamma;
};

/// One documented specialization: substituting into the parent theorem
/// reproduces the child, both the series and its closed form.
struct DerivationEdge {
    std::string child, parent;
    std::string substitution;
    bool uses_k = false;
    std::vector<std::string> rationals;  // free parameters a check draws
    std::function<bool(const EdgeBinding&)> holds;
};

namespace detail {

inline TheoremInstance raw_instance(const std::string& id) {
    TheoremInstance i;
    i.entry = &find_theorem(id);
    return i;
}

/// Same series on both sides: parameter multisets, argument, and number of
/// summed terms must all agree.
inline bool lhs_matches(const TheoremInstance& parent, const TheoremInstance& child) {
    HypergeometricSpec p = parent.entry->lhs(parent), c = child.entry->lhs(child);
    const auto terms = [](const HypergeometricSpec& s) {
        return s.truncation ? *s.truncation : termination_index(s);
    };
    std::sort(p.num.begin(), p.num.end());
    std::sort(c.num.begin(), c.num.end());
    std::sort(p.den.begin(), p.den.end());
    std::sort(c.den.begin(), c.den.end());
    return p.num == c.num && p.den == c.den && p.z == c.z && terms(p) == terms(c);
}

inline bool rhs_matches(const TheoremInstance& parent, const TheoremInstance& child) {
    return parent.entry->rhs_exact(parent) == child.entry->rhs_exact(child);
}

/// The Dixon Gamma quotient with first-order perturbations: alpha = a + aeps*e,
/// beta = b + beps*e, gamma fixed, for the exact e -> 0 limit machinery.
inline GammaRatio dixon_rhs_ratio(const Rational& a, const Rational& aeps, const Rational& b,
                                  const Rational& beps, const Rational& g) {
    GammaRatio r;
    r.times(1 + a / 2, aeps / 2)
        .times(1 + a - b, aeps - beps)
        .times(1 + a - g, aeps)
        .times(1 + a / 2 - b - g, aeps / 2 - beps);
    r.over(1 + a, aeps)
        .over(1 + a / 2 - b, aeps / 2 - beps)
        .over(1 + a / 2 - g, aeps / 2)
        .over(1 + a - b - g, aeps - beps);
    return r;
}

/// Edges witness a specialization only for generic parameters.  On integer
/// strata a Pochhammer factor can vanish on one side while the other side's
/// factoring reorganizes around the zero, and in the perturbed-quotient limits
/// extra Gamma poles appear whose perturbation coefficients differ; either way
/// the raw formulas stop agreeing even though the specialized identity, read
/// as a limit, survives.
inline void require_generic(bool ok, const char* stratum) {
    if (!ok) throw side_condition_violated(std::string("generic parameters (") + stratum + ")");
}

inline void require_noninteger(const char* name, const Rational& value) {
    require_generic(!is_integer(value), (std::string(name) + " not an integer").c_str());
}

/// Child whose closed form should be the e -> 0 limit of the Dixon quotient
/// under the given perturbed substitution.
inline bool dixon_limit_edge(const EdgeBinding& eb, const std::string& child_id,
                             const Rational& a, const Rational& aeps, const Rational& b,
                             const Rational& beps, const Rational& g,
                             const std::function<void(TheoremInstance&)>& bind_child) {
    TheoremInstance parent = raw_instance("dixon.nt");
    parent.alpha = a;
    parent.beta = b;
    parent.gamma = g;
    TheoremInstance child = raw_instance(child_id);
    child.m = eb.m;
    bind_child(child);
    const auto lim = gamma_ratio_limit(dixon_rhs_ratio(a, aeps, b, beps, g));
    return lhs_matches(parent, child) && !lim.pole && lim.value == child.entry->rhs_exact(child);
}

} // namespace detail

inline const std::vector<DerivationEdge>& derivation_edges() {
    static const std::vector<DerivationEdge> edges = [] {
        using detail::lhs_matches;
        using detail::raw_instance;
        using detail::rhs_matches;
        std::vector<DerivationEdge> es;

        es.push_back({"watson.trunc-2m", "watson.term-even", "gamma = -m-k-1/2", true, {"beta"},
                      [](const EdgeBinding& eb) {
                          detail::require_noninteger("beta", eb.beta);
                          TheoremInstance p = raw_instance("watson.term-even");
                          p.m = eb.m, p.beta = eb.beta, p.gamma = Rational(-2 * eb.m - 2 * eb.k - 1) / 2;
                          TheoremInstance ch = raw_instance("watson.trunc-2m");
                          ch.m = eb.m, ch.k = eb.k, ch.beta = eb.beta;
                          return lhs_matches(p, ch) && rhs_matches(p, ch);
                      }});

        es.push_back({"watson.trunc-2m1", "watson.term-odd", "gamma = -m-k-1/2", true, {"beta"},
                      [](const EdgeBinding& eb) {
                          detail::require_noninteger("beta", eb.beta);
                          TheoremInstance p = raw_instance("watson.term-odd");
                          p.m = eb.m, p.beta = eb.beta, p.gamma = Rational(-2 * eb.m - 2 * eb.k - 1) / 2;
                          TheoremInstance ch = raw_instance("watson.trunc-2m1");
                          ch.m = eb.m, ch.k = eb.k, ch.beta = eb.beta;
                          return lhs_matches(p, ch) && rhs_matches(p, ch);
                      }});

        es.push_back({"saalschutz.trunc", "saalschutz.term", "gamma = -m-k", true, {"alpha", "beta"},
                      [](const EdgeBinding& eb) {
                          detail::require_noninteger("alpha", eb.alpha);
                          detail::require_noninteger("beta", eb.beta);
                          TheoremInstance p = raw_instance("saalschutz.term");
                          p.m = eb.m, p.alpha = eb.alpha, p.beta = eb.beta, p.gamma = Rational(-eb.m - eb.k);
                          TheoremInstance ch = raw_instance("saalschutz.trunc");
                          ch.m = eb.m, ch.k = eb.k, ch.alpha = eb.alpha, ch.beta = eb.beta;
                          return lhs_matches(p, ch) && rhs_matches(p, ch);
                      }});

        es.push_back({"saalschutz.trunc-b", "saalschutz.term-b", "alpha = beta-m-k-1", true, {"beta", "gamma"},
                      [](const EdgeBinding& eb) {
                          detail::require_noninteger("beta", eb.beta);
                          detail::require_noninteger("gamma", eb.gamma);
                          TheoremInstance p = raw_instance("saalschutz.term-b");
                          p.m = eb.m, p.alpha = eb.beta - eb.m - eb.k - 1, p.beta = eb.beta, p.gamma = eb.gamma;
                          TheoremInstance ch = raw_instance("saalschutz.trunc-b");
                          ch.m = eb.m, ch.k = eb.k, ch.beta = eb.beta, ch.gamma = eb.gamma;
                          return lhs_matches(p, ch) && rhs_matches(p, ch);
                      }});

        es.push_back({"whipple.trunc-2m-a", "whipple.term-even", "gamma = -2m-2k", true, {"beta"},
                      [](const EdgeBinding& eb) {
                          detail::require_noninteger("beta", eb.beta);
                          TheoremInstance p = raw_instance("whipple.term-even");
                          p.m = eb.m, p.beta = eb.beta, p.gamma = Rational(-2 * eb.m - 2 * eb.k);
                          TheoremInstance ch = raw_instance("whipple.trunc-2m-a");
                          ch.m = eb.m, ch.k = eb.k, ch.beta = eb.beta;
                          return lhs_matches(p, ch) && rhs_matches(p, ch);
                      }});

        es.push_back({"whipple.trunc-2m-b", "whipple.term-even", "gamma = -2m-2k-1", true, {"beta"},
                      [](const EdgeBinding& eb) {
                          detail::require_noninteger("beta", eb.beta);
                          TheoremInstance p = raw_instance("whipple.term-even");
                          p.m = eb.m, p.beta = eb.beta, p.gamma = Rational(-2 * eb.m - 2 * eb.k - 1);
                          TheoremInstance ch = raw_instance("whipple.trunc-2m-b");
                          ch.m = eb.m, ch.k = eb.k, ch.beta = eb.beta;
                          return lhs_matches(p, ch) && rhs_matches(p, ch);
                      }});

        es.push_back({"whipple.trunc-2m1-a", "whipple.term-odd", "gamma = -2m-2k-1", true, {"beta"},
                      [](const EdgeBinding& eb) {
                          detail::require_noninteger("beta", eb.beta);
                          TheoremInstance p = raw_instance("whipple.term-odd");
                          p.m = eb.m, p.beta = eb.beta, p.gamma = Rational(-2 * eb.m - 2 * eb.k - 1);
                          TheoremInstance ch = raw_instance("whipple.trunc-2m1-a");
                          ch.m = eb.m, ch.k = eb.k, ch.beta = eb.beta;
                          return lhs_matches(p, ch) && rhs_matches(p, ch);
                      }});

        es.push_back({"whipple.trunc-2m1-b", "whipple.term-odd", "gamma = -2m-2k-2", true, {"beta"},
                      [](const EdgeBinding& eb) {
                          detail::require_noninteger("beta", eb.beta);
                          TheoremInstance p = raw_instance("whipple.term-odd");
                          p.m = eb.m, p.beta = eb.beta, p.gamma = Rational(-2 * eb.m - 2 * eb.k - 2);
                          TheoremInstance ch = raw_instance("whipple.trunc-2m1-b");
                          ch.m = eb.m, ch.k = eb.k, ch.beta = eb.beta;
                          return lhs_matches(p, ch) && rhs_matches(p, ch);
                      }});

        es.push_back({"whipple.trunc-m", "whipple.term-b", "gamma = -2m-k", true, {"alpha"},
                      [](const EdgeBinding& eb) {
                          detail::require_noninteger("alpha", eb.alpha);
                          TheoremInstance p = raw_instance("whipple.term-b");
                          p.m = eb.m, p.alpha = eb.alpha, p.gamma = Rational(-2 * eb.m - eb.k);
                          TheoremInstance ch = raw_instance("whipple.trunc-m");
                          ch.m = eb.m, ch.k = eb.k, ch.alpha = eb.alpha;
                          return lhs_matches(p, ch) && rhs_matches(p, ch);
                      }});

        es.push_back({"dixon.trunc-a", "dixon.term-even", "beta = 1+k", true, {"gamma"},
                      [](const EdgeBinding& eb) {
                          detail::require_noninteger("gamma", eb.gamma);
                          TheoremInstance p = raw_instance("dixon.term-even");
                          p.m = eb.m, p.beta = Rational(1 + eb.k), p.gamma = eb.gamma;
                          TheoremInstance ch = raw_instance("dixon.trunc-a");
                          ch.m = eb.m, ch.k = eb.k, ch.gamma = eb.gamma;
                          return lhs_matches(p, ch) && rhs_matches(p, ch);
                      }});

        es.push_back({"dixon.trunc-b", "dixon.trunc-a", "gamma = 1+k", true, {},
                      [](const EdgeBinding& eb) {
                          TheoremInstance p = raw_instance("dixon.trunc-a");
                          p.m = eb.m, p.k = eb.k, p.gamma = Rational(1 + eb.k);
                          TheoremInstance ch = raw_instance("dixon.trunc-b");
                          ch.m = eb.m, ch.k = eb.k;
                          return lhs_matches(p, ch) && rhs_matches(p, ch);
                      }});

        es.push_back({"dixon.trunc-c", "dixon.term-odd", "beta = 1+k", true, {"gamma"},
                      [](const EdgeBinding& eb) {
                          detail::require_noninteger("gamma", eb.gamma);
                          TheoremInstance p = raw_instance("dixon.term-odd");
                          p.m = eb.m, p.beta = Rational(1 + eb.k), p.gamma = eb.gamma;
                          TheoremInstance ch = raw_instance("dixon.trunc-c");
                          ch.m = eb.m, ch.k = eb.k, ch.gamma = eb.gamma;
                          return lhs_matches(p, ch) && rhs_matches(p, ch);
                      }});

        es.push_back({"dixon.trunc-d", "dixon.trunc-c", "gamma = 1+k", true, {},
                      [](const EdgeBinding& eb) {
                          TheoremInstance p = raw_instance("dixon.trunc-c");
                          p.m = eb.m, p.k = eb.k, p.gamma = Rational(1 + eb.k);
                          TheoremInstance ch = raw_instance("dixon.trunc-d");
                          ch.m = eb.m, ch.k = eb.k;
                          return lhs_matches(p, ch) && rhs_matches(p, ch);
                      }});

        es.push_back({"dixon.trunc-e", "dixon.term-alpha-even", "gamma = 1+alpha+2m+k", true, {"alpha"},
                      [](const EdgeBinding& eb) {
                          detail::require_noninteger("alpha", eb.alpha);
                          TheoremInstance p = raw_instance("dixon.term-alpha-even");
                          p.m = eb.m, p.alpha = eb.alpha, p.gamma = 1 + eb.alpha + 2 * eb.m + eb.k;
                          TheoremInstance ch = raw_instance("dixon.trunc-e");
                          ch.m = eb.m, ch.k = eb.k, ch.alpha = eb.alpha;
                          return lhs_matches(p, ch) && rhs_matches(p, ch);
                      }});

        es.push_back({"dixon.trunc-f", "dixon.term-alpha-odd", "gamma = 2+alpha+2m+k", true, {"alpha"},
                      [](const EdgeBinding& eb) {
                          detail::require_noninteger("alpha", eb.alpha);
                          TheoremInstance p = raw_instance("dixon.term-alpha-odd");
                          p.m = eb.m, p.alpha = eb.alpha, p.gamma = 2 + eb.alpha + 2 * eb.m + eb.k;
                          TheoremInstance ch = raw_instance("dixon.trunc-f");
                          ch.m = eb.m, ch.k = eb.k, ch.alpha = eb.alpha;
                          return lhs_matches(p, ch) && rhs_matches(p, ch);
                      }});

        es.push_back({"dixon.term-even", "dixon.nt", "alpha = -2m (Gamma limit)", false, {"beta", "gamma"},
                      [](const EdgeBinding& eb) {
                          detail::require_noninteger("beta", eb.beta);
                          detail::require_noninteger("gamma", eb.gamma);
                          detail::require_generic(!is_integer(eb.beta + eb.gamma),
                                                  "beta+gamma not an integer");
                          return detail::dixon_limit_edge(
                              eb, "dixon.term-even", Rational(-2 * eb.m), 1, eb.beta, 0, eb.gamma,
                              [&eb](TheoremInstance& ch) { ch.beta = eb.beta, ch.gamma = eb.gamma; });
                      }});

        es.push_back({"dixon.term-odd", "dixon.nt", "alpha = -2m-1 (Gamma limit)", false, {"beta", "gamma"},
                      [](const EdgeBinding& eb) {
                          detail::require_noninteger("beta", eb.beta);
                          detail::require_noninteger("gamma", eb.gamma);
                          detail::require_generic(!is_integer(eb.beta + eb.gamma + Rational(1, 2)),
                                                  "beta+gamma not a half-odd integer");
                          return detail::dixon_limit_edge(
                              eb, "dixon.term-odd", Rational(-2 * eb.m - 1), 1, eb.beta, 0, eb.gamma,
                              [&eb](TheoremInstance& ch) { ch.beta = eb.beta, ch.gamma = eb.gamma; });
                      }});

        es.push_back({"dixon.term-alpha-even", "dixon.nt", "beta = -2m (Gamma limit)", false, {"alpha", "gamma"},
                      [](const EdgeBinding& eb) {
                          detail::require_noninteger("alpha", eb.alpha);
                          detail::require_noninteger("gamma", eb.gamma);
                          detail::require_generic(!is_integer(eb.alpha - eb.gamma) &&
                                                      !is_integer(eb.alpha / 2 - eb.gamma),
                                                  "alpha-gamma and alpha/2-gamma not integers");
                          return detail::dixon_limit_edge(
                              eb, "dixon.term-alpha-even", eb.alpha, 0, Rational(-2 * eb.m), 1, eb.gamma,
                              [&eb](TheoremInstance& ch) { ch.alpha = eb.alpha, ch.gamma = eb.gamma; });
                      }});

        es.push_back({"dixon.term-alpha-odd", "dixon.nt", "beta = -2m-1 (Gamma limit)", false, {"alpha", "gamma"},
                      [](const EdgeBinding& eb) {
                          detail::require_noninteger("alpha", eb.alpha);
                          detail::require_noninteger("gamma", eb.gamma);
                          detail::require_generic(!is_integer(eb.alpha - eb.gamma) &&
                                                      !is_integer(eb.alpha / 2 - eb.gamma),
                                                  "alpha-gamma and alpha/2-gamma not integers");
                          return detail::dixon_limit_edge(
                              eb, "dixon.term-alpha-odd", eb.alpha, 0, Rational(-2 * eb.m - 1), 1, eb.gamma,
                              [&eb](TheoremInstance& ch) { ch.alpha = eb.alpha, ch.gamma = eb.gamma; });
                      }});

        es.push_back({"dixon.term-m", "dixon.nt", "beta = -m (Gamma limit)", false, {"alpha", "gamma"},
                      [](const EdgeBinding& eb) {
                          detail::require_noninteger("alpha", eb.alpha);
                          detail::require_noninteger("gamma", eb.gamma);
                          detail::require_generic(!is_integer(eb.alpha - eb.gamma) &&
                                                      !is_integer(eb.alpha / 2 - eb.gamma),
                                                  "alpha-gamma and alpha/2-gamma not integers");
                          return detail::dixon_limit_edge(
                              eb, "dixon.term-m", eb.alpha, 0, Rational(-eb.m), 1, eb.gamma,
                              [&eb](TheoremInstance& ch) { ch.alpha = eb.alpha, ch.gamma = eb.gamma; });
                      }});

        // gamma = -m turns the reflected quotient into the terminating closed
        // form verbatim: the cosine factors coincide and the Gamma ratio
        // collapses to exactly 1.
        es.push_back({"dixon.term-gamma", "dixon.nt", "gamma = -m (reflected form)", false, {"alpha", "beta"},
                      [](const EdgeBinding& eb) {
                          detail::require_noninteger("alpha", eb.alpha);
                          detail::require_noninteger("beta", eb.beta);
                          detail::require_generic(!is_integer(eb.alpha - eb.beta) &&
                                                      !is_integer(eb.alpha / 2 - eb.beta),
                                                  "alpha-beta and alpha/2-beta not integers");
                          TheoremInstance p = detail::raw_instance("dixon.nt");
                          p.alpha = eb.alpha, p.beta = eb.beta, p.gamma = Rational(-eb.m);
                          TheoremInstance ch = detail::raw_instance("dixon.term-gamma");
                          ch.m = eb.m, ch.alpha = eb.alpha, ch.beta = eb.beta;
                          const auto [pn, pd] = detail::dixon_reflected_args(eb.alpha, eb.beta, Rational(-eb.m));
                          const auto [cn, cd] = detail::dixon_term_gamma_args(eb.alpha, eb.beta, eb.m);
                          GammaRatio r;
                          for (const auto& x : pn) r.times(x);
                          for (const auto& x : pd) r.over(x);
                          for (const auto& x : cn) r.over(x);
                          for (const auto& x : cd) r.times(x);
                          const auto lim = gamma_ratio_limit(r);
                          return detail::lhs_matches(p, ch) && !lim.pole && lim.value == 1;
                      }});

        return es;
    }();
    return edges;
}

/// True when substituting into the parent reproduces the child at this
/// binding; throws for a (child, parent) pair that is not a documented edge.
inline bool derivation_check(const std::string& child, const std::string& parent,
                             const EdgeBinding& eb) {
    for (const auto& e : derivation_edges())
        if (e.child == child && e.parent == parent) return e.holds(eb);
    throw invalid_instance("no derivation edge " + parent + " -> " + child);
}

} // namespace clausen
