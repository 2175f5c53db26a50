#pragma once

#include <algorithm>
#include <cmath>
#include <functional>
#include <string>
#include <vector>

#include "clausen/catalog.hpp"
#include "clausen/detail/gauss_laguerre.hpp"
#include "clausen/errors.hpp"
#include "clausen/gamma.hpp"
#include "clausen/pochhammer.hpp"
#include "clausen/rational.hpp"
#include "clausen/series.hpp"

// Mellin transforms of exponentially weighted truncated 2F2 polynomials:
//
//   integral_0^inf t^(s-1) e^(-mu t) 2F2[-M, a; -M-l, b; lambda t]_M dt
//     = Gamma(s)/mu^s * 3F2[-M, a, s; -M-l, b; lambda/mu]_M
//
// (termwise: the t^n moment is Gamma(s+n)/mu^(s+n) = (s)_n Gamma(s)/mu^(s+n)).
// The transform value is carried exactly as a rational coefficient of
// Gamma(s)/mu^s.  When lambda = mu the 3F2 sits at unit argument, and sixteen
// parameter bindings reduce it to truncated summation theorems from the
// catalog, giving a closed form for the coefficient.

namespace clausen {

/// Transform instance.  M >= 0 is the truncation order, l >= 0 the offset of
/// the first polynomial denominator below -M.
struct MellinInstance {
    long long M = 0, ell = 0;
    Rational a, b;
    Rational s;
    Rational mu, lambda;
};

/// Exact transform value: coeff * Gamma(s) / mu^s.
struct MellinValue {
    Rational coeff;
    Rational s, mu;

    RealHP to_float() const {
        return to_real(coeff) * gamma_real(to_real(s)) * std::pow(to_real(mu), -to_real(s));
    }
};

namespace detail {

inline void validate_mellin(const MellinInstance& in) {
    if (in.M < 0) throw invalid_instance("truncation order must be >= 0");
    if (in.ell < 0) throw invalid_instance("denominator offset must be >= 0");
    if (!(in.s > 0)) throw side_condition_violated("s > 0");
    if (!(in.mu > 0)) throw side_condition_violated("mu > 0");
}

inline HypergeometricSpec mellin_f32(const MellinInstance& in) {
    return {{Rational(-in.M), in.a, in.s},
            {Rational(-in.M - in.ell), in.b},
            in.lambda / in.mu,
            in.M};
}

} // namespace detail

/// Exact evaluation via the termwise moment identity.
inline MellinValue mellin_exact(const MellinInstance& in) {
    detail::validate_mellin(in);
    return {eval_truncated(detail::mellin_f32(in)), in.s, in.mu};
}

/// Coefficients c_n of the weighted polynomial 2F2[-M, a; -M-l, b; lambda t]_M
/// as a polynomial in t.  The -M-l denominator never vanishes on n <= M; b is
/// checked like any truncated-series denominator.
inline std::vector<Rational> mellin_polynomial(const MellinInstance& in) {
    if (in.M < 0 || in.ell < 0) throw invalid_instance("polynomial needs M >= 0 and offset >= 0");
    if (is_nonpositive_integer(in.b) && -in.b < in.M)
        throw pole_in_range("denominator parameter " + in.b.str() +
                            " has a Pochhammer zero inside the summation range");
    std::vector<Rational> cs;
    cs.reserve(static_cast<std::size_t>(in.M) + 1);
    Rational c(1);
    cs.push_back(c);
    for (long long n = 0; n < in.M; ++n) {
        c *= (Rational(-in.M) + n) * (in.a + n) * in.lambda;
        c /= (Rational(-in.M - in.ell) + n) * (in.b + n) * (n + 1);
        cs.push_back(c);
    }
    return cs;
}

/// Numeric cross-check of the exact value.  A generalized Gauss-Laguerre rule
/// with weight u^(s-1) e^-u integrates the degree-M polynomial exactly, so
/// after the substitution u = mu t the residual is pure rounding.
struct MellinQuadrature {
    RealHP value = 0.0L;      // numeric integral
    RealHP reference = 0.0L;  // coeff * Gamma(s) / mu^s
    RealHP abs_error = 0.0L;
    RealHP rel_error = 0.0L;  // against max(|value|, |reference|); for an
                              // exactly zero reference, against the summed
                              // magnitude of the cancelling quadrature terms
    int nodes = 0;
};

inline MellinQuadrature mellin_quadrature(const MellinInstance& in, int nodes = 0) {
    const MellinValue exact = mellin_exact(in);
    const std::vector<Rational> cs = mellin_polynomial(in);
    if (nodes <= 0) nodes = static_cast<int>(std::max<long long>(in.M + 2, 20));

    const auto rule = detail::gauss_laguerre(nodes, to_real(in.s) - 1.0L);
    const RealHP mu = to_real(in.mu);
    std::vector<RealHP> cf(cs.size());
    for (std::size_t i = 0; i < cs.size(); ++i) cf[i] = to_real(cs[i]);

    RealHP signed_sum = 0.0L, magnitude = 0.0L;
    for (int i = 0; i < nodes; ++i) {
        const RealHP t = rule.nodes[i] / mu;
        RealHP p = 0.0L;
        for (std::size_t j = cf.size(); j-- > 0;) p = p * t + cf[j];
        const RealHP contrib = rule.weights[i] * p;
        signed_sum += contrib;
        magnitude += std::fabs(contrib);
    }

    MellinQuadrature q;
    q.nodes = nodes;
    const RealHP scale = std::pow(mu, -to_real(in.s));
    q.value = scale * signed_sum;
    q.reference = exact.to_float();
    q.abs_error = std::fabs(q.value - q.reference);
    if (exact.coeff == 0)
        q.rel_error = magnitude > 0.0L ? std::fabs(signed_sum) / magnitude : 0.0L;
    else {
        const RealHP denom = std::max(std::fabs(q.value), std::fabs(q.reference));
        q.rel_error = denom > 0.0L ? q.abs_error / denom : q.abs_error;
    }
    return q;
}

// ---- Named lambda = mu cases ------------------------------------------------

/// Parameters a case binding supplies; mu is the common exponent and argument
/// scale (lambda = mu throughout).
struct MellinCaseBinding {
    long long m = 1, k = 1;
    Rational alpha, beta, gamma;
    Rational mu = Rational(1);
};

/// One reduction of the unit-argument 3F2 to a catalog closed form.
struct MellinCase {
    std::string name;     // "I" .. "XVI"
    std::string theorem;  // catalog entry supplying the coefficient
    bool rhs_is_zero = false;
    bool uses_k = true;
    std::vector<std::string> rationals;
    std::function<MellinInstance(const MellinCaseBinding&)> instance;
};

inline const std::vector<MellinCase>& mellin_cases() {
    static const std::vector<MellinCase> cases = [] {
        using B = MellinCaseBinding;
        std::vector<MellinCase> cs;

        cs.push_back({"I", "watson.trunc-m", false, false, {"alpha", "beta"}, [](const B& b) {
                          return MellinInstance{b.m, b.m, b.alpha, (1 + b.alpha + b.beta) / 2,
                                                b.beta, b.mu, b.mu};
                      }});
        cs.push_back({"II", "watson.trunc-2m", false, true, {"beta"}, [](const B& b) {
                          return MellinInstance{2 * b.m, 2 * b.k + 1, Rational(-2 * b.m - 2 * b.k - 1) / 2,
                                                (1 + b.beta) / 2 - b.m, b.beta, b.mu, b.mu};
                      }});
        cs.push_back({"III", "watson.trunc-2m1", true, true, {"beta"}, [](const B& b) {
                          return MellinInstance{2 * b.m + 1, 2 * b.k, Rational(-2 * b.m - 2 * b.k - 1) / 2,
                                                b.beta / 2 - b.m, b.beta, b.mu, b.mu};
                      }});
        cs.push_back({"IV", "saalschutz.trunc", false, true, {"alpha", "beta"}, [](const B& b) {
                          return MellinInstance{b.m, b.k, b.alpha, 1 + b.alpha + b.beta + b.k,
                                                b.beta, b.mu, b.mu};
                      }});
        cs.push_back({"V", "saalschutz.trunc-b", false, true, {"beta", "gamma"}, [](const B& b) {
                          return MellinInstance{b.m, b.k, b.beta - b.k - 1, b.beta - b.gamma - b.m - b.k,
                                                Rational(-b.m - b.k) - b.gamma, b.mu, b.mu};
                      }});
        cs.push_back({"VI", "whipple.trunc-m", false, true, {"alpha"}, [](const B& b) {
                          return MellinInstance{b.m, b.m + b.k, 1 - b.alpha, Rational(1 + b.k),
                                                b.alpha, b.mu, b.mu};
                      }});
        cs.push_back({"VII", "whipple.trunc-2m-a", false, true, {"beta"}, [](const B& b) {
                          return MellinInstance{2 * b.m, 2 * b.k, Rational(1 + 2 * b.m),
                                                2 * b.beta + 2 * b.m + 2 * b.k + 1, b.beta, b.mu, b.mu};
                      }});
        cs.push_back({"VIII", "whipple.trunc-2m-b", false, true, {"beta"}, [](const B& b) {
                          return MellinInstance{2 * b.m, 2 * b.k + 1, Rational(1 + 2 * b.m),
                                                2 * b.beta + 2 + 2 * b.m + 2 * b.k, b.beta, b.mu, b.mu};
                      }});
        cs.push_back({"IX", "whipple.trunc-2m1-a", false, true, {"beta"}, [](const B& b) {
                          return MellinInstance{2 * b.m + 1, 2 * b.k, Rational(2 + 2 * b.m),
                                                2 * b.beta + 2 * b.m + 2 * b.k + 2, b.beta, b.mu, b.mu};
                      }});
        cs.push_back({"X", "whipple.trunc-2m1-b", false, true, {"beta"}, [](const B& b) {
                          return MellinInstance{2 * b.m + 1, 2 * b.k + 1, Rational(2 + 2 * b.m),
                                                2 * b.beta + 2 * b.m + 2 * b.k + 3, b.beta, b.mu, b.mu};
                      }});
        cs.push_back({"XI", "dixon.trunc-a", false, true, {"gamma"}, [](const B& b) {
                          return MellinInstance{2 * b.m, b.k, Rational(1 + b.k),
                                                1 - 2 * b.m - b.gamma, b.gamma, b.mu, b.mu};
                      }});
        cs.push_back({"XII", "dixon.trunc-b", false, true, {}, [](const B& b) {
                          return MellinInstance{2 * b.m, b.k, Rational(1 + b.k),
                                                Rational(-2 * b.m - b.k), Rational(1 + b.k), b.mu, b.mu};
                      }});
        cs.push_back({"XIII", "dixon.trunc-c", true, true, {"gamma"}, [](const B& b) {
                          return MellinInstance{2 * b.m + 1, b.k, b.gamma,
                                                Rational(-2 * b.m) - b.gamma, Rational(1 + b.k), b.mu, b.mu};
                      }});
        cs.push_back({"XIV", "dixon.trunc-d", true, true, {}, [](const B& b) {
                          return MellinInstance{2 * b.m + 1, b.k, Rational(1 + b.k),
                                                Rational(-2 * b.m - b.k - 1), Rational(1 + b.k), b.mu, b.mu};
                      }});
        cs.push_back({"XV", "dixon.trunc-e", false, true, {"alpha"}, [](const B& b) {
                          return MellinInstance{2 * b.m, b.k, b.alpha, 1 + b.alpha + 2 * b.m,
                                                1 + b.alpha + 2 * b.m + b.k, b.mu, b.mu};
                      }});
        cs.push_back({"XVI", "dixon.trunc-f", false, true, {"alpha"}, [](const B& b) {
                          return MellinInstance{2 * b.m + 1, b.k, b.alpha, 2 + b.alpha + 2 * b.m,
                                                2 + b.alpha + 2 * b.m + b.k, b.mu, b.mu};
                      }});

        return cs;
    }();
    return cases;
}

inline const MellinCase& find_mellin_case(const std::string& name) {
    for (const auto& c : mellin_cases())
        if (c.name == name) return c;
    throw invalid_instance("unknown transform case '" + name + "'");
}

namespace detail {

/// Instantiate the linked catalog theorem from a case binding, enforcing its
/// side conditions; the instance's closed form is the case's coefficient.
inline TheoremInstance case_theorem_instance(const MellinCase& mc, const MellinCaseBinding& cb) {
    const TheoremEntry& e = find_theorem(mc.theorem);
    Binding b;
    b.m = cb.m;
    if (e.uses_k) b.k = cb.k;
    const auto wants = [&e](const char* n) {
        return std::find(e.rationals.begin(), e.rationals.end(), n) != e.rationals.end();
    };
    if (wants("alpha")) b.alpha = cb.alpha;
    if (wants("beta")) b.beta = cb.beta;
    if (wants("gamma")) b.gamma = cb.gamma;
    return instantiate(mc.theorem, b);
}

} // namespace detail

struct MellinReport {
    std::string name;
    std::string theorem;
    std::string verdict;  // equal | mismatch | inapplicable
    Rational coeff_generic, coeff_closed;
    Rational s, mu;
    long long terms = 0;
    RealHP quad_value = 0.0L, quad_reference = 0.0L;
    RealHP quad_rel_error = 0.0L, quad_tolerance = 0.0L;
    int nodes = 0;
    std::string diagnostic;
};

/// Check one named case at a binding: the generic termwise coefficient must
/// equal the catalog closed form exactly, and the quadrature residual must
/// stay within quad_tol.  Evaluation errors give verdict "inapplicable".
inline MellinReport mellin_case_check(const std::string& name, const MellinCaseBinding& cb,
                                      RealHP quad_tol = 1e-8L, int nodes = 0) {
    const MellinCase& mc = find_mellin_case(name);
    MellinReport rep;
    rep.name = mc.name;
    rep.theorem = mc.theorem;
    rep.quad_tolerance = quad_tol;
    try {
        const TheoremInstance ti = detail::case_theorem_instance(mc, cb);
        const MellinInstance in = mc.instance(cb);
        const MellinValue generic = mellin_exact(in);
        rep.coeff_generic = generic.coeff;
        rep.coeff_closed = ti.entry->rhs_exact(ti);
        rep.s = in.s;
        rep.mu = in.mu;
        rep.terms = in.M + 1;

        const MellinQuadrature q = mellin_quadrature(in, nodes);
        rep.quad_value = q.value;
        rep.quad_reference = q.reference;
        rep.quad_rel_error = q.rel_error;
        rep.nodes = q.nodes;

        const bool zero_ok = !mc.rhs_is_zero || rep.coeff_generic == 0;
        rep.verdict = (rep.coeff_generic == rep.coeff_closed && zero_ok &&
                       q.rel_error <= quad_tol)
                          ? "equal"
                          : "mismatch";
    } catch (const evaluation_error& err) {
        rep.verdict = "inapplicable";
        rep.diagnostic = err.what();
    }
    return rep;
}

} // namespace clausen
