#pragma once

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "clausen/detail/boundary_tail.hpp"
#include "clausen/errors.hpp"
#include "clausen/gamma.hpp"
#include "clausen/pochhammer.hpp"
#include "clausen/rational.hpp"

namespace clausen {

namespace detail {
#if defined(__SIZEOF_FLOAT128__)
// Wide accumulator: early terms of a boundary series can swing thirteen
// orders of magnitude above the sum; 113 mantissa bits absorb that.
using quad = __float128;
#else
using quad = long double;
#endif

inline quad to_quad(const Rational& r) {
    // exact for the parameter/argument ranges used here (|p|, q < 2^63)
    return static_cast<quad>(to_real(numerator(r))) / static_cast<quad>(to_real(denominator(r)));
}

inline long double quad_abs(quad x) { return std::abs(static_cast<long double>(x)); }
} // namespace detail

/// A (possibly truncated) generalized hypergeometric series
/// pFq[num; den; z], summed over n = 0..truncation when truncation is set.
struct HypergeometricSpec {
    std::vector<Rational> num;
    std::vector<Rational> den;
    Rational z;
    std::optional<long long> truncation;
};

inline std::string to_string(const HypergeometricSpec& s) {
    std::ostringstream out;
    out << s.num.size() << "F" << s.den.size() << "[";
    for (std::size_t i = 0; i < s.num.size(); ++i) out << (i ? ", " : "") << s.num[i].str();
    out << "; ";
    for (std::size_t i = 0; i < s.den.size(); ++i) out << (i ? ", " : "") << s.den[i].str();
    out << "; " << s.z.str() << "]";
    if (s.truncation) out << "_" << *s.truncation;
    return out.str();
}

enum class Regime {
    Polynomial,
    Entire,
    UnitDisc,
    BoundaryConvergent,
    BoundaryDivergent,
    Divergent,
};

inline const char* regime_name(Regime r) {
    switch (r) {
        case Regime::Polynomial: return "polynomial";
        case Regime::Entire: return "entire";
        case Regime::UnitDisc: return "unit-disc";
        case Regime::BoundaryConvergent: return "boundary-convergent";
        case Regime::BoundaryDivergent: return "boundary-divergent";
        case Regime::Divergent: return "divergent";
    }
    return "?";
}

struct ConvergenceInfo {
    Rational omega; // sum(den) - sum(num)
    Regime regime;
};

namespace detail {

inline bool has_terminating_numerator(const HypergeometricSpec& s) {
    for (const auto& a : s.num)
        if (is_nonpositive_integer(a)) return true;
    return false;
}

/// Smallest N with a numerator parameter equal to -N.
inline long long termination_index(const HypergeometricSpec& s) {
    long long best = -1;
    for (const auto& a : s.num)
        if (is_nonpositive_integer(a)) {
            const long long n = to_long_long(-a);
            if (best < 0 || n < best) best = n;
        }
    if (best < 0) throw not_terminating("no nonpositive-integer numerator parameter in " + to_string(s));
    return best;
}

/// Throws if any denominator Pochhammer vanishes for a term index n <= last.
/// (-l)_n first picks up a zero factor at n = l+1, so -l is legal iff l >= last.
inline void require_no_pole_upto(const HypergeometricSpec& s, long long last) {
    for (const auto& b : s.den)
        if (is_nonpositive_integer(b) && -b < last)
            throw pole_in_range("denominator parameter " + b.str() + " vanishes within the first " +
                                std::to_string(last + 1) + " terms of " + to_string(s));
}

/// Exact partial sum over n = 0..N of the series' terms.
inline Rational eval_sum_upto(const HypergeometricSpec& s, long long N) {
    require_no_pole_upto(s, N);
    Rational sum = 1, term = 1;
    for (long long n = 0; n < N; ++n) {
        Rational ratio = s.z;
        for (const auto& a : s.num) ratio *= a + n;
        for (const auto& b : s.den) ratio /= b + n;
        ratio /= n + 1;
        term *= ratio;
        sum += term;
    }
    return sum;
}

/// Index past which every (param + n) factor has settled sign.
inline long long settle_index(const HypergeometricSpec& s) {
    long long idx = 2;
    const auto update = [&](const Rational& p) {
        const Integer mag = boost::multiprecision::abs(numerator(p)) / denominator(p) + 1;
        if (mag < 1'000'000) idx = std::max(idx, mag.convert_to<long long>() + 1);
    };
    for (const auto& a : s.num) update(a);
    for (const auto& b : s.den) update(b);
    return idx;
}

} // namespace detail

inline ConvergenceInfo convergence_info(const HypergeometricSpec& s) {
    Rational omega = 0;
    for (const auto& b : s.den) omega += b;
    for (const auto& a : s.num) omega -= a;
    if (s.truncation || detail::has_terminating_numerator(s)) return {omega, Regime::Polynomial};
    const std::size_t p = s.num.size(), q = s.den.size();
    if (p <= q) return {omega, Regime::Entire};
    if (p > q + 1) return {omega, Regime::Divergent};
    const Rational az = s.z < 0 ? -s.z : s.z;
    if (az < 1) return {omega, Regime::UnitDisc};
    if (az > 1) return {omega, Regime::Divergent};
    if (s.z == 1) return {omega, omega > 0 ? Regime::BoundaryConvergent : Regime::BoundaryDivergent};
    return {omega, omega > -1 ? Regime::BoundaryConvergent : Regime::BoundaryDivergent};
}

/// Exact truncated evaluation: m + 1 terms, n = 0..m.
inline Rational eval_truncated(const HypergeometricSpec& s, long long m) {
    if (m < 0) throw invalid_instance("truncation order must be >= 0");
    return detail::eval_sum_upto(s, m);
}

inline Rational eval_truncated(const HypergeometricSpec& s) {
    if (!s.truncation) throw invalid_instance("spec carries no truncation order: " + to_string(s));
    return eval_truncated(s, *s.truncation);
}

/// Exact evaluation of a terminating series (some numerator is -N); sums
/// n = 0..N.  Denominator parameters -l with l >= N are fine, l < N is a pole.
inline Rational eval_terminating(const HypergeometricSpec& s) {
    if (s.truncation) throw invalid_instance("truncated spec passed to eval_terminating");
    return detail::eval_sum_upto(s, detail::termination_index(s));
}

/// A reversed series together with the scalar prefactor relating it to the
/// original: original = prefactor * eval(reversed).
struct Reversal {
    HypergeometricSpec spec;
    Rational prefactor;
};

/// Order reversal of a truncated sum: summing the m+1 terms backwards yields
///   prod (a_i)_m z^m / (prod (b_j)_m m!)
/// times a (q+2)F(p)[-m, 1-b-m, 1; 1-a-m; (-1)^(p+q+1)/z] truncated at m.
inline Reversal reverse_truncated(const HypergeometricSpec& s, long long m) {
    if (m < 0) throw invalid_instance("truncation order must be >= 0");
    if (s.z == 0) throw reversal_inapplicable("reversal needs z != 0");
    detail::require_no_pole_upto(s, m);

    HypergeometricSpec rev;
    rev.num.push_back(Rational(-m));
    for (const auto& b : s.den) rev.num.push_back(1 - b - m);
    rev.num.push_back(Rational(1));
    for (const auto& a : s.num) {
        const Rational ra = 1 - a - m;
        if (is_nonpositive_integer(ra) && -ra <= m - 1)
            throw reversal_inapplicable("reversed denominator parameter " + ra.str() +
                                        " hits a pole inside the reversed sum");
        rev.den.push_back(ra);
    }
    const bool flip = (s.num.size() + s.den.size() + 1) % 2 != 0;
    rev.z = (flip ? Rational(-1) : Rational(1)) / s.z;
    rev.truncation = m;

    Rational pref = 1;
    for (const auto& a : s.num) pref *= pochhammer_exact(a, m).value;
    for (const auto& b : s.den) pref /= pochhammer_exact(b, m).value;
    for (long long i = 0; i < m; ++i) pref *= s.z;
    pref /= Rational(factorial_exact(m));
    return {rev, pref};
}

/// Order reversal of a terminating series (one numerator -m consumed):
/// prefactor prod (a_i)_m (-z)^m / prod (b_j)_m, argument (-1)^(p+q)/z.
inline Reversal reverse_terminating(const HypergeometricSpec& s) {
    if (s.truncation) throw invalid_instance("truncated spec passed to reverse_terminating");
    if (s.z == 0) throw reversal_inapplicable("reversal needs z != 0");
    const long long m = detail::termination_index(s);
    detail::require_no_pole_upto(s, m);

    // consume one numerator equal to -m; the rest stay
    std::vector<Rational> rest;
    bool consumed = false;
    for (const auto& a : s.num) {
        if (!consumed && a == Rational(-m)) {
            consumed = true;
            continue;
        }
        rest.push_back(a);
    }

    HypergeometricSpec rev;
    rev.num.push_back(Rational(-m));
    for (const auto& b : s.den) rev.num.push_back(1 - b - m);
    for (const auto& a : rest) {
        const Rational ra = 1 - a - m;
        if (is_nonpositive_integer(ra) && -ra <= m - 1)
            throw reversal_inapplicable("reversed denominator parameter " + ra.str() +
                                        " hits a pole inside the reversed sum");
        rev.den.push_back(ra);
    }
    const bool flip = (rest.size() + s.den.size()) % 2 != 0;
    rev.z = (flip ? Rational(-1) : Rational(1)) / s.z;

    Rational pref = 1;
    for (const auto& a : rest) pref *= pochhammer_exact(a, m).value;
    for (const auto& b : s.den) pref /= pochhammer_exact(b, m).value;
    for (long long i = 0; i < m; ++i) pref *= -s.z;
    return {rev, pref};
}

/// Result of a float evaluation: value, an honest error estimate, and the
/// deterministic work counter (number of summed terms).
struct FloatEval {
    RealHP value;
    RealHP error_estimate;
    long long terms;
};

/// Float evaluation of a convergent non-terminating series.
///
/// |z| < 1 and entire cases are summed directly (wide accumulator) under the
/// stopping rule: three consecutive terms below rel_tol * |sum| once every
/// (param + n) factor has settled sign.  z = 1 with p = q + 1 sums a fixed
/// prefix and evaluates the remainder as exact-coefficient power laws summed
/// by Hurwitz zeta, so small omega does not force astronomically many terms.
inline FloatEval eval_nonterminating_float(const HypergeometricSpec& s, RealHP rel_tol = 1e-15L,
                                           long long max_terms = 1'000'000) {
    if (s.truncation) throw invalid_instance("truncated spec passed to eval_nonterminating_float");
    if (detail::has_terminating_numerator(s)) {
        const Rational exact = eval_terminating(s);
        const RealHP v = to_real(exact);
        return {v, std::abs(v) * 1e-18L, detail::termination_index(s) + 1};
    }
    const auto info = convergence_info(s);
    if (info.regime == Regime::Divergent || info.regime == Regime::BoundaryDivergent)
        throw not_convergent(to_string(s) + " diverges (" + regime_name(info.regime) + ")");

    using detail::quad;
    std::vector<quad> a, b;
    for (const auto& x : s.num) a.push_back(detail::to_quad(x));
    for (const auto& x : s.den) b.push_back(detail::to_quad(x));
    const quad zq = detail::to_quad(s.z);
    const long long settle = detail::settle_index(s);

    const bool unit_boundary = (info.regime == Regime::BoundaryConvergent && s.z == 1);
    long long pre = max_terms;
    if (unit_boundary) {
        long long ms = 4096;
        const long long c = detail::settle_index(s);
        ms = std::max(ms, 4 * c * c);
        pre = ms;
    }

    quad sum = 1, term = 1;
    long double max_mag = 1.0L;
    int quiet = 0;
    long long summed_upto = 0; // highest term index accumulated so far
    bool stopped = false;
    for (long long n = 0; n < pre; ++n) {
        quad ratio = zq;
        for (const quad& ai : a) ratio *= ai + static_cast<quad>(n);
        for (const quad& bj : b) ratio /= bj + static_cast<quad>(n);
        ratio /= static_cast<quad>(n + 1);
        term *= ratio;
        sum += term;
        summed_upto = n + 1;
        max_mag = std::max(max_mag, detail::quad_abs(term));
        const long double t_mag = detail::quad_abs(term);
        const long double s_mag = std::max(detail::quad_abs(sum), 1e-300L);
        if (n >= settle && t_mag < rel_tol * s_mag) {
            ++quiet;
            if (quiet >= 3 && (!unit_boundary || t_mag < 1e-22L * s_mag)) {
                stopped = true;
                break;
            }
        } else {
            quiet = 0;
        }
    }
    const long long terms = summed_upto + 1; // indices 0..summed_upto
    const RealHP round_err = max_mag * static_cast<long double>(terms) * 3e-34L +
                             detail::quad_abs(sum) * 1e-19L;

    if (!unit_boundary) {
        if (!stopped)
            throw max_terms_exceeded("stopping rule did not fire within " + std::to_string(max_terms) +
                                     " terms of " + to_string(s));
        // geometric remainder bound; ratio tends to z (p = q+1) or 0 (p <= q)
        long double rho = (s.num.size() == s.den.size() + 1) ? std::abs(to_real(s.z)) : 0.25L;
        rho = std::min(rho + 0.05L, 0.999L);
        const long double bound = detail::quad_abs(term) * rho / (1.0L - rho);
        return {static_cast<RealHP>(sum), bound + round_err, terms};
    }

    // z = 1 boundary: remainder over indices >= summed_upto + 1
    long double tail_val = 0.0L, tail_err = 0.0L;
    const long double t_mag = detail::quad_abs(term);
    const long double s_mag = std::max(detail::quad_abs(sum), 1e-300L);
    if (!stopped && t_mag > 1e-24L * s_mag) {
        std::vector<Rational> den_one = s.den;
        den_one.push_back(Rational(1));
        const auto tail = detail::unit_argument_tail(s.num, den_one, info.omega, summed_upto + 1);
        tail_val = tail.value;
        tail_err = tail.error;
    } else {
        // remainder integral bound C r^(-1-omega): negligible by construction
        tail_err = t_mag * static_cast<long double>(summed_upto) / std::max(to_real(info.omega), 1e-6L);
    }
    const RealHP value = static_cast<RealHP>(sum) + tail_val;
    return {value, tail_err + round_err, terms};
}

/// Split evaluation of 3F2[-m, alpha, beta; -l, gamma; z] with l > m >= 0:
/// the exact m+1-term head plus the analytically continued infinite tail that
/// starts at r = l + 1, where the degenerate quotient (-m)_r/(-l)_r takes its
/// finite limit value.
struct SplitResult {
    Rational truncated_part;
    RealHP tail_estimate;
    RealHP error_bound;
    long long tail_terms;

    RealHP total() const { return to_real(truncated_part) + tail_estimate; }
};

inline SplitResult split_negative_denominator(const HypergeometricSpec& s, RealHP rel_tol = 1e-15L,
                                              long long max_terms = 1'000'000) {
    if (s.num.size() != 3 || s.den.size() != 2)
        throw invalid_instance("split applies to 3F2 shapes, got " + to_string(s));
    if (s.truncation) throw invalid_instance("split takes the untruncated spec");

    // classify: numerator -m (smallest-magnitude nonpositive integer),
    // denominator -l with l > m, generic alpha, beta, gamma
    long long m = -1;
    std::vector<Rational> generic_num;
    for (const auto& x : s.num) {
        if (is_nonpositive_integer(x)) {
            const long long cand = to_long_long(-x);
            if (m < 0 || cand < m) {
                if (m >= 0) generic_num.push_back(Rational(-m));
                m = cand;
            } else {
                generic_num.push_back(x);
            }
        } else {
            generic_num.push_back(x);
        }
    }
    if (m < 0) throw invalid_instance("split needs a nonpositive-integer numerator: " + to_string(s));
    long long l = -1;
    Rational gamma_p;
    bool have_gamma = false;
    for (const auto& x : s.den) {
        if (is_nonpositive_integer(x) && (l < 0)) {
            l = to_long_long(-x);
        } else {
            if (have_gamma) throw invalid_instance("split needs exactly one negative-integer denominator");
            gamma_p = x;
            have_gamma = true;
        }
    }
    if (l <= m || !have_gamma)
        throw invalid_instance("split needs a denominator -l with l > m: " + to_string(s));
    for (const auto& x : generic_num)
        if (is_nonpositive_integer(x))
            throw invalid_instance("split needs generic upper parameters, got " + x.str());
    if (is_nonpositive_integer(gamma_p))
        throw invalid_instance("split needs a generic lower parameter, got " + gamma_p.str());

    const Rational& alpha = generic_num[0];
    const Rational& beta = generic_num[1];

    HypergeometricSpec head = s;
    const Rational head_sum = detail::eval_sum_upto(head, m);

    // first tail term, exact: ratio-limit * (alpha)_{l+1} (beta)_{l+1} z^{l+1}
    //                          / ((gamma)_{l+1} (l+1)!)
    Rational t0 = pochhammer_negint_ratio(m, l, l + 1);
    t0 *= pochhammer_exact(alpha, l + 1).value;
    t0 *= pochhammer_exact(beta, l + 1).value;
    t0 /= pochhammer_exact(gamma_p, l + 1).value;
    t0 /= Rational(factorial_exact(l + 1));
    for (long long i = 0; i <= l; ++i) t0 *= s.z;

    HypergeometricSpec inner;
    inner.num = {Rational(l + 1 - m), alpha + (l + 1), beta + (l + 1)};
    inner.den = {gamma_p + (l + 1), Rational(l + 2)};
    inner.z = s.z;
    const auto inner_eval = eval_nonterminating_float(inner, rel_tol, max_terms);

    const RealHP t0_f = to_real(t0);
    return {head_sum, t0_f * inner_eval.value, std::abs(t0_f) * inner_eval.error_estimate,
            inner_eval.terms};
}

} // namespace clausen
