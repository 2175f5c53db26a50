#pragma once

#include <map>
#include <utility>
#include <vector>

#include "clausen/errors.hpp"
#include "clausen/pochhammer.hpp"
#include "clausen/rational.hpp"

namespace clausen {

/// One factor Gamma(arg + eps_coeff * eps) of a product whose eps -> 0 limit
/// is wanted.  arg is the value at eps = 0; eps_coeff is d(argument)/d(eps).
struct GammaFactor {
    Rational arg;
    Rational eps_coeff;
};

/// Ratio of Gamma products, built factor by factor.
struct GammaRatio {
    std::vector<GammaFactor> num, den;

    GammaRatio& times(Rational arg, Rational eps_coeff = 0) {
        num.push_back({std::move(arg), std::move(eps_coeff)});
        return *this;
    }
    GammaRatio& over(Rational arg, Rational eps_coeff = 0) {
        den.push_back({std::move(arg), std::move(eps_coeff)});
        return *this;
    }
};

namespace detail {

// Near -p:  Gamma(-p + c eps) = (-1)^p / (p! c eps) * (1 + O(eps)).
// Returns the residue coefficient (-1)^p / (p! c).
inline Rational pole_residue(const GammaFactor& f) {
    if (f.eps_coeff == 0)
        throw invalid_instance("Gamma factor pinned at the pole " + to_string(f.arg));
    const long long p = to_long_long(-f.arg);
    Rational r = Rational(1) / (Rational(factorial_exact(p)) * f.eps_coeff);
    if (p % 2 != 0) r = -r;
    return r;
}

} // namespace detail

/// Exact eps -> 0 limit of prod Gamma(num) / prod Gamma(den).
///
/// Pole factors (nonpositive-integer arg) contribute 1/eps residues; a surplus
/// on the numerator side diverges (Pole), a surplus on the denominator side
/// forces an exact 0.  With the 1/eps powers balanced, every regular factor
/// must differ from a partner across the bar by an integer, each pair reducing
/// to a shifted factorial; a leftover factor means the limit is some genuinely
/// transcendental number and we refuse to guess.
inline PochhammerResult gamma_ratio_limit(const GammaRatio& ratio) {
    Rational value = 1;
    long long num_poles = 0, den_poles = 0;
    std::map<Rational, std::vector<Rational>> num_regular, den_regular;

    for (const auto& f : ratio.num) {
        if (is_nonpositive_integer(f.arg)) {
            ++num_poles;
            value *= detail::pole_residue(f);
        } else {
            num_regular[fractional_part(f.arg)].push_back(f.arg);
        }
    }
    for (const auto& f : ratio.den) {
        if (is_nonpositive_integer(f.arg)) {
            ++den_poles;
            value /= detail::pole_residue(f);
        } else {
            den_regular[fractional_part(f.arg)].push_back(f.arg);
        }
    }

    if (num_poles > den_poles) return PochhammerResult::at_pole();
    if (num_poles < den_poles) return PochhammerResult::of(0);

    for (auto& [cls, args] : num_regular) {
        auto it = den_regular.find(cls);
        if (it == den_regular.end() || it->second.size() != args.size())
            throw not_rational("Gamma(" + to_string(args.front()) +
                               ") has no partner at an integer shift");
        for (std::size_t i = 0; i < args.size(); ++i) {
            const Rational& b = it->second[i];
            value *= pochhammer_exact(b, to_long_long(args[i] - b)).value_or_throw();
        }
        den_regular.erase(it);
    }
    if (!den_regular.empty())
        throw not_rational("Gamma(" + to_string(den_regular.begin()->second.front()) +
                           ") has no partner at an integer shift");

    return PochhammerResult::of(value);
}

} // namespace clausen
