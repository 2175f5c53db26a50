#pragma once

#include <stdexcept>
#include <string>

namespace clausen {

/// Base class for everything the evaluation layer can throw.
struct evaluation_error : std::runtime_error {
    explicit evaluation_error(const std::string& what) : std::runtime_error(what) {}
};

/// A denominator Pochhammer vanishes at an index the sum actually visits.
struct pole_in_range : evaluation_error {
    using evaluation_error::evaluation_error;
};

/// A closed form divides by zero or hits a Gamma pole that nothing cancels.
struct pole_in_closed_form : evaluation_error {
    using evaluation_error::evaluation_error;
};

/// eval_terminating was asked to sum a series with no terminating numerator.
struct not_terminating : evaluation_error {
    using evaluation_error::evaluation_error;
};

/// The series diverges at the requested argument.
struct not_convergent : evaluation_error {
    using evaluation_error::evaluation_error;
};

/// The summation budget ran out before the stopping rule fired.
struct max_terms_exceeded : evaluation_error {
    using evaluation_error::evaluation_error;
};

/// A reversal identity does not apply to the given spec (z = 0, or the
/// reversed series would hit an in-range pole).
struct reversal_inapplicable : evaluation_error {
    using evaluation_error::evaluation_error;
};

/// A theorem or transform side condition fails; `condition` names it.
struct side_condition_violated : evaluation_error {
    std::string condition;
    explicit side_condition_violated(const std::string& cond)
        : evaluation_error("side condition violated: " + cond), condition(cond) {}
};

/// Malformed instance: unknown id, missing parameter, bad subscript, ...
struct invalid_instance : evaluation_error {
    using evaluation_error::evaluation_error;
};

/// An exact-arithmetic routine cannot express the result as a rational
/// (e.g. Gamma factors that no integer shift pairs up).
struct not_rational : evaluation_error {
    using evaluation_error::evaluation_error;
};

} // namespace clausen
