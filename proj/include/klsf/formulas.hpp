#pragma once

/**
 * Closed-form values and bounds for the maximum size of a (k,l)-sum-free set.
 *
 * Notation used below: n is the group order, v its exponent, and
 * delta(d) = gcd(d, k - l). Every per-divisor term is clamped at 0 and the
 * divisor d = 1 takes part in every maximum.
 */

#include <array>
#include <functional>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "klsf/abelian.hpp"
#include "klsf/kl_params.hpp"

namespace klsf::formulas {

/// Raised when a closed form is requested where only bounds are known.
class FormulaUnavailable : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

Int delta(Int d, KLParams kl);

struct BoundReport {
    Int lower = 0;
    Int upper = 0;
    std::map<Int, Int> lower_terms;  // d | v
    std::map<Int, Int> upper_terms;  // d | n
    Int argmax_lower = 1;            // smallest maximising divisor
    Int argmax_upper = 1;
    /// v divides k - l: every singleton fails, so both bounds are 0 and the upper
    /// table is left empty.
    bool exponent_divides_difference = false;
};

/// Per-divisor lower term (floor((d-1-delta(d))/(k+l)) + 1) * n/d, clamped at 0.
Int lower_term(Int d, Int n, KLParams kl);
/// Per-divisor upper term (floor((d-2)/(k+l)) + 1) * n/d, clamped at 0.
Int upper_term(Int d, Int n, KLParams kl);

BoundReport lambda_bounds_general(const GroupSpec& g, KLParams kl);

// --- sum-free (2,1) and (3,1) in cyclic groups ------------------------------

Int lambda_cyclic_21_max_form(Int n);
Int lambda_cyclic_21_case_form(Int n);
/// Both forms, checked against each other (std::logic_error on mismatch).
Int lambda_cyclic_21(Int n);

Int lambda_cyclic_31_max_form(Int n);
Int lambda_cyclic_31_case_form(Int n);
Int lambda_cyclic_31(Int n);

/// Longest sum-free progression in Z_n: n/2 for even n, floor((n+1)/3) otherwise.
Int alpha_21(Int n);
/// Longest (3,1)-sum-free progression in Z_n.
Int alpha_31(Int n);

// --- progressions with restricted difference ---------------------------------

enum class CaseTag { divides, coprime, intermediate };

std::string to_string(CaseTag tag);

/// Which of the three regimes gcd(n, k-l) falls in.
CaseTag case_of(Int n, KLParams kl);

struct IntBounds {
    Int lower = 0;
    Int upper = 0;

    bool exact() const noexcept { return lower == upper; }
    bool contains(Int x) const noexcept { return lower <= x && x <= upper; }
    bool operator==(const IntBounds&) const = default;
};

struct BetaReport {
    IntBounds bounds;
    CaseTag tag = CaseTag::divides;
};

/// Progressions whose difference shares a factor with n.
BetaReport beta_report(Int n, KLParams kl);

/// Progressions whose difference is coprime to n.
IntBounds gamma_bounds(Int n, KLParams kl);

struct AlphaReport {
    IntBounds value;  // lower == upper when exact
    CaseTag tag = CaseTag::divides;
    IntBounds beta;
    IntBounds gamma;

    bool exact() const noexcept { return value.exact(); }
};

AlphaReport alpha_report(Int n, KLParams kl);

// --- cyclic groups through progressions ---------------------------------------

enum class AlphaSource {
    formula,            // closed forms only; FormulaUnavailable when a divisor has bounds only
    exact,              // exhaustive progression search
    formula_or_exact,   // closed form where one exists, search otherwise
};

/// Exact alpha_{k,l}(Z_d) by closed form, or nullopt if only bounds are known. d = 1 gives 0.
std::optional<Int> alpha_closed_form(Int d, KLParams kl);

/// max over d | n of alpha(Z_d) * n/d.
Int lambda_cyclic_via_alpha(Int n, KLParams kl, AlphaSource source);

/// Upper and lower bound built from caller-supplied alpha(Z_d) for every d | v.
/// Throws std::invalid_argument when a divisor of v is missing from `alpha_values`.
IntBounds hp_general_bounds(const GroupSpec& g, KLParams kl, const std::map<Int, Int>& alpha_values);

struct DivisorCondition {
    bool holds = false;
    std::optional<Int> witness_divisor;
};

/// Whether some d | v is not congruent mod (k+l) to any of 1, ..., delta(d);
/// reports the smallest such d.
DivisorCondition divisor_condition(Int v, KLParams kl);

/// Divisor classes used to evaluate the (3,1) maximum in Z_n.
struct ClassReport31 {
    std::array<std::vector<Int>, 6> classes;   // E_1 .. E_6
    std::array<Int, 6> e{};                    // class maxima, 0 for an empty class
    std::array<std::optional<Int>, 6> p{};     // min of each class
    std::array<std::optional<Int>, 6> nmax{};  // max of each class
    Int lambda = 0;
};

ClassReport31 lambda_31_class_report(Int n);

// --- closed form dispatch used by the CLI -------------------------------------

struct FormulaValue {
    Int value = 0;
    std::string basis;  // short description of the identity used
};

/// A closed-form value of lambda_{k,l}(G) when one is known, else nullopt with
/// `reason` describing the limitation.
std::optional<FormulaValue> lambda_formula(const GroupSpec& g, KLParams kl, std::string* reason = nullptr);

}  // namespace klsf::formulas
