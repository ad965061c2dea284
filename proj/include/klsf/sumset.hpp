#pragma once

#include <optional>
#include <vector>

#include "klsf/subset.hpp"

namespace klsf {

/// A + B. Throws std::invalid_argument when the groups differ.
Subset pair_sumset(const Subset& a, const Subset& b);

/// hA, h >= 1, by repeated doubling.
Subset h_fold(const Subset& a, Int h);
/// hA by folding one summand at a time.
Subset h_fold_naive(const Subset& a, Int h);

/// kA - lA.
Subset difference_sumset(const Subset& a, Int k, Int l);

/// kA and lA are disjoint.
bool is_kl_sum_free(const Subset& a, Int k, Int l);
/// 0 is not in kA - lA.
bool is_kl_sum_free_by_difference(const Subset& a, Int k, Int l);

/// k summands and l summands of A (as element indices) with equal sums.
struct Violation {
    std::vector<std::size_t> k_terms;
    std::vector<std::size_t> l_terms;
    std::size_t common_sum = 0;
};

/// A witness of kA and lA meeting, or nullopt if A is (k,l)-sum-free.
std::optional<Violation> find_violation(const Subset& a, Int k, Int l);

struct StabilizerResult {
    Subset subgroup;
    Int index = 1;
    /// Set when the input was empty; the full group is returned in that case.
    bool empty_input = false;
};

/// {g : g + S = S}.
StabilizerResult stabilizer(const Subset& s);

struct KneserCheck {
    Int lhs = 0;
    Int rhs = 0;
    bool holds = false;
};

/// Compares |hA| against h|A| - (h-1)|H| with H the stabilizer of hA. A must be non-empty.
KneserCheck kneser_check(const Subset& a, Int h);

}  // namespace klsf
