#pragma once

// Exhaustive search over arithmetic progressions in Z_n.

#include <optional>

#include "klsf/kl_params.hpp"
#include "klsf/limits.hpp"
#include "klsf/numtheory.hpp"

namespace klsf::oracle {

/// {start, start + difference, ..., start + (length-1) * difference} in Z_modulus.
struct Progression {
    Int modulus = 1;
    Int start = 0;
    Int difference = 0;
    Int length = 0;

    bool operator==(const Progression&) const = default;
};

/// Tests 0 not in {(k-l)*start + i*difference : -l*c <= i <= k*c} with c = length-1.
bool progression_is_sum_free(const Progression& p, KLParams kl);

struct ProgressionSearch {
    Int alpha = 0;  // any difference
    Int beta = 0;   // gcd(difference, n) > 1
    Int gamma = 0;  // gcd(difference, n) = 1
    std::optional<Progression> best_alpha;
    std::optional<Progression> best_beta;
    std::optional<Progression> best_gamma;
};

/// Longest (k,l)-sum-free progressions of each kind. Ties keep the first triple in
/// (difference, start) order. O(n^2).
ProgressionSearch progression_search(Int n, KLParams kl, Int limit = Limits{}.progression, bool force = false);

Int alpha_exact(Int n, KLParams kl, Int limit = Limits{}.progression, bool force = false);
Int beta_exact(Int n, KLParams kl, Int limit = Limits{}.progression, bool force = false);
Int gamma_exact(Int n, KLParams kl, Int limit = Limits{}.progression, bool force = false);

}  // namespace klsf::oracle
