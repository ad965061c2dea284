#pragma once

#include <optional>
#include <span>
#include <string_view>
#include <vector>

#include "klsf/group.hpp"
#include "klsf/kl_params.hpp"
#include "klsf/subset.hpp"

namespace klsf {

/// Divisors of n split by whether they divide k - l.
struct DivisorSet {
    std::vector<Int> all;     // every positive divisor, ascending
    std::vector<Int> gt1;     // D(n)
    std::vector<Int> d1;      // D1(n): members of D(n) not dividing k-l
    std::vector<Int> d2;      // D2(n): members of D(n) dividing k-l
    std::optional<Int> rho1;  // min D1(n)
    std::optional<Int> rho2;  // min D2(n)
};

DivisorSet divisor_sets(Int n, KLParams kl);

/// Parses "10" or "2x4x8". Non-chain lists are rejected unless `canon` is yes.
GroupSpec parse_group(std::string_view text, Canonicalize canon = Canonicalize::no);

/// Every abelian group of order n, one per invariant-factor chain, in a fixed order
/// (fewer factors first, then lexicographic).
std::vector<GroupSpec> abelian_groups_of_order(Int n);

/// Preimage of `residues` under G -> Z_d, x |-> (last coordinate of x) mod d.
/// Throws std::invalid_argument unless d divides the exponent of g.
Subset cyclic_quotient_lift(const GroupSpec& g, Int d, std::span<const Int> residues);
/// Same, with the residues given as a subset of Z_d.
Subset cyclic_quotient_lift(const GroupSpec& g, const Subset& residues);

}  // namespace klsf
