#pragma once

/**
 * Explicit (k,l)-sum-free sets realising the constructive lower bounds.
 *
 * Every constructor checks its output with is_kl_sum_free before returning
 * and throws std::logic_error if that check fails.
 */

#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "klsf/abelian.hpp"
#include "klsf/kl_params.hpp"

namespace klsf::witness {

/// Euclid/Bezout data behind an interval construction:
/// l*c = delta*q - r with 1 <= r <= delta, delta = (k-l)*u + d*w, start = u*q mod d.
struct Certificate {
    Int q = 0;
    Int r = 0;
    Int u = 0;
    Int w = 0;
};

enum class ProgressionKind {
    interval,      // {a, ..., a+c} from the Euclid/Bezout construction
    case_6_mod_8,  // (3,1), n = 6 mod 8, 3 does not divide n
};

struct APWitness {
    Int modulus = 1;
    Int start = 0;
    Int difference = 1;
    Int length = 0;  // c + 1
    KLParams kl;
    ProgressionKind kind = ProgressionKind::interval;
    std::optional<Certificate> certificate;

    std::vector<Int> elements() const;
    Subset to_subset() const;
    /// Certificate equations hold (true for witnesses without a certificate).
    bool certificate_holds() const;
};

/// {1 + i*d : 0 <= i < n/d} in Z_n for d dividing n but not k-l.
struct CosetWitness {
    Int modulus = 1;
    Int step = 1;
    KLParams kl;
    Subset members;
};

struct LiftedWitness {
    /// What was lifted: a progression, a coset, an explicit set, or nothing (size 0).
    std::variant<std::monostate, APWitness, CosetWitness, Subset> base;
    Int base_modulus = 1;
    Int base_size = 0;
    GroupSpec group;
    Subset members;
};

/// Interval of length c+1 in Z_d; requires (k+l)*c <= d - 1 - delta(d).
APWitness ap_witness(Int d, KLParams kl, Int c);

/// Longest admissible interval, or nullopt when d - 1 - delta(d) < 0.
std::optional<APWitness> ap_witness_max(Int d, KLParams kl);

Subset coset_union_witness(Int n, Int d, KLParams kl);
CosetWitness coset_witness(Int n, Int d, KLParams kl);

/// {a, ..., a+c} with a = (n+2)/8, c = (n-2)/4; requires n = 6 (mod 8) and 3 not dividing n.
APWitness six_mod_eight_witness(Int n);

/// Pulls a (k,l)-sum-free subset of Z_d back to g along the last coordinate mod d.
LiftedWitness lift_witness(const Subset& base, const GroupSpec& g, KLParams kl);
LiftedWitness lift_witness(const APWitness& base, const GroupSpec& g);

/// Largest lifted interval over d | v; ties go to the smallest d.
LiftedWitness best_witness(const GroupSpec& g, KLParams kl);

std::string describe(const LiftedWitness& w);

}  // namespace klsf::witness
