#pragma once

// Integer helpers shared by the group, formula and witness code.

#include <cstdint>
#include <utility>
#include <vector>

namespace klsf {

using Int = std::int64_t;

/// Floor division for signed operands; `den` must be positive.
constexpr Int floor_div(Int num, Int den) {
    Int q = num / den;
    if ((num % den != 0) && (num < 0)) --q;
    return q;
}

/// Representative of `x` in [0, m).
constexpr Int mod_floor(Int x, Int m) {
    Int r = x % m;
    return r < 0 ? r + m : r;
}

Int gcd(Int a, Int b);

/// Sorted list of all positive divisors of n (n >= 1).
std::vector<Int> divisors(Int n);

/// Prime factorisation as (prime, exponent) pairs, primes ascending.
std::vector<std::pair<Int, int>> factorize(Int n);

/// Smallest prime dividing n (n >= 2).
Int smallest_prime_factor(Int n);

bool is_prime(Int n);

struct BezoutPair {
    Int gcd;
    Int x;
    Int y;
};

/// Extended Euclid: returns g = gcd(a, b) >= 0 together with x, y such that a*x + b*y = g.
BezoutPair extended_gcd(Int a, Int b);

}  // namespace klsf
