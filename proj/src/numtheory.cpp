#include "klsf/numtheory.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace klsf {

Int gcd(Int a, Int b) { return std::gcd(a, b); }

std::vector<Int> divisors(Int n) {
    if (n < 1) throw std::invalid_argument("divisors: n must be positive");
    std::vector<Int> small;
    std::vector<Int> large;
    for (Int i = 1; i * i <= n; ++i) {
        if (n % i != 0) continue;
        small.push_back(i);
        if (i != n / i) large.push_back(n / i);
    }
    small.insert(small.end(), large.rbegin(), large.rend());
    return small;
}

std::vector<std::pair<Int, int>> factorize(Int n) {
    if (n < 1) throw std::invalid_argument("factorize: n must be positive");
    std::vector<std::pair<Int, int>> out;
    for (Int p = 2; p * p <= n; ++p) {
        if (n % p != 0) continue;
        int e = 0;
        while (n % p == 0) {
            n /= p;
            ++e;
        }
        out.emplace_back(p, e);
    }
    if (n > 1) out.emplace_back(n, 1);
    return out;
}

Int smallest_prime_factor(Int n) {
    if (n < 2) throw std::invalid_argument("smallest_prime_factor: n must be at least 2");
    for (Int p = 2; p * p <= n; ++p) {
        if (n % p == 0) return p;
    }
    return n;
}

bool is_prime(Int n) { return n >= 2 && smallest_prime_factor(n) == n; }

BezoutPair extended_gcd(Int a, Int b) {
    Int old_r = a, r = b;
    Int old_x = 1, x = 0;
    Int old_y = 0, y = 1;
    while (r != 0) {
        const Int q = old_r / r;
        old_r = std::exchange(r, old_r - q * r);
        old_x = std::exchange(x, old_x - q * x);
        old_y = std::exchange(y, old_y - q * y);
    }
    if (old_r < 0) return {-old_r, -old_x, -old_y};
    return {old_r, old_x, old_y};
}

}  // namespace klsf
