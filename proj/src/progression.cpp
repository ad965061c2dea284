#include "klsf/progression.hpp"

#include <algorithm>

namespace klsf::oracle {

bool progression_is_sum_free(const Progression& p, KLParams kl) {
    if (p.length <= 0) return true;
    const Int n = p.modulus;
    const Int c = p.length - 1;
    const Int base = mod_floor(kl.difference() * mod_floor(p.start, n), n);
    const Int step = mod_floor(p.difference, n);
    for (Int i = -kl.l * c; i <= kl.k * c; ++i) {
        if (mod_floor(base + mod_floor(i, n) * step, n) == 0) return false;
    }
    return true;
}

ProgressionSearch progression_search(Int n, KLParams kl, Int limit, bool force) {
    if (n < 1) throw std::invalid_argument("progression_search: n must be positive");
    if (!force && n > limit) throw LimitExceeded("progression search", n, limit);
    kl = KLParams::make(kl.k, kl.l);

    ProgressionSearch out;
    auto offer = [](Int& best, std::optional<Progression>& slot, const Progression& p) {
        if (p.length > best) {
            best = p.length;
            slot = p;
        }
    };

    for (Int diff = 0; diff < n; ++diff) {
        const Int g = gcd(diff, n);  // gcd(0, n) = n
        const Int period = n / g;    // order of diff
        const Int inv = period > 1 ? mod_floor(extended_gcd(diff / g, period).x, period) : 0;
        for (Int a = 0; a < n; ++a) {
            const Int t = mod_floor(kl.difference() * a, n);
            if (t == 0) continue;  // k*a = l*a already
            Int c = period - 1;
            if (t % g == 0) {
                // t + i*diff = 0 (mod n) exactly for i = i0 (mod period), 0 < i0 < period
                const Int i0 = mod_floor(mod_floor(-(t / g), period) * inv, period);
                c = std::min({c, (i0 - 1) / kl.k, (period - i0 - 1) / kl.l});
            }
            const Progression p{n, a, diff, c + 1};
            offer(out.alpha, out.best_alpha, p);
            if (g > 1) offer(out.beta, out.best_beta, p);
            if (g == 1) offer(out.gamma, out.best_gamma, p);
        }
    }
    return out;
}

Int alpha_exact(Int n, KLParams kl, Int limit, bool force) { return progression_search(n, kl, limit, force).alpha; }
Int beta_exact(Int n, KLParams kl, Int limit, bool force) { return progression_search(n, kl, limit, force).beta; }
Int gamma_exact(Int n, KLParams kl, Int limit, bool force) { return progression_search(n, kl, limit, force).gamma; }

}  // namespace klsf::oracle
