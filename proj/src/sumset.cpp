#include "klsf/sumset.hpp"

#include <stdexcept>
#include <string>

#include "klsf/kl_params.hpp"

namespace klsf {

namespace {

void require_positive(Int h, const char* what) {
    if (h < 1) throw std::invalid_argument(std::string(what) + ": h must be at least 1");
}

}  // namespace

Subset pair_sumset(const Subset& a, const Subset& b) {
    if (!(a.group() == b.group())) {
        throw std::invalid_argument("pair_sumset: subsets belong to different groups");
    }
    const GroupSpec& g = a.group();
    // iterate over the smaller operand
    const Subset& small = a.size() <= b.size() ? a : b;
    const Subset& large = a.size() <= b.size() ? b : a;
    Bitset out(g.size());
    small.bits().for_each([&](std::size_t x) { out |= g.translate(large.bits(), x); });
    return Subset(g, std::move(out));
}

Subset h_fold(const Subset& a, Int h) {
    require_positive(h, "h_fold");
    std::optional<Subset> result;
    Subset power = a;
    while (true) {
        if (h & 1) result = result ? pair_sumset(*result, power) : power;
        h >>= 1;
        if (h == 0) break;
        power = pair_sumset(power, power);
    }
    return *result;
}

Subset h_fold_naive(const Subset& a, Int h) {
    require_positive(h, "h_fold_naive");
    Subset out = a;
    for (Int i = 1; i < h; ++i) out = pair_sumset(out, a);
    return out;
}

Subset difference_sumset(const Subset& a, Int k, Int l) {
    const auto kl = KLParams::make(k, l);
    return pair_sumset(h_fold(a, kl.k), h_fold(a.negate(), kl.l));
}

bool is_kl_sum_free(const Subset& a, Int k, Int l) {
    const auto kl = KLParams::make(k, l);
    if (a.empty()) return true;
    return !h_fold(a, kl.k).bits().intersects(h_fold(a, kl.l).bits());
}

bool is_kl_sum_free_by_difference(const Subset& a, Int k, Int l) {
    const auto kl = KLParams::make(k, l);
    if (a.empty()) return true;
    return !difference_sumset(a, kl.k, kl.l).contains(0);
}

std::optional<Violation> find_violation(const Subset& a, Int k, Int l) {
    const auto kl = KLParams::make(k, l);
    const GroupSpec& g = a.group();
    const std::size_t n = g.size();
    const auto members = a.members();
    if (members.empty()) return std::nullopt;

    // layers[h][s] = last summand of one h-term representation of s, or n if s is not in hA
    std::vector<std::vector<std::size_t>> layers(static_cast<std::size_t>(kl.k) + 1, std::vector<std::size_t>(n, n));
    for (auto x : members) layers[1][x] = x;
    for (std::size_t h = 2; h <= static_cast<std::size_t>(kl.k); ++h) {
        for (std::size_t s = 0; s < n; ++s) {
            if (layers[h - 1][s] == n) continue;
            for (auto x : members) {
                const std::size_t t = g.add(s, x);
                if (layers[h][t] == n) layers[h][t] = x;
            }
        }
    }
    auto unwind = [&](std::size_t h, std::size_t s) {
        std::vector<std::size_t> terms;
        for (; h >= 1; --h) {
            const std::size_t x = layers[h][s];
            terms.push_back(x);
            s = g.add(s, g.neg(x));
        }
        return terms;
    };
    const auto kk = static_cast<std::size_t>(kl.k);
    const auto ll = static_cast<std::size_t>(kl.l);
    for (std::size_t s = 0; s < n; ++s) {
        if (layers[kk][s] != n && layers[ll][s] != n) return Violation{unwind(kk, s), unwind(ll, s), s};
    }
    return std::nullopt;
}

StabilizerResult stabilizer(const Subset& s) {
    const GroupSpec& g = s.group();
    if (s.empty()) return StabilizerResult{Subset::full(g), 1, true};
    Subset h(g);
    const std::size_t sz = s.size();
    for (std::size_t x = 0; x < g.size(); ++x) {
        // |H| divides n and |S| is a union of H-cosets, so ord(x) must divide |S|
        if (static_cast<Int>(sz) % g.element_order(x) != 0) continue;
        if (g.translate(s.bits(), x) == s.bits()) h.insert(x);
    }
    return StabilizerResult{h, g.order() / static_cast<Int>(h.size()), false};
}

KneserCheck kneser_check(const Subset& a, Int h) {
    require_positive(h, "kneser_check");
    if (a.empty()) throw std::invalid_argument("kneser_check: A must be non-empty");
    const Subset ha = h_fold(a, h);
    const auto stab = stabilizer(ha);
    KneserCheck r;
    r.lhs = static_cast<Int>(ha.size());
    r.rhs = h * static_cast<Int>(a.size()) - (h - 1) * static_cast<Int>(stab.subgroup.size());
    r.holds = r.lhs >= r.rhs;
    return r;
}

}  // namespace klsf
