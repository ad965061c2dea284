#include "klsf/abelian.hpp"

#include <algorithm>
#include <charconv>
#include <map>
#include <sstream>
#include <stdexcept>

namespace klsf {

// ---------------------------------------------------------------------------
// GroupSpec
// ---------------------------------------------------------------------------

std::vector<Int> invariant_factors(std::span<const Int> factors) {
    std::map<Int, std::vector<int>> exponents;
    for (Int f : factors) {
        if (f < 1) throw std::invalid_argument("invariant_factors: factors must be positive");
        for (auto [p, e] : factorize(f)) exponents[p].push_back(e);
    }
    std::size_t m = 0;
    for (auto& [p, es] : exponents) {
        std::sort(es.begin(), es.end(), std::greater<>());
        m = std::max(m, es.size());
    }
    // out[m-1] takes the largest prime power of every prime, out[m-2] the next, ...
    std::vector<Int> out(m, 1);
    for (const auto& [p, es] : exponents) {
        for (std::size_t j = 0; j < es.size(); ++j) {
            Int pe = 1;
            for (int t = 0; t < es[j]; ++t) pe *= p;
            out[m - 1 - j] *= pe;
        }
    }
    return out;
}

GroupSpec GroupSpec::make(std::vector<Int> factors, Canonicalize canon) {
    if (factors.empty()) throw std::invalid_argument("group: empty factor list");
    for (Int f : factors) {
        if (f < 1) throw std::invalid_argument("group: factors must be positive, got " + std::to_string(f));
    }
    std::erase(factors, Int{1});
    if (canon == Canonicalize::yes) factors = invariant_factors(factors);
    if (factors.empty()) throw std::invalid_argument("group: order must exceed 1");
    for (std::size_t i = 0; i + 1 < factors.size(); ++i) {
        if (factors[i + 1] % factors[i] != 0) {
            throw std::invalid_argument("group: factors must form a divisibility chain (" +
                                        std::to_string(factors[i]) + " does not divide " +
                                        std::to_string(factors[i + 1]) + "); canonicalize first");
        }
    }

    GroupSpec g;
    g.factors_ = std::move(factors);
    g.strides_.assign(g.factors_.size(), 1);
    for (std::size_t i = g.factors_.size() - 1; i > 0; --i) {
        g.strides_[i - 1] = g.strides_[i] * static_cast<std::size_t>(g.factors_[i]);
    }
    g.n_ = 1;
    for (Int f : g.factors_) g.n_ *= f;
    g.v_ = g.factors_.back();
    return g;
}

GroupSpec make_group(std::vector<Int> factors, Canonicalize canon) {
    return GroupSpec::make(std::move(factors), canon);
}

std::size_t GroupSpec::index_of(const Element& x) const {
    if (x.coords.size() != factors_.size()) {
        throw std::invalid_argument("element has " + std::to_string(x.coords.size()) + " coordinates, group has " +
                                    std::to_string(factors_.size()));
    }
    std::size_t idx = 0;
    for (std::size_t i = 0; i < factors_.size(); ++i) {
        if (x.coords[i] < 0 || x.coords[i] >= factors_[i]) {
            throw std::invalid_argument("element coordinate out of range");
        }
        idx += static_cast<std::size_t>(x.coords[i]) * strides_[i];
    }
    return idx;
}

Element GroupSpec::element_at(std::size_t index) const {
    if (index >= size()) throw std::out_of_range("element index out of range");
    Element e;
    e.coords.reserve(factors_.size());
    for (std::size_t i = 0; i < factors_.size(); ++i) e.coords.push_back(coord(index, i));
    return e;
}

std::size_t GroupSpec::add(std::size_t x, std::size_t y) const {
    std::size_t idx = 0;
    for (std::size_t i = 0; i < factors_.size(); ++i) {
        idx += static_cast<std::size_t>((coord(x, i) + coord(y, i)) % factors_[i]) * strides_[i];
    }
    return idx;
}

std::size_t GroupSpec::neg(std::size_t x) const { return scale(-1, x); }

std::size_t GroupSpec::scale(Int h, std::size_t x) const {
    std::size_t idx = 0;
    for (std::size_t i = 0; i < factors_.size(); ++i) {
        const Int d = factors_[i];
        // reduce h first so the product cannot overflow
        idx += static_cast<std::size_t>(mod_floor(mod_floor(h, d) * coord(x, i), d)) * strides_[i];
    }
    return idx;
}

Int GroupSpec::element_order(std::size_t x) const {
    Int ord = 1;
    for (std::size_t i = 0; i < factors_.size(); ++i) {
        const Int d = factors_[i];
        const Int oi = d / gcd(coord(x, i), d);
        ord = ord / gcd(ord, oi) * oi;
    }
    return ord;
}

Bitset GroupSpec::translate(const Bitset& set, std::size_t x) const {
    if (set.size() != size()) throw std::invalid_argument("translate: bitset size does not match group order");
    Bitset cur = set;
    for (std::size_t i = 0; i < factors_.size(); ++i) {
        const Int s = coord(x, i);
        if (s == 0) continue;
        // Translation along axis i rotates every block of stride*d bits by s*stride.
        const std::size_t block = strides_[i] * static_cast<std::size_t>(factors_[i]);
        const std::size_t shift = static_cast<std::size_t>(s) * strides_[i];
        Bitset next(size());
        for (std::size_t base = 0; base < size(); base += block) {
            next.or_range(base + shift, cur, base, block - shift);
            next.or_range(base, cur, base + block - shift, shift);
        }
        cur = std::move(next);
    }
    return cur;
}

std::string GroupSpec::to_string() const {
    std::string s;
    for (std::size_t i = 0; i < factors_.size(); ++i) {
        if (i) s += 'x';
        s += std::to_string(factors_[i]);
    }
    return s;
}

std::string GroupSpec::format_element(std::size_t index) const {
    if (is_cyclic()) return std::to_string(index);
    std::string s = "(";
    for (std::size_t i = 0; i < factors_.size(); ++i) {
        if (i) s += ',';
        s += std::to_string(coord(index, i));
    }
    return s + ")";
}

namespace {

void require_member(const GroupSpec& g, const Element& x) { (void)g.index_of(x); }

}  // namespace

Element add(const GroupSpec& g, const Element& x, const Element& y) {
    require_member(g, x);
    require_member(g, y);
    return g.element_at(g.add(g.index_of(x), g.index_of(y)));
}

Element scale(const GroupSpec& g, Int h, const Element& x) { return g.element_at(g.scale(h, g.index_of(x))); }

Element neg(const GroupSpec& g, const Element& x) { return g.element_at(g.neg(g.index_of(x))); }

// ---------------------------------------------------------------------------
// Subset
// ---------------------------------------------------------------------------

Subset::Subset(GroupSpec group, Bitset bits) : group_(std::move(group)), bits_(std::move(bits)) {
    if (bits_.size() != group_.size()) throw std::invalid_argument("Subset: bitset size does not match group order");
}

Subset Subset::from_indices(const GroupSpec& group, std::span<const std::size_t> indices) {
    Subset s(group);
    for (auto i : indices) s.insert(i);
    return s;
}

Subset Subset::from_elements(const GroupSpec& group, std::span<const Element> elements) {
    Subset s(group);
    for (const auto& e : elements) s.insert(group.index_of(e));
    return s;
}

Subset Subset::full(const GroupSpec& group) {
    Subset s(group);
    s.bits_.set_all();
    return s;
}

void Subset::insert(std::size_t x) {
    if (x >= group_.size()) throw std::out_of_range("Subset: element index out of range");
    bits_.set(x);
}

void Subset::erase(std::size_t x) {
    if (x >= group_.size()) throw std::out_of_range("Subset: element index out of range");
    bits_.reset(x);
}

std::vector<std::size_t> Subset::members() const {
    std::vector<std::size_t> out;
    out.reserve(size());
    bits_.for_each([&](std::size_t i) { out.push_back(i); });
    return out;
}

Subset Subset::negate() const {
    Subset out(group_);
    bits_.for_each([&](std::size_t i) { out.bits_.set(group_.neg(i)); });
    return out;
}

void Subset::require_same_group(const Subset& other) const {
    if (!(group_ == other.group_)) {
        throw std::invalid_argument("subsets belong to different groups (" + group_.to_string() + " vs " +
                                    other.group_.to_string() + ")");
    }
}

Subset& Subset::operator|=(const Subset& other) {
    require_same_group(other);
    bits_ |= other.bits_;
    return *this;
}

Subset& Subset::operator&=(const Subset& other) {
    require_same_group(other);
    bits_ &= other.bits_;
    return *this;
}

std::string Subset::to_string() const {
    std::string s = "{";
    bool first = true;
    bits_.for_each([&](std::size_t i) {
        if (!first) s += ", ";
        first = false;
        s += group_.format_element(i);
    });
    return s + "}";
}

// ---------------------------------------------------------------------------
// Divisors, parsing, enumeration, lifting
// ---------------------------------------------------------------------------

DivisorSet divisor_sets(Int n, KLParams kl) {
    if (n < 2) throw std::invalid_argument("divisor_sets: n must be at least 2");
    kl = KLParams::make(kl.k, kl.l);
    DivisorSet ds;
    ds.all = divisors(n);
    for (Int d : ds.all) {
        if (d == 1) continue;
        ds.gt1.push_back(d);
        (kl.difference() % d == 0 ? ds.d2 : ds.d1).push_back(d);
    }
    if (!ds.d1.empty()) ds.rho1 = ds.d1.front();
    if (!ds.d2.empty()) ds.rho2 = ds.d2.front();
    return ds;
}

GroupSpec parse_group(std::string_view text, Canonicalize canon) {
    if (text.empty()) throw std::invalid_argument("group spec is empty");
    std::vector<Int> factors;
    std::size_t pos = 0;
    while (true) {
        const std::size_t sep = text.find('x', pos);
        const std::string_view tok = text.substr(pos, sep == std::string_view::npos ? std::string_view::npos : sep - pos);
        Int value = 0;
        const auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), value);
        if (tok.empty() || ec != std::errc{} || ptr != tok.data() + tok.size()) {
            throw std::invalid_argument("malformed group spec '" + std::string(text) +
                                        "' (expected e.g. \"10\" or \"2x4x8\")");
        }
        factors.push_back(value);
        if (sep == std::string_view::npos) break;
        pos = sep + 1;
    }
    return GroupSpec::make(std::move(factors), canon);
}

namespace {

void extend_chains(Int prev, Int remaining, std::vector<Int>& chain, std::vector<std::vector<Int>>& out) {
    if (remaining == 1) {
        out.push_back(chain);
        return;
    }
    for (Int d : divisors(remaining)) {
        if (d < 2 || d % prev != 0) continue;
        // every later factor is a multiple of d, so d must divide what is left after it
        if ((remaining / d) % d != 0 && remaining != d) continue;
        chain.push_back(d);
        extend_chains(d, remaining / d, chain, out);
        chain.pop_back();
    }
}

}  // namespace

std::vector<GroupSpec> abelian_groups_of_order(Int n) {
    if (n < 2) throw std::invalid_argument("abelian_groups_of_order: n must be at least 2");
    std::vector<std::vector<Int>> chains;
    std::vector<Int> chain;
    extend_chains(1, n, chain, chains);
    std::sort(chains.begin(), chains.end(), [](const auto& a, const auto& b) {
        if (a.size() != b.size()) return a.size() < b.size();
        return a < b;
    });
    std::vector<GroupSpec> out;
    out.reserve(chains.size());
    for (auto& c : chains) out.push_back(GroupSpec::make(std::move(c)));
    return out;
}

Subset cyclic_quotient_lift(const GroupSpec& g, Int d, std::span<const Int> residues) {
    if (d < 1 || g.exponent() % d != 0) {
        throw std::invalid_argument("cyclic_quotient_lift: " + std::to_string(d) + " does not divide the exponent " +
                                    std::to_string(g.exponent()));
    }
    std::vector<bool> wanted(static_cast<std::size_t>(d), false);
    for (Int r : residues) {
        if (r < 0 || r >= d) throw std::invalid_argument("cyclic_quotient_lift: residue out of range");
        wanted[static_cast<std::size_t>(r)] = true;
    }
    Subset out(g);
    const std::size_t last = g.rank() - 1;
    for (std::size_t x = 0; x < g.size(); ++x) {
        if (wanted[static_cast<std::size_t>(g.coord(x, last) % d)]) out.insert(x);
    }
    return out;
}

Subset cyclic_quotient_lift(const GroupSpec& g, const Subset& residues) {
    if (!residues.group().is_cyclic()) throw std::invalid_argument("cyclic_quotient_lift: base group must be cyclic");
    std::vector<Int> rs;
    for (auto i : residues.members()) rs.push_back(static_cast<Int>(i));
    return cyclic_quotient_lift(g, residues.group().order(), rs);
}

}  // namespace klsf
