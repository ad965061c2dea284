#include "klsf/witness.hpp"

#include <stdexcept>

#include "klsf/formulas.hpp"
#include "klsf/sumset.hpp"

namespace klsf::witness {

namespace {

void self_verify(const Subset& s, KLParams kl, const std::string& what) {
    if (!is_kl_sum_free(s, kl.k, kl.l)) {
        throw std::logic_error(what + " produced a set that is not (" + std::to_string(kl.k) + "," +
                               std::to_string(kl.l) + ")-sum-free: " + s.to_string());
    }
}

}  // namespace

std::vector<Int> APWitness::elements() const {
    std::vector<Int> out;
    out.reserve(static_cast<std::size_t>(length));
    for (Int i = 0; i < length; ++i) out.push_back(mod_floor(start + i * difference, modulus));
    return out;
}

Subset APWitness::to_subset() const {
    const auto g = GroupSpec::cyclic(modulus);
    Subset s(g);
    for (Int x : elements()) s.insert(static_cast<std::size_t>(x));
    return s;
}

bool APWitness::certificate_holds() const {
    if (!certificate) return true;
    const auto& cert = *certificate;
    const Int c = length - 1;
    const Int dl = formulas::delta(modulus, kl);
    const bool euclid = kl.l * c == dl * cert.q - cert.r && 1 <= cert.r && cert.r <= dl;
    const bool bezout = dl == kl.difference() * cert.u + modulus * cert.w;
    const bool start_ok = start == mod_floor(cert.u * cert.q, modulus);
    return euclid && bezout && start_ok;
}

APWitness ap_witness(Int d, KLParams kl, Int c) {
    kl = KLParams::make(kl.k, kl.l);
    if (d < 1 || c < 0) throw std::invalid_argument("ap_witness: need d >= 1 and c >= 0");
    const Int dl = formulas::delta(d, kl);
    if (kl.total() * c > d - 1 - dl) {
        throw std::invalid_argument("ap_witness: (k+l)*c = " + std::to_string(kl.total() * c) + " exceeds d-1-delta(d) = " +
                                    std::to_string(d - 1 - dl));
    }

    Certificate cert;
    // smallest q with delta*q > l*c; then r = delta*q - l*c lands in [1, delta]
    cert.q = floor_div(kl.l * c, dl) + 1;
    cert.r = dl * cert.q - kl.l * c;
    if (cert.r < 1 || cert.r > dl) throw std::logic_error("ap_witness: Euclid step out of range");

    const auto bz = extended_gcd(kl.difference(), d);
    if (bz.gcd != dl) throw std::logic_error("ap_witness: Bezout gcd mismatch");
    cert.u = mod_floor(bz.x, d);
    cert.w = (dl - kl.difference() * cert.u) / d;

    APWitness w;
    w.modulus = d;
    w.start = mod_floor(cert.u * cert.q, d);
    w.difference = 1;
    w.length = c + 1;
    w.kl = kl;
    w.kind = ProgressionKind::interval;
    w.certificate = cert;
    if (!w.certificate_holds()) throw std::logic_error("ap_witness: certificate equations fail");
    const Subset s = w.to_subset();
    if (static_cast<Int>(s.size()) != w.length) throw std::logic_error("ap_witness: progression has repeated terms");
    self_verify(s, kl, "ap_witness");
    return w;
}

std::optional<APWitness> ap_witness_max(Int d, KLParams kl) {
    kl = KLParams::make(kl.k, kl.l);
    const Int room = d - 1 - formulas::delta(d, kl);
    if (room < 0) return std::nullopt;
    return ap_witness(d, kl, room / kl.total());
}

CosetWitness coset_witness(Int n, Int d, KLParams kl) {
    kl = KLParams::make(kl.k, kl.l);
    if (n < 2 || d < 2 || n % d != 0 || kl.difference() % d == 0) {
        throw std::invalid_argument("coset_union_witness: d = " + std::to_string(d) +
                                    " must divide n, exceed 1 and not divide k-l");
    }
    const auto g = GroupSpec::cyclic(n);
    Subset s(g);
    for (Int i = 0; i < n / d; ++i) s.insert(static_cast<std::size_t>((1 + i * d) % n));
    self_verify(s, kl, "coset_union_witness");
    return CosetWitness{n, d, kl, std::move(s)};
}

Subset coset_union_witness(Int n, Int d, KLParams kl) { return coset_witness(n, d, kl).members; }

APWitness six_mod_eight_witness(Int n) {
    if (n < 2 || n % 8 != 6 || n % 3 == 0) {
        throw std::invalid_argument("six_mod_eight_witness: need n = 6 (mod 8) and 3 not dividing n, got " +
                                    std::to_string(n));
    }
    APWitness w;
    w.modulus = n;
    w.start = (n + 2) / 8;
    w.difference = 1;
    w.length = (n - 2) / 4 + 1;
    w.kl = KLParams{3, 1};
    w.kind = ProgressionKind::case_6_mod_8;
    self_verify(w.to_subset(), w.kl, "six_mod_eight_witness");
    return w;
}

LiftedWitness lift_witness(const Subset& base, const GroupSpec& g, KLParams kl) {
    kl = KLParams::make(kl.k, kl.l);
    if (!base.group().is_cyclic()) throw std::invalid_argument("lift_witness: base must live in a cyclic group");
    const Int d = base.group().order();
    if (g.exponent() % d != 0) {
        throw std::invalid_argument("lift_witness: " + std::to_string(d) + " does not divide the exponent " +
                                    std::to_string(g.exponent()));
    }
    if (!is_kl_sum_free(base, kl.k, kl.l)) {
        throw std::invalid_argument("lift_witness: base set " + base.to_string() + " is not sum-free");
    }
    LiftedWitness out{base, d, static_cast<Int>(base.size()), g, cyclic_quotient_lift(g, base)};
    if (static_cast<Int>(out.members.size()) != out.base_size * (g.order() / d)) {
        throw std::logic_error("lift_witness: lifted size mismatch");
    }
    self_verify(out.members, kl, "lift_witness");
    return out;
}

LiftedWitness lift_witness(const APWitness& base, const GroupSpec& g) {
    auto out = lift_witness(base.to_subset(), g, base.kl);
    out.base = base;
    return out;
}

LiftedWitness best_witness(const GroupSpec& g, KLParams kl) {
    kl = KLParams::make(kl.k, kl.l);
    const Int n = g.order();
    std::optional<APWitness> best;
    Int best_size = 0;
    if (kl.difference() % g.exponent() != 0) {
        for (Int d : divisors(g.exponent())) {
            auto w = ap_witness_max(d, kl);
            if (!w) continue;
            const Int size = w->length * (n / d);
            if (size > best_size) {
                best_size = size;
                best = std::move(w);
            }
        }
    }
    if (!best) return LiftedWitness{std::monostate{}, 1, 0, g, Subset(g)};
    return lift_witness(*best, g);
}

std::string describe(const LiftedWitness& w) {
    std::string s;
    if (const auto* ap = std::get_if<APWitness>(&w.base)) {
        const Int last = mod_floor(ap->start + (ap->length - 1) * ap->difference, ap->modulus);
        s = "progression {" + std::to_string(ap->start);
        if (ap->length == 2) s += ", " + std::to_string(last);
        if (ap->length > 2) s += ", ..., " + std::to_string(last);
        s += "} in Z_" + std::to_string(ap->modulus);
        if (ap->certificate) {
            const auto& c = *ap->certificate;
            s += " (q=" + std::to_string(c.q) + ", r=" + std::to_string(c.r) + ", u=" + std::to_string(c.u) +
                 ", w=" + std::to_string(c.w) + ")";
        }
    } else if (const auto* cw = std::get_if<CosetWitness>(&w.base)) {
        s = "coset progression step " + std::to_string(cw->step) + " in Z_" + std::to_string(cw->modulus);
    } else if (const auto* set = std::get_if<Subset>(&w.base)) {
        s = "set " + set->to_string() + " in Z_" + std::to_string(w.base_modulus);
    } else {
        return "empty set (no singleton is sum-free)";
    }
    if (!w.group.is_cyclic() || w.group.order() != w.base_modulus) {
        s += " lifted to " + w.group.to_string() + " along last coordinate mod " + std::to_string(w.base_modulus);
    }
    return s;
}

}  // namespace klsf::witness
