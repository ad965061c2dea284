#include "klsf/formulas.hpp"

#include <algorithm>

#include "klsf/progression.hpp"

namespace klsf::formulas {

namespace {

void require_order(Int n, const char* what) {
    if (n < 2) throw std::invalid_argument(std::string(what) + ": n must be at least 2");
}

KLParams checked(KLParams kl) { return KLParams::make(kl.k, kl.l); }

void check_agree(Int a, Int b, const std::string& what) {
    if (a != b) {
        throw std::logic_error(what + ": closed forms disagree (" + std::to_string(a) + " vs " + std::to_string(b) +
                               ")");
    }
}

/// Smallest prime factor of n congruent to `residue` mod `modulus`.
std::optional<Int> smallest_prime_in_class(Int n, Int residue, Int modulus) {
    for (auto [p, e] : factorize(n)) {
        if (p % modulus == residue) return p;
    }
    return std::nullopt;
}

}  // namespace

Int delta(Int d, KLParams kl) {
    if (d < 1) throw std::invalid_argument("delta: d must be positive");
    return gcd(d, checked(kl).difference());
}

Int lower_term(Int d, Int n, KLParams kl) {
    const Int t = floor_div(d - 1 - delta(d, kl), kl.total()) + 1;
    return std::max<Int>(t, 0) * (n / d);
}

Int upper_term(Int d, Int n, KLParams kl) {
    const Int t = floor_div(d - 2, kl.total()) + 1;
    return std::max<Int>(t, 0) * (n / d);
}

BoundReport lambda_bounds_general(const GroupSpec& g, KLParams kl) {
    kl = checked(kl);
    const Int n = g.order();
    const Int v = g.exponent();
    BoundReport r;
    for (Int d : divisors(v)) {
        const Int t = lower_term(d, n, kl);
        r.lower_terms[d] = t;
        if (t > r.lower) {
            r.lower = t;
            r.argmax_lower = d;
        }
    }
    if (kl.difference() % v == 0) {
        r.exponent_divides_difference = true;
        r.lower = 0;
        r.upper = 0;
        r.argmax_lower = 1;
        return r;
    }
    for (Int d : divisors(n)) {
        const Int t = upper_term(d, n, kl);
        r.upper_terms[d] = t;
        if (t > r.upper) {
            r.upper = t;
            r.argmax_upper = d;
        }
    }
    return r;
}

// ---------------------------------------------------------------------------

Int lambda_cyclic_21_max_form(Int n) {
    require_order(n, "lambda_cyclic_21");
    Int best = 0;
    for (Int d : divisors(n)) best = std::max(best, (d + 1) / 3 * (n / d));
    return best;
}

Int lambda_cyclic_21_case_form(Int n) {
    require_order(n, "lambda_cyclic_21");
    if (auto p = smallest_prime_in_class(n, 2, 3)) return (*p + 1) / 3 * (n / *p);
    return n / 3;
}

Int lambda_cyclic_21(Int n) {
    const Int value = lambda_cyclic_21_max_form(n);
    check_agree(value, lambda_cyclic_21_case_form(n), "lambda_cyclic_21(" + std::to_string(n) + ")");
    return value;
}

Int lambda_cyclic_31_max_form(Int n) {
    require_order(n, "lambda_cyclic_31");
    Int best = 0;
    for (Int d : divisors(n)) {
        if (d % 4 == 2) continue;
        best = std::max(best, (d + 2) / 4 * (n / d));
    }
    return best;
}

Int lambda_cyclic_31_case_form(Int n) {
    require_order(n, "lambda_cyclic_31");
    if (auto p = smallest_prime_in_class(n, 3, 4)) return (*p + 1) / 4 * (n / *p);
    return n / 4;
}

Int lambda_cyclic_31(Int n) {
    const Int value = lambda_cyclic_31_max_form(n);
    check_agree(value, lambda_cyclic_31_case_form(n), "lambda_cyclic_31(" + std::to_string(n) + ")");
    return value;
}

Int alpha_21(Int n) {
    require_order(n, "alpha_21");
    return n % 2 == 0 ? n / 2 : (n + 1) / 3;
}

Int alpha_31(Int n) {
    require_order(n, "alpha_31");
    if (n % 3 == 0) return n / 3;
    if (n % 8 != 2) return (n + 2) / 4;
    return (n - 2) / 4;
}

// ---------------------------------------------------------------------------

std::string to_string(CaseTag tag) {
    switch (tag) {
        case CaseTag::divides: return "divides";
        case CaseTag::coprime: return "coprime";
        case CaseTag::intermediate: return "intermediate";
    }
    return "?";
}

CaseTag case_of(Int n, KLParams kl) {
    kl = checked(kl);
    if (kl.difference() % n == 0) return CaseTag::divides;
    if (gcd(n, kl.difference()) == 1) return CaseTag::coprime;
    return CaseTag::intermediate;
}

BetaReport beta_report(Int n, KLParams kl) {
    require_order(n, "beta_report");
    const CaseTag tag = case_of(n, kl);
    switch (tag) {
        case CaseTag::divides:
            return {{0, 0}, tag};
        case CaseTag::coprime: {
            const Int exact = n / smallest_prime_factor(n);
            return {{exact, exact}, tag};
        }
        case CaseTag::intermediate: {
            const auto ds = divisor_sets(n, kl);
            const Int lower = n / *ds.rho1;
            // a single coset of index rho2 holds at most floor(n / (2 rho2)) elements
            const Int upper = std::max(lower, n / (2 * *ds.rho2));
            return {{lower, upper}, tag};
        }
    }
    throw std::logic_error("beta_report: unreachable");
}

IntBounds gamma_bounds(Int n, KLParams kl) {
    require_order(n, "gamma_bounds");
    kl = checked(kl);
    const Int dl = gcd(n, kl.difference());
    const Int lower = std::max<Int>(floor_div(n - 1 - dl, kl.total()) + 1, 0);
    const Int upper = floor_div(n - 2, kl.total()) + 1;
    return {lower, upper};
}

AlphaReport alpha_report(Int n, KLParams kl) {
    AlphaReport r;
    const auto beta = beta_report(n, kl);
    r.tag = beta.tag;
    r.beta = beta.bounds;
    r.gamma = gamma_bounds(n, kl);
    if (r.tag == CaseTag::divides) {
        r.value = {0, 0};
    } else {
        r.value = {std::max(r.beta.lower, r.gamma.lower), std::max(r.beta.upper, r.gamma.upper)};
    }
    return r;
}

std::optional<Int> alpha_closed_form(Int d, KLParams kl) {
    kl = checked(kl);
    if (d < 1) throw std::invalid_argument("alpha_closed_form: d must be positive");
    if (d == 1) return 0;
    if (kl == KLParams{2, 1}) return alpha_21(d);
    if (kl == KLParams{3, 1}) return alpha_31(d);
    const auto r = alpha_report(d, kl);
    if (r.exact()) return r.value.lower;
    return std::nullopt;
}

Int lambda_cyclic_via_alpha(Int n, KLParams kl, AlphaSource source) {
    require_order(n, "lambda_cyclic_via_alpha");
    kl = checked(kl);
    Int best = 0;
    for (Int d : divisors(n)) {
        std::optional<Int> alpha;
        if (source != AlphaSource::exact) alpha = alpha_closed_form(d, kl);
        if (!alpha) {
            if (source == AlphaSource::formula) {
                throw FormulaUnavailable("no closed form for alpha_{" + std::to_string(kl.k) + "," +
                                         std::to_string(kl.l) + "}(Z_" + std::to_string(d) +
                                         "): 1 < gcd(d, k-l) < d gives bounds only");
            }
            alpha = d == 1 ? 0 : oracle::alpha_exact(d, kl);
        }
        best = std::max(best, *alpha * (n / d));
    }
    return best;
}

IntBounds hp_general_bounds(const GroupSpec& g, KLParams kl, const std::map<Int, Int>& alpha_values) {
    kl = checked(kl);
    const Int n = g.order();
    const Int v = g.exponent();
    if (kl.difference() % v == 0) return {0, 0};
    Int lower = 0;
    for (Int d : divisors(v)) {
        const auto it = alpha_values.find(d);
        if (it == alpha_values.end()) {
            throw std::invalid_argument("hp_general_bounds: no alpha value for divisor " + std::to_string(d));
        }
        lower = std::max(lower, it->second * (n / d));
    }
    const Int eps = n % 2;
    return {lower, std::max(floor_div(n - eps, kl.total()), lower)};
}

DivisorCondition divisor_condition(Int v, KLParams kl) {
    require_order(v, "divisor_condition");
    kl = checked(kl);
    for (Int d : divisors(v)) {
        const Int dl = delta(d, kl);
        if (dl >= kl.total()) continue;  // 1..delta(d) covers every residue
        const Int r = d % kl.total();
        if (r == 0 || r > dl) return {true, d};
    }
    return {false, std::nullopt};
}

ClassReport31 lambda_31_class_report(Int n) {
    require_order(n, "lambda_31_class_report");
    ClassReport31 r;
    for (Int d : divisors(n)) {
        if (d == 1) continue;
        int cls;
        Int value;
        if (d % 3 == 0) {
            cls = 0;
            value = d / 3;
        } else if (d % 4 == 3) {
            cls = 1;
            value = (d + 1) / 4;
        } else if (d % 4 == 0) {
            cls = 2;
            value = d / 4;
        } else if (d % 4 == 1) {
            cls = 3;
            value = (d - 1) / 4;
        } else if (d % 8 == 6) {
            cls = 4;
            value = (d + 2) / 4;
        } else {
            cls = 5;
            value = (d - 2) / 4;
        }
        const auto i = static_cast<std::size_t>(cls);
        r.classes[i].push_back(d);
        r.e[i] = std::max(r.e[i], value * (n / d));
    }
    for (std::size_t i = 0; i < 6; ++i) {
        if (r.classes[i].empty()) continue;
        r.p[i] = r.classes[i].front();
        r.nmax[i] = r.classes[i].back();
    }
    const std::string where = "lambda_31_class_report(" + std::to_string(n) + ")";
    if (!r.classes[4].empty()) check_agree(r.e[4], r.e[1], where + " e5 vs e2");
    if (!r.classes[5].empty()) check_agree(r.e[5], r.e[3], where + " e6 vs e4");
    r.lambda = *std::max_element(r.e.begin(), r.e.end());
    check_agree(r.lambda, *std::max_element(r.e.begin(), r.e.begin() + 4), where + " max over first four");
    check_agree(r.lambda, lambda_cyclic_31(n), where);
    return r;
}

// ---------------------------------------------------------------------------

std::optional<FormulaValue> lambda_formula(const GroupSpec& g, KLParams kl, std::string* reason) {
    kl = checked(kl);
    const Int n = g.order();
    const Int v = g.exponent();
    auto fail = [&](std::string why) -> std::optional<FormulaValue> {
        if (reason) *reason = std::move(why);
        return std::nullopt;
    };

    if (kl.difference() % v == 0) return FormulaValue{0, "v divides k-l"};

    auto cyclic_value = [&](Int m) -> std::optional<FormulaValue> {
        if (kl == KLParams{2, 1}) return FormulaValue{lambda_cyclic_21(m), "cyclic (2,1) closed form"};
        if (kl == KLParams{3, 1}) return FormulaValue{lambda_cyclic_31(m), "cyclic (3,1) closed form"};
        try {
            return FormulaValue{lambda_cyclic_via_alpha(m, kl, AlphaSource::formula),
                                "max over d|n of closed-form alpha(Z_d)*n/d"};
        } catch (const FormulaUnavailable& e) {
            if (reason) *reason = e.what();
            return std::nullopt;
        }
    };

    if (g.is_cyclic()) return cyclic_value(n);

    if (kl == KLParams{2, 1}) {
        return FormulaValue{lambda_cyclic_21(v) * (n / v), "lambda(Z_v)*n/v for (2,1)"};
    }
    const auto cond = divisor_condition(v, kl);
    if (!cond.holds) {
        return fail("no divisor d of v avoids the residues 1..delta(d) mod k+l, so lambda(G) = lambda(Z_v)*n/v is "
                    "not established");
    }
    auto base = cyclic_value(v);
    if (!base) return std::nullopt;
    return FormulaValue{base->value * (n / v),
                        "lambda(Z_v)*n/v via divisor " + std::to_string(*cond.witness_divisor) + " of v"};
}

}  // namespace klsf::formulas
