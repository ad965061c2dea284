#include "report.hpp"

namespace klsf::cli {

Json element_json(const GroupSpec& g, std::size_t index) {
    if (g.is_cyclic()) return static_cast<Int>(index);
    return g.element_at(index).coords;
}

Json members_json(const Subset& s) {
    Json arr = Json::array();
    for (auto x : s.members()) arr.push_back(element_json(s.group(), x));
    return arr;
}

Json bounds_json(const formulas::BoundReport& r) {
    Json lower_terms = Json::object();
    for (auto [d, t] : r.lower_terms) lower_terms[std::to_string(d)] = t;
    Json upper_terms = Json::object();
    for (auto [d, t] : r.upper_terms) upper_terms[std::to_string(d)] = t;
    return Json{{"lower", r.lower},
                {"upper", r.upper},
                {"argmax_lower", r.argmax_lower},
                {"argmax_upper", r.argmax_upper},
                {"exponent_divides_difference", r.exponent_divides_difference},
                {"lower_terms", lower_terms},
                {"upper_terms", upper_terms}};
}

Json int_bounds_json(const formulas::IntBounds& b) { return Json{{"lower", b.lower}, {"upper", b.upper}}; }

Json witness_json(const witness::LiftedWitness& w, KLParams kl) {
    Json construction;
    if (const auto* ap = std::get_if<witness::APWitness>(&w.base)) {
        construction["kind"] = ap->kind == witness::ProgressionKind::interval ? "interval" : "case_6_mod_8";
        construction["params"] = Json{{"modulus", ap->modulus},
                                      {"start", ap->start},
                                      {"difference", ap->difference},
                                      {"length", ap->length}};
        if (ap->certificate) {
            const auto& c = *ap->certificate;
            construction["certificate"] = Json{{"q", c.q}, {"r", c.r}, {"u", c.u}, {"w", c.w}};
        } else {
            construction["certificate"] = nullptr;
        }
    } else if (const auto* cw = std::get_if<witness::CosetWitness>(&w.base)) {
        construction["kind"] = "coset";
        construction["params"] = Json{{"modulus", cw->modulus}, {"step", cw->step}};
        construction["certificate"] = nullptr;
    } else if (const auto* set = std::get_if<Subset>(&w.base)) {
        construction["kind"] = "explicit";
        construction["params"] = Json{{"modulus", w.base_modulus}, {"base", members_json(*set)}};
        construction["certificate"] = nullptr;
    } else {
        construction["kind"] = "empty";
        construction["params"] = Json::object();
        construction["certificate"] = nullptr;
    }
    construction["lifted_from"] = w.base_modulus;
    return Json{{"schema", kSchema},
                {"group", w.group.to_string()},
                {"k", kl.k},
                {"l", kl.l},
                {"size", w.members.size()},
                {"members", members_json(w.members)},
                {"construction", construction}};
}

Json progression_json(const oracle::Progression& p) {
    return Json{{"modulus", p.modulus}, {"start", p.start}, {"difference", p.difference}, {"length", p.length}};
}

namespace {

template <typename T>
Json optional_json(const std::optional<T>& v) {
    return v ? Json(*v) : Json(nullptr);
}

template <typename T>
std::string optional_csv(const std::optional<T>& v) {
    return v ? std::to_string(*v) : std::string{};
}

}  // namespace

Json scan_row_json(const ScanRow& row) {
    Json j{{"group", row.group},
           {"k", row.k},
           {"l", row.l},
           {"formula_value", optional_json(row.formula_value)},
           {"lower", row.lower},
           {"upper", row.upper},
           {"exact", optional_json(row.exact)},
           {"witness_size", row.witness_size},
           {"agree", row.agree}};
    if (!row.error.empty()) j["error"] = row.error;
    return j;
}

std::string scan_csv_header() { return "group,k,l,formula_value,lower,upper,exact,witness_size,agree"; }

std::string scan_row_csv(const ScanRow& row) {
    return row.group + ',' + std::to_string(row.k) + ',' + std::to_string(row.l) + ',' +
           optional_csv(row.formula_value) + ',' + std::to_string(row.lower) + ',' + std::to_string(row.upper) + ',' +
           optional_csv(row.exact) + ',' + std::to_string(row.witness_size) + ',' + (row.agree ? "true" : "false");
}

}  // namespace klsf::cli
