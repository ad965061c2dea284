#include "klsf/cli.hpp"

#include <CLI11.hpp>

#include <cstdlib>
#include <iomanip>
#include <ostream>
#include <sstream>

#include "klsf/formulas.hpp"
#include "klsf/oracle.hpp"
#include "klsf/progression.hpp"
#include "klsf/sumset.hpp"
#include "klsf/witness.hpp"
#include "report.hpp"

namespace klsf::cli {

namespace {

/// Parse failures in option values (group specs, element lists, ranges).
class UsageError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

struct Common {
    std::string group;
    Int k = 2;
    Int l = 1;
    bool json = false;
    bool canonicalize = false;
    bool force = false;
    unsigned threads = 0;
};

void add_common(CLI::App* cmd, Common& c, bool with_group = true) {
    if (with_group) cmd->add_option("--group,-g", c.group, "group: \"10\" or \"2x4x8\"")->required();
    cmd->add_option("--k", c.k, "number of summands on the left (k > l)")->required();
    cmd->add_option("--l", c.l, "number of summands on the right (l >= 1)")->required();
    cmd->add_flag("--json", c.json, "machine-readable output");
    cmd->add_flag("--canonicalize", c.canonicalize, "accept any factor list and rewrite it in invariant-factor form");
    cmd->add_flag("--force", c.force, "ignore oracle size limits");
    cmd->add_option("--threads", c.threads, "search threads (0 = all cores)");
}

GroupSpec group_of(const Common& c) {
    try {
        return parse_group(c.group, c.canonicalize ? Canonicalize::yes : Canonicalize::no);
    } catch (const std::invalid_argument& e) {
        throw UsageError(e.what());
    }
}

KLParams kl_of(const Common& c) {
    try {
        return KLParams::make(c.k, c.l);
    } catch (const std::invalid_argument& e) {
        throw UsageError(e.what());
    }
}

oracle::SearchOptions search_of(const Common& c) {
    oracle::SearchOptions o;
    o.limits = limits_from_env();
    o.force = c.force;
    o.threads = c.threads;
    return o;
}

std::string kl_text(KLParams kl) { return "(" + std::to_string(kl.k) + "," + std::to_string(kl.l) + ")"; }

Json header(const char* command, const GroupSpec& g, KLParams kl) {
    return Json{{"schema", kSchema},
                {"command", command},
                {"group", g.to_string()},
                {"k", kl.k},
                {"l", kl.l},
                {"n", g.order()},
                {"v", g.exponent()}};
}

void print_json(std::ostream& out, const Json& j) { out << j.dump(2) << '\n'; }

/// Parses "1,3,5" (cyclic) or "0:1,1:3" (coordinates joined by ':').
Subset parse_set(const GroupSpec& g, const std::string& text) {
    Subset s(g);
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) {
        if (item.empty()) continue;
        Element e;
        std::stringstream is(item);
        std::string part;
        while (std::getline(is, part, ':')) {
            try {
                std::size_t used = 0;
                e.coords.push_back(std::stoll(part, &used));
                if (used != part.size()) throw std::invalid_argument(part);
            } catch (const std::exception&) {
                throw UsageError("malformed element '" + item + "'");
            }
        }
        try {
            s.insert(g.index_of(e));
        } catch (const std::exception& ex) {
            throw UsageError("element '" + item + "' is not in " + g.to_string() + ": " + ex.what());
        }
    }
    return s;
}

std::string sum_text(const GroupSpec& g, const std::vector<std::size_t>& terms) {
    std::string s;
    for (std::size_t i = 0; i < terms.size(); ++i) {
        if (i) s += " + ";
        s += g.format_element(terms[i]);
    }
    return s;
}

// ---------------------------------------------------------------------------

int cmd_lambda(const Common& c, const std::string& method, std::ostream& out, std::ostream& err) {
    const auto g = group_of(c);
    const auto kl = kl_of(c);
    const bool want_formula = method == "formula" || method == "all";
    const bool want_bounds = method == "bounds" || method == "all";
    const bool want_exact = method == "exact" || method == "all";

    Json j = header("lambda", g, kl);
    std::vector<std::string> notes;
    std::ostringstream text;
    text << "group " << g.to_string() << "  n=" << g.order() << " v=" << g.exponent() << "  (k,l)=" << kl_text(kl)
         << '\n';
    if (kl.difference() % g.exponent() == 0) {
        notes.push_back("v divides k-l: k*a = l*a for every a, so lambda = 0");
    }

    if (want_formula) {
        std::string reason;
        if (auto f = formulas::lambda_formula(g, kl, &reason)) {
            j["formula"] = Json{{"value", f->value}, {"basis", f->basis}};
            text << "formula: " << f->value << "  [" << f->basis << "]\n";
        } else if (method == "formula") {
            err << "error: no closed form for lambda_" << kl_text(kl) << "(" << g.to_string() << "): " << reason
                << '\n';
            return kUsage;
        } else {
            j["formula"] = nullptr;
            notes.push_back("no closed form: " + reason);
            text << "formula: unavailable (" << reason << ")\n";
        }
    }

    if (want_bounds) {
        const auto b = formulas::lambda_bounds_general(g, kl);
        j["bounds"] = bounds_json(b);
        text << "bounds: [" << b.lower << ", " << b.upper << "]  argmax lower d=" << b.argmax_lower
             << ", upper d=" << b.argmax_upper << '\n';
        text << "  " << std::setw(8) << "d" << std::setw(8) << "lower" << std::setw(8) << "upper" << '\n';
        for (Int d : divisors(g.order())) {
            text << "  " << std::setw(8) << d;
            const auto lo = b.lower_terms.find(d);
            text << std::setw(8) << (lo != b.lower_terms.end() ? std::to_string(lo->second) : "-");
            const auto up = b.upper_terms.find(d);
            text << std::setw(8) << (up != b.upper_terms.end() ? std::to_string(up->second) : "-") << '\n';
        }
    }

    if (want_exact) {
        try {
            const auto r = oracle::lambda_exact(g, kl, search_of(c));
            j["exact"] = Json{{"value", r.max_size}, {"witness", members_json(r.witness)}};
            text << "exact: " << r.max_size << "  witness " << r.witness.to_string() << "  (" << r.nodes_explored
                 << " nodes)\n";
        } catch (const oracle::LimitExceeded& e) {
            if (method == "exact") {
                err << "error: " << e.what() << " (use --force or KLSF_LIMIT_EXACT)\n";
                return kLimit;
            }
            j["exact"] = nullptr;
            notes.push_back(std::string("exact search skipped: ") + e.what());
            text << "exact: skipped (" << e.what() << ")\n";
        }
    }

    j["notes"] = notes;
    if (c.json) {
        print_json(out, j);
    } else {
        out << text.str();
        for (const auto& n : notes) out << "note: " << n << '\n';
    }
    return kOk;
}

int cmd_witness(const Common& c, std::ostream& out) {
    const auto g = group_of(c);
    const auto kl = kl_of(c);
    const auto w = witness::best_witness(g, kl);
    if (c.json) {
        print_json(out, witness_json(w, kl));
    } else {
        out << "witness of size " << w.members.size() << " in " << g.to_string() << " for " << kl_text(kl) << '\n';
        out << "  " << witness::describe(w) << '\n';
        out << "  members " << w.members.to_string() << '\n';
    }
    return kOk;
}

int cmd_verify(const Common& c, const std::string& set_text, std::ostream& out) {
    const auto g = group_of(c);
    const auto kl = kl_of(c);
    const auto s = parse_set(g, set_text);
    const auto violation = find_violation(s, kl.k, kl.l);
    if (c.json) {
        Json j = header("verify", g, kl);
        j["set"] = members_json(s);
        j["size"] = s.size();
        j["sum_free"] = !violation.has_value();
        if (violation) {
            Json v;
            Json kt = Json::array();
            for (auto x : violation->k_terms) kt.push_back(element_json(g, x));
            Json lt = Json::array();
            for (auto x : violation->l_terms) lt.push_back(element_json(g, x));
            v["k_terms"] = kt;
            v["l_terms"] = lt;
            v["sum"] = element_json(g, violation->common_sum);
            j["violation"] = v;
        } else {
            j["violation"] = nullptr;
        }
        print_json(out, j);
    } else if (violation) {
        out << s.to_string() << " is not " << kl_text(kl) << "-sum-free in " << g.to_string() << '\n';
        out << "violation: " << sum_text(g, violation->k_terms) << " == " << sum_text(g, violation->l_terms)
            << "  (both equal " << g.format_element(violation->common_sum) << ")\n";
    } else {
        out << s.to_string() << " is " << kl_text(kl) << "-sum-free in " << g.to_string() << " (size " << s.size()
            << ")\n";
    }
    return violation ? kNegative : kOk;
}

int cmd_alpha(const Common& c, Int n, bool exact, std::ostream& out, std::ostream& err) {
    const auto kl = kl_of(c);
    if (n < 2) throw UsageError("--n must be at least 2");
    const auto r = formulas::alpha_report(n, kl);
    Json j{{"schema", kSchema}, {"command", "alpha"}, {"n", n}, {"k", kl.k}, {"l", kl.l}};
    j["case"] = formulas::to_string(r.tag);
    j["alpha"] = int_bounds_json(r.value);
    j["beta"] = int_bounds_json(r.beta);
    j["gamma"] = int_bounds_json(r.gamma);
    std::ostringstream text;
    text << "Z_" << n << "  (k,l)=" << kl_text(kl) << "  case " << formulas::to_string(r.tag) << '\n';
    auto show = [&](const char* name, const formulas::IntBounds& b) {
        text << "  " << name << ": ";
        if (b.exact()) {
            text << b.lower;
        } else {
            text << "[" << b.lower << ", " << b.upper << "]";
        }
        text << '\n';
    };
    show("alpha", r.value);
    show("beta ", r.beta);
    show("gamma", r.gamma);
    if (exact) {
        const auto limits = limits_from_env();
        try {
            const auto s = oracle::progression_search(n, kl, limits.progression, c.force);
            auto entry = [&](Int value, const std::optional<oracle::Progression>& p) {
                return Json{{"value", value}, {"progression", p ? progression_json(*p) : Json(nullptr)}};
            };
            j["exact"] = Json{{"alpha", entry(s.alpha, s.best_alpha)},
                              {"beta", entry(s.beta, s.best_beta)},
                              {"gamma", entry(s.gamma, s.best_gamma)}};
            text << "exact: alpha=" << s.alpha << " beta=" << s.beta << " gamma=" << s.gamma << '\n';
            if (s.best_alpha) {
                text << "  longest: start " << s.best_alpha->start << ", difference " << s.best_alpha->difference
                     << ", length " << s.best_alpha->length << '\n';
            }
        } catch (const oracle::LimitExceeded& e) {
            err << "error: " << e.what() << " (use --force or KLSF_LIMIT_AP)\n";
            return kLimit;
        }
    }
    if (c.json) {
        print_json(out, j);
    } else {
        out << text.str();
    }
    return kOk;
}

int cmd_count(const Common& c, std::ostream& out, std::ostream& err) {
    const auto g = group_of(c);
    const auto kl = kl_of(c);
    oracle::CountResult r;
    try {
        r = oracle::count_sum_free(g, kl, search_of(c));
    } catch (const oracle::LimitExceeded& e) {
        err << "error: " << e.what() << " (use --force or KLSF_LIMIT_COUNT)\n";
        return kLimit;
    }
    if (c.json) {
        Json j = header("count", g, kl);
        j["total"] = r.total;
        Json by = Json::object();
        for (auto [size, count] : r.by_size) by[std::to_string(size)] = count;
        j["by_size"] = by;
        print_json(out, j);
    } else {
        out << "N_" << kl_text(kl) << "(" << g.to_string() << ") = " << r.total << '\n';
        for (auto [size, count] : r.by_size) out << "  size " << std::setw(3) << size << ": " << count << '\n';
    }
    return kOk;
}

int cmd_enumerate(const Common& c, std::ostream& out, std::ostream& err) {
    const auto g = group_of(c);
    const auto kl = kl_of(c);
    std::vector<Subset> sets;
    try {
        sets = oracle::enumerate_maximum(g, kl, search_of(c));
    } catch (const oracle::LimitExceeded& e) {
        err << "error: " << e.what() << " (use --force or KLSF_LIMIT_EXACT)\n";
        return kLimit;
    }
    const std::size_t size = sets.empty() ? 0 : sets.front().size();
    if (c.json) {
        Json j = header("enumerate", g, kl);
        j["lambda"] = size;
        j["count"] = sets.size();
        Json arr = Json::array();
        for (const auto& s : sets) arr.push_back(members_json(s));
        j["sets"] = arr;
        print_json(out, j);
    } else {
        out << sets.size() << " maximum " << kl_text(kl) << "-sum-free set(s) of size " << size << " in "
            << g.to_string() << '\n';
        for (const auto& s : sets) out << "  " << s.to_string() << '\n';
    }
    return kOk;
}

int cmd_scan(const Common& c, const std::string& n_range, const std::string& family, const std::string& order_range,
             const std::vector<std::string>& check_names, const std::string& format, std::ostream& out) {
    ScanRequest req;
    req.kl = kl_of(c);
    req.search = search_of(c);
    req.threads = c.threads;
    try {
        if (!n_range.empty()) {
            const auto [lo, hi] = parse_range(n_range);
            req.groups = cyclic_family(lo, hi);
        } else if (family == "all-abelian" && !order_range.empty()) {
            const auto [lo, hi] = parse_range(order_range);
            req.groups = abelian_family(lo, hi);
        } else if (family == "cyclic" && !order_range.empty()) {
            const auto [lo, hi] = parse_range(order_range);
            req.groups = cyclic_family(lo, hi);
        } else {
            throw UsageError("scan needs --n a..b or --family {all-abelian,cyclic} --order a..b");
        }
        for (const auto& name : check_names) {
            std::stringstream ss(name);
            std::string part;
            while (std::getline(ss, part, ',')) req.checks.push_back(parse_check(part));
        }
    } catch (const std::invalid_argument& e) {
        throw UsageError(e.what());
    }
    if (req.checks.empty()) req.checks.push_back(ScanCheck::bounds);

    std::vector<ScanRow> rows;
    try {
        rows = run_scan(req);
    } catch (const std::invalid_argument& e) {
        throw UsageError(e.what());
    }

    std::size_t disagreements = 0;
    std::size_t errors = 0;
    for (const auto& r : rows) {
        if (!r.error.empty()) {
            ++errors;
        } else if (!r.agree) {
            ++disagreements;
        }
    }
    if (format == "json") {
        Json j{{"schema", kSchema}, {"command", "scan"}, {"k", req.kl.k}, {"l", req.kl.l}};
        Json checks = Json::array();
        for (auto ch : req.checks) checks.push_back(to_string(ch));
        j["checks"] = checks;
        Json arr = Json::array();
        for (const auto& r : rows) arr.push_back(scan_row_json(r));
        j["rows"] = arr;
        j["summary"] = Json{{"rows", rows.size()}, {"disagreements", disagreements}, {"errors", errors}};
        print_json(out, j);
    } else {
        out << scan_csv_header() << '\n';
        for (const auto& r : rows) {
            out << scan_row_csv(r) << '\n';
            if (!r.error.empty()) out << "# error " << r.group << ": " << r.error << '\n';
        }
        out << "# rows=" << rows.size() << " disagreements=" << disagreements << " errors=" << errors << '\n';
    }
    if (disagreements > 0) return kNegative;
    return errors > 0 ? kLimit : kOk;
}

}  // namespace

oracle::Limits limits_from_env() {
    oracle::Limits limits;
    auto read = [](const char* name, std::int64_t& slot) {
        if (const char* v = std::getenv(name); v != nullptr && *v != '\0') {
            try {
                slot = std::stoll(v);
            } catch (const std::exception&) {
                throw UsageError(std::string("environment variable ") + name + " is not an integer");
            }
        }
    };
    read("KLSF_LIMIT_EXACT", limits.exact);
    read("KLSF_LIMIT_COUNT", limits.count);
    read("KLSF_LIMIT_AP", limits.progression);
    return limits;
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Maximum (k,l)-sum-free sets in finite abelian groups", "klsumfree"};
    app.require_subcommand(1);

    Common common;
    std::string method = "all";
    std::string set_text;
    Int alpha_n = 0;
    bool alpha_exact = false;
    std::string n_range, family, order_range, format = "csv";
    std::vector<std::string> checks;

    auto* lambda = app.add_subcommand("lambda", "formula, bounds and exhaustive value of lambda_{k,l}(G)");
    add_common(lambda, common);
    lambda->add_option("--method", method, "formula | bounds | exact | all")
        ->check(CLI::IsMember({"formula", "bounds", "exact", "all"}));

    auto* witness_cmd = app.add_subcommand("witness", "explicit sum-free set meeting the lower bound");
    add_common(witness_cmd, common);

    auto* verify = app.add_subcommand("verify", "check whether a given set is (k,l)-sum-free");
    add_common(verify, common);
    verify->add_option("--set", set_text, "elements: \"1,3,5\" or \"0:1,1:3\"")->required();

    auto* alpha = app.add_subcommand("alpha", "longest sum-free arithmetic progressions in Z_n");
    add_common(alpha, common, false);
    alpha->add_option("--n", alpha_n, "modulus")->required();
    alpha->add_flag("--exact", alpha_exact, "also run the exhaustive progression search");

    auto* count = app.add_subcommand("count", "number of (k,l)-sum-free subsets");
    add_common(count, common);

    auto* enumerate = app.add_subcommand("enumerate", "every maximum (k,l)-sum-free set");
    add_common(enumerate, common);

    auto* scan = app.add_subcommand("scan", "sweep a family of groups and compare formulas with the oracle");
    add_common(scan, common, false);
    scan->add_option("--n", n_range, "cyclic orders a..b");
    scan->add_option("--family", family, "all-abelian | cyclic")->check(CLI::IsMember({"all-abelian", "cyclic"}));
    scan->add_option("--order", order_range, "orders a..b for --family");
    scan->add_option("--check", checks, "formula-vs-exact, bounds, green-ruzsa, exponent-scaling, divisor-condition");
    scan->add_option("--format", format, "csv | json")->check(CLI::IsMember({"csv", "json"}));

    std::vector<std::string> argv_rev(args.rbegin(), args.rend());
    try {
        app.parse(argv_rev);
    } catch (const CLI::ParseError& e) {
        return app.exit(e, out, err) == 0 ? kOk : kUsage;
    }

    try {
        if (*lambda) return cmd_lambda(common, method, out, err);
        if (*witness_cmd) return cmd_witness(common, out);
        if (*verify) return cmd_verify(common, set_text, out);
        if (*alpha) return cmd_alpha(common, alpha_n, alpha_exact, out, err);
        if (*count) return cmd_count(common, out, err);
        if (*enumerate) return cmd_enumerate(common, out, err);
        if (*scan) return cmd_scan(common, n_range, family, order_range, checks, format, out);
    } catch (const UsageError& e) {
        err << "error: " << e.what() << '\n';
        return kUsage;
    } catch (const oracle::LimitExceeded& e) {
        err << "error: " << e.what() << '\n';
        return kLimit;
    }
    return kUsage;
}

}  // namespace klsf::cli
