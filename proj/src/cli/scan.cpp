#include <atomic>
#include <charconv>
#include <mutex>
#include <stdexcept>
#include <thread>

#include "klsf/cli.hpp"
#include "klsf/formulas.hpp"
#include "klsf/witness.hpp"

namespace klsf::cli {

ScanCheck parse_check(const std::string& name) {
    if (name == "formula-vs-exact") return ScanCheck::formula_vs_exact;
    if (name == "bounds") return ScanCheck::bounds;
    if (name == "green-ruzsa") return ScanCheck::green_ruzsa;
    if (name == "exponent-scaling") return ScanCheck::exponent_scaling;
    if (name == "divisor-condition") return ScanCheck::divisor_condition;
    throw std::invalid_argument("unknown check '" + name +
                                "' (expected formula-vs-exact, bounds, green-ruzsa, exponent-scaling or divisor-condition)");
}

std::string to_string(ScanCheck c) {
    switch (c) {
        case ScanCheck::formula_vs_exact: return "formula-vs-exact";
        case ScanCheck::bounds: return "bounds";
        case ScanCheck::green_ruzsa: return "green-ruzsa";
        case ScanCheck::exponent_scaling: return "exponent-scaling";
        case ScanCheck::divisor_condition: return "divisor-condition";
    }
    return "?";
}

namespace {

Int parse_int(std::string_view s) {
    Int v = 0;
    const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
    if (s.empty() || ec != std::errc{} || ptr != s.data() + s.size()) {
        throw std::invalid_argument("expected an integer, got '" + std::string(s) + "'");
    }
    return v;
}

}  // namespace

std::pair<Int, Int> parse_range(const std::string& text) {
    const auto dots = text.find("..");
    if (dots == std::string::npos) {
        const Int v = parse_int(text);
        return {v, v};
    }
    const Int lo = parse_int(std::string_view(text).substr(0, dots));
    const Int hi = parse_int(std::string_view(text).substr(dots + 2));
    if (lo > hi) throw std::invalid_argument("empty range '" + text + "'");
    return {lo, hi};
}

std::vector<GroupSpec> cyclic_family(Int lo, Int hi) {
    std::vector<GroupSpec> out;
    for (Int n = std::max<Int>(lo, 2); n <= hi; ++n) out.push_back(GroupSpec::cyclic(n));
    return out;
}

std::vector<GroupSpec> abelian_family(Int lo, Int hi) {
    std::vector<GroupSpec> out;
    for (Int n = std::max<Int>(lo, 2); n <= hi; ++n) {
        for (auto& g : abelian_groups_of_order(n)) out.push_back(std::move(g));
    }
    return out;
}

ScanRow scan_instance(const GroupSpec& g, KLParams kl, const std::vector<ScanCheck>& checks,
                      const oracle::SearchOptions& search) {
    ScanRow row;
    row.group = g.to_string();
    row.k = kl.k;
    row.l = kl.l;
    try {
        const auto bounds = formulas::lambda_bounds_general(g, kl);
        row.lower = bounds.lower;
        row.upper = bounds.upper;
        row.witness_size = static_cast<Int>(witness::best_witness(g, kl).members.size());
        row.exact = oracle::lambda_exact(g, kl, search).max_size;

        bool agree = row.lower <= *row.exact && *row.exact <= row.upper;
        const Int n = g.order();
        const Int v = g.exponent();
        auto cyclic_exponent_scaled = [&] {
            return oracle::lambda_exact(GroupSpec::cyclic(v), kl, search).max_size * (n / v);
        };
        auto predict = [&](Int value) {
            if (!row.formula_value) row.formula_value = value;
            agree = agree && value == *row.exact;
        };
        for (const ScanCheck c : checks) {
            switch (c) {
                case ScanCheck::formula_vs_exact:
                    if (auto f = formulas::lambda_formula(g, kl)) predict(f->value);
                    break;
                case ScanCheck::bounds:
                    agree = agree && row.witness_size == row.lower;
                    break;
                case ScanCheck::green_ruzsa:
                    if (!(kl == KLParams{2, 1})) throw std::invalid_argument("green-ruzsa check needs (k,l) = (2,1)");
                    predict(formulas::lambda_cyclic_21(v) * (n / v));
                    break;
                case ScanCheck::exponent_scaling:
                    predict(cyclic_exponent_scaled());
                    break;
                case ScanCheck::divisor_condition:
                    if (v >= 2 && formulas::divisor_condition(v, kl).holds) predict(cyclic_exponent_scaled());
                    break;
            }
        }
        row.agree = agree;
    } catch (const std::invalid_argument&) {
        throw;
    } catch (const std::exception& e) {
        row.agree = false;
        row.error = e.what();
    }
    return row;
}

std::vector<ScanRow> run_scan(const ScanRequest& req) {
    std::vector<ScanRow> rows(req.groups.size());
    auto search = req.search;
    search.threads = 1;  // parallelism goes across instances
    const unsigned threads =
        std::max(1u, req.threads != 0 ? req.threads : std::thread::hardware_concurrency());

    std::atomic<std::size_t> next{0};
    std::exception_ptr failure;
    std::mutex failure_mutex;
    auto worker = [&] {
        for (std::size_t i = next++; i < rows.size(); i = next++) {
            try {
                rows[i] = scan_instance(req.groups[i], req.kl, req.checks, search);
            } catch (...) {
                std::lock_guard lock(failure_mutex);
                if (!failure) failure = std::current_exception();
            }
        }
    };
    {
        std::vector<std::jthread> pool;
        for (unsigned t = 0; t < std::min<std::size_t>(threads, rows.size()); ++t) pool.emplace_back(worker);
    }
    if (failure) std::rethrow_exception(failure);
    return rows;
}

}  // namespace klsf::cli
