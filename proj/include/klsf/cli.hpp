#pragma once

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "klsf/abelian.hpp"
#include "klsf/oracle.hpp"

namespace klsf::cli {

inline constexpr const char* kSchema = "klsumfree/1";

enum ExitCode : int {
    kOk = 0,
    kNegative = 1,
    kUsage = 2,
    kLimit = 3,
};

/// Runs the command line `args` (without the program name). Returns the exit code.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

/// Default limits overridden by KLSF_LIMIT_EXACT / KLSF_LIMIT_COUNT / KLSF_LIMIT_AP.
oracle::Limits limits_from_env();

// --- scans -------------------------------------------------------------------

enum class ScanCheck {
    formula_vs_exact,  // closed form (when known) against the oracle
    bounds,            // lower <= exact <= upper and the witness meets the lower bound
    green_ruzsa,       // (2,1): lambda(G) = lambda_21(Z_v) * n/v
    exponent_scaling,  // lambda(G) against oracle lambda(Z_v) * n/v
    divisor_condition, // as exponent_scaling, only where divisor_condition holds
};

ScanCheck parse_check(const std::string& name);
std::string to_string(ScanCheck c);

struct ScanRow {
    std::string group;
    Int k = 0;
    Int l = 0;
    std::optional<Int> formula_value;
    Int lower = 0;
    Int upper = 0;
    std::optional<Int> exact;
    Int witness_size = 0;
    bool agree = false;
    /// Non-empty when the instance could not be completed.
    std::string error;
};

struct ScanRequest {
    std::vector<GroupSpec> groups;
    KLParams kl;
    std::vector<ScanCheck> checks;
    oracle::SearchOptions search;
    /// Instances evaluated concurrently; 0 picks hardware_concurrency().
    unsigned threads = 0;
};

ScanRow scan_instance(const GroupSpec& g, KLParams kl, const std::vector<ScanCheck>& checks,
                      const oracle::SearchOptions& search);

/// One row per group, in input order.
std::vector<ScanRow> run_scan(const ScanRequest& req);

/// "a..b" or a single integer.
std::pair<Int, Int> parse_range(const std::string& text);

/// Groups for `--n a..b` (cyclic) or `--family all-abelian --order a..b`.
std::vector<GroupSpec> cyclic_family(Int lo, Int hi);
std::vector<GroupSpec> abelian_family(Int lo, Int hi);

}  // namespace klsf::cli
