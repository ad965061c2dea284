#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace klsf::oracle {

/// Largest group order each exhaustive routine accepts without `force`.
struct Limits {
    std::int64_t exact = 40;
    std::int64_t count = 28;
    std::int64_t progression = 2000;
};

class LimitExceeded : public std::runtime_error {
public:
    LimitExceeded(const std::string& what, std::int64_t order, std::int64_t limit)
        : std::runtime_error(what + ": group order " + std::to_string(order) + " exceeds limit " +
                             std::to_string(limit)) {}
};

}  // namespace klsf::oracle
