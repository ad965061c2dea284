#pragma once

#include <stdexcept>
#include <string>

#include "klsf/numtheory.hpp"

namespace klsf {

/// The pair (k, l) with k > l >= 1.
struct KLParams {
    Int k = 2;
    Int l = 1;

    static KLParams make(Int k, Int l) {
        if (!(l >= 1 && k > l)) {
            throw std::invalid_argument("(k,l) must satisfy k > l >= 1, got (" + std::to_string(k) + "," +
                                        std::to_string(l) + ")");
        }
        return KLParams{k, l};
    }

    Int difference() const noexcept { return k - l; }
    Int total() const noexcept { return k + l; }

    bool operator==(const KLParams&) const = default;
};

}  // namespace klsf
