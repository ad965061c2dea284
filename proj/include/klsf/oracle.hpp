#pragma once

/**
 * Exhaustive search over subsets of a finite abelian group.
 *
 * Sets are grown in increasing element-index order. Each search node keeps
 * the layers A, 2A, ..., kA of its current set and the candidates: larger
 * elements whose addition keeps the set (k,l)-sum-free. Since the family of
 * sum-free sets is closed under taking subsets, the candidate list only
 * shrinks along a branch.
 *
 * Groups of order <= 64 run on single-word masks; larger groups fall back to
 * Bitset and are only bounded by time (pass `force`).
 */

#include <chrono>
#include <cstdint>
#include <functional>
#include <map>
#include <vector>

#include "klsf/abelian.hpp"
#include "klsf/kl_params.hpp"
#include "klsf/limits.hpp"
#include "klsf/progression.hpp"

namespace klsf::oracle {

struct Progress {
    std::uint64_t nodes = 0;
    std::size_t depth = 0;
    Int best = 0;
};

struct SearchOptions {
    Limits limits;
    bool force = false;
    /// Worker threads; 0 picks std::thread::hardware_concurrency().
    unsigned threads = 0;
    /// The tree is split into independent subtrees at this depth.
    std::size_t fork_depth = 1;
    /// Start the maximum search from the best interval construction.
    bool seed_with_witness = true;
    /// Called roughly every 65536 nodes, serialised.
    std::function<void(const Progress&)> progress;
};

struct SearchResult {
    Int max_size = 0;
    Subset witness;
    std::uint64_t nodes_explored = 0;
    std::chrono::steady_clock::duration elapsed{};
};

struct CountResult {
    /// Every count comes from visiting the sets one by one, so 64 bits cannot overflow
    /// in feasible time; addition is checked regardless.
    std::uint64_t total = 0;
    std::map<Int, std::uint64_t> by_size;
};

/// lambda_{k,l}(G) with one maximum set. Throws LimitExceeded past limits.exact unless forced.
SearchResult lambda_exact(const GroupSpec& g, KLParams kl, const SearchOptions& opts = {});

/// Number of (k,l)-sum-free subsets, including the empty set, by size.
CountResult count_sum_free(const GroupSpec& g, KLParams kl, const SearchOptions& opts = {});

/// Every (k,l)-sum-free set of maximum size, ordered by Bitset::lex_compare.
std::vector<Subset> enumerate_maximum(const GroupSpec& g, KLParams kl, const SearchOptions& opts = {});

}  // namespace klsf::oracle
