#include "klsf/oracle.hpp"

#include <algorithm>
#include <atomic>
#include <bit>
#include <limits>
#include <mutex>
#include <optional>
#include <thread>

#include "klsf/witness.hpp"

namespace klsf::oracle {

namespace {

constexpr std::size_t npos = std::numeric_limits<std::size_t>::max();
constexpr std::uint64_t kProgressInterval = 1u << 16;

// ---------------------------------------------------------------------------
// Mask backends
// ---------------------------------------------------------------------------

/// One 64-bit word per set; translation is a masked rotation per axis.
class WordOps {
public:
    using Mask = std::uint64_t;

    explicit WordOps(const GroupSpec& g) : n_(g.size()), rots_(g.size()) {
        const Mask all = n_ == 64 ? ~Mask{0} : (Mask{1} << n_) - 1;
        std::vector<std::size_t> strides(g.rank(), 1);
        for (std::size_t i = g.rank() - 1; i > 0; --i) strides[i - 1] = strides[i] * static_cast<std::size_t>(g.factors()[i]);
        for (std::size_t x = 0; x < n_; ++x) {
            for (std::size_t axis = 0; axis < g.rank(); ++axis) {
                const Int s = g.coord(x, axis);
                if (s == 0) continue;
                const std::size_t block = strides[axis] * static_cast<std::size_t>(g.factors()[axis]);
                const std::size_t shift = static_cast<std::size_t>(s) * strides[axis];
                Mask hi = 0;
                for (std::size_t p = 0; p < n_; ++p) {
                    if (p % block >= shift) hi |= Mask{1} << p;
                }
                rots_[x].push_back(Rot{static_cast<unsigned>(shift), static_cast<unsigned>(block - shift), hi, all & ~hi});
            }
        }
    }

    Mask zero() const { return 0; }
    Mask translate(Mask m, std::size_t x) const {
        for (const Rot& r : rots_[x]) m = ((m << r.shift) & r.hi) | ((m >> r.back) & r.lo);
        return m;
    }
    static void set(Mask& m, std::size_t x) { m |= Mask{1} << x; }
    static Mask with(Mask m, std::size_t x) { return m | (Mask{1} << x); }
    static void unite(Mask& a, const Mask& b) { a |= b; }
    static bool intersects(const Mask& a, const Mask& b) { return (a & b) != 0; }
    static std::size_t count(const Mask& m) { return static_cast<std::size_t>(std::popcount(m)); }
    static bool empty(const Mask& m) { return m == 0; }
    static std::size_t pop_first(Mask& m) {
        const auto x = static_cast<std::size_t>(std::countr_zero(m));
        m &= m - 1;
        return x;
    }
    Bitset to_bitset(const Mask& m) const {
        Bitset b(n_);
        for (Mask t = m; t != 0; t &= t - 1) b.set(static_cast<std::size_t>(std::countr_zero(t)));
        return b;
    }

private:
    struct Rot {
        unsigned shift;
        unsigned back;
        Mask hi;
        Mask lo;
    };
    std::size_t n_;
    std::vector<std::vector<Rot>> rots_;
};

/// Arbitrary order; translation goes through GroupSpec::translate.
class BitsetOps {
public:
    using Mask = Bitset;

    explicit BitsetOps(const GroupSpec& g) : g_(g) {}

    Mask zero() const { return Bitset(g_.size()); }
    Mask translate(const Mask& m, std::size_t x) const { return g_.translate(m, x); }
    static void set(Mask& m, std::size_t x) { m.set(x); }
    static Mask with(Mask m, std::size_t x) {
        m.set(x);
        return m;
    }
    static void unite(Mask& a, const Mask& b) { a |= b; }
    static bool intersects(const Mask& a, const Mask& b) { return a.intersects(b); }
    static std::size_t count(const Mask& m) { return m.count(); }
    static bool empty(const Mask& m) { return m.none(); }
    static std::size_t pop_first(Mask& m) {
        const std::size_t x = m.find_first();
        m.reset(x);
        return x;
    }
    Bitset to_bitset(const Mask& m) const { return m; }

private:
    const GroupSpec& g_;
};

// ---------------------------------------------------------------------------
// Search engine
// ---------------------------------------------------------------------------

enum class Mode { maximize, count, enumerate };

/// State shared by the workers of one search.
struct Shared {
    Mode mode = Mode::maximize;
    std::atomic<Int> best{0};      // maximize: largest size known so far
    Int target = 0;                // enumerate: size of the sets to collect
    bool stop_at_first = false;    // enumerate: stop after one set
    std::atomic<bool> stop{false};
    std::atomic<std::uint64_t> nodes{0};
    std::mutex progress_mutex;
    const std::function<void(const Progress&)>* progress = nullptr;

    void raise_best(Int size) {
        Int cur = best.load(std::memory_order_relaxed);
        while (size > cur && !best.compare_exchange_weak(cur, size, std::memory_order_relaxed)) {
        }
    }
};

template <class Ops>
struct Snapshot {
    using Mask = typename Ops::Mask;
    std::size_t depth = 0;
    Int size = 0;
    Mask set;
    std::vector<Mask> layers;
    Mask cand;
};

/// Per-task outcome, merged in task order.
template <class Ops>
struct TaskResult {
    using Mask = typename Ops::Mask;
    std::vector<std::uint64_t> by_size;
    Int best_size = -1;
    std::optional<Mask> best_set;
    std::vector<Mask> found;
    std::uint64_t nodes = 0;
};

template <class Ops>
class Engine {
public:
    using Mask = typename Ops::Mask;

    Engine(const Ops& ops, std::size_t n, KLParams kl, Shared& shared)
        : ops_(ops),
          k_(static_cast<std::size_t>(kl.k)),
          l_(static_cast<std::size_t>(kl.l)),
          shared_(shared),
          sets_(n + 2, ops.zero()),
          layers_(n + 2, std::vector<Mask>(k_ + 1, ops.zero())),
          scratch_(k_ + 1, ops.zero()) {
        result_.by_size.assign(n + 1, 0);
    }

    Snapshot<Ops> root(std::size_t n) {
        Mask all = ops_.zero();
        for (std::size_t x = 0; x < n; ++x) Ops::set(all, x);
        return Snapshot<Ops>{0, 0, ops_.zero(), layers_[0], candidates(0, all)};
    }

    /// Explores `snap`, handing nodes at `split_depth` to `tasks` instead of descending.
    void split(const Snapshot<Ops>& snap, std::size_t split_depth, std::vector<Snapshot<Ops>>& tasks) {
        split_depth_ = split_depth;
        tasks_ = &tasks;
        run(snap);
        split_depth_ = npos;
        tasks_ = nullptr;
    }

    void run(const Snapshot<Ops>& snap) {
        sets_[snap.depth] = snap.set;
        layers_[snap.depth] = snap.layers;
        dfs(snap.depth, snap.size, snap.cand);
        flush_progress(snap.depth);
    }

    TaskResult<Ops> take_result() {
        TaskResult<Ops> out = std::move(result_);
        result_ = TaskResult<Ops>{};
        result_.by_size.assign(out.by_size.size(), 0);
        return out;
    }

private:
    void dfs(std::size_t depth, Int size, const Mask& cand) {
        if (shared_.stop.load(std::memory_order_relaxed)) return;
        if (depth == split_depth_) {
            tasks_->push_back(Snapshot<Ops>{depth, size, sets_[depth], layers_[depth], cand});
            return;
        }
        if (++result_.nodes % kProgressInterval == 0) flush_progress(depth);
        visit(depth, size);

        const auto reachable = [&](std::size_t rest) { return size + static_cast<Int>(rest); };
        if (!keep_going(reachable(Ops::count(cand)))) return;

        Mask rest = cand;
        while (!Ops::empty(rest)) {
            const std::size_t x = Ops::pop_first(rest);
            if (!keep_going(reachable(Ops::count(rest)) + 1)) break;
            push(depth, x);
            const Mask next = candidates(depth + 1, rest);
            dfs(depth + 1, size + 1, next);
            if (shared_.stop.load(std::memory_order_relaxed)) return;
        }
    }

    /// Whether a subtree whose sets reach at most `bound` elements can still matter.
    bool keep_going(Int bound) const {
        switch (shared_.mode) {
            case Mode::maximize: return bound > shared_.best.load(std::memory_order_relaxed);
            case Mode::enumerate: return bound >= shared_.target;
            case Mode::count: return true;
        }
        return true;
    }

    void visit(std::size_t depth, Int size) {
        switch (shared_.mode) {
            case Mode::count:
                ++result_.by_size[static_cast<std::size_t>(size)];
                break;
            case Mode::maximize:
                if (size > result_.best_size) {
                    result_.best_size = size;
                    result_.best_set = sets_[depth];
                    shared_.raise_best(size);
                }
                break;
            case Mode::enumerate:
                if (size == shared_.target) {
                    result_.found.push_back(sets_[depth]);
                    if (shared_.stop_at_first) shared_.stop = true;
                }
                break;
        }
    }

    /// Layers of A + {x} from the layers of A: (hA)' = hA | (x + ((h-1)A)').
    void push(std::size_t depth, std::size_t x) {
        const auto& cur = layers_[depth];
        auto& next = layers_[depth + 1];
        next[1] = Ops::with(cur[1], x);
        for (std::size_t h = 2; h <= k_; ++h) {
            next[h] = ops_.translate(next[h - 1], x);
            Ops::unite(next[h], cur[h]);
        }
        sets_[depth + 1] = Ops::with(sets_[depth], x);
    }

    /// Members y of `pool` for which A + {y} stays (k,l)-sum-free.
    Mask candidates(std::size_t depth, const Mask& pool) {
        const auto& cur = layers_[depth];
        Mask out = ops_.zero();
        Mask rest = pool;
        while (!Ops::empty(rest)) {
            const std::size_t y = Ops::pop_first(rest);
            scratch_[1] = Ops::with(cur[1], y);
            for (std::size_t h = 2; h <= k_; ++h) {
                scratch_[h] = ops_.translate(scratch_[h - 1], y);
                Ops::unite(scratch_[h], cur[h]);
            }
            if (!Ops::intersects(scratch_[k_], scratch_[l_])) Ops::set(out, y);
        }
        return out;
    }

    void flush_progress(std::size_t depth) {
        const std::uint64_t total = shared_.nodes.fetch_add(result_.nodes - reported_) + (result_.nodes - reported_);
        reported_ = result_.nodes;
        if (shared_.progress && *shared_.progress) {
            std::lock_guard lock(shared_.progress_mutex);
            (*shared_.progress)(Progress{total, depth, shared_.best.load()});
        }
    }

    const Ops& ops_;
    std::size_t k_;
    std::size_t l_;
    Shared& shared_;
    std::vector<Mask> sets_;
    std::vector<std::vector<Mask>> layers_;
    std::vector<Mask> scratch_;
    TaskResult<Ops> result_;
    std::uint64_t reported_ = 0;
    std::size_t split_depth_ = npos;
    std::vector<Snapshot<Ops>>* tasks_ = nullptr;
};

unsigned worker_count(const SearchOptions& opts) {
    unsigned t = opts.threads != 0 ? opts.threads : std::thread::hardware_concurrency();
    return std::max(1u, t);
}

/// Splits the tree at opts.fork_depth and explores the pieces on a worker pool.
/// Element 0 of the returned vector holds the nodes above the fork.
template <class Ops>
std::vector<TaskResult<Ops>> run_search(const GroupSpec& g, const Ops& ops, KLParams kl, Shared& shared,
                                        const SearchOptions& opts) {
    Engine<Ops> head(ops, g.size(), kl, shared);
    std::vector<Snapshot<Ops>> tasks;
    const unsigned threads = worker_count(opts);
    if (threads == 1) {
        head.run(head.root(g.size()));
        std::vector<TaskResult<Ops>> out;
        out.push_back(head.take_result());
        return out;
    }
    head.split(head.root(g.size()), std::max<std::size_t>(opts.fork_depth, 1), tasks);

    std::vector<TaskResult<Ops>> results(tasks.size() + 1);
    results[0] = head.take_result();
    std::atomic<std::size_t> next{0};
    auto worker = [&] {
        Engine<Ops> engine(ops, g.size(), kl, shared);
        for (std::size_t i = next++; i < tasks.size(); i = next++) {
            engine.run(tasks[i]);
            results[i + 1] = engine.take_result();
        }
    };
    {
        std::vector<std::jthread> pool;
        for (unsigned t = 0; t < std::min<std::size_t>(threads, tasks.size()); ++t) pool.emplace_back(worker);
    }
    return results;
}

void check_limit(const GroupSpec& g, Int limit, bool force, const char* what) {
    if (!force && g.order() > limit) throw LimitExceeded(what, g.order(), limit);
}

template <class Ops>
std::optional<Bitset> first_of_size(const GroupSpec& g, const Ops& ops, KLParams kl, Int size) {
    Shared shared;
    shared.mode = Mode::enumerate;
    shared.target = size;
    shared.stop_at_first = true;
    SearchOptions seq;
    seq.threads = 1;
    auto results = run_search(g, ops, kl, shared, seq);
    for (auto& r : results) {
        if (!r.found.empty()) return ops.to_bitset(r.found.front());
    }
    return std::nullopt;
}

template <class Ops>
SearchResult maximize(const GroupSpec& g, const Ops& ops, KLParams kl, const SearchOptions& opts) {
    const auto start = std::chrono::steady_clock::now();
    Shared shared;
    shared.mode = Mode::maximize;
    shared.progress = &opts.progress;

    Subset seed(g);
    if (opts.seed_with_witness) seed = witness::best_witness(g, kl).members;
    const auto seed_size = static_cast<Int>(seed.size());
    // the empty set is always feasible; a seed of size s means only larger sets are sought
    shared.best = opts.seed_with_witness ? seed_size : -1;

    auto results = run_search(g, ops, kl, shared, opts);

    SearchResult out{seed_size, seed, 0, {}};
    std::optional<Bitset> best_bits;
    for (auto& r : results) {
        out.nodes_explored += r.nodes;
        if (r.best_set && r.best_size > out.max_size) {
            out.max_size = r.best_size;
            best_bits = ops.to_bitset(*r.best_set);
        }
        if (r.best_set && r.best_size == out.max_size && !best_bits && !opts.seed_with_witness) {
            best_bits = ops.to_bitset(*r.best_set);
        }
    }
    if (best_bits) {
        if (results.size() > 1) {
            // which worker reached the maximum first depends on timing; report the
            // lexicographically first maximum set instead
            best_bits = first_of_size(g, ops, kl, out.max_size);
        }
        out.witness = Subset(g, std::move(*best_bits));
    }
    out.elapsed = std::chrono::steady_clock::now() - start;
    return out;
}

template <class Ops>
CountResult count_impl(const GroupSpec& g, const Ops& ops, KLParams kl, const SearchOptions& opts) {
    Shared shared;
    shared.mode = Mode::count;
    shared.progress = &opts.progress;
    auto results = run_search(g, ops, kl, shared, opts);
    std::vector<std::uint64_t> by_size(g.size() + 1, 0);
    for (const auto& r : results) {
        for (std::size_t s = 0; s < by_size.size(); ++s) by_size[s] += r.by_size[s];
    }
    CountResult out;
    for (std::size_t s = 0; s < by_size.size(); ++s) {
        if (by_size[s] == 0) continue;
        out.by_size[static_cast<Int>(s)] = by_size[s];
        if (out.total > std::numeric_limits<std::uint64_t>::max() - by_size[s]) {
            throw std::overflow_error("count_sum_free: total exceeds 64 bits");
        }
        out.total += by_size[s];
    }
    return out;
}

template <class Ops>
std::vector<Subset> enumerate_impl(const GroupSpec& g, const Ops& ops, KLParams kl, Int target,
                                   const SearchOptions& opts) {
    Shared shared;
    shared.mode = Mode::enumerate;
    shared.target = target;
    shared.progress = &opts.progress;
    auto results = run_search(g, ops, kl, shared, opts);
    std::vector<Subset> out;
    for (auto& r : results) {
        for (auto& m : r.found) out.emplace_back(g, ops.to_bitset(m));
    }
    std::sort(out.begin(), out.end(),
              [](const Subset& a, const Subset& b) { return Bitset::lex_compare(a.bits(), b.bits()) < 0; });
    return out;
}

}  // namespace

SearchResult lambda_exact(const GroupSpec& g, KLParams kl, const SearchOptions& opts) {
    kl = KLParams::make(kl.k, kl.l);
    check_limit(g, opts.limits.exact, opts.force, "lambda_exact");
    if (g.size() <= 64) return maximize(g, WordOps(g), kl, opts);
    return maximize(g, BitsetOps(g), kl, opts);
}

CountResult count_sum_free(const GroupSpec& g, KLParams kl, const SearchOptions& opts) {
    kl = KLParams::make(kl.k, kl.l);
    check_limit(g, opts.limits.count, opts.force, "count_sum_free");
    if (g.size() <= 64) return count_impl(g, WordOps(g), kl, opts);
    return count_impl(g, BitsetOps(g), kl, opts);
}

std::vector<Subset> enumerate_maximum(const GroupSpec& g, KLParams kl, const SearchOptions& opts) {
    kl = KLParams::make(kl.k, kl.l);
    check_limit(g, opts.limits.exact, opts.force, "enumerate_maximum");
    const Int target = lambda_exact(g, kl, opts).max_size;
    if (g.size() <= 64) return enumerate_impl(g, WordOps(g), kl, target, opts);
    return enumerate_impl(g, BitsetOps(g), kl, target, opts);
}

}  // namespace klsf::oracle
