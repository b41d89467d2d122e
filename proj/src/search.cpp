#include "pathpower/search.hpp"

#include <algorithm>
#include <atomic>
#include <bit>
#include <chrono>
#include <cmath>
#include <limits>
#include <mutex>
#include <thread>
#include <vector>

#include "pathpower/constructions.hpp"
#include "pathpower/spectral.hpp"

namespace pathpower {

std::string_view to_string(ResultKind kind) {
    switch (kind) {
        case ResultKind::Exact: return "exact";
        case ResultKind::Lower: return "lower";
        case ResultKind::UpperUnproven: return "upper-unproven";
    }
    return "?";
}

namespace {

using Clock = std::chrono::steady_clock;

class Deadline {
public:
    explicit Deadline(double seconds)
        : end_(Clock::now() + std::chrono::duration_cast<Clock::duration>(
                                  std::chrono::duration<double>(seconds))) {}
    bool passed() const { return Clock::now() >= end_; }

private:
    Clock::time_point end_;
};

// Fixed-width bitset over the vertices, sized at runtime.
struct Bits {
    std::vector<std::uint64_t> w;

    explicit Bits(std::size_t n = 0) : w((n + 63) / 64, 0) {}
    void set(std::size_t i) { w[i >> 6] |= std::uint64_t{1} << (i & 63); }
    void reset(std::size_t i) { w[i >> 6] &= ~(std::uint64_t{1} << (i & 63)); }
    bool test(std::size_t i) const { return (w[i >> 6] >> (i & 63)) & 1u; }
    bool none() const {
        return std::all_of(w.begin(), w.end(), [](std::uint64_t x) { return x == 0; });
    }
    int count() const {
        int c = 0;
        for (auto x : w) c += std::popcount(x);
        return c;
    }
    int count_and(const Bits& o) const {
        int c = 0;
        for (std::size_t i = 0; i < w.size(); ++i) c += std::popcount(w[i] & o.w[i]);
        return c;
    }
    void and_not(const Bits& o) {
        for (std::size_t i = 0; i < w.size(); ++i) w[i] &= ~o.w[i];
    }
    bool subset_of(const Bits& o) const {
        for (std::size_t i = 0; i < w.size(); ++i) {
            if (w[i] & ~o.w[i]) return false;
        }
        return true;
    }
    template <typename Fn>
    void for_each(Fn&& fn) const {
        for (std::size_t i = 0; i < w.size(); ++i) {
            std::uint64_t x = w[i];
            while (x) {
                fn(i * 64 + std::countr_zero(x));
                x &= x - 1;
            }
        }
    }
};

std::vector<Bits> adjacency_bits(const PathPower& g) {
    const auto n = static_cast<std::size_t>(g.n_vertices());
    std::vector<Bits> adj(n, Bits(n));
    for (std::size_t v = 0; v < n; ++v) {
        for_each_neighbor(static_cast<Rank>(v), g, [&](Rank u) { adj[v].set(static_cast<std::size_t>(u)); });
    }
    return adj;
}

class MisSearch {
public:
    MisSearch(const PathPower& g, const SearchBudget& budget)
        : g_(g), budget_(budget), deadline_(budget.max_seconds), adj_(adjacency_bits(g)) {}

    MisResult run() {
        const auto n = static_cast<std::size_t>(g_.n_vertices());
        Bits cand(n);
        for (std::size_t v = 0; v < n; ++v) cand.set(v);
        std::vector<std::size_t> chosen;
        expand(cand, chosen);

        MisResult r{static_cast<int>(best_.size()), VertexSet(g_), !aborted_, nodes_};
        for (auto v : best_) r.witness.insert(static_cast<Rank>(v));
        return r;
    }

private:
    // Greedy clique cover of `cand`; its size bounds the independent sets inside.
    int clique_cover(const Bits& cand) const {
        std::vector<Bits> cliques;
        cand.for_each([&](std::size_t v) {
            for (auto& c : cliques) {
                if (c.subset_of(adj_[v])) {
                    c.set(v);
                    return;
                }
            }
            cliques.emplace_back(adj_.size()).set(v);
        });
        return static_cast<int>(cliques.size());
    }

    bool out_of_budget() {
        ++nodes_;
        if (nodes_ > budget_.max_subsets) aborted_ = true;
        if ((nodes_ & 1023) == 0 && deadline_.passed()) aborted_ = true;
        return aborted_;
    }

    void expand(Bits cand, std::vector<std::size_t>& chosen) {
        if (out_of_budget()) return;
        if (cand.none()) {
            if (chosen.size() > best_.size()) best_ = chosen;
            return;
        }
        if (static_cast<int>(chosen.size()) + clique_cover(cand) <= static_cast<int>(best_.size())) {
            return;
        }

        // Lowest-degree vertex first (degeneracy order); degree <= 1 vertices
        // belong to some maximum independent set of G[cand] and need no branch.
        std::size_t pick = 0, hub = 0;
        int low = std::numeric_limits<int>::max(), high = -1;
        cand.for_each([&](std::size_t v) {
            const int d = cand.count_and(adj_[v]);
            if (d < low) low = d, pick = v;
            if (d > high) high = d, hub = v;
        });

        const std::size_t v = low <= 1 ? pick : hub;
        Bits with = cand;
        with.reset(v);
        with.and_not(adj_[v]);
        chosen.push_back(v);
        expand(std::move(with), chosen);
        chosen.pop_back();
        if (low <= 1 || aborted_) return;

        cand.reset(v);
        expand(std::move(cand), chosen);
    }

    const PathPower& g_;
    SearchBudget budget_;
    Deadline deadline_;
    std::vector<Bits> adj_;
    std::vector<std::size_t> best_;
    std::uint64_t nodes_ = 0;
    bool aborted_ = false;
};

// Shared state of one f-search; workers pull first elements from `next_first`.
struct FShared {
    std::atomic<int> best;
    std::atomic<bool> stop{false};
    std::atomic<bool> aborted{false};
    std::atomic<std::uint64_t> examined{0};
    std::atomic<int> next_first{0};
    int exit_at = 1;
    std::mutex mu;
    std::vector<std::vector<Rank>> witnesses;  // one per value improvement
    std::vector<int> witness_values;
};

class FWorker {
public:
    FWorker(const PathPower& g, int target, const SearchBudget& budget, const Deadline& deadline,
            FShared& shared)
        : g_(g),
          n_(static_cast<int>(g.n_vertices())),
          target_(target),
          budget_(budget),
          deadline_(deadline),
          shared_(shared),
          in_set_(n_, 0),
          deg_(n_, 0),
          max_at_(target + 1, 0),
          // Flush often enough that a small budget is honoured exactly.
          flush_every_(std::clamp<std::uint64_t>(budget.max_subsets / (4ULL * budget.workers), 1, 4096)) {
        chosen_.reserve(target);
    }

    void run() {
        for (;;) {
            const int first = shared_.next_first.fetch_add(1);
            if (first > n_ - target_ || shared_.stop.load()) break;
            if (!try_add(first, 0)) continue;
            descend(first + 1);
            remove(first);
        }
        shared_.examined.fetch_add(local_examined_);
    }

private:
    bool tick() {
        ++local_examined_;
        if (local_examined_ >= flush_every_) {
            const auto total = shared_.examined.fetch_add(local_examined_) + local_examined_;
            local_examined_ = 0;
            if (total > budget_.max_subsets || deadline_.passed()) {
                shared_.aborted.store(true);
                shared_.stop.store(true);
            }
        }
        return !shared_.stop.load(std::memory_order_relaxed);
    }

    // Adds v if no chosen vertex (v included) reaches the current best degree.
    bool try_add(int v, int depth) {
        const int limit = shared_.best.load(std::memory_order_relaxed);
        int d = 0;
        bool ok = true;
        for_each_neighbor(v, g_, [&](Rank u) {
            if (in_set_[u]) {
                ++d;
                if (deg_[u] + 1 >= limit) ok = false;
            }
        });
        if (!ok || d >= limit) return false;
        in_set_[v] = 1;
        deg_[v] = d;
        int m = std::max(max_at_[depth], d);
        for_each_neighbor(v, g_, [&](Rank u) {
            if (in_set_[u] && u != v) m = std::max(m, ++deg_[u]);
        });
        chosen_.push_back(v);
        max_at_[depth + 1] = m;
        return true;
    }

    void remove(int v) {
        for_each_neighbor(v, g_, [&](Rank u) {
            if (in_set_[u]) --deg_[u];
        });
        in_set_[v] = 0;
        deg_[v] = 0;
        chosen_.pop_back();
    }

    void descend(int start) {
        const int depth = static_cast<int>(chosen_.size());
        if (max_at_[depth] >= shared_.best.load(std::memory_order_relaxed)) return;
        if (depth == target_) {
            record(max_at_[depth]);
            return;
        }
        const int last = n_ - (target_ - depth);
        for (int v = start; v <= last; ++v) {
            if (!tick()) return;
            if (!try_add(v, depth)) continue;
            descend(v + 1);
            remove(v);
            if (max_at_[depth] >= shared_.best.load(std::memory_order_relaxed)) return;
        }
    }

    void record(int value) {
        std::lock_guard lock(shared_.mu);
        if (value >= shared_.best.load()) return;
        shared_.best.store(value);
        shared_.witnesses.emplace_back(chosen_.begin(), chosen_.end());
        shared_.witness_values.push_back(value);
        if (value <= shared_.exit_at) shared_.stop.store(true);
    }

    const PathPower& g_;
    int n_;
    int target_;
    const SearchBudget& budget_;
    const Deadline& deadline_;
    FShared& shared_;
    std::vector<char> in_set_;
    std::vector<int> deg_;
    std::vector<int> max_at_;
    std::vector<Rank> chosen_;
    std::uint64_t flush_every_;
    std::uint64_t local_examined_ = 0;
};

}  // namespace

MisResult max_independent_set(const PathPower& g, const SearchBudget& budget) {
    return MisSearch(g, budget).run();
}

FResult brute_force_f(const PathPower& g, int s, const SearchBudget& budget,
                      const FSearchOptions& opts) {
    if (s < 1) throw std::invalid_argument("brute_force_f: s must be >= 1");
    if (budget.workers < 1) throw std::invalid_argument("brute_force_f: workers must be >= 1");
    const auto alpha = static_cast<int>(alpha_formula(g.m(), g.k()));
    const int target = alpha + s;
    if (target > g.n_vertices()) {
        throw std::invalid_argument("brute_force_f: alpha + s exceeds the vertex count");
    }

    FResult result;
    result.alpha = alpha;
    result.subset_size = target;

    FShared shared;
    // Every subset is strictly larger than alpha, so its induced degree is >= 1.
    shared.exit_at = 1;
    if (opts.spectral_early_exit && g.m() % 2 == 0) {
        shared.exit_at = std::max(1, lower_bound_even(g.m() / 2, g.k()));
    }
    shared.best.store(2 * g.k() + 1);

    const Deadline deadline(budget.max_seconds);
    if (budget.workers == 1) {
        FWorker(g, target, budget, deadline, shared).run();
    } else {
        std::vector<std::jthread> pool;
        for (int w = 0; w < budget.workers; ++w) {
            pool.emplace_back([&] { FWorker(g, target, budget, deadline, shared).run(); });
        }
    }

    result.subsets_examined = shared.examined.load();
    const bool hit_bound = !shared.witness_values.empty() && shared.witness_values.back() <= shared.exit_at;
    const bool aborted = shared.aborted.load() && !hit_bound;
    if (!shared.witness_values.empty()) {
        result.value = shared.witness_values.back();
        result.witness = VertexSet::from_ranks(g, shared.witnesses.back());
    }
    result.early_exit = hit_bound;
    result.kind = aborted ? ResultKind::UpperUnproven : ResultKind::Exact;
    return result;
}

bool huang_bound_check(const SignedMatrix& a, const VertexSet& s, double tol) {
    if (!check_support(a, s.graph())) {
        throw std::invalid_argument("huang_bound_check: matrix support is not the adjacency of the graph");
    }
    const int delta = induced_max_degree(s);
    const SpectrumReport sub = eigenvalues_sym(principal_submatrix(a, s));
    return delta >= sub.largest() - tol;
}

int lower_bound_even(int n, int k) {
    if (n < 1 || k < 1) throw std::invalid_argument("lower_bound_even: need n >= 1, k >= 1");
    double tol = 1e-12;
    double v = std::sqrt(k * beta(n, tol));
    // Near an integer the ceiling is decided by tighter roots. beta_1 = 1 is
    // found exactly, and for n >= 2 k * beta_n is never a perfect square.
    while (std::abs(v - std::round(v)) < 1e-9 && tol > 1e-15 && n > 1) {
        tol /= 10;
        v = std::sqrt(k * beta(n, tol));
    }
    if (std::abs(v - std::round(v)) < 1e-9 && n == 1) return static_cast<int>(std::round(v));
    return static_cast<int>(std::ceil(v));
}

TheoremValue f_value_theorem(int m, int k) {
    if (m < 2 || k < 1) throw std::invalid_argument("f_value_theorem: need m >= 2, k >= 1");
    if (m == 3) return {ResultKind::Exact, 2};
    if (m % 2 == 1) return {ResultKind::Exact, 1};
    return {ResultKind::Lower, lower_bound_even(m / 2, k)};
}

}  // namespace pathpower
