#pragma once

// Exact search oracles on P_m^k: maximum independent set by branch and bound,
// the minimum induced maximum degree over (alpha+s)-subsets, and the
// degree/eigenvalue bound verifier.

#include <cstdint>
#include <optional>
#include <string_view>

#include "pathpower/grid.hpp"
#include "pathpower/signed_matrix.hpp"

namespace pathpower {

struct SearchBudget {
    std::uint64_t max_subsets = 4'000'000'000ULL;
    double max_seconds = 60.0;
    int workers = 1;
};

enum class ResultKind { Exact, Lower, UpperUnproven };
std::string_view to_string(ResultKind kind);  // exact|lower|upper-unproven

struct MisResult {
    int size = 0;
    VertexSet witness;
    /// False when the budget ran out; `size` is then only a lower bound on alpha.
    bool proven_optimal = false;
    std::uint64_t nodes = 0;
};

MisResult max_independent_set(const PathPower& g, const SearchBudget& budget = {});

struct FSearchOptions {
    /// Stop as soon as a subset meets lower_bound_even (even m). The trivial
    /// bound 1 always applies.
    bool spectral_early_exit = true;
};

struct FResult {
    int alpha = 0;
    int subset_size = 0;
    std::optional<int> value;
    std::optional<VertexSet> witness;
    ResultKind kind = ResultKind::UpperUnproven;
    /// Partial and complete subsets visited by the scan.
    std::uint64_t subsets_examined = 0;
    /// True when the search stopped on reaching a proven lower bound.
    bool early_exit = false;
};

/// min over |S| = alpha + s of the induced maximum degree, with a witness.
FResult brute_force_f(const PathPower& g, int s, const SearchBudget& budget = {},
                      const FSearchOptions& opts = {});

/// induced_max_degree(S) >= lambda_1(A[S]) - tol.
bool huang_bound_check(const SignedMatrix& a, const VertexSet& s, double tol);

/// ceil(sqrt(k * beta_n)).
int lower_bound_even(int n, int k);

struct TheoremValue {
    ResultKind kind;
    int value;
};

/// m = 3: exact 2; odd m >= 5: exact 1; m = 2n: lower bound ceil(sqrt(k beta_n)).
TheoremValue f_value_theorem(int m, int k);

}  // namespace pathpower
