#pragma once

// Reproducible verification reports and tables tying the modules together.

#include <cstdint>
#include <functional>
#include <random>
#include <string>
#include <string_view>
#include <vector>

#include "json.hpp"
#include "pathpower/grid.hpp"
#include "pathpower/signed_matrix.hpp"

namespace pathpower {

inline constexpr std::string_view kVersion = "1.0.0";

/// ASCII "P3P5".
inline constexpr std::uint64_t kDefaultSeed = 0x50335035;

/// Stable per-check stream: FNV-1a over the check name, mixed with the seed.
std::uint64_t sub_seed(std::string_view check_name, std::uint64_t seed);

/// Uniform subset of `size` ranks (Floyd's algorithm on raw engine output, so
/// the draw is identical across standard libraries).
VertexSet random_subset(const PathPower& g, Rank size, std::mt19937_64& rng);

struct CheckResult {
    std::string name;
    bool pass = false;
    nlohmann::json measured = nlohmann::json::object();
    nlohmann::json tolerance = nlohmann::json::object();
    std::string error;
    double seconds = 0.0;
};

struct Report {
    nlohmann::json config;
    std::vector<CheckResult> checks;
    double seconds = 0.0;

    bool pass() const;
    const CheckResult* find(std::string_view name) const;
    nlohmann::json to_json(bool include_timing = true) const;
    std::string to_csv(bool include_timing = true) const;
};

struct VerifyOptions {
    Rank max_size = 729;
    double tol = 1e-8;
    std::uint64_t seed = kDefaultSeed;
    int workers = 1;
    /// Applied to every signed matrix before the exact-structure check.
    std::function<void(SignedMatrix::Storage&)> matrix_hook;
};

/// Runs every verification check on instances with at most max_size vertices.
Report run_verify_all(const VerifyOptions& opts = {});

enum class TableKind { Bounds, Beta, Alpha };
TableKind parse_table_kind(std::string_view name);  // bounds|beta|alpha

struct TableRange {
    int first;
    int last;
};

/// Rows of the requested table. `outer` ranges over m (bounds, alpha) or n
/// (beta); `inner` ranges over k and is ignored for beta.
nlohmann::json export_table(TableKind kind, TableRange outer, TableRange inner,
                            Rank size_cap = kDefaultSizeCap);

/// Array of flat objects -> CSV with the first row's keys as the header.
std::string table_to_csv(const nlohmann::json& rows);

}  // namespace pathpower
