#include "pathpower/constructions.hpp"

#include <limits>
#include <stdexcept>
#include <string>
#include <vector>

namespace pathpower {

ConstructionKind parse_construction_kind(std::string_view name) {
    if (name == "vk") return ConstructionKind::Vk;
    if (name == "vkc") return ConstructionKind::VkComplement;
    if (name == "xk") return ConstructionKind::Xk;
    if (name == "xkc") return ConstructionKind::XkComplement;
    throw std::invalid_argument("unknown construction kind '" + std::string(name) + "'");
}

std::string_view to_string(ConstructionKind kind) {
    switch (kind) {
        case ConstructionKind::Vk: return "vk";
        case ConstructionKind::VkComplement: return "vkc";
        case ConstructionKind::Xk: return "xk";
        case ConstructionKind::XkComplement: return "xkc";
    }
    return "?";
}

VertexSet q_map(const VertexSet& s, int a) {
    const PathPower& g = s.graph();
    if (a < 1 || a > g.m()) {
        throw std::out_of_range("q_map: a = " + std::to_string(a) + " outside [1, " +
                                std::to_string(g.m()) + "]");
    }
    VertexSet out(g.with_k(g.k() + 1));
    const Rank offset = Rank(a - 1) * g.n_vertices();
    for (Rank r : s.ranks()) out.insert(r + offset);
    return out;
}

namespace {

// Lifts `base` over [m]^{k-1} to [m]^k: blocks with odd last coordinate copy
// the set, blocks with even last coordinate take its complement.
VertexSet alternate_lift(const VertexSet& base) {
    const PathPower& g = base.graph();
    const VertexSet comp = base.complement();
    const std::vector<Rank> in = base.ranks();
    const std::vector<Rank> out_ranks = comp.ranks();
    VertexSet lifted(g.with_k(g.k() + 1));
    for (int a = 1; a <= g.m(); ++a) {
        const Rank offset = Rank(a - 1) * g.n_vertices();
        for (Rank r : (a % 2 == 1) ? in : out_ranks) lifted.insert(r + offset);
    }
    return lifted;
}

VertexSet lift_to(VertexSet set, int k) {
    // Validate the target size up front so a cap violation fails before any work.
    (void)set.graph().with_k(k);
    while (set.graph().k() < k) set = alternate_lift(set);
    return set;
}

}  // namespace

VertexSet build_vk(int m, int k, Rank size_cap) {
    const PathPower g1(m, 1, size_cap);
    VertexSet v1(g1);
    for (int i = 1; i <= m; i += 2) v1.insert(i - 1);
    return lift_to(std::move(v1), k);
}

VertexSet build_xk(int n, int k, Rank size_cap) {
    if (n < 1) throw std::invalid_argument("build_xk: n must be >= 1");
    const int m = 2 * n + 1;
    const PathPower g1(m, 1, size_cap);
    VertexSet x1(g1);
    for (int i = 2; i <= 2 * n; i += 2) x1.insert(i - 1);
    x1.insert(0);
    x1.insert(m - 1);
    return lift_to(std::move(x1), k);
}

VertexSet build(const ConstructionSpec& spec, Rank size_cap) {
    switch (spec.kind) {
        case ConstructionKind::Vk: return build_vk(spec.m, spec.k, size_cap);
        case ConstructionKind::VkComplement: return build_vk(spec.m, spec.k, size_cap).complement();
        case ConstructionKind::Xk:
        case ConstructionKind::XkComplement: {
            if (spec.m % 2 == 0 || spec.m < 3) {
                throw std::invalid_argument("X_k is defined only for odd m >= 3");
            }
            VertexSet x = build_xk((spec.m - 1) / 2, spec.k, size_cap);
            return spec.kind == ConstructionKind::Xk ? x : x.complement();
        }
    }
    throw std::logic_error("unreachable");
}

std::uint64_t alpha_formula(int m, int k) {
    if (m < 2 || k < 1) throw std::invalid_argument("alpha_formula: need m >= 2, k >= 1");
    std::uint64_t p = 1;
    for (int i = 0; i < k; ++i) {
        if (p > std::numeric_limits<std::uint64_t>::max() / static_cast<std::uint64_t>(m)) {
            throw std::overflow_error("alpha_formula: m^k overflows 64 bits");
        }
        p *= static_cast<std::uint64_t>(m);
    }
    return p / 2 + p % 2;
}

bool is_independent(const VertexSet& s) {
    for (Rank r : s.ranks()) {
        bool clash = false;
        // Each edge is seen from both ends; checking the larger endpoint suffices.
        for_each_neighbor(r, s.graph(), [&](Rank u) { clash = clash || (u < r && s.contains(u)); });
        if (clash) return false;
    }
    return true;
}

}  // namespace pathpower
