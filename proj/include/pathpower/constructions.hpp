#pragma once

// Explicit vertex-set constructions on P_m^k: the coordinate-appending map,
// the maximum independent sets V_k, and the (alpha+1)-vertex witness sets X_k
// for odd m.

#include <cstdint>
#include <string_view>

#include "pathpower/grid.hpp"

namespace pathpower {

enum class ConstructionKind { Vk, VkComplement, Xk, XkComplement };

ConstructionKind parse_construction_kind(std::string_view name);  // vk|vkc|xk|xkc
std::string_view to_string(ConstructionKind kind);

struct ConstructionSpec {
    int m;
    int k;
    ConstructionKind kind;
};

/// Appends coordinate `a` to every member: (x_1..x_k) -> (x_1..x_k, a).
/// Under the rank convention this shifts every rank by (a-1)*m^k.
VertexSet q_map(const VertexSet& s, int a);

/// Maximum independent set V_k of P_m^k, |V_k| = ceil(m^k / 2).
VertexSet build_vk(int m, int k, Rank size_cap = kDefaultSizeCap);

/// Witness set X_k in P_{2n+1}^k with |X_k| = alpha + 1.
VertexSet build_xk(int n, int k, Rank size_cap = kDefaultSizeCap);

VertexSet build(const ConstructionSpec& spec, Rank size_cap = kDefaultSizeCap);

/// ceil(m^k / 2). Throws std::overflow_error if m^k does not fit in 64 bits.
std::uint64_t alpha_formula(int m, int k);

bool is_independent(const VertexSet& s);

}  // namespace pathpower
