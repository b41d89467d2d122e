#pragma once

// Canonical model of the Cartesian path power P_m^k.
//
// Vertices are k-tuples over {1..m}. They are ranked in mixed radix with the
// LAST coordinate as the most significant digit, so appending a coordinate
// (the Q-map) is a constant rank offset and the m diagonal blocks of the
// recursive signed matrices occupy contiguous index ranges.

#include <cstdint>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "json.hpp"

namespace pathpower {

using Rank = std::int64_t;

inline constexpr Rank kDefaultSizeCap = 65536;

struct invalid_vertex : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

struct size_cap_exceeded : std::length_error {
    using std::length_error::length_error;
};

/// The graph P_m^k, described by its parameters only.
class PathPower {
public:
    PathPower(int m, int k, Rank size_cap = kDefaultSizeCap);

    int m() const { return m_; }
    int k() const { return k_; }
    Rank n_vertices() const { return n_; }
    Rank size_cap() const { return cap_; }

    /// m^axis, the rank weight of coordinate `axis` (0-based).
    Rank stride(int axis) const;

    /// Same m and cap, different number of factors.
    PathPower with_k(int k) const { return PathPower(m_, k, cap_); }

    Rank edge_count() const { return Rank(k_) * (m_ - 1) * (n_ / m_); }

    friend bool operator==(const PathPower& a, const PathPower& b) {
        return a.m_ == b.m_ && a.k_ == b.k_;
    }

private:
    int m_;
    int k_;
    Rank n_;
    Rank cap_;
};

/// 1-based coordinates, coords[0] is the least significant digit of the rank.
struct Vertex {
    std::vector<int> coords;

    friend bool operator==(const Vertex&, const Vertex&) = default;
};

Rank rank(const Vertex& v, const PathPower& g);
Vertex unrank(Rank r, const PathPower& g);

/// 1-norm distance exactly one.
bool adjacent(const Vertex& u, const Vertex& v);

std::vector<Vertex> neighbors(const Vertex& v, const PathPower& g);
std::vector<Rank> neighbor_ranks(Rank r, const PathPower& g);

/// Visits the neighbors of rank r (unsorted) without allocating.
template <typename Fn>
void for_each_neighbor(Rank r, const PathPower& g, Fn&& fn) {
    Rank stride = 1;
    const int m = g.m();
    for (int axis = 0; axis < g.k(); ++axis) {
        const Rank digit = (r / stride) % m;
        if (digit > 0) fn(r - stride);
        if (digit + 1 < m) fn(r + stride);
        stride *= m;
    }
}

/// Parity of the coordinate sum; the two bipartition classes.
int parity_class(Rank r, const PathPower& g);

/// Subset of the vertices of a PathPower, stored as a bitset over ranks.
class VertexSet {
public:
    explicit VertexSet(PathPower g);

    static VertexSet from_ranks(PathPower g, std::span<const Rank> ranks);
    static VertexSet full(PathPower g);

    const PathPower& graph() const { return g_; }
    Rank universe() const { return g_.n_vertices(); }
    Rank size() const { return size_; }
    bool empty() const { return size_ == 0; }

    bool contains(Rank r) const;
    void insert(Rank r);
    void erase(Rank r);

    /// Members in increasing rank order.
    std::vector<Rank> ranks() const;

    VertexSet complement() const;

    friend bool operator==(const VertexSet& a, const VertexSet& b) {
        return a.g_ == b.g_ && a.words_ == b.words_;
    }

private:
    void check_range(Rank r) const;

    PathPower g_;
    std::vector<std::uint64_t> words_;
    Rank size_ = 0;
};

/// Maximum degree of the induced subgraph G[S]. Throws on empty S.
int induced_max_degree(const VertexSet& s);

/// {"m":int,"k":int,"ranks":[sorted ints]}
nlohmann::json to_json(const VertexSet& s);
VertexSet vertex_set_from_json(const nlohmann::json& j, Rank size_cap = kDefaultSizeCap);

}  // namespace pathpower
