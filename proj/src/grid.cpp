#include "pathpower/grid.hpp"

#include <algorithm>
#include <bit>
#include <cstdlib>
#include <limits>

namespace pathpower {

PathPower::PathPower(int m, int k, Rank size_cap) : m_(m), k_(k), n_(1), cap_(size_cap) {
    if (m < 2) throw std::invalid_argument("path length m must be >= 2");
    if (k < 1) throw std::invalid_argument("number of factors k must be >= 1");
    for (int i = 0; i < k; ++i) {
        if (n_ > size_cap / m) {
            throw size_cap_exceeded("m^k = " + std::to_string(m) + "^" + std::to_string(k) +
                                    " exceeds size cap " + std::to_string(size_cap));
        }
        n_ *= m;
    }
}

Rank PathPower::stride(int axis) const {
    if (axis < 0 || axis >= k_) throw std::out_of_range("axis out of range");
    Rank s = 1;
    for (int i = 0; i < axis; ++i) s *= m_;
    return s;
}

Rank rank(const Vertex& v, const PathPower& g) {
    if (static_cast<int>(v.coords.size()) != g.k()) {
        throw invalid_vertex("vertex has " + std::to_string(v.coords.size()) +
                             " coordinates, graph has k = " + std::to_string(g.k()));
    }
    Rank r = 0;
    for (int i = g.k() - 1; i >= 0; --i) {
        const int c = v.coords[i];
        if (c < 1 || c > g.m()) {
            throw invalid_vertex("coordinate " + std::to_string(c) + " outside [1, " +
                                 std::to_string(g.m()) + "]");
        }
        r = r * g.m() + (c - 1);
    }
    return r;
}

Vertex unrank(Rank r, const PathPower& g) {
    if (r < 0 || r >= g.n_vertices()) {
        throw std::out_of_range("rank " + std::to_string(r) + " outside [0, " +
                                std::to_string(g.n_vertices()) + ")");
    }
    Vertex v;
    v.coords.resize(g.k());
    for (int i = 0; i < g.k(); ++i) {
        v.coords[i] = static_cast<int>(r % g.m()) + 1;
        r /= g.m();
    }
    return v;
}

bool adjacent(const Vertex& u, const Vertex& v) {
    if (u.coords.size() != v.coords.size()) {
        throw std::invalid_argument("adjacent: dimension mismatch");
    }
    long dist = 0;
    for (std::size_t i = 0; i < u.coords.size(); ++i) {
        dist += std::labs(static_cast<long>(u.coords[i]) - v.coords[i]);
        if (dist > 1) return false;
    }
    return dist == 1;
}

std::vector<Rank> neighbor_ranks(Rank r, const PathPower& g) {
    if (r < 0 || r >= g.n_vertices()) throw std::out_of_range("rank out of range");
    std::vector<Rank> out;
    out.reserve(2 * g.k());
    for_each_neighbor(r, g, [&](Rank u) { out.push_back(u); });
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<Vertex> neighbors(const Vertex& v, const PathPower& g) {
    std::vector<Vertex> out;
    for (Rank u : neighbor_ranks(rank(v, g), g)) out.push_back(unrank(u, g));
    return out;
}

int parity_class(Rank r, const PathPower& g) {
    int sum = 0;
    for (int i = 0; i < g.k(); ++i) {
        sum += static_cast<int>(r % g.m());
        r /= g.m();
    }
    return sum & 1;
}

VertexSet::VertexSet(PathPower g)
    : g_(g), words_(static_cast<std::size_t>((g.n_vertices() + 63) / 64), 0) {}

VertexSet VertexSet::from_ranks(PathPower g, std::span<const Rank> ranks) {
    VertexSet s(g);
    for (Rank r : ranks) s.insert(r);
    return s;
}

VertexSet VertexSet::full(PathPower g) {
    VertexSet s(g);
    for (Rank r = 0; r < g.n_vertices(); ++r) s.insert(r);
    return s;
}

void VertexSet::check_range(Rank r) const {
    if (r < 0 || r >= universe()) {
        throw std::out_of_range("rank " + std::to_string(r) + " outside vertex range");
    }
}

bool VertexSet::contains(Rank r) const {
    check_range(r);
    return (words_[r >> 6] >> (r & 63)) & 1u;
}

void VertexSet::insert(Rank r) {
    check_range(r);
    auto& w = words_[r >> 6];
    const std::uint64_t bit = std::uint64_t{1} << (r & 63);
    if (!(w & bit)) {
        w |= bit;
        ++size_;
    }
}

void VertexSet::erase(Rank r) {
    check_range(r);
    auto& w = words_[r >> 6];
    const std::uint64_t bit = std::uint64_t{1} << (r & 63);
    if (w & bit) {
        w &= ~bit;
        --size_;
    }
}

std::vector<Rank> VertexSet::ranks() const {
    std::vector<Rank> out;
    out.reserve(static_cast<std::size_t>(size_));
    for (std::size_t i = 0; i < words_.size(); ++i) {
        std::uint64_t w = words_[i];
        while (w) {
            out.push_back(static_cast<Rank>(i * 64 + std::countr_zero(w)));
            w &= w - 1;
        }
    }
    return out;
}

VertexSet VertexSet::complement() const {
    VertexSet c(g_);
    for (std::size_t i = 0; i < words_.size(); ++i) c.words_[i] = ~words_[i];
    const Rank tail = universe() & 63;
    if (tail != 0) c.words_.back() &= (std::uint64_t{1} << tail) - 1;
    c.size_ = universe() - size_;
    return c;
}

int induced_max_degree(const VertexSet& s) {
    if (s.empty()) throw std::invalid_argument("induced_max_degree: empty vertex set");
    int best = 0;
    for (Rank r : s.ranks()) {
        int d = 0;
        for_each_neighbor(r, s.graph(), [&](Rank u) { d += s.contains(u); });
        best = std::max(best, d);
    }
    return best;
}

nlohmann::json to_json(const VertexSet& s) {
    return {{"m", s.graph().m()}, {"k", s.graph().k()}, {"ranks", s.ranks()}};
}

VertexSet vertex_set_from_json(const nlohmann::json& j, Rank size_cap) {
    const PathPower g(j.at("m").get<int>(), j.at("k").get<int>(), size_cap);
    const auto ranks = j.at("ranks").get<std::vector<Rank>>();
    if (!std::is_sorted(ranks.begin(), ranks.end()) ||
        std::adjacent_find(ranks.begin(), ranks.end()) != ranks.end()) {
        throw std::invalid_argument("vertex set ranks must be strictly increasing");
    }
    return VertexSet::from_ranks(g, ranks);
}

}  // namespace pathpower
