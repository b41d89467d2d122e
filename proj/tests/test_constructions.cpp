#include "doctest.h"

#include <random>

#include "pathpower/constructions.hpp"

using namespace pathpower;

namespace {

// Independence by scanning every pair of members with the coordinate test.
bool pair_scan_independent(const VertexSet& s) {
    const auto r = s.ranks();
    for (std::size_t i = 0; i < r.size(); ++i) {
        for (std::size_t j = i + 1; j < r.size(); ++j) {
            if (adjacent(unrank(r[i], s.graph()), unrank(r[j], s.graph()))) return false;
        }
    }
    return true;
}

VertexSet random_independent_set(const PathPower& g, std::mt19937_64& rng) {
    VertexSet s(g);
    for (int tries = 0; tries < 3 * g.n_vertices(); ++tries) {
        const Rank r = static_cast<Rank>(rng() % static_cast<std::uint64_t>(g.n_vertices()));
        bool free = !s.contains(r);
        for (Rank u : neighbor_ranks(r, g)) free = free && !s.contains(u);
        if (free) s.insert(r);
    }
    return s;
}

}  // namespace

TEST_CASE("q_map appends a coordinate") {
    const std::vector<Rank> odd{0, 2};
    const VertexSet s = VertexSet::from_ranks(PathPower(3, 1), odd);
    const VertexSet q = q_map(s, 2);
    CHECK(q.graph() == PathPower(3, 2));
    CHECK(q.ranks() == std::vector<Rank>{rank(Vertex{{1, 2}}, q.graph()), rank(Vertex{{3, 2}}, q.graph())});
    CHECK(q_map(VertexSet(PathPower(3, 1)), 3).empty());
    CHECK_THROWS_AS(q_map(s, 0), std::out_of_range);
    CHECK_THROWS_AS(q_map(s, 4), std::out_of_range);
}

TEST_CASE("q_map preserves independence (randomized)") {
    std::mt19937_64 rng(20240611);
    for (auto [m, k] : {std::pair{2, 3}, {3, 2}, {4, 2}, {5, 2}, {3, 3}}) {
        const PathPower g(m, k);
        for (int trial = 0; trial < 25; ++trial) {
            const VertexSet s = random_independent_set(g, rng);
            REQUIRE(pair_scan_independent(s));
            for (int a = 1; a <= m; ++a) {
                const VertexSet q = q_map(s, a);
                REQUIRE(q.size() == s.size());
                REQUIRE(pair_scan_independent(q));
            }
        }
    }
}

TEST_CASE("build_vk examples") {
    const VertexSet v = build_vk(3, 1);
    CHECK(v.ranks() == std::vector<Rank>{0, 2});

    // Q^3: the recursion yields the even-weight class.
    const VertexSet q3 = build_vk(2, 3);
    CHECK(q3.size() == 4);
    for (Rank r : q3.ranks()) CHECK(parity_class(r, q3.graph()) == 0);
    CHECK(pair_scan_independent(q3));

    const VertexSet p32 = build_vk(3, 2);
    CHECK(p32.size() == 5);
    CHECK(pair_scan_independent(p32));
}

TEST_CASE("alpha_formula") {
    CHECK(alpha_formula(3, 2) == 5);
    CHECK(alpha_formula(2, 4) == 8);
    CHECK(alpha_formula(5, 2) == 13);
    CHECK(alpha_formula(2, 63) == (std::uint64_t{1} << 62));
    CHECK_THROWS_AS(alpha_formula(2, 64), std::overflow_error);
    CHECK_THROWS_AS(alpha_formula(1, 3), std::invalid_argument);
}

TEST_CASE("build_xk examples") {
    const VertexSet x1 = build_xk(1, 1);
    CHECK(x1.size() == 3);
    CHECK(induced_max_degree(x1) == 2);

    const VertexSet x5 = build_xk(2, 1);
    CHECK(x5.ranks() == std::vector<Rank>{0, 1, 3, 4});
    CHECK(x5.size() == 4);
    CHECK(induced_max_degree(x5) == 1);

    const VertexSet x2 = build_xk(1, 2);
    CHECK(x2.size() == 6);
    CHECK(induced_max_degree(x2) == 2);
    CHECK_THROWS_AS(build_xk(0, 1), std::invalid_argument);
}

TEST_CASE("is_independent examples") {
    CHECK(is_independent(build_vk(3, 3)));
    CHECK_FALSE(is_independent(build_xk(2, 1)));
    const std::vector<Rank> one{4};
    CHECK(is_independent(VertexSet::from_ranks(PathPower(3, 2), one)));
}

TEST_CASE("construction invariants over a parameter grid") {
    for (int m = 2; m <= 7; ++m) {
        for (int k = 1; k <= 4; ++k) {
            const PathPower g(m, k);
            if (g.n_vertices() > 3000) continue;
            CAPTURE(m);
            CAPTURE(k);
            const VertexSet v = build_vk(m, k);
            const VertexSet vc = build(ConstructionSpec{m, k, ConstructionKind::VkComplement});
            CHECK(static_cast<std::uint64_t>(v.size()) == alpha_formula(m, k));
            CHECK(vc.size() == g.n_vertices() / 2);
            CHECK(is_independent(v));
            CHECK(is_independent(vc));
            if (g.n_vertices() <= 400) CHECK(pair_scan_independent(v));
        }
    }
    for (int n = 1; n <= 3; ++n) {
        for (int k = 1; k <= 4; ++k) {
            const int m = 2 * n + 1;
            if (PathPower(m, k, 1 << 20).n_vertices() > 3000) continue;
            CAPTURE(n);
            CAPTURE(k);
            const VertexSet x = build_xk(n, k);
            CHECK(static_cast<std::uint64_t>(x.size()) == alpha_formula(m, k) + 1);
            CHECK(induced_max_degree(x) == (n == 1 ? 2 : 1));
            // The complement attains the same maximum degree once k >= 2.
            const VertexSet xc = build(ConstructionSpec{m, k, ConstructionKind::XkComplement});
            if (k == 1 && n == 1) {
                CHECK(xc.empty());  // X_1 is all of P_3
            } else if (k == 1) {
                CHECK(induced_max_degree(xc) == 0);
            } else {
                CHECK(induced_max_degree(xc) == induced_max_degree(x));
            }
        }
    }
}

TEST_CASE("construction kinds and errors") {
    CHECK(parse_construction_kind("xkc") == ConstructionKind::XkComplement);
    CHECK(to_string(ConstructionKind::Vk) == "vk");
    CHECK_THROWS_AS(parse_construction_kind("yk"), std::invalid_argument);
    CHECK_THROWS_AS(build(ConstructionSpec{4, 2, ConstructionKind::Xk}), std::invalid_argument);
    CHECK_THROWS_AS(build_vk(2, 17), size_cap_exceeded);
    CHECK_THROWS_AS(build_xk(1, 11), size_cap_exceeded);
    CHECK(build_vk(2, 17, 1 << 17).size() == 1 << 16);
}
