#include "doctest.h"

#include <sstream>

#include "pathpower/signed_matrix.hpp"

using namespace pathpower;

namespace {

Eigen::MatrixXi kron(const Eigen::MatrixXi& a, const Eigen::MatrixXi& b) {
    Eigen::MatrixXi out(a.rows() * b.rows(), a.cols() * b.cols());
    for (Eigen::Index i = 0; i < a.rows(); ++i) {
        for (Eigen::Index j = 0; j < a.cols(); ++j) {
            out.block(i * b.rows(), j * b.cols(), b.rows(), b.cols()) = a(i, j) * b;
        }
    }
    return out;
}

}  // namespace

TEST_CASE("odd3 base matrix") {
    const SignedMatrix a = build_a1_odd3();
    CHECK(a.dim() == 3);
    CHECK(a.entry(0, 1) == 1);
    CHECK(a.entry(1, 2) == -1);
    CHECK(a.entry(0, 2) == 0);
    CHECK(a.entry(2, 1) == -1);
}

TEST_CASE("odd3 recursion layout") {
    const SignedMatrix a2 = build_ak_odd3(2);
    const Eigen::MatrixXi d = a2.dense<int>();
    const Eigen::MatrixXi a1 = build_a1_odd3().dense<int>();
    CHECK(a2.dim() == 9);
    CHECK(a2.entry(0, 3) == 1);
    CHECK(d.block(0, 0, 3, 3) == a1);
    CHECK(d.block(3, 3, 3, 3) == -a1);
    CHECK(d.block(6, 6, 3, 3) == a1);
    CHECK(d.block(0, 3, 3, 3) == Eigen::MatrixXi::Identity(3, 3));
    CHECK(d.block(3, 6, 3, 3) == -Eigen::MatrixXi::Identity(3, 3));
    CHECK(d.block(0, 6, 3, 3).isZero());
    CHECK(a2.nonzeros() == 24);
    CHECK(check_support(a2, PathPower(3, 2)));
}

TEST_CASE("even base matrix") {
    Eigen::MatrixXi q(2, 2);
    q << 0, 1, 1, 0;
    CHECK(build_a1_even(1).dense<int>() == q);

    const SignedMatrix a2 = build_a1_even(2);
    CHECK(a2.entry(0, 1) == 1);
    CHECK(a2.entry(1, 2) == -1);
    CHECK(a2.entry(2, 3) == 1);

    const SignedMatrix a3 = build_a1_even(3);
    CHECK(a3.entry(3, 4) == -1);  // 1-based (4,5)
    CHECK(a3.entry(4, 5) == 1);
    CHECK_THROWS_AS(build_a1_even(0), std::invalid_argument);
}

TEST_CASE("even recursion examples") {
    Eigen::MatrixXi expected(4, 4);
    expected << 0, 1, 1, 0,
                1, 0, 0, 1,
                1, 0, 0, -1,
                0, 1, -1, 0;
    CHECK(build_ak_even(1, 2).dense<int>() == expected);

    const SignedMatrix p4 = build_ak_even(2, 2);
    CHECK(p4.dim() == 16);
    CHECK(p4.nonzeros() == 48);
    CHECK(build_ak_even(1, 1).dense<int>() == build_a1_even(1).dense<int>());

    // four diagonal blocks A, -A, A, -A and identity blocks +I, -I, +I
    const Eigen::MatrixXi d = p4.dense<int>();
    const Eigen::MatrixXi a1 = build_a1_even(2).dense<int>();
    const Eigen::MatrixXi id = Eigen::MatrixXi::Identity(4, 4);
    for (int a = 0; a < 4; ++a) {
        const int sign = a % 2 == 0 ? 1 : -1;
        CHECK(d.block(4 * a, 4 * a, 4, 4) == sign * a1);
        if (a < 3) {
            CHECK(d.block(4 * a, 4 * (a + 1), 4, 4) == sign * id);
            CHECK(d.block(4 * (a + 1), 4 * a, 4, 4) == sign * id);
        }
    }
}

TEST_CASE("block recursion equals kron(A_1, I) + kron(D, A_{k-1}) and not the swapped order") {
    for (auto [p, n] : {std::pair{Parity::Odd3, 1}, {Parity::Even, 1}, {Parity::Even, 2}}) {
        const Eigen::MatrixXi a1 = build_ak(p, n, 1).dense<int>();
        const Eigen::MatrixXi prev = build_ak(p, n, 2).dense<int>();
        const Eigen::MatrixXi cur = build_ak(p, n, 3).dense<int>();
        const auto m = a1.rows();
        Eigen::MatrixXi sign = Eigen::MatrixXi::Zero(m, m);
        for (Eigen::Index i = 0; i < m; ++i) sign(i, i) = i % 2 == 0 ? 1 : -1;
        const Eigen::MatrixXi id = Eigen::MatrixXi::Identity(prev.rows(), prev.cols());
        CHECK(cur == kron(a1, id) + kron(sign, prev));
        CHECK(cur != kron(id, a1) + kron(prev, sign));
    }
}

TEST_CASE("support matches adjacency") {
    CHECK(check_support(build_ak_odd3(3), PathPower(3, 3)));
    CHECK(check_support(build_ak_even(2, 2), PathPower(4, 2)));
    CHECK(check_signed_entries(build_ak_even(3, 2)));

    SignedMatrix::Storage s = build_ak_even(2, 2).sparse();
    s.coeffRef(0, 1) = 0;
    const SignedMatrix broken(s, Parity::Even, 2, 2);
    CHECK_FALSE(check_support(broken, PathPower(4, 2)));
    CHECK_FALSE(check_signed_entries(broken));

    SignedMatrix::Storage extra = build_ak_even(2, 2).sparse();
    extra.coeffRef(0, 5) = 1;
    extra.coeffRef(5, 0) = 1;
    CHECK_FALSE(check_support(SignedMatrix(extra, Parity::Even, 2, 2), PathPower(4, 2)));

    CHECK_THROWS_AS(check_support(build_ak_even(2, 2), PathPower(4, 3)), std::invalid_argument);
}

TEST_CASE("nonzero count equals twice the edge count") {
    for (int k = 1; k <= 5; ++k) {
        const SignedMatrix a = build_ak_odd3(k);
        CHECK(a.nonzeros() == 2 * a.graph().edge_count());
        CHECK(check_support(a, a.graph()));
    }
    for (int n = 1; n <= 3; ++n) {
        for (int k = 1; k <= 3; ++k) {
            const SignedMatrix a = build_ak_even(n, k);
            CHECK(a.nonzeros() == 2 * k * (2 * n - 1) * a.dim() / (2 * n));
            CHECK(check_support(a, a.graph()));
            CHECK(check_signed_entries(a));
        }
    }
}

TEST_CASE("squared Kronecker identity") {
    CHECK(square_identity_check(1, 2));
    CHECK(square_identity_check(2, 2));
    CHECK(square_identity_check(1, 3));
    for (int n = 1; n <= 3; ++n) {
        for (int k = 2; k <= 3; ++k) CHECK(square_identity_check(n, k));
    }
    for (int k = 2; k <= 5; ++k) CHECK(square_identity_check(Parity::Odd3, 1, k));
    CHECK_THROWS_AS(square_identity_check(2, 1), std::invalid_argument);
}

TEST_CASE("squared identity against a dense Kronecker oracle") {
    for (auto [p, n, k] : {std::tuple{Parity::Even, 2, 2}, {Parity::Even, 1, 3}, {Parity::Odd3, 1, 3}}) {
        const Eigen::MatrixXi a1 = build_ak(p, n, 1).dense<int>();
        const Eigen::MatrixXi prev = build_ak(p, n, k - 1).dense<int>();
        const Eigen::MatrixXi cur = build_ak(p, n, k).dense<int>();
        const Eigen::MatrixXi lhs = cur * cur;
        const Eigen::MatrixXi rhs = kron(Eigen::MatrixXi::Identity(a1.rows(), a1.rows()), prev * prev) +
                                    kron(a1 * a1, Eigen::MatrixXi::Identity(prev.rows(), prev.rows()));
        CHECK(lhs == rhs);
    }
}

TEST_CASE("principal submatrix") {
    const SignedMatrix a = build_a1_odd3();
    CHECK(principal_submatrix(a, VertexSet::full(a.graph())) == a.dense<int>());
    const std::vector<Rank> one{1};
    CHECK(principal_submatrix(a, VertexSet::from_ranks(a.graph(), one)) == Eigen::MatrixXi::Zero(1, 1));
    const std::vector<Rank> first_two{0, 1};
    Eigen::MatrixXi expected(2, 2);
    expected << 0, 1, 1, 0;
    CHECK(principal_submatrix(a, VertexSet::from_ranks(a.graph(), first_two)) == expected);
    CHECK_THROWS_AS(principal_submatrix(a, VertexSet(a.graph())), std::invalid_argument);
    CHECK_THROWS_AS(principal_submatrix(a, VertexSet(PathPower(3, 2))), std::invalid_argument);
}

TEST_CASE("Matrix Market output") {
    const SignedMatrix a = build_ak_even(1, 2);
    std::ostringstream os;
    write_matrix_market(os, a);
    const std::string text = os.str();
    CHECK(text.rfind("%%MatrixMarket matrix coordinate integer symmetric\n", 0) == 0);
    CHECK(text.find("\n4 4 4\n") != std::string::npos);
    CHECK(text.find("\n4 3 -1\n") != std::string::npos);

    std::istringstream is(text);
    const SignedMatrix::Storage back = read_matrix_market(is);
    CHECK(Eigen::MatrixXi(back) == a.dense<int>());

    const SignedMatrix big = build_ak_odd3(4);
    std::stringstream ss;
    write_matrix_market(ss, big);
    CHECK(Eigen::MatrixXi(read_matrix_market(ss)) == big.dense<int>());

    std::istringstream bad("not a header\n");
    CHECK_THROWS(read_matrix_market(bad));
}

TEST_CASE("size cap") {
    CHECK_THROWS_AS(build_ak_odd3(11), size_cap_exceeded);
    CHECK_THROWS_AS(build_ak_even(2, 9, 1000), size_cap_exceeded);
    CHECK(parse_parity("odd3") == Parity::Odd3);
    CHECK_THROWS_AS(parse_parity("odd5"), std::invalid_argument);
}
