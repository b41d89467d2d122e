#pragma once

// Recursive signed adjacency matrices of P_3^k and P_{2n}^k, stored exactly
// as sparse integer matrices indexed by vertex rank.
//
// Both families follow one block recursion over the last coordinate:
//
//   A_{k+1} = kron(A_1, I) + kron(D, A_k),   D = diag(+1, -1, +1, ...)
//
// i.e. diagonal blocks alternate A_k / -A_k and the identity blocks on the
// block super-diagonal alternate +I / -I starting with +I. A_1 is the path
// signed with super-diagonal +1, -1, +1, ... With this layout the squared
// matrices satisfy  A_k^2 = kron(I_m, A_{k-1}^2) + kron(A_1^2, I)  where the
// left Kronecker factor indexes the last (most significant) coordinate.

#include <iosfwd>
#include <string_view>

#include <Eigen/Dense>
#include <Eigen/SparseCore>

#include "pathpower/grid.hpp"

namespace pathpower {

enum class Parity { Odd3, Even };

Parity parse_parity(std::string_view name);  // odd3|even
std::string_view to_string(Parity p);

class SignedMatrix {
public:
    using Storage = Eigen::SparseMatrix<int>;

    /// `n` is ignored for Parity::Odd3 (m = 3); for Parity::Even m = 2n.
    SignedMatrix(Storage entries, Parity parity, int n, int k, Rank size_cap = kDefaultSizeCap);

    Eigen::Index dim() const { return entries_.rows(); }
    Parity parity() const { return parity_; }
    int n() const { return n_; }
    int k() const { return k_; }
    const PathPower& graph() const { return graph_; }

    const Storage& sparse() const { return entries_; }
    int entry(Eigen::Index i, Eigen::Index j) const { return entries_.coeff(i, j); }

    /// Count of stored entries with a nonzero value.
    Eigen::Index nonzeros() const;

    template <typename Scalar = double>
    Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic> dense() const {
        return Eigen::MatrixXi(entries_).cast<Scalar>();
    }

private:
    Storage entries_;
    Parity parity_;
    int n_;
    int k_;
    PathPower graph_;
};

SignedMatrix build_a1_odd3();
SignedMatrix build_ak_odd3(int k, Rank size_cap = kDefaultSizeCap);
SignedMatrix build_a1_even(int n);
SignedMatrix build_ak_even(int n, int k, Rank size_cap = kDefaultSizeCap);

/// Dispatches on parity; `n` is ignored for odd3.
SignedMatrix build_ak(Parity parity, int n, int k, Rank size_cap = kDefaultSizeCap);

/// True iff the nonzero pattern equals the adjacency of g exactly.
bool check_support(const SignedMatrix& a, const PathPower& g);

/// Symmetric, zero diagonal, every stored nonzero is +1 or -1.
bool check_signed_entries(const SignedMatrix& a);

/// Exact integer check of A_k^2 = kron(I_m, A_{k-1}^2) + kron(A_1^2, I). Requires k >= 2.
bool square_identity_check(int n, int k, Rank size_cap = kDefaultSizeCap);
bool square_identity_check(Parity parity, int n, int k, Rank size_cap = kDefaultSizeCap);

/// Dense restriction to the rows/columns of S, in increasing rank order.
Eigen::MatrixXi principal_submatrix(const SignedMatrix& a, const VertexSet& s);

/// Matrix Market coordinate format, integer symmetric, 1-based, lower triangle.
void write_matrix_market(std::ostream& os, const SignedMatrix& a);
SignedMatrix::Storage read_matrix_market(std::istream& is);

}  // namespace pathpower
