#include "pathpower/signed_matrix.hpp"

#include <istream>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include <unsupported/Eigen/KroneckerProduct>

namespace pathpower {

using Triplet = Eigen::Triplet<int>;
using Storage = SignedMatrix::Storage;

Parity parse_parity(std::string_view name) {
    if (name == "odd3") return Parity::Odd3;
    if (name == "even") return Parity::Even;
    throw std::invalid_argument("unknown parity '" + std::string(name) + "'");
}

std::string_view to_string(Parity p) { return p == Parity::Odd3 ? "odd3" : "even"; }

namespace {

int path_length(Parity parity, int n) {
    if (parity == Parity::Odd3) return 3;
    if (n < 1) throw std::invalid_argument("even signed matrices need n >= 1");
    return 2 * n;
}

Storage from_triplets(Eigen::Index dim, const std::vector<Triplet>& t) {
    Storage s(dim, dim);
    s.setFromTriplets(t.begin(), t.end());
    s.makeCompressed();
    return s;
}

Storage signed_path(int m) {
    std::vector<Triplet> t;
    for (int i = 0; i + 1 < m; ++i) {
        const int v = (i % 2 == 0) ? 1 : -1;
        t.emplace_back(i, i + 1, v);
        t.emplace_back(i + 1, i, v);
    }
    return from_triplets(m, t);
}

Storage lift(const Storage& prev, int m) {
    const Eigen::Index d = prev.rows();
    std::vector<Triplet> t;
    t.reserve(static_cast<std::size_t>(m * prev.nonZeros() + 2 * (m - 1) * d));
    for (int a = 0; a < m; ++a) {
        const int sign = (a % 2 == 0) ? 1 : -1;
        const Eigen::Index base = a * d;
        for (Eigen::Index c = 0; c < prev.outerSize(); ++c) {
            for (Storage::InnerIterator it(prev, c); it; ++it) {
                t.emplace_back(base + it.row(), base + it.col(), sign * it.value());
            }
        }
        if (a + 1 < m) {
            for (Eigen::Index i = 0; i < d; ++i) {
                t.emplace_back(base + i, base + d + i, sign);
                t.emplace_back(base + d + i, base + i, sign);
            }
        }
    }
    return from_triplets(m * d, t);
}

Storage identity(Eigen::Index dim) {
    Storage s(dim, dim);
    s.setIdentity();
    return s;
}

}  // namespace

SignedMatrix::SignedMatrix(Storage entries, Parity parity, int n, int k, Rank size_cap)
    : entries_(std::move(entries)),
      parity_(parity),
      n_(parity == Parity::Odd3 ? 1 : n),
      k_(k),
      graph_(path_length(parity, n), k, size_cap) {
    if (entries_.rows() != entries_.cols() || entries_.rows() != graph_.n_vertices()) {
        throw std::invalid_argument("signed matrix dimension does not match m^k");
    }
    entries_.makeCompressed();
}

Eigen::Index SignedMatrix::nonzeros() const {
    Eigen::Index count = 0;
    for (Eigen::Index c = 0; c < entries_.outerSize(); ++c) {
        for (Storage::InnerIterator it(entries_, c); it; ++it) count += (it.value() != 0);
    }
    return count;
}

SignedMatrix build_ak(Parity parity, int n, int k, Rank size_cap) {
    if (k < 1) throw std::invalid_argument("signed matrix order k must be >= 1");
    const int m = path_length(parity, n);
    (void)PathPower(m, k, size_cap);
    Storage a = signed_path(m);
    for (int i = 1; i < k; ++i) a = lift(a, m);
    return SignedMatrix(std::move(a), parity, n, k, size_cap);
}

SignedMatrix build_a1_odd3() { return build_ak(Parity::Odd3, 1, 1); }
SignedMatrix build_ak_odd3(int k, Rank size_cap) { return build_ak(Parity::Odd3, 1, k, size_cap); }
SignedMatrix build_a1_even(int n) { return build_ak(Parity::Even, n, 1); }
SignedMatrix build_ak_even(int n, int k, Rank size_cap) {
    return build_ak(Parity::Even, n, k, size_cap);
}

bool check_support(const SignedMatrix& a, const PathPower& g) {
    if (a.dim() != g.n_vertices()) {
        throw std::invalid_argument("check_support: matrix dimension does not match graph");
    }
    const Storage& s = a.sparse();
    Eigen::Index count = 0;
    for (Eigen::Index c = 0; c < s.outerSize(); ++c) {
        for (Storage::InnerIterator it(s, c); it; ++it) {
            if (it.value() == 0) continue;
            bool hit = false;
            for_each_neighbor(it.col(), g, [&](Rank u) { hit = hit || u == it.row(); });
            if (!hit) return false;
            ++count;
        }
    }
    return count == 2 * g.edge_count();
}

bool check_signed_entries(const SignedMatrix& a) {
    const Storage& s = a.sparse();
    for (Eigen::Index c = 0; c < s.outerSize(); ++c) {
        for (Storage::InnerIterator it(s, c); it; ++it) {
            if (it.value() == 0) continue;
            if (it.row() == it.col()) return false;
            if (it.value() != 1 && it.value() != -1) return false;
            if (s.coeff(it.col(), it.row()) != it.value()) return false;
        }
    }
    return true;
}

bool square_identity_check(Parity parity, int n, int k, Rank size_cap) {
    if (k < 2) throw std::invalid_argument("square_identity_check: need k >= 2");
    const int m = path_length(parity, n);
    const SignedMatrix a1 = build_ak(parity, n, 1, size_cap);
    const SignedMatrix prev = build_ak(parity, n, k - 1, size_cap);
    const SignedMatrix cur = build_ak(parity, n, k, size_cap);

    const Storage lhs = cur.sparse() * cur.sparse();
    const Storage prev_sq = prev.sparse() * prev.sparse();
    const Storage a1_sq = a1.sparse() * a1.sparse();
    const Storage rhs = Storage(Eigen::kroneckerProduct(identity(m), prev_sq)) +
                        Storage(Eigen::kroneckerProduct(a1_sq, identity(prev.dim())));
    const Storage diff = lhs - rhs;
    for (Eigen::Index c = 0; c < diff.outerSize(); ++c) {
        for (Storage::InnerIterator it(diff, c); it; ++it) {
            if (it.value() != 0) return false;
        }
    }
    return true;
}

bool square_identity_check(int n, int k, Rank size_cap) {
    return square_identity_check(Parity::Even, n, k, size_cap);
}

Eigen::MatrixXi principal_submatrix(const SignedMatrix& a, const VertexSet& s) {
    if (s.empty()) throw std::invalid_argument("principal_submatrix: empty vertex set");
    if (s.universe() != a.dim()) {
        throw std::invalid_argument("principal_submatrix: vertex set does not match matrix");
    }
    const std::vector<Rank> idx = s.ranks();
    const auto size = static_cast<Eigen::Index>(idx.size());
    Eigen::MatrixXi b(size, size);
    for (Eigen::Index i = 0; i < size; ++i) {
        for (Eigen::Index j = 0; j < size; ++j) b(i, j) = a.entry(idx[i], idx[j]);
    }
    return b;
}

void write_matrix_market(std::ostream& os, const SignedMatrix& a) {
    const Storage lower = a.sparse().triangularView<Eigen::Lower>();
    Eigen::Index nnz = 0;
    for (Eigen::Index c = 0; c < lower.outerSize(); ++c) {
        for (Storage::InnerIterator it(lower, c); it; ++it) nnz += (it.value() != 0);
    }
    os << "%%MatrixMarket matrix coordinate integer symmetric\n";
    os << "% signed adjacency matrix A_" << a.k() << " of P_" << a.graph().m() << "^" << a.k()
       << " (" << to_string(a.parity()) << ")\n";
    os << a.dim() << ' ' << a.dim() << ' ' << nnz << '\n';
    for (Eigen::Index c = 0; c < lower.outerSize(); ++c) {
        for (Storage::InnerIterator it(lower, c); it; ++it) {
            if (it.value() == 0) continue;
            os << it.row() + 1 << ' ' << it.col() + 1 << ' ' << it.value() << '\n';
        }
    }
}

Storage read_matrix_market(std::istream& is) {
    std::string line;
    if (!std::getline(is, line) || line.rfind("%%MatrixMarket matrix coordinate", 0) != 0) {
        throw std::runtime_error("matrix market: missing coordinate header");
    }
    const bool symmetric = line.find("symmetric") != std::string::npos;
    while (std::getline(is, line) && !line.empty() && line[0] == '%') {
    }
    std::istringstream dims(line);
    Eigen::Index rows = 0, cols = 0, nnz = 0;
    if (!(dims >> rows >> cols >> nnz)) throw std::runtime_error("matrix market: bad size line");
    std::vector<Triplet> t;
    for (Eigen::Index e = 0; e < nnz; ++e) {
        Eigen::Index i = 0, j = 0;
        int v = 0;
        if (!(is >> i >> j >> v)) throw std::runtime_error("matrix market: truncated entries");
        if (i < 1 || j < 1 || i > rows || j > cols) {
            throw std::runtime_error("matrix market: index out of range");
        }
        t.emplace_back(i - 1, j - 1, v);
        if (symmetric && i != j) t.emplace_back(j - 1, i - 1, v);
    }
    Storage s(rows, cols);
    s.setFromTriplets(t.begin(), t.end());
    return s;
}

}  // namespace pathpower
