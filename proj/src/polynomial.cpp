#include "pathpower/polynomial.hpp"

#include <stdexcept>

namespace pathpower {

namespace {

IntPolynomial chebyshev_like(int n, const IntPolynomial& first) {
    if (n < 0) throw std::invalid_argument("polynomial index must be >= 0");
    const IntPolynomial shift = IntPolynomial::linear_root(2);
    IntPolynomial prev = IntPolynomial::constant(1);
    if (n == 0) return prev;
    IntPolynomial cur = first;
    for (int i = 2; i <= n; ++i) {
        IntPolynomial next = shift * cur - prev;
        prev = std::move(cur);
        cur = std::move(next);
    }
    return cur;
}

}  // namespace

IntPolynomial poly_f(int n) { return chebyshev_like(n, IntPolynomial::linear_root(2)); }

IntPolynomial poly_g(int n) { return chebyshev_like(n, IntPolynomial::linear_root(1)); }

bool fg_identity_check(int n) {
    if (n < 1) throw std::invalid_argument("fg_identity_check: need n >= 1");
    return poly_g(n) == poly_f(n) + poly_f(n - 1);
}

IntPolynomial charpoly_exact(const Eigen::MatrixXi& m) {
    if (m.rows() != m.cols()) throw std::invalid_argument("charpoly_exact: matrix is not square");
    const auto dim = static_cast<int>(m.rows());
    using BigMatrix = Eigen::Matrix<BigInt, Eigen::Dynamic, Eigen::Dynamic>;
    const BigMatrix base = m.cast<BigInt>();

    // Values p(0), ..., p(dim), turned in place into forward differences.
    std::vector<BigInt> diff(dim + 1);
    for (int x = 0; x <= dim; ++x) {
        BigMatrix shifted = -base;
        for (int i = 0; i < dim; ++i) shifted(i, i) += x;
        diff[x] = bareiss_determinant(std::move(shifted));
    }
    for (int order = 1; order <= dim; ++order) {
        for (int x = dim; x >= order; --x) diff[x] -= diff[x - 1];
    }

    // p(x) = sum_j diff[j] * x(x-1)...(x-j+1) / j!
    IntPolynomial result;
    IntPolynomial falling = IntPolynomial::constant(1);
    BigInt factorial = 1;
    for (int j = 0; j <= dim; ++j) {
        if (j > 0) {
            falling = falling * IntPolynomial::linear_root(j - 1);
            factorial *= j;
        }
        if (diff[j] % factorial != 0) throw std::logic_error("charpoly_exact: inexact interpolation");
        result += falling * BigInt(diff[j] / factorial);
    }
    return result;
}

}  // namespace pathpower
