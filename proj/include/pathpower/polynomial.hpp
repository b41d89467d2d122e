#pragma once

// Exact polynomials over an integral scalar, plus the f_n / g_n recurrences
// and exact characteristic polynomials of small integer matrices.

#include <algorithm>
#include <cstddef>
#include <initializer_list>
#include <sstream>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include <Eigen/Dense>
#include <boost/multiprecision/cpp_int.hpp>

namespace pathpower {

using BigInt = boost::multiprecision::cpp_int;

/// Dense polynomial with ascending coefficients. Trailing zeros are trimmed,
/// so the zero polynomial has no coefficients and degree -1.
template <typename Scalar>
class Polynomial {
public:
    Polynomial() = default;
    Polynomial(std::initializer_list<Scalar> coeffs) : coeffs_(coeffs) { normalize(); }
    explicit Polynomial(std::vector<Scalar> coeffs) : coeffs_(std::move(coeffs)) { normalize(); }

    static Polynomial constant(Scalar c) { return Polynomial({std::move(c)}); }
    /// x - c
    static Polynomial linear_root(Scalar c) { return Polynomial({Scalar(-c), Scalar(1)}); }

    int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
    bool is_zero() const { return coeffs_.empty(); }
    const std::vector<Scalar>& coeffs() const { return coeffs_; }

    Scalar coeff(std::size_t i) const { return i < coeffs_.size() ? coeffs_[i] : Scalar(0); }
    const Scalar& leading() const { return coeffs_.back(); }

    /// Horner evaluation in the value type T.
    template <typename T>
    T operator()(const T& x) const {
        T acc(0);
        for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) {
            acc = acc * x + static_cast<T>(*it);
        }
        return acc;
    }

    Polynomial& operator+=(const Polynomial& o) {
        if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size(), Scalar(0));
        for (std::size_t i = 0; i < o.coeffs_.size(); ++i) coeffs_[i] += o.coeffs_[i];
        normalize();
        return *this;
    }
    Polynomial& operator-=(const Polynomial& o) {
        if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size(), Scalar(0));
        for (std::size_t i = 0; i < o.coeffs_.size(); ++i) coeffs_[i] -= o.coeffs_[i];
        normalize();
        return *this;
    }
    Polynomial& operator*=(const Scalar& c) {
        for (auto& a : coeffs_) a *= c;
        normalize();
        return *this;
    }

    friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
    friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
    friend Polynomial operator*(Polynomial a, const Scalar& c) { return a *= c; }
    friend Polynomial operator*(const Polynomial& a, const Polynomial& b) {
        if (a.is_zero() || b.is_zero()) return {};
        std::vector<Scalar> out(a.coeffs_.size() + b.coeffs_.size() - 1, Scalar(0));
        for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
            for (std::size_t j = 0; j < b.coeffs_.size(); ++j) out[i + j] += a.coeffs_[i] * b.coeffs_[j];
        }
        return Polynomial(std::move(out));
    }
    friend bool operator==(const Polynomial& a, const Polynomial& b) { return a.coeffs_ == b.coeffs_; }

    /// Exact division of every coefficient; the caller guarantees divisibility.
    Polynomial exact_div(const Scalar& d) const {
        Polynomial out = *this;
        for (auto& a : out.coeffs_) a /= d;
        return out;
    }

    std::string to_string() const {
        if (is_zero()) return "0";
        std::ostringstream os;
        bool first = true;
        for (int i = degree(); i >= 0; --i) {
            Scalar c = coeffs_[i];
            if (c == Scalar(0)) continue;
            const bool neg = c < Scalar(0);
            if (neg) c = -c;
            os << (first ? (neg ? "-" : "") : (neg ? " - " : " + "));
            if (c != Scalar(1) || i == 0) os << c;
            if (i >= 1) os << 'x';
            if (i >= 2) os << '^' << i;
            first = false;
        }
        return os.str();
    }

private:
    void normalize() {
        while (!coeffs_.empty() && coeffs_.back() == Scalar(0)) coeffs_.pop_back();
    }

    std::vector<Scalar> coeffs_;
};

using IntPolynomial = Polynomial<BigInt>;

/// f_0 = 1, f_1 = x - 2, f_k = (x - 2) f_{k-1} - f_{k-2}.
IntPolynomial poly_f(int n);
/// g_0 = 1, g_1 = x - 1, g_k = (x - 2) g_{k-1} - g_{k-2}.
IntPolynomial poly_g(int n);

/// g_n == f_n + f_{n-1}, coefficientwise. Requires n >= 1.
bool fg_identity_check(int n);

/// Fraction-free (Bareiss) determinant. Every division is exact for integral
/// scalars; rows are swapped on a zero pivot.
template <typename Scalar>
Scalar bareiss_determinant(Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic> a) {
    const Eigen::Index n = a.rows();
    if (n != a.cols()) throw std::invalid_argument("bareiss_determinant: matrix is not square");
    if (n == 0) return Scalar(1);
    Scalar sign(1);
    Scalar prev(1);
    for (Eigen::Index p = 0; p + 1 < n; ++p) {
        if (a(p, p) == Scalar(0)) {
            Eigen::Index swap = p + 1;
            while (swap < n && a(swap, p) == Scalar(0)) ++swap;
            if (swap == n) return Scalar(0);
            for (Eigen::Index c = 0; c < n; ++c) std::swap(a(p, c), a(swap, c));
            sign = -sign;
        }
        for (Eigen::Index i = p + 1; i < n; ++i) {
            for (Eigen::Index j = p + 1; j < n; ++j) {
                a(i, j) = (a(i, j) * a(p, p) - a(i, p) * a(p, j)) / prev;
            }
        }
        prev = a(p, p);
    }
    return sign * a(n - 1, n - 1);
}

/// det(xI - M) computed exactly: evaluate at x = 0..dim with Bareiss, then
/// Newton forward-difference interpolation.
IntPolynomial charpoly_exact(const Eigen::MatrixXi& m);

}  // namespace pathpower
