#pragma once

// Spectral kernels: dense symmetric eigensolving, Kronecker-sum spectrum
// composition, the beta_n root of g_n, and the verifiers built on them
// (interlacing, spectral symmetry, nonsingularity, closed spectra of A_k).

#include <optional>
#include <stdexcept>
#include <vector>

#include <Eigen/Dense>

#include "pathpower/grid.hpp"
#include "pathpower/signed_matrix.hpp"

namespace pathpower {

inline constexpr double kResidualTol = 1e-10;
inline constexpr double kGroupTol = 1e-8;
inline constexpr Eigen::Index kEigenDimCap = 4096;

/// Sorted spectrum with derived statistics.
struct SpectrumReport {
    std::vector<double> eigenvalues;  // ascending
    double group_tol = kGroupTol;
    int zero_multiplicity = 0;
    std::optional<double> min_positive;
    /// max_i |e_i + e_{n-1-i}| over the ascending list: 0 iff the multiset is
    /// closed under negation.
    double symmetry_defect = 0.0;

    std::size_t size() const { return eigenvalues.size(); }
    /// i-th largest, 1-based.
    double largest(std::size_t i = 1) const { return eigenvalues[eigenvalues.size() - i]; }
};

SpectrumReport make_spectrum(std::vector<double> values, double group_tol = kGroupTol);

struct EigenOptions {
    double residual_tol = kResidualTol;
    double group_tol = kGroupTol;
    Eigen::Index max_dim = kEigenDimCap;
};

struct eigen_failure : std::runtime_error {
    eigen_failure(const std::string& what, std::vector<double> partial)
        : std::runtime_error(what), partial_eigenvalues(std::move(partial)) {}
    std::vector<double> partial_eigenvalues;
};

/// All eigenvalues of a symmetric matrix. Verifies ||Mx - lx|| <= residual_tol * ||M||_F
/// for every eigenpair and ||M - Q L Q^T||_F <= 1e-9 ||M||_F.
SpectrumReport eigenvalues_sym(const Eigen::MatrixXd& m, const EigenOptions& opts = {});

template <typename Derived>
SpectrumReport eigenvalues_sym(const Eigen::MatrixBase<Derived>& m, const EigenOptions& opts = {}) {
    return eigenvalues_sym(Eigen::MatrixXd(m.template cast<double>()), opts);
}

inline SpectrumReport eigenvalues_sym(const SignedMatrix& a, const EigenOptions& opts = {}) {
    return eigenvalues_sym(a.dense<double>(), opts);
}

/// Multiset {a_i + b_j}: the spectrum of kron(I, A) + kron(B, I).
SpectrumReport kron_sum_spectrum(const SpectrumReport& a, const SpectrumReport& b);

/// Max pointwise gap between the sorted lists; +inf if the sizes differ.
double multiset_distance(const SpectrumReport& a, const SpectrumReport& b);

/// g_n(x) through the three-term recurrence.
long double g_eval(int n, long double x);

/// Smallest positive root of g_n, bracketed on a grid over (0, 4] and bisected
/// to within tol.
double beta(int n, double tol = 1e-12);

struct bracket_failure : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Spectrum of A_k^2 (even family) as the k-fold Kronecker sum of spec(A_1^2).
SpectrumReport composed_square_spectrum_even(int n, int k, double group_tol = kGroupTol);
/// Spectrum of A_k (even family) from the composed square: each eigenvalue
/// pair of A_k^2 contributes +-sqrt.
SpectrumReport composed_spectrum_even(int n, int k, double group_tol = kGroupTol);
/// Spectrum of A_k (odd3 family) from spec(A_1) = {-sqrt2, 0, sqrt2} and the
/// map l -> {l, +-sqrt(2 + l^2)}.
SpectrumReport composed_spectrum_odd3(int k, double group_tol = kGroupTol);

/// Smallest eigenvalue of build_ak_even(n, k) above group_tol.
double min_positive_eig_even(int n, int k, double group_tol = kGroupTol,
                             Rank size_cap = kDefaultSizeCap);

struct Odd3SpectrumResult {
    Eigen::Index dim = 0;
    int zero_multiplicity = 0;
    std::optional<double> min_positive;
    double symmetry_defect = 0.0;
    /// Distance between spec(A_k) and the image of spec(A_{k-1}) under the closure map.
    double closure_defect = 0.0;
    bool pass = false;
};

Odd3SpectrumResult odd3_spectrum_check(int k, double tol = kGroupTol,
                                       Rank size_cap = kDefaultSizeCap);

bool symmetry_check(const SpectrumReport& s, double tol);

/// Cauchy interlacing of B (principal submatrix) against A, both symmetric.
bool interlacing_check(const Eigen::MatrixXd& a, const Eigen::MatrixXd& b, double tol);

/// No eigenvalue within group_tol of zero, and |det(A_1)| == 1 exactly.
bool nonsingularity_check(Parity parity, int n, int k, double group_tol = kGroupTol,
                          Rank size_cap = kDefaultSizeCap);
bool nonsingularity_check_even(int n, int k, double group_tol = kGroupTol,
                               Rank size_cap = kDefaultSizeCap);

/// det(xI - A_1^2) == g_n^2 exactly (even family). Requires 1 <= n <= 12.
bool charpoly_a1sq_check(int n);

}  // namespace pathpower
