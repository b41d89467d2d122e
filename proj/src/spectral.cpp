#include "pathpower/spectral.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>

#include "pathpower/polynomial.hpp"

namespace pathpower {

SpectrumReport make_spectrum(std::vector<double> values, double group_tol) {
    SpectrumReport s;
    std::sort(values.begin(), values.end());
    s.eigenvalues = std::move(values);
    s.group_tol = group_tol;
    const std::size_t n = s.eigenvalues.size();
    for (std::size_t i = 0; i < n; ++i) {
        const double v = s.eigenvalues[i];
        if (std::abs(v) < group_tol) {
            ++s.zero_multiplicity;
        } else if (v > 0 && !s.min_positive) {
            s.min_positive = v;
        }
        s.symmetry_defect = std::max(s.symmetry_defect, std::abs(v + s.eigenvalues[n - 1 - i]));
    }
    return s;
}

SpectrumReport eigenvalues_sym(const Eigen::MatrixXd& m, const EigenOptions& opts) {
    if (m.rows() != m.cols()) throw std::invalid_argument("eigenvalues_sym: matrix is not square");
    if (m.rows() > opts.max_dim) {
        throw size_cap_exceeded("eigenvalues_sym: dimension " + std::to_string(m.rows()) +
                                " exceeds cap " + std::to_string(opts.max_dim));
    }
    if (m.rows() > 0 && (m - m.transpose()).cwiseAbs().maxCoeff() > 1e-12) {
        throw std::invalid_argument("eigenvalues_sym: matrix is not symmetric");
    }
    if (m.rows() == 0) return make_spectrum({}, opts.group_tol);

    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(m, Eigen::ComputeEigenvectors);
    if (solver.info() != Eigen::Success) {
        const Eigen::VectorXd& partial = solver.eigenvalues();
        throw eigen_failure("eigenvalues_sym: solver did not converge",
                            std::vector<double>(partial.data(), partial.data() + partial.size()));
    }
    const Eigen::VectorXd& values = solver.eigenvalues();
    const Eigen::MatrixXd& vectors = solver.eigenvectors();
    std::vector<double> out(values.data(), values.data() + values.size());

    const double norm = m.norm();
    const Eigen::MatrixXd residual = m * vectors - vectors * values.asDiagonal();
    const double worst = residual.colwise().norm().maxCoeff();
    if (worst > opts.residual_tol * norm) {
        throw eigen_failure("eigenvalues_sym: residual " + std::to_string(worst) +
                                " exceeds tolerance",
                            std::move(out));
    }
    const double recon = (m - vectors * values.asDiagonal() * vectors.transpose()).norm();
    if (recon > 1e-9 * norm) {
        throw eigen_failure("eigenvalues_sym: reconstruction error " + std::to_string(recon),
                            std::move(out));
    }
    return make_spectrum(std::move(out), opts.group_tol);
}

SpectrumReport kron_sum_spectrum(const SpectrumReport& a, const SpectrumReport& b) {
    std::vector<double> out;
    out.reserve(a.size() * b.size());
    for (double x : a.eigenvalues) {
        for (double y : b.eigenvalues) out.push_back(x + y);
    }
    return make_spectrum(std::move(out), std::max(a.group_tol, b.group_tol));
}

double multiset_distance(const SpectrumReport& a, const SpectrumReport& b) {
    if (a.size() != b.size()) return std::numeric_limits<double>::infinity();
    double d = 0.0;
    for (std::size_t i = 0; i < a.size(); ++i) {
        d = std::max(d, std::abs(a.eigenvalues[i] - b.eigenvalues[i]));
    }
    return d;
}

long double g_eval(int n, long double x) {
    if (n < 0) throw std::invalid_argument("g_eval: n must be >= 0");
    long double prev = 1.0L;
    if (n == 0) return prev;
    long double cur = x - 1.0L;
    for (int i = 2; i <= n; ++i) {
        const long double next = (x - 2.0L) * cur - prev;
        prev = cur;
        cur = next;
    }
    return cur;
}

namespace {

int sign_of(long double v) { return (v > 0) - (v < 0); }

struct Bracket {
    int roots = 0;
    std::optional<double> exact;  // first root hit exactly on a grid point
    double lo = 0.0;
    double hi = 0.0;
    bool found = false;
};

Bracket scan(int n, long long steps) {
    Bracket b;
    int prev = sign_of(g_eval(n, 0.0L));
    double prev_x = 0.0;
    bool after_zero = false;
    for (long long i = 1; i <= steps; ++i) {
        const double x = 4.0 * static_cast<double>(i) / static_cast<double>(steps);
        const int s = sign_of(g_eval(n, x));
        if (s == 0) {
            ++b.roots;
            if (!b.found) {
                b.found = true;
                b.exact = x;
            }
            after_zero = true;
        } else if (after_zero) {
            after_zero = false;
            prev = s;
        } else if (s != prev) {
            ++b.roots;
            if (!b.found) {
                b.found = true;
                b.lo = prev_x;
                b.hi = x;
            }
            prev = s;
        }
        prev_x = x;
    }
    return b;
}

}  // namespace

double beta(int n, double tol) {
    if (n < 1) throw std::invalid_argument("beta: n must be >= 1");
    if (!(tol > 0)) throw std::invalid_argument("beta: tol must be positive");

    // Step 1e-3 over (0, 4]; refine tenfold while the count of sign changes
    // does not match the degree.
    Bracket b;
    long long steps = 4000;
    for (int attempt = 0; attempt < 4; ++attempt, steps *= 10) {
        b = scan(n, steps);
        if (b.roots == n) break;
    }
    if (b.roots != n || !b.found) {
        throw bracket_failure("beta: found " + std::to_string(b.roots) + " sign changes of g_" +
                              std::to_string(n) + " on (0, 4], expected " + std::to_string(n));
    }
    if (b.exact) return *b.exact;

    double lo = b.lo;
    double hi = b.hi;
    const int lo_sign = sign_of(g_eval(n, lo));
    while (hi - lo > tol) {
        const double mid = 0.5 * (lo + hi);
        if (mid <= lo || mid >= hi) break;
        const int s = sign_of(g_eval(n, mid));
        if (s == 0) return mid;
        (s == lo_sign ? lo : hi) = mid;
    }
    return 0.5 * (lo + hi);
}

SpectrumReport composed_square_spectrum_even(int n, int k, double group_tol) {
    if (k < 1) throw std::invalid_argument("composed spectrum: k must be >= 1");
    const SignedMatrix a1 = build_a1_even(n);
    const Eigen::MatrixXd a1d = a1.dense<double>();
    const SpectrumReport base = eigenvalues_sym(Eigen::MatrixXd(a1d * a1d), {.group_tol = group_tol});
    SpectrumReport acc = base;
    for (int i = 1; i < k; ++i) acc = kron_sum_spectrum(acc, base);
    return acc;
}

SpectrumReport composed_spectrum_even(int n, int k, double group_tol) {
    const SpectrumReport sq = composed_square_spectrum_even(n, k, group_tol);
    std::vector<double> out;
    out.reserve(sq.size());
    for (std::size_t i = 0; i < sq.size(); i += 2) {
        const double r = std::sqrt(std::max(0.0, sq.eigenvalues[i]));
        out.push_back(r);
        out.push_back(-r);
    }
    return make_spectrum(std::move(out), group_tol);
}

namespace {

std::vector<double> odd3_closure(const std::vector<double>& prev) {
    std::vector<double> out;
    out.reserve(3 * prev.size());
    for (double l : prev) {
        const double r = std::sqrt(2.0 + l * l);
        out.push_back(l);
        out.push_back(r);
        out.push_back(-r);
    }
    return out;
}

}  // namespace

SpectrumReport composed_spectrum_odd3(int k, double group_tol) {
    if (k < 1) throw std::invalid_argument("composed spectrum: k must be >= 1");
    std::vector<double> values{-std::sqrt(2.0), 0.0, std::sqrt(2.0)};
    for (int i = 1; i < k; ++i) values = odd3_closure(values);
    return make_spectrum(std::move(values), group_tol);
}

double min_positive_eig_even(int n, int k, double group_tol, Rank size_cap) {
    const SpectrumReport s = eigenvalues_sym(build_ak_even(n, k, size_cap), {.group_tol = group_tol});
    if (!s.min_positive) throw std::runtime_error("min_positive_eig_even: no positive eigenvalue");
    return *s.min_positive;
}

Odd3SpectrumResult odd3_spectrum_check(int k, double tol, Rank size_cap) {
    const EigenOptions opts{.group_tol = tol};
    const SpectrumReport s = eigenvalues_sym(build_ak_odd3(k, size_cap), opts);
    Odd3SpectrumResult r;
    r.dim = static_cast<Eigen::Index>(s.size());
    r.zero_multiplicity = s.zero_multiplicity;
    r.min_positive = s.min_positive;
    r.symmetry_defect = s.symmetry_defect;

    std::vector<double> expected;
    if (k == 1) {
        expected = {-std::sqrt(2.0), 0.0, std::sqrt(2.0)};
    } else {
        expected = odd3_closure(eigenvalues_sym(build_ak_odd3(k - 1, size_cap), opts).eigenvalues);
    }
    r.closure_defect = multiset_distance(s, make_spectrum(std::move(expected), tol));

    r.pass = r.zero_multiplicity == 1 && r.min_positive &&
             std::abs(*r.min_positive - std::sqrt(2.0)) <= tol && r.symmetry_defect <= tol &&
             r.closure_defect <= tol;
    return r;
}

bool symmetry_check(const SpectrumReport& s, double tol) { return s.symmetry_defect <= tol; }

bool interlacing_check(const Eigen::MatrixXd& a, const Eigen::MatrixXd& b, double tol) {
    const SpectrumReport sa = eigenvalues_sym(a);
    const SpectrumReport sb = eigenvalues_sym(b);
    const std::size_t n = sa.size();
    const std::size_t m = sb.size();
    if (m > n) throw std::invalid_argument("interlacing_check: submatrix larger than matrix");
    for (std::size_t i = 1; i <= m; ++i) {
        const double mu = sb.largest(i);
        if (sa.largest(i) + tol < mu) return false;
        if (mu < sa.largest(n - m + i) - tol) return false;
    }
    return true;
}

bool nonsingularity_check(Parity parity, int n, int k, double group_tol, Rank size_cap) {
    const SpectrumReport s = eigenvalues_sym(build_ak(parity, n, k, size_cap), {.group_tol = group_tol});
    const bool spectral = s.zero_multiplicity == 0;
    const BigInt det = bareiss_determinant<BigInt>(build_ak(parity, n, 1).dense<BigInt>());
    return spectral && (det == 1 || det == -1);
}

bool nonsingularity_check_even(int n, int k, double group_tol, Rank size_cap) {
    return nonsingularity_check(Parity::Even, n, k, group_tol, size_cap);
}

bool charpoly_a1sq_check(int n) {
    if (n < 1 || n > 12) throw std::invalid_argument("charpoly_a1sq_check: need 1 <= n <= 12");
    const Eigen::MatrixXi a1 = build_a1_even(n).dense<int>();
    const IntPolynomial g = poly_g(n);
    return charpoly_exact(a1 * a1) == g * g;
}

}  // namespace pathpower
