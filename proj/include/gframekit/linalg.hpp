#pragma once

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <numeric>
#include <vector>

#include "gframekit/complex_matrix.hpp"
#include "gframekit/errors.hpp"

namespace gframekit {

/// Default relative threshold separating numerical zero from signal,
/// measured against the largest singular value.
inline constexpr double kDefaultRankTol = 1e-10;

/// Full spectral decomposition of a Hermitian matrix.
/// Eigenvalues ascending; eigenvectors are the matching unitary columns.
struct HermEig {
    std::vector<double> eigenvalues;
    ComplexMatrix eigenvectors;

    double min_eigenvalue() const { return eigenvalues.empty() ? 0.0 : eigenvalues.front(); }
    double max_eigenvalue() const { return eigenvalues.empty() ? 0.0 : eigenvalues.back(); }
};

namespace detail {

// One complex Jacobi rotation for the 2x2 Hermitian block
// [app, apq; conj(apq), aqq]. The pivot is rotated onto the real axis by the
// phase of apq, then annihilated with the classic real rotation; t is the
// stable root of t^2 + 2*tau*t - 1 = 0 (Golub & Van Loan style).
struct JacobiRotation {
    double c;
    double s;
    cplx phase;  // e^{i arg(apq)}
};

inline JacobiRotation make_jacobi_rotation(double app, double aqq, cplx apq) {
    const double r = std::abs(apq);
    const cplx phase = apq / r;
    const double tau = (aqq - app) / (2.0 * r);
    const double t = (tau >= 0.0 ? 1.0 : -1.0) / (std::abs(tau) + std::sqrt(1.0 + tau * tau));
    const double c = 1.0 / std::sqrt(1.0 + t * t);
    return JacobiRotation{c, t * c, phase};
}

// Right-multiplication by the rotation: columns p and q of a.
inline void apply_rotation_cols(ComplexMatrix& a, std::size_t p, std::size_t q,
                                const JacobiRotation& rot) {
    const cplx sc = rot.s * std::conj(rot.phase);  // s * e^{-i phi}
    const cplx cc = rot.c * std::conj(rot.phase);  // c * e^{-i phi}
    for (std::size_t i = 0; i < a.rows(); ++i) {
        const cplx ap = a(i, p);
        const cplx aq = a(i, q);
        a(i, p) = rot.c * ap - sc * aq;
        a(i, q) = rot.s * ap + cc * aq;
    }
}

// Left-multiplication by the rotation's adjoint: rows p and q of a.
inline void apply_rotation_rows(ComplexMatrix& a, std::size_t p, std::size_t q,
                                const JacobiRotation& rot) {
    const cplx sp = rot.s * rot.phase;  // s * e^{+i phi}
    const cplx cp = rot.c * rot.phase;  // c * e^{+i phi}
    for (std::size_t j = 0; j < a.cols(); ++j) {
        const cplx ap = a(p, j);
        const cplx aq = a(q, j);
        a(p, j) = rot.c * ap - sp * aq;
        a(q, j) = rot.s * ap + cp * aq;
    }
}

inline double off_diagonal_norm(const ComplexMatrix& a) {
    double s = 0.0;
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = 0; j < a.cols(); ++j)
            if (i != j) s += std::norm(a(i, j));
    return std::sqrt(s);
}

} // namespace detail

/// Hermitian eigendecomposition by cyclic Jacobi sweeps.
/// Unconditionally stable at the dense sizes this library targets.
inline HermEig herm_eig(const ComplexMatrix& m) {
    if (m.rows() != m.cols()) throw NotHermitian("herm_eig: matrix not square");
    const std::size_t n = m.rows();
    const double scale = std::max(1.0, m.frobenius_norm());
    if (hermitian_residual(m) > 1e-12 * scale)
        throw NotHermitian("herm_eig: matrix deviates from its adjoint beyond tolerance");

    ComplexMatrix a = hermitian_part(m);
    ComplexMatrix v = ComplexMatrix::identity(n);
    const double stop = 1e-14 * scale;
    const int max_sweeps = 100;

    bool converged = false;
    for (int sweep = 0; sweep < max_sweeps; ++sweep) {
        if (detail::off_diagonal_norm(a) <= stop) {
            converged = true;
            break;
        }
        // Pivots far below the stopping threshold cannot block convergence;
        // rotating them only churns rounding noise.
        const double pivot_floor = 1e-3 * stop / static_cast<double>(n);
        for (std::size_t p = 0; p + 1 < n; ++p) {
            for (std::size_t q = p + 1; q < n; ++q) {
                const cplx apq = a(p, q);
                if (std::abs(apq) <= pivot_floor) continue;
                const auto rot =
                    detail::make_jacobi_rotation(a(p, p).real(), a(q, q).real(), apq);
                detail::apply_rotation_cols(a, p, q, rot);
                detail::apply_rotation_rows(a, p, q, rot);
                detail::apply_rotation_cols(v, p, q, rot);
                a(p, q) = 0.0;
                a(q, p) = 0.0;
                a(p, p) = a(p, p).real();
                a(q, q) = a(q, q).real();
            }
        }
    }
    if (n <= 1) converged = true;
    if (!converged && detail::off_diagonal_norm(a) > stop)
        throw NoConvergence("herm_eig: sweep budget exhausted");

    std::vector<std::size_t> order(n);
    std::iota(order.begin(), order.end(), std::size_t{0});
    std::sort(order.begin(), order.end(),
              [&](std::size_t i, std::size_t j) { return a(i, i).real() < a(j, j).real(); });

    HermEig out;
    out.eigenvalues.resize(n);
    out.eigenvectors = ComplexMatrix(n, n);
    for (std::size_t k = 0; k < n; ++k) {
        out.eigenvalues[k] = a(order[k], order[k]).real();
        for (std::size_t i = 0; i < n; ++i) out.eigenvectors(i, k) = v(i, order[k]);
    }
    return out;
}

/// Matrix powers defined for Hermitian positive definite input.
enum class MatrixPower { kInverse, kSqrt, kInvSqrt };

/// V diag(lambda^p) V* for p in {-1, 1/2, -1/2}.
inline ComplexMatrix spd_power(const ComplexMatrix& m, MatrixPower p,
                               double rank_tol = kDefaultRankTol) {
    const HermEig eig = herm_eig(m);
    const double lambda_max = eig.max_eigenvalue();
    if (lambda_max <= 0.0 || eig.min_eigenvalue() <= rank_tol * lambda_max)
        throw NotPositiveDefinite("spd_power: smallest eigenvalue at or below rank tolerance");

    const std::size_t n = m.rows();
    std::vector<double> powered(n);
    for (std::size_t i = 0; i < n; ++i) {
        const double lam = eig.eigenvalues[i];
        switch (p) {
            case MatrixPower::kInverse: powered[i] = 1.0 / lam; break;
            case MatrixPower::kSqrt: powered[i] = std::sqrt(lam); break;
            case MatrixPower::kInvSqrt: powered[i] = 1.0 / std::sqrt(lam); break;
        }
    }
    ComplexMatrix scaled = eig.eigenvectors;
    for (std::size_t j = 0; j < n; ++j)
        for (std::size_t i = 0; i < n; ++i) scaled(i, j) *= powered[j];
    return scaled * eig.eigenvectors.adjoint();
}

/// Singular values by one-sided (Hestenes) Jacobi, ascending. Unlike the
/// eigenvalues of m*m, this resolves tiny singular values down to roughly
/// eps * sigma_max, which the default rank tolerance requires.
inline std::vector<double> singular_values(const ComplexMatrix& m) {
    const std::size_t rows = m.rows();
    const std::size_t cols = m.cols();
    if (cols == 0) return {};
    ComplexMatrix w = m;
    const int max_sweeps = 100;
    const double orth_tol = 1e-13;

    auto gram = [&](std::size_t p, std::size_t q) {
        cplx s = 0.0;
        for (std::size_t i = 0; i < rows; ++i) s += std::conj(w(i, p)) * w(i, q);
        return s;
    };
    auto col_norm_sq = [&](std::size_t p) {
        double s = 0.0;
        for (std::size_t i = 0; i < rows; ++i) s += std::norm(w(i, p));
        return s;
    };

    bool converged = (cols == 1 || rows == 0);
    for (int sweep = 0; sweep < max_sweeps && !converged; ++sweep) {
        // Columns at or below the rounding floor are done; rotating a pair of
        // them only shuffles noise and never settles.
        double max_sq = 0.0;
        for (std::size_t j = 0; j < cols; ++j) max_sq = std::max(max_sq, col_norm_sq(j));
        const double floor_sq = 1e-32 * max_sq;

        bool rotated = false;
        for (std::size_t p = 0; p + 1 < cols; ++p) {
            for (std::size_t q = p + 1; q < cols; ++q) {
                const double app = col_norm_sq(p);
                const double aqq = col_norm_sq(q);
                if (app <= floor_sq || aqq <= floor_sq) continue;
                const cplx apq = gram(p, q);
                if (std::abs(apq) <= orth_tol * std::sqrt(app * aqq)) continue;
                const auto rot = detail::make_jacobi_rotation(app, aqq, apq);
                detail::apply_rotation_cols(w, p, q, rot);
                rotated = true;
            }
        }
        if (!rotated) converged = true;
    }
    if (!converged) throw NoConvergence("singular_values: sweep budget exhausted");

    std::vector<double> sigma(cols);
    for (std::size_t j = 0; j < cols; ++j) sigma[j] = std::sqrt(col_norm_sq(j));
    std::sort(sigma.begin(), sigma.end());
    return sigma;
}

/// Number of singular values exceeding tol * sigma_max.
inline std::size_t numerical_rank(const ComplexMatrix& m, double tol = kDefaultRankTol) {
    if (!(tol > 0.0 && tol < 1.0))
        throw ValidationError("numerical_rank: tolerance must lie in (0, 1)");
    const std::vector<double> sigma = singular_values(m);
    if (sigma.empty()) return 0;
    const double cutoff = tol * sigma.back();
    if (cutoff <= 0.0) return 0;
    std::size_t rank = 0;
    for (double s : sigma)
        if (s > cutoff) ++rank;
    return rank;
}

/// Solves a * x = b for general square complex a (partial pivoting).
inline ComplexMatrix lu_solve(const ComplexMatrix& a, const ComplexMatrix& b) {
    if (a.rows() != a.cols()) throw DimensionMismatch("lu_solve: matrix not square");
    if (a.rows() != b.rows()) throw DimensionMismatch("lu_solve: right-hand side rows differ");
    const std::size_t n = a.rows();
    ComplexMatrix lu = a;
    ComplexMatrix x = b;

    for (std::size_t k = 0; k < n; ++k) {
        std::size_t pivot = k;
        double best = std::abs(lu(k, k));
        for (std::size_t i = k + 1; i < n; ++i) {
            const double cand = std::abs(lu(i, k));
            if (cand > best) {
                best = cand;
                pivot = i;
            }
        }
        if (best <= 1e-300) throw SingularOperator("lu_solve: matrix is singular");
        if (pivot != k) {
            for (std::size_t j = 0; j < n; ++j) std::swap(lu(k, j), lu(pivot, j));
            for (std::size_t j = 0; j < x.cols(); ++j) std::swap(x(k, j), x(pivot, j));
        }
        for (std::size_t i = k + 1; i < n; ++i) {
            const cplx factor = lu(i, k) / lu(k, k);
            lu(i, k) = factor;
            for (std::size_t j = k + 1; j < n; ++j) lu(i, j) -= factor * lu(k, j);
            for (std::size_t j = 0; j < x.cols(); ++j) x(i, j) -= factor * x(k, j);
        }
    }
    for (std::size_t k = n; k-- > 0;) {
        for (std::size_t j = 0; j < x.cols(); ++j) {
            cplx s = x(k, j);
            for (std::size_t i = k + 1; i < n; ++i) s -= lu(k, i) * x(i, j);
            x(k, j) = s / lu(k, k);
        }
    }
    return x;
}

inline ComplexVector lu_solve(const ComplexMatrix& a, const ComplexVector& b) {
    ComplexMatrix rhs(b.size(), 1);
    for (std::size_t i = 0; i < b.size(); ++i) rhs(i, 0) = b[i];
    const ComplexMatrix sol = lu_solve(a, rhs);
    return sol.col(0);
}

} // namespace gframekit
