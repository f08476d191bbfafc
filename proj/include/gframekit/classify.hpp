#pragma once

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <vector>

#include "gframekit/excess.hpp"
#include "gframekit/gframe.hpp"
#include "gframekit/rng.hpp"

namespace gframekit {

/// Relative spectral gap at or below this counts as tight.
inline constexpr double kTightGapTol = 1e-8;
/// Frobenius residual budget for the unitarity checks behind
/// g-orthonormality.
inline constexpr double kOrthonormalTol = 1e-9;

/// Joint classification of one family. The predicates form a chain:
/// orthonormal => riesz => frame => complete, enforced by construction.
struct ClassificationReport {
    bool is_bessel;       // always true for finite families
    double bessel_bound;  // optimal upper constant, lambda_max(S)
    bool is_complete;
    bool is_frame;
    FrameBounds bounds;
    bool is_tight;
    bool is_riesz;
    FrameBounds riesz_bounds;  // squared extreme singular values of the stack
    bool is_orthonormal;
    bool is_exact;
    std::size_t dim_sum;
    std::size_t dim_u;
};

/// Classifies a family as g-Bessel / g-complete / g-frame / tight / g-Riesz
/// basis / g-orthonormal basis / exact, with the optimal constants.
///
/// Completeness and the Riesz bounds run through the singular values of the
/// stacked block matrix; the frame bounds run through the spectrum of S.
inline ClassificationReport classify(const GFrame& f, double rank_tol = kDefaultRankTol,
                                     double frame_threshold = kFrameThreshold) {
    const std::size_t n = f.dim_u();
    ClassificationReport r{};
    r.dim_u = n;
    r.dim_sum = f.dim_sum();

    const FrameOperatorMatrix s = frame_operator(f);
    r.is_bessel = true;
    r.bessel_bound = std::max(0.0, s.spectrum.max_eigenvalue());
    r.bounds = FrameBounds{std::max(0.0, s.spectrum.min_eigenvalue()), r.bessel_bound};

    const ComplexMatrix stack = stacked_matrix(f);
    const std::vector<double> sigma = singular_values(stack);
    const double cutoff = sigma.empty() ? 0.0 : rank_tol * sigma.back();
    std::size_t rank = 0;
    if (cutoff > 0.0)
        rank = static_cast<std::size_t>(
            std::count_if(sigma.begin(), sigma.end(), [&](double v) { return v > cutoff; }));
    r.is_complete = rank == n;

    r.is_frame = r.is_complete && is_frame(s, frame_threshold);
    r.is_tight =
        r.is_frame && (r.bounds.upper - r.bounds.lower) <= kTightGapTol * r.bounds.upper;

    r.is_riesz = r.is_frame && r.dim_sum == n;
    if (r.is_riesz) {
        const double lo = sigma.front(), hi = sigma.back();
        r.riesz_bounds = FrameBounds{lo * lo, hi * hi};
    } else {
        r.riesz_bounds = FrameBounds{0.0, 0.0};
    }

    r.is_orthonormal = false;
    if (r.is_riesz) {
        const ComplexMatrix left = stack * stack.adjoint() - ComplexMatrix::identity(n);
        const ComplexMatrix right = stack.adjoint() * stack - ComplexMatrix::identity(n);
        const double budget = kOrthonormalTol * std::max(1.0, std::sqrt(static_cast<double>(n)));
        r.is_orthonormal =
            left.frobenius_norm() <= budget && right.frobenius_norm() <= budget;
    }

    r.is_exact = r.is_frame && exactness(f).is_exact;
    return r;
}

struct RieszWitnessReport {
    double min_ratio;
    double max_ratio;
    std::size_t trials;
};

/// Ratio ||sum_{j in subset} block_j* g_j||^2 / sum ||g_j||^2 for one
/// coefficient family supported on a subset of element positions.
inline double synthesis_ratio(const GFrame& f, const std::vector<std::size_t>& positions,
                              const std::vector<ComplexVector>& parts) {
    if (positions.size() != parts.size())
        throw DimensionMismatch("synthesis_ratio: subset and coefficients differ in length");
    ComplexVector acc(f.dim_u(), cplx(0.0, 0.0));
    double denom = 0.0;
    for (std::size_t k = 0; k < positions.size(); ++k) {
        const ComplexMatrix& block = f.element(positions[k]).block;
        if (parts[k].size() != block.rows())
            throw DimensionMismatch("synthesis_ratio: coefficient size differs from block rows");
        const ComplexVector lifted = apply_adjoint(block, parts[k]);
        for (std::size_t i = 0; i < acc.size(); ++i) acc[i] += lifted[i];
        denom += norm_sq(parts[k]);
    }
    if (denom == 0.0) throw ValidationError("synthesis_ratio: zero coefficient family");
    return norm_sq(acc) / denom;
}

/// Samples the defining two-sided synthesis inequality of a g-Riesz basis
/// over random finite subsets and coefficient families, reporting the
/// extreme observed ratios.
inline RieszWitnessReport riesz_inequality_witness(const GFrame& f, std::size_t trials,
                                                   std::uint64_t seed) {
    Rng rng(seed);
    RieszWitnessReport rep{0.0, 0.0, 0};
    bool first = true;
    for (std::size_t t = 0; t < trials; ++t) {
        std::vector<std::size_t> positions;
        std::vector<ComplexVector> parts;
        double total = 0.0;
        for (std::size_t i = 0; i < f.size(); ++i) {
            if (rng.uniform() < 0.5) continue;
            const std::size_t m = f.element(i).block.rows();
            positions.push_back(i);
            parts.push_back(rng.cnormal_vector(m));
            total += norm_sq(parts.back());
        }
        if (positions.empty() || total == 0.0) continue;
        const double ratio = synthesis_ratio(f, positions, parts);
        if (first || ratio < rep.min_ratio) rep.min_ratio = ratio;
        if (first || ratio > rep.max_ratio) rep.max_ratio = ratio;
        first = false;
        ++rep.trials;
    }
    return rep;
}

struct QTFactorization {
    GFrame q;         // g-orthonormal basis
    ComplexMatrix t;  // invertible; blocks satisfy block_j = q_j * t
};

/// Factors a g-Riesz basis through a g-orthonormal basis and one invertible
/// operator: q_j = block_j S^{-1/2}, t = S^{1/2}.
inline QTFactorization qt_factorize(const GFrame& f) {
    const ClassificationReport c = classify(f);
    if (!c.is_riesz) throw NotRieszBasis("qt_factorize: family is not a g-Riesz basis");
    const FrameOperatorMatrix s = frame_operator(f);
    return QTFactorization{detail::map_blocks(f, spd_power(s.s, MatrixPower::kInvSqrt)),
                           spd_power(s.s, MatrixPower::kSqrt)};
}

struct BiorthonormalityReport {
    bool passes;
    double max_cross_residual;     // off-pair products, Frobenius norm
    double max_diagonal_residual;  // same-pair products against identity
};

/// Checks the g-biorthonormality of a family against its canonical dual:
/// dual_{j2} block_{j1}* is the identity when j1 = j2 and zero otherwise.
/// Holds for every g-Riesz basis; redundant frames report failure.
inline BiorthonormalityReport biorthonormality_check(const GFrame& f, double tol = 1e-9) {
    if (!is_frame(f))
        throw NotRieszBasis("biorthonormality_check: family is not even a g-frame");
    const GFrame dual = canonical_dual(f);

    BiorthonormalityReport rep{true, 0.0, 0.0};
    for (std::size_t j1 = 0; j1 < f.size(); ++j1) {
        for (std::size_t j2 = 0; j2 < f.size(); ++j2) {
            ComplexMatrix prod = dual.element(j2).block * f.element(j1).block.adjoint();
            if (j1 == j2) {
                prod -= ComplexMatrix::identity(prod.rows());
                rep.max_diagonal_residual =
                    std::max(rep.max_diagonal_residual, prod.frobenius_norm());
            } else {
                rep.max_cross_residual = std::max(rep.max_cross_residual, prod.frobenius_norm());
            }
        }
    }
    rep.passes = rep.max_cross_residual <= tol && rep.max_diagonal_residual <= tol;
    return rep;
}

} // namespace gframekit
