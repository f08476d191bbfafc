#pragma once

#include <cmath>
#include <optional>
#include <vector>

#include "gframekit/duality.hpp"
#include "gframekit/gframe.hpp"

namespace gframekit {

/// |lambda - 1| at or below this marks an eigenvalue-one certificate.
inline constexpr double kRemovalEigTol = 1e-8;
/// Distances to 1 inside (kRemovalEigTol, kRemovalBorderline] are flagged
/// as ill-conditioned rather than silently classified.
inline constexpr double kRemovalBorderline = 1e-6;

enum class RemovalOutcome { kNotGComplete, kStillGFrame };

/// Outcome of deleting one element from a g-frame. In finite dimensions the
/// reduced family is either no longer g-complete (certified by a fixed point
/// of dual_j0 block_j0*) or still a g-frame (certified by the spectral gap
/// of I - dual_j0 block_j0*, with the reduced family's fresh bounds).
struct RemovalVerdict {
    int removed_index;
    RemovalOutcome verdict;
    std::optional<ComplexVector> certificate;  // g0 with T0 g0 = g0, when incomplete
    double gap;                                // min |lambda - 1| over spec(T0)
    std::optional<FrameBounds> new_bounds;     // when still a frame
    bool borderline;
};

/// The same frame minus the element labeled j0; order of the rest preserved.
inline GFrame remove_element(const GFrame& f, int j0) {
    const std::size_t pos = f.position_of(j0);
    std::vector<GFrameElement> elems;
    elems.reserve(f.size() - 1);
    for (std::size_t i = 0; i < f.size(); ++i)
        if (i != pos) elems.push_back(f.element(i));
    return GFrame(f.dim_u(), std::move(elems));
}

/// Spectral removal test on T0 = block_j0 S^{-1} block_j0* (Hermitian, PSD,
/// spectrum within [0, 1]). An eigenvalue at 1 certifies loss of
/// g-completeness; otherwise the reduced family stays a g-frame.
inline RemovalVerdict classify_removal(const GFrame& f, int j0,
                                       double eig_tol = kRemovalEigTol) {
    const std::size_t pos = f.position_of(j0);
    const FrameOperatorMatrix s = detail::require_frame(f, "classify_removal");
    const ComplexMatrix s_inv = spd_power(s.s, MatrixPower::kInverse);
    const ComplexMatrix& block = f.element(pos).block;

    RemovalVerdict out{};
    out.removed_index = j0;

    if (block.rows() == 0) {
        // Empty component space: removal changes nothing.
        out.verdict = RemovalOutcome::kStillGFrame;
        out.gap = 1.0;
        out.new_bounds = optimal_bounds(remove_element(f, j0));
        out.borderline = false;
        return out;
    }

    const ComplexMatrix t0 = hermitian_part(block * s_inv * block.adjoint());
    const HermEig eig = herm_eig(t0);

    double best_gap = 2.0;
    std::size_t best_k = 0;
    for (std::size_t k = 0; k < eig.eigenvalues.size(); ++k) {
        const double d = std::abs(eig.eigenvalues[k] - 1.0);
        if (d < best_gap) {
            best_gap = d;
            best_k = k;
        }
    }
    out.gap = best_gap;
    out.borderline = best_gap > eig_tol && best_gap <= kRemovalBorderline;

    if (best_gap <= eig_tol) {
        out.verdict = RemovalOutcome::kNotGComplete;
        out.certificate = eig.eigenvectors.col(best_k);
    } else {
        out.verdict = RemovalOutcome::kStillGFrame;
        out.new_bounds = optimal_bounds(remove_element(f, j0));
    }
    return out;
}

struct ExactnessReport {
    bool is_exact;
    std::vector<RemovalVerdict> verdicts;  // one per element, in element order
};

/// A g-frame is exact when removing any single element destroys
/// g-completeness.
inline ExactnessReport exactness(const GFrame& f, double eig_tol = kRemovalEigTol) {
    detail::require_frame(f, "exactness");
    ExactnessReport r{true, {}};
    r.verdicts.reserve(f.size());
    for (const GFrameElement& e : f.elements()) {
        r.verdicts.push_back(classify_removal(f, e.index, eig_tol));
        if (r.verdicts.back().verdict != RemovalOutcome::kNotGComplete) r.is_exact = false;
    }
    return r;
}

} // namespace gframekit
