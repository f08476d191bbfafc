#pragma once

#include <cmath>
#include <cstdint>
#include <utility>

#include "gframekit/gframe.hpp"
#include "gframekit/rng.hpp"

namespace gframekit {

/// A pair (primal, dual) counts as dual when the mixed synthesis-analysis sum
/// reproduces the identity within this normalized residual.
inline constexpr double kDualResidualTol = 1e-9;

/// ||sum_j primal_j* dual_j - I||_F / sqrt(n).
inline double dual_pair_residual(const GFrame& a, const GFrame& b) {
    if (a.dim_u() != b.dim_u() || a.size() != b.size())
        throw DimensionMismatch("dual_pair_residual: frames have different shapes");
    const std::size_t n = a.dim_u();
    ComplexMatrix acc(n, n);
    for (std::size_t i = 0; i < a.size(); ++i) {
        const ComplexMatrix& lam = a.element(i).block;
        const ComplexMatrix& gam = b.element(i).block;
        if (lam.rows() != gam.rows())
            throw DimensionMismatch("dual_pair_residual: element row counts differ");
        acc += lam.adjoint() * gam;
    }
    acc -= ComplexMatrix::identity(n);
    return acc.frobenius_norm() / std::sqrt(static_cast<double>(n));
}

struct DualVerification {
    bool is_dual;
    double residual;
};

inline DualVerification verify_dual_pair(const GFrame& a, const GFrame& b,
                                         double tol = kDualResidualTol) {
    const double r = dual_pair_residual(a, b);
    return DualVerification{r <= tol, r};
}

/// A verified dual pair. Construction checks the identity-resolution
/// invariant and throws NotDualPair otherwise.
class DualPair {
public:
    DualPair(GFrame primal, GFrame dual, double tol = kDualResidualTol)
        : primal_(std::move(primal)), dual_(std::move(dual)) {
        const double r = dual_pair_residual(primal_, dual_);
        if (r > tol)
            throw NotDualPair("DualPair: identity residual " + std::to_string(r) +
                              " exceeds tolerance");
    }

    const GFrame& primal() const { return primal_; }
    const GFrame& dual() const { return dual_; }

    DualPair swapped() const { return DualPair(dual_, primal_); }

private:
    GFrame primal_;
    GFrame dual_;
};

namespace detail {

inline GFrame map_blocks(const GFrame& f, const ComplexMatrix& right) {
    std::vector<GFrameElement> elems;
    elems.reserve(f.size());
    for (const GFrameElement& e : f.elements())
        elems.push_back({e.index, e.block * right});
    return GFrame(f.dim_u(), std::move(elems));
}

inline FrameOperatorMatrix require_frame(const GFrame& f, const char* who) {
    FrameOperatorMatrix s = frame_operator(f);
    if (!is_frame(s))
        throw NotAFrame(std::string(who) + ": family is not a g-frame (lower bound vanishes)");
    return s;
}

} // namespace detail

/// Canonical dual: each block composed with S^{-1}. Inverts S spectrally
/// once; S is reused across all blocks.
inline GFrame canonical_dual(const GFrame& f) {
    const FrameOperatorMatrix s = detail::require_frame(f, "canonical_dual");
    return detail::map_blocks(f, spd_power(s.s, MatrixPower::kInverse));
}

/// Parseval transform: each block composed with S^{-1/2}; the result has
/// both optimal bounds equal to 1.
inline GFrame tight_transform(const GFrame& f) {
    const FrameOperatorMatrix s = detail::require_frame(f, "tight_transform");
    return detail::map_blocks(f, spd_power(s.s, MatrixPower::kInvSqrt));
}

/// Canonical dual pair of f.
inline DualPair canonical_pair(const GFrame& f) { return DualPair(f, canonical_dual(f)); }

/// Whether b is blockwise the canonical dual of a. Duality alone admits many
/// partners; canonicity pins the unique one factoring through S^{-1}.
inline bool is_canonical_dual(const GFrame& a, const GFrame& b, double tol = 1e-9) {
    if (a.dim_u() != b.dim_u() || a.size() != b.size()) return false;
    const GFrame expected = canonical_dual(a);
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (b.element(i).block.rows() != expected.element(i).block.rows()) return false;
        const double scale = std::max(1.0, expected.element(i).block.frobenius_norm());
        if ((b.element(i).block - expected.element(i).block).frobenius_norm() > tol * scale)
            return false;
    }
    return true;
}

/// Expansion through the pair: sum_j primal_j* (dual_j x).
inline ComplexVector reconstruct(const DualPair& p, const ComplexVector& x) {
    if (x.size() != p.primal().dim_u())
        throw DimensionMismatch("reconstruct: vector dimension differs from dim_u");
    return synthesize(p.primal(), analyze(p.dual(), x));
}

struct MinimalNormReport {
    double lhs;              // sum ||g_j||^2
    double rhs;              // canonical energy + correction
    double gap;              // |lhs - rhs|
    double canonical_energy; // sum ||dual_j x||^2
    double correction;       // sum ||g_j - dual_j x||^2
};

/// Checks the Pythagorean split of any representation x = sum block_j* g_j
/// into the canonical coefficients plus an orthogonal correction.
inline MinimalNormReport minimal_norm_check(const GFrame& f, const ComplexVector& x,
                                            const CoefficientFamily& g) {
    if (!compatible(f, g))
        throw DimensionMismatch("minimal_norm_check: coefficients incompatible with frame");
    const ComplexVector resynth = synthesize(f, g);
    const double scale = std::max(1.0, norm(x));
    if (norm(resynth - x) > 1e-9 * scale)
        throw NotARepresentation("minimal_norm_check: coefficients do not represent the vector");

    const CoefficientFamily canonical = analyze(canonical_dual(f), x);
    MinimalNormReport r{};
    r.lhs = g.total_norm_sq();
    r.canonical_energy = canonical.total_norm_sq();
    for (std::size_t i = 0; i < g.parts.size(); ++i)
        r.correction += norm_sq(g.parts[i] - canonical.parts[i]);
    r.rhs = r.canonical_energy + r.correction;
    r.gap = std::abs(r.lhs - r.rhs);
    return r;
}

/// A seeded representation of x in the frame: canonical coefficients plus a
/// random synthesis-kernel component. Deterministic for a fixed seed; the
/// kernel component vanishes exactly when the synthesis map is injective.
inline CoefficientFamily general_coefficients(const GFrame& f, const ComplexVector& x,
                                              std::uint64_t seed) {
    const FrameOperatorMatrix s = detail::require_frame(f, "general_coefficients");
    const GFrame dual = detail::map_blocks(f, spd_power(s.s, MatrixPower::kInverse));

    CoefficientFamily out = analyze(dual, x);
    if (f.dim_sum() <= f.dim_u()) return out;  // synthesis map injective, kernel trivial

    Rng rng(seed);
    CoefficientFamily noise;
    noise.parts.reserve(f.size());
    for (const GFrameElement& e : f.elements())
        noise.parts.push_back(rng.cnormal_vector(e.block.rows()));

    // Project the noise onto ker(synthesis): subtract the canonical
    // representation of its synthesis image.
    const CoefficientFamily shadow = analyze(dual, synthesize(f, noise));
    for (std::size_t i = 0; i < out.parts.size(); ++i)
        for (std::size_t k = 0; k < out.parts[i].size(); ++k)
            out.parts[i][k] += noise.parts[i][k] - shadow.parts[i][k];
    return out;
}

} // namespace gframekit
