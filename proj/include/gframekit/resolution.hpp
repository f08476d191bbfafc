#pragma once

#include <cmath>
#include <string>
#include <vector>

#include "gframekit/duality.hpp"
#include "gframekit/gframe.hpp"
#include "gframekit/linalg.hpp"

namespace gframekit {

/// The four atomic forms an operator splits into against a dual pair.
/// "pd" pairs primal-adjoint with dual, "dp" the reverse; the side names
/// where the operator multiplies.
enum class AtomVariant {
    kOperatorTimesPrimalDual,  // atoms t * (primal_j* dual_j)
    kOperatorTimesDualPrimal,  // atoms t * (dual_j* primal_j)
    kPrimalDualTimesOperator,  // atoms (primal_j* dual_j) * t
    kDualPrimalTimesOperator,  // atoms (dual_j* primal_j) * t
};

inline const char* atom_variant_name(AtomVariant v) {
    switch (v) {
        case AtomVariant::kOperatorTimesPrimalDual: return "t-pd";
        case AtomVariant::kOperatorTimesDualPrimal: return "t-dp";
        case AtomVariant::kPrimalDualTimesOperator: return "pd-t";
        case AtomVariant::kDualPrimalTimesOperator: return "dp-t";
    }
    return "?";
}

/// Per-element operator atoms summing back to the resolved operator.
struct AtomicResolution {
    AtomVariant variant;
    std::vector<int> indices;          // element labels, frame order
    std::vector<std::size_t> dims;     // component dimensions m_j
    std::vector<ComplexMatrix> atoms;  // one n x n atom per element
    double residual;                   // ||sum atoms - t||_F
};

/// Splits a square operator into per-element atoms through a verified dual
/// pair; the atoms sum back to the operator.
inline AtomicResolution resolve(const DualPair& p, const ComplexMatrix& t, AtomVariant variant) {
    const GFrame& f = p.primal();
    const std::size_t n = f.dim_u();
    if (t.rows() != n || t.cols() != n)
        throw DimensionMismatch("resolve: operator shape differs from frame dimension");

    AtomicResolution out;
    out.variant = variant;
    ComplexMatrix sum(n, n);
    for (std::size_t i = 0; i < f.size(); ++i) {
        const ComplexMatrix& lam = f.element(i).block;
        const ComplexMatrix& gam = p.dual().element(i).block;
        ComplexMatrix pairing;
        switch (variant) {
            case AtomVariant::kOperatorTimesPrimalDual:
            case AtomVariant::kPrimalDualTimesOperator:
                pairing = lam.adjoint() * gam;
                break;
            case AtomVariant::kOperatorTimesDualPrimal:
            case AtomVariant::kDualPrimalTimesOperator:
                pairing = gam.adjoint() * lam;
                break;
        }
        ComplexMatrix atom;
        if (variant == AtomVariant::kOperatorTimesPrimalDual ||
            variant == AtomVariant::kOperatorTimesDualPrimal)
            atom = t * pairing;
        else
            atom = pairing * t;
        sum += atom;
        out.indices.push_back(f.element(i).index);
        out.dims.push_back(lam.rows());
        out.atoms.push_back(std::move(atom));
    }
    out.residual = (sum - t).frobenius_norm();
    return out;
}

struct AtomRankEntry {
    int index;
    std::size_t rank;
    std::size_t bound;  // the component dimension m_j
};

struct AtomRankProfile {
    std::vector<AtomRankEntry> entries;
    bool all_within_bound;
};

/// Numerical rank of each atom; an atom built from element j never exceeds
/// rank m_j.
inline AtomRankProfile atom_rank_profile(const AtomicResolution& r,
                                         double tol = kDefaultRankTol) {
    AtomRankProfile out{{}, true};
    out.entries.reserve(r.atoms.size());
    for (std::size_t i = 0; i < r.atoms.size(); ++i) {
        const std::size_t rank = numerical_rank(r.atoms[i], tol);
        out.entries.push_back({r.indices[i], rank, r.dims[i]});
        if (rank > r.dims[i]) out.all_within_bound = false;
    }
    return out;
}

} // namespace gframekit
