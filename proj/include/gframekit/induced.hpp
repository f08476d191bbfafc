#pragma once

#include <cmath>
#include <optional>
#include <utility>
#include <vector>

#include "gframekit/classify.hpp"
#include "gframekit/duality.hpp"
#include "gframekit/gframe.hpp"

namespace gframekit {

/// One vector of an induced family, tagged with its (element, basis-column)
/// provenance.
struct LabeledVector {
    int j;
    int k;
    ComplexVector v;
};

/// Ordered finite vector family in an n-dimensional complex space.
class VectorFrame {
public:
    VectorFrame(std::size_t dim, std::vector<LabeledVector> vectors)
        : dim_(dim), vectors_(std::move(vectors)) {
        if (dim_ == 0) throw ValidationError("VectorFrame: dimension must be positive");
        for (std::size_t i = 0; i < vectors_.size(); ++i) {
            if (vectors_[i].v.size() != dim_)
                throw DimensionMismatch("VectorFrame: vector dimension mismatch");
            if (i > 0) {
                const LabeledVector& a = vectors_[i - 1];
                const LabeledVector& b = vectors_[i];
                if (a.j > b.j || (a.j == b.j && a.k >= b.k))
                    throw ValidationError(
                        "VectorFrame: provenance labels must be unique and ordered");
            }
        }
    }

    /// Plain list of vectors, auto-labeled (1,0), (2,0), ...
    static VectorFrame from_vectors(std::size_t dim, const std::vector<ComplexVector>& vs) {
        std::vector<LabeledVector> lv;
        lv.reserve(vs.size());
        for (std::size_t i = 0; i < vs.size(); ++i)
            lv.push_back({static_cast<int>(i) + 1, 0, vs[i]});
        return VectorFrame(dim, std::move(lv));
    }

    std::size_t dim() const { return dim_; }
    std::size_t size() const { return vectors_.size(); }
    const std::vector<LabeledVector>& vectors() const { return vectors_; }
    const LabeledVector& vector(std::size_t i) const { return vectors_[i]; }

private:
    std::size_t dim_;
    std::vector<LabeledVector> vectors_;
};

/// One unitary matrix per element; its columns are the orthonormal basis
/// chosen for that component space.
class OnbChoice {
public:
    explicit OnbChoice(std::vector<ComplexMatrix> bases) : bases_(std::move(bases)) {
        for (const ComplexMatrix& b : bases_) {
            if (b.rows() != b.cols()) throw NotUnitary("OnbChoice: basis matrix not square");
            ComplexMatrix res = b.adjoint() * b - ComplexMatrix::identity(b.cols());
            if (res.frobenius_norm() > 1e-10 * std::max(1.0, std::sqrt(double(b.cols()))))
                throw NotUnitary("OnbChoice: basis matrix not unitary");
        }
    }

    std::size_t size() const { return bases_.size(); }
    const ComplexMatrix& basis(std::size_t i) const { return bases_[i]; }

private:
    std::vector<ComplexMatrix> bases_;
};

/// u_{j,k} = block_j* e_{j,k}. With the default (standard) basis these are
/// the conjugated block rows, ordered by ascending element then row.
inline VectorFrame induced_sequence(const GFrame& f,
                                    const std::optional<OnbChoice>& onb = std::nullopt) {
    if (onb && onb->size() != f.size())
        throw DimensionMismatch("induced_sequence: basis count differs from element count");
    std::vector<LabeledVector> out;
    out.reserve(f.dim_sum());
    for (std::size_t i = 0; i < f.size(); ++i) {
        const ComplexMatrix& block = f.element(i).block;
        const std::size_t m = block.rows();
        if (onb && onb->basis(i).rows() != m)
            throw DimensionMismatch("induced_sequence: basis dimension differs from block rows");
        for (std::size_t k = 0; k < m; ++k) {
            ComplexVector u;
            if (onb) {
                u = apply_adjoint(block, onb->basis(i).col(k));
            } else {
                u.resize(f.dim_u());
                for (std::size_t c = 0; c < f.dim_u(); ++c) u[c] = std::conj(block(k, c));
            }
            out.push_back({f.element(i).index, static_cast<int>(k), std::move(u)});
        }
    }
    return VectorFrame(f.dim_u(), std::move(out));
}

/// sum_i v_i v_i*, the frame operator of a plain vector family.
inline ComplexMatrix vector_frame_operator(const VectorFrame& vf) {
    const std::size_t n = vf.dim();
    ComplexMatrix s(n, n);
    for (const LabeledVector& lv : vf.vectors())
        for (std::size_t i = 0; i < n; ++i) {
            const cplx vi = lv.v[i];
            for (std::size_t j = 0; j < n; ++j) s(i, j) += vi * std::conj(lv.v[j]);
        }
    return hermitian_part(s);
}

/// Classification of an ordinary vector family, computed from its Gram
/// matrix and frame operator (a route independent of the block machinery).
struct VectorFrameClass {
    bool is_bessel;
    double bessel_bound;
    bool is_complete;
    bool is_frame;
    FrameBounds bounds;
    bool is_tight;
    bool is_riesz;
    bool is_orthonormal;
    std::size_t count;
};

inline VectorFrameClass classify_vector_frame(const VectorFrame& vf,
                                              double rank_tol = kDefaultRankTol,
                                              double frame_threshold = kFrameThreshold) {
    const std::size_t n = vf.dim();
    const std::size_t count = vf.size();

    // Analysis matrix: row i is the functional <., v_i>.
    ComplexMatrix analysis(count, n);
    for (std::size_t i = 0; i < count; ++i)
        for (std::size_t c = 0; c < n; ++c) analysis(i, c) = std::conj(vf.vector(i).v[c]);

    const HermEig spec = herm_eig(vector_frame_operator(vf));
    VectorFrameClass r{};
    r.count = count;
    r.is_bessel = true;
    r.bessel_bound = std::max(0.0, spec.max_eigenvalue());
    r.bounds = FrameBounds{std::max(0.0, spec.min_eigenvalue()), r.bessel_bound};
    r.is_complete = numerical_rank(analysis, rank_tol) == n;
    r.is_frame = r.is_complete && r.bounds.upper > 0.0 &&
                 r.bounds.lower > frame_threshold * r.bounds.upper;
    r.is_tight = r.is_frame && (r.bounds.upper - r.bounds.lower) <= kTightGapTol * r.bounds.upper;
    r.is_riesz = r.is_frame && count == n;

    r.is_orthonormal = false;
    if (r.is_riesz) {
        // Gram matrix against the identity.
        ComplexMatrix gram(count, count);
        for (std::size_t i = 0; i < count; ++i)
            for (std::size_t k = 0; k < count; ++k)
                gram(i, k) = dot(vf.vector(k).v, vf.vector(i).v);
        gram -= ComplexMatrix::identity(count);
        r.is_orthonormal = gram.frobenius_norm() <=
                           kOrthonormalTol * std::max(1.0, std::sqrt(double(count)));
    }
    return r;
}

/// Side-by-side classification of a g-frame and its induced vector family,
/// with the frame-operator agreement residual.
struct EquivalenceReport {
    ClassificationReport operator_side;
    VectorFrameClass vector_side;
    bool statuses_agree;
    double frame_operator_residual;  // Frobenius distance of the two operators
    double bound_deviation;          // max abs difference of (lower, upper)
};

inline EquivalenceReport equivalence_report(const GFrame& f,
                                            const std::optional<OnbChoice>& onb = std::nullopt) {
    const VectorFrame induced = induced_sequence(f, onb);
    EquivalenceReport rep{classify(f), classify_vector_frame(induced), false, 0.0, 0.0};
    rep.statuses_agree = rep.operator_side.is_bessel == rep.vector_side.is_bessel &&
                         rep.operator_side.is_complete == rep.vector_side.is_complete &&
                         rep.operator_side.is_frame == rep.vector_side.is_frame &&
                         rep.operator_side.is_tight == rep.vector_side.is_tight &&
                         rep.operator_side.is_riesz == rep.vector_side.is_riesz &&
                         rep.operator_side.is_orthonormal == rep.vector_side.is_orthonormal;
    const ComplexMatrix diff = vector_frame_operator(induced) - frame_operator(f).s;
    rep.frame_operator_residual = diff.frobenius_norm();
    rep.bound_deviation =
        std::max(std::abs(rep.operator_side.bounds.lower - rep.vector_side.bounds.lower),
                 std::abs(rep.operator_side.bounds.upper - rep.vector_side.bounds.upper));
    return rep;
}

/// Residual of the local reconstruction sum_k dual_k <., primal_k> = I.
inline double local_pair_residual(const VectorFrame& primal, const VectorFrame& dual) {
    if (primal.dim() != dual.dim() || primal.size() != dual.size())
        throw DimensionMismatch("local_pair_residual: families have different shapes");
    const std::size_t m = primal.dim();
    ComplexMatrix acc(m, m);
    for (std::size_t k = 0; k < primal.size(); ++k)
        for (std::size_t i = 0; i < m; ++i) {
            const cplx di = dual.vector(k).v[i];
            for (std::size_t j = 0; j < m; ++j)
                acc(i, j) += di * std::conj(primal.vector(k).v[j]);
        }
    acc -= ComplexMatrix::identity(m);
    return acc.frobenius_norm() / std::sqrt(static_cast<double>(m));
}

/// Lifts per-element dual vector-frame pairs through a dual g-frame pair:
/// first output {primal_j* g_{j,k}}, second {dual_j* g~_{j,k}}. The outputs
/// are a pair of dual frames for the whole space.
inline std::pair<VectorFrame, VectorFrame> construct_dual_frames(
    const DualPair& p, const std::vector<VectorFrame>& local_primal,
    const std::vector<VectorFrame>& local_dual) {
    const GFrame& f = p.primal();
    if (local_primal.size() != f.size() || local_dual.size() != f.size())
        throw DimensionMismatch("construct_dual_frames: local family count differs");

    for (std::size_t i = 0; i < f.size(); ++i) {
        const std::size_t m = f.element(i).block.rows();
        if (m == 0) {
            if (local_primal[i].size() != 0 || local_dual[i].size() != 0)
                throw DimensionMismatch(
                    "construct_dual_frames: nonempty local family on empty component");
            continue;
        }
        if (local_primal[i].dim() != m || local_dual[i].dim() != m)
            throw DimensionMismatch("construct_dual_frames: local dimension differs from block");
        if (local_pair_residual(local_primal[i], local_dual[i]) > kDualResidualTol)
            throw LocalPairNotDual("construct_dual_frames: local pair " + std::to_string(i) +
                                   " fails the duality residual");
    }

    std::vector<LabeledVector> first, second;
    for (std::size_t i = 0; i < f.size(); ++i) {
        const ComplexMatrix& lam = f.element(i).block;
        const ComplexMatrix& gam = p.dual().element(i).block;
        if (lam.rows() == 0) continue;
        for (std::size_t k = 0; k < local_primal[i].size(); ++k) {
            first.push_back({f.element(i).index, static_cast<int>(k),
                             apply_adjoint(lam, local_primal[i].vector(k).v)});
            second.push_back({f.element(i).index, static_cast<int>(k),
                              apply_adjoint(gam, local_dual[i].vector(k).v)});
        }
    }
    return {VectorFrame(f.dim_u(), std::move(first)), VectorFrame(f.dim_u(), std::move(second))};
}

struct CanonicalDualityReport {
    bool is_canonical;
    double max_residual;  // max_i ||second_i - S_first^{-1} first_i|| / scale
};

/// Checks whether the second family is the canonical dual of the first,
/// i.e. second_i = S_first^{-1} first_i for every i.
inline CanonicalDualityReport canonical_duality_check(const VectorFrame& first,
                                                      const VectorFrame& second,
                                                      double tol = 1e-8) {
    if (first.dim() != second.dim() || first.size() != second.size())
        throw DimensionMismatch("canonical_duality_check: families have different shapes");
    const ComplexMatrix s = vector_frame_operator(first);
    const HermEig spec = herm_eig(s);
    if (spec.max_eigenvalue() <= 0.0 ||
        spec.min_eigenvalue() <= kFrameThreshold * spec.max_eigenvalue())
        throw NotAFrame("canonical_duality_check: first family is not a frame");
    const ComplexMatrix s_inv = spd_power(s, MatrixPower::kInverse);

    CanonicalDualityReport rep{true, 0.0};
    for (std::size_t i = 0; i < first.size(); ++i) {
        const ComplexVector expected = s_inv * first.vector(i).v;
        const double scale = std::max(1.0, norm(expected));
        rep.max_residual =
            std::max(rep.max_residual, norm(second.vector(i).v - expected) / scale);
    }
    rep.is_canonical = rep.max_residual <= tol;
    return rep;
}

} // namespace gframekit
