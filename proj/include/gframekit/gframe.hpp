#pragma once

#include <cstddef>
#include <string>
#include <unordered_set>
#include <utility>
#include <vector>

#include "gframekit/complex_matrix.hpp"
#include "gframekit/errors.hpp"
#include "gframekit/linalg.hpp"

namespace gframekit {

/// A family counts as a frame when lambda_min(S) > threshold * lambda_max(S).
inline constexpr double kFrameThreshold = 1e-10;

/// One operator block of a g-frame: an integer label and the m_j x n matrix
/// realizing the bounded operator into the j-th component space.
struct GFrameElement {
    int index;
    ComplexMatrix block;
};

/// Ordered finite family of operator blocks acting on an n-dimensional
/// complex space. Blocks may have zero rows; labels must be distinct.
class GFrame {
public:
    explicit GFrame(std::size_t dim_u, std::vector<GFrameElement> elements = {})
        : dim_u_(dim_u), elements_(std::move(elements)) {
        if (dim_u_ == 0) throw ValidationError("GFrame: dimension must be positive");
        std::unordered_set<int> seen;
        for (const GFrameElement& e : elements_) {
            if (e.block.cols() != dim_u_)
                throw DimensionMismatch("GFrame: element " + std::to_string(e.index) +
                                        " has wrong column count");
            if (!e.block.all_finite())
                throw ValidationError("GFrame: element " + std::to_string(e.index) +
                                      " contains non-finite entries");
            if (!seen.insert(e.index).second)
                throw ValidationError("GFrame: duplicate element index " +
                                      std::to_string(e.index));
        }
    }

    std::size_t dim_u() const { return dim_u_; }
    std::size_t size() const { return elements_.size(); }
    const std::vector<GFrameElement>& elements() const { return elements_; }
    const GFrameElement& element(std::size_t pos) const { return elements_[pos]; }

    /// Position of the element labeled `index`, or throws UnknownIndex.
    std::size_t position_of(int index) const {
        for (std::size_t i = 0; i < elements_.size(); ++i)
            if (elements_[i].index == index) return i;
        throw UnknownIndex("GFrame: no element labeled " + std::to_string(index));
    }

    /// Sum of component-space dimensions, sum_j m_j.
    std::size_t dim_sum() const {
        std::size_t s = 0;
        for (const GFrameElement& e : elements_) s += e.block.rows();
        return s;
    }

private:
    std::size_t dim_u_;
    std::vector<GFrameElement> elements_;
};

/// One coefficient vector g_j per frame element, aligned by position.
struct CoefficientFamily {
    std::vector<ComplexVector> parts;

    double total_norm_sq() const {
        double s = 0.0;
        for (const ComplexVector& p : parts) s += norm_sq(p);
        return s;
    }
};

inline bool compatible(const GFrame& f, const CoefficientFamily& g) {
    if (g.parts.size() != f.size()) return false;
    for (std::size_t i = 0; i < f.size(); ++i)
        if (g.parts[i].size() != f.element(i).block.rows()) return false;
    return true;
}

/// Sharp lower/upper constants of the defining two-sided inequality.
struct FrameBounds {
    double lower;
    double upper;
};

/// The operator S = sum_j block_j* block_j together with its spectrum.
struct FrameOperatorMatrix {
    ComplexMatrix s;
    HermEig spectrum;
};

/// Analysis: g_j = block_j x for every element.
inline CoefficientFamily analyze(const GFrame& f, const ComplexVector& x) {
    if (x.size() != f.dim_u())
        throw DimensionMismatch("analyze: vector dimension differs from dim_u");
    CoefficientFamily g;
    g.parts.reserve(f.size());
    for (const GFrameElement& e : f.elements()) g.parts.push_back(e.block * x);
    return g;
}

/// Synthesis: sum_j block_j* g_j, the adjoint of analysis.
inline ComplexVector synthesize(const GFrame& f, const CoefficientFamily& g) {
    if (!compatible(f, g))
        throw DimensionMismatch("synthesize: coefficient family incompatible with frame");
    ComplexVector y(f.dim_u(), cplx(0.0, 0.0));
    for (std::size_t i = 0; i < f.size(); ++i) {
        const ComplexVector part = apply_adjoint(f.element(i).block, g.parts[i]);
        for (std::size_t k = 0; k < y.size(); ++k) y[k] += part[k];
    }
    return y;
}

/// All blocks stacked vertically: a (sum_j m_j) x n matrix.
inline ComplexMatrix stacked_matrix(const GFrame& f) {
    ComplexMatrix m(f.dim_sum(), f.dim_u());
    std::size_t r = 0;
    for (const GFrameElement& e : f.elements()) {
        for (std::size_t i = 0; i < e.block.rows(); ++i, ++r)
            for (std::size_t j = 0; j < f.dim_u(); ++j) m(r, j) = e.block(i, j);
    }
    return m;
}

/// S = sum_j block_j* block_j, accumulated in ascending element order.
inline FrameOperatorMatrix frame_operator(const GFrame& f) {
    const std::size_t n = f.dim_u();
    ComplexMatrix s(n, n);
    for (const GFrameElement& e : f.elements()) {
        const ComplexMatrix& b = e.block;
        for (std::size_t r = 0; r < b.rows(); ++r)
            for (std::size_t i = 0; i < n; ++i) {
                const cplx bi = std::conj(b(r, i));
                for (std::size_t j = 0; j < n; ++j) s(i, j) += bi * b(r, j);
            }
    }
    FrameOperatorMatrix out;
    out.s = hermitian_part(s);
    out.spectrum = herm_eig(out.s);
    return out;
}

/// Optimal constants: the extreme eigenvalues of S.
inline FrameBounds optimal_bounds(const GFrame& f) {
    const FrameOperatorMatrix s = frame_operator(f);
    const double lo = std::max(0.0, s.spectrum.min_eigenvalue());
    return FrameBounds{lo, std::max(lo, s.spectrum.max_eigenvalue())};
}

inline bool is_frame(const FrameOperatorMatrix& s, double threshold = kFrameThreshold) {
    const double hi = s.spectrum.max_eigenvalue();
    return hi > 0.0 && s.spectrum.min_eigenvalue() > threshold * hi;
}

inline bool is_frame(const GFrame& f, double threshold = kFrameThreshold) {
    return is_frame(frame_operator(f), threshold);
}

} // namespace gframekit
