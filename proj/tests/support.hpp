#pragma once

// Shared helpers and independent oracles for the test suites. Everything in
// here deliberately recomputes results by the most literal route available
// (plain summation loops, dense KKT solves) so it can stand against the
// library's own implementations.

#include <cmath>
#include <cstdint>
#include <vector>

#include "gframekit/gframekit.hpp"

namespace gft {

using namespace gframekit;

inline ComplexVector vec2(cplx a, cplx b) { return ComplexVector{a, b}; }
inline ComplexVector vec3(cplx a, cplx b, cplx c) { return ComplexVector{a, b, c}; }

inline double rel_err(double actual, double expected) {
    return std::abs(actual - expected) / std::max(1.0, std::abs(expected));
}

inline double mat_dist(const ComplexMatrix& a, const ComplexMatrix& b) {
    return (a - b).frobenius_norm();
}

/// Identity frame {I_n}.
inline GFrame identity_frame(std::size_t n) {
    return GFrame(n, {{1, ComplexMatrix::identity(n)}});
}

/// Three unit-vector functionals of R^2 at 90, 210 and 330 degrees; a tight
/// frame with both bounds 3/2.
inline GFrame mercedes_benz() {
    const double pi = 3.14159265358979323846;
    std::vector<ComplexVector> vs;
    for (double deg : {90.0, 210.0, 330.0}) {
        const double t = deg * pi / 180.0;
        vs.push_back(vec2(std::cos(t), std::sin(t)));
    }
    return from_vector_frame(VectorFrame::from_vectors(2, vs));
}

/// Coordinate selections {1,2} and {2,3} of C^3; frame operator diag(1,2,1).
inline GFrame overlap_partition_frame() {
    return from_partition_projections(3, {{1, 2}, {2, 3}});
}

/// Direct summation oracle for the frame operator: a plain loop over
/// adjoint-times-block products, independent of frame_operator's
/// accumulation.
inline ComplexMatrix direct_frame_operator(const GFrame& f) {
    ComplexMatrix s(f.dim_u(), f.dim_u());
    for (const GFrameElement& e : f.elements()) s += e.block.adjoint() * e.block;
    return s;
}

/// <S x, x> computed by direct summation of ||block_j x||^2.
inline double direct_energy(const GFrame& f, const ComplexVector& x) {
    double s = 0.0;
    for (const GFrameElement& e : f.elements()) s += norm_sq(e.block * x);
    return s;
}

/// Dense KKT oracle for the constrained quadratic infimum: minimizes
/// sum_j <B_j u_j, u_j> subject to sum_j block_j* u_j = u by solving the
/// stacked stationarity system. O((sum m_j + n)^3); test-only.
struct KktResult {
    double value;
    CoefficientFamily minimizer;
};

inline KktResult kkt_infimum(const GFrame& f, const BilinearFormFamily& forms,
                             const ComplexVector& u) {
    const std::size_t n = f.dim_u();
    const std::size_t total = f.dim_sum();
    const std::size_t dim = total + n;

    // [ D   Syn* ] [w ]   [0]
    // [ Syn  0   ] [mu] = [u],  Syn = [block_1* ... block_J*]
    ComplexMatrix kkt(dim, dim);
    std::size_t offset = 0;
    for (std::size_t j = 0; j < f.size(); ++j) {
        const ComplexMatrix& b = forms.form(j);
        for (std::size_t r = 0; r < b.rows(); ++r)
            for (std::size_t c = 0; c < b.cols(); ++c) kkt(offset + r, offset + c) = b(r, c);
        const ComplexMatrix& block = f.element(j).block;
        for (std::size_t r = 0; r < block.rows(); ++r)
            for (std::size_t c = 0; c < n; ++c) {
                // Syn(c, offset+r) = conj(block(r, c))
                kkt(total + c, offset + r) = std::conj(block(r, c));
                kkt(offset + r, total + c) = block(r, c);  // Syn* entry
            }
        offset += block.rows();
    }
    ComplexVector rhs(dim, cplx(0.0, 0.0));
    for (std::size_t c = 0; c < n; ++c) rhs[total + c] = u[c];

    // The KKT system as written solves D w - Syn* mu = 0, Syn w = u after a
    // sign choice folded into mu.
    const ComplexVector sol = lu_solve(kkt, rhs);

    KktResult out;
    out.minimizer.parts.reserve(f.size());
    offset = 0;
    double value = 0.0;
    for (std::size_t j = 0; j < f.size(); ++j) {
        const std::size_t m = f.element(j).block.rows();
        ComplexVector part(sol.begin() + static_cast<std::ptrdiff_t>(offset),
                           sol.begin() + static_cast<std::ptrdiff_t>(offset + m));
        value += dot(forms.form(j) * part, part).real();
        out.minimizer.parts.push_back(std::move(part));
        offset += m;
    }
    out.value = value;
    return out;
}

/// Random coefficient family shaped like the frame's components.
inline CoefficientFamily random_family(const GFrame& f, Rng& rng) {
    CoefficientFamily g;
    g.parts.reserve(f.size());
    for (const GFrameElement& e : f.elements())
        g.parts.push_back(rng.cnormal_vector(e.block.rows()));
    return g;
}

/// Desk-scale random instance sweep shared by property tests and the
/// acceptance suite. Derives (n, dims, conditioning) deterministically from
/// the seed; occasionally includes zero-dimensional components.
struct SweepSpec {
    std::size_t n;
    std::vector<std::size_t> dims;
    double conditioning;
    std::uint64_t seed;
};

inline SweepSpec sweep_spec(std::uint64_t seed, bool riesz_only = false) {
    Rng rng(seed * 2654435761ULL + 17);
    SweepSpec s;
    s.seed = seed;
    s.n = 2 + rng.uniform_index(riesz_only ? 9 : 15);  // 2..16 (riesz: 2..10)
    s.conditioning = 1.0 + rng.uniform() * 9.0;
    if (riesz_only) {
        // dims summing exactly to n
        std::size_t remaining = s.n;
        while (remaining > 0) {
            const std::size_t m = 1 + rng.uniform_index(std::min<std::size_t>(remaining, 4));
            s.dims.push_back(m);
            remaining -= m;
        }
    } else {
        const std::size_t count = 2 + rng.uniform_index(9);  // 2..10 elements
        std::size_t total = 0;
        for (std::size_t i = 0; i < count; ++i) {
            std::size_t m = rng.uniform_index(7);  // 0..6, zero blocks included
            s.dims.push_back(m);
            total += m;
        }
        while (s.dims.size() * 6 < s.n) s.dims.push_back(0);
        std::size_t i = 0;
        while (total < s.n) {  // ensure a feasible frame
            if (s.dims[i % s.dims.size()] < 6) {
                ++s.dims[i % s.dims.size()];
                ++total;
            }
            ++i;
        }
    }
    return s;
}

inline GFrame sweep_frame(const SweepSpec& s) {
    return random_gframe(s.n, s.dims, s.seed * 977ULL + 3, s.conditioning);
}

} // namespace gft
