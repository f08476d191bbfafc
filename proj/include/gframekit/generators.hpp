#pragma once

#include <cmath>
#include <cstdint>
#include <numbers>
#include <numeric>
#include <string>
#include <vector>

#include "gframekit/gframe.hpp"
#include "gframekit/induced.hpp"
#include "gframekit/rng.hpp"

namespace gframekit {

/// Haar-ish random unitary: Gaussian matrix orthonormalized by two passes of
/// modified Gram-Schmidt. Deterministic for a fixed seed.
inline ComplexMatrix random_unitary(std::size_t n, Rng& rng) {
    ComplexMatrix q = rng.cnormal_matrix(n, n);
    for (int pass = 0; pass < 2; ++pass) {
        for (std::size_t j = 0; j < n; ++j) {
            for (std::size_t k = 0; k < j; ++k) {
                cplx proj = 0.0;
                for (std::size_t i = 0; i < n; ++i) proj += std::conj(q(i, k)) * q(i, j);
                for (std::size_t i = 0; i < n; ++i) q(i, j) -= proj * q(i, k);
            }
            double nrm = 0.0;
            for (std::size_t i = 0; i < n; ++i) nrm += std::norm(q(i, j));
            nrm = std::sqrt(nrm);
            for (std::size_t i = 0; i < n; ++i) q(i, j) /= nrm;
        }
    }
    return q;
}

/// Random matrix with orthonormal columns (rows >= cols).
inline ComplexMatrix random_orthonormal_columns(std::size_t rows, std::size_t cols, Rng& rng) {
    if (rows < cols)
        throw DimensionMismatch("random_orthonormal_columns: fewer rows than columns");
    const ComplexMatrix full = random_unitary(rows, rng);
    ComplexMatrix q(rows, cols);
    for (std::size_t i = 0; i < rows; ++i)
        for (std::size_t j = 0; j < cols; ++j) q(i, j) = full(i, j);
    return q;
}

/// One rank-one functional element per vector: block row = conjugated
/// vector, so that analysis returns the inner products against the family.
inline GFrame from_vector_frame(const VectorFrame& vectors) {
    if (vectors.size() == 0)
        throw ValidationError("from_vector_frame: vector list must be nonempty");
    const std::size_t n = vectors.dim();
    std::vector<GFrameElement> elems;
    elems.reserve(vectors.size());
    for (std::size_t i = 0; i < vectors.size(); ++i) {
        ComplexMatrix block(1, n);
        for (std::size_t c = 0; c < n; ++c) block(0, c) = std::conj(vectors.vector(i).v[c]);
        elems.push_back({static_cast<int>(i) + 1, std::move(block)});
    }
    return GFrame(n, std::move(elems));
}

/// Coordinate-selection elements: element j restricts to the coordinates in
/// subsets[j] (1-based labels in {1..n}). A frame iff the union covers
/// {1..n}; g-orthonormal iff the subsets partition {1..n}.
inline GFrame from_partition_projections(std::size_t n,
                                         const std::vector<std::vector<std::size_t>>& subsets) {
    std::vector<GFrameElement> elems;
    elems.reserve(subsets.size());
    for (std::size_t j = 0; j < subsets.size(); ++j) {
        ComplexMatrix block(subsets[j].size(), n);
        for (std::size_t r = 0; r < subsets[j].size(); ++r) {
            const std::size_t coord = subsets[j][r];
            if (coord < 1 || coord > n)
                throw IndexOutOfRange("from_partition_projections: coordinate " +
                                      std::to_string(coord) + " outside {1.." +
                                      std::to_string(n) + "}");
            block(r, coord - 1) = 1.0;
        }
        elems.push_back({static_cast<int>(j) + 1, std::move(block)});
    }
    return GFrame(n, std::move(elems));
}

/// A single invertible operator as a one-element family; always a g-Riesz
/// basis with bounds equal to the squared extreme singular values.
inline GFrame from_operator(const ComplexMatrix& m) {
    if (m.rows() != m.cols()) throw DimensionMismatch("from_operator: matrix not square");
    if (numerical_rank(m) != m.rows())
        throw SingularOperator("from_operator: matrix is numerically singular");
    return GFrame(m.cols(), {{1, m}});
}

/// Cyclic grouped functionals over a seeded random Riesz basis of dimension
/// n. Element j collects `group` consecutive basis functionals starting at
/// j*(group-overlap) mod n, then appends `pad` zero rows. The element count
/// is n / gcd(n, group-overlap), so the groups close up cyclically.
inline GFrame grouped_riesz(std::size_t n, std::size_t group, std::size_t overlap,
                            std::uint64_t seed, std::size_t pad = 0) {
    if (group == 0 || group > n)
        throw InvalidGrouping("grouped_riesz: group size must lie in 1..n");
    if (overlap >= group)
        throw InvalidGrouping("grouped_riesz: overlap must be smaller than the group size");
    // Consecutive cyclic groups always cover {1..n}: gcd(n, step) <= step <= group.
    const std::size_t step = group - overlap;
    const std::size_t count = n / std::gcd(n, step);

    // Riesz basis functionals: rows of U diag(s) V* with singular values
    // log-spaced over one octave.
    Rng rng(seed);
    const ComplexMatrix u = random_unitary(n, rng);
    const ComplexMatrix v = random_unitary(n, rng);
    ComplexMatrix basis(n, n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            cplx acc = 0.0;
            for (std::size_t k = 0; k < n; ++k) {
                const double expo = n == 1 ? 0.0 : (double(k) / double(n - 1) - 0.5) * 0.5;
                acc += u(i, k) * std::pow(2.0, expo) * std::conj(v(j, k));
            }
            basis(i, j) = acc;
        }

    std::vector<GFrameElement> elems;
    elems.reserve(count);
    for (std::size_t j = 0; j < count; ++j) {
        ComplexMatrix block(group + pad, n);
        for (std::size_t t = 0; t < group; ++t) {
            const std::size_t src = (j * step + t) % n;
            for (std::size_t c = 0; c < n; ++c) block(t, c) = basis(src, c);
        }
        elems.push_back({static_cast<int>(j) + 1, std::move(block)});
    }
    return GFrame(n, std::move(elems));
}

/// Finite cyclic Gabor family grouped by time shift: element per translate
/// tau in {0, a, 2a, ...}, block rows are all modulations (frequency step b)
/// of that translate, encoded as analysis functionals.
inline GFrame discrete_gabor(std::size_t length, std::size_t time_step, std::size_t freq_step,
                             const ComplexVector& window) {
    if (length == 0 || time_step == 0 || freq_step == 0 || length % time_step != 0 ||
        length % freq_step != 0)
        throw InvalidLattice("discrete_gabor: steps must divide the signal length");
    if (window.size() != length)
        throw InvalidLattice("discrete_gabor: window length differs from signal length");

    const std::size_t shifts = length / time_step;
    const std::size_t mods = length / freq_step;
    std::vector<GFrameElement> elems;
    elems.reserve(shifts);
    for (std::size_t si = 0; si < shifts; ++si) {
        const std::size_t tau = si * time_step;
        ComplexMatrix block(mods, length);
        for (std::size_t mi = 0; mi < mods; ++mi) {
            const double omega = static_cast<double>(mi * freq_step);
            for (std::size_t t = 0; t < length; ++t) {
                const double angle =
                    2.0 * std::numbers::pi * omega * static_cast<double>(t) / double(length);
                const cplx atom = std::polar(1.0, angle) * window[(t + length - tau) % length];
                block(mi, t) = std::conj(atom);
            }
        }
        elems.push_back({static_cast<int>(si) + 1, std::move(block)});
    }
    return GFrame(length, std::move(elems));
}

/// Seeded random family with prescribed element dimensions and target
/// conditioning (ratio of the optimal bounds). The stacked matrix is built
/// as (orthonormal columns) * diag(sigma) * (unitary)*, so the achieved
/// ratio equals the target up to eigensolver accuracy.
inline GFrame random_gframe(std::size_t n, const std::vector<std::size_t>& dims,
                            std::uint64_t seed, double conditioning = 1.0) {
    const std::size_t total = std::accumulate(dims.begin(), dims.end(), std::size_t{0});
    if (total < n)
        throw InfeasibleSpec("random_gframe: element dimensions sum below dim_u");
    if (!(conditioning >= 1.0) || !std::isfinite(conditioning))
        throw InfeasibleSpec("random_gframe: conditioning target must be >= 1");

    Rng rng(seed);
    const ComplexMatrix left = random_orthonormal_columns(total, n, rng);
    const ComplexMatrix right = random_unitary(n, rng);
    // sigma_k^2 spans [1, conditioning].
    ComplexMatrix stack(total, n);
    for (std::size_t i = 0; i < total; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            cplx acc = 0.0;
            for (std::size_t k = 0; k < n; ++k) {
                const double frac = n == 1 ? 0.0 : double(k) / double(n - 1);
                const double sigma = std::pow(conditioning, 0.5 * frac);
                acc += left(i, k) * sigma * std::conj(right(j, k));
            }
            stack(i, j) = acc;
        }

    std::vector<GFrameElement> elems;
    elems.reserve(dims.size());
    std::size_t r = 0;
    for (std::size_t j = 0; j < dims.size(); ++j) {
        ComplexMatrix block(dims[j], n);
        for (std::size_t i = 0; i < dims[j]; ++i, ++r)
            for (std::size_t c = 0; c < n; ++c) block(i, c) = stack(r, c);
        elems.push_back({static_cast<int>(j) + 1, std::move(block)});
    }
    return GFrame(n, std::move(elems));
}

} // namespace gframekit
