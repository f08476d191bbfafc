#pragma once

#include <cmath>
#include <cstdint>
#include <numbers>

#include "gframekit/complex_matrix.hpp"

namespace gframekit {

/// Small deterministic generator (splitmix64). The stream depends only on
/// the seed, never on library or platform distribution internals, which
/// keeps generated frames and CLI output byte-reproducible.
class Rng {
public:
    explicit Rng(std::uint64_t seed) : state_(seed) {}

    std::uint64_t next_u64() {
        std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ULL);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
        return z ^ (z >> 31);
    }

    /// Uniform on [0, 1) with 53 random mantissa bits.
    double uniform() {
        return static_cast<double>(next_u64() >> 11) * 0x1.0p-53;
    }

    /// Uniform integer in [0, n).
    std::size_t uniform_index(std::size_t n) {
        return static_cast<std::size_t>(uniform() * static_cast<double>(n)) % n;
    }

    /// Standard normal via Box-Muller.
    double normal() {
        if (have_spare_) {
            have_spare_ = false;
            return spare_;
        }
        double u1 = uniform();
        while (u1 <= 0.0) u1 = uniform();
        const double u2 = uniform();
        const double r = std::sqrt(-2.0 * std::log(u1));
        const double theta = 2.0 * std::numbers::pi * u2;
        spare_ = r * std::sin(theta);
        have_spare_ = true;
        return r * std::cos(theta);
    }

    /// Standard complex normal (unit expected squared modulus).
    cplx cnormal() {
        const double inv_sqrt2 = 0.7071067811865476;
        return cplx(normal() * inv_sqrt2, normal() * inv_sqrt2);
    }

    ComplexVector cnormal_vector(std::size_t n) {
        ComplexVector v(n);
        for (cplx& x : v) x = cnormal();
        return v;
    }

    ComplexMatrix cnormal_matrix(std::size_t rows, std::size_t cols) {
        ComplexMatrix m(rows, cols);
        for (std::size_t i = 0; i < rows; ++i)
            for (std::size_t j = 0; j < cols; ++j) m(i, j) = cnormal();
        return m;
    }

private:
    std::uint64_t state_;
    double spare_ = 0.0;
    bool have_spare_ = false;
};

} // namespace gframekit
