#pragma once

#include <cmath>
#include <string>
#include <utility>
#include <vector>

#include "gframekit/gframe.hpp"

namespace gframekit {

/// One SPD form matrix per frame element, with the sharp global spectral
/// envelope c1 I <= B_j <= c2 I taken from the supplied matrices themselves.
class BilinearFormFamily {
public:
    BilinearFormFamily(const GFrame& f, std::vector<ComplexMatrix> forms)
        : forms_(std::move(forms)) {
        if (forms_.size() != f.size())
            throw DimensionMismatch("BilinearFormFamily: form count differs from element count");
        bool any = false;
        for (std::size_t i = 0; i < forms_.size(); ++i) {
            const ComplexMatrix& b = forms_[i];
            const std::size_t m = f.element(i).block.rows();
            const std::string label = std::to_string(f.element(i).index);
            if (b.rows() != m || b.cols() != m)
                throw DimensionMismatch("BilinearFormFamily: form for element " + label +
                                        " has wrong shape");
            if (m == 0) continue;
            if (hermitian_residual(b) > 1e-12 * std::max(1.0, b.frobenius_norm()))
                throw ValidationError("BilinearFormFamily: form for element " + label +
                                      " is not Hermitian");
            const HermEig eig = herm_eig(b);
            if (eig.min_eigenvalue() <= 0.0)
                throw ValidationError("BilinearFormFamily: form for element " + label +
                                      " is not positive definite");
            c1_ = any ? std::min(c1_, eig.min_eigenvalue()) : eig.min_eigenvalue();
            c2_ = any ? std::max(c2_, eig.max_eigenvalue()) : eig.max_eigenvalue();
            any = true;
        }
        if (!any) {
            c1_ = 1.0;
            c2_ = 1.0;
        }
    }

    static BilinearFormFamily identity(const GFrame& f) {
        std::vector<ComplexMatrix> forms;
        forms.reserve(f.size());
        for (const GFrameElement& e : f.elements())
            forms.push_back(ComplexMatrix::identity(e.block.rows()));
        return BilinearFormFamily(f, std::move(forms));
    }

    std::size_t size() const { return forms_.size(); }
    const ComplexMatrix& form(std::size_t i) const { return forms_[i]; }
    double c1() const { return c1_; }
    double c2() const { return c2_; }

private:
    std::vector<ComplexMatrix> forms_;
    double c1_ = 1.0;
    double c2_ = 1.0;
};

/// Extremes of the constrained quadratic infimum over the unit sphere.
struct SplittingConstants {
    double lower;
    double upper;
};

/// P = sum_j block_j* B_j^{-1} block_j. With identity forms this is the
/// frame operator. Throws SingularSplitting when P fails the frame-grade
/// spectral threshold.
inline ComplexMatrix splitting_operator(const GFrame& f, const BilinearFormFamily& forms) {
    if (forms.size() != f.size())
        throw DimensionMismatch("splitting_operator: form count differs from element count");
    const std::size_t n = f.dim_u();
    ComplexMatrix p(n, n);
    for (std::size_t i = 0; i < f.size(); ++i) {
        const ComplexMatrix& block = f.element(i).block;
        if (block.rows() == 0) continue;
        const ComplexMatrix weighted =
            spd_power(forms.form(i), MatrixPower::kInverse) * block;
        p += block.adjoint() * weighted;
    }
    p = hermitian_part(p);
    const HermEig eig = herm_eig(p);
    if (eig.max_eigenvalue() <= 0.0 ||
        eig.min_eigenvalue() <= kFrameThreshold * eig.max_eigenvalue())
        throw SingularSplitting("splitting_operator: operator is numerically singular");
    return p;
}

struct SplittingInfimum {
    double value;
    CoefficientFamily minimizer;
};

/// Closed-form constrained minimum of sum_j <B_j u_j, u_j> subject to
/// sum_j block_j* u_j = u: value <P^{-1}u, u>, attained at
/// u_j = B_j^{-1} block_j P^{-1} u.
inline SplittingInfimum splitting_infimum(const GFrame& f, const BilinearFormFamily& forms,
                                          const ComplexVector& u) {
    if (u.size() != f.dim_u())
        throw DimensionMismatch("splitting_infimum: vector dimension differs from dim_u");
    if (norm_sq(u) == 0.0)
        throw ValidationError("splitting_infimum: vector must be nonzero");
    const ComplexMatrix p = splitting_operator(f, forms);
    const ComplexVector pinv_u = spd_power(p, MatrixPower::kInverse) * u;

    SplittingInfimum out;
    out.value = dot(pinv_u, u).real();
    out.minimizer.parts.reserve(f.size());
    for (std::size_t i = 0; i < f.size(); ++i) {
        const ComplexMatrix& block = f.element(i).block;
        if (block.rows() == 0) {
            out.minimizer.parts.emplace_back();
            continue;
        }
        out.minimizer.parts.push_back(
            spd_power(forms.form(i), MatrixPower::kInverse) * (block * pinv_u));
    }
    return out;
}

/// Sharp constants of the splitting: the extremes of <P^{-1}u, u> over the
/// unit sphere, i.e. the reciprocal extreme eigenvalues of P.
inline SplittingConstants splitting_constants(const GFrame& f, const BilinearFormFamily& forms) {
    const HermEig eig = herm_eig(splitting_operator(f, forms));
    return SplittingConstants{1.0 / eig.max_eigenvalue(), 1.0 / eig.min_eigenvalue()};
}

struct SandwichReport {
    bool passes;
    SplittingConstants constants;
    FrameBounds frame_bounds;
    double c1_over_b;
    double c2_over_a;
};

/// Verifies c1/B <= lower and upper <= c2/A: uniformly bounded forms on a
/// g-frame always yield a stable splitting, with these envelope constants.
inline SandwichReport verify_sandwich(const GFrame& f, const BilinearFormFamily& forms) {
    const FrameOperatorMatrix s = detail::require_frame(f, "verify_sandwich");
    const FrameBounds bounds{s.spectrum.min_eigenvalue(), s.spectrum.max_eigenvalue()};
    const SplittingConstants constants = splitting_constants(f, forms);

    SandwichReport rep{};
    rep.constants = constants;
    rep.frame_bounds = bounds;
    rep.c1_over_b = forms.c1() / bounds.upper;
    rep.c2_over_a = forms.c2() / bounds.lower;
    const double eps = 1e-8 * rep.c2_over_a;
    rep.passes = rep.c1_over_b - eps <= constants.lower && constants.upper <= rep.c2_over_a + eps;
    return rep;
}

} // namespace gframekit
