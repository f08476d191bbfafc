// Builds a redundant g-frame, computes its canonical dual and Parseval
// transform, and prints the reconstruction residual.

#include <cstdio>

#include "gframekit/gframekit.hpp"

using namespace gframekit;

int main() {
    // Two overlapping coordinate selections of C^3.
    const GFrame f = from_partition_projections(3, {{1, 2}, {2, 3}});
    const FrameBounds b = optimal_bounds(f);
    std::printf("bounds: A = %.6f, B = %.6f\n", b.lower, b.upper);

    const DualPair pair = canonical_pair(f);
    const ComplexVector x{cplx(1.0, 0.5), cplx(-2.0, 0.0), cplx(0.0, 3.0)};
    const ComplexVector back = reconstruct(pair, x);
    std::printf("reconstruction residual: %.3e\n", norm(back - x));

    const GFrame parseval = tight_transform(f);
    const FrameBounds tb = optimal_bounds(parseval);
    std::printf("tight transform bounds: A = %.12f, B = %.12f\n", tb.lower, tb.upper);

    const ClassificationReport c = classify(f);
    std::printf("frame: %s, riesz: %s, exact: %s\n", c.is_frame ? "yes" : "no",
                c.is_riesz ? "yes" : "no", c.is_exact ? "yes" : "no");
    return 0;
}
