#include <catch2/catch_amalgamated.hpp>

#include "support.hpp"

using namespace gft;

TEST_CASE("from_vector_frame anchors") {
    std::vector<ComplexVector> basis;
    for (std::size_t i = 0; i < 3; ++i) {
        ComplexVector e(3, cplx(0.0, 0.0));
        e[i] = 1.0;
        basis.push_back(e);
    }
    const ClassificationReport onb =
        classify(from_vector_frame(VectorFrame::from_vectors(3, basis)));
    REQUIRE(onb.is_orthonormal);

    const ClassificationReport mb = classify(mercedes_benz());
    REQUIRE(mb.is_tight);
    REQUIRE_THAT(mb.bounds.lower, Catch::Matchers::WithinAbs(1.5, 1e-10));
    REQUIRE_THAT(mb.bounds.upper, Catch::Matchers::WithinAbs(1.5, 1e-10));

    // a single vector in C^2: Bessel but not complete
    Rng rng(701);
    const GFrame single =
        from_vector_frame(VectorFrame::from_vectors(2, {rng.cnormal_vector(2)}));
    const ClassificationReport r = classify(single);
    REQUIRE(r.is_bessel);
    REQUIRE_FALSE(r.is_complete);
    REQUIRE_FALSE(r.is_frame);

    REQUIRE_THROWS_AS(from_vector_frame(VectorFrame::from_vectors(2, {})), ValidationError);
}

TEST_CASE("induced sequence round-trips one-row frames") {
    Rng rng(703);
    std::vector<ComplexVector> vs;
    for (int i = 0; i < 4; ++i) vs.push_back(rng.cnormal_vector(3));
    const GFrame f = from_vector_frame(VectorFrame::from_vectors(3, vs));
    const VectorFrame back = induced_sequence(f);
    const GFrame again = from_vector_frame(back);
    for (std::size_t i = 0; i < f.size(); ++i)
        REQUIRE(mat_dist(f.element(i).block, again.element(i).block) == 0.0);
}

TEST_CASE("from_partition_projections anchors") {
    const ClassificationReport part = classify(from_partition_projections(3, {{1, 2}, {3}}));
    REQUIRE(part.is_orthonormal);

    const ClassificationReport overlap = classify(overlap_partition_frame());
    REQUIRE(overlap.is_frame);
    REQUIRE_FALSE(overlap.is_riesz);
    REQUIRE_THAT(overlap.bounds.lower, Catch::Matchers::WithinAbs(1.0, 1e-12));
    REQUIRE_THAT(overlap.bounds.upper, Catch::Matchers::WithinAbs(2.0, 1e-12));

    const ClassificationReport uncovered = classify(from_partition_projections(2, {{1}, {1}}));
    REQUIRE_FALSE(uncovered.is_complete);

    REQUIRE_THROWS_AS(from_partition_projections(2, {{3}}), IndexOutOfRange);
    REQUIRE_THROWS_AS(from_partition_projections(2, {{0}}), IndexOutOfRange);
}

TEST_CASE("partition classification matches coverage and disjointness exhaustively") {
    // all families of up to 3 subsets of {1..n}, n <= 4 (3 keeps the subset
    // enumeration cheap while covering all the qualitative cases)
    for (std::size_t n = 1; n <= 4; ++n) {
        const std::size_t subsets = std::size_t{1} << n;
        for (std::size_t a = 0; a < subsets; ++a) {
            for (std::size_t b = 0; b < subsets; ++b) {
                std::vector<std::vector<std::size_t>> fam;
                auto expand = [&](std::size_t mask) {
                    std::vector<std::size_t> s;
                    for (std::size_t i = 0; i < n; ++i)
                        if (mask & (std::size_t{1} << i)) s.push_back(i + 1);
                    return s;
                };
                fam.push_back(expand(a));
                fam.push_back(expand(b));
                const std::size_t cover = a | b;
                const bool covers = cover + 1 == subsets;
                const bool disjoint = (a & b) == 0;

                const ClassificationReport r = classify(from_partition_projections(n, fam));
                REQUIRE(r.is_frame == covers);
                REQUIRE(r.is_orthonormal == (covers && disjoint));
            }
        }
    }
}

TEST_CASE("from_operator anchors") {
    REQUIRE(classify(from_operator(ComplexMatrix::identity(3))).is_orthonormal);

    ComplexMatrix d(2, 2);
    d(0, 0) = 1.0;
    d(1, 1) = 3.0;
    const FrameBounds b = optimal_bounds(from_operator(d));
    REQUIRE_THAT(b.lower, Catch::Matchers::WithinAbs(1.0, 1e-12));
    REQUIRE_THAT(b.upper, Catch::Matchers::WithinAbs(9.0, 1e-12));

    Rng rng(705);
    const GFrame f = from_operator(random_unitary(5, rng) * (2.0 * ComplexMatrix::identity(5)));
    REQUIRE(classify(f).is_riesz);

    ComplexMatrix singular(2, 2);
    singular(0, 0) = 1.0;
    REQUIRE_THROWS_AS(from_operator(singular), SingularOperator);
    REQUIRE_THROWS_AS(from_operator(ComplexMatrix(2, 3)), DimensionMismatch);
}

TEST_CASE("from_operator bounds are the squared extreme singular values") {
    Rng rng(707);
    const ComplexMatrix m = rng.cnormal_matrix(5, 5);
    const std::vector<double> sigma = singular_values(m);
    const FrameBounds b = optimal_bounds(from_operator(m));
    REQUIRE(rel_err(b.lower, sigma.front() * sigma.front()) <= 1e-9);
    REQUIRE(rel_err(b.upper, sigma.back() * sigma.back()) <= 1e-9);
}

TEST_CASE("grouped_riesz padded variant is exact but not riesz") {
    const GFrame f = grouped_riesz(2, 1, 0, 11, /*pad=*/1);
    REQUIRE(f.size() == 2);
    REQUIRE(f.dim_sum() == 4);
    for (const GFrameElement& e : f.elements()) {
        REQUIRE(e.block.rows() == 2);
        // second row is the zero pad
        for (std::size_t c = 0; c < 2; ++c) REQUIRE(std::abs(e.block(1, c)) == 0.0);
    }
    const ClassificationReport r = classify(f);
    REQUIRE(r.is_frame);
    REQUIRE(r.is_exact);
    REQUIRE_FALSE(r.is_riesz);
}

TEST_CASE("grouped_riesz partitions are riesz bases") {
    const GFrame f = grouped_riesz(6, 3, 0, 13);
    REQUIRE(f.size() == 2);
    const ClassificationReport r = classify(f);
    REQUIRE(r.is_riesz);
    REQUIRE(r.is_exact);
}

TEST_CASE("grouped_riesz cyclic overlap structure") {
    // even n: consecutive triples, each removal loses one private functional
    const ClassificationReport even = classify(grouped_riesz(10, 3, 1, 17));
    REQUIRE(even.is_frame);
    REQUIRE(even.is_exact);
    REQUIRE_FALSE(even.is_riesz);
    REQUIRE(even.dim_sum == 15);

    // odd n wraps the covering three deep; no removal hurts
    const ClassificationReport odd = classify(grouped_riesz(5, 3, 1, 17));
    REQUIRE(odd.is_frame);
    REQUIRE_FALSE(odd.is_exact);
    REQUIRE(odd.dim_sum == 15);

    REQUIRE_THROWS_AS(grouped_riesz(4, 0, 0, 1), InvalidGrouping);
    REQUIRE_THROWS_AS(grouped_riesz(4, 2, 2, 1), InvalidGrouping);
    REQUIRE_THROWS_AS(grouped_riesz(4, 5, 0, 1), InvalidGrouping);
}

TEST_CASE("discrete_gabor full lattice with a delta window is tight") {
    ComplexVector delta(4, cplx(0.0, 0.0));
    delta[0] = 1.0;
    const GFrame f = discrete_gabor(4, 1, 1, delta);
    REQUIRE(f.size() == 4);
    REQUIRE(f.dim_sum() == 16);
    const ClassificationReport r = classify(f);
    REQUIRE(r.is_tight);
    REQUIRE_THAT(r.bounds.lower, Catch::Matchers::WithinAbs(4.0, 1e-10));
    REQUIRE_THAT(r.bounds.upper, Catch::Matchers::WithinAbs(4.0, 1e-10));
}

TEST_CASE("oversampled random-window gabor matches its induced vector family") {
    Rng rng(709);
    ComplexVector window = rng.cnormal_vector(8);
    const GFrame f = discrete_gabor(8, 2, 2, window);
    REQUIRE(f.size() == 4);
    REQUIRE(f.dim_sum() == 16);

    const EquivalenceReport eq = equivalence_report(f);
    REQUIRE(eq.statuses_agree);
    REQUIRE(eq.operator_side.is_frame == eq.vector_side.is_frame);
    REQUIRE(eq.operator_side.is_frame);  // 16 atoms in C^8, generic window
}

TEST_CASE("undersampled gabor is incomplete") {
    Rng rng(711);
    const GFrame f = discrete_gabor(8, 4, 4, rng.cnormal_vector(8));
    REQUIRE(f.dim_sum() == 4);
    REQUIRE_FALSE(classify(f).is_complete);
}

TEST_CASE("discrete_gabor validates its lattice") {
    ComplexVector w(6, cplx(1.0, 0.0));
    REQUIRE_THROWS_AS(discrete_gabor(6, 4, 1, w), InvalidLattice);
    REQUIRE_THROWS_AS(discrete_gabor(6, 1, 4, w), InvalidLattice);
    REQUIRE_THROWS_AS(discrete_gabor(6, 0, 1, w), InvalidLattice);
    REQUIRE_THROWS_AS(discrete_gabor(4, 1, 1, w), InvalidLattice);  // window length
}

TEST_CASE("random_gframe hits its conditioning target and is deterministic") {
    const GFrame unit = random_gframe(6, {2, 2, 2}, 31, 1.0);
    REQUIRE(classify(unit).is_orthonormal);

    const GFrame cond = random_gframe(8, {3, 3, 3, 3}, 37, 10.0);
    const FrameBounds b = optimal_bounds(cond);
    REQUIRE(std::abs(b.upper / b.lower - 10.0) <= 1.0);  // within 10% of target

    const GFrame a = random_gframe(5, {2, 2, 2}, 7, 3.0);
    const GFrame c = random_gframe(5, {2, 2, 2}, 7, 3.0);
    for (std::size_t i = 0; i < a.size(); ++i)
        REQUIRE(a.element(i).block == c.element(i).block);

    const GFrame d = random_gframe(5, {2, 2, 2}, 8, 3.0);
    double diff = 0.0;
    for (std::size_t i = 0; i < a.size(); ++i)
        diff += mat_dist(a.element(i).block, d.element(i).block);
    REQUIRE(diff > 1e-3);

    REQUIRE_THROWS_AS(random_gframe(5, {1, 1}, 1, 1.0), InfeasibleSpec);
    REQUIRE_THROWS_AS(random_gframe(5, {3, 3}, 1, 0.5), InfeasibleSpec);
}

TEST_CASE("generator outputs satisfy the type invariants") {
    for (std::uint64_t seed = 1; seed <= 10; ++seed) {
        const GFrame f = sweep_frame(sweep_spec(seed));
        for (const GFrameElement& e : f.elements()) {
            REQUIRE(e.block.cols() == f.dim_u());
            REQUIRE(e.block.all_finite());
        }
    }
}
