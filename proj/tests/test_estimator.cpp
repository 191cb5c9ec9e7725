#include <gtest/gtest.h>

#include <cmath>

#include "realign/bipartite.hpp"
#include "realign/estimator.hpp"
#include "support/random_states.hpp"

using namespace realignment;
using realignment::testing::Rng;

TEST(CounterUniformTest, RangeAndDeterminism) {
    for (std::uint64_t i = 0; i < 1000; ++i) {
        const double u = counter_uniform(42, i);
        EXPECT_GE(u, 0.0);
        EXPECT_LT(u, 1.0);
        EXPECT_EQ(u, counter_uniform(42, i));
    }
    EXPECT_NE(counter_uniform(42, 0), counter_uniform(43, 0));
}

TEST(SampleT1Test, BellDegenerate) {
    for (std::int64_t shots : {1LL, 100LL, 10000LL}) {
        const ShotEstimate est = sample_t1(max_entangled(2), shots, 99);
        EXPECT_EQ(est.estimate, 2.0);
        EXPECT_EQ(est.stderr_, 0.0);
        EXPECT_EQ(est.shots, shots);
    }
}

TEST(SampleT1Test, OrthogonalBasisStateGivesZero) {
    const ShotEstimate est = sample_t1(product_basis_state(0, 1, 2), 1000, 5);
    EXPECT_EQ(est.estimate, 0.0);
    EXPECT_EQ(est.stderr_, 0.0);
}

TEST(SampleT1Test, MaxMixedConvergesToHalf) {
    const DensityMatrix mm = max_mixed(DimensionSignature::bipartite(2, 2));
    const ShotEstimate est = sample_t1(mm, 100000, 2024);
    EXPECT_GT(est.stderr_, 0.0);
    EXPECT_NEAR(est.estimate, 0.5, 5.0 * est.stderr_);
}

TEST(SampleT1Test, Deterministic) {
    const DensityMatrix mm = max_mixed(DimensionSignature::bipartite(2, 2));
    const ShotEstimate a = sample_t1(mm, 5000, 7);
    const ShotEstimate b = sample_t1(mm, 5000, 7);
    EXPECT_EQ(a.estimate, b.estimate);
    EXPECT_EQ(a.stderr_, b.stderr_);
    const ShotEstimate c = sample_t1(mm, 5000, 8);
    EXPECT_NE(a.estimate, c.estimate);
}

TEST(SampleT1Test, ConsistentWithExactMoment) {
    Rng rng(30);
    for (int i = 0; i < 20; ++i) {
        const DensityMatrix rho =
            realignment::testing::random_state(DimensionSignature::bipartite(2, 2), rng);
        const ShotEstimate est = sample_t1(rho, 100000, 1000 + static_cast<std::uint64_t>(i));
        const double exact = first_moment(rho);
        ASSERT_GT(est.stderr_, 0.0);
        EXPECT_NEAR(est.estimate, exact, 5.0 * est.stderr_);
    }
}

TEST(SampleT1Test, StderrScalesAsInverseSqrtShots) {
    const DensityMatrix mm = max_mixed(DimensionSignature::bipartite(2, 2));
    double scaled[3];
    const std::int64_t shot_counts[3] = {1000, 10000, 100000};
    for (int i = 0; i < 3; ++i) {
        const ShotEstimate est = sample_t1(mm, shot_counts[i], 11);
        scaled[i] = est.stderr_ * std::sqrt(static_cast<double>(shot_counts[i]));
    }
    for (int i = 1; i < 3; ++i) {
        EXPECT_LT(std::abs(scaled[i] - scaled[0]) / scaled[0], 0.2);
    }
}

TEST(SampleT1Test, Errors) {
    EXPECT_THROW(sample_t1(max_entangled(2), 0, 1), ArgumentError);
    Rng rng(31);
    const DensityMatrix rect =
        realignment::testing::random_state(DimensionSignature::bipartite(2, 3), rng);
    EXPECT_THROW(sample_t1(rect, 10, 1), UnsupportedError);
}
