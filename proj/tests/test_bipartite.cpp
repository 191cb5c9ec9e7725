#include <gtest/gtest.h>

#include <cmath>
#include <complex>

#include "realign/bipartite.hpp"
#include "support/random_states.hpp"

using namespace realignment;
using realignment::testing::Rng;

namespace {

// Independent block-vec oracle: extract block Z_ik, flatten row-major,
// stack rows in block-lexicographic order.
ComplexMatrix realign_oracle(const ComplexMatrix& rho, std::size_t m, std::size_t n) {
    ComplexMatrix out(m * m, n * n);
    for (std::size_t i = 0; i < m; ++i)
        for (std::size_t k = 0; k < m; ++k) {
            ComplexMatrix block(n, n);
            for (std::size_t j = 0; j < n; ++j)
                for (std::size_t l = 0; l < n; ++l) block(j, l) = rho(i * n + j, k * n + l);
            const ComplexMatrix v = vec_row(block);
            for (std::size_t c = 0; c < n * n; ++c) out(i * m + k, c) = v(0, c);
        }
    return out;
}

} // namespace

TEST(VecRowTest, Examples) {
    ComplexMatrix x(2, 2, {{1, 0}, {2, 0}, {3, 0}, {4, 0}});
    ComplexMatrix v = vec_row(x);
    ASSERT_EQ(v.rows(), 1u);
    ASSERT_EQ(v.cols(), 4u);
    for (std::size_t c = 0; c < 4; ++c) EXPECT_EQ(v(0, c).real(), static_cast<double>(c + 1));

    ComplexMatrix row(1, 3, {{5, 0}, {6, 0}, {7, 0}});
    EXPECT_EQ(ComplexMatrix::max_abs_diff(vec_row(row), row), 0.0);

    ComplexMatrix id = ComplexMatrix::identity(2);
    ComplexMatrix vid = vec_row(id);
    EXPECT_EQ(vid(0, 0).real(), 1.0);
    EXPECT_EQ(vid(0, 1).real(), 0.0);
    EXPECT_EQ(vid(0, 2).real(), 0.0);
    EXPECT_EQ(vid(0, 3).real(), 1.0);
}

TEST(RealignTest, PrintedTwoQubitLayout) {
    // generic Hermitian 2x2-blocked rho against the printed realigned layout:
    // rows (r11 r12 r12* r22), (r13 r14 r23 r24), (r13* r23* r14* r24*), (r33 r34 r34* r44)
    Rng rng(3);
    ComplexMatrix rho = realignment::testing::random_density_matrix(4, rng);
    DensityMatrix state = DensityMatrix::validate(rho, DimensionSignature::bipartite(2, 2));
    const ComplexMatrix R = realign(state).mat;

    const auto c = [&](std::size_t r, std::size_t col) { return rho(r, col); };
    const std::complex<double> expected[4][4] = {
        {c(0, 0), c(0, 1), std::conj(c(0, 1)), c(1, 1)},
        {c(0, 2), c(0, 3), c(1, 2), c(1, 3)},
        {std::conj(c(0, 2)), std::conj(c(1, 2)), std::conj(c(0, 3)), std::conj(c(1, 3))},
        {c(2, 2), c(2, 3), std::conj(c(2, 3)), c(3, 3)},
    };
    for (std::size_t r = 0; r < 4; ++r)
        for (std::size_t col = 0; col < 4; ++col)
            EXPECT_LT(std::abs(R(r, col) - expected[r][col]), 1e-14) << r << "," << col;
}

TEST(RealignTest, BellGivesScaledIdentity) {
    const RealignedMatrix r = realign(max_entangled(2));
    EXPECT_LE(ComplexMatrix::max_abs_diff(r.mat, ComplexMatrix::identity(4) * 0.5), 1e-15);
    ASSERT_EQ(r.singulars.values.size(), 4u);
    for (double s : r.singulars.values) EXPECT_NEAR(s, 0.5, 1e-12);
    EXPECT_NEAR(r.trace_norm(), 2.0, 1e-12);
    EXPECT_NEAR(r.frobenius_norm(), 1.0, 1e-12);
}

TEST(RealignTest, BasisProjectorSingleEntry) {
    const RealignedMatrix r = realign(product_basis_state(0, 0, 2));
    EXPECT_NEAR(r.mat(0, 0).real(), 1.0, 1e-15);
    double sum = 0.0;
    for (const auto& z : r.mat.entries()) sum += std::abs(z);
    EXPECT_NEAR(sum, 1.0, 1e-15);
    EXPECT_EQ(numerical_rank(r.mat, 1e-10), 1);
}

TEST(RealignTest, MatchesBlockOracleOnRandomStates) {
    Rng rng(41);
    for (auto [m, n] : {std::pair<std::size_t, std::size_t>{2, 2}, {2, 3}, {3, 2}, {3, 3}}) {
        for (int i = 0; i < 20; ++i) {
            DensityMatrix rho = realignment::testing::random_state(DimensionSignature::bipartite(m, n), rng);
            const ComplexMatrix oracle = realign_oracle(rho.matrix(), m, n);
            EXPECT_EQ(ComplexMatrix::max_abs_diff(realign(rho).mat, oracle), 0.0);
        }
    }
}

TEST(RealignTest, CachedSingularsMatch) {
    Rng rng(42);
    DensityMatrix rho = realignment::testing::random_state(DimensionSignature::bipartite(3, 2), rng);
    const RealignedMatrix r = realign(rho);
    const Spectrum direct = singular_values(r.mat);
    ASSERT_EQ(r.singulars.values.size(), direct.values.size());
    for (std::size_t i = 0; i < direct.values.size(); ++i)
        EXPECT_NEAR(r.singulars.values[i], direct.values[i], 1e-12);
}

TEST(PartialTransposeTest, ProductStateFactorizes) {
    Rng rng(43);
    ComplexMatrix a = realignment::testing::random_density_matrix(2, rng);
    ComplexMatrix b = realignment::testing::random_density_matrix(3, rng);
    DensityMatrix rho =
        DensityMatrix::validate(kron(a, b), DimensionSignature::bipartite(2, 3));
    const ComplexMatrix ptB = partial_transpose(rho, Subsystem::B);
    EXPECT_LE(ComplexMatrix::max_abs_diff(ptB, kron(a, b.transpose())), 1e-15);
    const ComplexMatrix ptA = partial_transpose(rho, Subsystem::A);
    EXPECT_LE(ComplexMatrix::max_abs_diff(ptA, kron(a.transpose(), b)), 1e-15);
}

TEST(PartialTransposeTest, BellSpectrumAndInvolution) {
    DensityMatrix bell = max_entangled(2);
    const ComplexMatrix pt = partial_transpose(bell, Subsystem::B);
    const Spectrum s = hermitian_spectrum(pt);
    EXPECT_NEAR(s.values[0], -0.5, 1e-12);
    EXPECT_NEAR(s.values[1], 0.5, 1e-12);
    EXPECT_NEAR(s.values[2], 0.5, 1e-12);
    EXPECT_NEAR(s.values[3], 0.5, 1e-12);
    // involution and trace preservation
    const ComplexMatrix back = partial_transpose_raw(pt, 2, 2, Subsystem::B);
    EXPECT_EQ(ComplexMatrix::max_abs_diff(back, bell.matrix()), 0.0);
    EXPECT_NEAR(pt.trace().real(), 1.0, 1e-14);
}

TEST(SwapOperatorTest, QubitMatrixAndProperties) {
    const SwapOperator p2 = swap_operator(2);
    ComplexMatrix expected(4, 4);
    expected(0, 0) = expected(3, 3) = 1.0;
    expected(1, 2) = expected(2, 1) = 1.0;
    EXPECT_EQ(ComplexMatrix::max_abs_diff(p2.mat, expected), 0.0);

    const ComplexMatrix pt2 = swap_pt(2);
    ComplexMatrix expected_pt(4, 4);
    expected_pt(0, 0) = expected_pt(0, 3) = expected_pt(3, 0) = expected_pt(3, 3) = 1.0;
    EXPECT_EQ(ComplexMatrix::max_abs_diff(pt2, expected_pt), 0.0);

    for (std::size_t d : {2u, 3u, 4u}) {
        const ComplexMatrix p = swap_operator(d).mat;
        const ComplexMatrix pt = swap_pt(d);
        EXPECT_EQ(ComplexMatrix::max_abs_diff(p * p, ComplexMatrix::identity(d * d)), 0.0);
        EXPECT_EQ(p.trace().real(), static_cast<double>(d));
        EXPECT_EQ(pt.trace().real(), static_cast<double>(d));
        EXPECT_EQ(ComplexMatrix::max_abs_diff(p * pt, pt), 0.0);
        // P^{T_B} = d |Phi+><Phi+|
        EXPECT_LE(ComplexMatrix::max_abs_diff(
                      pt, max_entangled(d).matrix() * static_cast<double>(d)),
                  1e-14);
    }
    EXPECT_THROW(swap_operator(1), DimensionError);
    EXPECT_THROW(swap_pt(0), DimensionError);
}

TEST(RealignViaSwapTest, FactorizationIdentity) {
    Rng rng(44);
    for (std::size_t d : {2u, 3u}) {
        for (int i = 0; i < 50; ++i) {
            DensityMatrix rho =
                realignment::testing::random_state(DimensionSignature::bipartite(d, d), rng);
            EXPECT_LE(ComplexMatrix::max_abs_diff(realign_via_swap(rho).mat, realign(rho).mat),
                      1e-12);
        }
    }
}

TEST(RealignViaSwapTest, MaxMixedBothPaths) {
    DensityMatrix mm = max_mixed(DimensionSignature::bipartite(2, 2));
    EXPECT_LE(ComplexMatrix::max_abs_diff(realign_via_swap(mm).mat, realign(mm).mat), 1e-15);
    // realign(I/4) = P^T pattern / 4 = swap_pt / 4 here
    EXPECT_LE(ComplexMatrix::max_abs_diff(realign(mm).mat, swap_pt(2) * 0.25), 1e-15);
}

TEST(RealignViaSwapTest, RejectsNonSquare) {
    Rng rng(45);
    DensityMatrix rho = realignment::testing::random_state(DimensionSignature::bipartite(2, 3), rng);
    EXPECT_THROW(realign_via_swap(rho), UnsupportedError);
}

TEST(FirstMomentTest, KnownValues) {
    EXPECT_NEAR(first_moment(max_entangled(2)), 2.0, 1e-12);
    EXPECT_NEAR(first_moment(max_mixed(DimensionSignature::bipartite(2, 2))), 0.5, 1e-14);
    EXPECT_NEAR(first_moment(product_basis_state(0, 0, 2)), 1.0, 1e-14);
    Rng rng(46);
    DensityMatrix rect = realignment::testing::random_state(DimensionSignature::bipartite(2, 3), rng);
    EXPECT_THROW(first_moment(rect), UnsupportedError);
}

TEST(FirstMomentTest, TraceIdentityOnRandomStates) {
    Rng rng(47);
    for (std::size_t d : {2u, 3u}) {
        const ComplexMatrix pt = swap_pt(d);
        for (int i = 0; i < 30; ++i) {
            DensityMatrix rho =
                realignment::testing::random_state(DimensionSignature::bipartite(d, d), rng);
            const double t1 = first_moment(rho);
            const double via_trace = realign(rho).mat.trace().real();
            const double via_op = (rho.matrix() * pt).trace().real();
            EXPECT_NEAR(t1, via_trace, 1e-12);
            EXPECT_NEAR(t1, via_op, 1e-12);
        }
    }
}

TEST(RealignPropertyTest, FrobeniusNormPreserved) {
    Rng rng(48);
    for (auto [m, n] : {std::pair<std::size_t, std::size_t>{2, 2}, {2, 3}, {3, 3}}) {
        for (int i = 0; i < 20; ++i) {
            DensityMatrix rho =
                realignment::testing::random_state(DimensionSignature::bipartite(m, n), rng);
            EXPECT_NEAR(realign(rho).frobenius_norm(), std::sqrt(rho.purity()), 1e-12);
        }
    }
}

TEST(RealignPropertyTest, PtNormLowerBound) {
    // ||rho^{T_B}||_1 >= Tr(rho P^{T_B}) / d^2
    Rng rng(49);
    for (std::size_t d : {2u, 3u}) {
        for (int i = 0; i < 25; ++i) {
            DensityMatrix rho =
                realignment::testing::random_state(DimensionSignature::bipartite(d, d), rng);
            const double lhs = trace_norm(partial_transpose(rho, Subsystem::B));
            const double rhs = first_moment(rho) / static_cast<double>(d * d);
            EXPECT_GE(lhs, rhs - 1e-10);
        }
    }
}

TEST(RealignPropertyTest, ProductStatesFactorizeTraceNorm) {
    // ||(rho_A (x) rho_B)^R||_1 = ||rho_A||_2 ||rho_B||_2 <= 1
    Rng rng(50);
    for (int i = 0; i < 25; ++i) {
        ComplexMatrix a = realignment::testing::random_density_matrix(2, rng);
        ComplexMatrix b = realignment::testing::random_density_matrix(3, rng);
        DensityMatrix rho =
            DensityMatrix::validate(kron(a, b), DimensionSignature::bipartite(2, 3));
        const double tn = realign(rho).trace_norm();
        EXPECT_NEAR(tn, frobenius_norm(a) * frobenius_norm(b), 1e-10);
        EXPECT_LE(tn, 1.0 + 1e-10);
    }
}

TEST(MomentsTest, KnownValues) {
    const MomentVector bell = moments(max_entangled(2), 2);
    EXPECT_NEAR(bell.T1(), 1.0, 1e-12);
    EXPECT_EQ(bell.k, 4);
    EXPECT_NEAR(bell.D_k, 1.0 / 256.0, 1e-14);
    EXPECT_NEAR(bell.D_k_root(), 0.25, 1e-12);
    ASSERT_TRUE(bell.t1.has_value());
    EXPECT_NEAR(*bell.t1, 2.0, 1e-12);
    EXPECT_NEAR(bell.T[1], 0.25, 1e-12); // T_2 = sum sigma^4

    const MomentVector basis = moments(product_basis_state(0, 0, 2), 1);
    EXPECT_NEAR(basis.T1(), 1.0, 1e-12);
    EXPECT_EQ(basis.k, 1);
    EXPECT_NEAR(basis.D_k, 1.0, 1e-12);

    const MomentVector mm = moments(max_mixed(DimensionSignature::bipartite(2, 2)), 1);
    EXPECT_NEAR(mm.T1(), 0.25, 1e-13);
    EXPECT_EQ(mm.k, 1); // single nonzero singular value 1/2

    EXPECT_THROW(moments(max_entangled(2), 0), ArgumentError);
}

TEST(MomentsTest, T1EqualsPurityAndRectangularHasNoT1) {
    Rng rng(51);
    for (auto [m, n] : {std::pair<std::size_t, std::size_t>{2, 2}, {2, 3}, {3, 3}}) {
        for (int i = 0; i < 15; ++i) {
            DensityMatrix rho =
                realignment::testing::random_state(DimensionSignature::bipartite(m, n), rng);
            const MomentVector mv = moments(rho, 1);
            // realignment permutes entries, so T1 = ||rho^R||_2^2 = Tr rho^2
            EXPECT_NEAR(mv.T1(), rho.purity(), 1e-12);
            EXPECT_EQ(mv.t1.has_value(), m == n);
        }
    }
}

TEST(MomentBracketsTest, CollapsedAndKnownCases) {
    const MomentVector bell = moments(max_entangled(2), 4);
    auto [lo2, hi2] = moment_brackets(bell, 0.5, 0.5, 2);
    EXPECT_NEAR(lo2, 0.25, 1e-12);
    EXPECT_NEAR(hi2, 0.25, 1e-12);
    EXPECT_GE(bell.T[1], lo2 - 1e-10);
    EXPECT_LE(bell.T[1], hi2 + 1e-10);

    auto [lo1, hi1] = moment_brackets(bell, 0.5, 0.5, 1);
    EXPECT_NEAR(lo1, bell.T1(), 1e-12);
    EXPECT_NEAR(hi1, bell.T1(), 1e-12);

    EXPECT_THROW(moment_brackets(bell, 0.6, 0.5, 2), ArgumentError);
    EXPECT_THROW(moment_brackets(bell, 0.1, 0.5, 0), ArgumentError);
}

TEST(MomentBracketsTest, RandomStatesWithinBrackets) {
    Rng rng(52);
    for (int i = 0; i < 40; ++i) {
        DensityMatrix rho = realignment::testing::random_state(DimensionSignature::bipartite(2, 2), rng);
        const MomentVector mv = moments(rho, 4);
        const RealignedMatrix r = realign(rho);
        const double smax = r.singulars.values.front();
        double smin = smax;
        for (double s : r.singulars.values)
            if (s > 1e-10 * smax) smin = s;
        for (int k_index : {2, 3, 4}) {
            auto [lo, hi] = moment_brackets(mv, smin, smax, k_index);
            const double tk = mv.T[static_cast<std::size_t>(k_index - 1)];
            EXPECT_GE(tk, lo - 1e-10);
            EXPECT_LE(tk, hi + 1e-10);
        }
    }
}
