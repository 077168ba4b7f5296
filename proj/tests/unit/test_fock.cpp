#include "chiralpb/density_matrix.hpp"
#include "chiralpb/errors.hpp"
#include "chiralpb/fock.hpp"

#include "oracles.hpp"

#include <gtest/gtest.h>

#include <cmath>

using namespace chiralpb;

TEST(FockSpace, RejectsModesWithFewerThanTwoLevels)
{
    EXPECT_THROW(FockSpace({3, 1, 3}), InvalidDimensionError);
    EXPECT_THROW(FockSpace(std::vector<std::size_t>{}), InvalidDimensionError);
    EXPECT_NO_THROW(FockSpace({2, 2}));
}

TEST(FockSpace, ThreeModeDimensionAndOrdering)
{
    const FockSpace s = FockSpace::three_mode(2);
    EXPECT_EQ(s.dimension(), 27u);
    EXPECT_EQ(s.mode_count(), 3u);
    EXPECT_EQ(s.index({0, 0, 0}), 0u);
    EXPECT_EQ(s.index({0, 0, 1}), 1u);
    EXPECT_EQ(s.index({0, 1, 0}), 3u);
    EXPECT_EQ(s.index({1, 0, 0}), 9u);
    EXPECT_EQ(s.index({2, 2, 2}), 26u);
}

TEST(FockSpace, IndexRoundTrip)
{
    const FockSpace s({2, 4, 3});
    for (std::size_t i = 0; i < s.dimension(); ++i) {
        EXPECT_EQ(s.index(s.occupations(i)), i);
    }
    EXPECT_THROW(s.index({2, 0, 0}), ShapeError);
    EXPECT_THROW(s.index({0, 0}), ShapeError);
    EXPECT_THROW(s.occupations(s.dimension()), ShapeError);
}

TEST(Operators, LadderEntries)
{
    const Matrix a = destroy(5).matrix();
    for (int k = 1; k < 5; ++k) {
        EXPECT_DOUBLE_EQ(a(k - 1, k).real(), std::sqrt(static_cast<double>(k)));
    }
    EXPECT_EQ((create(5).matrix() - a.adjoint()).norm(), 0.0);
}

TEST(Operators, CanonicalCommutatorBelowCutoff)
{
    const std::size_t n = 6;
    const Operator c = commutator(destroy(n), create(n));
    for (std::size_t k = 0; k + 1 < n; ++k) {
        const auto i = static_cast<Eigen::Index>(k);
        EXPECT_NEAR(std::abs(c.matrix()(i, i) - 1.0), 0.0, 1e-14);
    }
    // The truncation shows up only in the top level.
    const auto top = static_cast<Eigen::Index>(n - 1);
    EXPECT_NEAR(c.matrix()(top, top).real(), -static_cast<double>(n - 1), 1e-14);
}

TEST(Operators, EmbedMatchesKronecker)
{
    const FockSpace s = FockSpace::three_mode(2);
    const oracle::Modes ref = oracle::three_modes(2);
    const ModeOperators ops = ModeOperators::on(s);
    EXPECT_LT((ops.a.matrix() - ref.a).cwiseAbs().maxCoeff(), 1e-15);
    EXPECT_LT((ops.m.matrix() - ref.m).cwiseAbs().maxCoeff(), 1e-15);
    EXPECT_LT((ops.b.matrix() - ref.b).cwiseAbs().maxCoeff(), 1e-15);
    EXPECT_EQ(&ops[Mode::m], &ops.m);
}

TEST(Operators, DifferentModesCommute)
{
    const FockSpace s = FockSpace::three_mode(2);
    const ModeOperators ops = ModeOperators::on(s);
    EXPECT_LT(commutator(ops.a, ops.b.adjoint()).max_norm(), 1e-15);
    EXPECT_LT(commutator(ops.a, ops.m).max_norm(), 1e-15);
    EXPECT_LT(commutator(ops.m, ops.b.adjoint()).max_norm(), 1e-15);
}

TEST(Operators, NumberOperatorIsDiagonalOccupation)
{
    const FockSpace s = FockSpace::three_mode(2);
    const Operator n_m = number(Mode::m, s);
    for (std::size_t i = 0; i < s.dimension(); ++i) {
        const auto k = static_cast<Eigen::Index>(i);
        EXPECT_DOUBLE_EQ(n_m.matrix()(k, k).real(), static_cast<double>(s.occupations(i)[1]));
    }
    EXPECT_TRUE(n_m.is_hermitian(0.0));
}

TEST(Operators, SpaceAndShapeChecks)
{
    const FockSpace s2 = FockSpace::three_mode(2);
    const FockSpace s3 = FockSpace::three_mode(3);
    EXPECT_THROW(Operator(s2, Matrix::Zero(3, 3)), ShapeError);
    EXPECT_THROW(number(Mode::a, s2) + number(Mode::a, s3), ShapeError);
    EXPECT_THROW(embed(destroy(3), 5, s2), ShapeError);
    EXPECT_THROW(embed(destroy(4), Mode::a, s2), ShapeError);
    EXPECT_THROW(ModeOperators::on(FockSpace({3, 3})), ShapeError);
}

TEST(Operators, ExpectationOnProjector)
{
    const FockSpace s = FockSpace::three_mode(2);
    const DensityMatrix rho = DensityMatrix::projector(s, {2, 1, 0});
    EXPECT_DOUBLE_EQ(expectation(number(Mode::a, s), rho).real(), 2.0);
    EXPECT_DOUBLE_EQ(expectation(number(Mode::m, s), rho).real(), 1.0);
    EXPECT_DOUBLE_EQ(expectation(number(Mode::b, s), rho).real(), 0.0);
}
