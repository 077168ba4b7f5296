#include "chiralpb/density_matrix.hpp"
#include "chiralpb/errors.hpp"

#include <gtest/gtest.h>

using namespace chiralpb;

TEST(DensityMatrix, VacuumIsUnitTraceProjector)
{
    const FockSpace s = FockSpace::three_mode(2);
    const DensityMatrix v = DensityMatrix::vacuum(s);
    EXPECT_DOUBLE_EQ(v.trace().real(), 1.0);
    EXPECT_DOUBLE_EQ(v.matrix()(0, 0).real(), 1.0);
    EXPECT_DOUBLE_EQ(v.hermiticity_error(), 0.0);
    EXPECT_NEAR(v.min_eigenvalue(), 0.0, 1e-15);
}

TEST(DensityMatrix, PureStateIsNormalized)
{
    const FockSpace s = FockSpace::single(3);
    Vector psi(3);
    psi << complex(1.0, 1.0), 2.0, 0.0;
    const DensityMatrix rho = DensityMatrix::pure(s, psi);
    EXPECT_NEAR(rho.trace().real(), 1.0, 1e-15);
    EXPECT_NEAR((rho.matrix() * rho.matrix() - rho.matrix()).norm(), 0.0, 1e-15);
    EXPECT_THROW(DensityMatrix::pure(s, Vector::Zero(3)), InvalidParameterError);
    EXPECT_THROW(DensityMatrix::pure(s, Vector::Ones(2)), ShapeError);
}

TEST(DensityMatrix, HermitizedFixesSkewAndTrace)
{
    const FockSpace s = FockSpace::single(2);
    Matrix m(2, 2);
    m << 2.0, complex(0.0, 1.0), 0.0, 2.0;
    const DensityMatrix h = DensityMatrix(s, m).hermitized();
    EXPECT_NEAR(h.trace().real(), 1.0, 1e-15);
    EXPECT_NEAR(h.hermiticity_error(), 0.0, 1e-15);
}

TEST(DensityMatrix, TraceDistance)
{
    const FockSpace s = FockSpace::single(3);
    const DensityMatrix p0 = DensityMatrix::projector(s, {0});
    const DensityMatrix p1 = DensityMatrix::projector(s, {1});
    EXPECT_NEAR(trace_distance(p0, p0), 0.0, 1e-15);
    EXPECT_NEAR(trace_distance(p0, p1), 1.0, 1e-14);
    EXPECT_THROW(trace_distance(p0, DensityMatrix::vacuum(FockSpace::single(2))), ShapeError);
}

TEST(DensityMatrix, ShapeIsChecked)
{
    EXPECT_THROW(DensityMatrix(FockSpace::single(3), Matrix::Zero(2, 2)), ShapeError);
}
