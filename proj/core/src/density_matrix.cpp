#include "chiralpb/density_matrix.hpp"

#include "chiralpb/errors.hpp"

#include <Eigen/Eigenvalues>

#include <string>
#include <utility>

namespace chiralpb {

DensityMatrix::DensityMatrix(FockSpace space, Matrix matrix)
    : space_(std::move(space)), matrix_(std::move(matrix))
{
    const auto side = static_cast<Eigen::Index>(space_.dimension());
    if (matrix_.rows() != side || matrix_.cols() != side) {
        throw ShapeError("DensityMatrix: matrix is " + std::to_string(matrix_.rows()) + "x" +
                         std::to_string(matrix_.cols()) + " but the space has dimension " +
                         std::to_string(side));
    }
}

DensityMatrix DensityMatrix::projector(const FockSpace& space,
                                       std::span<const std::size_t> occupations)
{
    const auto d = static_cast<Eigen::Index>(space.dimension());
    Matrix m = Matrix::Zero(d, d);
    const auto k = static_cast<Eigen::Index>(space.index(occupations));
    m(k, k) = 1.0;
    return DensityMatrix(space, std::move(m));
}

DensityMatrix DensityMatrix::projector(const FockSpace& space,
                                       std::initializer_list<std::size_t> occupations)
{
    return projector(space, std::span<const std::size_t>(occupations.begin(), occupations.size()));
}

DensityMatrix DensityMatrix::vacuum(const FockSpace& space)
{
    std::vector<std::size_t> zeros(space.mode_count(), 0);
    return projector(space, zeros);
}

DensityMatrix DensityMatrix::pure(const FockSpace& space, const Vector& psi)
{
    if (psi.size() != static_cast<Eigen::Index>(space.dimension())) {
        throw ShapeError("DensityMatrix::pure: state vector has wrong length");
    }
    const double norm2 = psi.squaredNorm();
    if (norm2 == 0.0) {
        throw InvalidParameterError("DensityMatrix::pure: zero state vector");
    }
    return DensityMatrix(space, psi * psi.adjoint() / norm2);
}

complex DensityMatrix::trace() const { return matrix_.trace(); }

double DensityMatrix::hermiticity_error() const
{
    return (matrix_ - matrix_.adjoint()).cwiseAbs().maxCoeff();
}

double DensityMatrix::min_eigenvalue() const
{
    const Matrix h = 0.5 * (matrix_ + matrix_.adjoint());
    Eigen::SelfAdjointEigenSolver<Matrix> solver(h, Eigen::EigenvaluesOnly);
    return solver.eigenvalues().minCoeff();
}

DensityMatrix DensityMatrix::hermitized() const
{
    Matrix h = 0.5 * (matrix_ + matrix_.adjoint());
    const double tr = h.trace().real();
    if (tr == 0.0) {
        throw InvalidParameterError("DensityMatrix: cannot normalize a traceless matrix");
    }
    return DensityMatrix(space_, h / tr);
}

double trace_distance(const DensityMatrix& rho, const DensityMatrix& sigma)
{
    if (!(rho.space() == sigma.space())) {
        throw ShapeError("trace_distance: density matrices act on different spaces");
    }
    const Matrix diff = rho.matrix() - sigma.matrix();
    const Matrix h = 0.5 * (diff + diff.adjoint());
    Eigen::SelfAdjointEigenSolver<Matrix> solver(h, Eigen::EigenvaluesOnly);
    return 0.5 * solver.eigenvalues().cwiseAbs().sum();
}

} // namespace chiralpb
