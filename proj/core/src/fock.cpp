// fock.cpp: construction and lifting of truncated bosonic operators.

#include "chiralpb/fock.hpp"

#include "chiralpb/density_matrix.hpp"
#include "chiralpb/errors.hpp"

#include <cmath>
#include <string>
#include <utility>

namespace chiralpb {

namespace {

Matrix kron(const Matrix& x, const Matrix& y)
{
    Matrix out(x.rows() * y.rows(), x.cols() * y.cols());
    for (Eigen::Index i = 0; i < x.rows(); ++i) {
        for (Eigen::Index j = 0; j < x.cols(); ++j) {
            out.block(i * y.rows(), j * y.cols(), y.rows(), y.cols()) = x(i, j) * y;
        }
    }
    return out;
}

} // namespace

std::string_view to_string(Mode mode) noexcept
{
    switch (mode) {
    case Mode::a: return "a";
    case Mode::m: return "m";
    case Mode::b: return "b";
    }
    return "?";
}

// ----------------------------------------------------------------- FockSpace

FockSpace::FockSpace(std::vector<std::size_t> mode_dims) : dims_(std::move(mode_dims))
{
    if (dims_.empty()) {
        throw InvalidDimensionError("FockSpace: at least one mode is required");
    }
    for (std::size_t d : dims_) {
        if (d < 2) {
            throw InvalidDimensionError("FockSpace: every mode dimension must be >= 2, got " +
                                        std::to_string(d));
        }
        dimension_ *= d;
    }
}

FockSpace::FockSpace(std::initializer_list<std::size_t> mode_dims)
    : FockSpace(std::vector<std::size_t>(mode_dims))
{
}

FockSpace FockSpace::single(std::size_t n_levels) { return FockSpace({n_levels}); }

FockSpace FockSpace::three_mode(std::size_t n_max)
{
    if (n_max < 1) {
        throw InvalidDimensionError("FockSpace: truncation n_max must be >= 1");
    }
    return FockSpace({n_max + 1, n_max + 1, n_max + 1});
}

std::size_t FockSpace::mode_dim(std::size_t mode_index) const
{
    if (mode_index >= dims_.size()) {
        throw ShapeError("FockSpace: mode index " + std::to_string(mode_index) +
                         " out of range");
    }
    return dims_[mode_index];
}

std::size_t FockSpace::index(std::span<const std::size_t> occupations) const
{
    if (occupations.size() != dims_.size()) {
        throw ShapeError("FockSpace: occupation tuple has wrong length");
    }
    std::size_t idx = 0;
    for (std::size_t k = 0; k < dims_.size(); ++k) {
        if (occupations[k] >= dims_[k]) {
            throw ShapeError("FockSpace: occupation exceeds truncation in mode " +
                             std::to_string(k));
        }
        idx = idx * dims_[k] + occupations[k];
    }
    return idx;
}

std::size_t FockSpace::index(std::initializer_list<std::size_t> occupations) const
{
    return index(std::span<const std::size_t>(occupations.begin(), occupations.size()));
}

std::vector<std::size_t> FockSpace::occupations(std::size_t index) const
{
    if (index >= dimension_) {
        throw ShapeError("FockSpace: basis index out of range");
    }
    std::vector<std::size_t> occ(dims_.size());
    for (std::size_t k = dims_.size(); k-- > 0;) {
        occ[k] = index % dims_[k];
        index /= dims_[k];
    }
    return occ;
}

// ------------------------------------------------------------------ Operator

Operator::Operator(FockSpace space, Matrix matrix)
    : space_(std::move(space)), matrix_(std::move(matrix))
{
    const auto side = static_cast<Eigen::Index>(space_.dimension());
    if (matrix_.rows() != side || matrix_.cols() != side) {
        throw ShapeError("Operator: matrix is " + std::to_string(matrix_.rows()) + "x" +
                         std::to_string(matrix_.cols()) + " but the space has dimension " +
                         std::to_string(side));
    }
}

Operator Operator::adjoint() const { return Operator(space_, matrix_.adjoint()); }

bool Operator::is_hermitian(double tolerance) const
{
    return (matrix_ - matrix_.adjoint()).cwiseAbs().maxCoeff() <= tolerance;
}

double Operator::max_norm() const
{
    return matrix_.size() == 0 ? 0.0 : matrix_.cwiseAbs().maxCoeff();
}

void Operator::require_same_space(const Operator& rhs, const char* what) const
{
    if (!(space_ == rhs.space_)) {
        throw ShapeError(std::string("Operator ") + what + ": operands act on different spaces");
    }
}

Operator& Operator::operator+=(const Operator& rhs)
{
    require_same_space(rhs, "+");
    matrix_ += rhs.matrix_;
    return *this;
}

Operator& Operator::operator-=(const Operator& rhs)
{
    require_same_space(rhs, "-");
    matrix_ -= rhs.matrix_;
    return *this;
}

Operator& Operator::operator*=(complex scale)
{
    matrix_ *= scale;
    return *this;
}

Operator operator*(const Operator& lhs, const Operator& rhs)
{
    lhs.require_same_space(rhs, "*");
    return Operator(lhs.space_, lhs.matrix_ * rhs.matrix_);
}

// ------------------------------------------------------------- constructors

Operator destroy(std::size_t n_levels)
{
    if (n_levels < 2) {
        throw InvalidDimensionError("destroy: n_levels must be >= 2, got " +
                                    std::to_string(n_levels));
    }
    const auto d = static_cast<Eigen::Index>(n_levels);
    Matrix m = Matrix::Zero(d, d);
    for (Eigen::Index n = 1; n < d; ++n) {
        m(n - 1, n) = std::sqrt(static_cast<double>(n));
    }
    return Operator(FockSpace::single(n_levels), std::move(m));
}

Operator create(std::size_t n_levels) { return destroy(n_levels).adjoint(); }

Operator identity(const FockSpace& space)
{
    const auto d = static_cast<Eigen::Index>(space.dimension());
    return Operator(space, Matrix::Identity(d, d));
}

Operator embed(const Operator& op, std::size_t mode_index, const FockSpace& space)
{
    const std::size_t slot_dim = space.mode_dim(mode_index);
    if (op.space().mode_count() != 1 || op.space().dimension() != slot_dim) {
        throw ShapeError("embed: operator dimension " + std::to_string(op.space().dimension()) +
                         " does not match mode " + std::to_string(mode_index) +
                         " of dimension " + std::to_string(slot_dim));
    }
    Matrix lifted = Matrix::Identity(1, 1);
    for (std::size_t k = 0; k < space.mode_count(); ++k) {
        const auto d = static_cast<Eigen::Index>(space.mode_dims()[k]);
        lifted = kron(lifted, k == mode_index ? op.matrix() : Matrix::Identity(d, d));
    }
    return Operator(space, std::move(lifted));
}

Operator embed(const Operator& op, Mode mode, const FockSpace& space)
{
    return embed(op, static_cast<std::size_t>(mode), space);
}

ModeOperators ModeOperators::on(const FockSpace& space)
{
    if (space.mode_count() != 3) {
        throw ShapeError("ModeOperators: expected a three-mode (a, m, b) space");
    }
    auto lift = [&](Mode mode) {
        return embed(destroy(space.mode_dim(static_cast<std::size_t>(mode))), mode, space);
    };
    return ModeOperators{lift(Mode::a), lift(Mode::m), lift(Mode::b)};
}

const Operator& ModeOperators::operator[](Mode mode) const noexcept
{
    switch (mode) {
    case Mode::a: return a;
    case Mode::m: return m;
    case Mode::b: return b;
    }
    return a;
}

Operator number(Mode mode, const FockSpace& space)
{
    const auto idx = static_cast<std::size_t>(mode);
    const Operator lowered = embed(destroy(space.mode_dim(idx)), idx, space);
    return lowered.adjoint() * lowered;
}

Operator commutator(const Operator& x, const Operator& y) { return x * y - y * x; }

complex expectation(const Operator& observable, const DensityMatrix& rho)
{
    if (!(observable.space() == rho.space())) {
        throw ShapeError("expectation: observable and density matrix act on different spaces");
    }
    // Tr(A rho) = sum_ij A_ij rho_ji
    return (observable.matrix().cwiseProduct(rho.matrix().transpose())).sum();
}

} // namespace chiralpb
