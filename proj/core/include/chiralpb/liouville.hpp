// liouville.hpp: Lindblad superoperator, steady states and equal-time
// correlation functions.
//
// Density matrices are vectorized column by column: vec(rho)[i + j*d] = rho(i, j).
// The generator is
//   d rho/dt = -i[H, rho] + sum_x kappa_x (x rho x^dag - {x^dag x, rho}/2),
// i.e. -i[H, rho] - sum_x (kappa_x/2) D[x] rho with
//   D[x] rho = x^dag x rho - 2 x rho x^dag + rho x^dag x.

#pragma once

#include "chiralpb/density_matrix.hpp"
#include "chiralpb/fock.hpp"
#include "chiralpb/model.hpp"

#include <Eigen/Sparse>

#include <cstddef>
#include <span>

namespace chiralpb {

using SparseMatrix = Eigen::SparseMatrix<complex>;

struct Decay {
    Operator op;
    double rate;
};

class Superoperator {
public:
    Superoperator(FockSpace space, SparseMatrix matrix);

    const FockSpace& space() const noexcept { return space_; }
    const SparseMatrix& matrix() const noexcept { return matrix_; }
    // Side of the superoperator matrix, the squared Hilbert-space dimension.
    Eigen::Index dimension() const noexcept { return matrix_.rows(); }

    Matrix apply(const Matrix& rho) const;
    Matrix dense() const { return Matrix(matrix_); }
    double max_norm() const;
    // Induced 1-norm (largest absolute column sum); bounds the spectral radius.
    double one_norm() const;

private:
    FockSpace space_;
    SparseMatrix matrix_;
};

Vector vectorize(const Matrix& rho);
Matrix unvectorize(const Vector& v, Eigen::Index side);

// h must be Hermitian (InvalidHamiltonianError otherwise); rates must be > 0.
Superoperator build_liouvillian(const Operator& h, std::span<const Decay> decays);

// H_r of the model with decays kappa_a on a, kappa_b on b and kappa_m on m.
Superoperator build_model_liouvillian(const SystemParams& params, const FockSpace& space);

struct SteadyStateReport {
    // max |L vec(rho)| after Hermitizing and normalizing
    double residual{0.0};
    int refinement_steps{0};
};

// Unique steady state: one population row of L is replaced by the trace
// condition and the system is solved by sparse LU, followed by iterative
// refinement with extended-precision residuals. The result is Hermitized and
// unit-trace. Throws NonUniqueSteadyStateError when L has more than one null
// direction.
DensityMatrix steady_state(const Superoperator& l, SteadyStateReport* report = nullptr);

// max |L vec(rho)|
double steady_state_residual(const Superoperator& l, const DensityMatrix& rho);

// <x^dag x>
double occupation(const DensityMatrix& rho, Mode mode);

// <x^dag x^dag x x> / <x^dag x>^2; EmptyModeError if <x^dag x> < 1e-300.
double g2_zero(const DensityMatrix& rho, Mode mode);

// Classical fixed-step RK4 propagation of vec(rho). Throws StepSizeError when
// dt * ||L||_1 exceeds the stability bound.
DensityMatrix evolve(const DensityMatrix& rho0, const Superoperator& l, double t_final, double dt);

inline constexpr double kRk4StabilityBound = 2.5;

} // namespace chiralpb
