// oracles.hpp: reference constructions for the test suites.
//
// Nothing here calls the core builders. Operators are assembled from
// explicit Kronecker products, the Liouvillian is tabulated column by column
// by applying the master equation to matrix units, steady states come from a
// rank-revealing dense kernel, and the amplitude equations are written out by
// hand.

#pragma once

#include "chiralpb/model.hpp"

#include <Eigen/Dense>

#include <array>
#include <complex>

namespace oracle {

using cplx = std::complex<double>;
using Mat = Eigen::MatrixXcd;

Mat annihilation(int levels);
Mat kron(const Mat& x, const Mat& y);

struct Modes {
    Mat a, m, b;
};
// (a, m, b) ordering, each truncated at n_max.
Modes three_modes(int n_max);

// Rotating-frame Hamiltonian typed in term by term.
Mat hamiltonian(const chiralpb::SystemParams& p, int n_max);

// L(X) = -i[H, X] + sum k (c X c^dag - {c^dag c, X}/2) applied to each
// matrix unit, column-stacked.
Mat liouvillian(const chiralpb::SystemParams& p, int n_max);

// Kernel of L via full-pivoting LU, scaled to unit trace. Expects a 1-d kernel.
Mat steady_state(const Mat& l, int side);

// Magnon-only problem (g = J = E = 0): coherent state with
// <m> = -i O / (i delta_m + kappa_m / 2).
double driven_magnon_occupation(const chiralpb::SystemParams& p);

// One-excitation matrix of the amplitude equations.
Eigen::Matrix3cd one_excitation_block(cplx dca, cplx dcb, cplx dm, double ga, double gb, double j);
// Two-excitation matrix in the order 110, 101, 011, 200, 020, 002.
Eigen::Matrix<cplx, 6, 6> two_excitation_block(cplx dca, cplx dcb, cplx dm, double ga, double gb, double j);

// c100..c002 (index 0 is c000 = 1) from the hand-written equations.
std::array<cplx, 10> amplitudes(const chiralpb::SystemParams& p);

} // namespace oracle
