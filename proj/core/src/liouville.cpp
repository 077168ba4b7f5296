// liouville.cpp: sparse Lindblad generator and its steady state.

#include "chiralpb/liouville.hpp"

#include "chiralpb/errors.hpp"

#include <Eigen/OrderingMethods>
#include <Eigen/SparseLU>
#include <Eigen/SparseQR>
#if defined(CHIRALPB_HAVE_UMFPACK)
#include <Eigen/UmfPackSupport>
#endif

#include <algorithm>
#include <cmath>
#include <string>
#include <utility>
#include <vector>

namespace chiralpb {

namespace {

#if defined(__SIZEOF_FLOAT128__)
__extension__ typedef __float128 wide_real;
#else
typedef long double wide_real;
#endif

using Triplet = Eigen::Triplet<complex>;

// UMFPACK keeps the fill of the bordered Liouvillian about 8x cheaper to
// factor than Eigen's supernodal LU at n_max = 3.
#if defined(CHIRALPB_HAVE_UMFPACK)
using BorderedLU = Eigen::UmfPackLU<SparseMatrix>;
#else
using BorderedLU = Eigen::SparseLU<SparseMatrix, Eigen::COLAMDOrdering<int>>;
#endif

SparseMatrix to_sparse(const Matrix& m)
{
    SparseMatrix s = m.sparseView(complex(0.0), 0.0);
    s.makeCompressed();
    return s;
}

// Appends scale * kron(x, y) to the triplet list.
void add_kron(std::vector<Triplet>& out, const SparseMatrix& x, const SparseMatrix& y,
              complex scale)
{
    const Eigen::Index ry = y.rows();
    const Eigen::Index cy = y.cols();
    for (Eigen::Index xc = 0; xc < x.outerSize(); ++xc) {
        for (SparseMatrix::InnerIterator xi(x, xc); xi; ++xi) {
            const complex xv = scale * xi.value();
            for (Eigen::Index yc = 0; yc < y.outerSize(); ++yc) {
                for (SparseMatrix::InnerIterator yi(y, yc); yi; ++yi) {
                    out.emplace_back(xi.row() * ry + yi.row(), xc * cy + yc, xv * yi.value());
                }
            }
        }
    }
}

std::size_t estimate_null_dimension(const SparseMatrix& l)
{
    Eigen::SparseQR<SparseMatrix, Eigen::COLAMDOrdering<int>> qr;
    qr.compute(l);
    if (qr.info() != Eigen::Success) {
        return 0;
    }
    return static_cast<std::size_t>(l.cols() - qr.rank());
}

[[noreturn]] void throw_degenerate(const SparseMatrix& l, const std::string& why)
{
    throw NonUniqueSteadyStateError("steady_state: " + why, estimate_null_dimension(l));
}

struct WideVector {
    std::vector<wide_real> re;
    std::vector<wide_real> im;
};

// r = b - A x with x and the accumulation held in extended precision.
Vector wide_residual(const SparseMatrix& a, const Vector& b, const WideVector& x)
{
    const auto n = static_cast<std::size_t>(a.rows());
    std::vector<wide_real> rr(n), ri(n);
    for (std::size_t i = 0; i < n; ++i) {
        rr[i] = b[static_cast<Eigen::Index>(i)].real();
        ri[i] = b[static_cast<Eigen::Index>(i)].imag();
    }
    for (Eigen::Index c = 0; c < a.outerSize(); ++c) {
        const wide_real xr = x.re[static_cast<std::size_t>(c)];
        const wide_real xi = x.im[static_cast<std::size_t>(c)];
        for (SparseMatrix::InnerIterator it(a, c); it; ++it) {
            const wide_real ar = it.value().real();
            const wide_real ai = it.value().imag();
            const auto row = static_cast<std::size_t>(it.row());
            rr[row] -= ar * xr - ai * xi;
            ri[row] -= ar * xi + ai * xr;
        }
    }
    Vector r(static_cast<Eigen::Index>(n));
    for (std::size_t i = 0; i < n; ++i) {
        r[static_cast<Eigen::Index>(i)] =
            complex(static_cast<double>(rr[i]), static_cast<double>(ri[i]));
    }
    return r;
}

} // namespace

// -------------------------------------------------------------- Superoperator

Superoperator::Superoperator(FockSpace space, SparseMatrix matrix)
    : space_(std::move(space)), matrix_(std::move(matrix))
{
    const auto side = static_cast<Eigen::Index>(space_.dimension() * space_.dimension());
    if (matrix_.rows() != side || matrix_.cols() != side) {
        throw ShapeError("Superoperator: matrix side must be the squared space dimension");
    }
    matrix_.makeCompressed();
}

Matrix Superoperator::apply(const Matrix& rho) const
{
    const auto d = static_cast<Eigen::Index>(space_.dimension());
    if (rho.rows() != d || rho.cols() != d) {
        throw ShapeError("Superoperator::apply: density matrix has wrong shape");
    }
    return unvectorize(matrix_ * vectorize(rho), d);
}

double Superoperator::max_norm() const
{
    double m = 0.0;
    for (Eigen::Index k = 0; k < matrix_.nonZeros(); ++k) {
        m = std::max(m, std::abs(matrix_.valuePtr()[k]));
    }
    return m;
}

double Superoperator::one_norm() const
{
    double best = 0.0;
    for (Eigen::Index c = 0; c < matrix_.outerSize(); ++c) {
        double sum = 0.0;
        for (SparseMatrix::InnerIterator it(matrix_, c); it; ++it) {
            sum += std::abs(it.value());
        }
        best = std::max(best, sum);
    }
    return best;
}

Vector vectorize(const Matrix& rho)
{
    return Eigen::Map<const Vector>(rho.data(), rho.size());
}

Matrix unvectorize(const Vector& v, Eigen::Index side)
{
    if (v.size() != side * side) {
        throw ShapeError("unvectorize: vector length is not side^2");
    }
    return Eigen::Map<const Matrix>(v.data(), side, side);
}

// ------------------------------------------------------------------ builders

Superoperator build_liouvillian(const Operator& h, std::span<const Decay> decays)
{
    const double scale = std::max(1.0, h.max_norm());
    if (!h.is_hermitian(1e-12 * scale)) {
        throw InvalidHamiltonianError(
            "build_liouvillian: Hamiltonian is not Hermitian; dissipation must enter through "
            "the decay channels");
    }
    const FockSpace& space = h.space();
    const auto d = static_cast<Eigen::Index>(space.dimension());
    const SparseMatrix id = to_sparse(Matrix::Identity(d, d));
    const complex i_unit(0.0, 1.0);

    std::vector<Triplet> triplets;
    const SparseMatrix hs = to_sparse(h.matrix());
    add_kron(triplets, id, hs, -i_unit);
    add_kron(triplets, to_sparse(h.matrix().transpose()), id, i_unit);

    for (const Decay& decay : decays) {
        if (!(decay.rate > 0.0) || !std::isfinite(decay.rate)) {
            throw InvalidParameterError("build_liouvillian: decay rates must be positive");
        }
        if (!(decay.op.space() == space)) {
            throw ShapeError("build_liouvillian: decay operator acts on a different space");
        }
        const Matrix& c = decay.op.matrix();
        const Matrix cdc = c.adjoint() * c;
        add_kron(triplets, to_sparse(c.conjugate()), to_sparse(c), decay.rate);
        add_kron(triplets, id, to_sparse(cdc), -0.5 * decay.rate);
        add_kron(triplets, to_sparse(cdc.transpose()), id, -0.5 * decay.rate);
    }

    SparseMatrix l(d * d, d * d);
    l.setFromTriplets(triplets.begin(), triplets.end());
    l.prune(complex(0.0), 0.0);
    return Superoperator(space, std::move(l));
}

Superoperator build_model_liouvillian(const SystemParams& params, const FockSpace& space)
{
    params.validate();
    const ModeOperators ops = ModeOperators::on(space);
    const std::vector<Decay> decays{
        {ops.a, params.kappa_a},
        {ops.b, params.kappa_b},
        {ops.m, params.kappa_m},
    };
    return build_liouvillian(build_h_r(params, space), decays);
}

// -------------------------------------------------------------- steady state

DensityMatrix steady_state(const Superoperator& l, SteadyStateReport* report)
{
    const SparseMatrix& lm = l.matrix();
    const auto d = static_cast<Eigen::Index>(l.space().dimension());
    const Eigen::Index n = d * d;

    // The trace functional only involves population entries, so replacing a
    // population row keeps the system regular when the null space is 1-d.
    Eigen::Index replaced = 0;
    double best = -1.0;
    for (Eigen::Index k = 0; k < d; ++k) {
        const Eigen::Index p = k + k * d;
        const double mag = std::abs(lm.coeff(p, p));
        if (mag > best) {
            best = mag;
            replaced = p;
        }
    }

    std::vector<Triplet> triplets;
    triplets.reserve(static_cast<std::size_t>(lm.nonZeros() + d));
    for (Eigen::Index c = 0; c < lm.outerSize(); ++c) {
        for (SparseMatrix::InnerIterator it(lm, c); it; ++it) {
            if (it.row() != replaced) {
                triplets.emplace_back(it.row(), it.col(), it.value());
            }
        }
    }
    for (Eigen::Index k = 0; k < d; ++k) {
        triplets.emplace_back(replaced, k + k * d, complex(1.0));
    }
    SparseMatrix a(n, n);
    a.setFromTriplets(triplets.begin(), triplets.end());
    a.makeCompressed();

    Vector rhs = Vector::Zero(n);
    rhs[replaced] = 1.0;

    BorderedLU lu;
    lu.compute(a);
    if (lu.info() != Eigen::Success) {
        throw_degenerate(lm, "bordered Liouvillian is singular");
    }

    Vector x = lu.solve(rhs);
    if (lu.info() != Eigen::Success || !x.allFinite()) {
        throw_degenerate(lm, "linear solve failed");
    }

    WideVector wide{std::vector<wide_real>(static_cast<std::size_t>(n)),
                    std::vector<wide_real>(static_cast<std::size_t>(n))};
    for (Eigen::Index k = 0; k < n; ++k) {
        wide.re[static_cast<std::size_t>(k)] = x[k].real();
        wide.im[static_cast<std::size_t>(k)] = x[k].imag();
    }
    int steps = 0;
    constexpr int kMaxRefinement = 8;
    for (; steps < kMaxRefinement; ++steps) {
        const Vector r = wide_residual(a, rhs, wide);
        const Vector delta = lu.solve(r);
        if (!delta.allFinite()) {
            throw_degenerate(lm, "refinement diverged");
        }
        for (Eigen::Index k = 0; k < n; ++k) {
            wide.re[static_cast<std::size_t>(k)] += delta[k].real();
            wide.im[static_cast<std::size_t>(k)] += delta[k].imag();
        }
        const double dmax = delta.cwiseAbs().maxCoeff();
        if (dmax <= 1e-30 * std::max(1.0, x.cwiseAbs().maxCoeff())) {
            ++steps;
            break;
        }
    }
    for (Eigen::Index k = 0; k < n; ++k) {
        x[k] = complex(static_cast<double>(wide.re[static_cast<std::size_t>(k)]),
                       static_cast<double>(wide.im[static_cast<std::size_t>(k)]));
    }

    // A near-singular bordered system yields a solution that is far from a
    // density matrix; that is how a hidden second null direction shows up.
    const Matrix raw = unvectorize(x, d);
    const double scale = raw.cwiseAbs().maxCoeff();
    const double herm = (raw - raw.adjoint()).cwiseAbs().maxCoeff();
    if (!(scale <= 1.0 + 1e-6) || herm > 1e-8) {
        throw_degenerate(lm, "solution is not a physical density matrix");
    }

    DensityMatrix rho = DensityMatrix(l.space(), raw).hermitized();
    const double residual = steady_state_residual(l, rho);
    if (residual > 1e-10) {
        throw_degenerate(lm, "residual " + std::to_string(residual) + " exceeds 1e-10");
    }
    if (report != nullptr) {
        report->residual = residual;
        report->refinement_steps = steps;
    }
    return rho;
}

double steady_state_residual(const Superoperator& l, const DensityMatrix& rho)
{
    if (!(l.space() == rho.space())) {
        throw ShapeError("steady_state_residual: spaces differ");
    }
    const Vector r = l.matrix() * vectorize(rho.matrix());
    return r.size() == 0 ? 0.0 : r.cwiseAbs().maxCoeff();
}

// ------------------------------------------------------------- observables

double occupation(const DensityMatrix& rho, Mode mode)
{
    return expectation(number(mode, rho.space()), rho).real();
}

double g2_zero(const DensityMatrix& rho, Mode mode)
{
    const auto idx = static_cast<std::size_t>(mode);
    const Operator x = embed(destroy(rho.space().mode_dim(idx)), idx, rho.space());
    const Operator xd = x.adjoint();
    const double n1 = expectation(xd * x, rho).real();
    if (!(n1 >= 1e-300)) {
        throw EmptyModeError("g2_zero: mode " + std::string(to_string(mode)) +
                             " has no population");
    }
    const double n2 = expectation(xd * xd * x * x, rho).real();
    return std::max(0.0, n2) / (n1 * n1);
}

// ----------------------------------------------------------------- evolution

DensityMatrix evolve(const DensityMatrix& rho0, const Superoperator& l, double t_final, double dt)
{
    if (!(l.space() == rho0.space())) {
        throw ShapeError("evolve: spaces differ");
    }
    if (!(dt > 0.0) || !std::isfinite(dt)) {
        throw StepSizeError("evolve: dt must be positive");
    }
    if (!(t_final >= 0.0) || !std::isfinite(t_final)) {
        throw StepSizeError("evolve: t_final must be non-negative");
    }
    const double bound = dt * l.one_norm();
    if (bound > kRk4StabilityBound) {
        throw StepSizeError("evolve: dt * ||L||_1 = " + std::to_string(bound) +
                            " exceeds the RK4 stability bound " +
                            std::to_string(kRk4StabilityBound));
    }
    if (t_final == 0.0) {
        return rho0;
    }
    const auto steps = static_cast<long>(std::ceil(t_final / dt - 1e-9));
    const double h = t_final / static_cast<double>(steps);
    const SparseMatrix& lm = l.matrix();

    Vector v = vectorize(rho0.matrix());
    Vector k1, k2, k3, k4;
    for (long s = 0; s < steps; ++s) {
        k1 = lm * v;
        k2 = lm * (v + 0.5 * h * k1);
        k3 = lm * (v + 0.5 * h * k2);
        k4 = lm * (v + h * k3);
        v += (h / 6.0) * (k1 + 2.0 * k2 + 2.0 * k3 + k4);
    }
    const auto d = static_cast<Eigen::Index>(rho0.space().dimension());
    return DensityMatrix(rho0.space(), unvectorize(v, d));
}

} // namespace chiralpb
