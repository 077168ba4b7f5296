// density_matrix.hpp: dense density matrices over a FockSpace.

#pragma once

#include "chiralpb/fock.hpp"

#include <initializer_list>
#include <span>

namespace chiralpb {

class DensityMatrix {
public:
    // Only the shape is enforced here; physicality is reported by the
    // diagnostic accessors below.
    DensityMatrix(FockSpace space, Matrix matrix);

    static DensityMatrix projector(const FockSpace& space,
                                   std::span<const std::size_t> occupations);
    static DensityMatrix projector(const FockSpace& space,
                                   std::initializer_list<std::size_t> occupations);
    static DensityMatrix vacuum(const FockSpace& space);
    // |psi><psi| / <psi|psi>
    static DensityMatrix pure(const FockSpace& space, const Vector& psi);

    const FockSpace& space() const noexcept { return space_; }
    const Matrix& matrix() const noexcept { return matrix_; }

    complex trace() const;
    double hermiticity_error() const;
    double min_eigenvalue() const;

    // (rho + rho^dagger) / 2 scaled to unit trace.
    DensityMatrix hermitized() const;

private:
    FockSpace space_;
    Matrix matrix_;
};

// Half the trace norm of rho - sigma.
double trace_distance(const DensityMatrix& rho, const DensityMatrix& sigma);

} // namespace chiralpb
