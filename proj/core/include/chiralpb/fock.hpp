// fock.hpp: truncated bosonic mode operators on a multimode Fock space.
//
// The three-mode space used throughout the library is ordered (a, m, b):
// CCW cavity mode, magnon, CW cavity mode. Basis states |n_a, n_m, n_b> are
// enumerated row-major with the vacuum first, which is also the Kronecker
// order a (x) m (x) b.

#pragma once

#include <Eigen/Dense>

#include <array>
#include <complex>
#include <cstddef>
#include <initializer_list>
#include <span>
#include <string_view>
#include <vector>

namespace chiralpb {

using complex = std::complex<double>;
using Matrix = Eigen::MatrixXcd;
using Vector = Eigen::VectorXcd;

enum class Mode : std::size_t { a = 0, m = 1, b = 2 };

std::string_view to_string(Mode mode) noexcept;

class FockSpace {
public:
    // Every entry must be >= 2.
    explicit FockSpace(std::vector<std::size_t> mode_dims);
    FockSpace(std::initializer_list<std::size_t> mode_dims);

    static FockSpace single(std::size_t n_levels);
    // Modes (a, m, b), each truncated at n_max photons/magnons.
    static FockSpace three_mode(std::size_t n_max);

    std::span<const std::size_t> mode_dims() const noexcept { return dims_; }
    std::size_t mode_count() const noexcept { return dims_.size(); }
    std::size_t mode_dim(std::size_t mode_index) const;
    std::size_t dimension() const noexcept { return dimension_; }

    // Row-major basis index of an occupation tuple.
    std::size_t index(std::span<const std::size_t> occupations) const;
    std::size_t index(std::initializer_list<std::size_t> occupations) const;
    std::vector<std::size_t> occupations(std::size_t index) const;

    bool operator==(const FockSpace&) const = default;

private:
    std::vector<std::size_t> dims_;
    std::size_t dimension_{1};
};

class DensityMatrix;

// Dense square matrix tagged with the Fock space it acts on.
class Operator {
public:
    Operator(FockSpace space, Matrix matrix);

    const FockSpace& space() const noexcept { return space_; }
    const Matrix& matrix() const noexcept { return matrix_; }
    Eigen::Index dimension() const noexcept { return matrix_.rows(); }

    Operator adjoint() const;
    bool is_hermitian(double tolerance) const;
    // Largest absolute entry.
    double max_norm() const;

    Operator& operator+=(const Operator& rhs);
    Operator& operator-=(const Operator& rhs);
    Operator& operator*=(complex scale);

    friend Operator operator+(Operator lhs, const Operator& rhs) { return lhs += rhs; }
    friend Operator operator-(Operator lhs, const Operator& rhs) { return lhs -= rhs; }
    friend Operator operator*(Operator op, complex scale) { return op *= scale; }
    friend Operator operator*(complex scale, Operator op) { return op *= scale; }
    friend Operator operator*(const Operator& lhs, const Operator& rhs);

private:
    void require_same_space(const Operator& rhs, const char* what) const;

    FockSpace space_;
    Matrix matrix_;
};

// Single-mode lowering operator: sqrt(n) on the first superdiagonal.
Operator destroy(std::size_t n_levels);
Operator create(std::size_t n_levels);
Operator identity(const FockSpace& space);

// I (x) ... (x) op (x) ... (x) I with op in slot mode_index.
Operator embed(const Operator& op, std::size_t mode_index, const FockSpace& space);
Operator embed(const Operator& op, Mode mode, const FockSpace& space);

// Lowering operators of a three-mode (a, m, b) space, lifted to the full space.
struct ModeOperators {
    Operator a;
    Operator m;
    Operator b;

    static ModeOperators on(const FockSpace& space);
    const Operator& operator[](Mode mode) const noexcept;
};

Operator number(Mode mode, const FockSpace& space);

// Commutator [x, y].
Operator commutator(const Operator& x, const Operator& y);

// Tr(observable * rho).
complex expectation(const Operator& observable, const DensityMatrix& rho);

} // namespace chiralpb
