// operators.hpp — Composite-Hilbert-space operator algebra for multi-level emitters.
//
// Conventions used throughout the library:
//   * site 0 is the slowest-varying tensor index,
//   * local basis |g> = |0>, |e> = |1>, |f> = |2>,
//   * all rates and frequencies are angular (rad/s); cyclic units (Hz)
//     appear only at the config I/O boundary.

#pragma once

#include <Eigen/Dense>

#include <complex>
#include <vector>

namespace wqed {

using Complex = std::complex<double>;
using Matrix = Eigen::MatrixXcd;
using Vector = Eigen::VectorXcd;

inline constexpr double kTwoPi = 6.283185307179586476925286766559;
inline constexpr double kSpeedOfLight = 299792458.0;  // m/s

/// Product of local dimensions.
int total_dim(const std::vector<int>& dims);

/// Dense operator on a composite Hilbert space.
struct DenseOperator {
    std::vector<int> dims;
    Matrix mat;

    DenseOperator() = default;
    DenseOperator(std::vector<int> dims_, Matrix mat_);

    int dim() const { return static_cast<int>(mat.rows()); }
    DenseOperator adjoint() const { return {dims, mat.adjoint()}; }
};

DenseOperator operator*(const DenseOperator& a, const DenseOperator& b);
DenseOperator operator+(const DenseOperator& a, const DenseOperator& b);
DenseOperator operator-(const DenseOperator& a, const DenseOperator& b);
DenseOperator operator*(Complex scale, const DenseOperator& a);

/// Pure state on a composite Hilbert space.
struct Ket {
    std::vector<int> dims;
    Vector amps;

    Ket() = default;
    Ket(std::vector<int> dims_, Vector amps_);

    double norm() const { return amps.norm(); }
    Ket normalized() const;
};

/// Hermitian, unit-trace, positive-semidefinite state matrix.
struct DensityMatrix {
    std::vector<int> dims;
    Matrix mat;

    DensityMatrix() = default;
    DensityMatrix(std::vector<int> dims_, Matrix mat_);

    static DensityMatrix from_ket(const Ket& psi);
    static DensityMatrix maximally_mixed(const std::vector<int>& dims);

    int dim() const { return static_cast<int>(mat.rows()); }

    /// Throws std::runtime_error when Hermiticity, trace or the eigenvalue
    /// floor (min eigenvalue >= -tol) is violated.
    void validate(double tol = 1e-9) const;
};

DenseOperator identity(const std::vector<int>& dims);

/// Kronecker product; dims are concatenated.
DenseOperator tensor(const DenseOperator& a, const DenseOperator& b);

/// Place a local operator at `site`, identity elsewhere.
DenseOperator embed(const Matrix& local, int site, const std::vector<int>& dims);

/// Truncated-ladder annihilation operator at `site` (<n-1|a|n> = sqrt(n)).
DenseOperator lowering(int site, const std::vector<int>& dims);
DenseOperator raising(int site, const std::vector<int>& dims);

/// Dephasing axis operator, diag(2n - 1) on the local ladder; equals the
/// Pauli sigma_z for a two-level site.
DenseOperator sigma_z_site(int site, const std::vector<int>& dims);

/// Tr(op * rho). Throws on dimension mismatch.
Complex expectation(const DensityMatrix& rho, const DenseOperator& op);
Complex expectation(const Ket& psi, const DenseOperator& op);

/// <target|rho|target>, in [0, 1] for valid inputs.
double state_fidelity(const DensityMatrix& rho, const Ket& target);

/// Tr(rho^2).
double purity(const DensityMatrix& rho);

/// Reduced state over the kept sites (ascending site order). Throws when
/// `keep` is empty or out of range.
DensityMatrix partial_trace(const DensityMatrix& rho, const std::vector<int>& keep);

/// Computational basis state |levels[0], levels[1], ...>.
Ket basis_ket(const std::vector<int>& dims, const std::vector<int>& levels);

}  // namespace wqed
