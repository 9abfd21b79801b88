#pragma once

#include <Eigen/Dense>

#include <complex>
#include <vector>

namespace qbell {

using Complex = std::complex<double>;
using ComplexMatrix = Eigen::MatrixXcd;
using StateVector = Eigen::VectorXcd;

// Global tolerance for algebraic identities. Everything in this project is a
// dense 4x4 or 16x16 problem, so double precision has orders of magnitude of
// headroom over this.
inline constexpr double kTol = 1e-12;

// Eigenvalues closer than this are merged into one degenerate eigenspace.
inline constexpr double kEigenvalueClusterTol = 1e-9;

double max_abs(const ComplexMatrix& m);
double max_abs_diff(const ComplexMatrix& a, const ComplexMatrix& b);

bool is_hermitian(const ComplexMatrix& m, double tol = kTol);
bool is_unitary(const ComplexMatrix& m, double tol = kTol);

// Kronecker product. `a` indexes the coarse blocks, so for a two-particle
// operator the first factor is Alice's.
ComplexMatrix tensor(const ComplexMatrix& a, const ComplexMatrix& b);

// One degenerate eigenspace of a Hermitian matrix.
struct EigenSpace {
    double eigenvalue;
    ComplexMatrix projector;  // Hermitian, idempotent; rank = multiplicity
};

// Spectral decomposition into degenerate eigenspaces, eigenvalues ascending.
// Projectors are Hermitian, idempotent, mutually orthogonal and sum to the
// identity. Throws std::invalid_argument if m is not Hermitian.
std::vector<EigenSpace> hermitian_eigensystem(
    const ComplexMatrix& m, double cluster_tol = kEigenvalueClusterTol);

// exp(-i t h) for Hermitian h, evaluated on the spectral decomposition.
// The result is unitary. Throws std::invalid_argument if h is not Hermitian.
ComplexMatrix exp_skew_hermitian(const ComplexMatrix& h, double t);

}  // namespace qbell
