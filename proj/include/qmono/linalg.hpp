#pragma once

#include <complex>
#include <cstdint>
#include <vector>

#include <Eigen/Dense>

#include "qmono/rng.hpp"

namespace qmono {

using Complex = std::complex<double>;
using Matrix = Eigen::MatrixXcd;
using Vector = Eigen::VectorXcd;
using RealVector = Eigen::VectorXd;

// Index convention used throughout: qubit 0 is the most significant bit of
// the computational-basis index, |q0 q1 ... q_{n-1}> <-> q0*2^{n-1} + ... .

/// Eigendecomposition of a Hermitian matrix, eigenvalues ascending,
/// eigenvectors in the matching columns.
struct EigenResult {
    RealVector values;
    Matrix vectors;
};

/// Eigendecomposition after symmetrizing (M + M^dagger)/2. Throws
/// DimensionError for non-square input, ValidationError when the input is not
/// Hermitian within tolerance, Error when the solver fails to converge.
EigenResult hermitian_eig(const Matrix& m);

/// Principal square root of a PSD matrix. Eigenvalues in [-psd_clamp, 0) are
/// clamped to zero; anything more negative throws ValidationError.
Matrix psd_sqrt(const Matrix& m);

/// Kronecker product.
Matrix kron(const Matrix& a, const Matrix& b);

/// Partial trace of `rho` over the subsystems not listed in `keep`. `dims`
/// gives per-subsystem dimensions, subsystem 0 being the most significant
/// factor; the result orders kept subsystems ascending.
Matrix partial_trace(const Matrix& rho, const std::vector<int>& dims,
                     const std::vector<int>& keep);

/// Haar-random pure state on n qubits: i.i.d. standard complex Gaussian
/// amplitudes, normalized. 1 <= n_qubits <= 6.
Vector haar_random_pure(int n_qubits, Rng& rng);
Vector haar_random_pure(int n_qubits, std::uint64_t seed);

} // namespace qmono
