#pragma once

#include <array>

#include "qmono/states.hpp"

namespace qmono {

enum class MeasureKind { concurrence, coa, eof, eoa_bound, tangle, residual };

/// Scalar entanglement quantity. `exact` is false when the value is only an
/// upper bound (CoA closed form beyond rank 2); `in_regime` is false when a
/// residual was evaluated at a diagnostic alpha outside its theorem range.
struct MeasureValue {
    double value = 0.0;
    MeasureKind kind = MeasureKind::concurrence;
    bool exact = true;
    bool in_regime = true;
};

/// Concurrence of a pure state across a bipartition,
/// C = sqrt(2 (1 - Tr rho_A^2)). Symmetric in the two sides.
MeasureValue concurrence_pure(const PureState& psi, const Bipartition& part);

/// Spin-flipped two-qubit matrix (sigma_y (x) sigma_y) rho^* (sigma_y (x) sigma_y).
Matrix spin_flip(const DensityMatrix& rho);

/// Square roots of the eigenvalues of rho rho~, descending. Computed as the
/// singular values of the symmetric matrix tau = E^T (sigma_y (x) sigma_y) E,
/// E holding the subnormalized eigenvectors of rho: structurally zero mu's
/// stay exactly zero this way, which the eigenvalue route cannot deliver.
std::array<double, 4> wootters_mus(const DensityMatrix& rho);

/// Wootters concurrence of a two-qubit mixed state,
/// C = max(0, mu1 - mu2 - mu3 - mu4).
MeasureValue concurrence_2q(const DensityMatrix& rho);

/// Concurrence of assistance, mu1 + mu2 + mu3 + mu4. Exact for rank <= 2;
/// flagged as an upper bound otherwise.
MeasureValue coa_2q(const DensityMatrix& rho);

/// CoA of a two-qubit reduction of a 3-qubit pure state through the tangle
/// identity C_a^2(rho_AB) = C^2(rho_AB) + tau_2(psi).
MeasureValue coa_via_tangle(const PureState& psi, int a, int partner);

/// H(x) = -x log2 x - (1-x) log2(1-x), with H(0) = H(1) = 0.
double binary_entropy(double x);

/// f(x) = H((1 + sqrt(1-x)) / 2); monotone on [0,1] with f(0)=0, f(1)=1.
double f_of(double x);

/// Entanglement of formation of a pure state: von Neumann entropy of either
/// reduction, in ebits.
MeasureValue eof_pure(const PureState& psi, const Bipartition& part);

/// EoF of a two-qubit mixed state, f(C^2).
MeasureValue eof_2q(const DensityMatrix& rho);

/// Three-tangle C^2_{A|BC} - C^2_{AB} - C^2_{AC} with focus qubit `a`.
MeasureValue three_tangle(const PureState& psi, int a);

/// Alpha-power concurrence residual C^a_{A|BC} - C^a_{AB} - C^a_{AC}.
/// Theorem regime alpha >= 2; other alphas are accepted as diagnostics and
/// tagged out-of-regime.
MeasureValue residual_concurrence(const PureState& psi, int a, double alpha);

/// Alpha-power EoF residual E^a_{A|BC} - E^a_{AB} - E^a_{AC}. Theorem regime
/// alpha >= sqrt(2). Unlike the concurrence residual this depends on which
/// qubit plays A.
MeasureValue residual_eof(const PureState& psi, int a, double alpha);

/// The two qubits accompanying focus `a` in a 3-qubit register, ascending.
std::array<int, 2> partners_of_focus(int a);

} // namespace qmono
