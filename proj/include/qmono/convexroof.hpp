#pragma once

#include <cstdint>
#include <vector>

#include "qmono/states.hpp"

namespace qmono {

enum class RoofDirection { minimize, maximize };
enum class RoofMeasure { concurrence, eof };

/// Execution policy for the parallel kernels. `serial` is the reference
/// implementation the tests compare against; both produce identical results.
enum class Execution { serial, parallel };

struct RoofConfig {
    int ensemble_size = 0;  // 0 -> rank^2
    int restarts = 32;
    int max_iters = 500;
    double step_tolerance = 1e-8;
    std::uint64_t seed = 0;
};

struct RoofResult {
    double value = 0.0;
    Ensemble ensemble;
    RoofDirection direction = RoofDirection::minimize;
    bool converged = false;
    int iterations = 0;
    /// Objective after each accepted sweep of the winning restart.
    std::vector<double> sweep_values;
};

/// Decomposition of `rho` induced by an isometry acting on its eigen-ensemble:
/// member k is sum_j mix(k, j) sqrt(lambda_j) |e_j>, with probability its
/// squared norm. `mix` must have rank(rho) orthonormal columns.
Ensemble ensemble_from_isometry(const DensityMatrix& rho, const Matrix& mix);

/// Ensemble average of the pure-state measure over an ensemble.
double ensemble_value(const Ensemble& ensemble, RoofMeasure measure);

/// Optimizes the average pure-state measure over all decompositions of a
/// two-qubit density matrix. The isometry is parametrized by planar rotations
/// with phases; the search is coordinate descent with a shrinking step, so
/// minimize yields an upper bound on the convex roof and maximize a lower
/// bound on the assistance quantity. Deterministic for a fixed cfg.seed.
RoofResult optimize_roof(const DensityMatrix& rho, RoofMeasure measure,
                         RoofDirection direction, const RoofConfig& cfg,
                         Execution exec = Execution::parallel);

/// Certified lower bound on the entanglement of assistance of a two-qubit
/// state: optimize_roof maximizing average EoF.
RoofResult eoa_lower(const DensityMatrix& rho, const RoofConfig& cfg,
                     Execution exec = Execution::parallel);

} // namespace qmono
