#pragma once

#include <string>
#include <vector>

#include "qmono/linalg.hpp"

namespace qmono {

/// Pure state of an n-qubit register. Amplitudes are ordered by basis index
/// with qubit 0 as the most significant bit.
struct PureState {
    int n_qubits = 0;
    Vector amplitudes;

    long dim() const { return 1L << n_qubits; }
};

/// Validates the amplitude count and unit norm, then returns the state.
PureState make_pure_state(int n_qubits, Vector amplitudes);

/// Mixed state over a subset of the register. `qubit_labels` are the original
/// register indices, ascending.
struct DensityMatrix {
    std::vector<int> qubit_labels;
    Matrix matrix;

    int n_qubits() const { return static_cast<int>(qubit_labels.size()); }
};

/// Validates Hermiticity, unit trace and positivity, then returns the matrix.
DensityMatrix make_density_matrix(std::vector<int> qubit_labels, Matrix m);

/// A|B split of the register. Construct via `bipartition` so side_b is always
/// the complement.
struct Bipartition {
    std::vector<int> side_a;
    std::vector<int> side_b;
};

/// Builds the bipartition with `side_a` against the rest of an n-qubit
/// register. side_a must be a non-empty proper subset.
Bipartition bipartition(std::vector<int> side_a, int n_qubits);

struct EnsembleMember {
    double p = 0.0;
    PureState state;
};

/// Pure-state decomposition {p_i, |psi_i>} of some density matrix.
struct Ensemble {
    std::vector<EnsembleMember> members;
};

/// Probability-weighted mixture sum_i p_i |psi_i><psi_i|.
Matrix mix(const Ensemble& ensemble);

/// |psi><psi| over the full register.
Matrix density_of(const PureState& psi);

/// Reduced density matrix over `keep` (re-sorted ascending), tracing out the
/// complement.
DensityMatrix reduce(const PureState& psi, const std::vector<int>& keep);

/// Reads a state file: { "n_qubits": n, "amplitudes": [[re, im], ...] }.
/// Norm must be within load tolerance of 1; states that are off by more than
/// machine precision are renormalized, so exactly-saved files round-trip
/// bit for bit.
PureState load_state(const std::string& path);

/// Writes the JSON schema above with round-trip-exact decimal floats.
void save_state(const PureState& psi, const std::string& path);

/// Built-in states: "ghz3", "w3", "ghz_minus_w".
PureState named_state(const std::string& name);

/// True when `name` is accepted by named_state.
bool is_named_state(const std::string& name);

} // namespace qmono
