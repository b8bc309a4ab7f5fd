#include "qmono/states.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>

#include <json.hpp>

#include "qmono/errors.hpp"
#include "qmono/tolerances.hpp"

namespace qmono {

PureState make_pure_state(int n_qubits, Vector amplitudes) {
    if (n_qubits < 1) {
        throw DimensionError("pure state: n_qubits must be >= 1");
    }
    if (amplitudes.size() != (1L << n_qubits)) {
        throw DimensionError("pure state: expected " + std::to_string(1L << n_qubits) +
                             " amplitudes, got " + std::to_string(amplitudes.size()));
    }
    const double norm = amplitudes.norm();
    if (std::abs(norm - 1.0) > tol::state_norm) {
        throw ValidationError("pure state: norm " + std::to_string(norm) + " not 1");
    }
    return {n_qubits, std::move(amplitudes)};
}

DensityMatrix make_density_matrix(std::vector<int> qubit_labels, Matrix m) {
    const long dim = 1L << qubit_labels.size();
    if (m.rows() != dim || m.cols() != dim) {
        throw DimensionError("density matrix: dimension " + std::to_string(m.rows()) +
                             " does not match " + std::to_string(qubit_labels.size()) +
                             " qubits");
    }
    if (!std::is_sorted(qubit_labels.begin(), qubit_labels.end())) {
        throw ValidationError("density matrix: qubit labels must be ascending");
    }
    if ((m - m.adjoint()).cwiseAbs().maxCoeff() > tol::state_norm) {
        throw ValidationError("density matrix: not Hermitian");
    }
    if (std::abs(m.trace().real() - 1.0) > tol::state_norm ||
        std::abs(m.trace().imag()) > tol::state_norm) {
        throw ValidationError("density matrix: trace not 1");
    }
    Eigen::SelfAdjointEigenSolver<Matrix> solver(0.5 * (m + m.adjoint()),
                                                 Eigen::EigenvaluesOnly);
    if (solver.eigenvalues().minCoeff() < -tol::psd_clamp) {
        throw ValidationError("density matrix: negative eigenvalue " +
                              std::to_string(solver.eigenvalues().minCoeff()));
    }
    return {std::move(qubit_labels), std::move(m)};
}

Bipartition bipartition(std::vector<int> side_a, int n_qubits) {
    std::sort(side_a.begin(), side_a.end());
    if (side_a.empty()) {
        throw DimensionError("bipartition: side A is empty");
    }
    if (std::unique(side_a.begin(), side_a.end()) != side_a.end()) {
        throw DimensionError("bipartition: duplicate qubit in side A");
    }
    if (side_a.front() < 0 || side_a.back() >= n_qubits) {
        throw DimensionError("bipartition: qubit index out of range");
    }
    std::vector<int> side_b;
    for (int q = 0; q < n_qubits; ++q) {
        if (!std::binary_search(side_a.begin(), side_a.end(), q)) side_b.push_back(q);
    }
    if (side_b.empty()) {
        throw DimensionError("bipartition: side B is empty");
    }
    return {std::move(side_a), std::move(side_b)};
}

Matrix mix(const Ensemble& ensemble) {
    if (ensemble.members.empty()) {
        throw DimensionError("mix: empty ensemble");
    }
    const long dim = ensemble.members.front().state.dim();
    Matrix rho = Matrix::Zero(dim, dim);
    for (const auto& member : ensemble.members) {
        rho += member.p * (member.state.amplitudes * member.state.amplitudes.adjoint());
    }
    return rho;
}

Matrix density_of(const PureState& psi) {
    return psi.amplitudes * psi.amplitudes.adjoint();
}

DensityMatrix reduce(const PureState& psi, const std::vector<int>& keep) {
    std::vector<int> kept = keep;
    std::sort(kept.begin(), kept.end());
    if (kept.empty()) {
        throw DimensionError("reduce: keep set is empty");
    }
    if (kept.front() < 0 || kept.back() >= psi.n_qubits) {
        throw DimensionError("reduce: qubit index out of range for " +
                             std::to_string(psi.n_qubits) + " qubits");
    }
    const std::vector<int> dims(psi.n_qubits, 2);
    Matrix reduced = partial_trace(density_of(psi), dims, kept);
    return make_density_matrix(std::move(kept), std::move(reduced));
}

PureState load_state(const std::string& path) {
    std::ifstream in(path);
    if (!in) {
        throw IoError(path + ": cannot open for reading");
    }
    nlohmann::json doc;
    try {
        in >> doc;
    } catch (const nlohmann::json::exception& e) {
        throw IoError(path + ": malformed JSON: " + e.what());
    }
    if (!doc.is_object() || !doc.contains("n_qubits") || !doc.contains("amplitudes")) {
        throw ValidationError(path + ": expected object with n_qubits and amplitudes");
    }
    if (!doc["n_qubits"].is_number_integer()) {
        throw ValidationError(path + ": n_qubits: not an integer");
    }
    const int n = doc["n_qubits"].get<int>();
    if (n < 1 || n > 16) {
        throw ValidationError(path + ": n_qubits: " + std::to_string(n) +
                              " outside [1, 16]");
    }
    const auto& amps = doc["amplitudes"];
    if (!amps.is_array() || static_cast<long>(amps.size()) != (1L << n)) {
        throw ValidationError(path + ": amplitudes: expected " +
                              std::to_string(1L << n) + " entries, got " +
                              std::to_string(amps.size()));
    }
    Vector v(1L << n);
    for (long i = 0; i < v.size(); ++i) {
        const auto& entry = amps[i];
        if (!entry.is_array() || entry.size() != 2 || !entry[0].is_number() ||
            !entry[1].is_number()) {
            throw ValidationError(path + ": amplitudes[" + std::to_string(i) +
                                  "]: expected [re, im]");
        }
        v[i] = Complex(entry[0].get<double>(), entry[1].get<double>());
    }
    const double norm = v.norm();
    if (std::abs(norm - 1.0) > tol::load_norm) {
        throw ValidationError(path + ": amplitudes: norm " + std::to_string(norm) +
                              " deviates from 1 by more than " +
                              std::to_string(tol::load_norm));
    }
    // Renormalize hand-authored files, but leave machine-precision states
    // untouched so exact save/load round trips stay bit-exact.
    if (std::abs(norm - 1.0) > 1e-12) {
        v /= norm;
    }
    return {n, std::move(v)};
}

void save_state(const PureState& psi, const std::string& path) {
    nlohmann::json doc;
    doc["n_qubits"] = psi.n_qubits;
    auto& amps = doc["amplitudes"] = nlohmann::json::array();
    for (long i = 0; i < psi.amplitudes.size(); ++i) {
        amps.push_back({psi.amplitudes[i].real(), psi.amplitudes[i].imag()});
    }
    std::ofstream out(path);
    if (!out) {
        throw IoError(path + ": cannot open for writing");
    }
    out << doc.dump(2) << '\n';
    if (!out) {
        throw IoError(path + ": write failed");
    }
}

PureState named_state(const std::string& name) {
    Vector v = Vector::Zero(8);
    if (name == "ghz3") {
        v[0] = v[7] = 1.0 / std::sqrt(2.0);
    } else if (name == "w3") {
        v[1] = v[2] = v[4] = 1.0 / std::sqrt(3.0);
    } else if (name == "ghz_minus_w") {
        v[0] = v[7] = 0.5;
        v[1] = v[2] = v[4] = -1.0 / std::sqrt(6.0);
    } else {
        throw ValidationError("named_state: unknown name '" + name +
                              "', valid names: ghz3, w3, ghz_minus_w");
    }
    return make_pure_state(3, std::move(v));
}

bool is_named_state(const std::string& name) {
    return name == "ghz3" || name == "w3" || name == "ghz_minus_w";
}

} // namespace qmono
