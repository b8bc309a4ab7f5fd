#include "qmono/convexroof.hpp"

#include <cmath>
#include <numbers>
#include <string>
#include <utility>

#include "qmono/errors.hpp"
#include "qmono/measures.hpp"
#include "qmono/rng.hpp"
#include "qmono/tolerances.hpp"

namespace qmono {

namespace {

// Eigenvalues below this are dropped from the decomposition freedom; the
// discarded mass stays far below the ensemble re-mix tolerance.
constexpr double kRoofRankEps = 1e-12;
constexpr double kZeroWeight = 1e-14;

// Subnormalized eigenvectors sqrt(lambda_j) |e_j| of the significant spectrum,
// one per column, descending eigenvalue.
Matrix subnormalized_eigvecs(const DensityMatrix& rho) {
    const EigenResult eig = hermitian_eig(rho.matrix);
    const long dim = rho.matrix.rows();
    Matrix sub(dim, dim);
    int rank = 0;
    for (long i = dim - 1; i >= 0; --i) {
        if (eig.values[i] > kRoofRankEps) {
            sub.col(rank++) = std::sqrt(eig.values[i]) * eig.vectors.col(i);
        }
    }
    return sub.leftCols(rank);
}

// p * measure(psi / |psi|) for a subnormalized two-qubit member with p = |psi|^2.
double weighted_member_value(const Vector& psi, RoofMeasure measure) {
    // p * C = 2 |psi0 psi3 - psi1 psi2| without normalizing.
    const double pc = 2.0 * std::abs(psi[0] * psi[3] - psi[1] * psi[2]);
    if (measure == RoofMeasure::concurrence) {
        return pc;
    }
    const double w = psi.squaredNorm();
    if (w < kZeroWeight) {
        return 0.0;
    }
    const double c = std::min(1.0, pc / w);
    return w * f_of(c * c);
}

struct RotationPlan {
    int m = 0;
    int rank = 0;
    std::vector<std::pair<int, int>> pairs;  // (a, b), a < b

    int param_count() const { return 2 * static_cast<int>(pairs.size()); }
};

// U = G_P ... G_1 [I_r; 0] with G_k the planar rotation of params
// (theta_k, phi_k) acting on rows pairs[k].
Matrix isometry_from_params(const RotationPlan& plan, const std::vector<double>& params) {
    Matrix u = Matrix::Zero(plan.m, plan.rank);
    for (int j = 0; j < plan.rank; ++j) {
        u(j, j) = 1.0;
    }
    for (std::size_t k = 0; k < plan.pairs.size(); ++k) {
        const auto [a, b] = plan.pairs[k];
        const double theta = params[2 * k];
        const double phi = params[2 * k + 1];
        const double c = std::cos(theta);
        const Complex s = std::sin(theta) * Complex(std::cos(phi), std::sin(phi));
        for (int j = 0; j < plan.rank; ++j) {
            const Complex ra = u(a, j);
            const Complex rb = u(b, j);
            u(a, j) = c * ra + s * rb;
            u(b, j) = -std::conj(s) * ra + c * rb;
        }
    }
    return u;
}

struct RestartOutcome {
    double value = 0.0;
    std::vector<double> params;
    bool converged = false;
    int iterations = 0;
    std::vector<double> sweep_values;
};

RestartOutcome run_restart(const Matrix& sub, const RotationPlan& plan,
                           RoofMeasure measure, RoofDirection direction,
                           const RoofConfig& cfg, std::vector<double> params) {
    const bool maximize = direction == RoofDirection::maximize;
    auto objective = [&](const std::vector<double>& p) {
        const Matrix u = isometry_from_params(plan, p);
        const Matrix members = sub * u.transpose();  // one member per column
        double total = 0.0;
        for (int k = 0; k < plan.m; ++k) {
            total += weighted_member_value(members.col(k), measure);
        }
        return total;
    };
    auto better = [&](double candidate, double incumbent) {
        return maximize ? candidate > incumbent : candidate < incumbent;
    };

    RestartOutcome out;
    out.params = std::move(params);
    out.value = objective(out.params);
    out.sweep_values.push_back(out.value);

    double step = 0.25;
    int sweeps = 0;
    while (sweeps < cfg.max_iters) {
        bool improved = false;
        for (int p = 0; p < plan.param_count(); ++p) {
            for (double delta : {step, -step}) {
                std::vector<double> candidate = out.params;
                candidate[p] += delta;
                const double v = objective(candidate);
                if (better(v, out.value)) {
                    out.params = std::move(candidate);
                    out.value = v;
                    improved = true;
                    break;
                }
            }
        }
        ++sweeps;
        out.sweep_values.push_back(out.value);
        if (!improved) {
            step *= 0.5;
            if (step < cfg.step_tolerance) {
                out.converged = true;
                break;
            }
        }
    }
    out.iterations = sweeps;
    return out;
}

std::vector<double> initial_params(const RotationPlan& plan, Rng rng, bool zero) {
    std::vector<double> params(plan.param_count(), 0.0);
    if (!zero) {
        for (std::size_t k = 0; k < plan.pairs.size(); ++k) {
            params[2 * k] = rng.uniform(0.0, std::numbers::pi);
            params[2 * k + 1] = rng.uniform(0.0, 2.0 * std::numbers::pi);
        }
    }
    return params;
}

} // namespace

Ensemble ensemble_from_isometry(const DensityMatrix& rho, const Matrix& mix) {
    const Matrix sub = subnormalized_eigvecs(rho);
    const int rank = static_cast<int>(sub.cols());
    if (mix.cols() != rank) {
        throw DimensionError("ensemble_from_isometry: mix has " +
                             std::to_string(mix.cols()) + " columns, rank is " +
                             std::to_string(rank));
    }
    if (mix.rows() < rank) {
        throw DimensionError("ensemble_from_isometry: fewer rows than rank");
    }
    const Matrix gram = mix.adjoint() * mix;
    if ((gram - Matrix::Identity(rank, rank)).cwiseAbs().maxCoeff() > 1e-10) {
        throw ValidationError("ensemble_from_isometry: columns not orthonormal");
    }

    const int n_qubits = rho.n_qubits();
    Ensemble ensemble;
    ensemble.members.reserve(mix.rows());
    for (Eigen::Index k = 0; k < mix.rows(); ++k) {
        Vector psi = Vector::Zero(rho.matrix.rows());
        for (int j = 0; j < rank; ++j) {
            psi += mix(k, j) * sub.col(j);
        }
        const double w = psi.squaredNorm();
        if (w > kZeroWeight) {
            psi /= std::sqrt(w);
        } else {
            psi.setZero();
            psi[0] = 1.0;  // unit placeholder carrying (near-)zero probability
        }
        ensemble.members.push_back({w, PureState{n_qubits, std::move(psi)}});
    }
    return ensemble;
}

double ensemble_value(const Ensemble& ensemble, RoofMeasure measure) {
    double total = 0.0;
    for (const auto& member : ensemble.members) {
        const Vector& psi = member.state.amplitudes;
        const double c = std::min(1.0, 2.0 * std::abs(psi[0] * psi[3] - psi[1] * psi[2]));
        total += member.p *
                 (measure == RoofMeasure::concurrence ? c : f_of(c * c));
    }
    return total;
}

RoofResult optimize_roof(const DensityMatrix& rho, RoofMeasure measure,
                         RoofDirection direction, const RoofConfig& cfg,
                         Execution exec) {
    if (rho.matrix.rows() != 4) {
        throw DimensionError("optimize_roof: only two-qubit density matrices are "
                             "supported, got dimension " + std::to_string(rho.matrix.rows()));
    }
    const Matrix sub = subnormalized_eigvecs(rho);
    const int rank = static_cast<int>(sub.cols());

    RotationPlan plan;
    plan.rank = rank;
    plan.m = cfg.ensemble_size > 0 ? cfg.ensemble_size : rank * rank;
    if (plan.m < rank) {
        throw ValidationError("optimize_roof: ensemble_size " + std::to_string(plan.m) +
                              " below rank " + std::to_string(rank));
    }

    if (rank == 1) {
        // Pure state: the decomposition is unique.
        RoofResult result;
        result.direction = direction;
        result.ensemble = ensemble_from_isometry(rho, Matrix::Identity(1, 1));
        result.value = ensemble_value(result.ensemble, measure);
        result.converged = true;
        result.iterations = 0;
        result.sweep_values = {result.value};
        return result;
    }

    for (int a = 0; a < plan.m; ++a) {
        for (int b = a + 1; b < plan.m; ++b) {
            plan.pairs.emplace_back(a, b);
        }
    }

    const Rng root(cfg.seed);
    const int restarts = std::max(1, cfg.restarts);
    std::vector<RestartOutcome> outcomes(restarts);

    if (exec == Execution::parallel) {
#pragma omp parallel for schedule(dynamic)
        for (int r = 0; r < restarts; ++r) {
            outcomes[r] = run_restart(sub, plan, measure, direction, cfg,
                                      initial_params(plan, root.split(r), r == 0));
        }
    } else {
        for (int r = 0; r < restarts; ++r) {
            outcomes[r] = run_restart(sub, plan, measure, direction, cfg,
                                      initial_params(plan, root.split(r), r == 0));
        }
    }

    // Best value wins; ties keep the lowest restart index.
    const bool maximize = direction == RoofDirection::maximize;
    int best = 0;
    for (int r = 1; r < restarts; ++r) {
        const bool wins = maximize ? outcomes[r].value > outcomes[best].value
                                   : outcomes[r].value < outcomes[best].value;
        if (wins) best = r;
    }

    RoofResult result;
    result.direction = direction;
    result.converged = outcomes[best].converged;
    result.iterations = outcomes[best].iterations;
    result.sweep_values = std::move(outcomes[best].sweep_values);
    result.ensemble =
        ensemble_from_isometry(rho, isometry_from_params(plan, outcomes[best].params));
    result.value = ensemble_value(result.ensemble, measure);
    return result;
}

RoofResult eoa_lower(const DensityMatrix& rho, const RoofConfig& cfg, Execution exec) {
    return optimize_roof(rho, RoofMeasure::eof, RoofDirection::maximize, cfg, exec);
}

} // namespace qmono
