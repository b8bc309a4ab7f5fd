#include "qmono/fuzz.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <map>

#include "qmono/errors.hpp"
#include "qmono/measures.hpp"
#include "qmono/tolerances.hpp"

namespace qmono {

namespace {

struct StateOutcome {
    std::vector<CheckResult> checks;
    std::vector<bool> skipped_theorem;  // aligned with cfg.theorems
    double tau1 = 0.0;
    bool has_tau1 = false;
};

std::vector<double> grid_for(const FuzzConfig& cfg, const std::string& id) {
    return cfg.alpha_override.empty() ? default_alpha_grid(id) : cfg.alpha_override;
}

StateOutcome evaluate_state(const FuzzConfig& cfg, int state_id) {
    Rng stream = Rng(cfg.seed).split(state_id);
    const PureState psi =
        make_pure_state(cfg.n_qubits, haar_random_pure(cfg.n_qubits, stream));
    const int a = cfg.focus;

    StateOutcome out;
    out.skipped_theorem.assign(cfg.theorems.size(), false);
    for (std::size_t t = 0; t < cfg.theorems.size(); ++t) {
        const std::string& id = cfg.theorems[t];
        if (id == "ckw") {
            out.checks.push_back(check_ckw(psi, a));
        } else if (id == "dual_ckw") {
            out.checks.push_back(check_dual_ckw(psi, a));
        } else if (id == "t1") {
            auto rows = check_theorem1(psi, a, grid_for(cfg, id));
            out.checks.insert(out.checks.end(), rows.begin(), rows.end());
        } else if (id == "t2") {
            bool passes_filter = true;
            for (int b = 0; b < psi.n_qubits; ++b) {
                if (b == a) continue;
                if (concurrence_2q(reduce(psi, {a, b})).value <= kT2PopulationFilter) {
                    passes_filter = false;
                    break;
                }
            }
            if (passes_filter) {
                auto rows = check_theorem2(psi, a, grid_for(cfg, id));
                out.checks.insert(out.checks.end(), rows.begin(), rows.end());
            } else {
                out.skipped_theorem[t] = true;
            }
        } else if (id == "t4") {
            auto rows = check_theorem4(psi, a, grid_for(cfg, id));
            out.checks.insert(out.checks.end(), rows.begin(), rows.end());
        } else if (id == "t5") {
            RoofConfig roof = cfg.roof;
            roof.seed = Rng(cfg.roof.seed).split(state_id).seed();
            out.checks.push_back(check_theorem5(psi, a, roof, Execution::serial));
        } else if (id == "t6") {
            if (psi.n_qubits != 3) {
                out.skipped_theorem[t] = true;
            } else {
                RoofConfig roof = cfg.roof;
                roof.seed = Rng(cfg.roof.seed).split(state_id).seed();
                auto rows =
                    check_theorem6(psi, a, grid_for(cfg, id), roof, Execution::serial);
                out.checks.insert(out.checks.end(), rows.begin(), rows.end());
            }
        } else {
            throw DomainError("run_fuzz: unknown theorem id '" + id + "'");
        }
    }

    if (psi.n_qubits == 3) {
        out.tau1 = residual_concurrence(psi, a, 1.0).value;
        out.has_tau1 = true;
    }
    return out;
}

} // namespace

std::vector<double> default_alpha_grid(const std::string& theorem_id) {
    if (theorem_id == "t1") return {2.0, 2.5, 3.0, 4.0};
    if (theorem_id == "t2") return {-2.0, -1.0, 0.0};
    if (theorem_id == "t4" || theorem_id == "t6") return {std::sqrt(2.0), 1.5, 2.0, 3.0};
    return {};
}

bool is_optimizer_backed(const std::string& theorem_id) {
    return theorem_id == "t5" || theorem_id == "t6ii";
}

FuzzOutcome run_fuzz(const FuzzConfig& cfg, Execution exec) {
    if (cfg.count < 1) {
        throw DomainError("run_fuzz: count must be >= 1");
    }
    if (cfg.n_qubits < 3 || cfg.n_qubits > 5) {
        throw DomainError("run_fuzz: n_qubits " + std::to_string(cfg.n_qubits) +
                          " outside [3, 5]");
    }
    if (cfg.focus < 0 || cfg.focus >= cfg.n_qubits) {
        throw DomainError("run_fuzz: focus qubit out of range");
    }

    std::vector<StateOutcome> outcomes(cfg.count);
    if (exec == Execution::parallel) {
#pragma omp parallel for schedule(dynamic)
        for (int i = 0; i < cfg.count; ++i) {
            outcomes[i] = evaluate_state(cfg, i);
        }
    } else {
        for (int i = 0; i < cfg.count; ++i) {
            outcomes[i] = evaluate_state(cfg, i);
        }
    }

    // Merge in state order so the report is independent of scheduling.
    FuzzOutcome result;
    std::map<std::string, TheoremSummary> summaries;
    std::vector<std::string> summary_order;
    auto summary_slot = [&](const std::string& id) -> TheoremSummary& {
        auto it = summaries.find(id);
        if (it == summaries.end()) {
            summary_order.push_back(id);
            TheoremSummary s;
            s.theorem_id = id;
            s.min_margin = std::numeric_limits<double>::infinity();
            it = summaries.emplace(id, std::move(s)).first;
        }
        return it->second;
    };

    for (int i = 0; i < cfg.count; ++i) {
        const StateOutcome& state = outcomes[i];
        for (const CheckResult& check : state.checks) {
            TheoremSummary& s = summary_slot(check.theorem_id);
            if (check.vacuous) {
                ++s.vacuous;
            } else {
                ++s.evaluated;
                if (check.margin < s.min_margin) {
                    s.min_margin = check.margin;
                    s.min_state = i;
                    s.min_alpha = check.alpha;
                }
            }
            if (check.verdict == Verdict::inconclusive) ++s.inconclusive;
            if (check.verdict == Verdict::violation) {
                ++s.violations;
                result.closed_form_violation = true;
            }
            result.rows.push_back({i, check});
        }
        for (std::size_t t = 0; t < cfg.theorems.size(); ++t) {
            if (state.skipped_theorem[t]) ++summary_slot(cfg.theorems[t]).skipped;
        }
        if (state.has_tau1) {
            if (!result.tau1_max.found || state.tau1 > result.tau1_max.value) {
                result.tau1_max = {true, i, state.tau1};
            }
            if (!result.tau1_min.found || state.tau1 < result.tau1_min.value) {
                result.tau1_min = {true, i, state.tau1};
            }
        }
    }

    for (const std::string& id : summary_order) {
        result.summaries.push_back(summaries[id]);
    }
    return result;
}

} // namespace qmono
