#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "qmono/monogamy.hpp"

namespace qmono {

/// Campaign over Haar-random pure states. State i is drawn from the child
/// stream split(seed, i), so results are independent of worker scheduling.
struct FuzzConfig {
    int n_qubits = 3;
    int count = 100;
    std::uint64_t seed = 0;
    int focus = 0;
    /// Any of: ckw, dual_ckw, t1, t2, t4, t5, t6.
    std::vector<std::string> theorems = {"ckw", "dual_ckw", "t1", "t2", "t4"};
    /// Empty -> per-theorem default grids.
    std::vector<double> alpha_override;
    /// Optimizer settings for t5/t6; the per-state seed is split from it.
    RoofConfig roof;
};

struct FuzzRow {
    int state_id = 0;
    CheckResult check;
};

struct TheoremSummary {
    std::string theorem_id;
    int evaluated = 0;      // rows carrying a numeric margin
    int vacuous = 0;
    int skipped = 0;        // states removed by the population filter
    int inconclusive = 0;
    int violations = 0;
    double min_margin = 0.0;
    int min_state = -1;     // state attaining min_margin
    double min_alpha = 0.0;
};

/// One extremal observation of the alpha = 1 concurrence residual, where the
/// sign is genuinely undetermined.
struct SignWitness {
    bool found = false;
    int state_id = -1;
    double value = 0.0;
};

struct FuzzOutcome {
    std::vector<FuzzRow> rows;
    std::vector<TheoremSummary> summaries;
    /// Extremes of tau_1 across the population (3-qubit campaigns only).
    SignWitness tau1_max;
    SignWitness tau1_min;
    /// True when any closed-form check reported a violation.
    bool closed_form_violation = false;
};

/// Default alpha grid of a theorem id; empty for alpha-free checks.
std::vector<double> default_alpha_grid(const std::string& theorem_id);

/// True for ids whose margins involve optimizer bounds (exempt from the
/// violation exit path).
bool is_optimizer_backed(const std::string& theorem_id);

/// Pairwise concurrences with the focus qubit must clear this before a state
/// enters the reciprocal-power (t2) population.
inline constexpr double kT2PopulationFilter = 1e-3;

/// Runs the campaign. `exec` selects the OpenMP kernel or the serial
/// reference; both return identical outcomes.
FuzzOutcome run_fuzz(const FuzzConfig& cfg, Execution exec = Execution::parallel);

} // namespace qmono
