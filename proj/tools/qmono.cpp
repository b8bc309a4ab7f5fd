// Command-line front end: evaluate entanglement measures on state files, run
// fuzz campaigns over Haar-random states, emit figure data, classify 3-qubit
// states. Exit codes: 0 pass/inconclusive, 1 usage or I/O error, 2 violation.

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <limits>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "qmono/errors.hpp"
#include "qmono/fuzz.hpp"
#include "qmono/measures.hpp"
#include "qmono/monogamy.hpp"
#include "qmono/report_io.hpp"
#include "qmono/states.hpp"
#include "qmono/tolerances.hpp"
#include "qmono/version.hpp"

namespace {

using namespace qmono;

constexpr int kExitOk = 0;
constexpr int kExitUsage = 1;
constexpr int kExitViolation = 2;

const double kSqrt2 = std::sqrt(2.0);

std::string join_args(int argc, char** argv) {
    std::string joined;
    for (int i = 0; i < argc; ++i) {
        if (i) joined += ' ';
        joined += argv[i];
    }
    return joined;
}

PureState state_from_arg(const std::string& arg) {
    if (is_named_state(arg)) return named_state(arg);
    return load_state(arg);
}

std::vector<double> in_regime(const std::vector<double>& grid, double lo) {
    std::vector<double> out;
    for (double a : grid) {
        if (a >= lo - 1e-12) out.push_back(a);
    }
    return out;
}

std::vector<double> at_most_zero(const std::vector<double>& grid) {
    std::vector<double> out;
    for (double a : grid) {
        if (a <= 1e-12) out.push_back(a);
    }
    return out;
}

struct OutputFile {
    std::ofstream file;
    std::ostream* stream = &std::cout;

    explicit OutputFile(const std::string& path) {
        if (path.empty() || path == "-") return;
        file.open(path);
        if (!file) throw IoError(path + ": cannot open for writing");
        stream = &file;
    }
};

std::string measure_flags(const MeasureValue& v) {
    std::string s;
    if (!v.exact) s += " (upper bound: rank > 2)";
    if (!v.in_regime) s += " (diagnostic alpha)";
    return s;
}

// ---------------------------------------------------------------------------
// eval

int cmd_eval(const std::string& state_arg, int focus, const std::string& measures_csv,
             std::vector<double> alphas, std::uint64_t seed, const std::string& json_path,
             const RunManifest& manifest) {
    const PureState psi = state_from_arg(state_arg);
    if (focus < 0 || focus >= psi.n_qubits) {
        std::cerr << "eval: focus qubit " << focus << " out of range\n";
        return kExitUsage;
    }

    bool want_conc = false, want_coa = false, want_eof = false, want_tangle = false,
         want_residuals = false, want_checks = false;
    {
        std::stringstream ss(measures_csv);
        std::string item;
        while (std::getline(ss, item, ',')) {
            if (item == "all") {
                want_conc = want_coa = want_eof = want_tangle = want_residuals =
                    want_checks = true;
            } else if (item == "concurrence") {
                want_conc = true;
            } else if (item == "coa") {
                want_coa = true;
            } else if (item == "eof") {
                want_eof = true;
            } else if (item == "tangle") {
                want_tangle = true;
            } else if (item == "residuals") {
                want_residuals = true;
            } else if (item == "checks") {
                want_checks = true;
            } else {
                std::cerr << "eval: unknown measure '" << item
                          << "' (concurrence, coa, eof, tangle, residuals, checks, all)\n";
                return kExitUsage;
            }
        }
    }
    if (alphas.empty()) alphas = {2.0, 2.5, 3.0, 4.0};

    std::vector<MeasureEntry> entries;
    const Bipartition part = bipartition({focus}, psi.n_qubits);
    std::vector<int> partners;
    for (int q = 0; q < psi.n_qubits; ++q) {
        if (q != focus) partners.push_back(q);
    }

    if (want_conc) {
        entries.push_back({"C_A|rest", concurrence_pure(psi, part)});
        for (int b : partners) {
            entries.push_back(
                {"C_A" + std::to_string(b), concurrence_2q(reduce(psi, {focus, b}))});
        }
    }
    if (want_coa) {
        for (int b : partners) {
            entries.push_back(
                {"Ca_A" + std::to_string(b), coa_2q(reduce(psi, {focus, b}))});
        }
    }
    if (want_eof) {
        entries.push_back({"E_A|rest", eof_pure(psi, part)});
        for (int b : partners) {
            entries.push_back(
                {"E_A" + std::to_string(b), eof_2q(reduce(psi, {focus, b}))});
        }
    }
    if (psi.n_qubits == 3 && want_tangle) {
        entries.push_back({"tau2", three_tangle(psi, focus)});
    }
    if (psi.n_qubits == 3 && want_residuals) {
        for (double a : alphas) {
            entries.push_back({"tauC[" + csv_double(a) + "]",
                               residual_concurrence(psi, focus, a)});
        }
        // The EoF residual depends on the focus choice; emit all three.
        for (int f = 0; f < 3; ++f) {
            for (double a : alphas) {
                entries.push_back({"tauE[" + csv_double(a) + "]_focus" + std::to_string(f),
                                   residual_eof(psi, f, a)});
            }
        }
    }

    MonogamyReport report;
    report.state_descriptor = state_arg;
    report.focus_qubit = focus;
    report.alpha_grid = alphas;
    if (want_checks) {
        report.results.push_back(check_ckw(psi, focus));
        report.results.push_back(check_dual_ckw(psi, focus));
        for (auto& r : check_theorem1(psi, focus, in_regime(alphas, 2.0))) {
            report.results.push_back(r);
        }
        for (auto& r : check_theorem2(psi, focus, at_most_zero({-2.0, -1.0, 0.0}))) {
            report.results.push_back(r);
        }
        for (auto& r : check_theorem4(psi, focus, in_regime(alphas, kSqrt2))) {
            report.results.push_back(r);
        }
        RoofConfig roof;
        roof.seed = seed;
        report.results.push_back(check_theorem5(psi, focus, roof));
        if (psi.n_qubits == 3) {
            for (auto& r : check_theorem6(psi, focus, in_regime(alphas, kSqrt2), roof)) {
                report.results.push_back(r);
            }
        }
    }

    std::cout << "state: " << state_arg << "  (n_qubits " << psi.n_qubits << ", focus "
              << focus << ")\n";
    for (const MeasureEntry& e : entries) {
        std::printf("  %-24s %.9f%s\n", e.name.c_str(), e.value.value,
                    measure_flags(e.value).c_str());
    }
    if (!report.results.empty()) {
        std::cout << "checks:\n";
        for (const CheckResult& r : report.results) {
            std::printf("  %-8s", r.theorem_id.c_str());
            if (!std::isnan(r.alpha)) std::printf(" alpha=%-6g", r.alpha);
            if (r.vacuous) {
                std::printf(" vacuous\n");
                continue;
            }
            std::printf(" lhs=%.9f rhs=%.9f margin=%+.3e %s%s\n", r.lhs, r.rhs, r.margin,
                        verdict_name(r.verdict).c_str(), r.witness.empty() ? "" : ("  [" + r.witness + "]").c_str());
        }
    }

    if (!json_path.empty()) {
        OutputFile out(json_path);
        *out.stream << report_json(report, entries, manifest).dump(2) << '\n';
    }
    return has_violation(report.results) ? kExitViolation : kExitOk;
}

// ---------------------------------------------------------------------------
// fuzz

int cmd_fuzz(const FuzzConfig& cfg, const std::string& out_path, bool serial,
             const RunManifest& manifest) {
    const FuzzOutcome outcome =
        run_fuzz(cfg, serial ? Execution::serial : Execution::parallel);
    {
        OutputFile out(out_path);
        write_fuzz_csv(*out.stream, outcome, manifest);
    }
    for (const TheoremSummary& s : outcome.summaries) {
        std::cerr << "fuzz: " << s.theorem_id << " evaluated=" << s.evaluated;
        if (s.evaluated > 0) std::cerr << " min_margin=" << csv_double(s.min_margin);
        if (s.skipped > 0) std::cerr << " skipped=" << s.skipped;
        if (s.vacuous > 0) std::cerr << " vacuous=" << s.vacuous;
        if (s.inconclusive > 0) std::cerr << " inconclusive=" << s.inconclusive;
        if (s.violations > 0) std::cerr << " VIOLATIONS=" << s.violations;
        std::cerr << '\n';
    }
    return outcome.closed_form_violation ? kExitViolation : kExitOk;
}

// ---------------------------------------------------------------------------
// figure

int cmd_figure(const std::string& which, double alpha_min, double alpha_max, int points,
               const std::string& out_path, const RunManifest& manifest) {
    if (alpha_min < kSqrt2 - 1e-12) {
        std::cerr << "figure: alpha-min " << alpha_min << " below sqrt(2)\n";
        return kExitUsage;
    }
    if (alpha_max <= alpha_min || points < 2) {
        std::cerr << "figure: need alpha-max > alpha-min and points >= 2\n";
        return kExitUsage;
    }

    std::vector<double> grid(points);
    for (int i = 0; i < points; ++i) {
        grid[i] = alpha_min + (alpha_max - alpha_min) * i / (points - 1);
    }

    FigureTable table;
    if (which == "w-residuals") {
        // Keep the concurrence column's regime boundary on the grid.
        if (alpha_min < 2.0 && alpha_max > 2.0 &&
            std::none_of(grid.begin(), grid.end(),
                         [](double a) { return std::abs(a - 2.0) < 1e-12; })) {
            grid.push_back(2.0);
            std::sort(grid.begin(), grid.end());
        }
        const PureState w = named_state("w3");
        table.columns = {"alpha", "tau_c_w", "tau_e_w"};
        for (double a : grid) {
            const double tau_c = a >= 2.0 - 1e-12
                                     ? residual_concurrence(w, 0, a).value
                                     : std::numeric_limits<double>::quiet_NaN();
            table.rows.push_back({a, tau_c, residual_eof(w, 0, a).value});
        }
    } else if (which == "eoa-bound") {
        const PureState psi = named_state("ghz_minus_w");
        table.columns = {"alpha", "eoa_lower_bound"};
        for (double a : grid) {
            table.rows.push_back({a, eoa_bound(psi, 0, 1, a)});
        }
    } else {
        std::cerr << "figure: unknown --which '" << which
                  << "' (w-residuals, eoa-bound)\n";
        return kExitUsage;
    }

    OutputFile out(out_path);
    write_figure_csv(*out.stream, table, manifest);
    return kExitOk;
}

// ---------------------------------------------------------------------------
// classify

int cmd_classify(const std::string& state_arg, std::vector<double> grid) {
    const PureState psi = state_from_arg(state_arg);
    if (grid.empty()) grid = {2.0, 2.5, 3.0, 4.0, 6.0};
    const ClassifyOutcome outcome = classify_pure3(psi, grid);
    std::cout << "state: " << state_arg << '\n';
    std::cout << "label: " << to_string(outcome.label) << '\n';
    if (outcome.label == Pure3Class::genuine && outcome.detected_above_2_only) {
        std::cout << "note: detected at alpha > 2 only (residual at alpha = 2 is below "
                  << tol::classifier << ")\n";
    }
    std::cout << "focus,alpha,residual\n";
    for (const ResidualSample& r : outcome.residuals) {
        std::printf("%d,%s,%s\n", r.focus, csv_double(r.alpha).c_str(),
                    csv_double(r.residual).c_str());
    }
    return kExitOk;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"qubit entanglement measures and alpha-power monogamy checks"};
    app.set_version_flag("--version", qmono::kVersion);
    app.require_subcommand(1);

    std::string state_arg, measures_csv = "all", json_path, out_path = "-", which;
    std::vector<double> alphas, alpha_grid;
    int focus = 0, points = 100;
    double alpha_min = kSqrt2, alpha_max = 0.0;
    std::uint64_t seed = 0;
    bool serial = false;
    FuzzConfig fuzz_cfg;

    CLI::App* eval = app.add_subcommand("eval", "evaluate measures and checks on a state");
    eval->add_option("state", state_arg, "state file path or named state")->required();
    eval->add_option("--focus", focus, "qubit playing the A role (default 0)");
    eval->add_option("--measures", measures_csv,
                     "comma list: concurrence,coa,eof,tangle,residuals,checks,all");
    eval->add_option("--alphas", alphas, "alpha grid for residuals and checks");
    eval->add_option("--seed", seed, "seed for optimizer-backed checks");
    eval->add_option("--json", json_path, "write the JSON report here ('-' = stdout)");

    CLI::App* fuzz = app.add_subcommand("fuzz", "campaign over Haar-random states");
    fuzz->add_option("--qubits", fuzz_cfg.n_qubits, "register size (3..5)")
        ->check(CLI::Range(3, 5));
    fuzz->add_option("--count", fuzz_cfg.count, "number of states")
        ->check(CLI::PositiveNumber);
    fuzz->add_option("--seed", fuzz_cfg.seed, "campaign seed");
    fuzz->add_option("--focus", fuzz_cfg.focus, "qubit playing the A role");
    fuzz->add_option("--theorems", fuzz_cfg.theorems,
                     "checks to run: ckw dual_ckw t1 t2 t4 t5 t6");
    fuzz->add_option("--alphas", fuzz_cfg.alpha_override, "override every alpha grid");
    fuzz->add_option("--out", out_path, "CSV path ('-' = stdout)");
    fuzz->add_flag("--serial", serial, "run the serial reference kernel");

    CLI::App* figure = app.add_subcommand("figure", "emit figure data as CSV");
    figure->add_option("--which", which, "w-residuals or eoa-bound")->required();
    figure->add_option("--alpha-min", alpha_min, "grid start (default sqrt(2))");
    figure->add_option("--alpha-max", alpha_max, "grid end (default 6 / 4)");
    figure->add_option("--points", points, "grid size (default 100)");
    figure->add_option("--out", out_path, "CSV path ('-' = stdout)");

    CLI::App* classify = app.add_subcommand("classify", "separability class of a 3-qubit state");
    classify->add_option("state", state_arg, "state file path or named state")->required();
    classify->add_option("--alpha-grid", alpha_grid,
                         "residual grid; must contain 2 and one alpha > 2");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForVersion& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kExitUsage;
    }

    const qmono::RunManifest manifest =
        qmono::make_manifest(join_args(argc, argv), fuzz->parsed() ? fuzz_cfg.seed : seed);

    try {
        if (eval->parsed()) {
            return cmd_eval(state_arg, focus, measures_csv, alphas, seed, json_path,
                            manifest);
        }
        if (fuzz->parsed()) {
            return cmd_fuzz(fuzz_cfg, out_path, serial, manifest);
        }
        if (figure->parsed()) {
            if (alpha_max == 0.0) alpha_max = which == "w-residuals" ? 6.0 : 4.0;
            return cmd_figure(which, alpha_min, alpha_max, points, out_path, manifest);
        }
        if (classify->parsed()) {
            return cmd_classify(state_arg, alpha_grid);
        }
    } catch (const qmono::DomainError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitUsage;
    } catch (const qmono::DimensionError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitUsage;
    } catch (const qmono::Error& e) {
        // Validation and I/O failures.
        std::cerr << "error: " << e.what() << '\n';
        return kExitUsage;
    }
    return kExitUsage;
}
