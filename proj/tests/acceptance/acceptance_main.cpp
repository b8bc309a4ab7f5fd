// Acceptance suite: one pass/fail line per criterion, nonzero exit when any
// fails. Every tolerance is pinned here, not computed.

#include <cmath>
#include <cstdio>
#include <numbers>
#include <string>
#include <vector>

#include "qmono/convexroof.hpp"
#include "qmono/fuzz.hpp"
#include "qmono/measures.hpp"
#include "qmono/monogamy.hpp"
#include "qmono/schmidt.hpp"
#include "qmono/states.hpp"

using namespace qmono;

namespace {

int g_failures = 0;

void criterion(int id, const char* title, bool ok, const std::string& detail) {
    std::printf("%s  criterion %2d: %s  [%s]\n", ok ? "PASS" : "FAIL", id, title,
                detail.c_str());
    if (!ok) ++g_failures;
}

std::string fmt(const char* pattern, double a, double b = 0.0, double c = 0.0) {
    char buf[160];
    std::snprintf(buf, sizeof(buf), pattern, a, b, c);
    return buf;
}

const double kSqrt2 = std::sqrt(2.0);

// --------------------------------------------------------------------------

void criterion_1_w_eof() {
    const PureState w = named_state("w3");
    const double e_abc = eof_pure(w, bipartition({0}, 3)).value;
    const double e_ab = eof_2q(reduce(w, {0, 1})).value;
    const double e_ac = eof_2q(reduce(w, {0, 2})).value;
    const bool ok = std::abs(e_abc - 0.918296) <= 1e-5 &&
                    std::abs(e_ab - 0.550048) <= 1e-5 &&
                    std::abs(e_ac - 0.550048) <= 1e-5;
    criterion(1, "W-state EoF values", ok,
              fmt("E_A|BC=%.6f E_AB=%.6f E_AC=%.6f", e_abc, e_ab, e_ac));
}

void criterion_2_w_residual() {
    const PureState w = named_state("w3");
    const double at2 = residual_concurrence(w, 0, 2.0).value;
    const double at3 = residual_concurrence(w, 0, 3.0).value;
    double worst = 0.0;
    for (int i = 0; i <= 400; ++i) {
        const double alpha = 2.0 + 4.0 * i / 400.0;
        const double numeric = residual_concurrence(w, 0, alpha).value;
        const double formula = std::pow(2.0 / std::sqrt(3.0), alpha) *
                               (std::pow(2.0 / 3.0, alpha / 2.0) -
                                2.0 * std::pow(1.0 / std::sqrt(3.0), alpha));
        worst = std::max(worst, std::abs(numeric - formula));
    }
    const bool ok = std::abs(at2) <= 1e-9 && at3 > 1e-3 && worst <= 1e-10;
    criterion(2, "W residual concurrence vs closed formula", ok,
              fmt("tau(2)=%.2e tau(3)=%.4f worst_dev=%.2e", at2, at3, worst));
}

void criterion_3_fig2_anchor() {
    const PureState gmw = named_state("ghz_minus_w");
    const double anchor = eoa_bound(gmw, 0, 1, kSqrt2);
    bool monotone = true;
    double prev = anchor;
    const int points = 200;
    for (int i = 1; i < points; ++i) {
        const double alpha = kSqrt2 + (4.0 - kSqrt2) * i / (points - 1);
        const double value = eoa_bound(gmw, 0, 1, alpha);
        if (value > prev + 1e-9) monotone = false;
        prev = value;
    }
    const bool ok = std::abs(anchor - 0.623) <= 2e-3 && monotone;
    criterion(3, "EoA lower bound anchor 0.623 and nonincreasing curve", ok,
              fmt("bound(sqrt2)=%.6f monotone=%.0f", anchor, monotone ? 1.0 : 0.0));
}

struct CampaignMargins {
    double t1 = 1e9, t2 = 1e9, t4 = 1e9;
    int t2_population = 0;
};

CampaignMargins campaign_margins(int n_qubits, int count, std::uint64_t seed) {
    FuzzConfig cfg;
    cfg.n_qubits = n_qubits;
    cfg.count = count;
    cfg.seed = seed;
    cfg.theorems = {"t1", "t2", "t4"};
    const FuzzOutcome outcome = run_fuzz(cfg);
    CampaignMargins m;
    for (const TheoremSummary& s : outcome.summaries) {
        if (s.evaluated == 0) continue;
        if (s.theorem_id == "t1") m.t1 = s.min_margin;
        if (s.theorem_id == "t2") {
            m.t2 = s.min_margin;
            m.t2_population = count - s.skipped;
        }
        if (s.theorem_id == "t4") m.t4 = s.min_margin;
    }
    return m;
}

void criteria_4_5_6_fuzz() {
    const CampaignMargins three = campaign_margins(3, 1000, 424242);
    const CampaignMargins four = campaign_margins(4, 200, 515151);

    const double t1 = std::min(three.t1, four.t1);
    criterion(4, "alpha-power concurrence monogamy fuzz (1000x3q + 200x4q)",
              t1 >= -1e-9, fmt("min_margin=%.3e", t1));

    const double t2 = std::min(three.t2, four.t2);
    criterion(5, "reciprocal-power reversal fuzz on filtered populations",
              t2 >= -1e-9,
              fmt("min_margin=%.3e population=%.0f+%.0f", t2,
                  double(three.t2_population), double(four.t2_population)));

    const double t4 = std::min(three.t4, four.t4);
    criterion(6, "alpha-power EoF monogamy fuzz", t4 >= -1e-9,
              fmt("min_margin=%.3e", t4));
}

void criterion_7_f_grid() {
    double worst_power = 1e9, worst_sub = 1e9;
    for (int i = 0; i <= 100; ++i) {
        for (int j = 0; j <= 100; ++j) {
            const double x = i / 100.0, y = j / 100.0;
            if (x * x + y * y > 1.0) continue;
            const double whole = f_of(x * x + y * y);
            const double fx = f_of(x * x), fy = f_of(y * y);
            worst_power = std::min(worst_power, std::pow(whole, kSqrt2) -
                                                    std::pow(fx, kSqrt2) -
                                                    std::pow(fy, kSqrt2));
            worst_sub = std::min(worst_sub, fx + fy - whole);
        }
    }
    const bool ok = worst_power >= -1e-12 && worst_sub >= -1e-12;
    criterion(7, "f-inequality grid (superadditive power, subadditive plain)", ok,
              fmt("min_power_slack=%.2e min_sub_slack=%.2e", worst_power, worst_sub));
}

void criterion_8_oracle_equivalence() {
    // Convex-roof minimization against the closed form on rank-2 reductions.
    double below = 0.0, above = 0.0;
    for (int i = 0; i < 50; ++i) {
        Rng rng = Rng(606060).split(i);
        const PureState psi = make_pure_state(3, haar_random_pure(3, rng));
        const DensityMatrix rho = reduce(psi, {0, 1});
        RoofConfig cfg;
        cfg.seed = 4000 + i;
        const RoofResult roof =
            optimize_roof(rho, RoofMeasure::concurrence, RoofDirection::minimize, cfg);
        const double closed = concurrence_2q(rho).value;
        below = std::max(below, closed - roof.value);
        above = std::max(above, roof.value - closed);
    }

    // mu-sum CoA against the tangle identity on 1000 reductions.
    double worst_identity = 0.0;
    for (int i = 0; i < 1000; ++i) {
        Rng rng = Rng(707070).split(i);
        const PureState psi = make_pure_state(3, haar_random_pure(3, rng));
        for (int partner : {1, 2}) {
            const double mu_sum = coa_2q(reduce(psi, {0, partner})).value;
            const double identity = coa_via_tangle(psi, 0, partner).value;
            worst_identity = std::max(worst_identity, std::abs(mu_sum - identity));
        }
    }
    const bool ok = below <= 1e-9 && above <= 5e-3 && worst_identity <= 1e-8;
    criterion(8, "roof-vs-Wootters and CoA tangle identity", ok,
              fmt("undercut=%.2e slack=%.2e identity_dev=%.2e", below, above,
                  worst_identity));
}

void criterion_9_schmidt_oracle() {
    double worst = 0.0, worst_phase = 0.0;
    Rng root(808080);
    for (int i = 0; i < 10000; ++i) {
        Rng rng = root.split(i);
        SchmidtAngles angles;
        for (double& t : angles.theta) t = rng.uniform(0.0, std::numbers::pi / 2.0);
        angles.phi = rng.uniform(0.0, 2.0 * std::numbers::pi);
        const SchmidtParams params = angles_to_params(angles);
        const ClosedFormConcurrences cf = closed_form_concurrences(params);

        const PureState psi = build_state(params);
        const double c_abc = concurrence_pure(psi, bipartition({0}, 3)).value;
        const double c_ab = concurrence_2q(reduce(psi, {0, 1})).value;
        const double c_ac = concurrence_2q(reduce(psi, {0, 2})).value;
        worst = std::max({worst, std::abs(c_abc - cf.c_a_bc), std::abs(c_ab - cf.c_ab),
                          std::abs(c_ac - cf.c_ac)});

        SchmidtParams zero_phase = params;
        zero_phase.phi = 0.0;
        const PureState flat = build_state(zero_phase);
        worst_phase = std::max(
            {worst_phase,
             std::abs(c_abc - concurrence_pure(flat, bipartition({0}, 3)).value),
             std::abs(c_ab - concurrence_2q(reduce(flat, {0, 1})).value),
             std::abs(c_ac - concurrence_2q(reduce(flat, {0, 2})).value)});
    }
    const bool ok = worst <= 1e-10 && worst_phase <= 1e-10;
    criterion(9, "Schmidt-form closed-form oracle over 10^4 draws", ok,
              fmt("worst_dev=%.2e worst_phase_dev=%.2e", worst, worst_phase));
}

void criterion_10_classifier() {
    const std::vector<double> grid{2.0, 2.5, 3.0, 4.0, 6.0};

    int product_genuine = 0;
    for (int i = 0; i < 100; ++i) {
        Rng rng = Rng(909090).split(i);
        const Vector one = haar_random_pure(1, rng);
        const Vector two = haar_random_pure(2, rng);
        Vector prod(8);
        for (int a = 0; a < 2; ++a) {
            for (int b = 0; b < 4; ++b) prod[a * 4 + b] = one[a] * two[b];
        }
        if (classify_pure3(make_pure_state(3, prod), grid).label == Pure3Class::genuine) {
            ++product_genuine;
        }
    }

    int haar_genuine = 0;
    for (int i = 0; i < 100; ++i) {
        Rng rng = Rng(919191).split(i);
        const PureState psi = make_pure_state(3, haar_random_pure(3, rng));
        if (classify_pure3(psi, grid).label == Pure3Class::genuine) ++haar_genuine;
    }

    const ClassifyOutcome w = classify_pure3(named_state("w3"), grid);
    const bool w_ok = w.label == Pure3Class::genuine && w.detected_above_2_only;

    const bool ok = product_genuine == 0 && haar_genuine >= 99 && w_ok;
    criterion(10, "classifier soundness and completeness", ok,
              fmt("product_genuine=%.0f haar_genuine=%.0f w_late_detect=%.0f",
                  double(product_genuine), double(haar_genuine), w_ok ? 1.0 : 0.0));
}

void criterion_11_sign_witness() {
    FuzzConfig cfg;
    cfg.n_qubits = 3;
    cfg.count = 400;
    cfg.seed = 131313;
    cfg.theorems = {"ckw"};
    const FuzzOutcome outcome = run_fuzz(cfg);
    const bool ok = outcome.tau1_max.found && outcome.tau1_max.value > 1e-6 &&
                    outcome.tau1_min.found && outcome.tau1_min.value < -1e-6;
    criterion(11, "alpha=1 residual sign indeterminacy witnesses", ok,
              fmt("tau1_max=%.4f (state %.0f) tau1_min=%.4f", outcome.tau1_max.value,
                  double(outcome.tau1_max.state_id), outcome.tau1_min.value));
}

} // namespace

int main() {
    criterion_1_w_eof();
    criterion_2_w_residual();
    criterion_3_fig2_anchor();
    criteria_4_5_6_fuzz();
    criterion_7_f_grid();
    criterion_8_oracle_equivalence();
    criterion_9_schmidt_oracle();
    criterion_10_classifier();
    criterion_11_sign_witness();

    if (g_failures == 0) {
        std::printf("acceptance: all criteria passed\n");
    } else {
        std::printf("acceptance: %d criteria FAILED\n", g_failures);
    }
    return g_failures == 0 ? 0 : 1;
}
