#include "qmono/monogamy.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <limits>

#include "qmono/errors.hpp"
#include "qmono/measures.hpp"
#include "qmono/tolerances.hpp"

namespace qmono {

namespace {

constexpr double kAlphaSlack = 1e-12;
const double kSqrt2 = std::sqrt(2.0);
constexpr double kNan = std::numeric_limits<double>::quiet_NaN();

void require_at_least_three(const PureState& psi, const char* who) {
    if (psi.n_qubits < 3) {
        throw DimensionError(std::string(who) + ": need at least 3 qubits, got " +
                             std::to_string(psi.n_qubits));
    }
}

void require_exactly_three(const PureState& psi, const char* who) {
    if (psi.n_qubits != 3) {
        throw DimensionError(std::string(who) + ": need exactly 3 qubits, got " +
                             std::to_string(psi.n_qubits));
    }
}

void require_focus(const PureState& psi, int a, const char* who) {
    if (a < 0 || a >= psi.n_qubits) {
        throw DimensionError(std::string(who) + ": focus qubit " + std::to_string(a) +
                             " out of range");
    }
}

std::vector<int> rest_of(const PureState& psi, int a) {
    std::vector<int> rest;
    for (int q = 0; q < psi.n_qubits; ++q) {
        if (q != a) rest.push_back(q);
    }
    return rest;
}

CheckResult closed_form_result(std::string id, double alpha, double lhs, double rhs,
                               double margin) {
    CheckResult r;
    r.theorem_id = std::move(id);
    r.alpha = alpha;
    r.lhs = lhs;
    r.rhs = rhs;
    r.margin = margin;
    r.tolerance = tolerance_for(r.theorem_id);
    r.pass = margin >= -r.tolerance;
    r.verdict = r.pass ? Verdict::pass : Verdict::violation;
    r.strict = margin > tol::strictness;
    return r;
}

} // namespace

double tolerance_for(const std::string& theorem_id) {
    if (theorem_id == "t5" || theorem_id == "t6ii") {
        return tol::optimizer;
    }
    return tol::closed_form;
}

CheckResult check_ckw(const PureState& psi, int a) {
    require_at_least_three(psi, "check_ckw");
    require_focus(psi, a, "check_ckw");
    const double c = concurrence_pure(psi, bipartition({a}, psi.n_qubits)).value;
    double rhs = 0.0;
    for (int b : rest_of(psi, a)) {
        const double c_ab = concurrence_2q(reduce(psi, {a, b})).value;
        rhs += c_ab * c_ab;
    }
    return closed_form_result("ckw", kNan, c * c, rhs, c * c - rhs);
}

CheckResult check_dual_ckw(const PureState& psi, int a) {
    require_at_least_three(psi, "check_dual_ckw");
    require_focus(psi, a, "check_dual_ckw");
    const double c = concurrence_pure(psi, bipartition({a}, psi.n_qubits)).value;
    double rhs = 0.0;
    bool rank_flag = false;
    for (int b : rest_of(psi, a)) {
        const MeasureValue coa = coa_2q(reduce(psi, {a, b}));
        rank_flag |= !coa.exact;
        rhs += coa.value * coa.value;
    }
    CheckResult r = closed_form_result("dual_ckw", kNan, c * c, rhs, rhs - c * c);
    r.rank_flag = rank_flag;
    return r;
}

std::vector<CheckResult> check_theorem1(const PureState& psi, int a,
                                        const std::vector<double>& alphas) {
    require_at_least_three(psi, "check_theorem1");
    require_focus(psi, a, "check_theorem1");
    for (double alpha : alphas) {
        if (alpha < 2.0 - kAlphaSlack) {
            throw DomainError("check_theorem1: alpha " + std::to_string(alpha) +
                              " below regime bound 2");
        }
    }
    const double c = concurrence_pure(psi, bipartition({a}, psi.n_qubits)).value;
    std::vector<double> pairwise;
    for (int b : rest_of(psi, a)) {
        pairwise.push_back(concurrence_2q(reduce(psi, {a, b})).value);
    }
    std::vector<CheckResult> results;
    for (double alpha : alphas) {
        double rhs = 0.0;
        for (double c_ab : pairwise) rhs += std::pow(c_ab, alpha);
        const double lhs = std::pow(c, alpha);
        results.push_back(closed_form_result("t1", alpha, lhs, rhs, lhs - rhs));
    }
    return results;
}

std::vector<CheckResult> check_theorem1(const DensityMatrix& rho, int a,
                                        const std::vector<double>& alphas) {
    const EigenResult eig = hermitian_eig(rho.matrix);
    const double top = eig.values[eig.values.size() - 1];
    if (top < 1.0 - 1e-10) {
        throw ValidationError(
            "check_theorem1: mixed-state input with purity defect " +
            std::to_string(1.0 - top) +
            "; the bipartite concurrence is only computable for pure inputs");
    }
    const int n = rho.n_qubits();
    Vector amps = eig.vectors.col(eig.values.size() - 1);
    return check_theorem1(make_pure_state(n, std::move(amps)), a, alphas);
}

std::vector<CheckResult> check_theorem2(const PureState& psi, int a,
                                        const std::vector<double>& alphas) {
    require_at_least_three(psi, "check_theorem2");
    require_focus(psi, a, "check_theorem2");
    for (double alpha : alphas) {
        if (alpha > kAlphaSlack) {
            throw DomainError("check_theorem2: alpha " + std::to_string(alpha) +
                              " above regime bound 0");
        }
    }
    const double c = concurrence_pure(psi, bipartition({a}, psi.n_qubits)).value;
    std::vector<double> pairwise;
    for (int b : rest_of(psi, a)) {
        const double c_ab = concurrence_2q(reduce(psi, {a, b})).value;
        if (c_ab > tol::zero_concurrence) pairwise.push_back(c_ab);
    }
    std::vector<CheckResult> results;
    for (double alpha : alphas) {
        if (pairwise.empty()) {
            CheckResult r;
            r.theorem_id = "t2";
            r.alpha = alpha;
            r.lhs = r.rhs = r.margin = kNan;
            r.tolerance = tolerance_for("t2");
            r.pass = true;
            r.verdict = Verdict::pass;
            r.vacuous = true;
            results.push_back(std::move(r));
            continue;
        }
        const double lhs = std::pow(c, alpha);
        double rhs = 0.0;
        for (double c_ab : pairwise) rhs += std::pow(c_ab, alpha);
        results.push_back(closed_form_result("t2", alpha, lhs, rhs, rhs - lhs));
    }
    return results;
}

std::vector<CheckResult> check_theorem4(const PureState& psi, int a,
                                        const std::vector<double>& alphas) {
    require_at_least_three(psi, "check_theorem4");
    require_focus(psi, a, "check_theorem4");
    for (double alpha : alphas) {
        if (alpha < kSqrt2 - kAlphaSlack) {
            throw DomainError("check_theorem4: alpha " + std::to_string(alpha) +
                              " below regime bound sqrt(2)");
        }
    }
    const double e = eof_pure(psi, bipartition({a}, psi.n_qubits)).value;
    std::vector<double> pairwise;
    for (int b : rest_of(psi, a)) {
        pairwise.push_back(eof_2q(reduce(psi, {a, b})).value);
    }
    std::vector<CheckResult> results;
    for (double alpha : alphas) {
        double rhs = 0.0;
        for (double e_ab : pairwise) rhs += std::pow(e_ab, alpha);
        const double lhs = std::pow(e, alpha);
        results.push_back(closed_form_result("t4", alpha, lhs, rhs, lhs - rhs));
    }
    return results;
}

CheckResult check_theorem5(const PureState& psi, int a, const RoofConfig& cfg,
                           Execution exec) {
    require_at_least_three(psi, "check_theorem5");
    require_focus(psi, a, "check_theorem5");
    const double lhs = eof_pure(psi, bipartition({a}, psi.n_qubits)).value;
    double rhs = 0.0;
    for (int b : rest_of(psi, a)) {
        rhs += eoa_lower(reduce(psi, {a, b}), cfg, exec).value;
    }
    CheckResult r;
    r.theorem_id = "t5";
    r.alpha = kNan;
    r.lhs = lhs;
    r.rhs = rhs;
    r.margin = rhs - lhs;
    r.tolerance = tolerance_for("t5");
    r.pass = r.margin >= -r.tolerance;
    // The right side is made of lower bounds: a shortfall is inconclusive,
    // never a violation.
    r.verdict = r.pass ? Verdict::pass : Verdict::inconclusive;
    r.strict = r.margin > tol::strictness;
    return r;
}

std::vector<CheckResult> check_theorem6(const PureState& psi, int a,
                                        const std::vector<double>& alphas,
                                        const RoofConfig& cfg, Execution exec) {
    require_exactly_three(psi, "check_theorem6");
    require_focus(psi, a, "check_theorem6");
    for (double alpha : alphas) {
        if (alpha < kSqrt2 - kAlphaSlack) {
            throw DomainError("check_theorem6: alpha " + std::to_string(alpha) +
                              " below regime bound sqrt(2)");
        }
    }
    const double tau = three_tangle(psi, a).value;
    const double f_tau = f_of(std::clamp(tau, 0.0, 1.0));

    std::vector<CheckResult> results;
    for (double alpha : alphas) {
        const double tau_e = residual_eof(psi, a, alpha).value;
        results.push_back(closed_form_result("t6i", alpha, tau_e,
                                             std::pow(f_tau, alpha),
                                             tau_e - std::pow(f_tau, alpha)));
        // Squared-f variant of the same bound. It is implied by t6i for
        // alpha <= 2 but genuinely fails beyond (generalized GHZ states give
        // tau_e = E^alpha < E^2 = f^2(tau)), so a negative margin here is
        // reported, not treated as a violation.
        CheckResult f2 = closed_form_result("t6i_f2", alpha, tau_e, f_tau * f_tau,
                                            tau_e - f_tau * f_tau);
        if (!f2.pass) f2.verdict = Verdict::inconclusive;
        results.push_back(std::move(f2));
    }
    for (int b : rest_of(psi, a)) {
        const DensityMatrix rho_ab = reduce(psi, {a, b});
        const double e_ab = eof_2q(rho_ab).value;
        const double ea = eoa_lower(rho_ab, cfg, exec).value;
        for (double alpha : alphas) {
            const double lhs = std::pow(ea, alpha);
            const double rhs = std::pow(e_ab, alpha) + std::pow(f_tau, alpha);
            CheckResult r;
            r.theorem_id = "t6ii";
            r.alpha = alpha;
            r.lhs = lhs;
            r.rhs = rhs;
            r.margin = lhs - rhs;
            r.tolerance = tolerance_for("t6ii");
            r.pass = r.margin >= -r.tolerance;
            r.verdict = r.pass ? Verdict::pass : Verdict::inconclusive;
            r.strict = r.margin > tol::strictness;
            r.witness = "partner=" + std::to_string(b);
            results.push_back(std::move(r));
        }
    }
    return results;
}

double eoa_bound(const PureState& psi, int a, int partner, double alpha) {
    require_exactly_three(psi, "eoa_bound");
    require_focus(psi, a, "eoa_bound");
    require_focus(psi, partner, "eoa_bound");
    if (partner == a) {
        throw DimensionError("eoa_bound: partner equals focus");
    }
    if (alpha < kSqrt2 - kAlphaSlack) {
        throw DomainError("eoa_bound: alpha " + std::to_string(alpha) +
                          " below regime bound sqrt(2)");
    }
    const double e_ab = eof_2q(reduce(psi, {a, partner})).value;
    const double tau = std::clamp(three_tangle(psi, a).value, 0.0, 1.0);
    return std::pow(std::pow(e_ab, alpha) + std::pow(f_of(tau), alpha), 1.0 / alpha);
}

std::string to_string(Pure3Class label) {
    switch (label) {
        case Pure3Class::separable_a_bc: return "separable_A|BC";
        case Pure3Class::separable_b_ac: return "separable_B|AC";
        case Pure3Class::separable_c_ab: return "separable_C|AB";
        case Pure3Class::fully_product: return "fully_product";
        case Pure3Class::genuine: return "genuine";
        case Pure3Class::undetermined: return "undetermined";
    }
    return "undetermined";
}

ClassifyOutcome classify_pure3(const PureState& psi, const std::vector<double>& alpha_grid) {
    require_exactly_three(psi, "classify_pure3");
    bool has_two = false;
    bool has_above = false;
    for (double alpha : alpha_grid) {
        if (std::abs(alpha - 2.0) < 1e-9) has_two = true;
        if (alpha > 2.0 + 1e-9) has_above = true;
        if (alpha < 2.0 - kAlphaSlack) {
            throw DomainError("classify_pure3: alpha " + std::to_string(alpha) +
                              " below 2");
        }
    }
    if (!has_two || !has_above) {
        throw DomainError("classify_pure3: grid must contain alpha = 2 and one alpha > 2");
    }

    ClassifyOutcome out;
    double max_at_two = 0.0;
    for (int focus = 0; focus < 3; ++focus) {
        for (double alpha : alpha_grid) {
            const double tau = residual_concurrence(psi, focus, alpha).value;
            out.residuals.push_back({focus, alpha, tau});
            out.max_residual = std::max(out.max_residual, tau);
            if (std::abs(alpha - 2.0) < 1e-9) {
                max_at_two = std::max(max_at_two, tau);
            }
        }
    }

    int pure_count = 0;
    std::array<bool, 3> pure_focus{false, false, false};
    for (int q = 0; q < 3; ++q) {
        const double purity = reduce(psi, {q}).matrix.squaredNorm();
        if (purity > 1.0 - tol::pure_reduction) {
            pure_focus[q] = true;
            ++pure_count;
        }
    }

    if (pure_count >= 2) {
        out.label = Pure3Class::fully_product;
    } else if (pure_count == 1) {
        out.label = pure_focus[0]   ? Pure3Class::separable_a_bc
                    : pure_focus[1] ? Pure3Class::separable_b_ac
                                    : Pure3Class::separable_c_ab;
    } else if (out.max_residual > tol::classifier) {
        out.label = Pure3Class::genuine;
        out.detected_above_2_only = max_at_two <= tol::classifier;
    } else {
        out.label = Pure3Class::undetermined;
    }
    return out;
}

bool has_violation(const std::vector<CheckResult>& results) {
    return std::any_of(results.begin(), results.end(), [](const CheckResult& r) {
        return r.verdict == Verdict::violation;
    });
}

} // namespace qmono
