#include "qmono/schmidt.hpp"

#include <cmath>
#include <numbers>
#include <string>

#include "qmono/errors.hpp"

namespace qmono {

namespace {

constexpr double kHalfPi = std::numbers::pi / 2.0;
constexpr double kChainEps = 1e-14;

double safe_acos(double x) {
    return std::acos(std::clamp(x, -1.0, 1.0));
}

} // namespace

void validate(const SchmidtParams& params) {
    double sum = 0.0;
    for (double l : params.lambda) {
        if (l < 0.0) {
            throw ValidationError("schmidt params: lambda " + std::to_string(l) +
                                  " negative");
        }
        sum += l * l;
    }
    if (std::abs(sum - 1.0) > 1e-12) {
        throw ValidationError("schmidt params: sum of lambda^2 = " + std::to_string(sum) +
                              ", expected 1");
    }
}

SchmidtParams angles_to_params(const SchmidtAngles& angles) {
    for (double t : angles.theta) {
        if (t < 0.0 || t > kHalfPi + 1e-12) {
            throw DomainError("schmidt angles: theta " + std::to_string(t) +
                              " outside [0, pi/2]");
        }
    }
    const auto& t = angles.theta;
    SchmidtParams p;
    p.phi = angles.phi;
    p.lambda[0] = std::cos(t[0]);
    p.lambda[1] = std::sin(t[0]) * std::cos(t[1]);
    p.lambda[2] = std::sin(t[0]) * std::sin(t[1]) * std::cos(t[2]);
    p.lambda[3] = std::sin(t[0]) * std::sin(t[1]) * std::sin(t[2]) * std::cos(t[3]);
    p.lambda[4] = std::sin(t[0]) * std::sin(t[1]) * std::sin(t[2]) * std::sin(t[3]);
    return p;
}

SchmidtAngles params_to_angles(const SchmidtParams& params) {
    validate(params);
    const auto& l = params.lambda;
    SchmidtAngles a;
    a.phi = params.phi;
    a.theta[0] = safe_acos(l[0]);
    double chain = std::sin(a.theta[0]);
    for (int k = 1; k < 4; ++k) {
        if (chain < kChainEps) {
            a.theta[k] = 0.0;
            continue;
        }
        a.theta[k] = safe_acos(l[k] / chain);
        chain *= std::sin(a.theta[k]);
    }
    return a;
}

PureState build_state(const SchmidtParams& params) {
    validate(params);
    Vector v = Vector::Zero(8);
    v[0] = params.lambda[0];
    v[4] = params.lambda[1] * Complex(std::cos(params.phi), std::sin(params.phi));
    v[5] = params.lambda[2];
    v[6] = params.lambda[3];
    v[7] = params.lambda[4];
    return make_pure_state(3, std::move(v));
}

ClosedFormConcurrences closed_form_concurrences(const SchmidtParams& params) {
    validate(params);
    const auto& l = params.lambda;
    const double rest = std::sqrt(l[2] * l[2] + l[3] * l[3] + l[4] * l[4]);
    // The AB pair picks up the |110> amplitude l3 and the AC pair the |101>
    // amplitude l2 (check the l4 = 0 limit: l0|000> + l3|110> is a pure
    // Bell-like AB state of concurrence 2 l0 l3). The residual below is
    // symmetric in the two, so their assignment only matters here.
    return {2.0 * l[0] * rest, 2.0 * l[0] * l[3], 2.0 * l[0] * l[2]};
}

double residual_closed_form(const SchmidtParams& params, double alpha) {
    const SchmidtAngles a = params_to_angles(params);
    const auto& t = a.theta;
    const double prefactor = std::pow(2.0 * params.lambda[0], alpha) *
                             std::pow(std::sin(t[0]), alpha) *
                             std::pow(std::sin(t[1]), alpha);
    if (prefactor == 0.0) {
        // Degenerate inversion: every concurrence in the residual vanishes.
        return 0.0;
    }
    const double bracket = 1.0 - std::pow(std::cos(t[2]), alpha) -
                           std::pow(std::sin(t[2]), alpha) * std::pow(std::cos(t[3]), alpha);
    return prefactor * bracket;
}

} // namespace qmono
