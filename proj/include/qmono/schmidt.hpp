#pragma once

#include <array>

#include "qmono/states.hpp"

namespace qmono {

/// Canonical five-amplitude form of a 3-qubit pure state:
/// l0|000> + l1 e^{i phi}|100> + l2|101> + l3|110> + l4|111>,
/// l_i >= 0 and sum l_i^2 = 1.
struct SchmidtParams {
    std::array<double, 5> lambda{};
    double phi = 0.0;
};

/// Angle form of the same family: l0 = cos t0, l1 = sin t0 cos t1,
/// l2 = sin t0 sin t1 cos t2, l3 = sin t0 sin t1 sin t2 cos t3,
/// l4 = sin t0 sin t1 sin t2 sin t3, each t in [0, pi/2].
struct SchmidtAngles {
    std::array<double, 4> theta{};
    double phi = 0.0;
};

/// Expands the sine-product chain; the result is normalized by construction.
SchmidtParams angles_to_params(const SchmidtAngles& angles);

/// Inverts the chain with arccos clamping; a vanishing remaining sine product
/// (below 1e-14) sets the following angles to 0.
SchmidtAngles params_to_angles(const SchmidtParams& params);

/// Builds the 3-qubit state with amplitudes at basis indices {0, 4, 5, 6, 7}.
PureState build_state(const SchmidtParams& params);

struct ClosedFormConcurrences {
    double c_a_bc = 0.0;
    double c_ab = 0.0;
    double c_ac = 0.0;
};

/// C_{A|BC} = 2 l0 sqrt(l2^2 + l3^2 + l4^2), C_AB = 2 l0 l3, C_AC = 2 l0 l2.
/// All three are independent of phi.
ClosedFormConcurrences closed_form_concurrences(const SchmidtParams& params);

/// Alpha-power concurrence residual in angle form:
/// (2 l0)^a sin^a t0 sin^a t1 (1 - cos^a t2 - sin^a t2 cos^a t3).
double residual_closed_form(const SchmidtParams& params, double alpha);

/// Validates l_i >= 0 and sum l_i^2 = 1.
void validate(const SchmidtParams& params);

} // namespace qmono
