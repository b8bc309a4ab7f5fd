#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <numbers>

#include "qmono/errors.hpp"
#include "qmono/measures.hpp"
#include "qmono/schmidt.hpp"

using namespace qmono;

namespace {

constexpr double kPi = std::numbers::pi;

SchmidtAngles random_angles(Rng& rng, bool with_phase = true) {
    SchmidtAngles a;
    for (double& t : a.theta) t = rng.uniform(0.0, kPi / 2.0);
    a.phi = with_phase ? rng.uniform(0.0, 2.0 * kPi) : 0.0;
    return a;
}

} // namespace

TEST_CASE("angles_to_params chain") {
    SchmidtAngles zero;
    const SchmidtParams p0 = angles_to_params(zero);
    CHECK(p0.lambda[0] == 1.0);
    for (int i = 1; i < 5; ++i) CHECK(p0.lambda[i] == 0.0);

    SchmidtAngles top;
    top.theta = {kPi / 2.0, 0.0, 0.0, 0.0};
    const SchmidtParams p1 = angles_to_params(top);
    CHECK(std::abs(p1.lambda[0]) <= 1e-15);
    CHECK(p1.lambda[1] == doctest::Approx(1.0).epsilon(1e-15));

    SchmidtAngles quarter;
    quarter.theta = {kPi / 4.0, kPi / 4.0, kPi / 4.0, kPi / 4.0};
    const SchmidtParams p2 = angles_to_params(quarter);
    CHECK(p2.lambda[0] == doctest::Approx(std::sqrt(2.0) / 2.0).epsilon(1e-15));
    CHECK(p2.lambda[1] == doctest::Approx(0.5).epsilon(1e-15));
    CHECK(p2.lambda[2] == doctest::Approx(std::sqrt(2.0) / 4.0).epsilon(1e-15));
    CHECK(p2.lambda[3] == doctest::Approx(0.25).epsilon(1e-15));
    CHECK(p2.lambda[4] == doctest::Approx(0.25).epsilon(1e-15));

    SchmidtAngles bad;
    bad.theta[0] = -0.1;
    CHECK_THROWS_AS(angles_to_params(bad), DomainError);

    // Normalization is structural.
    Rng rng(5);
    for (int trial = 0; trial < 1000; ++trial) {
        const SchmidtParams p = angles_to_params(random_angles(rng));
        double sum = 0.0;
        for (double l : p.lambda) sum += l * l;
        CHECK(std::abs(sum - 1.0) <= 1e-15);
    }
}

TEST_CASE("params_to_angles inverts the chain") {
    Rng rng(6);
    for (int trial = 0; trial < 1000; ++trial) {
        const SchmidtAngles a = random_angles(rng);
        const SchmidtParams p = angles_to_params(a);
        const SchmidtAngles back = params_to_angles(p);
        const SchmidtParams again = angles_to_params(back);
        // arccos loses digits near the chain boundaries; 1e-9 is what the
        // residual agreement below actually needs.
        for (int i = 0; i < 5; ++i) {
            CHECK(std::abs(again.lambda[i] - p.lambda[i]) <= 1e-9);
        }
    }
    // Degenerate chain: remaining sines vanish, trailing angles default to 0.
    SchmidtParams pure;
    pure.lambda = {1.0, 0.0, 0.0, 0.0, 0.0};
    const SchmidtAngles a = params_to_angles(pure);
    CHECK(a.theta[0] == 0.0);
    CHECK(a.theta[1] == 0.0);
}

TEST_CASE("build_state places amplitudes at indices 0,4,5,6,7") {
    SchmidtParams pure;
    pure.lambda = {1.0, 0.0, 0.0, 0.0, 0.0};
    const PureState zero = build_state(pure);
    CHECK(zero.amplitudes[0] == Complex(1.0, 0.0));

    SchmidtParams ghz;
    ghz.lambda = {1.0 / std::sqrt(2.0), 0.0, 0.0, 0.0, 1.0 / std::sqrt(2.0)};
    const PureState g = build_state(ghz);
    CHECK((g.amplitudes - named_state("ghz3").amplitudes).cwiseAbs().maxCoeff() <= 1e-15);

    SchmidtParams w_like;
    w_like.lambda = {1.0 / std::sqrt(3.0), 0.0, 1.0 / std::sqrt(3.0),
                     1.0 / std::sqrt(3.0), 0.0};
    const PureState s = build_state(w_like);
    CHECK(std::abs(concurrence_2q(reduce(s, {0, 1})).value - 2.0 / 3.0) <= 1e-12);
    CHECK(std::abs(concurrence_2q(reduce(s, {0, 2})).value - 2.0 / 3.0) <= 1e-12);

    // The phase sits on the |100> amplitude only.
    SchmidtParams phased;
    phased.lambda = {0.6, 0.8, 0.0, 0.0, 0.0};
    phased.phi = 1.25;
    const PureState t = build_state(phased);
    CHECK(std::abs(std::arg(t.amplitudes[4]) - 1.25) <= 1e-12);
    CHECK(std::abs(std::abs(t.amplitudes[4]) - 0.8) <= 1e-15);

    SchmidtParams bad;
    bad.lambda = {1.0, 0.5, 0.0, 0.0, 0.0};
    CHECK_THROWS_AS(build_state(bad), ValidationError);
    bad.lambda = {-1.0, 0.0, 0.0, 0.0, 0.0};
    CHECK_THROWS_AS(build_state(bad), ValidationError);
}

TEST_CASE("closed-form concurrences") {
    SchmidtParams nolambda0;
    nolambda0.lambda = {0.0, 1.0 / std::sqrt(2.0), 0.5, 0.5, 0.0};
    const ClosedFormConcurrences z = closed_form_concurrences(nolambda0);
    CHECK(z.c_a_bc == 0.0);
    CHECK(z.c_ab == 0.0);
    CHECK(z.c_ac == 0.0);

    SchmidtParams ghz;
    ghz.lambda = {1.0 / std::sqrt(2.0), 0.0, 0.0, 0.0, 1.0 / std::sqrt(2.0)};
    const ClosedFormConcurrences g = closed_form_concurrences(ghz);
    CHECK(g.c_a_bc == doctest::Approx(1.0).epsilon(1e-15));
    CHECK(g.c_ab == 0.0);
    CHECK(g.c_ac == 0.0);

    SchmidtParams w_like;
    w_like.lambda = {1.0 / std::sqrt(3.0), 0.0, 1.0 / std::sqrt(3.0),
                     1.0 / std::sqrt(3.0), 0.0};
    const ClosedFormConcurrences w = closed_form_concurrences(w_like);
    CHECK(w.c_ab == doctest::Approx(2.0 / 3.0).epsilon(1e-15));
    CHECK(w.c_ac == doctest::Approx(2.0 / 3.0).epsilon(1e-15));
    CHECK(w.c_a_bc ==
          doctest::Approx(2.0 / std::sqrt(3.0) * std::sqrt(2.0 / 3.0)).epsilon(1e-15));
}

TEST_CASE("constructed states match their closed-form concurrences") {
    Rng rng(99);
    double worst = 0.0;
    for (int trial = 0; trial < 2000; ++trial) {
        Rng child = rng.split(trial);
        const SchmidtParams p = angles_to_params(random_angles(child));
        const PureState psi = build_state(p);
        const ClosedFormConcurrences cf = closed_form_concurrences(p);
        worst = std::max(worst, std::abs(concurrence_pure(psi, bipartition({0}, 3)).value -
                                         cf.c_a_bc));
        worst = std::max(worst,
                         std::abs(concurrence_2q(reduce(psi, {0, 1})).value - cf.c_ab));
        worst = std::max(worst,
                         std::abs(concurrence_2q(reduce(psi, {0, 2})).value - cf.c_ac));
    }
    CHECK(worst <= 1e-10);
}

TEST_CASE("phi leaves all three concurrences unchanged") {
    Rng rng(101);
    for (int trial = 0; trial < 200; ++trial) {
        Rng child = rng.split(trial);
        SchmidtAngles a = random_angles(child, false);
        const SchmidtParams base = angles_to_params(a);
        a.phi = child.uniform(0.0, 2.0 * kPi);
        const SchmidtParams rotated = angles_to_params(a);

        const PureState psi0 = build_state(base);
        const PureState psi1 = build_state(rotated);
        CHECK(std::abs(concurrence_pure(psi0, bipartition({0}, 3)).value -
                       concurrence_pure(psi1, bipartition({0}, 3)).value) <= 1e-10);
        CHECK(std::abs(concurrence_2q(reduce(psi0, {0, 1})).value -
                       concurrence_2q(reduce(psi1, {0, 1})).value) <= 1e-10);
        CHECK(std::abs(concurrence_2q(reduce(psi0, {0, 2})).value -
                       concurrence_2q(reduce(psi1, {0, 2})).value) <= 1e-10);
    }
}

TEST_CASE("residual closed form matches the numerical residual") {
    SchmidtParams ghz;
    ghz.lambda = {1.0 / std::sqrt(2.0), 0.0, 0.0, 0.0, 1.0 / std::sqrt(2.0)};
    CHECK(std::abs(residual_closed_form(ghz, 3.0) - 1.0) <= 1e-12);

    SchmidtParams w_like;
    w_like.lambda = {1.0 / std::sqrt(3.0), 0.0, 1.0 / std::sqrt(3.0),
                     1.0 / std::sqrt(3.0), 0.0};
    CHECK(std::abs(residual_closed_form(w_like, 2.0)) <= 1e-12);

    Rng rng(103);
    for (int trial = 0; trial < 500; ++trial) {
        Rng child = rng.split(trial);
        const SchmidtParams p = angles_to_params(random_angles(child));
        const PureState psi = build_state(p);
        for (double alpha : {2.0, 2.5, 3.0, 1.0, 0.5}) {
            const double closed = residual_closed_form(p, alpha);
            const double numeric = residual_concurrence(psi, 0, alpha).value;
            CHECK(std::abs(closed - numeric) <= 1e-9);
        }
        // Algebraic identity at alpha = 2.
        const ClosedFormConcurrences cf = closed_form_concurrences(p);
        const double tau2 = cf.c_a_bc * cf.c_a_bc - cf.c_ab * cf.c_ab - cf.c_ac * cf.c_ac;
        CHECK(std::abs(residual_closed_form(p, 2.0) - tau2) <= 1e-12);
    }
}

TEST_CASE("residual sign regimes") {
    Rng rng(105);
    bool saw_positive_alpha1 = false;
    bool saw_negative_alpha1 = false;
    for (int trial = 0; trial < 2000; ++trial) {
        Rng child = rng.split(trial);
        // Interior draws keep every concurrence strictly positive.
        SchmidtAngles a;
        for (double& t : a.theta) t = child.uniform(0.1, kPi / 2.0 - 0.1);
        a.phi = 0.0;
        const SchmidtParams p = angles_to_params(a);

        CHECK(residual_closed_form(p, 2.0) >= -1e-12);
        CHECK(residual_closed_form(p, 3.0) >= -1e-12);
        CHECK(residual_closed_form(p, -1.0) < 1e-12);
        CHECK(residual_closed_form(p, 0.0) < 1e-12);

        const double tau1 = residual_closed_form(p, 1.0);
        if (tau1 > 1e-6) saw_positive_alpha1 = true;
        if (tau1 < -1e-6) saw_negative_alpha1 = true;
    }
    // For alpha between 0 and 2 the sign genuinely goes both ways.
    CHECK(saw_positive_alpha1);
    CHECK(saw_negative_alpha1);
}
