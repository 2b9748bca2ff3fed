#include "doctest.h"

#include <cmath>

#include "analytics.hpp"
#include "engine.hpp"
#include "oracles.hpp"

using namespace ric;
using namespace ric::analytics;

namespace {

ModelParams from(const oracle::BruteParams& p) {
    return {p.omega_s, p.omega_a, p.jxx, p.jyy, p.jzz, p.beta1, p.beta2, p.tau};
}

ModelParams ec_resonant(double jxy, double jzz, double omega, double beta, double tau) {
    return {omega, omega, jxy, jxy, jzz, beta, beta, tau};
}

double p_ancilla(const ModelParams& params) {
    return gibbs_ancilla(params.beta1, params.omega_a).p;
}

}  // namespace

TEST_CASE("eta vanishes at the full-swap point") {
    // 2 Jxy tau = pi/2: sin^2 = 1 and the prefactor is exactly 1
    CHECK(std::abs(eta_exact(ec_resonant(1.0, 0.0, 1.0, 1.0, M_PI / 4))) < 1e-12);
}

TEST_CASE("eta at the long-collision settings scanned in the dephasing sweep") {
    CHECK(eta_exact(ec_resonant(1.0, 0.0, 1.0, 1.0, 10.0)) ==
          doctest::Approx(0.166530969173869).epsilon(1e-12));
    double at_dip = eta_exact(ec_resonant(1.0, 0.4, 1.0, 1.0, 10.0));
    CHECK(at_dip == doctest::Approx(0.039028000738853263).epsilon(1e-12));
    // weak dephasing accelerates relaxation here
    CHECK(at_dip < eta_exact(ec_resonant(1.0, 0.0, 1.0, 1.0, 10.0)));
}

TEST_CASE("eta_ec_resonant equals eta_exact on its domain") {
    oracle::Rng rng(61);
    for (int trial = 0; trial < 30; ++trial) {
        ModelParams params = ec_resonant(rng.uniform(0, 4), rng.uniform(0, 4),
                                         rng.uniform(0.1, 4), rng.uniform(0, 5),
                                         rng.uniform(0.01, 15));
        CHECK(std::abs(eta_ec_resonant(params) - eta_exact(params)) < 1e-12);
    }

    ModelParams off_domain{1.0, 1.0, 1.0, 0.5, 0.0, 1.0, 1.0, 1.0};
    try {
        eta_ec_resonant(off_domain);
        FAIL("expected DomainViolation");
    } catch (const Error& e) {
        CHECK(e.code() == ErrorCode::domain_violation);
    }
}

TEST_CASE("large-Jzz form: sine zeros, suppression and closeness to exact") {
    ModelParams at_zero{1.0, 1.0, 1.0, 0.4, M_PI, 1.0, 1.0, 2.0};  // Jzz tau = 2 pi
    CHECK(eta_large_jzz(at_zero).value == doctest::Approx(1.0).epsilon(1e-12));

    ModelParams strong{1.0, 1.0, 1.0, 1.0, 50.0, 1.0, 1.0, 1.0};
    RegimeValue approx = eta_large_jzz(strong);
    CHECK(std::abs(eta_exact(strong) - approx.value) <= 0.02);
    CHECK(approx.quality == doctest::Approx(1.0 / 50.0));

    for (double jzz : {200.0, 500.0, 2000.0}) {
        ModelParams p{1.0, 1.0, 1.0, 1.0, jzz, 1.0, 1.0, 1.0};
        CHECK(std::abs(eta_large_jzz(p).value - 1.0) <= 4.0 / (jzz * jzz) * 2);
    }

    ModelParams no_dephasing{1, 1, 1, 1, 0.0, 1, 1, 1};
    try {
        eta_large_jzz(no_dephasing);
        FAIL("expected DivisionByZero");
    } catch (const Error& e) {
        CHECK(e.code() == ErrorCode::division_by_zero);
    }
}

TEST_CASE("tau^4 series of eta") {
    // tau -> 0 limit
    ModelParams tiny{1.0, 0.8, 1.3, 0.7, 0.9, 1.7, 1.7, 1e-12};
    CHECK(eta_series_tau4(tiny).value == doctest::Approx(1.0).epsilon(1e-15));

    // energy-conserving resonant reduction of the quartic coefficient
    oracle::Rng rng(67);
    for (int trial = 0; trial < 10; ++trial) {
        double jxy = rng.uniform(0.1, 3), jzz = rng.uniform(0, 3);
        double tau = rng.uniform(0.01, 0.4);
        ModelParams params = ec_resonant(jxy, jzz, rng.uniform(0.1, 3), 1.0, tau);
        double expected = 1.0 - 4 * jxy * jxy * tau * tau +
                          (16.0 / 3.0) * std::pow(jxy, 4) * std::pow(tau, 4) +
                          (4.0 / 3.0) * jxy * jxy * jzz * jzz * std::pow(tau, 4);
        CHECK(eta_series_tau4(params).value == doctest::Approx(expected).epsilon(1e-13));
    }

    // Truncation error shrinks at least as tau^5 under halving (the measured
    // factor is ~2^6 since eta is even in tau).
    ModelParams generic{1.1, 0.8, 1.3, 0.7, 0.9, 1.7, 1.7, 1e-2};
    ModelParams halved = generic;
    halved.tau = 5e-3;
    double r1 = std::abs(eta_exact(generic) - eta_series_tau4(generic).value);
    double r2 = std::abs(eta_exact(halved) - eta_series_tau4(halved).value);
    CHECK(r1 < 1e-9);
    CHECK(r1 / r2 >= 16.0);
    CHECK(r1 / r2 == doctest::Approx(64.0).epsilon(0.5));
}

TEST_CASE("Jtau1 eta coincides with the exact coefficient at the EC resonant point") {
    oracle::Rng rng(71);
    for (int trial = 0; trial < 20; ++trial) {
        ModelParams params = ec_resonant(rng.uniform(0, 3), rng.uniform(0, 3),
                                         rng.uniform(0.1, 3), rng.uniform(0, 5),
                                         rng.uniform(0.01, 12));
        CHECK(std::abs(eta_jtau1(params).value - eta_exact(params)) < 1e-12);
    }
}

TEST_CASE("Jtau1 equal-coupling value at the sine maximum") {
    // sqrt(5) J tau = pi/2 -> eta = 1 - 4/5
    double j = 1e-3;
    double tau = M_PI / (2 * std::sqrt(5.0) * j);
    ModelParams params{1.0, 1.0, j, j, j, 1.0, 1.0, tau};
    CHECK(eta_jtau1(params).value == doctest::Approx(0.2).epsilon(1e-12));
    CHECK(eta_jtau1(params).quality < 0.01);
}

TEST_CASE("dephasing alternately accelerates and slows relaxation in Jtau1") {
    double j = 1e-3;
    ModelParams base{1.0, 1.0, j, j, j, 1.0, 1.0, 1.0};
    int sign_changes = 0;
    double previous = 0.0;
    for (int i = 1; i <= 400; ++i) {
        base.tau = i * (2 * M_PI / j) / 400;
        double d = eta_jtau1(base).value - eta0_jtau1(base).value;
        if (i > 1 && d * previous < 0) ++sign_changes;
        previous = d;
    }
    CHECK(sign_changes >= 4);
}

TEST_CASE("steady state equals the ancilla population when Jxx == Jyy") {
    oracle::Rng rng(73);
    for (int trial = 0; trial < 20; ++trial) {
        double jxy = rng.uniform(0.05, 4);
        ModelParams params{rng.uniform(0.1, 4), rng.uniform(0.1, 4), jxy, jxy,
                           rng.uniform(0, 4),   rng.uniform(0, 6),   rng.uniform(0, 6),
                           rng.uniform(0.05, 10)};
        params.beta2 = params.beta1;
        CHECK(std::abs(p_infinity(params) - p_ancilla(params)) < 1e-12);
    }
}

TEST_CASE("steady state at infinite temperature is maximally mixed") {
    oracle::Rng rng(79);
    for (int trial = 0; trial < 15; ++trial) {
        ModelParams params = from(rng.params());
        params.beta1 = params.beta2 = 0.0;
        CHECK(std::abs(p_infinity(params) - 0.5) < 1e-12);
    }
}

TEST_CASE("steady state matches the brute-force fixed point") {
    oracle::Rng rng(83);
    int tested = 0;
    while (tested < 8) {
        ModelParams params = from(rng.params());
        double eta = eta_exact(params);
        if (std::abs(eta) > 0.9) continue;  // keep iteration counts modest
        ++tested;

        engine::Collider collider(params);
        QubitState state{0.3, Complex{0, 0}};
        for (int n = 0; n < 2000; ++n) {
            QubitState next = collider.step(state);
            if (std::abs(next.p - state.p) < 1e-15) break;
            state = next;
        }
        CHECK(std::abs(state.p - p_infinity(params)) < 1e-9);
    }
}

TEST_CASE("frozen dynamics has no steady state") {
    // tau sqrt(4 J^2 + Jzz^2) = pi makes the swap amplitude vanish
    ModelParams frozen = ec_resonant(1.0, 1.0, 1.0, 1.0, M_PI / std::sqrt(5.0));
    CHECK(eta_exact(frozen) == doctest::Approx(1.0).epsilon(1e-15));
    try {
        p_infinity(frozen);
        FAIL("expected NoSteadyState");
    } catch (const Error& e) {
        CHECK(e.code() == ErrorCode::no_steady_state);
    }
}

TEST_CASE("psi is a pure phase without couplings") {
    ModelParams free_evolution{1.3, 0.7, 0, 0, 0, 1.0, 1.0, 2.5};
    Complex psi = psi_exact(free_evolution, p_ancilla(free_evolution), 0.4);
    CHECK(std::abs(std::abs(psi) - 1.0) < 1e-14);
}

TEST_CASE("psi reproduces one engine collision") {
    ModelParams params{1.0, 1.0, 1.0, 1.0, 0.7, 1.0, 1.0, 0.9};
    QubitState state{0.6, Complex{0.2, 0.0}};
    QubitState out = engine::Collider(params).step(state);
    Complex psi = psi_exact(params, p_ancilla(params), state.chi());
    CHECK(std::abs(out.c - psi * std::abs(state.c)) < 1e-10);
}

TEST_CASE("the conjugate-phase channel closes when Jxx == Jyy") {
    ModelParams params = ec_resonant(1.1, 0.6, 0.9, 1.4, 3.0);
    params.omega_a = 0.5;  // need not be resonant for this identity
    double p_a = p_ancilla(params);
    Complex a = psi_exact(params, p_a, 0.3) * std::polar(1.0, -0.3);
    Complex b = psi_exact(params, p_a, 1.2) * std::polar(1.0, -1.2);
    CHECK(std::abs(a - b) < 1e-14);
}

TEST_CASE("|psi|^2 closed form matches |psi_exact|^2 on the EC resonant domain") {
    oracle::Rng rng(89);
    for (int trial = 0; trial < 30; ++trial) {
        ModelParams params = ec_resonant(rng.uniform(0, 4), rng.uniform(0, 4),
                                         rng.uniform(0.1, 4), rng.uniform(0, 6),
                                         rng.uniform(0.01, 15));
        Complex psi = psi_exact(params, p_ancilla(params), rng.uniform(-3, 3));
        CHECK(std::abs(psi_sq_ec_resonant(params) - std::norm(psi)) < 1e-12);
    }

    // beta = 0: the (1 - 2 p_a)^2 term drops out
    ModelParams hot = ec_resonant(1.2, 0.8, 1.0, 0.0, 2.0);
    Complex psi_hot = psi_exact(hot, 0.5, 0.0);
    CHECK(std::abs(psi_sq_ec_resonant(hot) - std::norm(psi_hot)) < 1e-13);
}

TEST_CASE("|psi_0|^2 reference at Jzz = 0") {
    oracle::Rng rng(97);
    for (int trial = 0; trial < 10; ++trial) {
        double jxy = rng.uniform(0, 3), tau = rng.uniform(0.01, 10);
        ModelParams params = ec_resonant(jxy, 0.0, rng.uniform(0.1, 3), 1.0, tau);
        double expected = 1.0 - std::pow(std::sin(2 * jxy * tau), 2);
        CHECK(psi_sq_ec_resonant(params) == doctest::Approx(expected).epsilon(1e-12));
    }
}

TEST_CASE("strong-decoherence limit of |psi|^2") {
    ModelParams params = ec_resonant(1.0, 100.0, 1.0, 1.0, 0.37);
    RegimeValue approx = psi_sq_large_jzz(params, p_ancilla(params));
    CHECK(std::abs(psi_sq_ec_resonant(params) - approx.value) <= 0.02);

    // p_a -> 1 freezes decoherence
    CHECK(psi_sq_large_jzz(params, 1.0).value == 1.0);
    // maximally mixed ancillas at the oscillation extremum kill coherence
    ModelParams extremal = ec_resonant(1.0, 1.0, 1.0, 0.0, M_PI / 4);  // 2 Jzz tau = pi/2
    CHECK(psi_sq_large_jzz(extremal, 0.5).value == doctest::Approx(0.0).epsilon(1e-14));
}

TEST_CASE("tau^4 series of |psi|^2") {
    ModelParams tiny = ec_resonant(1.3, 0.9, 1.0, 1.0, 1e-12);
    CHECK(psi_sq_series(tiny, 0.7).value == doctest::Approx(1.0).epsilon(1e-15));

    // the Jzz^2 tau^2 term accelerates decoherence at short times
    ModelParams with_dephasing = ec_resonant(1.0, 1.0, 1.0, 1.0, 0.01);
    ModelParams without = ec_resonant(1.0, 0.0, 1.0, 1.0, 0.01);
    double p_a = p_ancilla(with_dephasing);
    CHECK(psi_sq_series(with_dephasing, p_a).value < psi_sq_series(without, p_a).value);

    ModelParams ec = ec_resonant(1.1, 0.8, 1.0, 1.3, 1e-2);
    ModelParams halved = ec;
    halved.tau = 5e-3;
    double pa = p_ancilla(ec);
    double r1 = std::abs(psi_sq_ec_resonant(ec) - psi_sq_series(ec, pa).value);
    double r2 = std::abs(psi_sq_ec_resonant(halved) - psi_sq_series(halved, pa).value);
    CHECK(r1 < 1e-9);
    CHECK(r1 / r2 >= 16.0);

    ModelParams off{1.0, 1.0, 1.0, 0.5, 0.0, 1.0, 1.0, 1.0};
    CHECK_THROWS_AS(psi_sq_series(off, 0.7), Error);
}

TEST_CASE("Jtau1 form of |psi|^2") {
    // coefficient vanishes at infinite temperature
    double j = 2e-3;
    ModelParams params{1.0, 1.0, j, j, j, 0.0, 0.0, 700.0};
    double half = std::sqrt(std::pow(2 * j, 2) + j * j) * params.tau;
    CHECK(psi_sq_jtau1(params, 0.5).value ==
          doctest::Approx(1.0 - std::pow(std::sin(half), 2)).epsilon(1e-12));

    // equal couplings: 1 - sin^2(sqrt5 J tau) [1 - (1/5)(1-2p)^2]
    double p_a = 0.9;
    double expected = 1.0 - std::pow(std::sin(std::sqrt(5.0) * j * params.tau), 2) *
                                (1.0 - 0.2 * std::pow(1 - 2 * p_a, 2));
    CHECK(psi_sq_jtau1(params, p_a).value == doctest::Approx(expected).epsilon(1e-12));

    // low temperature: tracks the exact modulus over the whole Jtau1 window
    double worst = 0.0;
    ModelParams cold{1.0, 1.0, 1e-3, 1e-3, 1e-3, 10.0, 10.0, 1.0};
    double pa_cold = p_ancilla(cold);
    for (int i = 1; i <= 100; ++i) {
        cold.tau = i * (2 * M_PI / 1e-3) / 100;
        worst = std::max(worst, std::abs(psi_sq_jtau1(cold, pa_cold).value -
                                         psi_sq_ec_resonant(cold)));
    }
    CHECK(worst < 1e-3);
}

TEST_CASE("amplitudes of population and coherence decay match as p_a -> 1") {
    // eta ~ 1 - (4/5) sin^2, |psi|^2 ~ 1 - (4/5) sin^2 at p_a = 1
    double j = 1e-3;
    ModelParams params{1.0, 1.0, j, j, j, 1.0, 1.0, 900.0};
    double eta_amp = 1.0 - eta_jtau1(params).value;
    double psi_amp = 1.0 - psi_sq_jtau1(params, 1.0).value;
    double s2 = std::pow(std::sin(std::sqrt(5.0) * j * params.tau), 2);
    CHECK(eta_amp == doctest::Approx(0.8 * s2).epsilon(1e-10));
    CHECK(psi_amp == doctest::Approx(0.8 * s2).epsilon(1e-10));
}

TEST_CASE("Heisenberg single-bath psi_tilde against a brute-force collision") {
    oracle::Rng rng(101);
    for (int trial = 0; trial < 25; ++trial) {
        oracle::BruteParams bp = rng.params();
        auto [p, c] = rng.state();
        oracle::Mat out = oracle::single_bath_collision(bp, p, c);
        Complex psi = psi_tilde_heisenberg(from(bp), oracle::gibbs_population(bp.beta1, bp.omega_a),
                                           std::arg(c));
        CHECK(std::abs(out(0, 1) - psi * std::abs(c)) < 1e-11);
        CHECK(std::abs(psi) <= 1.0 + 1e-12);
    }
}

TEST_CASE("the two models share the coherence factor at Jzz = 0") {
    oracle::Rng rng(103);
    for (int trial = 0; trial < 20; ++trial) {
        ModelParams params = from(rng.params());
        params.jzz = 0.0;
        double p_a = p_ancilla(params);
        double chi = rng.uniform(-3, 3);
        Complex two_bath = psi_exact(params, p_a, chi);
        Complex single = psi_tilde_heisenberg(params, p_a, chi);
        CHECK(std::abs(std::norm(two_bath) - std::norm(single)) < 1e-12);
    }
}

TEST_CASE("two-bath decoherence is typically slower than the Heisenberg model") {
    ModelParams params = ec_resonant(1.0, 0.0, 1.0, 1.0, 10.0);
    double p_a = p_ancilla(params);
    int at_least = 0, points = 51;
    for (int i = 0; i < points; ++i) {
        params.jzz = 5.0 * i / (points - 1);
        double two_bath = psi_sq_ec_resonant(params);
        double single = std::norm(psi_tilde_heisenberg(params, p_a, 0.0));
        if (two_bath >= single) ++at_least;
    }
    CHECK(static_cast<double>(at_least) / points > 0.8);
}

TEST_CASE("rate constants and their trivial limits") {
    ModelParams params = ec_resonant(1.2, 0.0, 0.9, 1.0, 0.01);
    RateConstants rc = rate_constants(params, 0.7);
    CHECK(rc.gamma == doctest::Approx(1.2 * 1.2 * 0.01).epsilon(1e-15));
    CHECK(rc.gamma_zz == 0.0);
    CHECK(rc.delta == 0.0);
    CHECK(rc.omega_rate == doctest::Approx(0.5 * 0.81 * 0.01).epsilon(1e-15));

    ModelParams off{1.0, 1.0, 1.0, 0.5, 0.0, 1.0, 1.0, 1.0};
    CHECK_THROWS_AS(rate_constants(off, 0.7), Error);
}

TEST_CASE("population rate approaches 4 Gamma in the stroboscopic limit") {
    const double gamma = 0.01;
    double previous_gap = 1.0;
    for (double tau : {1e-2, 1e-3, 1e-4}) {
        double jxy = std::sqrt(gamma / tau);
        ModelParams params = ec_resonant(jxy, 0.8, 1.0, 1.0, tau);
        double rate = (1.0 - eta_exact(params)) / tau;
        double gap = std::abs(rate - 4 * gamma);
        CHECK(gap < previous_gap);
        previous_gap = gap;
    }
    CHECK(previous_gap < 1e-5);
}

TEST_CASE("equation-of-motion coefficients") {
    ModelParams params = ec_resonant(1.3, 0.9, 1.2, 1.5, 0.01);
    double p_a = p_ancilla(params);
    EomCoefficients eom = eom_coefficients(params, p_a);

    // rate-constant form of the population rate equals the tau^4 series
    double series_rate = (1.0 - eta_series_tau4(params).value) / params.tau;
    CHECK(eom.population_rate == doctest::Approx(series_rate).epsilon(1e-12));

    // nonadditive cross term carries -(4/3) Gamma Gamma_zz tau
    RateConstants rc = rate_constants(params, p_a);
    double additive = 4 * rc.gamma - (16.0 / 3.0) * rc.gamma * rc.gamma * params.tau;
    CHECK(eom.population_rate - additive ==
          doctest::Approx(-(4.0 / 3.0) * rc.gamma_zz * rc.gamma * params.tau)
              .epsilon(1e-12));

    // generator reproduces (psi e^{-i chi} - 1)/tau with an O(tau^3) defect
    double previous = 1.0;
    for (double tau : {1e-2, 5e-3, 2.5e-3}) {
        ModelParams p = params;
        p.tau = tau;
        EomCoefficients local = eom_coefficients(p, p_a);
        Complex lhs = (psi_exact(p, p_a, 0.0) - 1.0) / tau;
        Complex gen = local.coherence_linear + local.coherence_tau_correction * tau;
        double defect = std::abs(lhs - gen);
        CHECK(defect < previous);
        previous = defect;
    }
    CHECK(previous < 1e-6);
}

TEST_CASE("closed-form ranges hold over random equal-beta draws") {
    oracle::Rng rng(107);
    for (int trial = 0; trial < 200; ++trial) {
        ModelParams params = from(rng.params());
        double eta = eta_exact(params);
        CHECK(std::abs(eta) <= 1.0 + 1e-12);

        Complex psi = psi_exact(params, p_ancilla(params), rng.uniform(-3, 3));
        CHECK(std::norm(psi) <= 1.0 + 1e-12);
        CHECK(std::norm(psi) >= 0.0);

        if (1.0 - eta >= 1e-12) {
            double p_inf = p_infinity(params);
            CHECK(p_inf >= 0.0);
            CHECK(p_inf <= 1.0);
        }
    }
}

TEST_CASE("|psi|^2 grows monotonically with beta") {
    for (double jzz : {0.0, 1.0, 2.0}) {
        double previous = -1.0;
        for (int i = 0; i <= 100; ++i) {
            double beta = 0.1 + (10.0 - 0.1) * i / 100;
            double value = psi_sq_ec_resonant(ec_resonant(1.0, jzz, 1.0, beta, 0.1));
            CHECK(value >= previous - 1e-12);
            previous = value;
        }
    }
}

TEST_CASE("analytics refuse unequal temperatures") {
    ModelParams unequal{1, 1, 1, 1, 0.5, 1.0, 2.0, 1};
    CHECK_THROWS_AS(eta_exact(unequal), Error);
    CHECK_THROWS_AS(p_infinity(unequal), Error);
    CHECK_THROWS_AS(psi_exact(unequal, 0.7, 0.0), Error);
}
