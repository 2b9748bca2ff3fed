#include "analytics.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

namespace ric::analytics {

namespace {

const Complex kI{0.0, 1.0};

// sin(x)/x with the removable singularity filled in.
double sincn(double x) {
    if (std::abs(x) < 1e-4) {
        double x2 = x * x;
        return 1.0 - x2 / 6.0 + x2 * x2 / 120.0;
    }
    return std::sin(x) / x;
}

// (4 C^2 / lambda^2) sin^2(lambda tau / 2), regular at lambda = 0.
double gap_term(double coupling, double lambda, double tau) {
    double s = sincn(0.5 * lambda * tau);
    return coupling * coupling * tau * tau * s * s;
}

// The two relaxation channels of eta: d1 carries the J- (energy
// non-conserving) terms, d2 the J+ terms. 1 - eta = d1 + d2 and
// (1 - eta) p_inf = (1 - p_a) d1 + p_a d2, both stable near frozen points.
struct EtaChannels {
    double d1, d2;
    double eta() const { return 1.0 - d1 - d2; }
    double p_inf_weighted(double p_a) const { return (1.0 - p_a) * d1 + p_a * d2; }
};

EtaChannels eta_channels(const ModelParams& params, double p_a) {
    const EnergyParams e = energy_params(params);
    const double tau = params.tau;
    EtaChannels ch;
    ch.d1 = gap_term(e.j_minus, e.alpha, tau) * (1.0 - p_a) +
            gap_term(e.j_minus, e.kappa, tau) * p_a;
    ch.d2 = gap_term(e.j_plus, e.nu, tau) * (1.0 - p_a) +
            gap_term(e.j_plus, e.xi, tau) * p_a;
    return ch;
}

double ancilla_population(const ModelParams& params) {
    return gibbs_ancilla(params.beta1, params.omega_a).p;
}

void require_ec_resonant(const ModelParams& params, const char* where) {
    if (params.jxx != params.jyy || params.omega_a != params.omega_s)
        raise(ErrorCode::domain_violation,
              std::string(where) + " requires Jxx == Jyy and omega_a == omega_s");
}

double max_coupling(const ModelParams& params) {
    return std::max({std::abs(params.jxx), std::abs(params.jyy), std::abs(params.jzz)});
}

double max_scale(const ModelParams& params) {
    return std::max({max_coupling(params), params.omega_a, params.omega_s});
}

// Neglected-over-kept ratio for the weak-coupling long-collision regime:
// couplings against the mean frequency, plus the relative detuning.
double jtau1_quality(const ModelParams& params) {
    double mean_omega = 0.5 * (params.omega_a + params.omega_s);
    if (mean_omega <= 0.0) return std::numeric_limits<double>::infinity();
    return max_coupling(params) / mean_omega +
           std::abs(params.omega_a - params.omega_s) / (2.0 * mean_omega);
}

double large_jzz_quality(const ModelParams& params) {
    double kept = std::abs(params.jzz);
    double neglected = std::max({std::abs(params.jxx), std::abs(params.jyy),
                                 params.omega_a, params.omega_s});
    if (kept == 0.0) return std::numeric_limits<double>::infinity();
    return neglected / kept;
}

}  // namespace

double eta_exact(const ModelParams& params) {
    validate_for_analytics(params);
    return eta_channels(params, ancilla_population(params)).eta();
}

double p_infinity(const ModelParams& params) {
    validate_for_analytics(params);
    const double p_a = ancilla_population(params);
    const EtaChannels ch = eta_channels(params, p_a);
    const double denom = ch.d1 + ch.d2;  // = 1 - eta
    if (denom < qmath::tol::frozen_eta)
        raise(ErrorCode::no_steady_state,
              "frozen dynamics: steady state undefined (1 - eta ~ 0)");
    return ch.p_inf_weighted(p_a) / denom;
}

double eta_ec_resonant(const ModelParams& params) {
    validate_for_analytics(params);
    require_ec_resonant(params, "eta_ec_resonant");
    const double jxy = params.jxx;
    const double root = std::hypot(2.0 * jxy, params.jzz);
    const double s = sincn(root * params.tau);
    return 1.0 - 4.0 * jxy * jxy * params.tau * params.tau * s * s;
}

RegimeValue eta_large_jzz(const ModelParams& params) {
    params.validate();
    if (params.jzz == 0.0)
        raise(ErrorCode::division_by_zero, "eta_large_jzz requires Jzz != 0");
    const EnergyParams e = energy_params(params);
    const double s = std::sin(params.jzz * params.tau);
    const double value =
        1.0 - (e.j_plus * e.j_plus + e.j_minus * e.j_minus) / (params.jzz * params.jzz) * s * s;
    return {value, large_jzz_quality(params)};
}

RegimeValue eta_series_tau4(const ModelParams& params) {
    params.validate();
    const double p_a = ancilla_population(params);
    const EnergyParams e = energy_params(params);
    const double t2 = params.tau * params.tau;
    const double jp2 = e.j_plus * e.j_plus, jm2 = e.j_minus * e.j_minus;
    const double quartic = e.alpha * e.alpha * jm2 * (1.0 - p_a) +
                           e.nu * e.nu * jp2 * (1.0 - p_a) +
                           e.kappa * e.kappa * jm2 * p_a + e.xi * e.xi * jp2 * p_a;
    const double value = 1.0 -
                         2.0 * (params.jxx * params.jxx + params.jyy * params.jyy) * t2 +
                         quartic * t2 * t2 / 12.0;
    return {value, params.tau * max_scale(params)};
}

RegimeValue eta_jtau1(const ModelParams& params) {
    params.validate();
    const double jp = params.jxx + params.jyy;
    const double root = std::hypot(jp, params.jzz);
    const double s = sincn(root * params.tau);
    const double value = 1.0 - jp * jp * params.tau * params.tau * s * s;
    return {value, jtau1_quality(params)};
}

RegimeValue eta0_jtau1(const ModelParams& params) {
    ModelParams no_dephasing = params;
    no_dephasing.jzz = 0.0;
    RegimeValue v = eta_jtau1(no_dephasing);
    return {v.value, jtau1_quality(params)};
}

Complex psi_exact(const ModelParams& params, double p_a, double chi) {
    validate_for_analytics(params);
    if (!std::isfinite(chi))
        raise(ErrorCode::validation_error, "psi_exact: chi must be finite");
    const EnergyParams e = energy_params(params);
    const double t2 = 0.5 * params.tau;
    const double wa = params.omega_a, ws = params.omega_s, jzz = params.jzz;

    // cos(lam tau/2) + i k sin(lam tau/2)/lam, with the sinc form absorbing lam.
    auto branch = [&](double lam, double k) {
        return Complex{std::cos(lam * t2), k * t2 * sincn(lam * t2)};
    };

    const double cross = 4.0 * (params.jxx * params.jxx - params.jyy * params.jyy) * t2 * t2;
    const Complex term_conj =
        cross *
        (sincn(e.alpha * t2) * sincn(e.nu * t2) * (1.0 - p_a) +
         sincn(e.kappa * t2) * sincn(e.xi * t2) * p_a) *
        std::exp(-kI * chi);
    const Complex term_plain =
        (branch(e.alpha, 2.0 * jzz + wa + ws) * branch(e.nu, 2.0 * jzz - wa + ws) *
             (1.0 - p_a) +
         branch(e.xi, -(2.0 * jzz + wa - ws)) * branch(e.kappa, -(2.0 * jzz - wa - ws)) *
             p_a) *
        std::exp(kI * chi);
    return term_conj + term_plain;
}

double psi_sq_ec_resonant(const ModelParams& params) {
    validate_for_analytics(params);
    require_ec_resonant(params, "psi_sq_ec_resonant");
    const double p_a = ancilla_population(params);
    const double jxy = params.jxx, jzz = params.jzz, tau = params.tau;
    const double nu = 2.0 * std::hypot(2.0 * jxy, jzz);
    const double half = 0.5 * nu * tau;
    const double s = std::sin(half), co = std::cos(half);
    // (2 Jzz / nu) sin(nu tau / 2) as a regular sinc form.
    const double b = jzz * tau * sincn(half);
    const double g = p_a * (1.0 - p_a);
    const double sz = std::sin(tau * jzz);
    return 1.0 - s * s + (1.0 - 2.0 * p_a) * (1.0 - 2.0 * p_a) * b * b -
           4.0 * g * sz * sz * (1.0 - (b * b + s * s)) -
           4.0 * g * b * co * std::sin(2.0 * tau * jzz);
}

RegimeValue psi_sq_large_jzz(const ModelParams& params, double p_a) {
    params.validate();
    const double s = std::sin(2.0 * params.jzz * params.tau);
    return {1.0 - 4.0 * p_a * (1.0 - p_a) * s * s, large_jzz_quality(params)};
}

RegimeValue psi_sq_series(const ModelParams& params, double p_a) {
    params.validate();
    if (params.jxx != params.jyy)
        raise(ErrorCode::domain_violation, "psi_sq_series requires Jxx == Jyy");
    const double j2 = params.jxx * params.jxx;
    const double z2 = params.jzz * params.jzz;
    const double g = p_a * (1.0 - p_a);
    const double t2 = params.tau * params.tau;
    const double value = 1.0 - 4.0 * j2 * t2 - 16.0 * z2 * g * t2 +
                         (64.0 / 3.0) * t2 * t2 * g * z2 * (2.0 * j2 + z2) +
                         (16.0 / 3.0) * j2 * j2 * t2 * t2 +
                         (4.0 / 3.0) * j2 * z2 * t2 * t2;
    return {value, params.tau * max_scale(params)};
}

RegimeValue psi_sq_jtau1(const ModelParams& params, double p_a) {
    params.validate();
    const double jp = params.jxx + params.jyy;
    const double half = std::hypot(jp, params.jzz) * params.tau;  // nu tau / 2
    const double s = std::sin(half);
    const double b = params.jzz * params.tau * sincn(half);  // (2 Jzz/nu) sin(nu tau/2)
    const double w = (1.0 - 2.0 * p_a) * (1.0 - 2.0 * p_a);
    return {1.0 - s * s + b * b * w, jtau1_quality(params)};
}

HeisenbergEnergyParams heisenberg_energy_params(const ModelParams& params) {
    return {std::hypot(2.0 * (params.jxx + params.jyy), params.omega_a - params.omega_s),
            std::hypot(2.0 * (params.jxx - params.jyy), params.omega_a + params.omega_s)};
}

Complex psi_tilde_heisenberg(const ModelParams& params, double p_a, double chi) {
    params.validate();
    const HeisenbergEnergyParams h = heisenberg_energy_params(params);
    const double t2 = 0.5 * params.tau;
    const double wa = params.omega_a, ws = params.omega_s;

    const double cross = 4.0 * (params.jxx * params.jxx - params.jyy * params.jyy) * t2 *
                         t2 * sincn(h.theta * t2) * sincn(h.phi * t2);
    const Complex a{std::cos(h.theta * t2), -(wa - ws) * t2 * sincn(h.theta * t2)};
    const Complex b{std::cos(h.phi * t2), (wa + ws) * t2 * sincn(h.phi * t2)};
    const double dephase = 2.0 * params.jzz * params.tau;

    return cross * std::exp(-kI * (chi + dephase)) +
           std::exp(kI * (chi + dephase)) * a * b +
           2.0 * kI * p_a * std::sin(dephase) *
               (cross * std::exp(-kI * chi) - std::exp(kI * chi) * a * b);
}

RateConstants rate_constants(const ModelParams& params, double p_a) {
    params.validate();
    require_ec_resonant(params, "rate_constants");
    const double omega = params.omega_s, tau = params.tau;
    RateConstants rc;
    rc.gamma = params.jxx * params.jxx * tau;
    rc.gamma_zz = params.jzz * params.jzz * tau;
    rc.omega_rate = 0.5 * omega * omega * tau;
    rc.delta = 2.0 * params.jzz * (params.jzz + omega * (1.0 - 2.0 * p_a)) * tau;
    return rc;
}

EomCoefficients eom_coefficients(const ModelParams& params, double p_a) {
    const RateConstants rc = rate_constants(params, p_a);
    const double omega = params.omega_s, tau = params.tau, jzz = params.jzz;
    const double bias = 1.0 - 2.0 * p_a;

    EomCoefficients eom;
    eom.population_rate = 4.0 * rc.gamma - (16.0 / 3.0) * rc.gamma * rc.gamma * tau -
                          (4.0 / 3.0) * rc.gamma_zz * rc.gamma * tau;
    eom.coherence_linear = kI * (2.0 * jzz * bias + omega) -
                           (2.0 * rc.gamma + rc.delta + rc.omega_rate);
    eom.coherence_tau_correction =
        -kI * ((8.0 / 3.0) * rc.gamma * jzz * bias +
               (4.0 / 3.0) * rc.gamma_zz * jzz * bias +
               2.0 * omega * (rc.gamma + rc.gamma_zz) +
               2.0 * jzz * bias * rc.omega_rate + (omega / 3.0) * rc.omega_rate);
    return eom;
}

}  // namespace ric::analytics
