#pragma once

#include <complex>

#include "model.hpp"

namespace ric::analytics {

// Result of an approximate-regime formula. The formula is evaluated
// unconditionally; `quality` is the ratio of neglected to kept energy
// scales (small means the approximation should be trusted).
struct RegimeValue {
    double value;
    double quality;
};

/// Exact per-collision contraction factor of the population gap,
///   p^(n+1) - p_inf = eta (p^(n) - p_inf).
/// All sin(x tau/2)/x factors are evaluated as (tau/2) sinc(x tau/2), so
/// vanishing energy denominators are removable. Requires equal beta.
double eta_exact(const ModelParams& params);

/// Steady-state ground population. Throws NoSteadyState when the dynamics
/// is frozen (|1 - eta| below the cutoff), where the defining ratio is 0/0.
double p_infinity(const ModelParams& params);

/// eta in the energy-conserving resonant limit (Jxx == Jyy, omega_a ==
/// omega_s): 1 - [4 Jxy^2/(4 Jxy^2 + Jzz^2)] sin^2(tau sqrt(4 Jxy^2 + Jzz^2)).
/// Throws DomainViolation off its domain; equals eta_exact on it.
double eta_ec_resonant(const ModelParams& params);

/// Strong-dephasing approximation 1 - [(J+^2 + J-^2)/Jzz^2] sin^2(Jzz tau).
/// Throws DivisionByZero when Jzz == 0.
RegimeValue eta_large_jzz(const ModelParams& params);

/// Fourth-order expansion of eta around tau = 0 (stroboscopic-Lindblad limit).
RegimeValue eta_series_tau4(const ModelParams& params);

/// Weak-coupling long-collision form
///   1 - J+^2 sin^2(tau sqrt(J+^2 + Jzz^2)) / (J+^2 + Jzz^2).
/// Coincides with eta_exact exactly when Jxx == Jyy at resonance.
RegimeValue eta_jtau1(const ModelParams& params);

/// The Jzz = 0 reference of eta_jtau1: 1 - sin^2(J+ tau).
RegimeValue eta0_jtau1(const ModelParams& params);

/// Exact coherence multiplier: one collision maps c -> psi(chi) |c| where
/// chi is the polar phase of the incoming coherence. Requires equal beta.
Complex psi_exact(const ModelParams& params, double p_a, double chi);

/// |psi|^2 in the energy-conserving resonant limit (chi-independent there).
double psi_sq_ec_resonant(const ModelParams& params);

/// Strong-decoherence approximation 1 - 4 p_a (1 - p_a) sin^2(2 Jzz tau).
RegimeValue psi_sq_large_jzz(const ModelParams& params, double p_a);

/// Fourth-order expansion of |psi|^2 around tau = 0; requires Jxx == Jyy.
RegimeValue psi_sq_series(const ModelParams& params, double p_a);

/// Jtau1 coherence form 1 - sin^2(nu tau/2)[1 - (4 Jzz^2/nu^2)(1-2 p_a)^2]
/// with nu = 2 sqrt(J+^2 + Jzz^2). Besides the weak-coupling assumptions it
/// neglects a 4 p_a (1 - p_a) sin(Jzz tau)-weighted interference term, so it
/// tracks the exact modulus closely only at low temperature.
RegimeValue psi_sq_jtau1(const ModelParams& params, double p_a);

// Energy scales of the single-bath Heisenberg comparison model:
//   theta = sqrt(4 (Jxx + Jyy)^2 + (omega_a - omega_s)^2)
//   phi   = sqrt(4 (Jxx - Jyy)^2 + (omega_a + omega_s)^2)
struct HeisenbergEnergyParams {
    double theta, phi;
};

HeisenbergEnergyParams heisenberg_energy_params(const ModelParams& params);

/// Coherence multiplier of the single-bath Heisenberg model (all three
/// couplings on one ancilla). Coincides with psi_exact when Jzz = 0.
Complex psi_tilde_heisenberg(const ModelParams& params, double p_a, double chi);

// Stroboscopic-Lindblad rate constants, held constant as tau -> 0+:
// Gamma = Jxy^2 tau, Gamma_zz = Jzz^2 tau, Omega = omega^2 tau / 2,
// Delta = 2 Jzz (Jzz + omega (1 - 2 p_a)) tau.
struct RateConstants {
    double gamma, gamma_zz, omega_rate, delta;
};

/// Requires the energy-conserving resonant limit (Jxx == Jyy, resonance).
RateConstants rate_constants(const ModelParams& params, double p_a);

// Coefficients of the short-collision-time equations of motion:
//   dp/dt growth rate: (1 - eta)/tau = 4 G - (16/3) G^2 tau - (4/3) Gzz G tau
//   dc/dt generator:   coherence_linear + coherence_tau_correction * tau
struct EomCoefficients {
    double population_rate;
    Complex coherence_linear;
    Complex coherence_tau_correction;
};

EomCoefficients eom_coefficients(const ModelParams& params, double p_a);

}  // namespace ric::analytics
