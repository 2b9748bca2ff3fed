#pragma once

#include <complex>

#include "qmath.hpp"

namespace ric {

using qmath::Complex;
using qmath::Mat;

// Microscopic constants of the two-bath collision model. Bath 1 couples
// through sigma_x/sigma_y (dissipative), bath 2 through sigma_z (dephasing).
// The two inverse temperatures are usually equal; the closed-form analytics
// require it, the collision engine and the heat/work ledger do not.
struct ModelParams {
    double omega_s = 1.0;
    double omega_a = 1.0;
    double jxx = 0.0;
    double jyy = 0.0;
    double jzz = 0.0;
    double beta1 = 1.0;
    double beta2 = 1.0;
    double tau = 1.0;

    bool equal_beta() const { return beta1 == beta2; }

    /// Throws ValidationError unless tau > 0, betas are finite and >= 0,
    /// energies are >= 0 and everything is finite.
    void validate() const;
};

// (p, c) parametrization of a 2x2 density matrix: p is the ground-state
// population, c the off-diagonal element rho(0,1).
struct QubitState {
    double p = 0.5;
    Complex c{0.0, 0.0};

    /// Polar phase of c. Undefined (throws DomainViolation) when |c| = 0,
    /// since the coherence multiplier depends on e^{+-i chi}.
    double chi() const;

    /// Throws ValidationError unless 0 <= p <= 1 and |c|^2 <= p(1-p) up to
    /// the round-off slack.
    void validate(double slack = qmath::tol::state_slack) const;

    Mat density() const;
};

/// Gibbs thermal qubit: p = 1/(1 + e^{-beta omega_a}), no coherence.
QubitState gibbs_ancilla(double beta, double omega_a);

// All operators live on the composite space S (x) A1 (x) A2 (8x8).
struct Hamiltonians {
    Mat h_s, h_a1, h_a2, h_i1, h_i2, h_tot;
};

Hamiltonians build_hamiltonians(const ModelParams& params);

// Derived energies entering every closed form. With J+ = Jxx + Jyy and
// J- = Jxx - Jyy:
//   xi    = sqrt(4 J+^2 + (2 Jzz + omega_a - omega_s)^2)
//   nu    = sqrt(4 J+^2 + (2 Jzz - omega_a + omega_s)^2)
//   kappa = sqrt(4 J-^2 + (-2 Jzz + omega_a + omega_s)^2)
//   alpha = sqrt(4 J-^2 + (2 Jzz + omega_a + omega_s)^2)
struct EnergyParams {
    double xi, nu, kappa, alpha;
    double j_plus, j_minus;
};

EnergyParams energy_params(const ModelParams& params);

/// Gate for the closed-form coefficients, which assume a single beta.
/// Throws UnequalTemperatures when beta1 != beta2.
void validate_for_analytics(const ModelParams& params);

}  // namespace ric
