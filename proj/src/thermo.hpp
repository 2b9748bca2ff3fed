#pragma once

#include "engine.hpp"

namespace ric::thermo {

// Per-collision energy ledger. Every entry is the Heisenberg-picture change
// Tr[(U^dag H U - H) rho] of the corresponding Hamiltonian piece, so the
// five entries sum to zero for a unitary collision. q2 vanishes identically
// because H_A2 commutes with H_tot, whatever the bath temperatures.
struct StepEnergetics {
    double q1 = 0.0;        // dissipative-bath ancilla energy change
    double q2 = 0.0;        // dephasing-bath ancilla energy change (always 0)
    double w1 = 0.0;        // dissipative interaction energy change
    double w2 = 0.0;        // dephasing interaction energy change
    double delta_e_s = 0.0; // system energy change
};

namespace tol {
inline constexpr double balance = 1e-10;
inline constexpr double q2_zero = 1e-12;
inline constexpr double closed_vs_trace = 1e-10;
}  // namespace tol

double heat_bath1_trace(const QubitState& state, const engine::Collider& collider);
double heat_bath1_closed(const QubitState& state, const ModelParams& params);

/// Trace-definition value; contractually zero to tol::q2_zero for any
/// parameters, including unequal bath temperatures.
double heat_bath2(const QubitState& state, const engine::Collider& collider);

double work_bath1_trace(const QubitState& state, const engine::Collider& collider);
double work_bath1_closed(const QubitState& state, const ModelParams& params);
double work_bath2_trace(const QubitState& state, const engine::Collider& collider);
double work_bath2_closed(const QubitState& state, const ModelParams& params);

// Convenience overloads that build the collision context themselves.
double heat_bath1_trace(const QubitState& state, const ModelParams& params);
double heat_bath2(const QubitState& state, const ModelParams& params);
double work_bath1_trace(const QubitState& state, const ModelParams& params);
double work_bath2_trace(const QubitState& state, const ModelParams& params);

/// All five ledger entries from one collision, via the trace definitions.
/// Throws LedgerViolation when the unitary balance or the q2 = 0 contract
/// breaks tolerance (which would indicate an implementation bug).
StepEnergetics energetics_step(const QubitState& state, const engine::Collider& collider);
StepEnergetics energetics_step(const QubitState& state, const ModelParams& params);

}  // namespace ric::thermo
