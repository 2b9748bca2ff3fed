#pragma once

#include <optional>
#include <vector>

#include "model.hpp"

namespace ric::engine {

/// 8x8 collision unitary exp(-i H_tot tau).
Mat collision_unitary(const ModelParams& params);

// Holds everything that is constant across collisions for fixed params:
// the Hamiltonian pieces, the unitary (the same at every step) and the
// fresh-ancilla product rho_A1 (x) rho_A2.
class Collider {
public:
    explicit Collider(const ModelParams& params);

    const ModelParams& params() const { return params_; }
    const Hamiltonians& hamiltonians() const { return ham_; }
    const Mat& unitary() const { return u_; }
    const QubitState& ancilla1() const { return a1_; }
    const QubitState& ancilla2() const { return a2_; }

    /// One collision: embed, conjugate by U, trace the ancillas back out.
    /// The reduced state is checked against the density-matrix tolerances.
    QubitState step(const QubitState& state) const;

private:
    ModelParams params_;
    Hamiltonians ham_;
    Mat u_;
    Mat ancilla_product_;  // rho_A1 (x) rho_A2, 4x4
    QubitState a1_, a2_;
};

/// Single collision with a caller-supplied cached unitary.
QubitState ri_step(const QubitState& state, const ModelParams& params, const Mat& u);

struct TrajectoryPoint {
    long n;
    double p;
    Complex c;
    double distance_to_target;  // NaN when no closed-form target exists
};

struct Trajectory {
    ModelParams params;
    std::vector<TrajectoryPoint> points;
};

/// n_steps collisions from `initial`; result has n_steps + 1 points.
Trajectory evolve(const QubitState& initial, const ModelParams& params, long n_steps);

struct RuntimeQuery {
    double epsilon = 1e-6;
    long max_steps = 1000000;

    void validate() const;
};

/// Trace distance between a qubit state and the diagonal state with ground
/// population `target_p`: sqrt((p - target_p)^2 + |c|^2).
double distance_to_population(const QubitState& state, double target_p);

/// Closed-form steady-state population when defined (equal beta, not
/// frozen); nullopt otherwise.
std::optional<double> analytic_target(const ModelParams& params);

/// Smallest n with trace_distance(state_n, target) <= epsilon. The target is
/// the diagonal state with population p_inf when the closed form applies;
/// with unequal temperatures it falls back to the numerically detected fixed
/// point. Throws NoSteadyState on frozen dynamics and NotConverged at the cap.
long runtime_simulated(const QubitState& initial, const ModelParams& params,
                       const RuntimeQuery& query);

/// ceil(ln(eps / |p0 - p_inf|) / ln |eta|) for diagonal initial states.
long runtime_analytic(double p0, const ModelParams& params, const RuntimeQuery& query);

/// Same, rejecting states that carry coherence (DiagonalOnly).
long runtime_analytic(const QubitState& initial, const ModelParams& params,
                      const RuntimeQuery& query);

/// Steady state reached from `from`: the closed-form target when available,
/// otherwise iterate until three consecutive steps move less than eps/10.
QubitState steady_state(const ModelParams& params, const QubitState& from,
                        double epsilon, long max_steps);

}  // namespace ric::engine
