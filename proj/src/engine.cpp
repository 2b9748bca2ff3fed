#include "engine.hpp"

#include <cmath>
#include <limits>
#include <sstream>

#include "analytics.hpp"

namespace ric::engine {

namespace {

// Validates the reduced 2x2 collision output without an eigensolver: the
// eigenvalues of [[p, c], [c*, 1-p]] are (1 +- sqrt((2p-1)^2 + 4|c|^2))/2.
void check_reduced_density(const Mat& rho) {
    using namespace qmath;
    double herm = hermiticity_defect(rho);
    if (herm > tol::density_hermiticity)
        raise(ErrorCode::validation_error, "collision output lost Hermiticity");
    double trace_drift = std::abs(rho.trace() - Complex{1.0, 0.0});
    if (trace_drift > tol::trace)
        raise(ErrorCode::validation_error, "collision output lost unit trace");
    double p = rho(0, 0).real();
    double disc = std::hypot(2.0 * p - 1.0, 2.0 * std::abs(rho(0, 1)));
    double eig_min = 0.5 * (1.0 - disc);
    if (eig_min < -tol::positivity)
        raise(ErrorCode::validation_error, "collision output lost positivity");
}

}  // namespace

Mat collision_unitary(const ModelParams& params) {
    return qmath::hermitian_expm(build_hamiltonians(params).h_tot, params.tau);
}

Collider::Collider(const ModelParams& params)
    : params_(params),
      ham_(build_hamiltonians(params)),
      u_(qmath::hermitian_expm(ham_.h_tot, params.tau)),
      a1_(gibbs_ancilla(params.beta1, params.omega_a)),
      a2_(gibbs_ancilla(params.beta2, params.omega_a)) {
    ancilla_product_ = qmath::kron(a1_.density(), a2_.density());
}

QubitState Collider::step(const QubitState& state) const {
    state.validate();
    Mat rho = qmath::kron(state.density(), ancilla_product_);
    Mat evolved = u_ * rho * u_.adjoint();
    Mat reduced = qmath::partial_trace(evolved, qmath::Keep::system);
    check_reduced_density(reduced);
    return QubitState{reduced(0, 0).real(), reduced(0, 1)};
}

QubitState ri_step(const QubitState& state, const ModelParams& params, const Mat& u) {
    state.validate();
    QubitState a1 = gibbs_ancilla(params.beta1, params.omega_a);
    QubitState a2 = gibbs_ancilla(params.beta2, params.omega_a);
    Mat rho = qmath::kron(state.density(), qmath::kron(a1.density(), a2.density()));
    Mat evolved = u * rho * u.adjoint();
    Mat reduced = qmath::partial_trace(evolved, qmath::Keep::system);
    check_reduced_density(reduced);
    return QubitState{reduced(0, 0).real(), reduced(0, 1)};
}

double distance_to_population(const QubitState& state, double target_p) {
    return std::hypot(state.p - target_p, std::abs(state.c));
}

std::optional<double> analytic_target(const ModelParams& params) {
    if (!params.equal_beta()) return std::nullopt;
    try {
        return analytics::p_infinity(params);
    } catch (const Error& e) {
        if (e.code() == ErrorCode::no_steady_state) return std::nullopt;
        throw;
    }
}

Trajectory evolve(const QubitState& initial, const ModelParams& params, long n_steps) {
    if (n_steps < 0)
        raise(ErrorCode::validation_error, "evolve: n_steps must be >= 0");
    Collider collider(params);
    std::optional<double> target = analytic_target(params);
    const double nan = std::numeric_limits<double>::quiet_NaN();

    Trajectory traj;
    traj.params = params;
    traj.points.reserve(static_cast<size_t>(n_steps) + 1);
    QubitState state = initial;
    state.validate();
    for (long n = 0; n <= n_steps; ++n) {
        double dist = target ? distance_to_population(state, *target) : nan;
        traj.points.push_back({n, state.p, state.c, dist});
        if (n < n_steps) state = collider.step(state);
    }
    return traj;
}

void RuntimeQuery::validate() const {
    if (!(epsilon > 0.0) || !std::isfinite(epsilon))
        raise(ErrorCode::validation_error, "epsilon must be > 0");
    if (max_steps <= 0)
        raise(ErrorCode::validation_error, "max_steps must be > 0");
}

long runtime_simulated(const QubitState& initial, const ModelParams& params,
                       const RuntimeQuery& query) {
    query.validate();
    Collider collider(params);

    if (params.equal_beta()) {
        double eta = analytics::eta_exact(params);
        if (std::abs(1.0 - eta) < qmath::tol::frozen_eta)
            raise(ErrorCode::no_steady_state, "frozen dynamics: eta = 1");
        double target = analytics::p_infinity(params);
        QubitState state = initial;
        state.validate();
        if (distance_to_population(state, target) <= query.epsilon) return 0;
        for (long n = 1; n <= query.max_steps; ++n) {
            state = collider.step(state);
            if (distance_to_population(state, target) <= query.epsilon) return n;
        }
        raise(ErrorCode::not_converged, "runtime cap reached before convergence");
    }

    // No closed form: record the trajectory, declare a fixed point once three
    // consecutive steps each move less than eps/10, then locate the first
    // recorded state within eps of it.
    std::vector<QubitState> states;
    states.push_back(initial);
    initial.validate();
    int quiet = 0;
    for (long n = 1; n <= query.max_steps; ++n) {
        QubitState next = collider.step(states.back());
        double moved = qmath::trace_distance(next.density(), states.back().density());
        states.push_back(next);
        quiet = (moved < query.epsilon / 10.0) ? quiet + 1 : 0;
        if (quiet >= 3) {
            const Mat target = next.density();
            for (size_t i = 0; i < states.size(); ++i)
                if (qmath::trace_distance(states[i].density(), target) <= query.epsilon)
                    return static_cast<long>(i);
            return n;
        }
    }
    raise(ErrorCode::not_converged, "no fixed point detected before the cap");
}

long runtime_analytic(double p0, const ModelParams& params, const RuntimeQuery& query) {
    query.validate();
    validate_for_analytics(params);
    const double eta = analytics::eta_exact(params);
    if (std::abs(eta) >= 1.0 - qmath::tol::frozen_eta)
        raise(ErrorCode::no_steady_state, "|eta| = 1: population gap does not contract");
    const double gap = std::abs(p0 - analytics::p_infinity(params));
    if (query.epsilon >= gap) return 0;
    if (eta == 0.0) return 1;
    double bound = std::log(query.epsilon / gap) / std::log(std::abs(eta));
    return static_cast<long>(std::ceil(bound));
}

long runtime_analytic(const QubitState& initial, const ModelParams& params,
                      const RuntimeQuery& query) {
    if (std::abs(initial.c) != 0.0)
        raise(ErrorCode::diagonal_only,
              "the analytic runtime bound applies to diagonal initial states only");
    return runtime_analytic(initial.p, params, query);
}

QubitState steady_state(const ModelParams& params, const QubitState& from,
                        double epsilon, long max_steps) {
    if (std::optional<double> target = analytic_target(params))
        return QubitState{*target, Complex{0.0, 0.0}};
    Collider collider(params);
    QubitState state = from;
    state.validate();
    int quiet = 0;
    for (long n = 0; n < max_steps; ++n) {
        QubitState next = collider.step(state);
        double moved = qmath::trace_distance(next.density(), state.density());
        state = next;
        quiet = (moved < epsilon / 10.0) ? quiet + 1 : 0;
        if (quiet >= 3) return state;
    }
    raise(ErrorCode::not_converged, "no steady state detected before the cap");
}

}  // namespace ric::engine
