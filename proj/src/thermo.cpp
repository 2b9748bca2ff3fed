#include "thermo.hpp"

#include <cmath>
#include <sstream>

namespace ric::thermo {

namespace {

double sincn(double x) {
    if (std::abs(x) < 1e-4) {
        double x2 = x * x;
        return 1.0 - x2 / 6.0 + x2 * x2 / 120.0;
    }
    return std::sin(x) / x;
}

// (C / lambda)^2 sin^2(lambda tau / 2), regular at lambda = 0.
double weight(double coupling, double lambda, double tau) {
    double s = 0.5 * coupling * tau * sincn(0.5 * lambda * tau);
    return s * s;
}

// Heisenberg-picture change of H over one collision from the product state.
double trace_change(const Mat& h, const engine::Collider& collider,
                    const QubitState& state) {
    state.validate();
    Mat rho = qmath::kron(state.density(),
                          qmath::kron(collider.ancilla1().density(),
                                      collider.ancilla2().density()));
    const Mat& u = collider.unitary();
    return ((u.adjoint() * h * u - h) * rho).trace().real();
}

struct ClosedFormInputs {
    EnergyParams e;
    double p_a;
    double tau, jzz, wa, ws;
};

ClosedFormInputs closed_inputs(const ModelParams& params) {
    validate_for_analytics(params);
    return {energy_params(params), gibbs_ancilla(params.beta1, params.omega_a).p,
            params.tau, params.jzz, params.omega_a, params.omega_s};
}

}  // namespace

double heat_bath1_trace(const QubitState& state, const engine::Collider& collider) {
    return trace_change(collider.hamiltonians().h_a1, collider, state);
}

double heat_bath1_closed(const QubitState& state, const ModelParams& params) {
    const auto in = closed_inputs(params);
    const double p = state.p, pa = in.p_a;
    return 4.0 * in.wa *
           (-weight(in.e.j_plus, in.e.nu, in.tau) * (p - pa) * (1.0 - pa) +
            weight(in.e.j_minus, in.e.alpha, in.tau) * (p - (1.0 - pa)) * (1.0 - pa) +
            weight(in.e.j_minus, in.e.kappa, in.tau) * (p - (1.0 - pa)) * pa -
            weight(in.e.j_plus, in.e.xi, in.tau) * (p - pa) * pa);
}

double heat_bath2(const QubitState& state, const engine::Collider& collider) {
    return trace_change(collider.hamiltonians().h_a2, collider, state);
}

double work_bath1_trace(const QubitState& state, const engine::Collider& collider) {
    return trace_change(collider.hamiltonians().h_i1, collider, state);
}

double work_bath1_closed(const QubitState& state, const ModelParams& params) {
    const auto in = closed_inputs(params);
    const double p = state.p, pa = in.p_a;
    return 4.0 * weight(in.e.j_minus, in.e.kappa, in.tau) *
               (2.0 * in.jzz - in.wa - in.ws) * pa * (p - (1.0 - pa)) +
           4.0 * weight(in.e.j_plus, in.e.xi, in.tau) *
               (2.0 * in.jzz + in.wa - in.ws) * pa * (p - pa) -
           4.0 * weight(in.e.j_minus, in.e.alpha, in.tau) *
               (2.0 * in.jzz + in.wa + in.ws) * (1.0 - pa) * (p - (1.0 - pa)) -
           4.0 * weight(in.e.j_plus, in.e.nu, in.tau) *
               (2.0 * in.jzz - in.wa + in.ws) * (1.0 - pa) * (p - pa);
}

double work_bath2_trace(const QubitState& state, const engine::Collider& collider) {
    return trace_change(collider.hamiltonians().h_i2, collider, state);
}

double work_bath2_closed(const QubitState& state, const ModelParams& params) {
    // Every term carries the common factor 2 Jzz, so Jzz = 0 gives 0 exactly.
    const auto in = closed_inputs(params);
    const double p = state.p, pa = in.p_a;
    return 2.0 * in.jzz * 4.0 *
           (-weight(in.e.j_minus, in.e.kappa, in.tau) * pa * (p - (1.0 - pa)) -
            weight(in.e.j_plus, in.e.xi, in.tau) * pa * (p - pa) +
            weight(in.e.j_minus, in.e.alpha, in.tau) * (1.0 - pa) * (p - (1.0 - pa)) +
            weight(in.e.j_plus, in.e.nu, in.tau) * (1.0 - pa) * (p - pa));
}

double heat_bath1_trace(const QubitState& state, const ModelParams& params) {
    return heat_bath1_trace(state, engine::Collider(params));
}

double heat_bath2(const QubitState& state, const ModelParams& params) {
    return heat_bath2(state, engine::Collider(params));
}

double work_bath1_trace(const QubitState& state, const ModelParams& params) {
    return work_bath1_trace(state, engine::Collider(params));
}

double work_bath2_trace(const QubitState& state, const ModelParams& params) {
    return work_bath2_trace(state, engine::Collider(params));
}

StepEnergetics energetics_step(const QubitState& state, const engine::Collider& collider) {
    StepEnergetics led;
    led.q1 = heat_bath1_trace(state, collider);
    led.q2 = heat_bath2(state, collider);
    led.w1 = work_bath1_trace(state, collider);
    led.w2 = work_bath2_trace(state, collider);
    led.delta_e_s = trace_change(collider.hamiltonians().h_s, collider, state);

    const double balance = led.delta_e_s + led.q1 + led.q2 + led.w1 + led.w2;
    if (std::abs(balance) > tol::balance) {
        std::ostringstream os;
        os << "energy balance broken: residual " << balance;
        raise(ErrorCode::ledger_violation, os.str());
    }
    if (std::abs(led.q2) > tol::q2_zero) {
        std::ostringstream os;
        os << "dephasing-bath heat should vanish, got " << led.q2;
        raise(ErrorCode::ledger_violation, os.str());
    }
    return led;
}

StepEnergetics energetics_step(const QubitState& state, const ModelParams& params) {
    return energetics_step(state, engine::Collider(params));
}

}  // namespace ric::thermo
