#include "ricollide.h"

#include <cmath>
#include <cstring>
#include <string>

#include "analytics.hpp"
#include "config.hpp"
#include "engine.hpp"
#include "thermo.hpp"
#include "verify.hpp"

namespace {

thread_local std::string g_last_error;

ri_status to_status(ric::ErrorCode code) {
    using ric::ErrorCode;
    switch (code) {
        case ErrorCode::ok: return RI_OK;
        case ErrorCode::invalid_argument: return RI_ERR_INVALID_ARGUMENT;
        case ErrorCode::non_hermitian_input: return RI_ERR_NON_HERMITIAN_INPUT;
        case ErrorCode::bad_factorization: return RI_ERR_BAD_FACTORIZATION;
        case ErrorCode::dimension_mismatch: return RI_ERR_DIMENSION_MISMATCH;
        case ErrorCode::unequal_temperatures: return RI_ERR_UNEQUAL_TEMPERATURES;
        case ErrorCode::domain_violation: return RI_ERR_DOMAIN_VIOLATION;
        case ErrorCode::division_by_zero: return RI_ERR_DIVISION_BY_ZERO;
        case ErrorCode::no_steady_state: return RI_ERR_NO_STEADY_STATE;
        case ErrorCode::diagonal_only: return RI_ERR_DIAGONAL_ONLY;
        case ErrorCode::not_converged: return RI_ERR_NOT_CONVERGED;
        case ErrorCode::ledger_violation: return RI_ERR_LEDGER_VIOLATION;
        case ErrorCode::parse_error: return RI_ERR_PARSE;
        case ErrorCode::validation_error: return RI_ERR_VALIDATION;
    }
    return RI_ERR_INTERNAL;
}

template <typename Fn>
ri_status guarded(Fn&& fn) {
    try {
        fn();
        return RI_OK;
    } catch (const ric::Error& e) {
        g_last_error = e.what();
        return to_status(e.code());
    } catch (const std::exception& e) {
        g_last_error = e.what();
        return RI_ERR_INTERNAL;
    } catch (...) {
        g_last_error = "unknown error";
        return RI_ERR_INTERNAL;
    }
}

ri_status bad_argument(const char* what) {
    g_last_error = what;
    return RI_ERR_INVALID_ARGUMENT;
}

ric::ModelParams unpack(const ri_params& p) {
    return {p.omega_s, p.omega_a, p.jxx, p.jyy, p.jzz, p.beta1, p.beta2, p.tau};
}

ri_params pack(const ric::ModelParams& p) {
    return {p.omega_s, p.omega_a, p.jxx, p.jyy, p.jzz, p.beta1, p.beta2, p.tau};
}

ric::QubitState unpack(const ri_state& s) {
    return {s.p, ric::Complex{s.c_re, s.c_im}};
}

ri_state pack(const ric::QubitState& s) {
    return {s.p, s.c.real(), s.c.imag()};
}

}  // namespace

struct ri_model {
    ric::engine::Collider collider;

    explicit ri_model(const ric::ModelParams& params) : collider(params) {}
    const ric::ModelParams& params() const { return collider.params(); }
};

struct ri_trajectory {
    ric::engine::Trajectory trajectory;
};

namespace {

template <typename Fn>
ri_status scalar_op(const ri_model* model, double* value, Fn&& fn) {
    if (!model || !value) return bad_argument("null argument");
    return guarded([&] { *value = fn(model->params()); });
}

template <typename Fn>
ri_status regime_op(const ri_model* model, double* value, double* quality, Fn&& fn) {
    if (!model || !value) return bad_argument("null argument");
    return guarded([&] {
        ric::analytics::RegimeValue rv = fn(model->params());
        *value = rv.value;
        if (quality) *quality = rv.quality;
    });
}

}  // namespace

extern "C" {

const char* ri_status_name(ri_status status) {
    switch (status) {
        case RI_OK: return "Ok";
        case RI_ERR_INVALID_ARGUMENT: return "InvalidArgument";
        case RI_ERR_NON_HERMITIAN_INPUT: return "NonHermitianInput";
        case RI_ERR_BAD_FACTORIZATION: return "BadFactorization";
        case RI_ERR_DIMENSION_MISMATCH: return "DimensionMismatch";
        case RI_ERR_UNEQUAL_TEMPERATURES: return "UnequalTemperatures";
        case RI_ERR_DOMAIN_VIOLATION: return "DomainViolation";
        case RI_ERR_DIVISION_BY_ZERO: return "DivisionByZero";
        case RI_ERR_NO_STEADY_STATE: return "NoSteadyState";
        case RI_ERR_DIAGONAL_ONLY: return "DiagonalOnly";
        case RI_ERR_NOT_CONVERGED: return "NotConverged";
        case RI_ERR_LEDGER_VIOLATION: return "LedgerViolation";
        case RI_ERR_PARSE: return "ParseError";
        case RI_ERR_VALIDATION: return "ValidationError";
        case RI_ERR_INTERNAL: return "Internal";
    }
    return "Unknown";
}

const char* ri_last_error(void) { return g_last_error.c_str(); }

const char* ri_version(void) { return "1.0.0"; }

ri_status ri_model_create(const ri_params* params, ri_model** out) {
    if (!params || !out) return bad_argument("ri_model_create: null argument");
    *out = nullptr;
    return guarded([&] {
        ric::ModelParams p = unpack(*params);
        p.validate();
        *out = new ri_model(p);
    });
}

void ri_model_free(ri_model* model) { delete model; }

ri_status ri_gibbs_population(double beta, double omega_a, double* p_a) {
    if (!p_a) return bad_argument("ri_gibbs_population: null output");
    return guarded([&] {
        if (!(beta >= 0.0) || !std::isfinite(beta))
            ric::raise(ric::ErrorCode::validation_error, "beta must be finite and >= 0");
        *p_a = ric::gibbs_ancilla(beta, omega_a).p;
    });
}

ri_status ri_model_ancilla(const ri_model* model, int bath, ri_state* out) {
    if (!model || !out) return bad_argument("ri_model_ancilla: null argument");
    if (bath != 1 && bath != 2) return bad_argument("ri_model_ancilla: bath must be 1 or 2");
    *out = pack(bath == 1 ? model->collider.ancilla1() : model->collider.ancilla2());
    return RI_OK;
}

ri_status ri_model_energy_params(const ri_model* model, ri_energy_params* out) {
    if (!model || !out) return bad_argument("ri_model_energy_params: null argument");
    ric::EnergyParams e = ric::energy_params(model->params());
    *out = {e.xi, e.nu, e.kappa, e.alpha, e.j_plus, e.j_minus};
    return RI_OK;
}

ri_status ri_model_heisenberg_params(const ri_model* model, double* theta, double* phi) {
    if (!model || !theta || !phi)
        return bad_argument("ri_model_heisenberg_params: null argument");
    auto h = ric::analytics::heisenberg_energy_params(model->params());
    *theta = h.theta;
    *phi = h.phi;
    return RI_OK;
}

ri_status ri_model_analytics_ok(const ri_model* model) {
    if (!model) return bad_argument("ri_model_analytics_ok: null argument");
    return guarded([&] { ric::validate_for_analytics(model->params()); });
}

ri_status ri_step(const ri_model* model, const ri_state* in, ri_state* out) {
    if (!model || !in || !out) return bad_argument("ri_step: null argument");
    return guarded([&] { *out = pack(model->collider.step(unpack(*in))); });
}

ri_status ri_evolve(const ri_model* model, const ri_state* initial, long steps,
                    ri_trajectory** out) {
    if (!model || !initial || !out) return bad_argument("ri_evolve: null argument");
    *out = nullptr;
    return guarded([&] {
        auto traj = ric::engine::evolve(unpack(*initial), model->params(), steps);
        *out = new ri_trajectory{std::move(traj)};
    });
}

long ri_trajectory_length(const ri_trajectory* trajectory) {
    return trajectory ? static_cast<long>(trajectory->trajectory.points.size()) : 0;
}

ri_status ri_trajectory_point(const ri_trajectory* trajectory, long index,
                              ri_traj_point* out) {
    if (!trajectory || !out) return bad_argument("ri_trajectory_point: null argument");
    const auto& points = trajectory->trajectory.points;
    if (index < 0 || index >= static_cast<long>(points.size()))
        return bad_argument("ri_trajectory_point: index out of range");
    const auto& pt = points[static_cast<size_t>(index)];
    *out = {pt.n, pt.p, pt.c.real(), pt.c.imag(), pt.distance_to_target};
    return RI_OK;
}

void ri_trajectory_free(ri_trajectory* trajectory) { delete trajectory; }

ri_status ri_runtime_simulated(const ri_model* model, const ri_state* initial,
                               double epsilon, long max_steps, long* n) {
    if (!model || !initial || !n) return bad_argument("ri_runtime_simulated: null argument");
    return guarded([&] {
        *n = ric::engine::runtime_simulated(unpack(*initial), model->params(),
                                            {epsilon, max_steps});
    });
}

ri_status ri_runtime_analytic(const ri_model* model, const ri_state* initial,
                              double epsilon, long* n) {
    if (!model || !initial || !n) return bad_argument("ri_runtime_analytic: null argument");
    return guarded([&] {
        *n = ric::engine::runtime_analytic(unpack(*initial), model->params(),
                                           {epsilon, 1});
    });
}

ri_status ri_steady_state(const ri_model* model, const ri_state* from,
                          double epsilon, long max_steps, ri_state* out) {
    if (!model || !from || !out) return bad_argument("ri_steady_state: null argument");
    return guarded([&] {
        *out = pack(ric::engine::steady_state(model->params(), unpack(*from), epsilon,
                                              max_steps));
    });
}

/* ---- analytics -------------------------------------------------------- */

ri_status ri_eta(const ri_model* model, double* value) {
    return scalar_op(model, value, ric::analytics::eta_exact);
}

ri_status ri_p_infinity(const ri_model* model, double* value) {
    return scalar_op(model, value, ric::analytics::p_infinity);
}

ri_status ri_eta_ec_resonant(const ri_model* model, double* value) {
    return scalar_op(model, value, ric::analytics::eta_ec_resonant);
}

ri_status ri_eta_large_jzz(const ri_model* model, double* value, double* quality) {
    return regime_op(model, value, quality, ric::analytics::eta_large_jzz);
}

ri_status ri_eta_series_tau4(const ri_model* model, double* value, double* quality) {
    return regime_op(model, value, quality, ric::analytics::eta_series_tau4);
}

ri_status ri_eta_jtau1(const ri_model* model, double* value, double* quality) {
    return regime_op(model, value, quality, ric::analytics::eta_jtau1);
}

ri_status ri_eta0_jtau1(const ri_model* model, double* value, double* quality) {
    return regime_op(model, value, quality, ric::analytics::eta0_jtau1);
}

ri_status ri_psi(const ri_model* model, double p_a, double chi, double* re, double* im) {
    if (!model || !re || !im) return bad_argument("ri_psi: null argument");
    return guarded([&] {
        ric::Complex psi = ric::analytics::psi_exact(model->params(), p_a, chi);
        *re = psi.real();
        *im = psi.imag();
    });
}

ri_status ri_psi_sq_ec_resonant(const ri_model* model, double* value) {
    return scalar_op(model, value, ric::analytics::psi_sq_ec_resonant);
}

ri_status ri_psi_sq_large_jzz(const ri_model* model, double p_a, double* value,
                              double* quality) {
    return regime_op(model, value, quality, [p_a](const ric::ModelParams& params) {
        return ric::analytics::psi_sq_large_jzz(params, p_a);
    });
}

ri_status ri_psi_sq_series(const ri_model* model, double p_a, double* value,
                           double* quality) {
    return regime_op(model, value, quality, [p_a](const ric::ModelParams& params) {
        return ric::analytics::psi_sq_series(params, p_a);
    });
}

ri_status ri_psi_sq_jtau1(const ri_model* model, double p_a, double* value,
                          double* quality) {
    return regime_op(model, value, quality, [p_a](const ric::ModelParams& params) {
        return ric::analytics::psi_sq_jtau1(params, p_a);
    });
}

ri_status ri_psi_tilde(const ri_model* model, double p_a, double chi, double* re,
                       double* im) {
    if (!model || !re || !im) return bad_argument("ri_psi_tilde: null argument");
    return guarded([&] {
        ric::Complex psi = ric::analytics::psi_tilde_heisenberg(model->params(), p_a, chi);
        *re = psi.real();
        *im = psi.imag();
    });
}

ri_status ri_rate_constants(const ri_model* model, double p_a, ri_rates* out) {
    if (!model || !out) return bad_argument("ri_rate_constants: null argument");
    return guarded([&] {
        auto rc = ric::analytics::rate_constants(model->params(), p_a);
        *out = {rc.gamma, rc.gamma_zz, rc.omega_rate, rc.delta};
    });
}

ri_status ri_eom_coefficients(const ri_model* model, double p_a, ri_eom* out) {
    if (!model || !out) return bad_argument("ri_eom_coefficients: null argument");
    return guarded([&] {
        auto eom = ric::analytics::eom_coefficients(model->params(), p_a);
        *out = {eom.population_rate, eom.coherence_linear.real(),
                eom.coherence_linear.imag(), eom.coherence_tau_correction.real(),
                eom.coherence_tau_correction.imag()};
    });
}

/* ---- thermodynamics ---------------------------------------------------- */

ri_status ri_heat_bath1(const ri_model* model, const ri_state* state, int closed_form,
                        double* value) {
    if (!model || !state || !value) return bad_argument("ri_heat_bath1: null argument");
    return guarded([&] {
        *value = closed_form
                     ? ric::thermo::heat_bath1_closed(unpack(*state), model->params())
                     : ric::thermo::heat_bath1_trace(unpack(*state), model->collider);
    });
}

ri_status ri_heat_bath2(const ri_model* model, const ri_state* state, double* value) {
    if (!model || !state || !value) return bad_argument("ri_heat_bath2: null argument");
    return guarded(
        [&] { *value = ric::thermo::heat_bath2(unpack(*state), model->collider); });
}

ri_status ri_work_bath1(const ri_model* model, const ri_state* state, int closed_form,
                        double* value) {
    if (!model || !state || !value) return bad_argument("ri_work_bath1: null argument");
    return guarded([&] {
        *value = closed_form
                     ? ric::thermo::work_bath1_closed(unpack(*state), model->params())
                     : ric::thermo::work_bath1_trace(unpack(*state), model->collider);
    });
}

ri_status ri_work_bath2(const ri_model* model, const ri_state* state, int closed_form,
                        double* value) {
    if (!model || !state || !value) return bad_argument("ri_work_bath2: null argument");
    return guarded([&] {
        *value = closed_form
                     ? ric::thermo::work_bath2_closed(unpack(*state), model->params())
                     : ric::thermo::work_bath2_trace(unpack(*state), model->collider);
    });
}

ri_status ri_energetics_step(const ri_model* model, const ri_state* state,
                             ri_step_energetics* out) {
    if (!model || !state || !out) return bad_argument("ri_energetics_step: null argument");
    return guarded([&] {
        auto led = ric::thermo::energetics_step(unpack(*state), model->collider);
        *out = {led.q1, led.q2, led.w1, led.w2, led.delta_e_s};
    });
}

/* ---- configuration and verification ------------------------------------ */

ri_status ri_config_parse(const char* text, ri_run_config* out) {
    if (!text || !out) return bad_argument("ri_config_parse: null argument");
    return guarded([&] {
        ric::config::RunConfig cfg = ric::config::parse_config(text);
        out->params = pack(cfg.params);
        out->initial = pack(cfg.initial);
        out->steps = cfg.steps;
        out->epsilon = cfg.epsilon;
    });
}

ri_status ri_verify(uint64_t seed, long trials, ri_report_fn report, void* user,
                    long* failures) {
    ri_status status = guarded([&] {
        ric::verify::Report result = ric::verify::run({seed, trials});
        if (failures) *failures = static_cast<long>(result.failures.size());
        if (report) {
            for (const auto& failure : result.failures)
                report(failure.line().c_str(), user);
            std::string summary = "verify: " + std::to_string(result.checks_run) +
                                  " checks, " + std::to_string(result.failures.size()) +
                                  " failures (seed " + std::to_string(seed) + ", " +
                                  std::to_string(trials) + " trials)";
            report(summary.c_str(), user);
        }
        if (!result.ok())
            ric::raise(ric::ErrorCode::validation_error, "verification failures detected");
    });
    return status;
}

}  // extern "C"
