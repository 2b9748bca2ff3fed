/* ricollide — exact simulator and closed-form analytics for a qubit
 * colliding with a dissipative (sigma_x/sigma_y) bath and a dephasing
 * (sigma_z) bath under the repeated-interaction protocol.
 *
 * C API conventions:
 *   - Every fallible call returns ri_status; RI_OK is 0.
 *   - On failure, ri_last_error() returns a thread-local message.
 *   - ri_model is an opaque handle caching the 8x8 collision unitary and
 *     Hamiltonians for one parameter set; it is immutable after creation
 *     and safe to share across threads.
 */
#ifndef RICOLLIDE_H
#define RICOLLIDE_H

#include <stdint.h>

#ifdef __cplusplus
extern "C" {
#endif

typedef enum ri_status {
    RI_OK = 0,
    RI_ERR_INVALID_ARGUMENT,
    RI_ERR_NON_HERMITIAN_INPUT,
    RI_ERR_BAD_FACTORIZATION,
    RI_ERR_DIMENSION_MISMATCH,
    RI_ERR_UNEQUAL_TEMPERATURES,
    RI_ERR_DOMAIN_VIOLATION,
    RI_ERR_DIVISION_BY_ZERO,
    RI_ERR_NO_STEADY_STATE,
    RI_ERR_DIAGONAL_ONLY,
    RI_ERR_NOT_CONVERGED,
    RI_ERR_LEDGER_VIOLATION,
    RI_ERR_PARSE,
    RI_ERR_VALIDATION,
    RI_ERR_INTERNAL
} ri_status;

const char* ri_status_name(ri_status status);

/* Thread-local message describing the most recent failure in this thread. */
const char* ri_last_error(void);

const char* ri_version(void);

/* ---- model ---------------------------------------------------------- */

typedef struct ri_params {
    double omega_s; /* system splitting, >= 0 */
    double omega_a; /* ancilla splitting (both baths), >= 0 */
    double jxx;     /* dissipative coupling, x channel */
    double jyy;     /* dissipative coupling, y channel */
    double jzz;     /* dephasing coupling */
    double beta1;   /* inverse temperature, dissipative bath, >= 0 */
    double beta2;   /* inverse temperature, dephasing bath, >= 0 */
    double tau;     /* collision duration, > 0 */
} ri_params;

typedef struct ri_state {
    double p;    /* ground-state population */
    double c_re; /* coherence, real part */
    double c_im; /* coherence, imaginary part */
} ri_state;

typedef struct ri_model ri_model;

ri_status ri_model_create(const ri_params* params, ri_model** out);
void ri_model_free(ri_model* model);

ri_status ri_gibbs_population(double beta, double omega_a, double* p_a);

/* bath is 1 or 2. */
ri_status ri_model_ancilla(const ri_model* model, int bath, ri_state* out);

typedef struct ri_energy_params {
    double xi, nu, kappa, alpha;
    double j_plus, j_minus;
} ri_energy_params;

ri_status ri_model_energy_params(const ri_model* model, ri_energy_params* out);

/* Energy scales of the single-bath Heisenberg comparison model. */
ri_status ri_model_heisenberg_params(const ri_model* model, double* theta, double* phi);

/* RI_OK when closed-form analytics apply (beta1 == beta2). */
ri_status ri_model_analytics_ok(const ri_model* model);

/* ---- collision engine ------------------------------------------------ */

ri_status ri_step(const ri_model* model, const ri_state* in, ri_state* out);

typedef struct ri_trajectory ri_trajectory;

typedef struct ri_traj_point {
    long n;
    double p;
    double c_re, c_im;
    double distance_to_target; /* NaN when no closed-form target exists */
} ri_traj_point;

ri_status ri_evolve(const ri_model* model, const ri_state* initial, long steps,
                    ri_trajectory** out);
long ri_trajectory_length(const ri_trajectory* trajectory);
ri_status ri_trajectory_point(const ri_trajectory* trajectory, long index,
                              ri_traj_point* out);
void ri_trajectory_free(ri_trajectory* trajectory);

ri_status ri_runtime_simulated(const ri_model* model, const ri_state* initial,
                               double epsilon, long max_steps, long* n);
ri_status ri_runtime_analytic(const ri_model* model, const ri_state* initial,
                              double epsilon, long* n);

/* Steady state reached from `from` (closed form when available, otherwise
 * iterated to a numerical fixed point). */
ri_status ri_steady_state(const ri_model* model, const ri_state* from,
                          double epsilon, long max_steps, ri_state* out);

/* ---- closed-form analytics ------------------------------------------ */

ri_status ri_eta(const ri_model* model, double* value);
ri_status ri_p_infinity(const ri_model* model, double* value);
ri_status ri_eta_ec_resonant(const ri_model* model, double* value);

/* Approximate-regime forms also report a quality hint: the ratio of
 * neglected to kept energy scales (small is good). Pass NULL to skip it. */
ri_status ri_eta_large_jzz(const ri_model* model, double* value, double* quality);
ri_status ri_eta_series_tau4(const ri_model* model, double* value, double* quality);
ri_status ri_eta_jtau1(const ri_model* model, double* value, double* quality);
ri_status ri_eta0_jtau1(const ri_model* model, double* value, double* quality);

ri_status ri_psi(const ri_model* model, double p_a, double chi,
                 double* re, double* im);
ri_status ri_psi_sq_ec_resonant(const ri_model* model, double* value);
ri_status ri_psi_sq_large_jzz(const ri_model* model, double p_a,
                              double* value, double* quality);
ri_status ri_psi_sq_series(const ri_model* model, double p_a,
                           double* value, double* quality);
ri_status ri_psi_sq_jtau1(const ri_model* model, double p_a,
                          double* value, double* quality);
ri_status ri_psi_tilde(const ri_model* model, double p_a, double chi,
                       double* re, double* im);

typedef struct ri_rates {
    double gamma;      /* Jxy^2 tau */
    double gamma_zz;   /* Jzz^2 tau */
    double omega_rate; /* omega^2 tau / 2 */
    double delta;      /* 2 Jzz (Jzz + omega (1 - 2 p_a)) tau */
} ri_rates;

ri_status ri_rate_constants(const ri_model* model, double p_a, ri_rates* out);

typedef struct ri_eom {
    double population_rate; /* (1 - eta)/tau in rate-constant form */
    double linear_re, linear_im;
    double tau_correction_re, tau_correction_im;
} ri_eom;

ri_status ri_eom_coefficients(const ri_model* model, double p_a, ri_eom* out);

/* ---- per-collision thermodynamics ------------------------------------ */

typedef struct ri_step_energetics {
    double q1, q2, w1, w2, delta_e_s;
} ri_step_energetics;

/* closed_form != 0 selects the closed-form expression (equal beta only);
 * 0 selects the trace definition, valid for any temperatures. */
ri_status ri_heat_bath1(const ri_model* model, const ri_state* state,
                        int closed_form, double* value);
ri_status ri_heat_bath2(const ri_model* model, const ri_state* state, double* value);
ri_status ri_work_bath1(const ri_model* model, const ri_state* state,
                        int closed_form, double* value);
ri_status ri_work_bath2(const ri_model* model, const ri_state* state,
                        int closed_form, double* value);

ri_status ri_energetics_step(const ri_model* model, const ri_state* state,
                             ri_step_energetics* out);

/* ---- run configuration ----------------------------------------------- */

typedef struct ri_run_config {
    ri_params params;
    ri_state initial;
    long steps;
    double epsilon;
} ri_run_config;

/* Parses `key = value` text (keys: omega_s, omega_a, jxx, jyy, jzz, beta
 * or beta1/beta2, tau, p0, c0_re, c0_im, steps, epsilon; '#' comments). */
ri_status ri_config_parse(const char* text, ri_run_config* out);

/* ---- self-verification ------------------------------------------------ */

typedef void (*ri_report_fn)(const char* line, void* user);

/* Runs the seeded oracle suite (engine vs closed forms, q2 = 0, energy
 * balance, closed vs trace thermodynamics, series scaling). Reports one
 * `FAIL <check> <params> <residual>` line per failure plus a summary line,
 * and stores the failure count. Returns RI_OK when everything passed. */
ri_status ri_verify(uint64_t seed, long trials, ri_report_fn report, void* user,
                    long* failures);

#ifdef __cplusplus
} /* extern "C" */
#endif

#endif /* RICOLLIDE_H */
