// ri-collide: command-line driver for the repeated-interaction two-bath
// qubit model. All physics goes through the ricollide C API; this file
// owns argument handling, sweep scheduling and CSV emission.

#include <algorithm>
#include <atomic>
#include <cmath>
#include <complex>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include "CLI11.hpp"
#include "ricollide.h"

namespace {

struct CliError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

[[noreturn]] void fail(const std::string& what) { throw CliError(what); }

[[noreturn]] void fail_status(const std::string& where, ri_status status) {
    fail(where + ": " + ri_status_name(status) + ": " + ri_last_error());
}

void check(ri_status status, const std::string& where) {
    if (status != RI_OK) fail_status(where, status);
}

// 17 significant digits: enough to round-trip any double.
std::string fmt(double value) {
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.17g", value);
    return buf;
}

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) fail("cannot open config file '" + path + "'");
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return buffer.str();
}

ri_run_config load_config(const std::string& path) {
    std::string text = read_file(path);
    ri_run_config cfg;
    check(ri_config_parse(text.c_str(), &cfg), "config");
    return cfg;
}

class CsvWriter {
public:
    explicit CsvWriter(const std::string& path) {
        if (!path.empty()) {
            file_.open(path, std::ios::binary);
            if (!file_) fail("cannot open output file '" + path + "'");
        }
    }

    void row(const std::vector<std::string>& cells) {
        std::ostream& out = file_.is_open() ? file_ : std::cout;
        for (size_t i = 0; i < cells.size(); ++i) {
            if (i) out << ',';
            out << cells[i];
        }
        out << '\n';
    }

private:
    std::ofstream file_;
};

struct ModelHandle {
    ri_model* model = nullptr;

    explicit ModelHandle(const ri_params& params) {
        check(ri_model_create(&params, &model), "model");
    }
    ~ModelHandle() { ri_model_free(model); }
    ModelHandle(const ModelHandle&) = delete;
    ModelHandle& operator=(const ModelHandle&) = delete;
};

long worker_count() {
    if (const char* env = std::getenv("RI_COLLIDE_THREADS")) {
        long n = std::atol(env);
        if (n >= 1) return n;
    }
    unsigned hw = std::thread::hardware_concurrency();
    return hw ? static_cast<long>(hw) : 1;
}

// Runs fn(i) for i in [0, count) on up to worker_count() threads. Results
// are gathered by index, so output order never depends on scheduling.
template <typename Fn>
void parallel_for(long count, Fn&& fn) {
    long workers = std::min<long>(worker_count(), count);
    if (workers <= 1) {
        for (long i = 0; i < count; ++i) fn(i);
        return;
    }
    std::atomic<long> next{0};
    std::vector<std::thread> pool;
    std::vector<std::exception_ptr> errors(static_cast<size_t>(workers));
    for (long w = 0; w < workers; ++w) {
        pool.emplace_back([&, w] {
            try {
                for (long i = next.fetch_add(1); i < count; i = next.fetch_add(1)) fn(i);
            } catch (...) {
                errors[static_cast<size_t>(w)] = std::current_exception();
            }
        });
    }
    for (auto& t : pool) t.join();
    for (auto& e : errors)
        if (e) std::rethrow_exception(e);
}

ri_params with_value(ri_params base, const std::string& variable, double value) {
    if (variable == "jzz") base.jzz = value;
    else if (variable == "tau") base.tau = value;
    else if (variable == "jxx") base.jxx = value;
    else if (variable == "jyy") base.jyy = value;
    else if (variable == "beta") base.beta1 = base.beta2 = value;
    else fail("unknown sweep variable '" + variable + "'");
    return base;
}

struct SweepRange {
    std::string variable = "jzz";
    double from = 0.0;
    double to = 5.0;
    long points = 51;

    double value(long i) const {
        return points < 2 ? from
                          : from + (to - from) * static_cast<double>(i) /
                                static_cast<double>(points - 1);
    }
    void validate() const {
        if (points < 2) fail("sweep needs at least 2 points");
        static const std::vector<std::string> allowed = {"jzz", "tau", "beta", "jxx", "jyy"};
        if (std::find(allowed.begin(), allowed.end(), variable) == allowed.end())
            fail("sweep variable must be one of jzz, tau, beta, jxx, jyy");
    }
};

// The phase entering psi: the initial coherence's polar angle when present;
// for Jxx == Jyy the modulus of psi is phase-independent and chi = 0 is
// used, otherwise the quantity is refused.
double psi_phase(const ri_run_config& cfg, const ri_params& params) {
    std::complex<double> c0{cfg.initial.c_re, cfg.initial.c_im};
    if (std::abs(c0) > 0.0) return std::arg(c0);
    if (params.jxx == params.jyy) return 0.0;
    fail("psi2 quantities need a nonzero initial coherence when jxx != jyy");
}

long steady_cap(const ri_run_config& cfg) {
    return std::max<long>(cfg.steps, 1000000);
}

double nan_value() { return std::nan(""); }

double evaluate_quantity(const std::string& name, const ri_run_config& cfg,
                         const ri_params& params) {
    ModelHandle handle(params);
    ri_model* model = handle.model;
    double value = 0.0;

    auto modulus_sq = [](double re, double im) { return re * re + im * im; };

    if (name == "eta") {
        check(ri_eta(model, &value), "eta");
    } else if (name == "eta0") {
        ModelHandle zero(with_value(params, "jzz", 0.0));
        check(ri_eta(zero.model, &value), "eta0");
    } else if (name == "p_inf") {
        ri_status status = ri_p_infinity(model, &value);
        if (status == RI_ERR_NO_STEADY_STATE) return nan_value();
        check(status, "p_inf");
    } else if (name == "psi2" || name == "psi2_0" || name == "psi2_tilde") {
        double p_a = 0.0;
        check(ri_gibbs_population(params.beta1, params.omega_a, &p_a), "p_a");
        double chi = psi_phase(cfg, params);
        double re = 0.0, im = 0.0;
        if (name == "psi2_tilde") {
            check(ri_psi_tilde(model, p_a, chi, &re, &im), "psi2_tilde");
        } else if (name == "psi2") {
            check(ri_psi(model, p_a, chi, &re, &im), "psi2");
        } else {
            ModelHandle zero(with_value(params, "jzz", 0.0));
            check(ri_psi(zero.model, p_a, chi, &re, &im), "psi2_0");
        }
        value = modulus_sq(re, im);
    } else if (name == "q1" || name == "q2" || name == "w1" || name == "w2") {
        ri_state steady;
        ri_status status =
            ri_steady_state(model, &cfg.initial, cfg.epsilon, steady_cap(cfg), &steady);
        if (status == RI_ERR_NOT_CONVERGED || status == RI_ERR_NO_STEADY_STATE)
            return nan_value();
        check(status, "steady_state");
        ri_step_energetics led;
        check(ri_energetics_step(model, &steady, &led), "energetics");
        value = name == "q1" ? led.q1 : name == "q2" ? led.q2
                : name == "w1" ? led.w1 : led.w2;
    } else if (name == "n_star_sim") {
        long n = 0;
        ri_status status =
            ri_runtime_simulated(model, &cfg.initial, cfg.epsilon, steady_cap(cfg), &n);
        if (status == RI_ERR_NOT_CONVERGED || status == RI_ERR_NO_STEADY_STATE)
            return nan_value();
        check(status, "n_star_sim");
        value = static_cast<double>(n);
    } else if (name == "n_star_an") {
        long n = 0;
        ri_status status = ri_runtime_analytic(model, &cfg.initial, cfg.epsilon, &n);
        if (status == RI_ERR_NO_STEADY_STATE) return nan_value();
        check(status, "n_star_an");
        value = static_cast<double>(n);
    } else {
        fail("unknown quantity '" + name + "'");
    }
    return value;
}

int cmd_dynamics(const std::string& config_path, const std::string& output,
                 long steps_override) {
    ri_run_config cfg = load_config(config_path);
    long steps = steps_override >= 0 ? steps_override : cfg.steps;

    ModelHandle handle(cfg.params);
    ri_trajectory* trajectory = nullptr;
    check(ri_evolve(handle.model, &cfg.initial, steps, &trajectory), "evolve");

    CsvWriter csv(output);
    csv.row({"n", "p", "c_re", "c_im", "c_abs", "distance_to_target"});
    long length = ri_trajectory_length(trajectory);
    for (long i = 0; i < length; ++i) {
        ri_traj_point pt;
        check(ri_trajectory_point(trajectory, i, &pt), "trajectory");
        csv.row({std::to_string(pt.n), fmt(pt.p), fmt(pt.c_re), fmt(pt.c_im),
                 fmt(std::hypot(pt.c_re, pt.c_im)), fmt(pt.distance_to_target)});
    }
    ri_trajectory_free(trajectory);
    return 0;
}

int cmd_sweep(const std::string& config_path, const std::string& output,
              const SweepRange& range, const std::vector<std::string>& quantities) {
    range.validate();
    ri_run_config cfg = load_config(config_path);

    std::vector<std::vector<double>> results(
        static_cast<size_t>(range.points),
        std::vector<double>(quantities.size(), 0.0));
    parallel_for(range.points, [&](long i) {
        ri_params params = with_value(cfg.params, range.variable, range.value(i));
        for (size_t q = 0; q < quantities.size(); ++q)
            results[static_cast<size_t>(i)][q] =
                evaluate_quantity(quantities[q], cfg, params);
    });

    CsvWriter csv(output);
    std::vector<std::string> header = {range.variable};
    header.insert(header.end(), quantities.begin(), quantities.end());
    csv.row(header);
    for (long i = 0; i < range.points; ++i) {
        std::vector<std::string> row = {fmt(range.value(i))};
        for (double v : results[static_cast<size_t>(i)]) row.push_back(fmt(v));
        csv.row(row);
    }
    return 0;
}

int cmd_thermo(const std::string& config_path, const std::string& output,
               long steps_override) {
    ri_run_config cfg = load_config(config_path);
    long steps = steps_override >= 0 ? steps_override : cfg.steps;

    ModelHandle handle(cfg.params);
    CsvWriter csv(output);
    csv.row({"n", "p", "c_abs", "q1", "q2", "w1", "w2", "delta_e_s"});

    ri_state state = cfg.initial;
    for (long n = 0; n < steps; ++n) {
        ri_step_energetics led;
        check(ri_energetics_step(handle.model, &state, &led), "energetics");
        csv.row({std::to_string(n), fmt(state.p), fmt(std::hypot(state.c_re, state.c_im)),
                 fmt(led.q1), fmt(led.q2), fmt(led.w1), fmt(led.w2), fmt(led.delta_e_s)});
        ri_state next;
        check(ri_step(handle.model, &state, &next), "step");
        state = next;
    }
    return 0;
}

int cmd_runtime(const std::string& config_path, const std::string& output,
                const SweepRange& range) {
    range.validate();
    ri_run_config cfg = load_config(config_path);

    std::vector<std::pair<double, double>> results(static_cast<size_t>(range.points));
    parallel_for(range.points, [&](long i) {
        ri_params params = with_value(cfg.params, range.variable, range.value(i));
        results[static_cast<size_t>(i)] = {
            evaluate_quantity("n_star_sim", cfg, params),
            evaluate_quantity("n_star_an", cfg, params)};
    });

    CsvWriter csv(output);
    csv.row({range.variable, "n_sim", "n_an"});
    for (long i = 0; i < range.points; ++i) {
        csv.row({fmt(range.value(i)), fmt(results[static_cast<size_t>(i)].first),
                 fmt(results[static_cast<size_t>(i)].second)});
    }
    return 0;
}

int cmd_verify(uint64_t seed, long trials) {
    long failures = 0;
    ri_status status = ri_verify(
        seed, trials,
        [](const char* line, void*) { std::cout << line << '\n'; }, nullptr, &failures);
    if (status == RI_OK) return 0;
    if (failures > 0) return 1;
    fail_status("verify", status);
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Repeated-interaction simulator for a qubit coupled to dissipative "
                 "and dephasing baths"};
    app.require_subcommand(1);

    std::string config_path, output;
    long steps_override = -1;
    SweepRange range;
    std::vector<std::string> quantities;
    uint64_t seed = 7;
    long trials = 1000;

    auto add_config = [&](CLI::App* cmd) {
        cmd->add_option("-c,--config", config_path, "config file (key = value lines)")
            ->required();
        cmd->add_option("-o,--output", output, "output CSV path (default: stdout)");
    };
    auto add_range = [&](CLI::App* cmd) {
        cmd->add_option("--vary", range.variable, "swept variable: jzz, tau, beta, jxx, jyy");
        cmd->add_option("--from", range.from, "range start");
        cmd->add_option("--to", range.to, "range end");
        cmd->add_option("--points", range.points, "grid size (>= 2)");
    };

    CLI::App* dynamics = app.add_subcommand(
        "dynamics", "Collision-by-collision trajectory.\n"
                    "CSV: n,p,c_re,c_im,c_abs,distance_to_target");
    add_config(dynamics);
    dynamics->add_option("--steps", steps_override, "override config steps");

    CLI::App* sweep = app.add_subcommand(
        "sweep", "Closed-form or steady-state quantities over a parameter grid.\n"
                 "CSV: <var>,<quantity>...  Quantities: eta, eta0, p_inf, psi2,\n"
                 "psi2_0, psi2_tilde, q1, q2, w1, w2, n_star_sim, n_star_an");
    add_config(sweep);
    add_range(sweep);
    sweep->add_option("-q,--quantity", quantities, "quantity column (repeatable)");

    CLI::App* thermo = app.add_subcommand(
        "thermo", "Per-collision heat/work ledger along a trajectory.\n"
                  "CSV: n,p,c_abs,q1,q2,w1,w2,delta_e_s");
    add_config(thermo);
    thermo->add_option("--steps", steps_override, "override config steps");

    CLI::App* runtime = app.add_subcommand(
        "runtime", "Thermalization runtime: simulated vs analytic bound.\n"
                   "CSV: <var>,n_sim,n_an");
    add_config(runtime);
    add_range(runtime);

    CLI::App* verify = app.add_subcommand(
        "verify", "Self-check oracle suite over seeded random parameter draws.\n"
                  "Prints FAIL <check> <params> <residual> lines; exit 1 on failure.");
    verify->add_option("--seed", seed, "PRNG seed");
    verify->add_option("--trials", trials, "number of random draws");

    CLI11_PARSE(app, argc, argv);

    try {
        if (dynamics->parsed()) return cmd_dynamics(config_path, output, steps_override);
        if (sweep->parsed()) {
            if (quantities.empty()) quantities = {"eta"};
            return cmd_sweep(config_path, output, range, quantities);
        }
        if (thermo->parsed()) return cmd_thermo(config_path, output, steps_override);
        if (runtime->parsed()) return cmd_runtime(config_path, output, range);
        if (verify->parsed()) return cmd_verify(seed, trials);
    } catch (const CliError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    }
    return 0;
}
