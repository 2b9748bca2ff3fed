#include "config.hpp"

#include <cctype>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <map>
#include <set>
#include <sstream>

namespace ric::config {

namespace {

std::string trim(const std::string& s) {
    size_t begin = s.find_first_not_of(" \t\r");
    if (begin == std::string::npos) return {};
    size_t end = s.find_last_not_of(" \t\r");
    return s.substr(begin, end - begin + 1);
}

[[noreturn]] void parse_fail(int line, const std::string& what) {
    std::ostringstream os;
    os << "line " << line << ": " << what;
    raise(ErrorCode::parse_error, os.str());
}

double to_double(const std::string& value, int line) {
    try {
        size_t used = 0;
        double out = std::stod(value, &used);
        if (used != value.size()) parse_fail(line, "trailing characters in number '" + value + "'");
        return out;
    } catch (const std::logic_error&) {
        parse_fail(line, "expected a number, got '" + value + "'");
    }
}

const std::set<std::string> kKnownKeys = {
    "omega_s", "omega_a", "jxx", "jyy", "jzz", "beta", "beta1", "beta2",
    "tau", "p0", "c0_re", "c0_im", "steps", "epsilon"};

}  // namespace

void SweepSpec::validate() const {
    static const std::set<std::string> allowed = {"jzz", "tau", "beta", "jxx", "jyy"};
    if (!allowed.count(variable))
        raise(ErrorCode::validation_error,
              "sweep variable must be one of jzz, tau, beta, jxx, jyy");
    if (points < 2)
        raise(ErrorCode::validation_error, "sweep needs at least 2 points");
    if (!std::isfinite(from) || !std::isfinite(to))
        raise(ErrorCode::validation_error, "sweep bounds must be finite");
}

ModelParams with_value(const ModelParams& base, const std::string& variable, double value) {
    ModelParams p = base;
    if (variable == "jzz") p.jzz = value;
    else if (variable == "tau") p.tau = value;
    else if (variable == "jxx") p.jxx = value;
    else if (variable == "jyy") p.jyy = value;
    else if (variable == "beta") p.beta1 = p.beta2 = value;
    else raise(ErrorCode::validation_error, "unknown sweep variable '" + variable + "'");
    return p;
}

RunConfig parse_config(const std::string& text) {
    std::map<std::string, double> values;
    std::istringstream stream(text);
    std::string raw;
    int line_no = 0;
    while (std::getline(stream, raw)) {
        ++line_no;
        std::string line = raw;
        if (size_t hash = line.find('#'); hash != std::string::npos)
            line = line.substr(0, hash);
        line = trim(line);
        if (line.empty()) continue;
        size_t eq = line.find('=');
        if (eq == std::string::npos) parse_fail(line_no, "expected 'key = value'");
        std::string key = trim(line.substr(0, eq));
        std::string value = trim(line.substr(eq + 1));
        if (key.empty()) parse_fail(line_no, "empty key");
        if (!kKnownKeys.count(key)) parse_fail(line_no, "unknown key '" + key + "'");
        if (values.count(key)) parse_fail(line_no, "key '" + key + "' given twice");
        if (value.empty()) parse_fail(line_no, "missing value for '" + key + "'");
        values[key] = to_double(value, line_no);
    }

    auto require = [&](const std::string& key) {
        auto it = values.find(key);
        if (it == values.end())
            raise(ErrorCode::validation_error, "missing required key '" + key + "'");
        return it->second;
    };
    auto optional = [&](const std::string& key, double fallback) {
        auto it = values.find(key);
        return it == values.end() ? fallback : it->second;
    };

    RunConfig cfg;
    cfg.params.omega_s = require("omega_s");
    cfg.params.omega_a = require("omega_a");
    cfg.params.jxx = require("jxx");
    cfg.params.jyy = require("jyy");
    cfg.params.jzz = require("jzz");
    cfg.params.tau = require("tau");

    const bool has_beta = values.count("beta");
    const bool has_split = values.count("beta1") || values.count("beta2");
    if (has_beta && has_split)
        raise(ErrorCode::validation_error, "give either beta or beta1/beta2, not both");
    if (has_beta) {
        cfg.params.beta1 = cfg.params.beta2 = values["beta"];
    } else {
        if (!values.count("beta1") || !values.count("beta2"))
            raise(ErrorCode::validation_error, "beta1 and beta2 must be given together");
        cfg.params.beta1 = values["beta1"];
        cfg.params.beta2 = values["beta2"];
    }

    cfg.initial.p = optional("p0", 0.5);
    cfg.initial.c = Complex{optional("c0_re", 0.0), optional("c0_im", 0.0)};
    double steps = optional("steps", 100.0);
    if (steps < 0 || steps != std::floor(steps))
        raise(ErrorCode::validation_error, "steps must be a nonnegative integer");
    cfg.steps = static_cast<long>(steps);
    cfg.epsilon = optional("epsilon", 1e-6);
    if (!(cfg.epsilon > 0.0))
        raise(ErrorCode::validation_error, "epsilon must be > 0");

    cfg.params.validate();
    cfg.initial.validate();
    return cfg;
}

RunConfig load_config(const std::string& path) {
    std::ifstream in(path);
    if (!in) raise(ErrorCode::parse_error, "cannot open config file '" + path + "'");
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return parse_config(buffer.str());
}

std::string format_double(double value) {
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.17g", value);
    return buf;
}

}  // namespace ric::config
