#include "model.hpp"

#include <cmath>
#include <sstream>

namespace ric {

namespace {

void require(bool ok, const std::string& what) {
    if (!ok) raise(ErrorCode::validation_error, what);
}

}  // namespace

void ModelParams::validate() const {
    require(std::isfinite(omega_s) && omega_s >= 0.0, "omega_s must be finite and >= 0");
    require(std::isfinite(omega_a) && omega_a >= 0.0, "omega_a must be finite and >= 0");
    require(std::isfinite(jxx) && std::isfinite(jyy) && std::isfinite(jzz),
            "couplings must be finite");
    require(std::isfinite(beta1) && beta1 >= 0.0, "beta1 must be finite and >= 0");
    require(std::isfinite(beta2) && beta2 >= 0.0, "beta2 must be finite and >= 0");
    require(std::isfinite(tau) && tau > 0.0, "tau must be finite and > 0");
}

double QubitState::chi() const {
    if (std::abs(c) == 0.0)
        raise(ErrorCode::domain_violation, "chi is undefined for zero coherence");
    return std::arg(c);
}

void QubitState::validate(double slack) const {
    if (!(std::isfinite(p) && std::isfinite(c.real()) && std::isfinite(c.imag())))
        raise(ErrorCode::validation_error, "state entries must be finite");
    if (p < -slack || p > 1.0 + slack)
        raise(ErrorCode::validation_error, "population p must lie in [0, 1]");
    if (std::norm(c) > p * (1.0 - p) + slack) {
        std::ostringstream os;
        os << "positivity violated: |c|^2 = " << std::norm(c) << " > p(1-p) = "
           << p * (1.0 - p);
        raise(ErrorCode::validation_error, os.str());
    }
}

Mat QubitState::density() const {
    Mat rho(2, 2);
    rho << Complex{p, 0.0}, c, std::conj(c), Complex{1.0 - p, 0.0};
    return rho;
}

QubitState gibbs_ancilla(double beta, double omega_a) {
    // 1/(1 + e^{-x}) evaluated stably; beta = 0 gives the maximally mixed state.
    double p = 1.0 / (1.0 + std::exp(-beta * omega_a));
    return QubitState{p, Complex{0.0, 0.0}};
}

Hamiltonians build_hamiltonians(const ModelParams& params) {
    using namespace qmath;
    params.validate();
    const Mat sx = sigma_x(), sy = sigma_y(), sz = sigma_z();
    const Mat id2 = identity(2);

    Hamiltonians h;
    h.h_s = kron(kron(-0.5 * params.omega_s * sz, id2), id2);
    h.h_a1 = kron(kron(id2, -0.5 * params.omega_a * sz), id2);
    h.h_a2 = kron(kron(id2, id2), -0.5 * params.omega_a * sz);
    h.h_i1 = params.jxx * kron(kron(sx, sx), id2) + params.jyy * kron(kron(sy, sy), id2);
    h.h_i2 = params.jzz * kron(kron(sz, id2), sz);
    h.h_tot = h.h_s + h.h_a1 + h.h_a2 + h.h_i1 + h.h_i2;
    return h;
}

EnergyParams energy_params(const ModelParams& params) {
    const double jp = params.jxx + params.jyy;
    const double jm = params.jxx - params.jyy;
    const double wa = params.omega_a, ws = params.omega_s, jzz = params.jzz;
    EnergyParams e;
    e.j_plus = jp;
    e.j_minus = jm;
    e.xi = std::hypot(2.0 * jp, 2.0 * jzz + wa - ws);
    e.nu = std::hypot(2.0 * jp, 2.0 * jzz - wa + ws);
    e.kappa = std::hypot(2.0 * jm, -2.0 * jzz + wa + ws);
    e.alpha = std::hypot(2.0 * jm, 2.0 * jzz + wa + ws);
    return e;
}

void validate_for_analytics(const ModelParams& params) {
    params.validate();
    if (!params.equal_beta())
        raise(ErrorCode::unequal_temperatures,
              "closed-form coefficients require beta1 == beta2");
}

}  // namespace ric
