// Test-only reference implementations, kept deliberately independent of the
// library code paths they check: straight-loop Kronecker products, a Taylor
// scaling-and-squaring matrix exponential, index-juggling partial traces and
// brute-force collisions assembled from those pieces.
#pragma once

#include <complex>
#include <random>
#include <vector>

#include <Eigen/Dense>

namespace oracle {

using Mat = Eigen::MatrixXcd;
using Complex = std::complex<double>;

inline Mat naive_kron(const Mat& a, const Mat& b) {
    Mat out = Mat::Zero(a.rows() * b.rows(), a.cols() * b.cols());
    for (Eigen::Index i = 0; i < out.rows(); ++i)
        for (Eigen::Index j = 0; j < out.cols(); ++j)
            out(i, j) = a(i / b.rows(), j / b.cols()) * b(i % b.rows(), j % b.cols());
    return out;
}

/// exp(-i h t) by scaling-and-squaring on a plain Taylor series.
inline Mat taylor_expm(const Mat& h, double t) {
    const Eigen::Index n = h.rows();
    Mat a = Complex{0.0, -1.0} * t * h;
    int squarings = 0;
    double norm = a.cwiseAbs().rowwise().sum().maxCoeff();
    while (norm > 0.25) {
        a *= 0.5;
        norm *= 0.5;
        ++squarings;
    }
    Mat result = Mat::Identity(n, n);
    Mat term = Mat::Identity(n, n);
    for (int k = 1; k <= 24; ++k) {
        term = term * a / static_cast<double>(k);
        result += term;
    }
    for (int k = 0; k < squarings; ++k) result = result * result;
    return result;
}

/// Trace over the trailing factor: rho on keep (x) traced.
inline Mat naive_ptrace_last(const Mat& rho, Eigen::Index keep, Eigen::Index traced) {
    Mat out = Mat::Zero(keep, keep);
    for (Eigen::Index i = 0; i < keep; ++i)
        for (Eigen::Index j = 0; j < keep; ++j)
            for (Eigen::Index k = 0; k < traced; ++k)
                out(i, j) += rho(i * traced + k, j * traced + k);
    return out;
}

inline Mat pauli_x() {
    Mat m(2, 2);
    m << 0, 1, 1, 0;
    return m;
}

inline Mat pauli_y() {
    Mat m(2, 2);
    m << 0, Complex{0, -1}, Complex{0, 1}, 0;
    return m;
}

inline Mat pauli_z() {
    Mat m(2, 2);
    m << 1, 0, 0, -1;
    return m;
}

inline Mat qubit_density(double p, Complex c) {
    Mat rho(2, 2);
    rho << Complex{p, 0}, c, std::conj(c), Complex{1 - p, 0};
    return rho;
}

inline double gibbs_population(double beta, double omega_a) {
    return 1.0 / (1.0 + std::exp(-beta * omega_a));
}

struct BruteParams {
    double omega_s, omega_a, jxx, jyy, jzz, beta1, beta2, tau;
};

inline Mat brute_total_hamiltonian(const BruteParams& p) {
    const Mat id = Mat::Identity(2, 2);
    const Mat sx = pauli_x(), sy = pauli_y(), sz = pauli_z();
    Mat h = naive_kron(naive_kron(-0.5 * p.omega_s * sz, id), id);
    h += naive_kron(naive_kron(id, -0.5 * p.omega_a * sz), id);
    h += naive_kron(naive_kron(id, id), -0.5 * p.omega_a * sz);
    h += p.jxx * naive_kron(naive_kron(sx, sx), id);
    h += p.jyy * naive_kron(naive_kron(sy, sy), id);
    h += p.jzz * naive_kron(naive_kron(sz, id), sz);
    return h;
}

/// One two-bath collision computed end to end with the reference pieces.
inline Mat brute_collision(const BruteParams& p, double state_p, Complex state_c) {
    Mat u = taylor_expm(brute_total_hamiltonian(p), p.tau);
    Mat rho = naive_kron(
        naive_kron(qubit_density(state_p, state_c),
                   qubit_density(gibbs_population(p.beta1, p.omega_a), 0.0)),
        qubit_density(gibbs_population(p.beta2, p.omega_a), 0.0));
    Mat evolved = u * rho * u.adjoint();
    return naive_ptrace_last(naive_ptrace_last(evolved, 4, 2), 2, 2);
}

/// One collision of the single-bath Heisenberg comparison model.
inline Mat single_bath_collision(const BruteParams& p, double state_p, Complex state_c) {
    const Mat id = Mat::Identity(2, 2);
    const Mat sx = pauli_x(), sy = pauli_y(), sz = pauli_z();
    Mat h = naive_kron(-0.5 * p.omega_s * sz, id) + naive_kron(id, -0.5 * p.omega_a * sz);
    h += p.jxx * naive_kron(sx, sx) + p.jyy * naive_kron(sy, sy) + p.jzz * naive_kron(sz, sz);
    Mat u = taylor_expm(h, p.tau);
    Mat rho = naive_kron(qubit_density(state_p, state_c),
                         qubit_density(gibbs_population(p.beta1, p.omega_a), 0.0));
    Mat evolved = u * rho * u.adjoint();
    return naive_ptrace_last(evolved, 2, 2);
}

// Deterministic draws for property tests.
class Rng {
public:
    explicit Rng(std::uint64_t seed) : gen_(seed) {}

    double uniform(double lo, double hi) {
        return lo + (hi - lo) * std::uniform_real_distribution<double>(0.0, 1.0)(gen_);
    }

    BruteParams params(bool equal_beta = true) {
        BruteParams p;
        p.omega_s = uniform(0.1, 5.0);
        p.omega_a = uniform(0.1, 5.0);
        p.jxx = uniform(0.0, 5.0);
        p.jyy = uniform(0.0, 5.0);
        p.jzz = uniform(0.0, 5.0);
        p.tau = uniform(0.01, 20.0);
        p.beta1 = uniform(0.0, 10.0);
        p.beta2 = equal_beta ? p.beta1 : uniform(0.0, 10.0);
        return p;
    }

    /// Random valid qubit state; coherence scaled inside the positivity disk.
    std::pair<double, Complex> state(bool with_coherence = true) {
        double p = uniform(0.05, 0.95);
        if (!with_coherence) return {p, Complex{0.0, 0.0}};
        double magnitude = std::sqrt(p * (1 - p)) * uniform(0.05, 0.99);
        return {p, std::polar(magnitude, uniform(-3.1, 3.1))};
    }

    /// Random Hermitian matrix with entries of order one.
    Mat hermitian(Eigen::Index n) {
        Mat m(n, n);
        for (Eigen::Index i = 0; i < n; ++i)
            for (Eigen::Index j = 0; j < n; ++j)
                m(i, j) = Complex{uniform(-1, 1), uniform(-1, 1)};
        return 0.5 * (m + m.adjoint().eval());
    }

    /// Random density matrix from a random positive square root.
    Mat density(Eigen::Index n) {
        Mat a(n, n);
        for (Eigen::Index i = 0; i < n; ++i)
            for (Eigen::Index j = 0; j < n; ++j)
                a(i, j) = Complex{uniform(-1, 1), uniform(-1, 1)};
        Mat rho = a * a.adjoint();
        return rho / rho.trace();
    }

private:
    std::mt19937_64 gen_;
};

}  // namespace oracle
