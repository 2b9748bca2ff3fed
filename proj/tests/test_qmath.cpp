#include "doctest.h"

#include <cmath>

#include "oracles.hpp"
#include "qmath.hpp"

using namespace ric;
using qmath::Complex;
using qmath::Mat;

namespace {

double diff(const Mat& a, const Mat& b) { return (a - b).cwiseAbs().maxCoeff(); }

}  // namespace

TEST_CASE("kron identity and diagonal cases") {
    Mat id2 = qmath::identity(2);
    CHECK(diff(qmath::kron(id2, id2), qmath::identity(4)) == 0.0);

    Mat zi = qmath::kron(qmath::sigma_z(), id2);
    Mat expected = Mat::Zero(4, 4);
    expected.diagonal() << 1, 1, -1, -1;
    CHECK(diff(zi, expected) == 0.0);
}

TEST_CASE("kron sigma_x tensor sigma_x is the 4x4 anti-diagonal") {
    Mat xx = qmath::kron(qmath::sigma_x(), qmath::sigma_x());
    Mat expected = Mat::Zero(4, 4);
    expected(0, 3) = expected(1, 2) = expected(2, 1) = expected(3, 0) = 1.0;
    CHECK(diff(xx, expected) == 0.0);

    oracle::Rng rng(11);
    for (int trial = 0; trial < 20; ++trial) {
        Mat a = rng.hermitian(2), b = rng.hermitian(3);
        CHECK(diff(qmath::kron(a, b), oracle::naive_kron(a, b)) < 1e-15);
    }
}

TEST_CASE("hermitian_expm trivial generators") {
    CHECK(diff(qmath::hermitian_expm(Mat::Zero(4, 4), 2.7), qmath::identity(4)) < 1e-15);

    // h = (omega/2) sigma_z with omega = 2, t = pi/2
    Mat h = qmath::sigma_z();
    Mat u = qmath::hermitian_expm(h, M_PI / 2);
    Mat expected(2, 2);
    expected << std::polar(1.0, -M_PI / 2), 0, 0, std::polar(1.0, M_PI / 2);
    CHECK(diff(u, expected) < 1e-14);
}

TEST_CASE("hermitian_expm unitarity and inverse on random 8x8 generators") {
    oracle::Rng rng(17);
    for (int trial = 0; trial < 25; ++trial) {
        Mat h = rng.hermitian(8);
        double t = rng.uniform(-5.0, 5.0);
        Mat u = qmath::hermitian_expm(h, t);
        CHECK(diff(u.adjoint() * u, qmath::identity(8)) < qmath::tol::unitarity);
        CHECK(diff(u * qmath::hermitian_expm(h, -t), qmath::identity(8)) <
              qmath::tol::unitarity);
        CHECK(diff(u, oracle::taylor_expm(h, t)) < 1e-12);
    }
}

TEST_CASE("hermitian_expm rejects non-Hermitian input") {
    Mat bad = Mat::Zero(2, 2);
    bad(0, 1) = 1.0;  // missing conjugate partner
    CHECK_THROWS_AS(qmath::hermitian_expm(bad, 1.0), Error);
    try {
        qmath::hermitian_expm(bad, 1.0);
        FAIL("expected NonHermitianInput");
    } catch (const Error& e) {
        CHECK(e.code() == ErrorCode::non_hermitian_input);
        CHECK(std::string(e.what()).find("symmetry defect") != std::string::npos);
    }
}

TEST_CASE("partial trace recovers the factors of a product state") {
    oracle::Rng rng(23);
    Mat rho_s = rng.density(2), rho_a1 = rng.density(2), rho_a2 = rng.density(2);
    Mat full = qmath::kron(rho_s, qmath::kron(rho_a1, rho_a2));

    CHECK(diff(qmath::partial_trace(full, qmath::Keep::system), rho_s) < 1e-14);
    CHECK(diff(qmath::partial_trace(full, qmath::Keep::system_and_a1),
               qmath::kron(rho_s, rho_a1)) < 1e-14);
}

TEST_CASE("partial trace of the maximally mixed state") {
    Mat mixed8 = qmath::identity(8) / 8.0;
    CHECK(diff(qmath::partial_trace(mixed8, qmath::Keep::system),
               qmath::identity(2) / 2.0) < 1e-16);
}

TEST_CASE("partial trace preserves trace and Hermiticity, and is linear") {
    oracle::Rng rng(29);
    for (int trial = 0; trial < 20; ++trial) {
        Mat rho = rng.density(8);
        Mat reduced = qmath::partial_trace(rho, qmath::Keep::system);
        CHECK(std::abs(reduced.trace().real() - 1.0) < qmath::tol::trace);
        CHECK(qmath::hermiticity_defect(reduced) < 1e-14);
        CHECK(diff(reduced, oracle::naive_ptrace_last(
                                oracle::naive_ptrace_last(rho, 4, 2), 2, 2)) < 1e-15);

        Mat sigma = rng.density(8);
        double w = rng.uniform(0.0, 1.0);
        Mat lhs = qmath::partial_trace(w * rho + (1 - w) * sigma, qmath::Keep::system);
        Mat rhs = w * qmath::partial_trace(rho, qmath::Keep::system) +
                  (1 - w) * qmath::partial_trace(sigma, qmath::Keep::system);
        CHECK(diff(lhs, rhs) < qmath::tol::trace);
    }
}

TEST_CASE("partial trace rejects non-factorable dimensions") {
    CHECK_THROWS_AS(qmath::partial_trace(Mat::Identity(6, 6) / 6.0, qmath::Keep::system),
                    Error);
    CHECK_THROWS_AS(qmath::partial_trace_last(Mat::Identity(6, 6), 4), Error);
    try {
        qmath::partial_trace_last(Mat::Identity(6, 6), 4);
    } catch (const Error& e) {
        CHECK(e.code() == ErrorCode::bad_factorization);
    }
}

TEST_CASE("trace distance basics") {
    oracle::Rng rng(31);
    Mat rho = rng.density(4);
    CHECK(qmath::trace_distance(rho, rho) == 0.0);

    Mat ground = oracle::qubit_density(1.0, 0.0);
    Mat excited = oracle::qubit_density(0.0, 0.0);
    CHECK(qmath::trace_distance(ground, excited) == doctest::Approx(1.0).epsilon(1e-14));

    // diagonal difference has eigenvalues +-0.2
    Mat a = oracle::qubit_density(0.7, 0.0);
    Mat b = oracle::qubit_density(0.5, 0.0);
    CHECK(std::abs(qmath::trace_distance(a, b) - 0.2) < 1e-14);
}

TEST_CASE("trace distance is symmetric and satisfies the triangle inequality") {
    oracle::Rng rng(37);
    for (int trial = 0; trial < 25; ++trial) {
        Mat a = rng.density(4), b = rng.density(4), c = rng.density(4);
        double ab = qmath::trace_distance(a, b);
        double ba = qmath::trace_distance(b, a);
        CHECK(std::abs(ab - ba) < qmath::tol::trace);
        CHECK(ab <= qmath::trace_distance(a, c) + qmath::trace_distance(c, b) + 1e-12);
        CHECK(ab >= 0.0);
        CHECK(ab <= 1.0 + 1e-12);
    }
}

TEST_CASE("trace distance rejects mismatched dimensions") {
    CHECK_THROWS_AS(qmath::trace_distance(Mat::Identity(2, 2), Mat::Identity(4, 4)), Error);
}

TEST_CASE("density validation flags each broken invariant") {
    std::string why;
    CHECK(qmath::is_valid_density(oracle::qubit_density(0.3, 0.2), &why));

    Mat bad_trace = 1.1 * oracle::qubit_density(0.5, 0.0);
    CHECK_FALSE(qmath::is_valid_density(bad_trace, &why));
    CHECK(why.find("trace") != std::string::npos);

    Mat not_positive = oracle::qubit_density(0.5, Complex{0.7, 0.0});
    CHECK_FALSE(qmath::is_valid_density(not_positive, &why));
    CHECK(why.find("eigenvalue") != std::string::npos);
}
