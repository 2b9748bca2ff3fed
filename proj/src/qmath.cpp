#include "qmath.hpp"

#include <Eigen/Eigenvalues>
#include <sstream>

namespace ric::qmath {

namespace {
const Complex kI{0.0, 1.0};
}

Mat sigma_x() {
    Mat m(2, 2);
    m << 0, 1, 1, 0;
    return m;
}

Mat sigma_y() {
    Mat m(2, 2);
    m << 0, -kI, kI, 0;
    return m;
}

Mat sigma_z() {
    Mat m(2, 2);
    m << 1, 0, 0, -1;
    return m;
}

Mat identity(Eigen::Index dim) { return Mat::Identity(dim, dim); }

Mat kron(const Mat& a, const Mat& b) {
    Mat out(a.rows() * b.rows(), a.cols() * b.cols());
    for (Eigen::Index i = 0; i < a.rows(); ++i)
        for (Eigen::Index j = 0; j < a.cols(); ++j)
            out.block(i * b.rows(), j * b.cols(), b.rows(), b.cols()) = a(i, j) * b;
    return out;
}

double hermiticity_defect(const Mat& m) {
    return (m - m.adjoint()).cwiseAbs().maxCoeff();
}

double max_abs(const Mat& m) { return m.cwiseAbs().maxCoeff(); }

Mat hermitian_expm(const Mat& h, double t) {
    if (h.rows() != h.cols())
        raise(ErrorCode::dimension_mismatch, "hermitian_expm: matrix must be square");
    if (hermiticity_defect(h) > tol::hermiticity)
        raise(ErrorCode::non_hermitian_input,
              "hermitian_expm: input symmetry defect exceeds tolerance");
    Eigen::SelfAdjointEigenSolver<Mat> es(h);
    const auto& lambda = es.eigenvalues();
    const Mat& v = es.eigenvectors();
    Eigen::VectorXcd phases(lambda.size());
    for (Eigen::Index k = 0; k < lambda.size(); ++k)
        phases(k) = std::exp(-kI * lambda(k) * t);
    return v * phases.asDiagonal() * v.adjoint();
}

Mat partial_trace_last(const Mat& rho, Eigen::Index keep_dim) {
    const Eigen::Index n = rho.rows();
    if (rho.cols() != n || keep_dim <= 0 || n % keep_dim != 0)
        raise(ErrorCode::bad_factorization,
              "partial_trace: dimension does not factor as keep x traced");
    const Eigen::Index d = n / keep_dim;
    Mat out = Mat::Zero(keep_dim, keep_dim);
    for (Eigen::Index i = 0; i < keep_dim; ++i)
        for (Eigen::Index j = 0; j < keep_dim; ++j)
            for (Eigen::Index k = 0; k < d; ++k)
                out(i, j) += rho(i * d + k, j * d + k);
    return out;
}

Mat partial_trace(const Mat& rho, Keep keep) {
    if (rho.rows() != 8 || rho.cols() != 8)
        raise(ErrorCode::bad_factorization, "partial_trace: expected an 8x8 state");
    Mat sys_a1 = partial_trace_last(rho, 4);  // trace out A2
    if (keep == Keep::system_and_a1) return sys_a1;
    return partial_trace_last(sys_a1, 2);  // trace out A1
}

double trace_distance(const Mat& a, const Mat& b) {
    if (a.rows() != b.rows() || a.cols() != b.cols())
        raise(ErrorCode::dimension_mismatch, "trace_distance: dimension mismatch");
    Eigen::SelfAdjointEigenSolver<Mat> es(a - b, Eigen::EigenvaluesOnly);
    return 0.5 * es.eigenvalues().cwiseAbs().sum();
}

bool is_valid_density(const Mat& rho, std::string* why) {
    auto fail = [&](const std::string& msg) {
        if (why) *why = msg;
        return false;
    };
    if (rho.rows() != rho.cols()) return fail("not square");
    double herm = hermiticity_defect(rho);
    if (herm > tol::density_hermiticity) {
        std::ostringstream os;
        os << "hermiticity defect " << herm;
        return fail(os.str());
    }
    double trace_drift = std::abs(rho.trace() - Complex{1.0, 0.0});
    if (trace_drift > tol::trace) {
        std::ostringstream os;
        os << "trace drift " << trace_drift;
        return fail(os.str());
    }
    Eigen::SelfAdjointEigenSolver<Mat> es(rho, Eigen::EigenvaluesOnly);
    double eig_min = es.eigenvalues().minCoeff();
    if (eig_min < -tol::positivity) {
        std::ostringstream os;
        os << "negative eigenvalue " << eig_min;
        return fail(os.str());
    }
    return true;
}

}  // namespace ric::qmath
