#pragma once

#include <Eigen/Dense>
#include <complex>

#include "errors.hpp"

namespace ric::qmath {

using Mat = Eigen::MatrixXcd;
using Complex = std::complex<double>;

// Numerical tolerances used across the library, kept in one place.
namespace tol {
inline constexpr double hermiticity = 1e-10;          // gate on expm input
inline constexpr double unitarity = 1e-11;            // |U^dag U - I|
inline constexpr double trace = 1e-12;                // density trace drift
inline constexpr double density_hermiticity = 1e-12;  // |rho - rho^dag|
inline constexpr double positivity = 1e-10;           // eigmin >= -positivity
inline constexpr double state_slack = 1e-12;          // qubit-state round-off
inline constexpr double frozen_eta = 1e-14;           // |1 - eta| frozen cutoff
}  // namespace tol

Mat sigma_x();
Mat sigma_y();
Mat sigma_z();
Mat identity(Eigen::Index dim);

Mat kron(const Mat& a, const Mat& b);

/// exp(-i h t) for Hermitian h, via eigendecomposition U = V exp(-i L t) V^dag.
/// Throws NonHermitianInput when the symmetry defect exceeds tol::hermiticity.
Mat hermitian_expm(const Mat& h, double t);

// Subsystem ordering is fixed everywhere as S (x) A1 (x) A2; the composite
// index is i = iS*4 + iA1*2 + iA2, so tracing out the trailing factor of
// dimension d_traced sums rho(i*d_traced + k, j*d_traced + k) over k.
Mat partial_trace_last(const Mat& rho, Eigen::Index keep_dim);

enum class Keep { system, system_and_a1 };

/// Partial trace of an 8x8 state down to the system (2x2) or system+A1 (4x4).
Mat partial_trace(const Mat& rho, Keep keep);

/// (1/2) sum |eig(a - b)| for Hermitian a, b of equal dimension.
double trace_distance(const Mat& a, const Mat& b);

double hermiticity_defect(const Mat& m);
double max_abs(const Mat& m);

/// Checks Hermiticity, unit trace and positivity at the density-matrix
/// tolerances; fills `why` with the violated invariant when given.
bool is_valid_density(const Mat& rho, std::string* why = nullptr);

}  // namespace ric::qmath
