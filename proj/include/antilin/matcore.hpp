#pragma once

// Dense complex linear algebra shared by every other module: SVD, PSD square
// roots, norms, fidelity and partial traces. Matrices are Eigen dense types;
// everything here is a pure function of its arguments.

#include <complex>
#include <string_view>

#include <Eigen/Dense>

#include "antilin/error.hpp"

namespace antilin {

using Complex = std::complex<double>;
using ComplexMatrix = Eigen::MatrixXcd;
using ComplexVector = Eigen::VectorXcd;
using RealVector = Eigen::VectorXd;
using Index = Eigen::Index;

enum class Side { A, B };

namespace tol {
/// Singular values below kRankRelative * sigma_max count as zero.
inline constexpr double kRankRelative = 1e-12;
/// Used instead of the relative cutoff when sigma_max itself is zero.
inline constexpr double kRankAbsolute = 1e-14;
/// Max-entry deviation of (H - H^dagger)/2 tolerated for "Hermitian" input.
inline constexpr double kHermitian = 1e-10;
/// Eigenvalues in [-kNegativeClamp, 0) are treated as roundoff and clamped.
inline constexpr double kNegativeClamp = 1e-10;
/// Unit-norm checks on vectors.
inline constexpr double kUnit = 1e-10;
}  // namespace tol

struct SvdResult {
  ComplexMatrix U;  // rows x k, orthonormal columns, k = min(rows, cols)
  RealVector sigma; // nonincreasing, nonnegative
  ComplexMatrix V;  // cols x k, orthonormal columns
  Index rank = 0;
};

struct Norms {
  double operator_norm = 0.0;
  double trace_norm = 0.0;
  double hs_norm = 0.0;
};

struct HermitianEigen {
  RealVector values;     // ascending
  ComplexMatrix vectors; // columns are eigenvectors
};

bool is_finite(const ComplexMatrix& m);
void require_finite(const ComplexMatrix& m, std::string_view what);
void require_square(const ComplexMatrix& m, std::string_view what);

/// Rank of a nonincreasing singular value list under the relative cutoff.
Index numerical_rank(const RealVector& sigma);

SvdResult svd(const ComplexMatrix& m);

/// Checks Hermiticity, symmetrizes, then diagonalizes.
HermitianEigen hermitian_eigen(const ComplexMatrix& h);

/// Eigenvalues are validated (>= -kNegativeClamp) and clamped at zero;
/// values inside the roundoff floor of the spectrum are zeroed as well.
HermitianEigen psd_eigen(const ComplexMatrix& h);

ComplexMatrix psd_sqrt(const ComplexMatrix& h);

/// Inverse of a positive definite matrix; NotPositive if it is rank deficient.
ComplexMatrix pd_inverse(const ComplexMatrix& h);

/// Orthogonal projection onto the range (support) of a PSD matrix.
ComplexMatrix support_projection(const ComplexMatrix& h);

Norms norms(const ComplexMatrix& m);

/// Tr (sqrt(omega) rho sqrt(omega))^{1/2}. No normalization is assumed.
double fidelity(const ComplexMatrix& rho, const ComplexMatrix& omega);

/// Partial trace of an operator on H_a (x) H_b (a-major product basis),
/// keeping the factor named by `keep`.
ComplexMatrix partial_trace(const ComplexMatrix& m, Index dim_a, Index dim_b, Side keep);

ComplexMatrix kron(const ComplexMatrix& a, const ComplexMatrix& b);
ComplexVector kron(const ComplexVector& a, const ComplexVector& b);

/// Max-entry absolute difference; the usual residual measure in tests.
double max_abs_diff(const ComplexMatrix& a, const ComplexMatrix& b);

}  // namespace antilin
