#include "antilin/matcore.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>

namespace antilin {

namespace {

std::string shape(const ComplexMatrix& m) {
  return std::to_string(m.rows()) + "x" + std::to_string(m.cols());
}

}  // namespace

bool is_finite(const ComplexMatrix& m) {
  for (Index j = 0; j < m.cols(); ++j) {
    for (Index i = 0; i < m.rows(); ++i) {
      if (!std::isfinite(m(i, j).real()) || !std::isfinite(m(i, j).imag())) return false;
    }
  }
  return true;
}

void require_finite(const ComplexMatrix& m, std::string_view what) {
  if (!is_finite(m)) throw Error(ErrorCode::NonFinite, std::string(what) + " has NaN/Inf entries");
}

void require_square(const ComplexMatrix& m, std::string_view what) {
  if (m.rows() != m.cols()) {
    throw Error(ErrorCode::DimMismatch, std::string(what) + " must be square, got " + shape(m));
  }
}

Index numerical_rank(const RealVector& sigma) {
  if (sigma.size() == 0) return 0;
  const double top = sigma(0);
  const double cutoff = top > 0.0 ? tol::kRankRelative * top : tol::kRankAbsolute;
  Index r = 0;
  for (Index i = 0; i < sigma.size(); ++i) {
    if (sigma(i) > cutoff) ++r;
  }
  return r;
}

SvdResult svd(const ComplexMatrix& m) {
  require_finite(m, "svd input");
  Eigen::JacobiSVD<ComplexMatrix> dec(m, Eigen::ComputeThinU | Eigen::ComputeThinV);
  SvdResult out;
  out.U = dec.matrixU();
  out.sigma = dec.singularValues();
  out.V = dec.matrixV();
  out.rank = numerical_rank(out.sigma);
  return out;
}

HermitianEigen hermitian_eigen(const ComplexMatrix& h) {
  require_finite(h, "Hermitian input");
  require_square(h, "Hermitian input");
  const ComplexMatrix anti = (h - h.adjoint()) * 0.5;
  const double dev = anti.size() ? anti.cwiseAbs().maxCoeff() : 0.0;
  if (dev > tol::kHermitian) {
    throw Error(ErrorCode::NotHermitian, "max |(H - H^*)/2| = " + std::to_string(dev));
  }
  const ComplexMatrix sym = (h + h.adjoint()) * 0.5;
  Eigen::SelfAdjointEigenSolver<ComplexMatrix> es(sym);
  return {es.eigenvalues(), es.eigenvectors()};
}

HermitianEigen psd_eigen(const ComplexMatrix& h) {
  HermitianEigen e = hermitian_eigen(h);
  if (e.values.size() == 0) return e;
  if (e.values.minCoeff() < -tol::kNegativeClamp) {
    throw Error(ErrorCode::NotPositive, "eigenvalue " + std::to_string(e.values.minCoeff()));
  }
  const double top = e.values.cwiseAbs().maxCoeff();
  const double floor = 64.0 * std::numeric_limits<double>::epsilon() * top;
  for (Index i = 0; i < e.values.size(); ++i) {
    if (e.values(i) <= floor) e.values(i) = 0.0;
  }
  return e;
}

ComplexMatrix psd_sqrt(const ComplexMatrix& h) {
  const HermitianEigen e = psd_eigen(h);
  const RealVector roots = e.values.cwiseSqrt();
  return e.vectors * roots.asDiagonal() * e.vectors.adjoint();
}

ComplexMatrix pd_inverse(const ComplexMatrix& h) {
  const HermitianEigen e = psd_eigen(h);
  const double top = e.values.size() ? e.values.maxCoeff() : 0.0;
  const double cutoff = top > 0.0 ? tol::kRankRelative * top : tol::kRankAbsolute;
  for (Index i = 0; i < e.values.size(); ++i) {
    if (e.values(i) <= cutoff) throw Error(ErrorCode::NotPositive, "matrix is not invertible");
  }
  const RealVector inv = e.values.cwiseInverse();
  return e.vectors * inv.asDiagonal() * e.vectors.adjoint();
}

ComplexMatrix support_projection(const ComplexMatrix& h) {
  const HermitianEigen e = psd_eigen(h);
  const double top = e.values.size() ? e.values.maxCoeff() : 0.0;
  const double cutoff = top > 0.0 ? tol::kRankRelative * top : tol::kRankAbsolute;
  ComplexMatrix q = ComplexMatrix::Zero(h.rows(), h.cols());
  for (Index i = 0; i < e.values.size(); ++i) {
    if (e.values(i) > cutoff) q += e.vectors.col(i) * e.vectors.col(i).adjoint();
  }
  return q;
}

Norms norms(const ComplexMatrix& m) {
  require_finite(m, "norm input");
  const RealVector s = Eigen::JacobiSVD<ComplexMatrix>(m).singularValues();
  Norms n;
  if (s.size() == 0) return n;
  n.operator_norm = s(0);
  n.trace_norm = s.sum();
  n.hs_norm = std::sqrt(s.squaredNorm());
  return n;
}

double fidelity(const ComplexMatrix& rho, const ComplexMatrix& omega) {
  require_square(rho, "rho");
  require_square(omega, "omega");
  if (rho.rows() != omega.rows()) {
    throw Error(ErrorCode::DimMismatch, "fidelity of " + shape(rho) + " and " + shape(omega));
  }
  // |sqrt(rho) sqrt(omega)|_1 avoids taking a second square root of
  // eigenvalues near zero.
  const ComplexMatrix prod = psd_sqrt(rho) * psd_sqrt(omega);
  return Eigen::JacobiSVD<ComplexMatrix>(prod).singularValues().sum();
}

ComplexMatrix partial_trace(const ComplexMatrix& m, Index dim_a, Index dim_b, Side keep) {
  if (dim_a < 1 || dim_b < 1 || m.rows() != dim_a * dim_b || m.cols() != dim_a * dim_b) {
    throw Error(ErrorCode::DimMismatch, "partial_trace: " + shape(m) + " is not (" +
                                            std::to_string(dim_a) + "*" + std::to_string(dim_b) +
                                            ")^2");
  }
  if (keep == Side::A) {
    ComplexMatrix out = ComplexMatrix::Zero(dim_a, dim_a);
    for (Index i = 0; i < dim_a; ++i)
      for (Index k = 0; k < dim_a; ++k)
        for (Index j = 0; j < dim_b; ++j) out(i, k) += m(i * dim_b + j, k * dim_b + j);
    return out;
  }
  ComplexMatrix out = ComplexMatrix::Zero(dim_b, dim_b);
  for (Index j = 0; j < dim_b; ++j)
    for (Index l = 0; l < dim_b; ++l)
      for (Index i = 0; i < dim_a; ++i) out(j, l) += m(i * dim_b + j, i * dim_b + l);
  return out;
}

ComplexMatrix kron(const ComplexMatrix& a, const ComplexMatrix& b) {
  ComplexMatrix out(a.rows() * b.rows(), a.cols() * b.cols());
  for (Index i = 0; i < a.rows(); ++i)
    for (Index j = 0; j < a.cols(); ++j)
      out.block(i * b.rows(), j * b.cols(), b.rows(), b.cols()) = a(i, j) * b;
  return out;
}

ComplexVector kron(const ComplexVector& a, const ComplexVector& b) {
  ComplexVector out(a.size() * b.size());
  for (Index i = 0; i < a.size(); ++i) out.segment(i * b.size(), b.size()) = a(i) * b;
  return out;
}

double max_abs_diff(const ComplexMatrix& a, const ComplexMatrix& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) {
    throw Error(ErrorCode::DimMismatch, "compare " + shape(a) + " with " + shape(b));
  }
  if (a.size() == 0) return 0.0;
  return (a - b).cwiseAbs().maxCoeff();
}

}  // namespace antilin
