#include "antilin/antilinear.hpp"

#include <string>

namespace antilin {

namespace {

[[noreturn]] void mismatch(const char* op, Index got, Index want) {
  throw Error(ErrorCode::DimMismatch, std::string(op) + ": dimension " + std::to_string(got) +
                                          " does not match " + std::to_string(want));
}

void check_same_shape(const ComplexMatrix& a, const ComplexMatrix& b, const char* op) {
  if (a.rows() != b.rows()) mismatch(op, b.rows(), a.rows());
  if (a.cols() != b.cols()) mismatch(op, b.cols(), a.cols());
}

}  // namespace

AntilinearMap::AntilinearMap(ComplexMatrix mat) : mat_(std::move(mat)) {
  require_finite(mat_, "antilinear map");
}

AntilinearMap AntilinearMap::conjugation(Index d) {
  return AntilinearMap(ComplexMatrix::Identity(d, d));
}

AntilinearMap AntilinearMap::zero(Index dim_codomain, Index dim_domain) {
  return AntilinearMap(ComplexMatrix::Zero(dim_codomain, dim_domain));
}

ComplexVector AntilinearMap::apply(const ComplexVector& v) const {
  if (v.size() != dim_domain()) mismatch("apply", v.size(), dim_domain());
  return mat_ * v.conjugate();
}

AntilinearMap AntilinearMap::adjoint() const { return AntilinearMap(mat_.transpose()); }

AntilinearMap& AntilinearMap::operator+=(const AntilinearMap& other) {
  check_same_shape(mat_, other.mat_, "antilinear sum");
  mat_ += other.mat_;
  return *this;
}

AntilinearMap& AntilinearMap::operator-=(const AntilinearMap& other) {
  check_same_shape(mat_, other.mat_, "antilinear difference");
  mat_ -= other.mat_;
  return *this;
}

AntilinearMap operator+(AntilinearMap lhs, const AntilinearMap& rhs) { return lhs += rhs; }
AntilinearMap operator-(AntilinearMap lhs, const AntilinearMap& rhs) { return lhs -= rhs; }

AntilinearMap operator*(Complex alpha, const AntilinearMap& t) {
  return AntilinearMap(alpha * t.mat());
}

ComplexMatrix compose(const AntilinearMap& t1, const AntilinearMap& t2) {
  if (t1.dim_domain() != t2.dim_codomain()) mismatch("compose", t2.dim_codomain(), t1.dim_domain());
  return t1.mat() * t2.mat().conjugate();
}

AntilinearMap compose(const ComplexMatrix& linear, const AntilinearMap& t) {
  if (linear.cols() != t.dim_codomain()) mismatch("compose", t.dim_codomain(), linear.cols());
  return AntilinearMap(linear * t.mat());
}

AntilinearMap compose(const AntilinearMap& t, const ComplexMatrix& linear) {
  if (t.dim_domain() != linear.rows()) mismatch("compose", linear.rows(), t.dim_domain());
  return AntilinearMap(t.mat() * linear.conjugate());
}

Complex trace_product(const AntilinearMap& t1, const AntilinearMap& t2) {
  if (t1.dim_codomain() != t2.dim_domain()) {
    mismatch("trace_product", t2.dim_domain(), t1.dim_codomain());
  }
  return compose(t1, t2).trace();
}

PolarParts polar(const AntilinearMap& t) {
  const SvdResult s = svd(t.mat());
  const Index r = s.rank;
  const ComplexMatrix u = s.U.leftCols(r);
  const ComplexMatrix v = s.V.leftCols(r);
  const RealVector sig = s.sigma.head(r);

  PolarParts p{
      .positive_codomain = u * sig.asDiagonal() * u.adjoint(),
      .positive_domain = (v * sig.asDiagonal() * v.adjoint()).conjugate(),
      .phase = AntilinearMap(u * v.adjoint()),
      .support_domain = (v * v.adjoint()).conjugate(),
      .support_codomain = u * u.adjoint(),
      .rank = r,
  };
  return p;
}

}  // namespace antilin
