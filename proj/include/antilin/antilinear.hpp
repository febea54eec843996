#pragma once

// Antilinear maps between finite-dimensional Hilbert spaces.
//
// Representation convention (used everywhere in this library): an antilinear
// map t : C^n -> C^m is stored as an m x n matrix M and acts as
//
//     t(v) = M * conj(v)
//
// in the fixed standard bases. With this convention
//
//   * the adjoint t^*, defined by <y, t x> = <x, t^* y>, has matrix M^T
//     (transpose, no conjugation);
//   * antilinear o antilinear is linear with matrix M1 * conj(M2);
//   * linear L o t is antilinear with matrix L * M;
//   * t o linear L is antilinear with matrix M * conj(L).
//
// Linear maps are plain ComplexMatrix values. There is deliberately no
// arithmetic between a ComplexMatrix and an AntilinearMap: the sum of a
// linear and an antilinear map is neither, so it does not compile.

#include "antilin/matcore.hpp"

namespace antilin {

class AntilinearMap {
 public:
  /// Throws NonFinite on NaN/Inf entries.
  explicit AntilinearMap(ComplexMatrix mat);

  /// Complex conjugation v -> conj(v) on C^d.
  static AntilinearMap conjugation(Index d);
  static AntilinearMap zero(Index dim_codomain, Index dim_domain);

  Index dim_domain() const noexcept { return mat_.cols(); }
  Index dim_codomain() const noexcept { return mat_.rows(); }
  const ComplexMatrix& mat() const noexcept { return mat_; }

  ComplexVector apply(const ComplexVector& v) const;
  ComplexVector operator()(const ComplexVector& v) const { return apply(v); }

  AntilinearMap adjoint() const;

  AntilinearMap& operator+=(const AntilinearMap& other);
  AntilinearMap& operator-=(const AntilinearMap& other);

 private:
  ComplexMatrix mat_;
};

AntilinearMap operator+(AntilinearMap lhs, const AntilinearMap& rhs);
AntilinearMap operator-(AntilinearMap lhs, const AntilinearMap& rhs);
/// (alpha t)(v) = alpha * t(v).
AntilinearMap operator*(Complex alpha, const AntilinearMap& t);

/// t1 o t2, a linear map.
ComplexMatrix compose(const AntilinearMap& t1, const AntilinearMap& t2);
/// linear o t.
AntilinearMap compose(const ComplexMatrix& linear, const AntilinearMap& t);
/// t o linear.
AntilinearMap compose(const AntilinearMap& t, const ComplexMatrix& linear);

/// Tr(t1 o t2). Satisfies trace_product(t1, t2) == conj(trace_product(t2, t1)).
Complex trace_product(const AntilinearMap& t1, const AntilinearMap& t2);

/// Polar decomposition of an antilinear map t : H_x -> H_y,
///
///     t = positive_codomain o phase = phase o positive_domain,
///
/// with phase an antilinear partial isometry whose source and target
/// projections are support_domain and support_codomain. The phase is set to
/// zero off the support; only composite identities are unique.
struct PolarParts {
  ComplexMatrix positive_codomain;  // (t t^*)^{1/2} on H_y
  ComplexMatrix positive_domain;    // (t^* t)^{1/2} on H_x
  AntilinearMap phase;
  ComplexMatrix support_domain;     // phase^* o phase
  ComplexMatrix support_codomain;   // phase o phase^*
  Index rank = 0;
};

PolarParts polar(const AntilinearMap& t);

}  // namespace antilin
