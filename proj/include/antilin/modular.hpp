#pragma once

// Twisted direct products and the finite-dimensional Tomita-Takesaki triple.
//
// For eta : H_b -> H_a and xi : H_a -> H_b of equal parity, the twisted product
//     (eta ~x xi)(phi^a (x) phi^b) = eta phi^b (x) xi phi^a
// extends to a linear or antilinear operator on H_a (x) H_b. In the a-major
// product basis its matrix is M[(p,q),(i,j)] = eta(p,j) * xi(q,i); the
// antilinear case acts as v |-> M conj(v) like every AntilinearMap.
//
// Subscript convention for the lifted operators of an ordered pair (phi, psi):
//     S~_{phi,psi} = j_phi ~x s_psi,   F~_{phi,psi} = s_phi ~x j_psi,
//     D~_{phi,psi} = s_phi ~x s_psi,   J_{phi,psi}  = j_phi ~x j_psi,
// with the first factor the b->a map and the second the a->b map. The
// Tomita operator S_{phi,psi} has polar phase J_{psi,phi}.

#include <variant>

#include "antilin/bipartite.hpp"

namespace antilin {

enum class Parity { Linear, Antilinear };

std::string_view to_string(Parity p) noexcept;

using AnyMap = std::variant<ComplexMatrix, AntilinearMap>;

class TwistedOperator {
 public:
  TwistedOperator(Parity parity, ComplexMatrix mat, ComplexMatrix eta, ComplexMatrix xi);

  Parity parity() const noexcept { return parity_; }
  const ComplexMatrix& mat() const noexcept { return mat_; }
  Index dim_a() const noexcept { return eta_.rows(); }
  Index dim_b() const noexcept { return xi_.rows(); }
  /// Factor matrices as supplied (eta : H_b -> H_a, xi : H_a -> H_b).
  const ComplexMatrix& eta() const noexcept { return eta_; }
  const ComplexMatrix& xi() const noexcept { return xi_; }

  ComplexVector apply(const ComplexVector& v) const;

  /// Dense Hermitian adjoint: conjugate transpose (linear) or transpose (antilinear).
  TwistedOperator adjoint() const;

  /// The operator as an AntilinearMap on H_a (x) H_b. Throws MixedParity if linear.
  AntilinearMap as_antilinear() const;

 private:
  Parity parity_;
  ComplexMatrix mat_;
  ComplexMatrix eta_;
  ComplexMatrix xi_;
};

TwistedOperator twisted_product(const ComplexMatrix& eta_ab, const ComplexMatrix& xi_ba);
TwistedOperator twisted_product(const AntilinearMap& eta_ab, const AntilinearMap& xi_ba);
/// Runtime-tagged variant; throws MixedParity for one linear and one antilinear factor.
TwistedOperator twisted_product(const AnyMap& eta_ab, const AnyMap& xi_ba);

/// (eta1 ~x xi1) o (eta2 ~x xi2) = (eta1 xi2) (x) (xi1 eta2), a plain Kronecker
/// product of linear maps. Computed from the factors, not the dense matrices.
ComplexMatrix twisted_compose(const TwistedOperator& p1, const TwistedOperator& p2);

struct LiftedOperators {
  TwistedOperator S;      // j_phi ~x s_psi
  TwistedOperator F;      // s_phi ~x j_psi
  TwistedOperator Delta;  // s_phi ~x s_psi
  TwistedOperator J;      // j_phi ~x j_psi
};

LiftedOperators lift_operators(const BipartiteVector& phi, const BipartiteVector& psi);

struct ModularTriple {
  AntilinearMap S;           // S (A (x) 1) psi = (A^* (x) 1) phi
  ComplexMatrix Delta;       // omega^a_phi (x) (omega^b_psi)^{-1}
  ComplexMatrix Delta_sqrt;  // positive part of S
  AntilinearMap J;           // polar phase of S
};

/// Builds S_{phi,psi} from its defining relation on the matrix units E_ij.
/// Throws NotSeparating unless psi is completely entangled (forces dim_a == dim_b).
ModularTriple tomita(const BipartiteVector& phi, const BipartiteVector& psi);

struct GnsReport {
  bool completely_entangled = false;
  Index rank_a = 0;
  Index rank_b = 0;
  Index cyclic_rank = 0;  // dim span{(E_ij (x) 1) psi}
};

GnsReport gns_report(const BipartiteVector& psi);
bool gns_check(const BipartiteVector& psi);

}  // namespace antilin
