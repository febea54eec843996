#pragma once

// Vectors in H_a (x) H_b and their EPR maps.
//
// A bipartite vector is stored by its coefficient matrix C (dim_a x dim_b):
//     psi = sum_ij C(i, j) e_i^a (x) e_j^b.
// Row index = a-system, column index = b-system. The flattened vector uses
// the a-major product basis, index i * dim_b + j.
//
// The EPR maps of psi are the antilinear maps
//     s_ba : H_a -> H_b,  phi^a |-> sum_k <phi^a, phi_k^a> phi_k^b,   matrix C^T
//     s_ab : H_b -> H_a,  phi^b |-> sum_k <phi^b, phi_k^b> phi_k^a,   matrix C
// for any decomposition psi = sum_k phi_k^a (x) phi_k^b. They are adjoint
// to each other, and s_ab o s_ba, s_ba o s_ab are the two reduced density
// operators.

#include <span>

#include "antilin/antilinear.hpp"

namespace antilin {

class BipartiteVector {
 public:
  /// Throws NonFinite; dimensions are those of `coeff` and must be >= 1.
  explicit BipartiteVector(ComplexMatrix coeff);

  /// Unflattens an a-major vector of length dim_a * dim_b.
  static BipartiteVector from_flat(const ComplexVector& flat, Index dim_a, Index dim_b);
  /// u (x) w.
  static BipartiteVector product(const ComplexVector& u, const ComplexVector& w);
  /// sum_k u_k (x) w_k, accumulated term by term.
  static BipartiteVector from_terms(std::span<const ComplexVector> us,
                                    std::span<const ComplexVector> ws);
  /// (e_0 (x) e_0 + ... + e_{d-1} (x) e_{d-1}) / sqrt(d).
  static BipartiteVector maximally_entangled(Index d);

  Index dim_a() const noexcept { return coeff_.rows(); }
  Index dim_b() const noexcept { return coeff_.cols(); }
  const ComplexMatrix& coeff() const noexcept { return coeff_; }

  ComplexVector flat() const;
  double norm() const { return coeff_.norm(); }
  double norm_sq() const { return coeff_.squaredNorm(); }

 private:
  ComplexMatrix coeff_;
};

struct EprPair {
  AntilinearMap s_ba;  // H_a -> H_b
  AntilinearMap s_ab;  // H_b -> H_a, == s_ba.adjoint()
};

EprPair epr_maps(const BipartiteVector& psi);

/// (|phi_a><phi_a| (x) 1) psi for a unit vector phi_a. Throws NotUnit.
BipartiteVector project_rank1(const BipartiteVector& psi, const ComplexVector& phi_a);

/// <phi, psi> via Tr_a s_psi^{ab} s_phi^{ba} (over = A) or
/// Tr_b s_psi^{ba} s_phi^{ab} (over = B).
Complex inner_via_trace(const BipartiteVector& phi, const BipartiteVector& psi, Side over = Side::A);

/// (A (x) 1) psi rebuilt from s_ba alone, using the spectral rank-one
/// decomposition A = sum_k |phi_k><phi_k|, phi_k = sqrt(lambda_k) v_k.
BipartiteVector reconstruct(const AntilinearMap& s_ba, const ComplexMatrix& a);

/// omega^a = s_ab o s_ba (Side::A) or omega^b = s_ba o s_ab (Side::B).
ComplexMatrix reduced(const BipartiteVector& psi, Side side);

/// (A (x) B) psi.
BipartiteVector local_transform(const BipartiteVector& psi, const ComplexMatrix& a,
                                const ComplexMatrix& b);

/// B = (j_ba o A o j_ab)^* on H_b, given the polar parts of s_psi^{ba}.
/// Satisfies B^* j_ba = j_ba A on the support and Tr omega^a A = Tr omega^b B.
ComplexMatrix partner_operator(const ComplexMatrix& a, const PolarParts& polar_of_s_ba);

/// The purification psi of omega_a with s_psi^{ba} = w o omega_a^{1/2}.
/// `w` must be an antilinear isometry on the support of omega_a (NotIsometry).
BipartiteVector purification_from_isometry(const ComplexMatrix& omega_a, const AntilinearMap& w);

/// s_phi^{ba} o s_psi^{ab}, a linear map on H_b.
ComplexMatrix cross_gram(const BipartiteVector& phi, const BipartiteVector& psi);

struct CloningCheck {
  bool hermitian = false;      // both cross products Hermitian within 1e-9
  double commutator_norm = 0;  // || omega_psi^a omega_phi^a - omega_phi^a omega_psi^a ||_F
  double hermiticity_defect = 0;
};

CloningCheck cloning_check(const BipartiteVector& phi, const BipartiteVector& psi);

}  // namespace antilin
