#include "antilin/modular.hpp"

#include <string>

namespace antilin {

namespace {

ComplexMatrix twisted_matrix(const ComplexMatrix& eta, const ComplexMatrix& xi) {
  const Index da = eta.rows();
  const Index db = xi.rows();
  if (eta.cols() != db || xi.cols() != da) {
    throw Error(ErrorCode::DimMismatch, "twisted product needs eta : H_b -> H_a and xi : H_a -> H_b");
  }
  ComplexMatrix m(da * db, da * db);
  for (Index p = 0; p < da; ++p)
    for (Index q = 0; q < db; ++q)
      for (Index i = 0; i < da; ++i)
        for (Index j = 0; j < db; ++j) m(p * db + q, i * db + j) = eta(p, j) * xi(q, i);
  return m;
}

// Columns (E_ij (x) 1) psi for all matrix units E_ij on H_a, column index i * dim_a + j.
ComplexMatrix matrix_unit_orbit(const BipartiteVector& v, bool adjoint_units) {
  const Index da = v.dim_a();
  const Index db = v.dim_b();
  ComplexMatrix cols = ComplexMatrix::Zero(da * db, da * da);
  for (Index i = 0; i < da; ++i) {
    for (Index j = 0; j < da; ++j) {
      // E_ij moves row j of the coefficients to row i; E_ij^* = E_ji.
      const Index to = adjoint_units ? j : i;
      const Index from = adjoint_units ? i : j;
      for (Index b = 0; b < db; ++b) cols(to * db + b, i * da + j) = v.coeff()(from, b);
    }
  }
  return cols;
}

}  // namespace

std::string_view to_string(Parity p) noexcept {
  return p == Parity::Linear ? "linear" : "antilinear";
}

TwistedOperator::TwistedOperator(Parity parity, ComplexMatrix mat, ComplexMatrix eta, ComplexMatrix xi)
    : parity_(parity), mat_(std::move(mat)), eta_(std::move(eta)), xi_(std::move(xi)) {}

ComplexVector TwistedOperator::apply(const ComplexVector& v) const {
  if (v.size() != mat_.cols()) throw Error(ErrorCode::DimMismatch, "twisted apply: vector length");
  return parity_ == Parity::Linear ? ComplexVector(mat_ * v) : ComplexVector(mat_ * v.conjugate());
}

TwistedOperator TwistedOperator::adjoint() const {
  if (parity_ == Parity::Linear) {
    return {parity_, mat_.adjoint(), xi_.adjoint(), eta_.adjoint()};
  }
  return {parity_, mat_.transpose(), xi_.transpose(), eta_.transpose()};
}

AntilinearMap TwistedOperator::as_antilinear() const {
  if (parity_ != Parity::Antilinear) {
    throw Error(ErrorCode::MixedParity, "linear twisted product viewed as antilinear");
  }
  return AntilinearMap(mat_);
}

TwistedOperator twisted_product(const ComplexMatrix& eta_ab, const ComplexMatrix& xi_ba) {
  return {Parity::Linear, twisted_matrix(eta_ab, xi_ba), eta_ab, xi_ba};
}

TwistedOperator twisted_product(const AntilinearMap& eta_ab, const AntilinearMap& xi_ba) {
  return {Parity::Antilinear, twisted_matrix(eta_ab.mat(), xi_ba.mat()), eta_ab.mat(), xi_ba.mat()};
}

TwistedOperator twisted_product(const AnyMap& eta_ab, const AnyMap& xi_ba) {
  return std::visit(
      [](const auto& eta, const auto& xi) -> TwistedOperator {
        using E = std::decay_t<decltype(eta)>;
        using X = std::decay_t<decltype(xi)>;
        if constexpr (std::is_same_v<E, X>) {
          return twisted_product(eta, xi);
        } else {
          throw Error(ErrorCode::MixedParity,
                      "twisted product of a linear and an antilinear map is not defined");
        }
      },
      eta_ab, xi_ba);
}

ComplexMatrix twisted_compose(const TwistedOperator& p1, const TwistedOperator& p2) {
  if (p1.parity() != p2.parity()) {
    throw Error(ErrorCode::MixedParity, "twisted_compose of operators with different parity");
  }
  if (p1.dim_a() != p2.dim_a() || p1.dim_b() != p2.dim_b()) {
    throw Error(ErrorCode::DimMismatch, "twisted_compose: factor spaces differ");
  }
  if (p1.parity() == Parity::Linear) {
    return kron(ComplexMatrix(p1.eta() * p2.xi()), ComplexMatrix(p1.xi() * p2.eta()));
  }
  const ComplexMatrix left = compose(AntilinearMap(p1.eta()), AntilinearMap(p2.xi()));
  const ComplexMatrix right = compose(AntilinearMap(p1.xi()), AntilinearMap(p2.eta()));
  return kron(left, right);
}

LiftedOperators lift_operators(const BipartiteVector& phi, const BipartiteVector& psi) {
  if (phi.dim_a() != psi.dim_a() || phi.dim_b() != psi.dim_b()) {
    throw Error(ErrorCode::DimMismatch, "lift_operators: phi and psi live in different spaces");
  }
  const EprPair s_phi = epr_maps(phi);
  const EprPair s_psi = epr_maps(psi);
  const AntilinearMap j_phi_ab = polar(s_phi.s_ba).phase.adjoint();
  const AntilinearMap j_psi_ba = polar(s_psi.s_ba).phase;
  return {
      twisted_product(j_phi_ab, s_psi.s_ba),
      twisted_product(s_phi.s_ab, j_psi_ba),
      twisted_product(s_phi.s_ab, s_psi.s_ba),
      twisted_product(j_phi_ab, j_psi_ba),
  };
}

GnsReport gns_report(const BipartiteVector& psi) {
  GnsReport r;
  r.rank_a = svd(reduced(psi, Side::A)).rank;
  r.rank_b = svd(reduced(psi, Side::B)).rank;
  r.completely_entangled = r.rank_a == psi.dim_a() && r.rank_b == psi.dim_b();
  const ComplexMatrix orbit = matrix_unit_orbit(psi, false);
  r.cyclic_rank = svd(ComplexMatrix(orbit.adjoint() * orbit)).rank;
  return r;
}

bool gns_check(const BipartiteVector& psi) { return gns_report(psi).completely_entangled; }

ModularTriple tomita(const BipartiteVector& phi, const BipartiteVector& psi) {
  if (phi.dim_a() != psi.dim_a() || phi.dim_b() != psi.dim_b()) {
    throw Error(ErrorCode::DimMismatch, "tomita: phi and psi live in different spaces");
  }
  if (!gns_check(psi)) {
    throw Error(ErrorCode::NotSeparating, "psi is not completely entangled");
  }
  // S conj(X) = Y with X = [(E_ij (x) 1) psi], Y = [(E_ji (x) 1) phi]; X is
  // square and invertible for a completely entangled psi (dim_a == dim_b).
  const ComplexMatrix x = matrix_unit_orbit(psi, false);
  const ComplexMatrix y = matrix_unit_orbit(phi, true);
  const ComplexMatrix xt = x.conjugate().transpose();
  const ComplexMatrix s_t = Eigen::FullPivLU<ComplexMatrix>(xt).solve(ComplexMatrix(y.transpose()));
  AntilinearMap s(s_t.transpose());

  ComplexMatrix delta = kron(reduced(phi, Side::A), pd_inverse(reduced(psi, Side::B)));
  PolarParts pp = polar(s);
  return {std::move(s), std::move(delta), std::move(pp.positive_domain), std::move(pp.phase)};
}

}  // namespace antilin
