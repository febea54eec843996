#include "antilin/bipartite.hpp"

#include <cmath>
#include <string>

namespace antilin {

namespace {

void require_same_dims(const BipartiteVector& x, const BipartiteVector& y, const char* op) {
  if (x.dim_a() != y.dim_a() || x.dim_b() != y.dim_b()) {
    throw Error(ErrorCode::DimMismatch,
                std::string(op) + ": " + std::to_string(x.dim_a()) + "x" + std::to_string(x.dim_b()) +
                    " vs " + std::to_string(y.dim_a()) + "x" + std::to_string(y.dim_b()));
  }
}

void require_square_of(const ComplexMatrix& m, Index d, const char* what) {
  if (m.rows() != d || m.cols() != d) {
    throw Error(ErrorCode::DimMismatch, std::string(what) + " must be " + std::to_string(d) + "x" +
                                            std::to_string(d));
  }
}

constexpr double kIsometryTol = 1e-9;
constexpr double kHermitianCross = 1e-9;

}  // namespace

BipartiteVector::BipartiteVector(ComplexMatrix coeff) : coeff_(std::move(coeff)) {
  if (coeff_.rows() < 1 || coeff_.cols() < 1) {
    throw Error(ErrorCode::DimMismatch, "bipartite dimensions must be positive");
  }
  require_finite(coeff_, "bipartite coefficients");
}

BipartiteVector BipartiteVector::from_flat(const ComplexVector& flat, Index dim_a, Index dim_b) {
  if (dim_a < 1 || dim_b < 1 || flat.size() != dim_a * dim_b) {
    throw Error(ErrorCode::DimMismatch, "flat vector of length " + std::to_string(flat.size()) +
                                            " is not " + std::to_string(dim_a) + "*" +
                                            std::to_string(dim_b));
  }
  ComplexMatrix c(dim_a, dim_b);
  for (Index i = 0; i < dim_a; ++i)
    for (Index j = 0; j < dim_b; ++j) c(i, j) = flat(i * dim_b + j);
  return BipartiteVector(std::move(c));
}

BipartiteVector BipartiteVector::product(const ComplexVector& u, const ComplexVector& w) {
  return BipartiteVector(u * w.transpose());
}

BipartiteVector BipartiteVector::from_terms(std::span<const ComplexVector> us,
                                            std::span<const ComplexVector> ws) {
  if (us.empty() || us.size() != ws.size()) {
    throw Error(ErrorCode::DimMismatch, "from_terms needs equally many nonzero factor lists");
  }
  ComplexMatrix c = ComplexMatrix::Zero(us[0].size(), ws[0].size());
  for (std::size_t k = 0; k < us.size(); ++k) {
    if (us[k].size() != c.rows() || ws[k].size() != c.cols()) {
      throw Error(ErrorCode::DimMismatch, "from_terms: inconsistent factor lengths");
    }
    c += us[k] * ws[k].transpose();
  }
  return BipartiteVector(std::move(c));
}

BipartiteVector BipartiteVector::maximally_entangled(Index d) {
  return BipartiteVector(ComplexMatrix::Identity(d, d) / std::sqrt(static_cast<double>(d)));
}

ComplexVector BipartiteVector::flat() const {
  ComplexVector v(dim_a() * dim_b());
  for (Index i = 0; i < dim_a(); ++i)
    for (Index j = 0; j < dim_b(); ++j) v(i * dim_b() + j) = coeff_(i, j);
  return v;
}

EprPair epr_maps(const BipartiteVector& psi) {
  AntilinearMap s_ba(psi.coeff().transpose());
  AntilinearMap s_ab = s_ba.adjoint();
  return {std::move(s_ba), std::move(s_ab)};
}

BipartiteVector project_rank1(const BipartiteVector& psi, const ComplexVector& phi_a) {
  if (phi_a.size() != psi.dim_a()) {
    throw Error(ErrorCode::DimMismatch, "project_rank1: vector length " +
                                            std::to_string(phi_a.size()) + " vs dim_a " +
                                            std::to_string(psi.dim_a()));
  }
  if (std::abs(phi_a.norm() - 1.0) > tol::kUnit) {
    throw Error(ErrorCode::NotUnit, "project_rank1: |phi_a| = " + std::to_string(phi_a.norm()));
  }
  const ComplexMatrix proj = phi_a * phi_a.adjoint();
  return BipartiteVector(proj * psi.coeff());
}

Complex inner_via_trace(const BipartiteVector& phi, const BipartiteVector& psi, Side over) {
  require_same_dims(phi, psi, "inner_via_trace");
  const EprPair p = epr_maps(phi);
  const EprPair q = epr_maps(psi);
  return over == Side::A ? trace_product(q.s_ab, p.s_ba) : trace_product(q.s_ba, p.s_ab);
}

BipartiteVector reconstruct(const AntilinearMap& s_ba, const ComplexMatrix& a) {
  require_square_of(a, s_ba.dim_domain(), "reconstruct: A");
  const HermitianEigen e = psd_eigen(a);
  ComplexMatrix c = ComplexMatrix::Zero(s_ba.dim_domain(), s_ba.dim_codomain());
  for (Index k = 0; k < e.values.size(); ++k) {
    if (e.values(k) == 0.0) continue;
    const ComplexVector phi_k = std::sqrt(e.values(k)) * e.vectors.col(k);
    c += phi_k * s_ba.apply(phi_k).transpose();
  }
  return BipartiteVector(std::move(c));
}

ComplexMatrix reduced(const BipartiteVector& psi, Side side) {
  const EprPair p = epr_maps(psi);
  return side == Side::A ? compose(p.s_ab, p.s_ba) : compose(p.s_ba, p.s_ab);
}

BipartiteVector local_transform(const BipartiteVector& psi, const ComplexMatrix& a,
                                const ComplexMatrix& b) {
  require_square_of(a, psi.dim_a(), "local_transform: A");
  require_square_of(b, psi.dim_b(), "local_transform: B");
  return BipartiteVector(a * psi.coeff() * b.transpose());
}

ComplexMatrix partner_operator(const ComplexMatrix& a, const PolarParts& polar_of_s_ba) {
  const AntilinearMap& j_ba = polar_of_s_ba.phase;
  require_square_of(a, j_ba.dim_domain(), "partner_operator: A");
  const ComplexMatrix inner = compose(compose(j_ba, a), j_ba.adjoint());
  return inner.adjoint();
}

BipartiteVector purification_from_isometry(const ComplexMatrix& omega_a, const AntilinearMap& w) {
  require_square_of(omega_a, w.dim_domain(), "purification: omega_a");
  const ComplexMatrix root = psd_sqrt(omega_a);
  const ComplexMatrix q = support_projection(omega_a);
  const ComplexMatrix gram = q * compose(w.adjoint(), w) * q;
  const double defect = max_abs_diff(gram, q);
  if (defect > kIsometryTol) {
    throw Error(ErrorCode::NotIsometry,
                "w is not isometric on the support (defect " + std::to_string(defect) + ")");
  }
  const AntilinearMap s_ba = compose(w, root);
  return BipartiteVector(s_ba.mat().transpose());
}

ComplexMatrix cross_gram(const BipartiteVector& phi, const BipartiteVector& psi) {
  require_same_dims(phi, psi, "cross_gram");
  return compose(epr_maps(phi).s_ba, epr_maps(psi).s_ab);
}

CloningCheck cloning_check(const BipartiteVector& phi, const BipartiteVector& psi) {
  require_same_dims(phi, psi, "cloning_check");
  const EprPair f = epr_maps(phi);
  const EprPair p = epr_maps(psi);
  const double defect_b = max_abs_diff(compose(f.s_ba, p.s_ab), compose(p.s_ba, f.s_ab));
  const double defect_a = max_abs_diff(compose(f.s_ab, p.s_ba), compose(p.s_ab, f.s_ba));

  const ComplexMatrix w_psi = reduced(psi, Side::A);
  const ComplexMatrix w_phi = reduced(phi, Side::A);
  CloningCheck out;
  out.hermiticity_defect = std::max(defect_a, defect_b);
  out.hermitian = out.hermiticity_defect <= kHermitianCross;
  out.commutator_norm = (w_psi * w_phi - w_phi * w_psi).norm();
  return out;
}

}  // namespace antilin
