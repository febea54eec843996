#include "antilin/teleport.hpp"

#include <cmath>
#include <string>

namespace antilin {

namespace {

constexpr double kFactorizationResidual = 1e-8;
constexpr double kOrthonormal = 1e-10;
constexpr double kProjectionEigen = 1e-8;

using RowMajorMatrix = Eigen::Matrix<Complex, Eigen::Dynamic, Eigen::Dynamic, Eigen::RowMajor>;

void require_unit(const BipartiteVector& v, const char* what) {
  if (std::abs(v.norm() - 1.0) > tol::kUnit) {
    throw Error(ErrorCode::NotUnit, std::string(what) + " has norm " + std::to_string(v.norm()));
  }
}

void require_chain(const BipartiteVector& left, const BipartiteVector& right, const char* what) {
  if (left.dim_b() != right.dim_a()) {
    throw Error(ErrorCode::DimMismatch, std::string(what) + ": shared dimension " +
                                            std::to_string(left.dim_b()) + " vs " +
                                            std::to_string(right.dim_a()));
  }
}

ComplexMatrix b_reduction_of_source(const TeleportMap& tm) { return reduced(tm.source_psi, Side::B); }
// phi^{bc} carries the b-system as its first factor.
ComplexMatrix b_reduction_of_ancilla(const TeleportMap& tm) { return reduced(tm.ancilla_phi, Side::A); }

}  // namespace

TeleportMap teleport_map(const BipartiteVector& psi_ab, const BipartiteVector& phi_bc) {
  require_chain(psi_ab, phi_bc, "teleport_map");
  const AntilinearMap s_ba = epr_maps(psi_ab).s_ba;
  const AntilinearMap s_cb = epr_maps(phi_bc).s_ba;
  return {compose(s_cb, s_ba), psi_ab, phi_bc};
}

ComplexVector teleport_oracle(const BipartiteVector& psi_ab, const BipartiteVector& phi_bc,
                              const ComplexVector& phi_a) {
  require_chain(psi_ab, phi_bc, "teleport_oracle");
  if (phi_a.size() != psi_ab.dim_a()) {
    throw Error(ErrorCode::DimMismatch, "teleport_oracle: input length " +
                                            std::to_string(phi_a.size()));
  }
  require_unit(psi_ab, "psi_ab");
  const Index dim_c = phi_bc.dim_b();

  const ComplexVector start = kron(phi_a, phi_bc.flat());
  const ComplexVector psi = psi_ab.flat();
  const ComplexMatrix projector =
      kron(ComplexMatrix(psi * psi.adjoint()), ComplexMatrix(ComplexMatrix::Identity(dim_c, dim_c)));
  const ComplexVector prepared = projector * start;

  ComplexVector phi_c = ComplexVector::Zero(dim_c);
  for (Index k = 0; k < dim_c; ++k) {
    for (Index ab = 0; ab < psi.size(); ++ab) phi_c(k) += std::conj(psi(ab)) * prepared(ab * dim_c + k);
  }
  const double residual = (prepared - kron(psi, phi_c)).norm();
  if (residual > kFactorizationResidual) {
    throw Error(ErrorCode::FactorizationFailure, "residual " + std::to_string(residual));
  }
  return phi_c;
}

double success_bound(const TeleportMap& tm) {
  require_unit(tm.source_psi, "psi_ab");
  require_unit(tm.ancilla_phi, "phi_bc");
  const ComplexMatrix rho = b_reduction_of_source(tm);
  const ComplexMatrix root_omega = psd_sqrt(b_reduction_of_ancilla(tm));
  const ComplexMatrix sandwich = root_omega * rho * root_omega;
  return std::max(0.0, hermitian_eigen(sandwich).values.maxCoeff());
}

TraceNormFidelity trace_norm_fidelity(const TeleportMap& tm) {
  require_unit(tm.source_psi, "psi_ab");
  require_unit(tm.ancilla_phi, "phi_bc");
  return {norms(tm.t).trace_norm,
          fidelity(b_reduction_of_source(tm), b_reduction_of_ancilla(tm))};
}

LudersChannel luders_channel(std::span<const BipartiteVector> psis, const BipartiteVector& phi_bc) {
  if (psis.empty()) throw Error(ErrorCode::InvalidArgument, "luders_channel: empty decomposition");
  for (const auto& p : psis) {
    if (p.dim_a() != psis[0].dim_a() || p.dim_b() != psis[0].dim_b()) {
      throw Error(ErrorCode::DimMismatch, "luders_channel: decomposition vectors differ in shape");
    }
    require_chain(p, phi_bc, "luders_channel");
  }
  for (std::size_t j = 0; j < psis.size(); ++j) {
    for (std::size_t k = 0; k < psis.size(); ++k) {
      const Complex g = psis[j].flat().dot(psis[k].flat());
      const double want = j == k ? 1.0 : 0.0;
      if (std::abs(g - want) > kOrthonormal) {
        throw Error(ErrorCode::NotOrthonormal, "<psi_" + std::to_string(j) + ", psi_" +
                                                   std::to_string(k) + "> deviates by " +
                                                   std::to_string(std::abs(g - want)));
      }
    }
  }
  LudersChannel ch{{}, {psis.begin(), psis.end()}, phi_bc, phi_bc.norm_sq()};
  ch.maps.reserve(psis.size());
  for (const auto& p : psis) ch.maps.push_back(teleport_map(p, phi_bc).t);
  return ch;
}

std::vector<BipartiteVector> rank_one_decomposition(const ComplexMatrix& projection, Index dim_a,
                                                    Index dim_b) {
  if (projection.rows() != dim_a * dim_b || projection.cols() != dim_a * dim_b) {
    throw Error(ErrorCode::DimMismatch, "projection must act on H_a (x) H_b");
  }
  const HermitianEigen e = hermitian_eigen(projection);
  std::vector<BipartiteVector> out;
  for (Index k = 0; k < e.values.size(); ++k) {
    const double lambda = e.values(k);
    if (std::min(std::abs(lambda), std::abs(lambda - 1.0)) > kProjectionEigen) {
      throw Error(ErrorCode::InvalidArgument,
                  "not a projection (eigenvalue " + std::to_string(lambda) + ")");
    }
    if (lambda > 0.5) out.push_back(BipartiteVector::from_flat(e.vectors.col(k), dim_a, dim_b));
  }
  return out;
}

ComplexVector luders_prepared_vector(const LudersChannel& ch, const ComplexVector& phi_a) {
  if (phi_a.size() != ch.dim_a()) throw Error(ErrorCode::DimMismatch, "luders: input length");
  const Index dim_ab = ch.psis.front().dim_a() * ch.psis.front().dim_b();
  ComplexMatrix p = ComplexMatrix::Zero(dim_ab, dim_ab);
  for (const auto& psi : ch.psis) p += psi.flat() * psi.flat().adjoint();
  const Index dim_c = ch.dim_c();
  return kron(p, ComplexMatrix(ComplexMatrix::Identity(dim_c, dim_c))) *
         kron(phi_a, ch.ancilla.flat());
}

ComplexVector luders_factored_vector(const LudersChannel& ch, const ComplexVector& phi_a) {
  if (phi_a.size() != ch.dim_a()) throw Error(ErrorCode::DimMismatch, "luders: input length");
  const Index dim_ab = ch.psis.front().dim_a() * ch.psis.front().dim_b();
  ComplexVector out = ComplexVector::Zero(dim_ab * ch.dim_c());
  for (std::size_t k = 0; k < ch.rank(); ++k) {
    out += kron(ch.psis[k].flat(), ComplexVector(ch.maps[k] * phi_a));
  }
  return out;
}

ComplexMatrix luders_apply(const LudersChannel& ch, const ComplexMatrix& nu) {
  if (nu.rows() != ch.dim_a() || nu.cols() != ch.dim_a()) {
    throw Error(ErrorCode::DimMismatch, "luders_apply: nu must be dim_a square");
  }
  ComplexMatrix out = ComplexMatrix::Zero(ch.dim_c(), ch.dim_c());
  for (const auto& t : ch.maps) out += t * nu * t.adjoint();
  return out;
}

ComplexMatrix luders_apply_factored(const LudersChannel& ch, const ComplexMatrix& nu) {
  if (nu.rows() != ch.dim_a() || nu.cols() != ch.dim_a()) {
    throw Error(ErrorCode::DimMismatch, "luders_apply: nu must be dim_a square");
  }
  const Index dim_b = ch.ancilla.dim_a();
  ComplexMatrix middle = ComplexMatrix::Zero(dim_b, dim_b);
  for (const auto& psi : ch.psis) {
    const EprPair s = epr_maps(psi);
    middle += compose(compose(s.s_ba, nu), s.s_ab);
  }
  const EprPair anc = epr_maps(ch.ancilla);  // s_ba here is s^{cb}, s_ab is s^{bc}
  return compose(compose(anc.s_ba, middle), anc.s_ab);
}

LudersBounds luders_bounds(const LudersChannel& ch) {
  ComplexMatrix gram = ComplexMatrix::Zero(ch.dim_a(), ch.dim_a());
  for (const auto& t : ch.maps) gram += t.adjoint() * t;
  LudersBounds b;
  b.op_bound = norms(gram).operator_norm;
  // Tr T(nu) = Tr(gram nu), so its supremum over unit-trace PSD nu is the
  // largest eigenvalue of gram.
  b.trace_bound = b.op_bound;
  b.ancilla_norm_sq = ch.ancilla_norm_sq;
  b.ancilla_norm = std::sqrt(ch.ancilla_norm_sq);
  return b;
}

ComplexMatrix chain_teleport(std::span<const BipartiteVector> stages) {
  if (stages.size() % 2 == 1) {
    throw Error(ErrorCode::OddParity, "an odd number of EPR factors composes to an antilinear map");
  }
  if (stages.size() != 4) {
    throw Error(ErrorCode::InvalidArgument, "chain_teleport expects exactly 4 stages");
  }
  for (std::size_t k = 0; k + 1 < stages.size(); ++k) {
    require_chain(stages[k], stages[k + 1], "chain_teleport");
  }
  const AntilinearMap s_ba = epr_maps(stages[0]).s_ba;
  const AntilinearMap s_cb = epr_maps(stages[1]).s_ba;
  const AntilinearMap s_dc = epr_maps(stages[2]).s_ba;
  const AntilinearMap s_ed = epr_maps(stages[3]).s_ba;
  return compose(s_ed, s_dc) * compose(s_cb, s_ba);
}

ComplexVector chain_oracle(const ComplexVector& phi_a, std::span<const BipartiteVector> ancillae,
                           std::span<const BipartiteVector> measured) {
  if (ancillae.size() != 2 || measured.size() != 2) {
    throw Error(ErrorCode::InvalidArgument, "chain_oracle expects two ancillae and two measured vectors");
  }
  const BipartiteVector& psi_ab = measured[0];
  const BipartiteVector& phi_bc = ancillae[0];
  const BipartiteVector& psi_cd = measured[1];
  const BipartiteVector& phi_de = ancillae[1];
  if (phi_a.size() != psi_ab.dim_a()) throw Error(ErrorCode::DimMismatch, "chain_oracle: input length");
  require_chain(psi_ab, phi_bc, "chain_oracle");
  require_chain(phi_bc, psi_cd, "chain_oracle");
  require_chain(psi_cd, phi_de, "chain_oracle");

  const Index dim_ab = psi_ab.dim_a() * psi_ab.dim_b();
  const Index dim_cd = psi_cd.dim_a() * psi_cd.dim_b();
  const Index dim_e = phi_de.dim_b();
  if (dim_ab * dim_cd * dim_e > kChainOracleMaxDim) {
    throw Error(ErrorCode::DimTooLarge, "chain_oracle: total dimension " +
                                            std::to_string(dim_ab * dim_cd * dim_e));
  }
  require_unit(psi_ab, "psi_ab");
  require_unit(psi_cd, "psi_cd");

  // Index order a, b, c, d, e (a-major); viewed as [ab][cd][e].
  ComplexVector state = kron(kron(phi_a, phi_bc.flat()), phi_de.flat());
  const ComplexVector v_ab = psi_ab.flat();
  const ComplexVector v_cd = psi_cd.flat();
  const ComplexMatrix p_ab = v_ab * v_ab.adjoint();
  const ComplexMatrix p_cd = v_cd * v_cd.adjoint();

  Eigen::Map<RowMajorMatrix> by_ab(state.data(), dim_ab, dim_cd * dim_e);
  by_ab = (p_ab * by_ab).eval();
  for (Index ab = 0; ab < dim_ab; ++ab) {
    Eigen::Map<RowMajorMatrix> slice(state.data() + ab * dim_cd * dim_e, dim_cd, dim_e);
    slice = (p_cd * slice).eval();
  }

  const ComplexVector measured_pair = kron(v_ab, v_cd);
  ComplexVector phi_e = ComplexVector::Zero(dim_e);
  for (Index m = 0; m < dim_e; ++m) {
    for (Index k = 0; k < measured_pair.size(); ++k) {
      phi_e(m) += std::conj(measured_pair(k)) * state(k * dim_e + m);
    }
  }
  const double residual = (state - kron(measured_pair, phi_e)).norm();
  if (residual > kFactorizationResidual) {
    throw Error(ErrorCode::FactorizationFailure, "residual " + std::to_string(residual));
  }
  return phi_e;
}

}  // namespace antilin
