#include "checks.hpp"

#include <algorithm>
#include <cmath>

namespace antilin::checks {

namespace {

ComplexMatrix identity(Index d) { return ComplexMatrix::Identity(d, d); }

ComplexMatrix matrix_unit(Index d, Index i, Index j) {
  ComplexMatrix e = ComplexMatrix::Zero(d, d);
  e(i, j) = 1.0;
  return e;
}

ComplexVector act_a(const ComplexMatrix& a, const BipartiteVector& v) {
  return kron(a, identity(v.dim_b())) * v.flat();
}

ComplexMatrix root(const BipartiteVector& v, Side side) { return psd_sqrt(reduced(v, side)); }
ComplexMatrix support(const BipartiteVector& v, Side side) {
  return support_projection(reduced(v, side));
}

double diff(const ComplexMatrix& a, const ComplexMatrix& b) { return max_abs_diff(a, b); }
double diff(const ComplexVector& a, const ComplexVector& b) {
  return max_abs_diff(ComplexMatrix(a), ComplexMatrix(b));
}

}  // namespace

double epr_definition(std::span<const ComplexVector> us, std::span<const ComplexVector> ws,
                      const ComplexVector& probe_a, const ComplexVector& probe_b) {
  const EprPair s = epr_maps(BipartiteVector::from_terms(us, ws));
  ComplexVector want_b = ComplexVector::Zero(probe_b.size());
  ComplexVector want_a = ComplexVector::Zero(probe_a.size());
  for (std::size_t k = 0; k < us.size(); ++k) {
    want_b += probe_a.dot(us[k]) * ws[k];
    want_a += probe_b.dot(ws[k]) * us[k];
  }
  return std::max(diff(s.s_ba(probe_a), want_b), diff(s.s_ab(probe_b), want_a));
}

double epr_decomposition_independence(const BipartiteVector& psi) {
  // Schmidt terms versus the standard-basis expansion stored in psi.
  const SvdResult s = svd(psi.coeff());
  std::vector<ComplexVector> us, ws;
  for (Index k = 0; k < s.sigma.size(); ++k) {
    us.push_back(s.sigma(k) * s.U.col(k));
    ws.push_back(s.V.col(k).conjugate());
  }
  const EprPair from_terms = epr_maps(BipartiteVector::from_terms(us, ws));
  const EprPair direct = epr_maps(psi);
  double worst = std::max(diff(from_terms.s_ba.mat(), direct.s_ba.mat()),
                          diff(from_terms.s_ab.mat(), direct.s_ab.mat()));
  // Standard-basis probes, cycling through the smaller space.
  for (Index k = 0; k < std::max(psi.dim_a(), psi.dim_b()); ++k) {
    ComplexVector ea = ComplexVector::Zero(psi.dim_a());
    ea(k % psi.dim_a()) = 1.0;
    ComplexVector eb = ComplexVector::Zero(psi.dim_b());
    eb(k % psi.dim_b()) = 1.0;
    worst = std::max(worst, epr_definition(us, ws, ea, eb));
  }
  return worst;
}

double epr_pairing(const BipartiteVector& psi, const ComplexVector& fa, const ComplexVector& fb) {
  const EprPair s = epr_maps(psi);
  const Complex direct = kron(fa, fb).dot(psi.flat());
  return std::max(std::abs(fb.dot(s.s_ba(fa)) - direct), std::abs(fa.dot(s.s_ab(fb)) - direct));
}

double epr_trace_inner(const BipartiteVector& phi, const BipartiteVector& psi) {
  const Complex direct = phi.flat().dot(psi.flat());
  return std::max(std::abs(inner_via_trace(phi, psi, Side::A) - direct),
                  std::abs(inner_via_trace(phi, psi, Side::B) - direct));
}

double epr_reconstruct_identity(const BipartiteVector& psi) {
  return diff(reconstruct(epr_maps(psi).s_ba, identity(psi.dim_a())).coeff(), psi.coeff());
}

double epr_reconstruct_positive(const BipartiteVector& psi, const ComplexMatrix& positive) {
  return diff(reconstruct(epr_maps(psi).s_ba, positive).flat(), act_a(positive, psi));
}

double epr_reduced(const BipartiteVector& psi) {
  const ComplexMatrix full = psi.flat() * psi.flat().adjoint();
  return std::max(
      diff(reduced(psi, Side::A), partial_trace(full, psi.dim_a(), psi.dim_b(), Side::A)),
      diff(reduced(psi, Side::B), partial_trace(full, psi.dim_a(), psi.dim_b(), Side::B)));
}

double epr_local(const BipartiteVector& psi, const ComplexMatrix& a, const ComplexMatrix& b) {
  const BipartiteVector phi = local_transform(psi, a, b);
  const EprPair sp = epr_maps(psi);
  const EprPair sf = epr_maps(phi);
  const ComplexMatrix a_adj = a.adjoint();
  const ComplexMatrix b_adj = b.adjoint();
  return std::max({diff(phi.flat(), ComplexVector(kron(a, b) * psi.flat())),
                   diff(sf.s_ba.mat(), compose(compose(b, sp.s_ba), a_adj).mat()),
                   diff(sf.s_ab.mat(), compose(compose(a, sp.s_ab), b_adj).mat())});
}

double polar_factorization(const AntilinearMap& t) {
  const PolarParts p = polar(t);
  return std::max(diff(compose(p.positive_codomain, p.phase).mat(), t.mat()),
                  diff(compose(p.phase, p.positive_domain).mat(), t.mat()));
}

double polar_supports(const AntilinearMap& t) {
  const PolarParts p = polar(t);
  const ComplexMatrix tt = compose(t, t.adjoint());
  const ComplexMatrix t_t = compose(t.adjoint(), t);
  return std::max({diff(compose(p.phase.adjoint(), p.phase), p.support_domain),
                   diff(compose(p.phase, p.phase.adjoint()), p.support_codomain),
                   diff(p.support_codomain, support_projection(tt)),
                   diff(p.support_domain, support_projection(t_t))});
}

double polar_conjugated_reduction(const BipartiteVector& psi) {
  const AntilinearMap j = polar(epr_maps(psi).s_ba).phase;
  const ComplexMatrix moved = compose(compose(j, reduced(psi, Side::A)), j.adjoint());
  return diff(moved, reduced(psi, Side::B));
}

double partner_transfer(const BipartiteVector& psi, const ComplexMatrix& a) {
  const ComplexMatrix b = partner_operator(a, polar(epr_maps(psi).s_ba));
  return std::abs((reduced(psi, Side::A) * a).trace() - (reduced(psi, Side::B) * b).trace());
}

double teleport_factorization(const TeleportMap& tm, const ComplexVector& input) {
  return diff(ComplexVector(tm.t * input), teleport_oracle(tm.source_psi, tm.ancilla_phi, input));
}

double teleport_bound_violation(const TeleportMap& tm, std::span<const ComplexVector> inputs) {
  const double bound = success_bound(tm);
  double worst = 0.0;
  for (const auto& v : inputs) worst = std::max(worst, (tm.t * v).squaredNorm() - bound);
  return worst;
}

double teleport_saturation(const TeleportMap& tm) {
  const SvdResult s = svd(tm.t);
  return std::abs((tm.t * s.V.col(0)).squaredNorm() - success_bound(tm));
}

double teleport_trace_fidelity(const TeleportMap& tm) {
  const TraceNormFidelity r = trace_norm_fidelity(tm);
  return std::abs(r.trace_norm - r.fidelity);
}

double luders_prepared(const LudersChannel& ch, const ComplexVector& input) {
  return diff(luders_factored_vector(ch, input), luders_prepared_vector(ch, input));
}

double luders_factored(const LudersChannel& ch, const ComplexMatrix& nu) {
  return diff(luders_apply_factored(ch, nu), luders_apply(ch, nu));
}

double luders_trace_bound(const LudersChannel& ch, const ComplexMatrix& nu) {
  const double out = luders_apply(ch, nu).trace().real();
  return std::max(0.0, out - ch.ancilla_norm_sq * nu.trace().real());
}

double luders_op_bound(const LudersChannel& ch) {
  const LudersBounds b = luders_bounds(ch);
  return std::max(0.0, b.op_bound - b.ancilla_norm_sq);
}

double luders_full_basis(const LudersChannel& full, const ComplexMatrix& nu) {
  return std::abs(luders_apply(full, nu).trace().real() -
                  full.ancilla_norm_sq * nu.trace().real());
}

double chain_oracle_residual(std::span<const BipartiteVector> stages, const ComplexVector& input) {
  const Index total = stages[0].dim_a() * stages[0].dim_b() * stages[2].dim_a() *
                      stages[2].dim_b() * stages[3].dim_b();
  if (total > kChainOracleMaxDim) return std::nan("");
  const std::vector<BipartiteVector> ancillae{stages[1], stages[3]};
  const std::vector<BipartiteVector> measured{stages[0], stages[2]};
  return diff(ComplexVector(chain_teleport(stages) * input), chain_oracle(input, ancillae, measured));
}

double twisted_adjoint(const ComplexMatrix& eta, const ComplexMatrix& xi) {
  const TwistedOperator lin = twisted_product(eta, xi);
  const TwistedOperator lin_swapped =
      twisted_product(ComplexMatrix(xi.adjoint()), ComplexMatrix(eta.adjoint()));
  const AntilinearMap ea(eta), xa(xi);
  const TwistedOperator anti = twisted_product(ea, xa);
  const TwistedOperator anti_swapped = twisted_product(xa.adjoint(), ea.adjoint());
  return std::max(diff(ComplexMatrix(lin.mat().adjoint()), lin_swapped.mat()),
                  diff(anti.as_antilinear().adjoint().mat(), anti_swapped.mat()));
}

double twisted_compose_law(const TwistedOperator& p1, const TwistedOperator& p2) {
  const ComplexMatrix dense = p1.parity() == Parity::Antilinear
                                  ? compose(p1.as_antilinear(), p2.as_antilinear())
                                  : ComplexMatrix(p1.mat() * p2.mat());
  return diff(twisted_compose(p1, p2), dense);
}

double lift_delta_product(const BipartiteVector& phi, const BipartiteVector& psi) {
  const AntilinearMap d_psi_phi = lift_operators(psi, phi).Delta.as_antilinear();
  const AntilinearMap d_phi_psi = lift_operators(phi, psi).Delta.as_antilinear();
  return std::max(
      diff(compose(d_psi_phi, d_phi_psi), kron(reduced(psi, Side::A), reduced(phi, Side::B))),
      diff(compose(d_phi_psi, d_psi_phi), kron(reduced(phi, Side::A), reduced(psi, Side::B))));
}

LiftPolar lift_polar(const BipartiteVector& phi, const BipartiteVector& psi) {
  // Left and right polar forms of the lifted operators of (psi, phi), all with
  // the phase J_{psi,phi}.
  const LiftedOperators l = lift_operators(psi, phi);
  const AntilinearMap j = l.J.as_antilinear();
  const ComplexMatrix ra_psi = root(psi, Side::A), rb_psi = root(psi, Side::B);
  const ComplexMatrix ra_phi = root(phi, Side::A), rb_phi = root(phi, Side::B);
  const ComplexMatrix qa_psi = support(psi, Side::A), qb_psi = support(psi, Side::B);
  const ComplexMatrix qa_phi = support(phi, Side::A), qb_phi = support(phi, Side::B);
  LiftPolar r;
  r.delta = std::max(diff(compose(kron(ra_psi, rb_phi), j).mat(), l.Delta.mat()),
                     diff(compose(j, kron(ra_phi, rb_psi)).mat(), l.Delta.mat()));
  r.s = std::max(diff(compose(kron(qa_psi, rb_phi), j).mat(), l.S.mat()),
                 diff(compose(j, kron(ra_phi, qb_psi)).mat(), l.S.mat()));
  r.f = std::max(diff(compose(kron(ra_psi, qb_phi), j).mat(), l.F.mat()),
                 diff(compose(j, kron(qa_phi, rb_psi)).mat(), l.F.mat()));
  return r;
}

TomitaResiduals tomita_residuals(const BipartiteVector& phi, const BipartiteVector& psi,
                                 const ModularTriple& m) {
  const Index d = psi.dim_a();
  const Index n = d * psi.dim_b();
  TomitaResiduals r;
  for (Index i = 0; i < d; ++i) {
    for (Index j = 0; j < d; ++j) {
      const ComplexMatrix e = matrix_unit(d, i, j);
      r.relation = std::max(r.relation, diff(m.S(act_a(e, psi)), act_a(ComplexMatrix(e.adjoint()), phi)));
    }
  }
  r.reconstruction = diff(compose(m.J, m.Delta_sqrt).mat(), m.S.mat());
  r.delta_negativity = std::max(0.0, -hermitian_eigen(m.Delta).values.minCoeff());

  const TwistedOperator j_psi_phi = lift_operators(psi, phi).J;
  const TwistedOperator j_phi_psi = lift_operators(phi, psi).J;
  r.phase = diff(m.J.mat(), j_psi_phi.mat());
  r.conjugations_compose = diff(twisted_compose(j_psi_phi, j_phi_psi),
                                kron(support(psi, Side::A), support(phi, Side::B)));

  const ComplexMatrix ra_phi = root(phi, Side::A);
  const ComplexMatrix rb_psi = root(psi, Side::B);
  const ComplexMatrix one_a = identity(d), one_b = identity(psi.dim_b());
  r.invertibility = diff(ComplexMatrix(compose(j_phi_psi.as_antilinear(), m.S) * kron(one_a, rb_psi)),
                         kron(ra_phi, one_b));
  r.invertibility_literal =
      diff(ComplexMatrix(compose(j_psi_phi.as_antilinear(), m.S) * kron(ra_phi, one_b)),
           kron(one_a, rb_psi));
  r.antiunitary = std::max(diff(compose(m.J.adjoint(), m.J), identity(n)),
                           diff(compose(m.J, m.J.adjoint()), identity(n)));
  return r;
}

double tomita_equal_states(const BipartiteVector& psi) {
  const ModularTriple m = tomita(psi, psi);
  return std::max(diff(m.S(psi.flat()), psi.flat()), diff(m.J(psi.flat()), psi.flat()));
}

}  // namespace antilin::checks
