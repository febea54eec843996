#pragma once

// Residual computations shared by the per-command reports and `verify`.
// Every function returns a nonnegative max-entry (or absolute) residual;
// inequality checks return the amount by which the inequality is violated.

#include <span>
#include <vector>

#include "antilin/modular.hpp"
#include "antilin/teleport.hpp"

namespace antilin::checks {

// EPR maps.
double epr_definition(std::span<const ComplexVector> us, std::span<const ComplexVector> ws,
                      const ComplexVector& probe_a, const ComplexVector& probe_b);
double epr_decomposition_independence(const BipartiteVector& psi);
double epr_pairing(const BipartiteVector& psi, const ComplexVector& fa, const ComplexVector& fb);
double epr_trace_inner(const BipartiteVector& phi, const BipartiteVector& psi);
double epr_reconstruct_identity(const BipartiteVector& psi);
double epr_reconstruct_positive(const BipartiteVector& psi, const ComplexMatrix& positive);
double epr_reduced(const BipartiteVector& psi);
double epr_local(const BipartiteVector& psi, const ComplexMatrix& a, const ComplexMatrix& b);

// Polar decomposition, partner operators, cloning.
double polar_factorization(const AntilinearMap& t);
double polar_supports(const AntilinearMap& t);
double polar_conjugated_reduction(const BipartiteVector& psi);
double partner_transfer(const BipartiteVector& psi, const ComplexMatrix& a);

// Teleportation.
double teleport_factorization(const TeleportMap& tm, const ComplexVector& input);
double teleport_bound_violation(const TeleportMap& tm, std::span<const ComplexVector> inputs);
double teleport_saturation(const TeleportMap& tm);
double teleport_trace_fidelity(const TeleportMap& tm);

double luders_prepared(const LudersChannel& ch, const ComplexVector& input);
double luders_factored(const LudersChannel& ch, const ComplexMatrix& nu);
double luders_trace_bound(const LudersChannel& ch, const ComplexMatrix& nu);
double luders_op_bound(const LudersChannel& ch);
double luders_full_basis(const LudersChannel& full, const ComplexMatrix& nu);

/// NaN when the dense oracle would exceed kChainOracleMaxDim.
double chain_oracle_residual(std::span<const BipartiteVector> stages, const ComplexVector& input);

// Twisted products and modular theory.
double twisted_adjoint(const ComplexMatrix& eta, const ComplexMatrix& xi);
double twisted_compose_law(const TwistedOperator& p1, const TwistedOperator& p2);
double lift_delta_product(const BipartiteVector& phi, const BipartiteVector& psi);

struct LiftPolar {
  double delta = 0.0;
  double s = 0.0;
  double f = 0.0;
};
LiftPolar lift_polar(const BipartiteVector& phi, const BipartiteVector& psi);

struct TomitaResiduals {
  double relation = 0.0;
  double reconstruction = 0.0;
  double delta_negativity = 0.0;
  double phase = 0.0;
  double conjugations_compose = 0.0;
  double invertibility = 0.0;
  double invertibility_literal = 0.0;  // informational only
  double antiunitary = 0.0;
};
TomitaResiduals tomita_residuals(const BipartiteVector& phi, const BipartiteVector& psi,
                                 const ModularTriple& m);

/// max(|S psi - psi|, |J psi - psi|) for phi = psi.
double tomita_equal_states(const BipartiteVector& psi);

}  // namespace antilin::checks
