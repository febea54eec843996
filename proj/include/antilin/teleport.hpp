#pragma once

// Imperfect teleportation channels built from EPR maps.
//
// Input phi^a, ancilla phi^{bc}, rank-one Luders trigger |psi^{ab}><psi^{ab}|.
// The conditional output is t^{ca} phi^a with the factorization
//     t^{ca} = s_phi^{cb} o s_psi^{ba}.
// Outputs are never renormalized: |t phi^a|^2 is the event probability.

#include <span>
#include <vector>

#include "antilin/bipartite.hpp"

namespace antilin {

struct TeleportMap {
  ComplexMatrix t;  // dim_c x dim_a
  BipartiteVector source_psi;
  BipartiteVector ancilla_phi;
};

TeleportMap teleport_map(const BipartiteVector& psi_ab, const BipartiteVector& phi_bc);

/// Independent route: builds phi^a (x) phi^{bc}, applies the dense projector
/// |psi^{ab}><psi^{ab}| (x) 1^c and factors the result as psi^{ab} (x) phi^c.
/// Throws NotUnit (psi_ab), DimMismatch, FactorizationFailure.
ComplexVector teleport_oracle(const BipartiteVector& psi_ab, const BipartiteVector& phi_bc,
                              const ComplexVector& phi_a);

/// | sqrt(omega) rho sqrt(omega) |_inf with rho, omega the b-reductions of
/// psi^{ab} and phi^{bc}. Upper bound of |t phi^a|^2 over unit phi^a.
double success_bound(const TeleportMap& tm);

struct TraceNormFidelity {
  double trace_norm = 0.0;  // |t|_1
  double fidelity = 0.0;    // F(rho, omega) on the b-reductions
};

TraceNormFidelity trace_norm_fidelity(const TeleportMap& tm);

/// Teleportation triggered by a projection P = sum_k |psi_k><psi_k| of any rank.
struct LudersChannel {
  std::vector<ComplexMatrix> maps;       // t_k^{ca} = s_phi^{cb} o s_k^{ba}
  std::vector<BipartiteVector> psis;     // orthonormal decomposition of P
  BipartiteVector ancilla;               // phi^{bc}
  double ancilla_norm_sq = 0.0;

  std::size_t rank() const noexcept { return maps.size(); }
  Index dim_a() const noexcept { return psis.front().dim_a(); }
  Index dim_c() const noexcept { return ancilla.dim_b(); }
};

/// Throws NotOrthonormal unless <psi_j, psi_k> = delta_jk within 1e-10.
LudersChannel luders_channel(std::span<const BipartiteVector> psis, const BipartiteVector& phi_bc);

/// Orthonormal rank-one decomposition of a projection P on H_a (x) H_b:
/// eigenvectors of P with eigenvalue > 0.5.
std::vector<BipartiteVector> rank_one_decomposition(const ComplexMatrix& projection, Index dim_a,
                                                    Index dim_b);

/// Dense route for (P (x) 1^c)(phi^a (x) phi^{bc}), P = sum_k |psi_k><psi_k|.
ComplexVector luders_prepared_vector(const LudersChannel& ch, const ComplexVector& phi_a);

/// EPR route for the same vector: sum_k psi_k (x) t_k phi^a.
ComplexVector luders_factored_vector(const LudersChannel& ch, const ComplexVector& phi_a);

/// T(nu) = sum_k t_k nu t_k^*.
ComplexMatrix luders_apply(const LudersChannel& ch, const ComplexMatrix& nu);

/// T(nu) in the factored form s_phi^{cb} (sum_k s_k^{ba} nu s_k^{ab}) s_phi^{bc}.
ComplexMatrix luders_apply_factored(const LudersChannel& ch, const ComplexMatrix& nu);

struct LudersBounds {
  double op_bound = 0.0;         // | sum_k t_k^* t_k |_inf
  double trace_bound = 0.0;      // sup of Tr T(nu) over unit-trace PSD nu
  double ancilla_norm = 0.0;     // ||phi^{bc}||
  double ancilla_norm_sq = 0.0;  // ||phi^{bc}||^2, the bound actually implied
};

LudersBounds luders_bounds(const LudersChannel& ch);

/// t^{ea} = s^{ed} o s^{dc} o s^{cb} o s^{ba} for stages
/// (psi^{ab}, phi^{bc}, psi^{cd}, phi^{de}). Throws OddParity for an odd number
/// of stages and InvalidArgument for any other even count.
ComplexMatrix chain_teleport(std::span<const BipartiteVector> stages);

/// Product of the total dimensions allowed in chain_oracle.
inline constexpr Index kChainOracleMaxDim = 4096;

/// Dense route for the five-party chain: projects
/// phi^a (x) phi^{bc} (x) phi^{de} with |psi^{ab}><psi^{ab}| (x) |psi^{cd}><psi^{cd}| (x) 1^e
/// and factors out psi^{ab} (x) psi^{cd}.
ComplexVector chain_oracle(const ComplexVector& phi_a, std::span<const BipartiteVector> ancillae,
                           std::span<const BipartiteVector> measured);

}  // namespace antilin
