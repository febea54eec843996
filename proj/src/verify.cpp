#include <algorithm>
#include <array>
#include <atomic>
#include <cmath>
#include <exception>
#include <thread>

#include "antilin/random.hpp"
#include "antilin/report.hpp"
#include "checks.hpp"

namespace antilin {

namespace {

enum Id : std::size_t {
  kEprDecomposition,
  kEprPairing,
  kEprTraceInner,
  kEprReconstructIdentity,
  kEprReconstructPositive,
  kEprReduced,
  kEprLocal,
  kPolarFactorization,
  kPolarSupports,
  kPolarConjugatedReduction,
  kPartnerTransfer,
  kCloningCommutator,
  kCloningHermiticity,
  kTeleportFactorization,
  kTeleportBound,
  kTeleportSaturation,
  kTeleportTraceFidelity,
  kLudersPrepared,
  kLudersFactored,
  kLudersDecomposition,
  kLudersTraceBound,
  kLudersOpBound,
  kLudersRankOne,
  kLudersFullBasis,
  kChainOracle,
  kTwistedAdjoint,
  kTwistedCompose,
  kLiftDeltaProduct,
  kLiftPolarDelta,
  kLiftPolarS,
  kLiftPolarF,
  kTomitaRelation,
  kTomitaReconstruction,
  kTomitaDeltaPositive,
  kTomitaPhase,
  kTomitaConjugations,
  kTomitaInvertibility,
  kTomitaInvertibilityLiteral,
  kTomitaAntiunitary,
  kTomitaEqualStates,
  kIdentityCount
};

struct IdentitySpec {
  const char* name;
  double nominal;
  bool gating = true;
};

constexpr std::array<IdentitySpec, kIdentityCount> kIdentities{{
    {"epr.decomposition_independence", 1e-10},
    {"epr.pairing", 1e-12},
    {"epr.trace_inner_product", 1e-12},
    {"epr.reconstruct_identity", 1e-10},
    {"epr.reconstruct_positive", 1e-10},
    {"epr.reduced_partial_trace", 1e-10},
    {"epr.local_transform", 1e-10},
    {"polar.factorization", 1e-9},
    {"polar.supports", 1e-9},
    {"polar.conjugated_reduction", 1e-9},
    {"partner.trace_transfer", 1e-10},
    {"cloning.commutator", 1e-9},
    {"cloning.hermiticity", 1e-9},
    {"teleport.factorization", 1e-10},
    {"teleport.success_bound", 1e-12},
    {"teleport.saturation", 1e-9},
    {"teleport.trace_norm_fidelity", 1e-9},
    {"luders.prepared_vector", 1e-10},
    {"luders.factored_form", 1e-10},
    {"luders.decomposition_independence", 1e-9},
    {"luders.trace_bound", 1e-9},
    {"luders.op_bound", 1e-9},
    {"luders.rank_one", 0.0},
    {"luders.full_basis", 1e-9},
    {"chain.oracle", 1e-10},
    {"twisted.adjoint", 1e-10},
    {"twisted.compose_law", 1e-10},
    {"lift.delta_product", 1e-9},
    {"lift.polar_delta", 1e-9},
    {"lift.polar_s", 1e-9},
    {"lift.polar_f", 1e-9},
    {"tomita.relation", 1e-9},
    {"tomita.reconstruction", 1e-9},
    {"tomita.delta_positive", 1e-9},
    {"tomita.phase", 1e-9},
    {"tomita.conjugations_compose", 1e-9},
    {"tomita.invertibility", 1e-9},
    {"tomita.invertibility_literal", 1e-9, false},
    {"tomita.antiunitary", 1e-9},
    {"tomita.equal_states", 1e-10},
}};

constexpr int kBoundInputs = 1000;
constexpr int kMaxChainDraws = 16;

using Residuals = std::array<double, kIdentityCount>;

class Trial {
 public:
  Trial(const VerifyConfig& cfg, std::uint64_t index)
      : rng_(Rng::stream(cfg.seed, index)), dims_(cfg.dims) {
    res_.fill(0.0);
  }

  Residuals run() {
    epr();
    polar_suite();
    cloning();
    teleport();
    luders();
    chain();
    twisted();
    modular();
    return res_;
  }

 private:
  Index pick() {
    return dims_[static_cast<std::size_t>(rng_.uniform_int(0, static_cast<std::int64_t>(dims_.size()) - 1))];
  }
  void put(Id id, double r) {
    double& slot = res_[id];
    if (std::isnan(slot)) return;
    if (std::isnan(r) || r > slot) slot = r;
  }
  ComplexMatrix positive(Index d) {
    const ComplexMatrix g = random_matrix(d, d, rng_);
    return g * g.adjoint();
  }
  BipartiteVector completely_entangled(Index d) {
    for (;;) {
      BipartiteVector psi = random_state(d, d, rng_);
      if (gns_check(psi)) return psi;
    }
  }

  void epr() {
    const Index da = pick(), db = pick();
    const BipartiteVector psi = random_state(da, db, rng_);

    std::vector<ComplexVector> us, ws;
    for (int k = 0; k < 5; ++k) {
      us.push_back(random_matrix(da, 1, rng_));
      ws.push_back(random_matrix(db, 1, rng_));
    }
    const ComplexVector fa = random_matrix(da, 1, rng_);
    const ComplexVector fb = random_matrix(db, 1, rng_);
    put(kEprDecomposition, checks::epr_definition(us, ws, fa, fb));
    put(kEprDecomposition, checks::epr_decomposition_independence(psi));
    put(kEprPairing, checks::epr_pairing(psi, random_unit_vector(da, rng_), random_unit_vector(db, rng_)));
    put(kEprTraceInner, checks::epr_trace_inner(random_state(da, db, rng_), psi));
    put(kEprReconstructIdentity, checks::epr_reconstruct_identity(psi));
    put(kEprReconstructPositive, checks::epr_reconstruct_positive(psi, positive(da)));
    put(kEprReduced, checks::epr_reduced(psi));
    put(kEprLocal, checks::epr_local(psi, random_matrix(da, da, rng_), random_matrix(db, db, rng_)));

    const Index d = pick();
    put(kPartnerTransfer, checks::partner_transfer(random_state(d, d, rng_), random_matrix(d, d, rng_)));
  }

  void polar_suite() {
    const Index da = pick(), db = pick();
    ComplexMatrix c = random_state(da, db, rng_).coeff();
    // Every other instance is rank deficient through a zero row.
    if (rng_.uniform() < 0.5 && da >= 2) c.row(static_cast<Index>(rng_.uniform_int(0, da - 1))).setZero();
    if (c.norm() > 0.0) c /= c.norm();
    const BipartiteVector psi(c);
    const AntilinearMap s = epr_maps(psi).s_ba;
    put(kPolarFactorization, checks::polar_factorization(s));
    put(kPolarSupports, checks::polar_supports(s));
    put(kPolarConjugatedReduction, checks::polar_conjugated_reduction(psi));
  }

  void cloning() {
    const Index d = pick();
    const ComplexMatrix u = random_unitary(d, rng_);
    const ComplexMatrix v = random_unitary(d, rng_);
    ComplexMatrix d1 = ComplexMatrix::Zero(d, d), d2 = ComplexMatrix::Zero(d, d);
    for (Index i = 0; i < d; ++i) {
      d1(i, i) = rng_.normal();
      d2(i, i) = rng_.normal();
    }
    ComplexMatrix c1 = u * d1 * v, c2 = u * d2 * v;
    c1 /= c1.norm();
    c2 /= c2.norm();
    const CloningCheck cc = cloning_check(BipartiteVector(c1), BipartiteVector(c2));
    put(kCloningCommutator, cc.commutator_norm);
    put(kCloningHermiticity, cc.hermiticity_defect);
  }

  void teleport() {
    const Index da = pick(), db = pick(), dc = pick();
    const TeleportMap tm = teleport_map(random_state(da, db, rng_), random_state(db, dc, rng_));
    put(kTeleportFactorization, checks::teleport_factorization(tm, random_unit_vector(da, rng_)));
    std::vector<ComplexVector> inputs;
    inputs.reserve(kBoundInputs);
    for (int k = 0; k < kBoundInputs; ++k) inputs.push_back(random_unit_vector(da, rng_));
    put(kTeleportBound, checks::teleport_bound_violation(tm, inputs));
    put(kTeleportSaturation, checks::teleport_saturation(tm));
    put(kTeleportTraceFidelity, checks::teleport_trace_fidelity(tm));
  }

  std::vector<BipartiteVector> columns(const ComplexMatrix& q, Index da, Index db) {
    std::vector<BipartiteVector> out;
    for (Index k = 0; k < q.cols(); ++k) out.push_back(BipartiteVector::from_flat(q.col(k), da, db));
    return out;
  }

  void luders() {
    const Index da = pick(), db = pick(), dc = pick();
    const Index r = rng_.uniform_int(1, da * db);
    const ComplexMatrix q = random_unitary(da * db, rng_).leftCols(r);
    const ComplexMatrix rotated = q * random_unitary(r, rng_);
    // Deliberately not normalized: the bounds scale with the ancilla norm.
    const BipartiteVector phi(random_matrix(db, dc, rng_) * (0.5 + rng_.uniform()) / std::sqrt(double(db * dc)));
    const LudersChannel c1 = luders_channel(columns(q, da, db), phi);
    const LudersChannel c2 = luders_channel(columns(rotated, da, db), phi);
    const ComplexMatrix nu = random_density(da, rng_);

    put(kLudersPrepared, checks::luders_prepared(c1, random_unit_vector(da, rng_)));
    put(kLudersFactored, checks::luders_factored(c1, random_matrix(da, da, rng_)));
    put(kLudersDecomposition, max_abs_diff(luders_apply(c1, nu), luders_apply(c2, nu)));
    put(kLudersTraceBound, checks::luders_trace_bound(c1, nu));
    put(kLudersOpBound, checks::luders_op_bound(c1));

    const std::vector<BipartiteVector> one{c1.psis.front()};
    put(kLudersRankOne, max_abs_diff(luders_channel(one, phi).maps.front(), teleport_map(one.front(), phi).t));

    const ComplexMatrix full_basis = ComplexMatrix::Identity(da * db, da * db);
    put(kLudersFullBasis, checks::luders_full_basis(luders_channel(columns(full_basis, da, db), phi), nu));
  }

  void chain() {
    std::array<Index, 5> d{};
    for (int attempt = 0;; ++attempt) {
      for (auto& x : d) x = pick();
      if (d[0] * d[1] * d[2] * d[3] * d[4] <= kChainOracleMaxDim) break;
      if (attempt == kMaxChainDraws) {
        d.fill(*std::min_element(dims_.begin(), dims_.end()));
        break;
      }
    }
    const std::vector<BipartiteVector> stages{random_state(d[0], d[1], rng_), random_state(d[1], d[2], rng_),
                                              random_state(d[2], d[3], rng_), random_state(d[3], d[4], rng_)};
    const double r = checks::chain_oracle_residual(stages, random_unit_vector(d[0], rng_));
    // NaN here means even the smallest dimensions exceed the oracle guard.
    if (!std::isnan(r)) put(kChainOracle, r);
  }

  void twisted() {
    const Index da = pick(), db = pick();
    put(kTwistedAdjoint, checks::twisted_adjoint(random_matrix(da, db, rng_), random_matrix(db, da, rng_)));
    const auto anti = [&] {
      return twisted_product(AntilinearMap(random_matrix(da, db, rng_)), AntilinearMap(random_matrix(db, da, rng_)));
    };
    const TwistedOperator p1 = anti(), p2 = anti();
    put(kTwistedCompose, checks::twisted_compose_law(p1, p2));
  }

  void modular() {
    const Index d = pick();
    const BipartiteVector psi = completely_entangled(d);
    const BipartiteVector phi = random_state(d, d, rng_);
    put(kLiftDeltaProduct, checks::lift_delta_product(phi, psi));
    const checks::LiftPolar lp = checks::lift_polar(phi, psi);
    put(kLiftPolarDelta, lp.delta);
    put(kLiftPolarS, lp.s);
    put(kLiftPolarF, lp.f);

    const ModularTriple m = tomita(phi, psi);
    const checks::TomitaResiduals tr = checks::tomita_residuals(phi, psi, m);
    put(kTomitaRelation, tr.relation);
    put(kTomitaReconstruction, tr.reconstruction);
    put(kTomitaDeltaPositive, tr.delta_negativity);
    put(kTomitaPhase, tr.phase);
    put(kTomitaConjugations, tr.conjugations_compose);
    put(kTomitaInvertibility, tr.invertibility);
    put(kTomitaInvertibilityLiteral, tr.invertibility_literal);
    put(kTomitaAntiunitary, tr.antiunitary);
    put(kTomitaEqualStates, checks::tomita_equal_states(psi));
  }

  Rng rng_;
  const std::vector<Index>& dims_;
  Residuals res_{};
};

void validate(const VerifyConfig& cfg) {
  if (cfg.dims.empty()) throw Error(ErrorCode::InvalidArgument, "dims must not be empty");
  for (Index d : cfg.dims) {
    if (d < 1) throw Error(ErrorCode::InvalidArgument, "dims must be >= 1");
    if (d > 16) throw Error(ErrorCode::InvalidArgument, "dims above 16 are not supported by verify");
  }
  if (cfg.trials < 1) throw Error(ErrorCode::InvalidArgument, "trials must be >= 1");
  if (cfg.threads < 1) throw Error(ErrorCode::InvalidArgument, "threads must be >= 1");
  if (!(cfg.tolerance > 0.0) || !std::isfinite(cfg.tolerance)) {
    throw Error(ErrorCode::InvalidArgument, "tolerance must be a positive finite number");
  }
}

}  // namespace

Report verify(const VerifyConfig& cfg) {
  validate(cfg);
  const auto trials = static_cast<std::size_t>(cfg.trials);
  std::vector<Residuals> results(trials);
  std::vector<std::exception_ptr> errors(trials);

  std::atomic<std::size_t> next{0};
  const auto worker = [&] {
    for (std::size_t k = next++; k < trials; k = next++) {
      try {
        results[k] = Trial(cfg, k).run();
      } catch (...) {
        errors[k] = std::current_exception();
      }
    }
  };
  const auto threads = std::min<std::size_t>(static_cast<std::size_t>(cfg.threads), trials);
  if (threads <= 1) {
    worker();
  } else {
    std::vector<std::thread> pool;
    for (std::size_t t = 0; t < threads; ++t) pool.emplace_back(worker);
    for (auto& th : pool) th.join();
  }
  for (const auto& e : errors) {
    if (e) std::rethrow_exception(e);
  }

  ResidualTable table(cfg.tolerance);
  for (std::size_t id = 0; id < kIdentityCount; ++id) {
    const IdentitySpec& spec = kIdentities[id];
    for (std::size_t k = 0; k < trials; ++k) {
      table.record(spec.name, results[k][id], spec.nominal, spec.gating, static_cast<long long>(k));
    }
  }

  Report r;
  r.body = {{"command", "verify"},
            {"seed", cfg.seed},
            {"trials", cfg.trials},
            {"dims", cfg.dims},
            {"tolerance", cfg.tolerance}};
  r.body["identities"] = table.to_json();
  r.body["passed"] = table.passed();
  r.body["failed"] = table.failures();
  r.passed = table.passed();
  r.summary = "verify: seed " + std::to_string(cfg.seed) + ", " + std::to_string(cfg.trials) +
              " trials\n" + table.summary();
  return r;
}

}  // namespace antilin
