#include "antilin/modular.hpp"

#include <vector>

#include "test_util.hpp"

namespace antilin {
namespace {

using namespace antilin::testing;

const double kRt2 = std::sqrt(2.0);

BipartiteVector bell() { return BipartiteVector::maximally_entangled(2); }

ComplexMatrix sqrt_reduced(const BipartiteVector& v, Side side) { return psd_sqrt(reduced(v, side)); }

ComplexMatrix support(const BipartiteVector& v, Side side) { return support_projection(reduced(v, side)); }

ComplexMatrix matrix_unit(Index d, Index i, Index j) {
  ComplexMatrix e = ComplexMatrix::Zero(d, d);
  e(i, j) = 1.0;
  return e;
}

/// (A (x) 1) v on the flattened vector.
ComplexVector act_a(const ComplexMatrix& a, const BipartiteVector& v) {
  return kron(a, eye(v.dim_b())) * v.flat();
}

BipartiteVector full_rank_state(Index d, Rng& rng) {
  for (;;) {
    auto v = random_state(d, d, rng);
    if (gns_check(v)) return v;
  }
}

TEST(TwistedProduct, ConjugationPairSwapsBasisVectors) {
  const AntilinearMap c = AntilinearMap::conjugation(2);
  const TwistedOperator op = twisted_product(c, c);
  EXPECT_EQ(op.parity(), Parity::Antilinear);
  const ComplexVector in = kron(basis(2, 0), basis(2, 1));
  EXPECT_VEC_NEAR(op.apply(in), kron(basis(2, 1), basis(2, 0)), 0.0);
  // Antilinearity: i e0 (x) e1 goes to -i e1 (x) e0.
  EXPECT_VEC_NEAR(op.apply(Complex(0, 1) * in), Complex(0, -1) * kron(basis(2, 1), basis(2, 0)), 0.0);
}

TEST(TwistedProduct, LinearPauliX) {
  const ComplexMatrix x = mat2(0, 1, 1, 0);
  const TwistedOperator op = twisted_product(x, eye(2));
  EXPECT_EQ(op.parity(), Parity::Linear);
  for (Index i = 0; i < 2; ++i) {
    for (Index j = 0; j < 2; ++j) {
      EXPECT_VEC_NEAR(op.apply(kron(basis(2, i), basis(2, j))), kron(ComplexVector(x * basis(2, j)), basis(2, i)), 0.0);
    }
  }
}

TEST(TwistedProduct, DefinitionOnProductVectors) {
  Rng rng(80);
  for (int trial = 0; trial < 20; ++trial) {
    const Index da = rng.uniform_int(1, 4), db = rng.uniform_int(1, 4);
    const ComplexMatrix eta = random_matrix(da, db, rng);
    const ComplexMatrix xi = random_matrix(db, da, rng);
    const ComplexVector u = random_matrix(da, 1, rng);
    const ComplexVector w = random_matrix(db, 1, rng);
    const ComplexVector in = kron(u, w);

    const TwistedOperator lin = twisted_product(eta, xi);
    EXPECT_VEC_NEAR(lin.apply(in), kron(ComplexVector(eta * w), ComplexVector(xi * u)), 1e-12);

    const AntilinearMap ea(eta), xa(xi);
    const TwistedOperator anti = twisted_product(ea, xa);
    EXPECT_VEC_NEAR(anti.apply(in), kron(ea(w), xa(u)), 1e-12);
    EXPECT_VEC_NEAR(anti.as_antilinear()(in), anti.apply(in), 0.0);
  }
}

TEST(TwistedProduct, AdjointLaw) {
  Rng rng(81);
  for (int trial = 0; trial < 20; ++trial) {
    const Index da = rng.uniform_int(1, 4), db = rng.uniform_int(1, 4);
    const ComplexMatrix eta = random_matrix(da, db, rng);
    const ComplexMatrix xi = random_matrix(db, da, rng);

    const TwistedOperator lin = twisted_product(eta, xi);
    const TwistedOperator lin_swapped = twisted_product(ComplexMatrix(xi.adjoint()), ComplexMatrix(eta.adjoint()));
    EXPECT_MAT_NEAR(ComplexMatrix(lin.mat().adjoint()), lin_swapped.mat(), 1e-12);
    EXPECT_MAT_NEAR(lin.adjoint().mat(), lin_swapped.mat(), 1e-12);

    const AntilinearMap ea(eta), xa(xi);
    const TwistedOperator anti = twisted_product(ea, xa);
    const TwistedOperator anti_swapped = twisted_product(xa.adjoint(), ea.adjoint());
    EXPECT_MAT_NEAR(anti.as_antilinear().adjoint().mat(), anti_swapped.mat(), 1e-12);
    EXPECT_MAT_NEAR(anti.adjoint().mat(), anti_swapped.mat(), 1e-12);

    // Defining property of the antilinear adjoint: <y, T x> = <x, T^* y>.
    const ComplexVector x = random_matrix(da * db, 1, rng);
    const ComplexVector y = random_matrix(da * db, 1, rng);
    const Complex lhs = y.dot(anti.apply(x));
    const Complex rhs = x.dot(anti.adjoint().apply(y));
    EXPECT_LE(std::abs(lhs - rhs), 1e-10);
  }
}

TEST(TwistedProduct, Errors) {
  const AnyMap lin = ComplexMatrix(eye(2));
  const AnyMap anti = AntilinearMap::conjugation(2);
  EXPECT_THROW_CODE(twisted_product(lin, anti), ErrorCode::MixedParity);
  EXPECT_THROW_CODE(twisted_product(anti, lin), ErrorCode::MixedParity);
  EXPECT_EQ(twisted_product(anti, anti).parity(), Parity::Antilinear);
  EXPECT_EQ(twisted_product(lin, lin).parity(), Parity::Linear);
  EXPECT_THROW_CODE(twisted_product(eye(2), eye(2)).as_antilinear(), ErrorCode::MixedParity);
  EXPECT_THROW_CODE(twisted_product(ComplexMatrix(ComplexMatrix::Ones(2, 3)), eye(2)), ErrorCode::DimMismatch);
  EXPECT_THROW_CODE(twisted_product(eye(2), eye(2)).apply(basis(3, 0)), ErrorCode::DimMismatch);
}

TEST(TwistedCompose, ConjugationSquaredIsIdentity) {
  const TwistedOperator c = twisted_product(AntilinearMap::conjugation(3), AntilinearMap::conjugation(3));
  EXPECT_MAT_NEAR(twisted_compose(c, c), eye(9), 0.0);
}

TEST(TwistedCompose, AgreesWithDenseProduct) {
  Rng rng(82);
  for (int trial = 0; trial < 20; ++trial) {
    const Index da = rng.uniform_int(1, 4), db = rng.uniform_int(1, 4);
    const auto anti = [&] {
      return twisted_product(AntilinearMap(random_matrix(da, db, rng)), AntilinearMap(random_matrix(db, da, rng)));
    };
    const TwistedOperator p1 = anti(), p2 = anti();
    EXPECT_MAT_NEAR(twisted_compose(p1, p2), compose(p1.as_antilinear(), p2.as_antilinear()), 1e-10);

    const TwistedOperator l1 = twisted_product(random_matrix(da, db, rng), random_matrix(db, da, rng));
    const TwistedOperator l2 = twisted_product(random_matrix(da, db, rng), random_matrix(db, da, rng));
    EXPECT_MAT_NEAR(twisted_compose(l1, l2), ComplexMatrix(l1.mat() * l2.mat()), 1e-10);
  }
}

TEST(TwistedCompose, ConjugationsComposeToSupports) {
  Rng rng(83);
  for (int trial = 0; trial < 20; ++trial) {
    const auto phi = full_rank_state(3, rng);
    const auto psi = full_rank_state(3, rng);
    const TwistedOperator j_psi_phi = lift_operators(psi, phi).J;
    const TwistedOperator j_phi_psi = lift_operators(phi, psi).J;
    EXPECT_MAT_NEAR(twisted_compose(j_psi_phi, j_phi_psi), eye(9), 1e-9);
  }
  // Rank-deficient: the product is Q^a_psi (x) Q^b_phi.
  const auto psi = BipartiteVector::product(random_unit_vector(2, rng), random_unit_vector(2, rng));
  const auto phi = random_state(2, 2, rng);
  const ComplexMatrix got = twisted_compose(lift_operators(psi, phi).J, lift_operators(phi, psi).J);
  EXPECT_MAT_NEAR(got, kron(support(psi, Side::A), support(phi, Side::B)), 1e-9);
}

TEST(TwistedCompose, Errors) {
  const TwistedOperator lin = twisted_product(eye(2), eye(2));
  const TwistedOperator anti = twisted_product(AntilinearMap::conjugation(2), AntilinearMap::conjugation(2));
  const TwistedOperator big = twisted_product(AntilinearMap::conjugation(3), AntilinearMap::conjugation(3));
  EXPECT_THROW_CODE(twisted_compose(lin, anti), ErrorCode::MixedParity);
  EXPECT_THROW_CODE(twisted_compose(anti, big), ErrorCode::DimMismatch);
}

TEST(LiftOperators, BellBell) {
  const LiftedOperators l = lift_operators(bell(), bell());
  Rng rng(84);
  const ComplexVector u = random_matrix(2, 1, rng);
  const ComplexVector v = random_matrix(2, 1, rng);
  const ComplexVector want = kron(ComplexVector(v.conjugate()), ComplexVector(u.conjugate()));
  EXPECT_VEC_NEAR(l.J.apply(kron(u, v)), want, 1e-15);
  EXPECT_MAT_NEAR(l.Delta.mat(), ComplexMatrix(l.J.mat() / 2.0), 1e-15);
}

TEST(LiftOperators, DeltaProductGivesReductions) {
  Rng rng(85);
  for (int trial = 0; trial < 30; ++trial) {
    const Index da = rng.uniform_int(1, 4), db = rng.uniform_int(1, 4);
    const auto phi = random_state(da, db, rng);
    const auto psi = random_state(da, db, rng);
    const AntilinearMap d_psi_phi = lift_operators(psi, phi).Delta.as_antilinear();
    const AntilinearMap d_phi_psi = lift_operators(phi, psi).Delta.as_antilinear();
    EXPECT_MAT_NEAR(compose(d_psi_phi, d_phi_psi), kron(reduced(psi, Side::A), reduced(phi, Side::B)), 1e-9);
    EXPECT_MAT_NEAR(compose(d_phi_psi, d_psi_phi), kron(reduced(phi, Side::A), reduced(psi, Side::B)), 1e-9);
  }
}

TEST(LiftOperators, AdjointsExchangeSubscripts) {
  Rng rng(86);
  for (int trial = 0; trial < 20; ++trial) {
    const Index da = rng.uniform_int(1, 4), db = rng.uniform_int(1, 4);
    const auto phi = random_state(da, db, rng);
    const auto psi = random_state(da, db, rng);
    const LiftedOperators fp = lift_operators(phi, psi);
    const LiftedOperators pf = lift_operators(psi, phi);
    // Antilinear adjoint = transpose.
    EXPECT_MAT_NEAR(ComplexMatrix(fp.Delta.mat().transpose()), pf.Delta.mat(), 1e-12);
    EXPECT_MAT_NEAR(ComplexMatrix(fp.J.mat().transpose()), pf.J.mat(), 1e-12);
    EXPECT_MAT_NEAR(ComplexMatrix(fp.S.mat().transpose()), pf.F.mat(), 1e-12);
    EXPECT_MAT_NEAR(ComplexMatrix(fp.F.mat().transpose()), pf.S.mat(), 1e-12);
  }
}

TEST(LiftOperators, PolarForms) {
  Rng rng(87);
  for (int trial = 0; trial < 30; ++trial) {
    const Index da = rng.uniform_int(1, 4), db = rng.uniform_int(1, 4);
    // Mix of full-rank and rank-deficient instances.
    const bool deficient = trial % 3 == 0;
    const auto phi = deficient ? BipartiteVector::product(random_unit_vector(da, rng), random_unit_vector(db, rng))
                               : random_state(da, db, rng);
    const auto psi = random_state(da, db, rng);
    const LiftedOperators l = lift_operators(psi, phi);
    const AntilinearMap j = l.J.as_antilinear();

    const ComplexMatrix ra_psi = sqrt_reduced(psi, Side::A), rb_psi = sqrt_reduced(psi, Side::B);
    const ComplexMatrix ra_phi = sqrt_reduced(phi, Side::A), rb_phi = sqrt_reduced(phi, Side::B);
    const ComplexMatrix qa_psi = support(psi, Side::A), qb_psi = support(psi, Side::B);
    const ComplexMatrix qa_phi = support(phi, Side::A), qb_phi = support(phi, Side::B);

    const ComplexMatrix delta = l.Delta.mat();
    EXPECT_MAT_NEAR(compose(kron(ra_psi, rb_phi), j).mat(), delta, 1e-9);
    EXPECT_MAT_NEAR(compose(j, kron(ra_phi, rb_psi)).mat(), delta, 1e-9);

    const ComplexMatrix s = l.S.mat();
    EXPECT_MAT_NEAR(compose(kron(qa_psi, rb_phi), j).mat(), s, 1e-9);
    EXPECT_MAT_NEAR(compose(j, kron(ra_phi, qb_psi)).mat(), s, 1e-9);

    const ComplexMatrix f = l.F.mat();
    EXPECT_MAT_NEAR(compose(kron(ra_psi, qb_phi), j).mat(), f, 1e-9);
    EXPECT_MAT_NEAR(compose(j, kron(qa_phi, rb_psi)).mat(), f, 1e-9);
  }
}

TEST(LiftOperators, DimMismatch) {
  EXPECT_THROW_CODE(lift_operators(bell(), BipartiteVector::maximally_entangled(3)), ErrorCode::DimMismatch);
}

TEST(Tomita, BellExample) {
  const ModularTriple m = tomita(bell(), bell());
  EXPECT_MAT_NEAR(m.Delta, eye(4), 1e-14);
  EXPECT_MAT_NEAR(m.J.mat(), m.S.mat(), 1e-14);
  const ComplexVector got = m.S(act_a(matrix_unit(2, 0, 1), bell()));
  EXPECT_VEC_NEAR(got, kron(basis(2, 1), basis(2, 0)) / kRt2, 1e-15);
}

TEST(Tomita, DefiningRelationOnMatrixUnits) {
  Rng rng(88);
  for (int trial = 0; trial < 20; ++trial) {
    const Index d = rng.uniform_int(1, 4);
    const auto phi = random_state(d, d, rng);
    const auto psi = full_rank_state(d, rng);
    const ModularTriple m = tomita(phi, psi);
    double worst = 0.0;
    for (Index i = 0; i < d; ++i) {
      for (Index j = 0; j < d; ++j) {
        const ComplexMatrix e = matrix_unit(d, i, j);
        worst = std::max(worst, max_abs_diff(m.S(act_a(e, psi)), act_a(ComplexMatrix(e.adjoint()), phi)));
      }
    }
    EXPECT_LE(worst, 1e-9);
    // Antilinear in A, checked with a random complex A.
    const ComplexMatrix a = random_matrix(d, d, rng);
    EXPECT_VEC_NEAR(m.S(act_a(a, psi)), act_a(ComplexMatrix(a.adjoint()), phi), 1e-9);
  }
}

TEST(Tomita, PolarStructure) {
  Rng rng(89);
  for (int trial = 0; trial < 20; ++trial) {
    const Index d = rng.uniform_int(2, 4);
    const auto phi = full_rank_state(d, rng);
    const auto psi = full_rank_state(d, rng);
    const ModularTriple m = tomita(phi, psi);

    const HermitianEigen e = hermitian_eigen(m.Delta);
    EXPECT_GT(e.values.minCoeff(), 0.0);
    EXPECT_MAT_NEAR(ComplexMatrix(m.Delta_sqrt * m.Delta_sqrt), m.Delta, 1e-9 * std::max(1.0, e.values.maxCoeff()));
    EXPECT_MAT_NEAR(compose(m.J, m.Delta_sqrt).mat(), m.S.mat(), 1e-9);
    EXPECT_MAT_NEAR(compose(m.J.adjoint(), m.J), eye(d * d), 1e-9);
    EXPECT_MAT_NEAR(compose(m.J, m.J.adjoint()), eye(d * d), 1e-9);
  }
}

TEST(Tomita, PhaseIsTwistedConjugationPair) {
  Rng rng(90);
  for (int trial = 0; trial < 20; ++trial) {
    const Index d = rng.uniform_int(2, 4);
    const auto phi = full_rank_state(d, rng);
    const auto psi = full_rank_state(d, rng);
    const ModularTriple m = tomita(phi, psi);
    EXPECT_MAT_NEAR(m.J.mat(), lift_operators(psi, phi).J.mat(), 1e-9);
  }
}

TEST(Tomita, InvertibilityRelation) {
  Rng rng(91);
  for (int trial = 0; trial < 20; ++trial) {
    const Index d = rng.uniform_int(2, 4);
    const auto phi = full_rank_state(d, rng);
    const auto psi = full_rank_state(d, rng);
    const ModularTriple m = tomita(phi, psi);
    const AntilinearMap j_phi_psi = lift_operators(phi, psi).J.as_antilinear();
    const ComplexMatrix lhs = compose(j_phi_psi, m.S) * kron(eye(d), sqrt_reduced(psi, Side::B));
    EXPECT_MAT_NEAR(lhs, kron(sqrt_reduced(phi, Side::A), eye(d)), 1e-9);
  }
}

TEST(Tomita, EqualStatesFixTheVector) {
  Rng rng(92);
  for (int trial = 0; trial < 20; ++trial) {
    const Index d = rng.uniform_int(1, 4);
    const auto psi = full_rank_state(d, rng);
    const ModularTriple m = tomita(psi, psi);
    EXPECT_VEC_NEAR(m.S(psi.flat()), psi.flat(), 1e-10);
    EXPECT_VEC_NEAR(m.J(psi.flat()), psi.flat(), 1e-10);
  }
}

TEST(Tomita, Errors) {
  const auto product = BipartiteVector::product(basis(2, 0), basis(2, 0));
  EXPECT_THROW_CODE(tomita(bell(), product), ErrorCode::NotSeparating);
  Rng rng(93);
  EXPECT_THROW_CODE(tomita(random_state(2, 3, rng), random_state(2, 3, rng)), ErrorCode::NotSeparating);
  EXPECT_THROW_CODE(tomita(BipartiteVector::maximally_entangled(3), bell()), ErrorCode::DimMismatch);
}

TEST(Gns, Examples) {
  EXPECT_TRUE(gns_check(bell()));
  EXPECT_FALSE(gns_check(BipartiteVector::product(basis(2, 0), basis(2, 1))));
  const BipartiteVector skew(diag({std::sqrt(0.999), std::sqrt(0.001)}));
  const GnsReport r = gns_report(skew);
  EXPECT_TRUE(r.completely_entangled);
  EXPECT_EQ(r.rank_a, 2);
  EXPECT_EQ(r.rank_b, 2);
  EXPECT_EQ(r.cyclic_rank, 4);
}

TEST(Gns, CyclicWhenCompletelyEntangled) {
  Rng rng(94);
  for (int trial = 0; trial < 30; ++trial) {
    const Index da = rng.uniform_int(1, 4), db = rng.uniform_int(1, 4);
    const auto psi = random_state(da, db, rng);
    const GnsReport r = gns_report(psi);
    EXPECT_EQ(r.completely_entangled, da == db);
    // The orbit spans H_a (x) range, so its dimension is dim_a * rank_b.
    EXPECT_EQ(r.cyclic_rank, da * r.rank_b);
    if (r.completely_entangled) EXPECT_EQ(r.cyclic_rank, da * db);
  }
}

}  // namespace
}  // namespace antilin
