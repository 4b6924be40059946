#include <gtest/gtest.h>

#include "magnus/cyclic.hpp"
#include "magnus/twist_johnson.hpp"
#include "test_support.hpp"

namespace magnus {
namespace {

using testing::Gen;
using testing::T;

class TwistJohnson : public ::testing::Test {
 protected:
  static void SetUpTestSuite() {
    built5 = new Expansion(build_symplectic(2, 5));
    built6 = new Expansion(build_symplectic(2, 6));
  }
  static void TearDownTestSuite() {
    delete built5;
    delete built6;
  }
  static Expansion* built5;
  static Expansion* built6;
};

Expansion* TwistJohnson::built5 = nullptr;
Expansion* TwistJohnson::built6 = nullptr;

Tensor homology_class(const AlgebraContext& ctx, const GroupWord& w) {
  Tensor out(ctx);
  for (Letter l : w.letters()) out += Tensor::scalar(ctx, l.inverse ? -1 : 1) * Tensor::basis(ctx, l.generator);
  return out;
}

TEST_F(TwistJohnson, LInvariantLowDegrees) {
  Gen gen(81);
  const Expansion& theta = *built5;
  const AlgebraContext& ctx = theta.context();
  for (int s = 0; s < 15; ++s) {
    const GroupWord w = gen.nonempty_word(2, 6);
    const Tensor l = l_invariant_tensor(theta, w);
    const Tensor h = homology_class(ctx, w);
    const Tensor ell2 = graded_part(log_evaluate(theta, w), 2);
    EXPECT_EQ(with_truncation(graded_part(l, 2), 5), h * h);
    const Tensor h_raised = with_truncation(h, 6), ell2_raised = with_truncation(ell2, 6);
    EXPECT_EQ(graded_part(l, 3), h_raised * ell2_raised + ell2_raised * h_raised + nu(ell2_raised * h_raised));
    EXPECT_TRUE(is_nu_invariant(l));
  }
}

TEST(LInvariant, GenusOneFixtureDegreesThreeAndFour) {
  const Expansion theta = load_fixture("g1", 1, 5);
  const Tensor l = l_invariant_tensor(theta, GroupWord::alpha(1, 1));
  const AlgebraContext& ctx = l.context();
  EXPECT_TRUE(graded_part(l, 3).is_zero());
  const Tensor ab = T(ctx, "[A,B]");
  EXPECT_EQ(graded_part(l, 4), make_rational(1, 24) * cyclic_n(ab * ab));
  EXPECT_EQ(graded_part(l, 2), T(ctx, "A A"));
}

TEST_F(TwistJohnson, LInvariantConjugationAndInversion) {
  Gen gen(82);
  for (int s = 0; s < 20; ++s) {
    const GroupWord x = gen.nonempty_word(2, 8), y = gen.nonempty_word(2, 8);
    const Tensor l = l_invariant_tensor(*built5, x);
    EXPECT_EQ(l_invariant_tensor(*built5, conjugate(x, y)), l);
    EXPECT_EQ(l_invariant_tensor(*built5, inverse(x)), l);
    EXPECT_TRUE(verify_nilpotent_dependence(*built5, x, conjugate(x, y), 4).pass);
  }
}

TEST_F(TwistJohnson, NilpotentDependenceOnDeepCommutators) {
  // w2 = w1 c with c in the (k+2)-th term of the lower central series: L_i agrees for i <= k + 1.
  const GroupWord w1 = GroupWord::parse(2, "a1 b2");
  const GroupWord a = GroupWord::alpha(2, 2), b = GroupWord::beta(2, 1);
  const GroupWord c = commutator(a, commutator(a, commutator(b, a)));
  const Certificate cert = verify_nilpotent_dependence(*built5, w1, w1 * c, 2);
  EXPECT_TRUE(cert.pass) << cert.witness;
  const Tensor l1 = l_invariant_tensor(*built5, w1), l2 = l_invariant_tensor(*built5, w1 * c);
  EXPECT_NE(graded_part(l1, 5), graded_part(l2, 5));
}

TEST_F(TwistJohnson, TotalJohnsonExamples) {
  const Expansion& theta = *built5;
  const AlgebraEndomorphism id = total_johnson(theta, FreeAutomorphism::identity(2));
  EXPECT_EQ(id, AlgebraEndomorphism::identity(theta.context()));
  const AlgebraEndomorphism t = total_johnson(theta, twist_nonseparating(2));
  EXPECT_EQ(t.apply(evaluate(theta, GroupWord::beta(2, 1))), evaluate(theta, GroupWord::parse(2, "b1 a1")));
}

TEST_F(TwistJohnson, TotalJohnsonIsAHomomorphism) {
  Gen gen(83);
  const char* atoms[] = {"alpha1", "beta1", "alpha2", "beta2^-1", "sep1"};
  for (int s = 0; s < 5; ++s) {
    std::vector<TwistAtom> f1{TwistAtom::parse(atoms[gen.uniform(0, 4)]), TwistAtom::parse(atoms[gen.uniform(0, 4)])};
    std::vector<TwistAtom> f2{TwistAtom::parse(atoms[gen.uniform(0, 4)])};
    const FreeAutomorphism p1 = FreeAutomorphism::from_factorization(2, f1);
    const FreeAutomorphism p2 = FreeAutomorphism::from_factorization(2, f2);
    const AlgebraEndomorphism lhs = total_johnson(*built5, compose(p1, p2));
    const AlgebraEndomorphism rhs = compose(total_johnson(*built5, p1), total_johnson(*built5, p2));
    EXPECT_EQ(lhs, rhs);
  }
}

TEST(HomologyOfTwists, TransvectionExamples) {
  const RationalMatrix m = homology_action(twist_nonseparating(2));
  EXPECT_EQ(m(0, 1), 1);  // B1 -> B1 + A1
  EXPECT_EQ(m(1, 1), 1);
  EXPECT_EQ(m(0, 0), 1);  // A1 -> A1
  EXPECT_EQ(m(1, 0), 0);
  EXPECT_EQ(homology_action(twist_separating(2, 1)), RationalMatrix::identity(4));
}

TEST_F(TwistJohnson, LowDegreeComponents) {
  const Expansion& theta = *built5;
  const Derivation l = l_invariant(theta, GroupWord::alpha(2, 1));
  const JohnsonComponent tau1 = johnson_component(theta, twist_nonseparating(2), 1);
  for (int x = 0; x < 4; ++x) {
    EXPECT_EQ(tau1.values[x], -apply(l.tensor_degree_part(3), Tensor::basis(theta.context(), x)));
  }
  const FreeAutomorphism sep = twist_separating(2, 1);
  const Derivation lg = l_invariant(theta, separating_word(2, 1));
  const JohnsonComponent sep1 = johnson_component(theta, sep, 1);
  const JohnsonComponent sep2 = johnson_component(theta, sep, 2);
  for (int x = 0; x < 4; ++x) {
    EXPECT_TRUE(sep1.values[x].is_zero());
    EXPECT_EQ(sep2.values[x], -apply(lg.tensor_degree_part(4), Tensor::basis(theta.context(), x)));
  }
  EXPECT_THROW(johnson_component(theta, sep, 5), std::out_of_range);
  EXPECT_THROW(johnson_component(theta, sep, 0), std::out_of_range);
}

TEST_F(TwistJohnson, SeparatingSeriesExamples) {
  const Expansion& theta = *built6;
  const AlgebraContext& ctx = theta.context();
  const Derivation l = l_invariant(theta, separating_word(2, 1));
  const Derivation l4 = l.tensor_degree_part(4), l5 = l.tensor_degree_part(5), l6 = l.tensor_degree_part(6);
  const JohnsonComponent k3 = separating_tau_formula(theta, 1, 3);
  const JohnsonComponent k4 = separating_tau_formula(theta, 1, 4);
  for (int x = 0; x < 4; ++x) {
    const Tensor h = Tensor::basis(ctx, x);
    EXPECT_EQ(k3.values[x], -apply(l5, h));
    EXPECT_EQ(k4.values[x], -apply(l6, h) + make_rational(1, 2) * apply(l4, apply(l4, h)));
  }
  for (int k = 1; k <= 4; ++k) {
    EXPECT_EQ(johnson_component(theta, twist_separating(2, 1), k), separating_tau_formula(theta, 1, k)) << "k = " << k;
  }
}

TEST(SeparatingSeries, DegreeSixTermShape) {
  // k = 6 needs N = 7: -L8 + 1/2 (L4 L6 + L5 L5 + L6 L4) - 1/6 L4 L4 L4.
  const Expansion theta = build_symplectic(1, 7);
  const Derivation l = l_invariant(theta, separating_word(1, 1));
  const JohnsonComponent k6 = separating_tau_formula(theta, 1, 6);
  const Derivation l4 = l.tensor_degree_part(4), l5 = l.tensor_degree_part(5), l6 = l.tensor_degree_part(6),
                   l8 = l.tensor_degree_part(8);
  for (int x = 0; x < 2; ++x) {
    const Tensor h = Tensor::basis(theta.context(), x);
    const Tensor expected = -apply(l8, h) +
                            make_rational(1, 2) * (apply(l4, apply(l6, h)) + apply(l5, apply(l5, h)) + apply(l6, apply(l4, h))) -
                            make_rational(1, 6) * apply(l4, apply(l4, apply(l4, h)));
    EXPECT_EQ(k6.values[x], expected);
  }
  EXPECT_EQ(johnson_component(theta, twist_separating(1, 1), 6), k6);
}

TEST_F(TwistJohnson, SigmaExamples) {
  for (const Expansion& theta : {load_fixture("g1", 1, 5), *built5}) {
    const int g = theta.genus();
    const GroupWord a = GroupWord::alpha(g, 1), b = GroupWord::beta(g, 1);
    const Tensor theta_b = evaluate(theta, b);
    const Tensor key = Rational(2) * (theta_b * theta.log_value(0));
    EXPECT_EQ(sigma_log_power(theta, a, 2, b), key);
    EXPECT_EQ(sigma_log_power(theta, a, 2, b), Rational(-2) * apply(l_invariant(theta, a), theta_b));
    EXPECT_EQ(sigma_act(theta, a, b), with_truncation(evaluate(theta, b * a), theta.truncation() - 1));
  }
  const Expansion& theta = *built5;
  EXPECT_TRUE(sigma_act(theta, GroupWord::alpha(2, 1), GroupWord::alpha(2, 2)).is_zero());
  EXPECT_THROW(sigma_act(Expansion::exponential(AlgebraContext(1, 4)), GroupWord::alpha(1, 1), GroupWord::beta(1, 1)),
               PreconditionError);
}

TEST_F(TwistJohnson, DisjointCurvesDoNotInteract) {
  const Derivation l = l_invariant(*built5, GroupWord::alpha(2, 1));
  for (const char* w : {"a1", "a2", "b2", "a2 b2 A2"}) {
    EXPECT_TRUE(apply(l, evaluate(*built5, GroupWord::parse(2, w))).is_zero()) << w;
  }
  EXPECT_FALSE(apply(l, evaluate(*built5, GroupWord::beta(2, 1))).is_zero());
}

TEST(CurveDescriptor, ParseAndPrint) {
  for (const char* text : {"nonsep", "sep:1", "alpha:2", "beta:1", "conj(alpha2,beta1^-1):nonsep", "conj(sep1):beta:2"}) {
    EXPECT_EQ(CurveDescriptor::parse(text).to_string(), text);
  }
  EXPECT_THROW(CurveDescriptor::parse("loop"), std::invalid_argument);
  EXPECT_THROW(CurveDescriptor::parse("conj(alpha1"), std::invalid_argument);
  EXPECT_EQ(CurveDescriptor::parse("nonsep").word(2), GroupWord::alpha(2, 1));
  EXPECT_EQ(CurveDescriptor::parse("sep:1").word(2), separating_word(2, 1));
  const CurveDescriptor c = CurveDescriptor::parse("conj(beta1):nonsep");
  const FreeAutomorphism phi = twist(2, TwistAtom::parse("beta1"));
  EXPECT_EQ(c.word(2), phi.apply(GroupWord::alpha(2, 1)));
  EXPECT_EQ(c.twist(2).images(), compose(compose(phi, twist_nonseparating(2)), invert(phi)).images());
}

TEST_F(TwistJohnson, DehnTwistFormulaCertificates) {
  for (const char* c : {"nonsep", "sep:1", "beta:2", "conj(beta1):nonsep", "conj(alpha2,beta1^-1):nonsep"}) {
    const Certificate cert = verify_dehn_twist_formula(*built5, CurveDescriptor::parse(c));
    EXPECT_TRUE(cert.pass) << c << ": " << cert.witness;
    EXPECT_EQ(cert.to_json()["status"], "pass");
  }
}

TEST(DehnTwistFormula, FailsForANonSymplecticExpansion) {
  const Certificate cert = verify_dehn_twist_formula(Expansion::exponential(AlgebraContext(2, 4)), CurveDescriptor::separating(1));
  EXPECT_FALSE(cert.pass);
  EXPECT_FALSE(cert.witness.empty());
  EXPECT_EQ(cert.to_json()["status"], "fail");
}

TEST_F(TwistJohnson, OperatorIdentitiesAndClosedSurface) {
  const Certificate ops = verify_operator_identities(*built6, CurveDescriptor::nonseparating());
  EXPECT_TRUE(ops.pass) << ops.witness;
  const Expansion theta4 = built5->with_truncation(4);
  for (const char* c : {"nonsep", "sep:1"}) {
    const Certificate cert = verify_closed_surface_formula(theta4, CurveDescriptor::parse(c));
    EXPECT_TRUE(cert.pass) << c << ": " << cert.witness;
  }
}

}  // namespace
}  // namespace magnus
