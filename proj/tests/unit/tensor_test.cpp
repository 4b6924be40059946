#include <gtest/gtest.h>

#include "magnus/tensor.hpp"
#include "test_support.hpp"

namespace magnus {
namespace {

using testing::Gen;
using testing::NaivePoly;
using testing::T;

TEST(Rational, ParseAndFormat) {
  EXPECT_EQ(parse_rational("-2/4"), make_rational(-1, 2));
  EXPECT_EQ(parse_rational("7"), Rational(7));
  EXPECT_EQ(rational_to_fraction_string(make_rational(6, -4)), "-3/2");
  EXPECT_EQ(rational_to_fraction_string(Rational(3)), "3/1");
  EXPECT_EQ(rational_to_fraction_string(Rational(0)), "0/1");
  EXPECT_EQ(rational_to_string(make_rational(-1, 12)), "-1/12");
  EXPECT_THROW(parse_rational("1/0"), std::invalid_argument);
  EXPECT_THROW(parse_rational("1/"), std::invalid_argument);
  EXPECT_THROW(parse_rational("x"), std::invalid_argument);
  EXPECT_THROW(parse_rational(""), std::invalid_argument);
  EXPECT_EQ(factorial(5), Rational(120));
}

TEST(Monomial, PackingOrderAndSlices) {
  const Monomial ab = Monomial::from_letters({0, 1});
  EXPECT_EQ(ab.degree(), 2);
  EXPECT_EQ(ab.letters(), (std::vector<int>{0, 1}));
  EXPECT_EQ(Monomial{}.degree(), 0);
  // A proper prefix sorts first, then lexicographic.
  EXPECT_LT(Monomial::letter(0), ab);
  EXPECT_LT(ab, Monomial::letter(1));
  EXPECT_LT(Monomial{}, Monomial::letter(0));
  const Monomial w = Monomial::from_letters({3, 1, 2, 0});
  EXPECT_EQ(w.slice(1, 2), Monomial::from_letters({1, 2}));
  EXPECT_EQ(w.rotate(), Monomial::from_letters({1, 2, 0, 3}));
  EXPECT_EQ(w.drop_first(), Monomial::from_letters({1, 2, 0}));
  EXPECT_EQ(ab.concat(w).letters(), (std::vector<int>{0, 1, 3, 1, 2, 0}));

  std::vector<int> sixteen(16, 13);
  const Monomial full = Monomial::from_letters(sixteen);
  EXPECT_EQ(full.degree(), 16);
  EXPECT_EQ(full.at(15), 13);
  EXPECT_EQ(full.rotate(), full);
}

TEST(Context, Validation) {
  EXPECT_THROW(AlgebraContext(0, 3), std::invalid_argument);
  EXPECT_THROW(AlgebraContext(8, 3), std::invalid_argument);
  EXPECT_THROW(AlgebraContext(1, 17), std::invalid_argument);
  EXPECT_NO_THROW(AlgebraContext(7, 16));
  EXPECT_EQ(basis_name(0), "A1");
  EXPECT_EQ(basis_name(3), "B2");
}

TEST(Intersection, Convention) {
  EXPECT_EQ(intersection(BasisVector::a(2, 1), BasisVector::b(2, 1)), 1);
  EXPECT_EQ(intersection(BasisVector::b(2, 1), BasisVector::a(2, 1)), -1);
  EXPECT_EQ(intersection(BasisVector::a(2, 1), BasisVector::a(2, 2)), 0);
  EXPECT_EQ(intersection(BasisVector::a(2, 2), BasisVector::b(2, 1)), 0);
  EXPECT_EQ(dual_index(2), 3);
}

TEST(Tensor, AdditionExamples) {
  const AlgebraContext ctx(1, 3);
  const Tensor a = T(ctx, "A");
  EXPECT_TRUE((a + (-a)).is_zero());
  EXPECT_EQ(T(ctx, "1 + A") + T(ctx, "B"), T(ctx, "1 + A + B"));
  const Tensor s = T(ctx, "A1 B1") + T(ctx, "B1 A1");
  ASSERT_EQ(s.size(), 2u);
  EXPECT_EQ(s.coefficient(Monomial::from_letters({0, 1})), 1);
  EXPECT_EQ(s.coefficient(Monomial::from_letters({1, 0})), 1);
}

TEST(Tensor, MultiplicationExamples) {
  const AlgebraContext ctx(1, 3);
  EXPECT_EQ(T(ctx, "1 + A") * T(ctx, "1 + B"), T(ctx, "1 + A + B + A B"));
  const AlgebraContext ctx2(1, 2);
  EXPECT_TRUE((T(ctx2, "A") * T(ctx2, "A B")).is_zero());
  const AlgebraContext g2(2, 4);
  const Tensor omega = symplectic_form(g2);
  EXPECT_EQ(omega * Tensor::one(g2), omega);
}

TEST(Tensor, SymplecticForm) {
  EXPECT_EQ(symplectic_form(AlgebraContext(1, 2)), T(AlgebraContext(1, 2), "A1 B1 - B1 A1"));
  EXPECT_EQ(symplectic_form(AlgebraContext(2, 2)), T(AlgebraContext(2, 2), "A1 B1 - B1 A1 + A2 B2 - B2 A2"));
  const Tensor omega = symplectic_form(AlgebraContext(2, 3));
  EXPECT_EQ(phi(omega), Rational(2) * omega);
  EXPECT_THROW(symplectic_form(AlgebraContext(1, 1)), std::invalid_argument);
}

TEST(Tensor, WedgeExamples) {
  const AlgebraContext ctx(1, 3);
  const Tensor a = T(ctx, "A"), b = T(ctx, "B");
  EXPECT_EQ(wedge_embed(std::vector<Tensor>{a, b}), T(ctx, "A B - B A"));
  EXPECT_EQ(wedge_embed(std::vector<Tensor>{a, b}), bracket(a, b));
  EXPECT_TRUE(wedge_embed(std::vector<Tensor>{a, a}).is_zero());
  EXPECT_TRUE(wedge_embed(std::vector<Tensor>{a, a, b}).is_zero());
  EXPECT_THROW(wedge_embed(std::vector<Tensor>{T(ctx, "A B")}), PreconditionError);

  const AlgebraContext g2(2, 3);
  const Tensor w = wedge_embed(std::vector<Tensor>{T(g2, "A1"), T(g2, "B1"), T(g2, "A2")});
  EXPECT_EQ(w.size(), 6u);
  EXPECT_EQ(antisymmetrize(w), w);
  EXPECT_NE(antisymmetrize(T(g2, "A1 B1 A2")), T(g2, "A1 B1 A2"));
}

TEST(Tensor, GradingExamples) {
  const AlgebraContext ctx(1, 3);
  EXPECT_EQ(graded_part(T(ctx, "1 + A + A B"), 2), T(ctx, "A B"));
  EXPECT_EQ(filtration_degree(symplectic_form(ctx)), 2);
  EXPECT_EQ(filtration_degree(Tensor(ctx)), 4);
  EXPECT_THROW(graded_part(Tensor(ctx), 4), std::out_of_range);
  EXPECT_EQ(degree_range(T(ctx, "1 + A + A B + B B B"), 1, 2), T(ctx, "A + A B"));
}

TEST(Tensor, ContextMismatchThrows) {
  const Tensor a = Tensor::basis(AlgebraContext(1, 3), 0);
  const Tensor b = Tensor::basis(AlgebraContext(1, 4), 0);
  const Tensor c = Tensor::basis(AlgebraContext(2, 3), 0);
  EXPECT_THROW(a + b, ContextMismatch);
  EXPECT_THROW(a * c, ContextMismatch);
}

TEST(Tensor, TruncationChange) {
  const AlgebraContext ctx(1, 3);
  const Tensor t = T(ctx, "1 + A + A B + B B B");
  EXPECT_EQ(with_truncation(t, 2), T(AlgebraContext(1, 2), "1 + A + A B"));
  EXPECT_EQ(with_truncation(with_truncation(t, 5), 3), t);
}

TEST(Tensor, FirstLetterSplitRoundTrip) {
  Gen gen(11);
  const AlgebraContext ctx(2, 5);
  for (int s = 0; s < 30; ++s) {
    const Tensor t = gen.tensor(ctx, 1, 5);
    EXPECT_EQ(join_first_letter(ctx, split_first_letter(t)), t);
  }
}

TEST(TensorProperty, RingAxioms) {
  Gen gen(1);
  for (int s = 0; s < 40; ++s) {
    const AlgebraContext ctx(gen.uniform(1, 2), gen.uniform(2, 6));
    const Tensor a = gen.tensor(ctx, 0, 4), b = gen.tensor(ctx, 0, 4), c = gen.tensor(ctx, 0, 4);
    EXPECT_EQ((a * b) * c, a * (b * c));
    EXPECT_EQ(a * (b + c), a * b + a * c);
    EXPECT_EQ((a + b) * c, a * c + b * c);
    EXPECT_EQ(a + b, b + a);
    EXPECT_EQ(Tensor::one(ctx) * a, a);
    EXPECT_EQ(a - a, Tensor(ctx));
  }
}

TEST(TensorProperty, ProductMatchesNaiveOracle) {
  Gen gen(2);
  for (int s = 0; s < 40; ++s) {
    const AlgebraContext ctx(gen.uniform(1, 3), gen.uniform(2, 7));
    const Tensor a = gen.tensor(ctx, 0, 5, 8), b = gen.tensor(ctx, 0, 5, 8);
    const NaivePoly na = NaivePoly::from(a), nb = NaivePoly::from(b);
    EXPECT_EQ(a * b, (na * nb).to_tensor(ctx));
    EXPECT_EQ(a + b, (na + nb).to_tensor(ctx));
  }
}

TEST(TensorProperty, GradingIsMultiplicative) {
  Gen gen(3);
  const AlgebraContext ctx(2, 6);
  for (int s = 0; s < 30; ++s) {
    const int p = gen.uniform(0, 3), q = gen.uniform(0, 3);
    const Tensor a = gen.homogeneous(ctx, p), b = gen.homogeneous(ctx, q);
    EXPECT_EQ(graded_part(a * b, p + q), a * b);
  }
}

TEST(TensorProperty, CanonicalForm) {
  Gen gen(4);
  const AlgebraContext ctx(2, 4);
  for (int s = 0; s < 30; ++s) {
    const Tensor t = gen.tensor(ctx, 0, 6, 10);
    for (std::size_t i = 0; i < t.size(); ++i) {
      EXPECT_NE(t.terms()[i].coeff, 0);
      EXPECT_LE(t.terms()[i].mono.degree(), 4);
      if (i > 0) {
        EXPECT_LT(t.terms()[i - 1].mono, t.terms()[i].mono);
      }
    }
  }
}

}  // namespace
}  // namespace magnus
