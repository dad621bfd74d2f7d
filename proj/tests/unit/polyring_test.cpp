#include <gtest/gtest.h>

#include <set>

#include "oracles.hpp"
#include "starconf/polyring.hpp"

using namespace starconf;

TEST(SplitRng, ChildStreamsIgnoreParentConsumption) {
  SplitRng a(42), b(42);
  for (int i = 0; i < 10; ++i) b.next();
  EXPECT_EQ(a.child("forms").next(), b.child("forms").next());
  EXPECT_NE(a.child("forms").next(), a.child("lefschetz").next());
  EXPECT_NE(SplitRng(1).child(3).next(), SplitRng(2).child(3).next());
}

TEST(SplitRng, UniformStaysInRange) {
  SplitRng r(7);
  std::set<std::uint64_t> seen;
  for (int i = 0; i < 2000; ++i) {
    auto x = r.uniform(5);
    ASSERT_LT(x, 5u);
    seen.insert(x);
  }
  EXPECT_EQ(seen.size(), 5u);
  EXPECT_THROW(r.uniform(0), std::invalid_argument);
}

TEST(Monomials, BasisSizesAreBinomials) {
  for (int n = 1; n <= 4; ++n) {
    RingContext ctx(n);
    for (int t = 0; t <= 6; ++t) {
      EXPECT_EQ(ctx.basis(t).size(), static_cast<std::size_t>(oracle::choose(t + n, n)));
      EXPECT_EQ(ctx.dim(t), ctx.basis(t).size());
    }
  }
  EXPECT_EQ(RingContext(2).dim(-1), 0u);
}

TEST(Monomials, GrevlexOrderInThreeVariables) {
  RingContext ctx(2);
  std::vector<std::string> got;
  for (const auto& m : ctx.basis(2).monomials) got.push_back(to_text(HomogeneousForm::monomial(ctx, m)));
  // x0^2 > x0x1 > x1^2 > x0x2 > x1x2 > x2^2
  EXPECT_EQ(got, (std::vector<std::string>{"1 * x0^2", "1 * x0^1 * x1^1", "1 * x1^2", "1 * x0^1 * x2^1", "1 * x1^1 * x2^1", "1 * x2^2"}));
}

TEST(Monomials, GrevlexIsAStrictTotalOrderCompatibleWithProducts) {
  RingContext ctx(3);
  const auto& b = ctx.basis(3).monomials;
  for (std::size_t i = 0; i < b.size(); ++i)
    for (std::size_t j = 0; j < b.size(); ++j) {
      EXPECT_EQ(grevlex_greater(b[i], b[j]), i < j);
      if (i < j) {
        EXPECT_TRUE(grevlex_greater(b[i] * Monomial::variable(2), b[j] * Monomial::variable(2)));
      }
    }
}

TEST(Forms, ArithmeticMatchesHandComputation) {
  RingContext ctx(2, 101);
  const auto x0 = HomogeneousForm::variable(ctx, 0), x1 = HomogeneousForm::variable(ctx, 1);
  const auto sum = add(x0, x1);
  const auto sq = multiply(sum, sum);
  EXPECT_EQ(to_text(sq), "1 * x0^2 + 2 * x0^1 * x1^1 + 1 * x1^2");
  EXPECT_TRUE(add(sum, scale(sum, 100)).is_zero());
  EXPECT_THROW(add(x0, sq), DimensionError);
  EXPECT_THROW(multiply(x0, HomogeneousForm::variable(RingContext(3, 101), 0)), ContextMismatch);
}

TEST(Forms, TextRoundTrip) {
  RingContext ctx(3);
  SplitRng rng(9);
  for (int d = 1; d <= 4; ++d) {
    const auto f = random_form(ctx, d, rng);
    EXPECT_EQ(parse_form(ctx, to_text(f)), f);
  }
  EXPECT_EQ(parse_form(ctx, "-1 * x1 + x0"), add(HomogeneousForm::variable(ctx, 0), scale(HomogeneousForm::variable(ctx, 1), ctx.field().from_int(-1))));
  EXPECT_TRUE(parse_form(ctx, "0", 3).is_zero());
  EXPECT_THROW(parse_form(ctx, "x0^2 + x1"), ParameterError);
  EXPECT_THROW(parse_form(ctx, "x7"), ParameterError);
  EXPECT_THROW(parse_form(ctx, "2 * * x0"), ParameterError);
}

TEST(Forms, JsonRoundTrip) {
  RingContext ctx(2);
  SplitRng rng(5);
  const auto f = random_form(ctx, 3, rng);
  EXPECT_EQ(form_from_json(ctx, to_json(f)), f);
  EXPECT_EQ(form_from_json(ctx, nlohmann::json(to_text(f))), f);
}

TEST(Forms, CoordinatesRoundTripAndMultiplicationImages) {
  RingContext ctx(2);
  SplitRng rng(11);
  const auto g = random_form(ctx, 2, rng);
  const auto images = multiplication_images(g, 1);
  ASSERT_EQ(images.size(), ctx.dim(1));
  for (std::size_t i = 0; i < images.size(); ++i) {
    const auto m = HomogeneousForm::monomial(ctx, ctx.basis(1).monomials[i]);
    EXPECT_EQ(images[i], coordinate_vector(multiply(g, m), 3));
  }
  const auto f = random_form(ctx, 4, rng);
  EXPECT_EQ(from_coordinates(ctx, 4, coordinate_vector(f, 4)), f);
  EXPECT_THROW(coordinate_vector(f, 3), DimensionError);
}

TEST(Forms, RandomFormsAreDeterministicAndDense) {
  RingContext ctx(3);
  SplitRng a(123), b(123);
  const auto f = random_form(ctx, 2, a);
  EXPECT_EQ(f, random_form(ctx, 2, b));
  EXPECT_EQ(f.terms().size(), ctx.dim(2));  // a zero coefficient has probability 10/p
}
