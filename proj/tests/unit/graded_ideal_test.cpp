#include <gtest/gtest.h>

#include "oracles.hpp"
#include "starconf/graded_ideal.hpp"

using namespace starconf;

namespace {

HomogeneousForm mono(const RingContext& ctx, std::vector<int> e) { return HomogeneousForm::monomial(ctx, Monomial(e)); }

std::vector<oracle::Row> rows_of(const SubspaceBasis& s) {
  std::vector<oracle::Row> out;
  for (std::size_t i = 0; i < s.dim(); ++i) out.emplace_back(s.basis().row(i).begin(), s.basis().row(i).end());
  return out;
}

std::vector<HomogeneousForm> random_forms(const RingContext& ctx, const std::vector<int>& degrees, std::uint64_t seed) {
  SplitRng rng(seed);
  std::vector<HomogeneousForm> out;
  for (int d : degrees) out.push_back(random_form(ctx, d, rng));
  return out;
}

}  // namespace

TEST(GradedIdeal, MonomialIdealHilbertFunctionMatchesCounting) {
  struct Case {
    int n;
    std::vector<std::vector<int>> gens;
  };
  const Case cases[] = {
      {2, {{2, 0, 0}, {0, 2, 0}, {0, 0, 2}}},
      {2, {{1, 1, 0}, {0, 3, 0}}},
      {3, {{2, 1, 0, 0}, {0, 0, 1, 1}, {0, 2, 0, 1}}},
      {1, {{3, 0}}},
  };
  for (const auto& c : cases) {
    RingContext ctx(c.n);
    std::vector<HomogeneousForm> gens;
    for (const auto& g : c.gens) gens.push_back(mono(ctx, g));
    GradedIdeal I(ctx, gens);
    for (int t = 0; t <= 7; ++t) EXPECT_EQ(hilbert(I, t), oracle::monomial_quotient_hf(c.n, c.gens, t)) << "t=" << t;
  }
}

TEST(GradedIdeal, GeneralFormsFormACompleteIntersection) {
  struct Case {
    int n;
    std::vector<int> degrees;
  };
  const Case cases[] = {{3, {2, 2}}, {2, {1, 3}}, {3, {1, 2, 2}}, {4, {2, 2, 2}}};
  std::uint64_t seed = 1;
  for (const auto& c : cases) {
    RingContext ctx(c.n);
    GradedIdeal I(ctx, random_forms(ctx, c.degrees, seed++));
    EXPECT_EQ(hf_sequence(I, 10).values, oracle::complete_intersection_hf(c.n, c.degrees, 10));
  }
}

TEST(GradedIdeal, ZeroAndUnitIdeals) {
  RingContext ctx(2);
  for (int t = 0; t < 5; ++t) {
    EXPECT_EQ(hilbert(GradedIdeal::zero(ctx), t), static_cast<std::int64_t>(ctx.dim(t)));
    EXPECT_EQ(hilbert(GradedIdeal::unit(ctx), t), 0);
  }
  EXPECT_THROW(GradedIdeal(ctx, {HomogeneousForm(ctx, 2)}), ParameterError);
}

TEST(GradedIdeal, CopiesShareSlicesAndSlicesAreStable) {
  RingContext ctx(3);
  GradedIdeal I(ctx, random_forms(ctx, {2, 3}, 77));
  GradedIdeal J = I;
  EXPECT_EQ(&I.slice(4), &J.slice(4));
  EXPECT_EQ(slice(I, 4), slice(J, 4));
}

TEST(GradedIdeal, IntersectionSliceMatchesIteratedZassenhaus) {
  RingContext ctx(2, 65521);
  const std::uint64_t p = ctx.field().modulus();
  for (std::uint64_t seed = 0; seed < 6; ++seed) {
    const auto f = random_forms(ctx, {1, 1, 2, 1}, seed);
    std::vector<GradedIdeal> family{GradedIdeal(ctx, {f[0], f[1]}), GradedIdeal(ctx, {f[0], f[2]}), GradedIdeal(ctx, {f[1], f[3]})};
    for (int t = 0; t <= 6; ++t) {
      auto acc = rows_of(family[0].slice(t).subspace);
      for (std::size_t k = 1; k < family.size(); ++k) acc = oracle::intersect(acc, rows_of(family[k].slice(t).subspace), ctx.dim(t), p);
      const IdealSlice got = intersection_slice(family, t);
      EXPECT_EQ(got.dim(), oracle::rank(acc, p)) << "t=" << t;
      EXPECT_EQ(rows_of(got.subspace), oracle::rref(acc, p)) << "t=" << t;
    }
  }
}

TEST(GradedIdeal, SumAndContainment) {
  RingContext ctx(2);
  const auto f = random_forms(ctx, {2, 2, 3}, 4);
  GradedIdeal I(ctx, {f[0]}), J(ctx, {f[1], f[2]});
  GradedIdeal IJ = ideal_sum(I, J);
  for (int t = 0; t <= 6; ++t) EXPECT_EQ(sum_slice(I, J, t), IJ.slice(t));
  EXPECT_TRUE(contained_in(I, IJ, 6));
  EXPECT_FALSE(contained_in(IJ, I, 6));
  GradedIdeal K(ctx, {multiply(f[0], HomogeneousForm::variable(ctx, 1))});
  EXPECT_TRUE(contained_in(K, I, 6));
  EXPECT_FALSE(slices_equal(K, I, 2));
  EXPECT_TRUE(slices_equal(K, I, 0));
}

TEST(GradedIdeal, QuotientBasisAreStandardMonomials) {
  RingContext ctx(2);
  GradedIdeal I(ctx, {mono(ctx, {1, 1, 0}), mono(ctx, {0, 0, 2})});
  // Standard monomials of degree 2: x0^2, x1^2, x0x2, x1x2
  const auto qb = quotient_basis(I, 2);
  ASSERT_EQ(qb.size(), 4u);
  EXPECT_EQ(qb[0], Monomial(std::vector<int>{2, 0, 0}));
  EXPECT_EQ(qb[1], Monomial(std::vector<int>{0, 2, 0}));
}

TEST(GradedIdeal, MultiplicationMapOnQuotient) {
  RingContext ctx(2);
  GradedIdeal I(ctx, {mono(ctx, {2, 0, 0}), mono(ctx, {0, 2, 0}), mono(ctx, {0, 0, 2})});
  // In k[x,y,z]/(x^2,y^2,z^2) multiplication by x+y+z: A_1 -> A_2 is 3x3 of rank 3.
  const Scalar ones[] = {1, 1, 1};
  const DenseMatrix m = quotient_mult_map(I, HomogeneousForm::linear(ctx, ones), 1);
  EXPECT_EQ(m.rows(), 3u);
  EXPECT_EQ(m.cols(), 3u);
  EXPECT_EQ(rank(ctx.field(), m), 3u);
  // Multiplication by x0 kills the class of x0.
  const auto images = quotient_mult_images(I, HomogeneousForm::variable(ctx, 0), 1);
  const auto qb = quotient_basis(I, 1);
  for (std::size_t i = 0; i < qb.size(); ++i)
    if (qb[i] == Monomial::variable(0)) {
      for (Scalar c : images[i]) EXPECT_EQ(c, 0u);
    }
}

TEST(GradedIdeal, QuotientReductionIsLinearAndKillsTheIdeal) {
  RingContext ctx(3);
  GradedIdeal I(ctx, random_forms(ctx, {2, 2}, 31));
  const QuotientSlice& q = I.quotient(3);
  EXPECT_EQ(q.dim(), static_cast<std::size_t>(hilbert(I, 3)));
  for (std::size_t i = 0; i < I.slice(3).dim(); ++i)
    for (Scalar c : q.reduce(I.slice(3).subspace.basis().row(i))) EXPECT_EQ(c, 0u);
}
