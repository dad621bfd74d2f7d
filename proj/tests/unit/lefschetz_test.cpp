#include <gtest/gtest.h>

#include "oracles.hpp"
#include "starconf/lefschetz.hpp"

using namespace starconf;

namespace {

StarIdeal make(int n, int r, std::vector<int> degrees, std::uint64_t seed) {
  StarConfigSpec s;
  s.n = n;
  s.r = r;
  s.degrees = std::move(degrees);
  s.seed = seed;
  return build(s);
}

HomogeneousForm mono(const RingContext& ctx, std::vector<int> e) { return HomogeneousForm::monomial(ctx, Monomial(e)); }

}  // namespace

TEST(Wlp, MonomialCompleteIntersectionOfSquares) {
  RingContext ctx(2);
  GradedIdeal J(ctx, {mono(ctx, {2, 0, 0}), mono(ctx, {0, 2, 0}), mono(ctx, {0, 0, 2})});
  const WlpReport rep = wlp_check(J, random_linear_form(ctx, 1), 10);
  EXPECT_TRUE(rep.verdict);
  EXPECT_EQ(rep.socle_degree, 3);
  std::vector<std::int64_t> h;
  for (const auto& row : rep.degrees) h.push_back(row.dim_a_t);
  EXPECT_EQ(h, (std::vector<std::int64_t>{1, 3, 3, 1}));
}

TEST(Wlp, BadElementFailsOnSquares) {
  // x0 kills x0 in A_1 and x0 x1 in A_2, so x0 is not a Lefschetz element.
  RingContext ctx(2);
  GradedIdeal J(ctx, {mono(ctx, {2, 0, 0}), mono(ctx, {0, 2, 0}), mono(ctx, {0, 0, 2})});
  const WlpReport rep = wlp_check(J, HomogeneousForm::variable(ctx, 0), 10);
  EXPECT_FALSE(rep.verdict);
  EXPECT_FALSE(rep.degrees[1].maximal);
  for (const auto& row : rep.degrees) EXPECT_EQ(row.maximal, row.rank == std::min(row.dim_a_t, row.dim_a_t1));
}

TEST(Wlp, TrivialWhenEverythingAboveDegreeZeroVanishes) {
  RingContext ctx(2);
  std::vector<HomogeneousForm> gens;
  for (int k = 0; k < 3; ++k) gens.push_back(HomogeneousForm::variable(ctx, k));
  const WlpReport rep = wlp_check(GradedIdeal(ctx, gens), random_linear_form(ctx, 3), 4);
  EXPECT_TRUE(rep.verdict);
  EXPECT_EQ(rep.socle_degree, 0);
  ASSERT_EQ(rep.degrees.size(), 1u);
  EXPECT_EQ(rep.degrees[0].rank, 0);
}

TEST(Wlp, NotArtinianAndBadElement) {
  RingContext ctx(2);
  GradedIdeal J(ctx, {mono(ctx, {2, 0, 0}), mono(ctx, {0, 2, 0})});
  EXPECT_THROW(wlp_check(J, random_linear_form(ctx, 1), 12), NotArtinian);
  EXPECT_THROW(wlp_check(J, mono(ctx, {1, 1, 0}), 12), ParameterError);
}

TEST(Wlp, LinearPairs) {
  StarIdeal X = make(2, 2, {1, 1, 1, 1}, 10), Y = make(2, 2, {1, 1, 1}, 11);
  const WlpReport rep = wlp_sum(X, Y, random_linear_form(X.ctx, 5), default_wlp_t_max(X, Y));
  EXPECT_TRUE(rep.verdict);
  EXPECT_EQ(rep.status, "theorem");
  EXPECT_TRUE(surjectivity_propagates(rep));
  EXPECT_EQ(default_wlp_t_max(X, Y), 14);
}

TEST(Wlp, JsonSchemaAndCsv) {
  StarIdeal X = make(2, 2, {1, 1, 1}, 10), Y = make(2, 2, {1, 1, 1}, 11);
  const WlpReport rep = wlp_sum(X, Y, random_linear_form(X.ctx, 5), 20);
  const auto j = wlp_to_json(rep);
  for (const char* k : {"ideal_summary", "element", "degrees", "verdict", "status"}) EXPECT_TRUE(j.contains(k)) << k;
  for (const char* k : {"t", "dimA_t", "dimA_t1", "rank", "maximal"}) EXPECT_TRUE(j["degrees"][0].contains(k)) << k;
  const std::string csv = wlp_csv(rep);
  EXPECT_EQ(csv.rfind("t,dimA_t,dimA_t1,rank,maximal\n", 0), 0u);
  EXPECT_EQ(static_cast<std::size_t>(std::count(csv.begin(), csv.end(), '\n')), rep.degrees.size() + 1);
}

TEST(SurjectivityPropagation, DetectsLoss) {
  WlpReport rep;
  rep.degrees = {{0, 1, 1, 1, true}, {1, 1, 2, 0, false}};
  EXPECT_FALSE(surjectivity_propagates(rep));
  rep.degrees = {{0, 1, 3, 1, true}, {1, 3, 1, 1, true}};
  EXPECT_TRUE(surjectivity_propagates(rep));
}

TEST(UnionHf, Examples) {
  StarIdeal X = make(2, 2, {2, 2, 2}, 21), Y = make(2, 2, {2, 2}, 22), Z = make(2, 2, {2, 2, 2}, 23);
  EXPECT_EQ(union_hf(X, Y, 7).values, (std::vector<std::int64_t>{1, 3, 6, 10, 15, 16, 16, 16}));
  EXPECT_EQ(union_hf(X, Z, 8).values, (std::vector<std::int64_t>{1, 3, 6, 10, 15, 21, 24, 24, 24}));
  EXPECT_EQ(union_hf(X, X, 8), hf_sequence(X.ideal, 8));
}

TEST(SumHfIdentity, Examples) {
  StarIdeal X = make(2, 2, {2, 2, 2, 2}, 31), Y = make(2, 2, {2, 2, 2, 2}, 32);
  const auto at6 = sum_hf_identity(X, Y, 6);
  EXPECT_EQ(at6.lhs, 20);
  EXPECT_EQ(at6.rhs, 24 + 24 - 28);
  const auto at0 = sum_hf_identity(X, Y, 0);
  EXPECT_EQ(at0.lhs, 1);
  EXPECT_TRUE(at0.equal());

  StarIdeal A = make(2, 2, {1, 1, 1}, 33), B = make(2, 2, {1, 1, 1}, 34);
  const auto lin = sum_hf_identity(A, B, 2);
  EXPECT_TRUE(lin.equal());
  // Independent value: rank of the stacked generators of both ideals in degree 2.
  std::vector<oracle::Row> rows;
  for (const StarIdeal* Z : {&A, &B})
    for (const auto& g : Z->ideal.generators()) {
      auto v = coordinate_vector(g, 2);
      rows.emplace_back(v.begin(), v.end());
    }
  EXPECT_EQ(lin.lhs, 6 - static_cast<std::int64_t>(oracle::rank(rows, A.ctx.field().modulus())));
}

TEST(SumDims, Examples) {
  auto run = [](int s, int ell) {
    const auto pattern = linked_degree_pattern(s, ell);
    StarIdeal X = make(2, 2, pattern, 41), Y = make(2, 2, pattern, 42);
    return check_sum_dim_lemma(X, Y, ell, random_linear_form(X.ctx, 43));
  };
  const auto a = run(4, 0);
  EXPECT_EQ(a.lemma_dim, 8);
  EXPECT_TRUE(a.lemma_ok());
  const auto b = run(3, 1);
  EXPECT_EQ(b.lemma_dim, 4);
  const auto c = run(3, 0);
  EXPECT_EQ(c.linked_dim, 12);
  EXPECT_TRUE(c.linked_ok());
}

TEST(SumDims, PatternIsEnforced) {
  StarIdeal X = make(2, 2, {2, 2, 2}, 1), Y = make(2, 2, {1, 2, 2}, 2), W = make(2, 2, {2, 2}, 3);
  const auto L = random_linear_form(X.ctx, 4);
  EXPECT_THROW(check_sum_dim_lemma(X, Y, 0, L), ParameterError);
  EXPECT_THROW(check_sum_dim_lemma(X, X, 3, L), ParameterError);
  EXPECT_THROW(check_sum_dim_lemma(W, W, 0, L), ParameterError);
  EXPECT_THROW(linked_degree_pattern(3, 3), ParameterError);
  EXPECT_EQ(linked_degree_pattern(4, 1), (std::vector<int>{1, 2, 2, 2}));
}

TEST(UnionVanishing, Examples) {
  for (int s : {4, 5}) {
    const std::vector<int> d(static_cast<std::size_t>(s), 2);
    EXPECT_TRUE(check_union_vanishing(make(2, 2, d, 50), make(2, 2, d, 51), 2));
  }
  StarIdeal X = make(2, 2, {2, 2, 2}, 52), Y = make(2, 2, {2, 2, 2}, 53);
  EXPECT_THROW(check_union_vanishing(X, Y, 2), ParameterError);
  const GradedIdeal pair[] = {X.ideal, Y.ideal};
  EXPECT_EQ(intersection_slice(pair, 6).dim(), oracle::choose(8, 2) - 24);
}

TEST(LinkedPair, ShapeAndElement) {
  LinkedPair p = make_linked_pair(4, 2, 9);
  EXPECT_EQ(p.X.spec.degrees, (std::vector<int>{1, 1, 2, 2}));
  EXPECT_EQ(p.Y.spec.degrees, (std::vector<int>{1, 1, 2, 2, 1}));
  EXPECT_EQ(p.Y.forms().back(), p.L);
  const WlpReport rep = wlp_sum(p.X, p.Y, p.L, default_wlp_t_max(p.X, p.Y));
  EXPECT_TRUE(rep.verdict);
  EXPECT_EQ(rep.element, to_text(p.L));
}

TEST(Experiment, ReportsAreLabelledAndReproducible) {
  const auto a = experiment_to_json(experiment_open_question(2, 4, 3, 2, 77));
  const auto b = experiment_to_json(experiment_open_question(2, 4, 3, 2, 77));
  EXPECT_EQ(a.dump(), b.dump());
  EXPECT_EQ(a["status"], "experimental");
  EXPECT_EQ(a["provenance"]["seed"], 77u);

  const auto lin = experiment_open_question(2, 3, 3, 1, 5);
  EXPECT_TRUE(lin.wlp.verdict);
  EXPECT_EQ(lin.wlp.status, "experimental");

  const auto quad = experiment_open_question(2, 4, 4, 2, 5);
  EXPECT_EQ(quad.hf_sum(6), 20);
  EXPECT_FALSE(quad.condition_x);  // H_A(6) = 20 differs from H_X(6) = 24
  EXPECT_THROW(experiment_open_question(2, 1, 3, 2, 5), ParameterError);
}

TEST(Sigma, SufficientConditionComparison) {
  const HilbertFunction x{{1, 3, 6, 6, 6}};
  EXPECT_TRUE(quotient_matches_below_sigma(HilbertFunction{{1, 3, 6, 2, 0}}, x));
  EXPECT_FALSE(quotient_matches_below_sigma(HilbertFunction{{1, 3, 5, 2, 0}}, x));
}
