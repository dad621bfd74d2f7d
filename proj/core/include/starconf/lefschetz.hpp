#pragma once

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "starconf/star_config.hpp"

namespace starconf {

class NotArtinian : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct WlpDegree {
  int t = 0;
  std::int64_t dim_a_t = 0;
  std::int64_t dim_a_t1 = 0;
  std::int64_t rank = 0;
  bool maximal = false;
};

/// Maximal-rank data of x L on an Artinian quotient A = R/J.
struct WlpReport {
  std::string ideal_summary;
  std::string element;  // the linear form used, in text format
  std::vector<WlpDegree> degrees;
  bool verdict = false;
  int socle_degree = -1;  // last t with A_t != 0
  std::string status = "theorem";  // "theorem" or "experimental"
  std::string note;
};

/// A linear form drawn from the "lefschetz" child stream of seed.
HomogeneousForm random_linear_form(const RingContext& ctx, std::uint64_t seed);

/// Throws NotArtinian if (R/J)_t != 0 for every t <= t_max.
WlpReport wlp_check(const GradedIdeal& J, const HomogeneousForm& L, int t_max);

/// Default search bound 2 * (sum of degrees of both configurations).
int default_wlp_t_max(const StarIdeal& X, const StarIdeal& Y);
WlpReport wlp_sum(const StarIdeal& X, const StarIdeal& Y, const HomogeneousForm& L, int t_max);

/// Once x L is onto at some degree it stays onto at every later degree.
bool surjectivity_propagates(const WlpReport& report);

nlohmann::json wlp_to_json(const WlpReport& report);
std::string wlp_csv(const WlpReport& report);

/// H(R/(I_X ∩ I_Y)).
HilbertFunction union_hf(const StarIdeal& X, const StarIdeal& Y, int t_max);
/// H(R/(I_X + I_Y)).
HilbertFunction sum_hf(const StarIdeal& X, const StarIdeal& Y, int t_max);

struct SumHfIdentity {
  std::int64_t lhs = 0;  // H(R/(I_X + I_Y), t)
  std::int64_t rhs = 0;  // H(R/I_X, t) + H(R/I_Y, t) - H(R/I_{X ∪ Y}, t)
  bool equal() const noexcept { return lhs == rhs; }
};
SumHfIdentity sum_hf_identity(const StarIdeal& X, const StarIdeal& Y, int t);

/// H_A(i) == H_X(i) for all 0 <= i <= sigma(X) - 1: the sufficient condition for
/// an Artinian quotient A of the coordinate ring of points X to have the WLP.
bool quotient_matches_below_sigma(const HilbertFunction& hf_a, const HilbertFunction& hf_x);

struct SumDimCheck {
  int s = 0;
  int ell = 0;
  std::int64_t lemma_dim = 0;       // dim (I_X + I_Y)_{2s - ell - 2}
  std::int64_t lemma_expected = 0;  // 2(s - ell)
  std::int64_t linked_dim = 0;      // dim (I_X + I_Y+)_{2s - ell - 1}, Y+ = Y plus the linear form
  std::int64_t linked_expected = 0; // 4s - 3 ell
  bool lemma_ok() const noexcept { return lemma_dim == lemma_expected; }
  bool linked_ok() const noexcept { return linked_dim == linked_expected; }
};

/// X, Y of type (2, s) in P^2 with degree pattern (1 x ell, 2 x (s - ell)).
/// The second count uses Y+ of type (2, s + 1) on Y's forms plus the linear form L.
SumDimCheck check_sum_dim_lemma(const StarIdeal& X, const StarIdeal& Y, int ell, const HomogeneousForm& L);

/// dim (I_X ∩ I_Y)_{d s} == 0 for two (2, s) configurations of degree-d forms, s >= 4, d >= 2.
bool check_union_vanishing(const StarIdeal& X, const StarIdeal& Y, int d);

/// Degree list (1 x ell, 2 x (s - ell)).
std::vector<int> linked_degree_pattern(int s, int ell);

struct LinkedPair {
  StarIdeal X;  // type (2, s) on F_1..F_s
  StarIdeal Y;  // type (2, s + 1) on G_1..G_s, L
  HomogeneousForm L;
};

/// Configurations with deg F_i = deg G_i following linked_degree_pattern(s, ell),
/// Y carrying an extra general linear form L as its last form.
LinkedPair make_linked_pair(int s, int ell, std::uint64_t seed, std::uint32_t prime = kDefaultPrime);

struct ExperimentReport {
  WlpReport wlp;
  HilbertFunction hf_x;
  HilbertFunction hf_y;
  HilbertFunction hf_sum;
  bool condition_x = false;  // quotient_matches_below_sigma(hf_sum, hf_x)
  bool condition_y = false;
  nlohmann::json provenance;
};

/// Probe of the open question for two configurations of type (n, s) and (n, t_cfg)
/// cut out by general forms of degree d. Never asserts a verdict.
ExperimentReport experiment_open_question(int n, int s, int t_cfg, int d, std::uint64_t seed,
                                          std::uint32_t prime = kDefaultPrime);
nlohmann::json experiment_to_json(const ExperimentReport& report);

}  // namespace starconf
