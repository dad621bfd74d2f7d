#pragma once

#include <cstdint>
#include <span>
#include <stdexcept>
#include <vector>

#include <nlohmann/json.hpp>

#include "starconf/graded_ideal.hpp"

namespace starconf {

/// Raised when a computed sequence does not reach the state a query needs
/// (for example no plateau within t_max when asking for sigma).
class Undetermined : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class HypothesisViolation : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Parameters of a star configuration of type (r, s) in P^n.
struct StarConfigSpec {
  int n = 2;
  int r = 2;
  std::vector<int> degrees;  // d_1..d_s
  std::uint64_t seed = kDefaultSeed;
  std::uint32_t prime = kDefaultPrime;
  /// Explicit forms; empty means "draw general forms from seed".
  std::vector<HomogeneousForm> forms;

  int s() const noexcept { return static_cast<int>(degrees.size()); }
  int total_degree() const noexcept;
  /// Throws ParameterError unless 1 <= r <= min(s, n), s >= 2, every d_i >= 1
  /// and explicit forms (if any) match the degree list.
  void validate() const;
};

StarConfigSpec spec_from_json(const nlohmann::json& j);
nlohmann::json spec_to_json(const StarConfigSpec& spec);

/// All k-subsets of {0..s-1} in lexicographic order.
std::vector<std::vector<int>> subsets(int s, int k);

/// Ideal generated by the products of all (s - r + 1)-subsets of `forms`,
/// i.e. the full product with r - 1 factors left out. r > s gives the unit
/// ideal (an empty configuration); r = 1 gives the principal ideal of the product.
GradedIdeal star_ideal(const RingContext& ctx, std::span<const HomogeneousForm> forms, int r);

struct StarIdeal {
  StarConfigSpec spec;  // forms realized
  RingContext ctx;
  GradedIdeal ideal;
  /// The r - 1 form indices left out of each generator, aligned with ideal.generators().
  std::vector<std::vector<int>> omitted;
  /// The C(s, r) ideals (F_i1, ..., F_ir) whose intersection the star ideal should be.
  std::vector<GradedIdeal> components;
  /// Random forms failed the genericity check once and were redrawn from a derived seed.
  bool reseeded = false;
  /// Same-degree generators are linearly independent.
  bool generic = true;

  const std::vector<HomogeneousForm>& forms() const noexcept { return spec.forms; }
};

std::vector<HomogeneousForm> draw_forms(const RingContext& ctx, std::span<const int> degrees, std::uint64_t seed);
std::uint64_t derived_seed(std::uint64_t seed);

StarIdeal build(const StarConfigSpec& spec);
nlohmann::json star_to_json(const StarIdeal& star);

IdealSlice intersection_oracle(const StarIdeal& star, int t);

/// deg X = sum over n-subsets of the product of degrees; requires r == n.
std::int64_t degree_points(const StarConfigSpec& spec);
/// min{C(s, n), C(i + n, n)} for s >= n >= 2.
std::int64_t generic_hf_linear(int n, int s, int i);
/// min{deg X, C(i + 2, 2)} for a (2, s) configuration in P^2 with all d_j in {1, 2}.
std::int64_t generic_hf_2s_p2(std::span<const int> degrees, int i);

/// Least i >= 1 with H(i - 1) == H(i); throws Undetermined if there is none.
int sigma(const HilbertFunction& hf);
/// (sum d_i) - 1, for s >= 3.
int sigma_formula_2s(std::span<const int> degrees);

struct BdlRow {
  int t = 0;
  std::int64_t actual = 0;     // H(R/I', t)
  std::int64_t predicted = 0;  // H_S(t) - H_S(t - d) + H_C(t - d)
  bool equal() const noexcept { return actual == predicted; }
};

struct BdlReport {
  int form_degree = 0;
  std::vector<BdlRow> rows;
  bool holds() const noexcept;
};

/// Builds I' = F * I_C + I_S and compares its Hilbert function with the basic
/// double G-linkage prediction. Throws HypothesisViolation unless I_S ⊆ I_C up to t_max.
BdlReport bdl_check(const GradedIdeal& I_S, const GradedIdeal& I_C, const HomogeneousForm& F, int t_max);

struct StarBdlReport {
  BdlReport report;
  /// F_s * I(r, s-1) + I(r-1, s-1) has the same slices as I(r, s) for t <= t_max.
  bool equals_star = false;
};

/// The linkage step that builds the (r, s) star ideal from the (r, s-1) and
/// (r-1, s-1) ideals on F_1..F_{s-1}, with F = F_s. Requires r >= 2.
StarBdlReport bdl_star_step(const StarIdeal& star, int t_max);

}  // namespace starconf
