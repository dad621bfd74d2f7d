#pragma once

#include <cstdint>
#include <map>
#include <span>
#include <string>
#include <utility>

#include <nlohmann/json.hpp>

#include "starconf/graded_ideal.hpp"

namespace starconf {

/// Graded Betti numbers of a resolution of an ideal: (step l, shift j) -> multiplicity.
struct BettiTable {
  int length = 0;  // r, the number of nonzero free modules
  std::map<std::pair<int, int>, std::int64_t> entries;

  std::int64_t at(int l, int j) const;
  std::int64_t rank(int l) const;
  void add(int l, int j, std::int64_t mult);
  friend bool operator==(const BettiTable&, const BettiTable&) = default;
};

/// dim_k Tor_i(R/I, k)_j from Koszul homology, for i <= i_max and j <= j_max.
struct KoszulBetti {
  int i_max = 0;
  int j_max = 0;
  std::map<std::pair<int, int>, std::int64_t> entries;  // nonzero values only

  std::int64_t at(int i, int j) const;
};

/// C(s - r + l - 1, l - 1)
std::int64_t alpha(int r, int s, int l);

/// Closed-form Betti table of a star configuration ideal of type (r, s).
/// Step l has multiplicity alpha(r, s, l) at each shift d - (sum of an (r - l)-subset of degrees).
BettiTable predict_betti(int r, std::span<const int> degrees);

KoszulBetti koszul_betti(const GradedIdeal& I, int i_max, int j_max);

/// Step l of the ideal's resolution is compared with Tor_l(R/I, k); rows above r
/// must vanish. Throws ParameterError if the oracle bounds do not cover the table.
bool tables_match(const BettiTable& predicted, const KoszulBetti& oracle);

/// Hilbert function of R/I implied by the table.
std::int64_t euler_hf(const BettiTable& bt, int n, int t);

bool is_level(const BettiTable& bt);

/// Largest i with Tor_i(R/I, k) != 0. Requires oracle.i_max >= n + 1.
int projective_dimension(const KoszulBetti& oracle, int n);

/// Rows "l,shift,multiplicity".
std::string betti_csv(const BettiTable& bt);
/// Shifts as rows, steps as columns.
std::string betti_diagram(const BettiTable& bt);
std::string koszul_diagram(const KoszulBetti& kb);
nlohmann::json betti_to_json(const BettiTable& bt);
nlohmann::json koszul_to_json(const KoszulBetti& kb);
/// Oracle Tor_l entries (l >= 1) repackaged as a BettiTable for display.
BettiTable as_betti_table(const KoszulBetti& kb);

}  // namespace starconf
