#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include <nlohmann/json.hpp>

#include "starconf/field.hpp"
#include "starconf/rng.hpp"

namespace starconf {

enum class Grid { Tiny, Small };

/// "tiny" or "small"; throws ParameterError otherwise.
Grid parse_grid(std::string_view name);
std::string_view grid_name(Grid grid) noexcept;

struct SuiteOptions {
  Grid grid = Grid::Small;
  std::uint64_t seed = kDefaultSeed;
  std::uint32_t prime = kDefaultPrime;
  unsigned threads = 1;
};

struct CellResult {
  std::string key;
  bool pass = false;
  /// The first attempt failed and the cell was rerun once from a derived seed.
  bool reseeded = false;
  std::string detail;  // failure reason, empty on a clean pass
};

struct CriterionResult {
  int id = 0;
  std::string title;
  std::vector<CellResult> cells;

  bool pass() const noexcept;
  int reseeds() const noexcept;
};

inline constexpr int kCriterionCount = 12;

/// Cells are ordered by key whatever the thread count.
CriterionResult run_criterion(int id, const SuiteOptions& opts);
std::vector<CriterionResult> run_suite(const SuiteOptions& opts);

nlohmann::json suite_to_json(const std::vector<CriterionResult>& results, const SuiteOptions& opts);
/// One "PASS|FAIL <id> <title> (<cells> cells[, <k> reseeded])" line per criterion plus failing cells.
std::string suite_text(const std::vector<CriterionResult>& results);

/// Structural check of an experiment_to_json report: required keys, status
/// "experimental", per-degree maximal flags consistent with the ranks.
bool experiment_report_well_formed(const nlohmann::json& report, std::string* why = nullptr);

}  // namespace starconf
