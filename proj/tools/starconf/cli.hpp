#pragma once

#include <cstdint>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

namespace starconf::cli {

enum ExitCode : int { kPass = 0, kAssertionFailed = 1, kUsage = 2 };

enum class Format { Text, Json, Csv };

/// Inline description of one configuration; empty fields fall back to defaults.
struct ConfigArgs {
  std::string spec_path;
  std::optional<int> r;
  std::optional<int> s;
  std::vector<int> degrees;
  std::optional<std::uint64_t> seed;
};

struct RunConfig {
  std::string command;
  ConfigArgs x;
  ConfigArgs y;
  std::optional<int> n;
  std::optional<std::uint32_t> prime;
  std::optional<int> t_max;
  Format format = Format::Text;
  std::string output_path;

  bool verify = false;             // betti
  std::string element = "random";  // wlp: "random" or a linear form in text format
  std::optional<int> linked_ell;   // wlp: build the linked pair for (s, ell)
  std::string ideal;               // wlp: explicit generators separated by ';'
  std::optional<int> exp_t;        // experiment: size of the second configuration
  std::optional<int> exp_d;        // experiment: common degree
  std::string grid = "small";      // suite
  unsigned threads = 1;            // suite
  std::optional<int> criterion;    // suite: run one criterion only
};

/// Parses argv (argv[0] is the program name). On failure returns the exit code
/// CLI11 would use and has already printed help or the error to out/err.
std::optional<RunConfig> parse_args(int argc, const char* const* argv, std::ostream& out, std::ostream& err, int* exit_code);

/// env_seed is the value of STARCONF_SEED, if set; an explicit --seed wins.
int dispatch(RunConfig cfg, std::ostream& out, std::ostream& err, const std::optional<std::string>& env_seed);

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err, const std::optional<std::string>& env_seed);

}  // namespace starconf::cli
