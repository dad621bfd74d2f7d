#include "starconf/cli.hpp"

#include <algorithm>
#include <fstream>
#include <iomanip>
#include <numeric>
#include <sstream>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "starconf/lefschetz.hpp"
#include "starconf/resolution.hpp"
#include "starconf/star_config.hpp"
#include "starconf/suite.hpp"

namespace starconf::cli {

namespace {

struct UsageError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

struct Outcome {
  int code = kPass;
  std::string body;
};

using json = nlohmann::json;

template <class T>
std::string amp_row(const std::string& label, const std::vector<T>& values) {
  std::ostringstream os;
  os << label << " :";
  for (std::size_t i = 0; i < values.size(); ++i) os << (i ? " & " : " ") << values[i];
  os << '\n';
  return os.str();
}

std::string dump(const json& j) { return j.dump(2) + "\n"; }

std::string degree_text(const std::vector<int>& d) {
  std::string s = "[";
  for (std::size_t i = 0; i < d.size(); ++i) s += (i ? "," : "") + std::to_string(d[i]);
  return s + "]";
}

std::string describe(const StarIdeal& X) {
  std::ostringstream os;
  os << "type (" << X.spec.r << "," << X.spec.s() << ") in P^" << X.spec.n << ", degrees " << degree_text(X.spec.degrees) << ", seed "
     << X.spec.seed << (X.reseeded ? " (reseeded)" : "");
  return os.str();
}

std::uint64_t parse_seed(const std::string& text) {
  std::size_t used = 0;
  std::uint64_t v = 0;
  try {
    v = std::stoull(text, &used, 0);
  } catch (const std::exception&) {
    used = 0;
  }
  if (used == 0 || used != text.size() || text.front() == '-') throw UsageError("STARCONF_SEED is not an unsigned integer: '" + text + "'");
  return v;
}

class Builder {
 public:
  Builder(const RunConfig& cfg, const std::optional<std::string>& env_seed) : cfg_(cfg) {
    if (env_seed) env_seed_ = parse_seed(*env_seed);
  }

  std::uint64_t base_seed() const {
    if (cfg_.x.seed) return *cfg_.x.seed;
    if (env_seed_) return *env_seed_;
    return kDefaultSeed;
  }

  StarConfigSpec x_spec() const { return make(cfg_.x, cfg_.n.value_or(2), std::nullopt, base_seed()); }

  StarConfigSpec y_spec(const StarConfigSpec& x) const {
    if (!cfg_.y.spec_path.empty() || cfg_.y.s || !cfg_.y.degrees.empty()) {
      StarConfigSpec y = make(cfg_.y, x.n, x.r, SplitRng(x.seed).child("Y").seed());
      if (y.n != x.n || y.prime != x.prime) throw UsageError("both configurations must live in the same ring (n and prime)");
      return y;
    }
    throw UsageError("this command needs a second configuration: --y-s/--y-degrees or --y-spec");
  }

  std::uint32_t prime() const { return cfg_.prime.value_or(kDefaultPrime); }

 private:
  StarConfigSpec make(const ConfigArgs& a, int n, std::optional<int> default_r, std::uint64_t default_seed) const {
    StarConfigSpec spec;
    if (!a.spec_path.empty()) {
      std::ifstream in(a.spec_path);
      if (!in) throw UsageError("cannot read spec file " + a.spec_path);
      json j;
      try {
        in >> j;
      } catch (const json::exception& e) {
        throw UsageError("spec file " + a.spec_path + " is not valid JSON: " + e.what());
      }
      spec = spec_from_json(j);
      if (a.seed) spec.seed = *a.seed;
      else if (!j.contains("seed")) spec.seed = default_seed;
      return spec;
    }
    spec.n = n;
    spec.prime = prime();
    spec.seed = a.seed.value_or(default_seed);
    spec.degrees = a.degrees;
    if (a.s) {
      if (*a.s < 1) throw UsageError("--s must be positive");
      if (spec.degrees.empty()) spec.degrees.assign(static_cast<std::size_t>(*a.s), 1);
      else if (spec.degrees.size() == 1) spec.degrees.assign(static_cast<std::size_t>(*a.s), spec.degrees.front());
      else if (static_cast<int>(spec.degrees.size()) != *a.s) throw UsageError("--s does not match the number of --degrees");
    }
    if (spec.degrees.empty()) throw UsageError("give --s and/or --degrees (or --spec)");
    spec.r = a.r.value_or(default_r.value_or(n));
    spec.validate();
    return spec;
  }

  const RunConfig& cfg_;
  std::optional<std::uint64_t> env_seed_;
};

int default_t_max(const StarConfigSpec& spec) { return spec.total_degree() + spec.n; }

Outcome cmd_hilbert(const RunConfig& cfg, const Builder& b) {
  StarIdeal X = build(b.x_spec());
  const int t_max = cfg.t_max.value_or(default_t_max(X.spec));
  const HilbertFunction hf = hf_sequence(X.ideal, t_max);
  std::optional<int> sig;
  try {
    sig = sigma(hf);
  } catch (const Undetermined&) {
  }
  Outcome o;
  switch (cfg.format) {
    case Format::Json:
      o.body = dump({{"config", star_to_json(X)}, {"t_max", t_max}, {"hilbert", hf.values}, {"sigma", sig ? json(*sig) : json(nullptr)}});
      break;
    case Format::Csv: {
      std::ostringstream os;
      os << "t,H\n";
      for (int t = 0; t <= t_max; ++t) os << t << ',' << hf(t) << '\n';
      o.body = os.str();
      break;
    }
    case Format::Text:
      o.body = describe(X) + "\n" + amp_row("H", hf.values) + "sigma = " + (sig ? std::to_string(*sig) : "undetermined (no plateau up to t_max)") + "\n";
      break;
  }
  return o;
}

Outcome cmd_degree(const RunConfig& cfg, const Builder& b) {
  const StarConfigSpec spec = b.x_spec();
  if (spec.r != spec.n) throw UsageError("degree needs r == n (a finite set of points)");
  StarIdeal X = build(spec);
  const std::int64_t deg = degree_points(X.spec);
  const int t_max = cfg.t_max.value_or(default_t_max(X.spec));
  const std::int64_t h = hilbert(X.ideal, t_max);
  Outcome o;
  o.code = h == deg ? kPass : kAssertionFailed;
  switch (cfg.format) {
    case Format::Json:
      o.body = dump({{"config", star_to_json(X)}, {"degree", deg}, {"t_max", t_max}, {"hilbert_at_t_max", h}, {"consistent", h == deg}});
      break;
    case Format::Csv:
      o.body = "degree,t_max,hilbert_at_t_max\n" + std::to_string(deg) + "," + std::to_string(t_max) + "," + std::to_string(h) + "\n";
      break;
    case Format::Text:
      o.body = describe(X) + "\ndegree = " + std::to_string(deg) + "\nH(" + std::to_string(t_max) + ") = " + std::to_string(h) +
               (h == deg ? "" : "  MISMATCH") + "\n";
      break;
  }
  return o;
}

Outcome cmd_betti(const RunConfig& cfg, const Builder& b) {
  const StarConfigSpec spec = b.x_spec();
  const BettiTable predicted = predict_betti(spec.r, spec.degrees);
  json j{{"config", spec_to_json(spec)}, {"predicted", betti_to_json(predicted)}};
  std::string text = "type (" + std::to_string(spec.r) + "," + std::to_string(spec.s()) + ") in P^" + std::to_string(spec.n) + ", degrees " +
                     degree_text(spec.degrees) + "\npredicted Betti numbers of the ideal\n" + betti_diagram(predicted);
  std::string csv = "source,l,shift,multiplicity\n";
  for (const auto& [key, mult] : predicted.entries) csv += "predicted," + std::to_string(key.first) + "," + std::to_string(key.second) + "," + std::to_string(mult) + "\n";

  Outcome o;
  if (cfg.verify) {
    StarIdeal X = build(spec);
    const int j_max = cfg.t_max.value_or(spec.total_degree() + spec.n + 1);
    const KoszulBetti oracle = koszul_betti(X.ideal, spec.n + 1, j_max);
    const bool match = tables_match(predicted, oracle);
    const int pd = projective_dimension(oracle, spec.n);
    const bool level = is_level(as_betti_table(oracle));
    o.code = match ? kPass : kAssertionFailed;
    j["config"] = star_to_json(X);
    j["oracle"] = koszul_to_json(oracle);
    j["match"] = match;
    j["projective_dimension"] = pd;
    j["level"] = level;
    text += "Koszul homology dim Tor_i(R/I, k)_j\n" + koszul_diagram(oracle) + "match: " + (match ? "yes" : "NO") +
            "\nprojective dimension of R/I = " + std::to_string(pd) + (pd == spec.r ? " (aCM)" : "") + "\nlevel: " + (level ? "yes" : "no") + "\n";
    for (const auto& [key, mult] : oracle.entries)
      if (key.first >= 1) csv += "koszul," + std::to_string(key.first) + "," + std::to_string(key.second) + "," + std::to_string(mult) + "\n";
  }
  o.body = cfg.format == Format::Json ? dump(j) : cfg.format == Format::Csv ? csv : text;
  return o;
}

Outcome cmd_verify_intersection(const RunConfig& cfg, const Builder& b) {
  StarIdeal X = build(b.x_spec());
  const int t_max = cfg.t_max.value_or(default_t_max(X.spec));
  json rows = json::array();
  std::ostringstream csv, text;
  csv << "t,generated_dim,intersection_dim,equal\n";
  text << describe(X) << "\n    t  generated  intersection\n";
  bool all = true;
  for (int t = 0; t <= t_max; ++t) {
    const IdealSlice& gen = X.ideal.slice(t);
    const IdealSlice inter = intersection_oracle(X, t);
    const bool eq = gen == inter;
    all = all && eq;
    rows.push_back({{"t", t}, {"generated_dim", gen.dim()}, {"intersection_dim", inter.dim()}, {"equal", eq}});
    csv << t << ',' << gen.dim() << ',' << inter.dim() << ',' << (eq ? "true" : "false") << '\n';
    text << std::setw(5) << t << std::setw(11) << gen.dim() << std::setw(14) << inter.dim() << (eq ? "" : "  DIFFERENT") << '\n';
  }
  text << (all ? "generators span the intersection in every degree\n" : "MISMATCH\n");
  Outcome o;
  o.code = all ? kPass : kAssertionFailed;
  o.body = cfg.format == Format::Json ? dump({{"config", star_to_json(X)}, {"rows", rows}, {"equal", all}})
           : cfg.format == Format::Csv ? csv.str()
                                       : text.str();
  return o;
}

Outcome cmd_bdl(const RunConfig& cfg, const Builder& b) {
  const StarConfigSpec spec = b.x_spec();
  if (spec.r < 2) throw UsageError("bdl needs r >= 2");
  StarIdeal X = build(spec);
  const int t_max = cfg.t_max.value_or(default_t_max(X.spec));
  const StarBdlReport rep = bdl_star_step(X, t_max);
  json rows = json::array();
  std::ostringstream csv;
  csv << "t,actual,predicted,equal\n";
  std::vector<std::int64_t> actual, predicted;
  for (const auto& row : rep.report.rows) {
    rows.push_back({{"t", row.t}, {"actual", row.actual}, {"predicted", row.predicted}, {"equal", row.equal()}});
    csv << row.t << ',' << row.actual << ',' << row.predicted << ',' << (row.equal() ? "true" : "false") << '\n';
    actual.push_back(row.actual);
    predicted.push_back(row.predicted);
  }
  Outcome o;
  o.code = rep.report.holds() ? kPass : kAssertionFailed;
  if (cfg.format == Format::Json)
    o.body = dump({{"config", star_to_json(X)}, {"form_degree", rep.report.form_degree}, {"rows", rows}, {"holds", rep.report.holds()},
                   {"equals_star", rep.equals_star}});
  else if (cfg.format == Format::Csv)
    o.body = csv.str();
  else
    o.body = describe(X) + "\n" + amp_row("H(R/I')", actual) + amp_row("predicted", predicted) + "identity " +
             (rep.report.holds() ? "holds" : "FAILS") + "\nlinked ideal equals the star ideal: " + (rep.equals_star ? "yes" : "no") + "\n";
  return o;
}

bool all_degree(const StarConfigSpec& spec, int lo, int hi) {
  return std::all_of(spec.degrees.begin(), spec.degrees.end(), [=](int d) { return d >= lo && d <= hi; });
}

// Families where the WLP with a general linear form is a theorem.
bool known_wlp_family(const StarConfigSpec& x, const StarConfigSpec& y) {
  const bool points = x.r == x.n && y.r == y.n;
  if (points && all_degree(x, 1, 1) && all_degree(y, 1, 1)) return true;
  if (x.n == 2 && points && x.s() == y.s())
    return (all_degree(x, 1, 1) && all_degree(y, 1, 2)) || (all_degree(y, 1, 1) && all_degree(x, 1, 2));
  return false;
}

std::string wlp_text(const WlpReport& rep) {
  std::ostringstream os;
  os << "ideal: " << rep.ideal_summary << "\nelement: " << rep.element << "\nstatus: " << rep.status << '\n';
  if (!rep.note.empty()) os << "note: " << rep.note << '\n';
  std::vector<std::int64_t> h;
  for (const auto& row : rep.degrees) h.push_back(row.dim_a_t);
  os << amp_row("H_A", h) << "    t  dimA_t  dimA_t+1  rank  maximal\n";
  for (const auto& row : rep.degrees)
    os << std::setw(5) << row.t << std::setw(8) << row.dim_a_t << std::setw(10) << row.dim_a_t1 << std::setw(6) << row.rank << "  "
       << (row.maximal ? "yes" : "NO") << '\n';
  os << "verdict: " << (rep.verdict ? "weak Lefschetz property holds" : "maximal rank fails") << '\n';
  return os.str();
}

Outcome emit_wlp(const RunConfig& cfg, const WlpReport& rep, json extra) {
  Outcome o;
  if (cfg.format == Format::Json) {
    json j = wlp_to_json(rep);
    for (auto& [k, v] : extra.items()) j[k] = v;
    o.body = dump(j);
  } else if (cfg.format == Format::Csv) {
    o.body = wlp_csv(rep);
  } else {
    o.body = wlp_text(rep);
  }
  return o;
}

std::vector<std::string> split(const std::string& text, char sep) {
  std::vector<std::string> out;
  std::stringstream ss(text);
  for (std::string part; std::getline(ss, part, sep);)
    if (part.find_first_not_of(" \t") != std::string::npos) out.push_back(part);
  return out;
}

Outcome cmd_wlp(const RunConfig& cfg, const Builder& b) {
  const std::uint64_t seed = b.base_seed();
  auto element = [&](const RingContext& ctx) {
    if (cfg.element == "random") return random_linear_form(ctx, seed);
    HomogeneousForm L = parse_form(ctx, cfg.element, 1);
    if (L.degree() != 1 || L.is_zero()) throw UsageError("--element must be a nonzero linear form");
    return L;
  };

  if (!cfg.ideal.empty()) {
    RingContext ctx(cfg.n.value_or(2), b.prime());
    std::vector<HomogeneousForm> gens;
    int total = 0;
    for (const auto& part : split(cfg.ideal, ';')) {
      gens.push_back(parse_form(ctx, part));
      total += gens.back().degree();
    }
    if (gens.empty()) throw UsageError("--ideal has no generators");
    WlpReport rep = wlp_check(GradedIdeal(ctx, gens), element(ctx), cfg.t_max.value_or(std::max(2, 2 * total)));
    rep.status = "experimental";
    rep.note = "explicit ideal: verdict computed, no theorem assumed";
    return emit_wlp(cfg, rep, {{"seed", seed}});
  }

  if (cfg.linked_ell) {
    if (!cfg.x.s) throw UsageError("--linked needs --s");
    if (cfg.element != "random") throw UsageError("--linked uses the configuration's own linear form; drop --element");
    LinkedPair p = make_linked_pair(*cfg.x.s, *cfg.linked_ell, seed, b.prime());
    WlpReport rep = wlp_sum(p.X, p.Y, p.L, cfg.t_max.value_or(default_wlp_t_max(p.X, p.Y)));
    const bool propagates = surjectivity_propagates(rep);
    Outcome o = emit_wlp(cfg, rep, {{"X", star_to_json(p.X)}, {"Y", star_to_json(p.Y)}, {"surjectivity_propagates", propagates}});
    o.code = rep.verdict && propagates ? kPass : kAssertionFailed;
    return o;
  }

  const StarConfigSpec xs = b.x_spec();
  StarIdeal X = build(xs);
  StarIdeal Y = build(b.y_spec(xs));
  WlpReport rep = wlp_sum(X, Y, element(X.ctx), cfg.t_max.value_or(default_wlp_t_max(X, Y)));
  const bool theorem = known_wlp_family(X.spec, Y.spec);
  rep.status = theorem ? "theorem" : "experimental";
  if (!theorem) rep.note = "no theorem covers this pair: verdict recorded as data";
  else if (cfg.element != "random") rep.note = "explicit element: the theorem speaks about a general linear form, verdict not asserted";
  Outcome o = emit_wlp(cfg, rep, {{"X", star_to_json(X)}, {"Y", star_to_json(Y)}});
  if (theorem && cfg.element == "random" && !rep.verdict) o.code = kAssertionFailed;
  return o;
}

Outcome cmd_union_hf(const RunConfig& cfg, const Builder& b) {
  const StarConfigSpec xs = b.x_spec();
  StarIdeal X = build(xs);
  StarIdeal Y = build(b.y_spec(xs));
  const int t_max = cfg.t_max.value_or(std::max(X.spec.total_degree(), Y.spec.total_degree()) + xs.n);
  const HilbertFunction hx = hf_sequence(X.ideal, t_max), hy = hf_sequence(Y.ideal, t_max), hu = union_hf(X, Y, t_max),
                        hs = sum_hf(X, Y, t_max);
  bool identity = true;
  std::ostringstream csv;
  csv << "t,H_X,H_Y,H_union,H_sum,identity\n";
  for (int t = 0; t <= t_max; ++t) {
    const bool ok = hs(t) == hx(t) + hy(t) - hu(t);
    identity = identity && ok;
    csv << t << ',' << hx(t) << ',' << hy(t) << ',' << hu(t) << ',' << hs(t) << ',' << (ok ? "true" : "false") << '\n';
  }
  Outcome o;
  o.code = identity ? kPass : kAssertionFailed;
  if (cfg.format == Format::Json)
    o.body = dump({{"X", star_to_json(X)}, {"Y", star_to_json(Y)}, {"t_max", t_max}, {"hf_x", hx.values}, {"hf_y", hy.values},
                   {"hf_union", hu.values}, {"hf_sum", hs.values}, {"identity_holds", identity}});
  else if (cfg.format == Format::Csv)
    o.body = csv.str();
  else
    o.body = "X: " + describe(X) + "\nY: " + describe(Y) + "\n" + amp_row("H_X", hx.values) + amp_row("H_Y", hy.values) +
             amp_row("H_XuY", hu.values) + amp_row("H_A", hs.values) + "H_A = H_X + H_Y - H_XuY: " + (identity ? "holds" : "FAILS") + "\n";
  return o;
}

Outcome cmd_experiment(const RunConfig& cfg, const Builder& b) {
  const int n = cfg.n.value_or(2);
  const int s = cfg.x.s.value_or(4);
  const ExperimentReport rep = experiment_open_question(n, s, cfg.exp_t.value_or(s), cfg.exp_d.value_or(2), b.base_seed(), b.prime());
  const json j = experiment_to_json(rep);
  std::string why;
  Outcome o;
  o.code = experiment_report_well_formed(j, &why) ? kPass : kAssertionFailed;
  if (cfg.format == Format::Json)
    o.body = dump(j);
  else if (cfg.format == Format::Csv)
    o.body = wlp_csv(rep.wlp);
  else
    o.body = wlp_text(rep.wlp) + amp_row("H_X", rep.hf_x.values) + amp_row("H_Y", rep.hf_y.values) +
             "H_A agrees with H_X below sigma(X): " + (rep.condition_x ? "yes" : "no") + "\nH_A agrees with H_Y below sigma(Y): " +
             (rep.condition_y ? "yes" : "no") + "\n" + (why.empty() ? "" : "malformed report: " + why + "\n");
  return o;
}

Outcome cmd_suite(const RunConfig& cfg, const Builder& b) {
  SuiteOptions opts;
  opts.grid = parse_grid(cfg.grid);
  opts.seed = b.base_seed();
  opts.prime = b.prime();
  opts.threads = std::max(1u, cfg.threads);
  std::vector<CriterionResult> results;
  if (cfg.criterion) results.push_back(run_criterion(*cfg.criterion, opts));
  else results = run_suite(opts);
  const bool all = std::all_of(results.begin(), results.end(), [](const CriterionResult& r) { return r.pass(); });
  Outcome o;
  o.code = all ? kPass : kAssertionFailed;
  if (cfg.format == Format::Json) {
    o.body = dump(suite_to_json(results, opts));
  } else if (cfg.format == Format::Csv) {
    std::ostringstream os;
    os << "criterion,cell,pass,reseeded\n";
    for (const auto& r : results)
      for (const auto& c : r.cells) os << r.id << ',' << c.key << ',' << (c.pass ? "true" : "false") << ',' << (c.reseeded ? "true" : "false") << '\n';
    o.body = os.str();
  } else {
    o.body = suite_text(results) + (all ? "all criteria passed\n" : "some criteria FAILED\n");
  }
  return o;
}

void add_config_options(CLI::App* sub, RunConfig& cfg, bool with_y) {
  auto* spec = sub->add_option("--spec", cfg.x.spec_path, "JSON spec file {n, r, s, degrees, seed, prime, forms?}");
  auto* n = sub->add_option("--n", cfg.n, "projective dimension (ring has n+1 variables)")->check(CLI::Range(1, static_cast<int>(kMaxVars) - 1));
  auto* r = sub->add_option("--r", cfg.x.r, "codimension r (default n)");
  sub->add_option("--s", cfg.x.s, "number of forms");
  auto* d = sub->add_option("--degrees", cfg.x.degrees, "form degrees, comma separated; one value is repeated s times")->delimiter(',');
  auto* p = sub->add_option("--prime", cfg.prime, "field characteristic (prime < 2^31)");
  spec->excludes(n, r, d, p);
  if (with_y) {
    auto* ys = sub->add_option("--y-spec", cfg.y.spec_path, "JSON spec file for the second configuration");
    auto* yr = sub->add_option("--y-r", cfg.y.r, "codimension of the second configuration (default: first's)");
    auto* yn = sub->add_option("--y-s", cfg.y.s, "number of forms of the second configuration");
    auto* yd = sub->add_option("--y-degrees", cfg.y.degrees, "degrees of the second configuration")->delimiter(',');
    sub->add_option("--y-seed", cfg.y.seed, "seed of the second configuration (default: derived from --seed)");
    ys->excludes(yr, yn, yd);
  }
}

void add_common(CLI::App* sub, RunConfig& cfg, std::string& format) {
  sub->add_option("--seed", cfg.x.seed, "random seed (overrides STARCONF_SEED)");
  sub->add_option("--t-max", cfg.t_max, "largest degree examined")->check(CLI::NonNegativeNumber);
  sub->add_option("--format", format, "text, json or csv")->check(CLI::IsMember({"text", "json", "csv"}));
  sub->add_option("--output", cfg.output_path, "write the report to this file instead of stdout");
}

}  // namespace

std::optional<RunConfig> parse_args(int argc, const char* const* argv, std::ostream& out, std::ostream& err, int* exit_code) {
  RunConfig cfg;
  std::string format = "text";
  CLI::App app{"Star-configuration ideals: Hilbert functions, Betti tables and weak Lefschetz checks over F_p", "starconf"};
  app.require_subcommand(1, 1);

  struct Cmd {
    const char* name;
    const char* help;
    bool with_y;
  };
  const Cmd cmds[] = {
      {"hilbert", "Hilbert function of R/I and sigma", false},
      {"degree", "number of points of an (n, s) configuration", false},
      {"betti", "predicted graded Betti numbers (--verify: compare with Koszul homology)", false},
      {"verify-intersection", "check that the generators span the intersection of the components in every degree", false},
      {"bdl", "basic double G-linkage Hilbert identity", false},
      {"wlp", "weak Lefschetz property of R/(I_X + I_Y) or of R/J", true},
      {"union-hf", "Hilbert functions of X, Y, X u Y and R/(I_X + I_Y)", true},
      {"experiment", "probe the open WLP question for two configurations of degree-d forms", false},
      {"suite", "run the acceptance grid", false},
  };
  for (const auto& c : cmds) {
    CLI::App* sub = app.add_subcommand(c.name, c.help);
    sub->callback([&cfg, name = std::string(c.name)] { cfg.command = name; });
    add_common(sub, cfg, format);
    const std::string name = c.name;
    if (name == "suite") {
      sub->add_option("--grid", cfg.grid, "tiny or small")->check(CLI::IsMember({"tiny", "small"}));
      sub->add_option("--threads", cfg.threads, "worker threads for independent cells")->check(CLI::Range(1u, 256u));
      sub->add_option("--criterion", cfg.criterion, "run a single criterion")->check(CLI::Range(1, kCriterionCount));
      sub->add_option("--prime", cfg.prime, "field characteristic (prime < 2^31)");
      continue;
    }
    if (name == "experiment") {
      sub->add_option("--n", cfg.n, "projective dimension")->check(CLI::Range(2, static_cast<int>(kMaxVars) - 1));
      sub->add_option("--s", cfg.x.s, "forms in the first configuration (default 4)")->check(CLI::PositiveNumber);
      sub->add_option("--t-cfg", cfg.exp_t, "forms in the second configuration (default s)")->check(CLI::PositiveNumber);
      sub->add_option("--d", cfg.exp_d, "common degree of all forms (default 2)")->check(CLI::PositiveNumber);
      sub->add_option("--prime", cfg.prime, "field characteristic (prime < 2^31)");
      continue;
    }
    add_config_options(sub, cfg, c.with_y);
    if (name == "betti") sub->add_flag("--verify", cfg.verify, "run the Koszul homology oracle and compare");
    if (name == "wlp") {
      sub->add_option("--element", cfg.element, "\"random\" or a linear form such as \"1 * x0 + 2 * x1\"");
      sub->add_option("--linked", cfg.linked_ell, "use the linked pair (2, s) / (2, s+1) with ell linear forms")->check(CLI::NonNegativeNumber);
      sub->add_option("--ideal", cfg.ideal, "explicit generators separated by ';' (uses --n)");
    }
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    *exit_code = code == 0 ? kPass : kUsage;
    return std::nullopt;
  }
  cfg.format = format == "json" ? Format::Json : format == "csv" ? Format::Csv : Format::Text;
  return cfg;
}

int dispatch(RunConfig cfg, std::ostream& out, std::ostream& err, const std::optional<std::string>& env_seed) {
  try {
    const Builder b(cfg, env_seed);
    Outcome o;
    if (cfg.command == "hilbert") o = cmd_hilbert(cfg, b);
    else if (cfg.command == "degree") o = cmd_degree(cfg, b);
    else if (cfg.command == "betti") o = cmd_betti(cfg, b);
    else if (cfg.command == "verify-intersection") o = cmd_verify_intersection(cfg, b);
    else if (cfg.command == "bdl") o = cmd_bdl(cfg, b);
    else if (cfg.command == "wlp") o = cmd_wlp(cfg, b);
    else if (cfg.command == "union-hf") o = cmd_union_hf(cfg, b);
    else if (cfg.command == "experiment") o = cmd_experiment(cfg, b);
    else if (cfg.command == "suite") o = cmd_suite(cfg, b);
    else throw UsageError("unknown command '" + cfg.command + "'");

    if (cfg.output_path.empty()) {
      out << o.body;
    } else {
      std::ofstream file(cfg.output_path, std::ios::binary);
      if (!(file << o.body)) throw UsageError("cannot write " + cfg.output_path);
    }
    return o.code;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << '\n';
    return kUsage;
  } catch (const NotArtinian& e) {
    err << "error: " << e.what() << " (raise --t-max)\n";
    return kUsage;
  } catch (const HypothesisViolation& e) {
    err << "error: " << e.what() << '\n';
    return kUsage;
  } catch (const Undetermined& e) {
    err << "error: " << e.what() << '\n';
    return kUsage;
  } catch (const std::exception& e) {
    err << "internal error: " << e.what() << '\n';
    return kAssertionFailed;
  }
}

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err, const std::optional<std::string>& env_seed) {
  int code = kPass;
  auto cfg = parse_args(argc, argv, out, err, &code);
  if (!cfg) return code;
  return dispatch(std::move(*cfg), out, err, env_seed);
}

}  // namespace starconf::cli
