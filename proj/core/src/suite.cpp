#include "starconf/suite.hpp"

#include <algorithm>
#include <atomic>
#include <functional>
#include <numeric>
#include <sstream>
#include <thread>

#include "starconf/lefschetz.hpp"
#include "starconf/resolution.hpp"
#include "starconf/star_config.hpp"

namespace starconf {

Grid parse_grid(std::string_view name) {
  if (name == "tiny") return Grid::Tiny;
  if (name == "small") return Grid::Small;
  throw ParameterError("unknown grid '" + std::string(name) + "' (expected tiny or small)");
}

std::string_view grid_name(Grid grid) noexcept { return grid == Grid::Tiny ? "tiny" : "small"; }

bool CriterionResult::pass() const noexcept {
  return std::all_of(cells.begin(), cells.end(), [](const CellResult& c) { return c.pass; });
}

int CriterionResult::reseeds() const noexcept {
  return static_cast<int>(std::count_if(cells.begin(), cells.end(), [](const CellResult& c) { return c.reseeded; }));
}

namespace {

// A cell check returns an empty string on success, otherwise what went wrong.
using Check = std::function<std::string(std::uint64_t seed)>;

struct Cell {
  std::string key;
  Check check;
};

std::string attempt(const Check& check, std::uint64_t seed) {
  try {
    return check(seed);
  } catch (const std::exception& e) {
    return std::string("exception: ") + e.what();
  }
}

CellResult run_cell(const Cell& cell, std::uint64_t suite_seed) {
  const std::uint64_t seed = SplitRng(suite_seed).child(cell.key).seed();
  CellResult out;
  out.key = cell.key;
  std::string why = attempt(cell.check, seed);
  if (!why.empty()) {
    out.reseeded = true;
    std::string retry = attempt(cell.check, derived_seed(seed));
    out.detail = retry.empty() ? "first attempt: " + why : why + "; after reseed: " + retry;
    why = retry;
  }
  out.pass = why.empty();
  return out;
}

std::vector<CellResult> run_cells(const std::vector<Cell>& cells, const SuiteOptions& opts) {
  std::vector<CellResult> results(cells.size());
  const unsigned workers = std::max(1u, std::min<unsigned>(opts.threads, static_cast<unsigned>(cells.size())));
  std::atomic<std::size_t> next{0};
  auto work = [&] {
    for (std::size_t i = next++; i < cells.size(); i = next++) results[i] = run_cell(cells[i], opts.seed);
  };
  if (workers == 1) {
    work();
  } else {
    std::vector<std::jthread> pool;
    for (unsigned w = 0; w < workers; ++w) pool.emplace_back(work);
  }
  std::sort(results.begin(), results.end(), [](const CellResult& a, const CellResult& b) { return a.key < b.key; });
  return results;
}

std::string join(const std::vector<int>& v, char sep = ',') {
  std::string s;
  for (std::size_t i = 0; i < v.size(); ++i) s += (i ? std::string(1, sep) : "") + std::to_string(v[i]);
  return s;
}

std::string join(const std::vector<std::int64_t>& v) {
  std::string s;
  for (std::size_t i = 0; i < v.size(); ++i) s += (i ? "," : "") + std::to_string(v[i]);
  return s;
}

std::string mismatch(const std::string& what, const std::vector<std::int64_t>& got, const std::vector<std::int64_t>& want) {
  return what + ": got (" + join(got) + ") expected (" + join(want) + ")";
}

StarConfigSpec make_spec(int n, int r, std::vector<int> degrees, std::uint64_t seed, std::uint32_t prime) {
  StarConfigSpec spec;
  spec.n = n;
  spec.r = r;
  spec.degrees = std::move(degrees);
  spec.seed = seed;
  spec.prime = prime;
  return spec;
}

std::uint64_t sub_seed(std::uint64_t seed, std::string_view tag) { return SplitRng(seed).child(tag).seed(); }

// Nondecreasing degree lists with entries in {lo..hi}: form order does not matter.
std::vector<std::vector<int>> degree_lists(int s, int lo, int hi) {
  std::vector<std::vector<int>> out;
  std::vector<int> cur;
  std::function<void(int)> rec = [&](int from) {
    if (static_cast<int>(cur.size()) == s) {
      out.push_back(cur);
      return;
    }
    for (int d = from; d <= hi; ++d) {
      cur.push_back(d);
      rec(d);
      cur.pop_back();
    }
  };
  rec(lo);
  return out;
}

struct GridCell {
  int n, r;
  std::vector<int> degrees;
  std::string key;
};

std::vector<GridCell> star_grid(Grid grid) {
  std::vector<GridCell> out;
  const int n_max = grid == Grid::Tiny ? 2 : 3;
  const int s_max = grid == Grid::Tiny ? 3 : 5;
  for (int n = 2; n <= n_max; ++n)
    for (int s = 2; s <= s_max; ++s)
      for (int r = 2; r <= std::min(s, n); ++r)
        for (auto& degrees : degree_lists(s, 1, 2))
          out.push_back({n, r, degrees, "n" + std::to_string(n) + "/r" + std::to_string(r) + "/d" + join(degrees, '-')});
  return out;
}

std::vector<Cell> criterion_generators(const SuiteOptions& opts) {
  std::vector<Cell> cells;
  for (auto& g : star_grid(opts.grid))
    cells.push_back({g.key, [g, prime = opts.prime](std::uint64_t seed) -> std::string {
                       StarIdeal star = build(make_spec(g.n, g.r, g.degrees, seed, prime));
                       const int t_max = star.spec.total_degree() + g.n;
                       for (int t = 0; t <= t_max; ++t)
                         if (!(intersection_oracle(star, t) == star.ideal.slice(t)))
                           return "slice differs from the intersection at t=" + std::to_string(t);
                       return {};
                     }});
  return cells;
}

std::vector<Cell> criterion_quadrics_p3(const SuiteOptions& opts) {
  return {{"n3/r3/d2-2-2", [prime = opts.prime](std::uint64_t seed) -> std::string {
             StarIdeal star = build(make_spec(3, 3, {2, 2, 2}, seed, prime));
             const std::vector<std::int64_t> want{1, 4, 7, 8, 8, 8, 8, 8, 8};
             auto hf = hf_sequence(star.ideal, 8);
             if (hf.values != want) return mismatch("Hilbert function", hf.values, want);
             if (degree_points(star.spec) != 8) return "degree " + std::to_string(degree_points(star.spec)) + " != 8";
             return {};
           }}};
}

std::vector<Cell> criterion_linear_hf(const SuiteOptions& opts) {
  std::vector<Cell> cells;
  const std::pair<int, int> cases[] = {{2, 3}, {2, 4}, {2, 5}, {3, 4}, {3, 5}};
  for (auto [n, s] : cases)
    cells.push_back({"n" + std::to_string(n) + "/s" + std::to_string(s), [n, s, prime = opts.prime](std::uint64_t seed) -> std::string {
                       StarIdeal star = build(make_spec(n, n, std::vector<int>(static_cast<std::size_t>(s), 1), seed, prime));
                       std::vector<std::int64_t> got, want;
                       for (int i = 0; i <= s; ++i) {
                         got.push_back(hilbert(star.ideal, i));
                         want.push_back(static_cast<std::int64_t>(std::min(binomial(s, n), binomial(i + n, n))));
                       }
                       return got == want ? std::string{} : mismatch("Hilbert function", got, want);
                     }});
  return cells;
}

std::vector<Cell> criterion_resolution(const SuiteOptions& opts) {
  std::vector<Cell> cells;
  for (auto& g : star_grid(opts.grid))
    cells.push_back({g.key, [g, prime = opts.prime](std::uint64_t seed) -> std::string {
                       StarIdeal star = build(make_spec(g.n, g.r, g.degrees, seed, prime));
                       const int d = star.spec.total_degree();
                       const BettiTable predicted = predict_betti(g.r, g.degrees);
                       const KoszulBetti oracle = koszul_betti(star.ideal, g.n + 1, d + g.n + 1);
                       if (!tables_match(predicted, oracle)) return "Betti table differs from Koszul homology";
                       for (int t = 0; t <= d + g.n; ++t)
                         if (euler_hf(predicted, g.n, t) != hilbert(star.ideal, t)) return "Euler characteristic differs at t=" + std::to_string(t);
                       if (!is_level(as_betti_table(oracle))) return "not level";
                       const int pd = projective_dimension(oracle, g.n);
                       if (pd != g.r) return "projective dimension " + std::to_string(pd) + " != r";
                       return {};
                     }});
  return cells;
}

std::vector<Cell> criterion_alpha(const SuiteOptions&) {
  std::vector<Cell> cells;
  for (int s = 2; s <= 8; ++s)
    for (int r = 2; r <= s; ++r)
      cells.push_back({"r" + std::to_string(r) + "/s" + std::to_string(s), [r, s](std::uint64_t) -> std::string {
                         for (int l = 2; l <= r; ++l) {
                           if (alpha(r - 1, s - 1, l - 1) + alpha(r, s - 1, l) != alpha(r, s, l)) return "recurrence fails at l=" + std::to_string(l);
                         }
                         if (alpha(r, s, r) != static_cast<std::int64_t>(binomial(s - 1, r - 1))) return "top multiplicity differs";
                         return {};
                       }});
  return cells;
}

std::vector<Cell> criterion_linkage(const SuiteOptions& opts) {
  std::vector<Cell> cells;
  for (auto& g : star_grid(opts.grid))
    cells.push_back({g.key, [g, prime = opts.prime](std::uint64_t seed) -> std::string {
                       StarIdeal star = build(make_spec(g.n, g.r, g.degrees, seed, prime));
                       const StarBdlReport rep = bdl_star_step(star, star.spec.total_degree() + g.n);
                       for (const auto& row : rep.report.rows)
                         if (!row.equal())
                           return "t=" + std::to_string(row.t) + ": H=" + std::to_string(row.actual) + " predicted " + std::to_string(row.predicted);
                       return {};
                     }});
  return cells;
}

std::vector<Cell> criterion_quadric_pair(const SuiteOptions& opts) {
  return {{"s4/d2", [prime = opts.prime](std::uint64_t seed) -> std::string {
             StarIdeal X = build(make_spec(2, 2, {2, 2, 2, 2}, sub_seed(seed, "X"), prime));
             StarIdeal Y = build(make_spec(2, 2, {2, 2, 2, 2}, sub_seed(seed, "Y"), prime));
             const std::vector<std::int64_t> want_x{1, 3, 6, 10, 15, 21, 24, 24};
             for (const StarIdeal* Z : {&X, &Y}) {
               auto hf = hf_sequence(Z->ideal, 9);
               std::vector<std::int64_t> head(hf.values.begin(), hf.values.begin() + 8);
               if (head != want_x || hf(8) != 24 || hf(9) != 24) return mismatch("configuration Hilbert function", hf.values, want_x);
               if (sigma(hf) != 7) return "sigma " + std::to_string(sigma(hf)) + " != 7";
             }
             const std::vector<std::int64_t> want_u{1, 3, 6, 10, 15, 21, 28, 36, 45, 48, 48};
             auto u = union_hf(X, Y, 10);
             if (u.values != want_u) return mismatch("union Hilbert function", u.values, want_u);
             const SumHfIdentity id = sum_hf_identity(X, Y, 6);
             if (id.lhs != 20 || id.rhs != 20) return "H(A,6): lhs " + std::to_string(id.lhs) + " rhs " + std::to_string(id.rhs) + " expected 20";
             return {};
           }}};
}

std::vector<Cell> criterion_union_tables(const SuiteOptions& opts) {
  struct Case {
    std::string key;
    int sx, sy;
    std::vector<std::int64_t> want;
  };
  std::vector<Case> cases{{"s3+s2", 3, 2, {1, 3, 6, 10, 15, 16, 16}}, {"s3+s3", 3, 3, {1, 3, 6, 10, 15, 21, 24, 24}}};
  std::vector<Cell> cells;
  for (auto& c : cases)
    cells.push_back({c.key, [c, prime = opts.prime](std::uint64_t seed) -> std::string {
                       StarIdeal X = build(make_spec(2, 2, std::vector<int>(static_cast<std::size_t>(c.sx), 2), sub_seed(seed, "X"), prime));
                       StarIdeal Y = build(make_spec(2, 2, std::vector<int>(static_cast<std::size_t>(c.sy), 2), sub_seed(seed, "Y"), prime));
                       auto u = union_hf(X, Y, static_cast<int>(c.want.size()) - 1);
                       return u.values == c.want ? std::string{} : mismatch("union Hilbert function", u.values, c.want);
                     }});
  return cells;
}

std::vector<Cell> criterion_vanishing(const SuiteOptions& opts) {
  std::vector<Cell> cells;
  for (int s : {4, 5})
    cells.push_back({"s" + std::to_string(s) + "/d2", [s, prime = opts.prime](std::uint64_t seed) -> std::string {
                       const std::vector<int> degrees(static_cast<std::size_t>(s), 2);
                       StarIdeal X = build(make_spec(2, 2, degrees, sub_seed(seed, "X"), prime));
                       StarIdeal Y = build(make_spec(2, 2, degrees, sub_seed(seed, "Y"), prime));
                       return check_union_vanishing(X, Y, 2) ? std::string{} : "intersection is nonzero in degree " + std::to_string(2 * s);
                     }});
  return cells;
}

std::vector<Cell> criterion_sum_dims(const SuiteOptions& opts) {
  std::vector<Cell> cells;
  const int s_max = opts.grid == Grid::Tiny ? 3 : 5;
  for (int s = 3; s <= s_max; ++s)
    for (int ell = 0; ell < s; ++ell)
      cells.push_back({"s" + std::to_string(s) + "/l" + std::to_string(ell), [s, ell, prime = opts.prime](std::uint64_t seed) -> std::string {
                         const auto pattern = linked_degree_pattern(s, ell);
                         StarIdeal X = build(make_spec(2, 2, pattern, sub_seed(seed, "X"), prime));
                         StarIdeal Y = build(make_spec(2, 2, pattern, sub_seed(seed, "Y"), prime));
                         const SumDimCheck c = check_sum_dim_lemma(X, Y, ell, random_linear_form(X.ctx, seed));
                         if (!c.lemma_ok()) return "dim " + std::to_string(c.lemma_dim) + " != " + std::to_string(c.lemma_expected);
                         if (!c.linked_ok()) return "linked dim " + std::to_string(c.linked_dim) + " != " + std::to_string(c.linked_expected);
                         return {};
                       }});
  return cells;
}

std::string wlp_failure(const WlpReport& rep) {
  for (const auto& row : rep.degrees)
    if (!row.maximal)
      return "not maximal at t=" + std::to_string(row.t) + " (rank " + std::to_string(row.rank) + ", dims " + std::to_string(row.dim_a_t) + "->" +
             std::to_string(row.dim_a_t1) + ")";
  return "verdict false";
}

std::string identity_failure(const StarIdeal& X, const StarIdeal& Y, int t_max) {
  for (int t = 0; t <= t_max; ++t)
    if (!sum_hf_identity(X, Y, t).equal()) return "Hilbert function identity fails at t=" + std::to_string(t);
  return {};
}

std::vector<Cell> criterion_wlp(const SuiteOptions& opts) {
  std::vector<Cell> cells;
  const bool tiny = opts.grid == Grid::Tiny;
  const std::uint32_t prime = opts.prime;

  for (int n = 2; n <= (tiny ? 2 : 3); ++n)
    for (int s = n; s <= (tiny ? 3 : 5); ++s)
      for (int t = n; t <= s; ++t)
        cells.push_back({"linear/n" + std::to_string(n) + "/s" + std::to_string(s) + "/t" + std::to_string(t), [n, s, t, prime](std::uint64_t seed) -> std::string {
                           StarIdeal X = build(make_spec(n, n, std::vector<int>(static_cast<std::size_t>(s), 1), sub_seed(seed, "X"), prime));
                           StarIdeal Y = build(make_spec(n, n, std::vector<int>(static_cast<std::size_t>(t), 1), sub_seed(seed, "Y"), prime));
                           const WlpReport rep = wlp_sum(X, Y, random_linear_form(X.ctx, seed), default_wlp_t_max(X, Y));
                           if (!rep.verdict) return wlp_failure(rep);
                           return identity_failure(X, Y, rep.socle_degree + 1);
                         }});

  for (int s = 3; s <= (tiny ? 3 : 4); ++s)
    for (auto& g_degrees : degree_lists(s, 1, 2))
      cells.push_back({"mixed/s" + std::to_string(s) + "/g" + join(g_degrees, '-'), [s, g_degrees, prime](std::uint64_t seed) -> std::string {
                         StarIdeal X = build(make_spec(2, 2, std::vector<int>(static_cast<std::size_t>(s), 1), sub_seed(seed, "X"), prime));
                         StarIdeal Y = build(make_spec(2, 2, g_degrees, sub_seed(seed, "Y"), prime));
                         const WlpReport rep = wlp_sum(X, Y, random_linear_form(X.ctx, seed), default_wlp_t_max(X, Y));
                         if (!rep.verdict) return wlp_failure(rep);
                         return identity_failure(X, Y, rep.socle_degree + 1);
                       }});

  for (int s = 3; s <= (tiny ? 3 : 5); ++s)
    for (int ell = 0; ell < s; ++ell)
      cells.push_back({"linked/s" + std::to_string(s) + "/l" + std::to_string(ell), [s, ell, prime](std::uint64_t seed) -> std::string {
                         LinkedPair p = make_linked_pair(s, ell, seed, prime);
                         const WlpReport rep = wlp_sum(p.X, p.Y, p.L, default_wlp_t_max(p.X, p.Y));
                         if (!rep.verdict) return wlp_failure(rep);
                         if (!surjectivity_propagates(rep)) return "surjectivity does not propagate";
                         return {};
                       }});
  return cells;
}

std::vector<Cell> criterion_experiments(const SuiteOptions& opts) {
  struct Case {
    int n, s, t, d;
  };
  std::vector<Cell> cells;
  for (Case c : {Case{2, 4, 4, 2}, Case{2, 3, 3, 1}, Case{2, 4, 3, 2}})
    cells.push_back({"n" + std::to_string(c.n) + "/s" + std::to_string(c.s) + "/t" + std::to_string(c.t) + "/d" + std::to_string(c.d),
                     [c, prime = opts.prime](std::uint64_t seed) -> std::string {
                       const auto j = experiment_to_json(experiment_open_question(c.n, c.s, c.t, c.d, seed, prime));
                       std::string why;
                       return experiment_report_well_formed(j, &why) ? std::string{} : why;
                     }});
  return cells;
}

struct CriterionDef {
  const char* title;
  std::vector<Cell> (*cells)(const SuiteOptions&);
};

const CriterionDef kCriteria[kCriterionCount] = {
    {"star ideal equals the intersection of its components", criterion_generators},
    {"three quadrics in P^3: H = 1,4,7,8,8 and degree 8", criterion_quadrics_p3},
    {"linear configurations have the generic Hilbert function", criterion_linear_hf},
    {"Betti tables match Koszul homology; Euler, level, pd = r", criterion_resolution},
    {"alpha recurrence", criterion_alpha},
    {"basic double G-linkage Hilbert identity", criterion_linkage},
    {"(2,4) quadric pair tables and H(A,6) = 20", criterion_quadric_pair},
    {"union Hilbert functions of quadric configurations", criterion_union_tables},
    {"union ideal vanishes in degree ds", criterion_vanishing},
    {"sum ideal dimensions 2(s-l) and 4s-3l", criterion_sum_dims},
    {"weak Lefschetz property for known families", criterion_wlp},
    {"experimental reports are well formed", criterion_experiments},
};

}  // namespace

CriterionResult run_criterion(int id, const SuiteOptions& opts) {
  if (id < 1 || id > kCriterionCount) throw ParameterError("criterion id out of range: " + std::to_string(id));
  const CriterionDef& def = kCriteria[id - 1];
  CriterionResult out;
  out.id = id;
  out.title = def.title;
  out.cells = run_cells(def.cells(opts), opts);
  return out;
}

std::vector<CriterionResult> run_suite(const SuiteOptions& opts) {
  std::vector<CriterionResult> out;
  for (int id = 1; id <= kCriterionCount; ++id) out.push_back(run_criterion(id, opts));
  return out;
}

nlohmann::json suite_to_json(const std::vector<CriterionResult>& results, const SuiteOptions& opts) {
  nlohmann::json crit = nlohmann::json::array();
  bool all = true;
  for (const auto& r : results) {
    nlohmann::json cells = nlohmann::json::array();
    for (const auto& c : r.cells) {
      nlohmann::json cell{{"key", c.key}, {"pass", c.pass}, {"reseeded", c.reseeded}};
      if (!c.detail.empty()) cell["detail"] = c.detail;
      cells.push_back(cell);
    }
    crit.push_back({{"id", r.id}, {"title", r.title}, {"pass", r.pass()}, {"reseeds", r.reseeds()}, {"cells", cells}});
    all = all && r.pass();
  }
  return {{"grid", grid_name(opts.grid)}, {"seed", opts.seed}, {"prime", opts.prime}, {"pass", all}, {"criteria", crit}};
}

std::string suite_text(const std::vector<CriterionResult>& results) {
  std::ostringstream os;
  for (const auto& r : results) {
    os << (r.pass() ? "PASS " : "FAIL ") << r.id << ' ' << r.title << " (" << r.cells.size() << " cells";
    if (r.reseeds() > 0) os << ", " << r.reseeds() << " reseeded";
    os << ")\n";
    for (const auto& c : r.cells)
      if (!c.pass || c.reseeded) os << "    " << (c.pass ? "reseeded " : "failed ") << c.key << ": " << c.detail << '\n';
  }
  return os.str();
}

bool experiment_report_well_formed(const nlohmann::json& report, std::string* why) {
  auto fail = [why](std::string msg) {
    if (why) *why = std::move(msg);
    return false;
  };
  if (!report.is_object()) return fail("report is not an object");
  for (const char* key : {"ideal_summary", "element", "degrees", "verdict", "status", "provenance", "hf_sum"})
    if (!report.contains(key)) return fail(std::string("missing key ") + key);
  if (report["status"] != "experimental") return fail("status is not experimental");
  if (!report["verdict"].is_boolean()) return fail("verdict is not boolean");
  if (!report["provenance"].contains("seed")) return fail("provenance lacks the seed");
  const auto& degrees = report["degrees"];
  if (!degrees.is_array() || degrees.empty()) return fail("degrees is empty");
  bool all = true;
  int expect_t = 0;
  for (const auto& row : degrees) {
    for (const char* key : {"t", "dimA_t", "dimA_t1", "rank", "maximal"})
      if (!row.contains(key)) return fail(std::string("degree row lacks ") + key);
    if (row["t"].get<int>() != expect_t++) return fail("degrees are not consecutive from 0");
    const auto a = row["dimA_t"].get<std::int64_t>(), b = row["dimA_t1"].get<std::int64_t>(), rk = row["rank"].get<std::int64_t>();
    if (rk < 0 || rk > std::min(a, b)) return fail("rank out of range");
    if (row["maximal"].get<bool>() != (rk == std::min(a, b))) return fail("maximal flag inconsistent with rank");
    all = all && row["maximal"].get<bool>();
  }
  if (report["verdict"].get<bool>() != all) return fail("verdict inconsistent with degree rows");
  return true;
}

}  // namespace starconf
