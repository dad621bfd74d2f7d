#include "starconf/star_config.hpp"

#include <algorithm>
#include <map>
#include <numeric>

namespace starconf {

int StarConfigSpec::total_degree() const noexcept { return std::accumulate(degrees.begin(), degrees.end(), 0); }

void StarConfigSpec::validate() const {
  if (n < 1) throw ParameterError("n must be >= 1");
  if (s() < 2) throw ParameterError("a star configuration needs s >= 2 forms");
  if (r < 1 || r > std::min(s(), n))
    throw ParameterError("r must satisfy 1 <= r <= min(s, n); got r=" + std::to_string(r) + ", s=" + std::to_string(s()) +
                         ", n=" + std::to_string(n));
  for (int d : degrees)
    if (d < 1) throw ParameterError("form degrees must be >= 1");
  if (!forms.empty()) {
    if (forms.size() != degrees.size()) throw ParameterError("number of explicit forms does not match s");
    for (std::size_t i = 0; i < forms.size(); ++i) {
      if (forms[i].degree() != degrees[i]) throw ParameterError("explicit form " + std::to_string(i + 1) + " has the wrong degree");
      if (forms[i].is_zero()) throw ParameterError("explicit forms must be nonzero");
    }
  }
}

StarConfigSpec spec_from_json(const nlohmann::json& j) {
  StarConfigSpec spec;
  try {
    spec.n = j.at("n").get<int>();
    spec.r = j.at("r").get<int>();
    spec.degrees = j.at("degrees").get<std::vector<int>>();
    if (j.contains("s") && j.at("s").get<int>() != spec.s()) throw ParameterError("s does not match the length of degrees");
    if (j.contains("seed")) spec.seed = j.at("seed").get<std::uint64_t>();
    if (j.contains("prime")) spec.prime = j.at("prime").get<std::uint32_t>();
    if (j.contains("forms") && !j.at("forms").is_null()) {
      RingContext ctx(spec.n, spec.prime);
      const auto& forms = j.at("forms");
      for (std::size_t i = 0; i < forms.size(); ++i) {
        int d = i < spec.degrees.size() ? spec.degrees[i] : 0;
        spec.forms.push_back(form_from_json(ctx, forms[i], d));
      }
    }
  } catch (const nlohmann::json::exception& e) {
    throw ParameterError(std::string("bad spec JSON: ") + e.what());
  }
  spec.validate();
  return spec;
}

nlohmann::json spec_to_json(const StarConfigSpec& spec) {
  nlohmann::json j;
  j["n"] = spec.n;
  j["r"] = spec.r;
  j["s"] = spec.s();
  j["degrees"] = spec.degrees;
  j["seed"] = spec.seed;
  j["prime"] = spec.prime;
  if (!spec.forms.empty()) {
    j["forms"] = nlohmann::json::array();
    for (const auto& f : spec.forms) j["forms"].push_back(to_json(f));
  }
  return j;
}

std::vector<std::vector<int>> subsets(int s, int k) {
  std::vector<std::vector<int>> out;
  if (k < 0 || k > s) return out;
  std::vector<int> cur(static_cast<std::size_t>(k));
  std::iota(cur.begin(), cur.end(), 0);
  for (;;) {
    out.push_back(cur);
    int i = k - 1;
    while (i >= 0 && cur[static_cast<std::size_t>(i)] == s - k + i) --i;
    if (i < 0) break;
    ++cur[static_cast<std::size_t>(i)];
    for (int j = i + 1; j < k; ++j) cur[static_cast<std::size_t>(j)] = cur[static_cast<std::size_t>(j - 1)] + 1;
  }
  return out;
}

namespace {

std::vector<HomogeneousForm> complement_product_generators(const RingContext& ctx, std::span<const HomogeneousForm> forms,
                                                           int r, std::vector<std::vector<int>>* omitted) {
  const int s = static_cast<int>(forms.size());
  std::vector<HomogeneousForm> gens;
  for (const auto& left_out : subsets(s, r - 1)) {
    HomogeneousForm g = HomogeneousForm::constant(ctx, 1);
    for (int i = 0; i < s; ++i) {
      if (std::find(left_out.begin(), left_out.end(), i) == left_out.end()) g = multiply(g, forms[static_cast<std::size_t>(i)]);
    }
    gens.push_back(std::move(g));
    if (omitted) omitted->push_back(left_out);
  }
  return gens;
}

}  // namespace

GradedIdeal star_ideal(const RingContext& ctx, std::span<const HomogeneousForm> forms, int r) {
  if (r < 1) throw ParameterError("star_ideal needs r >= 1");
  if (r > static_cast<int>(forms.size())) return GradedIdeal::unit(ctx);
  return GradedIdeal(ctx, complement_product_generators(ctx, forms, r, nullptr));
}

std::vector<HomogeneousForm> draw_forms(const RingContext& ctx, std::span<const int> degrees, std::uint64_t seed) {
  const SplitRng stream = SplitRng(seed).child("forms");
  std::vector<HomogeneousForm> forms;
  for (std::size_t i = 0; i < degrees.size(); ++i) {
    SplitRng rng = stream.child(i);
    forms.push_back(random_form(ctx, degrees[i], rng));
  }
  return forms;
}

std::uint64_t derived_seed(std::uint64_t seed) { return splitmix64(seed ^ hash_tag("reseed")); }

namespace {

bool same_degree_generators_independent(const GradedIdeal& I) {
  std::map<int, std::vector<const HomogeneousForm*>> by_degree;
  for (const auto& g : I.generators()) by_degree[g.degree()].push_back(&g);
  for (const auto& [d, gens] : by_degree) {
    RowReducer red(I.ctx().field(), I.ctx().dim(d));
    for (const auto* g : gens)
      if (!red.insert(coordinate_vector(*g, d))) return false;
  }
  return true;
}

StarIdeal assemble(StarConfigSpec spec, const RingContext& ctx) {
  std::vector<std::vector<int>> omitted;
  auto gens = complement_product_generators(ctx, spec.forms, spec.r, &omitted);
  GradedIdeal ideal(ctx, std::move(gens));
  std::vector<GradedIdeal> components;
  for (const auto& idx : subsets(spec.s(), spec.r)) {
    std::vector<HomogeneousForm> sub;
    for (int i : idx) sub.push_back(spec.forms[static_cast<std::size_t>(i)]);
    components.emplace_back(ctx, std::move(sub));
  }
  bool generic = same_degree_generators_independent(ideal);
  return StarIdeal{std::move(spec), ctx, std::move(ideal), std::move(omitted), std::move(components), false, generic};
}

}  // namespace

StarIdeal build(const StarConfigSpec& input) {
  input.validate();
  RingContext ctx(input.n, input.prime);
  StarConfigSpec spec = input;
  const bool explicit_forms = !spec.forms.empty();
  if (!explicit_forms) spec.forms = draw_forms(ctx, spec.degrees, spec.seed);
  StarIdeal star = assemble(spec, ctx);
  if (star.generic || explicit_forms) return star;

  spec.forms = draw_forms(ctx, spec.degrees, derived_seed(spec.seed));
  star = assemble(spec, ctx);
  star.reseeded = true;
  return star;
}

nlohmann::json star_to_json(const StarIdeal& star) {
  nlohmann::json j = spec_to_json(star.spec);
  j["forms_text"] = nlohmann::json::array();
  for (const auto& f : star.forms()) j["forms_text"].push_back(to_text(f));
  j["generator_count"] = star.ideal.generators().size();
  j["generator_degrees"] = nlohmann::json::array();
  for (const auto& g : star.ideal.generators()) j["generator_degrees"].push_back(g.degree());
  j["reseeded"] = star.reseeded;
  j["generic"] = star.generic;
  return j;
}

IdealSlice intersection_oracle(const StarIdeal& star, int t) { return intersection_slice(star.components, t); }

std::int64_t degree_points(const StarConfigSpec& spec) {
  if (spec.r != spec.n) throw ParameterError("degree_points is defined only for r == n (finite point sets)");
  std::int64_t total = 0;
  for (const auto& idx : subsets(spec.s(), spec.n)) {
    std::int64_t p = 1;
    for (int i : idx) p *= spec.degrees[static_cast<std::size_t>(i)];
    total += p;
  }
  return total;
}

std::int64_t generic_hf_linear(int n, int s, int i) {
  if (n < 2 || s < n) throw ParameterError("generic_hf_linear needs s >= n >= 2");
  if (i < 0) throw ParameterError("negative degree");
  return static_cast<std::int64_t>(std::min(binomial(s, n), binomial(i + n, n)));
}

std::int64_t generic_hf_2s_p2(std::span<const int> degrees, int i) {
  if (degrees.size() < 3) throw ParameterError("generic_hf_2s_p2 needs s >= 3");
  for (int d : degrees)
    if (d < 1 || d > 2) throw ParameterError("generic_hf_2s_p2 needs every degree in {1, 2}");
  if (i < 0) throw ParameterError("negative degree");
  StarConfigSpec spec;
  spec.n = 2;
  spec.r = 2;
  spec.degrees.assign(degrees.begin(), degrees.end());
  return std::min<std::int64_t>(degree_points(spec), static_cast<std::int64_t>(binomial(i + 2, 2)));
}

int sigma(const HilbertFunction& hf) {
  for (std::size_t i = 1; i < hf.values.size(); ++i)
    if (hf.values[i - 1] == hf.values[i]) return static_cast<int>(i);
  throw Undetermined("Hilbert function has no plateau up to t = " + std::to_string(hf.t_max()) + "; extend t_max");
}

int sigma_formula_2s(std::span<const int> degrees) {
  if (degrees.size() < 3) throw ParameterError("sigma_formula_2s needs s >= 3");
  return std::accumulate(degrees.begin(), degrees.end(), 0) - 1;
}

bool BdlReport::holds() const noexcept {
  return std::all_of(rows.begin(), rows.end(), [](const BdlRow& r) { return r.equal(); });
}

namespace {

GradedIdeal linkage_ideal(const GradedIdeal& I_S, const GradedIdeal& I_C, const HomogeneousForm& F) {
  std::vector<HomogeneousForm> gens;
  for (const auto& g : I_C.generators()) gens.push_back(multiply(F, g));
  gens.insert(gens.end(), I_S.generators().begin(), I_S.generators().end());
  return GradedIdeal(I_S.ctx(), std::move(gens));
}

BdlReport compare_linkage(const GradedIdeal& I_S, const GradedIdeal& I_C, const GradedIdeal& linked, int d, int t_max) {
  BdlReport report{d, {}};
  for (int t = 0; t <= t_max; ++t) {
    std::int64_t predicted = hilbert(I_S, t);
    if (t - d >= 0) predicted += hilbert(I_C, t - d) - hilbert(I_S, t - d);
    report.rows.push_back({t, hilbert(linked, t), predicted});
  }
  return report;
}

}  // namespace

BdlReport bdl_check(const GradedIdeal& I_S, const GradedIdeal& I_C, const HomogeneousForm& F, int t_max) {
  if (!(I_S.ctx() == I_C.ctx()) || !(I_S.ctx() == F.ctx())) throw ContextMismatch("bdl_check: different rings");
  if (!contained_in(I_S, I_C, t_max)) throw HypothesisViolation("bdl_check: I_S is not contained in I_C");
  return compare_linkage(I_S, I_C, linkage_ideal(I_S, I_C, F), F.degree(), t_max);
}

StarBdlReport bdl_star_step(const StarIdeal& star, int t_max) {
  const int r = star.spec.r;
  if (r < 2) throw ParameterError("bdl_star_step needs r >= 2");
  const auto& forms = star.forms();
  std::span<const HomogeneousForm> head(forms.data(), forms.size() - 1);
  GradedIdeal I_C = star_ideal(star.ctx, head, r);
  GradedIdeal I_S = star_ideal(star.ctx, head, r - 1);
  const HomogeneousForm& F = forms.back();

  if (!contained_in(I_S, I_C, t_max)) throw HypothesisViolation("bdl_star_step: I_S is not contained in I_C");
  GradedIdeal linked = linkage_ideal(I_S, I_C, F);
  StarBdlReport out{compare_linkage(I_S, I_C, linked, F.degree(), t_max), true};
  for (int t = 0; t <= t_max && out.equals_star; ++t) out.equals_star = slices_equal(linked, star.ideal, t);
  return out;
}

}  // namespace starconf
