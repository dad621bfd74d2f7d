#include "starconf/lefschetz.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

namespace starconf {

namespace {

std::string degree_list(const std::vector<int>& degrees) {
  std::ostringstream os;
  os << '[';
  for (std::size_t i = 0; i < degrees.size(); ++i) os << (i ? "," : "") << degrees[i];
  os << ']';
  return os.str();
}

std::string describe(const StarIdeal& X) {
  std::ostringstream os;
  os << "type (" << X.spec.r << "," << X.spec.s() << ") in P^" << X.spec.n << " degrees " << degree_list(X.spec.degrees);
  return os.str();
}

std::string describe(const GradedIdeal& J) {
  std::vector<int> degrees;
  for (const auto& g : J.generators()) degrees.push_back(g.degree());
  std::ostringstream os;
  os << "ideal in P^" << J.ctx().n() << " with " << degrees.size() << " generators of degrees " << degree_list(degrees);
  return os.str();
}

}  // namespace

HomogeneousForm random_linear_form(const RingContext& ctx, std::uint64_t seed) {
  SplitRng rng = SplitRng(seed).child("lefschetz");
  return random_form(ctx, 1, rng);
}

WlpReport wlp_check(const GradedIdeal& J, const HomogeneousForm& L, int t_max) {
  if (L.degree() != 1) throw ParameterError("a Lefschetz element must be a linear form");
  if (!(J.ctx() == L.ctx())) throw ContextMismatch("wlp_check: element lives in a different ring");

  int socle = -1;
  bool artinian = false;
  std::vector<std::int64_t> dims;
  for (int t = 0; t <= t_max; ++t) {
    std::int64_t h = hilbert(J, t);
    if (h == 0) {
      artinian = true;
      break;
    }
    dims.push_back(h);
    socle = t;
  }
  if (!artinian) throw NotArtinian("quotient is not Artinian within t <= " + std::to_string(t_max));

  WlpReport report;
  report.ideal_summary = describe(J);
  report.element = to_text(L);
  report.socle_degree = socle;
  report.verdict = true;
  const PrimeField& field = J.ctx().field();
  for (int t = 0; t <= socle; ++t) {
    WlpDegree row;
    row.t = t;
    row.dim_a_t = dims[static_cast<std::size_t>(t)];
    row.dim_a_t1 = t + 1 <= socle ? dims[static_cast<std::size_t>(t) + 1] : 0;
    if (row.dim_a_t1 > 0) {
      RowReducer red(field, static_cast<std::size_t>(row.dim_a_t1));
      for (const auto& img : quotient_mult_images(J, L, t)) {
        if (red.full()) break;
        red.insert(img);
      }
      row.rank = static_cast<std::int64_t>(red.rank());
    }
    row.maximal = row.rank == std::min(row.dim_a_t, row.dim_a_t1);
    report.verdict = report.verdict && row.maximal;
    report.degrees.push_back(row);
  }
  return report;
}

int default_wlp_t_max(const StarIdeal& X, const StarIdeal& Y) {
  return 2 * (X.spec.total_degree() + Y.spec.total_degree());
}

WlpReport wlp_sum(const StarIdeal& X, const StarIdeal& Y, const HomogeneousForm& L, int t_max) {
  if (!(X.ctx == Y.ctx)) throw ContextMismatch("wlp_sum: configurations live in different rings");
  WlpReport report = wlp_check(ideal_sum(X.ideal, Y.ideal), L, t_max);
  report.ideal_summary = "I_X + I_Y; X " + describe(X) + "; Y " + describe(Y);
  return report;
}

bool surjectivity_propagates(const WlpReport& report) {
  bool onto = false;
  for (const auto& row : report.degrees) {
    const bool here = row.rank == row.dim_a_t1;
    if (onto && !here) return false;
    onto = onto || here;
  }
  return true;
}

nlohmann::json wlp_to_json(const WlpReport& report) {
  nlohmann::json degrees = nlohmann::json::array();
  for (const auto& row : report.degrees)
    degrees.push_back({{"t", row.t}, {"dimA_t", row.dim_a_t}, {"dimA_t1", row.dim_a_t1}, {"rank", row.rank}, {"maximal", row.maximal}});
  nlohmann::json j{{"ideal_summary", report.ideal_summary},
                   {"element", report.element},
                   {"degrees", degrees},
                   {"verdict", report.verdict},
                   {"socle_degree", report.socle_degree},
                   {"status", report.status}};
  if (!report.note.empty()) j["note"] = report.note;
  return j;
}

std::string wlp_csv(const WlpReport& report) {
  std::ostringstream os;
  os << "t,dimA_t,dimA_t1,rank,maximal\n";
  for (const auto& row : report.degrees)
    os << row.t << ',' << row.dim_a_t << ',' << row.dim_a_t1 << ',' << row.rank << ',' << (row.maximal ? "true" : "false") << '\n';
  return os.str();
}

HilbertFunction union_hf(const StarIdeal& X, const StarIdeal& Y, int t_max) {
  if (!(X.ctx == Y.ctx)) throw ContextMismatch("union_hf: configurations live in different rings");
  const GradedIdeal pair[2] = {X.ideal, Y.ideal};
  return intersection_hf(pair, t_max);
}

HilbertFunction sum_hf(const StarIdeal& X, const StarIdeal& Y, int t_max) {
  HilbertFunction h;
  for (int t = 0; t <= t_max; ++t)
    h.values.push_back(static_cast<std::int64_t>(X.ctx.dim(t)) - static_cast<std::int64_t>(sum_slice(X.ideal, Y.ideal, t).dim()));
  return h;
}

SumHfIdentity sum_hf_identity(const StarIdeal& X, const StarIdeal& Y, int t) {
  if (!(X.ctx == Y.ctx)) throw ContextMismatch("sum_hf_identity: configurations live in different rings");
  const auto dim_r = static_cast<std::int64_t>(X.ctx.dim(t));
  const GradedIdeal pair[2] = {X.ideal, Y.ideal};
  SumHfIdentity out;
  out.lhs = dim_r - static_cast<std::int64_t>(sum_slice(X.ideal, Y.ideal, t).dim());
  out.rhs = hilbert(X.ideal, t) + hilbert(Y.ideal, t) - (dim_r - static_cast<std::int64_t>(intersection_slice(pair, t).dim()));
  return out;
}

bool quotient_matches_below_sigma(const HilbertFunction& hf_a, const HilbertFunction& hf_x) {
  const int sx = sigma(hf_x);
  if (hf_a.t_max() < sx - 1) throw Undetermined("Hilbert function of the quotient is too short");
  for (int i = 0; i <= sx - 1; ++i)
    if (hf_a(i) != hf_x(i)) return false;
  return true;
}

std::vector<int> linked_degree_pattern(int s, int ell) {
  if (s < 1 || ell < 0 || ell >= s) throw ParameterError("degree pattern needs 0 <= ell < s");
  std::vector<int> degrees(static_cast<std::size_t>(s), 2);
  std::fill_n(degrees.begin(), ell, 1);
  return degrees;
}

SumDimCheck check_sum_dim_lemma(const StarIdeal& X, const StarIdeal& Y, int ell, const HomogeneousForm& L) {
  const int s = X.spec.s();
  if (s < 3) throw ParameterError("check_sum_dim_lemma needs s >= 3");
  if (X.spec.n != 2 || Y.spec.n != 2 || X.spec.r != 2 || Y.spec.r != 2)
    throw ParameterError("check_sum_dim_lemma needs two (2, s) configurations in P^2");
  if (Y.spec.s() != s) throw ParameterError("check_sum_dim_lemma needs both configurations to have s forms");
  const auto pattern = linked_degree_pattern(s, ell);
  if (X.spec.degrees != pattern || Y.spec.degrees != pattern)
    throw ParameterError("check_sum_dim_lemma: degrees must be 1 for the first ell forms and 2 for the rest");
  if (L.degree() != 1) throw ParameterError("check_sum_dim_lemma needs a linear form");

  SumDimCheck out;
  out.s = s;
  out.ell = ell;
  out.lemma_dim = static_cast<std::int64_t>(sum_slice(X.ideal, Y.ideal, 2 * s - ell - 2).dim());
  out.lemma_expected = 2 * (s - ell);

  std::vector<HomogeneousForm> plus = Y.forms();
  plus.push_back(L);
  GradedIdeal y_plus = star_ideal(Y.ctx, plus, 2);
  out.linked_dim = static_cast<std::int64_t>(sum_slice(X.ideal, y_plus, 2 * s - ell - 1).dim());
  out.linked_expected = 4 * s - 3 * ell;
  return out;
}

bool check_union_vanishing(const StarIdeal& X, const StarIdeal& Y, int d) {
  const int s = X.spec.s();
  if (s < 4 || d < 2) throw ParameterError("check_union_vanishing needs s >= 4 and d >= 2");
  if (X.spec.n != 2 || Y.spec.n != 2 || X.spec.r != 2 || Y.spec.r != 2 || Y.spec.s() != s)
    throw ParameterError("check_union_vanishing needs two (2, s) configurations in P^2");
  for (const auto* spec : {&X.spec, &Y.spec})
    for (int di : spec->degrees)
      if (di != d) throw ParameterError("check_union_vanishing: every form must have degree d");
  const GradedIdeal pair[2] = {X.ideal, Y.ideal};
  return intersection_slice(pair, d * s).dim() == 0;
}

LinkedPair make_linked_pair(int s, int ell, std::uint64_t seed, std::uint32_t prime) {
  const auto pattern = linked_degree_pattern(s, ell);
  RingContext ctx(2, prime);

  StarConfigSpec x;
  x.n = 2;
  x.r = 2;
  x.degrees = pattern;
  x.seed = seed;
  x.prime = prime;
  x.forms = draw_forms(ctx, pattern, SplitRng(seed).child("F").seed());

  HomogeneousForm L = random_linear_form(ctx, seed);
  StarConfigSpec y = x;
  y.forms = draw_forms(ctx, pattern, SplitRng(seed).child("G").seed());
  y.degrees.push_back(1);
  y.forms.push_back(L);

  return LinkedPair{build(x), build(y), L};
}

ExperimentReport experiment_open_question(int n, int s, int t_cfg, int d, std::uint64_t seed, std::uint32_t prime) {
  if (d < 1) throw ParameterError("experiment needs d >= 1");
  if (s < n || t_cfg < n) throw ParameterError("experiment needs s, t >= n so both configurations are point sets");
  StarConfigSpec x;
  x.n = n;
  x.r = n;
  x.degrees.assign(static_cast<std::size_t>(s), d);
  x.seed = SplitRng(seed).child("X").seed();
  x.prime = prime;
  StarConfigSpec y = x;
  y.degrees.assign(static_cast<std::size_t>(t_cfg), d);
  y.seed = SplitRng(seed).child("Y").seed();

  StarIdeal X = build(x);
  StarIdeal Y = build(y);
  HomogeneousForm L = random_linear_form(X.ctx, seed);

  ExperimentReport out;
  out.wlp = wlp_sum(X, Y, L, default_wlp_t_max(X, Y));
  out.wlp.status = "experimental";
  out.wlp.note = d == 1 ? "linear configurations: the WLP is known in this case; recorded as data"
                        : "open question for forms of degree d > 1: verdict is empirical, not a theorem";
  const int t_max = std::max(out.wlp.socle_degree + 1, std::max(x.total_degree(), y.total_degree()) + 1);
  out.hf_x = hf_sequence(X.ideal, t_max);
  out.hf_y = hf_sequence(Y.ideal, t_max);
  out.hf_sum = sum_hf(X, Y, t_max);
  try {
    out.condition_x = quotient_matches_below_sigma(out.hf_sum, out.hf_x);
    out.condition_y = quotient_matches_below_sigma(out.hf_sum, out.hf_y);
  } catch (const Undetermined&) {
    out.condition_x = out.condition_y = false;
  }
  out.provenance = {{"n", n}, {"s", s}, {"t", t_cfg}, {"d", d}, {"seed", seed}, {"prime", prime},
                    {"X", star_to_json(X)}, {"Y", star_to_json(Y)}};
  return out;
}

nlohmann::json experiment_to_json(const ExperimentReport& report) {
  nlohmann::json j = wlp_to_json(report.wlp);
  j["hf_x"] = report.hf_x.values;
  j["hf_y"] = report.hf_y.values;
  j["hf_sum"] = report.hf_sum.values;
  j["sufficient_condition_x"] = report.condition_x;
  j["sufficient_condition_y"] = report.condition_y;
  j["provenance"] = report.provenance;
  return j;
}

}  // namespace starconf
