#include "starconf/polyring.hpp"

#include <algorithm>
#include <cctype>
#include <cstring>
#include <mutex>
#include <sstream>

namespace starconf {

Monomial::Monomial(std::span<const int> exponents) {
  if (exponents.size() > static_cast<std::size_t>(kMaxVars))
    throw ParameterError("at most " + std::to_string(kMaxVars) + " variables are supported");
  for (std::size_t k = 0; k < exponents.size(); ++k) {
    if (exponents[k] < 0 || exponents[k] > 255) throw ParameterError("exponent out of range [0, 255]");
    exps_[k] = static_cast<std::uint8_t>(exponents[k]);
    degree_ += exponents[k];
  }
}

Monomial Monomial::variable(int k) {
  if (k < 0 || k >= kMaxVars) throw ParameterError("variable index out of range");
  Monomial m;
  m.exps_[static_cast<std::size_t>(k)] = 1;
  m.degree_ = 1;
  return m;
}

std::uint64_t Monomial::key() const noexcept {
  std::uint64_t k;
  static_assert(sizeof(k) == kMaxVars);
  std::memcpy(&k, exps_.data(), sizeof(k));
  return k;
}

std::vector<int> Monomial::exponents(int num_vars) const {
  return std::vector<int>(exps_.begin(), exps_.begin() + num_vars);
}

Monomial operator*(const Monomial& a, const Monomial& b) {
  Monomial m;
  for (std::size_t k = 0; k < kMaxVars; ++k) {
    int e = a.exps_[k] + b.exps_[k];
    if (e > 255) throw ParameterError("exponent overflow in monomial product");
    m.exps_[k] = static_cast<std::uint8_t>(e);
  }
  m.degree_ = a.degree_ + b.degree_;
  return m;
}

bool grevlex_greater(const Monomial& a, const Monomial& b) noexcept {
  if (a.degree() != b.degree()) return a.degree() > b.degree();
  for (int k = kMaxVars - 1; k >= 0; --k) {
    if (a.exponent(k) != b.exponent(k)) return a.exponent(k) < b.exponent(k);
  }
  return false;
}

std::size_t MonomialBasis::index_of(const Monomial& m) const {
  auto it = index.find(m.key());
  if (it == index.end() || m.degree() != degree) throw DimensionError("monomial not in basis of degree " + std::to_string(degree));
  return it->second;
}

std::uint64_t binomial(std::int64_t n, std::int64_t k) {
  if (k < 0 || n < 0 || k > n) return 0;
  k = std::min(k, n - k);
  std::uint64_t r = 1;
  for (std::int64_t i = 1; i <= k; ++i) r = r * static_cast<std::uint64_t>(n - k + i) / static_cast<std::uint64_t>(i);
  return r;
}

// ---------------------------------------------------------------------------

struct RingContext::Cache {
  std::mutex mu;
  std::map<int, std::unique_ptr<MonomialBasis>> bases;
};

RingContext::RingContext(int n, std::uint32_t prime) : n_(n), field_(prime), cache_(std::make_shared<Cache>()) {
  if (n < 1 || n + 1 > kMaxVars)
    throw ParameterError("ambient dimension n must be in [1, " + std::to_string(kMaxVars - 1) + "]");
}

namespace {

void enumerate(int var, int num_vars, int remaining, std::vector<int>& exps, std::vector<Monomial>& out) {
  if (var == num_vars - 1) {
    exps[static_cast<std::size_t>(var)] = remaining;
    out.emplace_back(std::span<const int>(exps));
    return;
  }
  for (int e = remaining; e >= 0; --e) {
    exps[static_cast<std::size_t>(var)] = e;
    enumerate(var + 1, num_vars, remaining - e, exps, out);
  }
}

}  // namespace

const MonomialBasis& RingContext::basis(int t) const {
  if (t < 0) throw ParameterError("negative degree");
  std::lock_guard lock(cache_->mu);
  auto& slot = cache_->bases[t];
  if (!slot) {
    auto b = std::make_unique<MonomialBasis>();
    b->degree = t;
    std::vector<int> exps(static_cast<std::size_t>(num_vars()), 0);
    enumerate(0, num_vars(), t, exps, b->monomials);
    std::sort(b->monomials.begin(), b->monomials.end(), grevlex_greater);
    b->index.reserve(b->monomials.size());
    for (std::size_t i = 0; i < b->monomials.size(); ++i) b->index.emplace(b->monomials[i].key(), i);
    slot = std::move(b);
  }
  return *slot;
}

std::vector<Monomial> monomial_basis(const RingContext& ctx, int t) { return ctx.basis(t).monomials; }

// ---------------------------------------------------------------------------

HomogeneousForm::HomogeneousForm(RingContext ctx, int degree) : ctx_(std::move(ctx)), degree_(degree) {
  if (degree < 0) throw ParameterError("form degree must be nonnegative");
}

HomogeneousForm HomogeneousForm::monomial(const RingContext& ctx, const Monomial& m, Scalar c) {
  HomogeneousForm f(ctx, m.degree());
  f.add_term(m, c);
  return f;
}

HomogeneousForm HomogeneousForm::constant(const RingContext& ctx, Scalar c) { return monomial(ctx, Monomial{}, c); }

HomogeneousForm HomogeneousForm::variable(const RingContext& ctx, int k) {
  if (k < 0 || k >= ctx.num_vars()) throw ParameterError("variable index out of range");
  return monomial(ctx, Monomial::variable(k));
}

HomogeneousForm HomogeneousForm::linear(const RingContext& ctx, std::span<const Scalar> coeffs) {
  if (coeffs.size() != static_cast<std::size_t>(ctx.num_vars())) throw DimensionError("linear form needs one coefficient per variable");
  HomogeneousForm f(ctx, 1);
  for (int k = 0; k < ctx.num_vars(); ++k) f.add_term(Monomial::variable(k), coeffs[static_cast<std::size_t>(k)]);
  return f;
}

Scalar HomogeneousForm::coefficient(const Monomial& m) const {
  auto it = terms_.find(m);
  return it == terms_.end() ? 0 : it->second;
}

void HomogeneousForm::add_term(const Monomial& m, Scalar c) {
  if (m.degree() != degree_) throw DimensionError("term degree does not match form degree");
  for (int k = ctx_.num_vars(); k < kMaxVars; ++k)
    if (m.exponent(k) != 0) throw DimensionError("monomial uses a variable outside the ring");
  c = ctx_.field().reduce(c);
  if (c == 0) return;
  auto [it, inserted] = terms_.try_emplace(m, c);
  if (!inserted) {
    it->second = ctx_.field().add(it->second, c);
    if (it->second == 0) terms_.erase(it);
  }
}

HomogeneousForm multiply(const HomogeneousForm& f, const HomogeneousForm& g) {
  if (!(f.ctx() == g.ctx())) throw ContextMismatch("multiply: forms live in different rings");
  const PrimeField& F = f.ctx().field();
  HomogeneousForm out(f.ctx(), f.degree() + g.degree());
  for (const auto& [mf, cf] : f.terms())
    for (const auto& [mg, cg] : g.terms()) out.add_term(mf * mg, F.mul(cf, cg));
  return out;
}

HomogeneousForm add(const HomogeneousForm& f, const HomogeneousForm& g) {
  if (!(f.ctx() == g.ctx())) throw ContextMismatch("add: forms live in different rings");
  if (f.degree() != g.degree()) throw DimensionError("add: degrees differ");
  HomogeneousForm out = f;
  for (const auto& [m, c] : g.terms()) out.add_term(m, c);
  return out;
}

HomogeneousForm scale(const HomogeneousForm& f, Scalar c) {
  HomogeneousForm out(f.ctx(), f.degree());
  for (const auto& [m, a] : f.terms()) out.add_term(m, f.ctx().field().mul(a, c));
  return out;
}

HomogeneousForm product(std::span<const HomogeneousForm> factors, const RingContext& ctx) {
  HomogeneousForm out = HomogeneousForm::constant(ctx, 1);
  for (const auto& f : factors) out = multiply(out, f);
  return out;
}

HomogeneousForm random_form(const RingContext& ctx, int d, SplitRng& rng) {
  if (d < 1) throw ParameterError("random forms need degree >= 1");
  const auto& basis = ctx.basis(d);
  for (;;) {
    HomogeneousForm f(ctx, d);
    for (const auto& m : basis.monomials) f.add_term(m, static_cast<Scalar>(rng.uniform(ctx.field().modulus())));
    if (!f.is_zero()) return f;
  }
}

std::vector<Scalar> coordinate_vector(const HomogeneousForm& f, int t) {
  if (f.degree() != t) throw DimensionError("coordinate_vector: form has degree " + std::to_string(f.degree()) + ", asked for " + std::to_string(t));
  const auto& basis = f.ctx().basis(t);
  std::vector<Scalar> v(basis.size(), 0);
  for (const auto& [m, c] : f.terms()) v[basis.index_of(m)] = c;
  return v;
}

HomogeneousForm from_coordinates(const RingContext& ctx, int t, std::span<const Scalar> v) {
  const auto& basis = ctx.basis(t);
  if (v.size() != basis.size()) throw DimensionError("from_coordinates: vector length does not match dim R_t");
  HomogeneousForm f(ctx, t);
  for (std::size_t i = 0; i < v.size(); ++i) f.add_term(basis.monomials[i], v[i]);
  return f;
}

std::vector<std::vector<Scalar>> multiplication_images(const HomogeneousForm& g, int t) {
  const RingContext& ctx = g.ctx();
  const auto& src = ctx.basis(t);
  const auto& dst = ctx.basis(t + g.degree());
  std::vector<std::vector<Scalar>> images(src.size(), std::vector<Scalar>(dst.size(), 0));
  for (std::size_t i = 0; i < src.size(); ++i)
    for (const auto& [m, c] : g.terms()) images[i][dst.index_of(src.monomials[i] * m)] = c;
  return images;
}

// ---------------------------------------------------------------------------

std::string to_text(const HomogeneousForm& f) {
  if (f.is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [m, c] : f.terms()) {
    if (!first) os << " + ";
    first = false;
    os << c;
    for (int k = 0; k < f.ctx().num_vars(); ++k) {
      if (m.exponent(k) == 0) continue;
      os << " * x" << k << '^' << m.exponent(k);
    }
  }
  return os.str();
}

namespace {

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

std::int64_t parse_int(std::string_view s, std::string_view what) {
  s = trim(s);
  if (s.empty()) throw ParameterError("empty " + std::string(what));
  bool negative = false;
  if (s.front() == '-') {
    negative = true;
    s.remove_prefix(1);
  }
  std::int64_t v = 0;
  for (char ch : s) {
    if (!std::isdigit(static_cast<unsigned char>(ch))) throw ParameterError("bad " + std::string(what) + ": '" + std::string(s) + "'");
    v = v * 10 + (ch - '0');
    if (v > (std::int64_t{1} << 40)) throw ParameterError(std::string(what) + " too large");
  }
  return negative ? -v : v;
}

}  // namespace

HomogeneousForm parse_form(const RingContext& ctx, std::string_view text, int zero_degree) {
  struct Term {
    std::vector<int> exps;
    std::int64_t coeff;
  };
  std::vector<Term> terms;
  std::size_t start = 0;
  while (start <= text.size()) {
    std::size_t plus = text.find('+', start);
    std::string_view term = trim(text.substr(start, plus == std::string_view::npos ? std::string_view::npos : plus - start));
    if (term.empty()) throw ParameterError("empty term in form '" + std::string(text) + "'");
    Term t{std::vector<int>(static_cast<std::size_t>(ctx.num_vars()), 0), 1};
    std::size_t fs = 0;
    while (fs <= term.size()) {
      std::size_t star = term.find('*', fs);
      std::string_view factor = trim(term.substr(fs, star == std::string_view::npos ? std::string_view::npos : star - fs));
      if (factor.empty()) throw ParameterError("empty factor in term '" + std::string(term) + "'");
      if (factor.front() == 'x') {
        std::size_t caret = factor.find('^');
        std::int64_t var = parse_int(factor.substr(1, caret == std::string_view::npos ? std::string_view::npos : caret - 1), "variable index");
        std::int64_t e = caret == std::string_view::npos ? 1 : parse_int(factor.substr(caret + 1), "exponent");
        if (var < 0 || var >= ctx.num_vars()) throw ParameterError("variable x" + std::to_string(var) + " not in ring");
        if (e < 0) throw ParameterError("negative exponent");
        t.exps[static_cast<std::size_t>(var)] += static_cast<int>(e);
      } else {
        t.coeff *= parse_int(factor, "coefficient");
      }
      if (star == std::string_view::npos) break;
      fs = star + 1;
    }
    terms.push_back(std::move(t));
    if (plus == std::string_view::npos) break;
    start = plus + 1;
  }

  int degree = -1;
  for (const auto& t : terms) {
    if (t.coeff == 0 && terms.size() == 1) break;
    int d = 0;
    for (int e : t.exps) d += e;
    if (degree >= 0 && d != degree) throw ParameterError("form is not homogeneous: '" + std::string(text) + "'");
    degree = d;
  }
  HomogeneousForm f(ctx, degree < 0 ? zero_degree : degree);
  for (const auto& t : terms) {
    if (t.coeff == 0) continue;
    f.add_term(Monomial(std::span<const int>(t.exps)), ctx.field().from_int(t.coeff));
  }
  return f;
}

nlohmann::json to_json(const HomogeneousForm& f) {
  nlohmann::json arr = nlohmann::json::array();
  for (const auto& [m, c] : f.terms()) arr.push_back({m.exponents(f.ctx().num_vars()), c});
  return arr;
}

HomogeneousForm form_from_json(const RingContext& ctx, const nlohmann::json& j, int zero_degree) {
  if (j.is_string()) return parse_form(ctx, j.get<std::string>(), zero_degree);
  if (!j.is_array()) throw ParameterError("form JSON must be an array of [exponents, coefficient] pairs or a string");
  if (j.empty()) return HomogeneousForm(ctx, zero_degree);
  int degree = -1;
  std::vector<std::pair<std::vector<int>, std::int64_t>> terms;
  for (const auto& term : j) {
    if (!term.is_array() || term.size() != 2) throw ParameterError("form term must be [exponents, coefficient]");
    auto exps = term[0].get<std::vector<int>>();
    if (exps.size() != static_cast<std::size_t>(ctx.num_vars())) throw ParameterError("exponent vector length must equal the number of variables");
    int d = 0;
    for (int e : exps) {
      if (e < 0) throw ParameterError("negative exponent");
      d += e;
    }
    if (degree >= 0 && d != degree) throw ParameterError("form is not homogeneous");
    degree = d;
    terms.emplace_back(std::move(exps), term[1].get<std::int64_t>());
  }
  HomogeneousForm f(ctx, degree);
  for (const auto& [exps, c] : terms) f.add_term(Monomial(std::span<const int>(exps)), ctx.field().from_int(c));
  return f;
}

}  // namespace starconf
