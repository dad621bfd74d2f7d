#pragma once

#include <array>
#include <cstdint>
#include <map>
#include <memory>
#include <span>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include <nlohmann/json.hpp>

#include "starconf/field.hpp"
#include "starconf/rng.hpp"

namespace starconf {

inline constexpr int kMaxVars = 8;

class Monomial {
 public:
  Monomial() = default;
  explicit Monomial(std::span<const int> exponents);
  static Monomial variable(int k);

  int exponent(int k) const noexcept { return exps_[static_cast<std::size_t>(k)]; }
  int degree() const noexcept { return degree_; }
  std::uint64_t key() const noexcept;
  std::vector<int> exponents(int num_vars) const;

  friend Monomial operator*(const Monomial& a, const Monomial& b);
  friend bool operator==(const Monomial& a, const Monomial& b) noexcept { return a.exps_ == b.exps_; }

 private:
  std::array<std::uint8_t, kMaxVars> exps_{};
  int degree_ = 0;
};

/// Graded reverse lexicographic order with x0 > x1 > ... > xn.
bool grevlex_greater(const Monomial& a, const Monomial& b) noexcept;

struct GrevlexDescending {
  bool operator()(const Monomial& a, const Monomial& b) const noexcept { return grevlex_greater(a, b); }
};

/// All monomials of one degree, grevlex-descending, with a reverse index.
struct MonomialBasis {
  int degree = 0;
  std::vector<Monomial> monomials;
  std::unordered_map<std::uint64_t, std::size_t> index;

  std::size_t size() const noexcept { return monomials.size(); }
  std::size_t index_of(const Monomial& m) const;
};

std::uint64_t binomial(std::int64_t n, std::int64_t k);

/// k[x0..xn] over F_p. Copies share one monomial-basis cache.
class RingContext {
 public:
  explicit RingContext(int n, std::uint32_t prime = kDefaultPrime);

  int n() const noexcept { return n_; }
  int num_vars() const noexcept { return n_ + 1; }
  const PrimeField& field() const noexcept { return field_; }

  /// Cached; the reference stays valid for the lifetime of any copy of this context.
  const MonomialBasis& basis(int t) const;
  /// dim R_t = C(t+n, n); zero for t < 0.
  std::size_t dim(int t) const { return t < 0 ? 0 : static_cast<std::size_t>(binomial(t + n_, n_)); }

  friend bool operator==(const RingContext& a, const RingContext& b) noexcept {
    return a.n_ == b.n_ && a.field_ == b.field_;
  }

 private:
  struct Cache;
  int n_;
  PrimeField field_;
  std::shared_ptr<Cache> cache_;
};

std::vector<Monomial> monomial_basis(const RingContext& ctx, int t);

class HomogeneousForm {
 public:
  using Terms = std::map<Monomial, Scalar, GrevlexDescending>;

  HomogeneousForm(RingContext ctx, int degree);

  static HomogeneousForm monomial(const RingContext& ctx, const Monomial& m, Scalar c = 1);
  static HomogeneousForm constant(const RingContext& ctx, Scalar c);
  static HomogeneousForm variable(const RingContext& ctx, int k);
  /// sum_k coeffs[k] * x_k
  static HomogeneousForm linear(const RingContext& ctx, std::span<const Scalar> coeffs);

  const RingContext& ctx() const noexcept { return ctx_; }
  int degree() const noexcept { return degree_; }
  const Terms& terms() const noexcept { return terms_; }
  bool is_zero() const noexcept { return terms_.empty(); }
  Scalar coefficient(const Monomial& m) const;

  /// Adds c * m; m must have the form's degree.
  void add_term(const Monomial& m, Scalar c);

  friend bool operator==(const HomogeneousForm& a, const HomogeneousForm& b) {
    return a.degree_ == b.degree_ && a.ctx_ == b.ctx_ && a.terms_ == b.terms_;
  }

 private:
  RingContext ctx_;
  int degree_;
  Terms terms_;
};

HomogeneousForm multiply(const HomogeneousForm& f, const HomogeneousForm& g);
HomogeneousForm add(const HomogeneousForm& f, const HomogeneousForm& g);
HomogeneousForm scale(const HomogeneousForm& f, Scalar c);
HomogeneousForm product(std::span<const HomogeneousForm> factors, const RingContext& ctx);

/// Uniform coefficients on every degree-d monomial, resampled while identically zero.
HomogeneousForm random_form(const RingContext& ctx, int d, SplitRng& rng);

/// Coordinates in monomial_basis(ctx, t); throws DimensionError unless deg f == t.
std::vector<Scalar> coordinate_vector(const HomogeneousForm& f, int t);
HomogeneousForm from_coordinates(const RingContext& ctx, int t, std::span<const Scalar> v);
/// Dense matrix of multiplication by a form of degree e, R_t -> R_{t+e}, as a list of images.
std::vector<std::vector<Scalar>> multiplication_images(const HomogeneousForm& g, int t);

// Text format: "c * x0^a0 * x2^a2 + ..."; "0" is the zero form.
std::string to_text(const HomogeneousForm& f);
/// `zero_degree` is the degree given to a parsed zero form.
HomogeneousForm parse_form(const RingContext& ctx, std::string_view text, int zero_degree = 0);

// JSON format: [[[a0, ..., an], c], ...]
nlohmann::json to_json(const HomogeneousForm& f);
HomogeneousForm form_from_json(const RingContext& ctx, const nlohmann::json& j, int zero_degree = 0);

}  // namespace starconf
