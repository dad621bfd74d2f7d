#pragma once

#include <cstdint>
#include <memory>
#include <span>
#include <vector>

#include "starconf/linalg.hpp"
#include "starconf/polyring.hpp"

namespace starconf {

/// I_t as a subspace of R_t (coordinates in monomial_basis(ctx, t)).
struct IdealSlice {
  int degree = 0;
  SubspaceBasis subspace;

  std::size_t dim() const noexcept { return subspace.dim(); }
  friend bool operator==(const IdealSlice&, const IdealSlice&) = default;
};

struct HilbertFunction {
  std::vector<std::int64_t> values;  // values[t] = H(t)

  std::int64_t operator()(int t) const { return t < 0 ? 0 : values.at(static_cast<std::size_t>(t)); }
  int t_max() const noexcept { return static_cast<int>(values.size()) - 1; }
  friend bool operator==(const HilbertFunction&, const HilbertFunction&) = default;
};

class QuotientSlice;

/// A homogeneous ideal given by generators, studied one degree at a time.
///
/// Generators are nonzero forms; a degree-0 generator makes the ideal the
/// unit ideal. Slices are cached and the cache is shared between copies.
class GradedIdeal {
 public:
  GradedIdeal(RingContext ctx, std::vector<HomogeneousForm> generators);
  static GradedIdeal zero(const RingContext& ctx) { return GradedIdeal(ctx, {}); }
  static GradedIdeal unit(const RingContext& ctx) { return GradedIdeal(ctx, {HomogeneousForm::constant(ctx, 1)}); }

  const RingContext& ctx() const noexcept { return ctx_; }
  const std::vector<HomogeneousForm>& generators() const noexcept { return generators_; }

  const IdealSlice& slice(int t) const;
  const QuotientSlice& quotient(int t) const;

 private:
  struct Cache;
  RingContext ctx_;
  std::vector<HomogeneousForm> generators_;
  std::shared_ptr<Cache> cache_;
};

/// (R/I)_t in standard-monomial coordinates: the monomials whose columns are
/// not pivots of the reduced slice.
class QuotientSlice {
 public:
  QuotientSlice(const PrimeField& field, std::shared_ptr<const IdealSlice> slice);

  int degree() const noexcept { return degree_; }
  std::size_t dim() const noexcept { return standard_.size(); }
  /// Indices into monomial_basis(ctx, t).
  const std::vector<std::size_t>& standard_columns() const noexcept { return standard_; }

  /// out += c * [monomial column col] in quotient coordinates.
  void accumulate_monomial(std::size_t col, Scalar c, std::span<Scalar> out) const;
  /// Coordinates of the class of v in R_t.
  std::vector<Scalar> reduce(std::span<const Scalar> v) const;

 private:
  PrimeField field_;
  int degree_;
  std::shared_ptr<const IdealSlice> slice_;
  std::vector<std::size_t> standard_;
  std::vector<std::ptrdiff_t> quotient_index_;  // per column: index in standard_ or -1
  std::vector<std::ptrdiff_t> pivot_row_;       // per column: rref row or -1
};

IdealSlice slice(const GradedIdeal& I, int t);
std::int64_t hilbert(const GradedIdeal& I, int t);
HilbertFunction hf_sequence(const GradedIdeal& I, int t_max);

GradedIdeal ideal_sum(const GradedIdeal& I, const GradedIdeal& J);
IdealSlice sum_slice(const GradedIdeal& I, const GradedIdeal& J, int t);
/// Degree-t part of the intersection of a nonempty family of ideals.
IdealSlice intersection_slice(std::span<const GradedIdeal> ideals, int t);
/// H(R / (I_1 ∩ ... ∩ I_k)) for t = 0..t_max.
HilbertFunction intersection_hf(std::span<const GradedIdeal> ideals, int t_max);

std::vector<Monomial> quotient_basis(const GradedIdeal& I, int t);

/// Images of the quotient basis of (R/I)_t under multiplication by g, in
/// quotient coordinates of degree t + deg g. One vector per source basis element.
std::vector<std::vector<Scalar>> quotient_mult_images(const GradedIdeal& I, const HomogeneousForm& g, int t);
/// Matrix of x L : (R/I)_t -> (R/I)_{t+1}; rows index the target basis.
DenseMatrix quotient_mult_map(const GradedIdeal& I, const HomogeneousForm& L, int t);

bool slices_equal(const GradedIdeal& I, const GradedIdeal& J, int t);
/// True iff every generator of I of degree <= t_max lies in J (slicewise I ⊆ J up to t_max).
bool contained_in(const GradedIdeal& I, const GradedIdeal& J, int t_max);

}  // namespace starconf
