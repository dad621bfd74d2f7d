#include "starconf/graded_ideal.hpp"

#include <map>
#include <mutex>

namespace starconf {

struct GradedIdeal::Cache {
  std::mutex mu;
  std::map<int, std::shared_ptr<const IdealSlice>> slices;
  std::map<int, std::unique_ptr<QuotientSlice>> quotients;
};

GradedIdeal::GradedIdeal(RingContext ctx, std::vector<HomogeneousForm> generators)
    : ctx_(std::move(ctx)), generators_(std::move(generators)), cache_(std::make_shared<Cache>()) {
  for (const auto& g : generators_) {
    if (!(g.ctx() == ctx_)) throw ContextMismatch("ideal generator lives in a different ring");
    if (g.is_zero()) throw ParameterError("ideal generators must be nonzero");
  }
}

namespace {

std::shared_ptr<const IdealSlice> compute_slice(const RingContext& ctx, const std::vector<HomogeneousForm>& gens, int t) {
  const auto& target = ctx.basis(t);
  RowReducer red(ctx.field(), target.size());
  std::vector<Scalar> row(target.size());
  for (const auto& g : gens) {
    if (g.degree() > t) continue;
    const auto& multipliers = ctx.basis(t - g.degree());
    for (const auto& m : multipliers.monomials) {
      if (red.full()) break;
      std::fill(row.begin(), row.end(), 0);
      for (const auto& [gm, c] : g.terms()) row[target.index_of(m * gm)] = c;
      red.insert(row);
    }
  }
  return std::make_shared<const IdealSlice>(IdealSlice{t, std::move(red).finish()});
}

}  // namespace

const IdealSlice& GradedIdeal::slice(int t) const {
  if (t < 0) throw ParameterError("negative degree");
  {
    std::lock_guard lock(cache_->mu);
    auto it = cache_->slices.find(t);
    if (it != cache_->slices.end()) return *it->second;
  }
  auto computed = compute_slice(ctx_, generators_, t);
  std::lock_guard lock(cache_->mu);
  auto [it, inserted] = cache_->slices.try_emplace(t, std::move(computed));
  return *it->second;
}

const QuotientSlice& GradedIdeal::quotient(int t) const {
  slice(t);
  std::lock_guard lock(cache_->mu);
  auto& q = cache_->quotients[t];
  if (!q) q = std::make_unique<QuotientSlice>(ctx_.field(), cache_->slices.at(t));
  return *q;
}

// ---------------------------------------------------------------------------

QuotientSlice::QuotientSlice(const PrimeField& field, std::shared_ptr<const IdealSlice> slice)
    : field_(field), degree_(slice->degree), slice_(std::move(slice)) {
  const SubspaceBasis& s = slice_->subspace;
  const std::size_t n = s.ambient_dim();
  quotient_index_.assign(n, -1);
  pivot_row_.assign(n, -1);
  for (std::size_t i = 0; i < s.pivots().size(); ++i) pivot_row_[s.pivots()[i]] = static_cast<std::ptrdiff_t>(i);
  for (std::size_t c = 0; c < n; ++c) {
    if (pivot_row_[c] >= 0) continue;
    quotient_index_[c] = static_cast<std::ptrdiff_t>(standard_.size());
    standard_.push_back(c);
  }
}

void QuotientSlice::accumulate_monomial(std::size_t col, Scalar c, std::span<Scalar> out) const {
  if (c == 0) return;
  if (quotient_index_[col] >= 0) {
    auto q = static_cast<std::size_t>(quotient_index_[col]);
    out[q] = field_.add(out[q], c);
    return;
  }
  // x_col = -(sum of the rref row off its pivot) modulo I_t
  auto row = slice_->subspace.basis().row(static_cast<std::size_t>(pivot_row_[col]));
  const Scalar minus_c = field_.neg(c);
  for (std::size_t q = 0; q < standard_.size(); ++q) {
    Scalar a = row[standard_[q]];
    if (a != 0) out[q] = field_.add(out[q], field_.mul(minus_c, a));
  }
}

std::vector<Scalar> QuotientSlice::reduce(std::span<const Scalar> v) const {
  if (v.size() != quotient_index_.size()) throw DimensionError("vector length does not match dim R_t");
  std::vector<Scalar> out(dim(), 0);
  for (std::size_t c = 0; c < v.size(); ++c) accumulate_monomial(c, v[c], out);
  return out;
}

// ---------------------------------------------------------------------------

IdealSlice slice(const GradedIdeal& I, int t) { return I.slice(t); }

std::int64_t hilbert(const GradedIdeal& I, int t) {
  return static_cast<std::int64_t>(I.ctx().dim(t)) - static_cast<std::int64_t>(I.slice(t).dim());
}

HilbertFunction hf_sequence(const GradedIdeal& I, int t_max) {
  if (t_max < 0) throw ParameterError("t_max must be nonnegative");
  HilbertFunction h;
  for (int t = 0; t <= t_max; ++t) h.values.push_back(hilbert(I, t));
  return h;
}

GradedIdeal ideal_sum(const GradedIdeal& I, const GradedIdeal& J) {
  if (!(I.ctx() == J.ctx())) throw ContextMismatch("ideal sum: different rings");
  std::vector<HomogeneousForm> gens = I.generators();
  gens.insert(gens.end(), J.generators().begin(), J.generators().end());
  return GradedIdeal(I.ctx(), std::move(gens));
}

IdealSlice sum_slice(const GradedIdeal& I, const GradedIdeal& J, int t) {
  if (!(I.ctx() == J.ctx())) throw ContextMismatch("sum_slice: different rings");
  return IdealSlice{t, sum_bases(I.ctx().field(), I.slice(t).subspace, J.slice(t).subspace)};
}

IdealSlice intersection_slice(std::span<const GradedIdeal> ideals, int t) {
  if (ideals.empty()) throw ParameterError("intersection_slice needs at least one ideal");
  std::vector<SubspaceBasis> spaces;
  spaces.reserve(ideals.size());
  for (const auto& I : ideals) {
    if (!(I.ctx() == ideals.front().ctx())) throw ContextMismatch("intersection_slice: different rings");
    spaces.push_back(I.slice(t).subspace);
  }
  return IdealSlice{t, intersect_all(ideals.front().ctx().field(), spaces)};
}

HilbertFunction intersection_hf(std::span<const GradedIdeal> ideals, int t_max) {
  HilbertFunction h;
  for (int t = 0; t <= t_max; ++t) {
    auto s = intersection_slice(ideals, t);
    h.values.push_back(static_cast<std::int64_t>(ideals.front().ctx().dim(t)) - static_cast<std::int64_t>(s.dim()));
  }
  return h;
}

std::vector<Monomial> quotient_basis(const GradedIdeal& I, int t) {
  const auto& q = I.quotient(t);
  const auto& basis = I.ctx().basis(t);
  std::vector<Monomial> out;
  out.reserve(q.dim());
  for (std::size_t c : q.standard_columns()) out.push_back(basis.monomials[c]);
  return out;
}

std::vector<std::vector<Scalar>> quotient_mult_images(const GradedIdeal& I, const HomogeneousForm& g, int t) {
  if (!(I.ctx() == g.ctx())) throw ContextMismatch("quotient_mult_images: different rings");
  const RingContext& ctx = I.ctx();
  const auto& src = I.quotient(t);
  const auto& dst = I.quotient(t + g.degree());
  const auto& src_basis = ctx.basis(t);
  const auto& dst_basis = ctx.basis(t + g.degree());
  std::vector<std::vector<Scalar>> images;
  images.reserve(src.dim());
  for (std::size_t c : src.standard_columns()) {
    std::vector<Scalar> img(dst.dim(), 0);
    for (const auto& [m, coeff] : g.terms()) dst.accumulate_monomial(dst_basis.index_of(src_basis.monomials[c] * m), coeff, img);
    images.push_back(std::move(img));
  }
  return images;
}

DenseMatrix quotient_mult_map(const GradedIdeal& I, const HomogeneousForm& L, int t) {
  if (L.degree() != 1) throw ParameterError("quotient_mult_map needs a linear form");
  auto images = quotient_mult_images(I, L, t);
  const std::size_t target = I.quotient(t + 1).dim();
  DenseMatrix m(target, images.size());
  for (std::size_t j = 0; j < images.size(); ++j)
    for (std::size_t i = 0; i < target; ++i) m(i, j) = images[j][i];
  return m;
}

bool slices_equal(const GradedIdeal& I, const GradedIdeal& J, int t) {
  if (!(I.ctx() == J.ctx())) throw ContextMismatch("slices_equal: different rings");
  return I.slice(t) == J.slice(t);
}

bool contained_in(const GradedIdeal& I, const GradedIdeal& J, int t_max) {
  if (!(I.ctx() == J.ctx())) throw ContextMismatch("contained_in: different rings");
  for (const auto& g : I.generators()) {
    if (g.degree() > t_max) continue;
    if (!J.slice(g.degree()).subspace.contains(I.ctx().field(), coordinate_vector(g, g.degree()))) return false;
  }
  return true;
}

}  // namespace starconf
