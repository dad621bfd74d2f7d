#include "starconf/resolution.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <sstream>

#include "starconf/star_config.hpp"

namespace starconf {

std::int64_t BettiTable::at(int l, int j) const {
  auto it = entries.find({l, j});
  return it == entries.end() ? 0 : it->second;
}

std::int64_t BettiTable::rank(int l) const {
  std::int64_t total = 0;
  for (const auto& [key, mult] : entries)
    if (key.first == l) total += mult;
  return total;
}

void BettiTable::add(int l, int j, std::int64_t mult) {
  if (mult == 0) return;
  entries[{l, j}] += mult;
  length = std::max(length, l);
}

std::int64_t KoszulBetti::at(int i, int j) const {
  auto it = entries.find({i, j});
  return it == entries.end() ? 0 : it->second;
}

std::int64_t alpha(int r, int s, int l) {
  if (l < 1 || l > r) throw ParameterError("alpha: step out of range");
  return static_cast<std::int64_t>(binomial(s - r + l - 1, l - 1));
}

BettiTable predict_betti(int r, std::span<const int> degrees) {
  const int s = static_cast<int>(degrees.size());
  if (r < 1) throw ParameterError("predict_betti needs r >= 1");
  if (r > s) throw ParameterError("predict_betti needs r <= s");
  const int d = std::accumulate(degrees.begin(), degrees.end(), 0);
  BettiTable bt;
  bt.length = r;
  for (int l = 1; l <= r; ++l) {
    const std::int64_t a = alpha(r, s, l);
    for (const auto& idx : subsets(s, r - l)) {
      int shift = d;
      for (int i : idx) shift -= degrees[static_cast<std::size_t>(i)];
      bt.add(l, shift, a);
    }
  }
  return bt;
}

KoszulBetti koszul_betti(const GradedIdeal& I, int i_max, int j_max) {
  if (i_max < 0 || j_max < 0) throw ParameterError("koszul_betti bounds must be nonnegative");
  const RingContext& ctx = I.ctx();
  const int nv = ctx.num_vars();
  const PrimeField& field = ctx.field();

  std::vector<std::int64_t> h(static_cast<std::size_t>(j_max) + 2);
  for (int t = 0; t <= j_max + 1; ++t) h[static_cast<std::size_t>(t)] = hilbert(I, t);
  auto hq = [&](int t) -> std::size_t { return t < 0 ? 0 : static_cast<std::size_t>(h[static_cast<std::size_t>(t)]); };

  // x_k : A_t -> A_{t+1} in standard-monomial coordinates, built on demand.
  std::map<int, std::vector<std::vector<std::vector<Scalar>>>> var_images;
  auto images = [&](int t) -> const std::vector<std::vector<std::vector<Scalar>>>& {
    auto& slot = var_images[t];
    if (slot.empty())
      for (int k = 0; k < nv; ++k) slot.push_back(quotient_mult_images(I, HomogeneousForm::variable(ctx, k), t));
    return slot;
  };

  // Exterior basis: subsets of the variables, indexed by bitmask.
  std::vector<std::vector<std::vector<int>>> wedge(static_cast<std::size_t>(nv) + 1);
  std::vector<std::size_t> wedge_index(std::size_t{1} << nv, 0);
  for (int i = 0; i <= nv; ++i) {
    wedge[static_cast<std::size_t>(i)] = subsets(nv, i);
    for (std::size_t pos = 0; pos < wedge[static_cast<std::size_t>(i)].size(); ++pos) {
      unsigned mask = 0;
      for (int k : wedge[static_cast<std::size_t>(i)][pos]) mask |= 1u << k;
      wedge_index[mask] = pos;
    }
  }

  // Rank of d_i : wedge^i ⊗ A_{j-i} -> wedge^{i-1} ⊗ A_{j-i+1}.
  auto differential_rank = [&](int i, int j) -> std::size_t {
    if (i < 1 || i > nv) return 0;
    const int src_t = j - i;
    const std::size_t hs = hq(src_t), ht = hq(src_t + 1);
    if (hs == 0 || ht == 0) return 0;
    const auto& imgs = images(src_t);
    const std::size_t width = wedge[static_cast<std::size_t>(i - 1)].size() * ht;
    RowReducer red(field, width);
    std::vector<Scalar> v(width);
    for (const auto& S : wedge[static_cast<std::size_t>(i)]) {
      unsigned mask = 0;
      for (int k : S) mask |= 1u << k;
      for (std::size_t q = 0; q < hs && !red.full(); ++q) {
        std::fill(v.begin(), v.end(), 0);
        for (std::size_t p = 0; p < S.size(); ++p) {
          const int k = S[p];
          const std::size_t base = wedge_index[mask & ~(1u << k)] * ht;
          const auto& img = imgs[static_cast<std::size_t>(k)][q];
          const bool negative = p % 2 == 1;
          for (std::size_t c = 0; c < ht; ++c) v[base + c] = negative ? field.neg(img[c]) : img[c];
        }
        red.insert(v);
      }
    }
    return red.rank();
  };

  KoszulBetti out;
  out.i_max = i_max;
  out.j_max = j_max;
  const int top = std::min(i_max, nv);
  for (int j = 0; j <= j_max; ++j) {
    std::vector<std::size_t> ranks(static_cast<std::size_t>(top) + 2, 0);
    for (int i = 1; i <= top + 1; ++i) ranks[static_cast<std::size_t>(i)] = differential_rank(i, j);
    for (int i = 0; i <= top; ++i) {
      const auto chain_dim = static_cast<std::int64_t>(binomial(nv, i) * hq(j - i));
      const std::int64_t homology = chain_dim - static_cast<std::int64_t>(ranks[static_cast<std::size_t>(i)]) -
                                    static_cast<std::int64_t>(ranks[static_cast<std::size_t>(i) + 1]);
      if (homology != 0) out.entries[{i, j}] = homology;
    }
  }
  return out;
}

bool tables_match(const BettiTable& predicted, const KoszulBetti& oracle) {
  int max_shift = 0;
  for (const auto& [key, mult] : predicted.entries) max_shift = std::max(max_shift, key.second);
  if (oracle.i_max < predicted.length || oracle.j_max < max_shift)
    throw ParameterError("tables_match: oracle bounds (i_max=" + std::to_string(oracle.i_max) + ", j_max=" + std::to_string(oracle.j_max) +
                         ") do not cover the predicted table");
  for (int l = 1; l <= oracle.i_max; ++l)
    for (int j = 0; j <= oracle.j_max; ++j) {
      const std::int64_t want = l <= predicted.length ? predicted.at(l, j) : 0;
      if (oracle.at(l, j) != want) return false;
    }
  return true;
}

std::int64_t euler_hf(const BettiTable& bt, int n, int t) {
  if (t < 0) throw ParameterError("euler_hf needs t >= 0");
  auto dimR = [n](int u) -> std::int64_t { return u < 0 ? 0 : static_cast<std::int64_t>(binomial(u + n, n)); };
  std::int64_t value = dimR(t);
  for (const auto& [key, mult] : bt.entries) {
    const std::int64_t term = mult * dimR(t - key.second);
    value += key.first % 2 == 1 ? -term : term;
  }
  return value;
}

bool is_level(const BettiTable& bt) {
  int shifts = 0;
  for (const auto& [key, mult] : bt.entries)
    if (key.first == bt.length && mult != 0) ++shifts;
  return shifts == 1;
}

int projective_dimension(const KoszulBetti& oracle, int n) {
  if (oracle.i_max < n + 1) throw ParameterError("projective_dimension needs the oracle computed to i_max >= n + 1");
  int pd = 0;
  for (const auto& [key, mult] : oracle.entries)
    if (mult != 0) pd = std::max(pd, key.first);
  return pd;
}

std::string betti_csv(const BettiTable& bt) {
  std::ostringstream os;
  os << "l,shift,multiplicity\n";
  for (const auto& [key, mult] : bt.entries) os << key.first << ',' << key.second << ',' << mult << '\n';
  return os.str();
}

namespace {

std::string diagram(const std::map<std::pair<int, int>, std::int64_t>& entries, int first_col, int last_col) {
  std::set<int> shifts;
  for (const auto& [key, mult] : entries)
    if (key.first >= first_col && key.first <= last_col) shifts.insert(key.second);
  std::ostringstream os;
  os << "shift |";
  for (int l = first_col; l <= last_col; ++l) os << ' ' << std::string(5 - std::to_string(l).size(), ' ') << l;
  os << '\n' << std::string(7 + 6 * static_cast<std::size_t>(last_col - first_col + 1), '-') << '\n';
  for (int j : shifts) {
    std::string label = std::to_string(j);
    os << std::string(5 - std::min<std::size_t>(5, label.size()), ' ') << label << " |";
    for (int l = first_col; l <= last_col; ++l) {
      auto it = entries.find({l, j});
      std::string cell = it == entries.end() || it->second == 0 ? "." : std::to_string(it->second);
      os << ' ' << std::string(5 - std::min<std::size_t>(5, cell.size()), ' ') << cell;
    }
    os << '\n';
  }
  return os.str();
}

nlohmann::json entries_json(const std::map<std::pair<int, int>, std::int64_t>& entries, const char* step_name) {
  nlohmann::json arr = nlohmann::json::array();
  for (const auto& [key, mult] : entries) arr.push_back({{step_name, key.first}, {"shift", key.second}, {"multiplicity", mult}});
  return arr;
}

}  // namespace

std::string betti_diagram(const BettiTable& bt) { return diagram(bt.entries, 1, std::max(1, bt.length)); }

std::string koszul_diagram(const KoszulBetti& kb) { return diagram(kb.entries, 0, kb.i_max); }

nlohmann::json betti_to_json(const BettiTable& bt) {
  return {{"length", bt.length}, {"entries", entries_json(bt.entries, "l")}};
}

nlohmann::json koszul_to_json(const KoszulBetti& kb) {
  return {{"i_max", kb.i_max}, {"j_max", kb.j_max}, {"entries", entries_json(kb.entries, "i")}};
}

BettiTable as_betti_table(const KoszulBetti& kb) {
  BettiTable bt;
  for (const auto& [key, mult] : kb.entries)
    if (key.first >= 1) bt.add(key.first, key.second, mult);
  return bt;
}

}  // namespace starconf
