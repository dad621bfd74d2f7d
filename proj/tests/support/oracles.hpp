#pragma once

// Deliberately naive reference computations. Nothing here uses the library's
// field or linear-algebra code.

#include <cstdint>
#include <functional>
#include <vector>

namespace oracle {

using Row = std::vector<std::uint64_t>;

inline std::uint64_t inv_mod(std::uint64_t a, std::uint64_t p) {
  std::uint64_t r = 1, e = p - 2;
  a %= p;
  while (e) {
    if (e & 1) r = r * a % p;
    a = a * a % p;
    e >>= 1;
  }
  return r;
}

/// Reduced row echelon form by textbook elimination; returns the nonzero rows.
inline std::vector<Row> rref(std::vector<Row> m, std::uint64_t p) {
  if (m.empty()) return m;
  const std::size_t cols = m[0].size();
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < m.size(); ++c) {
    std::size_t piv = r;
    while (piv < m.size() && m[piv][c] % p == 0) ++piv;
    if (piv == m.size()) continue;
    std::swap(m[r], m[piv]);
    const std::uint64_t iv = inv_mod(m[r][c], p);
    for (auto& x : m[r]) x = x % p * iv % p;
    for (std::size_t i = 0; i < m.size(); ++i) {
      if (i == r || m[i][c] % p == 0) continue;
      const std::uint64_t f = m[i][c] % p;
      for (std::size_t k = 0; k < cols; ++k) m[i][k] = (m[i][k] % p + p - f * m[r][k] % p) % p;
    }
    ++r;
  }
  m.resize(r);
  return m;
}

inline std::size_t rank(const std::vector<Row>& m, std::uint64_t p) { return rref(m, p).size(); }

/// Zassenhaus: reduce [[u, u], [w, 0]]; rows whose left half vanishes carry U ∩ W in their right half.
inline std::vector<Row> intersect(const std::vector<Row>& u, const std::vector<Row>& w, std::size_t dim, std::uint64_t p) {
  std::vector<Row> big;
  for (const auto& row : u) {
    Row b(2 * dim);
    for (std::size_t i = 0; i < dim; ++i) b[i] = b[dim + i] = row[i] % p;
    big.push_back(b);
  }
  for (const auto& row : w) {
    Row b(2 * dim, 0);
    for (std::size_t i = 0; i < dim; ++i) b[i] = row[i] % p;
    big.push_back(b);
  }
  std::vector<Row> out;
  for (const auto& row : rref(big, p)) {
    bool left_zero = true;
    for (std::size_t i = 0; i < dim; ++i) left_zero = left_zero && row[i] == 0;
    if (left_zero) out.emplace_back(row.begin() + static_cast<std::ptrdiff_t>(dim), row.end());
  }
  return out;
}

/// Number of degree-t monomials in n+1 variables divisible by none of `gens`.
inline std::int64_t monomial_quotient_hf(int n, const std::vector<std::vector<int>>& gens, int t) {
  std::int64_t count = 0;
  std::vector<int> e(static_cast<std::size_t>(n) + 1, 0);
  std::function<void(int, int)> rec = [&](int var, int left) {
    if (var == n) {
      e[static_cast<std::size_t>(var)] = left;
      for (const auto& g : gens) {
        bool divides = true;
        for (int k = 0; k <= n; ++k) divides = divides && g[static_cast<std::size_t>(k)] <= e[static_cast<std::size_t>(k)];
        if (divides) return;
      }
      ++count;
      return;
    }
    for (int a = 0; a <= left; ++a) {
      e[static_cast<std::size_t>(var)] = a;
      rec(var + 1, left - a);
    }
  };
  if (t >= 0) rec(0, t);
  return count;
}

/// Coefficients of prod_i (1 - z^{d_i}) / (1 - z)^{n+1} up to z^t_max: the
/// Hilbert function of a complete intersection.
inline std::vector<std::int64_t> complete_intersection_hf(int n, const std::vector<int>& degrees, int t_max) {
  std::vector<std::int64_t> c(static_cast<std::size_t>(t_max) + 1, 0);
  c[0] = 1;
  for (int d : degrees)
    for (int t = t_max; t >= d; --t) c[static_cast<std::size_t>(t)] -= c[static_cast<std::size_t>(t - d)];
  for (int k = 0; k <= n; ++k)
    for (int t = 1; t <= t_max; ++t) c[static_cast<std::size_t>(t)] += c[static_cast<std::size_t>(t - 1)];
  return c;
}

inline std::int64_t choose(std::int64_t a, std::int64_t b) {
  if (b < 0 || a < b) return 0;
  std::int64_t r = 1;
  for (std::int64_t i = 1; i <= b; ++i) r = r * (a - b + i) / i;
  return r;
}

}  // namespace oracle
