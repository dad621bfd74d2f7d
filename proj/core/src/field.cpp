#include "starconf/field.hpp"

#include <stdexcept>

namespace starconf {

namespace {

__extension__ typedef unsigned __int128 u128;

std::uint64_t mulmod64(std::uint64_t a, std::uint64_t b, std::uint64_t m) {
  return static_cast<std::uint64_t>(static_cast<u128>(a) * b % m);
}

std::uint64_t powmod64(std::uint64_t a, std::uint64_t e, std::uint64_t m) {
  std::uint64_t r = 1 % m;
  a %= m;
  while (e) {
    if (e & 1) r = mulmod64(r, a, m);
    a = mulmod64(a, a, m);
    e >>= 1;
  }
  return r;
}

}  // namespace

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t q : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull, 29ull, 31ull, 37ull}) {
    if (n % q == 0) return n == q;
  }
  std::uint64_t d = n - 1;
  int s = 0;
  while ((d & 1) == 0) {
    d >>= 1;
    ++s;
  }
  // Deterministic witness set for all 64-bit n.
  for (std::uint64_t a : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull, 29ull, 31ull, 37ull}) {
    std::uint64_t x = powmod64(a, d, n);
    if (x == 1 || x == n - 1) continue;
    bool composite = true;
    for (int i = 1; i < s; ++i) {
      x = mulmod64(x, x, n);
      if (x == n - 1) {
        composite = false;
        break;
      }
    }
    if (composite) return false;
  }
  return true;
}

PrimeField::PrimeField(std::uint32_t p) : p_(p) {
  if (p >= (1u << 31)) throw ParameterError("modulus must be below 2^31, got " + std::to_string(p));
  if (!is_prime(p)) throw ParameterError("modulus is not prime: " + std::to_string(p));
}

Scalar PrimeField::pow(Scalar a, std::uint64_t e) const noexcept {
  return static_cast<Scalar>(powmod64(a, e, p_));
}

Scalar PrimeField::inv(Scalar a) const {
  if (a % p_ == 0) throw std::domain_error("inverse of zero in F_p");
  return pow(a, p_ - 2);
}

void PrimeField::axpy(Scalar c, const Scalar* src, Scalar* dst, std::size_t len) const noexcept {
  if (c == 0) return;
  const std::uint64_t cs = shoup(c);
  const std::uint64_t p = p_;
  for (std::size_t j = 0; j < len; ++j) {
    std::uint64_t b = src[j];
    std::uint64_t q = (cs * b) >> 32;
    std::uint64_t r = static_cast<std::uint64_t>(c) * b - q * p;  // in [0, 2p)
    r += dst[j];                                                   // in [0, 3p)
    r = r >= p ? r - p : r;
    r = r >= p ? r - p : r;
    dst[j] = static_cast<Scalar>(r);
  }
}

}  // namespace starconf
