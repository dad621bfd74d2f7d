#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace starconf {

/// Elements of F_p are stored as plain residues in [0, p).
using Scalar = std::uint32_t;

inline constexpr std::uint32_t kDefaultPrime = 2147483647u;  // 2^31 - 1

class ParameterError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

class DimensionError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

class ContextMismatch : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

bool is_prime(std::uint64_t n);

/// Arithmetic in the prime field F_p for 2 <= p < 2^31.
///
/// The bound on p keeps every product below 2^62 and lets the row kernels
/// use Shoup's precomputed-quotient multiplication.
class PrimeField {
 public:
  explicit PrimeField(std::uint32_t p = kDefaultPrime);

  std::uint32_t modulus() const noexcept { return p_; }

  Scalar reduce(std::uint64_t x) const noexcept { return static_cast<Scalar>(x % p_); }
  Scalar from_int(std::int64_t x) const noexcept {
    std::int64_t r = x % static_cast<std::int64_t>(p_);
    return static_cast<Scalar>(r < 0 ? r + p_ : r);
  }

  Scalar add(Scalar a, Scalar b) const noexcept {
    std::uint32_t s = a + b;
    return s >= p_ ? s - p_ : s;
  }
  Scalar sub(Scalar a, Scalar b) const noexcept { return a >= b ? a - b : a + p_ - b; }
  Scalar neg(Scalar a) const noexcept { return a == 0 ? 0 : p_ - a; }
  Scalar mul(Scalar a, Scalar b) const noexcept {
    return static_cast<Scalar>(static_cast<std::uint64_t>(a) * b % p_);
  }
  Scalar pow(Scalar a, std::uint64_t e) const noexcept;
  /// Throws std::domain_error on zero.
  Scalar inv(Scalar a) const;

  /// Shoup companion of a fixed multiplier c: floor(c * 2^32 / p).
  std::uint64_t shoup(Scalar c) const noexcept {
    return (static_cast<std::uint64_t>(c) << 32) / p_;
  }
  /// c * b mod p, given cs = shoup(c).
  Scalar mul_shoup(Scalar c, std::uint64_t cs, Scalar b) const noexcept {
    std::uint64_t q = (cs * b) >> 32;
    std::uint64_t r = static_cast<std::uint64_t>(c) * b - q * p_;
    return static_cast<Scalar>(r >= p_ ? r - p_ : r);
  }

  /// dst[j] += c * src[j] for j in [0, len).
  void axpy(Scalar c, const Scalar* src, Scalar* dst, std::size_t len) const noexcept;

  friend bool operator==(const PrimeField& a, const PrimeField& b) { return a.p_ == b.p_; }

 private:
  std::uint32_t p_;
};

}  // namespace starconf
