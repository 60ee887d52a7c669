#pragma once

#include <cstdint>

namespace modseries {

using Scalar = std::uint32_t;

bool is_prime(std::uint64_t n);

/// Prime field GF(p). The modulus is checked by trial division and must be
/// below 2^31 so that products of two reduced scalars fit in 64 bits.
class FieldSpec {
 public:
  explicit FieldSpec(std::uint64_t p);

  Scalar modulus() const noexcept { return p_; }

  Scalar reduce(std::int64_t x) const noexcept {
    std::int64_t r = x % static_cast<std::int64_t>(p_);
    return static_cast<Scalar>(r < 0 ? r + p_ : r);
  }
  Scalar add(Scalar a, Scalar b) const noexcept {
    std::uint64_t s = std::uint64_t{a} + b;
    return static_cast<Scalar>(s >= p_ ? s - p_ : s);
  }
  Scalar sub(Scalar a, Scalar b) const noexcept {
    return a >= b ? a - b : static_cast<Scalar>(std::uint64_t{a} + p_ - b);
  }
  Scalar neg(Scalar a) const noexcept { return a == 0 ? 0 : p_ - a; }
  Scalar mul(Scalar a, Scalar b) const noexcept {
    return static_cast<Scalar>(std::uint64_t{a} * b % p_);
  }
  // a must be nonzero.
  Scalar inv(Scalar a) const;

  friend bool operator==(const FieldSpec&, const FieldSpec&) = default;

 private:
  Scalar p_;
};

}  // namespace modseries
