#include "modseries/field.hpp"

#include <string>

#include "modseries/error.hpp"

namespace modseries {

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  if (n < 4) return true;
  if (n % 2 == 0) return false;
  for (std::uint64_t d = 3; d * d <= n; d += 2)
    if (n % d == 0) return false;
  return true;
}

FieldSpec::FieldSpec(std::uint64_t p) {
  if (p >= (std::uint64_t{1} << 31))
    throw Error(ErrorKind::field, "modulus " + std::to_string(p) + " exceeds 2^31");
  if (!is_prime(p)) throw Error(ErrorKind::field, "modulus not prime");
  p_ = static_cast<Scalar>(p);
}

Scalar FieldSpec::inv(Scalar a) const {
  if (a % p_ == 0) throw Error(ErrorKind::internal, "inverse of zero");
  std::int64_t t = 0, new_t = 1;
  std::int64_t r = p_, new_r = a % p_;
  while (new_r != 0) {
    std::int64_t q = r / new_r;
    std::int64_t tmp = t - q * new_t;
    t = new_t;
    new_t = tmp;
    tmp = r - q * new_r;
    r = new_r;
    new_r = tmp;
  }
  return reduce(t);
}

}  // namespace modseries
