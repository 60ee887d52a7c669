#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace modseries {

struct OrdinalTerm;

/// Ordinal below epsilon-zero in Cantor normal form:
///   ω^e1·c1 + ω^e2·c2 + ... with e1 > e2 > ... and every ci ≥ 1.
/// The empty term list is 0.
class Ordinal {
 public:
  Ordinal() = default;

  static Ordinal finite(std::uint64_t n);
  static Ordinal omega();
  static Ordinal omega_power(Ordinal exponent, std::uint64_t coefficient = 1);
  /// Throws a range error unless the terms are in Cantor normal form.
  static Ordinal from_terms(std::vector<OrdinalTerm> terms);

  const std::vector<OrdinalTerm>& terms() const noexcept { return terms_; }
  bool is_zero() const noexcept { return terms_.empty(); }
  bool is_finite() const;
  /// Value of a finite ordinal; throws for infinite ones.
  std::uint64_t finite_value() const;
  /// Nesting depth of exponents: 0 for finite, 1 for ω^finite terms, ...
  std::size_t depth() const;

 private:
  std::vector<OrdinalTerm> terms_;
};

struct OrdinalTerm {
  Ordinal exponent;
  std::uint64_t coefficient = 1;
};

std::strong_ordering operator<=>(const Ordinal& a, const Ordinal& b);
bool operator==(const Ordinal& a, const Ordinal& b);
bool operator==(const OrdinalTerm& a, const OrdinalTerm& b);

/// Ordinal sum; not commutative (1 + ω = ω).
Ordinal add(const Ordinal& a, const Ordinal& b);
Ordinal successor(const Ordinal& a);
bool is_limit(const Ordinal& a);
bool is_successor(const Ordinal& a);

struct Cardinality {
  bool infinite = false;
  std::uint64_t count = 0;  // meaningful when finite

  static Cardinality finite(std::uint64_t n) { return {false, n}; }
  static Cardinality countably_infinite() { return {true, 0}; }
  friend bool operator==(const Cardinality&, const Cardinality&) = default;
};

Cardinality cardinality(const Ordinal& a);

/// Text syntax: `0`, decimal naturals, `w`, and terms `w^<exp>*<coeff>`
/// joined by `+` with strictly decreasing exponents. A compound exponent is
/// parenthesized: `w^(w+1)*2+w^2+3`. Throws a parse error on anything else,
/// including input that is not in Cantor normal form.
Ordinal parse_ordinal(std::string_view text);
std::string to_string(const Ordinal& a);
std::string to_string(const Cardinality& c);

}  // namespace modseries
