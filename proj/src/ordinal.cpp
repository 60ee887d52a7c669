#include "modseries/ordinal.hpp"

#include <algorithm>
#include <cctype>
#include <limits>
#include <utility>

#include "modseries/error.hpp"

namespace modseries {

namespace {

std::uint64_t checked_add(std::uint64_t a, std::uint64_t b) {
  if (a > std::numeric_limits<std::uint64_t>::max() - b)
    throw Error(ErrorKind::range, "ordinal coefficient overflow");
  return a + b;
}

class Parser {
 public:
  explicit Parser(std::string_view text) : text_(text) {}

  Ordinal parse_all() {
    Ordinal result = parse_sum();
    if (pos_ != text_.size()) fail("unexpected '" + std::string(1, text_[pos_]) + "'");
    return result;
  }

 private:
  Ordinal parse_sum() {
    if (peek() == '0') {
      ++pos_;
      if (std::isdigit(static_cast<unsigned char>(peek()))) fail("leading zero");
      return Ordinal();
    }
    std::vector<OrdinalTerm> terms;
    terms.push_back(parse_term());
    while (peek() == '+') {
      ++pos_;
      terms.push_back(parse_term());
    }
    for (std::size_t i = 1; i < terms.size(); ++i)
      if (!(terms[i - 1].exponent > terms[i].exponent))
        fail("exponents not strictly decreasing");
    return Ordinal::from_terms(std::move(terms));
  }

  OrdinalTerm parse_term() {
    if (peek() != 'w') return OrdinalTerm{Ordinal(), parse_positive()};
    ++pos_;
    OrdinalTerm term{Ordinal::finite(1), 1};
    if (peek() == '^') {
      ++pos_;
      term.exponent = parse_exponent();
    }
    if (peek() == '*') {
      ++pos_;
      term.coefficient = parse_positive();
    }
    return term;
  }

  Ordinal parse_exponent() {
    if (peek() == '(') {
      ++pos_;
      Ordinal e = parse_sum();
      if (peek() != ')') fail("missing ')'");
      ++pos_;
      return e;
    }
    if (peek() == 'w') {
      ++pos_;
      return Ordinal::omega();
    }
    if (peek() == '0') {
      ++pos_;
      if (std::isdigit(static_cast<unsigned char>(peek()))) fail("leading zero");
      return Ordinal();
    }
    return Ordinal::finite(parse_positive());
  }

  std::uint64_t parse_positive() {
    if (!std::isdigit(static_cast<unsigned char>(peek()))) fail("expected a number or 'w'");
    if (peek() == '0') fail("zero coefficient or leading zero");
    std::uint64_t value = 0;
    while (std::isdigit(static_cast<unsigned char>(peek()))) {
      const std::uint64_t digit = static_cast<std::uint64_t>(text_[pos_] - '0');
      if (value > (std::numeric_limits<std::uint64_t>::max() - digit) / 10) fail("number too large");
      value = value * 10 + digit;
      ++pos_;
    }
    return value;
  }

  char peek() const { return pos_ < text_.size() ? text_[pos_] : '\0'; }

  [[noreturn]] void fail(const std::string& why) const {
    throw Error(ErrorKind::parse, "ordinal '" + std::string(text_) + "' at position " +
                                      std::to_string(pos_) + ": " + why);
  }

  std::string_view text_;
  std::size_t pos_ = 0;
};

std::string exponent_string(const Ordinal& e) {
  if (e.is_finite() || e == Ordinal::omega()) return to_string(e);
  return "(" + to_string(e) + ")";
}

}  // namespace

Ordinal Ordinal::finite(std::uint64_t n) {
  Ordinal o;
  if (n > 0) o.terms_.push_back(OrdinalTerm{Ordinal(), n});
  return o;
}

Ordinal Ordinal::omega() { return omega_power(finite(1)); }

Ordinal Ordinal::omega_power(Ordinal exponent, std::uint64_t coefficient) {
  return from_terms({OrdinalTerm{std::move(exponent), coefficient}});
}

Ordinal Ordinal::from_terms(std::vector<OrdinalTerm> terms) {
  for (std::size_t i = 0; i < terms.size(); ++i) {
    if (terms[i].coefficient == 0) throw Error(ErrorKind::range, "zero coefficient in ordinal");
    if (i > 0 && !(terms[i - 1].exponent > terms[i].exponent))
      throw Error(ErrorKind::range, "ordinal exponents not strictly decreasing");
  }
  Ordinal o;
  o.terms_ = std::move(terms);
  return o;
}

bool Ordinal::is_finite() const { return terms_.empty() || terms_.front().exponent.is_zero(); }

std::uint64_t Ordinal::finite_value() const {
  if (!is_finite()) throw Error(ErrorKind::range, "ordinal " + to_string(*this) + " is infinite");
  return terms_.empty() ? 0 : terms_.front().coefficient;
}

std::size_t Ordinal::depth() const {
  std::size_t d = 0;
  for (const OrdinalTerm& t : terms_)
    if (!t.exponent.is_zero()) d = std::max(d, 1 + t.exponent.depth());
  return d;
}

std::strong_ordering operator<=>(const Ordinal& a, const Ordinal& b) {
  const auto& x = a.terms();
  const auto& y = b.terms();
  for (std::size_t i = 0; i < x.size() && i < y.size(); ++i) {
    if (auto c = x[i].exponent <=> y[i].exponent; c != 0) return c;
    if (auto c = x[i].coefficient <=> y[i].coefficient; c != 0) return c;
  }
  return x.size() <=> y.size();
}

bool operator==(const Ordinal& a, const Ordinal& b) { return (a <=> b) == 0; }

bool operator==(const OrdinalTerm& a, const OrdinalTerm& b) {
  return a.coefficient == b.coefficient && a.exponent == b.exponent;
}

Ordinal add(const Ordinal& a, const Ordinal& b) {
  if (b.is_zero()) return a;
  const OrdinalTerm& lead = b.terms().front();
  std::vector<OrdinalTerm> out;
  // Terms of a below b's leading exponent are absorbed.
  for (const OrdinalTerm& t : a.terms()) {
    if (t.exponent > lead.exponent) {
      out.push_back(t);
    } else {
      if (t.exponent == lead.exponent)
        out.push_back(OrdinalTerm{t.exponent, checked_add(t.coefficient, lead.coefficient)});
      break;
    }
  }
  if (out.empty() || !(out.back().exponent == lead.exponent)) out.push_back(lead);
  out.insert(out.end(), b.terms().begin() + 1, b.terms().end());
  return Ordinal::from_terms(std::move(out));
}

Ordinal successor(const Ordinal& a) { return add(a, Ordinal::finite(1)); }

bool is_limit(const Ordinal& a) { return !a.is_zero() && !a.terms().back().exponent.is_zero(); }

bool is_successor(const Ordinal& a) { return !a.is_zero() && a.terms().back().exponent.is_zero(); }

Cardinality cardinality(const Ordinal& a) {
  if (a.is_finite()) return Cardinality::finite(a.finite_value());
  return Cardinality::countably_infinite();
}

Ordinal parse_ordinal(std::string_view text) {
  while (!text.empty() && std::isspace(static_cast<unsigned char>(text.front()))) text.remove_prefix(1);
  while (!text.empty() && std::isspace(static_cast<unsigned char>(text.back()))) text.remove_suffix(1);
  if (text.empty()) throw Error(ErrorKind::parse, "empty ordinal");
  try {
    return Parser(text).parse_all();
  } catch (const Error& e) {
    if (e.kind() == ErrorKind::parse) throw;
    throw Error(ErrorKind::parse, "ordinal '" + std::string(text) + "': " + e.detail());
  }
}

std::string to_string(const Ordinal& a) {
  if (a.is_zero()) return "0";
  std::string out;
  for (const OrdinalTerm& t : a.terms()) {
    if (!out.empty()) out += '+';
    if (t.exponent.is_zero()) {
      out += std::to_string(t.coefficient);
      continue;
    }
    out += 'w';
    if (!(t.exponent == Ordinal::finite(1))) out += "^" + exponent_string(t.exponent);
    if (t.coefficient != 1) out += "*" + std::to_string(t.coefficient);
  }
  return out;
}

std::string to_string(const Cardinality& c) {
  return c.infinite ? "countably-infinite" : std::to_string(c.count);
}

}  // namespace modseries
