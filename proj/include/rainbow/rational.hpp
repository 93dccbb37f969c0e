#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <optional>
#include <stdexcept>
#include <string>

namespace rainbow {

// All coordinates and predicate arithmetic are exact; no floating point
// anywhere on a correctness-relevant path.
using Int = boost::multiprecision::cpp_int;
using Scalar = boost::multiprecision::cpp_rational;

inline Int num(const Scalar& s) { return boost::multiprecision::numerator(s); }
inline Int den(const Scalar& s) { return boost::multiprecision::denominator(s); }

inline int sign_of(const Scalar& s) { return s.sign(); }
inline int sign_of(const Int& s) { return s.sign(); }

inline Scalar abs_of(const Scalar& s) { return s < 0 ? Scalar(-s) : s; }

/// Serializes as "p" or "p/q", never as a decimal.
std::string to_fraction_string(const Scalar& s);

/// Parses "p", "p/q", "-p/q". Whitespace is not accepted.
std::optional<Scalar> parse_fraction(const std::string& text);

inline Scalar parse_fraction_or_throw(const std::string& text) {
  auto v = parse_fraction(text);
  if (!v) throw std::invalid_argument("bad rational literal: '" + text + "'");
  return *v;
}

}  // namespace rainbow
