#pragma once

// Exact weight and coset arithmetic for the bosonic ghost module category.
//
// Every value here is an immutable exact rational; floating point never
// enters this layer.

#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>

#include <boost/multiprecision/cpp_int.hpp>

namespace ghostkit {

using Rational = boost::multiprecision::cpp_rational;
using Integer = boost::multiprecision::cpp_int;

/// Spectral flow amount. The group law is integer addition.
using FlowIndex = std::int64_t;

struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Input violates a label invariant (zero coset for W, string length < 1, ...).
struct ValidationError : Error {
  using Error::Error;
};

inline Rational floor_frac(const Rational& r) {
  Integer num = boost::multiprecision::numerator(r);
  Integer den = boost::multiprecision::denominator(r);
  Integer q = num / den;
  if (num % den != 0 && num < 0) q -= 1;
  return r - Rational(q);
}

inline std::string to_string(const Rational& r) {
  if (boost::multiprecision::denominator(r) == 1)
    return boost::multiprecision::numerator(r).str();
  return boost::multiprecision::numerator(r).str() + "/" +
         boost::multiprecision::denominator(r).str();
}

/// Parses "p/q" or "p" (optional leading sign) into a reduced rational.
inline Rational parse_rational(std::string_view text) {
  auto parse_int = [](std::string_view s) -> Integer {
    if (s.empty()) throw ValidationError("empty integer");
    std::size_t i = (s[0] == '-' || s[0] == '+') ? 1 : 0;
    if (i == s.size()) throw ValidationError("malformed integer '" + std::string(s) + "'");
    for (std::size_t k = i; k < s.size(); ++k)
      if (s[k] < '0' || s[k] > '9')
        throw ValidationError("malformed integer '" + std::string(s) + "'");
    return Integer(std::string(s[0] == '+' ? s.substr(1) : s));
  };
  auto slash = text.find('/');
  if (slash == std::string_view::npos) return Rational(parse_int(text));
  Integer den = parse_int(text.substr(slash + 1));
  if (den == 0) throw ValidationError("zero denominator in '" + std::string(text) + "'");
  return Rational(parse_int(text.substr(0, slash)), den);
}

/// An element of Q/Z, stored as its representative in [0, 1).
class GhostCoset {
 public:
  GhostCoset() = default;
  explicit GhostCoset(const Rational& r) : rep_(floor_frac(r)) {}
  GhostCoset(std::int64_t num, std::int64_t den) : GhostCoset(Rational(num, den)) {}

  const Rational& rep() const { return rep_; }
  bool is_zero() const { return rep_ == 0; }

  friend GhostCoset operator+(const GhostCoset& a, const GhostCoset& b) {
    return GhostCoset(a.rep_ + b.rep_);
  }
  GhostCoset operator-() const { return GhostCoset(-rep_); }

  friend bool operator==(const GhostCoset& a, const GhostCoset& b) { return a.rep_ == b.rep_; }
  friend bool operator<(const GhostCoset& a, const GhostCoset& b) { return a.rep_ < b.rep_; }

  /// "p/q", or "0" for the zero coset.
  std::string str() const { return to_string(rep_); }

  /// Does j lie in this coset?
  bool contains(const Rational& j) const { return floor_frac(j) == rep_; }

 private:
  Rational rep_{0};
};

inline GhostCoset coset_add(const GhostCoset& a, const GhostCoset& b) { return a + b; }

/// Ghost weight j (J_0 eigenvalue) and conformal weight h (L_0 generalised eigenvalue).
struct Weight {
  Rational j;
  Rational h;

  friend bool operator==(const Weight&, const Weight&) = default;
};

/// Image of a weight under spectral flow by ell:
/// [j, h] -> [j - ell, h + ell j - ell(ell+1)/2].
inline Weight flow_weight(const Weight& w, FlowIndex ell) {
  Rational l(ell);
  return {w.j - l, w.h + l * w.j - l * (l + 1) / 2};
}

/// Image under conjugation: [j, h] -> [1 - j, h].
inline Weight conj_weight(const Weight& w) { return {Rational(1) - w.j, w.h}; }

}  // namespace ghostkit
