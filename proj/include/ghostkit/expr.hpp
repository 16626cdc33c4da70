#pragma once

// Text grammar for modules and direct sums:
//   Sum  := Term ('+' Term)* | '0'
//   Term := [int '*'] Atom
//   Atom := V[l] | W[p/q,l] | B[n,m] | T[n,m] | P[m]
// Printing (FormalSum::str) produces the canonical form, and parsing that
// text gives back the same sum.

#include <cctype>
#include <cstdint>
#include <string>
#include <string_view>

#include "ghostkit/modcat.hpp"

namespace ghostkit {

struct ParseError : Error {
  ParseError(const std::string& msg, std::size_t pos)
      : Error("parse error at position " + std::to_string(pos) + ": " + msg), position(pos) {}
  std::size_t position;
};

namespace detail {

class ExprParser {
 public:
  explicit ExprParser(std::string_view text) : s_(text) {}

  FormalSum parse_sum() {
    skip_ws();
    if (peek() == '0' && rest_is_blank(pos_ + 1)) return {};
    FormalSum out;
    while (true) {
      skip_ws();
      std::int64_t mult = 1;
      if (std::isdigit(static_cast<unsigned char>(peek()))) {
        mult = parse_int();
        skip_ws();
        expect('*');
        skip_ws();
      }
      out.add(parse_atom(), mult);
      skip_ws();
      if (pos_ == s_.size()) break;
      expect('+');
    }
    return out;
  }

 private:
  char peek() const { return pos_ < s_.size() ? s_[pos_] : '\0'; }

  bool rest_is_blank(std::size_t from) const {
    for (std::size_t i = from; i < s_.size(); ++i)
      if (!std::isspace(static_cast<unsigned char>(s_[i]))) return false;
    return true;
  }

  void skip_ws() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }

  void expect(char c) {
    if (peek() != c) {
      std::string got = pos_ < s_.size() ? std::string("'") + s_[pos_] + "'" : "end of input";
      throw ParseError(std::string("expected '") + c + "', got " + got, pos_);
    }
    ++pos_;
  }

  std::int64_t parse_int() {
    std::size_t start = pos_;
    if (peek() == '-' || peek() == '+') ++pos_;
    std::size_t digits = pos_;
    while (std::isdigit(static_cast<unsigned char>(peek()))) ++pos_;
    if (pos_ == digits) throw ParseError("expected an integer", start);
    if (pos_ - digits > 18) throw ParseError("integer out of range", start);
    return std::stoll(std::string(s_.substr(start, pos_ - start)));
  }

  CanonicalModule parse_atom() {
    std::size_t start = pos_;
    char kind = peek();
    if (kind != 'V' && kind != 'W' && kind != 'B' && kind != 'T' && kind != 'P')
      throw ParseError("expected one of V, W, B, T, P", pos_);
    ++pos_;
    skip_ws();
    expect('[');
    skip_ws();
    try {
      switch (kind) {
        case 'V': {
          auto l = parse_int();
          close();
          return CanonicalModule::vac(l);
        }
        case 'P': {
          auto m = parse_int();
          close();
          return CanonicalModule::proj(m);
        }
        case 'W': {
          std::size_t cstart = pos_;
          std::int64_t p = parse_int();
          std::int64_t q = 1;
          skip_ws();
          if (peek() == '/') {
            ++pos_;
            skip_ws();
            q = parse_int();
            if (q == 0) throw ParseError("zero denominator", cstart);
          }
          comma();
          auto l = parse_int();
          close();
          return CanonicalModule::typ(GhostCoset(Rational(p, q)), l);
        }
        default: {
          auto n = parse_int();
          comma();
          auto m = parse_int();
          close();
          if (n < 1) throw ValidationError("string length must be at least 1");
          return kind == 'B' ? CanonicalModule::bstr(n, m) : CanonicalModule::tstr(n, m);
        }
      }
    } catch (const ValidationError& e) {
      throw ValidationError(std::string(e.what()) + " (term at position " + std::to_string(start) + ")");
    }
  }

  void comma() {
    skip_ws();
    expect(',');
    skip_ws();
  }
  void close() {
    skip_ws();
    expect(']');
  }

  std::string_view s_;
  std::size_t pos_ = 0;
};

}  // namespace detail

/// Parses and canonicalises (e.g. "B[1,3]" gives V[3]). Throws ParseError on
/// malformed text and ValidationError on invalid labels.
inline FormalSum parse_module_expr(std::string_view text) {
  return detail::ExprParser(text).parse_sum();
}

/// Parses text that must denote a single indecomposable.
inline CanonicalModule parse_module(std::string_view text) {
  FormalSum s = parse_module_expr(text);
  if (s.total() != 1) throw ValidationError("expected a single module, got '" + std::string(text) + "'");
  return s.begin()->first;
}

inline std::string print(const FormalSum& s) { return s.str(); }
inline std::string print(const CanonicalModule& m) { return m.str(); }

}  // namespace ghostkit
