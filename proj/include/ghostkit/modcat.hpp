#pragma once

// Canonical labels for the indecomposable objects of the category, their
// composition factors and Loewy diagrams, and the catalog of non-split
// short exact sequences among them.

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <tuple>
#include <vector>

#include "ghostkit/labels.hpp"

namespace ghostkit {

enum class Kind : std::uint8_t { Vac, Typ, BStr, TStr, Proj };

/// One indecomposable up to isomorphism:
///   Vac(l)     spectral flow sigma^l V of the vacuum module
///   Typ(c, l)  sigma^l W_c, the relaxed simple with nonzero ghost coset c
///   BStr(n, m) string of length n >= 2 on V_m..V_{m+n-1}, V_m in the socle
///   TStr(n, m) string of length n >= 2 on V_m..V_{m+n-1}, V_m in the head
///   Proj(m)    the staggered projective P_m = sigma^m P
/// Construction resolves aliases (B^1 = T^1 = V), so label equality is
/// isomorphism.
class CanonicalModule {
 public:
  static CanonicalModule vac(FlowIndex ell) { return {Kind::Vac, 1, ell, {}}; }

  static CanonicalModule typ(const GhostCoset& lambda, FlowIndex ell) {
    if (lambda.is_zero()) throw ValidationError("W label requires a nonzero ghost coset");
    return {Kind::Typ, 1, ell, lambda};
  }

  static CanonicalModule bstr(std::int64_t n, FlowIndex m) { return string_of(Kind::BStr, n, m); }
  static CanonicalModule tstr(std::int64_t n, FlowIndex m) { return string_of(Kind::TStr, n, m); }
  static CanonicalModule proj(FlowIndex m) { return {Kind::Proj, 4, m, {}}; }

  /// W_0^- = sigma^{-1} B^2 and W_0^+ = sigma^{-1} T^2.
  static CanonicalModule w0_minus() { return bstr(2, -1); }
  static CanonicalModule w0_plus() { return tstr(2, -1); }

  Kind kind() const { return kind_; }
  /// Number of composition factors.
  std::int64_t length() const { return length_; }
  /// Flow index: l for Vac/Typ, base flow m for strings and Proj.
  FlowIndex flow() const { return flow_; }
  const GhostCoset& coset() const { return lambda_; }

  bool is_simple() const { return kind_ == Kind::Vac || kind_ == Kind::Typ; }
  bool is_string() const { return kind_ == Kind::BStr || kind_ == Kind::TStr; }
  /// Projective, equivalently injective.
  bool is_projective() const { return kind_ == Kind::Typ || kind_ == Kind::Proj; }
  /// Vac and the B/T strings: the objects described by a linear Loewy word.
  bool is_vacuum_string() const { return kind_ == Kind::Vac || is_string(); }

  CanonicalModule with_flow(FlowIndex f) const {
    CanonicalModule c = *this;
    c.flow_ = f;
    return c;
  }
  CanonicalModule shifted(FlowIndex d) const { return with_flow(flow_ + d); }

  std::string str() const {
    auto s = [](std::int64_t v) { return std::to_string(v); };
    switch (kind_) {
      case Kind::Vac: return "V[" + s(flow_) + "]";
      case Kind::Typ: return "W[" + lambda_.str() + "," + s(flow_) + "]";
      case Kind::BStr: return "B[" + s(length_) + "," + s(flow_) + "]";
      case Kind::TStr: return "T[" + s(length_) + "," + s(flow_) + "]";
      case Kind::Proj: return "P[" + s(flow_) + "]";
    }
    return {};
  }

  friend bool operator==(const CanonicalModule& a, const CanonicalModule& b) {
    return a.kind_ == b.kind_ && a.length_ == b.length_ && a.flow_ == b.flow_ &&
           a.lambda_ == b.lambda_;
  }
  friend bool operator<(const CanonicalModule& a, const CanonicalModule& b) {
    if (a.kind_ != b.kind_) return a.kind_ < b.kind_;
    if (a.kind_ == Kind::Typ && !(a.lambda_ == b.lambda_)) return a.lambda_ < b.lambda_;
    return std::tie(a.length_, a.flow_) < std::tie(b.length_, b.flow_);
  }

 private:
  CanonicalModule(Kind k, std::int64_t len, FlowIndex f, GhostCoset lam)
      : kind_(k), length_(len), flow_(f), lambda_(std::move(lam)) {}

  static CanonicalModule string_of(Kind k, std::int64_t n, FlowIndex m) {
    if (n < 1) throw ValidationError("string length must be at least 1");
    if (n == 1) return vac(m);
    return {k, n, m, {}};
  }

  Kind kind_;
  std::int64_t length_;
  FlowIndex flow_;
  GhostCoset lambda_;
};

/// Finite direct sum with positive multiplicities, canonically ordered.
class FormalSum {
 public:
  using Map = std::map<CanonicalModule, std::int64_t>;

  FormalSum() = default;
  FormalSum(const CanonicalModule& m, std::int64_t k = 1) { add(m, k); }  // NOLINT

  FormalSum& add(const CanonicalModule& m, std::int64_t k = 1) {
    if (k < 0) throw ValidationError("negative multiplicity");
    if (k == 0) return *this;
    terms_[m] += k;
    return *this;
  }
  FormalSum& operator+=(const FormalSum& o) {
    for (const auto& [m, k] : o.terms_) terms_[m] += k;
    return *this;
  }
  friend FormalSum operator+(FormalSum a, const FormalSum& b) { return a += b; }

  FormalSum scaled(std::int64_t k) const {
    FormalSum r;
    for (const auto& [m, c] : terms_) r.add(m, c * k);
    return r;
  }

  /// Multiplicity of m as a direct summand.
  std::int64_t count(const CanonicalModule& m) const {
    auto it = terms_.find(m);
    return it == terms_.end() ? 0 : it->second;
  }
  /// Number of indecomposable summands counted with multiplicity.
  std::int64_t total() const {
    std::int64_t t = 0;
    for (const auto& [m, k] : terms_) t += k;
    return t;
  }
  bool empty() const { return terms_.empty(); }
  const Map& terms() const { return terms_; }
  auto begin() const { return terms_.begin(); }
  auto end() const { return terms_.end(); }

  /// "2*P[1] + V[0]"; the empty sum prints as "0".
  std::string str() const {
    if (terms_.empty()) return "0";
    std::string out;
    for (const auto& [m, k] : terms_) {
      if (!out.empty()) out += " + ";
      if (k != 1) out += std::to_string(k) + "*";
      out += m.str();
    }
    return out;
  }

  friend bool operator==(const FormalSum&, const FormalSum&) = default;

 private:
  Map terms_;
};

/// Composition factors with multiplicity; keys are always simple labels.
using CompositionSeries = FormalSum;

inline CompositionSeries composition_factors(const CanonicalModule& m) {
  CompositionSeries cs;
  switch (m.kind()) {
    case Kind::Vac:
    case Kind::Typ: cs.add(m); break;
    case Kind::BStr:
    case Kind::TStr:
      for (std::int64_t k = 0; k < m.length(); ++k) cs.add(CanonicalModule::vac(m.flow() + k));
      break;
    case Kind::Proj:
      cs.add(CanonicalModule::vac(m.flow() - 1));
      cs.add(CanonicalModule::vac(m.flow()), 2);
      cs.add(CanonicalModule::vac(m.flow() + 1));
      break;
  }
  return cs;
}

inline CompositionSeries composition_factors(const FormalSum& s) {
  CompositionSeries cs;
  for (const auto& [m, k] : s) cs += composition_factors(m).scaled(k);
  return cs;
}

inline std::int64_t length(const CanonicalModule& m) { return m.length(); }

// ---------------------------------------------------------------------------
// Loewy diagrams

enum class Row : std::uint8_t { Top, Middle, Bottom };

struct LoewyEntry {
  CanonicalModule factor;
  Row row;
  friend bool operator==(const LoewyEntry&, const LoewyEntry&) = default;
};

/// Composition factors laid out by radical layer. Strings give a word with
/// flows increasing by one per entry and rows alternating; Proj gives the
/// diamond top / two middle / bottom (flagged by `diamond`). Simples give a
/// single entry in the bottom row.
struct LoewyWord {
  std::vector<LoewyEntry> entries;
  bool diamond = false;
};

/// Row of the factor at offset k of a string whose base factor sits in `base_row`.
inline Row string_row(Row base_row, std::int64_t k) {
  bool same = (k % 2 == 0);
  if (base_row == Row::Bottom) return same ? Row::Bottom : Row::Top;
  return same ? Row::Top : Row::Bottom;
}

inline LoewyWord loewy(const CanonicalModule& m) {
  LoewyWord w;
  switch (m.kind()) {
    case Kind::Vac:
    case Kind::Typ: w.entries.push_back({m, Row::Bottom}); break;
    case Kind::BStr:
    case Kind::TStr: {
      Row base = m.kind() == Kind::BStr ? Row::Bottom : Row::Top;
      for (std::int64_t k = 0; k < m.length(); ++k)
        w.entries.push_back({CanonicalModule::vac(m.flow() + k), string_row(base, k)});
      break;
    }
    case Kind::Proj:
      w.diamond = true;
      w.entries = {{CanonicalModule::vac(m.flow()), Row::Top},
                   {CanonicalModule::vac(m.flow() - 1), Row::Middle},
                   {CanonicalModule::vac(m.flow() + 1), Row::Middle},
                   {CanonicalModule::vac(m.flow()), Row::Bottom}};
      break;
  }
  return w;
}

/// Rebuilds the canonical label of a vacuum-block string from its base flow,
/// length and the row of its base factor.
inline CanonicalModule string_from_word(FlowIndex base, std::int64_t n, Row base_row) {
  return base_row == Row::Bottom ? CanonicalModule::bstr(n, base)
                                 : CanonicalModule::tstr(n, base);
}

inline FormalSum socle(const CanonicalModule& m) {
  if (m.is_simple()) return FormalSum(m);
  FormalSum s;
  for (const auto& e : loewy(m).entries)
    if (e.row == Row::Bottom) s.add(e.factor);
  return s;
}

inline FormalSum head(const CanonicalModule& m) {
  if (m.is_simple()) return FormalSum(m);
  FormalSum s;
  for (const auto& e : loewy(m).entries)
    if (e.row == Row::Top) s.add(e.factor);
  return s;
}

inline FormalSum socle(const FormalSum& s) {
  FormalSum r;
  for (const auto& [m, k] : s) r += socle(m).scaled(k);
  return r;
}

inline FormalSum head(const FormalSum& s) {
  FormalSum r;
  for (const auto& [m, k] : s) r += head(m).scaled(k);
  return r;
}

inline bool is_projective(const CanonicalModule& m) { return m.is_projective(); }
inline bool is_injective(const CanonicalModule& m) { return m.is_projective(); }

// ---------------------------------------------------------------------------
// Exact sequences

/// 0 -> sub -> middle -> quotient -> 0, non-split.
struct ExactSequence {
  std::string name;    // e.g. "b-odd-by-t2[n=2]"
  std::string family;  // family identifier without the parameter
  FormalSum sub;
  FormalSum middle;
  FormalSum quotient;
};

inline bool is_balanced(const ExactSequence& s) {
  return composition_factors(s.sub) + composition_factors(s.quotient) ==
         composition_factors(s.middle);
}

/// The non-split sequences relating W_0^{+-}, P and the B/T strings, with the
/// infinite families instantiated for parameter values up to `bound`.
inline std::vector<ExactSequence> sequence_catalog(int bound = 8) {
  using CM = CanonicalModule;
  std::vector<ExactSequence> out;
  auto push = [&](std::string family, int n, CM sub, CM mid, CM quot) {
    std::string name = n < 0 ? family : family + "[n=" + std::to_string(n) + "]";
    out.push_back({std::move(name), std::move(family), FormalSum(sub), FormalSum(mid),
                   FormalSum(quot)});
  };

  // Length-two vacuum extensions and the two filtrations of P.
  push("w0-plus", -1, CM::vac(0), CM::w0_plus(), CM::vac(-1));
  push("w0-minus", -1, CM::vac(-1), CM::w0_minus(), CM::vac(0));
  push("proj-by-w0-minus", -1, CM::w0_minus().shifted(1), CM::proj(0), CM::w0_minus());
  push("proj-by-w0-plus", -1, CM::w0_plus(), CM::proj(0), CM::w0_plus().shifted(1));

  for (int n = 1; n <= bound; ++n) {
    // Defining extensions of the strings.
    push("def-b-odd", n, CM::bstr(2 * n - 1, 0), CM::bstr(2 * n + 1, 0), CM::tstr(2, 2 * n - 1));
    if (n >= 2)
      push("def-b-even", n, CM::bstr(2, 2 * n - 2), CM::bstr(2 * n, 0), CM::bstr(2 * n - 2, 0));
    push("def-t-odd", n, CM::bstr(2, 2 * n - 1), CM::tstr(2 * n + 1, 0), CM::tstr(2 * n - 1, 0));
    if (n >= 2)
      push("def-t-even", n, CM::tstr(2 * n - 2, 0), CM::tstr(2 * n, 0), CM::tstr(2, 2 * n - 2));

    // Further non-split sequences read off the Loewy diagrams.
    if (n >= 2) push("b-socle-base", n, CM::vac(0), CM::bstr(n, 0), CM::tstr(n - 1, 1));
    push("b-odd-socle-end", n, CM::vac(2 * n), CM::bstr(2 * n + 1, 0), CM::bstr(2 * n, 0));
    push("b-even-top-end", n, CM::bstr(2 * n - 1, 0), CM::bstr(2 * n, 0), CM::vac(2 * n - 1));
    if (n >= 3) push("b-head-b2", n, CM::bstr(n - 2, 2), CM::bstr(n, 0), CM::bstr(2, 0));
    if (n >= 2) push("t-head-base", n, CM::bstr(n - 1, 1), CM::tstr(n, 0), CM::vac(0));
    push("t-odd-top-end", n, CM::tstr(2 * n, 0), CM::tstr(2 * n + 1, 0), CM::vac(2 * n));
    push("t-even-socle-end", n, CM::vac(2 * n - 1), CM::tstr(2 * n, 0), CM::tstr(2 * n - 1, 0));
  }
  return out;
}

}  // namespace ghostkit
