#pragma once

// Fusion products of canonical modules, the projective sums S^{m,n}_k, and
// the Grothendieck ring.

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "ghostkit/functors.hpp"
#include "ghostkit/modcat.hpp"

namespace ghostkit {

/// S^{m,n}_k = sum_{r=1}^{m+n-1} N_r P_{k+2r-1}, N_r = min{r, m, n, m+n-r}.
struct ProjSum {
  std::int64_t m;
  std::int64_t n;
  FlowIndex k;

  std::string str() const {
    return "S{" + std::to_string(m) + "," + std::to_string(n) + "}_" + std::to_string(k);
  }
  friend bool operator==(const ProjSum&, const ProjSum&) = default;
};

namespace detail {

// Allows m or n = 0 (empty sum), which the string formulas hit at their edges.
inline FormalSum projsum(std::int64_t m, std::int64_t n, FlowIndex k) {
  FormalSum out;
  if (m <= 0 || n <= 0) return out;
  for (std::int64_t r = 1; r <= m + n - 1; ++r) {
    std::int64_t nr = std::min({r, m, n, m + n - r});
    out.add(CanonicalModule::proj(k + 2 * r - 1), nr);
  }
  return out;
}

}  // namespace detail

inline FormalSum expand_projsum(std::int64_t m, std::int64_t n, FlowIndex k) {
  if (m <= 0 || n <= 0) throw ValidationError("S^{m,n}_k requires m, n >= 1");
  return detail::projsum(m, n, k);
}

inline FormalSum expand(const ProjSum& s) { return expand_projsum(s.m, s.n, s.k); }

struct FusionOptions {
  /// Refuse string products outside the m >= n role assignment instead of
  /// extending the formula shape to them.
  bool strict_guards = false;
};

/// Thrown under strict_guards when a product needs a guard-extended formula.
struct GuardError : Error {
  using Error::Error;
};

struct FusionResult {
  FormalSum sum;                  // fully expanded decomposition
  bool guard_extended = false;    // some string formula was applied outside m >= n
  FormalSum compact_rest;         // non-S^{m,n}_k part of the compact form
  std::vector<ProjSum> projsums;  // S^{m,n}_k parts of the compact form

  void absorb(const FusionResult& o, std::int64_t mult = 1) {
    sum += o.sum.scaled(mult);
    guard_extended = guard_extended || o.guard_extended;
    compact_rest += o.compact_rest.scaled(mult);
    for (std::int64_t i = 0; i < mult; ++i)
      projsums.insert(projsums.end(), o.projsums.begin(), o.projsums.end());
  }

  /// Compact display, e.g. "B[5,0] + S{1,1}_1".
  std::string compact_str() const {
    std::string out = compact_rest.empty() ? std::string() : compact_rest.str();
    for (const auto& p : projsums) {
      if (!out.empty()) out += " + ";
      out += p.str();
    }
    return out.empty() ? "0" : out;
  }
};

namespace detail {

inline FusionResult plain(FormalSum s) {
  FusionResult r;
  r.compact_rest = s;
  r.sum = std::move(s);
  return r;
}

inline FusionResult with_projsum(FormalSum rest, std::int64_t m, std::int64_t n, FlowIndex k) {
  FusionResult r;
  r.compact_rest = rest;
  r.sum = std::move(rest);
  if (m > 0 && n > 0) {
    r.projsums.push_back({m, n, k});
    r.sum += projsum(m, n, k);
  }
  return r;
}

inline FusionResult shifted(FusionResult r, FlowIndex d) {
  if (d == 0) return r;
  r.sum = flow(r.sum, d);
  r.compact_rest = flow(r.compact_rest, d);
  for (auto& p : r.projsums) p.k += d;
  return r;
}

inline void check_guard(FusionResult& r, bool satisfied, const FusionOptions& opt,
                        const CanonicalModule& a, const CanonicalModule& b) {
  if (satisfied) return;
  if (opt.strict_guards)
    throw GuardError("fusion " + a.str() + " x " + b.str() +
                     " lies outside the m >= n role assignment");
  r.guard_extended = true;
}

// Z^p x Z^q at base flow 0, both strings of the same type Z.
inline FusionResult fuse_same_type(Kind z, std::int64_t p, std::int64_t q,
                                   const FusionOptions& opt, const CanonicalModule& a,
                                   const CanonicalModule& b) {
  auto str = [z](std::int64_t n, FlowIndex f) {
    return z == Kind::BStr ? CanonicalModule::bstr(n, f) : CanonicalModule::tstr(n, f);
  };
  if (p % 2 == 0 && q % 2 == 1) std::swap(p, q);
  if (p % 2 == 1 && q % 2 == 1) {
    std::int64_t m = (p - 1) / 2, n = (q - 1) / 2;
    return with_projsum(FormalSum(str(p + q - 1, 0)), m, n, 1);
  }
  if (p % 2 == 1) {  // odd 2m+1 with even 2n
    std::int64_t m = (p - 1) / 2, n = q / 2;
    FusionResult r = with_projsum(FormalSum(str(2 * n, 0)), m, n, 1);
    check_guard(r, m >= n, opt, a, b);
    return r;
  }
  std::int64_t m = p / 2, n = q / 2;
  if (m < n) std::swap(m, n);
  FormalSum rest = FormalSum(str(2 * n, 2 * m - 1)) + FormalSum(str(2 * n, 0));
  return with_projsum(std::move(rest), m - 1, n, 1);
}

// T^t x B^b at base flow 0.
inline FusionResult fuse_mixed(std::int64_t t, std::int64_t b, const FusionOptions& opt,
                               const CanonicalModule& a, const CanonicalModule& c) {
  using CM = CanonicalModule;
  if (t % 2 == 1 && b % 2 == 1) {
    std::int64_t m = (t - 1) / 2, n = (b - 1) / 2;
    if (m >= n) return with_projsum(FormalSum(CM::tstr(2 * (m - n) + 1, 2 * n)), m + 1, n, 0);
    return with_projsum(FormalSum(CM::bstr(2 * (n - m) + 1, 2 * m)), n + 1, m, 0);
  }
  if (t % 2 == 0 && b % 2 == 1) {
    std::int64_t m = t / 2, n = (b - 1) / 2;
    FusionResult r = with_projsum(FormalSum(CM::tstr(2 * m, 2 * n)), m, n, 0);
    check_guard(r, m >= n, opt, a, c);
    return r;
  }
  if (t % 2 == 1 && b % 2 == 0) {
    std::int64_t m = b / 2, n = (t - 1) / 2;
    FusionResult r = with_projsum(FormalSum(CM::bstr(2 * m, 2 * n)), m, n, 0);
    check_guard(r, m >= n, opt, a, c);
    return r;
  }
  return with_projsum(FormalSum(), t / 2, b / 2, 0);
}

inline FusionResult fuse_typ_typ(const CanonicalModule& a, const CanonicalModule& b) {
  GhostCoset sum = a.coset() + b.coset();
  FlowIndex f = a.flow() + b.flow();
  if (sum.is_zero()) return plain(FormalSum(CanonicalModule::proj(f - 1)));
  return plain(FormalSum(CanonicalModule::typ(sum, f)) +
               FormalSum(CanonicalModule::typ(sum, f - 1)));
}

// Projective R with a simple S.
inline FusionResult fuse_proj_simple(const CanonicalModule& r, const CanonicalModule& s) {
  if (s.kind() == Kind::Vac) return plain(FormalSum(r.shifted(s.flow())));
  if (r.kind() == Kind::Typ) return fuse_typ_typ(r, s);
  // P_m x W_{c,l} = W_{c,m+l-1} + 2 W_{c,m+l} + W_{c,m+l+1}
  FlowIndex f = r.flow() + s.flow();
  FormalSum out;
  out.add(CanonicalModule::typ(s.coset(), f - 1));
  out.add(CanonicalModule::typ(s.coset(), f), 2);
  out.add(CanonicalModule::typ(s.coset(), f + 1));
  return plain(std::move(out));
}

}  // namespace detail

inline FusionResult fuse_detailed(const CanonicalModule& a, const CanonicalModule& b,
                                  const FusionOptions& opt = {}) {
  if (a.kind() == Kind::Vac) return detail::plain(FormalSum(b.shifted(a.flow())));
  if (b.kind() == Kind::Vac) return detail::plain(FormalSum(a.shifted(b.flow())));
  if (a.kind() == Kind::Typ && b.kind() == Kind::Typ) return detail::fuse_typ_typ(a, b);

  if (a.is_projective() || b.is_projective()) {
    const CanonicalModule& r = a.is_projective() ? a : b;
    const CanonicalModule& m = a.is_projective() ? b : a;
    FusionResult out;
    for (const auto& [s, k] : composition_factors(m)) out.absorb(detail::fuse_proj_simple(r, s), k);
    return out;
  }

  // Both are B/T strings of length >= 2.
  FlowIndex f = a.flow() + b.flow();
  FusionResult r;
  if (a.kind() == b.kind())
    r = detail::fuse_same_type(a.kind(), a.length(), b.length(), opt, a, b);
  else if (a.kind() == Kind::TStr)
    r = detail::fuse_mixed(a.length(), b.length(), opt, a, b);
  else
    r = detail::fuse_mixed(b.length(), a.length(), opt, b, a);
  return detail::shifted(std::move(r), f);
}

inline FusionResult fuse_detailed(const FormalSum& a, const FormalSum& b,
                                  const FusionOptions& opt = {}) {
  FusionResult out;
  for (const auto& [x, k] : a)
    for (const auto& [y, l] : b) out.absorb(fuse_detailed(x, y, opt), k * l);
  return out;
}

inline FormalSum fuse(const CanonicalModule& a, const CanonicalModule& b,
                      const FusionOptions& opt = {}) {
  return fuse_detailed(a, b, opt).sum;
}

inline FormalSum fuse(const FormalSum& a, const FormalSum& b, const FusionOptions& opt = {}) {
  FormalSum out;
  for (const auto& [x, k] : a)
    for (const auto& [y, l] : b) out += fuse(x, y, opt).scaled(k * l);
  return out;
}

// ---------------------------------------------------------------------------
// Grothendieck ring

/// Integer combination of simple classes.
class GrothClass {
 public:
  using Map = std::map<CanonicalModule, std::int64_t>;

  GrothClass() = default;
  static GrothClass of_simple(const CanonicalModule& s, std::int64_t k = 1) {
    GrothClass g;
    g.add(s, k);
    return g;
  }

  GrothClass& add(const CanonicalModule& s, std::int64_t k) {
    if (k == 0) return *this;
    auto [it, inserted] = terms_.try_emplace(s, k);
    if (!inserted && (it->second += k) == 0) terms_.erase(it);
    return *this;
  }
  GrothClass& operator+=(const GrothClass& o) {
    for (const auto& [s, k] : o.terms_) add(s, k);
    return *this;
  }
  friend GrothClass operator+(GrothClass a, const GrothClass& b) { return a += b; }

  std::int64_t coeff(const CanonicalModule& s) const {
    auto it = terms_.find(s);
    return it == terms_.end() ? 0 : it->second;
  }
  const Map& terms() const { return terms_; }

  std::string str() const {
    if (terms_.empty()) return "0";
    std::string out;
    for (const auto& [s, k] : terms_) {
      if (!out.empty()) out += " + ";
      if (k != 1) out += std::to_string(k) + "*";
      out += "[" + s.str() + "]";
    }
    return out;
  }

  friend bool operator==(const GrothClass&, const GrothClass&) = default;

 private:
  Map terms_;
};

inline GrothClass groth_class(const FormalSum& s) {
  GrothClass g;
  for (const auto& [m, k] : composition_factors(s)) g.add(m, k);
  return g;
}

inline GrothClass groth_class(const CanonicalModule& m) { return groth_class(FormalSum(m)); }

namespace detail {

inline GrothClass simple_product(const CanonicalModule& a, const CanonicalModule& b) {
  using CM = CanonicalModule;
  FlowIndex f = a.flow() + b.flow();
  if (a.kind() == Kind::Vac) return GrothClass::of_simple(b.with_flow(f));
  if (b.kind() == Kind::Vac) return GrothClass::of_simple(a.with_flow(f));
  GhostCoset c = a.coset() + b.coset();
  GrothClass g;
  if (c.is_zero()) {
    g.add(CM::vac(f - 2), 1).add(CM::vac(f - 1), 2).add(CM::vac(f), 1);
  } else {
    g.add(CM::typ(c, f), 1).add(CM::typ(c, f - 1), 1);
  }
  return g;
}

}  // namespace detail

/// Bilinear product from the structure constants on simple classes.
inline GrothClass groth_product(const GrothClass& a, const GrothClass& b) {
  GrothClass out;
  for (const auto& [x, k] : a.terms())
    for (const auto& [y, l] : b.terms()) {
      const GrothClass p = detail::simple_product(x, y);
      for (const auto& [z, c] : p.terms()) out.add(z, c * k * l);
    }
  return out;
}

}  // namespace ghostkit
