#pragma once

// Hom and Ext^1 dimensions, projective covers, injective hulls and the
// kernels/cokernels of minimal presentations.
//
// Hom between vacuum-block strings counts the common segments that are a
// quotient of the source and a submodule of the target. Projective (= injective)
// modules are handled by multiplicity counting. Ext^1 comes from the
// Hom-Ext sequence of the minimal projective presentation.

#include <cstdint>

#include "ghostkit/modcat.hpp"

namespace ghostkit {

namespace detail {

inline Row word_row(const CanonicalModule& m, FlowIndex f) {
  Row base = m.kind() == Kind::TStr ? Row::Top : Row::Bottom;
  return string_row(base, f - m.flow());
}

// Both arguments are Vac or B/T strings.
inline std::int64_t string_hom(const CanonicalModule& src, const CanonicalModule& dst) {
  const FlowIndex s0 = src.flow(), s1 = src.flow() + src.length() - 1;
  const FlowIndex d0 = dst.flow(), d1 = dst.flow() + dst.length() - 1;
  const FlowIndex lo = std::max(s0, d0), hi = std::min(s1, d1);
  std::int64_t count = 0;
  for (FlowIndex a = lo; a <= hi; ++a) {
    // A segment is a quotient of src iff every interior boundary end is a top
    // factor, and a submodule of dst iff every interior boundary end is a bottom
    // factor.
    if (a > s0 && word_row(src, a) != Row::Top) continue;
    if (a > d0 && word_row(dst, a) != Row::Bottom) continue;
    for (FlowIndex b = a; b <= hi; ++b) {
      if (b > a && word_row(src, a) != word_row(dst, a)) break;
      if (b < s1 && word_row(src, b) != Row::Top) continue;
      if (b < d1 && word_row(dst, b) != Row::Bottom) continue;
      ++count;
    }
  }
  return count;
}

}  // namespace detail

/// dim Hom(M, N).
inline std::int64_t hom_dim(const CanonicalModule& m, const CanonicalModule& n) {
  if (m.kind() == Kind::Typ) return composition_factors(n).count(m);
  if (n.kind() == Kind::Typ) return composition_factors(m).count(n);
  if (m.kind() == Kind::Proj) return composition_factors(n).count(CanonicalModule::vac(m.flow()));
  if (n.kind() == Kind::Proj) return composition_factors(m).count(CanonicalModule::vac(n.flow()));
  return detail::string_hom(m, n);
}

inline std::int64_t hom_dim(const FormalSum& m, const FormalSum& n) {
  std::int64_t d = 0;
  for (const auto& [x, k] : m)
    for (const auto& [y, l] : n) d += k * l * hom_dim(x, y);
  return d;
}

/// P(M) = P(hd M), a sum of P_m over the head factors V_m (and W itself for W).
inline FormalSum projective_cover(const CanonicalModule& m) {
  if (m.is_projective()) return FormalSum(m);
  FormalSum out;
  for (const auto& [s, k] : head(m)) out.add(CanonicalModule::proj(s.flow()), k);
  return out;
}

/// I(M) = I(soc M).
inline FormalSum injective_hull(const CanonicalModule& m) {
  if (m.is_projective()) return FormalSum(m);
  FormalSum out;
  for (const auto& [s, k] : socle(m)) out.add(CanonicalModule::proj(s.flow()), k);
  return out;
}

inline FormalSum projective_cover(const FormalSum& s) {
  FormalSum out;
  for (const auto& [m, k] : s) out += projective_cover(m).scaled(k);
  return out;
}

inline FormalSum injective_hull(const FormalSum& s) {
  FormalSum out;
  for (const auto& [m, k] : s) out += injective_hull(m).scaled(k);
  return out;
}

/// Kernel of the projective cover P(M) -> M for non-projective indecomposable M.
inline CanonicalModule presentation_kernel(const CanonicalModule& m) {
  using CM = CanonicalModule;
  if (m.is_projective()) throw ValidationError(m.str() + " is projective");
  const std::int64_t n = m.length();
  const FlowIndex f = m.flow();
  switch (m.kind()) {
    case Kind::Vac: return CM::tstr(3, f - 1);
    case Kind::BStr: return n % 2 == 1 ? CM::bstr(n - 2, f + 1) : CM::bstr(n, f + 1);
    case Kind::TStr: return n % 2 == 1 ? CM::tstr(n + 2, f - 1) : CM::tstr(n, f - 1);
    default: break;
  }
  throw ValidationError(m.str() + " is projective");
}

/// Cokernel of the injective hull M -> I(M) for non-injective indecomposable M.
inline CanonicalModule presentation_cokernel(const CanonicalModule& m) {
  using CM = CanonicalModule;
  if (m.is_projective()) throw ValidationError(m.str() + " is injective");
  const std::int64_t n = m.length();
  const FlowIndex f = m.flow();
  switch (m.kind()) {
    case Kind::Vac: return CM::bstr(3, f - 1);
    case Kind::BStr: return n % 2 == 1 ? CM::bstr(n + 2, f - 1) : CM::bstr(n, f - 1);
    case Kind::TStr: return n % 2 == 1 ? CM::tstr(n - 2, f + 1) : CM::tstr(n, f + 1);
    default: break;
  }
  throw ValidationError(m.str() + " is injective");
}

/// dim Ext^1(M, N). From 0 -> K -> P(M) -> M -> 0 and Ext^1(P(M), N) = 0:
/// dim Ext^1(M, N) = dim Hom(K, N) - dim Hom(P(M), N) + dim Hom(M, N).
inline std::int64_t ext_dim(const CanonicalModule& m, const CanonicalModule& n) {
  if (m.is_projective() || n.is_projective()) return 0;
  CanonicalModule k = presentation_kernel(m);
  return hom_dim(k, n) - hom_dim(projective_cover(m), FormalSum(n)) + hom_dim(m, n);
}

inline std::int64_t ext_dim(const FormalSum& m, const FormalSum& n) {
  std::int64_t d = 0;
  for (const auto& [x, k] : m)
    for (const auto& [y, l] : n) d += k * l * ext_dim(x, y);
  return d;
}

/// Hom(probe, -) and Hom(-, probe) are exact for a projective-injective
/// probe; checks both dimension identities on the sequence.
inline bool euler_check(const ExactSequence& seq, const CanonicalModule& probe) {
  if (!probe.is_projective())
    throw ValidationError(probe.str() + " is neither projective nor injective");
  FormalSum p(probe);
  bool covariant =
      hom_dim(p, seq.middle) == hom_dim(p, seq.sub) + hom_dim(p, seq.quotient);
  bool contravariant =
      hom_dim(seq.middle, p) == hom_dim(seq.sub, p) + hom_dim(seq.quotient, p);
  return covariant && contravariant;
}

}  // namespace ghostkit
