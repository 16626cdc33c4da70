#pragma once

// Spectral flow, conjugation and the three dualities acting on labels.

#include "ghostkit/modcat.hpp"

namespace ghostkit {

inline CanonicalModule flow(const CanonicalModule& m, FlowIndex ell) { return m.shifted(ell); }

inline FormalSum flow(const FormalSum& s, FlowIndex ell) {
  FormalSum r;
  for (const auto& [m, k] : s) r.add(m.shifted(ell), k);
  return r;
}

namespace detail {

// Strings under l -> -1-l: the word reverses, so the new base factor is the
// old last factor. `swap_rows` is set for contravariant functors.
inline CanonicalModule reflect_string(const CanonicalModule& m, bool swap_rows) {
  const std::int64_t n = m.length();
  Row base_row = m.kind() == Kind::BStr ? Row::Bottom : Row::Top;
  Row last = string_row(base_row, n - 1);
  if (swap_rows) last = (last == Row::Top) ? Row::Bottom : Row::Top;
  return string_from_word(-m.flow() - n, n, last);
}

template <class F>
FormalSum map_sum(const FormalSum& s, F f) {
  FormalSum r;
  for (const auto& [m, k] : s) r.add(f(m), k);
  return r;
}

}  // namespace detail

/// Twist by the conjugation automorphism: c(s^l V) = s^{-1-l} V,
/// c(s^l W_c) = s^{-l} W_{-c}; strings keep their rows.
inline CanonicalModule conjugate(const CanonicalModule& m) {
  switch (m.kind()) {
    case Kind::Vac: return CanonicalModule::vac(-1 - m.flow());
    case Kind::Typ: return CanonicalModule::typ(-m.coset(), -m.flow());
    case Kind::BStr:
    case Kind::TStr: return detail::reflect_string(m, false);
    case Kind::Proj: return CanonicalModule::proj(-1 - m.flow());
  }
  return m;
}

/// Restricted (contragredient) dual. Same flow map as conjugation, but the
/// Loewy rows swap because the functor is contravariant.
inline CanonicalModule dual_restricted(const CanonicalModule& m) {
  switch (m.kind()) {
    case Kind::Vac: return CanonicalModule::vac(-1 - m.flow());
    case Kind::Typ: return CanonicalModule::typ(-m.coset(), -m.flow());
    case Kind::BStr:
    case Kind::TStr: return detail::reflect_string(m, true);
    case Kind::Proj: return CanonicalModule::proj(-1 - m.flow());
  }
  return m;
}

/// Star dual, conjugation after restricted dual. Fixes simples and P_m,
/// exchanges B^n_m and T^n_m.
inline CanonicalModule dual_star(const CanonicalModule& m) { return conjugate(dual_restricted(m)); }

/// Tensor (rigid) dual: sigma applied to the restricted dual.
inline CanonicalModule dual_tensor(const CanonicalModule& m) { return dual_restricted(m).shifted(1); }

inline FormalSum conjugate(const FormalSum& s) {
  return detail::map_sum(s, [](const CanonicalModule& m) { return conjugate(m); });
}
inline FormalSum dual_restricted(const FormalSum& s) {
  return detail::map_sum(s, [](const CanonicalModule& m) { return dual_restricted(m); });
}
inline FormalSum dual_star(const FormalSum& s) {
  return detail::map_sum(s, [](const CanonicalModule& m) { return dual_star(m); });
}
inline FormalSum dual_tensor(const FormalSum& s) {
  return detail::map_sum(s, [](const CanonicalModule& m) { return dual_tensor(m); });
}

}  // namespace ghostkit
