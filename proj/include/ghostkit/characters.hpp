#pragma once

// Graded dimensions dim M^{(j)}_{[h]} on a truncated region of the
// (ghost weight, conformal weight) plane.
//
// A fixed-h slice is infinite in the ghost direction, so every series is
// truncated in both directions. The region a series is exact on is
//   jmin <= j <= jmax  and  h - slope * j <= bound,
// which is the shape preserved by spectral flow and duality. A plain
// truncation box has slope 0 and bound hmax.

#include <algorithm>
#include <cstdint>
#include <functional>
#include <map>
#include <utility>
#include <vector>

#include "ghostkit/labels.hpp"
#include "ghostkit/modcat.hpp"

namespace ghostkit {

/// The requested region is not determined by the available data.
struct TruncationError : Error {
  using Error::Error;
};

struct CharRegion {
  Rational jmin;
  Rational jmax;
  Rational slope;
  Rational bound;

  static CharRegion box(const Rational& hmax, const Rational& jmin, const Rational& jmax) {
    return {jmin, jmax, Rational(0), hmax};
  }

  bool contains(const Rational& j, const Rational& h) const {
    return jmin <= j && j <= jmax && h - slope * j <= bound;
  }

  /// Is the plain box (hmax, [a, b]) inside this region? The constraint is
  /// linear in j, so checking the window ends suffices.
  bool covers_box(const Rational& hmax, const Rational& a, const Rational& b) const {
    return jmin <= a && b <= jmax && hmax - slope * a <= bound && hmax - slope * b <= bound;
  }

  friend bool operator==(const CharRegion&, const CharRegion&) = default;
};

class CharSeries {
 public:
  using Key = std::pair<Rational, Rational>;  // (j, h)
  using Map = std::map<Key, std::int64_t>;

  CharSeries() = default;
  explicit CharSeries(CharRegion region) : region_(std::move(region)) {}

  const CharRegion& region() const { return region_; }
  const Map& coeffs() const { return coeffs_; }

  /// Coefficient at (j, h); zero for unsupported points inside the region.
  std::int64_t coeff(const Rational& j, const Rational& h) const {
    if (!region_.contains(j, h))
      throw TruncationError("(" + to_string(j) + ", " + to_string(h) + ") lies outside the series region");
    auto it = coeffs_.find({j, h});
    return it == coeffs_.end() ? 0 : it->second;
  }

  void add(const Rational& j, const Rational& h, std::int64_t d) {
    if (d == 0) return;
    if (!region_.contains(j, h)) return;
    coeffs_[{j, h}] += d;
  }

  CharSeries& operator+=(const CharSeries& o) {
    if (!(region_ == o.region_)) throw TruncationError("adding series over different regions");
    // Both maps are ordered, so a single forward pass merges them.
    auto hint = coeffs_.begin();
    for (const auto& [k, d] : o.coeffs_) {
      while (hint != coeffs_.end() && hint->first < k) ++hint;
      if (hint != coeffs_.end() && hint->first == k) hint->second += d;
      else hint = std::next(coeffs_.emplace_hint(hint, k, d));
    }
    return *this;
  }
  friend CharSeries operator+(CharSeries a, const CharSeries& b) { return a += b; }

  CharSeries scaled(std::int64_t k) const {
    CharSeries r(region_);
    if (k == 0) return r;
    for (const auto& [key, d] : coeffs_) r.coeffs_[key] = d * k;
    return r;
  }

  /// Restriction to the plain box (hmax, [jmin, jmax]); throws if this series
  /// does not determine every coefficient there.
  CharSeries restrict(const Rational& hmax, const Rational& jmin, const Rational& jmax) const {
    if (!region_.covers_box(hmax, jmin, jmax))
      throw TruncationError("requested region is not certified by this series");
    CharSeries r(CharRegion::box(hmax, jmin, jmax));
    for (const auto& [key, d] : coeffs_) r.add(key.first, key.second, d);
    return r;
  }

  friend bool operator==(const CharSeries&, const CharSeries&) = default;

 private:
  CharRegion region_;
  Map coeffs_;
};

namespace detail {

// dp[w][d + H]: number of monomials in beta_{-n}, gamma_{-n} (n >= 1) of
// total weight w with (#beta - #gamma) = d.
class FreeModeTable {
 public:
  explicit FreeModeTable(std::int64_t hmax) : H_(std::max<std::int64_t>(hmax, 0)) {
    const std::size_t width = static_cast<std::size_t>(2 * H_ + 1);
    dp_.assign(static_cast<std::size_t>(H_ + 1), std::vector<std::int64_t>(width, 0));
    dp_[0][static_cast<std::size_t>(H_)] = 1;
    for (std::int64_t n = 1; n <= H_; ++n)
      for (int charge : {+1, -1})
        for (std::int64_t w = n; w <= H_; ++w)
          for (std::int64_t d = -H_; d <= H_; ++d) {
            std::int64_t src = d - charge;
            if (src < -H_ || src > H_) continue;
            at(w, d) += at(w - n, src);
          }
  }

  std::int64_t count(std::int64_t w, std::int64_t d) const {
    if (w < 0 || w > H_ || d < -H_ || d > H_) return 0;
    return dp_[static_cast<std::size_t>(w)][static_cast<std::size_t>(d + H_)];
  }

  std::int64_t total(std::int64_t w) const {
    std::int64_t t = 0;
    for (std::int64_t d = -H_; d <= H_; ++d) t += count(w, d);
    return t;
  }

  std::int64_t hmax() const { return H_; }

 private:
  std::int64_t& at(std::int64_t w, std::int64_t d) {
    return dp_[static_cast<std::size_t>(w)][static_cast<std::size_t>(d + H_)];
  }

  std::int64_t H_;
  std::vector<std::vector<std::int64_t>> dp_;
};

inline std::int64_t to_int(const Rational& r) {
  return boost::multiprecision::numerator(r).convert_to<std::int64_t>();
}

inline Rational ceil_rational(const Rational& r) {
  Rational f = floor_frac(r);
  return f == 0 ? r : r - f + 1;
}

inline Rational floor_rational(const Rational& r) { return r - floor_frac(r); }

/// Elements of the coset c + Z inside [a, b].
inline std::vector<Rational> coset_points(const GhostCoset& c, const Rational& a, const Rational& b) {
  std::vector<Rational> out;
  for (Rational j = ceil_rational(a - c.rep()) + c.rep(); j <= b; j += 1) out.push_back(j);
  return out;
}

/// Untwisted graded dimension of V (is_vac) or W_c at integer depth h >= 0
/// and ghost weight j.
inline std::int64_t base_coeff(const FreeModeTable& t, bool is_vac, const Rational& j,
                               std::int64_t h) {
  if (!is_vac) return t.total(h);
  // Ground states gamma_0^k |0> carry ghost weight -k, so d - k = j needs d >= j.
  const std::int64_t jj = to_int(j);
  std::int64_t s = 0;
  for (std::int64_t d = std::max<std::int64_t>(jj, -h); d <= h; ++d) s += t.count(h, d);
  return s;
}

}  // namespace detail

/// Literal PBW enumeration over the free negative modes for V (= Vac(0)) or
/// W_c (= Typ(c, 0)). Independent of the generating-function path used by
/// `character`.
inline CharSeries pbw_character_oracle(const CanonicalModule& m, const Rational& hmax,
                                       const Rational& jmin, const Rational& jmax) {
  const bool is_vac = m.kind() == Kind::Vac;
  if (!((is_vac || m.kind() == Kind::Typ) && m.flow() == 0))
    throw ValidationError("oracle only covers the untwisted simples V[0] and W[c,0]");
  CharSeries out(CharRegion::box(hmax, jmin, jmax));
  const std::int64_t H = detail::to_int(detail::floor_rational(hmax));
  if (H < 0) return out;

  // Generators in order beta_{-1}, gamma_{-1}, beta_{-2}, gamma_{-2}, ...
  struct Gen {
    std::int64_t weight;
    std::int64_t charge;
  };
  std::vector<Gen> gens;
  for (std::int64_t n = 1; n <= H; ++n) {
    gens.push_back({n, +1});
    gens.push_back({n, -1});
  }

  const std::vector<Rational> window_j =
      is_vac ? std::vector<Rational>{} : detail::coset_points(m.coset(), jmin, jmax);

  std::function<void(std::size_t, std::int64_t, std::int64_t)> walk =
      [&](std::size_t g, std::int64_t w, std::int64_t d) {
        if (g == gens.size()) {
          if (is_vac) {
            // gamma_0^k |0> ground state: ghost weight d - k for every k >= 0.
            for (std::int64_t k = 0; Rational(d - k) >= jmin; ++k)
              if (Rational(d - k) <= jmax) out.add(Rational(d - k), Rational(w), 1);
          } else {
            for (const auto& j : window_j) out.add(j, Rational(w), 1);
          }
          return;
        }
        for (std::int64_t e = 0; w + e * gens[g].weight <= H; ++e)
          walk(g + 1, w + e * gens[g].weight, d + e * gens[g].charge);
      };
  walk(0, 0, 0);
  return out;
}

namespace detail {

// Character of the simple sigma^ell X on the plain box, computed pointwise.
inline CharSeries simple_character(const CanonicalModule& s, const Rational& hmax,
                                   const Rational& jmin, const Rational& jmax) {
  const bool is_vac = s.kind() == Kind::Vac;
  const Rational ell(s.flow());
  const Rational shift = ell * (ell + 1) / 2;
  std::vector<Rational> js =
      is_vac ? coset_points(GhostCoset(), jmin, jmax) : coset_points(s.coset(), jmin, jmax);

  // Flowed point (j', h') comes from the untwisted point
  // (j, h) = (j' + ell, h' - ell (j' + ell) + ell (ell + 1)/2).
  std::int64_t hneed = 0;
  for (const auto& jp : js) {
    Rational h = hmax - ell * (jp + ell) + shift;
    if (h >= 0) hneed = std::max(hneed, to_int(floor_rational(h)));
  }
  FreeModeTable table(hneed);

  CharSeries out(CharRegion::box(hmax, jmin, jmax));
  for (const auto& jp : js) {
    const Rational j = jp + ell;
    const Rational offset = ell * j - shift;  // h' = h + offset
    for (std::int64_t h = 0; Rational(h) + offset <= hmax; ++h)
      out.add(jp, Rational(h) + offset, base_coeff(table, is_vac, j, h));
  }
  return out;
}

}  // namespace detail

/// Graded dimensions on the box (hmax, [jmin, jmax]). Non-simple modules are
/// sums over their composition factors.
inline CharSeries character(const FormalSum& sum, const Rational& hmax, const Rational& jmin,
                            const Rational& jmax) {
  CharSeries out(CharRegion::box(hmax, jmin, jmax));
  for (const auto& [s, k] : composition_factors(sum))
    out += detail::simple_character(s, hmax, jmin, jmax).scaled(k);
  return out;
}

inline CharSeries character(const CanonicalModule& m, const Rational& hmax, const Rational& jmin,
                            const Rational& jmax) {
  return character(FormalSum(m), hmax, jmin, jmax);
}

/// Regrading by spectral flow: (j, h) -> (j - ell, h + ell j - ell(ell+1)/2).
/// The result carries the image region, which is exactly where it is certified.
inline CharSeries char_flow(const CharSeries& ch, FlowIndex ell) {
  const Rational l(ell);
  const CharRegion& r = ch.region();
  CharRegion img{r.jmin - l, r.jmax - l, r.slope + l,
                 r.bound + l * (l - 1) / 2 + r.slope * l};
  CharSeries out(img);
  for (const auto& [key, d] : ch.coeffs()) {
    Weight w = flow_weight({key.first, key.second}, ell);
    out.add(w.j, w.h, d);
  }
  return out;
}

/// Smallest plain box whose char_flow image by ell certifies the box
/// (hmax, [jmin, jmax]). Returned as a region with slope 0.
inline CharRegion flow_source_box(const Rational& hmax, const Rational& jmin, const Rational& jmax,
                                  FlowIndex ell) {
  const Rational l(ell);
  const Rational lift = l * (l - 1) / 2;
  Rational h = std::max(hmax - l * jmin - lift, hmax - l * jmax - lift);
  return CharRegion::box(h, jmin + l, jmax + l);
}

/// Regrading by the restricted dual: (j, h) -> (1 - j, h).
inline CharSeries char_dual(const CharSeries& ch) {
  const CharRegion& r = ch.region();
  CharRegion img{Rational(1) - r.jmax, Rational(1) - r.jmin, -r.slope, r.bound + r.slope};
  CharSeries out(img);
  for (const auto& [key, d] : ch.coeffs()) out.add(Rational(1) - key.first, key.second, d);
  return out;
}

}  // namespace ghostkit
