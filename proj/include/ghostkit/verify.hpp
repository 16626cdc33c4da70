#pragma once

// Property suites behind `ghostkit verify`: fusion, homalg, characters and
// numerics. Each check runs its cases (optionally on several threads) and
// reports counts plus the lowest-index failing case, so output does not
// depend on scheduling.

#include <algorithm>
#include <atomic>
#include <cstdint>
#include <map>
#include <string>
#include <thread>
#include <tuple>
#include <unordered_map>
#include <utility>
#include <vector>

#include "ghostkit/characters.hpp"
#include "ghostkit/functors.hpp"
#include "ghostkit/fusion.hpp"
#include "ghostkit/homalg.hpp"
#include "ghostkit/modcat.hpp"
#include "ghostkit/rigidity.hpp"

namespace ghostkit {

struct CheckResult {
  std::string name;
  std::int64_t cases = 0;
  std::int64_t failures = 0;
  std::string first_failure;

  bool ok() const { return failures == 0; }
};

struct SuiteReport {
  std::string suite;
  std::vector<CheckResult> checks;

  bool ok() const {
    return std::all_of(checks.begin(), checks.end(), [](const CheckResult& c) { return c.ok(); });
  }
};

struct VerifyOptions {
  int max_length = 7;
  int max_flow = 3;
  int catalog_bound = 8;
  Rational hmax{8};
  Rational jmin{-6};
  Rational jmax{6};
  unsigned threads = 0;  // 0: hardware concurrency
};

/// Pool of the sweeps: V[l], W[c,l] for c in {1/3, 1/2, 2/3}, B[n,l] and
/// T[n,l] for 2 <= n <= max_length, P[l], all with |l| <= max_flow.
inline std::vector<CanonicalModule> module_pool(int max_length, int max_flow) {
  using CM = CanonicalModule;
  std::vector<CM> pool;
  for (FlowIndex l = -max_flow; l <= max_flow; ++l) {
    pool.push_back(CM::vac(l));
    for (auto c : {GhostCoset(1, 3), GhostCoset(1, 2), GhostCoset(2, 3)}) pool.push_back(CM::typ(c, l));
    for (int n = 2; n <= max_length; ++n) {
      pool.push_back(CM::bstr(n, l));
      pool.push_back(CM::tstr(n, l));
    }
    pool.push_back(CM::proj(l));
  }
  return pool;
}

/// Per-case bookkeeping handed to check bodies.
struct Tally {
  std::int64_t cases = 0;
  std::int64_t failures = 0;
  std::string first_failure;

  template <class Describe>
  void expect(bool ok, Describe&& describe) {
    ++cases;
    if (ok) return;
    if (failures++ == 0) first_failure = describe();
  }
};

namespace detail {

inline unsigned thread_count(unsigned requested) {
  if (requested) return requested;
  return std::max(1u, std::thread::hardware_concurrency());
}

/// Runs body(i, tally, worker) for i in [0, n) on `threads` workers and merges
/// tallies in index order.
template <class Body>
CheckResult run_check(std::string name, std::size_t n, unsigned threads, Body&& body) {
  std::vector<Tally> tallies(n);
  const unsigned workers = std::min<unsigned>(thread_count(threads), std::max<std::size_t>(n, 1));
  std::atomic<std::size_t> next{0};
  auto work = [&](unsigned w) {
    for (std::size_t i; (i = next.fetch_add(1)) < n;) body(i, tallies[i], w);
  };
  if (workers <= 1) {
    work(0);
  } else {
    std::vector<std::thread> pool;
    for (unsigned w = 0; w < workers; ++w) pool.emplace_back(work, w);
    for (auto& t : pool) t.join();
  }
  CheckResult r;
  r.name = std::move(name);
  for (auto& t : tallies) {
    r.cases += t.cases;
    if (t.failures && !r.failures) r.first_failure = t.first_failure;
    r.failures += t.failures;
  }
  return r;
}

}  // namespace detail

/// Memoised fusion over interned modules: sums are sorted (id, multiplicity)
/// vectors, products of indecomposables are cached by id pair. One instance
/// per thread.
class FusionTable {
 public:
  using Sparse = std::vector<std::pair<int, std::int64_t>>;

  int id(const CanonicalModule& m) {
    auto [it, fresh] = ids_.try_emplace(m, static_cast<int>(mods_.size()));
    if (fresh) mods_.push_back(m);
    return it->second;
  }

  const Sparse& product(int a, int b) {
    const std::uint64_t key = (static_cast<std::uint64_t>(static_cast<std::uint32_t>(a)) << 32) |
                              static_cast<std::uint32_t>(b);
    if (auto it = memo_.find(key); it != memo_.end()) return it->second;
    const FormalSum f = ghostkit::fuse(mods_[a], mods_[b]);
    Sparse s;
    for (const auto& [m, k] : f) s.emplace_back(id(m), k);
    return memo_.emplace(key, normalized(std::move(s))).first->second;
  }

  Sparse product(const Sparse& a, int c) {
    Sparse out;
    for (const auto& [x, k] : a)
      for (const auto& [z, l] : product(x, c)) out.emplace_back(z, k * l);
    return normalized(std::move(out));
  }

  FormalSum to_sum(const Sparse& s) const {
    FormalSum out;
    for (const auto& [z, k] : s) out.add(mods_[z], k);
    return out;
  }

  Sparse product(int a, const Sparse& c) {
    Sparse out;
    for (const auto& [y, k] : c)
      for (const auto& [z, l] : product(a, y)) out.emplace_back(z, k * l);
    return normalized(std::move(out));
  }

 private:
  static Sparse normalized(Sparse s) {
    std::sort(s.begin(), s.end());
    Sparse out;
    for (const auto& [z, k] : s) {
      if (!out.empty() && out.back().first == z) out.back().second += k;
      else out.emplace_back(z, k);
    }
    std::erase_if(out, [](const auto& t) { return t.second == 0; });
    return out;
  }

  std::map<CanonicalModule, int> ids_;
  std::vector<CanonicalModule> mods_;
  std::unordered_map<std::uint64_t, Sparse> memo_;
};

// ---------------------------------------------------------------------------
// fusion

inline CheckResult check_commutativity(const std::vector<CanonicalModule>& pool, unsigned threads) {
  const std::size_t n = pool.size();
  return detail::run_check("commutativity", n, threads, [&](std::size_t i, Tally& t, unsigned) {
    for (const auto& b : pool)
      t.expect(fuse(pool[i], b) == fuse(b, pool[i]),
               [&] { return pool[i].str() + " x " + b.str(); });
  });
}

inline CheckResult check_associativity(const std::vector<CanonicalModule>& pool, unsigned threads) {
  const unsigned workers = detail::thread_count(threads);
  std::vector<FusionTable> tables(workers);
  return detail::run_check("associativity", pool.size(), workers, [&](std::size_t i, Tally& t, unsigned w) {
    FusionTable& tab = tables[w];
    std::vector<int> ids;
    for (const auto& m : pool) ids.push_back(tab.id(m));
    const int a = ids[i];
    for (std::size_t b = 0; b < ids.size(); ++b) {
      const FusionTable::Sparse ab = tab.product(a, ids[b]);
      for (std::size_t c = 0; c < ids.size(); ++c) {
        const FusionTable::Sparse bc = tab.product(ids[b], ids[c]);
        t.expect(tab.product(ab, ids[c]) == tab.product(a, bc),
                 [&] { return "(" + pool[i].str() + " x " + pool[b].str() + ") x " + pool[c].str(); });
      }
    }
  });
}

inline CheckResult check_flow_compat(const std::vector<CanonicalModule>& pool, int max_flow,
                                     unsigned threads) {
  return detail::run_check("flow-compatibility", pool.size(), threads, [&](std::size_t i, Tally& t, unsigned) {
    const auto& a = pool[i];
    for (const auto& b : pool) {
      const FormalSum ab = fuse(a, b);
      for (FlowIndex k = -max_flow; k <= max_flow; ++k)
        for (FlowIndex l = -max_flow; l <= max_flow; ++l)
          t.expect(fuse(flow(a, k), flow(b, l)) == flow(ab, k + l), [&] {
            return "s^" + std::to_string(k) + " " + a.str() + " x s^" + std::to_string(l) + " " + b.str();
          });
    }
  });
}

inline CheckResult check_star_compat(const std::vector<CanonicalModule>& pool, unsigned threads) {
  return detail::run_check("star-compatibility", pool.size(), threads, [&](std::size_t i, Tally& t, unsigned) {
    for (const auto& b : pool)
      t.expect(fuse(dual_star(pool[i]), dual_star(b)) == dual_star(fuse(pool[i], b)),
               [&] { return pool[i].str() + " x " + b.str(); });
  });
}

inline CheckResult check_dihedral(const std::vector<CanonicalModule>& pool, int max_flow) {
  return detail::run_check("conjugation-flow-relation", pool.size(), 1, [&](std::size_t i, Tally& t, unsigned) {
    for (FlowIndex l = -max_flow; l <= max_flow; ++l)
      t.expect(conjugate(flow(pool[i], l)) == flow(conjugate(pool[i]), -l),
               [&] { return pool[i].str() + " l=" + std::to_string(l); });
  });
}

/// Grothendieck homomorphism; also counts the guard-extended products it covered.
inline CheckResult check_grothendieck(const std::vector<CanonicalModule>& pool, unsigned threads,
                                      std::int64_t* guard_extended = nullptr) {
  std::atomic<std::int64_t> extended{0};
  auto r = detail::run_check("grothendieck", pool.size(), threads, [&](std::size_t i, Tally& t, unsigned) {
    for (const auto& b : pool) {
      FusionResult f = fuse_detailed(pool[i], b);
      if (f.guard_extended) ++extended;
      t.expect(groth_class(f.sum) == groth_product(groth_class(pool[i]), groth_class(b)),
               [&] { return pool[i].str() + " x " + b.str(); });
    }
  });
  if (guard_extended) *guard_extended = extended;
  return r;
}

inline CheckResult check_rigidity_trace(const std::vector<CanonicalModule>& pool) {
  return detail::run_check("rigidity-trace", pool.size(), 1, [&](std::size_t i, Tally& t, unsigned) {
    const auto& m = pool[i];
    if (!m.is_simple()) return;
    const FormalSum expect = m.kind() == Kind::Vac ? FormalSum(CanonicalModule::vac(0))
                                                   : FormalSum(CanonicalModule::proj(0));
    t.expect(fuse(dual_tensor(m), m) == expect, [&] { return m.str(); });
  });
}

inline SuiteReport verify_fusion(const VerifyOptions& o) {
  const auto pool = module_pool(o.max_length, o.max_flow);
  SuiteReport r;
  r.suite = "fusion";
  r.checks.push_back(check_commutativity(pool, o.threads));
  r.checks.push_back(check_associativity(pool, o.threads));
  r.checks.push_back(check_flow_compat(pool, o.max_flow, o.threads));
  r.checks.push_back(check_star_compat(pool, o.threads));
  r.checks.push_back(check_dihedral(pool, o.max_flow));
  r.checks.push_back(check_grothendieck(pool, o.threads));
  r.checks.push_back(check_rigidity_trace(pool));
  return r;
}

// ---------------------------------------------------------------------------
// homalg

namespace detail {

inline std::int64_t kd(FlowIndex a, FlowIndex b) { return a == b ? 1 : 0; }

// Reference tables for V_m, T^2_m, B^2_m, P_m: rows are sources at flow n,
// columns targets at flow m. Column/row order V, T2, B2, P.
inline std::int64_t ref_hom(int row, int col, FlowIndex n, FlowIndex m) {
  const std::int64_t t[4][4] = {
      {kd(n, m), kd(n, m + 1), kd(n, m), kd(n, m)},
      {kd(n, m), kd(n, m) + kd(n, m + 1), kd(n, m), kd(n, m - 1) + kd(n, m)},
      {kd(n, m - 1), kd(n, m), kd(n, m - 1) + kd(n, m), kd(n, m - 1) + kd(n, m)},
      {kd(n, m), kd(n, m) + kd(n, m + 1), kd(n, m) + kd(n, m + 1),
       kd(n, m - 1) + 2 * kd(n, m) + kd(n, m + 1)}};
  return t[row][col];
}

inline std::int64_t ref_ext(int row, int col, FlowIndex n, FlowIndex m) {
  const std::int64_t t[3][3] = {{kd(n, m - 1) + kd(n, m + 1), kd(n, m + 2), kd(n, m - 1)},
                                {kd(n, m + 1), kd(n, m + 1) + kd(n, m + 2), 0},
                                {kd(n, m - 2), 0, kd(n, m - 2) + kd(n, m - 1)}};
  return t[row][col];
}

inline CanonicalModule table_module(int kind, FlowIndex f) {
  switch (kind) {
    case 0: return CanonicalModule::vac(f);
    case 1: return CanonicalModule::tstr(2, f);
    case 2: return CanonicalModule::bstr(2, f);
    default: return CanonicalModule::proj(f);
  }
}

inline FormalSum proj_run(FlowIndex first, int count) {
  FormalSum s;
  for (int i = 0; i < count; ++i) s.add(CanonicalModule::proj(first + 2 * i));
  return s;
}

}  // namespace detail

inline CheckResult check_hom_table() {
  return detail::run_check("hom-table", 16, 1, [](std::size_t i, Tally& t, unsigned) {
    const int row = static_cast<int>(i / 4), col = static_cast<int>(i % 4);
    for (FlowIndex off = -4; off <= 4; ++off) {
      const FlowIndex m = 0, n = off;
      const auto a = detail::table_module(row, n), b = detail::table_module(col, m);
      t.expect(hom_dim(a, b) == detail::ref_hom(row, col, n, m), [&] { return a.str() + " -> " + b.str(); });
    }
  });
}

inline CheckResult check_ext_table() {
  return detail::run_check("ext-table", 9, 1, [](std::size_t i, Tally& t, unsigned) {
    const int row = static_cast<int>(i / 3), col = static_cast<int>(i % 3);
    for (FlowIndex off = -4; off <= 4; ++off) {
      const FlowIndex m = 0, n = off;
      const auto a = detail::table_module(row, n), b = detail::table_module(col, m);
      t.expect(ext_dim(a, b) == detail::ref_ext(row, col, n, m), [&] { return a.str() + " , " + b.str(); });
    }
  });
}

inline CheckResult check_vacuum_ext() {
  return detail::run_check("vacuum-ext", 1, 1, [](std::size_t, Tally& t, unsigned) {
    for (FlowIndex k = -5; k <= 5; ++k)
      for (FlowIndex l = -5; l <= 5; ++l)
        t.expect(ext_dim(CanonicalModule::vac(k), CanonicalModule::vac(l)) == ((k - l) * (k - l) == 1 ? 1 : 0),
                 [&] { return "V[" + std::to_string(k) + "], V[" + std::to_string(l) + "]"; });
  });
}

/// Ext(T^{2n+1}, B^m_{2n+1}) = Ext(B^{2n}, B^m_{2n}) = 1.
inline CheckResult check_string_ext_values() {
  using CM = CanonicalModule;
  return detail::run_check("string-ext-values", 1, 1, [](std::size_t, Tally& t, unsigned) {
    for (int n = 0; n <= 4; ++n)
      for (int m = 1; m <= 7; ++m) {
        t.expect(ext_dim(CM::tstr(2 * n + 1, 0), CM::bstr(m, 2 * n + 1)) == 1,
                 [&] { return CM::tstr(2 * n + 1, 0).str() + " , " + CM::bstr(m, 2 * n + 1).str(); });
        if (n >= 1)
          t.expect(ext_dim(CM::bstr(2 * n, 0), CM::bstr(m, 2 * n)) == 1,
                   [&] { return CM::bstr(2 * n, 0).str() + " , " + CM::bstr(m, 2 * n).str(); });
      }
  });
}

inline CheckResult check_covers_hulls() {
  using CM = CanonicalModule;
  using detail::proj_run;
  return detail::run_check("covers-hulls", 1, 1, [](std::size_t, Tally& t, unsigned) {
    for (int k = 1; k <= 4; ++k)
      for (FlowIndex m = -3; m <= 3; ++m) {
        auto tag = [&](const CM& x) { return [x] { return x.str(); }; };
        t.expect(projective_cover(CM::bstr(2 * k + 1, m)) == proj_run(m + 1, k), tag(CM::bstr(2 * k + 1, m)));
        t.expect(projective_cover(CM::bstr(2 * k, m)) == proj_run(m + 1, k), tag(CM::bstr(2 * k, m)));
        t.expect(projective_cover(CM::tstr(2 * k + 1, m)) == proj_run(m, k + 1), tag(CM::tstr(2 * k + 1, m)));
        t.expect(projective_cover(CM::tstr(2 * k, m)) == proj_run(m, k), tag(CM::tstr(2 * k, m)));
        t.expect(injective_hull(CM::bstr(2 * k + 1, m)) == proj_run(m, k + 1), tag(CM::bstr(2 * k + 1, m)));
        t.expect(injective_hull(CM::bstr(2 * k, m)) == proj_run(m, k), tag(CM::bstr(2 * k, m)));
        t.expect(injective_hull(CM::tstr(2 * k + 1, m)) == proj_run(m + 1, k), tag(CM::tstr(2 * k + 1, m)));
        t.expect(injective_hull(CM::tstr(2 * k, m)) == proj_run(m + 1, k), tag(CM::tstr(2 * k, m)));
      }
  });
}

inline CheckResult check_presentation_balance(const std::vector<CanonicalModule>& pool) {
  return detail::run_check("presentation-balance", pool.size(), 1, [&](std::size_t i, Tally& t, unsigned) {
    const auto& m = pool[i];
    if (m.is_projective()) return;
    t.expect(composition_factors(projective_cover(m)) ==
                 composition_factors(m) + composition_factors(presentation_kernel(m)),
             [&] { return "kernel of " + m.str(); });
    t.expect(composition_factors(injective_hull(m)) ==
                 composition_factors(m) + composition_factors(presentation_cokernel(m)),
             [&] { return "cokernel of " + m.str(); });
  });
}

inline CheckResult check_euler(const std::vector<CanonicalModule>& pool, int bound) {
  const auto catalog = sequence_catalog(bound);
  std::vector<CanonicalModule> probes;
  for (const auto& m : pool)
    if (m.is_projective()) probes.push_back(m);
  return detail::run_check("euler-checks", catalog.size(), 1, [&](std::size_t i, Tally& t, unsigned) {
    for (const auto& p : probes)
      t.expect(euler_check(catalog[i], p), [&] { return catalog[i].name + " probe " + p.str(); });
  });
}

inline CheckResult check_duality_symmetries(const std::vector<CanonicalModule>& pool, unsigned threads) {
  return detail::run_check("duality-symmetries", pool.size(), threads, [&](std::size_t i, Tally& t, unsigned) {
    const auto& a = pool[i];
    for (const auto& b : pool) {
      const auto h = hom_dim(a, b), e = ext_dim(a, b);
      auto tag = [&] { return a.str() + " , " + b.str(); };
      t.expect(h == hom_dim(dual_star(b), dual_star(a)), tag);
      t.expect(h == hom_dim(flow(a, 2), flow(b, 2)), tag);
      t.expect(e == ext_dim(dual_star(b), dual_star(a)), tag);
      t.expect(e == ext_dim(flow(a, -3), flow(b, -3)), tag);
      if (a.is_projective() || b.is_projective()) t.expect(e == 0, tag);
    }
  });
}

inline CheckResult check_defining_ext(int bound) {
  const auto catalog = sequence_catalog(bound);
  return detail::run_check("defining-ext", catalog.size(), 1, [&](std::size_t i, Tally& t, unsigned) {
    const auto& s = catalog[i];
    if (s.family.rfind("def-", 0) != 0) return;
    t.expect(ext_dim(s.quotient, s.sub) == 1, [&] { return s.name; });
  });
}

inline SuiteReport verify_homalg(const VerifyOptions& o) {
  const auto pool = module_pool(o.max_length, o.max_flow);
  SuiteReport r;
  r.suite = "homalg";
  r.checks.push_back(check_hom_table());
  r.checks.push_back(check_ext_table());
  r.checks.push_back(check_vacuum_ext());
  r.checks.push_back(check_string_ext_values());
  r.checks.push_back(check_covers_hulls());
  r.checks.push_back(check_presentation_balance(pool));
  r.checks.push_back(check_euler(pool, o.catalog_bound));
  r.checks.push_back(check_duality_symmetries(pool, o.threads));
  r.checks.push_back(check_defining_ext(o.catalog_bound));
  return r;
}

// ---------------------------------------------------------------------------
// characters

/// Characters summed from memoised simple characters; one instance per thread.
/// Flow and dual images are memoised per simple factor too, which is sound
/// because both regradings are additive.
class CharacterCache {
 public:
  CharSeries operator()(const CanonicalModule& m, const Rational& hmax, const Rational& jmin,
                        const Rational& jmax) {
    return summed(m, hmax, jmin, jmax, [&](const CanonicalModule& s) -> const CharSeries& {
      return lookup(s, 0, Op::Plain, hmax, jmin, jmax);
    });
  }

  /// Character of flow(M, ell) on the box, read off from char_flow of a
  /// source box large enough to certify it.
  CharSeries flowed(const CanonicalModule& m, FlowIndex ell, const Rational& hmax, const Rational& jmin,
                    const Rational& jmax) {
    return summed(m, hmax, jmin, jmax, [&](const CanonicalModule& s) -> const CharSeries& {
      return lookup(s, ell, Op::Flow, hmax, jmin, jmax);
    });
  }

  /// Character of the restricted dual read off from char_dual.
  CharSeries dualized(const CanonicalModule& m, const Rational& hmax, const Rational& jmin,
                      const Rational& jmax) {
    return summed(m, hmax, jmin, jmax, [&](const CanonicalModule& s) -> const CharSeries& {
      return lookup(s, 0, Op::Dual, hmax, jmin, jmax);
    });
  }

 private:
  enum class Op { Plain, Flow, Dual };
  using Key = std::tuple<CanonicalModule, FlowIndex, Op, Rational, Rational, Rational>;

  template <class Simple>
  static CharSeries summed(const CanonicalModule& m, const Rational& hmax, const Rational& jmin,
                           const Rational& jmax, Simple&& simple) {
    CharSeries out(CharRegion::box(hmax, jmin, jmax));
    for (const auto& [s, k] : composition_factors(m)) out += simple(s).scaled(k);
    return out;
  }

  const CharSeries& lookup(const CanonicalModule& s, FlowIndex ell, Op op, const Rational& hmax,
                           const Rational& jmin, const Rational& jmax) {
    Key key{s, ell, op, hmax, jmin, jmax};
    if (auto it = memo_.find(key); it != memo_.end()) return it->second;
    CharSeries v;
    switch (op) {
      case Op::Plain:
        v = detail::simple_character(s, hmax, jmin, jmax);
        break;
      case Op::Flow: {
        const CharRegion src = flow_source_box(hmax, jmin, jmax, ell);
        v = char_flow(detail::simple_character(s, src.bound, src.jmin, src.jmax), ell).restrict(hmax, jmin, jmax);
        break;
      }
      case Op::Dual:
        v = char_dual(detail::simple_character(s, hmax, Rational(1) - jmax, Rational(1) - jmin))
                .restrict(hmax, jmin, jmax);
        break;
    }
    return memo_.emplace(std::move(key), std::move(v)).first->second;
  }

  std::map<Key, CharSeries> memo_;
};

inline SuiteReport verify_characters(const VerifyOptions& o) {
  using CM = CanonicalModule;
  const auto pool = module_pool(o.max_length, o.max_flow);
  const Rational &H = o.hmax, &a = o.jmin, &b = o.jmax;
  SuiteReport r;
  r.suite = "characters";

  const std::vector<CM> untwisted{CM::vac(0), CM::typ(GhostCoset(1, 3), 0), CM::typ(GhostCoset(1, 2), 0),
                                  CM::typ(GhostCoset(2, 3), 0)};
  r.checks.push_back(detail::run_check("oracle-agreement", untwisted.size(), o.threads,
                                       [&](std::size_t i, Tally& t, unsigned) {
                                         t.expect(character(untwisted[i], H, a, b) ==
                                                      pbw_character_oracle(untwisted[i], H, a, b),
                                                  [&] { return untwisted[i].str(); });
                                       }));

  const auto catalog = sequence_catalog(o.catalog_bound);
  r.checks.push_back(detail::run_check("sequence-additivity", catalog.size(), o.threads,
                                       [&](std::size_t i, Tally& t, unsigned) {
                                         const auto& s = catalog[i];
                                         t.expect(character(s.middle, H, a, b) ==
                                                      character(s.sub, H, a, b) + character(s.quotient, H, a, b),
                                                  [&] { return s.name; });
                                       }));

  std::vector<CharacterCache> caches(detail::thread_count(o.threads));
  r.checks.push_back(detail::run_check("flow-compatibility", pool.size(), o.threads,
                                       [&](std::size_t i, Tally& t, unsigned w) {
                                         const auto& m = pool[i];
                                         for (FlowIndex l = -3; l <= 3; ++l)
                                           t.expect(caches[w].flowed(m, l, H, a, b) ==
                                                        caches[w](flow(m, l), H, a, b),
                                                    [&] { return m.str() + " l=" + std::to_string(l); });
                                       }));

  r.checks.push_back(detail::run_check("dual-compatibility", pool.size(), o.threads,
                                       [&](std::size_t i, Tally& t, unsigned w) {
                                         const auto& m = pool[i];
                                         t.expect(caches[w].dualized(m, H, a, b) ==
                                                      caches[w](dual_restricted(m), H, a, b),
                                                  [&] { return m.str(); });
                                       }));
  return r;
}

// ---------------------------------------------------------------------------
// numerics

/// The 50-point grid 0.02 .. 0.98.
inline std::vector<double> rigidity_grid() {
  std::vector<double> js;
  for (int i = 0; i < 50; ++i) js.push_back(0.02 + 0.96 * i / 49.0);
  return js;
}

inline SuiteReport verify_numerics(const VerifyOptions&) {
  const auto grid = rigidity_grid();
  SuiteReport r;
  r.suite = "numerics";
  r.checks.push_back(detail::run_check("hypergeometric-identities", grid.size(), 1,
                                       [&](std::size_t i, Tally& t, unsigned) {
                                         t.expect(rigidity_identities(grid[i]).pass(),
                                                  [&] { return "j=" + std::to_string(grid[i]); });
                                       }));
  r.checks.push_back(detail::run_check("rigidity-nonvanishing", grid.size(), 1,
                                       [&](std::size_t i, Tally& t, unsigned) {
                                         t.expect(std::abs(rigidity_constant(grid[i], 1.0)) > 1e-8,
                                                  [&] { return "j=" + std::to_string(grid[i]); });
                                       }));
  return r;
}

inline const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names{"fusion", "homalg", "characters", "numerics"};
  return names;
}

inline SuiteReport run_suite(const std::string& name, const VerifyOptions& o) {
  if (name == "fusion") return verify_fusion(o);
  if (name == "homalg") return verify_homalg(o);
  if (name == "characters") return verify_characters(o);
  if (name == "numerics") return verify_numerics(o);
  throw ValidationError("unknown suite '" + name + "'");
}

}  // namespace ghostkit
