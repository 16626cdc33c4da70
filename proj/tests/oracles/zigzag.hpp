#pragma once

// Test-only oracle: vacuum-block modules as explicit representations of the
// zigzag algebra on the integer line (arrows k -> k+1 "up" and k -> k-1
// "down", relations up.up = down.down = 0 and down.up = up.down), with Hom and
// Ext^1 dimensions computed by exact linear algebra over Q. Shares no code
// with the library's segment counting or presentation tables.

#include <cstdint>
#include <stdexcept>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace oracle {

using Q = boost::multiprecision::cpp_rational;

struct Arrow {
  int from;
  int to;
};

struct Rep {
  std::vector<std::int64_t> vertex;  // vertex of each basis vector
  std::vector<Arrow> up;             // basis i -> basis j, vertex(j) = vertex(i) + 1
  std::vector<Arrow> down;           // vertex(j) = vertex(i) - 1

  int dim() const { return static_cast<int>(vertex.size()); }
};

/// String on flows base..base+n-1; top[i] says whether factor i is in the head row.
inline Rep string_rep(std::int64_t base, const std::vector<bool>& top) {
  Rep r;
  const int n = static_cast<int>(top.size());
  for (int i = 0; i < n; ++i) r.vertex.push_back(base + i);
  for (int i = 0; i + 1 < n; ++i) {
    if (top[i] == top[i + 1]) throw std::logic_error("string rows must alternate");
    if (top[i]) r.up.push_back({i, i + 1});
    else r.down.push_back({i + 1, i});
  }
  return r;
}

/// B^n_m has its base factor in the socle, T^n_m in the head.
inline Rep b_rep(int n, std::int64_t m) {
  std::vector<bool> top(n);
  for (int i = 0; i < n; ++i) top[i] = (i % 2 == 1);
  return string_rep(m, top);
}

inline Rep t_rep(int n, std::int64_t m) {
  std::vector<bool> top(n);
  for (int i = 0; i < n; ++i) top[i] = (i % 2 == 0);
  return string_rep(m, top);
}

inline Rep v_rep(std::int64_t m) { return string_rep(m, {false}); }

/// Indecomposable projective at vertex m: top t, middle u (m-1) and w (m+1), socle s.
inline Rep p_rep(std::int64_t m) {
  Rep r;
  r.vertex = {m, m - 1, m + 1, m};  // t, u, w, s
  r.up = {{0, 2}, {1, 3}};          // t -> w, u -> s
  r.down = {{0, 1}, {2, 3}};        // t -> u, w -> s
  return r;
}

inline Rep direct_sum(const Rep& a, const Rep& b) {
  Rep r = a;
  const int off = a.dim();
  for (auto v : b.vertex) r.vertex.push_back(v);
  for (auto e : b.up) r.up.push_back({e.from + off, e.to + off});
  for (auto e : b.down) r.down.push_back({e.from + off, e.to + off});
  return r;
}

/// Rank over Q of a dense matrix (Gaussian elimination).
inline int rank(std::vector<std::vector<Q>> m) {
  int rows = static_cast<int>(m.size());
  if (rows == 0) return 0;
  int cols = static_cast<int>(m[0].size());
  int r = 0;
  for (int c = 0; c < cols && r < rows; ++c) {
    int piv = -1;
    for (int i = r; i < rows; ++i)
      if (m[i][c] != 0) {
        piv = i;
        break;
      }
    if (piv < 0) continue;
    std::swap(m[r], m[piv]);
    for (int i = 0; i < rows; ++i) {
      if (i == r || m[i][c] == 0) continue;
      Q f = m[i][c] / m[r][c];
      for (int k = c; k < cols; ++k) m[i][k] -= f * m[r][k];
    }
    ++r;
  }
  return r;
}

namespace detail {

// Dense matrix of a map given by arrows: mat[to][from].
inline std::vector<std::vector<Q>> matrix(const Rep& r, const std::vector<Arrow>& arrows) {
  std::vector<std::vector<Q>> m(r.dim(), std::vector<Q>(r.dim(), 0));
  for (auto e : arrows) m[e.to][e.from] += 1;
  return m;
}

// Variables: linear maps M -> N whose (j, i) entry is allowed only when
// vertex_N(j) = vertex_M(i) + shift.
struct VarSpace {
  std::vector<std::pair<int, int>> entries;  // (row j in N, column i in M)
  int index(int j, int i) const {
    for (std::size_t k = 0; k < entries.size(); ++k)
      if (entries[k].first == j && entries[k].second == i) return static_cast<int>(k);
    return -1;
  }
};

inline VarSpace var_space(const Rep& m, const Rep& n, int shift) {
  VarSpace v;
  for (int j = 0; j < n.dim(); ++j)
    for (int i = 0; i < m.dim(); ++i)
      if (n.vertex[j] == m.vertex[i] + shift) v.entries.push_back({j, i});
  return v;
}

// A linear expression in the variables of several blocks, evaluated as a
// matrix-valued function; each equation row is one matrix entry.
using Mat = std::vector<std::vector<Q>>;

// Coefficient matrix of the map X -> L * X * R (entrywise), with X ranging
// over `vars`, as rows indexed by (row, col) of the N x M result.
inline void add_term(std::vector<std::vector<Q>>& eqs, int col_offset, const VarSpace& vars,
                     const Mat& left, const Mat& right, const Q& coeff, int n_dim, int m_dim) {
  // (L X R)[a][b] = sum_{j,i} L[a][j] X[j][i] R[i][b]
  for (std::size_t k = 0; k < vars.entries.size(); ++k) {
    auto [j, i] = vars.entries[k];
    for (int a = 0; a < n_dim; ++a) {
      if (left[a][j] == 0) continue;
      for (int b = 0; b < m_dim; ++b) {
        if (right[i][b] == 0) continue;
        eqs[a * m_dim + b][col_offset + static_cast<int>(k)] += coeff * left[a][j] * right[i][b];
      }
    }
  }
}

inline Mat identity(int d) {
  Mat m(d, std::vector<Q>(d, 0));
  for (int i = 0; i < d; ++i) m[i][i] = 1;
  return m;
}

}  // namespace detail

/// dim Hom(M, N): vertex-preserving X with X rho_M(a) = rho_N(a) X for both arrows.
inline int hom_dim(const Rep& m, const Rep& n) {
  using namespace detail;
  VarSpace vars = var_space(m, n, 0);
  const int nv = static_cast<int>(vars.entries.size());
  if (nv == 0) return 0;
  const int nd = n.dim(), md = m.dim();
  Mat In = identity(nd), Im = identity(md);
  std::vector<std::vector<Q>> eqs;
  for (const auto* arrows : {&m.up, &m.down}) {
    const auto* narrows = (arrows == &m.up) ? &n.up : &n.down;
    Mat am = matrix(m, *arrows), an = matrix(n, *narrows);
    std::vector<std::vector<Q>> block(nd * md, std::vector<Q>(nv, 0));
    add_term(block, 0, vars, In, am, 1, nd, md);
    add_term(block, 0, vars, an, Im, -1, nd, md);
    eqs.insert(eqs.end(), block.begin(), block.end());
  }
  return nv - rank(eqs);
}

/// dim Ext^1(M, N) = dim Z^1 - dim B^1 for the extension cocycles of the
/// zigzag relations.
inline int ext_dim(const Rep& m, const Rep& n) {
  using namespace detail;
  VarSpace fu = var_space(m, n, +1);  // off-diagonal part of the up arrow
  VarSpace fd = var_space(m, n, -1);  // off-diagonal part of the down arrow
  const int nu = static_cast<int>(fu.entries.size());
  const int nd_ = static_cast<int>(fd.entries.size());
  const int nvars = nu + nd_;
  const int nd = n.dim(), md = m.dim();
  const Mat upM = matrix(m, m.up), dnM = matrix(m, m.down);
  const Mat upN = matrix(n, n.up), dnN = matrix(n, n.down);

  int z_dim = nvars;
  if (nvars > 0) {
    std::vector<std::vector<Q>> eqs;
    auto relation = [&](auto&& build) {
      std::vector<std::vector<Q>> block(nd * md, std::vector<Q>(nvars, 0));
      build(block);
      eqs.insert(eqs.end(), block.begin(), block.end());
    };
    // Off-diagonal block of a2 a1 on E = N (+) M is rho_N(a2) f1 + f2 rho_M(a1).
    relation([&](auto& b) {  // up . up = 0
      add_term(b, 0, fu, upN, identity(md), 1, nd, md);
      add_term(b, 0, fu, identity(nd), upM, 1, nd, md);
    });
    relation([&](auto& b) {  // down . down = 0
      add_term(b, nu, fd, dnN, identity(md), 1, nd, md);
      add_term(b, nu, fd, identity(nd), dnM, 1, nd, md);
    });
    relation([&](auto& b) {  // down . up - up . down = 0
      add_term(b, nu, fd, identity(nd), upM, 1, nd, md);
      add_term(b, 0, fu, dnN, identity(md), 1, nd, md);
      add_term(b, 0, fu, identity(nd), dnM, -1, nd, md);
      add_term(b, nu, fd, upN, identity(md), -1, nd, md);
    });
    z_dim = nvars - rank(eqs);
  }
  const int c0 = static_cast<int>(var_space(m, n, 0).entries.size());
  const int b_dim = c0 - hom_dim(m, n);
  return z_dim - b_dim;
}

}  // namespace oracle
