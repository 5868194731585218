// Test-side oracles. Nothing here calls the library's verify/enumerate code.
#pragma once

#include "twistlab/family.hpp"

#include <functional>
#include <random>
#include <vector>

namespace oracle {

using twistlab::Mat;
using twistlab::Rat;
using twistlab::TwistingFamily;
using twistlab::Vec;

// A twisting map of K^m with K^n is the same as an associative unital product
// on K^n (x) K^m that restricts to the given algebras on f_j (x) 1 and 1 (x) e_i
// and has (f_j (x) 1)(1 (x) e_l) = f_j (x) e_l. Basis x_{jl} at j*m+l.
inline bool twisting_by_algebra(const TwistingFamily& f) {
  const size_t m = f.m(), n = f.n(), N = n * m;
  auto mul = [&](const Vec& x, const Vec& y) {
    Vec r(N);
    for (size_t a = 0; a < N; ++a)
      if (x[a] != 0)
        for (size_t b = 0; b < N; ++b)
          if (y[b] != 0) {
            size_t k = a / m, i = a % m, j = b / m, l = b % m;
            r[k * m + l] += x[a] * y[b] * f.at(i, l, k, j);
          }
    return r;
  };
  auto basis = [&](size_t a) {
    Vec v(N);
    v[a] = 1;
    return v;
  };
  auto fj = [&](size_t j) {
    Vec v(N);
    for (size_t l = 0; l < m; ++l) v[j * m + l] = 1;
    return v;
  };
  auto ei = [&](size_t i) {
    Vec v(N);
    for (size_t j = 0; j < n; ++j) v[j * m + i] = 1;
    return v;
  };
  for (size_t a = 0; a < N; ++a)
    for (size_t b = 0; b < N; ++b)
      for (size_t c = 0; c < N; ++c)
        if (mul(mul(basis(a), basis(b)), basis(c)) != mul(basis(a), mul(basis(b), basis(c)))) return false;
  Vec one(N, Rat(1));
  for (size_t a = 0; a < N; ++a)
    if (mul(one, basis(a)) != basis(a) || mul(basis(a), one) != basis(a)) return false;
  Vec zero(N);
  for (size_t j = 0; j < n; ++j)
    for (size_t j2 = 0; j2 < n; ++j2)
      if (mul(fj(j), fj(j2)) != (j == j2 ? fj(j) : zero)) return false;
  for (size_t i = 0; i < m; ++i)
    for (size_t i2 = 0; i2 < m; ++i2)
      if (mul(ei(i), ei(i2)) != (i == i2 ? ei(i) : zero)) return false;
  for (size_t j = 0; j < n; ++j)
    for (size_t l = 0; l < m; ++l)
      if (mul(fj(j), ei(l)) != basis(j * m + l)) return false;
  return true;
}

// All standard candidates column by column: A(l,l) is the 0,1 matrix of an
// idempotent self-map g of {0..n-1}; every k moved by g goes to one i != l
// with +1 at (k,k) and -1 at (k,g(k)). Kept when the algebra oracle accepts.
inline std::vector<TwistingFamily> brute_force_standard(size_t m, size_t n) {
  std::vector<std::vector<size_t>> idem;
  std::vector<size_t> g(n, 0);
  std::function<void(size_t)> rec = [&](size_t p) {
    if (p == n) {
      for (size_t k = 0; k < n; ++k)
        if (g[g[k]] != g[k]) return;
      idem.push_back(g);
      return;
    }
    for (size_t v = 0; v < n; ++v) {
      g[p] = v;
      rec(p + 1);
    }
  };
  rec(0);
  // all columns of candidates for a fixed l
  auto columns = [&](size_t l) {
    std::vector<std::vector<Mat>> out;
    for (const auto& h : idem) {
      std::vector<size_t> moved;
      for (size_t k = 0; k < n; ++k)
        if (h[k] != k) moved.push_back(k);
      std::vector<size_t> who(moved.size(), 0);
      for (;;) {
        std::vector<Mat> col(m, Mat::zero(n));
        for (size_t k = 0; k < n; ++k) col[l](k, h[k]) = 1;
        bool ok = true;
        for (size_t t = 0; t < moved.size(); ++t) {
          size_t i = who[t];
          if (i == l) {
            ok = false;
            break;
          }
          col[i](moved[t], moved[t]) = 1;
          col[i](moved[t], h[moved[t]]) = -1;
        }
        if (ok) out.push_back(col);
        size_t t = 0;
        while (t < who.size() && ++who[t] == m) who[t++] = 0;
        if (t == who.size()) break;
      }
    }
    return out;
  };
  std::vector<std::vector<std::vector<Mat>>> per(m);
  for (size_t l = 0; l < m; ++l) per[l] = columns(l);
  std::vector<TwistingFamily> out;
  std::vector<size_t> pick(m, 0);
  for (;;) {
    TwistingFamily f(m, n);
    for (size_t l = 0; l < m; ++l)
      for (size_t i = 0; i < m; ++i) f.A(i, l) = per[l][pick[l]][i];
    if (twisting_by_algebra(f)) out.push_back(f);
    size_t l = 0;
    while (l < m && ++pick[l] == per[l].size()) pick[l++] = 0;
    if (l == m) break;
  }
  return out;
}

// mpq_class(p, q) does not reduce; everything compared later must be canonical
inline Rat frac(long p, long q) {
  Rat r(p, q);
  r.canonicalize();
  return r;
}

inline TwistingFamily random_candidate(std::mt19937& rng, size_t m, size_t n, int lo = -2, int hi = 2) {
  std::uniform_int_distribution<int> d(lo, hi);
  TwistingFamily f(m, n);
  for (size_t i = 0; i < m; ++i)
    for (size_t l = 0; l < m; ++l)
      for (size_t k = 0; k < n; ++k)
        for (size_t j = 0; j < n; ++j) f.at(i, l, k, j) = frac(d(rng), 1 + (d(rng) & 1));
  return f;
}

// the 4-case table of a standard map, written from the quiver alone
inline Rat standard_entry(const std::vector<std::vector<bool>>& vertex, const std::vector<std::array<size_t, 4>>& arrows,
                          size_t i, size_t l, size_t k, size_t j) {
  // arrows: (j, l, source column i, target row k)
  auto arrow = [&](size_t r, size_t c) -> const std::array<size_t, 4>* {
    for (const auto& a : arrows)
      if (a[0] == r && a[1] == c) return &a;
    return nullptr;
  };
  if (vertex[k][l]) return (i == l && j == k) ? 1 : 0;
  const auto* a = arrow(k, l);
  size_t ck = (*a)[3], src = (*a)[2];
  if (i == l) return j == ck ? 1 : 0;
  if (i == src && j == k) return 1;
  if (i == src && j == ck) return -1;
  return 0;
}

}  // namespace oracle
