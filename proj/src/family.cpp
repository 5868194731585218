#include "twistlab/family.hpp"

#include <algorithm>
#include <map>

namespace twistlab {

TwistingFamily::TwistingFamily(size_t m, size_t n) : m_(m), n_(n), a_(m * m, Mat::zero(n)) {}

TwistingFamily::TwistingFamily(size_t m, size_t n, std::vector<Mat> grid)
    : m_(m), n_(n), a_(std::move(grid)) {
  if (a_.size() != m * m) throw InputError("grid must hold m*m matrices");
  for (const auto& a : a_)
    if (a.rows() != n || a.cols() != n) throw InputError("every A(i,l) must be n x n");
}

const Rat& TwistingFamily::lambda(size_t i, size_t j, size_t k, size_t l) const {
  if (i >= m_ || l >= m_ || j >= n_ || k >= n_) throw InputError("lambda: index out of range");
  return at(i, l, k, j);
}

Mat TwistingFamily::B(size_t j, size_t k) const {
  if (j >= n_ || k >= n_) throw InputError("b_matrix: index out of range");
  Mat b(m_, m_);
  for (size_t l = 0; l < m_; ++l)
    for (size_t i = 0; i < m_; ++i) b(l, i) = at(i, l, k, j);
  return b;
}

TwistingFamily flip(size_t m, size_t n) {
  TwistingFamily f(m, n);
  for (size_t i = 0; i < m; ++i) f.A(i, i) = Mat::identity(n);
  return f;
}

VerifyReport verify(const TwistingFamily& f) {
  VerifyReport rep;
  const size_t m = f.m(), n = f.n();
  auto add = [&](Violation v) { rep.violations.push_back(v); };

  // C1
  for (size_t l = 0; l < m; ++l)
    for (size_t i = 0; i < m; ++i)
      for (size_t i2 = 0; i2 < m; ++i2) {
        Mat p = f.A(i, l) * f.A(i2, l);
        bool ok = (i == i2) ? p == f.A(i, l) : p.is_zero();
        if (!ok) add({"C1", int(i), int(i2), int(l)});
      }
  // C2, one witness per bad row k
  for (size_t i = 0; i < m; ++i)
    for (size_t l = 0; l < m; ++l)
      for (size_t k = 0; k < n; ++k) {
        Rat s = 0;
        for (size_t j = 0; j < n; ++j) s += f.at(i, l, k, j);
        if (s != (i == l ? 1 : 0)) add({"C2", int(i), -1, int(l), -1, -1, int(k)});
      }
  // C3, one witness per bad entry
  for (size_t l = 0; l < m; ++l)
    for (size_t k = 0; k < n; ++k)
      for (size_t j = 0; j < n; ++j) {
        Rat s = 0;
        for (size_t i = 0; i < m; ++i) s += f.at(i, l, k, j);
        if (s != (k == j ? 1 : 0)) add({"C3", -1, -1, int(l), int(j), -1, int(k)});
      }
  // C4
  for (size_t i = 0; i < m; ++i)
    for (size_t l = 0; l < m; ++l)
      for (size_t k = 0; k < n; ++k)
        for (size_t j = 0; j < n; ++j)
          for (size_t j2 = 0; j2 < n; ++j2) {
            Rat s = 0;
            for (size_t h = 0; h < m; ++h) s += f.at(i, h, k, j) * f.at(h, l, k, j2);
            Rat want = (j == j2) ? f.at(i, l, k, j) : Rat(0);
            if (s != want) add({"C4", int(i), -1, int(l), int(j), int(j2), int(k)});
          }
  rep.is_twisting = rep.violations.empty();
  return rep;
}

bool is_twisting(const TwistingFamily& f) {
  // same conditions, bail out on the first failure
  const size_t m = f.m(), n = f.n();
  for (size_t l = 0; l < m; ++l) {
    for (size_t k = 0; k < n; ++k)
      for (size_t j = 0; j < n; ++j) {
        Rat s = 0;
        for (size_t i = 0; i < m; ++i) s += f.at(i, l, k, j);
        if (s != (k == j ? 1 : 0)) return false;
      }
    for (size_t i = 0; i < m; ++i)
      for (size_t k = 0; k < n; ++k) {
        Rat s = 0;
        for (size_t j = 0; j < n; ++j) s += f.at(i, l, k, j);
        if (s != (i == l ? 1 : 0)) return false;
      }
  }
  for (size_t i = 0; i < m; ++i)
    for (size_t l = 0; l < m; ++l)
      for (size_t k = 0; k < n; ++k)
        for (size_t j = 0; j < n; ++j)
          for (size_t j2 = 0; j2 < n; ++j2) {
            Rat s = 0;
            for (size_t h = 0; h < m; ++h) s += f.at(i, h, k, j) * f.at(h, l, k, j2);
            if (s != ((j == j2) ? f.at(i, l, k, j) : Rat(0))) return false;
          }
  for (size_t l = 0; l < m; ++l)
    for (size_t i = 0; i < m; ++i)
      for (size_t i2 = 0; i2 < m; ++i2) {
        Mat p = f.A(i, l) * f.A(i2, l);
        if (i == i2 ? !(p == f.A(i, l)) : !p.is_zero()) return false;
      }
  return true;
}

TwistingFamily dual(const TwistingFamily& f) {
  TwistingFamily d(f.n(), f.m());
  for (size_t j = 0; j < f.n(); ++j)
    for (size_t k = 0; k < f.n(); ++k) d.A(j, k) = f.B(j, k);
  return d;
}

RankMatrices rank_matrices(const TwistingFamily& f) {
  RankMatrices r;
  r.gamma.assign(f.m(), std::vector<size_t>(f.m()));
  r.gamma_tilde.assign(f.n(), std::vector<size_t>(f.n()));
  for (size_t i = 0; i < f.m(); ++i)
    for (size_t l = 0; l < f.m(); ++l) r.gamma[i][l] = mat_rank(f.A(i, l));
  for (size_t j = 0; j < f.n(); ++j)
    for (size_t k = 0; k < f.n(); ++k) r.gamma_tilde[j][k] = mat_rank(f.B(j, k));
  return r;
}

Rat sum_trace(const TwistingFamily& f) {
  Rat t = 0;
  for (size_t i = 0; i < f.m(); ++i)
    for (size_t k = 0; k < f.n(); ++k) t += f.at(i, i, k, k);
  return t;
}

TwistingFamily apply_perms(const TwistingFamily& f, const Perm& s, const Perm& t) {
  if (s.size() != f.m() || t.size() != f.n()) throw InputError("apply_perms: permutation size mismatch");
  TwistingFamily g(f.m(), f.n());
  for (size_t i = 0; i < f.m(); ++i)
    for (size_t l = 0; l < f.m(); ++l)
      for (size_t k = 0; k < f.n(); ++k)
        for (size_t j = 0; j < f.n(); ++j) g.at(i, l, k, j) = f.at(s(i), s(l), t(k), t(j));
  return g;
}

bool tensor_less(const TwistingFamily& a, const TwistingFamily& b) {
  if (a.m() != b.m()) return a.m() < b.m();
  if (a.n() != b.n()) return a.n() < b.n();
  for (size_t i = 0; i < a.m(); ++i)
    for (size_t l = 0; l < a.m(); ++l) {
      const auto& x = a.A(i, l).data();
      const auto& y = b.A(i, l).data();
      for (size_t p = 0; p < x.size(); ++p) {
        int c = cmp(x[p], y[p]);
        if (c) return c < 0;
      }
    }
  return false;
}

namespace {

// entries replaced by order-preserving small integer codes, so the scan
// below never touches gmp
struct Coded {
  size_t m, n;
  std::vector<int> code;  // index ((i*m+l)*n+k)*n+j
  int operator()(size_t i, size_t l, size_t k, size_t j) const {
    return code[((i * m + l) * n + k) * n + j];
  }
};

Coded encode(const TwistingFamily& f) {
  std::vector<Rat> vals;
  for (size_t i = 0; i < f.m(); ++i)
    for (size_t l = 0; l < f.m(); ++l)
      for (const auto& x : f.A(i, l).data()) vals.push_back(x);
  std::vector<Rat> sorted = vals;
  std::sort(sorted.begin(), sorted.end());
  sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());
  Coded c{f.m(), f.n(), {}};
  c.code.reserve(vals.size());
  for (const auto& v : vals)
    c.code.push_back(int(std::lower_bound(sorted.begin(), sorted.end(), v) - sorted.begin()));
  return c;
}

// -1, 0, 1 comparing f permuted by (s,t) against the sequence best
int compare_perm(const Coded& c, const Perm& s, const Perm& t, const std::vector<int>& best) {
  size_t p = 0;
  for (size_t i = 0; i < c.m; ++i)
    for (size_t l = 0; l < c.m; ++l)
      for (size_t k = 0; k < c.n; ++k)
        for (size_t j = 0; j < c.n; ++j, ++p) {
          int v = c(s(i), s(l), t(k), t(j));
          if (v != best[p]) return v < best[p] ? -1 : 1;
        }
  return 0;
}

std::vector<int> permuted(const Coded& c, const Perm& s, const Perm& t) {
  std::vector<int> out;
  out.reserve(c.code.size());
  for (size_t i = 0; i < c.m; ++i)
    for (size_t l = 0; l < c.m; ++l)
      for (size_t k = 0; k < c.n; ++k)
        for (size_t j = 0; j < c.n; ++j) out.push_back(c(s(i), s(l), t(k), t(j)));
  return out;
}

void guard(const TwistingFamily& f) {
  if (f.m() > 6 || f.n() > 6) throw DomainError("canonical_form: m and n must be at most 6");
}

}  // namespace

Canonical canonical_form(const TwistingFamily& f) {
  guard(f);
  Coded c = encode(f);
  auto sp = Perm::all(f.m());
  auto tp = Perm::all(f.n());
  Perm bs(f.m()), bt(f.n());
  std::vector<int> best = c.code;
  for (const auto& s : sp)
    for (const auto& t : tp)
      if (compare_perm(c, s, t, best) < 0) {
        best = permuted(c, s, t);
        bs = s;
        bt = t;
      }
  return {apply_perms(f, bs, bt), bs, bt};
}

size_t stabilizer_order(const TwistingFamily& f) {
  guard(f);
  Coded c = encode(f);
  size_t cnt = 0;
  for (const auto& s : Perm::all(f.m()))
    for (const auto& t : Perm::all(f.n()))
      if (compare_perm(c, s, t, c.code) == 0) ++cnt;
  return cnt;
}

std::optional<TwistingFamily> restrict_to(const TwistingFamily& f, std::vector<size_t> S) {
  std::sort(S.begin(), S.end());
  S.erase(std::unique(S.begin(), S.end()), S.end());
  if (S.empty()) throw InputError("restrict: empty index set");
  std::vector<bool> in(f.m(), false);
  for (size_t s : S) {
    if (s >= f.m()) throw InputError("restrict: index out of range");
    in[s] = true;
  }
  for (size_t i = 0; i < f.m(); ++i)
    for (size_t l : S)
      if (!in[i] && !f.A(i, l).is_zero()) return std::nullopt;
  TwistingFamily g(S.size(), f.n());
  for (size_t a = 0; a < S.size(); ++a)
    for (size_t b = 0; b < S.size(); ++b) g.A(a, b) = f.A(S[a], S[b]);
  return g;
}

TwistingFamily direct_sum(const TwistingFamily& f1, const TwistingFamily& f2) {
  if (f1.n() != f2.n()) throw InputError("direct_sum: n mismatch");
  size_t m1 = f1.m();
  TwistingFamily g(m1 + f2.m(), f1.n());
  for (size_t i = 0; i < m1; ++i)
    for (size_t l = 0; l < m1; ++l) g.A(i, l) = f1.A(i, l);
  for (size_t i = 0; i < f2.m(); ++i)
    for (size_t l = 0; l < f2.m(); ++l) g.A(m1 + i, m1 + l) = f2.A(i, l);
  return g;
}

std::vector<std::vector<int>> coarse_quiver(const TwistingFamily& f) {
  std::vector<std::vector<int>> q(f.m(), std::vector<int>(f.m(), 0));
  for (size_t i = 0; i < f.m(); ++i)
    for (size_t l = 0; l < f.m(); ++l) q[i][l] = (i != l && !f.A(i, l).is_zero()) ? 1 : 0;
  return q;
}

size_t reduced_rank(const TwistingFamily& f, size_t l) {
  if (l >= f.m()) throw InputError("reduced_rank: index out of range");
  size_t r = 0;
  for (size_t i = 0; i < f.m(); ++i)
    if (i != l && !f.A(i, l).is_zero()) ++r;
  return r;
}

}  // namespace twistlab
