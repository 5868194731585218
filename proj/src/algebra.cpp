#include "twistlab/algebra.hpp"

#include "twistlab/quasistd.hpp"
#include "twistlab/standard.hpp"

#include <algorithm>
#include <map>

namespace twistlab {

TwistedAlgebra::TwistedAlgebra(const TwistingFamily& f) : f_(f), m_(f.m()), n_(f.n()) {}

std::pair<Rat, size_t> TwistedAlgebra::mul_basis(size_t a, size_t b) const {
  auto [k, i] = label(a);
  auto [j, l] = label(b);
  return {c(k, i, j, l), index(k, l)};
}

Vec TwistedAlgebra::mul(const Vec& x, const Vec& y) const {
  if (x.size() != dim() || y.size() != dim()) throw InputError("algebra element has the wrong size");
  Vec r(dim());
  for (size_t a = 0; a < dim(); ++a) {
    if (is_zero(x[a])) continue;
    for (size_t b = 0; b < dim(); ++b) {
      if (is_zero(y[b])) continue;
      auto [cf, t] = mul_basis(a, b);
      if (!is_zero(cf)) r[t] += x[a] * y[b] * cf;
    }
  }
  return r;
}

Vec TwistedAlgebra::unit() const { return Vec(dim(), Rat(1)); }

TwistedAlgebra build_algebra(const TwistingFamily& f) { return TwistedAlgebra(f); }

bool check_unital_associative(const TwistedAlgebra& alg) {
  const size_t N = alg.dim();
  for (size_t a = 0; a < N; ++a)
    for (size_t b = 0; b < N; ++b) {
      auto [c1, ab] = alg.mul_basis(a, b);
      for (size_t c = 0; c < N; ++c) {
        auto [c2, abc] = alg.mul_basis(ab, c);
        auto [c3, bc] = alg.mul_basis(b, c);
        auto [c4, abc2] = alg.mul_basis(a, bc);
        // both land on x_{k q}, so only the scalars can differ
        if (c1 * c2 != c3 * c4 || abc != abc2) return false;
      }
    }
  Vec u = alg.unit();
  for (size_t a = 0; a < N; ++a) {
    Vec e(N);
    e[a] = 1;
    if (alg.mul(u, e) != e || alg.mul(e, u) != e) return false;
  }
  return true;
}

Representation representation(const TwistingFamily& f, size_t index, RepSide side) {
  const size_t m = f.m(), n = f.n();
  if (!is_twisting(f)) throw DomainError("representation: input is not a twisting map");
  Representation r;
  if (side == RepSide::A) {
    if (index >= m) throw InputError("representation: index out of range");
    r.size = n;
    for (size_t j = 0; j < n; ++j)
      for (size_t l = 0; l < m; ++l) r.images.push_back(Mat::unit(n, j, j) * f.A(l, index));
  } else {
    if (index >= n) throw InputError("representation: index out of range");
    r.size = m;
    for (size_t j = 0; j < n; ++j)
      for (size_t l = 0; l < m; ++l) r.images.push_back(f.B(j, index).transpose() * Mat::unit(m, l, l));
  }
  return r;
}

bool is_multiplicative(const TwistedAlgebra& alg, const Representation& r) {
  const size_t N = alg.dim();
  if (r.images.size() != N) return false;
  Mat sum = Mat::zero(r.size);
  for (size_t a = 0; a < N; ++a) {
    sum += r.images[a];
    for (size_t b = 0; b < N; ++b) {
      auto [cf, t] = alg.mul_basis(a, b);
      if (r.images[a] * r.images[b] != r.images[t] * cf) return false;
    }
  }
  return sum == Mat::identity(r.size);
}

namespace {

// incremental row-echelon basis of a subspace of K^d
struct Span {
  std::vector<Vec> rows;
  std::vector<size_t> pivots;
  bool add(Vec v) {
    for (size_t r = 0; r < rows.size(); ++r)
      if (!is_zero(v[pivots[r]])) {
        Rat s = v[pivots[r]];
        for (size_t c = 0; c < v.size(); ++c) v[c] -= s * rows[r][c];
      }
    for (size_t c = 0; c < v.size(); ++c)
      if (!is_zero(v[c])) {
        Rat s = v[c];
        for (auto& x : v) x /= s;
        // keep earlier rows reduced at the new pivot
        for (auto& row : rows)
          if (!is_zero(row[c])) {
            Rat t = row[c];
            for (size_t cc = 0; cc < v.size(); ++cc) row[cc] -= t * v[cc];
          }
        rows.push_back(std::move(v));
        pivots.push_back(c);
        return true;
      }
    return false;
  }
};

Vec flat(const Mat& M) { return M.data(); }

Mat unflat(const Vec& v, size_t n) {
  Mat M(n, n);
  for (size_t i = 0; i < n; ++i)
    for (size_t j = 0; j < n; ++j) M(i, j) = v[i * n + j];
  return M;
}

}  // namespace

size_t rep_image_dim(const Representation& r) {
  Span sp;
  for (const auto& M : r.images) sp.add(flat(M));
  // close under products
  for (size_t done = 0; done < sp.rows.size(); ++done)
    for (size_t b = 0; b <= done; ++b) {
      Mat x = unflat(sp.rows[done], r.size), y = unflat(sp.rows[b], r.size);
      sp.add(flat(x * y));
      sp.add(flat(y * x));
    }
  return sp.rows.size();
}

// ---- radical

namespace {

using Mask = unsigned long;

// monomials of S.T with a nonzero coefficient
Mask product_mask(const TwistedAlgebra& alg, Mask S, Mask T) {
  Mask r = 0;
  for (size_t a = 0; a < alg.dim(); ++a)
    if (S >> a & 1)
      for (size_t b = 0; b < alg.dim(); ++b)
        if (T >> b & 1) {
          auto [cf, t] = alg.mul_basis(a, b);
          if (!is_zero(cf)) r |= Mask(1) << t;
        }
  return r;
}

// 0 when S is not nilpotent
size_t nilpotency(const TwistedAlgebra& alg, Mask S) {
  if (S == 0) return 1;
  Mask P = S;
  for (size_t p = 2; p <= alg.dim() + 1; ++p) {
    P = product_mask(alg, P, S);
    if (P == 0) return p;
  }
  return 0;
}

bool is_ideal(const TwistedAlgebra& alg, Mask S) {
  Mask all = (Mask(1) << alg.dim()) - 1;
  Mask out = product_mask(alg, all, S) | product_mask(alg, S, all);
  return (out & ~S) == 0;
}

RadicalReport report_for(const TwistedAlgebra& alg, Mask S, std::string method) {
  RadicalReport r;
  r.method = std::move(method);
  for (size_t b = 0; b < alg.dim(); ++b)
    if (S >> b & 1) r.basis.push_back(alg.label(b));
  r.dim = r.basis.size();
  r.nilpotency_index = nilpotency(alg, S);
  r.square_zero = r.nilpotency_index <= 2;
  r.quotient_dim = alg.dim() - r.dim;
  // quotient monomials must be orthogonal idempotents modulo S
  r.quotient_product_of_fields = true;
  for (size_t a = 0; a < alg.dim() && r.quotient_product_of_fields; ++a) {
    if (S >> a & 1) continue;
    for (size_t b = 0; b < alg.dim(); ++b) {
      if (S >> b & 1) continue;
      auto [cf, t] = alg.mul_basis(a, b);
      bool zero_mod = is_zero(cf) || (S >> t & 1);
      bool ok = (a == b) ? (!zero_mod && t == a && cf == 1) : zero_mod;
      if (!ok) {
        r.quotient_product_of_fields = false;
        break;
      }
    }
  }
  return r;
}

}  // namespace

RadicalReport radical_by_search(const TwistedAlgebra& alg) {
  const size_t N = alg.dim();
  if (N > 12) throw DomainError("radical search is limited to n*m <= 12");
  Mask best = 0;
  size_t best_pop = 0;
  for (Mask S = 1; S < (Mask(1) << N); ++S) {
    size_t pop = size_t(__builtin_popcountl(S));
    if (pop <= best_pop) continue;
    if (is_ideal(alg, S) && nilpotency(alg, S) > 0) {
      best = S;
      best_pop = pop;
    }
  }
  // the sum of nilpotent ideals is nilpotent, so the largest contains every other one
  return report_for(alg, best, "subset-search");
}

RadicalReport jacobson_radical(const TwistedAlgebra& alg) {
  const TwistingFamily& f = alg.family();
  if (!is_quasi_standard(f)) return radical_by_search(alg);
  Mask S = 0;
  for (size_t j = 0; j < f.n(); ++j)
    for (size_t l = 0; l < f.m(); ++l)
      if (f.at(l, l, j, j) != 1) S |= Mask(1) << alg.index(j, l);
  if (alg.dim() > 64) throw DomainError("algebra too large for the radical report");
  RadicalReport r = report_for(alg, S, "closed-form");
  if (alg.dim() <= 12) {
    auto s = radical_by_search(alg);
    if (s.basis != r.basis) throw DomainError("closed-form radical disagrees with the subset search");
  }
  return r;
}

// ---- quiver presentation

bool quiver_algebra_iso_check(const TwistingFamily& f) {
  if (!is_standard(f)) throw DomainError("quiver_algebra_iso_check: input is not standard");
  if (!is_twisting(f)) return false;
  TwistedAlgebra alg(f);
  StandardQuiver q = quiver_of(f);
  const size_t N = alg.dim(), m = f.m();
  // quiver algebra basis: vertices then arrows, alpha = e_s alpha e_t
  struct Elt {
    bool vertex;
    size_t j, l;  // the vertex (j,l) or the arrow's cell
    size_t sj, sl, tj, tl;
  };
  std::vector<Elt> basis;
  for (size_t j = 0; j < f.n(); ++j)
    for (size_t l = 0; l < m; ++l)
      if (q.vertex[j][l]) basis.push_back({true, j, l, j, l, j, l});
  for (const auto& a : q.arrows) basis.push_back({false, a.j, a.l, a.j, a.i, a.k, a.l});
  if (basis.size() != N) return false;
  std::vector<Vec> phi(N, Vec(N));
  for (size_t b = 0; b < N; ++b) {
    phi[b][alg.index(basis[b].j, basis[b].l)] = 1;
    if (basis[b].vertex)
      for (const auto& a : q.arrows)
        if (a.k == basis[b].j && a.l == basis[b].l) phi[b][alg.index(a.j, a.l)] += 1;
  }
  Span sp;
  for (const auto& v : phi) sp.add(v);
  if (sp.rows.size() != N) return false;
  for (size_t a = 0; a < N; ++a)
    for (size_t b = 0; b < N; ++b) {
      const Elt &x = basis[a], &y = basis[b];
      Vec expect(N);
      if (x.vertex && y.vertex) {
        if (a == b) expect = phi[a];
      } else if (x.vertex) {
        if (x.j == y.sj && x.l == y.sl) expect = phi[b];
      } else if (y.vertex) {
        if (y.j == x.tj && y.l == x.tl) expect = phi[a];
      }
      if (alg.mul(phi[a], phi[b]) != expect) return false;
    }
  return true;
}

size_t center_dim(const TwistedAlgebra& alg) {
  const size_t N = alg.dim();
  // rows: coefficient of x_t in z x_b - x_b z, unknowns z_a
  Span sp;
  for (size_t b = 0; b < N; ++b) {
    std::vector<Vec> eq(N, Vec(N));
    for (size_t a = 0; a < N; ++a) {
      auto [c1, t1] = alg.mul_basis(a, b);
      auto [c2, t2] = alg.mul_basis(b, a);
      eq[t1][a] += c1;
      eq[t2][a] -= c2;
    }
    for (auto& e : eq) sp.add(std::move(e));
  }
  return N - sp.rows.size();
}

AlgebraSignature algebra_signature(const TwistedAlgebra& alg) {
  auto r = jacobson_radical(alg);
  return {alg.dim(), r.dim, r.nilpotency_index, center_dim(alg), r.quotient_product_of_fields};
}

}  // namespace twistlab
