#include "twistlab/standard.hpp"

#include "twistlab/parallel.hpp"
#include "twistlab/quasistd.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <sstream>

namespace twistlab {

namespace {

std::string idx1(size_t a) { return std::to_string(a + 1); }

bool is_one(const Rat& x) { return x == 1; }

}  // namespace

Std01Info std01_predicates(const Mat& M) {
  Std01Info r;
  if (!M.square()) throw DomainError("std01: matrix must be square");
  const size_t n = M.rows();
  r.c.assign(n, std::nullopt);
  r.is_01 = std::all_of(M.data().begin(), M.data().end(), [](const Rat& x) { return x == 0 || x == 1; });
  if (!r.is_01) return r;
  std::vector<long> one(n, -1);
  bool single = true;
  for (size_t k = 0; k < n; ++k) {
    size_t cnt = 0;
    for (size_t j = 0; j < n; ++j)
      if (is_one(M(k, j))) {
        ++cnt;
        one[k] = long(j);
      }
    if (cnt != 1) single = false;
    if (cnt == 1 && !is_one(M(k, k))) r.c[k] = size_t(one[k]);
  }
  if (!single) return r;
  r.equiv_to_standard_01 = true;
  for (size_t k = 0; k < n; ++k)
    if (!is_one(M(size_t(one[k]), size_t(one[k])))) r.equiv_to_standard_01 = false;
  if (!r.equiv_to_standard_01) return r;
  // block form: the diagonal ones come first
  bool seen_zero = false;
  r.is_standard_01 = true;
  for (size_t k = 0; k < n; ++k) {
    if (is_one(M(k, k)) && seen_zero) r.is_standard_01 = false;
    if (!is_one(M(k, k))) seen_zero = true;
  }
  return r;
}

size_t c_index(const Mat& M, size_t k) {
  if (k >= M.rows()) throw InputError("c_index: row out of range");
  if (is_one(M(k, k))) throw DomainError("c_k is undefined: M_kk = 1 at k = " + idx1(k));
  long found = -1;
  for (size_t j = 0; j < M.cols(); ++j) {
    if (is_zero(M(k, j))) continue;
    if (!is_one(M(k, j)) || found >= 0) throw DomainError("c_k is undefined: row " + idx1(k) + " is not a single 1");
    found = long(j);
  }
  if (found < 0) throw DomainError("c_k is undefined: row " + idx1(k) + " is zero");
  return size_t(found);
}

std::vector<size_t> F_set(const Mat& a) {
  std::vector<size_t> out;
  for (size_t j = 0; j < a.rows(); ++j)
    if (is_one(a(j, j))) out.push_back(j);
  return out;
}

std::vector<size_t> F0_set(const TwistingFamily& f, size_t l) {
  std::vector<size_t> out;
  for (size_t k = 0; k < f.n(); ++k) {
    bool ok = true;
    for (size_t i = 0; i < f.m() && ok; ++i)
      for (size_t j = 0; j < f.n() && ok; ++j) ok = f.at(i, l, k, j) == ((i == l && k == j) ? 1 : 0);
    if (ok) out.push_back(k);
  }
  return out;
}

ColumnSets column_sets(const TwistingFamily& f, size_t l) {
  if (l >= f.m()) throw InputError("column_sets: column out of range");
  ColumnSets s;
  for (size_t i = 0; i < f.m(); ++i) s.J.push_back(F_set(f.A(i, l)));
  s.F0 = F0_set(f, l);
  return s;
}

bool is_standard_column(const TwistingFamily& f, size_t l) {
  if (l >= f.m()) throw InputError("is_standard: column out of range");
  const Mat& d = f.A(l, l);
  for (const auto& x : d.data())
    if (x != 0 && x != 1) return false;
  for (size_t i = 0; i < f.m(); ++i)
    for (size_t k = 0; k < f.n(); ++k)
      for (size_t j = 0; j < f.n(); ++j)
        if (!is_zero(f.at(i, l, k, j)) && k != j && is_zero(d(k, j))) return false;
  return true;
}

bool is_standard(const TwistingFamily& f) {
  for (size_t l = 0; l < f.m(); ++l)
    if (!is_standard_column(f, l)) return false;
  return true;
}

bool check_standard_map(const TwistingFamily& f) {
  for (size_t l = 0; l < f.m(); ++l)
    if (!is_standard_column(f, l)) throw DomainError("check_standard_map: column " + idx1(l) + " is not standard");
  for (const auto& v : verify(f).violations)
    if (v.cond != "C4") return false;  // not even a pre-twisting
  for (size_t i = 0; i < f.m(); ++i) {
    auto F0 = F0_set(f, i);
    for (size_t l = 0; l < f.m(); ++l)
      for (size_t j : F_set(f.A(i, l)))
        if (!std::binary_search(F0.begin(), F0.end(), j)) return false;
  }
  return true;
}

TwistingFamily build_standard(const std::vector<Mat>& Al, const std::vector<Mat>& Bk) {
  const size_t m = Al.size(), n = Bk.size();
  if (m == 0 || n == 0) throw InputError("build_standard: empty input");
  for (size_t i = 0; i < m; ++i) {
    if (Al[i].rows() != n || Al[i].cols() != n) throw InputError("build_standard: A(i) must be n x n");
    if (!std01_predicates(Al[i]).equiv_to_standard_01)
      throw DomainError("build_standard: A(" + idx1(i) + ") is not an idempotent 0,1-matrix with A1 = 1");
  }
  for (size_t k = 0; k < n; ++k) {
    if (Bk[k].rows() != m || Bk[k].cols() != m) throw InputError("build_standard: B(k) must be m x m");
    if (!std01_predicates(Bk[k]).equiv_to_standard_01)
      throw DomainError("build_standard: B(" + idx1(k) + ") is not an idempotent 0,1-matrix with B1 = 1");
  }
  for (size_t i = 0; i < m; ++i)
    for (size_t k = 0; k < n; ++k)
      if (Al[i](k, k) != Bk[k](i, i))
        throw DomainError("build_standard: A(i)_kk != B(k)_ii at (i,k) = (" + idx1(i) + "," + idx1(k) + ")");
  TwistingFamily f(m, n);
  for (size_t i = 0; i < m; ++i)
    for (size_t l = 0; l < m; ++l)
      for (size_t k = 0; k < n; ++k)
        for (size_t j = 0; j < n; ++j) {
          Rat v;
          if (i == l)
            v = Al[l](k, j);
          else if (k == j)
            v = Bk[k](l, i);
          else if (is_one(Al[l](k, j)) && is_one(Bk[k](l, i)))
            v = -1;
          else
            v = 0;
          f.at(i, l, k, j) = v;
        }
  return f;
}

// ---- quivers

size_t StandardQuiver::vertex_count() const {
  size_t c = 0;
  for (const auto& row : vertex)
    for (bool b : row) c += b;
  return c;
}

std::string quiver_problem(const StandardQuiver& q) {
  const size_t m = q.m, n = q.n;
  if (q.vertex.size() != n) return "vertex grid must have n rows";
  for (const auto& row : q.vertex)
    if (row.size() != m) return "vertex grid must have m columns";
  for (size_t j = 0; j < n; ++j)
    if (std::none_of(q.vertex[j].begin(), q.vertex[j].end(), [](bool b) { return b; }))
      return "row " + idx1(j) + " has no vertex";
  for (size_t l = 0; l < m; ++l) {
    bool any = false;
    for (size_t j = 0; j < n; ++j) any = any || q.vertex[j][l];
    if (!any) return "column " + idx1(l) + " has no vertex";
  }
  size_t a = 0;
  for (size_t j = 0; j < n; ++j)
    for (size_t l = 0; l < m; ++l) {
      if (q.vertex[j][l]) continue;
      if (a >= q.arrows.size()) return "missing arrow at (" + idx1(j) + "," + idx1(l) + ")";
      const Arrow& ar = q.arrows[a++];
      if (ar.j != j || ar.l != l) return "arrows must be listed once per non-vertex cell, row-major";
      if (ar.i >= m || ar.k >= n) return "arrow endpoint out of range";
      if (!q.vertex[j][ar.i]) return "source of arrow a" + idx1(j) + "," + idx1(l) + " is not a vertex";
      if (!q.vertex[ar.k][l]) return "target of arrow a" + idx1(j) + "," + idx1(l) + " is not a vertex";
    }
  if (a != q.arrows.size()) return "arrow at a vertex cell";
  return "";
}

StandardQuiver quiver_of(const TwistingFamily& f) {
  TwistingFamily g;
  if (is_standard(f))
    g = f;
  else if (is_quasi_standard(f))
    g = standardize(f);
  else
    throw DomainError("quiver_of: input is neither standard nor quasi-standard");
  const size_t m = g.m(), n = g.n();
  StandardQuiver q;
  q.m = m;
  q.n = n;
  q.vertex.assign(n, std::vector<bool>(m, false));
  for (size_t j = 0; j < n; ++j)
    for (size_t l = 0; l < m; ++l) q.vertex[j][l] = is_one(g.at(l, l, j, j));
  for (size_t j = 0; j < n; ++j)
    for (size_t l = 0; l < m; ++l) {
      if (q.vertex[j][l]) continue;
      long src = -1;
      for (size_t i = 0; i < m; ++i)
        if (is_one(g.at(i, l, j, j))) src = long(i);
      if (src < 0) throw DomainError("quiver_of: no source for cell (" + idx1(j) + "," + idx1(l) + ")");
      q.arrows.push_back({j, l, size_t(src), c_index(g.A(l, l), j)});
    }
  return q;
}

TwistingFamily quiver_to_standard(const StandardQuiver& q) {
  if (auto p = quiver_problem(q); !p.empty()) throw DomainError("invalid quiver: " + p);
  const size_t m = q.m, n = q.n;
  std::vector<Mat> Al(m, Mat::zero(n));
  std::vector<Mat> Bk(n, Mat::zero(m));
  for (size_t j = 0; j < n; ++j)
    for (size_t l = 0; l < m; ++l)
      if (q.vertex[j][l]) {
        Al[l](j, j) = 1;
        Bk[j](l, l) = 1;
      }
  for (const auto& a : q.arrows) {
    Al[a.l](a.j, a.k) = 1;
    Bk[a.j](a.l, a.i) = 1;
  }
  return build_standard(Al, Bk);
}

std::string quiver_to_dot(const StandardQuiver& q) {
  std::ostringstream os;
  os << "digraph Q {\n";
  os << "  node [shape=circle, style=filled, fillcolor=black, fontcolor=white, width=0.3];\n";
  for (size_t j = 0; j < q.n; ++j)
    for (size_t l = 0; l < q.m; ++l)
      if (q.vertex[j][l]) os << "  \"" << j + 1 << "," << l + 1 << "\";\n";
  for (const auto& a : q.arrows)
    os << "  \"" << a.j + 1 << "," << a.i + 1 << "\" -> \"" << a.k + 1 << "," << a.l + 1 << "\" [label=\"a_"
       << a.j + 1 << a.l + 1 << "\"];\n";
  os << "}\n";
  return os.str();
}

std::string quiver_to_grid(const StandardQuiver& q) {
  std::ostringstream os;
  for (size_t j = 0; j < q.n; ++j) {
    for (size_t l = 0; l < q.m; ++l) os << (l ? " " : "") << (q.vertex[j][l] ? "•" : "o");
    os << "\n";
  }
  for (const auto& a : q.arrows)
    os << "a " << a.j + 1 << "," << a.l + 1 << ": (" << a.j + 1 << "," << a.i + 1 << ") -> (" << a.k + 1 << ","
       << a.l + 1 << ")\n";
  return os.str();
}

// ---- enumeration

namespace {

void guard(size_t m, size_t n) {
  if (m == 0 || n == 0) throw InputError("m and n must be positive");
  if (m * n > 12) throw DomainError("enumeration is limited to m*n <= 12");
}

std::vector<StandardQuiver> quivers_for_mask(size_t m, size_t n, unsigned long mask) {
  std::vector<StandardQuiver> out;
  StandardQuiver base;
  base.m = m;
  base.n = n;
  base.vertex.assign(n, std::vector<bool>(m, false));
  for (size_t j = 0; j < n; ++j)
    for (size_t l = 0; l < m; ++l) base.vertex[j][l] = (mask >> (j * m + l)) & 1;
  for (size_t j = 0; j < n; ++j)
    if (std::none_of(base.vertex[j].begin(), base.vertex[j].end(), [](bool b) { return b; })) return out;
  for (size_t l = 0; l < m; ++l) {
    bool any = false;
    for (size_t j = 0; j < n; ++j) any = any || base.vertex[j][l];
    if (!any) return out;
  }
  // per arrow cell: the (target k, source i) options, targets outermost
  std::vector<std::vector<std::pair<size_t, size_t>>> opts;
  std::vector<std::pair<size_t, size_t>> cells;
  for (size_t j = 0; j < n; ++j)
    for (size_t l = 0; l < m; ++l) {
      if (base.vertex[j][l]) continue;
      std::vector<std::pair<size_t, size_t>> o;
      for (size_t k = 0; k < n; ++k)
        if (base.vertex[k][l])
          for (size_t i = 0; i < m; ++i)
            if (base.vertex[j][i]) o.push_back({k, i});
      cells.push_back({j, l});
      opts.push_back(std::move(o));
    }
  std::vector<size_t> pos(cells.size(), 0);
  for (;;) {
    StandardQuiver q = base;
    for (size_t c = 0; c < cells.size(); ++c) {
      auto [k, i] = opts[c][pos[c]];
      q.arrows.push_back({cells[c].first, cells[c].second, i, k});
    }
    out.push_back(std::move(q));
    // odometer, first cell most significant
    size_t c = cells.size();
    while (c > 0) {
      --c;
      if (++pos[c] < opts[c].size()) break;
      pos[c] = 0;
      if (c == 0) return out;
    }
    if (cells.empty()) return out;
  }
}

}  // namespace

std::vector<StandardQuiver> enumerate_quivers(size_t m, size_t n) {
  guard(m, n);
  const unsigned long masks = 1ul << (m * n);
  auto per = parallel_map<std::vector<StandardQuiver>>(masks, [&](size_t mask) { return quivers_for_mask(m, n, mask); });
  std::vector<StandardQuiver> out;
  for (auto& v : per)
    for (auto& q : v) out.push_back(std::move(q));
  return out;
}

std::vector<TwistingFamily> enumerate_standard(size_t m, size_t n) {
  auto qs = enumerate_quivers(m, n);
  return parallel_map<TwistingFamily>(qs.size(), [&](size_t i) { return quiver_to_standard(qs[i]); });
}

namespace {
struct TensorLess {
  bool operator()(const TwistingFamily& a, const TwistingFamily& b) const { return tensor_less(a, b); }
};
}  // namespace

ClassificationReport classify(const std::vector<TwistingFamily>& fams) {
  ClassificationReport r;
  r.total = fams.size();
  if (fams.empty()) return r;
  for (const auto& f : fams)
    if (f.m() != fams[0].m() || f.n() != fams[0].n()) throw InputError("classify: mixed dimensions");
  auto canon = parallel_map<TwistingFamily>(fams.size(), [&](size_t i) { return canonical_form(fams[i]).form; });
  std::map<TwistingFamily, size_t, TensorLess> count;
  for (auto& c : canon) ++count[c];
  std::vector<TwistingFamily> reps;
  for (auto& [rep, cnt] : count) reps.push_back(rep);
  auto infos = parallel_map<ClassInfo>(reps.size(), [&](size_t i) {
    ClassInfo ci;
    ci.rep = reps[i];
    ci.orbit_size = count.at(reps[i]);
    ci.ranks = rank_matrices(reps[i]);
    ci.sum_tr = sum_trace(reps[i]);
    try {
      ci.quiver = quiver_of(reps[i]);
    } catch (const DomainError&) {
    }
    return ci;
  });
  // map order is already the canonical tensor order; stable sort keeps it
  std::stable_sort(infos.begin(), infos.end(), [](const ClassInfo& a, const ClassInfo& b) { return a.sum_tr > b.sum_tr; });
  r.classes = std::move(infos);
  return r;
}

std::optional<size_t> find_class(const ClassificationReport& r, const TwistingFamily& f) {
  TwistingFamily c = canonical_form(f).form;
  for (size_t i = 0; i < r.classes.size(); ++i)
    if (r.classes[i].rep == c) return i;
  return std::nullopt;
}

// ---- n = 2

CibilsData cibils_from_family(const TwistingFamily& f) {
  if (f.n() != 2) throw DomainError("cibils: n must be 2");
  if (!is_twisting(f)) throw DomainError("cibils: input is not a twisting map");
  const size_t m = f.m();
  CibilsData d;
  d.m = m;
  auto g = rank_matrices(f).gamma;
  d.adjacency.assign(m, std::vector<int>(m, 0));
  d.phi.assign(m, 0);
  for (size_t i = 0; i < m; ++i)
    for (size_t l = 0; l < m; ++l) {
      d.adjacency[i][l] = int(g[l][i]) - (i == l ? 1 : 0);
      if (d.adjacency[i][l] == 1) d.phi[i] = l;
    }
  d.f_map = Mat(m, m);
  d.delta = Mat(m, m);
  for (size_t i = 0; i < m; ++i)
    for (size_t l = 0; l < m; ++l) {
      d.f_map(i, l) = f.at(i, l, 0, 0) - f.at(i, l, 1, 0);
      d.delta(i, l) = f.at(i, l, 1, 0);
    }
  for (size_t l = 0; l < m; ++l) d.c.push_back(f.at(l, l, 1, 0));
  return d;
}

std::string coloration_problem(const std::vector<size_t>& phi, const Vec& c) {
  const size_t m = phi.size();
  if (c.size() != m) return "coloration size must match the quiver";
  for (size_t p : phi)
    if (p >= m) return "arrow target out of range";
  std::vector<size_t> comp(m);
  std::iota(comp.begin(), comp.end(), 0);
  auto find = [&](size_t x) {
    while (comp[x] != x) x = comp[x] = comp[comp[x]];
    return x;
  };
  for (size_t i = 0; i < m; ++i) comp[find(i)] = find(phi[i]);
  std::map<size_t, std::vector<size_t>> comps;
  for (size_t i = 0; i < m; ++i) comps[find(i)].push_back(i);
  auto loop = [&](size_t i) { return phi[i] == i; };
  for (auto& [root, vs] : comps) {
    if (vs.size() == 2 && phi[vs[0]] == vs[1] && phi[vs[1]] == vs[0]) {
      if (c[vs[0]] + c[vs[1]] != 1) return "round trip " + idx1(vs[0]) + "," + idx1(vs[1]) + ": colors must sum to 1";
      continue;
    }
    for (size_t i : vs) {
      if (loop(i)) {
        if (!is_zero(c[i])) return "loop vertex " + idx1(i) + " must have color 0";
        continue;
      }
      if (c[i] != 0 && c[i] != 1) return "vertex " + idx1(i) + " must have color 0 or 1";
      size_t t = phi[i];
      if (!loop(t) && c[i] + c[t] != 1)
        return "arrow " + idx1(i) + "->" + idx1(t) + " needs one end colored 0 and the other 1";
    }
  }
  return "";
}

TwistingFamily cibils_to_family(const std::vector<size_t>& phi, const Vec& c) {
  if (auto p = coloration_problem(phi, c); !p.empty()) throw DomainError("invalid coloration: " + p);
  const size_t m = phi.size();
  TwistingFamily f(m, 2);
  for (size_t l = 0; l < m; ++l) {
    if (phi[l] == l) {
      f.A(l, l) = Mat::identity(2);
      continue;
    }
    Rat a = c[l];
    f.A(l, l) = Mat{{a, 1 - a}, {a, 1 - a}};
    f.A(phi[l], l) = Mat{{1 - a, a - 1}, {-a, a}};
  }
  return f;
}

}  // namespace twistlab
