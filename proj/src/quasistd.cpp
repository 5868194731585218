#include "twistlab/quasistd.hpp"

#include <algorithm>
#include <map>
#include <set>

namespace twistlab {

namespace {

std::string idx1(size_t a) { return std::to_string(a + 1); }

bool contains(const std::vector<size_t>& v, size_t x) { return std::find(v.begin(), v.end(), x) != v.end(); }

std::optional<size_t> c_of(const Mat& M, size_t k) {
  try {
    return c_index(M, k);
  } catch (const DomainError&) {
    return std::nullopt;
  }
}

// owner[k] = the i with k in J_i
std::vector<size_t> owners(const std::vector<std::vector<size_t>>& J, size_t n) {
  std::vector<size_t> o(n, SIZE_MAX);
  for (size_t i = 0; i < J.size(); ++i)
    for (size_t k : J[i]) o[k] = i;
  return o;
}

}  // namespace

std::optional<std::vector<std::vector<size_t>>> j_partition(const TwistingFamily& f, size_t l0) {
  if (l0 >= f.m()) throw InputError("column out of range");
  std::vector<std::vector<size_t>> J(f.m());
  std::vector<int> hits(f.n(), 0);
  for (size_t i = 0; i < f.m(); ++i)
    for (size_t k = 0; k < f.n(); ++k)
      if (f.at(i, l0, k, k) == 1) {
        J[i].push_back(k);
        ++hits[k];
      }
  for (int h : hits)
    if (h != 1) return std::nullopt;
  return J;
}

Mat d_block(const TwistingFamily& f, size_t i, size_t l0, size_t u, size_t v) {
  if (i >= f.m() || u >= f.m() || v >= f.m()) throw InputError("d_block: index out of range");
  auto J = j_partition(f, l0);
  if (!J) throw DomainError("d_block: the J-sets of column " + idx1(l0) + " do not partition {1..n}");
  const auto& Ju = (*J)[u];
  const auto& Jv = (*J)[v];
  Mat D(Ju.size(), Jv.size());
  for (size_t a = 0; a < Ju.size(); ++a)
    for (size_t b = 0; b < Jv.size(); ++b) D(a, b) = f.at(i, l0, Ju[a], Jv[b]);
  return D;
}

bool is_quasi_standard_column(const TwistingFamily& f, size_t l0) {
  if (l0 >= f.m()) throw InputError("column out of range");
  const size_t m = f.m(), n = f.n();
  const Mat& A0 = f.A(l0, l0);
  for (const auto& x : A0.data())
    if (x != 0 && x != 1) return false;
  for (size_t i = 0; i < m; ++i)
    for (size_t k = 0; k < n; ++k)
      if (f.at(i, l0, k, k) != 0 && f.at(i, l0, k, k) != 1) return false;
  auto J = j_partition(f, l0);
  if (!J) return false;
  auto own = owners(*J, n);
  for (size_t i = 0; i < m; ++i)
    for (size_t k = 0; k < n; ++k) {
      const size_t u = own[k];
      // columns of row k grouped by owner v
      std::map<size_t, std::vector<size_t>> supp;
      for (size_t j = 0; j < n; ++j)
        if (!is_zero(f.at(i, l0, k, j))) supp[own[j]].push_back(j);
      for (auto& [v, ds] : supp) {
        if (u != i && v != i && v != l0) return false;  // (3)
        if (v == l0) continue;
        if (ds.size() > 1) return false;  // (4)
        auto ck = c_of(A0, k), cd = c_of(A0, ds[0]);
        if (!ck || !cd || *ck != *cd) return false;
      }
    }
  return true;
}

bool is_quasi_standard(const TwistingFamily& f) {
  for (size_t l = 0; l < f.m(); ++l)
    if (!is_quasi_standard_column(f, l)) return false;
  return true;
}

bool quasi_standard_by_reduced_rank(const TwistingFamily& f, size_t l0) {
  if (l0 >= f.m()) throw InputError("column out of range");
  if (!is_twisting(f)) throw DomainError("reduced-rank test needs a twisting map");
  for (const auto& x : f.A(l0, l0).data())
    if (x != 0 && x != 1) throw DomainError("reduced-rank test needs A(l0,l0) to be a 0,1-matrix");
  for (size_t i = 0; i < f.m(); ++i)
    for (size_t k = 0; k < f.n(); ++k)
      if (f.at(i, l0, k, k) != 0 && f.at(i, l0, k, k) != 1)
        throw DomainError("reduced-rank test needs 0,1 diagonals in column " + idx1(l0));
  return reduced_rank(f, l0) <= 2;
}

namespace {

// (2a-c) for a nonzero (D^{uv}_{(u,l)})_{kd}
bool cond2(const TwistingFamily& f, size_t u, size_t v, size_t k, size_t d) {
  const size_t m = f.m(), n = f.n();
  for (size_t j = 0; j < n; ++j) {
    Rat a = Rat(k == j ? 1 : 0) - Rat(j == d ? 1 : 0);
    if (f.at(u, v, k, j) != a) return false;
    if (f.at(v, v, k, j) != (j == d ? 1 : 0)) return false;
    for (size_t i = 0; i < m; ++i)
      if (i != u && i != v && !is_zero(f.at(i, v, k, j))) return false;
  }
  return true;
}

bool cond2_column(const TwistingFamily& f, size_t l, const std::vector<size_t>& own) {
  for (size_t k = 0; k < f.n(); ++k) {
    const size_t u = own[k];
    for (size_t d = 0; d < f.n(); ++d) {
      const size_t v = own[d];
      if (u == v || v == l || is_zero(f.at(u, l, k, d))) continue;
      if (!cond2(f, u, v, k, d)) return false;
    }
  }
  return true;
}

}  // namespace

bool check_column_condition4(const TwistingFamily& f, size_t l0) {
  if (!is_quasi_standard_column(f, l0)) throw DomainError("column " + idx1(l0) + " is not quasi-standard");
  auto J = *j_partition(f, l0);
  for (size_t i = 0; i < f.m(); ++i) {
    auto F0 = F0_set(f, i);
    for (size_t k : J[i])
      if (!contains(F0, k)) return false;
  }
  return cond2_column(f, l0, owners(J, f.n()));
}

bool column_condition4_direct(const TwistingFamily& f, size_t l) {
  if (l >= f.m()) throw InputError("column out of range");
  const size_t m = f.m(), n = f.n();
  for (size_t i = 0; i < m; ++i)
    for (size_t k = 0; k < n; ++k)
      for (size_t j = 0; j < n; ++j)
        for (size_t j2 = 0; j2 < n; ++j2) {
          Rat s;
          for (size_t h = 0; h < m; ++h) s += f.at(i, h, k, j) * f.at(h, l, k, j2);
          if (s != (j == j2 ? f.at(i, l, k, j) : Rat(0))) return false;
        }
  return true;
}

bool check_extension(const TwistingFamily& f, size_t r) {
  const size_t m = f.m();
  if (r == 0 || r >= m) throw InputError("check_extension: need 1 <= r < m");
  std::vector<size_t> S(r);
  for (size_t i = 0; i < r; ++i) S[i] = i;
  for (size_t i = r; i < m; ++i)
    for (size_t l = 0; l < r; ++l)
      if (!f.A(i, l).is_zero())
        throw DomainError("check_extension: A(" + idx1(i) + "," + idx1(l) + ") must vanish");
  auto sub = restrict_to(f, S);
  if (!sub || !is_twisting(*sub)) throw DomainError("check_extension: the leading block is not a twisting map");
  for (size_t l = r; l < m; ++l)
    if (!is_quasi_standard_column(f, l))
      throw DomainError("check_extension: column " + idx1(l) + " is not quasi-standard");
  for (size_t i = 0; i < m; ++i) {
    auto F0 = F0_set(f, i);
    for (size_t l = r; l < m; ++l)
      for (size_t k : F_set(f.A(i, l)))
        if (!contains(F0, k)) return false;
  }
  for (size_t l = r; l < m; ++l)
    if (!cond2_column(f, l, owners(*j_partition(f, l), f.n()))) return false;
  return true;
}

// ---- construction of quasi-standard columns

namespace {

void check_setup(const Mat& A0, size_t l0, const std::vector<std::vector<size_t>>& J) {
  const size_t n = A0.rows(), m = J.size();
  if (!A0.square()) throw InputError("A(l0,l0) must be square");
  if (l0 >= m) throw InputError("l0 out of range");
  if (!std01_predicates(A0).equiv_to_standard_01)
    throw DomainError("A(l0,l0) is not equivalent to a standard idempotent 0,1-matrix");
  std::vector<int> hits(n, 0);
  for (const auto& Ji : J)
    for (size_t k : Ji) {
      if (k >= n) throw InputError("J-set entry out of range");
      ++hits[k];
    }
  for (size_t k = 0; k < n; ++k)
    if (hits[k] != 1) throw DomainError("the J-sets must partition {1..n}; " + idx1(k) + " is covered " + std::to_string(hits[k]) + " times");
  auto Jl = J[l0];
  std::sort(Jl.begin(), Jl.end());
  if (Jl != F_set(A0)) throw DomainError("J_{l0} must be the set of diagonal ones of A(l0,l0)");
}

}  // namespace

std::vector<Mat> build_quasi_column(const Mat& A0, size_t l0, const std::vector<std::vector<size_t>>& J,
                                    const std::vector<DChoice>& choices) {
  check_setup(A0, l0, J);
  const size_t n = A0.rows(), m = J.size();
  auto own = owners(J, n);
  // D[(i,j)][k] = (d, lambda) for D^{ij}_{(i)}
  std::map<std::pair<size_t, size_t>, std::map<size_t, std::pair<size_t, Rat>>> D;
  for (const auto& c : choices) {
    if (c.i >= m || c.j >= m || c.k >= n || c.d >= n) throw InputError("D choice index out of range");
    if (c.i == c.j || c.i == l0 || c.j == l0) throw DomainError("D choices need i != j, both different from l0");
    if (own[c.k] != c.i) throw DomainError("D choice: row " + idx1(c.k) + " is not in J_" + idx1(c.i));
    if (own[c.d] != c.j) throw DomainError("D choice: column " + idx1(c.d) + " is not in J_" + idx1(c.j));
    if (c_index(A0, c.k) != c_index(A0, c.d))
      throw DomainError("D choice: c_d != c_k at (k,d) = (" + idx1(c.k) + "," + idx1(c.d) + ")");
    auto& row = D[{c.i, c.j}];
    if (row.count(c.k)) throw DomainError("D choice: two entries in row " + idx1(c.k) + " of one block");
    if (!is_zero(c.lambda)) row[c.k] = {c.d, c.lambda};
  }
  // D^{ri}_{(r)} D^{ij}_{(i)} = 0
  for (auto& [ri, rows1] : D)
    for (auto& [t, e1] : rows1) {
      const size_t i = ri.second, k = e1.first;
      for (auto& [ij, rows2] : D)
        if (ij.first == i && rows2.count(k))
          throw DomainError("D choices give D^{ri}_{(r)} D^{ij}_{(i)} != 0 through row " + idx1(k) + " (r,i,j) = (" +
                            idx1(ri.first) + "," + idx1(i) + "," + idx1(ij.second) + ")");
    }
  std::vector<Mat> col(m, Mat::zero(n));
  col[l0] = A0;
  for (size_t i = 0; i < m; ++i) {
    if (i == l0 || J[i].empty()) continue;
    Mat W = Mat::zero(n);  // only J^c x J^c is used
    for (size_t k : J[i]) W(k, k) = 1;
    for (auto& [ij, rows] : D)
      for (auto& [k, e] : rows) {
        if (ij.first == i) W(k, e.first) += e.second;
        if (ij.second == i) W(k, e.first) -= e.second;
      }
    Mat& A = col[i];
    for (size_t k = 0; k < n; ++k) {
      if (own[k] == l0) continue;
      for (size_t j = 0; j < n; ++j) {
        if (own[j] != l0) {
          A(k, j) = W(k, j);
        } else {
          Rat s;
          for (size_t t = 0; t < n; ++t)
            if (own[t] != l0) s += W(k, t) * A0(t, j);
          A(k, j) = -s;
        }
      }
    }
  }
  return col;
}

std::vector<DChoice> generate_d_choices(const Mat& A0, size_t l0, const std::vector<std::vector<size_t>>& J,
                                        const DChooser& choose, std::vector<std::pair<size_t, size_t>> order) {
  check_setup(A0, l0, J);
  const size_t m = J.size();
  std::vector<std::pair<size_t, size_t>> pairs;
  for (size_t i = 0; i < m; ++i)
    for (size_t j = 0; j < m; ++j)
      if (i != j && i != l0 && j != l0 && !J[i].empty() && !J[j].empty()) pairs.push_back({i, j});
  if (order.empty()) {
    order = pairs;
  } else {
    auto a = order, b = pairs;
    std::sort(a.begin(), a.end());
    if (a != b) throw InputError("custom order must list every ordered pair (i,j), i != j, both != l0 with nonempty J-sets, exactly once");
  }
  std::vector<DChoice> out;
  // rows of D^{ij}_{(i)} already nonzero, and the columns they hit
  std::set<std::pair<size_t, size_t>> row_used;  // (i, k)
  std::set<std::pair<size_t, size_t>> col_hit;   // (j, d)
  for (auto [i, j] : order) {
    for (size_t k : J[i]) {
      if (col_hit.count({i, k})) continue;  // (a)
      const size_t ck = c_index(A0, k);
      std::vector<size_t> adm;
      for (size_t d : J[j])
        if (c_index(A0, d) == ck && !row_used.count({j, d})) adm.push_back(d);  // (b)
      if (adm.empty()) continue;
      auto pick = choose(i, j, k, adm);
      if (!pick || is_zero(pick->second)) continue;
      if (!contains(adm, pick->first)) throw InputError("chooser returned a non-admissible d");
      out.push_back({i, j, k, pick->first, pick->second});
      row_used.insert({i, k});
      col_hit.insert({j, pick->first});
    }
  }
  return out;
}

TwistingFamily standardize(const TwistingFamily& f) {
  if (!is_quasi_standard(f)) throw DomainError("standardize: input is not quasi-standard");
  std::vector<Mat> Al, Bk;
  for (size_t l = 0; l < f.m(); ++l) Al.push_back(f.A(l, l));
  for (size_t k = 0; k < f.n(); ++k) Bk.push_back(f.B(k, k));
  return build_standard(Al, Bk);
}

// ---- deformations

namespace {

const Arrow* arrow_at(const StandardQuiver& q, size_t j, size_t l) {
  for (const auto& a : q.arrows)
    if (a.j == j && a.l == l) return &a;
  return nullptr;
}

std::string site_problem_q(const TwistingFamily& f, const StandardQuiver& q, const Site& s) {
  const size_t m = f.m(), n = f.n();
  if (s.k >= n || s.d >= n || s.ck >= n || s.u >= m || s.v >= m || s.l >= m) return "index out of range";
  if (s.u == s.v || s.u == s.l || s.v == s.l) return "u, v and l must be distinct";
  if (f.at(s.u, s.u, s.k, s.k) != 1) return "k is not in J_u(u)";
  if (f.at(s.v, s.v, s.d, s.d) != 1) return "d is not in J_v(v)";
  auto a1 = arrow_at(q, s.k, s.v);
  if (!a1 || a1->i != s.u || a1->k != s.d) return "no arrow a_kv from (k,u) to (d,v)";
  auto a2 = arrow_at(q, s.k, s.l);
  if (!a2 || a2->i != s.u || a2->k != s.ck) return "no arrow a_kl from (k,u) to (c_k,l)";
  auto a3 = arrow_at(q, s.d, s.l);
  if (!a3 || a3->i != s.v || a3->k != s.ck) return "no arrow a_dl from (d,v) to (c_k,l)";
  auto J = j_partition(f, s.l);
  if (!J) return "J-sets of column l do not partition";
  for (size_t a : (*J)[s.u])
    for (size_t b : (*J)[s.v])
      if (!is_zero(f.at(s.u, s.l, a, b))) return "D^{uv}_{(u,l)} is not zero";
  return "";
}

}  // namespace

std::string site_problem(const TwistingFamily& f, const Site& s) {
  if (!is_quasi_standard(f)) return "the map is not quasi-standard";
  return site_problem_q(f, quiver_of(f), s);
}

std::vector<Site> deformation_sites(const TwistingFamily& f) {
  std::vector<Site> out;
  if (!is_quasi_standard(f)) return out;
  StandardQuiver q = quiver_of(f);
  const size_t m = f.m();
  for (const auto& a1 : q.arrows) {
    // a1 = alpha_{kv}: (k,u) -> (d,v)
    const size_t k = a1.j, v = a1.l, u = a1.i, d = a1.k;
    for (size_t l = 0; l < m; ++l) {
      auto a2 = arrow_at(q, k, l);
      if (!a2) continue;
      Site s{k, u, d, v, a2->k, l};
      if (site_problem_q(f, q, s).empty()) out.push_back(s);
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

TwistingFamily apply_lambda(const TwistingFamily& f, const Site& s, const Rat& lambda) {
  TwistingFamily g = f;
  g.at(s.u, s.l, s.k, s.d) = lambda;
  g.at(s.v, s.l, s.k, s.d) = -lambda;
  g.at(s.v, s.l, s.k, s.ck) = lambda;
  g.at(s.u, s.l, s.k, s.ck) -= lambda;
  return g;
}

DeformOutcome try_deform(const TwistingFamily& f, const Site& s, const Rat& lambda) {
  if (auto p = site_problem(f, s); !p.empty()) throw DomainError("not a deformation site: " + p);
  DeformOutcome r;
  if (is_zero(lambda)) {
    r.family = f;
    return r;
  }
  TwistingFamily g = apply_lambda(f, s, lambda);
  if (!is_idempotent(g.A(s.u, s.l)))
    r.obstruction = "A(" + idx1(s.u) + "," + idx1(s.l) + ") is not idempotent";
  else if (!is_idempotent(g.A(s.v, s.l)))
    r.obstruction = "A(" + idx1(s.v) + "," + idx1(s.l) + ") is not idempotent";
  else if (!is_idempotent(g.B(s.d, s.k)))
    r.obstruction = "B(" + idx1(s.d) + "," + idx1(s.k) + ") is not idempotent";
  else if (!is_idempotent(g.B(s.ck, s.k)))
    r.obstruction = "B(" + idx1(s.ck) + "," + idx1(s.k) + ") is not idempotent";
  if (!r.obstruction.empty()) return r;
  auto rep = verify(g);
  if (!rep.is_twisting) {
    r.obstruction = "the deformed family fails " + rep.violations.front().cond;
    return r;
  }
  r.family = std::move(g);
  return r;
}

TwistingFamily deform(const TwistingFamily& f, const Site& s, const Rat& lambda) {
  auto r = try_deform(f, s, lambda);
  if (!r.family) throw DomainError("deformation not admissible: " + r.obstruction);
  return *r.family;
}

std::vector<Mu1Entry> mu1_table(const TwistingFamily& f, const TwistingFamily& f1, const Rat& lambda) {
  if (f.m() != f1.m() || f.n() != f1.n()) throw InputError("mu1_table: dimension mismatch");
  if (is_zero(lambda)) throw DomainError("mu1_table: lambda must be nonzero");
  std::vector<Mu1Entry> out;
  for (size_t k = 0; k < f.n(); ++k)
    for (size_t i = 0; i < f.m(); ++i)
      for (size_t j = 0; j < f.n(); ++j)
        for (size_t l = 0; l < f.m(); ++l) {
          Rat d = (f1.at(i, l, k, j) - f.at(i, l, k, j)) / lambda;
          if (!is_zero(d)) out.push_back({k, i, j, l, d});
        }
  return out;
}

std::vector<ChainNode> explore_chains(const TwistingFamily& root, const Rat& lambda, ChainDedup dedup,
                                      size_t max_depth) {
  std::vector<ChainNode> nodes;
  nodes.push_back({root, SIZE_MAX, std::nullopt, {}, 0});
  std::set<std::vector<Site>> seen_sets{{}};
  std::set<std::vector<Rat>> seen_forms;
  auto form_key = [](const TwistingFamily& g) {
    TwistingFamily c = canonical_form(g).form;
    std::vector<Rat> key;
    for (size_t i = 0; i < c.m(); ++i)
      for (size_t l = 0; l < c.m(); ++l)
        for (const auto& x : c.A(i, l).data()) key.push_back(x);
    return key;
  };
  if (dedup == ChainDedup::canonical) seen_forms.insert(form_key(root));
  // explicit stack keeps the pre-order of a recursive walk
  std::vector<size_t> stack{0};
  while (!stack.empty()) {
    size_t cur = stack.back();
    stack.pop_back();
    if (nodes[cur].depth >= max_depth) continue;
    std::vector<size_t> children;
    for (const auto& s : deformation_sites(nodes[cur].family)) {
      auto r = try_deform(nodes[cur].family, s, lambda);
      if (!r.family) continue;
      auto path = nodes[cur].path;
      path.push_back(s);
      if (dedup == ChainDedup::site_set) {
        auto key = path;
        std::sort(key.begin(), key.end());
        if (!seen_sets.insert(key).second) continue;
      } else if (!seen_forms.insert(form_key(*r.family)).second) {
        continue;
      }
      nodes.push_back({std::move(*r.family), cur, s, std::move(path), nodes[cur].depth + 1});
      children.push_back(nodes.size() - 1);
    }
    for (auto it = children.rbegin(); it != children.rend(); ++it) stack.push_back(*it);
  }
  return nodes;
}

}  // namespace twistlab
