#include "twistlab/families.hpp"

#include <map>

namespace twistlab {

namespace {

void require(bool ok, const char* msg) {
  if (!ok) throw DomainError(msg);
}

Mat rows3(const Vec& r) { return Mat{{r[0], r[1], r[2]}, {r[0], r[1], r[2]}, {r[0], r[1], r[2]}}; }

}  // namespace

TwistingFamily family_flip(size_t m, size_t n) {
  if (m == 0 || n == 0) throw InputError("flip: m and n must be positive");
  return flip(m, n);
}

TwistingFamily family_2x2(const Rat& a) {
  Rat b = 1 - a;
  TwistingFamily f(2, 2);
  f.A(0, 0) = Mat{{a, b}, {a, b}};
  f.A(1, 0) = Mat{{b, a - 1}, {-a, a}};
  f.A(0, 1) = Mat{{a, -a}, {a - 1, b}};
  f.A(1, 1) = Mat{{b, a}, {b, a}};
  return f;
}

TwistingFamily family_sumtr6_222(const Rat& a, int variant) {
  if (variant != 1 && variant != 2) throw InputError("sumtr6_222: variant must be 1 or 2");
  Rat b = 1 - a;
  TwistingFamily f(3, 3);
  f.A(1, 1) = Mat{{1, 0, 0}, {0, a, b}, {0, a, b}};
  f.A(2, 1) = Mat{{0, 0, 0}, {0, b, a - 1}, {0, -a, a}};
  f.A(2, 2) = Mat{{1, 0, 0}, {0, b, a}, {0, b, a}};
  f.A(1, 2) = Mat{{0, 0, 0}, {0, a, -a}, {0, a - 1, b}};
  f.A(1, 0) = variant == 1 ? Mat{{1, -1, 0}, {0, 0, 0}, {0, 0, 0}} : Mat{{1, 0, -1}, {0, 0, 0}, {0, 0, 0}};
  f.A(0, 0) = Mat::identity(3) - f.A(1, 0);
  return f;
}

TwistingFamily family_sumtr3_allones(const Rat& a) {
  require(a != 0 && a != 1, "sumtr3_allones: a must not be 0 or 1");
  Rat b = 1 - a;
  TwistingFamily f(3, 3);
  f.A(0, 0) = rows3({a, b, 0});
  f.A(0, 1) = Mat{{a, -a, 0}, {-b, b, 0}, {-b, b, 0}};
  f.A(0, 2) = Mat{{a, -a, 0}, {-b, b, 0}, {a, -a, 0}};
  f.A(1, 0) = Mat{{b, 0, -b}, {-a, 0, a}, {-a, 0, a}};
  f.A(1, 1) = rows3({b, 0, a});
  f.A(1, 2) = Mat{{b, 0, -b}, {b, 0, -b}, {-a, 0, a}};
  f.A(2, 0) = Mat{{0, -b, b}, {0, a, -a}, {0, -b, b}};
  f.A(2, 1) = Mat{{0, a, -a}, {0, a, -a}, {0, -b, b}};
  f.A(2, 2) = rows3({0, a, b});
  return f;
}

TwistingFamily family_sumtr3_mixed(const Rat& a, const Rat& x, const Rat& y) {
  require(a != 0 && a != 1, "sumtr3_mixed: a must not be 0 or 1");
  require(x != 0 && y != 0, "sumtr3_mixed: x and y must be nonzero");
  Rat b = 1 - a;
  Rat p = -a - x, q = x - b, r = -a - y, s = y - b;
  Rat t = -b * (a + x) / x, u = -b * (a + y) / y;
  Rat v = a * b / x - a, w = a * b / y - a;
  TwistingFamily f(3, 3);
  f.A(0, 0) = rows3({1, 0, 0});
  f.A(0, 1) = Mat{{1, p, q}, {0, 0, 0}, {0, 0, 0}};
  f.A(0, 2) = Mat{{1, t, v}, {0, 0, 0}, {0, 0, 0}};
  f.A(1, 0) = Mat{{0, 0, 0}, {r, a, y}, {u, a * b / y, b}};
  f.A(1, 1) = rows3({0, a, b});
  f.A(1, 2) = Mat{{0, a * b / x, -a * b / x}, {0, a, -a}, {0, -b, b}};
  f.A(2, 0) = Mat{{0, 0, 0}, {s, b, -y}, {w, -a * b / y, a}};
  f.A(2, 1) = Mat{{0, x, -x}, {0, b, -b}, {0, -a, a}};
  f.A(2, 2) = rows3({0, b, a});
  return f;
}

std::array<Mat, 3> non_quasi_column(const Rat& alpha, const Rat& z) {
  require(alpha != 0 && alpha != 1, "non_quasi_column: alpha must not be 0 or 1");
  require(z != 0, "non_quasi_column: z must be nonzero");
  Rat q = alpha * (1 - alpha) / z;
  Mat a1 = rows3({1, 0, 0});
  Mat a2{{0, 0, 0}, {-alpha - z, alpha, z}, {alpha - 1 - q, q, 1 - alpha}};
  Mat a3{{0, 0, 0}, {alpha + z - 1, 1 - alpha, -z}, {q - alpha, -q, alpha}};
  return {a1, a2, a3};
}

namespace {

// affine expression in the unknowns
struct Lin {
  Rat c;
  std::map<size_t, Rat> v;
};

}  // namespace

std::optional<TwistingFamily> complete_linear(const TwistingFamily& partial,
                                              const std::vector<std::pair<size_t, size_t>>& unknown) {
  const size_t m = partial.m(), n = partial.n();
  // var id of entry (i,l,k,j) or -1
  std::vector<long> var(m * m * n * n, -1);
  auto idx = [&](size_t i, size_t l, size_t k, size_t j) { return ((i * m + l) * n + k) * n + j; };
  size_t nv = 0;
  for (auto [i, l] : unknown) {
    if (i >= m || l >= m) throw InputError("complete_linear: position out of range");
    for (size_t k = 0; k < n; ++k)
      for (size_t j = 0; j < n; ++j)
        if (var[idx(i, l, k, j)] < 0) var[idx(i, l, k, j)] = long(nv++);
  }
  auto entry = [&](size_t i, size_t l, size_t k, size_t j) {
    Lin e;
    long x = var[idx(i, l, k, j)];
    if (x < 0)
      e.c = partial.at(i, l, k, j);
    else
      e.v[size_t(x)] = 1;
    return e;
  };
  auto known = [&](size_t i, size_t l, size_t k, size_t j) { return var[idx(i, l, k, j)] < 0; };

  std::vector<Lin> eqs;  // each means expr = 0
  auto add = [](Lin& acc, const Lin& e, const Rat& s) {
    acc.c += s * e.c;
    for (auto& [x, c] : e.v) acc.v[x] += s * c;
  };
  // C3 and C2
  for (size_t l = 0; l < m; ++l)
    for (size_t k = 0; k < n; ++k)
      for (size_t j = 0; j < n; ++j) {
        Lin s;
        s.c = (k == j) ? -1 : 0;
        for (size_t i = 0; i < m; ++i) add(s, entry(i, l, k, j), 1);
        eqs.push_back(s);
      }
  for (size_t i = 0; i < m; ++i)
    for (size_t l = 0; l < m; ++l)
      for (size_t k = 0; k < n; ++k) {
        Lin s;
        s.c = (i == l) ? -1 : 0;
        for (size_t j = 0; j < n; ++j) add(s, entry(i, l, k, j), 1);
        eqs.push_back(s);
      }
  // a product of two entries is linear when one factor is known
  auto product_term = [&](Lin& acc, size_t i1, size_t l1, size_t k1, size_t j1, size_t i2, size_t l2,
                          size_t k2, size_t j2) {
    if (known(i1, l1, k1, j1)) {
      add(acc, entry(i2, l2, k2, j2), partial.at(i1, l1, k1, j1));
      return true;
    }
    if (known(i2, l2, k2, j2)) {
      add(acc, entry(i1, l1, k1, j1), partial.at(i2, l2, k2, j2));
      return true;
    }
    return false;
  };
  // C4
  for (size_t i = 0; i < m; ++i)
    for (size_t l = 0; l < m; ++l)
      for (size_t k = 0; k < n; ++k)
        for (size_t j = 0; j < n; ++j)
          for (size_t j2 = 0; j2 < n; ++j2) {
            Lin s;
            bool lin = true;
            for (size_t h = 0; h < m && lin; ++h) lin = product_term(s, i, h, k, j, h, l, k, j2);
            if (!lin) continue;
            if (j == j2) add(s, entry(i, l, k, j), -1);
            eqs.push_back(s);
          }
  // C1
  for (size_t l = 0; l < m; ++l)
    for (size_t i = 0; i < m; ++i)
      for (size_t i2 = 0; i2 < m; ++i2)
        for (size_t r = 0; r < n; ++r)
          for (size_t c = 0; c < n; ++c) {
            Lin s;
            bool lin = true;
            for (size_t h = 0; h < n && lin; ++h) lin = product_term(s, i, l, r, h, i2, l, h, c);
            if (!lin) continue;
            if (i == i2) add(s, entry(i, l, r, c), -1);
            eqs.push_back(s);
          }

  // Gauss-Jordan on [coeffs | -c]
  Mat M(eqs.size(), nv + 1);
  for (size_t e = 0; e < eqs.size(); ++e) {
    for (auto& [x, c] : eqs[e].v) M(e, x) = c;
    M(e, nv) = -eqs[e].c;
  }
  std::vector<long> pivcol_of_row;
  size_t row = 0;
  for (size_t col = 0; col < nv && row < M.rows(); ++col) {
    size_t p = row;
    while (p < M.rows() && is_zero(M(p, col))) ++p;
    if (p == M.rows()) continue;
    for (size_t c = 0; c <= nv; ++c) std::swap(M(p, c), M(row, c));
    Rat inv = 1 / M(row, col);
    for (size_t c = 0; c <= nv; ++c) M(row, c) *= inv;
    for (size_t r2 = 0; r2 < M.rows(); ++r2) {
      if (r2 == row || is_zero(M(r2, col))) continue;
      Rat fct = M(r2, col);
      for (size_t c = 0; c <= nv; ++c) M(r2, c) -= fct * M(row, c);
    }
    pivcol_of_row.push_back(long(col));
    ++row;
  }
  for (size_t r2 = row; r2 < M.rows(); ++r2)
    if (!is_zero(M(r2, nv))) return std::nullopt;
  std::vector<Rat> sol(nv, 0);
  for (size_t r2 = 0; r2 < row; ++r2) sol[size_t(pivcol_of_row[r2])] = M(r2, nv);

  TwistingFamily f = partial;
  for (size_t i = 0; i < m; ++i)
    for (size_t l = 0; l < m; ++l)
      for (size_t k = 0; k < n; ++k)
        for (size_t j = 0; j < n; ++j)
          if (!known(i, l, k, j)) f.at(i, l, k, j) = sol[size_t(var[idx(i, l, k, j)])];
  if (!is_twisting(f)) return std::nullopt;
  return f;
}

TwistingFamily family_sumtr5(const Rat& a, const Rat& z) {
  require(a != 0 && a != 1, "sumtr5: a must not be 0 or 1");
  Rat b = 1 - a;
  TwistingFamily f(3, 3);
  f.A(0, 0) = Mat{{1, 0, 0}, {0, a, b}, {0, a, b}};
  f.A(0, 1) = Mat{{0, 0, 0}, {0, a, -a}, {0, a - 1, b}};
  f.A(1, 0) = Mat{{0, 0, 0}, {0, b, a - 1}, {0, -a, a}};
  f.A(1, 1) = Mat{{1, 0, 0}, {0, b, a}, {0, b, a}};
  auto col = non_quasi_column(a, z);
  f.A(2, 2) = col[0];
  f.A(0, 2) = col[1];
  f.A(1, 2) = col[2];
  auto done = complete_linear(f, {{2, 0}, {2, 1}});
  if (!done) throw DomainError("sumtr5: no completion exists");
  return *done;
}

CrossXi crossproduct_xi(std::vector<Vec> vs) {
  if (vs.empty()) throw InputError("crossproduct_xi: need v_2..v_n");
  const size_t n = vs[0].size();
  if (vs.size() != n - 1) throw InputError("crossproduct_xi: need exactly n-1 vectors of length n");
  for (const auto& v : vs) {
    if (v.size() != n) throw InputError("crossproduct_xi: vector length mismatch");
    for (const auto& x : v) require(!is_zero(x), "crossproduct_xi: vectors must have no zero component");
  }
  std::vector<Vec> v;
  v.push_back(Vec(n, Rat(1)));
  for (auto& x : vs) v.push_back(x);
  Mat cols(n, n);
  for (size_t c = 0; c < n; ++c)
    for (size_t r = 0; r < n; ++r) cols(r, c) = v[c][r];
  Rat d = det(cols);
  require(!is_zero(d), "crossproduct_xi: vectors are linearly dependent");
  Rat scale = 1 / d;
  for (auto& x : v[n - 1]) x *= scale;

  TwistingFamily f(n, n);
  for (size_t i = 0; i < n; ++i) {
    std::vector<Vec> rest;
    for (size_t h = 0; h < n; ++h)
      if (h != i) rest.push_back(v[h]);
    Vec w = cross_product(rest);
    for (size_t l = 0; l < n; ++l) {
      Mat a = outer(hadamard(hadamard_inverse(v[l]), v[i]), hadamard(v[l], w));
      if (i % 2) a *= Rat(-1);
      f.A(i, l) = a;
    }
  }
  return {f, scale};
}

TwistingFamily reconstruct_from_column(const std::vector<Mat>& column, size_t l) {
  const size_t m = column.size();
  if (m == 0 || l >= m) throw InputError("reconstruct: bad column");
  const size_t n = column[0].rows();
  if (n != m) throw DomainError("reconstruct: needs m = n");
  TwistingFamily f(m, n);
  for (size_t k = 0; k < n; ++k) {
    // R has columns r_j with r_j[i] = A(i,l)_{kj}
    Mat R(m, n);
    for (size_t i = 0; i < m; ++i)
      for (size_t j = 0; j < n; ++j) R(i, j) = column[i](k, j);
    Mat P = inverse(R.transpose());
    for (size_t j = 0; j < n; ++j)
      for (size_t l2 = 0; l2 < m; ++l2)
        for (size_t i = 0; i < m; ++i) f.at(i, l2, k, j) = P(l2, j) * R(i, j);  // B(j,k)_{l2,i}
  }
  return f;
}

}  // namespace twistlab
