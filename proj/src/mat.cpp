#include "twistlab/mat.hpp"

#include <algorithm>
#include <utility>

namespace twistlab {

Mat::Mat(std::initializer_list<std::initializer_list<Rat>> rows) {
  r_ = rows.size();
  c_ = r_ ? rows.begin()->size() : 0;
  e_.reserve(r_ * c_);
  for (auto& row : rows) {
    if (row.size() != c_) throw InputError("ragged matrix literal");
    for (auto& x : row) e_.push_back(x);
  }
}

Mat Mat::identity(size_t n) {
  Mat m(n, n);
  for (size_t i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

Mat Mat::ones(size_t n) {
  Mat m(n, n);
  for (auto& x : m.e_) x = 1;
  return m;
}

Mat Mat::unit(size_t n, size_t i, size_t j) {
  Mat m(n, n);
  m(i, j) = 1;
  return m;
}

Vec Mat::row(size_t i) const { return Vec(e_.begin() + i * c_, e_.begin() + (i + 1) * c_); }

Vec Mat::col(size_t j) const {
  Vec v(r_);
  for (size_t i = 0; i < r_; ++i) v[i] = (*this)(i, j);
  return v;
}

bool Mat::is_zero() const {
  return std::all_of(e_.begin(), e_.end(), [](const Rat& x) { return twistlab::is_zero(x); });
}

Mat Mat::transpose() const {
  Mat t(c_, r_);
  for (size_t i = 0; i < r_; ++i)
    for (size_t j = 0; j < c_; ++j) t(j, i) = (*this)(i, j);
  return t;
}

Mat& Mat::operator+=(const Mat& o) {
  if (r_ != o.r_ || c_ != o.c_) throw DomainError("matrix size mismatch in +");
  for (size_t i = 0; i < e_.size(); ++i) e_[i] += o.e_[i];
  return *this;
}

Mat& Mat::operator-=(const Mat& o) {
  if (r_ != o.r_ || c_ != o.c_) throw DomainError("matrix size mismatch in -");
  for (size_t i = 0; i < e_.size(); ++i) e_[i] -= o.e_[i];
  return *this;
}

Mat& Mat::operator*=(const Rat& s) {
  for (auto& x : e_) x *= s;
  return *this;
}

Mat operator*(const Mat& a, const Mat& b) {
  if (a.c_ != b.r_) throw DomainError("matrix size mismatch in *");
  Mat p(a.r_, b.c_);
  for (size_t i = 0; i < a.r_; ++i)
    for (size_t k = 0; k < a.c_; ++k) {
      const Rat& x = a(i, k);
      if (is_zero(x)) continue;
      for (size_t j = 0; j < b.c_; ++j) p(i, j) += x * b(k, j);
    }
  return p;
}

Vec operator*(const Mat& a, const Vec& v) {
  if (a.c_ != v.size()) throw DomainError("matrix/vector size mismatch");
  Vec w(a.r_);
  for (size_t i = 0; i < a.r_; ++i)
    for (size_t k = 0; k < a.c_; ++k) w[i] += a(i, k) * v[k];
  return w;
}

namespace {

std::vector<std::vector<mpz_class>> integer_rows(const Mat& m) {
  std::vector<std::vector<mpz_class>> z(m.rows(), std::vector<mpz_class>(m.cols()));
  for (size_t i = 0; i < m.rows(); ++i) {
    mpz_class l = 1;
    for (size_t j = 0; j < m.cols(); ++j) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), m(i, j).get_den_mpz_t());
    for (size_t j = 0; j < m.cols(); ++j) z[i][j] = m(i, j).get_num() * (l / m(i, j).get_den());
  }
  return z;
}

}  // namespace

size_t mat_rank(const Mat& m) {
  auto a = integer_rows(m);
  const size_t R = m.rows(), C = m.cols();
  std::vector<size_t> colmap(C);
  for (size_t j = 0; j < C; ++j) colmap[j] = j;
  mpz_class prev = 1;
  size_t rank = 0;
  for (size_t s = 0; s < std::min(R, C); ++s) {
    // full pivoting over the trailing block
    size_t pi = R, pj = C;
    for (size_t i = s; i < R; ++i)
      for (size_t j = s; j < C; ++j) {
        const auto& x = a[i][colmap[j]];
        if (x == 0) continue;
        if (pi == R || abs(x) < abs(a[pi][colmap[pj]])) pi = i, pj = j;
      }
    if (pi == R) break;
    std::swap(a[s], a[pi]);
    std::swap(colmap[s], colmap[pj]);
    const mpz_class p = a[s][colmap[s]];
    for (size_t i = s + 1; i < R; ++i) {
      for (size_t j = s + 1; j < C; ++j) {
        auto& x = a[i][colmap[j]];
        x = (p * x - a[i][colmap[s]] * a[s][colmap[j]]) / prev;  // exact by Sylvester
      }
      a[i][colmap[s]] = 0;
    }
    prev = p;
    ++rank;
  }
  return rank;
}

Rat det(const Mat& m) {
  if (!m.square()) throw DomainError("det of a non-square matrix");
  Mat a = m;
  const size_t n = m.rows();
  Rat d = 1;
  for (size_t c = 0; c < n; ++c) {
    size_t p = c;
    while (p < n && is_zero(a(p, c))) ++p;
    if (p == n) return 0;
    if (p != c) {
      for (size_t j = 0; j < n; ++j) std::swap(a(p, j), a(c, j));
      d = -d;
    }
    d *= a(c, c);
    for (size_t i = c + 1; i < n; ++i) {
      if (is_zero(a(i, c))) continue;
      Rat f = a(i, c) / a(c, c);
      for (size_t j = c; j < n; ++j) a(i, j) -= f * a(c, j);
    }
  }
  return d;
}

Mat inverse(const Mat& m) {
  if (!m.square()) throw DomainError("inverse of a non-square matrix");
  const size_t n = m.rows();
  Mat a = m, inv = Mat::identity(n);
  for (size_t c = 0; c < n; ++c) {
    size_t p = c;
    while (p < n && is_zero(a(p, c))) ++p;
    if (p == n) throw DomainError("singular matrix");
    for (size_t j = 0; j < n; ++j) {
      std::swap(a(p, j), a(c, j));
      std::swap(inv(p, j), inv(c, j));
    }
    Rat piv = a(c, c);
    for (size_t j = 0; j < n; ++j) a(c, j) /= piv, inv(c, j) /= piv;
    for (size_t i = 0; i < n; ++i) {
      if (i == c || is_zero(a(i, c))) continue;
      Rat f = a(i, c);
      for (size_t j = 0; j < n; ++j) a(i, j) -= f * a(c, j), inv(i, j) -= f * inv(c, j);
    }
  }
  return inv;
}

bool is_idempotent(const Mat& m) {
  if (!m.square()) throw DomainError("idempotency test needs a square matrix");
  return m * m == m;
}

Mat outer(const Vec& v, const Vec& w) {
  Mat o(v.size(), w.size());
  for (size_t i = 0; i < v.size(); ++i)
    for (size_t j = 0; j < w.size(); ++j) o(i, j) = v[i] * w[j];
  return o;
}

Vec hadamard(const Vec& a, const Vec& b) {
  if (a.size() != b.size()) throw DomainError("length mismatch in hadamard product");
  Vec c(a.size());
  for (size_t i = 0; i < a.size(); ++i) c[i] = a[i] * b[i];
  return c;
}

Vec hadamard_inverse(const Vec& a) {
  Vec c(a.size());
  for (size_t i = 0; i < a.size(); ++i) {
    if (is_zero(a[i])) throw DomainError("componentwise inverse of a vector with a zero entry");
    c[i] = 1 / a[i];
  }
  return c;
}

Rat mu(const Vec& a) {
  Rat p = 1;
  for (auto& x : a) p *= x;
  return p;
}

Rat dot(const Vec& a, const Vec& b) {
  if (a.size() != b.size()) throw DomainError("length mismatch in dot product");
  Rat s = 0;
  for (size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

Vec cross_product(const std::vector<Vec>& vs) {
  const size_t n = vs.size() + 1;
  for (auto& v : vs)
    if (v.size() != n) throw DomainError("cross product needs n-1 vectors of length n");
  // cofactor expansion along the symbolic first row
  Vec w(n);
  Mat minor(n - 1, n - 1);
  for (size_t c = 0; c < n; ++c) {
    for (size_t r = 0; r + 1 < n; ++r)
      for (size_t j = 0, jj = 0; j < n; ++j)
        if (j != c) minor(r, jj++) = vs[r][j];
    Rat d = det(minor);
    w[c] = (c % 2 == 0) ? d : Rat(-d);
  }
  return w;
}

}  // namespace twistlab
