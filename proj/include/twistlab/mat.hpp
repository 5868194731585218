#pragma once

#include "twistlab/rat.hpp"

#include <cstddef>
#include <initializer_list>
#include <vector>

namespace twistlab {

using Vec = std::vector<Rat>;

class Mat {
 public:
  Mat() = default;
  Mat(size_t rows, size_t cols) : r_(rows), c_(cols), e_(rows * cols) {}
  Mat(std::initializer_list<std::initializer_list<Rat>> rows);

  static Mat zero(size_t n) { return Mat(n, n); }
  static Mat identity(size_t n);
  static Mat ones(size_t n);                        // all-ones matrix
  static Mat unit(size_t n, size_t i, size_t j);    // E^{ij}

  size_t rows() const { return r_; }
  size_t cols() const { return c_; }
  bool square() const { return r_ == c_; }

  Rat& operator()(size_t i, size_t j) { return e_[i * c_ + j]; }
  const Rat& operator()(size_t i, size_t j) const { return e_[i * c_ + j]; }
  const std::vector<Rat>& data() const { return e_; }

  Vec row(size_t i) const;
  Vec col(size_t j) const;

  bool is_zero() const;
  Mat transpose() const;

  Mat& operator+=(const Mat& o);
  Mat& operator-=(const Mat& o);
  Mat& operator*=(const Rat& s);

  friend Mat operator+(Mat a, const Mat& b) { return a += b; }
  friend Mat operator-(Mat a, const Mat& b) { return a -= b; }
  friend Mat operator*(Mat a, const Rat& s) { return a *= s; }
  friend Mat operator*(const Rat& s, Mat a) { return a *= s; }
  friend Mat operator*(const Mat& a, const Mat& b);
  friend Vec operator*(const Mat& a, const Vec& v);
  friend bool operator==(const Mat& a, const Mat& b) {
    return a.r_ == b.r_ && a.c_ == b.c_ && a.e_ == b.e_;
  }

 private:
  size_t r_ = 0, c_ = 0;
  std::vector<Rat> e_;
};

// Exact rank. Rows are cleared to integers first, then Bareiss elimination
// with full pivoting (smallest nonzero pivot) keeps the numbers small.
size_t mat_rank(const Mat& m);
Rat det(const Mat& m);
// throws DomainError when singular
Mat inverse(const Mat& m);
bool is_idempotent(const Mat& m);
// v w^T
Mat outer(const Vec& v, const Vec& w);

// Hadamard structure on K^n
Vec hadamard(const Vec& a, const Vec& b);
Vec hadamard_inverse(const Vec& a);  // throws DomainError on a zero component
Rat mu(const Vec& a);                // product of the components
Rat dot(const Vec& a, const Vec& b);

// (n-1)-ary cross product: w.x = det(x; v_1; ...; v_{n-1}) for every x
Vec cross_product(const std::vector<Vec>& vs);

}  // namespace twistlab
