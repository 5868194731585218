#pragma once

#include "twistlab/mat.hpp"
#include "twistlab/perm.hpp"

#include <optional>
#include <string>
#include <vector>

namespace twistlab {

// A candidate twisting map of K^m with K^n: an m x m grid of n x n matrices.
// Internally every index is 0-based; A(i,l)_{kj} = lambda_{ij}^{kl}.
class TwistingFamily {
 public:
  TwistingFamily() = default;
  TwistingFamily(size_t m, size_t n);  // all zero
  TwistingFamily(size_t m, size_t n, std::vector<Mat> grid);  // grid[i*m+l] = A(i,l)

  size_t m() const { return m_; }
  size_t n() const { return n_; }

  const Mat& A(size_t i, size_t l) const { return a_[i * m_ + l]; }
  Mat& A(size_t i, size_t l) { return a_[i * m_ + l]; }
  const Rat& at(size_t i, size_t l, size_t k, size_t j) const { return a_[i * m_ + l](k, j); }
  Rat& at(size_t i, size_t l, size_t k, size_t j) { return a_[i * m_ + l](k, j); }

  // lambda_{ij}^{kl}
  const Rat& lambda(size_t i, size_t j, size_t k, size_t l) const;
  // m x m matrix with (l,i) entry A(i,l)_{kj}
  Mat B(size_t j, size_t k) const;

  friend bool operator==(const TwistingFamily& a, const TwistingFamily& b) {
    return a.m_ == b.m_ && a.n_ == b.n_ && a.a_ == b.a_;
  }

 private:
  size_t m_ = 0, n_ = 0;
  std::vector<Mat> a_;
};

TwistingFamily flip(size_t m, size_t n);

struct Violation {
  std::string cond;  // "C1".."C4"
  // witness; -1 where the index plays no role
  int i = -1, i2 = -1, l = -1, j = -1, j2 = -1, k = -1;
};

struct VerifyReport {
  bool is_twisting = true;
  std::vector<Violation> violations;
};

// C1: A(i,l)A(i',l) = delta_{ii'} A(i,l)
// C2: A(i,l) 1 = delta_{il} 1
// C3: sum_i A(i,l) = Id
// C4: sum_h A(i,h)_{kj} A(h,l)_{kj'} = delta_{jj'} A(i,l)_{kj}
VerifyReport verify(const TwistingFamily& f);
bool is_twisting(const TwistingFamily& f);

TwistingFamily dual(const TwistingFamily& f);

struct RankMatrices {
  std::vector<std::vector<size_t>> gamma;        // m x m
  std::vector<std::vector<size_t>> gamma_tilde;  // n x n
  friend bool operator==(const RankMatrices&, const RankMatrices&) = default;
};
RankMatrices rank_matrices(const TwistingFamily& f);
// sum_i Tr A(i,i)
Rat sum_trace(const TwistingFamily& f);

// A'(i,l)_{kj} = A(s(i), s(l))_{t(k) t(j)}
TwistingFamily apply_perms(const TwistingFamily& f, const Perm& s, const Perm& t);

struct Canonical {
  TwistingFamily form;
  Perm sigma, tau;
};
// lexicographically smallest lambda tensor over S_m x S_n; m, n <= 6
Canonical canonical_form(const TwistingFamily& f);
// order used by canonical_form (row-major over i, l, k, j)
bool tensor_less(const TwistingFamily& a, const TwistingFamily& b);
// number of (s,t) fixing f
size_t stabilizer_order(const TwistingFamily& f);

// sub-family on S (0-based, any order, sorted internally) if A(i,l) = 0
// whenever i is outside S and l inside
std::optional<TwistingFamily> restrict_to(const TwistingFamily& f, std::vector<size_t> S);
TwistingFamily direct_sum(const TwistingFamily& f1, const TwistingFamily& f2);

// (i,l) = 1 iff i != l and A(i,l) != 0
std::vector<std::vector<int>> coarse_quiver(const TwistingFamily& f);
size_t reduced_rank(const TwistingFamily& f, size_t l);

}  // namespace twistlab
