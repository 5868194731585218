#pragma once

#include "twistlab/family.hpp"

#include <string>
#include <utility>
#include <vector>

namespace twistlab {

// K^n (x)_chi K^m on the monomials x_{jl} = f_j (x) e_l, basis index j*m + l.
// x_{ki} x_{jl} = A(i,l)_{kj} x_{kl}
class TwistedAlgebra {
 public:
  explicit TwistedAlgebra(const TwistingFamily& f);

  size_t m() const { return m_; }
  size_t n() const { return n_; }
  size_t dim() const { return n_ * m_; }
  size_t index(size_t j, size_t l) const { return j * m_ + l; }
  std::pair<size_t, size_t> label(size_t b) const { return {b / m_, b % m_}; }

  // c(k,i,j,l)
  const Rat& c(size_t k, size_t i, size_t j, size_t l) const { return f_.at(i, l, k, j); }
  // x_a x_b = coef * x_{result}; coef may be 0
  std::pair<Rat, size_t> mul_basis(size_t a, size_t b) const;
  Vec mul(const Vec& x, const Vec& y) const;
  Vec unit() const;  // sum of all x_{jl}
  const TwistingFamily& family() const { return f_; }

 private:
  TwistingFamily f_;
  size_t m_, n_;
};

TwistedAlgebra build_algebra(const TwistingFamily& f);
bool check_unital_associative(const TwistedAlgebra& alg);

enum class RepSide { A, B };
struct Representation {
  size_t size = 0;          // n for the A side, m for the B side
  std::vector<Mat> images;  // image of x_{jl} at index j*m + l
};
// A side: x_{jl} -> E^{jj} A(l,u); B side: x_{jl} -> B(j,v)^T E^{ll}, i.e. f_j acts by
// the matrix with (i,l) entry A(i,l)_{vj}. DomainError unless f verifies.
Representation representation(const TwistingFamily& f, size_t index, RepSide side);
bool is_multiplicative(const TwistedAlgebra& alg, const Representation& r);
// dimension of the subalgebra generated by the images
size_t rep_image_dim(const Representation& r);

struct RadicalReport {
  std::vector<std::pair<size_t, size_t>> basis;  // (j,l) of the radical monomials
  size_t dim = 0;
  size_t nilpotency_index = 1;  // least p with J^p = 0
  bool square_zero = true;
  size_t quotient_dim = 0;
  bool quotient_product_of_fields = false;
  std::string method;  // "subset-search" or "closed-form"
};
// Largest nilpotent monomial ideal. Quasi-standard input uses the closed form
// (cross-checked by the search when nm <= 12); otherwise nm <= 12 is required.
RadicalReport jacobson_radical(const TwistedAlgebra& alg);
// the search alone; DomainError when nm > 12
RadicalReport radical_by_search(const TwistedAlgebra& alg);

// phi: KQ/<Q_1^2> -> algebra; true iff bijective and multiplicative. DomainError on non-standard input.
bool quiver_algebra_iso_check(const TwistingFamily& f);

// invariants used to tell algebras apart
struct AlgebraSignature {
  size_t dim = 0, radical_dim = 0, nilpotency_index = 0, center_dim = 0;
  bool quotient_product_of_fields = false;
  friend bool operator==(const AlgebraSignature&, const AlgebraSignature&) = default;
  friend auto operator<=>(const AlgebraSignature&, const AlgebraSignature&) = default;
};
size_t center_dim(const TwistedAlgebra& alg);
AlgebraSignature algebra_signature(const TwistedAlgebra& alg);

}  // namespace twistlab
