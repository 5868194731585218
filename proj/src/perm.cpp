#include "twistlab/perm.hpp"

#include "twistlab/rat.hpp"

#include <algorithm>
#include <numeric>

namespace twistlab {

Perm::Perm(size_t n) : img_(n) { std::iota(img_.begin(), img_.end(), size_t{0}); }

Perm::Perm(std::vector<size_t> images) : img_(std::move(images)) {
  std::vector<char> seen(img_.size(), 0);
  for (size_t x : img_) {
    if (x >= img_.size() || seen[x]) throw InputError("not a permutation");
    seen[x] = 1;
  }
}

Perm Perm::inverse() const {
  std::vector<size_t> inv(img_.size());
  for (size_t p = 0; p < img_.size(); ++p) inv[img_[p]] = p;
  return Perm(std::move(inv));
}

Perm operator*(const Perm& a, const Perm& b) {
  if (a.size() != b.size()) throw DomainError("composing permutations of different sizes");
  std::vector<size_t> c(a.size());
  for (size_t p = 0; p < a.size(); ++p) c[p] = a(b(p));
  return Perm(std::move(c));
}

std::vector<Perm> Perm::all(size_t n) {
  std::vector<size_t> v(n);
  std::iota(v.begin(), v.end(), size_t{0});
  std::vector<Perm> out;
  do out.emplace_back(v);
  while (std::next_permutation(v.begin(), v.end()));
  return out;
}

}  // namespace twistlab
