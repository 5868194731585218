#pragma once

#include <cstddef>
#include <vector>

namespace twistlab {

// A bijection of {0..size-1}; images[p] is the image of p.
class Perm {
 public:
  Perm() = default;
  explicit Perm(size_t n);  // identity
  explicit Perm(std::vector<size_t> images);

  size_t size() const { return img_.size(); }
  size_t operator()(size_t p) const { return img_[p]; }
  const std::vector<size_t>& images() const { return img_; }

  Perm inverse() const;
  // (a*b)(p) = a(b(p))
  friend Perm operator*(const Perm& a, const Perm& b);
  friend bool operator==(const Perm&, const Perm&) = default;

  // every permutation of size n in lexicographic order of images
  static std::vector<Perm> all(size_t n);

 private:
  std::vector<size_t> img_;
};

}  // namespace twistlab
