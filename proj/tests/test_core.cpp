#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "twistlab/mat.hpp"
#include "twistlab/perm.hpp"

#include <random>

using namespace twistlab;

TEST_CASE("rationals parse and print canonically") {
  CHECK(to_string(parse_rat("4/6")) == "2/3");
  CHECK(to_string(parse_rat(" -3 ")) == "-3");
  CHECK(to_string(parse_rat("0/5")) == "0");
  CHECK_THROWS_AS(parse_rat("6/-4"), InputError);
  CHECK_THROWS_AS(parse_rat("1/0"), InputError);
  CHECK_THROWS_AS(parse_rat("abc"), InputError);
  CHECK_THROWS_AS(parse_rat(""), InputError);
  CHECK_THROWS_AS(parse_rat("1.5"), InputError);
}

TEST_CASE("rank") {
  CHECK(mat_rank(Mat::identity(3)) == 3);
  CHECK(mat_rank(Mat::zero(2)) == 0);
  Rat a = 2;
  CHECK(mat_rank(Mat{{a, 1 - a}, {a, 1 - a}}) == 1);
  CHECK(mat_rank(Mat{{1, 2, 3}, {2, 4, 6}, {1, 0, 1}}) == 2);
  CHECK(mat_rank(Mat{{Rat(1, 3), Rat(1, 2)}, {Rat(2, 7), Rat(5, 11)}}) == 2);
}

TEST_CASE("rank agrees with determinant on random integer matrices") {
  std::mt19937 rng(7);
  std::uniform_int_distribution<int> d(-2, 2);
  for (int t = 0; t < 200; ++t) {
    Mat m(3, 3);
    for (size_t i = 0; i < 3; ++i)
      for (size_t j = 0; j < 3; ++j) m(i, j) = d(rng);
    CHECK((mat_rank(m) == 3) == !is_zero(det(m)));
    if (!is_zero(det(m))) CHECK(m * inverse(m) == Mat::identity(3));
  }
}

TEST_CASE("idempotents") {
  CHECK(is_idempotent(Mat::identity(3)));
  CHECK(is_idempotent(Mat{{1, 0}, {1, 0}}));
  CHECK_FALSE(is_idempotent(Mat{{2, 0}, {0, 0}}));
  CHECK_THROWS_AS(is_idempotent(Mat(2, 3)), DomainError);
}

TEST_CASE("cross product examples") {
  Vec e1{1, 0, 0}, e2{0, 1, 0}, e3{0, 0, 1};
  CHECK(cross_product({e1, e2}) == e3);
  CHECK(cross_product({e1, e1}) == Vec{0, 0, 0});
  Vec v1{1, 2, 3}, v2{2, 3, 5};
  Vec w = cross_product({v1, v2});
  CHECK(is_zero(dot(w, v1)));
  CHECK(is_zero(dot(w, v2)));
  // w.x = det(x; v1; v2), the determinant written out by hand
  std::mt19937 rng(1);
  std::uniform_int_distribution<int> d(-9, 9);
  for (int t = 0; t < 10; ++t) {
    Vec x{d(rng), d(rng), d(rng)};
    Rat dd = x[0] * (v1[1] * v2[2] - v1[2] * v2[1]) - x[1] * (v1[0] * v2[2] - v1[2] * v2[0]) +
             x[2] * (v1[0] * v2[1] - v1[1] * v2[0]);
    CHECK(dot(w, x) == dd);
  }
  CHECK_THROWS(cross_product({e1}));
}

TEST_CASE("pointwise operations") {
  CHECK(hadamard_inverse(Vec{1, 1, 1}) == Vec{1, 1, 1});
  CHECK(mu(Vec{2, 3, 4}) == 24);
  CHECK(hadamard(Vec{2, 3}, Vec{Rat(1, 2), Rat(1, 3)}) == Vec{1, 1});
  CHECK_THROWS_AS(hadamard_inverse(Vec{1, 0}), DomainError);
}

TEST_CASE("permutations") {
  auto all = Perm::all(3);
  CHECK(all.size() == 6);
  for (const auto& a : all) {
    CHECK(a * a.inverse() == Perm(3));
    for (const auto& b : all)
      for (size_t p = 0; p < 3; ++p) CHECK((a * b)(p) == a(b(p)));
  }
  CHECK_THROWS_AS(Perm(std::vector<size_t>{0, 0, 1}), InputError);
}
