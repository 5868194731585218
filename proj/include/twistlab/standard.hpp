#pragma once

#include "twistlab/family.hpp"

#include <optional>
#include <string>
#include <vector>

namespace twistlab {

// ---- standard idempotent 0,1-matrices

struct Std01Info {
  bool is_01 = false;                    // entries in {0,1}
  bool is_standard_01 = false;           // block form (Id_r 0; C 0)
  bool equiv_to_standard_01 = false;     // same after a simultaneous permutation
  std::vector<std::optional<size_t>> c;  // c_k, defined exactly when M_kk = 0
};
Std01Info std01_predicates(const Mat& M);
// c_k(M); DomainError when M_kk = 1 or row k is not a single 1
size_t c_index(const Mat& M, size_t k);

// ---- column sets

struct ColumnSets {
  std::vector<std::vector<size_t>> J;  // J[i] = J_i(l) = F(A(i,l))
  std::vector<size_t> F0;              // F_0(A, l)
};
ColumnSets column_sets(const TwistingFamily& f, size_t l);
std::vector<size_t> F_set(const Mat& a);  // {j : a_jj = 1}
std::vector<size_t> F0_set(const TwistingFamily& f, size_t l);

bool is_standard_column(const TwistingFamily& f, size_t l);
bool is_standard(const TwistingFamily& f);

// twisting test for a family whose columns are all standard: the column
// conditions C1-C3 plus F(A(i,l)) within F_0(A,i); DomainError otherwise
bool check_standard_map(const TwistingFamily& f);

// Al: m idempotent 0,1 n x n, Bk: n idempotent 0,1 m x m
TwistingFamily build_standard(const std::vector<Mat>& Al, const std::vector<Mat>& Bk);

// ---- quivers

struct Arrow {
  size_t j, l;  // the cell (j,l) of the arrow alpha_{jl}
  size_t i;     // source (j,i)
  size_t k;     // target (k,l)
  friend bool operator==(const Arrow&, const Arrow&) = default;
};

struct StandardQuiver {
  size_t m = 0, n = 0;
  std::vector<std::vector<bool>> vertex;  // vertex[j][l], n x m
  std::vector<Arrow> arrows;              // row-major by (j,l), one per non-vertex cell
  size_t vertex_count() const;
  friend bool operator==(const StandardQuiver&, const StandardQuiver&) = default;
};

// empty string when the quiver satisfies every invariant, else the reason
std::string quiver_problem(const StandardQuiver& q);

// works on standard and quasi-standard families (through standardize)
StandardQuiver quiver_of(const TwistingFamily& f);
TwistingFamily quiver_to_standard(const StandardQuiver& q);

std::string quiver_to_dot(const StandardQuiver& q);
std::string quiver_to_grid(const StandardQuiver& q);

// ---- enumeration and classification

// every standard twisting map exactly once; m*n <= 12
std::vector<TwistingFamily> enumerate_standard(size_t m, size_t n);
std::vector<StandardQuiver> enumerate_quivers(size_t m, size_t n);

struct ClassInfo {
  TwistingFamily rep;  // canonical form
  size_t orbit_size = 0;
  RankMatrices ranks;
  Rat sum_tr;
  std::optional<StandardQuiver> quiver;
};
struct ClassificationReport {
  std::vector<ClassInfo> classes;
  size_t total = 0;
};
// groups by canonical form; order: sum Tr descending, then canonical tensor
ClassificationReport classify(const std::vector<TwistingFamily>& fams);
// index of the class containing f, if any
std::optional<size_t> find_class(const ClassificationReport& r, const TwistingFamily& f);

// ---- twisting maps of K^m with K^2 as colored quivers

struct CibilsData {
  size_t m = 0;
  std::vector<size_t> phi;             // the arrow i -> phi[i]; phi[i] = i for a loop
  std::vector<std::vector<int>> adjacency;  // (Gamma - Id)^T
  Mat f_map, delta;                    // f(e_i) = sum_l f_map(i,l) e_l, same for delta
  Vec c;                               // coloration c_l = A(l,l)_{21}
};
CibilsData cibils_from_family(const TwistingFamily& f);
// empty string when c is a coloration of the quiver phi
std::string coloration_problem(const std::vector<size_t>& phi, const Vec& c);
TwistingFamily cibils_to_family(const std::vector<size_t>& phi, const Vec& c);

}  // namespace twistlab
