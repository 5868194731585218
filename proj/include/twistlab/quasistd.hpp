#pragma once

#include "twistlab/standard.hpp"

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <tuple>
#include <vector>

namespace twistlab {

// J_i(l0) for every i, or nullopt when they do not partition {0..n-1}
std::optional<std::vector<std::vector<size_t>>> j_partition(const TwistingFamily& f, size_t l0);

// D^{uv}_{(i,l0)} = A(i,l0) restricted to J_u(l0) x J_v(l0)
Mat d_block(const TwistingFamily& f, size_t i, size_t l0, size_t u, size_t v);

bool is_quasi_standard_column(const TwistingFamily& f, size_t l0);
bool is_quasi_standard(const TwistingFamily& f);
// verified f, column l0 with 0,1 A(l0,l0) and 0,1 diagonals, reduced rank <= 2
bool quasi_standard_by_reduced_rank(const TwistingFamily& f, size_t l0);

// condition (1) F(A(i,l0)) in F_0(A,i) and (2a-c), for a quasi-standard column
bool check_column_condition4(const TwistingFamily& f, size_t l0);
// the fourth twisting condition evaluated directly on column l0
bool column_condition4_direct(const TwistingFamily& f, size_t l0);

// columns l >= r (0-based) quasi-standard, the r x r block a twisting map,
// A(i,l) = 0 for i >= r > l. Throws DomainError on a failed precondition.
bool check_extension(const TwistingFamily& f, size_t r);

// (D^{ij}_{(i)})_{k d} = lambda
struct DChoice {
  size_t i, j, k, d;
  Rat lambda;
};
// A quasi-standard column built from A(l0,l0), the J-sets and the D choices.
// Throws DomainError when the choices break the admissibility rules.
std::vector<Mat> build_quasi_column(const Mat& A_l0, size_t l0, const std::vector<std::vector<size_t>>& J,
                                    const std::vector<DChoice>& choices);

// Generates choices pair by pair in the given order of ordered pairs (i,j)
// (lexicographic when empty). For each k the chooser sees the admissible
// targets d and returns either nothing (zero row) or (d, lambda).
using DChooser = std::function<std::optional<std::pair<size_t, Rat>>(size_t i, size_t j, size_t k,
                                                                     const std::vector<size_t>& admissible)>;
std::vector<DChoice> generate_d_choices(const Mat& A_l0, size_t l0, const std::vector<std::vector<size_t>>& J,
                                        const DChooser& choose,
                                        std::vector<std::pair<size_t, size_t>> order = {});

// chi-hat: the standard map with the same diagonals
TwistingFamily standardize(const TwistingFamily& f);

struct Site {
  size_t k, u, d, v, ck, l;  // ((k,u),(d,v),(ck,l))
  friend bool operator==(const Site&, const Site&) = default;
  friend auto operator<=>(const Site&, const Site&) = default;
};
std::vector<Site> deformation_sites(const TwistingFamily& f);
std::string site_problem(const TwistingFamily& f, const Site& s);  // empty if s is a site of f

// the four-entry update; no checks at all
TwistingFamily apply_lambda(const TwistingFamily& f, const Site& s, const Rat& lambda);

struct DeformOutcome {
  std::optional<TwistingFamily> family;
  std::string obstruction;  // which matrix failed to be idempotent, or why verify failed
};
DeformOutcome try_deform(const TwistingFamily& f, const Site& s, const Rat& lambda);
// throws DomainError carrying the obstruction
TwistingFamily deform(const TwistingFamily& f, const Site& s, const Rat& lambda);

struct Mu1Entry {
  size_t k, i;  // left factor x_{ki}
  size_t j, l;  // right factor x_{jl}
  Rat value;
};
// (mult(f1) - mult(f)) / lambda, nonzero entries in (k,i,j,l) order
std::vector<Mu1Entry> mu1_table(const TwistingFamily& f, const TwistingFamily& f1, const Rat& lambda);

// Depth-first exploration: from the root, every admissible site at lambda,
// then again on each result. A node is expanded once per key: the set of
// sites applied so far (deformations at disjoint entries commute), or the
// canonical form of the deformed map.
enum class ChainDedup { site_set, canonical };
struct ChainNode {
  TwistingFamily family;
  size_t parent = SIZE_MAX;  // index into the node list; SIZE_MAX for the root
  std::optional<Site> site;  // the site applied to the parent
  std::vector<Site> path;    // sites from the root, in order
  size_t depth = 0;
};
std::vector<ChainNode> explore_chains(const TwistingFamily& root, const Rat& lambda,
                                      ChainDedup dedup = ChainDedup::site_set, size_t max_depth = 8);

}  // namespace twistlab
