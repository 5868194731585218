#pragma once

#include "twistlab/family.hpp"

#include <array>
#include <optional>
#include <vector>

namespace twistlab {

TwistingFamily family_flip(size_t m, size_t n);

// the one-parameter family of K^2 with K^2 of rank matrix all-ones
TwistingFamily family_2x2(const Rat& a);

// Diag(Gamma) = (2,2,2), built on the a-family of K^2 with K^3 in the
// {2,3} block; variant picks which of the two possible A(2,1)
TwistingFamily family_sumtr6_222(const Rat& a, int variant);

// sum Tr = 3, every A(i,l) of rank one; a outside {0,1}
TwistingFamily family_sumtr3_allones(const Rat& a);
// sum Tr = 3 with A(1,1) the first-column 0,1 matrix; a outside {0,1}, x, y nonzero
TwistingFamily family_sumtr3_mixed(const Rat& a, const Rat& x, const Rat& y);

// A(1,1), A(2,1), A(3,1) of a non quasi-standard column of 3x3 matrices
std::array<Mat, 3> non_quasi_column(const Rat& alpha, const Rat& z);

// Fill the matrices at the `unknown` positions (0-based (i,l)) so that f
// becomes a twisting map.  Every condition that is linear in the unknowns is
// imposed exactly, free variables are set to 0 and the result is verified.
std::optional<TwistingFamily> complete_linear(const TwistingFamily& partial,
                                              const std::vector<std::pair<size_t, size_t>>& unknown);

// sum Tr = 5: the a-family chi' on {1,2} and the non quasi-standard third
// column (A(3,3) the 0,1 column matrix), completed by complete_linear
TwistingFamily family_sumtr5(const Rat& a, const Rat& z);

struct CrossXi {
  TwistingFamily family;
  Rat scale;  // factor applied to v_n so that det = 1
};
// vs = v_2..v_n (v_1 is the all-ones vector)
CrossXi crossproduct_xi(std::vector<Vec> vs);
// rebuild the whole family from column l alone; needs every A(i,l) to have
// no zero entry pattern that makes the per-row systems singular
TwistingFamily reconstruct_from_column(const std::vector<Mat>& column, size_t l);

}  // namespace twistlab
