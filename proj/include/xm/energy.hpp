#pragma once

#include <vector>

#include "xm/crystal.hpp"
#include "xm/qlaurent.hpp"
#include "xm/shapes.hpp"

namespace xm {

// Schensted row insertion of a single letter; rows is a semistandard
// tableau of partition shape and stays one after the call.
void row_insert(std::vector<std::vector<int>>& rows, int letter);

// Insertion tableau of a word, letters inserted left to right.
std::vector<std::vector<int>> insertion_tableau(const std::vector<int>& word);

// Product b . b2 of two rectangular tableaux: insert the row word of b2
// into b. The result has partition shape but is generally not rectangular.
std::vector<std::vector<int>> schensted_product(const Tableau& b, const Tableau& b2);

// Combinatorial R-matrix on a two-factor pattern: for b in B^{r,s} and
// b2 in B^{r',s'} returns (b2~, b~) in B^{r',s'} x B^{r,s} with
// b . b2 = b2~ . b~. Memoized.
std::pair<Tableau, Tableau> r_matrix(const Tableau& b, const Tableau& b2);

// Apply the R-matrix to tensor positions (p+1, p), counted from the right
// (position 1 is the rightmost factor).
Path apply_r(const Path& path, int p);

// Local energy H(b x b2): boxes of the shape of b . b2 outside the row-wise
// concatenation of (s^r) and (s'^{r'}).
int local_energy(const Tableau& b, const Tableau& b2);

// Tail energy D = sum over 1 <= i < j <= k of H_{j-1} R_{j-2} ... R_i.
int tail_energy(const Path& p);

// n(B) = sum_{i<j} min(s_i, s_j) min(r_i, r_j).
int norm_constant(const TensorShape& shape);

enum class PathRestriction { Unrestricted, Classical, Level };

// One-dimensional configuration sum: sum of q^{D(b)} over paths of the
// given shape with weight lambda, optionally classically restricted
// (e_i undefined for 1 <= i < n) or additionally level restricted
// (e_0 applies at most `level` times).
QLaurent config_sum(const TensorShape& shape, const Weight& lambda,
                    PathRestriction restriction = PathRestriction::Classical, int level = 0);

// Number of times e_0 applies in a row.
int affine_epsilon(const Path& p);

}  // namespace xm
