#pragma once

#include <utility>

#include "xm/crystal.hpp"
#include "xm/rigged.hpp"
#include "xm/shapes.hpp"

namespace xm {

// Box-removal step consuming one B^{1,1} factor: for a = 1..n-1 select the
// shortest singular string no shorter than the previous selection, stopping
// at the first index with none and reporting it as the rank; remove one box
// from each selected string and make the shortened strings singular again.
// Returns the new configuration (over L with one B^{1,1} fewer) and the rank.
std::pair<RiggedConfiguration, int> delta(const RiggedConfiguration& rc);

// Inverse of delta: rebuild the configuration over L with one extra B^{1,1}
// whose delta-image is (rc, r). For a = r-1 down to 1 the longest singular
// string strictly shorter than the previous (lengthened) selection grows by
// one box (a new length-one string if none exists) and is re-singularized.
RiggedConfiguration delta_inverse(const RiggedConfiguration& rc, int r);

// Factor surgery on the multiplicity array, strings untouched:
// left split replaces one B^{r,s} (s >= 2) by B^{r,1} and B^{r,s-1}.
RiggedConfiguration rc_left_split(const RiggedConfiguration& rc, int r, int s);
RiggedConfiguration rc_left_split_inverse(const RiggedConfiguration& rc, int r, int s);

// Box split replaces one B^{r,1} (r >= 2) by B^{1,1} and B^{r-1,1} and adds
// a singular length-one string at each index 1..r-1; vacancy numbers are
// unchanged. The inverse removes those singular strings.
RiggedConfiguration rc_box_split(const RiggedConfiguration& rc, int r);
RiggedConfiguration rc_box_split_inverse(const RiggedConfiguration& rc, int r);

// Statistic-preserving bijection between classically highest paths and
// admissible rigged configurations: tail_energy(b) = cocharge(phi_bar(b)).
RiggedConfiguration phi_bar(const Path& b);
Path phi_bar_inverse(const RiggedConfiguration& rc, const TensorShape& shape);

// Extension to arbitrary paths / unrestricted rigged configurations by
// transport along the crystal operators.
RiggedConfiguration phi(const Path& b);
Path phi_inverse(const RiggedConfiguration& rc, const TensorShape& shape);

}  // namespace xm
