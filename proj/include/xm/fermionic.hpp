#pragma once

#include "xm/qlaurent.hpp"
#include "xm/shapes.hpp"

namespace xm {

// Classically restricted fermionic formula: sum over admissible
// configurations of q^{cc(nu)} * prod qbinomial(p + m, m).
QLaurent m_bar(const MultiplicityArray& L, const Weight& lambda);

// Unrestricted fermionic formula: inclusion-exclusion over the lower-bound
// tableaux, each subset contributing quasipartition generating functions
// with the componentwise maximum of its bounds. Subsets are aggregated per
// distinct bound vector unless the tableau set is small enough to iterate
// raw subsets (at most raw_subset_threshold tableaux).
QLaurent m_unrestricted(const MultiplicityArray& L, const Weight& lambda,
                        int raw_subset_threshold = 12);

// Level-restricted fermionic formula: inclusion-exclusion over column-strict
// tableaux, each subset contributing binomials with the componentwise
// minimum of its modified vacancy numbers, over configurations with all
// parts at most `level`.
QLaurent m_level(const MultiplicityArray& L, const Weight& lambda, int level,
                 int raw_subset_threshold = 12);

// Number of solutions of the rank-one string-counting formula:
// sum over {m_l} with sum(l * m_l) = down of prod binomial(p_l + m_l, m_l),
// where p_l = sites - 2 * sum min(l, l') m_{l'}; negative p_l contribute 0.
Int bethe_count(int sites, int down);

}  // namespace xm
