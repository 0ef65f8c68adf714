#pragma once

#include <optional>
#include <string>
#include <vector>

#include "xm/shapes.hpp"

namespace xm {

// Column-strict rectangular tableau over {1..n}: weakly increasing along
// rows, strictly increasing down columns. rows_[i-1][j-1] is the entry in
// row i, column j.
class Tableau {
public:
    Tableau() = default;
    Tableau(int n, std::vector<std::vector<int>> rows);

    int n() const { return n_; }
    int num_rows() const { return static_cast<int>(rows_.size()); }
    int num_cols() const { return rows_.empty() ? 0 : static_cast<int>(rows_[0].size()); }
    const std::vector<std::vector<int>>& rows() const { return rows_; }
    int at(int i, int j) const { return rows_.at(i - 1).at(j - 1); }  // 1-based

    // letters row by row, bottom row first, each row left to right
    std::vector<int> row_word() const;
    Weight weight() const;  // letter multiplicities, length n
    std::string str() const;

    bool operator==(const Tableau& o) const { return n_ == o.n_ && rows_ == o.rows_; }
    bool operator!=(const Tableau& o) const { return !(*this == o); }
    bool operator<(const Tableau& o) const;

private:
    int n_ = 0;
    std::vector<std::vector<int>> rows_;
};

// Tensor product b_k x ... x b_1 of rectangular tableaux, stored
// left-to-right: factors()[0] is the leftmost factor b_k.
class Path {
public:
    Path() = default;
    Path(int n, std::vector<Tableau> factors);

    int n() const { return n_; }
    int size() const { return static_cast<int>(factors_.size()); }
    const std::vector<Tableau>& factors() const { return factors_; }
    const Tableau& factor(int idx) const { return factors_.at(idx); }  // 0-based, leftmost first

    TensorShape shape() const;
    std::vector<int> row_word() const;  // concatenated left to right
    Weight weight() const;
    std::string str() const;

    bool operator==(const Path& o) const { return n_ == o.n_ && factors_ == o.factors_; }
    bool operator!=(const Path& o) const { return !(*this == o); }
    bool operator<(const Path& o) const;

private:
    int n_ = 0;
    std::vector<Tableau> factors_;
};

// Classical crystal operators via the signature rule on the row word,
// i in 1..n-1. Empty optional when the operator is undefined.
std::optional<Path> classical_e(const Path& p, int i);
std::optional<Path> classical_f(const Path& p, int i);
std::optional<Tableau> classical_e(const Tableau& t, int i);
std::optional<Tableau> classical_f(const Tableau& t, int i);

// epsilon_i / phi_i: number of times e_i / f_i applies.
int string_epsilon(const Path& p, int i);
int string_phi(const Path& p, int i);

bool is_classically_highest(const Path& p);

// All elements of B^{r,s} over {1..n}, in a fixed deterministic order.
// Cached per (n, r, s).
const std::vector<Tableau>& enumerate_crystal(int n, int r, int s);

// All paths of the given shape, odometer order: the leftmost factor varies
// slowest, each factor running through enumerate_crystal order.
std::vector<Path> enumerate_paths(const TensorShape& shape);

// |B^{r,s}| over {1..n} (hook content formula for a rectangle).
long long crystal_cardinality(int n, int r, int s);

// Promotion on a single rectangular factor and its inverse; on paths they
// act factor by factor.
Tableau promotion(const Tableau& t);
Tableau inverse_promotion(const Tableau& t);
Path promotion(const Path& p);
Path inverse_promotion(const Path& p);

// Affine operators e_0 = pr^{-1} e_1 pr and f_0 = pr^{-1} f_1 pr.
std::optional<Path> affine_e0(const Path& p);
std::optional<Path> affine_f0(const Path& p);

// Lusztig involution pieces: per-factor complement c -> n+1-c with 180
// degree rotation, factor order reversed.
Tableau star_dual(const Tableau& t);
Path star_dual(const Path& p);

// Evacuation ev(b): raise b* to the classical highest weight element by
// sweeping e_1..e_{n-1}; requires the input path to be classically highest
// on each call site that depends on the duality square.
Path evacuation(const Path& p);

// Transpose duality B^{r,s} -> B^{s,r} over a target alphabet of size n_t,
// with the path's factors transposed in place (order preserved).
// n_t defaults to a rank large enough for the result to be column-strict.
Tableau transpose_tableau(const Tableau& t, int n_t);
Path transpose_path(const Path& p, int n_t = 0);
int default_transpose_rank(const Path& p);

// Contragredient duality: each column complemented in {1..n},
// B^{r,s} -> B^{n-r,s}, factor order preserved.
Tableau contragredient_tableau(const Tableau& t);
Path contragredient_path(const Path& p);

}  // namespace xm
