#pragma once

#include <map>
#include <string>
#include <utility>
#include <vector>

namespace xm {

// Weakly decreasing sequence of positive integers.
class Partition {
public:
    Partition() = default;
    explicit Partition(std::vector<int> parts);

    const std::vector<int>& parts() const { return parts_; }
    int size() const;                 // total box count
    int length() const { return static_cast<int>(parts_.size()); }
    int part(int i) const;            // 1-based, 0 beyond the end
    int column(int i) const;          // height of column i (1-based)
    Partition transpose() const;

    bool operator==(const Partition& o) const { return parts_ == o.parts_; }
    bool operator!=(const Partition& o) const { return !(*this == o); }
    bool operator<(const Partition& o) const { return parts_ < o.parts_; }

private:
    std::vector<int> parts_;
};

// Fixed-length tuple of n nonnegative integers (a composition).
class Weight {
public:
    Weight() = default;
    explicit Weight(std::vector<int> entries);

    const std::vector<int>& entries() const { return entries_; }
    int n() const { return static_cast<int>(entries_.size()); }
    int entry(int i) const { return entries_.at(i - 1); }  // 1-based
    int total() const;
    bool is_partition_shaped() const;  // weakly decreasing
    Partition to_partition() const;    // requires is_partition_shaped

    bool operator==(const Weight& o) const { return entries_ == o.entries_; }
    bool operator!=(const Weight& o) const { return !(*this == o); }
    bool operator<(const Weight& o) const { return entries_ < o.entries_; }

private:
    std::vector<int> entries_;
};

// Ordered tensor product of rectangular crystal factors B^{r,s}, stored
// left-to-right as written (factors[0] is the leftmost factor b_k).
struct TensorShape {
    int n = 0;
    std::vector<std::pair<int, int>> factors;  // (r_j, s_j)

    int total_boxes() const;
    bool operator==(const TensorShape& o) const { return n == o.n && factors == o.factors; }
};

// Counts L_i^{(a)} of factors B^{a,i}.
struct MultiplicityArray {
    int n = 0;
    std::map<std::pair<int, int>, int> counts;  // (a, i) -> L_i^{(a)}

    int count(int a, int i) const;
    void add(int a, int i, int delta);
    int total_boxes() const;
    bool operator==(const MultiplicityArray& o) const { return n == o.n && counts == o.counts; }
};

enum class BoundKind { LowerBound, LevelCST };

// Column filling of a shape, used for lower-bound tableaux and for the
// column-strict tableaux of the level-restricted modified vacancy numbers.
struct BoundTableau {
    BoundKind kind = BoundKind::LowerBound;
    std::vector<std::vector<int>> columns;  // columns[k-1][j-1] = t_{j,k}

    int entry(int j, int k) const;  // 1-based; 0 outside the shape
    bool operator==(const BoundTableau& o) const { return kind == o.kind && columns == o.columns; }
    bool operator<(const BoundTableau& o) const { return columns < o.columns; }
    std::string str() const;
};

MultiplicityArray multiplicity_of(const TensorShape& shape);

// Required |nu^{(k)}| for k = 1..n-1; a negative value signals that the
// configuration set is empty. Throws on weight-sum mismatch.
std::vector<int> configuration_sizes(const MultiplicityArray& L, const Weight& lambda);

// All tableaux t with column k of height c_k = lambda_{k+1}+...+lambda_n,
// entries strictly decreasing down columns, column-k alphabet {1..c_{k-1}}
// (c_0 = c_1). Deterministic lexicographic order.
std::vector<BoundTableau> enumerate_lower_bound_tableaux(const Weight& lambda);

// All column-strict tableaux of shape with column k of height
// lambda_k - lambda_n over the alphabet {1..lambda_1-lambda_n}.
// Requires lambda weakly decreasing and lambda_1 - lambda_n <= level.
std::vector<BoundTableau> enumerate_level_cst(const Weight& lambda, int level);

// Lower bound M_i^{(a)}(t) for t in A(lambda').
int lower_bound_value(const BoundTableau& t, const Weight& lambda, int a, int i);

// Enumeration helpers shared across modules.
std::vector<Partition> partitions_of(int total, int max_part);
std::vector<std::vector<int>> weak_compositions(int total, int parts);

// CLI grammar helpers: "2x2,2x1" and "2,2,1,1".
TensorShape parse_tensor_shape(int n, const std::string& text);
Weight parse_weight(const std::string& text, int n);

}  // namespace xm
