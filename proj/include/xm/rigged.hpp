#pragma once

#include <optional>
#include <string>
#include <vector>

#include "xm/shapes.hpp"

namespace xm {

// One string of a rigged partition: a part together with its label.
struct RcString {
    int len = 0;
    int rig = 0;

    bool operator==(const RcString& o) const { return len == o.len && rig == o.rig; }
    bool operator<(const RcString& o) const {
        return len != o.len ? len > o.len : rig > o.rig;  // canonical display order
    }
};

// Sequence of rigged partitions nu^{(1)},...,nu^{(n-1)} attached to a
// multiplicity array L of rank n. Strings are kept sorted by decreasing
// length, then decreasing label, so structural equality is semantic.
class RiggedConfiguration {
public:
    RiggedConfiguration() = default;
    RiggedConfiguration(MultiplicityArray L, std::vector<std::vector<RcString>> nu);

    int n() const { return L_.n; }
    const MultiplicityArray& L() const { return L_; }
    const std::vector<std::vector<RcString>>& nu() const { return nu_; }
    const std::vector<RcString>& strings(int a) const { return nu_.at(a - 1); }  // 1-based

    int m(int a, int i) const;           // number of strings of length i at index a
    int largest_part(int a) const;       // 0 if empty
    int vacancy(int a, int i) const;     // p_i^{(a)}

    long long cocharge_config() const;   // cc(nu)
    long long cocharge() const;          // cc(nu,J) = cc(nu) + sum of labels
    std::vector<int> weight() const;     // epsilon coordinates, length n

    // labels within [0, vacancy] and vacancies of existing parts >= 0
    bool is_admissible() const;

    std::string str() const;

    bool operator==(const RiggedConfiguration& o) const { return L_ == o.L_ && nu_ == o.nu_; }
    bool operator!=(const RiggedConfiguration& o) const { return !(*this == o); }
    bool operator<(const RiggedConfiguration& o) const;

private:
    MultiplicityArray L_;
    std::vector<std::vector<RcString>> nu_;
};

// Kashiwara operators on rigged configurations, 1 <= a <= n-1.
// e_a shrinks the string with the smallest negative label (ties: shortest);
// f_a grows the string with the smallest nonpositive label (ties: longest)
// or starts a new string (1,-1). Unselected strings keep their colabels.
// f_a is undefined when a label would exceed its vacancy number.
std::optional<RiggedConfiguration> rc_e(const RiggedConfiguration& rc, int a);
std::optional<RiggedConfiguration> rc_f(const RiggedConfiguration& rc, int a);

// All admissible rigged configurations: vacancies >= 0, labels in [0, p].
std::vector<RiggedConfiguration> enumerate_admissible(const MultiplicityArray& L,
                                                      const Weight& lambda);

// All configurations nu with the sizes imposed by (L, lambda), no
// positivity requirement; riggings ignored (empty).
std::vector<RiggedConfiguration> enumerate_configurations(const MultiplicityArray& L,
                                                          const Weight& lambda);

// Unrestricted rigged configurations: labels bounded above by the vacancy
// numbers and below by a lower-bound tableau common to all groups.
bool is_unrestricted_member(const RiggedConfiguration& rc, const Weight& lambda);
std::vector<RiggedConfiguration> enumerate_unrestricted(const MultiplicityArray& L,
                                                        const Weight& lambda);

// Promotion operator. Exact on a single-factor multiplicity array; on
// tensor products it implements the same algorithm (conjectural transport).
RiggedConfiguration rc_promotion(const RiggedConfiguration& rc);

// Promotion after its first stage only: the configuration extended by a
// temporary rigged partition at index n (result has rank n+1).
RiggedConfiguration rc_promotion_intermediate(const RiggedConfiguration& rc);

// Label complementation (i,x) -> (i, p_i - x); an involution.
RiggedConfiguration theta(const RiggedConfiguration& rc);

// Transpose duality on rigged configurations; lambda is the weight of rc
// as a partition. Target rank defaults to max(lambda_1, max column + 1).
RiggedConfiguration transpose_rc(const RiggedConfiguration& rc, const Partition& lambda,
                                 int target_rank = 0);

// Contragredient duality: index a of the result is index n-a of the input.
RiggedConfiguration reverse_rc(const RiggedConfiguration& rc);

// Level restriction: modified vacancy numbers computed from
// a column-strict tableau t, and the membership test.
int modified_vacancy(const RiggedConfiguration& rc, const Weight& lambda, int level,
                     const BoundTableau& t, int k, int i);
bool is_level_restricted(const RiggedConfiguration& rc, const Weight& lambda, int level);

}  // namespace xm
