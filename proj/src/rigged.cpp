#include "xm/rigged.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace xm {

namespace {

int cartan(int a, int b) {
    if (a == b) return 2;
    if (a == b + 1 || b == a + 1) return -1;
    return 0;
}

// p_i^{(a)} over an arbitrary number of rigged partitions; used both for
// ordinary configurations (nu.size() == n-1) and for the temporarily
// extended configuration during promotion (nu.size() == n).
int vacancy_of(const std::vector<std::vector<RcString>>& nu, const MultiplicityArray& L, int a,
               int i) {
    int p = 0;
    for (const auto& [key, c] : L.counts)
        if (key.first == a) p += std::min(i, key.second) * c;
    for (int b = std::max(1, a - 1); b <= std::min<int>(nu.size(), a + 1); ++b) {
        int coef = cartan(a, b);
        if (coef == 0) continue;
        for (const RcString& s : nu[b - 1]) p -= coef * std::min(i, s.len);
    }
    return p;
}

void sort_strings(std::vector<std::vector<RcString>>& nu) {
    for (auto& part : nu) std::sort(part.begin(), part.end());
}

}  // namespace

RiggedConfiguration::RiggedConfiguration(MultiplicityArray L, std::vector<std::vector<RcString>> nu)
    : L_(std::move(L)), nu_(std::move(nu)) {
    if (L_.n < 2) throw std::invalid_argument("RiggedConfiguration: rank must be at least 2");
    if (static_cast<int>(nu_.size()) > L_.n - 1)
        throw std::invalid_argument("RiggedConfiguration: too many rigged partitions");
    nu_.resize(L_.n - 1);
    for (const auto& part : nu_)
        for (const RcString& s : part)
            if (s.len < 1) throw std::invalid_argument("RiggedConfiguration: parts must be positive");
    sort_strings(nu_);
}

int RiggedConfiguration::m(int a, int i) const {
    int c = 0;
    for (const RcString& s : strings(a))
        if (s.len == i) ++c;
    return c;
}

int RiggedConfiguration::largest_part(int a) const {
    const auto& part = strings(a);
    return part.empty() ? 0 : part.front().len;
}

int RiggedConfiguration::vacancy(int a, int i) const { return vacancy_of(nu_, L_, a, i); }

long long RiggedConfiguration::cocharge_config() const {
    long long cc2 = 0;  // twice the cocharge
    int rank = static_cast<int>(nu_.size());
    for (int a = 1; a <= rank; ++a)
        for (int b = std::max(1, a - 1); b <= std::min(rank, a + 1); ++b) {
            int coef = cartan(a, b);
            for (const RcString& sa : nu_[a - 1])
                for (const RcString& sb : nu_[b - 1]) cc2 += coef * std::min(sa.len, sb.len);
        }
    return cc2 / 2;
}

long long RiggedConfiguration::cocharge() const {
    long long total = cocharge_config();
    for (const auto& part : nu_)
        for (const RcString& s : part) total += s.rig;
    return total;
}

std::vector<int> RiggedConfiguration::weight() const {
    std::vector<int> wt(L_.n, 0);
    for (const auto& [key, c] : L_.counts) {
        auto [a, i] = key;
        for (int e = 1; e <= a; ++e) wt[e - 1] += i * c;  // i * L * Lambda_a
    }
    for (int a = 1; a <= static_cast<int>(nu_.size()); ++a)
        for (const RcString& s : nu_[a - 1]) {
            wt[a - 1] -= s.len;  // -|nu^{(a)}| * alpha_a
            wt[a] += s.len;
        }
    return wt;
}

bool RiggedConfiguration::is_admissible() const {
    for (int a = 1; a <= static_cast<int>(nu_.size()); ++a)
        for (const RcString& s : strings(a)) {
            int p = vacancy(a, s.len);
            if (p < 0 || s.rig < 0 || s.rig > p) return false;
        }
    return true;
}

std::string RiggedConfiguration::str() const {
    std::ostringstream out;
    for (size_t a = 0; a < nu_.size(); ++a) {
        if (a) out << " | ";
        if (nu_[a].empty()) out << "-";
        for (size_t k = 0; k < nu_[a].size(); ++k) {
            if (k) out << " ";
            out << nu_[a][k].len << ":" << nu_[a][k].rig;
        }
    }
    return out.str();
}

bool RiggedConfiguration::operator<(const RiggedConfiguration& o) const {
    auto key = [](const RiggedConfiguration& r) {
        std::vector<std::vector<std::pair<int, int>>> k;
        for (const auto& part : r.nu_) {
            std::vector<std::pair<int, int>> p;
            for (const RcString& s : part) p.emplace_back(s.len, s.rig);
            k.push_back(std::move(p));
        }
        return k;
    };
    return key(*this) < key(o);
}

namespace {

// Generic Kashiwara operators working directly on string lists; `nparts`
// may exceed the number of classical indices during promotion.
struct RawRc {
    MultiplicityArray L;
    std::vector<std::vector<RcString>> nu;

    int vacancy(int a, int i) const { return vacancy_of(nu, L, a, i); }
};

std::optional<RawRc> raw_e(const RawRc& rc, int a) {
    const auto& part = rc.nu[a - 1];
    int best = -1;
    for (int idx = 0; idx < static_cast<int>(part.size()); ++idx) {
        if (part[idx].rig >= 0) continue;
        if (best < 0 || part[idx].rig < part[best].rig ||
            (part[idx].rig == part[best].rig && part[idx].len < part[best].len))
            best = idx;
    }
    if (best < 0) return std::nullopt;
    RcString sel = part[best];
    RawRc out = rc;
    out.nu[a - 1].erase(out.nu[a - 1].begin() + best);
    // colabels of the unselected strings, recorded before the box moves
    std::vector<std::vector<int>> colabel(rc.nu.size());
    for (int b = 1; b <= static_cast<int>(rc.nu.size()); ++b)
        for (const RcString& s : out.nu[b - 1])
            colabel[b - 1].push_back(rc.vacancy(b, s.len) - s.rig);
    bool keep = sel.len > 1;
    if (keep) out.nu[a - 1].push_back({sel.len - 1, 0});
    // restore colabels under the new vacancies, then fix the moved label
    for (int b = 1; b <= static_cast<int>(rc.nu.size()); ++b) {
        size_t idx = 0;
        for (RcString& s : out.nu[b - 1]) {
            if (keep && b == a && &s == &out.nu[b - 1].back()) continue;  // the moved string
            s.rig = out.vacancy(b, s.len) - colabel[b - 1][idx++];
        }
    }
    if (keep) out.nu[a - 1].back().rig = sel.rig + 1;
    sort_strings(out.nu);
    return out;
}

std::optional<RawRc> raw_f(const RawRc& rc, int a, bool check_valid) {
    const auto& part = rc.nu[a - 1];
    int best = -1;
    for (int idx = 0; idx < static_cast<int>(part.size()); ++idx) {
        if (part[idx].rig > 0) continue;
        if (best < 0 || part[idx].rig < part[best].rig ||
            (part[idx].rig == part[best].rig && part[idx].len > part[best].len))
            best = idx;
    }
    RawRc out = rc;
    RcString sel{0, 0};
    if (best >= 0) {
        sel = part[best];
        out.nu[a - 1].erase(out.nu[a - 1].begin() + best);
    }
    std::vector<std::vector<int>> colabel(rc.nu.size());
    for (int b = 1; b <= static_cast<int>(rc.nu.size()); ++b)
        for (const RcString& s : out.nu[b - 1])
            colabel[b - 1].push_back(rc.vacancy(b, s.len) - s.rig);
    RcString moved{sel.len + 1, sel.rig - 1};
    out.nu[a - 1].push_back(moved);
    for (int b = 1; b <= static_cast<int>(rc.nu.size()); ++b) {
        size_t idx = 0;
        for (RcString& s : out.nu[b - 1]) {
            if (b == a && &s == &out.nu[b - 1].back()) continue;  // the moved string
            s.rig = out.vacancy(b, s.len) - colabel[b - 1][idx++];
        }
    }
    sort_strings(out.nu);
    if (check_valid)
        for (int b = 1; b <= static_cast<int>(out.nu.size()); ++b)
            for (const RcString& s : out.nu[b - 1])
                if (s.rig > out.vacancy(b, s.len)) return std::nullopt;
    return out;
}

}  // namespace

std::optional<RiggedConfiguration> rc_e(const RiggedConfiguration& rc, int a) {
    if (a < 1 || a > rc.n() - 1) throw std::invalid_argument("rc_e: index out of range");
    auto r = raw_e({rc.L(), rc.nu()}, a);
    if (!r) return std::nullopt;
    return RiggedConfiguration(r->L, r->nu);
}

std::optional<RiggedConfiguration> rc_f(const RiggedConfiguration& rc, int a) {
    if (a < 1 || a > rc.n() - 1) throw std::invalid_argument("rc_f: index out of range");
    auto r = raw_f({rc.L(), rc.nu()}, a, true);
    if (!r) return std::nullopt;
    return RiggedConfiguration(r->L, r->nu);
}

std::vector<RiggedConfiguration> enumerate_configurations(const MultiplicityArray& L,
                                                          const Weight& lambda) {
    std::vector<RiggedConfiguration> out;
    std::vector<int> sizes = configuration_sizes(L, lambda);
    for (int s : sizes)
        if (s < 0) return out;
    std::vector<std::vector<Partition>> choices;
    for (int s : sizes) choices.push_back(partitions_of(s, s == 0 ? 1 : s));
    std::vector<std::vector<RcString>> nu(sizes.size());
    std::function<void(size_t)> rec = [&](size_t a) {
        if (a == choices.size()) {
            out.push_back(RiggedConfiguration(L, nu));
            return;
        }
        for (const Partition& p : choices[a]) {
            nu[a].clear();
            for (int part : p.parts()) nu[a].push_back({part, 0});
            rec(a + 1);
        }
        nu[a].clear();
    };
    rec(0);
    return out;
}

namespace {

// all weakly decreasing rigging tuples for the length groups of one rigged
// partition, each label in [lo(i), p(i)]
void fill_riggings(const RiggedConfiguration& base, int a,
                   const std::function<int(int, int)>& lower, std::vector<RcString>& strings,
                   size_t idx, const std::function<void()>& emit) {
    if (idx == strings.size()) {
        emit();
        return;
    }
    int i = strings[idx].len;
    int hi = base.vacancy(a, i);
    if (idx > 0 && strings[idx - 1].len == i) hi = std::min(hi, strings[idx - 1].rig);
    int lo = lower(a, i);
    for (int x = hi; x >= lo; --x) {
        strings[idx].rig = x;
        fill_riggings(base, a, lower, strings, idx + 1, emit);
    }
}

std::vector<RiggedConfiguration> enumerate_riggings(const MultiplicityArray& L,
                                                    const Weight& lambda,
                                                    const std::function<int(int, int)>& lower,
                                                    bool require_admissible) {
    std::vector<RiggedConfiguration> out;
    for (const RiggedConfiguration& conf : enumerate_configurations(L, lambda)) {
        if (require_admissible) {
            bool ok = true;
            for (int a = 1; a <= conf.n() - 1 && ok; ++a)
                for (const RcString& s : conf.strings(a))
                    if (conf.vacancy(a, s.len) < 0) {
                        ok = false;
                        break;
                    }
            if (!ok) continue;
        }
        std::vector<std::vector<RcString>> nu = conf.nu();
        std::function<void(int)> rec = [&](int a) {
            if (a == conf.n()) {
                out.push_back(RiggedConfiguration(L, nu));
                return;
            }
            fill_riggings(conf, a, lower, nu[a - 1], 0, [&] { rec(a + 1); });
        };
        rec(1);
    }
    return out;
}

}  // namespace

std::vector<RiggedConfiguration> enumerate_admissible(const MultiplicityArray& L,
                                                      const Weight& lambda) {
    return enumerate_riggings(L, lambda, [](int, int) { return 0; }, true);
}

bool is_unrestricted_member(const RiggedConfiguration& rc, const Weight& lambda) {
    for (int a = 1; a <= rc.n() - 1; ++a)
        for (const RcString& s : rc.strings(a))
            if (s.rig > rc.vacancy(a, s.len)) return false;
    for (const BoundTableau& t : enumerate_lower_bound_tableaux(lambda)) {
        bool ok = true;
        for (int a = 1; a <= rc.n() - 1 && ok; ++a)
            for (const RcString& s : rc.strings(a))
                if (s.rig < lower_bound_value(t, lambda, a, s.len)) {
                    ok = false;
                    break;
                }
        if (ok) return true;
    }
    return false;
}

std::vector<RiggedConfiguration> enumerate_unrestricted(const MultiplicityArray& L,
                                                        const Weight& lambda) {
    auto tableaux = enumerate_lower_bound_tableaux(lambda);
    auto lower = [&](int a, int i) {
        int lo = 0;
        bool first = true;
        for (const BoundTableau& t : tableaux) {
            int v = lower_bound_value(t, lambda, a, i);
            lo = first ? v : std::min(lo, v);
            first = false;
        }
        return lo;
    };
    std::vector<RiggedConfiguration> all =
        enumerate_riggings(L, lambda, lower, false);
    std::vector<RiggedConfiguration> out;
    for (const auto& rc : all)
        if (is_unrestricted_member(rc, lambda)) out.push_back(rc);
    return out;
}

namespace {

// First stage of promotion: extend by a temporary n-th rigged partition
// and apply f_a to it lambda_a times for a = n down to 1.
RawRc promotion_stage_one(const RiggedConfiguration& rc) {
    int n = rc.n();
    std::vector<int> wt = rc.weight();
    MultiplicityArray ext = rc.L();
    ext.n = n + 1;
    RawRc cur{ext, rc.nu()};
    cur.nu.resize(n);
    for (int a = n; a >= 1; --a)
        for (int k = 0; k < wt[a - 1]; ++k) {
            auto next = raw_f(cur, a, false);
            if (!next) throw std::logic_error("rc_promotion: f undefined");
            cur = *next;
        }
    return cur;
}

}  // namespace

RiggedConfiguration rc_promotion_intermediate(const RiggedConfiguration& rc) {
    RawRc cur = promotion_stage_one(rc);
    return RiggedConfiguration(cur.L, cur.nu);
}

RiggedConfiguration rc_promotion(const RiggedConfiguration& rc) {
    int n = rc.n();
    std::vector<int> wt = rc.weight();
    RawRc cur = promotion_stage_one(rc);
    for (int round = 0; round < wt[n - 1]; ++round) {
        // select the smallest singular string at index n, then for
        // k = n-1..1 the smallest singular string no shorter than the
        // previous selection
        std::vector<int> chosen(n + 1, 0);
        int prev = 0;
        for (int k = n; k >= 1; --k) {
            int pick = -1;
            for (const RcString& s : cur.nu[k - 1]) {
                if (s.len < prev) continue;
                if (s.rig != cur.vacancy(k, s.len)) continue;
                if (pick < 0 || s.len < pick) pick = s.len;
            }
            if (pick < 0) throw std::logic_error("rc_promotion: missing singular string");
            chosen[k] = pick;
            prev = pick;
        }
        // locate the selected strings before any lengths change, since
        // shortening one index shifts the vacancies of its neighbors
        std::vector<int> pos(n + 1, -1);
        for (int k = 1; k <= n; ++k) {
            const auto& part = cur.nu[k - 1];
            for (size_t idx = 0; idx < part.size(); ++idx)
                if (part[idx].len == chosen[k] && part[idx].rig == cur.vacancy(k, chosen[k])) {
                    pos[k] = static_cast<int>(idx);
                    break;
                }
            if (pos[k] < 0) throw std::logic_error("rc_promotion: selected string vanished");
        }
        // shorten them; remember which ones to re-singularize
        std::vector<int> fix(n + 1, -1);
        for (int k = 1; k <= n; ++k) {
            auto& part = cur.nu[k - 1];
            if (chosen[k] == 1) {
                part.erase(part.begin() + pos[k]);
            } else {
                part[pos[k]].len -= 1;
                fix[k] = pos[k];
            }
        }
        // make the shortened strings singular under the new vacancies;
        // all other labels stay as they are
        for (int k = 1; k <= n; ++k)
            if (fix[k] >= 0) {
                RcString& s = cur.nu[k - 1][fix[k]];
                s.rig = cur.vacancy(k, s.len);
            }
        sort_strings(cur.nu);
    }
    if (!cur.nu[n - 1].empty()) throw std::logic_error("rc_promotion: residue at the extra index");
    cur.nu.pop_back();
    return RiggedConfiguration(rc.L(), cur.nu);
}

RiggedConfiguration theta(const RiggedConfiguration& rc) {
    std::vector<std::vector<RcString>> nu = rc.nu();
    for (int a = 1; a <= rc.n() - 1; ++a)
        for (auto& s : nu[a - 1]) s.rig = rc.vacancy(a, s.len) - s.rig;
    return RiggedConfiguration(rc.L(), std::move(nu));
}

RiggedConfiguration reverse_rc(const RiggedConfiguration& rc) {
    int n = rc.n();
    MultiplicityArray L;
    L.n = n;
    for (const auto& [key, c] : rc.L().counts) L.add(n - key.first, key.second, c);
    std::vector<std::vector<RcString>> nu(rc.nu().rbegin(), rc.nu().rend());
    return RiggedConfiguration(L, std::move(nu));
}

namespace {

int column_height(const std::vector<RcString>& part, int i) {
    int h = 0;
    for (const RcString& s : part)
        if (s.len >= i) ++h;
    return h;
}

}  // namespace

RiggedConfiguration transpose_rc(const RiggedConfiguration& rc, const Partition& lambda,
                                 int target_rank) {
    int n = rc.n();
    int max_col = 0;
    for (const auto& [key, c] : rc.L().counts) max_col = std::max(max_col, key.second);
    // string lengths become indices of the transpose, so they bound the rank too
    int max_len = 0;
    for (int a = 1; a <= n - 1; ++a) max_len = std::max(max_len, rc.largest_part(a));
    int nt = target_rank > 0 ? target_rank
                             : std::max({lambda.part(1), max_col + 1, max_len + 1});
    if (max_len > nt - 1) throw std::invalid_argument("transpose_rc: target rank too small");

    // extent of the index/length grid we need to look at
    int imax = std::max({lambda.length(), n, nt});
    for (const auto& [key, c] : rc.L().counts) imax = std::max(imax, key.first);
    for (int a = 1; a <= n - 1; ++a) imax = std::max(imax, rc.largest_part(a));
    imax += 1;

    auto m_entry = [&](int a, int i) {
        int prev = a >= 2 && a - 1 <= n - 1 ? column_height(rc.strings(a - 1), i) : 0;
        int curr = a <= n - 1 ? column_height(rc.strings(a), i) : 0;
        return prev - curr;
    };
    auto in_rect = [&](int i, int a) {
        int total = 0;
        for (const auto& [key, c] : rc.L().counts)
            if (i <= key.first && a <= key.second) total += c;
        return total;
    };
    auto mt_entry = [&](int a, int i) {
        int chi = i <= lambda.length() && a <= lambda.part(i) ? 1 : 0;
        return -m_entry(i, a) + chi - in_rect(i, a);
    };

    // transposed multiplicity array: factors B^{s,r}
    MultiplicityArray Lt;
    Lt.n = nt;
    for (const auto& [key, c] : rc.L().counts) {
        if (key.second > nt - 1)
            throw std::invalid_argument("transpose_rc: target rank too small");
        Lt.add(key.second, key.first, c);
    }

    // columns of nu^t(a): cols_i = -sum_{b<=a} m^t_{b,i}
    std::vector<std::vector<RcString>> nut(nt - 1);
    for (int a = 1; a <= nt - 1; ++a) {
        std::vector<int> cols(imax + 1, 0);
        for (int i = 1; i <= imax; ++i) {
            int c = 0;
            for (int b = 1; b <= a; ++b) c -= mt_entry(b, i);
            cols[i] = c;
        }
        // convert column heights to parts
        for (int i = 1; i < imax; ++i)
            if (cols[i] < cols[i + 1])
                throw std::logic_error("transpose_rc: column heights not decreasing");
        if (cols[1] < 0 || cols[imax] != 0)
            throw std::logic_error("transpose_rc: invalid column heights");
        std::vector<int> parts;
        for (int row = 1; row <= cols[1]; ++row) {
            int len = 0;
            for (int i = 1; i <= imax; ++i)
                if (cols[i] >= row) len = i;
            parts.push_back(len);
        }
        for (int len : parts) nut[a - 1].push_back({len, 0});
    }

    RiggedConfiguration shape_only(Lt, nut);

    // riggings: group (a,i) of rc maps to group (index i, length a);
    // J^t = transpose of the complement of J^{(a,i)} in m x p, padded with 0s
    for (int a = 1; a <= n - 1; ++a) {
        std::map<int, std::vector<int>> groups;  // length -> labels (desc)
        for (const RcString& s : rc.strings(a)) groups[s.len].push_back(s.rig);
        for (auto& [i, labels] : groups) {
            std::sort(labels.rbegin(), labels.rend());
            int mcount = static_cast<int>(labels.size());
            int p = rc.vacancy(a, i);
            // complement in the m x p rectangle, kept weakly decreasing
            std::vector<int> comp(mcount);
            for (int r = 0; r < mcount; ++r) comp[r] = p - labels[mcount - 1 - r];
            // transpose of comp
            std::vector<int> trans;
            for (int col = 1; col <= p; ++col) {
                int h = 0;
                for (int v : comp)
                    if (v >= col) ++h;
                if (h > 0)
                    trans.push_back(h);
                else
                    break;
            }
            // assign to the strings of length a at index i of the transpose
            auto& target = nut[i - 1];
            int assigned = 0;
            for (auto& s : target)
                if (s.len == a) {
                    s.rig = assigned < static_cast<int>(trans.size()) ? trans[assigned] : 0;
                    ++assigned;
                }
            if (assigned < static_cast<int>(trans.size()))
                throw std::logic_error("transpose_rc: rigging does not fit");
        }
    }
    return RiggedConfiguration(Lt, nut);
}

int modified_vacancy(const RiggedConfiguration& rc, const Weight& lambda, int level,
                     const BoundTableau& t, int k, int i) {
    int n = rc.n();
    int lam_n = lambda.entry(n);
    int ltil = level - (lambda.entry(1) - lam_n);
    int p = rc.vacancy(k, i);
    for (int j = 1; j <= lambda.entry(k) - lam_n; ++j)
        if (i >= ltil + t.entry(j, k)) --p;
    if (k + 1 <= n - 1)
        for (int j = 1; j <= lambda.entry(k + 1) - lam_n; ++j)
            if (i >= ltil + t.entry(j, k + 1)) ++p;
    return p;
}

bool is_level_restricted(const RiggedConfiguration& rc, const Weight& lambda, int level) {
    int n = rc.n();
    if (!lambda.is_partition_shaped())
        throw std::invalid_argument("is_level_restricted: lambda must be a partition");
    if (lambda.entry(1) - lambda.entry(n) > level)
        throw std::invalid_argument("is_level_restricted: lambda not restricted of this level");
    for (const auto& [key, c] : rc.L().counts)
        if (key.second > level)
            throw std::invalid_argument("is_level_restricted: L not restricted of this level");
    for (int k = 1; k <= n - 1; ++k)
        if (rc.largest_part(k) > level) return false;
    for (const BoundTableau& t : enumerate_level_cst(lambda, level)) {
        bool ok = true;
        for (int k = 1; k <= n - 1 && ok; ++k)
            for (int i = 1; i <= level && ok; ++i) {
                int pt = modified_vacancy(rc, lambda, level, t, k, i);
                if (pt < 0) ok = false;
                int x = 0;  // largest label among strings of length i
                bool has = false;
                for (const RcString& s : rc.strings(k))
                    if (s.len == i) {
                        x = has ? std::max(x, s.rig) : s.rig;
                        has = true;
                    }
                if (has && x > pt) ok = false;
            }
        if (ok) return true;
    }
    return false;
}

}  // namespace xm
