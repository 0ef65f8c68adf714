#include "xm/energy.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <stdexcept>
#include <tuple>

namespace xm {

void row_insert(std::vector<std::vector<int>>& rows, int letter) {
    int x = letter;
    for (auto& row : rows) {
        auto it = std::upper_bound(row.begin(), row.end(), x);
        if (it == row.end()) {
            row.push_back(x);
            return;
        }
        std::swap(*it, x);
    }
    rows.push_back({x});
}

std::vector<std::vector<int>> insertion_tableau(const std::vector<int>& word) {
    std::vector<std::vector<int>> rows;
    for (int v : word) row_insert(rows, v);
    return rows;
}

std::vector<std::vector<int>> schensted_product(const Tableau& b, const Tableau& b2) {
    std::vector<std::vector<int>> rows = b.rows();
    for (int v : b2.row_word()) row_insert(rows, v);
    return rows;
}

namespace {

// elements of B^{r,s} grouped by weight, cached
const std::map<std::vector<int>, std::vector<Tableau>>& crystal_by_weight(int n, int r, int s) {
    static std::map<std::tuple<int, int, int>, std::map<std::vector<int>, std::vector<Tableau>>> cache;
    static std::mutex m;
    std::lock_guard<std::mutex> lock(m);
    auto key = std::make_tuple(n, r, s);
    auto it = cache.find(key);
    if (it != cache.end()) return it->second;
    std::map<std::vector<int>, std::vector<Tableau>> groups;
    for (const Tableau& t : enumerate_crystal(n, r, s)) groups[t.weight().entries()].push_back(t);
    return cache[key] = std::move(groups);
}

}  // namespace

std::pair<Tableau, Tableau> r_matrix(const Tableau& b, const Tableau& b2) {
    if (b.n() != b2.n()) throw std::invalid_argument("r_matrix: alphabet mismatch");
    int n = b.n();
    static std::map<std::pair<Tableau, Tableau>, std::pair<Tableau, Tableau>> cache;
    static std::mutex m;
    {
        std::lock_guard<std::mutex> lock(m);
        auto it = cache.find({b, b2});
        if (it != cache.end()) return it->second;
    }

    auto target = schensted_product(b, b2);
    std::vector<int> total(n, 0);
    for (const auto& row : target)
        for (int v : row) ++total[v - 1];

    const auto& left_groups = crystal_by_weight(n, b2.num_rows(), b2.num_cols());
    for (const auto& [wl, lefts] : left_groups) {
        std::vector<int> rest(n);
        bool ok = true;
        for (int i = 0; i < n; ++i) {
            rest[i] = total[i] - wl[i];
            if (rest[i] < 0) ok = false;
        }
        if (!ok) continue;
        const auto& right_groups = crystal_by_weight(n, b.num_rows(), b.num_cols());
        auto rit = right_groups.find(rest);
        if (rit == right_groups.end()) continue;
        for (const Tableau& lt : lefts)
            for (const Tableau& rt : rit->second)
                if (schensted_product(lt, rt) == target) {
                    std::lock_guard<std::mutex> lock(m);
                    return cache[{b, b2}] = {lt, rt};
                }
    }
    throw std::logic_error("r_matrix: image not found");
}

Path apply_r(const Path& path, int p) {
    int k = path.size();
    if (p < 1 || p > k - 1) throw std::invalid_argument("apply_r: position out of range");
    int left = k - p - 1, right = k - p;  // 0-based indices of factors p+1 and p
    auto [nl, nr] = r_matrix(path.factor(left), path.factor(right));
    std::vector<Tableau> factors = path.factors();
    factors[left] = nl;
    factors[right] = nr;
    return Path(path.n(), std::move(factors));
}

int local_energy(const Tableau& b, const Tableau& b2) {
    auto rows = schensted_product(b, b2);
    int outside = 0;
    for (size_t i = 0; i < rows.size(); ++i) {
        int bound = 0;
        if (static_cast<int>(i) < b.num_rows()) bound += b.num_cols();
        if (static_cast<int>(i) < b2.num_rows()) bound += b2.num_cols();
        outside += std::max(0, static_cast<int>(rows[i].size()) - bound);
    }
    return outside;
}

int tail_energy(const Path& p) {
    int k = p.size();
    int d = 0;
    for (int i = 1; i < k; ++i) {
        for (int j = i + 1; j <= k; ++j) {
            Path cur = p;
            for (int q = i; q <= j - 2; ++q) cur = apply_r(cur, q);
            // H_{j-1} acts on factors j and j-1
            d += local_energy(cur.factor(k - j), cur.factor(k - j + 1));
        }
    }
    return d;
}

int norm_constant(const TensorShape& shape) {
    int total = 0;
    int k = static_cast<int>(shape.factors.size());
    for (int i = 0; i < k; ++i)
        for (int j = i + 1; j < k; ++j) {
            auto [ri, si] = shape.factors[i];
            auto [rj, sj] = shape.factors[j];
            total += std::min(si, sj) * std::min(ri, rj);
        }
    return total;
}

int affine_epsilon(const Path& p) {
    // through promotion, epsilon_0 equals epsilon_1 of the promoted path
    return string_epsilon(promotion(p), 1);
}

QLaurent config_sum(const TensorShape& shape, const Weight& lambda, PathRestriction restriction,
                    int level) {
    if (lambda.n() != shape.n) throw std::invalid_argument("config_sum: rank mismatch");
    QLaurent total;
    for (const Path& b : enumerate_paths(shape)) {
        if (b.weight() != lambda) continue;
        if (restriction != PathRestriction::Unrestricted && !is_classically_highest(b)) continue;
        if (restriction == PathRestriction::Level && affine_epsilon(b) > level) continue;
        total += QLaurent::q(tail_energy(b));
    }
    return total;
}

}  // namespace xm
