#include "xm/shapes.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace xm {

Partition::Partition(std::vector<int> parts) : parts_(std::move(parts)) {
    while (!parts_.empty() && parts_.back() == 0) parts_.pop_back();
    for (size_t i = 0; i < parts_.size(); ++i) {
        if (parts_[i] <= 0) throw std::invalid_argument("Partition: parts must be positive");
        if (i + 1 < parts_.size() && parts_[i] < parts_[i + 1])
            throw std::invalid_argument("Partition: parts must be weakly decreasing");
    }
}

int Partition::size() const { return std::accumulate(parts_.begin(), parts_.end(), 0); }

int Partition::part(int i) const {
    if (i < 1 || i > static_cast<int>(parts_.size())) return 0;
    return parts_[i - 1];
}

int Partition::column(int i) const {
    int h = 0;
    for (int p : parts_)
        if (p >= i) ++h;
    return h;
}

Partition Partition::transpose() const {
    std::vector<int> cols;
    if (!parts_.empty()) {
        cols.resize(parts_[0]);
        for (int i = 1; i <= parts_[0]; ++i) cols[i - 1] = column(i);
    }
    return Partition(std::move(cols));
}

Weight::Weight(std::vector<int> entries) : entries_(std::move(entries)) {
    for (int e : entries_)
        if (e < 0) throw std::invalid_argument("Weight: entries must be nonnegative");
}

int Weight::total() const { return std::accumulate(entries_.begin(), entries_.end(), 0); }

bool Weight::is_partition_shaped() const {
    for (size_t i = 0; i + 1 < entries_.size(); ++i)
        if (entries_[i] < entries_[i + 1]) return false;
    return true;
}

Partition Weight::to_partition() const {
    if (!is_partition_shaped()) throw std::invalid_argument("Weight is not weakly decreasing");
    return Partition(entries_);
}

int TensorShape::total_boxes() const {
    int t = 0;
    for (auto [r, s] : factors) t += r * s;
    return t;
}

int MultiplicityArray::count(int a, int i) const {
    auto it = counts.find({a, i});
    return it == counts.end() ? 0 : it->second;
}

void MultiplicityArray::add(int a, int i, int delta) {
    auto key = std::make_pair(a, i);
    int v = count(a, i) + delta;
    if (v < 0) throw std::invalid_argument("MultiplicityArray: negative count");
    if (v == 0)
        counts.erase(key);
    else
        counts[key] = v;
}

int MultiplicityArray::total_boxes() const {
    int t = 0;
    for (const auto& [key, c] : counts) t += key.first * key.second * c;
    return t;
}

int BoundTableau::entry(int j, int k) const {
    if (k < 1 || k > static_cast<int>(columns.size())) return 0;
    const auto& col = columns[k - 1];
    if (j < 1 || j > static_cast<int>(col.size())) return 0;
    return col[j - 1];
}

std::string BoundTableau::str() const {
    std::ostringstream out;
    out << "[";
    for (size_t k = 0; k < columns.size(); ++k) {
        if (k) out << ";";
        for (size_t j = 0; j < columns[k].size(); ++j) {
            if (j) out << ",";
            out << columns[k][j];
        }
    }
    out << "]";
    return out.str();
}

MultiplicityArray multiplicity_of(const TensorShape& shape) {
    MultiplicityArray L;
    L.n = shape.n;
    for (auto [r, s] : shape.factors) {
        if (r < 1 || r > shape.n - 1 || s < 1)
            throw std::invalid_argument("TensorShape: factor outside 1 <= r <= n-1, s >= 1");
        L.add(r, s, 1);
    }
    return L;
}

std::vector<int> configuration_sizes(const MultiplicityArray& L, const Weight& lambda) {
    if (lambda.n() != L.n) throw std::invalid_argument("configuration_sizes: rank mismatch");
    if (lambda.total() != L.total_boxes())
        throw std::invalid_argument("configuration_sizes: |lambda| != sum a*i*L_i^(a)");
    int n = L.n;
    std::vector<int> sizes(n - 1, 0);
    for (int k = 1; k <= n - 1; ++k) {
        int s = 0;
        for (int j = k + 1; j <= n; ++j) s += lambda.entry(j);
        for (const auto& [key, c] : L.counts) {
            auto [a, i] = key;
            s -= i * std::max(a - k, 0) * c;
        }
        sizes[k - 1] = s;
    }
    return sizes;
}

namespace {

// All strictly decreasing fillings of one column of given height from
// {1..alphabet}, descending within the column, lexicographic over columns.
void fill_decreasing_columns(const std::vector<int>& heights, const std::vector<int>& alphabets,
                             size_t k, std::vector<std::vector<int>>& current,
                             std::vector<BoundTableau>& out, BoundKind kind) {
    if (k == heights.size()) {
        out.push_back(BoundTableau{kind, current});
        return;
    }
    int h = heights[k];
    int alpha = alphabets[k];
    // choose h distinct letters from {1..alpha}, written in decreasing order
    std::vector<int> chosen;
    std::function<void(int)> rec = [&](int next) {
        if (static_cast<int>(chosen.size()) == h) {
            current.push_back(chosen);
            fill_decreasing_columns(heights, alphabets, k + 1, current, out, kind);
            current.pop_back();
            return;
        }
        int remaining = h - static_cast<int>(chosen.size());
        for (int v = next; v >= remaining; --v) {
            chosen.push_back(v);
            rec(v - 1);
            chosen.pop_back();
        }
    };
    rec(alpha);
}

void fill_column_strict(const std::vector<int>& heights, int alphabet, size_t k,
                        std::vector<std::vector<int>>& current, std::vector<BoundTableau>& out) {
    if (k == heights.size()) {
        out.push_back(BoundTableau{BoundKind::LevelCST, current});
        return;
    }
    int h = heights[k];
    std::vector<int> col(h);
    // column-strict: strictly increasing down columns, rows weakly increase
    // left to right, so entry (j,k) >= entry (j,k-1)
    std::function<void(int)> rec = [&](int j) {
        if (j == h) {
            current.push_back(col);
            fill_column_strict(heights, alphabet, k + 1, current, out);
            current.pop_back();
            return;
        }
        int lo = j == 0 ? 1 : col[j - 1] + 1;
        if (k > 0 && j < static_cast<int>(current[k - 1].size())) lo = std::max(lo, current[k - 1][j]);
        for (int v = lo; v <= alphabet; ++v) {
            col[j] = v;
            rec(j + 1);
        }
    };
    rec(0);
}

}  // namespace

std::vector<BoundTableau> enumerate_lower_bound_tableaux(const Weight& lambda) {
    int n = lambda.n();
    std::vector<int> c(n, 0);  // c[k] = lambda_{k+1}+...+lambda_n, k = 1..n-1
    for (int k = 1; k <= n - 1; ++k) {
        int s = 0;
        for (int j = k + 1; j <= n; ++j) s += lambda.entry(j);
        c[k] = s;
    }
    std::vector<int> heights, alphabets;
    for (int k = 1; k <= n - 1; ++k) {
        heights.push_back(c[k]);
        alphabets.push_back(k == 1 ? c[1] : c[k - 1]);
    }
    std::vector<BoundTableau> out;
    std::vector<std::vector<int>> current;
    fill_decreasing_columns(heights, alphabets, 0, current, out, BoundKind::LowerBound);
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<BoundTableau> enumerate_level_cst(const Weight& lambda, int level) {
    if (!lambda.is_partition_shaped())
        throw std::invalid_argument("enumerate_level_cst: lambda must be weakly decreasing");
    int n = lambda.n();
    int span = lambda.entry(1) - lambda.entry(n);
    if (span > level) throw std::invalid_argument("enumerate_level_cst: lambda_1 - lambda_n > level");
    std::vector<int> heights;
    for (int k = 1; k <= n - 1; ++k) heights.push_back(lambda.entry(k) - lambda.entry(n));
    std::vector<BoundTableau> out;
    std::vector<std::vector<int>> current;
    fill_column_strict(heights, span, 0, current, out);
    std::sort(out.begin(), out.end());
    return out;
}

int lower_bound_value(const BoundTableau& t, const Weight& lambda, int a, int i) {
    int n = lambda.n();
    auto c = [&](int k) {
        int s = 0;
        for (int j = k + 1; j <= n; ++j) s += lambda.entry(j);
        return s;
    };
    int value = 0;
    for (int j = 1; j <= c(a); ++j)
        if (i >= t.entry(j, a)) --value;
    if (a + 1 <= n - 1)
        for (int j = 1; j <= c(a + 1); ++j)
            if (i >= t.entry(j, a + 1)) ++value;
    return value;
}

std::vector<Partition> partitions_of(int total, int max_part) {
    std::vector<Partition> out;
    if (total < 0) return out;
    std::vector<int> parts;
    std::function<void(int, int)> rec = [&](int remaining, int cap) {
        if (remaining == 0) {
            out.push_back(Partition(parts));
            return;
        }
        for (int p = std::min(remaining, cap); p >= 1; --p) {
            parts.push_back(p);
            rec(remaining - p, p);
            parts.pop_back();
        }
    };
    rec(total, std::min(total, max_part));
    return out;
}

std::vector<std::vector<int>> weak_compositions(int total, int parts) {
    std::vector<std::vector<int>> out;
    std::vector<int> cur(parts, 0);
    std::function<void(int, int)> rec = [&](int idx, int remaining) {
        if (idx == parts - 1) {
            cur[idx] = remaining;
            out.push_back(cur);
            return;
        }
        for (int v = remaining; v >= 0; --v) {
            cur[idx] = v;
            rec(idx + 1, remaining - v);
        }
    };
    if (parts == 0) {
        if (total == 0) out.push_back({});
        return out;
    }
    rec(0, total);
    return out;
}

TensorShape parse_tensor_shape(int n, const std::string& text) {
    TensorShape shape;
    shape.n = n;
    if (text.empty()) return shape;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) {
        auto x = item.find('x');
        if (x == std::string::npos) throw std::invalid_argument("tensor factor must look like RxS");
        int r = std::stoi(item.substr(0, x));
        int s = std::stoi(item.substr(x + 1));
        shape.factors.emplace_back(r, s);
    }
    return shape;
}

Weight parse_weight(const std::string& text, int n) {
    std::vector<int> entries;
    if (!text.empty()) {
        std::stringstream ss(text);
        std::string item;
        while (std::getline(ss, item, ',')) entries.push_back(std::stoi(item));
    }
    if (n > 0) entries.resize(n, 0);
    return Weight(entries);
}

}  // namespace xm
