#include "xm/crystal.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <mutex>
#include <sstream>
#include <stdexcept>
#include <tuple>

#include <boost/multiprecision/cpp_int.hpp>

namespace xm {

Tableau::Tableau(int n, std::vector<std::vector<int>> rows) : n_(n), rows_(std::move(rows)) {
    if (n_ < 1) throw std::invalid_argument("Tableau: alphabet size must be positive");
    size_t cols = rows_.empty() ? 0 : rows_[0].size();
    if (!rows_.empty() && cols == 0) throw std::invalid_argument("Tableau: empty rows");
    for (size_t i = 0; i < rows_.size(); ++i) {
        if (rows_[i].size() != cols) throw std::invalid_argument("Tableau: must be rectangular");
        for (size_t j = 0; j < cols; ++j) {
            int v = rows_[i][j];
            if (v < 1 || v > n_) throw std::invalid_argument("Tableau: entry out of alphabet");
            if (j > 0 && rows_[i][j - 1] > v)
                throw std::invalid_argument("Tableau: rows must weakly increase");
            if (i > 0 && rows_[i - 1][j] >= v)
                throw std::invalid_argument("Tableau: columns must strictly increase");
        }
    }
}

std::vector<int> Tableau::row_word() const {
    std::vector<int> w;
    for (auto it = rows_.rbegin(); it != rows_.rend(); ++it)
        w.insert(w.end(), it->begin(), it->end());
    return w;
}

Weight Tableau::weight() const {
    std::vector<int> mult(n_, 0);
    for (const auto& row : rows_)
        for (int v : row) ++mult[v - 1];
    return Weight(std::move(mult));
}

std::string Tableau::str() const {
    std::ostringstream out;
    out << "[";
    for (size_t i = 0; i < rows_.size(); ++i) {
        if (i) out << ";";
        for (size_t j = 0; j < rows_[i].size(); ++j) {
            if (j) out << ",";
            out << rows_[i][j];
        }
    }
    out << "]";
    return out.str();
}

bool Tableau::operator<(const Tableau& o) const {
    return std::tie(n_, rows_) < std::tie(o.n_, o.rows_);
}

Path::Path(int n, std::vector<Tableau> factors) : n_(n), factors_(std::move(factors)) {
    for (const auto& t : factors_)
        if (t.n() != n_) throw std::invalid_argument("Path: factor alphabet mismatch");
}

TensorShape Path::shape() const {
    TensorShape s;
    s.n = n_;
    for (const auto& t : factors_) s.factors.emplace_back(t.num_rows(), t.num_cols());
    return s;
}

std::vector<int> Path::row_word() const {
    std::vector<int> w;
    for (const auto& t : factors_) {
        auto fw = t.row_word();
        w.insert(w.end(), fw.begin(), fw.end());
    }
    return w;
}

Weight Path::weight() const {
    std::vector<int> mult(n_, 0);
    for (const auto& t : factors_)
        for (const auto& row : t.rows())
            for (int v : row) ++mult[v - 1];
    return Weight(std::move(mult));
}

std::string Path::str() const {
    std::ostringstream out;
    for (size_t i = 0; i < factors_.size(); ++i) {
        if (i) out << " (x) ";
        out << factors_[i].str();
    }
    return out.str();
}

bool Path::operator<(const Path& o) const {
    return std::tie(n_, factors_) < std::tie(o.n_, o.factors_);
}

namespace {

// Cell address of each position in a path's row word, in word order.
struct CellRef {
    int factor;  // 0-based
    int row;     // 0-based
    int col;     // 0-based
};

std::vector<CellRef> word_cells(const Path& p) {
    std::vector<CellRef> cells;
    for (int f = 0; f < p.size(); ++f) {
        const Tableau& t = p.factor(f);
        for (int i = t.num_rows() - 1; i >= 0; --i)
            for (int j = 0; j < t.num_cols(); ++j) cells.push_back({f, i, j});
    }
    return cells;
}

// Signature rule on the i/(i+1) subword: i+1 opens, i closes. Returns the
// word positions of unmatched openers (left to right) and unmatched closers
// (left to right).
void bracket(const std::vector<int>& word, int i, std::vector<int>& open, std::vector<int>& close) {
    open.clear();
    close.clear();
    for (int pos = 0; pos < static_cast<int>(word.size()); ++pos) {
        if (word[pos] == i + 1) {
            open.push_back(pos);
        } else if (word[pos] == i) {
            if (!open.empty())
                open.pop_back();
            else
                close.push_back(pos);
        }
    }
}

Path replace_letter(const Path& p, const CellRef& c, int value) {
    std::vector<Tableau> factors = p.factors();
    auto rows = factors[c.factor].rows();
    rows[c.row][c.col] = value;
    factors[c.factor] = Tableau(p.n(), std::move(rows));
    return Path(p.n(), std::move(factors));
}

}  // namespace

std::optional<Path> classical_e(const Path& p, int i) {
    if (i < 1 || i > p.n() - 1) throw std::invalid_argument("classical_e: index out of range");
    auto word = p.row_word();
    std::vector<int> open, close;
    bracket(word, i, open, close);
    if (open.empty()) return std::nullopt;
    // leftmost unmatched i+1 becomes i
    return replace_letter(p, word_cells(p)[open.front()], i);
}

std::optional<Path> classical_f(const Path& p, int i) {
    if (i < 1 || i > p.n() - 1) throw std::invalid_argument("classical_f: index out of range");
    auto word = p.row_word();
    std::vector<int> open, close;
    bracket(word, i, open, close);
    if (close.empty()) return std::nullopt;
    // rightmost unmatched i becomes i+1
    return replace_letter(p, word_cells(p)[close.back()], i + 1);
}

std::optional<Tableau> classical_e(const Tableau& t, int i) {
    auto r = classical_e(Path(t.n(), {t}), i);
    if (!r) return std::nullopt;
    return r->factor(0);
}

std::optional<Tableau> classical_f(const Tableau& t, int i) {
    auto r = classical_f(Path(t.n(), {t}), i);
    if (!r) return std::nullopt;
    return r->factor(0);
}

int string_epsilon(const Path& p, int i) {
    auto word = p.row_word();
    std::vector<int> open, close;
    bracket(word, i, open, close);
    return static_cast<int>(open.size());
}

int string_phi(const Path& p, int i) {
    auto word = p.row_word();
    std::vector<int> open, close;
    bracket(word, i, open, close);
    return static_cast<int>(close.size());
}

bool is_classically_highest(const Path& p) {
    for (int i = 1; i <= p.n() - 1; ++i)
        if (string_epsilon(p, i) > 0) return false;
    return true;
}

const std::vector<Tableau>& enumerate_crystal(int n, int r, int s) {
    if (n < 1 || r < 1 || r > n || s < 1)
        throw std::invalid_argument("enumerate_crystal: need 1 <= r <= n, s >= 1");
    static std::map<std::tuple<int, int, int>, std::vector<Tableau>> cache;
    static std::mutex cache_mutex;
    std::lock_guard<std::mutex> lock(cache_mutex);
    auto key = std::make_tuple(n, r, s);
    auto it = cache.find(key);
    if (it != cache.end()) return it->second;

    std::vector<Tableau> out;
    std::vector<std::vector<int>> rows(r, std::vector<int>(s, 0));
    // fill in row-major order; lexicographic by reading rows top to bottom
    std::function<void(int, int)> rec = [&](int i, int j) {
        if (i == r) {
            out.push_back(Tableau(n, rows));
            return;
        }
        int ni = j + 1 == s ? i + 1 : i;
        int nj = j + 1 == s ? 0 : j + 1;
        int lo = 1;
        if (j > 0) lo = std::max(lo, rows[i][j - 1]);
        if (i > 0) lo = std::max(lo, rows[i - 1][j] + 1);
        // entries below must still fit strictly increasing, so cap at n-(r-1-i)
        int hi = n - (r - 1 - i);
        for (int v = lo; v <= hi; ++v) {
            rows[i][j] = v;
            rec(ni, nj);
        }
    };
    rec(0, 0);
    return cache[key] = std::move(out);
}

std::vector<Path> enumerate_paths(const TensorShape& shape) {
    std::vector<Path> out;
    int k = static_cast<int>(shape.factors.size());
    std::vector<const std::vector<Tableau>*> lists;
    lists.reserve(k);
    for (auto [r, s] : shape.factors) lists.push_back(&enumerate_crystal(shape.n, r, s));
    std::vector<size_t> idx(k, 0);
    while (true) {
        std::vector<Tableau> factors;
        factors.reserve(k);
        for (int f = 0; f < k; ++f) factors.push_back((*lists[f])[idx[f]]);
        out.push_back(Path(shape.n, std::move(factors)));
        // odometer: rightmost factor varies fastest
        int f = k - 1;
        for (; f >= 0; --f) {
            if (++idx[f] < lists[f]->size()) break;
            idx[f] = 0;
        }
        if (f < 0) break;
    }
    return out;
}

long long crystal_cardinality(int n, int r, int s) {
    // hook content formula for the r x s rectangle
    boost::multiprecision::cpp_int num = 1, den = 1;
    for (int i = 1; i <= r; ++i)
        for (int j = 1; j <= s; ++j) {
            num *= n + j - i;
            den *= (r - i) + (s - j) + 1;
        }
    return static_cast<long long>(num / den);
}

namespace {

constexpr int kHole = 0;

// Slide one hole toward the top-left: the cell above drops down when it is
// at least the cell to the left, otherwise the left cell moves right.
void slide_hole(std::vector<std::vector<int>>& g, int i, int j) {
    while (true) {
        bool has_above = i > 0 && g[i - 1][j] != kHole;
        bool has_left = j > 0 && g[i][j - 1] != kHole;
        if (has_above && (!has_left || g[i - 1][j] >= g[i][j - 1])) {
            g[i][j] = g[i - 1][j];
            g[i - 1][j] = kHole;
            --i;
        } else if (has_left) {
            g[i][j] = g[i][j - 1];
            g[i][j - 1] = kHole;
            --j;
        } else {
            return;
        }
    }
}

}  // namespace

Tableau promotion(const Tableau& t) {
    int n = t.n();
    int r = t.num_rows(), s = t.num_cols();
    auto g = t.rows();
    // letters n can only sit in the bottom row of a rectangle
    std::vector<int> holes;
    for (int j = 0; j < s; ++j)
        if (g[r - 1][j] == n) {
            g[r - 1][j] = kHole;
            holes.push_back(j);
        }
    for (int j : holes) slide_hole(g, r - 1, j);
    for (auto& row : g)
        for (int& v : row) v = v == kHole ? 1 : v + 1;
    return Tableau(n, std::move(g));
}

Tableau star_dual(const Tableau& t) {
    int n = t.n();
    int r = t.num_rows(), s = t.num_cols();
    std::vector<std::vector<int>> g(r, std::vector<int>(s));
    for (int i = 0; i < r; ++i)
        for (int j = 0; j < s; ++j) g[i][j] = n + 1 - t.rows()[r - 1 - i][s - 1 - j];
    return Tableau(n, std::move(g));
}

Tableau inverse_promotion(const Tableau& t) { return star_dual(promotion(star_dual(t))); }

Path promotion(const Path& p) {
    std::vector<Tableau> factors;
    factors.reserve(p.size());
    for (const auto& t : p.factors()) factors.push_back(promotion(t));
    return Path(p.n(), std::move(factors));
}

Path inverse_promotion(const Path& p) {
    std::vector<Tableau> factors;
    factors.reserve(p.size());
    for (const auto& t : p.factors()) factors.push_back(inverse_promotion(t));
    return Path(p.n(), std::move(factors));
}

std::optional<Path> affine_e0(const Path& p) {
    auto r = classical_e(promotion(p), 1);
    if (!r) return std::nullopt;
    return inverse_promotion(*r);
}

std::optional<Path> affine_f0(const Path& p) {
    auto r = classical_f(promotion(p), 1);
    if (!r) return std::nullopt;
    return inverse_promotion(*r);
}

Path star_dual(const Path& p) {
    std::vector<Tableau> factors;
    factors.reserve(p.size());
    for (auto it = p.factors().rbegin(); it != p.factors().rend(); ++it)
        factors.push_back(star_dual(*it));
    return Path(p.n(), std::move(factors));
}

Path evacuation(const Path& p) {
    Path b = star_dual(p);
    bool moved = true;
    while (moved) {
        moved = false;
        for (int i = 1; i <= b.n() - 1; ++i) {
            while (auto up = classical_e(b, i)) {
                b = *up;
                moved = true;
            }
        }
    }
    return b;
}

int default_transpose_rank(const Path& p) {
    auto word = p.row_word();
    std::map<int, int> mult;
    for (int v : word) ++mult[v];
    int n_t = 1;
    for (const auto& [v, c] : mult) n_t = std::max(n_t, c);
    for (const auto& t : p.factors()) n_t = std::max(n_t, t.num_cols());
    return n_t;
}

Tableau transpose_tableau(const Tableau& t, int n_t) {
    Path p = transpose_path(Path(t.n(), {t}), n_t);
    return p.factor(0);
}

Path transpose_path(const Path& p, int n_t) {
    if (n_t == 0) n_t = default_transpose_rank(p);
    auto word = p.row_word();
    auto cells = word_cells(p);
    // occurrence index of each letter counting from the right end of the word
    std::map<int, int> seen;
    std::vector<int> relabel(word.size());
    for (int pos = static_cast<int>(word.size()) - 1; pos >= 0; --pos)
        relabel[pos] = ++seen[word[pos]];

    std::vector<std::vector<std::vector<int>>> grids;
    for (const auto& t : p.factors())
        grids.emplace_back(t.num_cols(), std::vector<int>(t.num_rows(), 0));
    for (size_t pos = 0; pos < word.size(); ++pos) {
        const CellRef& c = cells[pos];
        const Tableau& t = p.factor(c.factor);
        int r = t.num_rows(), s = t.num_cols();
        // reflect across the antidiagonal: (i,j) -> (s+1-j, r+1-i), 0-based
        grids[c.factor][s - 1 - c.col][r - 1 - c.row] = relabel[pos];
    }
    std::vector<Tableau> factors;
    factors.reserve(grids.size());
    for (auto& g : grids) factors.push_back(Tableau(n_t, std::move(g)));
    return Path(n_t, std::move(factors));
}

Tableau contragredient_tableau(const Tableau& t) {
    int n = t.n();
    int r = t.num_rows(), s = t.num_cols();
    if (r >= n) throw std::invalid_argument("contragredient: need r < n");
    std::vector<std::vector<int>> g(n - r, std::vector<int>(s));
    for (int j = 0; j < s; ++j) {
        std::vector<bool> used(n + 1, false);
        for (int i = 0; i < r; ++i) used[t.rows()[i][j]] = true;
        std::vector<int> d;
        for (int v = 1; v <= n; ++v)
            if (!used[v]) d.push_back(v);
        // column (n+1-d_{n-r}, ..., n+1-d_1) read top to bottom
        for (int i = 0; i < n - r; ++i) g[i][j] = n + 1 - d[n - r - 1 - i];
    }
    return Tableau(n, std::move(g));
}

Path contragredient_path(const Path& p) {
    std::vector<Tableau> factors;
    factors.reserve(p.size());
    for (const auto& t : p.factors()) factors.push_back(contragredient_tableau(t));
    return Path(p.n(), std::move(factors));
}

}  // namespace xm
