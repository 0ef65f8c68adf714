#include "xm/bijection.hpp"

#include <algorithm>
#include <limits>
#include <stdexcept>

namespace xm {

namespace {

bool is_singular(const RiggedConfiguration& rc, int a, const RcString& s) {
    return s.rig == rc.vacancy(a, s.len);
}

// vacancy of (a, i) for a raw string list under L, bypassing construction
int vacancy_raw(const std::vector<std::vector<RcString>>& nu, const MultiplicityArray& L, int a,
                int i) {
    return RiggedConfiguration(L, nu).vacancy(a, i);
}

}  // namespace

std::pair<RiggedConfiguration, int> delta(const RiggedConfiguration& rc) {
    if (rc.L().count(1, 1) < 1) throw std::invalid_argument("delta: no B^{1,1} factor");
    int n = rc.n();
    std::vector<std::vector<RcString>> nu = rc.nu();

    // select with the original vacancy numbers
    std::vector<int> pos(n, -1);
    int prev = 1;
    int rk = n;
    for (int a = 1; a <= n - 1; ++a) {
        int pick = -1, pick_pos = -1;
        const auto& part = nu[a - 1];
        for (int idx = 0; idx < static_cast<int>(part.size()); ++idx) {
            if (part[idx].len < prev) continue;
            if (!is_singular(rc, a, part[idx])) continue;
            if (pick < 0 || part[idx].len < pick) {
                pick = part[idx].len;
                pick_pos = idx;
            }
        }
        if (pick < 0) {
            rk = a;
            break;
        }
        pos[a] = pick_pos;
        prev = pick;
    }

    MultiplicityArray newL = rc.L();
    newL.add(1, 1, -1);
    // shorten the selected strings, then re-singularize the survivors under
    // the new vacancy numbers; all other labels keep their values
    std::vector<int> fix(n, -1);
    for (int a = 1; a <= n - 1; ++a) {
        if (pos[a] < 0) continue;
        auto& part = nu[a - 1];
        if (part[pos[a]].len == 1) {
            part.erase(part.begin() + pos[a]);
        } else {
            part[pos[a]].len -= 1;
            fix[a] = pos[a];
        }
    }
    for (int a = 1; a <= n - 1; ++a)
        if (fix[a] >= 0) nu[a - 1][fix[a]].rig = vacancy_raw(nu, newL, a, nu[a - 1][fix[a]].len);
    return {RiggedConfiguration(newL, nu), rk};
}

RiggedConfiguration delta_inverse(const RiggedConfiguration& rc, int r) {
    int n = rc.n();
    if (r < 1 || r > n) throw std::invalid_argument("delta_inverse: rank out of range");
    std::vector<std::vector<RcString>> nu = rc.nu();

    // select with the original vacancy numbers, from index r-1 downwards
    std::vector<int> pos(n, -1);
    std::vector<bool> fresh(n, false);
    int upper = std::numeric_limits<int>::max();  // lengthened size of the previous selection
    for (int a = r - 1; a >= 1; --a) {
        int pick = -1, pick_pos = -1;
        const auto& part = nu[a - 1];
        for (int idx = 0; idx < static_cast<int>(part.size()); ++idx) {
            if (part[idx].len >= upper) continue;
            if (!is_singular(rc, a, part[idx])) continue;
            if (part[idx].len > pick) {
                pick = part[idx].len;
                pick_pos = idx;
            }
        }
        if (pick_pos >= 0) {
            pos[a] = pick_pos;
            upper = pick + 1;
        } else {
            fresh[a] = true;  // a new string of length one
            upper = 1;
        }
    }

    MultiplicityArray newL = rc.L();
    newL.add(1, 1, 1);
    std::vector<int> fix(n, -1);
    for (int a = 1; a <= n - 1; ++a) {
        if (fresh[a]) {
            nu[a - 1].push_back({1, 0});
            fix[a] = static_cast<int>(nu[a - 1].size()) - 1;
        } else if (pos[a] >= 0) {
            nu[a - 1][pos[a]].len += 1;
            fix[a] = pos[a];
        }
    }
    for (int a = 1; a <= n - 1; ++a)
        if (fix[a] >= 0) nu[a - 1][fix[a]].rig = vacancy_raw(nu, newL, a, nu[a - 1][fix[a]].len);
    return RiggedConfiguration(newL, nu);
}

RiggedConfiguration rc_left_split(const RiggedConfiguration& rc, int r, int s) {
    if (s < 2) throw std::invalid_argument("rc_left_split: width must be at least 2");
    if (rc.L().count(r, s) < 1) throw std::invalid_argument("rc_left_split: no such factor");
    MultiplicityArray L = rc.L();
    L.add(r, s, -1);
    L.add(r, 1, 1);
    L.add(r, s - 1, 1);
    return RiggedConfiguration(L, rc.nu());
}

RiggedConfiguration rc_left_split_inverse(const RiggedConfiguration& rc, int r, int s) {
    if (s < 2) throw std::invalid_argument("rc_left_split_inverse: width must be at least 2");
    if (rc.L().count(r, 1) < 1 || rc.L().count(r, s - 1) < 1)
        throw std::invalid_argument("rc_left_split_inverse: missing split factors");
    MultiplicityArray L = rc.L();
    L.add(r, 1, -1);
    L.add(r, s - 1, -1);
    L.add(r, s, 1);
    return RiggedConfiguration(L, rc.nu());
}

RiggedConfiguration rc_box_split(const RiggedConfiguration& rc, int r) {
    if (r < 2) throw std::invalid_argument("rc_box_split: height must be at least 2");
    if (rc.L().count(r, 1) < 1) throw std::invalid_argument("rc_box_split: no such factor");
    MultiplicityArray L = rc.L();
    L.add(r, 1, -1);
    L.add(1, 1, 1);
    L.add(r - 1, 1, 1);
    std::vector<std::vector<RcString>> nu = rc.nu();
    for (int a = 1; a <= r - 1; ++a) nu[a - 1].push_back({1, 0});
    for (int a = 1; a <= r - 1; ++a) nu[a - 1].back().rig = vacancy_raw(nu, L, a, 1);
    return RiggedConfiguration(L, nu);
}

RiggedConfiguration rc_box_split_inverse(const RiggedConfiguration& rc, int r) {
    if (r < 2) throw std::invalid_argument("rc_box_split_inverse: height must be at least 2");
    if (rc.L().count(1, 1) < 1 || rc.L().count(r - 1, 1) < 1)
        throw std::invalid_argument("rc_box_split_inverse: missing split factors");
    MultiplicityArray L = rc.L();
    L.add(1, 1, -1);
    L.add(r - 1, 1, -1);
    L.add(r, 1, 1);
    std::vector<std::vector<RcString>> nu = rc.nu();
    for (int a = 1; a <= r - 1; ++a) {
        auto& part = nu[a - 1];
        bool removed = false;
        for (int idx = 0; idx < static_cast<int>(part.size()); ++idx)
            if (part[idx].len == 1 && is_singular(rc, a, part[idx])) {
                part.erase(part.begin() + idx);
                removed = true;
                break;
            }
        if (!removed)
            throw std::invalid_argument("rc_box_split_inverse: singular length-one string missing");
    }
    return RiggedConfiguration(L, nu);
}

RiggedConfiguration phi_bar(const Path& b) {
    int n = b.n();
    if (b.size() == 0) {
        MultiplicityArray L;
        L.n = n;
        return RiggedConfiguration(L, {});
    }
    const Tableau& c = b.factor(0);
    int r = c.num_rows(), s = c.num_cols();
    std::vector<Tableau> rest(b.factors().begin() + 1, b.factors().end());
    if (r == 1 && s == 1) {
        int letter = c.at(1, 1);
        return delta_inverse(phi_bar(Path(n, rest)), letter);
    }
    if (s >= 2) {
        // peel off the leftmost column
        std::vector<std::vector<int>> col(r), body(r);
        for (int i = 1; i <= r; ++i) {
            col[i - 1].push_back(c.at(i, 1));
            for (int j = 2; j <= s; ++j) body[i - 1].push_back(c.at(i, j));
        }
        std::vector<Tableau> factors{Tableau(n, col), Tableau(n, body)};
        factors.insert(factors.end(), rest.begin(), rest.end());
        return rc_left_split_inverse(phi_bar(Path(n, factors)), r, s);
    }
    // single column of height r >= 2: split off its largest entry
    std::vector<std::vector<int>> body(r - 1);
    for (int i = 1; i <= r - 1; ++i) body[i - 1].push_back(c.at(i, 1));
    std::vector<Tableau> factors{Tableau(n, {{c.at(r, 1)}}), Tableau(n, body)};
    factors.insert(factors.end(), rest.begin(), rest.end());
    return rc_box_split_inverse(phi_bar(Path(n, factors)), r);
}

Path phi_bar_inverse(const RiggedConfiguration& rc, const TensorShape& shape) {
    if (shape.n != rc.n()) throw std::invalid_argument("phi_bar_inverse: rank mismatch");
    RiggedConfiguration cur = rc;
    std::vector<Tableau> factors;
    for (auto [r, s] : shape.factors) {
        std::vector<std::vector<int>> cols(s);
        for (int col = 0; col < s; ++col) {
            if (s - col >= 2) cur = rc_left_split(cur, r, s - col);
            std::vector<int> letters;  // emerge largest first
            for (int h = r; h >= 1; --h) {
                if (h >= 2) cur = rc_box_split(cur, h);
                auto [next, letter] = delta(cur);
                cur = next;
                letters.push_back(letter);
            }
            std::reverse(letters.begin(), letters.end());
            cols[col] = std::move(letters);
        }
        std::vector<std::vector<int>> rows(r, std::vector<int>(s));
        for (int i = 0; i < r; ++i)
            for (int j = 0; j < s; ++j) rows[i][j] = cols[j][i];
        factors.push_back(Tableau(shape.n, std::move(rows)));
    }
    for (int a = 1; a <= cur.n() - 1; ++a)
        if (!cur.strings(a).empty())
            throw std::invalid_argument("phi_bar_inverse: leftover strings");
    return Path(shape.n, std::move(factors));
}

RiggedConfiguration phi(const Path& b) {
    int n = b.n();
    Path cur = b;
    std::vector<int> word;  // raising word, in application order
    bool progress = true;
    while (progress) {
        progress = false;
        for (int a = 1; a <= n - 1; ++a)
            while (auto up = classical_e(cur, a)) {
                cur = *up;
                word.push_back(a);
                progress = true;
            }
    }
    RiggedConfiguration rc = phi_bar(cur);
    for (auto it = word.rbegin(); it != word.rend(); ++it) {
        auto down = rc_f(rc, *it);
        if (!down) throw std::logic_error("phi: lowering undefined during transport");
        rc = *down;
    }
    return rc;
}

Path phi_inverse(const RiggedConfiguration& rc, const TensorShape& shape) {
    RiggedConfiguration cur = rc;
    std::vector<int> word;
    bool progress = true;
    while (progress) {
        progress = false;
        for (int a = 1; a <= cur.n() - 1; ++a)
            while (auto up = rc_e(cur, a)) {
                cur = *up;
                word.push_back(a);
                progress = true;
            }
    }
    Path b = phi_bar_inverse(cur, shape);
    for (auto it = word.rbegin(); it != word.rend(); ++it) {
        auto down = classical_f(b, *it);
        if (!down) throw std::logic_error("phi_inverse: lowering undefined during transport");
        b = *down;
    }
    return b;
}

}  // namespace xm
