#include "xm/fermionic.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>
#include <vector>

#include "xm/rigged.hpp"

namespace xm {

namespace {

using BoundVector = std::vector<int>;

// Signed subset multiplicities collapsed per distinct combined bound vector:
// mu(v) = sum over nonempty subsets S with combine(S) = v of (-1)^{|S|+1}.
// combine is the componentwise max (lower bounds) or min (upper bounds).
std::map<BoundVector, long long> signed_multiplicities(const std::vector<BoundVector>& vectors,
                                                       bool use_max, int raw_subset_threshold) {
    std::map<BoundVector, long long> out;
    auto combine = [&](const BoundVector& a, const BoundVector& b) {
        BoundVector c(a.size());
        for (size_t i = 0; i < a.size(); ++i)
            c[i] = use_max ? std::max(a[i], b[i]) : std::min(a[i], b[i]);
        return c;
    };
    int k = static_cast<int>(vectors.size());
    if (k <= raw_subset_threshold && k <= 20) {
        for (unsigned long mask = 1; mask < (1ul << k); ++mask) {
            BoundVector v;
            int size = 0;
            for (int t = 0; t < k; ++t)
                if (mask & (1ul << t)) {
                    v = ++size == 1 ? vectors[t] : combine(v, vectors[t]);
                }
            out[v] += (size % 2 == 1) ? 1 : -1;
        }
    } else {
        for (const BoundVector& vt : vectors) {
            std::map<BoundVector, long long> next = out;
            for (const auto& [v, c] : out) next[combine(v, vt)] -= c;  // subsets gaining vt
            next[vt] += 1;
            out = std::move(next);
        }
    }
    for (auto it = out.begin(); it != out.end();)
        it = it->second == 0 ? out.erase(it) : std::next(it);
    return out;
}

}  // namespace

QLaurent m_bar(const MultiplicityArray& L, const Weight& lambda) {
    if (!lambda.is_partition_shaped())
        throw std::invalid_argument("m_bar: lambda must be a partition");
    QLaurent total;
    for (const RiggedConfiguration& conf : enumerate_configurations(L, lambda)) {
        if (!conf.is_admissible()) continue;
        QLaurent term = QLaurent::q(static_cast<int>(conf.cocharge_config()));
        for (int a = 1; a <= conf.n() - 1; ++a)
            for (int i = 1; i <= conf.largest_part(a); ++i)
                if (int m = conf.m(a, i); m > 0) term *= qbinomial(conf.vacancy(a, i), m);
        total += term;
    }
    return total;
}

QLaurent m_unrestricted(const MultiplicityArray& L, const Weight& lambda,
                        int raw_subset_threshold) {
    int n = lambda.n();
    std::vector<int> sizes = configuration_sizes(L, lambda);
    int imax = 1;
    for (int s : sizes) imax = std::max(imax, s);

    std::vector<BoundVector> vectors;
    for (const BoundTableau& t : enumerate_lower_bound_tableaux(lambda)) {
        BoundVector v;
        v.reserve(static_cast<size_t>(n - 1) * imax);
        for (int a = 1; a <= n - 1; ++a)
            for (int i = 1; i <= imax; ++i) v.push_back(lower_bound_value(t, lambda, a, i));
        vectors.push_back(std::move(v));
    }
    auto mult = signed_multiplicities(vectors, /*use_max=*/true, raw_subset_threshold);

    QLaurent total;
    for (const RiggedConfiguration& conf : enumerate_configurations(L, lambda)) {
        QLaurent cc = QLaurent::q(static_cast<int>(conf.cocharge_config()));
        for (const auto& [v, c] : mult) {
            QLaurent term = cc * QLaurent(Int(c));
            for (int a = 1; a <= n - 1 && !term.is_zero(); ++a)
                for (int i = 1; i <= conf.largest_part(a); ++i)
                    if (int m = conf.m(a, i); m > 0)
                        term *= quasipartition_gf(v[(a - 1) * imax + (i - 1)],
                                                  conf.vacancy(a, i), m);
            total += term;
        }
    }
    return total;
}

QLaurent m_level(const MultiplicityArray& L, const Weight& lambda, int level,
                 int raw_subset_threshold) {
    int n = lambda.n();
    if (!lambda.is_partition_shaped())
        throw std::invalid_argument("m_level: lambda must be a partition");
    int lam_n = lambda.entry(n);
    if (lambda.entry(1) - lam_n > level)
        throw std::invalid_argument("m_level: lambda not restricted of this level");
    for (const auto& [key, c] : L.counts)
        if (c > 0 && key.second > level)
            throw std::invalid_argument("m_level: L not restricted of this level");
    int ltil = level - (lambda.entry(1) - lam_n);

    // per-tableau shifts of the vacancy numbers at (k, i), k = 1..n-1,
    // i = 1..level-1 (the shifted vacancy number is zero at i = level)
    int width = std::max(level - 1, 0);
    std::vector<BoundVector> vectors;
    for (const BoundTableau& t : enumerate_level_cst(lambda, level)) {
        BoundVector v;
        v.reserve(static_cast<size_t>(n - 1) * width);
        for (int k = 1; k <= n - 1; ++k)
            for (int i = 1; i <= width; ++i) {
                int d = 0;
                for (int j = 1; j <= lambda.entry(k) - lam_n; ++j)
                    if (i >= ltil + t.entry(j, k)) --d;
                if (k + 1 <= n - 1)
                    for (int j = 1; j <= lambda.entry(k + 1) - lam_n; ++j)
                        if (i >= ltil + t.entry(j, k + 1)) ++d;
                v.push_back(d);
            }
        vectors.push_back(std::move(v));
    }
    auto mult = signed_multiplicities(vectors, /*use_max=*/false, raw_subset_threshold);

    QLaurent total;
    for (const RiggedConfiguration& conf : enumerate_configurations(L, lambda)) {
        if (!conf.is_admissible()) continue;
        bool bounded = true;
        for (int k = 1; k <= n - 1; ++k)
            if (conf.largest_part(k) > level) bounded = false;
        if (!bounded) continue;
        QLaurent cc = QLaurent::q(static_cast<int>(conf.cocharge_config()));
        for (const auto& [v, c] : mult) {
            QLaurent term = cc * QLaurent(Int(c));
            // factors at m = 0 enforce nonnegative shifted vacancy numbers
            for (int k = 1; k <= n - 1 && !term.is_zero(); ++k)
                for (int i = 1; i <= width && !term.is_zero(); ++i) {
                    int m = conf.m(k, i);
                    term *= qbinomial(conf.vacancy(k, i) + v[(k - 1) * width + (i - 1)], m);
                }
            total += term;
        }
    }
    return total;
}

Int bethe_count(int sites, int down) {
    if (sites < 0 || down < 0) throw std::invalid_argument("bethe_count: negative argument");
    auto binomial = [](long long top, long long bottom) -> Int {
        if (bottom < 0 || top < bottom) return 0;
        Int r = 1;
        for (long long i = 1; i <= bottom; ++i) r = r * (top - bottom + i) / i;
        return r;
    };
    Int total = 0;
    for (const Partition& mu : partitions_of(down, down)) {
        Int prod = 1;
        const std::vector<int>& parts = mu.parts();
        for (size_t idx = 0; idx < parts.size() && prod != 0;) {
            size_t jdx = idx;
            while (jdx < parts.size() && parts[jdx] == parts[idx]) ++jdx;
            int len = parts[idx];
            int m = static_cast<int>(jdx - idx);
            long long p = sites;
            for (int other : parts) p -= 2 * std::min(len, other);
            prod *= binomial(p + m, m);
            idx = jdx;
        }
        total += prod;
    }
    return total;
}

}  // namespace xm
