#include "xm/qlaurent.hpp"

#include <functional>
#include <map>
#include <mutex>
#include <sstream>
#include <stdexcept>
#include <utility>

namespace xm {

QLaurent::QLaurent(Int constant) {
    if (constant != 0) terms_[0] = std::move(constant);
}

QLaurent::QLaurent(Int coef, int exp) {
    if (coef != 0) terms_[exp] = std::move(coef);
}

Int QLaurent::coefficient(int exp) const {
    auto it = terms_.find(exp);
    return it == terms_.end() ? Int(0) : it->second;
}

int QLaurent::min_exponent() const {
    if (terms_.empty()) throw std::domain_error("min_exponent of zero polynomial");
    return terms_.begin()->first;
}

int QLaurent::max_exponent() const {
    if (terms_.empty()) throw std::domain_error("max_exponent of zero polynomial");
    return terms_.rbegin()->first;
}

Int QLaurent::eval_at_one() const {
    Int total = 0;
    for (const auto& [e, c] : terms_) total += c;
    return total;
}

void QLaurent::set(int exp, Int coef) {
    if (coef == 0)
        terms_.erase(exp);
    else
        terms_[exp] = std::move(coef);
}

QLaurent& QLaurent::operator+=(const QLaurent& other) {
    for (const auto& [e, c] : other.terms_) set(e, coefficient(e) + c);
    return *this;
}

QLaurent& QLaurent::operator-=(const QLaurent& other) {
    for (const auto& [e, c] : other.terms_) set(e, coefficient(e) - c);
    return *this;
}

QLaurent QLaurent::operator+(const QLaurent& other) const {
    QLaurent r = *this;
    r += other;
    return r;
}

QLaurent QLaurent::operator-(const QLaurent& other) const {
    QLaurent r = *this;
    r -= other;
    return r;
}

QLaurent QLaurent::operator-() const {
    QLaurent r;
    for (const auto& [e, c] : terms_) r.terms_[e] = -c;
    return r;
}

QLaurent QLaurent::operator*(const QLaurent& other) const {
    QLaurent r;
    for (const auto& [e1, c1] : terms_)
        for (const auto& [e2, c2] : other.terms_) r.set(e1 + e2, r.coefficient(e1 + e2) + c1 * c2);
    return r;
}

QLaurent& QLaurent::operator*=(const QLaurent& other) {
    *this = *this * other;
    return *this;
}

QLaurent QLaurent::shifted(int k) const {
    QLaurent r;
    for (const auto& [e, c] : terms_) r.terms_[e + k] = c;
    return r;
}

QLaurent QLaurent::reciprocal() const {
    QLaurent r;
    for (const auto& [e, c] : terms_) r.terms_[-e] = c;
    return r;
}

std::string QLaurent::str() const {
    if (terms_.empty()) return "0";
    std::ostringstream out;
    bool first = true;
    for (const auto& [e, c] : terms_) {
        Int mag = c < 0 ? Int(-c) : c;
        if (first) {
            if (c < 0) out << "-";
            first = false;
        } else {
            out << (c < 0 ? " - " : " + ");
        }
        if (e == 0) {
            out << mag;
        } else {
            if (mag != 1) out << mag << "*";
            out << "q";
            if (e != 1) out << "^" << e;
        }
    }
    return out.str();
}

QLaurent qbinomial(long p, long m) {
    if (p < 0 || m < 0) return QLaurent::zero();
    if (m > p) std::swap(p, m);  // symmetry keeps the cache small
    static std::map<std::pair<long, long>, QLaurent> cache;
    static std::mutex cache_mutex;
    std::lock_guard<std::mutex> lock(cache_mutex);
    auto it = cache.find({p, m});
    if (it != cache.end()) return it->second;

    QLaurent result;
    if (m == 0) {
        result = QLaurent::one();
    } else {
        // Partitions in a p x m box, by largest part j in [0, p]:
        // qbin(p, m) = sum_j q^j * qbin(j, m-1) would recurse deep; use the
        // Pascal form qbin(p, m) = qbin(p-1, m) + q^p * qbin(p, m-1).
        std::function<QLaurent(long, long)> rec = [&](long pp, long mm) -> QLaurent {
            if (pp < 0 || mm < 0) return QLaurent::zero();
            if (pp == 0 || mm == 0) return QLaurent::one();
            if (mm > pp) std::swap(pp, mm);
            auto hit = cache.find({pp, mm});
            if (hit != cache.end()) return hit->second;
            QLaurent r = rec(pp - 1, mm) + rec(pp, mm - 1).shifted(static_cast<int>(pp));
            cache[{pp, mm}] = r;
            return r;
        };
        result = rec(p, m);
    }
    cache[{p, m}] = result;
    return result;
}

QLaurent quasipartition_gf(long M, long p, long m) {
    if (m < 0) throw std::invalid_argument("quasipartition_gf: m must be nonnegative");
    return qbinomial(p - M, m).shifted(static_cast<int>(m * M));
}

}  // namespace xm
