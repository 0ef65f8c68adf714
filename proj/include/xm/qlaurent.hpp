#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <map>
#include <string>

namespace xm {

using Int = boost::multiprecision::cpp_int;

// Laurent polynomial in q with arbitrary-precision integer coefficients.
// Stored sparsely; zero coefficients are never kept, so structural equality
// is semantic equality. Exponents may be negative.
class QLaurent {
public:
    QLaurent() = default;
    explicit QLaurent(Int constant);
    QLaurent(Int coef, int exp);

    static QLaurent zero() { return QLaurent(); }
    static QLaurent one() { return QLaurent(Int(1)); }
    static QLaurent q(int exp = 1) { return QLaurent(Int(1), exp); }

    bool is_zero() const { return terms_.empty(); }
    const std::map<int, Int>& terms() const { return terms_; }

    Int coefficient(int exp) const;
    int min_exponent() const;  // throws on zero polynomial
    int max_exponent() const;  // throws on zero polynomial
    Int eval_at_one() const;

    QLaurent& operator+=(const QLaurent& other);
    QLaurent& operator-=(const QLaurent& other);
    QLaurent operator+(const QLaurent& other) const;
    QLaurent operator-(const QLaurent& other) const;
    QLaurent operator-() const;
    QLaurent operator*(const QLaurent& other) const;
    QLaurent& operator*=(const QLaurent& other);

    // Multiply by q^k.
    QLaurent shifted(int k) const;
    // Substitute q -> q^{-1}.
    QLaurent reciprocal() const;

    bool operator==(const QLaurent& other) const { return terms_ == other.terms_; }
    bool operator!=(const QLaurent& other) const { return !(*this == other); }

    // Canonical text form in ascending exponent order, e.g. "2 + 4*q + q^2".
    std::string str() const;

private:
    void set(int exp, Int coef);
    std::map<int, Int> terms_;
};

// Gaussian binomial: generating function of partitions in a p x m box.
// Zero polynomial unless p, m >= 0.
QLaurent qbinomial(long p, long m);

// Generating function of (M,p,m)-quasipartitions (weakly decreasing m-tuples
// with parts in [M, p]) graded by part sum: q^{mM} * qbinomial(p-M, m).
// Requires m >= 0.
QLaurent quasipartition_gf(long M, long p, long m);

}  // namespace xm
