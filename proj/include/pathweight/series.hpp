#pragma once

#include <algorithm>
#include <cassert>
#include <ostream>
#include <string>
#include <utility>
#include <vector>

#include "errors.hpp"
#include "rational.hpp"

namespace pathweight {

/// Dense formal power series truncated at an explicit order N, i.e. a value
/// modulo x^(N+1). Coefficients are exact rationals; instances are immutable
/// after construction. Binary operations on mismatched orders truncate to the
/// minimum and carry that effective order in the result.
class TruncatedSeries {
public:
    explicit TruncatedSeries(int order) : coeffs_(static_cast<std::size_t>(order) + 1) {
        assert(order >= 0);
    }
    explicit TruncatedSeries(std::vector<BigRational> coeffs) : coeffs_(std::move(coeffs)) {
        assert(!coeffs_.empty());
    }

    static TruncatedSeries constant(const BigRational& c, int order) {
        TruncatedSeries s(order);
        s.coeffs_[0] = c;
        return s;
    }
    static TruncatedSeries one(int order) { return constant(1, order); }
    static TruncatedSeries identity(int order) { return monomial(1, 1, order); }
    static TruncatedSeries monomial(const BigRational& c, int exponent, int order) {
        TruncatedSeries s(order);
        if (exponent <= order) s.coeffs_[static_cast<std::size_t>(exponent)] = c;
        return s;
    }

    int order() const { return static_cast<int>(coeffs_.size()) - 1; }
    const BigRational& operator[](int i) const { return coeffs_[static_cast<std::size_t>(i)]; }
    const std::vector<BigRational>& coeffs() const { return coeffs_; }

    bool is_zero() const {
        return std::all_of(coeffs_.begin(), coeffs_.end(),
                           [](const BigRational& c) { return c.is_zero(); });
    }

    /// Index of the first nonzero coefficient; order()+1 for the zero series.
    int valuation() const {
        for (int i = 0; i <= order(); ++i)
            if (!coeffs_[static_cast<std::size_t>(i)].is_zero()) return i;
        return order() + 1;
    }

    TruncatedSeries truncated(int new_order) const {
        assert(new_order >= 0 && new_order <= order());
        std::vector<BigRational> c(coeffs_.begin(), coeffs_.begin() + new_order + 1);
        return TruncatedSeries(std::move(c));
    }

    friend bool operator==(const TruncatedSeries& a, const TruncatedSeries& b) {
        return a.coeffs_ == b.coeffs_;
    }

    std::string to_string() const {
        std::string s;
        bool any = false;
        for (int i = 0; i <= order(); ++i) {
            const BigRational& c = coeffs_[static_cast<std::size_t>(i)];
            if (c.is_zero()) continue;
            if (any) s += " + ";
            s += c.to_string();
            if (i >= 1) s += "*x^" + std::to_string(i);
            any = true;
        }
        if (!any) s = "0";
        s += " + O(x^" + std::to_string(order() + 1) + ")";
        return s;
    }

    friend std::ostream& operator<<(std::ostream& os, const TruncatedSeries& s) {
        return os << s.to_string();
    }

private:
    std::vector<BigRational> coeffs_;
};

inline TruncatedSeries add(const TruncatedSeries& a, const TruncatedSeries& b) {
    int n = std::min(a.order(), b.order());
    std::vector<BigRational> c(static_cast<std::size_t>(n) + 1);
    for (int i = 0; i <= n; ++i) c[static_cast<std::size_t>(i)] = a[i] + b[i];
    return TruncatedSeries(std::move(c));
}

inline TruncatedSeries sub(const TruncatedSeries& a, const TruncatedSeries& b) {
    int n = std::min(a.order(), b.order());
    std::vector<BigRational> c(static_cast<std::size_t>(n) + 1);
    for (int i = 0; i <= n; ++i) c[static_cast<std::size_t>(i)] = a[i] - b[i];
    return TruncatedSeries(std::move(c));
}

/// Cauchy product truncated to the minimum of the two orders.
inline TruncatedSeries mul(const TruncatedSeries& a, const TruncatedSeries& b) {
    int n = std::min(a.order(), b.order());
    std::vector<BigRational> c(static_cast<std::size_t>(n) + 1);
    for (int i = 0; i <= n; ++i) {
        if (a[i].is_zero()) continue;
        for (int j = 0; i + j <= n; ++j) {
            if (b[j].is_zero()) continue;
            c[static_cast<std::size_t>(i + j)] += a[i] * b[j];
        }
    }
    return TruncatedSeries(std::move(c));
}

inline TruncatedSeries scale(const TruncatedSeries& a, const BigRational& s) {
    std::vector<BigRational> c(a.coeffs());
    for (auto& x : c) x *= s;
    return TruncatedSeries(std::move(c));
}

inline TruncatedSeries operator+(const TruncatedSeries& a, const TruncatedSeries& b) { return add(a, b); }
inline TruncatedSeries operator-(const TruncatedSeries& a, const TruncatedSeries& b) { return sub(a, b); }
inline TruncatedSeries operator*(const TruncatedSeries& a, const TruncatedSeries& b) { return mul(a, b); }

/// Multiplicative inverse: requires a nonzero constant term.
inline TruncatedSeries reciprocal(const TruncatedSeries& a) {
    if (a[0].is_zero()) throw ZeroConstantTerm("reciprocal: constant term is zero");
    int n = a.order();
    std::vector<BigRational> c(static_cast<std::size_t>(n) + 1);
    BigRational inv0 = BigRational(1) / a[0];
    c[0] = inv0;
    for (int i = 1; i <= n; ++i) {
        BigRational acc;
        for (int j = 1; j <= i; ++j) {
            if (a[j].is_zero()) continue;
            acc += a[j] * c[static_cast<std::size_t>(i - j)];
        }
        c[static_cast<std::size_t>(i)] = -(acc * inv0);
    }
    return TruncatedSeries(std::move(c));
}

/// Substitution outer(inner); the inner series must have zero constant term.
/// Horner evaluation from the top coefficient down, at the common order.
inline TruncatedSeries compose(const TruncatedSeries& outer, const TruncatedSeries& inner) {
    if (!inner[0].is_zero())
        throw NonzeroInnerConstant("compose: inner series has nonzero constant term");
    int n = std::min(outer.order(), inner.order());
    TruncatedSeries in = inner.order() == n ? inner : inner.truncated(n);
    TruncatedSeries r = TruncatedSeries::constant(outer[outer.order()], n);
    for (int i = outer.order() - 1; i >= 0; --i) {
        r = mul(r, in);
        r = add(r, TruncatedSeries::constant(outer[i], n));
    }
    return r;
}

/// a^e for a non-negative integer exponent, by repeated squaring.
inline TruncatedSeries int_pow(const TruncatedSeries& a, unsigned long long e) {
    TruncatedSeries r = TruncatedSeries::one(a.order());
    TruncatedSeries base = a;
    while (e > 0) {
        if (e & 1ULL) r = mul(r, base);
        e >>= 1ULL;
        if (e > 0) base = mul(base, base);
    }
    return r;
}

/// Generalised binomial coefficient: alpha*(alpha-1)*...*(alpha-j+1) / j!.
inline BigRational gen_binom(const BigRational& alpha, unsigned long long j) {
    BigRational num = 1;
    BigRational term = alpha;
    BigInt fact = 1;
    for (unsigned long long i = 0; i < j; ++i) {
        num *= term;
        term -= 1;
        fact *= static_cast<unsigned long long>(i + 1);
    }
    return num / BigRational(fact);
}

/// a^e for a rational exponent, via the binomial series in u = a - 1.
/// Requires constant term exactly 1.
inline TruncatedSeries rational_pow(const TruncatedSeries& a, const BigRational& e) {
    if (!a[0].is_one()) throw ConstantTermNotOne("rational_pow: constant term is not 1");
    int n = a.order();
    TruncatedSeries u = sub(a, TruncatedSeries::one(n));
    TruncatedSeries r = TruncatedSeries::one(n);
    TruncatedSeries upow = TruncatedSeries::one(n);
    for (int j = 1; j <= n; ++j) {
        upow = mul(upow, u);
        if (upow.is_zero()) break;  // valuation exceeded the order
        r = add(r, scale(upow, gen_binom(e, static_cast<unsigned long long>(j))));
    }
    return r;
}

/// Termwise formal derivative; the order drops by one (a constant input of
/// order 0 yields the zero series of order 0).
inline TruncatedSeries derivative(const TruncatedSeries& a) {
    int n = std::max(a.order() - 1, 0);
    std::vector<BigRational> c(static_cast<std::size_t>(n) + 1);
    for (int i = 1; i <= a.order(); ++i)
        c[static_cast<std::size_t>(i - 1)] = a[i] * BigRational(i);
    return TruncatedSeries(std::move(c));
}

/// [x^n] of the unique P with P = x*phi(P), by Lagrange inversion:
/// [x^n]P = (1/n) [x^(n-1)] phi(x)^n.
inline BigRational lagrange_coeff(const TruncatedSeries& phi, int n) {
    assert(n >= 1);
    if (phi[0].is_zero()) throw ZeroConstantTerm("lagrange_coeff: phi(0) must be nonzero");
    if (phi.order() < n - 1)
        throw InsufficientOrder("lagrange_coeff: phi known only to order " +
                                std::to_string(phi.order()) + ", need " + std::to_string(n - 1));
    TruncatedSeries base = phi.order() == n - 1 ? phi : phi.truncated(n - 1);
    TruncatedSeries p = int_pow(base, static_cast<unsigned long long>(n));
    return p[n - 1] / BigRational(n);
}

/// [x^n] psi(P(x)) for the same P, via (1/n) [x^(n-1)] psi'(x) phi(x)^n.
/// psi is taken as exact: coefficients beyond its stored order are zero.
inline BigRational lagrange_psi(const TruncatedSeries& phi, const TruncatedSeries& psi, int n) {
    assert(n >= 1);
    if (phi[0].is_zero()) throw ZeroConstantTerm("lagrange_psi: phi(0) must be nonzero");
    if (phi.order() < n - 1)
        throw InsufficientOrder("lagrange_psi: phi known only to order " +
                                std::to_string(phi.order()) + ", need " + std::to_string(n - 1));
    std::vector<BigRational> dp(static_cast<std::size_t>(n - 1) + 1);
    for (int i = 1; i <= psi.order() && i - 1 <= n - 1; ++i)
        dp[static_cast<std::size_t>(i - 1)] = psi[i] * BigRational(i);
    TruncatedSeries dpsi(std::move(dp));
    TruncatedSeries base = phi.order() == n - 1 ? phi : phi.truncated(n - 1);
    TruncatedSeries p = mul(dpsi, int_pow(base, static_cast<unsigned long long>(n)));
    return p[n - 1] / BigRational(n);
}

}  // namespace pathweight
