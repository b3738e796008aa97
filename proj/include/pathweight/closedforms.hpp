#pragma once

#include <optional>
#include <string>
#include <vector>

#include "errors.hpp"
#include "series.hpp"
#include "weights.hpp"

namespace pathweight {

/// Tags naming each implemented enumeration formula.
enum class FormulaId {
    general_a1,
    general_a2,
    catalan_master,
    catalan_count,
    catalan_linear,
    catalan_affine,
    catalan_skip_first_m1,
    catalan_affine_m1_reduced,
    catalan_skip_first_k1,
    catalan_skip_last_k1,
    schroeder_master,
    schroeder_count,
    schroeder_product,
    schroeder_affine1,
    schroeder_affine2,
    motzkin_odd_master,
    motzkin_odd_count,
    motzkin_odd_affine,
    motzkin_even_mu,
    motzkin_even_count,
};

inline const char* formula_name(FormulaId id) {
    switch (id) {
        case FormulaId::general_a1: return "general-a1";
        case FormulaId::general_a2: return "general-a2";
        case FormulaId::catalan_master: return "catalan-master";
        case FormulaId::catalan_count: return "catalan-count";
        case FormulaId::catalan_linear: return "catalan-linear";
        case FormulaId::catalan_affine: return "catalan-affine";
        case FormulaId::catalan_skip_first_m1: return "catalan-skip-first-m1";
        case FormulaId::catalan_affine_m1_reduced: return "catalan-affine-m1-reduced";
        case FormulaId::catalan_skip_first_k1: return "catalan-skip-first-k1";
        case FormulaId::catalan_skip_last_k1: return "catalan-skip-last-k1";
        case FormulaId::schroeder_master: return "schroeder-master";
        case FormulaId::schroeder_count: return "schroeder-count";
        case FormulaId::schroeder_product: return "schroeder-product";
        case FormulaId::schroeder_affine1: return "schroeder-affine1";
        case FormulaId::schroeder_affine2: return "schroeder-affine2";
        case FormulaId::motzkin_odd_master: return "motzkin-odd-master";
        case FormulaId::motzkin_odd_count: return "motzkin-odd-count";
        case FormulaId::motzkin_odd_affine: return "motzkin-odd-affine";
        case FormulaId::motzkin_even_mu: return "motzkin-even-mu";
        case FormulaId::motzkin_even_count: return "motzkin-even-count";
    }
    return "?";
}

/// Binomial coefficient with a (possibly negative or non-integral) rational
/// top. Integer and half-integer tops share this one exact path.
inline BigRational binom(const BigRational& top, long long j) {
    if (j < 0) return 0;
    return gen_binom(top, static_cast<unsigned long long>(j));
}
inline BigRational binom(long long top, long long j) { return binom(BigRational(top), j); }

// ---------------------------------------------------------------------------
// General step systems
// ---------------------------------------------------------------------------

/// Single up-step (1,s), level steps all of horizontal size 1 with the given
/// vertical sizes, down step (1,-1):
///   p_n = sum_i 1/(n-i+1) [x^i]F^(n-i+1) [x^(n-(s+1)i)] (1 + sum_h x^(h+1))^(n-i+1).
inline BigRational general_A1(int s, const std::vector<int>& v_heights,
                              const TruncatedSeries& F, int n) {
    int i_max = n / (s + 1);
    if (F.order() < i_max)
        throw InsufficientOrder("general_A1: F needs order >= " + std::to_string(i_max));
    int max_h = 0;
    for (int h : v_heights) max_h = std::max(max_h, h + 1);
    TruncatedSeries q = [&] {
        std::vector<BigRational> c(static_cast<std::size_t>(std::max(n, max_h)) + 1);
        c[0] = 1;
        for (int h : v_heights) c[static_cast<std::size_t>(h + 1)] += 1;
        return TruncatedSeries(std::move(c));
    }();
    BigRational total;
    for (int i = 0; i <= i_max; ++i) {
        int m = n - i + 1;
        int b = n - (s + 1) * i;
        TruncatedSeries fp = int_pow(F.truncated(std::min(F.order(), n)),
                                     static_cast<unsigned long long>(m));
        TruncatedSeries qp = int_pow(q, static_cast<unsigned long long>(m));
        if (i > fp.order() || b > qp.order()) continue;
        total += fp[i] * qp[b] / BigRational(m);
    }
    return total;
}

/// Single up-step (r1,s1), single level step (r2,s2), down step (w,-1):
/// sums over the Diophantine solutions of (w*s1+r1)i + (w*s2+r2)j = n.
inline BigRational general_A2(int r1, int s1, int r2, int s2, int w,
                              const TruncatedSeries& F, int n) {
    long long du = static_cast<long long>(w) * s1 + r1;
    long long dv = static_cast<long long>(w) * s2 + r2;
    BigRational total;
    for (long long i = 0; i * du <= n; ++i) {
        long long rem = n - i * du;
        if (rem % dv != 0) continue;
        long long j = rem / dv;
        long long m = s1 * i + static_cast<long long>(s2 + 1) * j + 1;
        if (F.order() < i)
            throw InsufficientOrder("general_A2: F needs order >= " + std::to_string(i));
        TruncatedSeries fp = int_pow(F.truncated(static_cast<int>(std::min<long long>(F.order(), n))),
                                     static_cast<unsigned long long>(m));
        total += fp[static_cast<int>(i)] * binom(m, j) / BigRational(m);
    }
    return total;
}

// ---------------------------------------------------------------------------
// Catalan paths
// ---------------------------------------------------------------------------

/// Generic coefficient-extraction route: (1/(kn+1)) [x^n] F(x)^(kn+1).
inline BigRational catalan_closed_series(int k, int n, const WeightSpec& w) {
    long long m = static_cast<long long>(k) * n + 1;
    TruncatedSeries F = weight_series(w, n);
    TruncatedSeries p = int_pow(F, static_cast<unsigned long long>(m));
    return p[n] / BigRational(m);
}

/// Weighted k-Catalan enumeration. Ones, linear and affine weights take the
/// explicit binomial sums; everything else goes through the series route.
inline BigRational catalan_closed(int k, int n, const WeightSpec& w) {
    if (n == 0) return 1;
    long long kn1 = static_cast<long long>(k) * n + 1;
    switch (w.kind()) {
        case WeightSpec::Kind::ones:
            return binom((k + 1LL) * n, n) / BigRational(kn1);
        case WeightSpec::Kind::linear: {
            BigRational total;
            BigRational mpow = 1;
            for (long long i = 1; i <= n; ++i) {
                mpow *= w.m();
                total += binom(kn1, i) * binom(n + i - 1, n - i) * mpow;
            }
            return total / BigRational(kn1);
        }
        case WeightSpec::Kind::affine_one:
        case WeightSpec::Kind::affine_two: {
            BigRational mm = w.kind() == WeightSpec::Kind::affine_two ? BigRational(2) : w.m();
            BigRational total;
            BigRational mpow = 1;
            for (long long i = 0; i <= n; ++i) {
                total += binom(kn1, i) * binom((2LL * k + 1) * n - i + 1, n - i) * mpow;
                mpow *= mm - BigRational(1);
            }
            return total / BigRational(kn1);
        }
        case WeightSpec::Kind::factorial:
        case WeightSpec::Kind::table:
            return catalan_closed_series(k, n, w);
    }
    return catalan_closed_series(k, n, w);
}

/// Skip-first product with weight 1+m*l. A closed form is known only for
/// m = 1 (any k) and for k = 1 (any m); everything else is brute-force
/// territory.
inline BigRational catalan_skip_first(int k, int n, const BigRational& m) {
    if (k > 1 && !m.is_one())
        throw UnsupportedCombination("catalan_skip_first: no formula for k > 1 with m != 1");
    if (n == 0) return 1;
    if (m.is_one()) {
        long long d = 2LL * k * n + 1;
        return binom((2LL * k + 1) * n, n) / BigRational(d);
    }
    // k = 1: (1/n) sum_i C(n,i) C(3n-i, 2n+1) (m-1)^i
    BigRational total;
    BigRational mpow = 1;
    for (long long i = 0; i <= n - 1; ++i) {
        total += binom(static_cast<long long>(n), i) * binom(3LL * n - i, 2LL * n + 1) * mpow;
        mpow *= m - BigRational(1);
    }
    return total / BigRational(n);
}

/// Reduced form of the affine m=1 product: (1/(kn+1)) C((2k+1)n+1, n).
inline BigRational catalan_affine_m1_reduced(int k, int n) {
    return binom((2LL * k + 1) * n + 1, n) / BigRational(static_cast<long long>(k) * n + 1);
}

/// Skip-last product over ordinary Dyck paths with weight 1+l:
///   C(3n+1,n)/(n+1) - sum_i C(3n-3i+1, n-i) / (2^(i+1) (n-i+1)).
inline BigRational catalan_skip_last_k1(int n) {
    BigRational total = binom(3LL * n + 1, n) / BigRational(n + 1LL);
    BigRational pow2 = 2;
    for (long long i = 0; i <= n - 1; ++i) {
        total -= binom(3LL * (n - i) + 1, n - i) / (pow2 * BigRational(n - i + 1));
        pow2 *= 2;
    }
    return total;
}

// ---------------------------------------------------------------------------
// Schroeder paths
// ---------------------------------------------------------------------------

/// Generic route: (1/(kn+1)) [x^n] (1+x)^(kn+1) F(x)^(kn+1).
inline BigRational schroeder_closed_series(int k, int n, const WeightSpec& w) {
    long long m = static_cast<long long>(k) * n + 1;
    TruncatedSeries F = weight_series(w, n);
    TruncatedSeries onex = add(TruncatedSeries::one(n), TruncatedSeries::identity(n));
    TruncatedSeries p = int_pow(mul(onex, F), static_cast<unsigned long long>(m));
    return p[n] / BigRational(m);
}

/// Weighted k-Schroeder enumeration with the explicit binomial sums for the
/// four notable weights.
inline BigRational schroeder_closed(int k, int n, const WeightSpec& w) {
    if (n == 0) return 1;
    long long kn1 = static_cast<long long>(k) * n + 1;
    switch (w.kind()) {
        case WeightSpec::Kind::ones: {
            BigRational total;
            for (long long i = 0; i <= n; ++i)
                total += binom(kn1, n - i) * binom(static_cast<long long>(k) * n + i, i);
            return total / BigRational(kn1);
        }
        case WeightSpec::Kind::linear: {
            if (!w.m().is_one()) return schroeder_closed_series(k, n, w);
            BigRational total;
            for (long long i = 0; 3 * i <= n; ++i)
                total += binom(kn1, i) * binom((2LL * k + 1) * n - 3 * i + 1, n - 3 * i);
            return total / BigRational(kn1);
        }
        case WeightSpec::Kind::affine_one: {
            if (!w.m().is_one()) return schroeder_closed_series(k, n, w);
            BigRational total;
            for (long long i = 0; i <= n; ++i)
                total += binom(kn1, i) * binom((2LL * k + 1) * n - i + 1, n - i);
            return total / BigRational(kn1);
        }
        case WeightSpec::Kind::affine_two: {
            BigRational total;
            for (long long i = 0; i <= n; ++i)
                total += binom(2LL * k * n + 2, i) * binom((2LL * k + 1) * n - i + 1, n - i);
            return total / BigRational(kn1);
        }
        case WeightSpec::Kind::factorial:
        case WeightSpec::Kind::table:
            return schroeder_closed_series(k, n, w);
    }
    return schroeder_closed_series(k, n, w);
}

// ---------------------------------------------------------------------------
// Motzkin paths, odd k
// ---------------------------------------------------------------------------

/// Generic route:
///   sum_i 1/(h*n-i+1) C(h*n-i+1, n-2i) [x^i] F^(h*n-i+1),  h = (k+1)/2.
inline BigRational motzkin_odd_closed_series(int k, int n, const WeightSpec& w) {
    if (k % 2 == 0) throw EvenK("motzkin_odd_closed: k must be odd");
    long long h = (k + 1) / 2;
    TruncatedSeries F = weight_series(w, std::max(n / 2, 0));
    BigRational total;
    for (long long i = 0; 2 * i <= n; ++i) {
        long long m = h * n - i + 1;
        TruncatedSeries fp = int_pow(F, static_cast<unsigned long long>(m));
        total += binom(m, n - 2 * i) * fp[static_cast<int>(i)] / BigRational(m);
    }
    return total;
}

/// Weighted odd-k Motzkin enumeration; ones and affine(1) have explicit
/// binomial sums, other weights take the series route.
inline BigRational motzkin_odd_closed(int k, int n, const WeightSpec& w) {
    if (k % 2 == 0) throw EvenK("motzkin_odd_closed: k must be odd");
    if (n == 0) return 1;
    long long h = (k + 1) / 2;
    if (w.kind() == WeightSpec::Kind::ones) {
        BigRational total;
        for (long long i = 0; 2 * i <= n; ++i) {
            long long m = h * n - i + 1;
            total += binom(m, n - 2 * i) * binom(h * n, i) / BigRational(m);
        }
        return total;
    }
    if (w.kind() == WeightSpec::Kind::affine_one && w.m().is_one()) {
        BigRational total;
        for (long long i = 0; 2 * i <= n; ++i) {
            long long m = h * n - i + 1;
            total += binom(m, n - 2 * i) * binom((k + 1LL) * n - i + 1, i) / BigRational(m);
        }
        return total;
    }
    return motzkin_odd_closed_series(k, n, w);
}

// ---------------------------------------------------------------------------
// Motzkin paths, even k
// ---------------------------------------------------------------------------

/// mu_n = (1/((k+1)n+1)) sum_i C(((k+1)n+1)/2, n-i) C(n-i, i); generally a
/// non-integer rational (half-integer binomial tops).
inline BigRational motzkin_even_mu(int k, int n) {
    if (k % 2 != 0) throw OddK("motzkin_even_mu: k must be even");
    long long d = (static_cast<long long>(k) + 1) * n + 1;
    BigRational half_top = BigRational(d) / BigRational(2);
    BigRational total;
    for (long long i = 0; 2 * i <= n; ++i)
        total += binom(half_top, n - i) * binom(static_cast<long long>(n) - i, i);
    return total / BigRational(d);
}

/// |M_n| for even k as the signed self-convolution of the mu subsequence.
inline BigRational motzkin_even_count(int k, int n) {
    if (k % 2 != 0) throw OddK("motzkin_even_count: k must be even");
    std::vector<BigRational> mu(static_cast<std::size_t>(2 * n) + 1);
    for (int i = 0; i <= 2 * n; ++i) mu[static_cast<std::size_t>(i)] = motzkin_even_mu(k, i);
    BigRational total;
    for (int i = 0; i <= 2 * n; ++i) {
        BigRational term = mu[static_cast<std::size_t>(i)] * mu[static_cast<std::size_t>(2 * n - i)];
        if (i % 2 == 1) term = -term;
        total += term;
    }
    return total;
}

}  // namespace pathweight
