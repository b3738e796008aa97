#pragma once

#include <string>
#include <utility>
#include <vector>

#include "errors.hpp"
#include "paths.hpp"
#include "series.hpp"
#include "weights.hpp"

namespace pathweight {

/// Data of the master functional equation
///   P(x) = F(U(x, W(x)P(x))) * (1 + P(x) V(x, W(x)P(x))),
/// with U(x,y) = sum x^r y^s over u_terms, V likewise, W(x) = sum x^r.
/// Every monomial must carry r >= 1, which is what makes the right-hand side
/// an x-adic contraction.
struct MasterSpec {
    std::vector<std::pair<int, int>> u_terms;  // (r, s)
    std::vector<std::pair<int, int>> v_terms;  // (r, s)
    std::vector<int> w_terms;                  // r
    TruncatedSeries F;

    void validate() const {
        for (const auto& [r, s] : u_terms)
            if (r < 1 || s < 0) throw std::invalid_argument("MasterSpec: U term needs r>=1, s>=0");
        for (const auto& [r, s] : v_terms)
            if (r < 1 || s < 0) throw std::invalid_argument("MasterSpec: V term needs r>=1, s>=0");
        for (int r : w_terms)
            if (r < 1) throw std::invalid_argument("MasterSpec: W term needs r>=1");
        if (!F[0].is_one()) throw std::invalid_argument("MasterSpec: F must have constant term 1");
    }
};

namespace detail {

// U(x, W(x)P(x)) truncated at P's order; zero constant term by construction.
inline TruncatedSeries substituted_sum(const std::vector<std::pair<int, int>>& terms,
                                       const TruncatedSeries& wp, int order) {
    TruncatedSeries acc(order);
    for (const auto& [r, s] : terms) {
        TruncatedSeries term = TruncatedSeries::monomial(1, r, order);
        if (s > 0) term = mul(term, int_pow(wp, static_cast<unsigned long long>(s)));
        acc = add(acc, term);
    }
    return acc;
}

inline TruncatedSeries master_rhs(const MasterSpec& spec, const TruncatedSeries& p) {
    int order = p.order();
    TruncatedSeries w(order);
    for (int r : spec.w_terms) w = add(w, TruncatedSeries::monomial(1, r, order));
    TruncatedSeries wp = mul(w, p);
    TruncatedSeries a = substituted_sum(spec.u_terms, wp, order);
    TruncatedSeries b = substituted_sum(spec.v_terms, wp, order);
    TruncatedSeries fa = compose(spec.F.order() == order ? spec.F : spec.F.truncated(order), a);
    return mul(fa, add(TruncatedSeries::one(order), mul(p, b)));
}

}  // namespace detail

/// Solves the master equation by fixed-point iteration from P = 1. Each
/// monomial of U, V, W carries at least one factor of x, so iteration t pins
/// coefficient t permanently; N+1 rounds determine the series through x^N.
/// Fails with NonContractive if a settled coefficient ever moves.
inline TruncatedSeries solve_master(const MasterSpec& spec, int order) {
    spec.validate();
    if (spec.F.order() < order)
        throw InsufficientOrder("solve_master: F needs order >= " + std::to_string(order));
    TruncatedSeries p = TruncatedSeries::one(order);
    for (int t = 1; t <= order + 1; ++t) {
        TruncatedSeries next = detail::master_rhs(spec, p);
        for (int j = 0; j < t && j <= order; ++j)
            if (!(next[j] == p[j]))
                throw NonContractive("solve_master: coefficient " + std::to_string(j) +
                                     " moved at iteration " + std::to_string(t));
        p = next;
    }
    return p;
}

/// P - F(U(x,WP))(1 + P V(x,WP)); the all-zero series certifies P.
inline TruncatedSeries residual(const MasterSpec& spec, const TruncatedSeries& p) {
    return sub(p, detail::master_rhs(spec, p));
}

/// The master-equation data for one path family at the given weight.
/// (Even-k Motzkin has no master spec; its down-steps have size 2.)
inline MasterSpec family_master_spec(const PathFamily& family, const WeightSpec& w, int order) {
    MasterSpec spec{{}, {}, {1}, weight_series(w, order)};
    switch (family.kind) {
        case FamilyKind::catalan:
            spec.u_terms = {{1, family.k}};
            break;
        case FamilyKind::schroeder:
            spec.u_terms = {{1, family.k}};
            spec.v_terms = {{2, family.k - 1}};
            break;
        case FamilyKind::motzkin_odd:
            spec.u_terms = {{1, family.k}};
            spec.v_terms = {{1, (family.k - 1) / 2}};
            break;
        default:
            throw std::invalid_argument("family_master_spec: no master equation for " +
                                        family.label());
    }
    return spec;
}

/// Kernel-root coefficients a_m = (1/m) [z^(m-1)] (1 + z^(k+1) + z^(2k+2))^(m/2)
/// for m = 1 .. (k+1)*n_max + 1, reported as mu_n = a_{(k+1)n+1}. All other
/// a_m vanish; that is checked as the coefficients are produced.
inline std::vector<BigRational> kernel_mu(int k, int n_max) {
    if (k % 2 != 0) throw OddK("kernel_mu: k must be even");
    std::vector<BigRational> mu(static_cast<std::size_t>(n_max) + 1);
    int m_max = (k + 1) * n_max + 1;
    for (int m = 1; m <= m_max; ++m) {
        int ord = m - 1;
        TruncatedSeries g = add(TruncatedSeries::one(ord),
                                add(TruncatedSeries::monomial(1, k + 1, ord),
                                    TruncatedSeries::monomial(1, 2 * k + 2, ord)));
        TruncatedSeries pw = rational_pow(g, BigRational(m) / BigRational(2));
        BigRational am = pw[ord] / BigRational(m);
        if ((m - 1) % (k + 1) == 0) {
            mu[static_cast<std::size_t>((m - 1) / (k + 1))] = am;
        } else if (!am.is_zero()) {
            throw std::logic_error("kernel_mu: unexpected nonzero a_" + std::to_string(m));
        }
    }
    return mu;
}

/// Unweighted even-k Motzkin counts for n = 0 .. n_max via the kernel method:
/// the product of the two small kernel roots is -F_0(x), and expanding it
/// gives |M_n| = sum_i (-1)^i mu_i mu_{2n-i}.
inline std::vector<BigRational> kernel_even_motzkin(int k, int n_max) {
    if (k % 2 != 0) throw OddK("kernel_even_motzkin: k must be even");
    std::vector<BigRational> mu = kernel_mu(k, 2 * n_max);
    std::vector<BigRational> counts(static_cast<std::size_t>(n_max) + 1);
    for (int n = 0; n <= n_max; ++n) {
        BigRational total;
        for (int i = 0; i <= 2 * n; ++i) {
            BigRational term = mu[static_cast<std::size_t>(i)] * mu[static_cast<std::size_t>(2 * n - i)];
            if (i % 2 == 1) term = -term;
            total += term;
        }
        counts[static_cast<std::size_t>(n)] = total;
    }
    return counts;
}

}  // namespace pathweight
