#include <catch2/catch_amalgamated.hpp>

#include <random>

#include "pathweight/series.hpp"
#include "test_util.hpp"

using namespace pathweight;
using pathweight::testing::in_lowest_terms;
using pathweight::testing::iterate_lagrange;
using pathweight::testing::random_series;

namespace {

TruncatedSeries from_ints(std::vector<long long> v) {
    std::vector<BigRational> c(v.begin(), v.end());
    return TruncatedSeries(std::move(c));
}

TruncatedSeries geometric(int order) {
    std::vector<BigRational> c(static_cast<std::size_t>(order) + 1, BigRational(1));
    return TruncatedSeries(std::move(c));
}

}  // namespace

TEST_CASE("rational basics") {
    CHECK(BigRational(6, 4) == BigRational(3, 2));
    CHECK(BigRational(1, -2) == BigRational(-1, 2));
    CHECK(BigRational(0, 7).denominator() == 1);
    CHECK(BigRational(2, 3) + BigRational(1, 6) == BigRational(5, 6));
    CHECK(BigRational(2, 3) * BigRational(9, 4) == BigRational(3, 2));
    CHECK(BigRational(1) / BigRational(-3, 7) == BigRational(-7, 3));
    CHECK(BigRational(1, 3) < BigRational(1, 2));
    CHECK(BigRational::parse("-35/8").to_string() == "-35/8");
    CHECK(BigRational::parse("12") == BigRational(12));
    CHECK_THROWS_AS(BigRational(1, 0), std::domain_error);
    CHECK_THROWS_AS(BigRational(1) / BigRational(0), std::domain_error);
    CHECK_THROWS_AS(BigRational::parse("1/x"), std::invalid_argument);
}

TEST_CASE("add") {
    CHECK(add(from_ints({1, 1}), from_ints({1, -1})) == from_ints({2, 0}));
    auto s = from_ints({3, 1, 4});
    CHECK(add(TruncatedSeries(2), s) == s);
    CHECK(add(from_ints({1, 2, 3}), from_ints({0, 0, 1})) == from_ints({1, 2, 4}));
    // mismatched orders truncate to the minimum
    CHECK(add(from_ints({1, 2, 3}), from_ints({1, 1})).order() == 1);
}

TEST_CASE("mul") {
    CHECK(mul(from_ints({1, 1, 0}), from_ints({1, -1, 0})) == from_ints({1, 0, -1}));
    CHECK(mul(from_ints({1, -1, 0, 0, 0, 0}), geometric(5)) == from_ints({1, 0, 0, 0, 0, 0}));
    CHECK(int_pow(from_ints({1, 1, 0, 0}), 3) == from_ints({1, 3, 3, 1}));
}

TEST_CASE("reciprocal") {
    CHECK(reciprocal(from_ints({1, -1, 0, 0})) == from_ints({1, 1, 1, 1}));
    CHECK(reciprocal(TruncatedSeries::constant(2, 2)) ==
          TruncatedSeries::constant(BigRational(1, 2), 2));
    CHECK(reciprocal(from_ints({1, 1, 0, 0})) == from_ints({1, -1, 1, -1}));
    CHECK_THROWS_AS(reciprocal(from_ints({0, 1})), ZeroConstantTerm);
}

TEST_CASE("compose") {
    auto s = from_ints({0, -2, 5});
    CHECK(compose(TruncatedSeries::identity(2), s) == s);
    // 1/(1-x) at x^2 -> 1 + x^2 + x^4
    CHECK(compose(geometric(5), TruncatedSeries::monomial(1, 2, 5)) ==
          from_ints({1, 0, 1, 0, 1, 0}));
    // (1+x)^2 at x+x^2 -> 1 + 2x + 3x^2 + 2x^3
    CHECK(compose(from_ints({1, 2, 1, 0}), from_ints({0, 1, 1, 0})) == from_ints({1, 2, 3, 2}));
    CHECK_THROWS_AS(compose(geometric(3), from_ints({1, 1, 0, 0})), NonzeroInnerConstant);
}

TEST_CASE("int_pow") {
    CHECK(int_pow(from_ints({2, 5, 1}), 0) == from_ints({1, 0, 0}));
    CHECK(int_pow(from_ints({1, 1, 0, 0, 0}), 4) == from_ints({1, 4, 6, 4, 1}));
    // (1/(1-x))^3 has coefficients C(n+2,2)
    auto cube = int_pow(geometric(6), 3);
    for (int n = 0; n <= 6; ++n)
        CHECK(cube[n] == BigRational((n + 2) * (n + 1) / 2));
}

TEST_CASE("gen_binom") {
    CHECK(gen_binom(BigRational(7, 2), 0) == BigRational(1));
    // direct product: (7/2)(5/2)/2!
    CHECK(gen_binom(BigRational(7, 2), 2) == BigRational(35, 8));
    CHECK(gen_binom(BigRational(5), 2) == BigRational(10));
    CHECK(gen_binom(BigRational(-1), 3) == BigRational(-1));
}

TEST_CASE("rational_pow") {
    std::mt19937 rng(41);
    auto a = random_series(rng, 5, -3, 3, 2);
    std::vector<BigRational> c = a.coeffs();
    c[0] = 1;
    a = TruncatedSeries(c);

    CHECK(rational_pow(a, 1) == a);
    auto sqrt1px = rational_pow(from_ints({1, 1, 0}), BigRational(1, 2));
    CHECK(sqrt1px == TruncatedSeries({1, BigRational(1, 2), BigRational(-1, 8)}));
    CHECK(rational_pow(rational_pow(a, BigRational(1, 2)), 2) == a);
    CHECK_THROWS_AS(rational_pow(from_ints({2, 1}), BigRational(1, 2)), ConstantTermNotOne);
}

TEST_CASE("rational_pow exponent additivity") {
    std::mt19937 rng(17);
    std::uniform_int_distribution<int> num(-5, 5);
    std::uniform_int_distribution<int> den(1, 4);
    for (int trial = 0; trial < 25; ++trial) {
        auto a = random_series(rng, 6, -3, 3, 2);
        std::vector<BigRational> c = a.coeffs();
        c[0] = 1;
        a = TruncatedSeries(c);
        BigRational p(num(rng), den(rng)), q(num(rng), den(rng));
        CHECK(mul(rational_pow(a, p), rational_pow(a, q)) == rational_pow(a, p + q));
    }
}

TEST_CASE("mul is commutative and associative; reciprocal inverts; compose(f,x)=f") {
    std::mt19937 rng(99);
    for (int trial = 0; trial < 30; ++trial) {
        auto a = random_series(rng, 5, -4, 4, 3);
        auto b = random_series(rng, 5, -4, 4, 3);
        auto c = random_series(rng, 5, -4, 4, 3);
        CHECK(mul(a, b) == mul(b, a));
        CHECK(mul(mul(a, b), c) == mul(a, mul(b, c)));
        CHECK(compose(a, TruncatedSeries::identity(5)) == a);
        if (!a[0].is_zero()) {
            CHECK(mul(a, reciprocal(a)) == TruncatedSeries::one(5));
            CHECK(mul(reciprocal(a), a) == TruncatedSeries::one(5));
        }
    }
}

TEST_CASE("lagrange_coeff examples") {
    // phi = (1+x)^2: P = x(1+P)^2 generates the Catalan numbers.
    auto phi = from_ints({1, 2, 1, 0, 0});
    auto oracle = iterate_lagrange(phi, 4);
    CHECK(oracle[3] == BigRational(5));
    CHECK(lagrange_coeff(phi, 3) == BigRational(5));

    // constant phi = 1: P = x.
    auto one = TruncatedSeries::one(4);
    CHECK(lagrange_coeff(one, 1) == BigRational(1));
    CHECK(lagrange_coeff(one, 2) == BigRational(0));
    CHECK(lagrange_coeff(one, 4) == BigRational(0));

    // phi = 1/(1-x): P = x/(1-P).
    auto geo = geometric(5);
    CHECK(iterate_lagrange(geo, 5)[4] == BigRational(5));
    CHECK(lagrange_coeff(geo, 4) == BigRational(5));

    CHECK_THROWS_AS(lagrange_coeff(from_ints({0, 1, 1}), 2), ZeroConstantTerm);
    CHECK_THROWS_AS(lagrange_coeff(from_ints({1, 1}), 5), InsufficientOrder);
}

TEST_CASE("lagrange_psi examples") {
    auto phi = from_ints({1, 2, 1, 0, 0});
    // psi = x reduces to lagrange_coeff
    auto x = TruncatedSeries::identity(4);
    for (int n = 1; n <= 4; ++n) CHECK(lagrange_psi(phi, x, n) == lagrange_coeff(phi, n));

    // psi = x^2: [x^3] P^2 where P = x(1+P)^2
    auto p = iterate_lagrange(phi, 4);
    auto p2 = mul(p, p);
    CHECK(lagrange_psi(phi, TruncatedSeries::monomial(1, 2, 4), 3) == p2[3]);

    // constant psi: psi' = 0
    for (int n = 1; n <= 4; ++n)
        CHECK(lagrange_psi(phi, TruncatedSeries::constant(9, 0), n) == BigRational(0));
}

TEST_CASE("lagrange agrees with fixed-point iteration on random phi") {
    std::mt19937 rng(2024);
    std::uniform_int_distribution<int> coin(-3, 3);
    for (int trial = 0; trial < 40; ++trial) {
        auto phi = random_series(rng, 12, -3, 3, 1);
        if (phi[0].is_zero()) {
            std::vector<BigRational> c = phi.coeffs();
            c[0] = 1 + std::abs(coin(rng));
            phi = TruncatedSeries(c);
        }
        auto p = iterate_lagrange(phi, 12);
        for (int n = 1; n <= 12; ++n) CHECK(lagrange_coeff(phi, n) == p[n]);
    }
}

TEST_CASE("results stay normalized") {
    std::mt19937 rng(7);
    for (int trial = 0; trial < 20; ++trial) {
        auto a = random_series(rng, 6, -6, 6, 4);
        auto b = random_series(rng, 6, -6, 6, 4);
        for (const auto& s : {add(a, b), sub(a, b), mul(a, b)})
            for (const auto& coeff : s.coeffs()) CHECK(in_lowest_terms(coeff));
        if (!a[0].is_zero()) {
            auto r = reciprocal(a);
            for (const auto& coeff : r.coeffs()) CHECK(in_lowest_terms(coeff));
        }
    }
}

TEST_CASE("derivative is exact and termwise") {
    CHECK(derivative(from_ints({5, 3, 4, 7})) == from_ints({3, 8, 21}));
    CHECK(derivative(TruncatedSeries::constant(5, 0)) == TruncatedSeries(0));
}
