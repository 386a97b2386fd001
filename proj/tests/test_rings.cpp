#include "doctest.h"

#include <cmath>
#include <stdexcept>
#include <vector>

#include "vdgap/exact_power.hpp"
#include "vdgap/multipoly.hpp"
#include "vdgap/numtheory.hpp"
#include "vdgap/quadint.hpp"
#include "vdgap/rng.hpp"

using namespace vdgap;

namespace {

QuadInt qi(long long a, long long b, std::int64_t d) { return QuadInt(BigInt(a), BigInt(b), d); }

MultiPoly upoly(std::initializer_list<long long> ascending_coeffs) {
    MultiPoly p(1);
    std::uint32_t e = 0;
    for (long long c : ascending_coeffs) {
        p = p + MultiPoly::monomial(1, BigInt(c), {e});
        ++e;
    }
    return p;
}

}  // namespace

TEST_CASE("quadratic norms") {
    CHECK(quad_norm(qi(1, 7, 1)) == BigInt(50));
    CHECK(quad_norm(qi(0, 0, 5)) == BigInt(0));
    CHECK(quad_norm(qi(29, 26, 2)) == BigInt(2193));
    CHECK(quad_norm(qi(-3, 2, 7)) == BigInt(9 + 7 * 4));
}

TEST_CASE("quadratic ring arithmetic") {
    QuadInt x = qi(1, 7, 1), y = qi(5, 5, 1);
    CHECK(x * y == qi(5 - 35, 5 + 35, 1));
    CHECK(x.conj() == qi(1, -7, 1));
    CHECK(x - y == qi(-4, 2, 1));
    CHECK((x * y.conj()).to_string() == "40+30*sqrt(-1)");
    CHECK_THROWS_AS((void)(qi(1, 1, 1) + qi(1, 1, 2)), std::invalid_argument);
    CHECK_THROWS_AS((void)QuadInt(BigInt(1), BigInt(1), 0), std::invalid_argument);
}

TEST_CASE("quadratic exact division") {
    QuadInt g = qi(2, 3, 5) * qi(-1, 4, 5) * qi(3, 0, 5);
    CHECK(divide_exact(g, qi(2, 3, 5)) == qi(-1, 4, 5) * qi(3, 0, 5));
    CHECK_THROWS_AS((void)divide_exact(qi(1, 1, 1), qi(2, 0, 1)), std::invalid_argument);
    CHECK_THROWS_AS((void)divide_exact(qi(1, 1, 1), qi(0, 0, 1)), std::invalid_argument);
}

TEST_CASE("norm multiplicativity on random pairs") {
    SplitMix64 rng(1234);
    for (int iter = 0; iter < 400; ++iter) {
        std::int64_t d = rng.range(1, 30);
        QuadInt x = qi(rng.range(-50, 50), rng.range(-50, 50), d);
        QuadInt y = qi(rng.range(-50, 50), rng.range(-50, 50), d);
        CHECK(quad_norm(x * y) == quad_norm(x) * quad_norm(y));
    }
}

TEST_CASE("quad ring context validation") {
    QuadRing r1 = QuadRing::create(10);
    CHECK(r1.squarefree);
    CHECK_FALSE(QuadRing::create(12).squarefree);
    CHECK_FALSE(QuadRing::create(9).squarefree);
    CHECK(QuadRing::create(999999999989ll).d == 999999999989ll);
    CHECK_THROWS_AS((void)QuadRing::create(0), std::invalid_argument);
    CHECK_THROWS_AS((void)QuadRing::create(-4), std::invalid_argument);
    CHECK_THROWS_AS((void)QuadRing::create(1000000000001ll), std::invalid_argument);
}

TEST_CASE("zero polynomial degree is a sentinel") {
    MultiPoly z(2);
    CHECK(z.is_zero());
    CHECK_FALSE(z.total_degree().has_value());
    MultiPoly p = MultiPoly::constant(2, BigInt(3));
    CHECK(p.total_degree() == 0);
    CHECK((p - p).is_zero());
    CHECK_FALSE((p - p).total_degree().has_value());
}

TEST_CASE("polynomial arithmetic and printing") {
    MultiPoly p = upoly({-1, 0, 0, 1});  // X^3 - 1
    MultiPoly q = upoly({1, 0, 0, 1});   // X^3 + 1
    CHECK(p.to_string() == "X^3 - 1");
    CHECK((p * q).to_string() == "X^6 - 1");
    CHECK((p - q).to_string() == "-2");
    CHECK((p - q).total_degree() == 0);
    MultiPoly x = MultiPoly::monomial(2, BigInt(1), {1, 0});
    MultiPoly y = MultiPoly::monomial(2, BigInt(1), {0, 1});
    MultiPoly f = (x + y) * (x - y);
    CHECK(f.to_string() == "X^2 - Y^2");
    CHECK(f.total_degree() == 2);
    CHECK_THROWS_AS((void)(p + f), std::invalid_argument);  // arity mismatch
}

TEST_CASE("polynomial degree additivity on random products") {
    SplitMix64 rng(99);
    for (int iter = 0; iter < 300; ++iter) {
        int arity = 1 + static_cast<int>(rng.below(2));
        auto random_poly = [&]() {
            MultiPoly p(arity);
            int terms = 1 + static_cast<int>(rng.below(4));
            for (int i = 0; i < terms; ++i) {
                std::vector<std::uint32_t> exps(arity);
                for (auto& e : exps) e = static_cast<std::uint32_t>(rng.below(5));
                long long c = rng.range(-4, 4);
                if (c) p = p + MultiPoly::monomial(arity, BigInt(c), exps);
            }
            return p;
        };
        MultiPoly u = random_poly(), v = random_poly();
        if (u.is_zero() || v.is_zero()) continue;
        CHECK(*(u * v).total_degree() == *u.total_degree() + *v.total_degree());
    }
}

TEST_CASE("polynomial exact division") {
    MultiPoly r = upoly({-1, 0, 0, 0, 0, 0, 1});  // X^6 - 1
    MultiPoly p = upoly({-1, 0, 0, 1});
    CHECK(divide_exact(r, p) == upoly({1, 0, 0, 1}));
    CHECK_FALSE(try_divide(r, upoly({1, 0, 1})).has_value());  // X^2 + 1 has no root of unity of order 6
    CHECK(try_divide(r, upoly({1, 1})).has_value());  // X + 1 divides X^6 - 1
    CHECK_THROWS_AS((void)divide_exact(r, MultiPoly(1)), std::invalid_argument);

    // Multivariate: (X + Y)(X - Y + 2) recovered from the product.
    MultiPoly x = MultiPoly::monomial(2, BigInt(1), {1, 0});
    MultiPoly y = MultiPoly::monomial(2, BigInt(1), {0, 1});
    MultiPoly two = MultiPoly::constant(2, BigInt(2));
    MultiPoly a = x + y, b = x - y + two;
    CHECK(divide_exact(a * b, a) == b);
    CHECK(divide_exact(a * b, b) == a);
}

TEST_CASE("divisor enumeration") {
    auto check_list = [](const BigInt& n, std::initializer_list<long long> expect) {
        auto ds = divisors(n);
        REQUIRE(ds.size() == expect.size());
        std::size_t i = 0;
        for (long long e : expect) CHECK(ds[i++] == BigInt(e));
    };
    check_list(BigInt(105), {1, 3, 5, 7, 15, 21, 35, 105});
    check_list(BigInt(1), {1});
    check_list(BigInt(50), {1, 2, 5, 10, 25, 50});
    CHECK(divisors(BigInt::from_u64(999999999999999989ull)).size() == 2);  // prime
    CHECK_THROWS_AS((void)divisors(BigInt(0)), std::invalid_argument);
    CHECK_THROWS_AS((void)divisors(BigInt(-5)), std::invalid_argument);
    CHECK_THROWS_AS((void)divisors(BigInt::from_string("18446744073709551616")),
                    std::invalid_argument);
}

TEST_CASE("p-adic valuation") {
    CHECK(p_adic_valuation(BigInt(12), BigInt(2)) == 2);
    CHECK(p_adic_valuation(BigInt(1), BigInt(3)) == 0);
    CHECK(p_adic_valuation(BigInt(50), BigInt(5)) == 2);
    CHECK(p_adic_valuation(BigInt(-24), BigInt(2)) == 3);
    CHECK_THROWS_AS((void)p_adic_valuation(BigInt(0), BigInt(2)), std::invalid_argument);
    CHECK_THROWS_AS((void)p_adic_valuation(BigInt(12), BigInt(4)), std::invalid_argument);

    SplitMix64 rng(5);
    for (int iter = 0; iter < 200; ++iter) {
        BigInt a(rng.range(1, 1000000));
        BigInt b(rng.range(1, 1000000));
        BigInt p(std::vector<long long>{2, 3, 5, 7, 11}[rng.below(5)]);
        CHECK(p_adic_valuation(a * b, p) == p_adic_valuation(a, p) + p_adic_valuation(b, p));
    }
}

TEST_CASE("primality and factorization") {
    CHECK(is_prime_u64(2));
    CHECK(is_prime_u64(999999999999999989ull));
    CHECK_FALSE(is_prime_u64(1));
    CHECK_FALSE(is_prime_u64(18446744073709551615ull));
    auto f = factorize_u64(2ull * 2 * 3 * 999999937);
    REQUIRE(f.size() == 3);
    CHECK(f[0] == std::pair<std::uint64_t, int>{2, 2});
    CHECK(f[1] == std::pair<std::uint64_t, int>{3, 1});
    CHECK(f[2] == std::pair<std::uint64_t, int>{999999937, 1});
    // Two large prime factors force the rho path.
    auto g = factorize_u64(1000003ull * 1000033ull);
    REQUIRE(g.size() == 2);
    CHECK(g[0].first == 1000003ull);
    CHECK(g[1].first == 1000033ull);
}

TEST_CASE("exact power comparisons from the worked cases") {
    ExactPower a = ExactPower::of(BigInt(2), Rational(BigInt(1), BigInt(2)));
    ExactPower b = ExactPower::of(BigInt(3), Rational(BigInt(1), BigInt(3)));
    CHECK(exact_power_compare(a, b) == Ordering::Less);  // 2^3 = 8 < 9 = 3^2

    ExactPower c = ExactPower::of(BigInt(7), Rational::from_string("3/5"));
    CHECK(exact_power_compare(c, c) == Ordering::Equal);

    ExactPower lhs = ExactPower::of(BigInt(28), Rational(1));
    ExactPower rhs = ExactPower::of(BigInt(4), Rational(1))
                         .multiply_by(ExactPower::of(BigInt(1155), Rational(BigInt(1), BigInt(6))));
    CHECK(exact_power_compare(lhs, rhs) == Ordering::Greater);  // 28^6 >= 4^6 * 1155
    CHECK(rhs.to_string() == "4*1155^(1/6)");

    CHECK(exact_power_compare(ExactPower::one(), ExactPower::of(BigInt(1), Rational(5))) ==
          Ordering::Equal);
    CHECK_THROWS_AS((void)ExactPower::of(BigInt(0), Rational(1)), std::invalid_argument);
    CHECK_THROWS_AS((void)ExactPower::of(BigInt(2), Rational(-1)), std::invalid_argument);
}

TEST_CASE("exact power order agrees with high-precision numeric evaluation") {
    // Diagnostic only: the exact comparator is authoritative; the numeric check
    // is skipped when the two values are too close to resolve in long double.
    SplitMix64 rng(2024);
    for (int iter = 0; iter < 1000; ++iter) {
        auto random_power = [&]() {
            ExactPower p;
            int k = 1 + static_cast<int>(rng.below(3));
            long double log_value = 0.0L;
            for (int i = 0; i < k; ++i) {
                long long base = rng.range(2, 50);
                long long num = rng.range(0, 12);
                long long den = rng.range(1, 8);
                p.multiply_by(ExactPower::of(BigInt(base), Rational(BigInt(num), BigInt(den))));
                log_value += static_cast<long double>(num) / den * std::log(static_cast<long double>(base));
            }
            return std::pair(p, log_value);
        };
        auto [pa, la] = random_power();
        auto [pb, lb] = random_power();
        Ordering ord = exact_power_compare(pa, pb);
        if (std::fabs(static_cast<double>(la - lb)) < 1e-9) continue;
        CHECK(ord == (la < lb ? Ordering::Less : Ordering::Greater));
    }
}

TEST_CASE("squarefree validation by trial division") {
    CHECK(is_squarefree(1));
    CHECK(is_squarefree(10));
    CHECK_FALSE(is_squarefree(4));
    CHECK_FALSE(is_squarefree(999999999996ll));  // divisible by 4
    CHECK(is_squarefree(999999999997ll));
    CHECK_THROWS_AS((void)is_squarefree(0), std::invalid_argument);
}
