#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "polyadic/errors.hpp"
#include "polyadic/valuations.hpp"
#include "support/oracles.hpp"

using namespace polyadic;

TEST_CASE("extended valuation ordering and arithmetic") {
    CHECK(ExtVal::neg_inf() < ExtVal(0));
    CHECK(ExtVal(0) < ExtVal::pos_inf());
    CHECK(ExtVal::neg_inf().abs() == ExtVal::pos_inf());
    CHECK((ExtVal::pos_inf() - ExtVal(5)).is_pos_inf());
    CHECK((ExtVal(5) - ExtVal::pos_inf()).is_neg_inf());
    CHECK(ExtVal::min(ExtVal::pos_inf(), ExtVal(3)) == ExtVal(3));
    CHECK(ExtVal::max(ExtVal::neg_inf(), ExtVal(1)) == ExtVal(1));
    CHECK_THROWS_AS(ExtVal::pos_inf() - ExtVal::pos_inf(), Error);
    CHECK_THROWS_AS(ExtVal::pos_inf().finite(), Error);
}

TEST_CASE("p-adic valuation") {
    CHECK(nu_p(2, int64_t{48}) == ExtVal(4));
    CHECK(nu_p(5, int64_t{0}).is_neg_inf());
    CHECK(nu_p(3, int64_t{-18}) == ExtVal(2));
    CHECK(nu_p(7, BigInt::pow(BigInt(7), 30) * BigInt(5)) == ExtVal(30));
    CHECK_THROWS_WITH_AS(nu_p(4, int64_t{8}), doctest::Contains("NotPrime"), Error);

    std::mt19937_64 rng(19);
    for (int trial = 0; trial < 300; ++trial) {
        uint64_t p = std::vector<uint64_t>{2, 3, 5, 7, 11}[rng() % 5];
        int e = static_cast<int>(rng() % 12);
        int64_t d = static_cast<int64_t>(1 + rng() % 1000);
        while (d % static_cast<int64_t>(p) == 0) ++d;
        BigInt t = BigInt::pow(BigInt(static_cast<int64_t>(p)), static_cast<uint64_t>(e)) * BigInt(d);
        CHECK(nu_p(p, t) == ExtVal(e));
    }
}

TEST_CASE("factorization") {
    CHECK(factorize(18) == Factorization{{2, 1}, {3, 2}});
    CHECK(factorize(1).empty());
    CHECK(factorize(120) == Factorization{{2, 3}, {3, 1}, {5, 1}});
    // semiprime beyond the trial-division bound exercises the rho path
    CHECK(factorize(uint64_t{1000003} * 1000033) == Factorization{{1000003, 1}, {1000033, 1}});
    CHECK(factorize(uint64_t{2305843009213693951}) == Factorization{{2305843009213693951ull, 1}});  // 2^61 - 1
    CHECK_THROWS_WITH_AS(factorize(BigInt(0)), doctest::Contains("NonPositive"), Error);
    CHECK_THROWS_WITH_AS(factorize(BigInt(-4)), doctest::Contains("NonPositive"), Error);

    std::mt19937_64 rng(13);
    for (int trial = 0; trial < 300; ++trial) {
        uint64_t t = 1 + (rng() % (uint64_t{1} << (10 + rng() % 30)));
        uint64_t rebuilt = 1;
        uint64_t last_prime = 0;
        for (auto [p, e] : factorize(t)) {
            CHECK(is_prime_u64(p));
            CHECK(p > last_prime);
            last_prime = p;
            CHECK(e >= 1);
            for (int i = 0; i < e; ++i) rebuilt *= p;
        }
        CHECK(rebuilt == t);
    }
}

TEST_CASE("unit order") {
    CHECK(unit_order(5, 16) == 4);
    CHECK(unit_order(1, 99) == 1);
    CHECK(unit_order(19, 18) == 1);
    CHECK_THROWS_WITH_AS(unit_order(6, 9), doctest::Contains("NotAUnit"), Error);

    std::mt19937_64 rng(3);
    for (int trial = 0; trial < 500; ++trial) {
        uint64_t t = 2 + rng() % 5000;
        int64_t u = static_cast<int64_t>(rng() % t);
        if (gcd_i64(u, static_cast<int64_t>(t)) != 1) continue;
        uint64_t ord = unit_order(u, t);
        CHECK(euler_phi(t) % ord == 0);
        CHECK(powmod_u64(static_cast<uint64_t>(u), ord, t) == 1 % t);
        for (auto [p, e] : factorize(ord)) {
            (void)e;
            CHECK(powmod_u64(static_cast<uint64_t>(u), ord / p, t) != 1);
        }
    }
}

TEST_CASE("two-adic quotient shape examples") {
    CHECK(two_adic_quotient_shape(5, 4).cyclic_factors == std::vector<uint64_t>{2, 1});
    CHECK(two_adic_quotient_shape(7, 4).cyclic_factors == std::vector<uint64_t>{4});
    // fixture pinned by the subgroup-enumeration oracle: the quotient of the
    // 2-adic unit group mod 16 by <17> = <1> has order 8 with max element
    // order 4, i.e. factors [2, 4]
    {
        auto info = test_oracles::quotient_info(17, 4);
        CHECK(info.size == 8);
        CHECK(info.max_order == 4);
    }
    CHECK(two_adic_quotient_shape(17, 4).cyclic_factors == std::vector<uint64_t>{2, 4});
    CHECK(two_adic_quotient_shape(1, 4).cyclic_factors == std::vector<uint64_t>{2, 4});
    CHECK_THROWS_WITH_AS(two_adic_quotient_shape(-1, 5), doctest::Contains("ExcludedCase"), Error);
    CHECK_THROWS_WITH_AS(two_adic_quotient_shape(6, 5), doctest::Contains("NotAUnit"), Error);
}

TEST_CASE("two-adic quotient shape matches enumeration") {
    for (int a = 2; a <= 8; ++a) {
        int64_t window = int64_t{1} << (a + 2);
        for (int64_t u = -window + 1; u <= window; u += 2) {
            if (u == -1) continue;
            auto shape = two_adic_quotient_shape(u, a).cyclic_factors;
            int64_t product = 1, max_factor = 0;
            for (uint64_t f : shape) {
                product *= static_cast<int64_t>(f);
                max_factor = std::max<int64_t>(max_factor, static_cast<int64_t>(f));
            }
            auto info = test_oracles::quotient_info(u, a);
            CAPTURE(u);
            CAPTURE(a);
            CHECK(product == info.size);
            CHECK(max_factor == info.max_order);
        }
    }
}

TEST_CASE("two-adic image order examples") {
    CHECK(two_adic_image_order(3, 5, 4) == 2);
    CHECK(two_adic_image_order(-1, 5, 4) == 2);
    for (int64_t u : {5, 7, 9, 3}) CHECK(two_adic_image_order(u, u, 5) == 1);
    CHECK_THROWS_WITH_AS(two_adic_image_order(3, -1, 4), doctest::Contains("ExcludedCase"), Error);
}

TEST_CASE("two-adic image order matches enumeration") {
    for (int a = 2; a <= 8; ++a) {
        int64_t window = int64_t{1} << (a + 1);
        for (int64_t u = -window + 1; u <= window; u += 2) {
            if (u == -1) continue;
            auto mask = test_oracles::subgroup_mask(u, a);
            for (int64_t h = -window + 1; h <= window; h += 2) {
                CAPTURE(a);
                CAPTURE(u);
                CAPTURE(h);
                CHECK(static_cast<int64_t>(two_adic_image_order(h, u, a)) == test_oracles::image_order(mask, h, a));
            }
        }
    }
}

TEST_CASE("chinese remainder decompose and compose") {
    CHECK(crt_decompose(7, {4, 9}) == std::vector<int64_t>{3, 7});
    CHECK(crt_compose({3, 7}, {4, 9}) == 7);
    CHECK(crt_decompose(19, {2, 9}) == std::vector<int64_t>{1, 1});
    CHECK_THROWS_WITH_AS(crt_decompose(5, {4, 6}), doctest::Contains("NotCoprime"), Error);

    std::mt19937_64 rng(17);
    std::vector<int64_t> moduli{5, 7, 9, 11, 16};
    int64_t product = 5 * 7 * 9 * 11 * 16;
    for (int trial = 0; trial < 2000; ++trial) {
        int64_t x = static_cast<int64_t>(rng() % static_cast<uint64_t>(product));
        CHECK(crt_compose(crt_decompose(x, moduli), moduli) == x);
    }
}
