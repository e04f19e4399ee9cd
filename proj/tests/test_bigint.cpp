#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "polyadic/bigint.hpp"
#include "polyadic/errors.hpp"

using polyadic::BigInt;

TEST_CASE("int64 round trips") {
    for (int64_t v : {int64_t{0}, int64_t{1}, int64_t{-1}, int64_t{42}, INT64_MAX, INT64_MIN + 1, INT64_MIN}) {
        BigInt b(v);
        CHECK(b.to_int64() == v);
        CHECK(b.to_string() == std::to_string(v));
    }
}

TEST_CASE("decimal parse and print") {
    CHECK(BigInt("0").is_zero());
    CHECK(BigInt("-0").is_zero());
    CHECK(BigInt("340282366920938463463374607431768211456").to_string() ==
          "340282366920938463463374607431768211456");  // 2^128
    CHECK(BigInt::pow(BigInt(2), 128).to_string() == "340282366920938463463374607431768211456");
    CHECK(BigInt::pow(BigInt(81), 20).to_string() == "147808829414345923316083210206383297601");
    CHECK_THROWS_AS(BigInt("12x"), polyadic::Error);
}

TEST_CASE("arithmetic against 128-bit ground truth") {
    std::mt19937_64 rng(7);
    for (int trial = 0; trial < 20000; ++trial) {
        // keep |a|, |b| < 2^61 so a+b and a-b stay inside int64
        int64_t a = static_cast<int64_t>(rng() >> (3 + rng() % 40)) - static_cast<int64_t>(rng() >> 33);
        int64_t b = static_cast<int64_t>(rng() >> (3 + rng() % 40)) - static_cast<int64_t>(rng() >> 33);
        BigInt ba(a), bb(b);
        CHECK((ba + bb).to_string() == std::to_string(a + b));
        CHECK((ba - bb).to_string() == std::to_string(a - b));
        __int128 prod = static_cast<__int128>(a) * b;
        BigInt bp = ba * bb;
        __int128 rebuilt = 0;
        bool neg = bp.is_negative();
        for (size_t i = bp.bit_length(); i-- > 0;) rebuilt = rebuilt * 2 + (bp.bit(i) ? 1 : 0);
        if (neg) rebuilt = -rebuilt;
        CHECK(rebuilt == prod);
        if (b != 0) {
            BigInt q, r;
            BigInt::divmod(ba, bb, q, r);
            CHECK(q.to_int64() == a / b);
            CHECK(r.to_int64() == a % b);
        }
    }
}

TEST_CASE("multi-limb division reconstructs the dividend") {
    std::mt19937_64 rng(11);
    for (int trial = 0; trial < 4000; ++trial) {
        BigInt a = BigInt::from_uint64(rng());
        for (int i = 0; i < static_cast<int>(rng() % 3); ++i) a = a * BigInt::from_uint64(rng() | 1);
        BigInt b = BigInt::from_uint64((rng() >> (rng() % 32)) | 1);
        if (rng() & 1) b = b * BigInt::from_uint64(rng() | 1);
        BigInt q, r;
        BigInt::divmod(a, b, q, r);
        CHECK(q * b + r == a);
        CHECK(r.abs() < b.abs());
        CHECK(!r.is_negative());
    }
    CHECK_THROWS_AS(BigInt(5) / BigInt(0), polyadic::Error);
}

TEST_CASE("structured limb patterns divide correctly") {
    // boundary limb values drive the rare quotient-correction branches; the
    // reconstruction identity certifies every answer on its own
    const std::vector<uint64_t> special{0, 1, 0x80000000ull, 0x80000001ull, 0xffffffffull, 0xfffffffeull};
    auto compose = [](std::initializer_list<uint64_t> limbs) {
        BigInt v(0);
        BigInt base = BigInt::pow(BigInt(2), 32);
        for (uint64_t limb : limbs) v = v * base + BigInt::from_uint64(limb);
        return v;
    };
    for (uint64_t a2 : special)
        for (uint64_t a1 : special)
            for (uint64_t a0 : special)
                for (uint64_t b1 : special)
                    for (uint64_t b0 : special) {
                        BigInt a = compose({a2, a1, a0});
                        BigInt b = compose({b1, b0});
                        if (b.is_zero()) continue;
                        BigInt q, r;
                        BigInt::divmod(a, b, q, r);
                        CHECK(q * b + r == a);
                        CHECK(r.abs() < b.abs());
                    }
}

TEST_CASE("division corner cases") {
    // quotient digit correction path: dividend with a long run of high bits
    BigInt a = BigInt::pow(BigInt(2), 96) - BigInt(1);
    BigInt b = BigInt::pow(BigInt(2), 32) + BigInt(1);
    BigInt q, r;
    BigInt::divmod(a, b, q, r);
    CHECK(q * b + r == a);
    CHECK((BigInt(-7) / BigInt(2)).to_int64() == -3);
    CHECK((BigInt(-7) % BigInt(2)).to_int64() == -1);
    CHECK((BigInt(7) / BigInt(-2)).to_int64() == -3);
}

TEST_CASE("gcd and pow") {
    CHECK(BigInt::gcd(BigInt(48), BigInt(18)).to_int64() == 6);
    CHECK(BigInt::gcd(BigInt(0), BigInt(5)).to_int64() == 5);
    CHECK(BigInt::gcd(BigInt("123456789123456789"), BigInt("987654321987654321")).to_string() == "9000000009");
    CHECK(BigInt::pow(BigInt(3), 0).to_int64() == 1);
    CHECK(BigInt::pow(BigInt(10), 18).to_int64() == 1000000000000000000LL);
}

TEST_CASE("comparisons") {
    CHECK(BigInt(-5) < BigInt(3));
    CHECK(BigInt(3) < BigInt(5));
    CHECK(BigInt(-3) > BigInt(-5));
    CHECK(BigInt::pow(BigInt(2), 70) > BigInt(INT64_MAX));
    CHECK(!BigInt(7).fits_uint64() == false);
    CHECK(!BigInt::pow(BigInt(2), 70).fits_int64());
}
