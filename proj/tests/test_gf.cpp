#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <atomic>
#include <random>
#include <thread>

#include "polyadic/errors.hpp"
#include "polyadic/gf.hpp"

using namespace polyadic;

TEST_CASE("prime field context is canonical") {
    auto f5 = FieldCtx::create(5, 1);
    // first monic linear whose root generates the units: X + 2, root 3
    CHECK(f5->modulus() == std::vector<uint64_t>{2});
    CHECK(f5->generator().index() == 3);
    CHECK(element_order(f5->generator()) == 4);
    CHECK(FieldCtx::create(5, 1) == f5);  // cached
    CHECK_THROWS_WITH_AS(FieldCtx::create(6, 1), doctest::Contains("NotPrime"), Error);
    CHECK_THROWS_WITH_AS(FieldCtx::create(2, 64), doctest::Contains("TooLarge"), Error);
}

TEST_CASE("extension contexts") {
    auto f9 = FieldCtx::create(3, 2);
    CHECK(f9->modulus() == std::vector<uint64_t>{2, 1});  // X^2 + X + 2
    CHECK(element_order(f9->one()) == 1);
    CHECK(element_order(f9->generator()) == 8);
    CHECK(element_order(f9->generator().pow(int64_t{2})) == 4);

    auto f64 = FieldCtx::create(2, 6);
    CHECK(element_order(f64->generator()) == 63);
}

TEST_CASE("field arithmetic") {
    auto f5 = FieldCtx::create(5, 1);
    CHECK(f5->from_int(2) + f5->from_int(4) == f5->from_int(1));
    CHECK(f5->from_int(2).inv() == f5->from_int(3));
    CHECK(f5->from_int(2) / f5->from_int(2) == f5->one());
    CHECK((-f5->from_int(2)) == f5->from_int(3));
    CHECK_THROWS_WITH_AS(f5->zero().inv(), doctest::Contains("DivByZero"), Error);
    CHECK_THROWS_WITH_AS(f5->one() + FieldCtx::create(7, 1)->one(), doctest::Contains("FieldMismatch"), Error);
    CHECK_THROWS_WITH_AS(element_order(f5->zero()), doctest::Contains("ZeroElement"), Error);

    for (auto ctx : {FieldCtx::create(5, 1), FieldCtx::create(3, 2), FieldCtx::create(2, 6)}) {
        // Lagrange: g^(p^k - 1) = 1
        CHECK(ctx->generator().pow(BigInt(static_cast<int64_t>(ctx->order_u64()))) == ctx->one());
        CHECK(ctx->generator().pow(int64_t{0}) == ctx->one());
        CHECK(ctx->generator().pow(int64_t{-1}) == ctx->generator().inv());
    }
}

TEST_CASE("index packing round trip") {
    auto f27 = FieldCtx::create(3, 3);
    std::mt19937_64 rng(5);
    for (int trial = 0; trial < 50; ++trial) {
        uint64_t idx = rng() % 27;
        CHECK(f27->from_index(idx).index() == idx);
    }
    CHECK_THROWS_AS(f27->from_index(27), Error);
}

TEST_CASE("embedding is a pinned ring homomorphism") {
    auto f9 = FieldCtx::create(3, 2);
    auto f81 = FieldCtx::create(3, 4);
    auto emb = Embedding::get(f9, f81);
    CHECK(emb->e() == 2);
    CHECK(emb->embed(f9->one()) == f81->one());
    CHECK(element_order(emb->embed(f9->generator())) == 8);

    std::mt19937_64 rng(23);
    for (int trial = 0; trial < 200; ++trial) {
        FieldElement a = f9->from_index(rng() % 9);
        FieldElement b = f9->from_index(rng() % 9);
        CHECK(emb->embed(a) + emb->embed(b) == emb->embed(a + b));
        CHECK(emb->embed(a) * emb->embed(b) == emb->embed(a * b));
        CHECK(emb->pullback(emb->embed(a)) == a);
    }
    CHECK_THROWS_WITH_AS(emb->pullback(f81->generator()), doctest::Contains("NotGaloisStable"), Error);
}

TEST_CASE("frobenius fixes exactly the embedded subfield") {
    auto f25 = FieldCtx::create(5, 2);
    int fixed = 0;
    for (uint64_t i = 0; i < 25; ++i) {
        FieldElement x = f25->from_index(i);
        if (x.pow(int64_t{5}) == x) {
            ++fixed;
            CHECK(in_subfield(x, 1));
        } else {
            CHECK(!in_subfield(x, 1));
        }
    }
    CHECK(fixed == 5);
    CHECK(!in_subfield(f25->generator(), 1));
    CHECK_THROWS_WITH_AS(in_subfield(f25->generator(), 3), doctest::Contains("BadSubfield"), Error);
}

TEST_CASE("basis decomposition inverts the tower expansion") {
    struct Tower {
        uint64_t p;
        int small_k, big_k;
    };
    std::mt19937_64 rng(29);
    for (Tower tower : {Tower{3, 2, 4}, Tower{2, 2, 6}, Tower{5, 1, 3}}) {
        auto small = FieldCtx::create(tower.p, tower.small_k);
        auto big = FieldCtx::create(tower.p, tower.big_k);
        auto emb = Embedding::get(small, big);
        REQUIRE(emb->e() == tower.big_k / tower.small_k);
        for (int trial = 0; trial < 100; ++trial) {
            FieldElement x = big->from_index(rng() % big->size().to_uint64());
            auto parts = emb->decompose(x);
            REQUIRE(parts.size() == static_cast<size_t>(emb->e()));
            FieldElement rebuilt = big->zero();
            FieldElement gpow = big->one();
            for (const auto& part : parts) {
                rebuilt = rebuilt + emb->embed(part) * gpow;
                gpow = gpow * big->generator();
            }
            CHECK(rebuilt == x);
        }
    }
}

TEST_CASE("root data for the worked parameter sets") {
    RootData rd = make_root_data(19, 6, 3);
    CHECK(rd.e == 1);
    CHECK(element_order(rd.omega) == 18);
    CHECK(element_order(rd.lambda) == 3);
    CHECK(rd.omega.pow(int64_t{6}) == rd.embedding->embed(rd.lambda));
    // canonical-context golden values
    CHECK(rd.omega.index() == 15);
    CHECK(rd.lambda.index() == 11);

    RootData rd2 = make_root_data(5, 6, 2);
    CHECK(rd2.e == 2);
    CHECK(rd2.lambda == rd2.ground->from_int(-1));
    CHECK(element_order(rd2.omega) == 12);
    CHECK(rd2.omega.pow(int64_t{6}) == rd2.embedding->embed(rd2.lambda));
    CHECK(rd2.omega.index() == 23);

    RootData rd3 = make_root_data(7, 5, 1);
    CHECK(rd3.lambda == rd3.ground->one());
    CHECK(element_order(rd3.omega) == 5);

    RootData rd4 = make_root_data(9, 10, 4);
    CHECK(rd4.e == 2);
    CHECK(element_order(rd4.omega) == 40);
    CHECK(element_order(rd4.lambda) == 4);
    CHECK(rd4.omega.pow(int64_t{10}) == rd4.embedding->embed(rd4.lambda));

    CHECK_THROWS_WITH_AS(make_root_data(6, 5, 1), doctest::Contains("BadParams"), Error);
    CHECK_THROWS_WITH_AS(make_root_data(5, 10, 2), doctest::Contains("BadParams"), Error);
    CHECK_THROWS_WITH_AS(make_root_data(5, 4, 3), doctest::Contains("BadParams"), Error);
}

TEST_CASE("contexts are shareable across threads") {
    std::vector<std::thread> workers;
    std::atomic<int> failures{0};
    for (int w = 0; w < 4; ++w) {
        workers.emplace_back([&failures, w] {
            try {
                for (int i = 0; i < 25; ++i) {
                    auto ctx = FieldCtx::create(2 + (w + i) % 2 * 3, 2 + i % 3);  // GF(2^k) / GF(5^k)
                    if (element_order(ctx->generator()) != ctx->order_u64()) ++failures;
                    RootData rd = make_root_data(17, 8, 2);
                    if (element_order(rd.omega) != 16) ++failures;
                }
            } catch (...) {
                ++failures;
            }
        });
    }
    for (auto& t : workers) t.join();
    CHECK(failures == 0);
}

TEST_CASE("omega_pow handles negative exponents") {
    RootData rd = make_root_data(17, 8, 2);
    CHECK(rd.omega_pow(-1) == rd.omega.inv());
    CHECK(rd.omega_pow(-3) * rd.omega_pow(3) == rd.big->one());
    CHECK(rd.omega_pow(16) == rd.omega_pow(0));
}
