#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "polyadic/errors.hpp"
#include <numeric>

#include "polyadic/splitting.hpp"

using namespace polyadic;

TEST_CASE("parameter validation") {
    CHECK_THROWS_WITH_AS(make_params(12, 5, 1), doctest::Contains("BadParams"), Error);   // not a prime power
    CHECK_THROWS_WITH_AS(make_params(5, 10, 2), doctest::Contains("BadParams"), Error);   // gcd(q, n) != 1
    CHECK_THROWS_WITH_AS(make_params(5, 3, 3), doctest::Contains("BadParams"), Error);    // r does not divide q-1
    CHECK(make_params(19, 6, 3).rn() == 18);
}

TEST_CASE("residue sets") {
    CHECK(residue_set(make_params(5, 6, 2)) == std::vector<int64_t>{1, 3, 5, 7, 9, 11});
    CHECK(residue_set(make_params(19, 6, 3)) == std::vector<int64_t>{1, 4, 7, 10, 13, 16});
    CHECK(residue_set(make_params(7, 6, 1)) == std::vector<int64_t>{0, 1, 2, 3, 4, 5});
    CHECK(residue_set(make_params(7, 1, 1)) == std::vector<int64_t>{0});
}

TEST_CASE("cyclotomic cosets") {
    auto c1 = cyclotomic_cosets(make_params(19, 6, 3)).cosets;
    CHECK(c1 == std::vector<std::vector<int64_t>>{{1}, {4}, {7}, {10}, {13}, {16}});
    auto c2 = cyclotomic_cosets(make_params(5, 6, 2)).cosets;
    CHECK(c2 == std::vector<std::vector<int64_t>>{{1, 5}, {3}, {7, 11}, {9}});
    auto c3 = cyclotomic_cosets(make_params(7, 8, 2)).cosets;
    CHECK(c3 == std::vector<std::vector<int64_t>>{{1, 7}, {3, 5}, {9, 15}, {11, 13}});
}

TEST_CASE("multiplier candidates") {
    CHECK(multiplier_candidates(make_params(5, 6, 2)) == std::vector<int64_t>{1, 5, 7, 11});
    CHECK(multiplier_candidates(make_params(19, 6, 3)) == std::vector<int64_t>{1, 7, 13});
    CHECK(multiplier_candidates(make_params(7, 1, 1)) == std::vector<int64_t>{0});
    CHECK(is_multiplier_candidate(make_params(17, 8, 2), -1));
    CHECK(!is_multiplier_candidate(make_params(17, 8, 2), 2));
}

TEST_CASE("orbit lengths on cosets") {
    CHECK(orbit_lengths_on_cosets(make_params(19, 6, 3), 7) == std::vector<int64_t>{3, 3});
    CHECK(orbit_lengths_on_cosets(make_params(5, 6, 2), 1) == std::vector<int64_t>{1, 1, 1, 1});
    CHECK(orbit_lengths_on_cosets(make_params(17, 8, 2), -1) == std::vector<int64_t>{2, 2, 2, 2});
    CHECK_THROWS_WITH_AS(orbit_lengths_on_cosets(make_params(5, 6, 2), 2), doctest::Contains("BadMultiplier"), Error);
}

TEST_CASE("maximal m for a fixed multiplier") {
    Params p1 = make_params(19, 6, 3);
    CHECK(ms_bruteforce(p1, 7) == 3);
    CHECK(ms_closed_form(p1, 7) == 3);
    Params p2 = make_params(17, 8, 2);
    CHECK(ms_bruteforce(p2, 15) == 2);
    CHECK(ms_closed_form(p2, 15) == 2);
    CHECK(ms_closed_form(p2, -1) == 2);
    for (auto& p : {p1, p2}) CHECK(ms_closed_form(p, 1) == 1);
}

TEST_CASE("maximal m over all multipliers") {
    CHECK(m_closed_form(make_params(19, 6, 3)) == 3);
    CHECK(m_bruteforce(make_params(19, 6, 3)) == 3);
    CHECK(m_closed_form(make_params(17, 8, 2)) == 4);
    CHECK(m_bruteforce(make_params(17, 8, 2)) == 4);
    CHECK(m_closed_form(make_params(5, 6, 2)) == 2);
    CHECK(m_bruteforce(make_params(5, 6, 2)) == 2);
    CHECK(m_closed_form(make_params(7, 6, 1)) == 1);  // r = 1: no common prime
    CHECK_THROWS_WITH_AS(m_bruteforce(make_params(5, 6, 2), 5), doctest::Contains("SweepTooLarge"), Error);
}

TEST_CASE("closed form equals brute force on a unit-sized grid") {
    for (uint64_t q : {2, 3, 4, 5, 7, 8, 9, 11, 13}) {
        for (int64_t r = 1; r <= 60; ++r) {
            if ((q - 1) % static_cast<uint64_t>(r) != 0) continue;
            for (int64_t n = 1; r * n <= 60; ++n) {
                if (std::gcd(q, static_cast<uint64_t>(n)) != 1) continue;
                Params params = make_params(q, n, r);
                CAPTURE(q);
                CAPTURE(n);
                CAPTURE(r);
                CHECK(m_closed_form(params) == m_bruteforce(params));
                for (int64_t s : multiplier_candidates(params)) {
                    CAPTURE(s);
                    CHECK(ms_closed_form(params, s) == ms_bruteforce(params, s));
                }
            }
        }
    }
}

TEST_CASE("splitting construction") {
    Splitting sp = build_splitting(make_params(19, 6, 3), 7, 3);
    CHECK(sp.classes == std::vector<std::vector<int64_t>>{{1, 4}, {7, 10}, {13, 16}});

    Splitting sp1 = build_splitting(make_params(19, 6, 3), 7, 1);
    CHECK(sp1.classes == std::vector<std::vector<int64_t>>{{1, 4, 7, 10, 13, 16}});

    Splitting sp2 = build_splitting(make_params(17, 8, 2), 15, 2);
    CHECK(sp2.classes == std::vector<std::vector<int64_t>>{{1, 3, 5, 7}, {9, 11, 13, 15}});

    CHECK_THROWS_WITH_AS(build_splitting(make_params(19, 6, 3), 7, 2), doctest::Contains("NoSuchSplitting"), Error);
}

TEST_CASE("splitting validation rejects broken inputs") {
    Params params = make_params(19, 6, 3);
    Splitting bad{params, 3, 7, {{1, 7}, {4, 10}, {13, 16}}};  // classes not mu_q-stable orbit images
    CHECK_THROWS_AS(validate_splitting(bad), Error);
    Splitting wrong_m{params, 2, 7, {{1, 4}, {7, 10}}};
    CHECK_THROWS_AS(validate_splitting(wrong_m), Error);
}

TEST_CASE("standard p-adic splitting") {
    Splitting sp = padic_standard_splitting(make_params(19, 6, 3), 3);
    CHECK(sp.s == 7);
    CHECK(sp.classes == std::vector<std::vector<int64_t>>{{1, 4}, {7, 10}, {13, 16}});

    Splitting sp2 = padic_standard_splitting(make_params(17, 8, 2), 2);
    CHECK(sp2.s == 9);
    CHECK(sp2.classes == std::vector<std::vector<int64_t>>{{1, 3, 5, 7}, {9, 11, 13, 15}});

    CHECK_THROWS_WITH_AS(padic_standard_splitting(make_params(13, 4, 4), 2), doctest::Contains("HypothesisViolated"),
                         Error);
}

TEST_CASE("existence predicates") {
    CHECK(exists_duadic_mu_minus1(make_params(17, 8, 2)));
    CHECK(exists_duadic_mu_minus1(make_params(7, 8, 2)));   // nu_2(8) = 3 < nu_2(16) = 4
    CHECK(!exists_duadic_mu_minus1(make_params(7, 4, 2)));  // nu_2(8) = 3 = nu_2(8)
    CHECK(exists_p_adic(3, make_params(19, 6, 3)));
    CHECK(!exists_p_adic(3, make_params(19, 6, 1)));
    CHECK(exists_p_adic(2, make_params(5, 6, 2)));
    CHECK(exists_mu_s_p_odd(3, make_params(19, 6, 3), 7));
    CHECK(!exists_mu_s_p_odd(3, make_params(19, 6, 3), 1));
    CHECK(exists_duadic_mu_s(make_params(17, 8, 2), 5));
    CHECK(!exists_duadic_mu_s(make_params(17, 8, 2), 1));
    CHECK_THROWS_WITH_AS(exists_p_adic(4, make_params(19, 6, 3)), doctest::Contains("NotPrime"), Error);
}
