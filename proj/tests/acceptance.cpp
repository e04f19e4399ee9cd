// Acceptance suite: runs every promised verification end to end and prints
// one pass/fail line per criterion. Exit status 0 only if all pass.

#include <chrono>
#include <cstdio>
#include <numeric>
#include <string>
#include <vector>

#include "polyadic/codes.hpp"
#include "polyadic/errors.hpp"
#include "polyadic/sweep.hpp"
#include "support/oracles.hpp"

using namespace polyadic;

namespace {

int g_failures = 0;

double seconds_since(std::chrono::steady_clock::time_point t0) {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

void report(int criterion, bool pass, const std::string& detail, double secs) {
    std::printf("[%s] criterion %d: %s (%.1fs)\n", pass ? "PASS" : "FAIL", criterion, detail.c_str(), secs);
    if (!pass) ++g_failures;
}

constexpr uint64_t kQMax = 27;
constexpr int64_t kRnMax = 120;

// 1. closed-form maximal m equals the multiplier-sweep brute force
void criterion1() {
    auto t0 = std::chrono::steady_clock::now();
    int64_t checked = 0, bad = 0;
    for (const Params& params : parameter_grid(kQMax, kRnMax)) {
        ++checked;
        if (m_closed_form(params) != m_bruteforce(params, kRnMax + 1)) ++bad;
    }
    report(1, bad == 0,
           "closed-form M vs brute force on " + std::to_string(checked) + " parameter sets, " +
               std::to_string(bad) + " mismatches",
           seconds_since(t0));
}

// 2. per-multiplier closed form equals the orbit-gcd brute force
void criterion2() {
    auto t0 = std::chrono::steady_clock::now();
    int64_t pairs = 0, bad = 0;
    for (const Params& params : parameter_grid(kQMax, kRnMax)) {
        for (int64_t s : multiplier_candidates(params)) {
            ++pairs;
            if (ms_closed_form(params, s) != ms_bruteforce(params, s)) ++bad;
        }
    }
    report(2, bad == 0,
           "closed-form M_s vs brute force on " + std::to_string(pairs) + " (params, s) pairs, " +
               std::to_string(bad) + " mismatches",
           seconds_since(t0));
}

// 3. two-adic quotient shape and image order match subgroup enumeration for
//    a = 2..12; every odd residue pair is covered, and residues congruent to
//    +-1 get extra integer lifts to exercise the capped-valuation boundary
void criterion3() {
    auto t0 = std::chrono::steady_clock::now();
    int64_t shape_checks = 0, order_checks = 0, bad = 0;
    for (int a = 2; a <= 12; ++a) {
        const int64_t mod = int64_t{1} << a;
        for (int64_t ur = 1; ur < mod; ur += 2) {
            auto mask = test_oracles::subgroup_mask(ur, a);
            auto info = test_oracles::quotient_info(ur, a);

            std::vector<int64_t> u_lifts{ur, ur + mod, ur - 2 * mod};
            for (int64_t u : u_lifts) {
                if (u == -1) continue;
                ++shape_checks;
                auto shape = two_adic_quotient_shape(u, a).cyclic_factors;
                int64_t product = 1, max_factor = 0;
                for (uint64_t f : shape) {
                    product *= static_cast<int64_t>(f);
                    max_factor = std::max<int64_t>(max_factor, static_cast<int64_t>(f));
                }
                if (product != info.size || max_factor != info.max_order) ++bad;
            }

            for (int64_t hr = 1; hr < mod; hr += 2) {
                int64_t expect = test_oracles::image_order_pow2(mask, hr, a);
                std::vector<int64_t> h_lifts{hr};
                if (hr == 1 || hr == mod - 1) {
                    h_lifts.push_back(hr + mod);
                    h_lifts.push_back(hr - 2 * mod);
                }
                if (hr == mod - 1) h_lifts.push_back(-1);  // the infinite-valuation lift
                for (int64_t u : u_lifts) {
                    if (u == -1) continue;
                    for (int64_t h : h_lifts) {
                        ++order_checks;
                        if (static_cast<int64_t>(two_adic_image_order(h, u, a)) != expect) ++bad;
                    }
                }
            }
        }
    }
    report(3, bad == 0,
           "two-adic lemmas vs enumeration: " + std::to_string(shape_checks) + " shape and " +
               std::to_string(order_checks) + " order checks, " + std::to_string(bad) + " mismatches",
           seconds_since(t0));
}

struct GrsRow {
    const char* label;
    uint64_t q;
    int64_t n, r, p, k;
    int64_t exp_n, exp_k, exp_d;
    const char* mode;  // requested verification mode
    int64_t budget;
};

// 4. the six certified GRS constructions at their reference parameters
bool criterion4() {
    auto t0 = std::chrono::steady_clock::now();
    const std::vector<GrsRow> rows = {
        {"(i)", 19, 6, 3, 3, 2, 6, 4, 3, "exhaustive", kDefaultDistanceBudget},
        {"(ii)", 64, 21, 3, 3, 1, 21, 7, 15, "certified", kDefaultDistanceBudget},
        {"(iii)", 17, 8, 2, 2, 1, 8, 4, 5, "exhaustive", kDefaultDistanceBudget},
        {"(iv)", 81, 40, 2, 2, 1, 40, 20, 21, "certified", kDefaultDistanceBudget},
        {"(v)", 25, 12, 2, 2, 1, 12, 6, 7, "exhaustive", 250000000},  // raised budget: 25^6 messages
        {"(vi)", 49, 24, 2, 2, 1, 24, 12, 13, "certified", kDefaultDistanceBudget},
    };
    bool pass = true;
    std::string detail = "GRS table:";
    for (const auto& row : rows) {
        BuildReport rep = build_padic_family(row.q, row.n, row.r, row.p, row.k, row.budget);
        int64_t d = rep.distance ? *rep.distance : rep.certified_distance.value_or(-1);
        bool ok = rep.all_pass() && rep.code.n == row.exp_n && rep.code.k == row.exp_k && d == row.exp_d &&
                  rep.distance_mode == row.mode;
        pass = pass && ok;
        detail += std::string(" ") + row.label + "[" + std::to_string(rep.code.n) + "," + std::to_string(rep.code.k) +
                  "," + std::to_string(d) + "]/" + rep.distance_mode + (ok ? "" : "=MISMATCH");
    }
    report(4, pass, detail, seconds_since(t0));
    return pass;
}

// 5. the five certified alternant constructions at their reference parameters
bool criterion5() {
    auto t0 = std::chrono::steady_clock::now();
    bool pass = true;
    std::string detail = "alternant table:";

    struct Alt57Row {
        const char* label;
        uint64_t q;
        int64_t ell, exp_n, exp_d;
    };
    for (const Alt57Row& row : {Alt57Row{"(i)", 9, 1, 10, 6}, Alt57Row{"(ii)", 5, 1, 6, 4}, Alt57Row{"(iii)", 7, 1, 8, 5}}) {
        BuildReport rep = build_negacyclic_alternant(row.q, row.ell, kDefaultDistanceBudget);
        bool ok = rep.all_pass() && rep.code.n == row.exp_n && rep.code.k == row.exp_n / 2 &&
                  rep.distance == row.exp_d && rep.distance_mode == "exhaustive" && is_self_dual(rep.code);
        pass = pass && ok;
        detail += std::string(" ") + row.label + "[" + std::to_string(rep.code.n) + "," + std::to_string(rep.code.k) +
                  "," + std::to_string(rep.distance.value_or(-1)) + "]self-dual/" + rep.distance_mode +
                  (ok ? "" : "=MISMATCH");
    }

    {
        BuildReport rep = build_constacyclic_alternant(9, kDefaultDistanceBudget);
        bool ok = rep.all_pass() && rep.code.n == 10 && rep.code.k == 5 && rep.distance == 6 &&
                  rep.distance_mode == "exhaustive";
        pass = pass && ok;
        detail += std::string(" (iv)[10,5,") + std::to_string(rep.distance.value_or(-1)) + "]/" + rep.distance_mode +
                  (ok ? "" : "=MISMATCH");
    }
    {
        BuildReport rep = build_constacyclic_alternant(17, kDefaultDistanceBudget);
        bool ok = rep.all_pass() && rep.code.n == 18 && rep.code.k == 9 && rep.certified_distance == 10 &&
                  rep.distance_mode == "certified";
        pass = pass && ok;
        detail += std::string(" (v)[18,9,") + std::to_string(rep.certified_distance.value_or(-1)) + "]/" +
                  rep.distance_mode + (ok ? "" : "=MISMATCH");
    }
    report(5, pass, detail, seconds_since(t0));
    return pass;
}

// 6. existence predicates agree with divisibility of the closed forms
void criterion6() {
    auto t0 = std::chrono::steady_clock::now();
    int64_t checks = 0, bad = 0;
    for (const Params& params : parameter_grid(kQMax, kRnMax)) {
        int64_t m_max = m_closed_form(params);
        for (int64_t p : {2, 3, 5, 7, 11, 13}) {
            ++checks;
            if (exists_p_adic(p, params) != (m_max % p == 0)) ++bad;
        }
        ++checks;
        bool mu_minus1_expected = params.r <= 2 && ms_closed_form(params, params.rn() - 1) % 2 == 0;
        if (exists_duadic_mu_minus1(params) != mu_minus1_expected) ++bad;

        for (int64_t s : multiplier_candidates(params)) {
            int64_t ms = ms_closed_form(params, s);
            ++checks;
            if (exists_duadic_mu_s(params, s) != (ms % 2 == 0)) ++bad;
            for (int64_t p : {3, 5, 7}) {
                if (params.n % p != 0 || params.r % p != 0) continue;
                ++checks;
                if (exists_mu_s_p_odd(p, params, s) != (ms % p == 0)) ++bad;
            }
        }
    }
    report(6, bad == 0,
           "existence predicates vs closed-form divisibility: " + std::to_string(checks) + " checks, " +
               std::to_string(bad) + " mismatches",
           seconds_since(t0));
}

// 7. structural checks: coset factorization identity, splitting validity,
//    direct sums, the isometry's cyclic action on class codes, and weight
//    preservation on sampled words
void criterion7() {
    auto t0 = std::chrono::steady_clock::now();
    SweepOptions opt;
    opt.qmax = kQMax;
    opt.rnmax = kRnMax;
    opt.field_cap = kMaxFieldSize;  // splitting fields beyond this are unsupported by the field layer
    SweepResult res = run_structural_sweep(opt);
    bool pass = res.ok() && res.params_checked >= 1000 && res.splittings_checked >= 200;
    report(7, pass,
           "identity on " + std::to_string(res.identity_checks) + " parameter sets (field cap skipped " +
               std::to_string(res.skipped_field_cap) + "), " + std::to_string(res.splittings_checked) +
               " splittings with direct sums, isometry step verified as X_j -> X_{j-1 mod m} (equals X_{j+1} for " +
               "m <= 2), weights preserved on " + std::to_string(res.isometry_words_checked) + " words; " +
               std::to_string(res.failures.size()) + " failures",
           seconds_since(t0));
    for (size_t i = 0; i < res.failures.size() && i < 5; ++i)
        std::printf("         failure: %s\n", res.failures[i].c_str());
}

}  // namespace

int main() {
    std::printf("acceptance suite: parameter grid q <= %llu (prime powers), rn <= %lld\n",
                static_cast<unsigned long long>(kQMax), static_cast<long long>(kRnMax));
    auto t0 = std::chrono::steady_clock::now();
    try {
        criterion1();
        criterion2();
        criterion3();
        bool tables_grs = criterion4();
        bool tables_alt = criterion5();
        criterion6();
        criterion7();
        // 8. the certified tables above are the complete quantitative surface,
        //    reproduced at their reference scale (criteria 4 and 5)
        report(8, tables_grs && tables_alt,
               "tables reproduced at full reference parameters, no scaled-down substitutes", 0.0);
    } catch (const Error& e) {
        std::printf("[FAIL] unexpected error: %s\n", e.what());
        ++g_failures;
    }
    std::printf("RESULT: %d criterion failures (total %.1fs)\n", g_failures, seconds_since(t0));
    return g_failures == 0 ? 0 : 1;
}
