#include "polyadic/sweep.hpp"

#include <algorithm>
#include <numeric>
#include <random>
#include <unordered_map>

#include "polyadic/errors.hpp"

namespace polyadic {

std::vector<Params> parameter_grid(uint64_t qmax, int64_t rnmax) {
    std::vector<Params> grid;
    for (uint64_t q = 2; q <= qmax; ++q) {
        if (factorize(q).size() != 1) continue;
        for (int64_t r = 1; r <= rnmax; ++r) {
            if ((q - 1) % static_cast<uint64_t>(r) != 0) continue;
            for (int64_t n = 1; r * n <= rnmax; ++n) {
                if (std::gcd(q, static_cast<uint64_t>(n)) != 1) continue;
                grid.push_back(Params{q, n, r});
            }
        }
    }
    return grid;
}

std::vector<FieldElement> multiplier_map_word(const std::vector<FieldElement>& word, const FieldElement& lambda,
                                              const Params& params, int64_t s) {
    const int64_t n = params.n;
    const int64_t lift = mod_floor(s, params.rn());
    std::vector<FieldElement> out(word.size(), lambda.ctx()->zero());
    for (int64_t i = 0; i < n; ++i) {
        const FieldElement& a = word[static_cast<size_t>(i)];
        if (a.is_zero()) continue;
        int64_t e = i * lift;
        size_t target = static_cast<size_t>(e % n);
        out[target] = out[target] + a * lambda.pow(e / n);
    }
    return out;
}

namespace {

std::string params_tag(const Params& p) {
    return "(q=" + std::to_string(p.q) + ", n=" + std::to_string(p.n) + ", r=" + std::to_string(p.r) + ")";
}

std::vector<int64_t> residue_orbit_lengths(const Params& params, int64_t s) {
    int64_t rn = params.rn();
    int64_t lift = mod_floor(s, rn);
    std::vector<int64_t> lengths;
    std::unordered_map<int64_t, bool> visited;
    for (int64_t x : residue_set(params)) visited[x] = false;
    for (auto& [x, seen] : visited) {
        if (seen) continue;
        int64_t len = 0, y = x;
        do {
            visited[y] = true;
            ++len;
            y = mod_floor(y * lift, rn);
        } while (y != x);
        lengths.push_back(len);
    }
    return lengths;
}

std::vector<int64_t> divisors_of(int64_t m) {
    std::vector<int64_t> out;
    for (int64_t d = 1; d * d <= m; ++d) {
        if (m % d) continue;
        out.push_back(d);
        if (d != m / d) out.push_back(m / d);
    }
    std::sort(out.begin(), out.end());
    return out;
}

}  // namespace

SweepResult run_oracle_sweep(const SweepOptions& opt) {
    SweepResult res;
    static const int64_t kSmallPrimes[] = {2, 3, 5, 7, 11, 13};
    for (const Params& params : parameter_grid(opt.qmax, opt.rnmax)) {
        ++res.params_checked;
        int64_t m_cf = m_closed_form(params);
        int64_t m_bf = m_bruteforce(params, opt.rnmax + 1);
        if (m_cf != m_bf)
            res.failures.push_back("M mismatch at " + params_tag(params) + ": closed " + std::to_string(m_cf) +
                                   " vs brute " + std::to_string(m_bf));

        for (int64_t p : kSmallPrimes) {
            ++res.predicate_checks;
            if (exists_p_adic(p, params) != (m_cf % p == 0))
                res.failures.push_back("p-adic predicate mismatch at " + params_tag(params) +
                                       ", p=" + std::to_string(p));
        }

        int64_t minus_one = params.rn() - 1;
        bool mu_minus1_expected = params.r <= 2 && ms_closed_form(params, minus_one) % 2 == 0;
        ++res.predicate_checks;
        if (exists_duadic_mu_minus1(params) != mu_minus1_expected)
            res.failures.push_back("mu_{-1} predicate mismatch at " + params_tag(params));

        for (int64_t s : multiplier_candidates(params)) {
            ++res.pairs_checked;
            int64_t ms_cf = ms_closed_form(params, s);
            int64_t ms_bf = ms_bruteforce(params, s);
            if (ms_cf != ms_bf)
                res.failures.push_back("M_s mismatch at " + params_tag(params) + ", s=" + std::to_string(s) +
                                       ": closed " + std::to_string(ms_cf) + " vs brute " + std::to_string(ms_bf));
            if (m_bf % ms_bf != 0)
                res.failures.push_back("divisor-lattice violation at " + params_tag(params) +
                                       ", s=" + std::to_string(s));

            ++res.predicate_checks;
            if (exists_duadic_mu_s(params, s) != (ms_cf % 2 == 0))
                res.failures.push_back("duadic predicate mismatch at " + params_tag(params) +
                                       ", s=" + std::to_string(s));
            for (int64_t p : {3, 5, 7, 11, 13}) {
                if (params.n % p == 0 && params.r % p == 0) {
                    ++res.predicate_checks;
                    if (exists_mu_s_p_odd(p, params, s) != (ms_cf % p == 0))
                        res.failures.push_back("odd-p predicate mismatch at " + params_tag(params) + ", s=" +
                                               std::to_string(s) + ", p=" + std::to_string(p));
                }
            }

            // orbit lengths away from the common primes must not all be multiples
            auto lengths = residue_orbit_lengths(params, s);
            for (int64_t p : kSmallPrimes) {
                if (params.n % p == 0 && params.r % p == 0) continue;
                ++res.orbit_property_checks;
                bool found = std::any_of(lengths.begin(), lengths.end(), [&](int64_t len) { return len % p != 0; });
                if (!found)
                    res.failures.push_back("orbit-length property failed at " + params_tag(params) + ", s=" +
                                           std::to_string(s) + ", p=" + std::to_string(p));
            }
        }
    }
    return res;
}

SweepResult run_structural_sweep(const SweepOptions& opt) {
    SweepResult res;
    std::mt19937_64 rng(0x9e3779b97f4a7c15ull);
    for (const Params& params : parameter_grid(opt.qmax, opt.rnmax)) {
        // skip parameters whose splitting field does not fit the cap
        uint64_t p = factorize(params.q)[0].first;
        int a = factorize(params.q)[0].second;
        uint64_t e = params.rn() == 1
                         ? 1
                         : unit_order(static_cast<int64_t>(params.q % static_cast<uint64_t>(params.rn())),
                                      static_cast<uint64_t>(params.rn()));
        BigInt field_size = BigInt::pow(BigInt(static_cast<int64_t>(p)), static_cast<uint64_t>(a) * e);
        if (field_size > BigInt::from_uint64(opt.field_cap)) {
            ++res.skipped_field_cap;
            continue;
        }
        ++res.params_checked;

        RootData rd = make_root_data(params.q, params.n, params.r);
        if (element_order(rd.omega) != static_cast<uint64_t>(params.rn()) ||
            element_order(rd.lambda) != static_cast<uint64_t>(params.r) ||
            rd.omega_pow(params.n) != rd.embedding->embed(rd.lambda))
            res.failures.push_back("root data invariants failed at " + params_tag(params));
        CosetPartition cosets = cyclotomic_cosets(params);
        Poly prod(rd.ground, {rd.ground->one()});
        for (const auto& coset : cosets.cosets) prod = prod * coset_minimal_poly(coset, rd);
        ++res.identity_checks;
        if (prod != x_n_minus_lambda(rd))
            res.failures.push_back("coset factorization identity failed at " + params_tag(params));

        // splittings for a maximizing multiplier
        int64_t best_m = 1, best_s = 1;
        for (int64_t s : multiplier_candidates(params)) {
            int64_t ms = ms_bruteforce(params, s);
            if (ms > best_m) {
                best_m = ms;
                best_s = s;
            }
        }
        if (best_m == 1) continue;

        for (int64_t m : divisors_of(best_m)) {
            if (m == 1) continue;
            Splitting sp = build_splitting(params, best_s, m);
            ++res.splittings_checked;
            if (!direct_sum_check(sp, rd)) {
                res.failures.push_back("direct sum check failed at " + params_tag(params) + ", m=" + std::to_string(m));
                continue;
            }
            std::vector<LinearCode> class_codes;
            for (const auto& cls : sp.classes) class_codes.push_back(code_from_class(cls, rd));
            for (int64_t j = 0; j < m; ++j) {
                LinearCode img = multiplier_isometry(class_codes[static_cast<size_t>(j)], best_s);
                // mu_s-hat sends the class-j code to the class-(j-1) code: the
                // word map composes with evaluation as c(omega^{st}), so the
                // retained exponent set transforms by s^{-1}
                int64_t expect = (j + m - 1) % m;
                if (!code_equal(img, class_codes[static_cast<size_t>(expect)])) {
                    res.failures.push_back("isometry step mismatch at " + params_tag(params) + ", m=" +
                                           std::to_string(m) + ", j=" + std::to_string(j));
                    continue;
                }
            }
            // weight preservation on sampled codewords of X_0
            const LinearCode& c0 = class_codes[0];
            if (c0.k > 0) {
                for (int t = 0; t < 100; ++t) {
                    std::vector<FieldElement> msg;
                    for (int64_t i = 0; i < c0.k; ++i)
                        msg.push_back(c0.ctx->from_index(rng() % c0.ctx->size().to_uint64()));
                    std::vector<FieldElement> word = encode(c0, msg);
                    std::vector<FieldElement> mapped = multiplier_map_word(word, rd.lambda, params, best_s);
                    ++res.isometry_words_checked;
                    if (hamming_weight(word) != hamming_weight(mapped)) {
                        res.failures.push_back("isometry weight mismatch at " + params_tag(params));
                        break;
                    }
                }
            }
        }
    }
    return res;
}

}  // namespace polyadic
