#include "polyadic/splitting.hpp"

#include <algorithm>
#include <numeric>
#include <unordered_map>
#include <unordered_set>

#include "polyadic/errors.hpp"
#include "polyadic/gf.hpp"

namespace polyadic {

Params make_params(uint64_t q, int64_t n, int64_t r) {
    if (q < 2 || n < 1 || r < 1) fail("BadParams", "need q >= 2, n >= 1, r >= 1");
    if (q > (uint64_t{1} << 62)) fail("BadParams", "q out of supported range");
    Factorization qf = factorize(q);
    if (qf.size() != 1) fail("BadParams", std::to_string(q) + " is not a prime power");
    if (std::gcd(q, static_cast<uint64_t>(n)) != 1) fail("BadParams", "gcd(q, n) must be 1");
    if ((q - 1) % static_cast<uint64_t>(r) != 0) fail("BadParams", "r must divide q - 1");
    if (n > (int64_t{1} << 31) / r) fail("BadParams", "rn exceeds supported range");
    return Params{q, n, r};
}

std::vector<int64_t> residue_set(const Params& params) {
    int64_t rn = params.rn();
    std::vector<int64_t> out;
    out.reserve(static_cast<size_t>(params.n));
    for (int64_t k = 0; k < params.n; ++k) out.push_back(mod_floor(1 + params.r * k, rn));
    std::sort(out.begin(), out.end());
    return out;
}

CosetPartition cyclotomic_cosets(const Params& params) {
    int64_t rn = params.rn();
    int64_t qm = static_cast<int64_t>(params.q % static_cast<uint64_t>(rn));
    std::vector<int64_t> residues = residue_set(params);
    std::unordered_set<int64_t> seen;
    CosetPartition part{params, {}};
    for (int64_t x : residues) {
        if (seen.count(x)) continue;
        std::vector<int64_t> coset;
        int64_t y = x;
        do {
            coset.push_back(y);
            seen.insert(y);
            y = mod_floor(y * qm, rn);
        } while (y != x);
        std::sort(coset.begin(), coset.end());
        part.cosets.push_back(std::move(coset));
    }
    // residues ascend, so cosets are already ordered by smallest element
    return part;
}

std::vector<int64_t> multiplier_candidates(const Params& params) {
    int64_t rn = params.rn();
    if (rn == 1) return {0};
    std::vector<int64_t> out;
    for (int64_t s = 0; s < rn; ++s)
        if (gcd_i64(s, rn) == 1 && s % params.r == 1 % params.r) out.push_back(s);
    return out;
}

bool is_multiplier_candidate(const Params& params, int64_t s) {
    int64_t rn = params.rn();
    if (rn == 1) return true;
    int64_t lift = mod_floor(s, rn);
    return gcd_i64(lift, rn) == 1 && lift % params.r == 1 % params.r;
}

std::vector<int64_t> orbit_lengths_on_cosets(const Params& params, int64_t s) {
    if (!is_multiplier_candidate(params, s))
        fail("BadMultiplier", std::to_string(s) + " is not a splitting multiplier candidate");
    int64_t rn = params.rn();
    int64_t lift = mod_floor(s, rn);
    CosetPartition part = cyclotomic_cosets(params);
    std::unordered_map<int64_t, size_t> coset_of;
    for (size_t i = 0; i < part.cosets.size(); ++i)
        for (int64_t x : part.cosets[i]) coset_of[x] = i;
    std::vector<int64_t> lengths;
    std::vector<bool> visited(part.cosets.size(), false);
    for (size_t i = 0; i < part.cosets.size(); ++i) {
        if (visited[i]) continue;
        int64_t len = 0;
        size_t j = i;
        do {
            visited[j] = true;
            ++len;
            j = coset_of.at(mod_floor(part.cosets[j][0] * lift, rn));
        } while (j != i);
        lengths.push_back(len);
    }
    std::sort(lengths.begin(), lengths.end());
    return lengths;
}

int64_t ms_bruteforce(const Params& params, int64_t s) {
    std::vector<int64_t> lengths = orbit_lengths_on_cosets(params, s);
    int64_t g = 0;
    for (int64_t len : lengths) g = std::gcd(g, len);
    return g;
}

namespace {

// Valuation |nu_p(t)| of a residue t modulo p^a, with t = 0 read as +infinity
// (the formulas cap everything at nu_p(rn), so larger lifts are immaterial).
ExtVal capped_abs_val(int64_t p, int64_t t_mod_pa) {
    if (t_mod_pa == 0) return ExtVal::pos_inf();
    int64_t v = 0;
    while (t_mod_pa % p == 0) {
        t_mod_pa /= p;
        ++v;
    }
    return ExtVal(v);
}

int64_t ipow(int64_t b, int64_t e) {
    int64_t r = 1;
    while (e--) r *= b;
    return r;
}

}  // namespace

int64_t ms_closed_form(const Params& params, int64_t s) {
    if (!is_multiplier_candidate(params, s))
        fail("BadMultiplier", std::to_string(s) + " is not a splitting multiplier candidate");
    int64_t rn = params.rn();
    if (rn == 1) return 1;
    int64_t lift = mod_floor(s, rn);
    int64_t result = 1;
    for (auto [pu, e_common] : factorize(static_cast<uint64_t>(gcd_i64(params.n, params.r)))) {
        (void)e_common;
        int64_t p = static_cast<int64_t>(pu);
        int64_t a = nu_p(pu, rn).finite();
        int64_t pa = ipow(p, a);
        ExtVal av(a);
        ExtVal svm = capped_abs_val(p, mod_floor(lift - 1, pa));
        ExtVal qvm = nu_p(pu, BigInt::from_uint64(params.q - 1));
        ExtVal v(0);
        if (p != 2) {
            v = ExtVal::max(ExtVal::min(qvm, av) - svm, ExtVal(0));
        } else {
            ExtVal svp = capped_abs_val(p, mod_floor(lift + 1, pa));
            ExtVal qvp = nu_p(2, BigInt::from_uint64(params.q + 1));
            bool q_ge2 = qvm >= ExtVal(2);
            bool s_ge2 = svm >= ExtVal(2);
            if (q_ge2 && s_ge2)
                v = ExtVal::max(ExtVal::min(qvm, av) - svm, ExtVal(0));
            else if (!q_ge2 && s_ge2)
                v = ExtVal::max(ExtVal::min(qvp + ExtVal(1), av) - svm, ExtVal(0));
            else if (q_ge2 && !s_ge2)
                v = ExtVal::max(ExtVal::min(qvm, av) - svp, ExtVal(1));
            else
                v = svp == qvp ? ExtVal(0)
                               : ExtVal::max(ExtVal::min(qvp + ExtVal(1), av) - ExtVal::min(svp, qvp), ExtVal(0));
        }
        result *= ipow(p, v.finite());
    }
    return result;
}

int64_t m_closed_form(const Params& params) {
    int64_t result = 1;
    if (params.rn() == 1) return 1;
    for (auto [pu, e_common] : factorize(static_cast<uint64_t>(gcd_i64(params.n, params.r)))) {
        (void)e_common;
        int64_t p = static_cast<int64_t>(pu);
        int64_t vr = nu_p(pu, params.r).finite();
        int64_t vn = nu_p(pu, params.n).finite();
        int64_t vqm = nu_p(pu, BigInt::from_uint64(params.q - 1)).finite();
        int64_t v = 0;
        if (p != 2 || vr >= 2) {
            v = std::min(vqm - vr, vn);
        } else if (vqm >= 2) {
            v = std::max(std::min(vqm - 2, vn - 1), int64_t{1});
        } else {
            int64_t vqp = nu_p(2, BigInt::from_uint64(params.q + 1)).finite();
            v = std::min(vqp - 1, vn - 1);
        }
        result *= ipow(p, v);
    }
    return result;
}

int64_t m_bruteforce(const Params& params, int64_t rn_cap) {
    if (params.rn() > rn_cap)
        fail("SweepTooLarge", "rn = " + std::to_string(params.rn()) + " exceeds the brute-force cap");
    int64_t best = 1;
    std::vector<int64_t> all;
    for (int64_t s : multiplier_candidates(params)) {
        int64_t ms = ms_bruteforce(params, s);
        all.push_back(ms);
        best = std::max(best, ms);
    }
    for (int64_t ms : all)
        if (best % ms != 0)
            fail("OracleViolation", "M_s values do not form a divisor lattice under M = " + std::to_string(best));
    return best;
}

void validate_splitting(const Splitting& sp) {
    const Params& params = sp.params;
    int64_t rn = params.rn();
    if (sp.m < 1 || static_cast<int64_t>(sp.classes.size()) != sp.m)
        fail("NotInvariant", "class count differs from m");
    if (!is_multiplier_candidate(params, sp.s)) fail("BadMultiplier", "s is not a candidate multiplier");
    int64_t lift = mod_floor(sp.s, std::max<int64_t>(rn, 1));

    std::vector<int64_t> all;
    for (const auto& cls : sp.classes) all.insert(all.end(), cls.begin(), cls.end());
    std::sort(all.begin(), all.end());
    if (all != residue_set(params)) fail("NotInvariant", "classes do not partition 1 + r Z_rn");

    int64_t qm = static_cast<int64_t>(params.q % static_cast<uint64_t>(rn));
    for (int64_t j = 0; j < sp.m; ++j) {
        std::unordered_set<int64_t> cls(sp.classes[j].begin(), sp.classes[j].end());
        for (int64_t x : sp.classes[j])
            if (!cls.count(mod_floor(x * qm, rn))) fail("NotInvariant", "class is not mu_q-invariant");
        std::vector<int64_t> image;
        image.reserve(sp.classes[j].size());
        for (int64_t x : sp.classes[j]) image.push_back(mod_floor(x * lift, rn));
        std::sort(image.begin(), image.end());
        std::vector<int64_t> next = sp.classes[(j + 1) % sp.m];
        std::sort(next.begin(), next.end());
        if (image != next) fail("NotInvariant", "mu_s does not advance class " + std::to_string(j));
    }
}

Splitting build_splitting(const Params& params, int64_t s, int64_t m) {
    if (m < 1) fail("BadParams", "m must be >= 1");
    int64_t ms = ms_bruteforce(params, s);
    if (ms % m != 0)
        fail("NoSuchSplitting", "m = " + std::to_string(m) + " does not divide M_s = " + std::to_string(ms));
    int64_t rn = params.rn();
    int64_t lift = mod_floor(s, std::max<int64_t>(rn, 1));
    CosetPartition part = cyclotomic_cosets(params);
    std::unordered_map<int64_t, size_t> coset_of;
    for (size_t i = 0; i < part.cosets.size(); ++i)
        for (int64_t x : part.cosets[i]) coset_of[x] = i;

    Splitting sp{params, m, lift, std::vector<std::vector<int64_t>>(static_cast<size_t>(m))};
    std::vector<bool> visited(part.cosets.size(), false);
    for (size_t i = 0; i < part.cosets.size(); ++i) {
        if (visited[i]) continue;
        // cosets are ordered by smallest element, so i is the orbit representative
        size_t j = i;
        int64_t step = 0;
        do {
            visited[j] = true;
            auto& cls = sp.classes[static_cast<size_t>(step % m)];
            cls.insert(cls.end(), part.cosets[j].begin(), part.cosets[j].end());
            ++step;
            j = coset_of.at(mod_floor(part.cosets[j][0] * lift, rn));
        } while (j != i);
    }
    for (auto& cls : sp.classes) std::sort(cls.begin(), cls.end());
    validate_splitting(sp);
    return sp;
}

Splitting padic_standard_splitting(const Params& params, int64_t p) {
    if (p < 2 || !is_prime_u64(static_cast<uint64_t>(p))) fail("BadParams", "p must be prime");
    int64_t rn = params.rn();
    if ((params.q - 1) % static_cast<uint64_t>(rn) != 0)
        fail("HypothesisViolated", "rn must divide q - 1");
    if (nu_p(static_cast<uint64_t>(p), BigInt::from_uint64(params.q - 1)) < ExtVal(2))
        fail("HypothesisViolated", "nu_p(q - 1) >= 2 required");
    if (params.r % p != 0) fail("HypothesisViolated", "p must divide r");
    if (params.n % p != 0) fail("HypothesisViolated", "p must divide n");

    int64_t block = params.n / p;
    Splitting sp{params, p, 1 + rn / p, std::vector<std::vector<int64_t>>(static_cast<size_t>(p))};
    for (int64_t j = 0; j < p; ++j)
        for (int64_t i = j * block; i < (j + 1) * block; ++i)
            sp.classes[static_cast<size_t>(j)].push_back(mod_floor(1 + i * params.r, rn));
    for (auto& cls : sp.classes) std::sort(cls.begin(), cls.end());
    validate_splitting(sp);
    return sp;
}

bool exists_p_adic(int64_t p, const Params& params) {
    if (p < 2 || !is_prime_u64(static_cast<uint64_t>(p))) fail("NotPrime", "p must be prime");
    uint64_t pu = static_cast<uint64_t>(p);
    int64_t vn = nu_p(pu, params.n).finite();
    int64_t vr = nu_p(pu, params.r).finite();
    int64_t vqm = nu_p(pu, BigInt::from_uint64(params.q - 1)).finite();
    if (vn >= 1 && vqm > vr && vr >= 1) return true;
    if (p == 2) {
        int64_t vqp = nu_p(2, BigInt::from_uint64(params.q + 1)).finite();
        if (vr == 1 && std::min(vqp, vn) >= 2) return true;
    }
    return false;
}

bool exists_mu_s_p_odd(int64_t p, const Params& params, int64_t s) {
    if (p == 2 || p < 2 || !is_prime_u64(static_cast<uint64_t>(p))) fail("BadParams", "p must be an odd prime");
    if (!is_multiplier_candidate(params, s)) fail("BadMultiplier", "s is not a candidate multiplier");
    uint64_t pu = static_cast<uint64_t>(p);
    if (params.n % p != 0 || params.r % p != 0) return false;
    int64_t rn = params.rn();
    int64_t a = nu_p(pu, rn).finite();
    ExtVal svm = capped_abs_val(p, mod_floor(mod_floor(s, rn) - 1, ipow(p, a)));
    ExtVal qvm = nu_p(pu, BigInt::from_uint64(params.q - 1));
    return svm < ExtVal::min(qvm, ExtVal(a));
}

bool exists_duadic_mu_s(const Params& params, int64_t s) {
    if (!is_multiplier_candidate(params, s)) fail("BadMultiplier", "s is not a candidate multiplier");
    if (params.n % 2 != 0 || params.r % 2 != 0) return false;
    int64_t rn = params.rn();
    int64_t a = nu_p(2, rn).finite();
    int64_t pa = ipow(2, a);
    ExtVal av(a);
    ExtVal svm = capped_abs_val(2, mod_floor(mod_floor(s, rn) - 1, pa));
    ExtVal svp = capped_abs_val(2, mod_floor(mod_floor(s, rn) + 1, pa));
    ExtVal qvm = nu_p(2, BigInt::from_uint64(params.q - 1));
    ExtVal qvp = nu_p(2, BigInt::from_uint64(params.q + 1));
    if (qvm > svm && av > svm) return true;                                                     // (i)
    if (qvm == ExtVal(1) && svm > ExtVal(1) && qvp + ExtVal(1) > svm && av > svm) return true;  // (ii)
    if (qvm == ExtVal(1) && svm == ExtVal(1) && svp > qvp && av > qvp) return true;             // (iii)
    if (qvm == ExtVal(1) && svm == ExtVal(1) && svp < qvp && svp < av) return true;             // (iv)
    return false;
}

bool exists_duadic_mu_minus1(const Params& params) {
    if (params.r != 2 || params.n % 2 != 0) return false;
    int64_t vqm = nu_p(2, BigInt::from_uint64(params.q - 1)).finite();
    if (vqm >= 2) return true;
    int64_t vqp = nu_p(2, BigInt::from_uint64(params.q + 1)).finite();
    return vqp < nu_p(2, params.rn()).finite();
}

}  // namespace polyadic
