#pragma once

#include <cstdint>
#include <vector>

#include "polyadic/valuations.hpp"

namespace polyadic {

/// Parameters (q, n, r) of a constacyclic family: q a prime power coprime to
/// the length n, r the order of lambda dividing q-1.
struct Params {
    uint64_t q = 0;
    int64_t n = 0;
    int64_t r = 0;

    int64_t rn() const { return r * n; }
};

/// Validates and normalizes; throws Error("BadParams").
Params make_params(uint64_t q, int64_t n, int64_t r);

/// The residue set 1 + r Z_rn = {1 + rk mod rn : 0 <= k < n}, sorted.
std::vector<int64_t> residue_set(const Params& params);

/// q-cyclotomic cosets inside 1 + r Z_rn, each sorted, ordered by smallest
/// element.
struct CosetPartition {
    Params params;
    std::vector<std::vector<int64_t>> cosets;
};
CosetPartition cyclotomic_cosets(const Params& params);

/// All s in [0, rn) with gcd(s, rn) = 1 and s = 1 mod r, sorted.
/// Degenerate rn = 1 yields {0}.
std::vector<int64_t> multiplier_candidates(const Params& params);

bool is_multiplier_candidate(const Params& params, int64_t s);

/// Lengths of the orbits of coset -> s*coset, ascending.
/// Throws Error("BadMultiplier") if s is not a candidate.
std::vector<int64_t> orbit_lengths_on_cosets(const Params& params, int64_t s);

/// Maximal m for the multiplier s, computed as the gcd of the coset orbit
/// lengths (the independent group-action route).
int64_t ms_bruteforce(const Params& params, int64_t s);

/// Maximal m for the multiplier s from the closed-form p-adic criteria.
/// Valuations of s-1 and s+1 are taken from the residue of s modulo
/// p^{nu_p(rn)}, with a zero residue treated as +infinity.
int64_t ms_closed_form(const Params& params, int64_t s);

/// Closed-form maximal m over all multipliers.
int64_t m_closed_form(const Params& params);

/// Brute-force maximal m: sweeps every candidate multiplier, checks the
/// divisor-lattice property, returns the maximum. Throws
/// Error("SweepTooLarge") when rn exceeds the cap.
int64_t m_bruteforce(const Params& params, int64_t rn_cap = 20000);

/// Ordered Type I m-adic splitting: classes[j] is X_j, s * X_j = X_{j+1 mod m}.
struct Splitting {
    Params params;
    int64_t m = 1;
    int64_t s = 1;
    std::vector<std::vector<int64_t>> classes;
};

/// Checks every Splitting invariant; throws Error("NotInvariant") /
/// Error("BadMultiplier") / Error("NoSuchSplitting") on violation.
void validate_splitting(const Splitting& sp);

/// Constructive splitting from the coset orbit walk (representative coset =
/// smallest minimum element; the mu_s^j image goes to class j mod m).
Splitting build_splitting(const Params& params, int64_t s, int64_t m);

/// The standard p-adic splitting X_j = {1 + ir : jn/p <= i < (j+1)n/p} with
/// s = 1 + rn/p; requires rn | q-1, nu_p(q-1) >= 2, p | r, p | n.
/// Throws Error("HypothesisViolated") otherwise.
Splitting padic_standard_splitting(const Params& params, int64_t p);

// ---- existence predicates (independent closed-form criteria) ----

/// p-adic codes exist (p prime, m = p).
bool exists_p_adic(int64_t p, const Params& params);
/// p-adic splittings given by mu_s exist, p an odd prime.
bool exists_mu_s_p_odd(int64_t p, const Params& params, int64_t s);
/// Duadic splittings given by mu_s exist.
bool exists_duadic_mu_s(const Params& params, int64_t s);
/// Duadic splittings given by mu_{-1} exist.
bool exists_duadic_mu_minus1(const Params& params);

}  // namespace polyadic
