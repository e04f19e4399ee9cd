#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "polyadic/codes.hpp"

namespace polyadic {

struct SweepOptions {
    uint64_t qmax = 27;   // prime powers up to this bound
    int64_t rnmax = 120;  // rn cap for the parameter grid
    // structural sweep only: skip parameters whose splitting field exceeds
    // this cardinality
    uint64_t field_cap = uint64_t{1} << 40;
};

struct SweepResult {
    int64_t params_checked = 0;
    int64_t pairs_checked = 0;        // (params, s) combinations
    int64_t predicate_checks = 0;
    int64_t orbit_property_checks = 0;
    int64_t identity_checks = 0;      // factorization identity instances
    int64_t splittings_checked = 0;
    int64_t isometry_words_checked = 0;
    int64_t skipped_field_cap = 0;
    std::vector<std::string> failures;

    bool ok() const { return failures.empty(); }
};

/// All valid (q, n, r) with q a prime power <= qmax, rn <= rnmax.
std::vector<Params> parameter_grid(uint64_t qmax, int64_t rnmax);

/// Closed forms against brute force (both the global and per-multiplier
/// maxima), existence predicates against divisibility, divisor-lattice and
/// orbit-length properties.
SweepResult run_oracle_sweep(const SweepOptions& opt);

/// Field-level checks on the same grid: the coset factorization identity,
/// splitting construction, direct sums, the multiplier isometry action and
/// its weight preservation.
SweepResult run_structural_sweep(const SweepOptions& opt);

/// The coefficient map of mu_s-hat on a single word (X^{is} reduced modulo
/// X^n - lambda with lambda-power bookkeeping).
std::vector<FieldElement> multiplier_map_word(const std::vector<FieldElement>& word, const FieldElement& lambda,
                                              const Params& params, int64_t s);

}  // namespace polyadic
