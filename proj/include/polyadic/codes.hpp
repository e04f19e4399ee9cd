#pragma once

#include <optional>
#include <string>
#include <vector>

#include "polyadic/linalg.hpp"
#include "polyadic/poly.hpp"
#include "polyadic/splitting.hpp"

namespace polyadic {

enum class Provenance { Constacyclic, Grs, SubfieldSubcode, Dual };
const char* provenance_name(Provenance p);

/// Extra structure carried by constacyclic codes: C has check polynomial h,
/// generator g with g*h = X^n - lambda, and vanishes exactly at
/// {omega^i : i in zero_exponents}.
struct ConstacyclicData {
    Params params;
    FieldElement lambda;
    Poly generator;
    Poly check;
    std::vector<int64_t> zero_exponents;
};

struct LinearCode {
    FieldCtxPtr ctx;
    int64_t n = 0;
    int64_t k = 0;
    Matrix gen;  // k x n, full rank
    Provenance provenance = Provenance::Grs;
    std::optional<ConstacyclicData> constacyclic;
};

struct GrsSpec {
    FieldCtxPtr ctx;  // evaluation field (the big field for alternant parents)
    int64_t k = 0;
    std::vector<FieldElement> locator;      // pairwise distinct
    std::vector<FieldElement> multipliers;  // nonzero
};

inline constexpr int64_t kDefaultDistanceBudget = 20000000;

/// prod_{i in coset} (X - omega^i), computed in the big field and re-expressed
/// over GF(q). Throws Error("NotGaloisStable") if the coset is not mu_q-closed.
Poly coset_minimal_poly(const std::vector<int64_t>& coset, const RootData& rd);

/// X^n - lambda over the ground field.
Poly x_n_minus_lambda(const RootData& rd);

/// Constacyclic code with check polynomial prod M_Q over the cosets in
/// class_x; throws Error("NotInvariant") if class_x is not mu_q-invariant.
LinearCode code_from_class(const std::vector<int64_t>& class_x, const RootData& rd);

LinearCode grs_code(const GrsSpec& spec);

/// Euclidean dual (null space of the generator matrix).
LinearCode dual_code(const LinearCode& c);

/// G * G^T = 0 and 2k = n.
bool is_self_dual(const LinearCode& c);

bool code_equal(const LinearCode& a, const LinearCode& b);

std::vector<FieldElement> encode(const LinearCode& c, const std::vector<FieldElement>& message);
int64_t hamming_weight(const std::vector<FieldElement>& word);

/// Minimum Hamming weight by exhaustive message enumeration (one
/// representative per scalar class). Returns nullopt for the zero code;
/// throws Error("TooLarge") when q^k exceeds the budget.
std::optional<int64_t> min_distance_exhaustive(const LinearCode& c, int64_t budget = kDefaultDistanceBudget);

/// The ring isometry sum a_i X^i -> sum a_i X^{i s} on F_q[X]/(X^n - lambda),
/// with X^{is} = lambda^{floor(is/n)} X^{is mod n}. Requires a constacyclic
/// input; throws Error("BadMultiplier") if s is not a candidate.
LinearCode multiplier_isometry(const LinearCode& c, int64_t s);

/// Dimensions of the class codes add to n and their stacked rows have rank n.
bool direct_sum_check(const Splitting& sp, const RootData& rd);

/// Certificate that the constacyclic direct sum over the first k_classes
/// classes of the standard p-adic splitting equals the associated GRS code.
struct GrsEqualityReport {
    LinearCode code;
    GrsSpec grs;
    bool dimension_ok = false;
    bool zeros_ok = false;
    bool equal = false;
    int64_t certified_distance = 0;  // n - dim + 1 when equal
};
GrsEqualityReport grs_equals_constacyclic(const Params& params, int64_t p, int64_t k_classes);

/// MDS certificate: embedded generators of c lie in the parent GRS
/// (Error("NotSubcode") otherwise), dim c = n/2 = n - k_parent
/// (Error("DimMismatch") otherwise), hence d = n/2 + 1 exactly.
struct MdsCertificate {
    bool member_ok = false;
    bool dimension_ok = false;
    int64_t parent_dimension = 0;
    int64_t certified_distance = 0;
};
MdsCertificate certify_mds_via_grs(const LinearCode& c, const GrsSpec& parent, const Embedding& emb);

/// Codewords of big_code with all coordinates in the embedded subfield,
/// computed from the expanded parity system over the small field.
LinearCode subfield_subcode(const LinearCode& big_code, const Embedding& emb);

// ---- certified code families ----

struct CheckResult {
    std::string name;
    bool pass = false;
    std::string detail;
};

struct BuildReport {
    std::string family;
    Params params;
    Splitting splitting;
    LinearCode code;
    std::optional<int64_t> distance;            // exhaustive result, when run
    std::optional<int64_t> certified_distance;  // certificate result, when run
    std::string distance_mode;                  // "exhaustive" or "certified"
    std::vector<CheckResult> checks;

    bool all_pass() const;
};

/// Standard p-adic family: direct sum of the first k_classes class codes,
/// shown equal to a GRS code (dimension + zero checks).
BuildReport build_padic_family(uint64_t q, int64_t n, int64_t r, int64_t p, int64_t k_classes, int64_t budget);

/// Self-dual duadic negacyclic GRS codes of even length n with 2n | q-1.
BuildReport build_duadic_negacyclic(uint64_t q, int64_t n, int64_t budget);

/// Self-dual negacyclic alternant MDS family of length (q+1)/ell, ell odd.
/// CLI family tag: alternant57.
BuildReport build_negacyclic_alternant(uint64_t q, int64_t ell, int64_t budget);

/// Duadic constacyclic alternant MDS family of length q+1 with r = (q-1)/2,
/// for nu_2(q-1) >= 3. CLI family tag: alternant59.
BuildReport build_constacyclic_alternant(uint64_t q, int64_t budget);

}  // namespace polyadic
