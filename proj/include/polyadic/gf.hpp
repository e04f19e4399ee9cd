#pragma once

#include <cstdint>
#include <memory>
#include <vector>

#include "polyadic/bigint.hpp"
#include "polyadic/valuations.hpp"

namespace polyadic {

class FieldCtx;
using FieldCtxPtr = std::shared_ptr<const FieldCtx>;

/// Element of GF(p^k): dense coefficient vector over Z_p in the power basis
/// of the context's canonical root (coefficient of X^0 first).
class FieldElement {
  public:
    FieldElement() = default;

    const FieldCtxPtr& ctx() const { return ctx_; }
    const std::vector<uint64_t>& coeffs() const { return coeffs_; }
    bool is_zero() const;
    bool valid() const { return ctx_ != nullptr; }

    /// Base-p little-endian packing of the coefficient vector.
    uint64_t index() const;

    FieldElement operator-() const;
    FieldElement inv() const;
    FieldElement pow(const BigInt& e) const;
    FieldElement pow(int64_t e) const { return pow(BigInt(e)); }

    friend FieldElement operator+(const FieldElement& a, const FieldElement& b);
    friend FieldElement operator-(const FieldElement& a, const FieldElement& b);
    friend FieldElement operator*(const FieldElement& a, const FieldElement& b);
    friend FieldElement operator/(const FieldElement& a, const FieldElement& b);
    friend bool operator==(const FieldElement& a, const FieldElement& b);
    friend bool operator!=(const FieldElement& a, const FieldElement& b) { return !(a == b); }

  private:
    friend class FieldCtx;
    FieldElement(FieldCtxPtr ctx, std::vector<uint64_t> coeffs)
        : ctx_(std::move(ctx)), coeffs_(std::move(coeffs)) {}

    FieldCtxPtr ctx_;
    std::vector<uint64_t> coeffs_;
};

/// Immutable context for GF(p^k). The modulus is the first monic irreducible
/// of degree k (coefficient vectors ordered with the constant term varying
/// fastest) whose root class generates the unit group; the generator is the
/// residue class of X.
class FieldCtx : public std::enable_shared_from_this<FieldCtx> {
  public:
    /// Cached constructor; throws Error("NotPrime") / Error("TooLarge").
    static FieldCtxPtr create(uint64_t p, int k);

    uint64_t p() const { return p_; }
    int k() const { return k_; }
    const BigInt& size() const { return size_; }        // p^k
    uint64_t order_u64() const { return order_; }       // p^k - 1
    const Factorization& order_factors() const { return order_factors_; }
    /// Non-leading modulus coefficients, constant term first (length k).
    const std::vector<uint64_t>& modulus() const { return modulus_; }

    FieldElement zero() const;
    FieldElement one() const;
    FieldElement generator() const;
    FieldElement from_coeffs(std::vector<uint64_t> coeffs) const;
    FieldElement from_index(uint64_t index) const;
    /// Constant (prime-subfield) element from an integer residue.
    FieldElement from_int(int64_t value) const;

  private:
    FieldCtx() = default;
    friend class FieldElement;
    friend FieldElement operator*(const FieldElement& a, const FieldElement& b);

    std::vector<uint64_t> mul_raw(const std::vector<uint64_t>& a, const std::vector<uint64_t>& b) const;

    uint64_t p_ = 0;
    int k_ = 0;
    BigInt size_;
    uint64_t order_ = 0;
    Factorization order_factors_;
    std::vector<uint64_t> modulus_;
    std::vector<uint64_t> generator_;
};

/// Exact multiplicative order; throws Error("ZeroElement") on 0.
uint64_t element_order(const FieldElement& x);

/// Membership in the subfield of degree sub_degree over the prime field
/// (tests x^{p^sub_degree} == x). Throws Error("BadSubfield") if sub_degree
/// does not divide k.
bool in_subfield(const FieldElement& x, int sub_degree);

/// Ring embedding GF(p^a) -> GF(p^{a*e}) fixing the prime field, pinned by
/// sending the small generator to the root of the small modulus with the
/// smallest discrete log relative to the big generator.
class Embedding {
  public:
    /// Cached factory; throws Error("BadSubfield") / Error("FieldMismatch").
    static std::shared_ptr<const Embedding> get(const FieldCtxPtr& small, const FieldCtxPtr& big);

    const FieldCtxPtr& small() const { return small_; }
    const FieldCtxPtr& big() const { return big_; }
    int e() const { return e_; }

    FieldElement embed(const FieldElement& y) const;
    /// Inverse of embed on its image; throws Error("NotGaloisStable") otherwise.
    FieldElement pullback(const FieldElement& x) const;
    bool contains(const FieldElement& x) const;
    /// Coordinates of x over the small field in the basis {G^t, t < e}
    /// (G = big generator): x = sum_t embed(out[t]) * G^t.
    std::vector<FieldElement> decompose(const FieldElement& x) const;

  private:
    Embedding() = default;
    FieldCtxPtr small_, big_;
    int e_ = 1;
    FieldElement rho_;                        // image of the small generator
    std::vector<FieldElement> rho_powers_;    // rho^i, i < a
    // row-reduction transform for pullback: solves M c = coords(x)
    std::vector<std::vector<uint64_t>> pull_ops_;   // K x K over GF(p)
    std::vector<int> pull_pivot_row_of_col_;        // length a
    std::vector<std::vector<uint64_t>> basis_inv_;  // K x K inverse for decompose
};

/// Root system for (q, n, r): e = ord(q mod rn), omega in GF(q^e) of order rn
/// with omega^n equal to the embedded lambda = g_q^{(q-1)/r}.
struct RootData {
    uint64_t q = 0;
    int64_t n = 0;
    int64_t r = 0;
    uint64_t e = 1;
    FieldCtxPtr ground;  // GF(q)
    FieldCtxPtr big;     // GF(q^e)
    std::shared_ptr<const Embedding> embedding;
    FieldElement omega;   // in big
    FieldElement lambda;  // in ground

    int64_t rn() const { return static_cast<int64_t>(r) * n; }
    FieldElement omega_pow(int64_t i) const;  // omega^(i mod rn), negatives ok
};

/// Throws Error("BadParams") when q is not a prime power, gcd(q, n) != 1,
/// or r does not divide q-1; Error("TooLarge") when GF(q^e) exceeds the
/// field-size cap.
RootData make_root_data(uint64_t q, int64_t n, int64_t r);

/// Largest supported field cardinality.
inline constexpr uint64_t kMaxFieldSize = uint64_t{1} << 48;

}  // namespace polyadic
