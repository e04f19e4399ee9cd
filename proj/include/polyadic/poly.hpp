#pragma once

#include <utility>
#include <vector>

#include "polyadic/gf.hpp"

namespace polyadic {

/// Dense polynomial over a field context, constant term first, trailing
/// zeros stripped (zero polynomial has an empty coefficient list).
class Poly {
  public:
    Poly() = default;
    explicit Poly(FieldCtxPtr ctx) : ctx_(std::move(ctx)) {}
    Poly(FieldCtxPtr ctx, std::vector<FieldElement> coeffs);

    static Poly monomial(const FieldCtxPtr& ctx, int64_t degree, const FieldElement& coeff);
    /// X^n - lambda
    static Poly binomial_xn_minus(const FieldCtxPtr& ctx, int64_t n, const FieldElement& lambda);

    const FieldCtxPtr& ctx() const { return ctx_; }
    const std::vector<FieldElement>& coeffs() const { return coeffs_; }
    int64_t degree() const { return static_cast<int64_t>(coeffs_.size()) - 1; }  // -1 for zero
    bool is_zero() const { return coeffs_.empty(); }
    FieldElement coeff(int64_t i) const;  // zero beyond degree
    FieldElement leading() const;
    FieldElement eval(const FieldElement& x) const;
    Poly monic() const;

    friend Poly operator+(const Poly& a, const Poly& b);
    friend Poly operator-(const Poly& a, const Poly& b);
    friend Poly operator*(const Poly& a, const Poly& b);
    friend bool operator==(const Poly& a, const Poly& b);
    friend bool operator!=(const Poly& a, const Poly& b) { return !(a == b); }

    /// (quotient, remainder) with deg r < deg b; throws Error("DivByZero").
    static std::pair<Poly, Poly> divmod(const Poly& a, const Poly& b);
    /// Monic-normalized gcd.
    static Poly gcd(Poly a, Poly b);

  private:
    void trim();
    FieldCtxPtr ctx_;
    std::vector<FieldElement> coeffs_;
};

}  // namespace polyadic
