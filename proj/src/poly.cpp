#include "polyadic/poly.hpp"

#include "polyadic/errors.hpp"

namespace polyadic {

Poly::Poly(FieldCtxPtr ctx, std::vector<FieldElement> coeffs) : ctx_(std::move(ctx)), coeffs_(std::move(coeffs)) {
    for (const auto& c : coeffs_)
        if (c.ctx() != ctx_) fail("FieldMismatch", "polynomial coefficient from another field");
    trim();
}

void Poly::trim() {
    while (!coeffs_.empty() && coeffs_.back().is_zero()) coeffs_.pop_back();
}

Poly Poly::monomial(const FieldCtxPtr& ctx, int64_t degree, const FieldElement& coeff) {
    if (coeff.ctx() != ctx) fail("FieldMismatch", "monomial coefficient from another field");
    std::vector<FieldElement> c(static_cast<size_t>(degree) + 1, ctx->zero());
    c.back() = coeff;
    return Poly(ctx, std::move(c));
}

Poly Poly::binomial_xn_minus(const FieldCtxPtr& ctx, int64_t n, const FieldElement& lambda) {
    std::vector<FieldElement> c(static_cast<size_t>(n) + 1, ctx->zero());
    c[0] = -lambda;
    c.back() = ctx->one();
    return Poly(ctx, std::move(c));
}

FieldElement Poly::coeff(int64_t i) const {
    if (i < 0 || i > degree()) return ctx_->zero();
    return coeffs_[static_cast<size_t>(i)];
}

FieldElement Poly::leading() const {
    if (is_zero()) fail("BadParams", "zero polynomial has no leading coefficient");
    return coeffs_.back();
}

FieldElement Poly::eval(const FieldElement& x) const {
    FieldElement acc = ctx_->zero();
    for (size_t i = coeffs_.size(); i-- > 0;) acc = acc * x + coeffs_[i];
    return acc;
}

Poly Poly::monic() const {
    if (is_zero()) return *this;
    FieldElement inv = leading().inv();
    std::vector<FieldElement> c = coeffs_;
    for (auto& x : c) x = x * inv;
    return Poly(ctx_, std::move(c));
}

Poly operator+(const Poly& a, const Poly& b) {
    if (a.ctx_ != b.ctx_) fail("FieldMismatch", "polynomials over different fields");
    std::vector<FieldElement> c(std::max(a.coeffs_.size(), b.coeffs_.size()), a.ctx_->zero());
    for (size_t i = 0; i < c.size(); ++i) {
        if (i < a.coeffs_.size()) c[i] = c[i] + a.coeffs_[i];
        if (i < b.coeffs_.size()) c[i] = c[i] + b.coeffs_[i];
    }
    return Poly(a.ctx_, std::move(c));
}

Poly operator-(const Poly& a, const Poly& b) {
    if (a.ctx_ != b.ctx_) fail("FieldMismatch", "polynomials over different fields");
    std::vector<FieldElement> c(std::max(a.coeffs_.size(), b.coeffs_.size()), a.ctx_->zero());
    for (size_t i = 0; i < c.size(); ++i) {
        if (i < a.coeffs_.size()) c[i] = c[i] + a.coeffs_[i];
        if (i < b.coeffs_.size()) c[i] = c[i] - b.coeffs_[i];
    }
    return Poly(a.ctx_, std::move(c));
}

Poly operator*(const Poly& a, const Poly& b) {
    if (a.ctx_ != b.ctx_) fail("FieldMismatch", "polynomials over different fields");
    if (a.is_zero() || b.is_zero()) return Poly(a.ctx_);
    std::vector<FieldElement> c(a.coeffs_.size() + b.coeffs_.size() - 1, a.ctx_->zero());
    for (size_t i = 0; i < a.coeffs_.size(); ++i) {
        if (a.coeffs_[i].is_zero()) continue;
        for (size_t j = 0; j < b.coeffs_.size(); ++j) c[i + j] = c[i + j] + a.coeffs_[i] * b.coeffs_[j];
    }
    return Poly(a.ctx_, std::move(c));
}

bool operator==(const Poly& a, const Poly& b) { return a.ctx_ == b.ctx_ && a.coeffs_ == b.coeffs_; }

std::pair<Poly, Poly> Poly::divmod(const Poly& a, const Poly& b) {
    if (a.ctx_ != b.ctx_) fail("FieldMismatch", "polynomials over different fields");
    if (b.is_zero()) fail("DivByZero", "polynomial division by zero");
    Poly rem = a;
    if (a.degree() < b.degree()) return {Poly(a.ctx_), rem};
    FieldElement lead_inv = b.leading().inv();
    std::vector<FieldElement> q(static_cast<size_t>(a.degree() - b.degree()) + 1, a.ctx_->zero());
    while (!rem.is_zero() && rem.degree() >= b.degree()) {
        int64_t shift = rem.degree() - b.degree();
        FieldElement c = rem.leading() * lead_inv;
        q[static_cast<size_t>(shift)] = c;
        std::vector<FieldElement> rc = rem.coeffs_;
        for (int64_t j = 0; j <= b.degree(); ++j)
            rc[static_cast<size_t>(shift + j)] = rc[static_cast<size_t>(shift + j)] - c * b.coeffs_[static_cast<size_t>(j)];
        rem = Poly(a.ctx_, std::move(rc));
    }
    return {Poly(a.ctx_, std::move(q)), rem};
}

Poly Poly::gcd(Poly a, Poly b) {
    if (a.ctx() != b.ctx()) fail("FieldMismatch", "polynomials over different fields");
    while (!b.is_zero()) {
        Poly r = divmod(a, b).second;
        a = std::move(b);
        b = std::move(r);
    }
    return a.monic();
}

}  // namespace polyadic
