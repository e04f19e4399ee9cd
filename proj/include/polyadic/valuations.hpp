#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "polyadic/bigint.hpp"

namespace polyadic {

/// Extended integer valuation: a finite value, or -infinity (valuation of 0),
/// or +infinity (absolute value of -infinity). Ordered NEG_INF < finite < POS_INF.
class ExtVal {
  public:
    ExtVal(int64_t v) : kind_(Kind::Finite), value_(v) {}
    static ExtVal neg_inf() { return ExtVal(Kind::NegInf); }
    static ExtVal pos_inf() { return ExtVal(Kind::PosInf); }

    bool is_finite() const { return kind_ == Kind::Finite; }
    bool is_neg_inf() const { return kind_ == Kind::NegInf; }
    bool is_pos_inf() const { return kind_ == Kind::PosInf; }
    int64_t finite() const;  // throws Error("NotFinite") otherwise

    ExtVal abs() const;  // NEG_INF maps to POS_INF

    friend bool operator==(const ExtVal& a, const ExtVal& b);
    friend bool operator!=(const ExtVal& a, const ExtVal& b) { return !(a == b); }
    friend bool operator<(const ExtVal& a, const ExtVal& b);
    friend bool operator>(const ExtVal& a, const ExtVal& b) { return b < a; }
    friend bool operator<=(const ExtVal& a, const ExtVal& b) { return !(b < a); }
    friend bool operator>=(const ExtVal& a, const ExtVal& b) { return !(a < b); }

    /// Extended subtraction as needed by the valuation formulas:
    /// POS_INF - finite = POS_INF, finite - POS_INF = NEG_INF, etc.
    /// POS_INF - POS_INF is an error ("Indeterminate").
    friend ExtVal operator-(const ExtVal& a, const ExtVal& b);
    friend ExtVal operator+(const ExtVal& a, const ExtVal& b);

    static ExtVal min(const ExtVal& a, const ExtVal& b) { return a < b ? a : b; }
    static ExtVal max(const ExtVal& a, const ExtVal& b) { return a < b ? b : a; }

    std::string to_string() const;

  private:
    enum class Kind { NegInf, Finite, PosInf };
    explicit ExtVal(Kind k) : kind_(k), value_(0) {}
    Kind kind_;
    int64_t value_;
};

/// (prime, exponent) pairs sorted by prime; empty list factors 1.
using Factorization = std::vector<std::pair<uint64_t, int>>;

/// Structure of Z_{2^a}^* / <u> as a list of cyclic factor orders
/// (length 1 or 2, each a power of two; trivial factors kept as 1).
struct TwoAdicQuotientShape {
    std::vector<uint64_t> cyclic_factors;
};

// ---- basic integer helpers ----

int64_t gcd_i64(int64_t a, int64_t b);
int64_t mod_floor(int64_t x, int64_t m);  // canonical residue in [0, m)
uint64_t mulmod_u64(uint64_t a, uint64_t b, uint64_t m);
uint64_t powmod_u64(uint64_t base, uint64_t exp, uint64_t m);
bool is_prime_u64(uint64_t n);  // deterministic Miller-Rabin

// ---- number-theoretic operations ----

/// p-adic valuation of t; NEG_INF iff t == 0; sign of t ignored.
ExtVal nu_p(uint64_t p, const BigInt& t);
ExtVal nu_p(uint64_t p, int64_t t);

/// Canonical factorization of t >= 1 (trial division then Pollard rho).
Factorization factorize(uint64_t t);
Factorization factorize(const BigInt& t);

uint64_t euler_phi(uint64_t t);

/// Multiplicative order of u mod t (t >= 2, gcd(u, t) = 1).
uint64_t unit_order(int64_t u, uint64_t t);

/// Cyclic-factor shape of Z_{2^a}^* / <u> from the closed-form valuation
/// criteria; u odd, u != -1, a >= 2.
TwoAdicQuotientShape two_adic_quotient_shape(int64_t u, int a);

/// Order of the image of h in Z_{2^a}^* / <u> from the closed-form valuation
/// criteria; returns a power of two. h = -1 allowed, u = -1 excluded.
uint64_t two_adic_image_order(int64_t h, int64_t u, int a);

/// Residues of x modulo each of the pairwise-coprime moduli.
std::vector<int64_t> crt_decompose(int64_t x, const std::vector<int64_t>& moduli);

/// Unique preimage in [0, prod(moduli)) of the residue vector.
int64_t crt_compose(const std::vector<int64_t>& residues, const std::vector<int64_t>& moduli);

}  // namespace polyadic
