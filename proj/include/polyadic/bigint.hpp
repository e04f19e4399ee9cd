#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace polyadic {

/// Arbitrary-precision signed integer, sign-magnitude with base-2^32 limbs.
/// Scope is desk-scale exact arithmetic (field sizes, codeword counts,
/// exponents); no attempt at asymptotic cleverness.
class BigInt {
  public:
    BigInt() = default;
    BigInt(int64_t v);
    explicit BigInt(const std::string& decimal);

    static BigInt from_uint64(uint64_t v);

    bool is_zero() const noexcept { return limbs_.empty(); }
    bool is_negative() const noexcept { return negative_; }
    bool is_odd() const;
    int sign() const noexcept { return is_zero() ? 0 : (negative_ ? -1 : 1); }

    bool fits_int64() const;
    bool fits_uint64() const;
    int64_t to_int64() const;    // throws Error("Overflow") if out of range
    uint64_t to_uint64() const;  // throws Error("Overflow") if negative/out of range
    std::string to_string() const;

    size_t bit_length() const;
    bool bit(size_t i) const;

    BigInt operator-() const;
    BigInt abs() const;

    friend BigInt operator+(const BigInt& a, const BigInt& b);
    friend BigInt operator-(const BigInt& a, const BigInt& b);
    friend BigInt operator*(const BigInt& a, const BigInt& b);
    /// Truncated division (C++ semantics): quotient toward zero, remainder
    /// takes the dividend's sign. Throws Error("DivByZero") on zero divisor.
    static void divmod(const BigInt& a, const BigInt& b, BigInt& q, BigInt& r);
    friend BigInt operator/(const BigInt& a, const BigInt& b);
    friend BigInt operator%(const BigInt& a, const BigInt& b);

    BigInt& operator+=(const BigInt& b) { return *this = *this + b; }
    BigInt& operator-=(const BigInt& b) { return *this = *this - b; }
    BigInt& operator*=(const BigInt& b) { return *this = *this * b; }

    friend bool operator==(const BigInt& a, const BigInt& b);
    friend bool operator!=(const BigInt& a, const BigInt& b) { return !(a == b); }
    friend bool operator<(const BigInt& a, const BigInt& b);
    friend bool operator>(const BigInt& a, const BigInt& b) { return b < a; }
    friend bool operator<=(const BigInt& a, const BigInt& b) { return !(b < a); }
    friend bool operator>=(const BigInt& a, const BigInt& b) { return !(a < b); }

    static BigInt pow(const BigInt& base, uint64_t exp);
    static BigInt gcd(BigInt a, BigInt b);

  private:
    // little-endian limbs, no trailing zero limb; empty == zero
    std::vector<uint32_t> limbs_;
    bool negative_ = false;

    void trim();
    static int cmp_mag(const BigInt& a, const BigInt& b);
    static BigInt add_mag(const BigInt& a, const BigInt& b);
    static BigInt sub_mag(const BigInt& a, const BigInt& b);  // requires |a| >= |b|
    static void divmod_mag(const BigInt& u, const BigInt& v, BigInt& q, BigInt& r);
    uint32_t div_small_inplace(uint32_t d);  // magnitude /= d, returns remainder
};

}  // namespace polyadic
