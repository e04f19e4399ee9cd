#include "polyadic/bigint.hpp"

#include <algorithm>
#include <bit>

#include "polyadic/errors.hpp"

namespace polyadic {

namespace {
constexpr uint64_t kBase = 1ull << 32;
}

BigInt::BigInt(int64_t v) {
    negative_ = v < 0;
    uint64_t m = negative_ ? ~static_cast<uint64_t>(v) + 1 : static_cast<uint64_t>(v);
    if (m) limbs_.push_back(static_cast<uint32_t>(m));
    if (m >> 32) limbs_.push_back(static_cast<uint32_t>(m >> 32));
}

BigInt BigInt::from_uint64(uint64_t v) {
    BigInt r;
    if (v) r.limbs_.push_back(static_cast<uint32_t>(v));
    if (v >> 32) r.limbs_.push_back(static_cast<uint32_t>(v >> 32));
    return r;
}

BigInt::BigInt(const std::string& decimal) {
    size_t i = 0;
    bool neg = false;
    if (i < decimal.size() && (decimal[i] == '+' || decimal[i] == '-')) {
        neg = decimal[i] == '-';
        ++i;
    }
    if (i == decimal.size()) fail("BadNumber", "empty numeral '" + decimal + "'");
    BigInt acc;
    for (; i < decimal.size(); ++i) {
        char c = decimal[i];
        if (c < '0' || c > '9') fail("BadNumber", "bad digit in numeral '" + decimal + "'");
        acc = acc * BigInt(10) + BigInt(c - '0');
    }
    limbs_ = std::move(acc.limbs_);
    negative_ = neg && !limbs_.empty();
}

void BigInt::trim() {
    while (!limbs_.empty() && limbs_.back() == 0) limbs_.pop_back();
    if (limbs_.empty()) negative_ = false;
}

bool BigInt::is_odd() const { return !limbs_.empty() && (limbs_[0] & 1u); }

bool BigInt::fits_uint64() const { return !negative_ && limbs_.size() <= 2; }

bool BigInt::fits_int64() const {
    if (limbs_.size() > 2) return false;
    if (limbs_.size() < 2) return true;
    uint64_t m = (static_cast<uint64_t>(limbs_[1]) << 32) | limbs_[0];
    return negative_ ? m <= (1ull << 63) : m < (1ull << 63);
}

uint64_t BigInt::to_uint64() const {
    if (!fits_uint64()) fail("Overflow", "value does not fit uint64: " + to_string());
    uint64_t m = 0;
    if (limbs_.size() > 1) m = static_cast<uint64_t>(limbs_[1]) << 32;
    if (!limbs_.empty()) m |= limbs_[0];
    return m;
}

int64_t BigInt::to_int64() const {
    if (!fits_int64()) fail("Overflow", "value does not fit int64: " + to_string());
    uint64_t m = 0;
    if (limbs_.size() > 1) m = static_cast<uint64_t>(limbs_[1]) << 32;
    if (!limbs_.empty()) m |= limbs_[0];
    if (negative_) return m == (uint64_t{1} << 63) ? INT64_MIN : -static_cast<int64_t>(m);
    return static_cast<int64_t>(m);
}

size_t BigInt::bit_length() const {
    if (limbs_.empty()) return 0;
    return 32 * (limbs_.size() - 1) + (32 - std::countl_zero(limbs_.back()));
}

bool BigInt::bit(size_t i) const {
    size_t limb = i / 32;
    if (limb >= limbs_.size()) return false;
    return (limbs_[limb] >> (i % 32)) & 1u;
}

BigInt BigInt::operator-() const {
    BigInt r = *this;
    if (!r.is_zero()) r.negative_ = !r.negative_;
    return r;
}

BigInt BigInt::abs() const {
    BigInt r = *this;
    r.negative_ = false;
    return r;
}

int BigInt::cmp_mag(const BigInt& a, const BigInt& b) {
    if (a.limbs_.size() != b.limbs_.size()) return a.limbs_.size() < b.limbs_.size() ? -1 : 1;
    for (size_t i = a.limbs_.size(); i-- > 0;)
        if (a.limbs_[i] != b.limbs_[i]) return a.limbs_[i] < b.limbs_[i] ? -1 : 1;
    return 0;
}

bool operator==(const BigInt& a, const BigInt& b) {
    return a.negative_ == b.negative_ && a.limbs_ == b.limbs_;
}

bool operator<(const BigInt& a, const BigInt& b) {
    if (a.negative_ != b.negative_) return a.negative_;
    int c = BigInt::cmp_mag(a, b);
    return a.negative_ ? c > 0 : c < 0;
}

BigInt BigInt::add_mag(const BigInt& a, const BigInt& b) {
    BigInt r;
    const auto& x = a.limbs_.size() >= b.limbs_.size() ? a.limbs_ : b.limbs_;
    const auto& y = a.limbs_.size() >= b.limbs_.size() ? b.limbs_ : a.limbs_;
    r.limbs_.resize(x.size() + 1, 0);
    uint64_t carry = 0;
    for (size_t i = 0; i < x.size(); ++i) {
        uint64_t s = carry + x[i] + (i < y.size() ? y[i] : 0);
        r.limbs_[i] = static_cast<uint32_t>(s);
        carry = s >> 32;
    }
    r.limbs_[x.size()] = static_cast<uint32_t>(carry);
    r.trim();
    return r;
}

BigInt BigInt::sub_mag(const BigInt& a, const BigInt& b) {
    BigInt r;
    r.limbs_.resize(a.limbs_.size(), 0);
    int64_t borrow = 0;
    for (size_t i = 0; i < a.limbs_.size(); ++i) {
        int64_t d = static_cast<int64_t>(a.limbs_[i]) - borrow - (i < b.limbs_.size() ? b.limbs_[i] : 0);
        borrow = d < 0;
        if (d < 0) d += static_cast<int64_t>(kBase);
        r.limbs_[i] = static_cast<uint32_t>(d);
    }
    r.trim();
    return r;
}

BigInt operator+(const BigInt& a, const BigInt& b) {
    BigInt r;
    if (a.negative_ == b.negative_) {
        r = BigInt::add_mag(a, b);
        r.negative_ = a.negative_ && !r.is_zero();
    } else {
        int c = BigInt::cmp_mag(a, b);
        if (c == 0) return BigInt();
        if (c > 0) {
            r = BigInt::sub_mag(a, b);
            r.negative_ = a.negative_;
        } else {
            r = BigInt::sub_mag(b, a);
            r.negative_ = b.negative_;
        }
    }
    return r;
}

BigInt operator-(const BigInt& a, const BigInt& b) { return a + (-b); }

BigInt operator*(const BigInt& a, const BigInt& b) {
    if (a.is_zero() || b.is_zero()) return BigInt();
    BigInt r;
    r.limbs_.assign(a.limbs_.size() + b.limbs_.size(), 0);
    for (size_t i = 0; i < a.limbs_.size(); ++i) {
        uint64_t carry = 0;
        for (size_t j = 0; j < b.limbs_.size(); ++j) {
            uint64_t cur = static_cast<uint64_t>(a.limbs_[i]) * b.limbs_[j] + r.limbs_[i + j] + carry;
            r.limbs_[i + j] = static_cast<uint32_t>(cur);
            carry = cur >> 32;
        }
        r.limbs_[i + b.limbs_.size()] += static_cast<uint32_t>(carry);
    }
    r.negative_ = a.negative_ != b.negative_;
    r.trim();
    return r;
}

uint32_t BigInt::div_small_inplace(uint32_t d) {
    uint64_t rem = 0;
    for (size_t i = limbs_.size(); i-- > 0;) {
        uint64_t cur = (rem << 32) | limbs_[i];
        limbs_[i] = static_cast<uint32_t>(cur / d);
        rem = cur % d;
    }
    trim();
    return static_cast<uint32_t>(rem);
}

// Knuth algorithm D on magnitudes.
void BigInt::divmod_mag(const BigInt& u, const BigInt& v, BigInt& q, BigInt& r) {
    if (cmp_mag(u, v) < 0) {
        q = BigInt();
        r = u;
        r.negative_ = false;
        return;
    }
    if (v.limbs_.size() == 1) {
        q = u;
        q.negative_ = false;
        uint32_t rem = q.div_small_inplace(v.limbs_[0]);
        r = BigInt(static_cast<int64_t>(rem));
        return;
    }
    const size_t n = v.limbs_.size();
    const size_t m = u.limbs_.size() - n;
    const int s = std::countl_zero(v.limbs_.back());

    std::vector<uint32_t> vn(n), un(u.limbs_.size() + 1, 0);
    for (size_t i = n; i-- > 0;)
        vn[i] = (v.limbs_[i] << s) | (s && i ? static_cast<uint32_t>(static_cast<uint64_t>(v.limbs_[i - 1]) >> (32 - s)) : 0);
    un[u.limbs_.size()] = s ? static_cast<uint32_t>(static_cast<uint64_t>(u.limbs_.back()) >> (32 - s)) : 0;
    for (size_t i = u.limbs_.size(); i-- > 0;)
        un[i] = (u.limbs_[i] << s) | (s && i ? static_cast<uint32_t>(static_cast<uint64_t>(u.limbs_[i - 1]) >> (32 - s)) : 0);

    q.limbs_.assign(m + 1, 0);
    q.negative_ = false;
    for (size_t j = m + 1; j-- > 0;) {
        uint64_t num = (static_cast<uint64_t>(un[j + n]) << 32) | un[j + n - 1];
        uint64_t qhat = num / vn[n - 1];
        uint64_t rhat = num % vn[n - 1];
        while (qhat >= kBase || qhat * vn[n - 2] > ((rhat << 32) | un[j + n - 2])) {
            --qhat;
            rhat += vn[n - 1];
            if (rhat >= kBase) break;
        }
        // multiply and subtract
        int64_t borrow = 0;
        uint64_t carry = 0;
        for (size_t i = 0; i < n; ++i) {
            uint64_t p = qhat * vn[i] + carry;
            carry = p >> 32;
            int64_t t = static_cast<int64_t>(un[i + j]) - static_cast<int64_t>(p & 0xffffffffull) - borrow;
            borrow = t < 0;
            if (t < 0) t += static_cast<int64_t>(kBase);
            un[i + j] = static_cast<uint32_t>(t);
        }
        int64_t t = static_cast<int64_t>(un[j + n]) - static_cast<int64_t>(carry) - borrow;
        if (t < 0) {
            // add back
            un[j + n] = static_cast<uint32_t>(t + static_cast<int64_t>(kBase));
            --qhat;
            uint64_t c2 = 0;
            for (size_t i = 0; i < n; ++i) {
                uint64_t sum = static_cast<uint64_t>(un[i + j]) + vn[i] + c2;
                un[i + j] = static_cast<uint32_t>(sum);
                c2 = sum >> 32;
            }
            un[j + n] = static_cast<uint32_t>(un[j + n] + c2);
        } else {
            un[j + n] = static_cast<uint32_t>(t);
        }
        q.limbs_[j] = static_cast<uint32_t>(qhat);
    }
    q.trim();
    r.limbs_.assign(n, 0);
    r.negative_ = false;
    for (size_t i = 0; i < n; ++i)
        r.limbs_[i] = (un[i] >> s) | (s ? static_cast<uint32_t>(static_cast<uint64_t>(un[i + 1]) << (32 - s)) : 0);
    r.trim();
}

void BigInt::divmod(const BigInt& a, const BigInt& b, BigInt& q, BigInt& r) {
    if (b.is_zero()) fail("DivByZero", "integer division by zero");
    divmod_mag(a, b, q, r);
    q.negative_ = !q.is_zero() && (a.negative_ != b.negative_);
    r.negative_ = !r.is_zero() && a.negative_;
}

BigInt operator/(const BigInt& a, const BigInt& b) {
    BigInt q, r;
    BigInt::divmod(a, b, q, r);
    return q;
}

BigInt operator%(const BigInt& a, const BigInt& b) {
    BigInt q, r;
    BigInt::divmod(a, b, q, r);
    return r;
}

std::string BigInt::to_string() const {
    if (is_zero()) return "0";
    BigInt t = *this;
    std::vector<uint32_t> chunks;
    while (!t.is_zero()) chunks.push_back(t.div_small_inplace(1000000000u));
    std::string out = negative_ ? "-" : "";
    out += std::to_string(chunks.back());
    for (size_t i = chunks.size() - 1; i-- > 0;) {
        std::string part = std::to_string(chunks[i]);
        out += std::string(9 - part.size(), '0') + part;
    }
    return out;
}

BigInt BigInt::pow(const BigInt& base, uint64_t exp) {
    BigInt acc(1), b = base;
    while (exp) {
        if (exp & 1) acc *= b;
        exp >>= 1;
        if (exp) b *= b;
    }
    return acc;
}

BigInt BigInt::gcd(BigInt a, BigInt b) {
    a.negative_ = false;
    b.negative_ = false;
    while (!b.is_zero()) {
        BigInt r = a % b;
        a = std::move(b);
        b = std::move(r);
    }
    return a;
}

}  // namespace polyadic
