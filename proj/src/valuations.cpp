#include "polyadic/valuations.hpp"

#include <algorithm>
#include <numeric>

#include "polyadic/errors.hpp"

namespace polyadic {

int64_t ExtVal::finite() const {
    if (kind_ != Kind::Finite) fail("NotFinite", "extended valuation is " + to_string());
    return value_;
}

ExtVal ExtVal::abs() const {
    if (kind_ == Kind::NegInf) return pos_inf();
    if (kind_ == Kind::PosInf) return pos_inf();
    return ExtVal(value_ < 0 ? -value_ : value_);
}

bool operator==(const ExtVal& a, const ExtVal& b) {
    return a.kind_ == b.kind_ && (a.kind_ != ExtVal::Kind::Finite || a.value_ == b.value_);
}

bool operator<(const ExtVal& a, const ExtVal& b) {
    auto rank = [](const ExtVal& e) { return e.kind_ == ExtVal::Kind::NegInf ? 0 : e.kind_ == ExtVal::Kind::Finite ? 1 : 2; };
    if (rank(a) != rank(b)) return rank(a) < rank(b);
    return a.kind_ == ExtVal::Kind::Finite && a.value_ < b.value_;
}

ExtVal operator-(const ExtVal& a, const ExtVal& b) {
    if (a.is_finite() && b.is_finite()) return ExtVal(a.value_ - b.value_);
    if (a.is_pos_inf() && !b.is_pos_inf()) return ExtVal::pos_inf();
    if (a.is_neg_inf() && !b.is_neg_inf()) return ExtVal::neg_inf();
    if (b.is_pos_inf() && !a.is_pos_inf()) return ExtVal::neg_inf();
    if (b.is_neg_inf() && !a.is_neg_inf()) return ExtVal::pos_inf();
    fail("Indeterminate", "infinity minus infinity");
}

ExtVal operator+(const ExtVal& a, const ExtVal& b) { return a - (ExtVal(0) - b); }

std::string ExtVal::to_string() const {
    if (kind_ == Kind::NegInf) return "-inf";
    if (kind_ == Kind::PosInf) return "+inf";
    return std::to_string(value_);
}

int64_t gcd_i64(int64_t a, int64_t b) {
    if (a < 0) a = -a;
    if (b < 0) b = -b;
    while (b) {
        int64_t t = a % b;
        a = b;
        b = t;
    }
    return a;
}

int64_t mod_floor(int64_t x, int64_t m) {
    int64_t r = x % m;
    return r < 0 ? r + m : r;
}

uint64_t mulmod_u64(uint64_t a, uint64_t b, uint64_t m) {
    return static_cast<uint64_t>(static_cast<unsigned __int128>(a) * b % m);
}

uint64_t powmod_u64(uint64_t base, uint64_t exp, uint64_t m) {
    if (m == 1) return 0;
    uint64_t acc = 1;
    base %= m;
    while (exp) {
        if (exp & 1) acc = mulmod_u64(acc, base, m);
        base = mulmod_u64(base, base, m);
        exp >>= 1;
    }
    return acc;
}

bool is_prime_u64(uint64_t n) {
    if (n < 2) return false;
    for (uint64_t p : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull, 29ull, 31ull, 37ull}) {
        if (n % p == 0) return n == p;
    }
    uint64_t d = n - 1;
    int s = 0;
    while ((d & 1) == 0) {
        d >>= 1;
        ++s;
    }
    // deterministic witness set for n < 3.3 * 10^24
    for (uint64_t a : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull, 29ull, 31ull, 37ull}) {
        uint64_t x = powmod_u64(a, d, n);
        if (x == 1 || x == n - 1) continue;
        bool composite = true;
        for (int i = 1; i < s; ++i) {
            x = mulmod_u64(x, x, n);
            if (x == n - 1) {
                composite = false;
                break;
            }
        }
        if (composite) return false;
    }
    return true;
}

ExtVal nu_p(uint64_t p, const BigInt& t) {
    if (!is_prime_u64(p)) fail("NotPrime", std::to_string(p) + " is not prime");
    if (t.is_zero()) return ExtVal::neg_inf();
    BigInt m = t.abs();
    BigInt bp(static_cast<int64_t>(p));
    int64_t e = 0;
    while (true) {
        BigInt q, r;
        BigInt::divmod(m, bp, q, r);
        if (!r.is_zero()) break;
        m = std::move(q);
        ++e;
    }
    return ExtVal(e);
}

ExtVal nu_p(uint64_t p, int64_t t) { return nu_p(p, BigInt(t)); }

namespace {

uint64_t pollard_rho(uint64_t n) {
    // deterministic parameter sweep; callers guarantee n is odd, composite,
    // and free of factors below the trial-division bound
    for (uint64_t c = 1;; ++c) {
        auto step = [&](uint64_t t) { return (mulmod_u64(t, t, n) + c) % n; };
        uint64_t x = 2, y = 2, d = 1;
        while (d == 1) {
            x = step(x);
            y = step(step(y));
            if (x == y) break;  // cycle without factor; retry with next c
            d = std::gcd(x > y ? x - y : y - x, n);
        }
        if (d != 1 && d != n) return d;
    }
}

void factor_into(uint64_t n, std::vector<uint64_t>& primes) {
    if (n == 1) return;
    if (is_prime_u64(n)) {
        primes.push_back(n);
        return;
    }
    uint64_t d = pollard_rho(n);
    factor_into(d, primes);
    factor_into(n / d, primes);
}

}  // namespace

Factorization factorize(uint64_t t) {
    if (t == 0) fail("NonPositive", "factorize requires t >= 1");
    std::vector<uint64_t> primes;
    for (uint64_t p = 2; p <= 1000000 && p * p <= t; p += (p == 2 ? 1 : 2)) {
        while (t % p == 0) {
            primes.push_back(p);
            t /= p;
        }
    }
    factor_into(t, primes);
    std::sort(primes.begin(), primes.end());
    Factorization out;
    for (uint64_t p : primes) {
        if (!out.empty() && out.back().first == p)
            ++out.back().second;
        else
            out.push_back({p, 1});
    }
    return out;
}

Factorization factorize(const BigInt& t) {
    if (t.sign() <= 0) fail("NonPositive", "factorize requires t >= 1, got " + t.to_string());
    if (!t.fits_uint64()) fail("TooLarge", "factorization input exceeds 64 bits: " + t.to_string());
    return factorize(t.to_uint64());
}

uint64_t euler_phi(uint64_t t) {
    uint64_t phi = 1;
    for (auto [p, e] : factorize(t)) {
        phi *= p - 1;
        for (int i = 1; i < e; ++i) phi *= p;
    }
    return phi;
}

uint64_t unit_order(int64_t u, uint64_t t) {
    if (t < 2) fail("BadParams", "unit_order requires modulus >= 2");
    uint64_t ur = static_cast<uint64_t>(mod_floor(u, static_cast<int64_t>(t)));
    if (std::gcd(ur, t) != 1) fail("NotAUnit", std::to_string(u) + " is not a unit mod " + std::to_string(t));
    uint64_t d = euler_phi(t);
    for (auto [p, e] : factorize(d)) {
        (void)e;
        while (d % p == 0 && powmod_u64(ur, d / p, t) == 1) d /= p;
    }
    return d;
}

TwoAdicQuotientShape two_adic_quotient_shape(int64_t u, int a) {
    if (u % 2 == 0) fail("NotAUnit", "u must be odd");
    if (u == -1) fail("ExcludedCase", "u = -1 is excluded");
    if (a < 2) fail("BadParams", "need a >= 2");
    ExtVal vm = nu_p(2, u - 1).abs();  // u = 1 gives +inf
    ExtVal cap(static_cast<int64_t>(a) - 2);
    TwoAdicQuotientShape shape;
    if (vm >= ExtVal(2)) {
        int64_t w = ExtVal::min(vm - ExtVal(2), cap).finite();
        shape.cyclic_factors = {2, uint64_t{1} << w};
    } else {
        ExtVal vp = nu_p(2, u + 1).abs();
        int64_t w = ExtVal::min(vp - ExtVal(1), cap).finite();
        shape.cyclic_factors = {uint64_t{1} << w};
    }
    return shape;
}

uint64_t two_adic_image_order(int64_t h, int64_t u, int a) {
    if (h % 2 == 0 || u % 2 == 0) fail("NotAUnit", "h and u must be odd");
    if (u == -1) fail("ExcludedCase", "u = -1 is excluded");
    if (a < 2) fail("BadParams", "need a >= 2");
    ExtVal hm = nu_p(2, h - 1).abs();  // h = 1 gives +inf
    ExtVal hp = nu_p(2, h + 1).abs();  // h = -1 gives +inf
    ExtVal um = nu_p(2, u - 1).abs();
    ExtVal up = nu_p(2, u + 1).abs();
    ExtVal av(static_cast<int64_t>(a));
    ExtVal v(0);
    if (um >= ExtVal(2) && hm >= ExtVal(2)) {
        v = ExtVal::max(ExtVal::min(um, av) - hm, ExtVal(0));
    } else if (um == ExtVal(1) && hm >= ExtVal(2)) {
        v = ExtVal::max(ExtVal::min(up + ExtVal(1), av) - hm, ExtVal(0));
    } else if (um >= ExtVal(2) && hm == ExtVal(1)) {
        v = ExtVal::max(ExtVal::min(um, av) - hp, ExtVal(1));
    } else {
        if (hp == up)
            v = ExtVal(0);
        else
            v = ExtVal::max(ExtVal::min(up + ExtVal(1), av) - ExtVal::min(hp, up), ExtVal(0));
    }
    return uint64_t{1} << v.finite();
}

std::vector<int64_t> crt_decompose(int64_t x, const std::vector<int64_t>& moduli) {
    for (size_t i = 0; i < moduli.size(); ++i) {
        if (moduli[i] < 1) fail("BadParams", "moduli must be >= 1");
        for (size_t j = i + 1; j < moduli.size(); ++j)
            if (gcd_i64(moduli[i], moduli[j]) != 1)
                fail("NotCoprime", std::to_string(moduli[i]) + " and " + std::to_string(moduli[j]) + " share a factor");
    }
    std::vector<int64_t> out;
    out.reserve(moduli.size());
    for (int64_t m : moduli) out.push_back(mod_floor(x, m));
    return out;
}

int64_t crt_compose(const std::vector<int64_t>& residues, const std::vector<int64_t>& moduli) {
    if (residues.size() != moduli.size()) fail("BadParams", "residue/modulus count mismatch");
    crt_decompose(0, moduli);  // reuse validation
    __int128 value = 0, mod = 1;
    for (size_t i = 0; i < moduli.size(); ++i) {
        int64_t m = moduli[i];
        int64_t r = mod_floor(residues[i], m);
        // solve value + mod * t = r (mod m)
        int64_t mm = static_cast<int64_t>(mod % m);
        int64_t need = mod_floor(r - static_cast<int64_t>(value % m), m);
        // inverse of mm mod m by extended Euclid
        int64_t t0 = 0, t1 = 1, r0 = m, r1 = mod_floor(mm, m);
        while (r1) {
            int64_t q = r0 / r1;
            r0 -= q * r1;
            std::swap(r0, r1);
            t0 -= q * t1;
            std::swap(t0, t1);
        }
        int64_t inv = mod_floor(t0, m);
        int64_t t = static_cast<int64_t>((static_cast<__int128>(need) * inv) % m);
        value += mod * t;
        mod *= m;
        if (mod > static_cast<__int128>(INT64_MAX)) fail("Overflow", "modulus product exceeds int64");
    }
    return static_cast<int64_t>(value);
}

}  // namespace polyadic
