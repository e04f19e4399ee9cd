#include "polyadic/gf.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <numeric>

#include "polyadic/errors.hpp"

namespace polyadic {

namespace {

// ---- raw polynomial arithmetic over Z_p (used before a ctx exists) ----

uint64_t zp_mul(uint64_t a, uint64_t b, uint64_t p) { return mulmod_u64(a, b, p); }

uint64_t zp_inv(uint64_t a, uint64_t p) { return powmod_u64(a, p - 2, p); }

int poly_degree(const std::vector<uint64_t>& a) {
    for (size_t i = a.size(); i-- > 0;)
        if (a[i]) return static_cast<int>(i);
    return -1;
}

std::vector<uint64_t> poly_mul(const std::vector<uint64_t>& a, const std::vector<uint64_t>& b, uint64_t p) {
    if (a.empty() || b.empty()) return {};
    std::vector<unsigned __int128> acc(a.size() + b.size() - 1, 0);
    for (size_t i = 0; i < a.size(); ++i) {
        if (!a[i]) continue;
        for (size_t j = 0; j < b.size(); ++j) acc[i + j] += static_cast<unsigned __int128>(a[i]) * b[j];
    }
    std::vector<uint64_t> out(acc.size());
    for (size_t i = 0; i < acc.size(); ++i) out[i] = static_cast<uint64_t>(acc[i] % p);
    return out;
}

// reduce a modulo the monic polynomial X^k + f (f = non-leading coeffs, length k)
void poly_mod_monic(std::vector<uint64_t>& a, const std::vector<uint64_t>& f, uint64_t p) {
    const size_t k = f.size();
    for (size_t d = a.size(); d-- > k;) {
        uint64_t c = a[d];
        if (!c) continue;
        a[d] = 0;
        for (size_t j = 0; j < k; ++j) {
            if (!f[j]) continue;
            uint64_t sub = zp_mul(c, f[j], p);
            a[d - k + j] = (a[d - k + j] + p - sub) % p;
        }
    }
    a.resize(std::min(a.size(), k));
    a.resize(k, 0);
}

std::vector<uint64_t> poly_mulmod(const std::vector<uint64_t>& a, const std::vector<uint64_t>& b,
                                  const std::vector<uint64_t>& f, uint64_t p) {
    auto prod = poly_mul(a, b, p);
    poly_mod_monic(prod, f, p);
    return prod;
}

std::vector<uint64_t> poly_powmod(std::vector<uint64_t> base, uint64_t exp, const std::vector<uint64_t>& f,
                                  uint64_t p) {
    std::vector<uint64_t> acc(f.size(), 0);
    acc[0] = 1;
    while (exp) {
        if (exp & 1) acc = poly_mulmod(acc, base, f, p);
        base = poly_mulmod(base, base, f, p);
        exp >>= 1;
    }
    return acc;
}

// remainder of a modulo b (b nonzero, not necessarily monic)
std::vector<uint64_t> poly_rem(std::vector<uint64_t> a, const std::vector<uint64_t>& b, uint64_t p) {
    int db = poly_degree(b);
    uint64_t lead_inv = zp_inv(b[db], p);
    for (int da = poly_degree(a); da >= db; da = poly_degree(a)) {
        uint64_t c = zp_mul(a[da], lead_inv, p);
        for (int j = 0; j <= db; ++j) {
            uint64_t sub = zp_mul(c, b[j], p);
            a[da - db + j] = (a[da - db + j] + p - sub) % p;
        }
    }
    return a;
}

int poly_gcd_degree(std::vector<uint64_t> a, std::vector<uint64_t> b, uint64_t p) {
    while (poly_degree(b) >= 0) {
        auto r = poly_rem(a, b, p);
        a = std::move(b);
        b = std::move(r);
    }
    return poly_degree(a);
}

// f = non-leading coefficients of a monic degree-k candidate
bool is_irreducible(const std::vector<uint64_t>& f, uint64_t p) {
    const int k = static_cast<int>(f.size());
    if (k == 1) return true;
    std::vector<uint64_t> full(f);
    full.push_back(1);
    std::vector<uint64_t> x(k, 0);
    x[1] = 1;
    std::vector<uint64_t> h = x;
    for (int i = 1; i <= k / 2; ++i) {
        h = poly_powmod(h, p, f, p);  // X^(p^i) mod f
        // gcd(h - X, f) must be trivial
        std::vector<uint64_t> diff = h;
        diff[1] = (diff[1] + p - 1) % p;
        if (poly_degree(diff) < 0) return false;  // X^(p^i) == X: degree-i factor exists
        if (poly_gcd_degree(full, diff, p) > 0) return false;
    }
    return true;
}

bool is_primitive(const std::vector<uint64_t>& f, uint64_t p, uint64_t order, const Factorization& order_factors) {
    const int k = static_cast<int>(f.size());
    std::vector<uint64_t> x(k, 0);
    if (k == 1)
        x[0] = (p - f[0]) % p;
    else
        x[1] = 1;
    if (poly_degree(x) < 0) return false;
    for (auto [ell, e] : order_factors) {
        (void)e;
        auto t = poly_powmod(x, order / ell, f, p);
        if (poly_degree(t) == 0 && t[0] == 1) return false;
    }
    return true;
}

}  // namespace

// ---- FieldElement ----

bool FieldElement::is_zero() const {
    return std::all_of(coeffs_.begin(), coeffs_.end(), [](uint64_t c) { return c == 0; });
}

uint64_t FieldElement::index() const {
    uint64_t idx = 0;
    for (size_t i = coeffs_.size(); i-- > 0;) idx = idx * ctx_->p() + coeffs_[i];
    return idx;
}

namespace {
void require_same_ctx(const FieldElement& a, const FieldElement& b) {
    if (!a.ctx() || !b.ctx() || a.ctx() != b.ctx())
        fail("FieldMismatch", "elements belong to different field contexts");
}
}  // namespace

FieldElement operator+(const FieldElement& a, const FieldElement& b) {
    require_same_ctx(a, b);
    std::vector<uint64_t> c(a.coeffs().size());
    uint64_t p = a.ctx()->p();
    for (size_t i = 0; i < c.size(); ++i) {
        c[i] = a.coeffs()[i] + b.coeffs()[i];
        if (c[i] >= p) c[i] -= p;
    }
    return a.ctx()->from_coeffs(std::move(c));
}

FieldElement operator-(const FieldElement& a, const FieldElement& b) {
    require_same_ctx(a, b);
    std::vector<uint64_t> c(a.coeffs().size());
    uint64_t p = a.ctx()->p();
    for (size_t i = 0; i < c.size(); ++i) c[i] = (a.coeffs()[i] + p - b.coeffs()[i]) % p;
    return a.ctx()->from_coeffs(std::move(c));
}

FieldElement FieldElement::operator-() const {
    std::vector<uint64_t> c(coeffs_.size());
    uint64_t p = ctx_->p();
    for (size_t i = 0; i < c.size(); ++i) c[i] = coeffs_[i] ? p - coeffs_[i] : 0;
    return FieldElement(ctx_, std::move(c));
}

FieldElement operator*(const FieldElement& a, const FieldElement& b) {
    require_same_ctx(a, b);
    return FieldElement(a.ctx(), a.ctx()->mul_raw(a.coeffs(), b.coeffs()));
}

FieldElement operator/(const FieldElement& a, const FieldElement& b) {
    require_same_ctx(a, b);
    return a * b.inv();
}

bool operator==(const FieldElement& a, const FieldElement& b) {
    return a.ctx_ == b.ctx_ && a.coeffs_ == b.coeffs_;
}

FieldElement FieldElement::inv() const {
    if (is_zero()) fail("DivByZero", "inverse of zero field element");
    return pow(BigInt(static_cast<int64_t>(ctx_->order_u64() - 1)));
}

FieldElement FieldElement::pow(const BigInt& e) const {
    if (is_zero()) {
        if (e.is_zero()) return ctx_->one();
        if (e.is_negative()) fail("DivByZero", "negative power of zero");
        return ctx_->zero();
    }
    BigInt ord(static_cast<int64_t>(ctx_->order_u64()));
    BigInt red = e % ord;
    if (red.is_negative()) red += ord;
    uint64_t exp = red.to_uint64();
    FieldElement acc = ctx_->one();
    FieldElement base = *this;
    while (exp) {
        if (exp & 1) acc = acc * base;
        base = base * base;
        exp >>= 1;
    }
    return acc;
}

// ---- FieldCtx ----

std::vector<uint64_t> FieldCtx::mul_raw(const std::vector<uint64_t>& a, const std::vector<uint64_t>& b) const {
    auto prod = poly_mul(a, b, p_);
    poly_mod_monic(prod, modulus_, p_);
    return prod;
}

FieldCtxPtr FieldCtx::create(uint64_t p, int k) {
    static std::mutex mutex;
    static std::map<std::pair<uint64_t, int>, std::weak_ptr<const FieldCtx>> registry;

    if (!is_prime_u64(p)) fail("NotPrime", std::to_string(p) + " is not prime");
    if (k < 1) fail("BadParams", "extension degree must be >= 1");
    BigInt size = BigInt::pow(BigInt(static_cast<int64_t>(p)), static_cast<uint64_t>(k));
    if (size > BigInt::from_uint64(kMaxFieldSize))
        fail("TooLarge", "field size " + size.to_string() + " exceeds cap 2^48");

    std::lock_guard<std::mutex> lock(mutex);
    auto key = std::make_pair(p, k);
    if (auto it = registry.find(key); it != registry.end())
        if (auto ptr = it->second.lock()) return ptr;

    uint64_t order = size.to_uint64() - 1;
    Factorization order_factors = factorize(order);

    // scan monic candidates in coefficient order, constant term fastest
    std::vector<uint64_t> cand(k, 0);
    bool found = false;
    while (true) {
        if (is_irreducible(cand, p) && is_primitive(cand, p, order, order_factors)) {
            found = true;
            break;
        }
        size_t pos = 0;
        while (pos < cand.size()) {
            if (++cand[pos] < p) break;
            cand[pos++] = 0;
        }
        if (pos == cand.size()) break;  // exhausted (cannot happen: primitive polys exist)
    }
    if (!found) fail("Internal", "no primitive polynomial found");

    auto ctx = std::shared_ptr<FieldCtx>(new FieldCtx());
    ctx->p_ = p;
    ctx->k_ = k;
    ctx->size_ = size;
    ctx->order_ = order;
    ctx->order_factors_ = std::move(order_factors);
    ctx->modulus_ = std::move(cand);
    ctx->generator_.assign(k, 0);
    if (k == 1)
        ctx->generator_[0] = (p - ctx->modulus_[0]) % p;
    else
        ctx->generator_[1] = 1;

    registry[key] = ctx;
    return ctx;
}

FieldElement FieldCtx::zero() const { return FieldElement(shared_from_this(), std::vector<uint64_t>(k_, 0)); }

FieldElement FieldCtx::one() const {
    std::vector<uint64_t> c(k_, 0);
    c[0] = 1;
    return FieldElement(shared_from_this(), std::move(c));
}

FieldElement FieldCtx::generator() const { return FieldElement(shared_from_this(), generator_); }

FieldElement FieldCtx::from_coeffs(std::vector<uint64_t> coeffs) const {
    if (coeffs.size() != static_cast<size_t>(k_)) fail("BadParams", "coefficient vector has wrong length");
    for (auto& c : coeffs) c %= p_;
    return FieldElement(shared_from_this(), std::move(coeffs));
}

FieldElement FieldCtx::from_index(uint64_t index) const {
    std::vector<uint64_t> c(k_, 0);
    for (int i = 0; i < k_; ++i) {
        c[i] = index % p_;
        index /= p_;
    }
    if (index) fail("BadParams", "element index out of range");
    return FieldElement(shared_from_this(), std::move(c));
}

FieldElement FieldCtx::from_int(int64_t value) const {
    std::vector<uint64_t> c(k_, 0);
    c[0] = static_cast<uint64_t>(mod_floor(value, static_cast<int64_t>(p_)));
    return FieldElement(shared_from_this(), std::move(c));
}

uint64_t element_order(const FieldElement& x) {
    if (!x.valid()) fail("BadParams", "invalid element");
    if (x.is_zero()) fail("ZeroElement", "order of zero is undefined");
    uint64_t d = x.ctx()->order_u64();
    for (auto [ell, e] : x.ctx()->order_factors()) {
        (void)e;
        while (d % ell == 0 && x.pow(BigInt(static_cast<int64_t>(d / ell))) == x.ctx()->one()) d /= ell;
    }
    return d;
}

bool in_subfield(const FieldElement& x, int sub_degree) {
    if (sub_degree < 1 || x.ctx()->k() % sub_degree != 0)
        fail("BadSubfield", "subfield degree " + std::to_string(sub_degree) + " does not divide " +
                                std::to_string(x.ctx()->k()));
    BigInt q_sub = BigInt::pow(BigInt(static_cast<int64_t>(x.ctx()->p())), static_cast<uint64_t>(sub_degree));
    return x.pow(q_sub) == x;
}

// ---- Embedding ----

namespace {

// Gauss-Jordan inverse of a square matrix over Z_p; returns empty on singular.
std::vector<std::vector<uint64_t>> gf_p_inverse(std::vector<std::vector<uint64_t>> m, uint64_t p) {
    const size_t n = m.size();
    std::vector<std::vector<uint64_t>> inv(n, std::vector<uint64_t>(n, 0));
    for (size_t i = 0; i < n; ++i) inv[i][i] = 1;
    for (size_t col = 0; col < n; ++col) {
        size_t piv = col;
        while (piv < n && m[piv][col] == 0) ++piv;
        if (piv == n) return {};
        std::swap(m[piv], m[col]);
        std::swap(inv[piv], inv[col]);
        uint64_t s = zp_inv(m[col][col], p);
        for (size_t j = 0; j < n; ++j) {
            m[col][j] = zp_mul(m[col][j], s, p);
            inv[col][j] = zp_mul(inv[col][j], s, p);
        }
        for (size_t row = 0; row < n; ++row) {
            if (row == col || m[row][col] == 0) continue;
            uint64_t f = m[row][col];
            for (size_t j = 0; j < n; ++j) {
                m[row][j] = (m[row][j] + p - zp_mul(f, m[col][j], p)) % p;
                inv[row][j] = (inv[row][j] + p - zp_mul(f, inv[col][j], p)) % p;
            }
        }
    }
    return inv;
}

std::vector<uint64_t> gf_p_matvec(const std::vector<std::vector<uint64_t>>& m, const std::vector<uint64_t>& v,
                                  uint64_t p) {
    std::vector<uint64_t> out(m.size(), 0);
    for (size_t i = 0; i < m.size(); ++i) {
        unsigned __int128 acc = 0;
        for (size_t j = 0; j < v.size(); ++j) acc += static_cast<unsigned __int128>(m[i][j]) * v[j];
        out[i] = static_cast<uint64_t>(acc % p);
    }
    return out;
}

}  // namespace

std::shared_ptr<const Embedding> Embedding::get(const FieldCtxPtr& small, const FieldCtxPtr& big) {
    static std::mutex mutex;
    static std::map<std::pair<const FieldCtx*, const FieldCtx*>, std::shared_ptr<const Embedding>> registry;

    if (small->p() != big->p()) fail("FieldMismatch", "embedding requires equal characteristic");
    if (big->k() % small->k() != 0) fail("BadSubfield", "small degree does not divide big degree");

    std::lock_guard<std::mutex> lock(mutex);
    auto key = std::make_pair(small.get(), big.get());
    if (auto it = registry.find(key); it != registry.end()) return it->second;

    auto emb = std::shared_ptr<Embedding>(new Embedding());
    emb->small_ = small;
    emb->big_ = big;
    emb->e_ = big->k() / small->k();
    const uint64_t p = small->p();
    const int a = small->k();
    const int K = big->k();

    if (emb->e_ == 1) {
        emb->rho_ = small->generator();
        registry[key] = emb;
        return emb;
    }

    // smallest-discrete-log root of the small modulus inside the big field
    uint64_t step = big->order_u64() / small->order_u64();
    FieldElement zstep = big->generator().pow(BigInt(static_cast<int64_t>(step)));
    FieldElement z = zstep;
    FieldElement rho;
    for (uint64_t j = 1; j < small->order_u64() + 1; ++j, z = z * zstep) {
        if (std::gcd(j, small->order_u64()) != 1) continue;
        // evaluate the small modulus at z (monic of degree a, Horner)
        FieldElement val = big->one();
        for (int i = a - 1; i >= 0; --i) val = val * z + big->from_int(static_cast<int64_t>(small->modulus()[i]));
        if (val.is_zero()) {
            rho = z;
            break;
        }
    }
    if (!rho.valid()) fail("Internal", "no embedding root found");

    emb->rho_ = rho;
    emb->rho_powers_.clear();
    FieldElement acc = big->one();
    for (int i = 0; i < a; ++i) {
        emb->rho_powers_.push_back(acc);
        acc = acc * rho;
    }

    // pullback solver: row-reduce the K x a matrix of rho-power coordinates,
    // tracking the row operations
    std::vector<std::vector<uint64_t>> m(K, std::vector<uint64_t>(a, 0));
    for (int i = 0; i < a; ++i)
        for (int row = 0; row < K; ++row) m[row][i] = emb->rho_powers_[i].coeffs()[row];
    std::vector<std::vector<uint64_t>> ops(K, std::vector<uint64_t>(K, 0));
    for (int i = 0; i < K; ++i) ops[i][i] = 1;
    int rank = 0;
    for (int col = 0; col < a; ++col) {
        int piv = rank;
        while (piv < K && m[piv][col] == 0) ++piv;
        if (piv == K) fail("Internal", "embedding matrix is rank-deficient");
        std::swap(m[piv], m[rank]);
        std::swap(ops[piv], ops[rank]);
        uint64_t s = zp_inv(m[rank][col], p);
        for (int j = 0; j < a; ++j) m[rank][j] = zp_mul(m[rank][j], s, p);
        for (int j = 0; j < K; ++j) ops[rank][j] = zp_mul(ops[rank][j], s, p);
        for (int row = 0; row < K; ++row) {
            if (row == rank || m[row][col] == 0) continue;
            uint64_t f = m[row][col];
            for (int j = 0; j < a; ++j) m[row][j] = (m[row][j] + p - zp_mul(f, m[rank][j], p)) % p;
            for (int j = 0; j < K; ++j) ops[row][j] = (ops[row][j] + p - zp_mul(f, ops[rank][j], p)) % p;
        }
        ++rank;
    }
    emb->pull_ops_ = std::move(ops);

    // change-of-basis matrix for {rho^i * G^t} and its inverse
    std::vector<std::vector<uint64_t>> basis(K, std::vector<uint64_t>(K, 0));
    FieldElement gpow = big->one();
    for (int t = 0; t < emb->e_; ++t) {
        for (int i = 0; i < a; ++i) {
            FieldElement v = emb->rho_powers_[i] * gpow;
            for (int row = 0; row < K; ++row) basis[row][t * a + i] = v.coeffs()[row];
        }
        gpow = gpow * big->generator();
    }
    emb->basis_inv_ = gf_p_inverse(std::move(basis), p);
    if (emb->basis_inv_.empty()) fail("Internal", "embedding basis is singular");

    registry[key] = emb;
    return emb;
}

FieldElement Embedding::embed(const FieldElement& y) const {
    if (y.ctx() != small_) fail("FieldMismatch", "embed expects a small-field element");
    if (e_ == 1) return y;
    FieldElement out = big_->zero();
    for (int i = 0; i < small_->k(); ++i) {
        if (!y.coeffs()[i]) continue;
        out = out + big_->from_int(static_cast<int64_t>(y.coeffs()[i])) * rho_powers_[i];
    }
    return out;
}

FieldElement Embedding::pullback(const FieldElement& x) const {
    if (x.ctx() != big_) fail("FieldMismatch", "pullback expects a big-field element");
    if (e_ == 1) return x;
    auto w = gf_p_matvec(pull_ops_, x.coeffs(), small_->p());
    std::vector<uint64_t> c(w.begin(), w.begin() + small_->k());
    FieldElement y = small_->from_coeffs(std::move(c));
    if (embed(y) != x) fail("NotGaloisStable", "element is not in the embedded subfield");
    return y;
}

bool Embedding::contains(const FieldElement& x) const {
    if (x.ctx() != big_) fail("FieldMismatch", "contains expects a big-field element");
    return in_subfield(x, small_->k());
}

std::vector<FieldElement> Embedding::decompose(const FieldElement& x) const {
    if (x.ctx() != big_) fail("FieldMismatch", "decompose expects a big-field element");
    if (e_ == 1) return {x};
    auto y = gf_p_matvec(basis_inv_, x.coeffs(), small_->p());
    std::vector<FieldElement> out;
    out.reserve(e_);
    for (int t = 0; t < e_; ++t) {
        std::vector<uint64_t> c(y.begin() + t * small_->k(), y.begin() + (t + 1) * small_->k());
        out.push_back(small_->from_coeffs(std::move(c)));
    }
    return out;
}

// ---- RootData ----

FieldElement RootData::omega_pow(int64_t i) const {
    return omega.pow(BigInt(mod_floor(i, rn())));
}

RootData make_root_data(uint64_t q, int64_t n, int64_t r) {
    if (n < 1 || r < 1) fail("BadParams", "need n >= 1 and r >= 1");
    Factorization qf = factorize(q);
    if (qf.size() != 1) fail("BadParams", std::to_string(q) + " is not a prime power");
    uint64_t p = qf[0].first;
    int a = qf[0].second;
    if (std::gcd(q, static_cast<uint64_t>(n)) != 1) fail("BadParams", "gcd(q, n) must be 1");
    if ((q - 1) % static_cast<uint64_t>(r) != 0) fail("BadParams", "r must divide q - 1");
    if (n > (int64_t{1} << 31) / r) fail("TooLarge", "rn exceeds supported range");

    RootData rd;
    rd.q = q;
    rd.n = n;
    rd.r = r;
    rd.ground = FieldCtx::create(p, a);

    int64_t rn = r * n;
    if (rn == 1) {
        rd.e = 1;
        rd.big = rd.ground;
        rd.embedding = Embedding::get(rd.ground, rd.big);
        rd.omega = rd.big->one();
        rd.lambda = rd.ground->one();
        return rd;
    }

    rd.e = unit_order(static_cast<int64_t>(q % static_cast<uint64_t>(rn)), static_cast<uint64_t>(rn));
    BigInt big_size = BigInt::pow(BigInt(static_cast<int64_t>(p)), static_cast<uint64_t>(a) * rd.e);
    if (big_size > BigInt::from_uint64(kMaxFieldSize))
        fail("TooLarge", "splitting field GF(" + std::to_string(q) + "^" + std::to_string(rd.e) +
                             ") exceeds the field-size cap");
    rd.big = rd.e == 1 ? rd.ground : FieldCtx::create(p, a * static_cast<int>(rd.e));
    rd.embedding = Embedding::get(rd.ground, rd.big);

    rd.lambda = rd.ground->generator().pow(BigInt(static_cast<int64_t>((q - 1) / static_cast<uint64_t>(r))));
    FieldElement target = rd.embedding->embed(rd.lambda);

    uint64_t ord = rd.big->order_u64();
    if (ord % static_cast<uint64_t>(rn) != 0) fail("Internal", "rn does not divide q^e - 1");
    FieldElement omega0 = rd.big->generator().pow(BigInt(static_cast<int64_t>(ord / static_cast<uint64_t>(rn))));
    FieldElement w = omega0;
    for (int64_t j = 1; j <= rn; ++j, w = w * omega0) {
        if (gcd_i64(j, rn) != 1) continue;
        if (w.pow(BigInt(n)) == target) {
            rd.omega = w;
            return rd;
        }
    }
    fail("Internal", "no omega with omega^n = lambda found");
}

}  // namespace polyadic
