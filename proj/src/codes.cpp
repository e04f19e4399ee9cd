#include "polyadic/codes.hpp"

#include <algorithm>
#include <unordered_set>

#include "polyadic/errors.hpp"

namespace polyadic {

const char* provenance_name(Provenance p) {
    switch (p) {
        case Provenance::Constacyclic: return "constacyclic";
        case Provenance::Grs: return "grs";
        case Provenance::SubfieldSubcode: return "subfield-subcode";
        case Provenance::Dual: return "dual";
    }
    return "unknown";
}

Poly x_n_minus_lambda(const RootData& rd) {
    return Poly::binomial_xn_minus(rd.ground, rd.n, rd.lambda);
}

Poly coset_minimal_poly(const std::vector<int64_t>& coset, const RootData& rd) {
    if (coset.empty()) return Poly(rd.ground, {rd.ground->one()});
    int64_t rn = rd.rn();
    std::unordered_set<int64_t> members(coset.begin(), coset.end());
    for (int64_t i : coset)
        if (!members.count(mod_floor(i * static_cast<int64_t>(rd.q % static_cast<uint64_t>(rn)), rn)))
            fail("NotGaloisStable", "input set is not closed under multiplication by q");
    Poly prod(rd.big, {rd.big->one()});
    for (int64_t i : coset) {
        Poly lin(rd.big, {-rd.omega_pow(i), rd.big->one()});
        prod = prod * lin;
    }
    // coefficients lie in the embedded ground field; re-express them there
    std::vector<FieldElement> ground_coeffs;
    ground_coeffs.reserve(prod.coeffs().size());
    for (const auto& c : prod.coeffs()) ground_coeffs.push_back(rd.embedding->pullback(c));
    return Poly(rd.ground, std::move(ground_coeffs));
}

LinearCode code_from_class(const std::vector<int64_t>& class_x, const RootData& rd) {
    Params params{rd.q, rd.n, rd.r};
    int64_t rn = params.rn();
    int64_t qm = static_cast<int64_t>(rd.q % static_cast<uint64_t>(rn));
    std::vector<int64_t> residues = residue_set(params);
    std::unordered_set<int64_t> residue_lookup(residues.begin(), residues.end());
    std::unordered_set<int64_t> cls(class_x.begin(), class_x.end());
    if (cls.size() != class_x.size()) fail("NotInvariant", "class contains duplicates");
    for (int64_t x : class_x) {
        if (!residue_lookup.count(x)) fail("NotInvariant", "class element outside 1 + r Z_rn");
        if (!cls.count(mod_floor(x * qm, rn))) fail("NotInvariant", "class is not mu_q-invariant");
    }

    Poly h(rd.ground, {rd.ground->one()});
    std::unordered_set<int64_t> visited;
    std::vector<int64_t> ordered(class_x.begin(), class_x.end());
    std::sort(ordered.begin(), ordered.end());
    for (int64_t x : ordered) {
        if (visited.count(x)) continue;
        std::vector<int64_t> coset;
        int64_t y = x;
        do {
            coset.push_back(y);
            visited.insert(y);
            y = mod_floor(y * qm, rn);
        } while (y != x);
        h = h * coset_minimal_poly(coset, rd);
    }

    Poly xnl = x_n_minus_lambda(rd);
    auto [g, rem] = Poly::divmod(xnl, h);
    if (!rem.is_zero()) fail("Internal", "check polynomial does not divide X^n - lambda");

    int64_t k = h.degree();
    Matrix gen(rd.ground, static_cast<size_t>(k), static_cast<size_t>(rd.n));
    for (int64_t i = 0; i < k; ++i)
        for (int64_t j = 0; j <= g.degree(); ++j) gen.at(static_cast<size_t>(i), static_cast<size_t>(i + j)) = g.coeff(j);

    std::vector<int64_t> zeros;
    for (int64_t x : residues)
        if (!cls.count(x)) zeros.push_back(x);

    LinearCode code;
    code.ctx = rd.ground;
    code.n = rd.n;
    code.k = k;
    code.gen = std::move(gen);
    code.provenance = Provenance::Constacyclic;
    code.constacyclic = ConstacyclicData{params, rd.lambda, g, h, std::move(zeros)};
    return code;
}

LinearCode grs_code(const GrsSpec& spec) {
    const int64_t n = static_cast<int64_t>(spec.locator.size());
    if (spec.multipliers.size() != spec.locator.size()) fail("BadParams", "locator/multiplier length mismatch");
    if (spec.k < 0 || spec.k > n) fail("BadParams", "dimension out of range");
    std::unordered_set<uint64_t> seen;
    for (const auto& a : spec.locator)
        if (!seen.insert(a.index()).second) fail("DuplicateLocator", "locator entries must be distinct");
    for (const auto& v : spec.multipliers)
        if (v.is_zero()) fail("ZeroMultiplier", "column multipliers must be nonzero");

    Matrix gen(spec.ctx, static_cast<size_t>(spec.k), static_cast<size_t>(n));
    for (int64_t t = 0; t < spec.k; ++t)
        for (int64_t j = 0; j < n; ++j)
            gen.at(static_cast<size_t>(t), static_cast<size_t>(j)) =
                spec.multipliers[static_cast<size_t>(j)] * spec.locator[static_cast<size_t>(j)].pow(t);

    LinearCode code;
    code.ctx = spec.ctx;
    code.n = n;
    code.k = spec.k;
    code.gen = std::move(gen);
    code.provenance = Provenance::Grs;
    return code;
}

LinearCode dual_code(const LinearCode& c) {
    LinearCode dual;
    dual.ctx = c.ctx;
    dual.n = c.n;
    dual.gen = nullspace(c.gen);
    dual.k = static_cast<int64_t>(dual.gen.rows);
    dual.provenance = Provenance::Dual;
    return dual;
}

bool is_self_dual(const LinearCode& c) {
    if (2 * c.k != c.n) return false;
    Matrix prod = mat_mul(c.gen, transpose(c.gen));
    return std::all_of(prod.data.begin(), prod.data.end(), [](const FieldElement& x) { return x.is_zero(); });
}

bool code_equal(const LinearCode& a, const LinearCode& b) {
    return a.ctx == b.ctx && a.n == b.n && a.k == b.k && row_space_equal(a.gen, b.gen);
}

std::vector<FieldElement> encode(const LinearCode& c, const std::vector<FieldElement>& message) {
    if (static_cast<int64_t>(message.size()) != c.k) fail("BadParams", "message length must equal k");
    std::vector<FieldElement> word(static_cast<size_t>(c.n), c.ctx->zero());
    for (size_t i = 0; i < message.size(); ++i) {
        if (message[i].is_zero()) continue;
        for (size_t j = 0; j < word.size(); ++j) word[j] = word[j] + message[i] * c.gen.at(i, j);
    }
    return word;
}

int64_t hamming_weight(const std::vector<FieldElement>& word) {
    return static_cast<int64_t>(std::count_if(word.begin(), word.end(), [](const FieldElement& x) { return !x.is_zero(); }));
}

namespace {

// Message enumeration with the first nonzero symbol pinned to 1 (weights are
// scalar-invariant), index-packed elements and a q x q addition table.
int64_t min_distance_indexed(const LinearCode& c) {
    const uint64_t q = c.ctx->size().to_uint64();
    const size_t n = static_cast<size_t>(c.n), k = static_cast<size_t>(c.k);
    std::vector<uint16_t> add(q * q);
    for (uint64_t a = 0; a < q; ++a) {
        FieldElement ea = c.ctx->from_index(a);
        for (uint64_t b = 0; b <= a; ++b) {
            uint16_t s = static_cast<uint16_t>((ea + c.ctx->from_index(b)).index());
            add[a * q + b] = s;
            add[b * q + a] = s;
        }
    }
    // scaled[d][t] = indices of t * row_d
    std::vector<std::vector<std::vector<uint16_t>>> scaled(k);
    for (size_t d = 0; d < k; ++d) {
        scaled[d].assign(q, std::vector<uint16_t>(n));
        for (uint64_t t = 0; t < q; ++t) {
            FieldElement et = c.ctx->from_index(t);
            for (size_t j = 0; j < n; ++j)
                scaled[d][t][j] = static_cast<uint16_t>((et * c.gen.at(d, j)).index());
        }
    }

    int64_t best = static_cast<int64_t>(n);
    std::vector<std::vector<uint16_t>> buf(k + 1, std::vector<uint16_t>(n, 0));

    auto weight_of = [&](const std::vector<uint16_t>& w) {
        int64_t count = 0;
        for (uint16_t x : w) count += x != 0;
        return count;
    };

    // depth-first over message symbols below the leading one
    auto descend = [&](auto&& self, size_t depth) -> void {
        if (best == 1) return;
        if (depth == k) {
            best = std::min(best, weight_of(buf[depth]));
            return;
        }
        const auto& partial = buf[depth];
        for (uint64_t t = 0; t < q; ++t) {
            if (t == 0) {
                buf[depth + 1] = partial;
            } else {
                const auto& sr = scaled[depth][t];
                for (size_t j = 0; j < n; ++j) buf[depth + 1][j] = add[partial[j] * q + sr[j]];
            }
            self(self, depth + 1);
        }
    };

    for (size_t lead = 0; lead < k; ++lead) {
        buf[lead + 1] = scaled[lead][1];
        descend(descend, lead + 1);
        if (best == 1) break;
    }
    return best;
}

int64_t min_distance_generic(const LinearCode& c) {
    const uint64_t q = c.ctx->size().to_uint64();
    const size_t n = static_cast<size_t>(c.n), k = static_cast<size_t>(c.k);
    int64_t best = static_cast<int64_t>(n);
    std::vector<std::vector<FieldElement>> buf(k + 1, std::vector<FieldElement>(n, c.ctx->zero()));
    auto descend = [&](auto&& self, size_t depth) -> void {
        if (best == 1) return;
        if (depth == k) {
            best = std::min(best, hamming_weight(buf[depth]));
            return;
        }
        for (uint64_t t = 0; t < q; ++t) {
            FieldElement et = c.ctx->from_index(t);
            for (size_t j = 0; j < n; ++j) buf[depth + 1][j] = buf[depth][j] + et * c.gen.at(depth, j);
            self(self, depth + 1);
        }
    };
    for (size_t lead = 0; lead < k; ++lead) {
        for (size_t j = 0; j < n; ++j) buf[lead + 1][j] = c.gen.at(lead, j);
        descend(descend, lead + 1);
        if (best == 1) break;
    }
    return best;
}

}  // namespace

std::optional<int64_t> min_distance_exhaustive(const LinearCode& c, int64_t budget) {
    if (c.k == 0) return std::nullopt;  // zero code: distance undefined
    BigInt messages = BigInt::pow(c.ctx->size(), static_cast<uint64_t>(c.k));
    if (messages > BigInt(budget))
        fail("TooLarge", "q^k = " + messages.to_string() + " exceeds the enumeration budget " +
                             std::to_string(budget));
    if (rank(c.gen) != static_cast<size_t>(c.k)) fail("Internal", "generator matrix is not full rank");
    if (c.ctx->size() <= BigInt(1024)) return min_distance_indexed(c);
    return min_distance_generic(c);
}

LinearCode multiplier_isometry(const LinearCode& c, int64_t s) {
    if (!c.constacyclic) fail("BadParams", "multiplier isometry requires a constacyclic code");
    const ConstacyclicData& data = *c.constacyclic;
    const Params& params = data.params;
    if (!is_multiplier_candidate(params, s))
        fail("BadMultiplier", std::to_string(s) + " is not a splitting multiplier candidate");
    const int64_t rn = params.rn();
    const int64_t n = c.n;
    const int64_t lift = mod_floor(s, rn);

    Matrix gen(c.ctx, static_cast<size_t>(c.k), static_cast<size_t>(n));
    for (size_t row = 0; row < static_cast<size_t>(c.k); ++row) {
        for (int64_t i = 0; i < n; ++i) {
            const FieldElement& a = c.gen.at(row, static_cast<size_t>(i));
            if (a.is_zero()) continue;
            int64_t e = i * lift;
            FieldElement scaled = a * data.lambda.pow(e / n);
            size_t target = static_cast<size_t>(e % n);
            gen.at(row, target) = gen.at(row, target) + scaled;
        }
    }
    if (rank(gen) != static_cast<size_t>(c.k)) fail("Internal", "isometry image lost rank");

    // the image is again an ideal; recover its generator polynomial
    Poly xnl = Poly::binomial_xn_minus(c.ctx, n, data.lambda);
    Poly g = xnl;
    for (size_t row = 0; row < gen.rows; ++row) g = Poly::gcd(g, Poly(c.ctx, gen.row(row)));
    if (g.degree() != n - c.k) fail("Internal", "isometry image is not the expected ideal");
    auto [h, rem] = Poly::divmod(xnl, g);
    if (!rem.is_zero()) fail("Internal", "image generator does not divide X^n - lambda");

    // zero exponents transform by the inverse multiplier
    int64_t sinv = 0;
    if (rn > 1) {
        int64_t t0 = 0, t1 = 1, r0 = rn, r1 = lift;
        while (r1) {
            int64_t qq = r0 / r1;
            r0 -= qq * r1;
            std::swap(r0, r1);
            t0 -= qq * t1;
            std::swap(t0, t1);
        }
        sinv = mod_floor(t0, rn);
    }
    std::vector<int64_t> zeros;
    zeros.reserve(data.zero_exponents.size());
    for (int64_t z : data.zero_exponents) zeros.push_back(mod_floor(z * sinv, rn));
    std::sort(zeros.begin(), zeros.end());

    LinearCode out;
    out.ctx = c.ctx;
    out.n = n;
    out.k = c.k;
    out.gen = std::move(gen);
    out.provenance = Provenance::Constacyclic;
    out.constacyclic = ConstacyclicData{params, data.lambda, g, h, std::move(zeros)};
    return out;
}

bool direct_sum_check(const Splitting& sp, const RootData& rd) {
    int64_t total = 0;
    std::vector<std::vector<FieldElement>> rows;
    for (const auto& cls : sp.classes) {
        LinearCode c = code_from_class(cls, rd);
        total += c.k;
        for (size_t i = 0; i < c.gen.rows; ++i) rows.push_back(c.gen.row(i));
    }
    if (total != rd.n) return false;
    Matrix stacked = Matrix::from_rows(rd.ground, rows);
    return rank(stacked) == static_cast<size_t>(rd.n);
}

GrsEqualityReport grs_equals_constacyclic(const Params& params, int64_t p, int64_t k_classes) {
    if (k_classes <= 0 || k_classes >= p) fail("BadParams", "need 0 < k < p");
    Splitting sp = padic_standard_splitting(params, p);
    RootData rd = make_root_data(params.q, params.n, params.r);
    if (rd.e != 1) fail("Internal", "standard p-adic splitting expects omega in the ground field");

    std::vector<int64_t> joined;
    for (int64_t j = 0; j < k_classes; ++j)
        joined.insert(joined.end(), sp.classes[static_cast<size_t>(j)].begin(), sp.classes[static_cast<size_t>(j)].end());
    std::sort(joined.begin(), joined.end());

    GrsEqualityReport report;
    report.code = code_from_class(joined, rd);

    report.grs.ctx = rd.big;
    report.grs.k = k_classes * params.n / p;
    for (int64_t j = 0; j < params.n; ++j) {
        report.grs.locator.push_back(rd.omega_pow(-params.r * j));
        report.grs.multipliers.push_back(rd.omega_pow(-j));
    }
    report.dimension_ok = report.code.k == report.grs.k;

    // every GRS generator row, read as a polynomial, vanishes at the zeros of C
    LinearCode grs = grs_code(report.grs);
    report.zeros_ok = true;
    for (size_t row = 0; row < grs.gen.rows && report.zeros_ok; ++row) {
        Poly cw(rd.ground, grs.gen.row(row));
        for (int64_t t : report.code.constacyclic->zero_exponents) {
            if (!cw.eval(rd.omega_pow(t)).is_zero()) {
                report.zeros_ok = false;
                break;
            }
        }
    }
    report.equal = report.dimension_ok && report.zeros_ok;
    if (report.equal) report.certified_distance = params.n - report.grs.k + 1;
    return report;
}

MdsCertificate certify_mds_via_grs(const LinearCode& c, const GrsSpec& parent, const Embedding& emb) {
    const int64_t n = c.n;
    if (static_cast<int64_t>(parent.locator.size()) != n) fail("BadParams", "parent length mismatch");
    if (c.ctx != emb.small() || parent.ctx != emb.big()) fail("FieldMismatch", "embedding does not match the codes");
    if (2 * parent.k != n) fail("DimMismatch", "parent GRS dimension must be n/2");

    LinearCode parent_code = grs_code(parent);
    Matrix parity = nullspace(parent_code.gen);
    for (size_t row = 0; row < static_cast<size_t>(c.k); ++row) {
        std::vector<FieldElement> embedded;
        embedded.reserve(static_cast<size_t>(n));
        for (int64_t j = 0; j < n; ++j) embedded.push_back(emb.embed(c.gen.at(row, static_cast<size_t>(j))));
        for (size_t i = 0; i < parity.rows; ++i) {
            FieldElement acc = emb.big()->zero();
            for (int64_t j = 0; j < n; ++j) acc = acc + parity.at(i, static_cast<size_t>(j)) * embedded[static_cast<size_t>(j)];
            if (!acc.is_zero()) fail("NotSubcode", "a generator row falls outside the parent GRS code");
        }
    }
    if (2 * c.k != n) fail("DimMismatch", "subfield code dimension must be n/2");

    MdsCertificate cert;
    cert.member_ok = true;
    cert.dimension_ok = true;
    cert.parent_dimension = parent.k;
    cert.certified_distance = n - parent.k + 1;
    return cert;
}

LinearCode subfield_subcode(const LinearCode& big_code, const Embedding& emb) {
    if (big_code.ctx != emb.big()) fail("FieldMismatch", "code is not over the embedding's big field");
    Matrix parity = nullspace(big_code.gen);
    const size_t n = static_cast<size_t>(big_code.n);
    const int e = emb.e();

    std::vector<std::vector<FieldElement>> rows;
    rows.reserve(parity.rows * static_cast<size_t>(e));
    for (size_t i = 0; i < parity.rows; ++i) {
        std::vector<std::vector<FieldElement>> split(static_cast<size_t>(e),
                                                     std::vector<FieldElement>(n, emb.small()->zero()));
        for (size_t j = 0; j < n; ++j) {
            auto parts = emb.decompose(parity.at(i, j));
            for (int t = 0; t < e; ++t) split[static_cast<size_t>(t)][j] = parts[static_cast<size_t>(t)];
        }
        for (auto& r : split) rows.push_back(std::move(r));
    }

    LinearCode out;
    out.ctx = emb.small();
    out.n = big_code.n;
    if (rows.empty()) {
        // full space: no parity constraints
        Matrix id(emb.small(), n, n);
        for (size_t i = 0; i < n; ++i) id.at(i, i) = emb.small()->one();
        out.gen = std::move(id);
    } else {
        out.gen = nullspace(Matrix::from_rows(emb.small(), rows));
    }
    out.k = static_cast<int64_t>(out.gen.rows);
    out.provenance = Provenance::SubfieldSubcode;
    return out;
}

// ---- families ----

bool BuildReport::all_pass() const {
    return std::all_of(checks.begin(), checks.end(), [](const CheckResult& c) { return c.pass; });
}

namespace {

void add_check(BuildReport& rep, const std::string& name, bool pass, const std::string& detail = "") {
    rep.checks.push_back({name, pass, detail});
}

// Runs the distance step shared by the families: exhaustive when q^dim fits
// the budget, otherwise certified when a certificate distance is available.
void distance_step(BuildReport& rep, int64_t expected, std::optional<int64_t> certified, int64_t budget) {
    BigInt messages = BigInt::pow(rep.code.ctx->size(), static_cast<uint64_t>(rep.code.k));
    if (!messages.fits_int64() || messages.to_int64() > budget) {
        if (certified) {
            rep.certified_distance = certified;
            rep.distance_mode = "certified";
            add_check(rep, "distance", *certified == expected,
                      "certified d = " + std::to_string(*certified) + ", expected " + std::to_string(expected));
        } else {
            rep.distance_mode = "unverified";
            add_check(rep, "distance", false, "enumeration over budget and no certificate available");
        }
        return;
    }
    auto d = min_distance_exhaustive(rep.code, budget);
    rep.distance = d;
    rep.certified_distance = certified;
    rep.distance_mode = "exhaustive";
    bool pass = d && *d == expected && (!certified || *certified == expected);
    add_check(rep, "distance", pass,
              "exhaustive d = " + (d ? std::to_string(*d) : std::string("undefined")) + ", expected " +
                  std::to_string(expected));
}

}  // namespace

BuildReport build_padic_family(uint64_t q, int64_t n, int64_t r, int64_t p, int64_t k_classes, int64_t budget) {
    BuildReport rep;
    rep.family = "padic";
    rep.params = make_params(q, n, r);
    rep.splitting = padic_standard_splitting(rep.params, p);
    add_check(rep, "splitting_valid", true, "standard p-adic splitting validated");

    GrsEqualityReport ge = grs_equals_constacyclic(rep.params, p, k_classes);
    rep.code = ge.code;
    add_check(rep, "dimension", ge.dimension_ok,
              "dim = " + std::to_string(ge.code.k) + ", expected " + std::to_string(ge.grs.k));
    add_check(rep, "grs_zero_containment", ge.zeros_ok, "GRS generators vanish at the code zeros");
    add_check(rep, "grs_equal", ge.equal, "direct sum equals the GRS code");

    int64_t expected = rep.params.n - ge.grs.k + 1;
    distance_step(rep, expected, ge.equal ? std::optional<int64_t>(ge.certified_distance) : std::nullopt, budget);
    return rep;
}

BuildReport build_duadic_negacyclic(uint64_t q, int64_t n, int64_t budget) {
    BuildReport rep = build_padic_family(q, n, 2, 2, 1, budget);
    rep.family = "duadic-neg";
    try {
        Splitting alt{rep.params, 2, rep.params.rn() - 1, rep.splitting.classes};
        validate_splitting(alt);
        add_check(rep, "mu_minus1_splitting", true, "mu_{-1} swaps the two classes");
    } catch (const Error& e) {
        add_check(rep, "mu_minus1_splitting", false, e.what());
    }
    add_check(rep, "exists_mu_minus1", exists_duadic_mu_minus1(rep.params), "existence predicate");
    add_check(rep, "self_dual", is_self_dual(rep.code), "G G^T = 0 and 2k = n");
    return rep;
}

namespace {

void require_odd_prime_power(uint64_t q) {
    Factorization f = factorize(q);
    if (f.size() != 1 || f[0].first == 2) fail("HypothesisViolated", "q must be an odd prime power");
}

void alternant_certificate_steps(BuildReport& rep, const GrsSpec& parent, const RootData& rd, int64_t budget) {
    std::optional<int64_t> certified;
    try {
        MdsCertificate cert = certify_mds_via_grs(rep.code, parent, *rd.embedding);
        certified = cert.certified_distance;
        add_check(rep, "mds_membership", true, "generators lie in the parent GRS code");
        add_check(rep, "mds_dimension", true, "dim = n/2 = n - k_parent");
    } catch (const Error& e) {
        add_check(rep, "mds_certificate", false, e.what());
    }
    LinearCode alternant = subfield_subcode(grs_code(parent), *rd.embedding);
    add_check(rep, "alternant_subcode_equal", code_equal(alternant, rep.code),
              "subfield subcode of the parent GRS equals the constacyclic code");
    distance_step(rep, rep.code.n / 2 + 1, certified, budget);
}

}  // namespace

BuildReport build_negacyclic_alternant(uint64_t q, int64_t ell, int64_t budget) {
    require_odd_prime_power(q);
    if (ell < 1 || ell % 2 == 0) fail("HypothesisViolated", "ell must be odd and positive");
    if ((q + 1) % static_cast<uint64_t>(ell) != 0) fail("HypothesisViolated", "ell must divide q + 1");
    int64_t n = static_cast<int64_t>((q + 1) / static_cast<uint64_t>(ell));
    if (n < 2 || n % 2 != 0) fail("HypothesisViolated", "length (q+1)/ell must be even and >= 2");

    BuildReport rep;
    rep.family = "alternant57";
    rep.params = make_params(q, n, 2);
    RootData rd = make_root_data(q, n, 2);

    std::vector<int64_t> x0, x1;
    for (int64_t i = 1; i < n; i += 2) x0.push_back(i);
    for (int64_t i = n + 1; i < 2 * n; i += 2) x1.push_back(i);
    rep.splitting = Splitting{rep.params, 2, rep.params.rn() - 1, {x0, x1}};
    try {
        validate_splitting(rep.splitting);
        add_check(rep, "splitting_mu_minus1", true, "odd/even-half classes split under mu_{-1}");
    } catch (const Error& e) {
        add_check(rep, "splitting_mu_minus1", false, e.what());
    }

    rep.code = code_from_class(x0, rd);
    add_check(rep, "dimension", rep.code.k == n / 2, "dim = " + std::to_string(rep.code.k));
    add_check(rep, "self_dual", is_self_dual(rep.code), "G G^T = 0 and 2k = n");

    GrsSpec parent;
    parent.ctx = rd.big;
    parent.k = n / 2;
    for (int64_t j = 0; j < n; ++j) {
        parent.locator.push_back(rd.omega_pow(-2 * j));
        parent.multipliers.push_back(rd.omega_pow(-j));
    }
    alternant_certificate_steps(rep, parent, rd, budget);
    return rep;
}

BuildReport build_constacyclic_alternant(uint64_t q, int64_t budget) {
    require_odd_prime_power(q);
    if (nu_p(2, BigInt::from_uint64(q - 1)) < ExtVal(3)) fail("HypothesisViolated", "nu_2(q - 1) >= 3 required");

    int64_t qi = static_cast<int64_t>(q);
    int64_t r = (qi - 1) / 2;
    int64_t n = qi + 1;
    int64_t s = 1 + (qi * qi - 1) / 4;

    BuildReport rep;
    rep.family = "alternant59";
    rep.params = make_params(q, n, r);
    int64_t rn = rep.params.rn();
    RootData rd = make_root_data(q, n, r);

    std::vector<int64_t> x0;
    for (int64_t j = -(qi - 1) / 4 + 1; j <= (qi - 1) / 4 + 1; ++j) x0.push_back(mod_floor(1 + r * j, rn));
    std::sort(x0.begin(), x0.end());
    std::unordered_set<int64_t> x0_set(x0.begin(), x0.end());
    std::vector<int64_t> x1;
    for (int64_t x : residue_set(rep.params))
        if (!x0_set.count(x)) x1.push_back(x);

    bool disjoint = true;
    for (int64_t x : x0)
        if (x0_set.count(mod_floor(x * s, rn))) {
            disjoint = false;
            break;
        }
    add_check(rep, "disjoint_shift", disjoint, "s X_0 does not meet X_0");

    rep.splitting = Splitting{rep.params, 2, mod_floor(s, rn), {x0, x1}};
    try {
        validate_splitting(rep.splitting);
        add_check(rep, "splitting_valid", true, "mu_s swaps X_0 and X_1");
    } catch (const Error& e) {
        add_check(rep, "splitting_valid", false, e.what());
    }

    rep.code = code_from_class(x1, rd);
    add_check(rep, "dimension", rep.code.k == n / 2, "dim = " + std::to_string(rep.code.k));

    GrsSpec parent;
    parent.ctx = rd.big;
    parent.k = n / 2;
    for (int64_t j = 0; j < n; ++j) {
        parent.locator.push_back(rd.omega_pow(r * j));
        parent.multipliers.push_back(rd.omega_pow((qi - 1) / 4 * j * r - j));
    }
    alternant_certificate_steps(rep, parent, rd, budget);
    return rep;
}

}  // namespace polyadic
