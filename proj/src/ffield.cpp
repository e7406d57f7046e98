#include "ffield.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace brc {

namespace {

constexpr uint64_t kMaxFieldSize = 1u << 20;
constexpr uint32_t kMaxDegree = 10;

bool is_prime_small(uint64_t n) {
    if (n < 2) return false;
    for (uint64_t d = 2; d * d <= n; ++d)
        if (n % d == 0) return false;
    return true;
}

std::vector<uint64_t> prime_factors(uint64_t n) {
    std::vector<uint64_t> out;
    for (uint64_t d = 2; d * d <= n; ++d) {
        if (n % d == 0) {
            out.push_back(d);
            while (n % d == 0) n /= d;
        }
    }
    if (n > 1) out.push_back(n);
    return out;
}

// Dense polynomials over F_p, coefficient lists without a fixed length.
using Poly = std::vector<uint32_t>;

void trim(Poly& f) {
    while (!f.empty() && f.back() == 0) f.pop_back();
}

Poly poly_mul(const Poly& a, const Poly& b, uint64_t p) {
    if (a.empty() || b.empty()) return {};
    Poly c(a.size() + b.size() - 1, 0);
    for (size_t i = 0; i < a.size(); ++i) {
        if (a[i] == 0) continue;
        for (size_t j = 0; j < b.size(); ++j)
            c[i + j] = (c[i + j] + uint64_t(a[i]) * b[j]) % p;
    }
    trim(c);
    return c;
}

// Remainder of a modulo monic g.
Poly poly_mod(Poly a, const Poly& g, uint64_t p) {
    trim(a);
    const size_t dg = g.size() - 1;
    while (a.size() > dg) {
        uint32_t lead = a.back();
        size_t shift = a.size() - 1 - dg;
        if (lead != 0) {
            for (size_t i = 0; i < g.size(); ++i) {
                uint64_t sub = (uint64_t(lead) * g[i]) % p;
                uint64_t cur = a[shift + i];
                a[shift + i] = uint32_t((cur + p - sub) % p);
            }
        }
        a.pop_back();
        trim(a);
        if (a.size() <= dg) break;
    }
    return a;
}

bool poly_divides(const Poly& d, const Poly& f, uint64_t p) {
    return poly_mod(f, d, p).empty();
}

uint32_t poly_eval(const Poly& f, uint32_t x, uint64_t p) {
    uint64_t acc = 0;
    for (size_t i = f.size(); i-- > 0;)
        acc = (acc * x + f[i]) % p;
    return uint32_t(acc);
}

// Irreducibility over F_p. Degree <= 3 is settled by the absence of
// roots; up to degree 10 we search monic divisors of degree <= deg/2
// exhaustively.
bool poly_irreducible(const Poly& f, uint64_t p) {
    const size_t deg = f.size() - 1;
    if (deg == 1) return true;
    for (uint32_t x = 0; x < p; ++x)
        if (poly_eval(f, x, p) == 0) return false;
    if (deg <= 3) return true;
    for (size_t dd = 2; dd <= deg / 2; ++dd) {
        // all monic polynomials of degree dd
        uint64_t count = 1;
        for (size_t i = 0; i < dd; ++i) count *= p;
        for (uint64_t code = 0; code < count; ++code) {
            Poly d(dd + 1, 0);
            uint64_t c = code;
            for (size_t i = 0; i < dd; ++i) {
                d[i] = uint32_t(c % p);
                c /= p;
            }
            d[dd] = 1;
            if (poly_divides(d, f, p)) return false;
        }
    }
    return true;
}

}  // namespace

uint32_t FieldSpec::add_digits(uint32_t a, uint32_t b) const {
    if (p_ == 2) return a ^ b;
    if (k_ == 1) return uint32_t((uint64_t(a) + b) % p_);
    uint32_t out = 0, mult = 1;
    for (uint32_t i = 0; i < k_; ++i) {
        uint32_t da = a % p_, db = b % p_;
        a /= p_;
        b /= p_;
        uint32_t s = da + db;
        if (s >= p_) s -= uint32_t(p_);
        out += s * mult;
        mult *= uint32_t(p_);
    }
    return out;
}

uint32_t FieldSpec::mul_poly(uint32_t a, uint32_t b) const {
    Poly fa(k_), fb(k_);
    for (uint32_t i = 0; i < k_; ++i) {
        fa[i] = a % p_;
        a /= p_;
        fb[i] = b % p_;
        b /= p_;
    }
    Poly prod = poly_mod(poly_mul(fa, fb, p_), modulus_, p_);
    uint32_t out = 0, mult = 1;
    for (uint32_t i = 0; i < k_; ++i) {
        if (i < prod.size()) out += prod[i] * mult;
        mult *= uint32_t(p_);
    }
    return out;
}

FieldRef build_field_uncached(uint64_t p, uint32_t k) {
    if (!is_prime_small(p))
        throw std::invalid_argument("build_field: characteristic " + std::to_string(p) + " is not prime");
    if (k < 1 || k > kMaxDegree)
        throw std::invalid_argument("build_field: degree must be in [1,10]");
    uint64_t q = 1;
    for (uint32_t i = 0; i < k; ++i) {
        q *= p;
        if (q > kMaxFieldSize)
            throw std::invalid_argument("build_field: field size exceeds 2^20");
    }

    auto spec = std::shared_ptr<FieldSpec>(new FieldSpec());
    spec->p_ = p;
    spec->k_ = k;
    spec->q_ = q;

    // Least monic irreducible modulus of degree k.
    if (k == 1) {
        spec->modulus_ = {0, 1};  // x
    } else {
        uint64_t span = q;  // p^k candidate tails
        bool found = false;
        for (uint64_t code = 0; code < span && !found; ++code) {
            Poly f(k + 1, 0);
            uint64_t c = code;
            for (uint32_t i = 0; i < k; ++i) {
                f[i] = uint32_t(c % p);
                c /= p;
            }
            f[k] = 1;
            if (poly_irreducible(f, p)) {
                spec->modulus_ = f;
                found = true;
            }
        }
        if (!found) throw std::logic_error("no irreducible polynomial found");  // cannot happen
    }

    // Locate a generator of the multiplicative group, then build the
    // discrete log tables and pick the least generator as the primitive
    // element.
    auto factors = prime_factors(q - 1);
    auto pow_plain = [&](uint32_t a, uint64_t e) {
        uint32_t acc = 1;
        uint32_t base = a;
        while (e) {
            if (e & 1) acc = spec->mul_poly(acc, base);
            base = spec->mul_poly(base, base);
            e >>= 1;
        }
        return acc;
    };
    uint32_t g0 = 0;
    for (uint32_t a = 1; a < q; ++a) {
        bool gen = true;
        for (uint64_t r : factors) {
            if (pow_plain(a, (q - 1) / r) == 1) {
                gen = false;
                break;
            }
        }
        if (gen) {
            g0 = a;
            break;
        }
    }

    std::vector<uint32_t> logt(q, 0);
    std::vector<uint32_t> powt(q - 1, 0);
    uint32_t acc = 1;
    for (uint64_t i = 0; i < q - 1; ++i) {
        powt[i] = acc;
        logt[acc] = uint32_t(i);
        acc = spec->mul_poly(acc, g0);
    }

    uint32_t primitive = g0;
    for (uint32_t a = 2; a < q; ++a) {
        if (std::gcd(uint64_t(logt[a]), q - 1) == 1) {
            primitive = a;
            break;
        }
    }
    if (primitive != g0) {
        // Re-express the tables with respect to the chosen primitive element.
        std::vector<uint32_t> powt2(q - 1), logt2(q, 0);
        uint32_t acc2 = 1;
        for (uint64_t i = 0; i < q - 1; ++i) {
            powt2[i] = acc2;
            logt2[acc2] = uint32_t(i);
            acc2 = spec->mul_poly(acc2, primitive);
        }
        powt.swap(powt2);
        logt.swap(logt2);
    }
    spec->primitive_ = primitive;
    spec->pow_table_ = std::move(powt);
    spec->log_table_ = std::move(logt);

    if (q <= 256) {
        spec->add_table_.resize(q * q);
        for (uint32_t a = 0; a < q; ++a)
            for (uint32_t b = 0; b < q; ++b)
                spec->add_table_[a * q + b] = spec->add_digits(a, b);
    }

    // Sanity: the primitive element must have full order.
    uint64_t ord = q - 1;
    for (uint64_t r : factors)
        if (pow_plain(spec->primitive_, (q - 1) / r) == 1) ord = 0;
    if (ord != q - 1) throw std::logic_error("primitive element check failed");

    return spec;
}

FieldRef FieldSpec::get(uint64_t p, uint32_t k) {
    static std::mutex mu;
    static std::map<std::pair<uint64_t, uint32_t>, FieldRef> cache;
    std::lock_guard<std::mutex> lock(mu);
    auto key = std::make_pair(p, k);
    auto it = cache.find(key);
    if (it != cache.end()) return it->second;
    FieldRef spec = build_field_uncached(p, k);
    cache[key] = spec;
    return spec;
}

uint32_t FieldSpec::add(uint32_t a, uint32_t b) const {
    if (!add_table_.empty()) return add_table_[a * q_ + b];
    return add_digits(a, b);
}

uint32_t FieldSpec::neg(uint32_t a) const {
    if (p_ == 2) return a;
    uint32_t out = 0, mult = 1;
    for (uint32_t i = 0; i < k_; ++i) {
        uint32_t d = a % p_;
        a /= p_;
        out += (d == 0 ? 0 : uint32_t(p_) - d) * mult;
        mult *= uint32_t(p_);
    }
    return out;
}

uint32_t FieldSpec::mul(uint32_t a, uint32_t b) const {
    if (a == 0 || b == 0) return 0;
    uint64_t e = uint64_t(log_table_[a]) + log_table_[b];
    if (e >= q_ - 1) e -= q_ - 1;
    return pow_table_[e];
}

uint32_t FieldSpec::inv(uint32_t a) const {
    if (a == 0) throw std::domain_error("field inverse of zero");
    uint64_t e = log_table_[a];
    return pow_table_[e == 0 ? 0 : q_ - 1 - e];
}

uint32_t FieldSpec::pow(uint32_t a, uint64_t e) const {
    if (a == 0) return e == 0 ? 1 : 0;
    uint64_t le = (uint64_t(log_table_[a]) * (e % (q_ - 1))) % (q_ - 1);
    return pow_table_[le];
}

uint32_t FieldSpec::frobenius(uint32_t a, uint32_t i) const {
    if (a == 0) return 0;
    i %= k_;
    uint64_t pe = 1;
    for (uint32_t j = 0; j < i; ++j) pe = (pe * p_) % (q_ - 1);
    return pow_table_[(uint64_t(log_table_[a]) * pe) % (q_ - 1)];
}

uint64_t FieldSpec::element_order(uint32_t a) const {
    if (a == 0) throw std::domain_error("multiplicative order of zero");
    return (q_ - 1) / std::gcd(uint64_t(log_table_[a]), q_ - 1);
}

uint64_t FieldSpec::dlog(uint32_t a) const {
    if (a == 0) throw std::domain_error("dlog of zero");
    return log_table_[a];
}

uint32_t FieldSpec::primitive_power(uint64_t e) const {
    return pow_table_[e % (q_ - 1)];
}

std::vector<uint32_t> FieldSpec::coeffs(uint32_t a) const {
    std::vector<uint32_t> out(k_);
    for (uint32_t i = 0; i < k_; ++i) {
        out[i] = a % p_;
        a /= p_;
    }
    return out;
}

uint32_t FieldSpec::from_coeffs(const std::vector<uint32_t>& c) const {
    if (c.size() > k_) throw std::invalid_argument("coefficient list longer than degree");
    uint32_t out = 0, mult = 1;
    for (uint32_t i = 0; i < k_; ++i) {
        uint32_t d = i < c.size() ? c[i] : 0;
        if (d >= p_) throw std::invalid_argument("coefficient not reduced mod p");
        out += d * mult;
        mult *= uint32_t(p_);
    }
    return out;
}

std::string FieldSpec::encode(uint32_t a) const {
    std::ostringstream os;
    os << p_ << '^' << k_ << ":[";
    auto c = coeffs(a);
    for (uint32_t i = 0; i < k_; ++i) {
        if (i) os << ',';
        os << c[i];
    }
    os << ']';
    return os.str();
}

std::string FieldSpec::name() const {
    std::ostringstream os;
    os << "F_" << q_;
    return os.str();
}

bool FieldSpec::has_subfield(const FieldSpec& sub) const {
    return sub.p_ == p_ && k_ % sub.k_ == 0;
}

FieldElem operator+(const FieldElem& a, const FieldElem& b) {
    if (a.field != b.field) throw std::invalid_argument("field mismatch");
    return {a.field, a.field->add(a.code, b.code)};
}

FieldElem operator-(const FieldElem& a, const FieldElem& b) {
    if (a.field != b.field) throw std::invalid_argument("field mismatch");
    return {a.field, a.field->sub(a.code, b.code)};
}

FieldElem operator*(const FieldElem& a, const FieldElem& b) {
    if (a.field != b.field) throw std::invalid_argument("field mismatch");
    return {a.field, a.field->mul(a.code, b.code)};
}

bool operator==(const FieldElem& a, const FieldElem& b) {
    return a.field == b.field && a.code == b.code;
}

FieldElem FieldElem::inverse() const { return {field, field->inv(code)}; }
FieldElem FieldElem::pow(uint64_t e) const { return {field, field->pow(code, e)}; }
FieldElem FieldElem::frobenius(uint32_t i) const { return {field, field->frobenius(code, i)}; }

namespace {

// Expresses elements of ext in the basis {y^s x^r : s < j, r < m} where
// y is the least root of base's modulus in ext. Returns, per element,
// the m base-codes. Built once per (base, ext) pair and cached.
struct EmbeddingCtx {
    FieldRef base, ext;
    uint32_t j, m, k;
    uint32_t root;                      // image of base's generator inside ext
    std::vector<uint32_t> basis_inv;    // k x k matrix over F_p, row-major

    // digits(d) * basis = coordinates, so coords = digits(d) * basis_inv.
    std::vector<uint32_t> to_base_coords(uint32_t d) const {
        const uint64_t p = ext->characteristic();
        std::vector<uint32_t> digits = ext->coeffs(d);
        std::vector<uint32_t> coords(k, 0);
        for (uint32_t c = 0; c < k; ++c) {
            uint64_t acc = 0;
            for (uint32_t t = 0; t < k; ++t)
                acc += uint64_t(digits[t]) * basis_inv[t * k + c];
            coords[c] = uint32_t(acc % p);
        }
        // coords index (r * j + s) -> coefficient of y^s x^r
        std::vector<uint32_t> out(m, 0);
        for (uint32_t r = 0; r < m; ++r) {
            uint32_t code = 0, mult = 1;
            for (uint32_t s = 0; s < j; ++s) {
                code += coords[r * j + s] * mult;
                mult *= uint32_t(p);
            }
            out[r] = code;
        }
        return out;
    }
};

const EmbeddingCtx& embedding_ctx(const FieldRef& base, const FieldRef& ext) {
    static std::mutex mu;
    static std::map<std::pair<const FieldSpec*, const FieldSpec*>, EmbeddingCtx> cache;
    std::lock_guard<std::mutex> lock(mu);
    auto key = std::make_pair(base.get(), ext.get());
    auto it = cache.find(key);
    if (it != cache.end()) return it->second;

    if (!ext->has_subfield(*base))
        throw std::invalid_argument("not an extension: " + ext->name() + " over " + base->name());

    EmbeddingCtx ctx;
    ctx.base = base;
    ctx.ext = ext;
    ctx.j = base->degree();
    ctx.k = ext->degree();
    ctx.m = ctx.k / ctx.j;
    const uint64_t p = ext->characteristic();

    // Least root of base's modulus inside ext.
    const auto& mod = base->modulus();
    ctx.root = 0;
    bool found = false;
    for (uint32_t y = 0; y < ext->size() && !found; ++y) {
        uint32_t acc = 0;
        for (size_t i = mod.size(); i-- > 0;)
            acc = ext->add(ext->mul(acc, y), mod[i] % uint32_t(p));
        if (acc == 0) {
            ctx.root = y;
            found = true;
        }
    }
    if (!found) throw std::logic_error("subfield root not found");

    // Basis rows: digits of y^s x^r, row index r*j + s.
    const uint32_t k = ctx.k;
    std::vector<uint32_t> basis(k * k, 0);
    uint32_t xcode = ext->degree() == 1 ? 1 : uint32_t(p);  // the class of x
    for (uint32_t r = 0; r < ctx.m; ++r) {
        for (uint32_t s = 0; s < ctx.j; ++s) {
            uint32_t v = ext->mul(ext->pow(ctx.root, s), ext->pow(xcode, r));
            auto digits = ext->coeffs(v);
            for (uint32_t t = 0; t < k; ++t) basis[(r * ctx.j + s) * k + t] = digits[t];
        }
    }
    // Invert over F_p.
    FieldRef fp = FieldSpec::get(p, 1);
    ctx.basis_inv = mat_inverse(fp, basis, k);

    auto res = cache.emplace(key, std::move(ctx));
    return res.first->second;
}

std::vector<uint32_t> linear_map_matrix(const FieldRef& base, const FieldRef& ext,
                                        const std::function<uint32_t(uint32_t)>& map) {
    if (base->degree() == 1 && base->characteristic() == ext->characteristic()) {
        // Fast path: rows are just the coefficient digits of the images.
        const uint32_t m = ext->degree();
        const uint64_t p = ext->characteristic();
        std::vector<uint32_t> out(m * m);
        for (uint32_t i = 0; i < m; ++i) {
            uint32_t xi = 1;
            for (uint32_t t = 0; t < i; ++t) xi = ext->mul(xi, uint32_t(p));
            auto digits = ext->coeffs(map(xi));
            for (uint32_t c = 0; c < m; ++c) out[i * m + c] = digits[c];
        }
        return out;
    }
    const EmbeddingCtx& ctx = embedding_ctx(base, ext);
    const uint32_t m = ctx.m;
    const uint64_t p = ext->characteristic();
    uint32_t xcode = uint32_t(p);
    std::vector<uint32_t> out(m * m);
    for (uint32_t i = 0; i < m; ++i) {
        uint32_t xi = ext->pow(xcode, i);
        auto row = ctx.to_base_coords(map(xi));
        for (uint32_t c = 0; c < m; ++c) out[i * m + c] = row[c];
    }
    return out;
}

}  // namespace

std::vector<uint32_t> mult_matrix(const FieldRef& base, const FieldRef& ext, uint32_t a) {
    if (!ext->has_subfield(*base))
        throw std::invalid_argument("not an extension: " + ext->name() + " over " + base->name());
    return linear_map_matrix(base, ext, [&](uint32_t v) { return ext->mul(v, a); });
}

std::vector<uint32_t> frobenius_matrix(const FieldRef& base, const FieldRef& ext, uint32_t i) {
    if (!ext->has_subfield(*base))
        throw std::invalid_argument("not an extension: " + ext->name() + " over " + base->name());
    i %= ext->degree();
    if (i % base->degree() != 0)
        throw std::invalid_argument("frobenius power does not fix the base field");
    return linear_map_matrix(base, ext, [&](uint32_t v) { return ext->frobenius(v, i); });
}

uint32_t det(const FieldRef& f, const std::vector<uint32_t>& m, uint32_t n) {
    std::vector<uint32_t> a = m;
    uint32_t d = 1;
    for (uint32_t col = 0; col < n; ++col) {
        uint32_t pivot = n;
        for (uint32_t r = col; r < n; ++r)
            if (a[r * n + col] != 0) {
                pivot = r;
                break;
            }
        if (pivot == n) return 0;
        if (pivot != col) {
            for (uint32_t c = 0; c < n; ++c) std::swap(a[pivot * n + c], a[col * n + c]);
            d = f->neg(d);
        }
        uint32_t pv = a[col * n + col];
        d = f->mul(d, pv);
        uint32_t pinv = f->inv(pv);
        for (uint32_t r = col + 1; r < n; ++r) {
            uint32_t factor = f->mul(a[r * n + col], pinv);
            if (factor == 0) continue;
            for (uint32_t c = col; c < n; ++c)
                a[r * n + c] = f->sub(a[r * n + c], f->mul(factor, a[col * n + c]));
        }
    }
    return d;
}

bool mat_invertible(const FieldRef& f, const std::vector<uint32_t>& m, uint32_t n) {
    return det(f, m, n) != 0;
}

std::vector<uint32_t> mat_inverse(const FieldRef& f, const std::vector<uint32_t>& m, uint32_t n) {
    std::vector<uint32_t> a = m;
    std::vector<uint32_t> inv(n * n, 0);
    for (uint32_t i = 0; i < n; ++i) inv[i * n + i] = 1;
    for (uint32_t col = 0; col < n; ++col) {
        uint32_t pivot = n;
        for (uint32_t r = col; r < n; ++r)
            if (a[r * n + col] != 0) {
                pivot = r;
                break;
            }
        if (pivot == n) throw std::domain_error("matrix not invertible");
        if (pivot != col)
            for (uint32_t c = 0; c < n; ++c) {
                std::swap(a[pivot * n + c], a[col * n + c]);
                std::swap(inv[pivot * n + c], inv[col * n + c]);
            }
        uint32_t pinv = f->inv(a[col * n + col]);
        for (uint32_t c = 0; c < n; ++c) {
            a[col * n + c] = f->mul(a[col * n + c], pinv);
            inv[col * n + c] = f->mul(inv[col * n + c], pinv);
        }
        for (uint32_t r = 0; r < n; ++r) {
            if (r == col) continue;
            uint32_t factor = a[r * n + col];
            if (factor == 0) continue;
            for (uint32_t c = 0; c < n; ++c) {
                a[r * n + c] = f->sub(a[r * n + c], f->mul(factor, a[col * n + c]));
                inv[r * n + c] = f->sub(inv[r * n + c], f->mul(factor, inv[col * n + c]));
            }
        }
    }
    return inv;
}

std::vector<uint32_t> mat_mul(const FieldRef& f, const std::vector<uint32_t>& a,
                              const std::vector<uint32_t>& b, uint32_t n) {
    std::vector<uint32_t> c(n * n, 0);
    for (uint32_t i = 0; i < n; ++i)
        for (uint32_t l = 0; l < n; ++l) {
            uint32_t v = a[i * n + l];
            if (v == 0) continue;
            for (uint32_t j = 0; j < n; ++j)
                c[i * n + j] = f->add(c[i * n + j], f->mul(v, b[l * n + j]));
        }
    return c;
}

}  // namespace brc
