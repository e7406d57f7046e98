#pragma once

#include <cstdint>
#include <memory>
#include <string>
#include <vector>

namespace brc {

// Exact arithmetic in F_{p^k}, p prime, 1 <= k <= 10, p^k <= 2^20.
//
// Elements are stored as integer codes in [0, p^k): the code of
// c0 + c1*x + ... + c_{k-1}*x^{k-1} is c0 + c1*p + ... + c_{k-1}*p^{k-1},
// where x is the class of the variable modulo the field's irreducible
// modulus polynomial. Multiplication and inversion go through discrete
// log tables with respect to a fixed primitive element.
class FieldSpec;
using FieldRef = std::shared_ptr<const FieldSpec>;

class FieldSpec {
public:
    // Cached constructor: the spec for (p, k) is built once and shared.
    // Modulus: the least monic irreducible polynomial of degree k over F_p
    // (candidates ordered by integer code of their non-leading coefficients).
    // Throws std::invalid_argument for non-prime p or out-of-range k / p^k.
    static FieldRef get(uint64_t p, uint32_t k);

    uint64_t characteristic() const { return p_; }
    uint32_t degree() const { return k_; }
    uint64_t size() const { return q_; }

    // Monic modulus, coefficient list c0..ck with ck == 1.
    const std::vector<uint32_t>& modulus() const { return modulus_; }

    // Least element (by coefficient order) that generates the
    // multiplicative group.
    uint32_t primitive_element() const { return primitive_; }

    uint32_t zero() const { return 0; }
    uint32_t one() const { return 1; }

    uint32_t add(uint32_t a, uint32_t b) const;
    uint32_t neg(uint32_t a) const;
    uint32_t sub(uint32_t a, uint32_t b) const { return add(a, neg(b)); }
    uint32_t mul(uint32_t a, uint32_t b) const;
    uint32_t inv(uint32_t a) const;  // throws on a == 0
    uint32_t pow(uint32_t a, uint64_t e) const;

    // a^(p^i); the i-th power of the absolute Frobenius automorphism.
    uint32_t frobenius(uint32_t a, uint32_t i) const;

    // Multiplicative order of a != 0.
    uint64_t element_order(uint32_t a) const;

    // Discrete log of a != 0 with respect to the primitive element.
    uint64_t dlog(uint32_t a) const;
    uint32_t primitive_power(uint64_t e) const;  // primitive^e

    std::vector<uint32_t> coeffs(uint32_t a) const;
    uint32_t from_coeffs(const std::vector<uint32_t>& c) const;

    // Canonical text encoding "p^k:[c0,c1,...]".
    std::string encode(uint32_t a) const;
    std::string name() const;  // "F_{p^k}"

    // True if this field contains a copy of `sub` (same characteristic,
    // sub.degree | degree).
    bool has_subfield(const FieldSpec& sub) const;

private:
    FieldSpec() = default;

    uint64_t p_ = 0;
    uint32_t k_ = 0;
    uint64_t q_ = 0;
    std::vector<uint32_t> modulus_;
    uint32_t primitive_ = 0;

    std::vector<uint32_t> pow_table_;   // pow_table_[i] = primitive^i, i < q-1
    std::vector<uint32_t> log_table_;   // log_table_[a] for a != 0
    std::vector<uint32_t> add_table_;   // only for q <= 256
    std::vector<uint32_t> digit_sum_;   // helpers for generic digit-wise add

    uint32_t add_digits(uint32_t a, uint32_t b) const;
    uint32_t mul_poly(uint32_t a, uint32_t b) const;  // table-free, used at setup

    friend FieldRef build_field_uncached(uint64_t p, uint32_t k);
};

// A field element together with its owning field. Operations check that
// both operands belong to the same field and throw std::invalid_argument
// otherwise.
struct FieldElem {
    FieldRef field;
    uint32_t code = 0;

    FieldElem() = default;
    FieldElem(FieldRef f, uint32_t c) : field(std::move(f)), code(c) {}

    bool is_zero() const { return code == 0; }
    std::string str() const { return field->encode(code); }

    friend FieldElem operator+(const FieldElem& a, const FieldElem& b);
    friend FieldElem operator-(const FieldElem& a, const FieldElem& b);
    friend FieldElem operator*(const FieldElem& a, const FieldElem& b);
    friend bool operator==(const FieldElem& a, const FieldElem& b);

    FieldElem inverse() const;
    FieldElem pow(uint64_t e) const;
    FieldElem frobenius(uint32_t i) const;
};

// The m x m matrix over `base` (row-major element codes) of an
// F_base-linear map on `ext`, with respect to the monomial basis
// {1, x, ..., x^{m-1}} of ext over base, acting on row vectors:
// the i-th row holds the coordinates of the image of x^i.
//
// Requires ext to be an extension of base (same characteristic,
// base.degree | ext.degree). When base is not the prime field, base is
// identified with its copy inside ext through the least root of base's
// modulus.
std::vector<uint32_t> mult_matrix(const FieldRef& base, const FieldRef& ext, uint32_t a);

// Matrix of frobenius^i on ext over base; i must be a multiple of
// base.degree so that the map is base-linear.
std::vector<uint32_t> frobenius_matrix(const FieldRef& base, const FieldRef& ext, uint32_t i);

// Determinant of a row-major n x n matrix over f.
uint32_t det(const FieldRef& f, const std::vector<uint32_t>& m, uint32_t n);

// Inverse of a row-major n x n matrix; throws std::domain_error if singular.
std::vector<uint32_t> mat_inverse(const FieldRef& f, const std::vector<uint32_t>& m, uint32_t n);

std::vector<uint32_t> mat_mul(const FieldRef& f, const std::vector<uint32_t>& a,
                              const std::vector<uint32_t>& b, uint32_t n);

bool mat_invertible(const FieldRef& f, const std::vector<uint32_t>& m, uint32_t n);

}  // namespace brc
