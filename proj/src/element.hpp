#pragma once

#include <array>
#include <cstdint>
#include <functional>
#include <memory>
#include <string>
#include <vector>

#include "ffield.hpp"

namespace brc {

class Element;

// Group law on short coordinate tuples over a field. Covers the two
// constructions that have no natural matrix model:
//
//  Heisenberg (odd characteristic): elements (v1, v2, c) with
//    (v,c)(v',c') = (v + v', c + c' + omega(v,v')/2),
//    omega(v,v') = v1 v2' - v2 v1'.
//  The polarized form keeps GL_2 acting by (v,c) -> (v h, det(h) c).
//
//  Suzuki B-type (characteristic 2): elements (a, b, c) with
//    (a,b,c)(d,e,f) = (a+d, b+e, c+f + a d^T + b e^T + eps a e^T)
//  where x^T = x^theta for a field automorphism theta of odd order and
//  eps avoids the values x^{-1} + x^theta.
struct TupleLaw {
    enum class Kind { Heisenberg, SuzukiB };

    Kind kind;
    FieldRef field;
    uint32_t theta_power = 1;  // SuzukiB: x^theta = x^theta_power
    uint32_t eps = 0;          // SuzukiB only
    uint32_t half = 0;         // Heisenberg: inverse of 2 mod p

    static std::shared_ptr<const TupleLaw> heisenberg(FieldRef f);
    static std::shared_ptr<const TupleLaw> suzuki_b(FieldRef f, uint32_t theta_power, uint32_t eps);

    void mul(const uint32_t* a, const uint32_t* b, uint32_t* out) const;
    void invert(const uint32_t* a, uint32_t* out) const;
};

// Automorphism action of actor elements on kernel elements, used by the
// semidirect-pair element kind. act(h, k) must be an automorphism of the
// kernel group for every fixed h; multiplication follows
//   (k1, h1) (k2, h2) = (k1 * act(h1, k2), h1 h2).
struct PairAction {
    std::string name;
    std::function<Element(const Element& actor, const Element& kernel)> act;
};

enum class ElementKind : uint8_t { Perm = 0, Mat = 1, Tuple = 2, Pair = 3 };

class Element;
Element element_pow(const Element& g, uint64_t n);

// A group element: a permutation (0-based image list), an invertible
// square matrix over a finite field, a law-tagged coordinate tuple, or a
// semidirect pair. Equality is structural on canonical encodings.
class Element {
public:
    Element() = default;

    // images must be a bijection of {0..d-1}; throws otherwise.
    static Element perm(std::vector<uint32_t> images);
    // row-major codes; checked invertible; throws otherwise.
    static Element mat(FieldRef f, uint32_t n, std::vector<uint32_t> entries);
    static Element tuple(std::shared_ptr<const TupleLaw> law, std::array<uint32_t, 3> coords);
    static Element pair(std::shared_ptr<const PairAction> action, Element kernel, Element actor);

    static Element perm_identity(uint32_t degree);
    static Element mat_identity(FieldRef f, uint32_t n);

    ElementKind kind() const { return kind_; }
    bool valid() const { return kind_ != ElementKind::Perm || !data_.empty() || kernel_ != nullptr; }

    Element operator*(const Element& o) const;  // apply *this first, then o
    Element inverse() const;
    Element conj(const Element& g) const;  // g^{-1} * this * g
    bool is_identity() const;
    uint64_t order(uint64_t cap = 4'000'000) const;

    bool operator==(const Element& o) const;
    bool operator!=(const Element& o) const { return !(*this == o); }
    bool operator<(const Element& o) const;  // canonical-encoding order

    uint64_t hash() const;
    std::string str() const;

    // Perm access
    uint32_t degree() const;
    const std::vector<uint32_t>& images() const { return data_; }
    // Mat access
    const FieldRef& field() const { return field_; }
    uint32_t mat_dim() const { return dim_; }
    const std::vector<uint32_t>& entries() const { return data_; }
    // Tuple access
    const std::shared_ptr<const TupleLaw>& law() const { return law_; }
    const uint32_t* coords() const { return data_.data(); }
    // Pair access
    const Element& kernel_part() const { return *kernel_; }
    const Element& actor_part() const { return *actor_; }
    const std::shared_ptr<const PairAction>& action() const { return action_; }

private:
    ElementKind kind_ = ElementKind::Perm;
    std::vector<uint32_t> data_;  // images / matrix entries / tuple coords

    FieldRef field_;
    uint32_t dim_ = 0;
    std::shared_ptr<const TupleLaw> law_;
    std::shared_ptr<const PairAction> action_;
    std::shared_ptr<const Element> kernel_, actor_;

    static Element mat_unchecked(FieldRef f, uint32_t n, std::vector<uint32_t> entries);
};

}  // namespace brc
