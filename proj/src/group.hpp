#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "element.hpp"

namespace brc {

// Thrown when a breadth-first closure passes the engine cap; carries the
// partial size attained.
struct CapExceeded : std::runtime_error {
    uint64_t partial;
    explicit CapExceeded(uint64_t got, uint64_t cap)
        : std::runtime_error("group closure exceeds cap " + std::to_string(cap) +
                             " (partial size " + std::to_string(got) + ")"),
          partial(got) {}
};

struct ConjClass {
    uint32_t rep = 0;        // index of the least element of the class
    uint64_t size = 0;
    uint64_t order = 0;      // element order of the representative
};

// A finite group given by generators, with lazily materialized element
// set, order, and conjugacy class partition. Enumeration is a
// breadth-first closure with deterministic insertion order. Once
// materialized the handle is immutable.
class Group {
public:
    static constexpr uint64_t kEngineCap = 2'000'000;
    static constexpr uint64_t kSylowCap = 100'000;
    static constexpr uint64_t kSubgroupsCap = 512;

    explicit Group(std::vector<Element> generators, std::string label = "",
                   uint64_t cap = kEngineCap);

    const std::string& label() const { return label_; }
    const std::vector<Element>& generators() const { return gens_; }
    const Element& identity() const { return identity_; }

    uint64_t order() const;
    const std::vector<Element>& elements() const;
    bool contains(const Element& e) const;
    std::optional<uint32_t> index_of(const Element& e) const;
    const Element& element(uint32_t i) const { return elements()[i]; }

    const std::vector<ConjClass>& classes() const;
    uint32_t class_of(uint32_t element_index) const;  // class id per element

    bool is_abelian() const;
    bool is_p_group(uint64_t p) const;
    uint64_t exponent() const;

    // Closure of S inside this group; every member of S must lie in the
    // group, and the result's order must divide the parent order.
    Group subgroup(std::vector<Element> S, std::string label = "") const;
    Group derived_subgroup() const;
    Group normal_closure(std::vector<Element> S) const;
    // Largest normal p-subgroup, via the class-representative criterion:
    // x lies in O_p(G) iff x has p-power order and <x^G> is a p-group.
    Group p_core(uint64_t p) const;
    Group center() const;
    // A Sylow p-subgroup, grown from a cyclic p-subgroup by adjoining
    // normalizing p-elements; deterministic given element order.
    Group sylow_subgroup(uint64_t p) const;
    bool is_normal_in_parent(const Group& parent) const;

    // All subgroups (|G| <= 512): cyclic subgroups closed under pairwise
    // join until stable.
    std::vector<Group> all_subgroups() const;

    // Multiplication table indices for |G| <= 4096, built on demand.
    const std::vector<uint32_t>& cayley_table() const;

    // Set of element orders of p-regular elements, computed from classes.
    std::vector<uint64_t> p_regular_orders(uint64_t p) const;

private:
    struct Body;  // shared state, single-writer materialization
    std::shared_ptr<Body> body_;
    std::vector<Element> gens_;
    Element identity_;
    std::string label_;
    uint64_t cap_ = kEngineCap;

    void materialize() const;
    void materialize_classes() const;
};

enum class TwoGroupType { Cyclic, Dihedral, Semidihedral, Quaternion, KleinLike, Other };

std::string to_string(TwoGroupType t);

// Isomorphism-type recognition for 2-groups of order >= 4, by involution
// count, cyclicity, and the conjugation twist on a cyclic index-2
// subgroup. Throws std::invalid_argument if P is not a 2-group of order
// >= 4.
TwoGroupType recognize_2group_type(const Group& P);

// Right-coset action of G on G/N for normal N: the quotient as a
// permutation group on |G:N| points.
Group quotient_group(const Group& G, const Group& N);

// G as permutations of its own element list (right translation).
Group regular_representation(const Group& G);

// Direct product of two permutation groups, acting on the disjoint union
// of their domains.
Group perm_direct_product(const Group& A, const Group& B, std::string label = "");

// Brute-force isomorphism test for |A| = |B| <= 256.
bool isomorphic_brute(const Group& A, const Group& B);

// Intersection of two subgroups of a common parent (element sets).
std::vector<Element> intersect_elements(const Group& A, const Group& B);

}  // namespace brc
