#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "ffield.hpp"
#include "group.hpp"

namespace brc {

// An invertible semilinear map on V = F_Q^d, stored as a d x d matrix
// over F_Q together with a Frobenius exponent e: the map sends a row
// vector v to v^(sigma^e) * M, where sigma is the absolute Frobenius
// x -> x^p applied entrywise. One representation serves multiplication
// groups of fields, GL-subgroups in matrix form, and wreath blocks.
struct SemilinearMap {
    FieldRef field;
    uint32_t dim = 0;
    std::vector<uint32_t> entries;  // row-major
    uint32_t frob = 0;              // in [0, degree)

    static SemilinearMap identity(FieldRef f, uint32_t d);
    static SemilinearMap linear(FieldRef f, uint32_t d, std::vector<uint32_t> entries);
    static SemilinearMap semilinear(FieldRef f, uint32_t d, std::vector<uint32_t> entries,
                                    uint32_t frob);

    SemilinearMap then(const SemilinearMap& o) const;  // apply *this, then o
    SemilinearMap inverse() const;
    bool is_identity() const;
    bool operator==(const SemilinearMap& o) const;
    uint64_t hash() const;

    void apply(const uint32_t* in, uint32_t* out) const;  // length-dim code vectors

    // The same map as an F_p-linear matrix on F_p^(k*d), k = [F_Q : F_p],
    // with coordinate blocks in the monomial basis of F_Q.
    Element to_prime_matrix() const;
};

struct OrbitData {
    // per point (vector code): orbit id, or UINT32_MAX for excluded points
    std::vector<uint32_t> orbit_of;
    std::vector<uint64_t> reps;    // least vector code per orbit
    std::vector<uint64_t> sizes;
    std::vector<std::vector<SemilinearMap>> stabilizer_gens;  // deduped Schreier generators
};

struct StructuralPredicates {
    bool transitive_on_nonzero = false;
    uint32_t rank = 0;  // orbit count on V^# plus one
    bool frobenius = false;
    bool all_stabilizers_p_groups = false;
    bool derived_of_h_is_p_group = false;
    bool h_acts_faithfully = false;
};

// A group acting semilinearly on V = F_Q^d. Immutable after
// construction; the abstract acting group is materialized on demand as a
// group of F_p-matrices.
class ModuleAction {
public:
    static constexpr uint64_t kSpaceCap = 1'000'000;

    ModuleAction(FieldRef field, uint32_t dim, std::vector<SemilinearMap> gens,
                 std::string label = "");

    const FieldRef& field() const { return field_; }
    uint32_t dim() const { return dim_; }
    const std::vector<SemilinearMap>& action_gens() const { return gens_; }
    const std::string& label() const { return label_; }
    uint64_t space_size() const { return vsize_; }

    uint64_t apply_to_code(const SemilinearMap& m, uint64_t code) const;
    std::vector<uint32_t> decode(uint64_t code) const;
    uint64_t encode(const std::vector<uint32_t>& v) const;

    const Group& h_group() const;  // enumerates on first use
    uint64_t h_order() const { return h_group().order(); }

    OrbitData orbits_on_nonzero() const;

    // Action on the dual space: inverse-transpose matrix part, same
    // Frobenius exponent; preserves the pairing sum_i v_i a_i up to
    // Frobenius twist.
    ModuleAction dual(const std::string& label_suffix = "*") const;

    StructuralPredicates predicates(uint64_t p) const;

    // V rtimes H as a permutation group on the |V| points of V:
    // translations by an F_p-basis plus the action generators.
    // Requires |V| * |H| <= Group::kEngineCap.
    Group affine_permutation_group(std::string label = "") const;

    // F_p-dimension of the commutator space [V,H] = span{v^h - v}.
    uint32_t commutator_space_rank() const;

    // Subgroup of h_group() generated by the abstract images of the
    // given semilinear maps.
    Group h_subgroup(const std::vector<SemilinearMap>& maps, std::string label = "") const;

    // Generator list as (matrix, frobenius exponent) pairs plus the field
    // descriptor, e.g. {"field":"3^5","dim":2,"generators":[...]}.
    std::string serialize() const;

private:
    FieldRef field_;
    uint32_t dim_;
    std::vector<SemilinearMap> gens_;
    std::string label_;
    uint64_t vsize_;
    mutable std::shared_ptr<Group> h_group_;
    mutable std::shared_ptr<std::mutex> mu_;
};

}  // namespace brc
