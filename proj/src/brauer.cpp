#include "brauer.hpp"

#include <stdexcept>

#include "numtheory.hpp"

namespace brc {

uint64_t p_regular_class_count(const Group& G, uint64_t p) {
    uint64_t count = 0;
    for (const ConjClass& c : G.classes())
        if (c.order % p != 0) ++count;
    return count;
}

uint64_t linear_ibr_count(const Group& G, uint64_t p) {
    uint64_t ab = G.order() / G.derived_subgroup().order();
    return nt::p_prime_part(ab, p);
}

IbrSummary nonlinear_ibr_count(const Group& G, uint64_t p, std::string label) {
    IbrSummary s;
    s.label = label.empty() ? G.label() : std::move(label);
    s.p = p;
    s.p_regular_classes = p_regular_class_count(G, p);
    s.linear_count = linear_ibr_count(G, p);
    if (s.linear_count > s.p_regular_classes)
        throw std::logic_error("linear count exceeds p-regular class count");
    s.nonlinear_count = s.p_regular_classes - s.linear_count;
    s.method = IbrSummary::Method::Direct;
    return s;
}

IbrSummary clifford_affine_count(const ModuleAction& action, uint64_t p, std::string label) {
    if (action.field()->characteristic() == p)
        throw std::invalid_argument("clifford count needs p coprime to |V|");

    IbrSummary s;
    s.label = label.empty() ? action.label() : std::move(label);
    s.p = p;
    s.method = IbrSummary::Method::Clifford;

    const Group& H = action.h_group();

    // Trivial character: I_H = H.
    uint64_t total = p_regular_class_count(H, p);

    ModuleAction dual = action.dual();
    OrbitData od = dual.orbits_on_nonzero();
    for (size_t i = 0; i < od.reps.size(); ++i) {
        Group stab = dual.h_subgroup(od.stabilizer_gens[i]);
        if (stab.order() * od.sizes[i] != H.order())
            throw std::logic_error("orbit-stabilizer mismatch in clifford count");
        total += p_regular_class_count(stab, p);
    }
    s.p_regular_classes = total;

    const uint64_t q = action.field()->characteristic();
    uint32_t vdim = action.field()->degree() * action.dim();
    uint32_t crank = action.commutator_space_rank();
    uint64_t v_coinv = 1;
    for (uint32_t i = crank; i < vdim; ++i) v_coinv *= q;

    uint64_t h_ab = H.order() / H.derived_subgroup().order();
    s.linear_count = nt::p_prime_part(v_coinv * h_ab, p);
    if (s.linear_count > s.p_regular_classes)
        throw std::logic_error("linear count exceeds total in clifford count");
    s.nonlinear_count = s.p_regular_classes - s.linear_count;
    return s;
}

std::set<uint64_t> p_regular_order_spectrum(const Group& G, uint64_t p) {
    std::set<uint64_t> out;
    for (const ConjClass& c : G.classes())
        if (c.order % p != 0) out.insert(c.order);
    return out;
}

}  // namespace brc
