#include <doctest.h>

#include <algorithm>
#include <set>

#include "action.hpp"
#include "families.hpp"
#include "ffield.hpp"

using namespace brc;

namespace {

ModuleAction d8_on_f9() {
    // D8 <= Gamma(9): <t^2, phi> in matrix form over F_3
    FieldRef F3 = FieldSpec::get(3, 1);
    FieldRef F9 = FieldSpec::get(3, 2);
    uint32_t lam = F9->primitive_element();
    std::vector<SemilinearMap> gens;
    gens.push_back(SemilinearMap::linear(F3, 2, mult_matrix(F3, F9, F9->mul(lam, lam))));
    gens.push_back(SemilinearMap::linear(F3, 2, frobenius_matrix(F3, F9, 1)));
    return ModuleAction(F3, 2, std::move(gens), "D8onF9");
}

}  // namespace

TEST_CASE("semilinear maps compose and invert") {
    FieldRef F9 = FieldSpec::get(3, 2);
    SemilinearMap t = SemilinearMap::linear(F9, 1, {F9->primitive_element()});
    SemilinearMap phi = SemilinearMap::semilinear(F9, 1, {1}, 1);
    SemilinearMap id = SemilinearMap::identity(F9, 1);

    CHECK(phi.then(phi) == id);
    CHECK(t.then(t.inverse()) == id);
    CHECK(phi.then(t).then((phi.then(t)).inverse()) == id);

    // map application agrees with field arithmetic: x -> lam x^3
    SemilinearMap tphi = phi.then(t);  // frobenius then multiply
    for (uint32_t x = 0; x < 9; ++x) {
        uint32_t moved;
        tphi.apply(&x, &moved);
        CHECK(moved == F9->mul(F9->primitive_element(), F9->frobenius(x, 1)));
    }
}

TEST_CASE("prime matrix form is a group homomorphism") {
    ModuleAction A = families::gamma_action(3, 2, true);
    const auto& gens = A.action_gens();
    for (const SemilinearMap& a : gens)
        for (const SemilinearMap& b : gens) {
            Element lhs = a.to_prime_matrix() * b.to_prime_matrix();
            Element rhs = a.then(b).to_prime_matrix();
            CHECK(lhs == rhs);
        }
    // and the permutations of V they induce compose the same way
    for (const SemilinearMap& a : gens)
        for (const SemilinearMap& b : gens) {
            SemilinearMap ab = a.then(b);
            for (uint64_t v = 0; v < A.space_size(); ++v)
                CHECK(A.apply_to_code(ab, v) == A.apply_to_code(b, A.apply_to_code(a, v)));
        }
}

TEST_CASE("orbits of Gamma0(9), D8 and the trivial group on F9 minus zero") {
    ModuleAction G0 = families::gamma_action(3, 2, false);
    OrbitData od = G0.orbits_on_nonzero();
    CHECK(od.reps.size() == 1);
    CHECK(od.sizes[0] == 8);  // multiplications act transitively

    ModuleAction D8 = d8_on_f9();
    CHECK(D8.h_order() == 8);
    od = D8.orbits_on_nonzero();
    CHECK(od.sizes.size() == 2);
    CHECK(od.sizes[0] == 4);
    CHECK(od.sizes[1] == 4);

    FieldRef F9 = FieldSpec::get(3, 2);
    ModuleAction triv(F9, 1, {SemilinearMap::identity(F9, 1)}, "1");
    od = triv.orbits_on_nonzero();
    CHECK(od.reps.size() == 8);  // singleton orbits
}

TEST_CASE("orbit-stabilizer: |stabilizer| * size = |H| on every orbit") {
    for (const ModuleAction& A :
         {d8_on_f9(), families::gamma_action(3, 2, true), families::wreath_family(5, families::WreathVariant::Full),
          families::psu3_2()}) {
        OrbitData od = A.orbits_on_nonzero();
        uint64_t covered = 0;
        for (size_t i = 0; i < od.reps.size(); ++i) {
            Group stab = A.h_subgroup(od.stabilizer_gens[i]);
            CHECK(stab.order() * od.sizes[i] == A.h_order());
            covered += od.sizes[i];
        }
        CHECK(covered == A.space_size() - 1);  // partition of V minus zero
    }
}

TEST_CASE("dual action basics") {
    FieldRef F9 = FieldSpec::get(3, 2);
    ModuleAction triv(F9, 1, {SemilinearMap::identity(F9, 1)}, "1");
    ModuleAction dual = triv.dual();
    CHECK(dual.action_gens()[0].is_identity());

    // dual of a transitive multiplication action stays transitive
    ModuleAction G0 = families::gamma_action(5, 2, false);
    CHECK(G0.dual().orbits_on_nonzero().reps.size() == 1);
}

TEST_CASE("orbit counts agree between an action and its dual") {
    std::vector<ModuleAction> actions;
    actions.push_back(d8_on_f9());
    actions.push_back(families::gamma_action(3, 2, true));
    actions.push_back(families::psu3_2());
    actions.push_back(families::wreath_family(5, families::WreathVariant::Full));
    actions.push_back(families::wreath_family(5, families::WreathVariant::PhiPart));
    actions.push_back(families::dic_cyc_family(7, 3, 1));
    actions.push_back(families::rank3_gamma_subgroup(3, 2, families::GammaShape::DihedralXCyc));
    actions.push_back(families::rank3_gamma_subgroup(5, 2, families::GammaShape::Sylow2));
    for (const ModuleAction& A : actions) {
        CHECK(A.orbits_on_nonzero().reps.size() == A.dual().orbits_on_nonzero().reps.size());
    }
}

TEST_CASE("stabilizer orders match between action and dual for cyclic point stabilizers") {
    // Gamma-type actions have cyclic stabilizers; the stabilizer-order
    // multisets on both sides must agree.
    std::vector<ModuleAction> actions;
    actions.push_back(families::gamma_action(3, 2, true));
    actions.push_back(families::gamma_action(2, 4, true));
    actions.push_back(families::gamma_subgroup_action(11, 2, {{4, 0}, {1, 1}}));
    for (const ModuleAction& A : actions) {
        auto orders = [&](const ModuleAction& M) {
            std::multiset<uint64_t> out;
            OrbitData od = M.orbits_on_nonzero();
            for (size_t i = 0; i < od.reps.size(); ++i)
                for (uint64_t rep = 0; rep < od.sizes[i]; ++rep)
                    out.insert(M.h_order() / od.sizes[i]);
            return out;
        };
        CHECK(orders(A) == orders(A.dual()));
    }
}

TEST_CASE("stabilizers are p-groups on V iff they are on the dual") {
    struct Case {
        ModuleAction action;
        uint64_t p;
    };
    std::vector<Case> cases;
    cases.push_back({d8_on_f9(), 2});
    cases.push_back({families::psu3_2(), 5});
    cases.push_back({families::gamma_action(3, 2, true), 2});
    cases.push_back({families::dic_cyc_family(7, 3, 1), 3});
    cases.push_back({families::rank3_gamma_subgroup(11, 2, families::GammaShape::SdXCyc), 2});
    for (const Case& c : cases) {
        CHECK(c.action.predicates(c.p).all_stabilizers_p_groups ==
              c.action.dual().predicates(c.p).all_stabilizers_p_groups);
    }
}

TEST_CASE("structural predicates") {
    ModuleAction G0 = families::gamma_action(3, 2, false);
    StructuralPredicates sp = G0.predicates(2);
    CHECK(sp.transitive_on_nonzero);
    CHECK(sp.frobenius);
    CHECK(sp.h_acts_faithfully);

    ModuleAction Q8 = families::psu3_2();
    sp = Q8.predicates(5);
    CHECK(sp.transitive_on_nonzero);
    CHECK(sp.frobenius);

    ModuleAction Gam = families::gamma_action(3, 2, true);
    sp = Gam.predicates(2);
    CHECK(sp.transitive_on_nonzero);
    CHECK(!sp.frobenius);  // the field automorphism fixes F_3 pointwise

    ModuleAction D8 = d8_on_f9();
    sp = D8.predicates(2);
    CHECK(sp.rank == 3);
    CHECK(sp.all_stabilizers_p_groups);
    CHECK(sp.derived_of_h_is_p_group);
}

TEST_CASE("affine permutation groups") {
    // A Gamma(4) has order 24 and the S4 class/count profile
    ModuleAction A4 = families::gamma_action(2, 2, true);
    Group G = A4.affine_permutation_group();
    CHECK(G.order() == 24);
    CHECK(G.classes().size() == 5);

    // V x| 1 is regular elementary abelian
    FieldRef F9 = FieldSpec::get(3, 2);
    ModuleAction triv(F9, 1, {SemilinearMap::identity(F9, 1)}, "1");
    Group V = triv.affine_permutation_group("V");
    CHECK(V.order() == 9);
    CHECK(V.is_abelian());
    CHECK(V.exponent() == 3);

    CHECK(families::affine_gamma_group(5, 2).order() == 1200);
}

TEST_CASE("action serialization carries the generator pairs") {
    ModuleAction A = families::gamma_action(3, 2, true);
    std::string s = A.serialize();
    CHECK(s.find("\"field\":\"3^2\"") != std::string::npos);
    CHECK(s.find("\"frobenius\":1") != std::string::npos);
    CHECK(s.find("\"matrix\"") != std::string::npos);
}

TEST_CASE("commutator space rank") {
    // H = Gamma0(9) acts irreducibly and nontrivially: [V,H] = V
    ModuleAction G0 = families::gamma_action(3, 2, false);
    CHECK(G0.commutator_space_rank() == 2);
    // trivial action: [V,H] = 0
    FieldRef F9 = FieldSpec::get(3, 2);
    ModuleAction triv(F9, 1, {SemilinearMap::identity(F9, 1)}, "1");
    CHECK(triv.commutator_space_rank() == 0);
}
