#include <doctest.h>

#include "brauer.hpp"
#include "census.hpp"
#include "families.hpp"
#include "group.hpp"

using namespace brc;

TEST_CASE("p-regular class counts") {
    Group A5 = families::nonsolvable("A5");
    CHECK(p_regular_class_count(A5, 5) == 3);  // classes of orders 1, 2, 3 survive
    CHECK(p_regular_class_count(A5, 7) == 5);  // 7 does not divide |A5|: all classes

    Group S5 = families::nonsolvable("S5");
    CHECK(p_regular_class_count(S5, 2) == 3);  // odd-order classes 1, 3, 5
}

TEST_CASE("linear character counts") {
    Group A5 = families::nonsolvable("A5");
    CHECK(linear_ibr_count(A5, 2) == 1);  // perfect group
    CHECK(linear_ibr_count(A5, 3) == 1);
    Group S5 = families::nonsolvable("S5");
    CHECK(linear_ibr_count(S5, 2) == 1);  // |G/G'| = 2, 2'-part is 1
    CHECK(linear_ibr_count(S5, 3) == 2);
    Group SL = families::sl2_3();
    CHECK(linear_ibr_count(SL, 3) == 1);  // abelianization C3, 3'-part 1
}

TEST_CASE("nonlinear counts: direct method") {
    Group A5 = families::nonsolvable("A5");
    CHECK(nonlinear_ibr_count(A5, 5).nonlinear_count == 2);
    CHECK(nonlinear_ibr_count(A5, 2).nonlinear_count == 3);  // 4 odd-order classes minus 1
    CHECK(nonlinear_ibr_count(families::sl2_3(), 3).nonlinear_count == 2);
}

TEST_CASE("clifford count equals the direct count on small affine groups") {
    struct Case {
        ModuleAction action;
        uint64_t p;
    };
    std::vector<Case> cases;
    cases.push_back({families::psu3_2(), 5});
    cases.push_back({families::rank3_gamma_subgroup(3, 2, families::GammaShape::DihedralXCyc), 2});
    cases.push_back({families::gamma_action(2, 2, true), 3});
    cases.push_back({families::wreath_family(5, families::WreathVariant::Full), 2});
    cases.push_back({families::dic_cyc_family(7, 3, 1), 3});
    cases.push_back({families::gamma_subgroup_action(3, 2, {{2, 0}, {1, 1}}, "Q8"), 2});
    for (const Case& c : cases) {
        IbrSummary via_clifford = clifford_affine_count(c.action, c.p);
        Group G = c.action.affine_permutation_group();
        IbrSummary direct = nonlinear_ibr_count(G, c.p);
        CHECK(via_clifford.p_regular_classes == direct.p_regular_classes);
        CHECK(via_clifford.linear_count == direct.linear_count);
        CHECK(via_clifford.nonlinear_count == direct.nonlinear_count);
        CHECK(via_clifford.method_name() == "clifford");
    }
}

TEST_CASE("clifford examples from the classification") {
    IbrSummary s = clifford_affine_count(families::psu3_2(), 5);
    CHECK(s.p_regular_classes == 6);
    CHECK(s.nonlinear_count == 2);

    // V x| 1: every character is linear
    FieldRef F9 = FieldSpec::get(3, 2);
    ModuleAction triv(F9, 1, {SemilinearMap::identity(F9, 1)}, "V");
    s = clifford_affine_count(triv, 2);
    CHECK(s.p_regular_classes == 9);
    CHECK(s.linear_count == 9);
    CHECK(s.nonlinear_count == 0);

    CHECK_THROWS_AS(clifford_affine_count(triv, 3), std::invalid_argument);  // p | |V|
}

TEST_CASE("p-regular order spectrum") {
    Group A5 = families::nonsolvable("A5");
    CHECK(p_regular_order_spectrum(A5, 5) == std::set<uint64_t>{1, 2, 3});

    Group P4 = families::pq_sylow_su3(4);
    CHECK(p_regular_order_spectrum(P4, 2) == std::set<uint64_t>{1});

    Group PS = families::nonsolvable("PSigmaL2_8");
    CHECK(p_regular_order_spectrum(PS, 3) == std::set<uint64_t>{1, 2, 7});
}

TEST_CASE("quotient consistency: G/N has at most as many p-regular classes") {
    struct QC {
        Group G;
        Group N;
    };
    std::vector<QC> cases;
    {
        Group S4({Element::perm({1, 2, 3, 0}), Element::perm({1, 0, 2, 3})}, "S4");
        cases.push_back({S4, S4.normal_closure({Element::perm({1, 0, 3, 2})})});
    }
    {
        Group SL = families::sl2_3();
        cases.push_back({SL, SL.center()});
    }
    {
        Group AG = families::affine_gamma_group(3, 2);
        cases.push_back({AG, AG.p_core(3)});
    }
    for (const QC& c : cases) {
        REQUIRE(c.G.order() <= 10000);
        Group Q = quotient_group(c.G, c.N);
        for (uint64_t p : {2, 3, 5})
            CHECK(p_regular_class_count(Q, p) <= p_regular_class_count(c.G, p));
    }
}

TEST_CASE("for p coprime to |G| the count matches hand-computed ordinary values") {
    // Q8 x C2 at p = 3: 10 classes, 8 linear characters, 2 nonlinear
    Group Q8C2 = perm_direct_product(regular_representation(families::q8_matrix_group()),
                                     families::cyclic_group(2));
    IbrSummary s = nonlinear_ibr_count(Q8C2, 3);
    CHECK(s.p_regular_classes == 10);
    CHECK(s.linear_count == 8);
    CHECK(s.nonlinear_count == 2);

    // ES(27) at p = 2: 11 classes, 9 linear, 2 nonlinear
    s = nonlinear_ibr_count(families::heisenberg_group(3), 2);
    CHECK(s.p_regular_classes == 11);
    CHECK(s.linear_count == 9);
    CHECK(s.nonlinear_count == 2);

    // PSU3(2) at p = 5: 6 classes, 4 linear, 2 nonlinear
    Group G = families::psu3_2().affine_permutation_group("PSU3(2)");
    s = nonlinear_ibr_count(G, 5);
    CHECK(s.p_regular_classes == 6);
    CHECK(s.linear_count == 4);
    CHECK(s.nonlinear_count == 2);
}

TEST_CASE("orbit counting on the dual space matches the nonzero-vector count plus one") {
    std::vector<ModuleAction> actions;
    actions.push_back(families::psu3_2());
    actions.push_back(families::gamma_action(3, 2, true));
    actions.push_back(families::wreath_family(5, families::WreathVariant::PhiPart));
    actions.push_back(families::dic_cyc_family(7, 3, 1));
    for (const ModuleAction& A : actions) {
        uint64_t v_orbits = A.orbits_on_nonzero().reps.size();
        uint64_t dual_orbits_with_zero = A.dual().orbits_on_nonzero().reps.size() + 1;
        CHECK(v_orbits + 1 == dual_orbits_with_zero);
    }
}

TEST_CASE("summary invariants") {
    Group S5 = families::nonsolvable("S5");
    IbrSummary s = nonlinear_ibr_count(S5, 2, "S5");
    CHECK(s.label == "S5");
    CHECK(s.nonlinear_count == s.p_regular_classes - s.linear_count);
    CHECK((S5.order() / S5.derived_subgroup().order()) % s.linear_count == 0);
    CHECK(s.linear_count % 2 == 1);  // coprime to p
}
