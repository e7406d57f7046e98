#include "census.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <set>
#include <sstream>
#include <stdexcept>
#include <thread>

#include "numtheory.hpp"

namespace brc {
namespace census {

namespace {

using families::GammaShape;
using families::HeisShape;
using families::WreathVariant;

ModuleAction action_over_prime(const ModuleAction& parent, const std::vector<Element>& mats,
                               std::string label) {
    FieldRef fp = FieldSpec::get(parent.field()->characteristic(), 1);
    uint32_t n = parent.field()->degree() * parent.dim();
    std::vector<SemilinearMap> gens;
    for (const Element& m : mats) gens.push_back(SemilinearMap::linear(fp, n, m.entries()));
    return ModuleAction(fp, n, std::move(gens), std::move(label));
}

std::vector<uint64_t> sorted_orbit_sizes(const ModuleAction& A) {
    auto od = A.orbits_on_nonzero();
    std::vector<uint64_t> s = od.sizes;
    std::sort(s.begin(), s.end());
    return s;
}

// Does some index-2 subgroup L of H act fixed-point-freely on V?
bool exists_frobenius_index2(const ModuleAction& A) {
    const Group& H = A.h_group();
    if (H.order() > Group::kSubgroupsCap) return false;
    for (const Group& L : H.all_subgroups()) {
        if (L.order() * 2 != H.order()) continue;
        ModuleAction sub = action_over_prime(A, L.generators(), "L");
        auto od = sub.orbits_on_nonzero();
        bool fpf = true;
        for (uint64_t s : od.sizes)
            if (s != L.order()) fpf = false;
        if (fpf) return true;
    }
    return false;
}

}  // namespace

Evaluation evaluate_group_direct(const Group& G, uint64_t p) {
    Evaluation ev;
    ev.group_order = G.order();
    ev.o_p_trivial = G.p_core(p).order() == 1;
    ev.summary = nonlinear_ibr_count(G, p);
    return ev;
}

Evaluation evaluate_affine_action(const ModuleAction& A, uint64_t p, bool force_clifford) {
    const uint64_t total = A.space_size() * A.h_order();
    Evaluation ev;
    ev.group_order = total;
    if (!force_clifford && total <= Group::kEngineCap) {
        Group G = A.affine_permutation_group();
        ev.o_p_trivial = G.p_core(p).order() == 1;
        ev.summary = nonlinear_ibr_count(G, p, A.label());
    } else {
        std::ostringstream why;
        if (total > Group::kEngineCap)
            why << "affine order " << total << " exceeds enumeration cap " << Group::kEngineCap;
        else
            why << "clifford path forced by caller";
        ev.method_reason = why.str();
        ev.summary = clifford_affine_count(A, p);
        // O_p(V x| H) = 1 for a faithful action with p coprime to |V|:
        // a normal p-subgroup centralizes V, hence embeds in O_p(V) = 1.
        bool faithful = A.predicates(p).h_acts_faithfully;
        bool coprime = A.field()->characteristic() != p;
        ev.o_p_trivial = faithful && coprime;
        ev.predicates.push_back({"o_p_via_faithful_coprime", faithful && coprime});
    }
    return ev;
}

namespace {

void add_action_predicates(Evaluation& ev, const ModuleAction& A, uint64_t p,
                           bool expect_rank3) {
    StructuralPredicates sp = A.predicates(p);
    if (expect_rank3)
        ev.predicates.push_back({"rank3", sp.rank == 3});
    else
        ev.predicates.push_back({"transitive", sp.transitive_on_nonzero});
    ev.predicates.push_back({"stabilizers_p_groups", sp.all_stabilizers_p_groups});
    ev.predicates.push_back({"h_derived_p_group", sp.derived_of_h_is_p_group});
    ev.predicates.push_back({"faithful", sp.h_acts_faithfully});
}

std::vector<CensusEntry> build_entries() {
    std::vector<CensusEntry> es;
    auto add = [&](std::string id, std::string desc, uint64_t p, uint64_t expected, Tier tier,
                   std::string source, std::function<Evaluation(uint64_t)> fn) {
        CensusEntry e;
        e.id = std::move(id);
        e.description = std::move(desc);
        e.p = p;
        e.expected_nonlinear = expected;
        e.tier = tier;
        e.source = std::move(source);
        e.evaluate = std::move(fn);
        es.push_back(std::move(e));
    };

    // --- nonsolvable entries -------------------------------------------
    struct NS {
        const char* id;
        const char* name;
        uint64_t p;
    };
    for (NS ns : {NS{"A.nonsolv.A5", "A5", 5}, NS{"A.nonsolv.S5", "S5", 2},
                  NS{"A.nonsolv.PGL27", "PGL2_7", 2}, NS{"A.nonsolv.M10", "M10", 2},
                  NS{"A.nonsolv.AutA6", "AutA6", 2}, NS{"A.nonsolv.PSL28", "PSigmaL2_8", 3}}) {
        std::string name = ns.name;
        add(ns.id, std::string("nonsolvable ") + ns.name, ns.p, 2, Tier::Fast, "classification",
            [name](uint64_t p) { return evaluate_group_direct(families::nonsolvable(name), p); });
    }

    // --- entry (1): p'-groups -------------------------------------------
    add("A.1.Q8xC2", "2-group with |G'|=2, |Z|=4", 3, 2, Tier::Fast, "classification",
        [](uint64_t p) {
            Group q8 = regular_representation(families::q8_matrix_group());
            Group G = perm_direct_product(q8, families::cyclic_group(2), "Q8xC2");
            Evaluation ev = evaluate_group_direct(G, p);
            ev.predicates.push_back({"p_coprime", G.order() % p != 0});
            ev.predicates.push_back({"derived_order_2", G.derived_subgroup().order() == 2});
            ev.predicates.push_back({"center_order_4", G.center().order() == 4});
            return ev;
        });
    add("A.1.ES27", "extraspecial 3-group of order 27, exponent 3", 2, 2, Tier::Fast,
        "classification", [](uint64_t p) {
            Group G = families::heisenberg_group(3);
            Evaluation ev = evaluate_group_direct(G, p);
            Group D = G.derived_subgroup();
            Group Z = G.center();
            ev.predicates.push_back({"p_coprime", G.order() % p != 0});
            ev.predicates.push_back({"exponent_3", G.exponent() == 3});
            ev.predicates.push_back(
                {"extraspecial", D.order() == 3 && Z.order() == 3 && intersect_elements(D, Z).size() == 3});
            return ev;
        });

    // --- entry (2a) -----------------------------------------------------
    add("A.2a.PSU32", "PSU3(2) = F9 x| Q8", 5, 2, Tier::Fast, "classification", [](uint64_t p) {
        ModuleAction A = families::psu3_2();
        Evaluation ev = evaluate_affine_action(A, p);
        StructuralPredicates sp = A.predicates(p);
        ev.predicates.push_back({"transitive", sp.transitive_on_nonzero});
        ev.predicates.push_back({"frobenius", sp.frobenius});
        ev.predicates.push_back({"p_coprime", ev.group_order % p != 0});
        return ev;
    });

    // --- entry (2b) -----------------------------------------------------
    for (auto [id, q, n] : {std::tuple{"A.2b.AG25", 5u, 2u}, std::tuple{"A.2b.AG81", 3u, 4u}}) {
        add(id, "affine semilinear group", 2, 2, Tier::Fast, "classification",
            [q = q, n = n](uint64_t p) {
                ModuleAction A = families::gamma_action(q, n, true);
                Evaluation ev = evaluate_affine_action(A, p);
                ev.predicates.push_back({"transitive", A.predicates(p).transitive_on_nonzero});
                return ev;
            });
    }

    // --- entry (2c) instances ---------------------------------------------
    auto eval_2c = [](const ModuleAction& A, uint64_t p) {
        Evaluation ev = evaluate_affine_action(A, p);
        StructuralPredicates sp = A.predicates(p);
        auto od = A.orbits_on_nonzero();
        bool stab_c2 = true;
        for (uint64_t s : od.sizes)
            if (A.h_order() / s != 2) stab_c2 = false;
        ev.predicates.push_back({"transitive", sp.transitive_on_nonzero});
        ev.predicates.push_back({"h_derived_p_group", sp.derived_of_h_is_p_group});
        ev.predicates.push_back({"point_stabilizer_c2", stab_c2});
        ev.predicates.push_back({"frobenius_index2_part", exists_frobenius_index2(A)});
        return ev;
    };
    add("A.2c.S4", "S4 = F4 x| Gamma(4)", 3, 2, Tier::Fast, "classification", [eval_2c](uint64_t p) {
        return eval_2c(families::gamma_action(2, 2, true), p);
    });
    add("A.2c.F16", "F16 x| (C15 x| C2)", 5, 2, Tier::Fast, "classification",
        [eval_2c](uint64_t p) {
            return eval_2c(families::gamma_subgroup_action(2, 4, {{1, 0}, {0, 2}}, "C15:C2"), p);
        });

    // --- entry (2d) / remark instance -------------------------------------
    add("A.2d.G121", "F121 x| <t^4, t phi>, order 7260", 3, 2, Tier::Fast, "classification",
        [](uint64_t p) {
            ModuleAction A =
                families::gamma_subgroup_action(11, 2, {{4, 0}, {1, 1}}, "C5xDic3<=Gamma(121)");
            Evaluation ev = evaluate_affine_action(A, p);
            StructuralPredicates sp = A.predicates(p);
            Group D = A.h_group().derived_subgroup();
            auto ppd = nt::primitive_prime_divisors(11, 2);
            bool p_is_ppd =
                std::find(ppd.primes.begin(), ppd.primes.end(), p) != ppd.primes.end();
            ev.predicates.push_back({"rank3", sp.rank == 3});
            ev.predicates.push_back({"frobenius", sp.frobenius});
            ev.predicates.push_back({"h_order_half", A.h_order() == (121 - 1) / 2});
            ev.predicates.push_back(
                {"h_derived_nontrivial_p_group", D.order() > 1 && nt::is_power_of(D.order(), p)});
            ev.predicates.push_back({"p_primitive_prime_divisor", p_is_ppd});
            return ev;
        });

    // --- entries (2e), (2f), (2g) ------------------------------------------
    auto eval_shape = [](uint64_t q, uint32_t n, GammaShape shape, uint64_t p,
                         bool expect_regular_orbit) {
        ModuleAction A = families::rank3_gamma_subgroup(q, n, shape);
        Evaluation ev = evaluate_affine_action(A, p);
        add_action_predicates(ev, A, p, /*expect_rank3=*/true);
        if (expect_regular_orbit) {
            auto od = A.orbits_on_nonzero();
            bool has_regular = false;
            for (uint64_t s : od.sizes)
                if (s == A.h_order()) has_regular = true;
            ev.predicates.push_back({"regular_orbit", has_regular});
        }
        return ev;
    };
    add("A.2e.q3", "F9 x| D8", 2, 2, Tier::Fast, "classification", [eval_shape](uint64_t p) {
        return eval_shape(3, 2, GammaShape::DihedralXCyc, p, false);
    });
    add("A.2e.q7", "F49 x| (D16 x C3)", 2, 2, Tier::Fast, "classification",
        [eval_shape](uint64_t p) { return eval_shape(7, 2, GammaShape::DihedralXCyc, p, false); });
    add("A.2f.q25", "F25 x| Syl2(Gamma(25))", 2, 2, Tier::Fast, "classification",
        [eval_shape](uint64_t p) { return eval_shape(5, 2, GammaShape::Sylow2, p, false); });
    add("A.2f.q81", "F81 x| Syl2(Gamma(81))", 2, 2, Tier::Fast, "classification",
        [eval_shape](uint64_t p) { return eval_shape(3, 4, GammaShape::Sylow2, p, false); });
    add("A.2g.q11", "F121 x| (SD16 x C5)", 2, 2, Tier::Fast, "classification",
        [eval_shape](uint64_t p) { return eval_shape(11, 2, GammaShape::SdXCyc, p, true); });

    // --- entry (3a) ---------------------------------------------------------
    auto eval_imprim = [](const ModuleAction& A, uint64_t p, uint64_t Q) {
        Evaluation ev = evaluate_affine_action(A, p);
        add_action_predicates(ev, A, p, /*expect_rank3=*/true);
        auto sizes = sorted_orbit_sizes(A);
        bool shape = sizes.size() == 2 && sizes[0] == 2 * (Q - 1) && sizes[1] == (Q - 1) * (Q - 1);
        ev.predicates.push_back({"imprimitive_orbit_sizes", shape});
        return ev;
    };
    add("A.3a.q5full", "F25 x| (Gamma0(5) wr C2)", 2, 2, Tier::Fast, "classification",
        [eval_imprim](uint64_t p) {
            return eval_imprim(families::wreath_family(5, WreathVariant::Full), p, 5);
        });
    add("A.3a.q5phi", "F25 x| <t sigma> Phi", 2, 2, Tier::Fast, "classification",
        [eval_imprim](uint64_t p) {
            return eval_imprim(families::wreath_family(5, WreathVariant::PhiPart), p, 5);
        });

    // --- entry (3c) ---------------------------------------------------------
    add("A.3c.q7", "F49 x| (Dic3 x C3)", 3, 2, Tier::Fast, "classification",
        [eval_imprim](uint64_t p) {
            return eval_imprim(families::dic_cyc_family(7, 3, 1), p, 7);
        });
    add("A.3c.q243", "F3^10 x| (Dic121 x C121), Clifford path", 11, 2, Tier::Deep,
        "classification", [](uint64_t p) {
            ModuleAction A = families::dic_cyc_family(243, 11, 2);
            Evaluation ev = evaluate_affine_action(A, p, /*force_clifford=*/true);
            ModuleAction D = A.dual();
            auto od = D.orbits_on_nonzero();
            std::vector<uint64_t> sizes = od.sizes;
            std::sort(sizes.begin(), sizes.end());
            bool dual_sizes = sizes.size() == 2 && sizes[0] == 484 && sizes[1] == 58564;
            ev.predicates.push_back({"dual_orbit_sizes_484_58564", dual_sizes});
            bool stab_counts_1 = true;
            for (size_t i = 0; i < od.reps.size(); ++i) {
                Group stab = D.h_subgroup(od.stabilizer_gens[i]);
                if (p_regular_class_count(stab, p) != 1) stab_counts_1 = false;
            }
            ev.predicates.push_back({"dual_stabilizers_one_p_regular_class", stab_counts_1});
            Group HD = A.h_group().derived_subgroup();
            ev.predicates.push_back(
                {"h_derived_cyclic_121", HD.order() == 121 && HD.exponent() == 121});
            return ev;
        });

    // --- entry (4) ------------------------------------------------------------
    add("A.4.AGL18xC2", "(F8 x| C7) x C2", 7, 2, Tier::Fast, "classification", [](uint64_t p) {
        ModuleAction A = families::gamma_action(2, 3, false);
        Group agl = A.affine_permutation_group("AGL(1,8)");
        Group G = perm_direct_product(agl, families::cyclic_group(2), "AGL(1,8)xC2");
        Evaluation ev = evaluate_group_direct(G, p);
        StructuralPredicates sp = A.predicates(p);
        ev.predicates.push_back({"center_order_2", G.center().order() == 2});
        ev.predicates.push_back({"vh_frobenius", sp.frobenius && sp.transitive_on_nonzero});
        ev.predicates.push_back({"h_derived_p_group", sp.derived_of_h_is_p_group});
        return ev;
    });

    // --- entry (5) ------------------------------------------------------------
    add("A.5.SL23", "SL2(3)", 3, 2, Tier::Fast, "classification",
        [](uint64_t p) { return evaluate_group_direct(families::sl2_3(), p); });
    add("A.5.B4", "Borel of SU3(4)", 5, 2, Tier::Fast, "classification",
        [](uint64_t p) { return evaluate_group_direct(families::borel_su3(4), p); });
    add("A.5.B8", "Borel of SU3(8)", 3, 2, Tier::Fast, "classification",
        [](uint64_t p) { return evaluate_group_direct(families::borel_su3(8), p); });
    add("A.5.B16", "Borel of SU3(16)", 17, 2, Tier::Deep, "classification",
        [](uint64_t p) { return evaluate_group_direct(families::borel_su3(16), p); });

    // --- entry (6) ------------------------------------------------------------
    struct HE {
        const char* id;
        uint64_t q;
        HeisShape shape;
        const char* desc;
    };
    for (HE he : {HE{"A.6.ES27.gamma", 3, HeisShape::FullGamma, "ES(27) x| Gamma(9)"},
                  HE{"A.6.ES27.c8", 3, HeisShape::CyclicMax, "ES(27) x| C8"},
                  HE{"A.6.ES343.gamma", 7, HeisShape::FullGamma, "ES(343) x| Gamma(49)"},
                  HE{"A.6.ES343.c48", 7, HeisShape::CyclicMax, "ES(343) x| C48"},
                  HE{"A.6.ES343.q16xc3", 7, HeisShape::QuatMax, "ES(343) x| (Q16 x C3)"}}) {
        uint64_t q = he.q;
        HeisShape shape = he.shape;
        add(he.id, he.desc, 2, 2, Tier::Fast, "classification", [q, shape](uint64_t p) {
            Group G = families::heisenberg_extension(q, shape);
            Evaluation ev = evaluate_group_direct(G, p);
            ev.predicates.push_back(
                {"h_transitive_on_center", families::heisenberg_center_transitive(q, shape)});
            return ev;
        });
    }

    // --- negative controls -------------------------------------------------
    add("neg.A5.p2", "A5 at p=2 counts 3", 2, 3, Tier::Fast, "computed",
        [](uint64_t p) { return evaluate_group_direct(families::nonsolvable("A5"), p); });
    add("neg.S5.p3", "S5 at p=3 counts 3", 3, 3, Tier::Fast, "computed",
        [](uint64_t p) { return evaluate_group_direct(families::nonsolvable("S5"), p); });
    add("neg.S4.p2", "S4 at p=2 counts 1", 2, 1, Tier::Fast, "computed", [](uint64_t p) {
        return evaluate_affine_action(families::gamma_action(2, 2, true), p);
    });
    es.back().require_o_p_trivial = false;  // O_2(S4) is the Klein subgroup
    add("neg.F9Q8.p2", "F9 x| Q8 at p=2 counts 1", 2, 1, Tier::Fast, "computed", [](uint64_t p) {
        return evaluate_affine_action(
            families::gamma_subgroup_action(3, 2, {{2, 0}, {1, 1}}, "Q8<=Gamma(9)"), p);
    });
    add("neg.AG9.p2", "AGamma(9) at p=2 counts 1", 2, 1, Tier::Fast, "computed", [](uint64_t p) {
        return evaluate_affine_action(families::gamma_action(3, 2, true), p);
    });

    // --- fixture-backed primitive-group entries ------------------------------
    auto add_fixture = [&](std::string id, std::string label) {
        CensusEntry e;
        e.id = std::move(id);
        e.description = label + " from fixture data";
        e.p = 2;
        e.expected_nonlinear = 2;
        e.tier = Tier::Fast;
        e.source = "classification";
        e.fixture_label = std::move(label);
        es.push_back(std::move(e));
    };
    add_fixture("fix.2.d25i19", "PrimitiveGroup(25,19)");
    add_fixture("fix.2.d49i25", "PrimitiveGroup(49,25)");
    add_fixture("fix.2.d81i99", "PrimitiveGroup(81,99)");
    add_fixture("fix.2.d49i18", "PrimitiveGroup(49,18)");
    add_fixture("fix.2.d289i82", "PrimitiveGroup(289,82)");
    add_fixture("fix.2.d529i51", "PrimitiveGroup(529,51)");
    add_fixture("fix.2b.d25i12", "PrimitiveGroup(25,12)");
    add_fixture("fix.2b.d81i69", "PrimitiveGroup(81,69)");
    for (int i : {36, 37, 41, 61, 62, 63, 65, 66, 67, 82, 84, 85, 86, 87, 95}) {
        std::ostringstream id, label;
        id << "fix.3b.d81i" << i;
        label << "PrimitiveGroup(81," << i << ")";
        add_fixture(id.str(), label.str());
    }

    std::sort(es.begin(), es.end(),
              [](const CensusEntry& a, const CensusEntry& b) { return a.id < b.id; });
    return es;
}

}  // namespace

const std::vector<CensusEntry>& entries() {
    static const std::vector<CensusEntry> table = build_entries();
    return table;
}

FixtureMap load_fixtures(const std::string& path) {
    FixtureMap out;
    if (path.empty()) return out;
    for (families::FixtureEntry& e : families::parse_fixture_file(path)) {
        std::string label = e.label;
        out.emplace(std::move(label), std::move(e));
    }
    return out;
}

VerificationReport run_entry(const CensusEntry& e, const FixtureMap& fixtures) {
    VerificationReport r;
    r.id = e.id;
    r.p = e.p;
    r.expected = e.expected_nonlinear;
    auto t0 = std::chrono::steady_clock::now();
    try {
        Evaluation ev;
        if (!e.fixture_label.empty()) {
            auto it = fixtures.find(e.fixture_label);
            if (it == fixtures.end()) {
                r.skipped = true;
                r.skip_reason = "fixture missing";
                r.pass = true;
                return r;
            }
            const families::FixtureEntry& fx = it->second;
            if (fx.p != e.p)
                throw std::runtime_error("fixture prime disagrees with census entry");
            Group G = families::fixture_group(fx);
            ev = evaluate_group_direct(G, e.p);
            ev.predicates.push_back(
                {"fixture_expected_matches", fx.expected_nonlinear == e.expected_nonlinear});
        } else {
            ev = e.evaluate(e.p);
        }
        r.group_order = ev.group_order;
        r.o_p_trivial = ev.o_p_trivial;
        r.nonlinear = ev.summary.nonlinear_count;
        r.method = ev.summary.method_name();
        r.method_reason = ev.method_reason;
        r.predicates = ev.predicates;
        bool preds_ok = true;
        for (const auto& [name, val] : r.predicates)
            if (!val) preds_ok = false;
        r.pass = (r.o_p_trivial || !e.require_o_p_trivial) && r.nonlinear == r.expected && preds_ok;
    } catch (const std::exception& ex) {
        r.pass = false;
        r.skip_reason = std::string("error: ") + ex.what();
    }
    auto t1 = std::chrono::steady_clock::now();
    r.elapsed_ms = std::chrono::duration_cast<std::chrono::milliseconds>(t1 - t0).count();
    return r;
}

RunResult run_all(const RunOptions& opts) {
    FixtureMap fixtures = load_fixtures(opts.fixtures_path);
    std::vector<const CensusEntry*> selected;
    for (const CensusEntry& e : entries()) {
        if (opts.tier && e.tier != *opts.tier) continue;
        if (!opts.only.empty() &&
            std::find(opts.only.begin(), opts.only.end(), e.id) == opts.only.end())
            continue;
        selected.push_back(&e);
    }

    RunResult res;
    res.reports.resize(selected.size());
    const uint32_t jobs = std::max(1u, opts.jobs);
    if (jobs == 1) {
        for (size_t i = 0; i < selected.size(); ++i)
            res.reports[i] = run_entry(*selected[i], fixtures);
    } else {
        std::atomic<size_t> next{0};
        std::vector<std::thread> pool;
        for (uint32_t t = 0; t < jobs; ++t) {
            pool.emplace_back([&]() {
                for (;;) {
                    size_t i = next.fetch_add(1);
                    if (i >= selected.size()) return;
                    res.reports[i] = run_entry(*selected[i], fixtures);
                }
            });
        }
        for (auto& th : pool) th.join();
    }
    for (const VerificationReport& r : res.reports)
        if (!r.pass && !r.skipped) res.exit_ok = false;
    return res;
}

namespace {

std::string subgroup_shape_name(const Group& H) {
    const uint64_t n = H.order();
    if (n == 1) return "C1";
    if (H.exponent() == n) return "C" + std::to_string(n);
    uint64_t m = n;
    while (m % 2 == 0) m /= 2;
    if (m == 1 && n >= 4) {
        switch (recognize_2group_type(H)) {
            case TwoGroupType::Cyclic: return "C" + std::to_string(n);
            case TwoGroupType::Dihedral: return "D" + std::to_string(n);
            case TwoGroupType::Semidihedral: return "SD" + std::to_string(n);
            case TwoGroupType::Quaternion: return "Q" + std::to_string(n);
            case TwoGroupType::KleinLike: return "E" + std::to_string(n);
            case TwoGroupType::Other: break;
        }
    }
    return "order" + std::to_string(n);
}

}  // namespace

std::vector<ScanHit> scan_gamma_subgroups(uint64_t q, uint32_t n, uint64_t p) {
    ModuleAction Gamma = families::gamma_action(q, n, true);
    const Group& HG = Gamma.h_group();
    if (HG.order() > Group::kSubgroupsCap) throw CapExceeded(HG.order(), Group::kSubgroupsCap);

    std::vector<Group> subs = HG.all_subgroups();

    // dedupe by conjugacy inside Gamma
    std::set<std::vector<uint32_t>> seen;
    std::vector<Group> reps;
    for (const Group& S : subs) {
        std::vector<uint32_t> base;
        for (const Element& x : S.elements()) base.push_back(*HG.index_of(x));
        std::sort(base.begin(), base.end());
        std::vector<uint32_t> canon = base;
        for (const Element& g : HG.elements()) {
            std::vector<uint32_t> conj;
            conj.reserve(base.size());
            for (uint32_t i : base) conj.push_back(*HG.index_of(HG.element(i).conj(g)));
            std::sort(conj.begin(), conj.end());
            if (conj < canon) canon = conj;
        }
        if (seen.insert(canon).second) reps.push_back(S);
    }

    std::vector<ScanHit> hits;
    for (const Group& S : reps) {
        ModuleAction A = action_over_prime(Gamma, S.generators(), "scan");
        Group G = A.affine_permutation_group("scan");
        if (G.p_core(p).order() != 1) continue;
        IbrSummary s = nonlinear_ibr_count(G, p);
        if (s.nonlinear_count == 2)
            hits.push_back({S.order(), subgroup_shape_name(S), s.nonlinear_count});
    }
    std::sort(hits.begin(), hits.end(), [](const ScanHit& a, const ScanHit& b) {
        return std::tie(a.subgroup_order, a.shape) < std::tie(b.subgroup_order, b.shape);
    });
    return hits;
}

json VerificationReport::to_json(bool with_timing) const {
    json j;
    j["id"] = id;
    j["p"] = p;
    if (skipped) {
        j["skipped"] = true;
        j["reason"] = skip_reason;
        return j;
    }
    j["order"] = group_order;
    j["o_p_trivial"] = o_p_trivial;
    j["nonlinear"] = nonlinear;
    j["expected"] = expected;
    j["method"] = method;
    if (!method_reason.empty()) j["method_reason"] = method_reason;
    json preds = json::object();
    for (const auto& [name, val] : predicates) preds[name] = val;
    j["predicates"] = preds;
    j["pass"] = pass;
    if (!pass && !skip_reason.empty()) j["error"] = skip_reason;
    if (with_timing) j["elapsed_ms"] = elapsed_ms;
    return j;
}

}  // namespace census
}  // namespace brc
