#include "families.hpp"

#include <algorithm>
#include <fstream>
#include <numeric>
#include <sstream>
#include <stdexcept>

#include <json.hpp>

#include "numtheory.hpp"

namespace brc {
namespace families {

namespace {

void require(bool cond, const std::string& msg) {
    if (!cond) throw std::runtime_error(msg);
}

uint64_t ipow(uint64_t b, uint32_t e) {
    uint64_t r = 1;
    while (e--) r *= b;
    return r;
}

// Splits a prime power m = q^k; throws if m is not one.
std::pair<uint64_t, uint32_t> split_prime_power(uint64_t m) {
    uint64_t q;
    uint32_t k;
    if (!nt::prime_power_split(m, &q, &k))
        throw std::invalid_argument(std::to_string(m) + " is not a prime power");
    return {q, k};
}

ModuleAction action_from_matrix_elements(const FieldRef& f, uint32_t n,
                                         const std::vector<Element>& mats, std::string label) {
    std::vector<SemilinearMap> gens;
    gens.reserve(mats.size());
    for (const Element& m : mats) gens.push_back(SemilinearMap::linear(f, n, m.entries()));
    return ModuleAction(f, n, std::move(gens), std::move(label));
}

}  // namespace

ModuleAction gamma_action(uint64_t q, uint32_t n, bool with_frobenius) {
    require(nt::is_prime(q), "gamma_action: q must be prime");
    FieldRef F = FieldSpec::get(q, n);
    std::vector<SemilinearMap> gens;
    gens.push_back(SemilinearMap::linear(F, 1, {F->primitive_element()}));
    if (with_frobenius && n > 1)
        gens.push_back(SemilinearMap::semilinear(F, 1, {1}, 1));
    std::ostringstream label;
    label << (with_frobenius ? "Gamma(" : "Gamma0(") << F->size() << ")";
    ModuleAction A(F, 1, std::move(gens), label.str());
    uint64_t expect = with_frobenius ? uint64_t(n) * (F->size() - 1) : F->size() - 1;
    require(A.h_order() == expect, "gamma_action: order formula violated");
    return A;
}

ModuleAction gamma_subgroup_action(uint64_t q, uint32_t n,
                                   const std::vector<std::pair<uint64_t, uint32_t>>& descriptors,
                                   std::string label) {
    require(nt::is_prime(q), "gamma_subgroup_action: q must be prime");
    FieldRef F = FieldSpec::get(q, n);
    std::vector<SemilinearMap> gens;
    for (auto [a, e] : descriptors)
        gens.push_back(SemilinearMap::semilinear(F, 1, {F->primitive_power(a)}, e));
    if (label.empty()) {
        std::ostringstream os;
        os << "H<=Gamma(" << F->size() << ")";
        label = os.str();
    }
    return ModuleAction(F, 1, std::move(gens), std::move(label));
}

Group affine_gamma_group(uint64_t q, uint32_t n) {
    ModuleAction A = gamma_action(q, n, true);
    std::ostringstream label;
    label << "AGamma(" << A.field()->size() << ")";
    Group G = A.affine_permutation_group(label.str());
    require(G.order() == A.space_size() * uint64_t(n) * (A.space_size() - 1),
            "affine gamma order formula violated");
    return G;
}

ModuleAction wreath_action(uint64_t q, uint32_t k, WreathVariant v, std::string label) {
    require(nt::is_prime(q), "wreath_action: q must be prime");
    FieldRef F = FieldSpec::get(q, k);
    const uint32_t t = F->primitive_element();
    std::vector<SemilinearMap> gens;
    if (v == WreathVariant::Full) {
        gens.push_back(SemilinearMap::linear(F, 2, {t, 0, 0, 1}));        // t on V1
        gens.push_back(SemilinearMap::linear(F, 2, {0, 1, 1, 0}));        // swap
    } else {
        gens.push_back(SemilinearMap::linear(F, 2, {0, t, 1, 0}));        // t then swap
        gens.push_back(SemilinearMap::linear(F, 2, {F->mul(t, t), 0, 0, 1}));  // t^2 on V1
    }
    if (label.empty()) {
        std::ostringstream os;
        os << (v == WreathVariant::Full ? "Gamma0wrC2(" : "PhiPartwr(") << F->size() << ")";
        label = os.str();
    }
    ModuleAction A(F, 2, std::move(gens), std::move(label));
    uint64_t Q = F->size();
    uint64_t expect = (v == WreathVariant::Full) ? 2 * (Q - 1) * (Q - 1) : (Q - 1) * (Q - 1);
    require(A.h_order() == expect, "wreath order formula violated");
    return A;
}

ModuleAction wreath_family(uint64_t q, WreathVariant v) {
    require(nt::is_fermat_prime(q) && q <= 257, "wreath_family: q must be a Fermat prime <= 257");
    return wreath_action(q, 1, v);
}

ModuleAction dic_cyc_family(uint64_t qk, uint64_t p, uint32_t s) {
    auto [q, k] = split_prime_power(qk);
    require(qk <= 243, "dic_cyc_family: q^k exceeds 3^5");
    require(p % 2 == 1 && nt::is_prime(p), "dic_cyc_family: p must be an odd prime");
    require(qk == 2 * ipow(p, s) + 1, "dic_cyc_family: q^k = 2p^s + 1 fails");
    std::ostringstream label;
    label << "Dic" << (qk - 1) / 2 << "xC" << (qk - 1) / 2 << "@" << qk;
    ModuleAction A = wreath_action(q, k, WreathVariant::PhiPart, label.str());
    Group D = A.h_group().derived_subgroup();
    require(D.order() == ipow(p, s), "dic_cyc_family: |H'| != p^s");
    require(D.exponent() == D.order(), "dic_cyc_family: H' not cyclic");
    return A;
}

namespace {

// Subgroup of Gamma0(q^n) of the given order, as an element of the
// ambient prime-matrix group.
Element gamma0_piece(const FieldRef& F, uint64_t order) {
    uint64_t full = F->size() - 1;
    require(full % order == 0, "no cyclic subgroup of requested order in Gamma0");
    uint32_t code = F->primitive_power(full / order);
    FieldRef fp = FieldSpec::get(F->characteristic(), 1);
    return Element::mat(fp, F->degree(), mult_matrix(fp, F, code));
}

}  // namespace

ModuleAction rank3_gamma_subgroup(uint64_t q, uint32_t n, GammaShape shape) {
    ModuleAction Gamma = gamma_action(q, n, true);
    FieldRef F = Gamma.field();
    FieldRef fp = FieldSpec::get(q, 1);

    if (shape == GammaShape::FrobeniusHalf) {
        require((F->size() - 1) % 2 == 0, "frobenius_half needs odd q^n");
        std::ostringstream os;
        os << "C" << (F->size() - 1) / 2 << "<=Gamma(" << F->size() << ")";
        return gamma_subgroup_action(q, n, {{2, 0}}, os.str());
    }

    const Group& HG = Gamma.h_group();
    Group syl = HG.sylow_subgroup(2);

    auto with_odd_part = [&](const Group& two_part, uint64_t odd_order,
                             const std::string& label) {
        std::vector<Element> mats = two_part.generators();
        if (odd_order > 1) mats.push_back(gamma0_piece(F, odd_order));
        ModuleAction A = action_from_matrix_elements(fp, n, mats, label);
        require(A.h_order() == two_part.order() * odd_order,
                "rank3 shape: direct factor order mismatch");
        return A;
    };

    switch (shape) {
        case GammaShape::Sylow2: {
            std::ostringstream os;
            os << "Syl2Gamma(" << F->size() << ")";
            return action_from_matrix_elements(fp, n, syl.generators(), os.str());
        }
        case GammaShape::DihedralXCyc:
        case GammaShape::QuatXCyc: {
            require(n == 2, "dihedral/quaternion shapes live in Gamma(q^2)");
            TwoGroupType want =
                shape == GammaShape::DihedralXCyc ? TwoGroupType::Dihedral : TwoGroupType::Quaternion;
            for (const Group& M : syl.all_subgroups()) {
                if (M.order() * 2 != syl.order()) continue;
                if (recognize_2group_type(M) != want) continue;
                std::ostringstream os;
                os << (want == TwoGroupType::Dihedral ? "D" : "Q") << M.order() << "xC"
                   << (q - 1) / 2 << "<=Gamma(" << F->size() << ")";
                return with_odd_part(M, (q - 1) / 2, os.str());
            }
            throw std::runtime_error("no maximal subgroup of the requested 2-group shape exists");
        }
        case GammaShape::SdXCyc: {
            require(n == 2, "semidihedral shape lives in Gamma(q^2)");
            require(recognize_2group_type(syl) == TwoGroupType::Semidihedral,
                    "Sylow 2-subgroup is not semidihedral");
            std::ostringstream os;
            os << "SD" << syl.order() << "xC" << (q - 1) / 2 << "<=Gamma(" << F->size() << ")";
            return with_odd_part(syl, (q - 1) / 2, os.str());
        }
        default:
            throw std::logic_error("unhandled shape");
    }
}

ModuleAction psu3_2() {
    FieldRef f3 = FieldSpec::get(3, 1);
    std::vector<SemilinearMap> gens;
    gens.push_back(SemilinearMap::linear(f3, 2, {0, 2, 1, 0}));  // [[0,-1],[1,0]]
    gens.push_back(SemilinearMap::linear(f3, 2, {1, 1, 1, 2}));  // [[1,1],[1,-1]]
    ModuleAction A(f3, 2, std::move(gens), "Q8onF9");
    require(A.h_order() == 8, "psu3_2: complement is not Q8");
    return A;
}

Group heisenberg_group(uint64_t q) {
    require(nt::is_prime(q) && q % 2 == 1, "heisenberg_group: q must be an odd prime");
    FieldRef F = FieldSpec::get(q, 1);
    auto law = TupleLaw::heisenberg(F);
    std::vector<Element> gens{Element::tuple(law, {1, 0, 0}), Element::tuple(law, {0, 1, 0})};
    std::ostringstream os;
    os << "ES(" << q * q * q << ")";
    Group P(std::move(gens), os.str());
    require(P.order() == q * q * q, "heisenberg order != q^3");
    require(P.exponent() == q, "heisenberg exponent != q");
    return P;
}

namespace {

std::pair<std::vector<Element>, std::string> heisenberg_h_generators(uint64_t q, HeisShape shape) {
    FieldRef F = FieldSpec::get(q, 1);
    FieldRef F2 = FieldSpec::get(q, 2);
    std::vector<Element> hgens;
    std::string hname;
    switch (shape) {
        case HeisShape::FullGamma:
            hgens.push_back(Element::mat(F, 2, mult_matrix(F, F2, F2->primitive_element())));
            hgens.push_back(Element::mat(F, 2, frobenius_matrix(F, F2, 1)));
            hname = "Gamma(" + std::to_string(q * q) + ")";
            break;
        case HeisShape::CyclicMax:
            hgens.push_back(Element::mat(F, 2, mult_matrix(F, F2, F2->primitive_element())));
            hname = "C" + std::to_string(q * q - 1);
            break;
        case HeisShape::QuatMax: {
            ModuleAction QA = rank3_gamma_subgroup(q, 2, GammaShape::QuatXCyc);
            for (const SemilinearMap& g : QA.action_gens())
                hgens.push_back(Element::mat(F, 2, g.entries));
            hname = QA.label();
            break;
        }
    }
    return {std::move(hgens), std::move(hname)};
}

}  // namespace

bool heisenberg_center_transitive(uint64_t q, HeisShape shape) {
    FieldRef F = FieldSpec::get(q, 1);
    auto [hgens, hname] = heisenberg_h_generators(q, shape);
    // The center action of an automorphism inducing A on ES/Z is forced
    // to be multiplication by det(A), so transitivity on Z^# amounts to
    // the determinants generating F_q^x.
    std::vector<bool> seen(q, false);
    seen[1] = true;
    uint64_t count = 1;
    std::vector<uint32_t> frontier{1};
    while (!frontier.empty()) {
        std::vector<uint32_t> next;
        for (uint32_t c : frontier)
            for (const Element& h : hgens) {
                uint32_t d = F->sub(F->mul(h.entries()[0], h.entries()[3]),
                                    F->mul(h.entries()[1], h.entries()[2]));
                uint32_t cd = F->mul(c, d);
                if (!seen[cd]) {
                    seen[cd] = true;
                    ++count;
                    next.push_back(cd);
                }
            }
        frontier.swap(next);
    }
    return count == q - 1;
}

Group heisenberg_extension(uint64_t q, HeisShape shape) {
    require(q == 3 || q == 7 || q == 31, "heisenberg_extension: q must be 3, 7 or 31");
    require(shape != HeisShape::QuatMax || q >= 7, "quaternion shape needs q >= 7");
    FieldRef F = FieldSpec::get(q, 1);
    auto [hgens, hname] = heisenberg_h_generators(q, shape);

    auto law = TupleLaw::heisenberg(F);
    auto act = std::make_shared<PairAction>();
    act->name = "heis_gl2(" + std::to_string(q) + ")";
    // Column convention: with pair products composing actor parts
    // left-to-right, associativity needs act(h1 h2, k) = act(h1, act(h2, k)).
    act->act = [law, F](const Element& h, const Element& k) -> Element {
        const uint32_t* v = k.coords();
        const auto& m = h.entries();
        uint32_t v0 = F->add(F->mul(m[0], v[0]), F->mul(m[1], v[1]));
        uint32_t v1 = F->add(F->mul(m[2], v[0]), F->mul(m[3], v[1]));
        uint32_t d = F->sub(F->mul(m[0], m[3]), F->mul(m[1], m[2]));
        return Element::tuple(law, {v0, v1, F->mul(d, v[2])});
    };

    Element tid = Element::tuple(law, {0, 0, 0});
    Element hid = Element::mat_identity(F, 2);
    std::vector<Element> gens;
    gens.push_back(Element::pair(act, Element::tuple(law, {1, 0, 0}), hid));
    gens.push_back(Element::pair(act, Element::tuple(law, {0, 1, 0}), hid));
    for (const Element& h : hgens) gens.push_back(Element::pair(act, tid, h));

    return Group(std::move(gens), "ES(" + std::to_string(q * q * q) + "):" + hname);
}

std::vector<uint32_t> suzuki_valid_eps(uint32_t m, uint32_t theta_power) {
    FieldRef F = FieldSpec::get(2, m);
    std::vector<uint32_t> out;
    for (uint32_t eps = 1; eps < F->size(); ++eps) {
        bool valid = true;
        for (uint32_t x = 1; x < F->size() && valid; ++x)
            if (eps == F->add(F->inv(x), F->pow(x, theta_power))) valid = false;
        if (valid) out.push_back(eps);
    }
    return out;
}

Group suzuki_B(uint32_t m, uint32_t theta_power, int eps_index) {
    require(m >= 1 && (1u << m) <= 256, "suzuki_B: q = 2^m must be <= 256");
    FieldRef F = FieldSpec::get(2, m);
    // theta must be a field automorphism x -> x^(2^j) of odd order
    {
        uint32_t t = theta_power;
        uint32_t j = 0;
        require(t >= 1, "suzuki_B: theta power must be positive");
        while (t > 1 && t % 2 == 0) {
            t /= 2;
            ++j;
        }
        require(t == 1, "suzuki_B: theta must be a 2-power");
        j %= m;
        uint32_t order = m / std::gcd(m, j == 0 ? m : j);
        require(order % 2 == 1, "suzuki_B: theta must have odd order");
    }
    auto valid = suzuki_valid_eps(m, theta_power);
    if (valid.empty()) throw std::runtime_error("suzuki_B: no valid eps exists");
    uint32_t eps;
    if (eps_index < 0) {
        eps = valid[0];
    } else if (size_t(eps_index) < valid.size()) {
        eps = valid[size_t(eps_index)];
    } else {
        std::ostringstream os;
        os << "suzuki_B: eps index out of range; valid eps codes:";
        for (uint32_t v : valid) os << ' ' << v;
        throw std::runtime_error(os.str());
    }

    auto law = TupleLaw::suzuki_b(F, theta_power, eps);
    std::vector<Element> gens;
    for (uint32_t i = 0; i < m; ++i) {
        uint32_t w = 1u << i;  // F_2-basis of F_q
        gens.push_back(Element::tuple(law, {w, 0, 0}));
        gens.push_back(Element::tuple(law, {0, w, 0}));
    }
    std::ostringstream os;
    os << "B(" << m << "," << theta_power << "," << eps << ")";
    Group P(std::move(gens), os.str());
    const uint64_t q = F->size();
    if (q * q * q <= Group::kEngineCap) {
        require(P.order() == q * q * q, "suzuki_B order != q^3");
        Group Z = P.center();
        require(Z.order() == q, "suzuki_B center != q");
        for (const Element& z : Z.elements())
            require(z.coords()[0] == 0 && z.coords()[1] == 0, "suzuki_B center not (0,0,*)");
    }
    return P;
}

namespace {

Element su3_unipotent(const FieldRef& F2, uint32_t a, uint32_t b, uint64_t q) {
    // [[1, a, b], [0, 1, a^q], [0, 0, 1]] with b + b^q = a^(q+1)
    uint32_t aq = F2->pow(a, q);
    return Element::mat(F2, 3, {1, a, b, 0, 1, aq, 0, 0, 1});
}

std::vector<Element> pq_generators(const FieldRef& F2, uint64_t q, uint32_t m) {
    std::vector<Element> gens;
    // The primitive element w generates F_{q^2} as an algebra, so
    // {w^0 .. w^(2m-1)} is an F_2-basis; b solves b + b^q = a^(q+1).
    for (uint32_t i = 0; i < 2 * m; ++i) {
        uint32_t a = F2->pow(F2->primitive_element(), i);
        uint32_t target = F2->pow(a, q + 1);
        bool found = false;
        for (uint32_t b = 0; b < F2->size() && !found; ++b) {
            if (F2->add(b, F2->pow(b, q)) == target) {
                gens.push_back(su3_unipotent(F2, a, b, q));
                found = true;
            }
        }
        if (!found) throw std::logic_error("trace equation unsolvable");
    }
    // center: a = 0, b in the subfield F_q (an F_2-basis of it)
    std::vector<uint32_t> span{0};
    for (uint32_t y = 1; y < F2->size(); ++y) {
        if (F2->pow(y, q) != y) continue;  // not in F_q
        if (std::find(span.begin(), span.end(), y) != span.end()) continue;
        gens.push_back(su3_unipotent(F2, 0, y, q));
        std::vector<uint32_t> grown = span;
        for (uint32_t s : span) grown.push_back(F2->add(s, y));
        span = std::move(grown);
        if (span.size() >= q) break;
    }
    return gens;
}

}  // namespace

Group pq_sylow_su3(uint64_t q) {
    require(q == 4 || q == 8 || q == 16, "pq_sylow_su3: q must be 4, 8 or 16");
    auto [two, m] = split_prime_power(q);
    FieldRef F2 = FieldSpec::get(2, 2 * m);
    Group P(pq_generators(F2, q, m), "P(" + std::to_string(q) + ")");
    require(P.order() == q * q * q, "P(q) order != q^3");
    return P;
}

Group borel_su3(uint64_t q) {
    require(q == 4 || q == 8 || q == 16, "borel_su3: q must be 4, 8 or 16");
    auto [two, m] = split_prime_power(q);
    FieldRef F2 = FieldSpec::get(2, 2 * m);
    std::vector<Element> gens = pq_generators(F2, q, m);
    // Torus generator diag(mu^-1, 1, mu^q) normalizing P(q): it conjugates
    // M(a, b) to M(mu a, mu^(q+1) b), a faithful order-(q^2-1) action that
    // is regular on the a-part. The diagonal torus of SU_3 itself has the
    // scalar center C_gcd(3,q+1) in its kernel, which would leave a
    // nontrivial p-core when 3 | q+1.
    uint32_t mu = F2->primitive_element();
    gens.push_back(Element::mat(F2, 3, {F2->inv(mu), 0, 0, 0, 1, 0, 0, 0, F2->pow(mu, q)}));
    Group B(std::move(gens), "B(" + std::to_string(q) + ")");
    require(B.order() == q * q * q * (q * q - 1), "B(q) order != q^3(q^2-1)");
    return B;
}

namespace {

// Permutations of the projective line over F_q: points are field codes
// 0..q-1 plus q for infinity.
struct ProjLine {
    FieldRef F;
    uint32_t inf;

    explicit ProjLine(FieldRef f) : F(std::move(f)), inf(uint32_t(F->size())) {}

    Element translation() const {  // z -> z + 1
        std::vector<uint32_t> img(inf + 1);
        for (uint32_t z = 0; z < inf; ++z) img[z] = F->add(z, 1);
        img[inf] = inf;
        return Element::perm(std::move(img));
    }
    Element scaling(uint32_t a) const {  // z -> a z
        std::vector<uint32_t> img(inf + 1);
        for (uint32_t z = 0; z < inf; ++z) img[z] = F->mul(a, z);
        img[inf] = inf;
        return Element::perm(std::move(img));
    }
    Element inversion(uint32_t a) const {  // z -> a / z
        std::vector<uint32_t> img(inf + 1);
        img[0] = inf;
        img[inf] = 0;
        for (uint32_t z = 1; z < inf; ++z) img[z] = F->mul(a, F->inv(z));
        return Element::perm(std::move(img));
    }
    Element frobenius_map() const {  // z -> z^p
        std::vector<uint32_t> img(inf + 1);
        for (uint32_t z = 0; z < inf; ++z) img[z] = F->frobenius(z, 1);
        img[inf] = inf;
        return Element::perm(std::move(img));
    }
    Element scaled_frobenius(uint32_t a) const {  // z -> a z^p
        std::vector<uint32_t> img(inf + 1);
        for (uint32_t z = 0; z < inf; ++z) img[z] = F->mul(a, F->frobenius(z, 1));
        img[inf] = inf;
        return Element::perm(std::move(img));
    }
};

Group build_m10() {
    FieldRef F9 = FieldSpec::get(3, 2);
    ProjLine L(F9);
    uint32_t lam = F9->primitive_element();
    uint32_t lam2 = F9->mul(lam, lam);
    std::vector<Element> gens{L.translation(), L.scaling(lam2), L.inversion(F9->neg(1)),
                              L.scaled_frobenius(lam)};
    Group M(std::move(gens), "M10");
    require(M.order() == 720, "M10 order != 720");
    require(!M.contains(L.scaling(lam)), "M10 contains the diagonal coset of PGL2(9)");
    // exactly one class of involutions
    uint64_t invol_classes = 0;
    for (const ConjClass& c : M.classes())
        if (c.order == 2) ++invol_classes;
    require(invol_classes == 1, "M10 must have exactly one involution class");
    // unique minimal normal subgroup of order 360
    std::vector<uint64_t> normal_orders;
    for (const ConjClass& c : M.classes()) {
        if (c.order == 1) continue;
        Group N = M.normal_closure({M.element(c.rep)});
        normal_orders.push_back(N.order());
    }
    std::sort(normal_orders.begin(), normal_orders.end());
    require(!normal_orders.empty() && normal_orders.front() == 360,
            "M10 socle is not of order 360");
    return M;
}

}  // namespace

Group nonsolvable(const std::string& name) {
    if (name == "A5") {
        Group G({Element::perm({1, 2, 3, 4, 0}), Element::perm({1, 2, 0, 3, 4})}, "A5");
        require(G.order() == 60, "A5 order != 60");
        return G;
    }
    if (name == "S5") {
        Group G({Element::perm({1, 2, 3, 4, 0}), Element::perm({1, 0, 2, 3, 4})}, "S5");
        require(G.order() == 120, "S5 order != 120");
        return G;
    }
    if (name == "PGL2_7") {
        FieldRef F7 = FieldSpec::get(7, 1);
        ProjLine L(F7);
        Group G({L.translation(), L.scaling(F7->primitive_element()), L.inversion(1)}, "PGL2(7)");
        require(G.order() == 336, "PGL2(7) order != 336");
        return G;
    }
    if (name == "PSigmaL2_8") {
        FieldRef F8 = FieldSpec::get(2, 3);
        ProjLine L(F8);
        Group G({L.translation(), L.scaling(F8->primitive_element()), L.inversion(1),
                 L.frobenius_map()},
                "PSigmaL2(8)");
        require(G.order() == 1512, "PSigmaL2(8) order != 1512");
        return G;
    }
    if (name == "M10") return build_m10();
    if (name == "AutA6") {
        FieldRef F9 = FieldSpec::get(3, 2);
        ProjLine L(F9);
        uint32_t lam = F9->primitive_element();
        Group G({L.translation(), L.scaling(lam), L.inversion(F9->neg(1)), L.frobenius_map()},
                "Aut(A6)");
        require(G.order() == 1440, "Aut(A6) order != 1440");
        return G;
    }
    throw std::invalid_argument("unknown nonsolvable group name: " + name);
}

Group cyclic_group(uint64_t n) {
    std::vector<uint32_t> img(n);
    for (uint64_t i = 0; i < n; ++i) img[i] = uint32_t((i + 1) % n);
    return Group({Element::perm(std::move(img))}, "C" + std::to_string(n));
}

Group sl2_3() {
    FieldRef F3 = FieldSpec::get(3, 1);
    Group G({Element::mat(F3, 2, {1, 1, 0, 1}), Element::mat(F3, 2, {0, 2, 1, 0})}, "SL2(3)");
    require(G.order() == 24, "SL2(3) order != 24");
    return G;
}

Group q8_matrix_group() {
    FieldRef F3 = FieldSpec::get(3, 1);
    Group G({Element::mat(F3, 2, {0, 2, 1, 0}), Element::mat(F3, 2, {1, 1, 1, 2})}, "Q8");
    require(G.order() == 8, "Q8 order != 8");
    return G;
}

WreathPerm c2n_wr_c2(uint32_t n) {
    const uint32_t m = 1u << n;  // |C_{2^n}|
    std::vector<uint32_t> a_img(2 * m), y_img(2 * m);
    for (uint32_t i = 0; i < m; ++i) {
        a_img[i] = (i + 1) % m;      // cycle on the first block
        a_img[m + i] = m + i;        // fix the second block
        y_img[i] = m + i;            // swap blocks
        y_img[m + i] = i;
    }
    Element a = Element::perm(std::move(a_img));
    Element y = Element::perm(std::move(y_img));
    Group G({a, y}, "C" + std::to_string(m) + "wrC2");
    require(G.order() == uint64_t(2) * m * m, "wreath order != 2m^2");
    return {std::move(G), std::move(a), std::move(y)};
}

std::vector<FixtureEntry> parse_fixture_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open fixture file: " + path);
    std::vector<FixtureEntry> out;
    std::string line;
    size_t lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        if (line.find_first_not_of(" \t\r\n") == std::string::npos) continue;
        nlohmann::json j;
        try {
            j = nlohmann::json::parse(line);
        } catch (const std::exception& e) {
            throw std::runtime_error("fixture line " + std::to_string(lineno) +
                                     ": malformed JSON: " + e.what());
        }
        FixtureEntry e;
        try {
            e.label = j.at("label").get<std::string>();
            e.degree = j.at("degree").get<uint32_t>();
            e.p = j.at("p").get<uint64_t>();
            e.expected_nonlinear = j.at("expected_nonlinear").get<uint64_t>();
            e.generators = j.at("generators").get<std::vector<std::vector<uint32_t>>>();
        } catch (const std::exception& ex) {
            throw std::runtime_error("fixture line " + std::to_string(lineno) +
                                     ": missing or mistyped field: " + ex.what());
        }
        for (const auto& g : e.generators) {
            if (g.size() != e.degree)
                throw std::runtime_error("fixture line " + std::to_string(lineno) +
                                         ": generator length != degree");
            std::vector<bool> seen(e.degree, false);
            for (uint32_t v : g) {
                if (v < 1 || v > e.degree || seen[v - 1])
                    throw std::runtime_error("fixture line " + std::to_string(lineno) +
                                             ": generator is not a bijection");
                seen[v - 1] = true;
            }
        }
        out.push_back(std::move(e));
    }
    return out;
}

Group fixture_group(const FixtureEntry& e) {
    std::vector<Element> gens;
    for (const auto& g : e.generators) {
        std::vector<uint32_t> img(e.degree);
        for (uint32_t i = 0; i < e.degree; ++i) img[i] = g[i] - 1;
        gens.push_back(Element::perm(std::move(img)));
    }
    return Group(std::move(gens), e.label);
}

std::string fixture_line(const Group& perm_group, const std::string& label, uint64_t p,
                         uint64_t expected_nonlinear) {
    nlohmann::ordered_json j;
    j["label"] = label;
    j["degree"] = perm_group.generators()[0].degree();
    j["p"] = p;
    j["expected_nonlinear"] = expected_nonlinear;
    nlohmann::ordered_json gens = nlohmann::ordered_json::array();
    for (const Element& g : perm_group.generators()) {
        std::vector<uint32_t> img;
        img.reserve(g.images().size());
        for (uint32_t v : g.images()) img.push_back(v + 1);
        gens.push_back(img);
    }
    j["generators"] = gens;
    return j.dump();
}

}  // namespace families
}  // namespace brc
