#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "action.hpp"
#include "group.hpp"

namespace brc {
namespace families {

// --- semilinear groups -------------------------------------------------

// Gamma(q^n) acting on F_{q^n}: multiplications by a fixed primitive
// element, plus Frobenius when with_frobenius is set. q prime, q^n <= 10^6.
ModuleAction gamma_action(uint64_t q, uint32_t n, bool with_frobenius);

// Subgroup of Gamma(q^n) generated by maps x -> t^a x^(q^e), t the
// primitive element; descriptors are (a, e) pairs.
ModuleAction gamma_subgroup_action(uint64_t q, uint32_t n,
                                   const std::vector<std::pair<uint64_t, uint32_t>>& descriptors,
                                   std::string label = "");

// A Gamma(q^n) = V rtimes Gamma(q^n) as permutations of the q^n field
// elements; order asserted to be q^n * n * (q^n - 1).
Group affine_gamma_group(uint64_t q, uint32_t n);

// --- imprimitive wreath families ----------------------------------------

enum class WreathVariant { Full, PhiPart };

// H <= Gamma0(Q) wr C2 acting on V1 x V2 with |Vi| = Q = q^k:
//   Full:    <t on V1, swap>            order 2 (Q-1)^2
//   PhiPart: <t swap, t^2 on V1>        order (Q-1)^2
ModuleAction wreath_action(uint64_t q, uint32_t k, WreathVariant v, std::string label = "");

// Classification-entry wrapper: q a Fermat prime <= 257, k = 1.
ModuleAction wreath_family(uint64_t q, WreathVariant v);

// Dic x C family on V1 x V2 of size q^2k: requires q^k = 2 p^s + 1 with
// p an odd prime and q^k <= 243. Asserts |H| = (q^k-1)^2 and that H' is
// cyclic of order p^s.
ModuleAction dic_cyc_family(uint64_t qk, uint64_t p, uint32_t s);

// --- rank-3 subgroup shapes inside Gamma(q^n) ----------------------------

enum class GammaShape { DihedralXCyc, SdXCyc, Sylow2, FrobeniusHalf, QuatXCyc };

// Locates the requested subgroup shape constructively (Sylow subgroup,
// recognized maximal pieces, odd part of Gamma0) and asserts the shape;
// throws std::runtime_error if the shape cannot be found.
ModuleAction rank3_gamma_subgroup(uint64_t q, uint32_t n, GammaShape shape);

// Q8 <= GL_2(3) acting on F_3^2 (the PSU_3(2) complement).
ModuleAction psu3_2();

// --- extraspecial extensions (entry 6) ----------------------------------

enum class HeisShape { FullGamma, CyclicMax, QuatMax };

// ES(q^3_+) alone, as (v, c) tuples with the polarized symplectic product.
Group heisenberg_group(uint64_t q);

// ES(q^3_+) rtimes H with H <= Gamma(q^2) embedded into GL_2(q) and acting
// by (v, c) -> (v h, det(h) c). q in {3, 7, 31}; QuatMax needs q >= 7.
Group heisenberg_extension(uint64_t q, HeisShape shape);

// Whether H reaches every nontrivial central element of ES(q^3): its
// determinants must generate F_q^x. Fails for the quaternion shape,
// whose determinant image is the group of squares.
bool heisenberg_center_transitive(uint64_t q, HeisShape shape);

// --- Suzuki 2-groups and SU_3 Borel (entries 5) --------------------------

// Valid eps values (codes, ascending) for B(m, theta, eps).
std::vector<uint32_t> suzuki_valid_eps(uint32_t m, uint32_t theta_power);

// Higman's B-type group on F_q^3, q = 2^m <= 256. theta_power is the
// exponent of the twisting automorphism x -> x^theta_power and must be a
// 2-power giving an odd-order automorphism (1 gives the identity).
// eps_index < 0 picks the least valid eps.
Group suzuki_B(uint32_t m, uint32_t theta_power, int eps_index = -1);

// Sylow 2-subgroup P(q) of SU_3(q) (unitriangular model) and the Borel
// subgroup B(q) = P(q) rtimes torus, as 3x3 matrices over F_{q^2};
// q = 2^m in {4, 8, 16}.
Group pq_sylow_su3(uint64_t q);
Group borel_su3(uint64_t q);

// --- nonsolvable entries -------------------------------------------------

// name in {A5, S5, PGL2_7, M10, AutA6, PSigmaL2_8}; all certified by
// order and structural invariants after construction.
Group nonsolvable(const std::string& name);

// --- small utilities ------------------------------------------------------

Group cyclic_group(uint64_t n);                    // n-cycle
Group sl2_3();                                     // SL_2(3) as matrices over F_3
Group q8_matrix_group();                           // Q8 <= GL_2(3)

// C_{2^n} wr C_2 as permutations on 2 * 2^n points; returns the group
// together with the distinguished generators a (block cycle) and y (swap).
struct WreathPerm {
    Group group;
    Element a, y;
};
WreathPerm c2n_wr_c2(uint32_t n);

// --- fixtures --------------------------------------------------------------

// One JSON object per line:
// {"label":"...","degree":d,"p":p,"expected_nonlinear":e,"generators":[[...1-based...],...]}
struct FixtureEntry {
    std::string label;
    uint32_t degree;
    uint64_t p;
    uint64_t expected_nonlinear;
    std::vector<std::vector<uint32_t>> generators;  // 1-based image lists
};

std::vector<FixtureEntry> parse_fixture_file(const std::string& path);
Group fixture_group(const FixtureEntry& e);

// Serializes a permutation group (generators only) as one fixture line.
std::string fixture_line(const Group& perm_group, const std::string& label, uint64_t p,
                         uint64_t expected_nonlinear);

}  // namespace families
}  // namespace brc
