#pragma once

#include <cstdint>
#include <set>
#include <string>

#include "action.hpp"
#include "group.hpp"

namespace brc {

// Counts of irreducible p-Brauer characters. Characters are never
// materialized: the total is the number of p-regular conjugacy classes,
// the linear count is the p'-part of |G/G'|, and the nonlinear count is
// their difference.
struct IbrSummary {
    std::string label;
    uint64_t p = 0;
    uint64_t p_regular_classes = 0;
    uint64_t linear_count = 0;
    uint64_t nonlinear_count = 0;
    enum class Method { Direct, Clifford } method = Method::Direct;

    std::string method_name() const { return method == Method::Direct ? "direct" : "clifford"; }
};

uint64_t p_regular_class_count(const Group& G, uint64_t p);
uint64_t linear_ibr_count(const Group& G, uint64_t p);
IbrSummary nonlinear_ibr_count(const Group& G, uint64_t p, std::string label = "");

// Clifford-theory count for G = V rtimes H with V an elementary abelian
// p'-group: the total is the sum, over H-orbit representatives lambda of
// the dual space (including the trivial one), of the p-regular class
// count of the stabilizer I_H(lambda); the linear count is the p'-part
// of |V/[V,H]| * |H/H'|. Avoids building V rtimes H.
IbrSummary clifford_affine_count(const ModuleAction& action, uint64_t p, std::string label = "");

// Orders of p-regular elements, from class data.
std::set<uint64_t> p_regular_order_spectrum(const Group& G, uint64_t p);

}  // namespace brc
