#pragma once

#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "brauer.hpp"
#include "families.hpp"

namespace brc {
namespace census {

using json = nlohmann::ordered_json;

enum class Tier { Fast, Deep };

// Everything run_entry needs from a constructed group or action.
struct Evaluation {
    uint64_t group_order = 0;
    bool o_p_trivial = false;
    IbrSummary summary;
    std::vector<std::pair<std::string, bool>> predicates;
    std::string method_reason;  // set when the Clifford path is taken
};

struct CensusEntry {
    std::string id;
    std::string description;
    uint64_t p = 0;
    uint64_t expected_nonlinear = 0;
    Tier tier = Tier::Fast;
    // "classification" when the expected count is the classification's
    // claim, "computed" when it was derived with the engine and frozen.
    std::string source = "classification";
    // Negative controls whose group legitimately has O_p != 1 clear this;
    // the report still records o_p_trivial.
    bool require_o_p_trivial = true;
    std::string fixture_label;  // nonempty: group comes from fixture data
    std::function<Evaluation(uint64_t p)> evaluate;  // unset for fixture entries
};

struct VerificationReport {
    std::string id;
    uint64_t p = 0;
    uint64_t group_order = 0;
    bool o_p_trivial = false;
    uint64_t nonlinear = 0;
    uint64_t expected = 0;
    std::string method;
    std::string method_reason;
    std::vector<std::pair<std::string, bool>> predicates;
    bool skipped = false;
    std::string skip_reason;
    bool pass = false;
    int64_t elapsed_ms = 0;

    json to_json(bool with_timing = true) const;
};

// The census table; deterministic order by id.
const std::vector<CensusEntry>& entries();

using FixtureMap = std::map<std::string, families::FixtureEntry>;
FixtureMap load_fixtures(const std::string& path);

VerificationReport run_entry(const CensusEntry& e, const FixtureMap& fixtures);

struct RunOptions {
    std::optional<Tier> tier;        // unset: all tiers
    std::vector<std::string> only;   // restrict to these ids if nonempty
    std::string fixtures_path;
    uint32_t jobs = 1;
};

// Runs the selected entries, reports in id order; exit_ok is false iff
// any selected entry fails.
struct RunResult {
    std::vector<VerificationReport> reports;
    bool exit_ok = true;
};

RunResult run_all(const RunOptions& opts);

// Converse scan: all subgroups of Gamma(q^n) up to conjugacy whose
// affine group has O_p = 1, with the nonlinear count; hits are those
// with count exactly 2.
struct ScanHit {
    uint64_t subgroup_order = 0;
    std::string shape;      // C4, D8, SD16, Q8, order%d
    uint64_t nonlinear = 0;
};

std::vector<ScanHit> scan_gamma_subgroups(uint64_t q, uint32_t n, uint64_t p);

// Evaluation helpers shared with the acceptance suite.
Evaluation evaluate_group_direct(const Group& G, uint64_t p);
Evaluation evaluate_affine_action(const ModuleAction& A, uint64_t p, bool force_clifford = false);

}  // namespace census
}  // namespace brc
