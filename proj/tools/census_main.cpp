#include <cstdio>
#include <iostream>
#include <map>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "census.hpp"
#include "numtheory.hpp"

using brc::census::json;

namespace {

int cmd_verify(const std::string& tier, const std::string& entry, const std::string& fixtures,
               uint32_t jobs, const std::string& format) {
    brc::census::RunOptions opts;
    if (tier == "fast") opts.tier = brc::census::Tier::Fast;
    else if (tier == "deep") opts.tier = brc::census::Tier::Deep;
    else if (!tier.empty() && tier != "all") {
        std::cerr << "unknown tier: " << tier << "\n";
        return 2;
    }
    if (!entry.empty()) opts.only.push_back(entry);
    opts.fixtures_path = fixtures;
    opts.jobs = jobs;

    brc::census::RunResult res = brc::census::run_all(opts);
    if (format == "table") {
        for (const auto& r : res.reports) {
            if (r.skipped) {
                std::printf("%-18s  skipped: %s\n", r.id.c_str(), r.skip_reason.c_str());
                continue;
            }
            std::printf("%-18s  p=%-3llu order=%-9llu nonlinear=%llu/%llu  %-8s  %s  (%lld ms)\n",
                        r.id.c_str(), (unsigned long long)r.p, (unsigned long long)r.group_order,
                        (unsigned long long)r.nonlinear, (unsigned long long)r.expected,
                        r.method.c_str(), r.pass ? "pass" : "FAIL", (long long)r.elapsed_ms);
            if (!r.pass && !r.skip_reason.empty())
                std::printf("%-18s  %s\n", "", r.skip_reason.c_str());
        }
    } else {
        for (const auto& r : res.reports) std::cout << r.to_json().dump() << "\n";
    }
    return res.exit_ok ? 0 : 1;
}

int cmd_count(const std::string& family, const std::map<std::string, std::string>& params,
              uint64_t p) {
    using namespace brc;
    auto param = [&](const std::string& key, uint64_t dflt = 0, bool required = false) {
        auto it = params.find(key);
        if (it == params.end()) {
            if (required) throw std::runtime_error("missing --param " + key + "=...");
            return dflt;
        }
        return uint64_t(std::stoull(it->second));
    };
    auto sparam = [&](const std::string& key, const std::string& dflt) {
        auto it = params.find(key);
        return it == params.end() ? dflt : it->second;
    };

    IbrSummary s;
    if (family == "gamma") {
        uint64_t q = param("q", 0, true);
        uint32_t n = uint32_t(param("n", 1));
        std::string variant = sparam("variant", "full");
        if (variant == "affine") {
            s = nonlinear_ibr_count(families::affine_gamma_group(q, n), p);
        } else {
            ModuleAction A = families::gamma_action(q, n, variant == "full");
            s = census::evaluate_affine_action(A, p).summary;
        }
    } else if (family == "wreath") {
        uint64_t q = param("q", 0, true);
        auto v = sparam("variant", "full") == "full" ? families::WreathVariant::Full
                                                     : families::WreathVariant::PhiPart;
        s = census::evaluate_affine_action(families::wreath_family(q, v), p).summary;
    } else if (family == "dic_cyc") {
        uint64_t qk = param("qk", 0, true);
        uint64_t pp = param("p", 0, true);
        uint32_t ss = uint32_t(param("s", 1));
        ModuleAction A = families::dic_cyc_family(qk, pp, ss);
        s = census::evaluate_affine_action(A, p, qk > 100).summary;
    } else if (family == "psu32") {
        s = census::evaluate_affine_action(families::psu3_2(), p).summary;
    } else if (family == "heis") {
        uint64_t q = param("q", 0, true);
        std::string shape = sparam("shape", "full_gamma");
        families::HeisShape hs = shape == "full_gamma" ? families::HeisShape::FullGamma
                                 : shape == "cyclic_max" ? families::HeisShape::CyclicMax
                                                          : families::HeisShape::QuatMax;
        s = nonlinear_ibr_count(families::heisenberg_extension(q, hs), p);
    } else if (family == "suzukiB") {
        uint32_t m = uint32_t(param("m", 0, true));
        uint32_t theta = uint32_t(param("theta", 1));
        s = nonlinear_ibr_count(families::suzuki_B(m, theta), p);
    } else if (family == "pq") {
        s = nonlinear_ibr_count(families::pq_sylow_su3(param("q", 0, true)), p);
    } else if (family == "borel") {
        s = nonlinear_ibr_count(families::borel_su3(param("q", 0, true)), p);
    } else if (family == "sl23") {
        s = nonlinear_ibr_count(families::sl2_3(), p);
    } else if (family == "nonsolvable") {
        s = nonlinear_ibr_count(families::nonsolvable(sparam("name", "A5")), p);
    } else {
        throw std::runtime_error("unknown family: " + family);
    }

    json j;
    j["label"] = s.label;
    j["p"] = s.p;
    j["classes"] = s.p_regular_classes;
    j["linear"] = s.linear_count;
    j["nonlinear"] = s.nonlinear_count;
    j["method"] = s.method_name();
    std::cout << j.dump() << "\n";
    return 0;
}

int cmd_scan(uint64_t q, uint32_t n, uint64_t p) {
    auto hits = brc::census::scan_gamma_subgroups(q, n, p);
    json j;
    j["q"] = q;
    j["n"] = n;
    j["p"] = p;
    json list = json::array();
    for (const auto& h : hits) {
        json x;
        x["order"] = h.subgroup_order;
        x["shape"] = h.shape;
        x["nonlinear"] = h.nonlinear;
        list.push_back(x);
    }
    j["hits"] = list;
    std::cout << j.dump() << "\n";
    return 0;
}

int cmd_numtheory(const std::string& check, uint64_t bound) {
    using namespace brc::nt;
    bool ok = true;
    json j;
    j["check"] = check;
    j["bound"] = bound;
    if (check == "zsigmondy") {
        json exceptions = json::array();
        bool clean = true;
        for (uint64_t q = 2; q <= bound; ++q) {
            if (!is_prime(q)) continue;
            uint64_t qn = q;
            for (uint32_t n = 1; qn <= bound; ++n, qn *= q) {
                if (qn == 2) continue;  // q^n - 1 = 1 carries no primes
                PpdReport rep = primitive_prime_divisors(q, n);
                if (rep.exceptional) {
                    json e;
                    e["q"] = q;
                    e["n"] = n;
                    e["reason"] = rep.reason;
                    exceptions.push_back(e);
                    bool known = (rep.reason == "n=2, q Mersenne") || (rep.reason == "q^n = 2^6");
                    if (!known) clean = false;
                }
                if (qn > bound / q) break;
            }
        }
        j["exceptions"] = exceptions;
        j["all_match_lemma"] = clean;
        ok = clean;
    } else if (check == "catalan") {
        json sols = json::array();
        for (const auto& s : catalan_cases(bound)) {
            json x;
            x["p"] = s.p;
            x["a"] = s.a;
            x["q"] = s.q;
            x["b"] = s.b;
            x["case"] = s.tagged_case;
            sols.push_back(x);
        }
        j["solutions"] = sols;
        j["all_tagged"] = true;  // catalan_cases throws otherwise
    } else if (check == "triples") {
        json sols = json::array();
        uint64_t deep = 0;
        for (const auto& t : special_triples(bound)) {
            json x;
            x["q_k"] = t.three_k;
            x["p"] = t.p;
            x["s"] = t.s;
            sols.push_back(x);
            if (t.s >= 2) ++deep;
        }
        j["solutions"] = sols;
        j["s_ge_2_count"] = deep;  // special_triples throws on any stray s >= 2 solution
    } else {
        std::cerr << "unknown check: " << check << "\n";
        return 2;
    }
    std::cout << j.dump() << "\n";
    return ok ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"finite-group census for groups with two nonlinear p-Brauer characters"};
    app.require_subcommand(1);

    auto* verify = app.add_subcommand("verify", "run census entries and report pass/fail");
    std::string tier = "all", entry, fixtures, format = "json";
    uint32_t jobs = 1;
    verify->add_option("--tier", tier, "fast|deep|all");
    verify->add_option("--entry", entry, "run a single entry by id");
    verify->add_option("--fixtures", fixtures, "path to a fixture .jsonl file");
    verify->add_option("--jobs", jobs, "worker count");
    verify->add_option("--format", format, "json|table");

    auto* count = app.add_subcommand("count", "count nonlinear p-Brauer characters of a family");
    std::string family;
    std::vector<std::string> params;
    uint64_t p = 2;
    count->add_option("--family", family)->required();
    count->add_option("--param", params, "key=value, repeatable");
    count->add_option("--p", p, "the prime p")->required();

    auto* scan = app.add_subcommand("scan", "scan subgroups of Gamma(q^n)");
    uint64_t sq = 3, sp = 2;
    uint32_t sn = 2;
    scan->add_option("--q", sq)->required();
    scan->add_option("--n", sn)->required();
    scan->add_option("--p", sp)->required();

    auto* ntc = app.add_subcommand("numtheory", "arithmetic side-condition checks");
    std::string check;
    uint64_t bound = 1000000;
    ntc->add_option("--check", check, "zsigmondy|catalan|triples")->required();
    ntc->add_option("--bound", bound);

    CLI11_PARSE(app, argc, argv);

    try {
        if (verify->parsed()) return cmd_verify(tier, entry, fixtures, jobs, format);
        if (count->parsed()) {
            std::map<std::string, std::string> kv;
            for (const std::string& s : params) {
                auto eq = s.find('=');
                if (eq == std::string::npos) throw std::runtime_error("--param needs key=value");
                kv[s.substr(0, eq)] = s.substr(eq + 1);
            }
            return cmd_count(family, kv, p);
        }
        if (scan->parsed()) return cmd_scan(sq, sn, sp);
        if (ntc->parsed()) return cmd_numtheory(check, bound);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 2;
}
