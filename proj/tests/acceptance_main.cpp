#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <functional>
#include <set>
#include <sstream>
#include <string>
#include <sys/wait.h>
#include <vector>

#include "colie/verify.hpp"

// Release gate. Each criterion prints exactly one PASS/FAIL line; the binary
// exits nonzero if any criterion fails. Criteria with a stated wall-clock
// budget fail when they exceed it, even if every property held.

using namespace colie;

namespace {

RunConfig make_cfg(const FieldSpec& f, std::size_t dim, std::uint64_t seed, std::size_t trials,
                   std::size_t max_len, bool oracle = false) {
    RunConfig cfg;
    cfg.field = f;
    cfg.dim = dim;
    cfg.seed = seed;
    cfg.trials = trials;
    cfg.max_len = max_len;
    cfg.oracle = oracle;
    return cfg;
}

bool run_all(const std::string& suite, const std::vector<RunConfig>& cfgs, std::string& detail) {
    const Suite* s = find_suite(suite);
    if (!s) {
        detail = "no suite named " + suite;
        return false;
    }
    for (const RunConfig& cfg : cfgs) {
        SuiteReport rep = run_suite(*s, cfg);
        if (!rep.pass()) {
            const TrialFailure& f = rep.failures.front();
            detail = suite + " " + cfg.field.str() + " dim " + std::to_string(cfg.dim) +
                     ": trial " + std::to_string(f.trial) + " (seed " + std::to_string(f.seed) +
                     "): " + f.message;
            return false;
        }
    }
    return true;
}

std::vector<FieldSpec> four_fields() {
    return {FieldSpec::rationals(), FieldSpec::prime_field(2), FieldSpec::prime_field(3),
            FieldSpec::prime_field(5)};
}

// --------------------------------------------------------------- criteria

bool c1_jacobi(std::string& detail) {
    std::vector<RunConfig> cfgs;
    std::uint64_t seed = 101;
    for (const FieldSpec& f : four_fields())
        for (std::size_t dim : {2, 4}) cfgs.push_back(make_cfg(f, dim, seed++, 200, 6));
    return run_all("jacobi", cfgs, detail);
}

bool c2_alternating_grading(std::string& detail) {
    std::vector<RunConfig> cfgs;
    std::uint64_t seed = 201;
    for (const FieldSpec& f : four_fields())
        for (std::size_t dim : {2, 4}) cfgs.push_back(make_cfg(f, dim, seed++, 200, 6));
    return run_all("alternating", cfgs, detail) && run_all("grading", cfgs, detail);
}

bool c3_derivation(std::string& detail) {
    std::vector<RunConfig> cfgs;
    std::uint64_t seed = 301;
    for (const FieldSpec& f : four_fields()) cfgs.push_back(make_cfg(f, 2, seed++, 200, 6));
    return run_all("derivation", cfgs, detail);
}

bool c4_well_defined(std::string& detail) {
    return run_all("well-defined", {make_cfg(FieldSpec::prime_field(3), 2, 401, 1, 5)}, detail);
}

bool c5_tangency(std::string& detail) {
    std::vector<RunConfig> cfgs;
    std::uint64_t seed = 501;
    for (const FieldSpec& f :
         {FieldSpec::rationals(), FieldSpec::prime_field(2), FieldSpec::prime_field(5)})
        cfgs.push_back(make_cfg(f, 2, seed++, 100, 6));
    return run_all("tangency", cfgs, detail);
}

bool c6_vf_hom(std::string& detail) {
    std::vector<RunConfig> cfgs;
    std::uint64_t seed = 601;
    for (const FieldSpec& f :
         {FieldSpec::rationals(), FieldSpec::prime_field(2), FieldSpec::prime_field(5)})
        cfgs.push_back(make_cfg(f, 2, seed++, 100, 6));
    return run_all("vf-hom", cfgs, detail);
}

bool c7_involution(std::string& detail) {
    std::vector<RunConfig> cfgs;
    std::uint64_t seed = 701;
    for (const FieldSpec& f :
         {FieldSpec::rationals(), FieldSpec::prime_field(2), FieldSpec::prime_field(5)})
        cfgs.push_back(make_cfg(f, 2, seed++, 100, 6));
    return run_all("iota-hom", cfgs, detail);
}

bool c8_lemma(std::string& detail) {
    std::vector<RunConfig> cfgs;
    std::uint64_t seed = 801;
    for (const FieldSpec& f :
         {FieldSpec::rationals(), FieldSpec::prime_field(3), FieldSpec::prime_field(5)})
        for (std::size_t dim : {1, 2, 3}) cfgs.push_back(make_cfg(f, dim, seed++, 1, 5));
    return run_all("lemma", cfgs, detail);
}

bool c9_so_sp(std::string& detail) {
    // the suites rotate through so3, so4, sp2, sp4 by trial index, so 80
    // trials give each algebra 20 distinct seeds
    std::vector<RunConfig> cfgs;
    std::uint64_t seed = 901;
    for (const FieldSpec& f : {FieldSpec::rationals(), FieldSpec::prime_field(7)})
        cfgs.push_back(make_cfg(f, 2, seed++, 80, 5));
    return run_all("so-sp-closure", cfgs, detail) && run_all("proposition", cfgs, detail);
}

std::set<std::string> split_csv(const std::string& s) {
    std::set<std::string> out;
    std::stringstream ss(s);
    std::string item;
    while (std::getline(ss, item, ',')) out.insert(item);
    return out;
}

bool c10_sp_iso(std::string& detail) {
    const Suite* s = find_suite("sp-iso");
    SuiteReport rep2 = run_suite(*s, make_cfg(FieldSpec::rationals(), 2, 1001, 1, 2));
    SuiteReport rep4 = run_suite(*s, make_cfg(FieldSpec::rationals(), 4, 1002, 1, 2));
    if (!rep2.pass() || !rep4.pass()) {
        detail = "sp-iso failed: " +
                 (rep2.pass() ? rep4.failures.front().message : rep2.failures.front().message);
        return false;
    }
    if (!rep2.notes.count("s") || !rep4.notes.count("s")) {
        detail = "report lacks the determined scale";
        return false;
    }
    std::set<std::string> s2 = split_csv(rep2.notes.at("s"));
    std::set<std::string> s4 = split_csv(rep4.notes.at("s"));
    std::set<std::string> both;
    for (const std::string& v : s2)
        if (s4.count(v)) both.insert(v);
    if (both.empty()) {
        detail = "no single scale works at both dim 2 (" + rep2.notes.at("s") + ") and dim 4 (" +
                 rep4.notes.at("s") + ")";
        return false;
    }
    detail = "s = " + *both.begin();
    return true;
}

bool c11_dims(std::string& detail) {
    if (graded_dimension(2, 2) != 3 || graded_dimension(2, 3) != 4 || graded_dimension(2, 4) != 6) {
        detail = "dim-2 necklace counts are not 3, 4, 6";
        return false;
    }
    std::vector<RunConfig> cfgs;
    std::uint64_t seed = 1101;
    for (const FieldSpec& f : {FieldSpec::rationals(), FieldSpec::prime_field(2)})
        for (std::size_t dim : {1, 2, 3}) cfgs.push_back(make_cfg(f, dim, seed++, 1, 7, true));
    return run_all("dims", cfgs, detail);
}

int cli_exit(const std::string& args, std::string& output) {
    std::string out_path = "acceptance_cli_out.txt";
    std::string cmd = std::string(COLIE_CLI_PATH) + " " + args + " >" + out_path + " 2>&1";
    int status = std::system(cmd.c_str());
    std::ifstream in(out_path, std::ios::binary);
    std::ostringstream ss;
    ss << in.rdbuf();
    output = ss.str();
    std::remove(out_path.c_str());
    return WIFEXITED(status) ? WEXITSTATUS(status) : -1;
}

bool c12_mutations(std::string& detail) {
    std::string out;
    int rc = cli_exit("verify jacobi --trials 50 --seed 12 --mutate bracket-sign-flip", out);
    if (rc != 1) {
        detail = "bracket-sign-flip: expected exit 1 from jacobi, got " + std::to_string(rc);
        return false;
    }
    if (out.find("trial") == std::string::npos || out.find("seed") == std::string::npos) {
        detail = "bracket-sign-flip: report carries no reproducible counterexample";
        return false;
    }
    rc = cli_exit("verify vf-hom --trials 50 --seed 12 --mutate dij-literal-zero", out);
    if (rc != 1) {
        detail = "dij-literal-zero: expected exit 1 from vf-hom, got " + std::to_string(rc);
        return false;
    }
    return true;
}

struct Criterion {
    int id;
    const char* label;
    double budget_s; // 0 = no stated budget
    std::function<bool(std::string&)> run;
};

} // namespace

int main() {
    std::vector<Criterion> criteria{
        {1, "Jacobi identity, 200 triples per field/dim, lengths 2-6", 60, c1_jacobi},
        {2, "alternating bracket and additive grading, same sampling", 10, c2_alternating_grading},
        {3, "cyclic derivatives satisfy Leibniz, 200 trials per field", 30, c3_derivation},
        {4, "representative independence, exhaustive l,m <= 5 over F3", 30, c4_well_defined},
        {5, "fields tangent to commutator fibers, 100 triples per field", 60, c5_tangency},
        {6, "class bracket matches vector-field bracket, 100 pairs per field", 120, c6_vf_hom},
        {7, "signed reversal: bracket involution and eigenspace rules", 0, c7_involution},
        {8, "first-letter tails flip eigenspace, exhaustive l <= 5, dim <= 3", 0, c8_lemma},
        {9, "so/sp closure and restriction, 20 seeds per algebra, Q and F7", 0, c9_so_sp},
        {10, "one scale identifies degree 0 with sp, dim 2 and dim 4", 0, c10_sp_iso},
        {11, "necklace counts equal quotient ranks, l <= 7, dim <= 3, Q and F2", 0, c11_dims},
        {12, "mutated builds are falsified with reproducible counterexamples", 0, c12_mutations},
    };

    int failed = 0;
    for (const Criterion& c : criteria) {
        std::string detail;
        auto t0 = std::chrono::steady_clock::now();
        bool ok = false;
        try {
            ok = c.run(detail);
        } catch (const std::exception& e) {
            detail = std::string("exception: ") + e.what();
        }
        auto t1 = std::chrono::steady_clock::now();
        double secs = std::chrono::duration<double>(t1 - t0).count();
        if (ok && c.budget_s > 0 && secs > c.budget_s) {
            ok = false;
            detail = "over budget: " + std::to_string(secs) + "s > " +
                     std::to_string(c.budget_s) + "s";
        }
        if (!ok) ++failed;
        std::printf("criterion %2d: %s  %6.1fs  %s%s%s\n", c.id, ok ? "PASS" : "FAIL", secs,
                    c.label, detail.empty() ? "" : " -- ", detail.c_str());
        std::fflush(stdout);
    }
    if (failed) std::printf("acceptance: %d of 12 criteria failed\n", failed);
    else std::printf("acceptance: all 12 criteria passed\n");
    return failed == 0 ? 0 : 1;
}
