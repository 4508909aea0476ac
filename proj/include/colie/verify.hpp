#pragma once

#include <functional>
#include <string>
#include <vector>

#include "colie/fields2d.hpp"
#include "colie/rng.hpp"
#include "colie/serialize.hpp"

namespace colie {

enum class OutputKind : std::uint8_t { Text, Json };

/// Shared run parameters for the verification suites.
struct RunConfig {
    FieldSpec field = FieldSpec::rationals();
    std::size_t dim = 2;
    std::optional<SquareMat<Scalar>> gram; // default: standard block form
    std::uint64_t seed = 1;
    std::size_t trials = 100;
    std::size_t max_len = 6;
    OutputKind output = OutputKind::Text;
    bool oracle = false;
    Mutations mutations;
    std::string mutate_name = "none";
    bool parallel = true; // engine choice; never affects report bytes

    SpacePtr make_space() const;
};

struct TrialFailure {
    std::size_t trial;
    std::uint64_t seed;
    std::string message;
};

/// Deterministic run summary: identical config and seed give identical
/// reports regardless of the engine (serial or parallel). Wall-clock time
/// is intentionally not part of the report.
struct SuiteReport {
    std::string suite;
    std::string field;
    std::size_t dim = 0;
    std::string gram;
    std::uint64_t seed = 0;
    std::size_t trials = 0;
    std::size_t max_len = 0;
    std::string mutate;
    bool oracle = false;
    std::vector<TrialFailure> failures;
    std::map<std::string, std::string> notes;

    bool pass() const { return failures.empty(); }
    Json to_json() const;
    std::string to_text() const;
};

/// One trial's working state. `rng` is the trial's private stream;
/// `trial_seed` reproduces it.
struct TrialContext {
    const RunConfig& cfg;
    SpacePtr space;
    std::size_t index;
    std::uint64_t trial_seed;
    Rng rng;

    void fail(const std::string& message);
    void note(const std::string& key, const std::string& value);

    std::vector<std::string> failures;
    std::map<std::string, std::string> notes;
};

struct Suite {
    std::string name;
    std::string summary;
    bool needs_odd_char = false;
    bool needs_dim2 = false;
    bool needs_nondegenerate = false;
    std::function<std::size_t(const RunConfig&)> planned;
    std::function<void(TrialContext&)> run;
};

const std::vector<Suite>& all_suites();
const Suite* find_suite(const std::string& name);

/// Throws PreconditionError when the config violates the suite's stated
/// requirements (reported as usage errors, not falsifications).
void check_suite_config(const Suite& s, const RunConfig& cfg);

/// Runs trials, OpenMP-sharded when cfg.parallel, and merges results in
/// trial-index order.
SuiteReport run_suite(const Suite& s, const RunConfig& cfg);

/// Plain-loop reference engine; must produce byte-identical reports.
SuiteReport run_suite_serial(const Suite& s, const RunConfig& cfg);

} // namespace colie
