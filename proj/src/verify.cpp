#include "colie/verify.hpp"

#include "colie/parse.hpp"

namespace colie {

SpacePtr RunConfig::make_space() const {
    if (!gram) return SymplecticSpace::standard(dim, field);
    if (gram->size() != dim) throw PreconditionError("Gram matrix size must match --dim");
    std::vector<std::string> names;
    if (dim == 2) {
        names = {"x", "y"};
    } else {
        for (std::size_t i = 1; i <= dim; ++i) names.push_back("x" + std::to_string(i));
    }
    std::vector<Scalar> entries;
    entries.reserve(dim * dim);
    for (std::size_t i = 0; i < dim; ++i)
        for (std::size_t j = 0; j < dim; ++j) entries.push_back(gram->at(i, j));
    return std::make_shared<const SymplecticSpace>(field, std::move(names), std::move(entries));
}

void TrialContext::fail(const std::string& message) { failures.push_back(message); }

void TrialContext::note(const std::string& key, const std::string& value) {
    notes.insert_or_assign(key, value);
}

Json SuiteReport::to_json() const {
    Json fails = Json::array();
    for (const auto& f : failures)
        fails.push_back({{"message", f.message}, {"seed", f.seed}, {"trial", f.trial}});
    return Json{{"config",
                 {{"dim", dim},
                  {"field", field},
                  {"gram", gram},
                  {"max_len", max_len},
                  {"mutate", mutate},
                  {"oracle", oracle},
                  {"seed", seed},
                  {"trials", trials}}},
                {"failures", fails},
                {"notes", notes},
                {"pass", pass()},
                {"schema", 1},
                {"suite", suite}};
}

std::string SuiteReport::to_text() const {
    std::string out;
    out += "suite: " + suite + "\n";
    out += "field: " + field + "\n";
    out += "dim: " + std::to_string(dim) + "\n";
    out += "gram: " + gram + "\n";
    out += "seed: " + std::to_string(seed) + "\n";
    out += "trials: " + std::to_string(trials) + "\n";
    out += "max-len: " + std::to_string(max_len) + "\n";
    out += "mutate: " + mutate + "\n";
    out += std::string("oracle: ") + (oracle ? "on" : "off") + "\n";
    for (const auto& [k, v] : notes) out += "note " + k + ": " + v + "\n";
    out += "failures: " + std::to_string(failures.size()) + "\n";
    for (const auto& f : failures)
        out += "  trial " + std::to_string(f.trial) + " (seed " + std::to_string(f.seed) +
               "): " + f.message + "\n";
    out += std::string("result: ") + (pass() ? "PASS" : "FAIL") + "\n";
    return out;
}

void check_suite_config(const Suite& s, const RunConfig& cfg) {
    if (s.needs_odd_char && cfg.field.characteristic() == 2)
        throw PreconditionError("suite '" + s.name + "' needs characteristic != 2");
    SpacePtr space = cfg.make_space();
    if (s.needs_dim2 && (space->dim() != 2 || !space->form(0, 1).is_one()))
        throw PreconditionError("suite '" + s.name + "' needs dim 2 with <x, y> = 1");
    if (s.needs_nondegenerate && !space->form_nondegenerate())
        throw PreconditionError("suite '" + s.name + "' needs a nondegenerate form");
}

namespace {

SuiteReport engine(const Suite& s, const RunConfig& cfg, bool parallel) {
    check_suite_config(s, cfg);
    SpacePtr space = cfg.make_space();

    const std::size_t n = s.planned(cfg);
    std::vector<std::vector<std::string>> failures(n);
    std::vector<std::map<std::string, std::string>> notes(n);
    std::vector<std::uint64_t> seeds(n);

    auto run_one = [&](std::size_t i) {
        std::uint64_t ts = Rng::trial_seed(cfg.seed, i);
        seeds[i] = ts;
        TrialContext ctx{cfg, space, i, ts, Rng(ts)};
        try {
            s.run(ctx);
        } catch (const std::exception& e) {
            ctx.fail(std::string("exception: ") + e.what());
        }
        failures[i] = std::move(ctx.failures);
        notes[i] = std::move(ctx.notes);
    };

    if (parallel) {
#pragma omp parallel for schedule(dynamic)
        for (long long i = 0; i < static_cast<long long>(n); ++i)
            run_one(static_cast<std::size_t>(i));
    } else {
        for (std::size_t i = 0; i < n; ++i) run_one(i);
    }

    SuiteReport report;
    report.suite = s.name;
    report.field = cfg.field.str();
    report.dim = space->dim();
    report.gram = matrix_str([&] {
        SquareMat<Scalar> g = scalar_mat_zero(space->dim(), cfg.field);
        for (std::size_t i = 0; i < space->dim(); ++i)
            for (std::size_t j = 0; j < space->dim(); ++j)
                g.at(i, j) = space->form(static_cast<Letter>(i), static_cast<Letter>(j));
        return g;
    }());
    report.seed = cfg.seed;
    report.trials = n;
    report.max_len = cfg.max_len;
    report.mutate = cfg.mutate_name;
    report.oracle = cfg.oracle;
    for (std::size_t i = 0; i < n; ++i) {
        for (const auto& msg : failures[i])
            report.failures.push_back(TrialFailure{i, seeds[i], msg});
        for (const auto& [k, v] : notes[i]) report.notes.insert_or_assign(k, v);
    }
    return report;
}

} // namespace

SuiteReport run_suite(const Suite& s, const RunConfig& cfg) {
    return engine(s, cfg, cfg.parallel);
}

SuiteReport run_suite_serial(const Suite& s, const RunConfig& cfg) {
    return engine(s, cfg, false);
}

const Suite* find_suite(const std::string& name) {
    for (const auto& s : all_suites())
        if (s.name == name) return &s;
    return nullptr;
}

} // namespace colie
