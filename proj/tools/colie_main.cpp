#include <chrono>
#include <iostream>
#include <string>

#include "CLI11.hpp"

#include "colie/errors.hpp"
#include "colie/fields2d.hpp"
#include "colie/parse.hpp"
#include "colie/serialize.hpp"
#include "colie/verify.hpp"

namespace {

struct Options {
    std::string field = "q";
    std::uint64_t prime = 0;
    std::size_t dim = 2;
    std::string gram;
    std::uint64_t seed = 0;
    std::size_t trials = 100;
    std::size_t max_len = 6;
    std::string output = "text";
    bool oracle = false;
    std::string mutate = "none";
};

void add_common(CLI::App* cmd, Options& o) {
    cmd->add_option("--field", o.field, "Scalar field: q (rationals) or fp (prime field)")
        ->check(CLI::IsMember({"q", "fp"}))
        ->capture_default_str();
    cmd->add_option("--prime", o.prime, "Characteristic for --field fp");
    cmd->add_option("--dim", o.dim, "Dimension of the underlying space")
        ->check(CLI::PositiveNumber)
        ->capture_default_str();
    cmd->add_option("--gram", o.gram,
                    "Explicit alternating Gram matrix, rows ';'-separated, entries ','-separated");
    cmd->add_option("--seed", o.seed, "Master seed")->capture_default_str();
    cmd->add_option("--trials", o.trials, "Trial count for randomized suites")
        ->capture_default_str();
    cmd->add_option("--max-len", o.max_len, "Word length cap")->capture_default_str();
    cmd->add_option("--output", o.output, "Report format")
        ->check(CLI::IsMember({"text", "json"}))
        ->capture_default_str();
    cmd->add_flag("--oracle", o.oracle, "Cross-check against the independent second route");
    cmd->add_option("--mutate", o.mutate, "Inject a known-broken variant (self-test)")
        ->group("");
}

colie::RunConfig make_config(const Options& o) {
    colie::RunConfig cfg;
    if (o.field == "fp") {
        if (o.prime == 0)
            throw colie::PreconditionError("--field fp requires --prime");
        cfg.field = colie::FieldSpec::prime_field(o.prime);
    } else {
        if (o.prime != 0) throw colie::PreconditionError("--prime is only valid with --field fp");
        cfg.field = colie::FieldSpec::rationals();
    }
    cfg.dim = o.dim;
    if (!o.gram.empty()) cfg.gram = colie::parse_matrix(o.gram, cfg.field);
    cfg.seed = o.seed;
    cfg.trials = o.trials;
    cfg.max_len = o.max_len;
    cfg.output = o.output == "json" ? colie::OutputKind::Json : colie::OutputKind::Text;
    cfg.oracle = o.oracle;
    cfg.mutate_name = o.mutate;
    if (o.mutate == "none") {
    } else if (o.mutate == "bracket-sign-flip") {
        cfg.mutations.bracket_sign_flip = true;
    } else if (o.mutate == "dij-literal-zero") {
        cfg.mutations.segment_mode = colie::SegmentMode::LiteralZero;
    } else {
        throw colie::PreconditionError("unknown mutation: " + o.mutate);
    }
    return cfg;
}

void print_element(const colie::CoinvElem& a, const colie::RunConfig& cfg) {
    if (cfg.output == colie::OutputKind::Json) {
        std::cout << colie::dump_json(colie::element_json(a));
        if (a.has_extended_terms())
            std::cerr << "note: element has terms of length < 2, outside the graded range\n";
    } else {
        std::cout << colie::element_str(a) << "\n";
        if (a.has_extended_terms())
            std::cout << "note: element has terms of length < 2, outside the graded range\n";
    }
}

int cmd_bracket(const Options& o, const std::string& lhs, const std::string& rhs) {
    colie::RunConfig cfg = make_config(o);
    colie::SpacePtr space = cfg.make_space();
    colie::CoinvElem a = colie::parse_element(lhs, space);
    colie::CoinvElem b = colie::parse_element(rhs, space);
    print_element(colie::bracket(a, b, cfg.mutations), cfg);
    return 0;
}

int cmd_eval(const Options& o, const std::string& op, const std::string& letter,
             const std::string& elem) {
    colie::RunConfig cfg = make_config(o);
    colie::SpacePtr space = cfg.make_space();
    if (op == "dx") {
        if (elem.empty()) throw colie::PreconditionError("eval dx needs a letter and an element");
        colie::Word lw = colie::parse_word(letter, space);
        if (lw.length() != 1)
            throw colie::PreconditionError("eval dx: first argument must be a single letter");
        colie::CoinvElem a = colie::parse_element(elem, space);
        print_element(colie::derivation(lw.letter_at(1), a), cfg);
        return 0;
    }
    // trace and pq take one positional; it arrives in `letter`.
    if (!elem.empty()) throw colie::PreconditionError("eval " + op + " takes a single element");
    colie::CoinvElem a = colie::parse_element(letter, space);
    if (op == "trace") {
        colie::TensorElem t = colie::trace_N(a);
        if (cfg.output == colie::OutputKind::Json)
            std::cout << colie::dump_json(colie::tensor_json(t));
        else
            std::cout << colie::tensor_str(t) << "\n";
        return 0;
    }
    if (op == "pq") {
        colie::PQPair pq = colie::pq_decompose(a);
        if (cfg.output == colie::OutputKind::Json) {
            std::cout << colie::dump_json(colie::pq_json(pq));
        } else {
            std::cout << "p = " << colie::tensor_str(pq.p) << "\n";
            std::cout << "q = " << colie::tensor_str(pq.q) << "\n";
        }
        return 0;
    }
    throw colie::PreconditionError("unknown eval operation: " + op);
}

int cmd_dims(const Options& o) {
    colie::RunConfig cfg = make_config(o);
    if (cfg.max_len < 2) throw colie::PreconditionError("dims requires --max-len >= 2");
    bool mismatch = false;
    nlohmann::json rows = nlohmann::json::array();
    for (std::size_t l = 2; l <= cfg.max_len; ++l) {
        std::uint64_t count = colie::graded_dimension(cfg.dim, l);
        nlohmann::json row{{"l", l}, {"degree", l - 2}, {"count", count}};
        std::string line = "l=" + std::to_string(l) + " degree=" + std::to_string(l - 2) +
                           " count=" + std::to_string(count);
        if (cfg.oracle) {
            std::uint64_t rank = colie::coinvariant_rank_oracle(cfg.dim, l, cfg.field);
            row["rank"] = rank;
            line += " rank=" + std::to_string(rank);
            if (rank != count) mismatch = true;
        }
        rows.push_back(row);
        if (cfg.output == colie::OutputKind::Text) std::cout << line << "\n";
    }
    if (cfg.output == colie::OutputKind::Json) {
        nlohmann::json doc{{"schema", 1},
                           {"dim", cfg.dim},
                           {"field", cfg.field.str()},
                           {"rows", rows}};
        std::cout << colie::dump_json(doc);
    }
    return mismatch ? 1 : 0;
}

int cmd_verify(const Options& o, const std::string& name) {
    colie::RunConfig cfg = make_config(o);
    const colie::Suite* suite = colie::find_suite(name);
    if (!suite) throw colie::PreconditionError("unknown suite: " + name);
    colie::check_suite_config(*suite, cfg);
    auto t0 = std::chrono::steady_clock::now();
    colie::SuiteReport report = colie::run_suite(*suite, cfg);
    auto t1 = std::chrono::steady_clock::now();
    if (cfg.output == colie::OutputKind::Json)
        std::cout << colie::dump_json(report.to_json());
    else
        std::cout << report.to_text();
    auto ms = std::chrono::duration_cast<std::chrono::milliseconds>(t1 - t0).count();
    std::cerr << "runtime: " << ms << " ms\n";
    return report.pass() ? 0 : 1;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact computations in the Lie algebra of cyclic tensor classes"};
    app.require_subcommand(1);

    Options o;

    auto* bracket = app.add_subcommand("bracket", "Bracket of two elements");
    std::string lhs, rhs;
    bracket->add_option("lhs", lhs, "Left element")->required();
    bracket->add_option("rhs", rhs, "Right element")->required();
    add_common(bracket, o);

    auto* eval = app.add_subcommand("eval", "Apply dx, trace or pq to an element");
    std::string op, arg1, arg2;
    eval->add_option("op", op, "Operation: dx, trace or pq")
        ->required()
        ->check(CLI::IsMember({"dx", "trace", "pq"}));
    eval->add_option("arg1", arg1, "Letter (dx) or element")->required();
    eval->add_option("arg2", arg2, "Element (dx only)");
    add_common(eval, o);

    auto* dims = app.add_subcommand("dims", "Graded dimension table");
    add_common(dims, o);

    auto* verify = app.add_subcommand("verify", "Run a named verification suite");
    std::string suite_name;
    verify->add_option("suite", suite_name, "Suite name")->required();
    add_common(verify, o);

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    try {
        if (bracket->parsed()) return cmd_bracket(o, lhs, rhs);
        if (eval->parsed()) return cmd_eval(o, op, arg1, arg2);
        if (dims->parsed()) return cmd_dims(o);
        return cmd_verify(o, suite_name);
    } catch (const colie::ParseError& e) {
        std::cerr << "parse error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
}
