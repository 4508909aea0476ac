#include "doctest.h"

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>
#include <string>
#include <sys/wait.h>

#include "json.hpp"

// End-to-end checks against the installed binary. Output bytes are pinned:
// scripts depend on them.

namespace {

struct CliResult {
    int rc;
    std::string out;
    std::string err;
};

std::string slurp(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

CliResult run_cli(const std::string& args) {
    static int run_id = 0;
    std::string tag = std::to_string(++run_id);
    std::string out_path = "cli_out_" + tag + ".txt";
    std::string err_path = "cli_err_" + tag + ".txt";
    std::string cmd = std::string(COLIE_CLI_PATH) + " " + args + " >" + out_path + " 2>" + err_path;
    int status = std::system(cmd.c_str());
    CliResult r;
    r.rc = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    r.out = slurp(out_path);
    r.err = slurp(err_path);
    std::remove(out_path.c_str());
    std::remove(err_path.c_str());
    return r;
}

} // namespace

TEST_CASE("bracket subcommand") {
    CliResult r = run_cli("bracket xy yy");
    CHECK(r.rc == 0);
    CHECK(r.out == "2*yy\n");

    r = run_cli("bracket xy xx");
    CHECK(r.rc == 0);
    CHECK(r.out == "-2*xx\n");

    r = run_cli("bracket xx yy --output json");
    CHECK(r.rc == 0);
    CHECK(r.out == "[{\"coeff\":\"4\",\"necklace\":\"xy\"}]\n");

    r = run_cli("bracket xy yy --field fp --prime 2");
    CHECK(r.rc == 0);
    CHECK(r.out == "0\n");

    r = run_cli("bracket \"2*xy - 1/3*xxyy\" yy");
    CHECK(r.rc == 0);
    CHECK(r.out == "4*yy - 4/3*xyyy\n");
}

TEST_CASE("eval subcommand") {
    CliResult r = run_cli("eval dx x xyy");
    CHECK(r.rc == 0);
    CHECK(r.out == "yy\n");

    // results below the graded range are flagged
    r = run_cli("eval dx x xx");
    CHECK(r.rc == 0);
    CHECK(r.out == "2*x\nnote: element has terms of length < 2, outside the graded range\n");
    CHECK(r.err.empty());

    // in json mode the note moves to stderr so stdout stays machine-readable
    r = run_cli("eval dx x xx --output json");
    CHECK(r.rc == 0);
    CHECK(r.out == "[{\"coeff\":\"2\",\"necklace\":\"x\"}]\n");
    CHECK(r.err == "note: element has terms of length < 2, outside the graded range\n");

    r = run_cli("eval trace xy");
    CHECK(r.rc == 0);
    CHECK(r.out == "xy + yx\n");

    r = run_cli("eval pq xxy");
    CHECK(r.rc == 0);
    CHECK(r.out == "p = xy + yx\nq = -xx\n");

    r = run_cli("eval pq xxy --output json");
    CHECK(r.rc == 0);
    CHECK(r.out ==
          "{\"p\":[{\"coeff\":\"1\",\"word\":\"xy\"},{\"coeff\":\"1\",\"word\":\"yx\"}],"
          "\"q\":[{\"coeff\":\"-1\",\"word\":\"xx\"}]}\n");
}

TEST_CASE("dims subcommand") {
    CliResult r = run_cli("dims --max-len 4");
    CHECK(r.rc == 0);
    CHECK(r.out == "l=2 degree=0 count=3\nl=3 degree=1 count=4\nl=4 degree=2 count=6\n");

    r = run_cli("dims --max-len 3 --oracle");
    CHECK(r.rc == 0);
    CHECK(r.out == "l=2 degree=0 count=3 rank=3\nl=3 degree=1 count=4 rank=4\n");

    r = run_cli("dims --max-len 3 --output json");
    CHECK(r.rc == 0);
    CHECK(r.out ==
          "{\"dim\":2,\"field\":\"Q\",\"rows\":[{\"count\":3,\"degree\":0,\"l\":2},"
          "{\"count\":4,\"degree\":1,\"l\":3}],\"schema\":1}\n");
}

TEST_CASE("verify subcommand") {
    CliResult r = run_cli("verify jacobi --trials 5 --max-len 4 --seed 9");
    CHECK(r.rc == 0);
    CHECK(r.out.find("suite: jacobi\n") != std::string::npos);
    CHECK(r.out.find("result: PASS\n") != std::string::npos);
    CHECK(r.err.rfind("runtime:", 0) == 0); // timing goes to stderr only

    // identical invocations give identical stdout bytes
    CliResult again = run_cli("verify jacobi --trials 5 --max-len 4 --seed 9");
    CHECK(again.out == r.out);

    r = run_cli("verify derivation --trials 4 --max-len 4 --output json");
    CHECK(r.rc == 0);
    nlohmann::json doc = nlohmann::json::parse(r.out);
    CHECK(doc.at("schema") == 1);
    CHECK(doc.at("suite") == "derivation");
    CHECK(doc.at("pass") == true);
    CHECK(doc.at("failures").empty());
    CHECK(doc.at("config").at("trials") == 4);
}

TEST_CASE("verify exit codes distinguish falsification from usage") {
    CliResult r = run_cli("verify jacobi --trials 5 --mutate bracket-sign-flip");
    CHECK(r.rc == 1);
    CHECK(r.out.find("result: FAIL") != std::string::npos);
    CHECK(r.out.find("trial 0") != std::string::npos); // pinned anchor counterexample

    r = run_cli("verify vf-hom --trials 5 --max-len 5 --mutate dij-literal-zero");
    CHECK(r.rc == 1);

    r = run_cli("verify nosuch");
    CHECK(r.rc == 2);
    CHECK(r.err == "error: unknown suite: nosuch\n");

    r = run_cli("verify lemma --field fp --prime 2");
    CHECK(r.rc == 2);
    CHECK(r.err == "error: suite 'lemma' needs characteristic != 2\n");

    r = run_cli("verify jacobi --mutate nosuchmutation");
    CHECK(r.rc == 2);
}

TEST_CASE("flag and input validation") {
    CliResult r = run_cli("bracket \"2*xz\" yy");
    CHECK(r.rc == 2);
    CHECK(r.err == "parse error: word: unknown letter 'z' (at offset 3)\n");

    r = run_cli("bracket xy yy --prime 5");
    CHECK(r.rc == 2);
    CHECK(r.err == "error: --prime is only valid with --field fp\n");

    r = run_cli("bracket xy yy --field fp");
    CHECK(r.rc == 2);
    CHECK(r.err == "error: --field fp requires --prime\n");

    r = run_cli("bracket xy yy --field nope");
    CHECK(r.rc == 2);

    r = run_cli("eval dx xy xyy"); // dx wants a single letter
    CHECK(r.rc == 2);

    r = run_cli("--help");
    CHECK(r.rc == 0);
    CHECK(r.out.find("bracket") != std::string::npos);
}

TEST_CASE("gram and dim flags reach the computation") {
    // doubled form: [xy, yy] picks up the form value <y, x> = -2
    CliResult r = run_cli("bracket xy yy --gram \"0,2;-2,0\"");
    CHECK(r.rc == 0);
    CHECK(r.out == "4*yy\n");

    r = run_cli("bracket 1.2 2.2 --dim 4");
    CHECK(r.rc == 0);
    CHECK(r.out == "0\n"); // <x1, x2> = 0 in the standard block form

    r = run_cli("bracket 1.3 3.3 --dim 4");
    CHECK(r.rc == 0);
    CHECK(r.out == "2*3.3\n"); // x3 pairs with x1
}
