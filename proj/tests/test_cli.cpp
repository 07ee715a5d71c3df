#include <doctest.h>

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <string>

#include <sys/wait.h>

#include "support/fixtures.hpp"

namespace {

struct RunResult {
    int exit_code;
    std::string output;  // stdout + stderr
};

RunResult run_cli(const std::string& args) {
    const char* bin = std::getenv("CODEGB_BIN");
    REQUIRE_MESSAGE(bin != nullptr, "CODEGB_BIN not set");
    const std::string cmd = std::string(bin) + " " + args + " 2>&1";
    FILE* pipe = popen(cmd.c_str(), "r");
    REQUIRE(pipe != nullptr);
    std::string output;
    char buf[4096];
    std::size_t got;
    while ((got = fread(buf, 1, sizeof buf, pipe)) > 0) output.append(buf, got);
    const int status = pclose(pipe);
    return RunResult{WIFEXITED(status) ? WEXITSTATUS(status) : -1, output};
}

// Writes a scratch input file in the working directory.
std::string write_file(const std::string& name, const std::string& content) {
    std::ofstream out(name);
    out << content;
    return name;
}

std::string golden_path() {
    if (const char* data = std::getenv("CODEGB_DATA"))
        return std::string(data) + "/code_6_3.txt";
    return write_file("cli_golden.txt", fixtures::kCodeText);
}

std::string joined(const std::vector<std::string>& lines) {
    std::string out;
    for (const std::string& line : lines) {
        out += line;
        out += '\n';
    }
    return out;
}

}  // namespace

TEST_CASE("gb prints the reduced basis") {
    const RunResult res = run_cli("gb " + golden_path());
    CHECK(res.exit_code == 0);
    CHECK(res.output == joined(fixtures::golden_gb_lines()));
}

TEST_CASE("gb --output normal-set") {
    const RunResult res = run_cli("gb " + golden_path() + " --output normal-set");
    CHECK(res.exit_code == 0);
    CHECK(res.output == joined(fixtures::golden_normal_set_lines()));
}

TEST_CASE("gb --output matphi") {
    const RunResult res = run_cli("gb " + golden_path() + " --output matphi");
    CHECK(res.exit_code == 0);
    CHECK(res.output ==
          "2 1 6 5 4 3 8 7\n"
          "3 6 1 8 7 2 5 4\n"
          "4 5 8 1 2 7 6 3\n"
          "5 4 7 2 1 8 3 6\n"
          "6 3 2 7 8 1 4 5\n"
          "7 8 5 6 3 4 1 2\n");
}

TEST_CASE("gb --output border and all") {
    const RunResult border = run_cli("gb " + golden_path() + " --output border");
    CHECK(border.exit_code == 0);
    CHECK(border.output == joined(fixtures::golden_gb_lines()));

    const RunResult all = run_cli("gb " + golden_path() + " --output all");
    CHECK(all.exit_code == 0);
    CHECK(all.output.find("[gb]\n") == 0);
    CHECK(all.output.find("[normal-set]\n") != std::string::npos);
    CHECK(all.output.find("[border]\n") != std::string::npos);
    CHECK(all.output.find("[matphi]\n") != std::string::npos);
}

TEST_CASE("gb output is deterministic") {
    const RunResult a = run_cli("gb " + golden_path() + " --output all");
    const RunResult b = run_cli("gb " + golden_path() + " --output all");
    CHECK(a.output == b.output);
}

TEST_CASE("printed monomials re-parse to equal values") {
    const RunResult res = run_cli("gb " + golden_path());
    REQUIRE(res.exit_code == 0);
    std::size_t pos = 0;
    while (pos < res.output.size()) {
        const std::size_t eol = res.output.find('\n', pos);
        const std::string line = res.output.substr(pos, eol - pos);
        pos = eol + 1;
        const std::size_t sep = line.find(" - ");
        REQUIRE(sep != std::string::npos);
        for (const std::string& side : {line.substr(0, sep), line.substr(sep + 3)})
            CHECK(codegb::parse_monomial(side, 6).to_string() == side);
    }
}

TEST_CASE("gb reads the transposed convention") {
    const std::string path = write_file("cli_transposed.txt",
                                        "6 3\n"
                                        "1 1 0 1 0 0\n"
                                        "1 0 1 0 1 0\n"
                                        "1 1 1 0 0 1\n");
    const RunResult res = run_cli("gb --transposed " + path);
    CHECK(res.exit_code == 0);
    CHECK(res.output == joined(fixtures::golden_gb_lines()));
}

TEST_CASE("decode command") {
    const RunResult res = run_cli("decode " + golden_path() + " 111010");
    CHECK(res.exit_code == 0);
    CHECK(res.output == "syndrome=011\nerror=001000\ncodeword=110010\n");

    const RunResult zero = run_cli("decode " + golden_path() + " 000000");
    CHECK(zero.exit_code == 0);
    CHECK(zero.output == "syndrome=000\nerror=000000\ncodeword=000000\n");

    const RunResult one = run_cli("decode " + golden_path() + " 110000");
    CHECK(one.exit_code == 0);
    CHECK(one.output == "syndrome=010\nerror=000010\ncodeword=110010\n");

    const RunResult far = run_cli("decode " + golden_path() + " 100001");
    CHECK(far.exit_code == 0);
    CHECK(far.output == "syndrome=110\nerror=TOO_MANY_ERRORS(w=2)\n");
}

TEST_CASE("decode rejects a wrong-length vector") {
    const RunResult res = run_cli("decode " + golden_path() + " 1110");
    CHECK(res.exit_code == 2);
    CHECK(res.output.find("length 6") != std::string::npos);
}

TEST_CASE("info command") {
    const RunResult res = run_cli("info " + golden_path());
    CHECK(res.exit_code == 0);
    CHECK(res.output == "n=6 k=3 r=3 d=3 t=1 t_detected=1\n");

    const std::string trivial = write_file("cli_trivial.txt", "1 1\n1\n");
    const RunResult deg = run_cli("info " + trivial);
    CHECK(deg.exit_code == 0);
    CHECK(deg.output == "n=1 k=0 r=1 d=undefined t=undefined t_detected=degenerate\n");
}

TEST_CASE("verify command passes on the reference code") {
    const RunResult res = run_cli("verify " + golden_path());
    CHECK(res.exit_code == 0);
    CHECK(res.output == "PASS\n");
}

TEST_CASE("verify under lex fails with exit 1: decoding guarantee inapplicable") {
    const RunResult res = run_cli("verify " + golden_path() + " --ordering lex");
    CHECK(res.exit_code == 1);
    CHECK(res.output.find("FAIL\n") != std::string::npos);
    CHECK(res.output.find("degree-compatible") != std::string::npos);
}

TEST_CASE("parse and usage failures exit 2") {
    const std::string empty = write_file("cli_empty.txt", "");
    CHECK(run_cli("gb " + empty).exit_code == 2);

    const std::string deficient = write_file("cli_deficient.txt",
                                             "6 3\n110\n110\n110\n110\n110\n110\n");
    const RunResult rank_res = run_cli("gb " + deficient);
    CHECK(rank_res.exit_code == 2);
    CHECK(rank_res.output.find("rank") != std::string::npos);

    CHECK(run_cli("gb cli_does_not_exist.txt").exit_code == 2);
    CHECK(run_cli("").exit_code == 2);                       // missing subcommand
    CHECK(run_cli("gb").exit_code == 2);                     // missing file
    CHECK(run_cli("gb " + golden_path() + " --ordering bogus").exit_code == 2);
    CHECK(run_cli("decode --ordering lex " + golden_path() + " 111010").exit_code == 2);
    CHECK(run_cli("--help").exit_code == 0);

    // exhaustive-audit guard: verify refuses n > 12 with a message
    std::string big = "13 1\n";
    for (int i = 0; i < 13; ++i) big += "1\n";
    const RunResult guard = run_cli("verify " + write_file("cli_big.txt", big));
    CHECK(guard.exit_code == 2);
    CHECK(guard.output.find("n <= 12") != std::string::npos);
}
