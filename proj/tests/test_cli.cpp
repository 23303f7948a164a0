// End-to-end checks of the command-line tool: exit codes, output
// formats, and flag handling, driving the real binary.

#include <catch2/catch_amalgamated.hpp>

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>
#include <string>

#include "letterplace/render.hpp"

namespace {

struct RunResult {
  int exit_code;
  std::string output;  // stdout + stderr
};

RunResult run_cli(const std::string& args) {
  std::string out_path = std::string(LP_BINARY_DIR) + "/cli_test_output.txt";
  std::string cmd = std::string(LP_CLI_PATH) + " " + args + " > " + out_path + " 2>&1";
  int status = std::system(cmd.c_str());
  RunResult r;
  r.exit_code = WEXITSTATUS(status);
  std::ifstream in(out_path);
  std::ostringstream text;
  text << in.rdbuf();
  r.output = text.str();
  return r;
}

std::string data(const std::string& name) { return std::string(LP_DATA_DIR) + "/" + name; }

std::string squeeze(const std::string& s) {
  std::string out;
  bool space = false;
  for (char c : s) {
    if (c == ' ') {
      space = true;
      continue;
    }
    if (space && !out.empty() && out.back() != '\n') out += ' ';
    space = false;
    out += c;
  }
  return out;
}

}  // namespace

TEST_CASE("betti subcommand renders the diagram") {
  auto r = run_cli("betti " + data("v.poset") + " -n 2");
  REQUIRE(r.exit_code == 0);
  REQUIRE(squeeze(r.output).find("2: 5 5 1") != std::string::npos);
  REQUIRE(squeeze(r.output).find("3: . 1 1") != std::string::npos);

  // engine and characteristic flags leave the table unchanged
  for (std::string flags : {"--engine oracle", "--engine strand", "--engine tree",
                            "--engine oracle --char 2"}) {
    auto other = run_cli("betti " + data("v.poset") + " -n 2 " + flags);
    REQUIRE(other.exit_code == 0);
    REQUIRE(other.output == r.output);
  }
}

TEST_CASE("error exit codes") {
  auto cycle = run_cli("betti " + data("cycle.poset") + " -n 2");
  REQUIRE(cycle.exit_code == 2);
  REQUIRE(cycle.output.find("cycle") != std::string::npos);

  auto missing = run_cli("betti " + data("no_such_file.poset") + " -n 2");
  REQUIRE(missing.exit_code == 2);

  auto guard = run_cli("betti " + data("rp2.poset") + " -n 2 --engine oracle");
  REQUIRE(guard.exit_code == 3);
}

TEST_CASE("formats and conventions") {
  auto csv = run_cli("betti " + data("chain3.poset") + " -n 2 --format csv");
  REQUIRE(csv.exit_code == 0);
  REQUIRE(csv.output == "i,j,beta\n0,2,6\n1,3,8\n2,4,3\n");

  auto json = run_cli("betti " + data("chain3.poset") + " -n 2 --format json");
  REQUIRE(json.exit_code == 0);
  lp::BettiTable t = lp::parse_table_json(json.output);
  REQUIRE(t.convention() == lp::Convention::ideal);
  REQUIRE(t.at(0, 2) == 6);

  auto quotient = run_cli("betti " + data("v.poset") + " -n 2 --convention quotient");
  REQUIRE(squeeze(quotient.output).find("0: 1 . . .") != std::string::npos);
}

TEST_CASE("multigraded output") {
  auto lines = run_cli("multibetti " + data("v.poset") + " -n 2");
  REQUIRE(lines.exit_code == 0);
  REQUIRE(squeeze(lines.output).find("0 | a;a | 1") != std::string::npos);
  REQUIRE(squeeze(lines.output).find("1 | b,c;b,c | 1") != std::string::npos);

  auto via_strand = run_cli("betti " + data("v.poset") + " -n 2 --multigraded");
  REQUIRE(via_strand.exit_code == 0);
  REQUIRE(via_strand.output == lines.output);
}

TEST_CASE("gens subcommand") {
  auto r = run_cli("gens " + data("v.poset") + " -n 2");
  REQUIRE(r.exit_code == 0);
  REQUIRE(r.output == "x[1,a]x[2,a]\nx[1,a]x[2,b]\nx[1,a]x[2,c]\nx[1,b]x[2,b]\nx[1,c]x[2,c]\n");
}

TEST_CASE("info subcommand") {
  auto r = run_cli("info " + data("v.poset") + " -n 2");
  REQUIRE(r.exit_code == 0);
  REQUIRE(squeeze(r.output).find("width: 2") != std::string::npos);
  REQUIRE(squeeze(r.output).find("codimension: 3") != std::string::npos);
  REQUIRE(squeeze(r.output).find("regularity: 3") != std::string::npos);
  REQUIRE(squeeze(r.output).find("multiplicity: 5 (bounds 4 .. 8)") != std::string::npos);
  REQUIRE(squeeze(r.output).find("level: no") != std::string::npos);
  REQUIRE(squeeze(r.output).find("generators: 5") != std::string::npos);

  auto chain = run_cli("info " + data("chain3.poset") + " -n 2");
  REQUIRE(squeeze(chain.output).find("multiplicity: 4 (bounds 4 .. 8)") != std::string::npos);

  auto anti = run_cli("info " + data("antichain2.poset") + " -n 3");
  REQUIRE(squeeze(anti.output).find("multiplicity: 9 (bounds 6 .. 9)") != std::string::npos);
}

TEST_CASE("check subcommand") {
  auto v = run_cli("check " + data("v.poset") + " -n 2 --chars 0,2");
  REQUIRE(v.exit_code == 0);
  REQUIRE(v.output.find("all checks passed") != std::string::npos);
  REQUIRE(v.output.find("[FAIL]") == std::string::npos);

  auto p8 = run_cli("check " + data("p8.poset") + " -n 2 --engine tree,strand");
  REQUIRE(p8.exit_code == 0);
  REQUIRE(p8.output.find("reg 4") != std::string::npos);
  REQUIRE(p8.output.find("pd 7") != std::string::npos);

  auto rp2 = run_cli("check " + data("rp2.poset") + " -n 2 --chars 0,2");
  REQUIRE(rp2.exit_code == 0);
  REQUIRE(rp2.output.find("characteristic dependence: detected") != std::string::npos);
}
