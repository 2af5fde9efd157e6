#include <sys/wait.h>

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>
#include <string>

#include "doctest.h"
#include "fermigauss/json_io.hpp"

namespace {

const std::string kCli = FERMIGAUSS_CLI_PATH;

struct CliResult {
  int code = -1;
  std::string out;
};

std::string scratch_dir() {
  static std::string dir = [] {
    char pattern[] = "/tmp/fermigauss_cli_XXXXXX";
    const char* made = mkdtemp(pattern);
    REQUIRE(made != nullptr);
    return std::string(made);
  }();
  return dir;
}

std::string write_file(const std::string& name, const std::string& content) {
  const std::string path = scratch_dir() + "/" + name;
  std::ofstream out(path, std::ios::binary);
  out << content;
  return path;
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

// Runs a full shell command with stdout captured; stdin comes from `input`.
CliResult run_shell(const std::string& command, const std::string& input = "") {
  const std::string in_path = write_file("stdin.txt", input);
  const std::string out_path = scratch_dir() + "/stdout.txt";
  // Parenthesized so the stdin redirection feeds the head of a pipeline
  // rather than its last command.
  const std::string full = "( " + command + " ) < " + in_path + " > " + out_path + " 2> " +
                           scratch_dir() + "/stderr.txt";
  const int raw = std::system(full.c_str());
  CliResult result;
  result.code = WIFEXITED(raw) ? WEXITSTATUS(raw) : -1;
  result.out = read_file(out_path);
  return result;
}

CliResult run_cli(const std::string& args, const std::string& input = "") {
  return run_shell(kCli + " " + args, input);
}

}  // namespace

TEST_CASE("pipeline: the standard state certifies") {
  const CliResult r = run_shell(kCli + " construct --standard 2 | " + kCli + " certify -");
  CHECK(r.code == 0);
  const fermigauss::json j = fermigauss::parse_json(r.out);
  CHECK(j["verdict"] == "maximally_entangled");
}

TEST_CASE("pipeline: the product state is rejected with the half diagonal deviation") {
  const CliResult r = run_shell(kCli + " construct --product 2 | " + kCli + " certify -");
  CHECK(r.code == 1);
  const fermigauss::json j = fermigauss::parse_json(r.out);
  CHECK(j["verdict"] == "not_maximally_entangled");
  CHECK(j["deviations"]["diag_A"] == 0.5);
}

TEST_CASE("pipeline: quarter-period evolution certifies") {
  const CliResult r =
      run_shell(kCli + " evolve --time 0.7853981633974483 | " + kCli + " certify -");
  CHECK(r.code == 0);
}

TEST_CASE("validate reports structured checks") {
  const CliResult good = run_shell(kCli + " construct --jw 3 | " + kCli + " validate -");
  CHECK(good.code == 0);
  const fermigauss::json j = fermigauss::parse_json(good.out);
  CHECK(j["valid"] == true);
  CHECK(j["checks"].size() == 3);

  const std::string bad = write_file(
      "bad.json",
      "{\"n_alice\":1,\"n_bob\":0,\"matrix\":[[[1.0,0.0],[0.0,0.0]],[[0.0,0.0],[1.0,0.0]]]}");
  const CliResult invalid = run_cli("validate " + bad);
  CHECK(invalid.code == 1);
  CHECK(fermigauss::parse_json(invalid.out)["valid"] == false);
}

TEST_CASE("malformed input exits with the format code") {
  CHECK(run_cli("validate -", "this is not json").code == 2);
  CHECK(run_cli("certify -", "[1,2").code == 2);
  CHECK(run_cli("validate /nonexistent/little/file.json").code == 2);
}

TEST_CASE("oracle cap exits with the cap code") {
  const CliResult r = run_shell(kCli + " construct --standard 7 | " + kCli + " eof -");
  CHECK(r.code == 3);
}

TEST_CASE("construct output is byte-stable and pipe-composable") {
  for (const std::string& flavor : {"--standard 2", "--jw 2", "--product 2"}) {
    const CliResult once = run_cli("construct " + flavor);
    const CliResult twice = run_cli("construct " + flavor);
    REQUIRE(once.code == 0);
    CHECK(once.out == twice.out);
    CHECK(once.out.back() == '\n');

    CHECK(run_cli("validate -", once.out).code == 0);
    const int certify_code = run_cli("certify -", once.out).code;
    CHECK((certify_code == 0 || certify_code == 1));
    CHECK(run_cli("eof -", once.out).code == 0);

    const CliResult again = run_cli("certify -", once.out);
    CHECK(again.out == run_cli("certify -", once.out).out);
  }
}

TEST_CASE("evolve accepts piped product states and rejects incompatible initial states") {
  const CliResult product = run_cli("construct --product 2");
  const CliResult evolved = run_cli("evolve --time 0.5 --in -", product.out);
  CHECK(evolved.code == 0);
  CHECK(run_cli("validate -", evolved.out).code == 0);

  const CliResult standard = run_cli("construct --standard 2");
  CHECK(run_cli("evolve --time 0.5 --in -", standard.out).code == 1);
}

TEST_CASE("evolve honours the modes flag for the default initial state") {
  const CliResult r =
      run_shell(kCli + " evolve --time 0.7853981633974483 --modes 3 | " + kCli + " certify -");
  CHECK(r.code == 0);
  const CliResult raw = run_cli("evolve --time 0.25 --modes 3");
  CHECK(fermigauss::parse_json(raw.out)["n_alice"] == 3);
}

TEST_CASE("tolerance comes from the flag or the environment with flag precedence") {
  const CliResult product = run_cli("construct --product 1");
  CHECK(run_cli("--eps 1.5 certify -", product.out).code == 0);
  CHECK(run_shell("FERMIGAUSS_EPS=1.5 " + kCli + " certify -", product.out).code == 0);
  CHECK(run_shell("FERMIGAUSS_EPS=1.5 " + kCli + " --eps 1e-9 certify -", product.out).code == 1);
  const CliResult report = run_cli("--eps 0.125 validate -", product.out);
  CHECK(fermigauss::parse_json(report.out)["tolerance"] == 0.125);
}

TEST_CASE("construct writes to files and builds from unitary witnesses") {
  const std::string target = scratch_dir() + "/state.json";
  const CliResult r = run_cli("construct --standard 2 -o " + target);
  CHECK(r.code == 0);
  CHECK(r.out.empty());
  CHECK(run_cli("certify " + target).code == 0);

  const std::string unitary = write_file(
      "unitary.json", "[[[0.0,1.0],[0.0,0.0]],[[0.0,0.0],[0.0,1.0]]]");
  const CliResult built = run_cli("construct --from-unitary " + unitary);
  CHECK(built.code == 0);
  CHECK(run_cli("certify -", built.out).code == 0);

  const std::string commuting = write_file(
      "commuting.json", "[[[1.0,0.0],[0.0,0.0]],[[0.0,0.0],[1.0,0.0]]]");
  CHECK(run_cli("construct --from-unitary " + commuting).code == 1);
}

TEST_CASE("construct refuses conflicting or missing recipes") {
  CHECK(run_cli("construct").code != 0);
  CHECK(run_cli("construct --standard 2 --jw 2").code != 0);
}

TEST_CASE("wick evaluates monomials against a state") {
  const std::string state = scratch_dir() + "/wickstate.json";
  REQUIRE(run_cli("construct --standard 1 -o " + state).code == 0);
  const std::string fields = write_file(
      "fields.json",
      "[[[0.0,0.0],[1.0,0.0],[0.0,0.0],[0.0,0.0]],"
      "[[1.0,0.0],[0.0,0.0],[0.0,0.0],[0.0,0.0]]]");
  const CliResult r = run_cli("wick " + state + " " + fields);
  CHECK(r.code == 0);
  const fermigauss::json j = fermigauss::parse_json(r.out);
  CHECK(j["re"] == 0.5);
  CHECK(j["im"] == 0.0);

  const std::string odd = write_file(
      "odd.json", "[[[1.0,0.0],[0.0,0.0],[0.0,0.0],[0.0,0.0]]]");
  const fermigauss::json zero = fermigauss::parse_json(run_cli("wick " + state + " " + odd).out);
  CHECK(zero["re"] == 0.0);
  CHECK(zero["im"] == 0.0);
}

TEST_CASE("oracle-check passes canonical states and fails invalid matrices") {
  const CliResult good = run_shell(kCli + " construct --jw 2 | " + kCli + " oracle-check -");
  CHECK(good.code == 0);
  const fermigauss::json j = fermigauss::parse_json(good.out);
  CHECK(j["pure"] == true);
  CHECK(j["validation"]["valid"] == true);
  CHECK(j["block_maximality"]["maximal"] == true);
  CHECK(j["parity"]["dichotomy_deviation"] == 0.0);

  const std::string bad = write_file(
      "badcov.json",
      "{\"n_alice\":1,\"n_bob\":0,\"matrix\":[[[1.0,0.0],[0.0,0.0]],[[0.0,0.0],[1.0,0.0]]]}");
  CHECK(run_cli("oracle-check " + bad).code == 1);
}

TEST_CASE("eof reports the entanglement in bits with optional block detail") {
  const CliResult plain = run_shell(kCli + " construct --standard 2 | " + kCli + " eof -");
  CHECK(plain.code == 0);
  const fermigauss::json j = fermigauss::parse_json(plain.out);
  CHECK(std::abs(j["eof_bits"].get<double>() - 1.0) < 1e-9);
  CHECK_FALSE(j.contains("blocks"));

  const CliResult detailed =
      run_shell(kCli + " construct --standard 3 | " + kCli + " eof - --oracle");
  CHECK(detailed.code == 0);
  const fermigauss::json d = fermigauss::parse_json(detailed.out);
  CHECK(std::abs(d["eof_bits"].get<double>() - 2.0) < 1e-9);
  CHECK(d["blocks"]["maximal"] == true);
}
