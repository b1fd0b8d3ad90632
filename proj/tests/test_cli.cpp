// Drives the installed CLI binary end to end; the binary path arrives via
// the GRASSMODULI_CLI environment variable set by CMake.
#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <sys/wait.h>

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>
#include <string>

namespace {

struct RunResult {
  int exit_code = -1;
  std::string out;
  std::string err;
};

std::string slurp(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

RunResult run_cli(const std::string& args) {
  const char* binary = std::getenv("GRASSMODULI_CLI");
  REQUIRE(binary != nullptr);
  std::string out_path = "cli_stdout.tmp";
  std::string err_path = "cli_stderr.tmp";
  std::string command =
      std::string(binary) + " " + args + " >" + out_path + " 2>" + err_path;
  int status = std::system(command.c_str());
  RunResult result;
  result.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  result.out = slurp(out_path);
  result.err = slurp(err_path);
  std::remove(out_path.c_str());
  std::remove(err_path.c_str());
  return result;
}

}  // namespace

TEST_CASE("decompose renders the worked instance") {
  RunResult r = run_cli("decompose --p 2 --q 2 --k 1 --format table");
  CHECK(r.exit_code == 0);
  CHECK(r.out.find("2,2") != std::string::npos);
  CHECK(r.out.find("2,1,1") != std::string::npos);
  CHECK(r.out.find("1,1,1,1") != std::string::npos);
  CHECK(r.out.find("alt") != std::string::npos);
}

TEST_CASE("decompose rejects q > p with exit code 2") {
  RunResult r = run_cli("decompose --p 2 --q 3 --k 1");
  CHECK(r.exit_code == 2);
  CHECK(r.err.find("p >= q") != std::string::npos);
}

TEST_CASE("decompose parity filter") {
  RunResult sym = run_cli("decompose --p 2 --q 2 --k 1 --parity sym --format csv");
  CHECK(sym.exit_code == 0);
  CHECK(sym.out.find("alt") == std::string::npos);
  CHECK(sym.out.find("\"2,2\"") != std::string::npos);
}

TEST_CASE("unknown flags are rejected") {
  RunResult r = run_cli("decompose --p 2 --q 2 --k 1 --bogus 3");
  CHECK(r.exit_code == 2);
}

TEST_CASE("byte-identical output across repeated runs") {
  std::string args[] = {
      "decompose --p 3 --q 2 --k 2 --format json",
      "moduli --p 3 --q 2 --k 1 --format table",
      "verify --max-n 4 --max-k 1 --suite weights",
  };
  for (const auto& arg : args) {
    RunResult first = run_cli(arg);
    RunResult second = run_cli(arg);
    CHECK(first.exit_code == 0);
    CHECK(first.out == second.out);
  }
}

TEST_CASE("moduli JSON round-trips through a parser") {
  RunResult r = run_cli("moduli --p 2 --q 2 --k 1 --format json");
  CHECK(r.exit_code == 0);
  CHECK(r.out.find("\"dim_Vk\": \"1\"") != std::string::npos);
  CHECK(r.out.find("\"N\": \"-1\"") != std::string::npos);
  CHECK(r.out.find("\"skew_label_matches_paper\": false") !=
        std::string::npos);
}

TEST_CASE("moduli writes to a file when asked") {
  RunResult r = run_cli("moduli --p 2 --q 1 --k 1 --format csv --output cli_file.tmp");
  CHECK(r.exit_code == 0);
  CHECK(r.out.empty());
  std::string contents = slurp("cli_file.tmp");
  CHECK(contents.find("2,1,1,3,6,6,0,") != std::string::npos);
  std::remove("cli_file.tmp");
}

TEST_CASE("dim command and its validation policy") {
  RunResult ok = run_cli("dim --n 4 --partition 2,2");
  CHECK(ok.exit_code == 0);
  CHECK(ok.out == "20\n");

  RunResult bivector = run_cli("dim --n 4 --partition 1,1");
  CHECK(bivector.out == "6\n");

  RunResult tall = run_cli("dim --n 3 --partition 2,1,1,1");
  CHECK(tall.exit_code == 2);

  RunResult allowed = run_cli("dim --n 3 --partition 2,1,1,1 --allow-zero");
  CHECK(allowed.exit_code == 0);
  CHECK(allowed.out == "0\n");

  RunResult malformed = run_cli("dim --n 3 --partition 2,x");
  CHECK(malformed.exit_code == 2);
}

TEST_CASE("verify subsets, bounds validation and exit codes") {
  RunResult weights = run_cli("verify --max-n 4 --max-k 1 --suite weights");
  CHECK(weights.exit_code == 0);
  CHECK(weights.out.find("[weights]") != std::string::npos);
  CHECK(weights.out.find("[rect]") == std::string::npos);
  // Per-check timing goes to stderr.
  CHECK(weights.err.find("ms") != std::string::npos);

  RunResult invalid = run_cli("verify --max-n 0");
  CHECK(invalid.exit_code == 2);

  RunResult unknown = run_cli("verify --suite nonsense");
  CHECK(unknown.exit_code == 2);
}

TEST_CASE("missing subcommand is invalid") {
  RunResult r = run_cli("");
  CHECK(r.exit_code == 2);
}
