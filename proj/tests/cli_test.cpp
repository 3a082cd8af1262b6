#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>

#include "cspar/json_io.hpp"
#include "doctest.h"

namespace {

namespace fs = std::filesystem;

struct CliResult {
  int exit_code = -1;
  std::string output;  // stdout + stderr
};

CliResult run_cli(const std::string& args) {
  const std::string command = std::string(CSPAR_CLI_PATH) + " " + args + " 2>&1";
  CliResult result;
  FILE* pipe = popen(command.c_str(), "r");
  REQUIRE(pipe != nullptr);
  char buffer[4096];
  while (std::size_t got = fread(buffer, 1, sizeof buffer, pipe))
    result.output.append(buffer, got);
  const int status = pclose(pipe);
  result.exit_code = WEXITSTATUS(status);
  return result;
}

std::string data_file(const std::string& name) {
  return (fs::path(CSPAR_DATA_DIR) / name).string();
}

std::string slurp(const fs::path& path) {
  std::ifstream in(path, std::ios::binary);
  std::ostringstream out;
  out << in.rdbuf();
  return out.str();
}

fs::path temp_file(const std::string& name) {
  return fs::temp_directory_path() / name;
}

}  // namespace

TEST_CASE("cli classify") {
  SUBCASE("sparsifiable predicate reports ell") {
    const CliResult res = run_cli("classify " + data_file("demo_predicate.json"));
    CHECK(res.exit_code == 0);
    CHECK(res.output.find("SPARSIFIABLE, ell=3") != std::string::npos);
  }
  SUBCASE("singleton predicate reports its witness") {
    const CliResult res = run_cli("classify " + data_file("singleton_predicate.json"));
    CHECK(res.exit_code == 0);
    CHECK(res.output.find("NOT SPARSIFIABLE, B={0,1} C={0,1} cell=(0,1)") !=
          std::string::npos);
  }
  SUBCASE("bad input exits 2") {
    const CliResult res = run_cli("classify /nonexistent.json");
    CHECK(res.exit_code == 2);
    CHECK(res.output.find("error:") != std::string::npos);
  }
}

TEST_CASE("cli cover emits the colouring bundle") {
  const auto out = temp_file("cspar_cli_cover.json");
  const CliResult res = run_cli("cover " + data_file("demo_predicate.json") + " -o " +
                                out.string());
  CHECK(res.exit_code == 0);
  const std::string bundle = slurp(out);
  CHECK(bundle.find("\"ell\": 3") != std::string::npos);
  fs::remove(out);

  // A singleton predicate has no colouring.
  const CliResult bad = run_cli("cover " + data_file("singleton_predicate.json"));
  CHECK(bad.exit_code == 2);
}

TEST_CASE("cli sparsify, verify, and determinism") {
  const auto out1 = temp_file("cspar_cli_sparse1.json");
  const auto out2 = temp_file("cspar_cli_sparse2.json");
  const std::string base = "sparsify " + data_file("path_cut_instance.json") +
                           " --epsilon 0.5 --seed 11 --verify -o ";
  const CliResult res1 = run_cli(base + out1.string());
  CHECK(res1.exit_code == 0);
  CHECK(res1.output.find("kept") != std::string::npos);

  const CliResult res2 = run_cli(base + out2.string());
  CHECK(res2.exit_code == 0);
  CHECK(slurp(out1) == slurp(out2));  // byte-identical output files

  SUBCASE("verify accepts the sparsifier it just produced") {
    const CliResult ver = run_cli("verify " + data_file("path_cut_instance.json") +
                                  " " + out1.string() + " --epsilon 0.5");
    CHECK(ver.exit_code == 0);
    CHECK(ver.output.find("PASS") != std::string::npos);
  }
  SUBCASE("verify rejects a truncated sparsifier with a witness") {
    // Drop every constraint but the first, keeping the weight.
    auto doc = cspar::io::read_instance_file(out1.string());
    std::vector<cspar::Constraint> one{doc.instance.constraints().front()};
    const cspar::CspInstance truncated(doc.instance.variables(),
                                       doc.instance.domains(),
                                       doc.instance.predicate(), one);
    const auto trunc_path = temp_file("cspar_cli_truncated.json");
    cspar::io::write_instance_file(trunc_path, truncated);
    const CliResult ver = run_cli("verify " + data_file("path_cut_instance.json") +
                                  " " + trunc_path.string() + " --epsilon 0.1");
    CHECK(ver.exit_code == 1);
    CHECK(ver.output.find("witness assignment") != std::string::npos);
    fs::remove(trunc_path);
  }
  SUBCASE("epsilon out of range exits 2") {
    const CliResult res = run_cli("sparsify " + data_file("path_cut_instance.json") +
                                  " --epsilon 1.5 -o /tmp/cspar_never.json");
    CHECK(res.exit_code == 2);
  }
  fs::remove(out1);
  fs::remove(out2);
}

TEST_CASE("cli gen grid and lowerbound certify full retention") {
  const auto inst_path = temp_file("cspar_cli_grid.json");
  const CliResult gen = run_cli("gen grid --pred " +
                                data_file("singleton_predicate.json") +
                                " --n 3 -o " + inst_path.string());
  CHECK(gen.exit_code == 0);
  CHECK(gen.output.find("9 constraints") != std::string::npos);

  const auto cert_path = temp_file("cspar_cli_grid_cert.json");
  const CliResult lb = run_cli("lowerbound " + inst_path.string() + " -o " +
                               cert_path.string());
  CHECK(lb.exit_code == 0);
  CHECK(lb.output.find("lower bound 9 (exact)") != std::string::npos);
  const std::string cert = slurp(cert_path);
  CHECK(cert.find("\"bound\": 9") != std::string::npos);
  CHECK(cert.find("\"exact\": true") != std::string::npos);

  // Sparsifiable predicates have no grid witness.
  const CliResult bad = run_cli("gen grid --pred " + data_file("demo_predicate.json") +
                                " --n 2 -o /tmp/cspar_never.json");
  CHECK(bad.exit_code == 2);

  fs::remove(inst_path);
  fs::remove(cert_path);
}

TEST_CASE("cli gen cube certifies the q^2 bound") {
  const auto inst_path = temp_file("cspar_cli_cube.json");
  const CliResult gen = run_cli("gen cube --pred " + data_file("nor3.json") +
                                " --q 2 -o " + inst_path.string());
  CHECK(gen.exit_code == 0);
  CHECK(gen.output.find("8 constraints") != std::string::npos);

  const CliResult lb = run_cli("lowerbound " + inst_path.string());
  CHECK(lb.exit_code == 0);
  CHECK(lb.output.find("\"exact\": true") != std::string::npos);
  fs::remove(inst_path);
}

TEST_CASE("cli version") {
  const CliResult res = run_cli("--version");
  CHECK(res.exit_code == 0);
  CHECK(res.output.find("0.1.0") != std::string::npos);
}
