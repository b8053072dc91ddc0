#include <doctest.h>

#include <sys/wait.h>

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>
#include <string>

#include "hx/constructions.hpp"
#include "hx/io.hpp"

namespace {

struct RunResult {
  int exit_code = -1;
  std::string out;
};

RunResult run_cli(const std::string& args, const std::string& env = "") {
  const std::string cmd = env + " " + std::string(HX_CLI_PATH) + " " + args + " 2>/dev/null";
  FILE* pipe = popen(cmd.c_str(), "r");
  REQUIRE(pipe != nullptr);
  RunResult res;
  char buf[4096];
  size_t got;
  while ((got = fread(buf, 1, sizeof buf, pipe)) > 0) res.out.append(buf, got);
  const int status = pclose(pipe);
  res.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return res;
}

std::string slurp(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  REQUIRE(in.good());
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

std::string tmp_path(const std::string& name) {
  return std::string("cli_test_") + name;
}

}  // namespace

TEST_CASE("params prints the thresholds") {
  const RunResult res = run_cli("params --k 2 --r 2");
  CHECK(res.exit_code == 0);
  CHECK(res.out == "t=3 s=4\n");
}

TEST_CASE("bounds reports values and branches") {
  const RunResult res = run_cli("bounds --n 10 --k 2 --l 4 --r 2");
  CHECK(res.exit_code == 0);
  CHECK(res.out.find("\"lower\": 15") != std::string::npos);
  CHECK(res.out.find("\"lower_branch\": \"ii\"") != std::string::npos);
  CHECK(res.out.find("\"upper\": 17") != std::string::npos);
  CHECK(res.out.find("\"upper_branch\": \"iii\"") != std::string::npos);
}

TEST_CASE("construct writes the canonical file") {
  const std::string path = tmp_path("msh.txt");
  const RunResult res = run_cli("construct msh --n 10 --k 2 --l 4 --r 2 -o " + path);
  CHECK(res.exit_code == 0);
  CHECK(slurp(path) == hx::to_text(hx::build_msh(10, 2, 4, 2)));

  const RunResult stdout_res = run_cli("construct complete --n 3 --r 2");
  CHECK(stdout_res.out == "3 2\n0 1\n0 2\n1 2\n");

  CHECK(run_cli("construct nosuch --n 3 --r 2").exit_code == 3);
  std::remove(path.c_str());
}

TEST_CASE("kappa honors the oracle switch") {
  const std::string path = tmp_path("kappa.txt");
  hx::write_hypergraph_file(path, hx::build_msh(10, 2, 4, 2));
  const RunResult oracle = run_cli("kappa " + path);
  CHECK(oracle.exit_code == 0);
  CHECK(oracle.out.find("\"kappa\": 2") != std::string::npos);
  CHECK(oracle.out.find("\"method\": \"oracle\"") != std::string::npos);
  const RunResult flow = run_cli("kappa " + path + " --oracle off");
  CHECK(flow.out.find("\"kappa\": 2") != std::string::npos);
  CHECK(flow.out.find("\"method\": \"flow\"") != std::string::npos);
  std::remove(path.c_str());

  // forcing the oracle past its size cap is a rejection
  const std::string big = tmp_path("kappa_big.txt");
  hx::write_hypergraph_file(big, hx::Hypergraph::build(21, 2, {{0, 1}}));
  CHECK(run_cli("kappa " + big + " --oracle on").exit_code == 3);
  CHECK(run_cli("kappa " + big + " --oracle off").exit_code == 0);
  std::remove(big.c_str());
}

TEST_CASE("maximalize accepts a file start") {
  const std::string start = tmp_path("gm_start.txt");
  const std::string out = tmp_path("gm_out.txt");
  hx::write_hypergraph_file(start, hx::build_msh(10, 2, 4, 2));
  const RunResult res =
      run_cli("maximalize " + start + " --k 2 --l 4 --seed 2 -o " + out);
  CHECK(res.exit_code == 0);
  // already maximal: saturation returns it unchanged
  CHECK(slurp(out) == slurp(start));
  std::remove(start.c_str());
  std::remove(out.c_str());
}

TEST_CASE("verify exit codes distinguish the three outcomes") {
  const std::string maximal_path = tmp_path("ver_max.txt");
  hx::write_hypergraph_file(maximal_path, hx::build_msh(10, 2, 4, 2));
  CHECK(run_cli("verify " + maximal_path + " --k 2 --l 4").exit_code == 0);

  // drop one edge: still admissible, no longer maximal
  const hx::Hypergraph msh = hx::build_msh(10, 2, 4, 2);
  std::vector<hx::Edge> fewer(msh.edges().begin(), msh.edges().end() - 1);
  const std::string partial_path = tmp_path("ver_partial.txt");
  hx::write_hypergraph_file(partial_path, hx::Hypergraph::build(10, 2, fewer));
  const RunResult partial = run_cli("verify " + partial_path + " --k 2 --l 4");
  CHECK(partial.exit_code == 1);
  CHECK(partial.out.find("\"addable_edge\"") != std::string::npos);

  const std::string dense_path = tmp_path("ver_dense.txt");
  hx::write_hypergraph_file(dense_path, hx::build_complete(10, 2));
  CHECK(run_cli("verify " + dense_path + " --k 2 --l 4").exit_code == 2);

  CHECK(run_cli("verify missing_file.txt --k 2 --l 4").exit_code == 3);

  // HX_ORACLE_CAP steers the automatic path choice
  const RunResult fast = run_cli("verify " + maximal_path + " --k 2 --l 4",
                                 "HX_ORACLE_CAP=0");
  CHECK(fast.exit_code == 0);
  CHECK(fast.out.find("\"path\": \"fast\"") != std::string::npos);
  const RunResult orc = run_cli("verify " + maximal_path + " --k 2 --l 4");
  CHECK(orc.out.find("\"path\": \"oracle\"") != std::string::npos);

  std::remove(maximal_path.c_str());
  std::remove(partial_path.c_str());
  std::remove(dense_path.c_str());
}

TEST_CASE("seeded commands are byte-deterministic") {
  const std::string out1 = tmp_path("gm1.txt");
  const std::string out2 = tmp_path("gm2.txt");
  const std::string args = "maximalize --n 10 --r 2 --k 2 --l 4 --seed 11 -o ";
  const RunResult a = run_cli(args + out1);
  const RunResult b = run_cli(args + out2);
  CHECK(a.exit_code == 0);
  // summaries differ only in the output path
  CHECK(slurp(out1) == slurp(out2));

  const RunResult n1 = run_cli("normalize --k 2 --l 6 --r 2 --n 13 --seed 5");
  const RunResult n2 = run_cli("normalize --k 2 --l 6 --r 2 --n 13 --seed 5");
  CHECK(n1.exit_code == 0);
  CHECK(n1.out == n2.out);

  const RunResult s1 = run_cli("sweep --max-n 8");
  const RunResult s2 = run_cli("sweep --max-n 8");
  CHECK(s1.exit_code == 0);
  CHECK(s1.out == s2.out);

  std::remove(out1.c_str());
  std::remove(out2.c_str());
}

TEST_CASE("normalize reports a monotone trace reaching the bound") {
  const RunResult res = run_cli("normalize --k 2 --l 6 --r 2 --spectrum 3:2");
  CHECK(res.exit_code == 0);
  CHECK(res.out.find("\"msh_match\": true") != std::string::npos);
  CHECK(res.out.find("\"upper_bound\": 24") != std::string::npos);
}

TEST_CASE("sweep emits the documented header and consistent rows") {
  const RunResult res = run_cli("sweep --max-n 8");
  CHECK(res.exit_code == 0);
  std::istringstream lines(res.out);
  std::string header;
  std::getline(lines, header);
  CHECK(header ==
        "r,k,l,n,t,s,p,q,lower,lower_branch,upper,upper_branch,"
        "msh_edges,dumbbell_edges,msh_maximal,verify_path");
  std::string row;
  int rows = 0;
  while (std::getline(lines, row)) {
    ++rows;
    CHECK(row.find(",true,") != std::string::npos);  // msh_maximal column
  }
  CHECK(rows > 0);
}

TEST_CASE("module rejections surface as exit code 3") {
  CHECK(run_cli("bounds --n 3 --k 2 --l 4 --r 2").exit_code == 3);   // n < l
  CHECK(run_cli("params --k 1 --r 2").exit_code == 3);
  CHECK(run_cli("construct msh --n 10 --k 2 --l 3 --r 2").exit_code == 3);
  CHECK(run_cli("normalize --k 2 --l 6 --r 2").exit_code == 3);      // no spectrum
}
