#include <catch2/catch.hpp>

#include <array>
#include <cstdio>
#include <string>

#ifndef TRIGONAL_CLI_PATH
#define TRIGONAL_CLI_PATH "./trigonal"
#endif

namespace {

struct RunResult {
  int exit_code = -1;
  std::string out;
};

RunResult run_cli(const std::string& args) {
  const std::string cmd = std::string(TRIGONAL_CLI_PATH) + " " + args + " 2>/dev/null";
  FILE* pipe = popen(cmd.c_str(), "r");
  REQUIRE(pipe != nullptr);
  RunResult r;
  std::array<char, 4096> buf{};
  std::size_t n = 0;
  while ((n = fread(buf.data(), 1, buf.size(), pipe)) > 0) r.out.append(buf.data(), n);
  const int status = pclose(pipe);
  r.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return r;
}

}  // namespace

TEST_CASE("cli eval") {
  const auto r = run_cli("eval \"D(4,-3)\"");
  CHECK(r.exit_code == 0);
  CHECK(r.out == "{\"alpha\":11,\"beta\":3,\"residues\":[3,4]}\n");
}

TEST_CASE("cli simplify trace is stable") {
  const auto r = run_cli("simplify \"D(2,1,-1,-2)\" --trace");
  CHECK(r.exit_code == 0);
  CHECK(r.out ==
        "D(2,1,-1,-2) --TRIPLE_END@0~rev--> D(3,0,2)\n"
        "D(3,0,2) --Z_MERGE@0--> D(5)\n");
}

TEST_CASE("cli moves on a word with none") {
  const auto r = run_cli("moves \"D(4,-3)\"");
  CHECK(r.exit_code == 0);
  CHECK(r.out == "[]\n");
}

TEST_CASE("cli normalize") {
  const auto r = run_cli("normalize \"D(4,-3)\"");
  CHECK(r.exit_code == 0);
  CHECK(r.out == "C(3,1,2)\n");
}

TEST_CASE("cli same-link exit codes") {
  CHECK(run_cli("same-link \"D(4,-3)\" \"C(3,1,2)\"").exit_code == 0);
  CHECK(run_cli("same-link \"D(3)\" \"D(1,1,1)\"").exit_code == 1);
}

TEST_CASE("cli predicates") {
  CHECK(run_cli("simple \"D(4,-3)\"").exit_code == 0);
  CHECK(run_cli("simple \"D(2,2,1)\"").exit_code == 1);
  CHECK(run_cli("hard \"D(4,-3)\"").exit_code == 0);
  CHECK(run_cli("hard \"D(5)\"").exit_code == 1);
}

TEST_CASE("cli gen and scramble") {
  CHECK(run_cli("gen awkward \"C(3,1,2)\"").out == "D(4,-3)\n");
  CHECK(run_cli("gen hard \"C(2,2,2)\"").out == "D(3,-2,3)\n");
  const auto s1 = run_cli("scramble \"D(5)\" --steps 4 --seed 9");
  const auto s2 = run_cli("scramble \"D(5)\" --steps 4 --seed 9");
  CHECK(s1.exit_code == 0);
  CHECK(s1.out == s2.out);
}

TEST_CASE("cli usage errors exit 2") {
  CHECK(run_cli("eval \"D(2,x)\"").exit_code == 2);
  CHECK(run_cli("frobnicate").exit_code == 2);
  CHECK(run_cli("verify nosuch").exit_code == 2);
}

TEST_CASE("cli simplify exit codes") {
  CHECK(run_cli("simplify \"D(2,1,-1,-2)\"").exit_code == 0);
  CHECK(run_cli("simplify \"D(4,-3)\"").exit_code == 1);
  CHECK(run_cli("simplify \"D(2,2,-1,2,2)\" --max-states 2").exit_code == 3);
}

TEST_CASE("cli verify lemma small and deterministic") {
  const auto a = run_cli("verify lemma --max-length 3 --entry-bound 3");
  const auto b = run_cli("verify lemma --max-length 3 --entry-bound 3");
  CHECK(a.exit_code == 0);
  CHECK(a.out == b.out);
}

TEST_CASE("cli enumerate") {
  const auto r = run_cli("enumerate --max-crossings 2 --max-length 2 --entry-bound 2");
  CHECK(r.exit_code == 0);
  CHECK(r.out == "D(1)\nD(-1)\nD(2)\nD(-2)\nD(1,1)\nD(1,-1)\nD(-1,1)\nD(-1,-1)\n");
  const auto f = run_cli("enumerate --max-crossings 3 --max-length 3 --class 3/2");
  CHECK(f.out == "D(-3)\nD(1,2)\nD(-2,-1)\nD(1,1,1)\n");
}

TEST_CASE("cli graph emits dot") {
  const auto r = run_cli("graph \"D(2,0,3)\" --dot");
  CHECK(r.exit_code == 0);
  CHECK(r.out.find("digraph closure {") == 0);
  CHECK(r.out.find("\"D(2,0,3)\" -> \"D(5)\" [label=\"Z_MERGE@0\"]") != std::string::npos);
}
