#include <doctest.h>

#include <cstdlib>
#include <filesystem>
#include <sstream>

#include "test_support.hpp"
#include "uirg/cli.hpp"
#include "uirg/line_graph.hpp"

using namespace uirg;
using namespace uirg::testing;

namespace {

struct Run {
  int code;
  std::string out;
  std::string err;
};

Run run(const std::vector<std::string>& args) {
  std::ostringstream out, err;
  const int code = run_cli(args, out, err);
  return {code, out.str(), err.str()};
}

int line_count(const std::string& s) { return static_cast<int>(std::count(s.begin(), s.end(), '\n')); }

}  // namespace

TEST_CASE("check") {
  const auto a = run({"check", "Z3xZ5", "--line"});
  CHECK(a.code == 0);
  CHECK(a.out == "line-graph: true\n");
  const auto b = run({"check", "Z9[x]/(3x,x^2)", "--coline"});
  CHECK(b.code == 0);
  CHECK(b.out == "complement-of-line-graph: false\n");
  const auto c = run({"check", "Z2xZ2"});
  CHECK(c.out == "line-graph: true\ncomplement-of-line-graph: true\n");
}

TEST_CASE("forbidden") {
  const auto a = run({"forbidden", "--max-vertices", "6"});
  CHECK(a.code == 0);
  CHECK(line_count(a.out) == 9);
  CHECK(a.out == read_file(fixture("forbidden_line.g6")));
  const auto b = run({"forbidden", "--max-vertices", "6", "--complement"});
  std::istringstream in(b.out);
  std::string line;
  int i = 0;
  while (std::getline(in, line)) {
    CHECK(is_isomorphic(from_graph6(line), complement(beineke_graphs().graphs[i])));
    ++i;
  }
  CHECK(i == 9);
  CHECK(run({"forbidden", "--max-vertices", "9"}).code == 2);
}

TEST_CASE("ring") {
  const auto a = run({"ring", "Z2xZ4"});
  CHECK(a.code == 0);
  CHECK(a.out.find("order: 8\n") != std::string::npos);
  CHECK(a.out.find("characteristic: 4\n") != std::string::npos);
  CHECK(a.out.find("local: false\n") != std::string::npos);
  CHECK(a.out.find("units: 2 {(1,1), (1,3)}\n") != std::string::npos);
  CHECK(a.out.find("factors: Z2 Z4\n") != std::string::npos);
  const auto b = run({"ring", "Z8"});
  CHECK(b.out.find("maximal-ideal-generators: 1\n") != std::string::npos);
  CHECK(b.out.find("principal: true\n") != std::string::npos);
}

TEST_CASE("graph formats") {
  const auto g6 = run({"graph", "Z2xZ2"});
  CHECK(g6.code == 0);
  CHECK(is_isomorphic(from_graph6(g6.out.substr(0, g6.out.size() - 1)), path(3)));
  const auto dot = run({"graph", "Z2xZ2", "--format", "dot"});
  CHECK(dot.out.rfind("graph \"Gamma_U(Z2xZ2)\" {", 0) == 0);
  CHECK(dot.out.find("label=\"(0,0)\"") != std::string::npos);
  CHECK(run({"graph", "Z2xZ2", "--format", "dot"}).out == dot.out);
  const auto js = run({"graph", "Z2xZ2", "--format", "json"});
  CHECK(from_json(js.out).order() == 3);
  CHECK(run({"graph", "Z2xZ2", "--format", "png"}).code == 2);
}

TEST_CASE("root") {
  const auto a = run({"root", to_graph6(path(3))});
  CHECK(a.code == 0);
  CHECK(is_isomorphic(line_graph(from_graph6(a.out.substr(0, a.out.size() - 1))), path(3)));
  const auto b = run({"root", to_graph6(star(4))});
  CHECK(b.code == 0);
  CHECK(b.out == "none\n");
  CHECK(run({"root", "B"}).code == 2);
}

TEST_CASE("parse errors exit 2 with a position") {
  const auto a = run({"ring", "Z2xQ7"});
  CHECK(a.code == 2);
  CHECK(a.out.empty());
  CHECK(a.err.find("position 3") != std::string::npos);
  CHECK(a.err.find("     ^") != std::string::npos);
  CHECK(run({}).code == 2);
  CHECK(run({"bogus"}).code == 2);
}

TEST_CASE("verify") {
  const auto path = (std::filesystem::temp_directory_path() / "uirg_cli_report.json").string();
  const auto a = run({"verify", "--theorem", "2-nonlocal", "--max-order", "16", "--report", path});
  CHECK(a.code == 0);
  CHECK(a.out.find("counterexamples: 0\n") != std::string::npos);
  CHECK(read_file(path).find("\"schema\": \"uirg-report/1\"") != std::string::npos);

  const auto b = run({"verify", "--theorem", "3-local", "--max-order", "16"});
  CHECK(b.code == 1);
  CHECK(b.out.find("counterexample: Z4[x]/(x^2)") != std::string::npos);
  CHECK(run({"verify", "--theorem", "3-local", "--max-order", "16"}).out == b.out);

  CHECK(run({"verify", "--theorem", "nope"}).code == 2);
  CHECK(run({"verify", "--max-order", "40"}).code == 2);

  ::setenv("UIRG_MAX_ORDER", "4", 1);
  const auto c = run({"verify", "--max-order", "16"});
  ::unsetenv("UIRG_MAX_ORDER");
  CHECK(c.out.find("max-order: 4\n") != std::string::npos);
  CHECK(c.out.find("entries: 6\n") != std::string::npos);
}

TEST_CASE("figures") {
  const auto dir = std::filesystem::temp_directory_path() / "uirg_cli_figures";
  std::filesystem::remove_all(dir);
  const auto a = run({"figures", "--out", dir.string()});
  CHECK(a.code == 0);
  CHECK(line_count(a.out) == 6);
  for (int n = 3; n <= 8; ++n) CHECK(std::filesystem::exists(dir / ("figure" + std::to_string(n) + ".dot")));
  CHECK(read_file((dir / "figure3.dot").string()).find("label=\"(0,0)\"") != std::string::npos);
}
