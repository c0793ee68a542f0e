#include <filesystem>
#include <fstream>
#include <sstream>

#include "doctest.h"
#include "json.hpp"

#include "cli_app.hpp"

using namespace cliffk;

namespace {

struct Run {
  int code;
  std::string out;
  std::string err;
};

Run run(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = run_cli(args, out, err);
  return {code, out.str(), err.str()};
}

std::string write_temp(const std::string& name, const std::string& text) {
  const auto path = std::filesystem::temp_directory_path() / ("cliffk_test_" + name);
  std::ofstream(path) << text;
  return path.string();
}

const std::string kBottFile = std::string(CLIFFK_SEQUENCES_DIR) + "/bott_degree0.seq";

}  // namespace

TEST_CASE("classify") {
  CHECK(run({"classify", "3", "0"}).out == "C^{3,0} ≅ H ⊕ H (dim 8)\n");
  CHECK(run({"classify", "2", "0"}).out == "C^{2,0} ≅ M_1(H) (dim 4)\n");
  CHECK(run({"classify", "0", "0"}).out == "C^{0,0} ≅ R (dim 1)\n");
  CHECK(run({"classify", "1", "1", "--field", "r"}).out == "C^{1,1} ≅ M_2(R) (dim 4)\n");
  CHECK(run({"classify", "1", "0", "--field", "c"}).out == "C^{1,0} ⊗ C ≅ C ⊕ C (dim 2)\n");
  CHECK(run({"classify", "x", "0"}).code == 2);
  CHECK(run({"classify", "-1", "0"}).code == 2);
  CHECK(run({"classify", "1"}).code == 2);
  CHECK(run({"classify", "1", "0", "--field", "q"}).code == 2);
  CHECK(run({"classify", "40", "0"}).code == 2);
}

TEST_CASE("rpn and bott") {
  CHECK(run({"rpn", "4"}).out == "Z/8\n");
  CHECK(run({"rpn", "1", "--theory", "ko"}).out == "Z/2\n");
  CHECK(run({"rpn", "2", "--theory", "ku"}).out == "Z/2\n");
  CHECK(run({"rpn", "0"}).code == 2);
  const auto ko = nlohmann::json::parse(run({"--format", "json", "bott", "--max", "7"}).out);
  std::vector<std::string> row;
  for (const auto& r : ko["rows"]) row.push_back(r["group"]);
  CHECK(row == std::vector<std::string>{"Z", "Z/2", "Z/2", "0", "Z", "0", "0", "0"});
  const auto ku = nlohmann::json::parse(run({"--format", "json", "bott", "--max", "3", "--theory", "ku"}).out);
  CHECK(ku["rows"].size() == 4);
  CHECK(ku["rows"][2]["group"] == "Z");
  CHECK(nlohmann::json::parse(run({"--format", "json", "bott", "--max", "0"}).out)["rows"].size() == 1);
}

TEST_CASE("verify suites") {
  for (const char* suite : {"morita", "untwist", "thom", "fiber"}) {
    const auto r = run({"verify", "--suite", suite});
    CHECK_MESSAGE(r.code == 0, suite);
    CHECK(r.out.find("[FAIL]") == std::string::npos);
  }
  CHECK(run({"verify", "--suite", ""}).code == 2);
  CHECK(run({"verify"}).code == 2);
  CHECK(run({"verify", "--suite", "bogus"}).code == 2);
}

TEST_CASE("seq on fully bound files") {
  auto r = run({"seq", kBottFile});
  CHECK(r.code == 0);
  CHECK(r.out == "exact at all checked positions\n");

  std::ifstream in(kBottFile);
  std::stringstream buf;
  buf << in.rdbuf();
  std::string text = buf.str();
  text.replace(text.find("[[2]]"), 5, "[[4]]");
  r = run({"seq", write_temp("r4.seq", text)});
  CHECK(r.code == 1);
  CHECK(r.out == "not exact at KO0: image index 4, kernel index 2\n");

  r = run({"seq", write_temp("zero.seq", "term A = 0\nterm B = 0\nmap f : A -> B = 0\ncheck exact at A, B\n")});
  CHECK(r.code == 0);
  CHECK(r.out == "exact at all checked positions\n");
}

TEST_CASE("seq templates") {
  auto r = run({"seq", std::string(CLIFFK_SEQUENCES_DIR) + "/bott_degree0_template.seq"});
  CHECK(r.code == 0);
  CHECK(r.out ==
        "2 exact assignments with bound 2\n"
        "  r = [[-2]], eta = [[1]], c = 0\n"
        "  r = [[2]], eta = [[1]], c = 0\n");
  r = run({"seq", write_temp("nobound.seq", "term A = Z\nterm B = Z\nmap f : A -> B = unknown\n")});
  CHECK(r.code == 2);
  r = run({"seq", write_temp("none.seq",
                             "term A = 0\nterm B = Z\nterm C = 0\nmap f : A -> B = unknown\n"
                             "map g : B -> C = unknown\ncheck exact at B\nsolve bound = 1\n")});
  CHECK(r.code == 1);
  CHECK(r.out.rfind("0 exact assignments with bound 1", 0) == 0);
  r = run({"seq", write_temp("huge.seq",
                             "term A = Z^4\nterm B = Z^4\nmap f : A -> B = unknown\nsolve bound = 5\n")});
  CHECK(r.code == 1);
  CHECK(r.err.find("ceiling") != std::string::npos);
}

TEST_CASE("seq errors") {
  auto r = run({"seq", write_temp("bad.seq", "term A = Z\nterm B = Q\n")});
  CHECK(r.code == 2);
  CHECK(r.err.find("line 2") != std::string::npos);
  CHECK(run({"seq", "/nonexistent/file.seq"}).code == 2);
}

TEST_CASE("json output is stable") {
  for (std::vector<std::string> args :
       {std::vector<std::string>{"--format", "json", "classify", "3", "0"},
        {"--format", "json", "rpn", "5"},
        {"--format", "json", "verify", "--suite", "fiber"},
        {"--format", "json", "seq", kBottFile}}) {
    const auto a = run(args), b = run(args);
    CHECK(a.out == b.out);
    CHECK(nlohmann::json::accept(a.out));
  }
  const auto j = nlohmann::json::parse(run({"--format", "json", "classify", "3", "0"}).out);
  CHECK(j["algebra"] == "H ⊕ H");
  CHECK(j["dimension"] == 8);
  CHECK(run({"--format", "yaml", "classify", "0", "0"}).code == 2);
}

TEST_CASE("help and usage") {
  CHECK(run({"--help"}).code == 0);
  CHECK(run({}).code == 2);
  CHECK(run({"frobnicate"}).code == 2);
}
