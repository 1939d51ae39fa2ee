#include "support.hpp"

#include "zagraph/cli.hpp"

#include <nlohmann/json.hpp>

#include <filesystem>
#include <fstream>
#include <sstream>

using namespace zag;

namespace {

struct Run {
  int code;
  std::string out, err;
};

Run run(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = run_command(args, out, err);
  return {code, out.str(), err.str()};
}

bool single_line_error(const Run& r, std::string_view prefix) {
  return r.err.starts_with(prefix) && r.err.find('\n') == r.err.size() - 1 && r.out.empty();
}

}  // namespace

TEST_SUITE("cli") {

TEST_CASE("analyze") {
  const auto r = run({"analyze", "Z6"});
  CHECK(r.code == 0);
  CHECK(r.err.empty());
  CHECK(r.out.find("graph: ZA, 3 vertices, 2 edges") != std::string::npos);
  CHECK(r.out.find("star: yes (center 3)") != std::string::npos);

  const auto j = run({"analyze", "Z5 x Z5", "--export", "json"});
  CHECK(j.code == 0);
  CHECK(nlohmann::json::parse(j.out)["invariants"]["regular_k"] == 4);

  const auto coann = run({"analyze", "Z5 x Z5", "--graph", "coann", "--export", "json"});
  CHECK(nlohmann::json::parse(coann.out)["graph_kind"] == "COANN");
  CHECK(nlohmann::json::parse(coann.out)["invariants"]["complete"] == true);

  const auto zd = run({"analyze", "Z6", "--graph", "zd", "--export", "dot"});
  CHECK(zd.out.starts_with("graph \"ZERODIV(Z6)\""));

  const auto right = run({"analyze", "M2(Z2)", "--side", "right", "--export", "json"});
  CHECK(right.code == 0);
}

TEST_CASE("analyze writes files") {
  const auto path = (std::filesystem::temp_directory_path() / "zagraph_cli_test.dot").string();
  const auto r = run({"analyze", "Z6", "--export", "dot", "--out", path});
  CHECK(r.code == 0);
  CHECK(r.out.empty());
  std::ifstream f(path);
  std::stringstream ss;
  ss << f.rdbuf();
  CHECK(ss.str() == run({"analyze", "Z6", "--export", "dot"}).out);
  std::filesystem::remove(path);
}

TEST_CASE("verify") {
  const auto r = run({"verify", "Z5 x Z5"});
  CHECK(r.code == 0);
  for (const char* id : {"regular_classification", "bipartite_classification", "diameter_product_of_fields",
                         "complete_implies_coann_complete"})
    CHECK(r.out.find(std::string("[PASS] ") + id + "  Z5 x Z5") != std::string::npos);
  CHECK(r.out.ends_with("result: PASS\n"));
  CHECK(r.out.find("elapsed") == std::string::npos);
}

TEST_CASE("sweep") {
  const auto r = run({"sweep", "--max-order", "16", "--families", "zn,products"});
  CHECK(r.code == 0);
  CHECK(r.out.starts_with("rings "));
  CHECK(r.out.find("fail 0") != std::string::npos);
}

TEST_CASE("error paths") {
  CHECK(single_line_error(run({}), "error[usage]: "));
  CHECK(run({}).code == 2);
  CHECK(single_line_error(run({"frobnicate"}), "error[usage]: "));
  CHECK(single_line_error(run({"analyze"}), "error[usage]: "));
  CHECK(single_line_error(run({"analyze", "Z6", "--export", "png"}), "error[usage]: "));
  CHECK(single_line_error(run({"analyze", "Z6", "--graph", "foo"}), "error[usage]: "));
  CHECK(single_line_error(run({"sweep"}), "error[usage]: "));
  CHECK(single_line_error(run({"sweep", "--max-order", "8", "--families", "zn,rings"}), "error[usage]: "));
  CHECK(single_line_error(run({"analyze", "--budget-ms", "0", "Z6"}), "error[usage]: "));

  const auto syntax = run({"analyze", "Z5 x"});
  CHECK(syntax.code == 2);
  CHECK(single_line_error(syntax, "error[syntax]: offset 4: "));
  CHECK(single_line_error(run({"analyze", "GF(6)"}), "error[semantic]: "));
  CHECK(single_line_error(run({"verify", "Z2 x M2(Z5 x Z5 x Z5)"}), "error[capacity]: in M2(Z5 x Z5 x Z5)"));
  CHECK(single_line_error(run({"analyze", "Z6", "--out", "/nonexistent/dir/x.txt"}), "error[invalid-argument]: "));

  for (const auto& args : std::vector<std::vector<std::string>>{{"analyze", "Z5 x"}, {"sweep"}, {"verify", "GF(6)"}}) {
    const auto r = run(args);
    CHECK(r.code != 0);
  }
}

TEST_CASE("help") {
  const auto r = run({"--help"});
  CHECK(r.code == 0);
  CHECK(r.out.find("analyze") != std::string::npos);
}

}  // TEST_SUITE
