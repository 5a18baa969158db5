#include <catch2/catch_amalgamated.hpp>

#include <filesystem>
#include <fstream>
#include <sstream>

#include "framescale/cli.hpp"

using namespace framescale;
using nlohmann::json;

namespace {

struct Outcome {
  int code = 0;
  std::string out;
  std::string err;
  json report() const { return json::parse(out); }
};

Outcome invoke(std::vector<std::string> args) {
  args.insert(args.begin(), "framescale");
  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  std::ostringstream out, err;
  Outcome o;
  o.code = cli::run(static_cast<int>(argv.size()), argv.data(), out, err);
  o.out = out.str();
  o.err = err.str();
  return o;
}

std::string data(const std::string& name) { return std::string(FRAMESCALE_DATA_DIR) + "/" + name; }

std::filesystem::path scratch(const std::string& name) {
  const auto dir = std::filesystem::temp_directory_path() / "framescale_cli_test";
  std::filesystem::create_directories(dir);
  return dir / name;
}

void write(const std::filesystem::path& p, const std::string& text) { std::ofstream(p) << text; }

std::vector<std::vector<int>> sets(const json& j) { return j.get<std::vector<std::vector<int>>>(); }

}  // namespace

TEST_CASE("scalable", "[cli]") {
  auto o = invoke({"scalable", data("twovec.json")});
  REQUIRE(o.code == 0);
  CHECK(o.report()["result"]["scalable"] == false);
  CHECK(o.report()["command"] == "scalable");
  CHECK(o.report()["frame"]["n"] == 2);
  CHECK(o.report()["frame"]["k"] == 2);

  for (auto file : {"sixvec.json", "cross.json", "mercedes.json", "tetra.json", "contact.json", "onb3.json"}) {
    INFO(file);
    o = invoke({"scalable", data(file)});
    REQUIRE(o.code == 0);
    CHECK(o.report()["result"]["scalable"] == true);
  }
}

TEST_CASE("minimal-scalings", "[cli]") {
  for (std::string mode : {"float", "rational"}) {
    INFO(mode);
    auto o = invoke({"minimal-scalings", data("sixvec.json"), "--mode", mode});
    REQUIRE(o.code == 0);
    const auto r = o.report()["result"];
    CHECK(r["count"] == 9);
    CHECK(r["minimal_scalings"].size() == 9);
    CHECK(r["mbound"]["bound"] == 15);
    CHECK(r["mbound"]["holds"] == true);
    CHECK(o.report()["frame"]["mode"] == mode);
  }
  auto o = invoke({"minimal-scalings", data("mercedes.json")});
  REQUIRE(o.code == 0);
  CHECK(o.report()["result"]["count"] == 1);
  CHECK(o.report()["result"]["minimal_scalings"][0]["weights"] == json::array({"2/3", "2/3", "2/3"}));
  CHECK(invoke({"minimal-scalings", data("tetra.json")}).report()["result"]["count"] == 1);
  CHECK(invoke({"minimal-scalings", data("contact.json")}).report()["result"]["count"] == 8);

  o = invoke({"minimal-scalings", data("cross.json"), "--format", "csv"});
  REQUIRE(o.code == 0);
  CHECK(o.out == "support,w1,w2,w3,w4\n1 2,1,1,0,0\n1 4,1,0,0,1\n2 3,0,1,1,0\n3 4,0,0,1,1\n");
}

TEST_CASE("factor-poset and empty-cover", "[cli]") {
  auto o = invoke({"factor-poset", data("cross.json")});
  REQUIRE(o.code == 0);
  CHECK(sets(o.report()["result"]["poset"]) ==
        std::vector<std::vector<int>>{{}, {1, 2}, {1, 4}, {2, 3}, {3, 4}, {1, 2, 3, 4}});

  o = invoke({"empty-cover", data("cross.json")});
  REQUIRE(o.code == 0);
  CHECK(sets(o.report()["result"]["ec"]) == std::vector<std::vector<int>>{{1, 2}, {1, 4}, {2, 3}, {3, 4}});
  CHECK(o.report()["result"]["pairwise_disjoint"] == false);

  o = invoke({"empty-cover", data("sixvec.json"), "--scaling", data("sixvec_third.json")});
  REQUIRE(o.code == 0);
  CHECK(o.report()["result"]["ec"].size() == 9);

  for (std::vector<std::string> args : {std::vector<std::string>{"poset-dot", data("cross.json")},
                                        std::vector<std::string>{"factor-poset", data("cross.json"), "--format", "dot"}}) {
    o = invoke(args);
    REQUIRE(o.code == 0);
    CHECK(o.out.rfind("digraph", 0) == 0);
    CHECK(o.out.find("rankdir=BT") != std::string::npos);
    CHECK(o.out.find("{1,2,3,4}") != std::string::npos);
  }
}

TEST_CASE("decompose and prime", "[cli]") {
  auto o = invoke({"decompose", data("cross.json"), "--scaling", data("cross_half.json")});
  REQUIRE(o.code == 0);
  const auto d = o.report()["result"]["decomposition"];
  REQUIRE(d["blocks"].size() == 2);
  CHECK(d["blocks"][0]["lambda"] == 2);
  CHECK(d["unique"] == false);

  o = invoke({"decompose", data("sixvec.json"), "--scaling", data("sixvec_third.json"), "--mode", "rational", "--all"});
  REQUIRE(o.code == 0);
  const auto all = o.report()["result"]["decompositions"];
  CHECK(all.size() == 6);
  for (const auto& dec : all)
    for (const auto& b : dec["blocks"]) {
      CHECK(b["lambda"] == "3");
      CHECK(b["coefficients"] == json::array({"1/3"}));
    }

  o = invoke({"prime", data("sixvec.json"), "--scaling", data("sixvec_third.json")});
  REQUIRE(o.code == 0);
  CHECK(o.report()["result"]["prime"] == false);
  CHECK(o.report()["result"]["ec"].size() == 9);

  const auto third = scratch("mercedes_scaling.json");
  write(third, R"({"weights": ["2/3", "2/3", "2/3"]})");
  o = invoke({"prime", data("mercedes.json"), "--scaling", third.string()});
  REQUIRE(o.code == 0);
  CHECK(o.report()["result"]["prime"] == true);

  // not a scaling
  write(third, R"({"weights": [1, 1, 1]})");
  o = invoke({"prime", data("mercedes.json"), "--scaling", third.string()});
  CHECK(o.code == 2);
  CHECK(o.out.empty());
  CHECK(o.err.rfind("error: NotAScaling", 0) == 0);

  o = invoke({"prime", data("mercedes.json")});
  CHECK(o.code == 2);
}

TEST_CASE("affine-report and john-check", "[cli]") {
  auto o = invoke({"affine-report", data("cross.json")});
  REQUIRE(o.code == 0);
  auto r = o.report()["result"];
  CHECK(r["dependent"] == true);
  CHECK(r["condition2_witness"].is_number());
  CHECK(r["condition3_witness"].is_object());
  CHECK(r["condition4_witness"].is_object());

  o = invoke({"affine-report", data("sixvec.json"), "--max-vertices", "4"});
  REQUIRE(o.code == 0);
  CHECK(o.report()["result"]["witness_search_skipped"] == true);
  CHECK_FALSE(o.report()["warnings"].empty());

  o = invoke({"affine-report", data("onb3.json")});
  REQUIRE(o.code == 0);
  CHECK(o.report()["result"]["dependent"] == false);

  o = invoke({"john-check", data("sixvec.json"), "--scaling", data("sixvec_third.json")});
  REQUIRE(o.code == 0);
  CHECK(o.report()["result"]["john_decomposition"] == true);
  CHECK(o.report()["result"]["residual_max"].get<double>() < 1e-12);
  o = invoke({"john-check", data("sixvec.json"), "--scaling", data("sixvec_third.json"), "--mode", "rational"});
  REQUIRE(o.code == 0);
  CHECK(o.report()["result"]["john_decomposition"] == true);
  CHECK_FALSE(o.report()["result"].contains("residual_max"));
}

TEST_CASE("exported minimal scalings read back as John decompositions", "[cli][roundtrip]") {
  for (auto file : {"sixvec.json", "cross.json", "contact.json", "mercedes.json", "tetra.json"}) {
    INFO(file);
    const auto o = invoke({"minimal-scalings", data(file)});
    REQUIRE(o.code == 0);
    int idx = 0;
    for (const auto& v : o.report()["result"]["minimal_scalings"]) {
      const auto path = scratch("vertex_" + std::to_string(idx++) + ".json");
      write(path, json{{"weights", v["weights"]}}.dump());
      const auto john = invoke({"john-check", data(file), "--scaling", path.string()});
      REQUIRE(john.code == 0);
      CHECK(john.report()["result"]["john_decomposition"] == true);
      const auto prime = invoke({"prime", data(file), "--scaling", path.string()});
      REQUIRE(prime.code == 0);
      CHECK(prime.report()["result"]["prime"] == true);
    }
  }
}

TEST_CASE("output is deterministic", "[cli]") {
  for (const auto& cmd : cli::subcommands()) {
    INFO(cmd);
    std::vector<std::string> args = {cmd, data("sixvec.json")};
    if (cmd == "john-check" || cmd == "decompose" || cmd == "prime") {
      args.push_back("--scaling");
      args.push_back(data("sixvec_third.json"));
    }
    const auto a = invoke(args);
    REQUIRE(a.code == 0);
    CHECK(invoke(args).out == a.out);
    args.push_back("--threads");
    args.push_back("3");
    CHECK(invoke(args).out == a.out);
  }
}

TEST_CASE("--out writes the report to a file", "[cli]") {
  const auto path = scratch("report.json");
  std::filesystem::remove(path);
  const auto o = invoke({"minimal-scalings", data("cross.json"), "--out", path.string()});
  REQUIRE(o.code == 0);
  CHECK(o.out.empty());
  std::ifstream in(path);
  std::stringstream buf;
  buf << in.rdbuf();
  CHECK(buf.str() == invoke({"minimal-scalings", data("cross.json")}).out);
}

TEST_CASE("--timing adds a timing block", "[cli]") {
  const auto o = invoke({"scalable", data("cross.json"), "--timing"});
  REQUIRE(o.code == 0);
  CHECK(o.report()["timing"]["seconds"].get<double>() >= 0.0);
}

TEST_CASE("size caps refuse every subcommand", "[cli][cap]") {
  for (const auto& cmd : cli::subcommands()) {
    INFO(cmd);
    const auto o = invoke({cmd, data("sixvec.json"), "--scaling", data("sixvec_third.json"), "--max-k", "5"});
    CHECK(o.code == 3);
    CHECK(o.out.empty());
    CHECK(o.err.rfind("error: TooLarge", 0) == 0);
    CHECK(invoke({cmd, data("sixvec.json"), "--scaling", data("sixvec_third.json"), "--max-k", "6"}).code == 0);
  }
}

TEST_CASE("usage and input errors", "[cli][errors]") {
  const std::vector<std::vector<std::string>> bad = {
      {"nonsense", data("cross.json")},
      {"scalable"},
      {"scalable", data("cross.json"), "--mode", "complex"},
      {"scalable", data("cross.json"), "--format", "xml"},
      {"scalable", data("cross.json"), "--tol", "-1"},
      {"scalable", data("cross.json"), "--max-k", "0"},
      {"scalable", data("missing.json")},
      {"scalable", data("cross_half.json")},
  };
  for (const auto& args : bad) {
    INFO(args.front() << " " << (args.size() > 1 ? args[1] : ""));
    const auto o = invoke(args);
    CHECK(o.code == 2);
    CHECK(o.out.empty());
    CHECK(o.err.rfind("error: ", 0) == 0);
    CHECK(std::count(o.err.begin(), o.err.end(), '\n') == 1);
  }
  const auto bad_json = scratch("broken.json");
  write(bad_json, "{\"dimension\": 2, ");
  CHECK(invoke({"scalable", bad_json.string()}).code == 2);
}
