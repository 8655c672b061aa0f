#include <gtest/gtest.h>

#include <filesystem>
#include <fstream>
#include <json.hpp>
#include <sstream>

#include "commands.hpp"
#include "dimspec/graph.hpp"
#include "fixtures.hpp"

namespace dimspec {
namespace {

namespace fs = std::filesystem;
using nlohmann::json;

struct Result {
  int code;
  std::string out;
  std::string err;
};

class CliTest : public ::testing::Test {
 protected:
  void SetUp() override {
    dir_ = fs::temp_directory_path() /
           ("dimspec_cli_" + std::string(::testing::UnitTest::GetInstance()->current_test_info()->name()));
    fs::create_directories(dir_);
  }
  void TearDown() override { fs::remove_all(dir_); }

  std::string file(const std::string& name, const Graph& g) {
    const auto path = (dir_ / name).string();
    write_graph_file(g, path);
    return path;
  }

  std::string raw_file(const std::string& name, const std::string& text) {
    const auto path = (dir_ / name).string();
    std::ofstream(path) << text;
    return path;
  }

  static Result run(std::vector<std::string> args) {
    args.insert(args.begin(), "dimspec");
    std::vector<const char*> argv;
    for (const auto& a : args) argv.push_back(a.c_str());
    std::ostringstream out, err;
    const int code = cli::run(static_cast<int>(argv.size()), argv.data(), out, err);
    return {code, out.str(), err.str()};
  }

  fs::path dir_;
};

TEST_F(CliTest, SpectraText) {
  const auto cdim = file("cdim33.txt", generate_cdim(3, 3));
  EXPECT_EQ(run({"spectra", cdim, "--matrix", "l"}).out, "9, 6^[2], 5^[3], 3^[2], 0\n");
  EXPECT_EQ(run({"spectra", file("k2.txt", testing::k2()), "--matrix", "a"}).out, "1, -1\n");
  EXPECT_EQ(run({"spectra", file("dim9.txt", testing::dim9_graph()), "--matrix", "q"}).out,
            "5.7321, 4.4142, 4, 2.2679, 1.5858, 1^[4]\n");
}

TEST_F(CliTest, SpectraJson) {
  const auto r = run({"spectra", file("k2.txt", testing::k2()), "--matrix", "laplacian", "--json"});
  ASSERT_EQ(r.code, 0);
  const json env = json::parse(r.out);
  EXPECT_EQ(env["command"], "spectra");
  EXPECT_EQ(env["format_version"], 1);
  EXPECT_EQ(env["input_digest"], cli::digest("n 2\n1 2\n"));
  EXPECT_EQ(env["result"]["matrix"], "laplacian");
  EXPECT_NEAR(env["result"]["values"][0].get<double>(), 2.0, 1e-12);
  EXPECT_EQ(env["result"]["groups"].size(), 2u);
}

TEST_F(CliTest, SpectraErrors) {
  EXPECT_EQ(run({"spectra", raw_file("bad.txt", "n 3\n1 4\n")}).code, 2);
  EXPECT_EQ(run({"spectra", (dir_ / "missing.txt").string()}).code, 2);
  EXPECT_EQ(run({"spectra", file("k2.txt", testing::k2()), "--matrix", "z"}).code, 2);
  EXPECT_EQ(run({"nonsense"}).code, 2);
  EXPECT_EQ(run({}).code, 2);
}

TEST_F(CliTest, Recognize) {
  EXPECT_EQ(run({"recognize", file("cdim.txt", generate_cdim(3, 3))}).out, "complete DIM: 1-2 3-4 5-6\n");
  EXPECT_EQ(run({"recognize", file("c4.txt", testing::cycle_graph(4))}).out, "none\n");
  EXPECT_EQ(run({"recognize", file("k3.txt", testing::complete_graph(3))}).out, "complete DIM: 1-2\n");

  const json env = json::parse(run({"recognize", file("k3.txt", testing::complete_graph(3)), "--json"}).out);
  EXPECT_TRUE(env["result"]["complete"].get<bool>());
  EXPECT_EQ(env["result"]["matching"], json::parse("[[1,2]]"));
  EXPECT_EQ(env["result"]["independent"], json::parse("[3]"));
  EXPECT_TRUE(env["result"]["spectral_agrees"].get<bool>());
}

TEST_F(CliTest, BoundsText) {
  const auto r = run({"bounds", file("dim9.txt", testing::dim9_graph())});
  ASSERT_EQ(r.code, 0);
  EXPECT_NE(r.out.find("DIM size window: [1, 4] (roots 0.254"), std::string::npos) << r.out;
  EXPECT_NE(r.out.find("adjacency lower bound: 3 (raw 2.045"), std::string::npos) << r.out;
  EXPECT_NE(r.out.find("signless lower bound: 2 (raw 1.068"), std::string::npos) << r.out;
  EXPECT_NE(r.out.find("induced matching upper bound: 3"), std::string::npos) << r.out;

  EXPECT_NE(run({"bounds", file("k2.txt", testing::k2())}).out.find("DIM size window: [0, 1]"), std::string::npos);

  const auto empty = run({"bounds", file("e.txt", Graph::null_graph(4))});
  EXPECT_NE(empty.out.find("adjacency lower bound: not applicable"), std::string::npos) << empty.out;
  EXPECT_NE(empty.out.find("signless lower bound: not applicable"), std::string::npos);
}

// Text and JSON report the same numbers.
TEST_F(CliTest, BoundsJsonMatchesText) {
  const json env = json::parse(run({"bounds", file("dim9.txt", testing::dim9_graph()), "--json"}).out);
  const json& r = env["result"];
  EXPECT_EQ(r["window"]["lo"], 1);
  EXPECT_EQ(r["window"]["hi"], 4);
  EXPECT_NEAR(r["window"]["root_lo"].get<double>(), 0.254017, 1e-4);
  EXPECT_EQ(r["lb_adjacency"]["value"], 3);
  EXPECT_EQ(r["lb_signless"]["value"], 2);
  EXPECT_EQ(r["ub_lambda_count"]["value"], 3);
  EXPECT_NEAR(r["rho_a"].get<double>(), 2.6364, 1e-4);

  const json e = json::parse(run({"bounds", file("e.txt", Graph::null_graph(3)), "--json"}).out);
  EXPECT_FALSE(e["result"]["lb_laplacian"]["applicable"].get<bool>());
}

TEST_F(CliTest, Oracle) {
  const auto dim9 = run({"oracle", file("dim9.txt", testing::dim9_graph())});
  EXPECT_NE(dim9.out.find("{1-2 3-4 5-6}"), std::string::npos) << dim9.out;
  EXPECT_NE(dim9.out.find("max induced matching: 3"), std::string::npos);
  EXPECT_EQ(run({"oracle", file("c4.txt", testing::cycle_graph(4))}).out, "no DIM\nmax induced matching: 1\n");

  const auto big = run({"oracle", file("k10.txt", testing::complete_graph(10))});
  EXPECT_EQ(big.code, 4);
  EXPECT_NE(big.err.find("size guard"), std::string::npos);
  EXPECT_EQ(run({"oracle", file("dim9.txt", testing::dim9_graph()), "--max-edges", "5"}).code, 4);
}

TEST_F(CliTest, Generate) {
  const auto path = (dir_ / "out.txt").string();
  ASSERT_EQ(run({"generate", "--m", "3", "--s", "3", path}).code, 0);
  const Graph g = read_graph_file(path);
  EXPECT_EQ(g.order(), 9);
  EXPECT_EQ(g.size(), 21u);

  EXPECT_EQ(run({"generate", "--m", "1", "--s", "1"}).out, "n 3\n1 2\n1 3\n2 3\n");
  EXPECT_EQ(run({"generate", "--m", "0", "--s", "3"}).code, 2);
  EXPECT_EQ(run({"generate", "--m", "2"}).code, 2);
}

TEST_F(CliTest, Sweep) {
  const auto r = run({"sweep", "--n", "4"});
  EXPECT_EQ(r.code, 0);
  EXPECT_NE(r.out.find("violations: 0"), std::string::npos) << r.out;
  EXPECT_EQ(run({"sweep", "--n", "7"}).code, 4);
  EXPECT_EQ(run({"sweep", "--n", "5", "--mode", "sideways"}).code, 2);

  const json env = json::parse(run({"sweep", "--n", "6", "--mode", "random", "--count", "50", "--seed", "3",
                                    "--json"}).out);
  EXPECT_EQ(env["command"], "sweep");
  EXPECT_EQ(env["result"]["graphs"], 50);
  EXPECT_EQ(env["result"]["config"]["seed"], 3);
  EXPECT_EQ(env["result"]["total_violations"], 0);
}

TEST(DigestTest, KnownValue) {
  EXPECT_EQ(cli::digest("abc"), "sha256:ba7816bf8f01cfea414140de5dae2223b00361a396177a9cb410ff61f20015ad");
}

}  // namespace
}  // namespace dimspec
