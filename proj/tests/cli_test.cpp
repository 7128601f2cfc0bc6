#include <gtest/gtest.h>
#include <sys/wait.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "witsen/json_io.hpp"

namespace fs = std::filesystem;

namespace {

class Cli : public ::testing::Test {
 protected:
  void SetUp() override {
    dir_ = fs::temp_directory_path() / ("witsen_cli_test_" + std::to_string(::getpid()));
    fs::create_directories(dir_);
  }
  void TearDown() override { fs::remove_all(dir_); }

  std::string path(const std::string& name) const { return (dir_ / name).string(); }

  void write(const std::string& name, const std::string& text) const { std::ofstream(path(name)) << text; }

  std::string read(const std::string& name) const {
    std::ifstream in(path(name));
    std::stringstream ss;
    ss << in.rdbuf();
    return ss.str();
  }

  // Exit status of the CLI; stdout goes to out.txt.
  int run(const std::string& args) const {
    std::string cmd = std::string(WITSEN_CLI_PATH) + " " + args + " > " + path("out.txt") + " 2> " + path("err.txt");
    int status = std::system(cmd.c_str());
    return WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  }

  fs::path dir_;
};

const char* kK2 = "c single edge\np edge 2 1\ne 1 2\n";
const char* kTwoPoint = R"({"x0": [{"value": "0", "prob": {"num": "1", "den": "2"}},
                                   {"value": "1", "prob": {"num": "1", "den": "2"}}],
                            "z":  [{"value": "0", "prob": {"num": "1", "den": "2"}},
                                   {"value": "1", "prob": {"num": "1", "den": "2"}}],
                            "k":  {"num": "100", "den": "1"}})";

TEST_F(Cli, Sidon) {
  ASSERT_EQ(run("sidon --k 3"), 0);
  EXPECT_EQ(witsen::Json::parse(read("out.txt")), witsen::Json::parse(R"(["1", "21", "5121"])"));
  EXPECT_EQ(run("sidon --k 0"), 2);
  EXPECT_EQ(run("sidon --k 2 --order 3"), 2);
}

TEST_F(Cli, ReduceAndSolve) {
  write("k2.dimacs", kK2);
  ASSERT_EQ(run("reduce --graph " + path("k2.dimacs") + " --output " + path("k2.json")), 0);
  auto side = witsen::Json::parse(read("k2.json.sidecar.json"));
  EXPECT_EQ(side["scale"], "16");
  EXPECT_EQ(side["x_values"], witsen::Json::parse(R"(["16", "336"])"));

  ASSERT_EQ(run("solve-exact --instance " + path("k2.json")), 0);
  auto exact = witsen::Json::parse(read("out.txt"));
  EXPECT_EQ(exact["cost"]["total"]["num"], "1");
  EXPECT_EQ(exact["cost"]["total"]["den"], "2");

  ASSERT_EQ(run("l2chrom --graph " + path("k2.dimacs")), 0);
  auto l2 = witsen::Json::parse(read("out.txt"));
  EXPECT_EQ(l2["gamma_star"]["num"], "1");
  EXPECT_EQ(l2["gamma_star"]["den"], "2");
}

TEST_F(Cli, ApproxAndEval) {
  write("inst.json", kTwoPoint);
  ASSERT_EQ(run("solve-approx --instance " + path("inst.json") + " --format csv"), 0);
  EXPECT_EQ(read("out.txt"), "k,total_num,total_den\n0,1,2\n1,1,2\n2,25,1\n");

  write("strategy.json", R"({"t": [["0", "0"], ["1", "1"]], "delta": [["0", "0"], ["1", "0"], ["2", "-1"]]})");
  ASSERT_EQ(run("eval --instance " + path("inst.json") + " --strategy " + path("strategy.json")), 0);
  EXPECT_EQ(witsen::Json::parse(read("out.txt"))["total"]["num"], "25");

  write("partial.json", R"({"t": [["0", "0"]], "delta": []})");
  EXPECT_EQ(run("eval --instance " + path("inst.json") + " --strategy " + path("partial.json")), 2);
}

TEST_F(Cli, ExitCodes) {
  write("inst.json", kTwoPoint);
  write("bad.json", "{not json");
  EXPECT_EQ(run("solve-exact --instance " + path("bad.json")), 2);
  EXPECT_EQ(run("solve-exact --instance " + path("missing.json")), 2);
  EXPECT_EQ(run("frobnicate"), 2);
  EXPECT_EQ(run("sidon --k 2 --format xml"), 2);
  EXPECT_EQ(run("solve-exact --instance " + path("inst.json") + " --budget 2"), 3);
  EXPECT_EQ(run("verify sidon --max-k 3"), 0);
  EXPECT_EQ(run("verify ratio --trials 3 --budget 0"), 1);
  write("loop.dimacs", "p edge 2 1\ne 1 1\n");
  EXPECT_EQ(run("reduce --graph " + path("loop.dimacs")), 2);
  write("empty.dimacs", "p edge 3 0\n");
  EXPECT_EQ(run("reduce --graph " + path("empty.dimacs")), 2);
}

TEST_F(Cli, VerifyIsByteStable) {
  ASSERT_EQ(run("verify sandwich --max-n 3 --seed 7 --output " + path("a.json") + " --format json"), 0);
  ASSERT_EQ(run("--seed 7 verify sandwich --max-n 3 --output " + path("b.json") + " --format json"), 0);
  EXPECT_EQ(read("a.json"), read("b.json"));
  EXPECT_FALSE(read("a.json").empty());
}

TEST_F(Cli, BenchCsv) {
  ASSERT_EQ(run("bench --n 2 --z-size 2 --trials 3 --seed 5"), 0);
  std::string out = read("out.txt");
  EXPECT_EQ(out.substr(0, out.find('\n')), "instance_id,n,z_size,k,approx_cost,exact_cost,ratio,wall_time_ms");
  EXPECT_EQ(std::count(out.begin(), out.end(), '\n'), 4);
  EXPECT_EQ(run("bench --n 0"), 2);
}

}  // namespace
