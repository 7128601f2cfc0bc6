#include <gtest/gtest.h>

#include <sstream>

#include "witsen/bench.hpp"
#include "witsen/verify.hpp"

namespace witsen {
namespace {

VerifyLimits small_limits() {
  VerifyLimits l;
  l.sidon_max_k = 5;
  l.sandwich_max_n = 4;
  l.reduction_max_n = 3;
  l.zsupport_max_n = 4;
  l.ratio_trials = 20;
  return l;
}

std::string render(const VerifyReport& rep) {
  std::ostringstream os;
  write_table(os, rep);
  return to_json(rep).dump() + os.str();
}

TEST(Verify, SmallScopesPass) {
  VerifyReport rep = run_verify(VerifyScope::All, small_limits(), 3);
  EXPECT_TRUE(rep.all_pass()) << render(rep);
  EXPECT_GT(rep.records.size(), 100u);
}

TEST(Verify, SameSeedSameBytes) {
  EXPECT_EQ(render(run_verify(VerifyScope::Ratio, small_limits(), 9)),
            render(run_verify(VerifyScope::Ratio, small_limits(), 9)));
  EXPECT_NE(render(run_verify(VerifyScope::Ratio, small_limits(), 9)),
            render(run_verify(VerifyScope::Ratio, small_limits(), 10)));
}

TEST(Verify, ZSupportTallyCounts) {
  // 2^(n choose 2) - 1 graphs with an edge, n (n - 1) ordered pairs each.
  ZSupportTally t = zsupport_tally(4);
  EXPECT_EQ(t.graphs, 63u);
  EXPECT_EQ(t.pairs, 63u * 12);
  EXPECT_EQ(t.membership_violations, 0u);
  EXPECT_EQ(t.count_violations, 0u);
}

TEST(Verify, CorpusShortfallFails) {
  VerifyLimits l = small_limits();
  l.budget = 0;
  VerifyReport rep = verify_ratio(5, 1, l);
  EXPECT_FALSE(rep.all_pass());
  EXPECT_EQ(rep.records.back().check, "approx.ratio_corpus");
  EXPECT_FALSE(rep.records.back().pass);
}

TEST(Verify, CalibrationRecordsPass) {
  EXPECT_TRUE(verify_reduction_calibration().all_pass());
  EXPECT_TRUE(delta_tie_record().pass);
}

std::string strip_times(const std::string& csv) {
  std::istringstream in(csv);
  std::string line, out;
  while (std::getline(in, line)) out += line.substr(0, line.rfind(',')) + "\n";
  return out;
}

TEST(Bench, DeterministicRows) {
  BenchSpec spec;
  spec.trials = 6;
  spec.seed = 42;
  std::ostringstream a, b;
  run_bench(spec, a);
  run_bench(spec, b);
  EXPECT_EQ(strip_times(a.str()), strip_times(b.str()));
  std::istringstream in(a.str());
  std::string line;
  std::getline(in, line);
  EXPECT_EQ(line, kBenchHeader);
  int rows = 0;
  while (std::getline(in, line)) {
    EXPECT_EQ(std::count(line.begin(), line.end(), ','), 7);
    ++rows;
  }
  EXPECT_EQ(rows, 6);
}

TEST(Bench, EmptyFamilyIsHeaderOnly) {
  BenchSpec spec;
  spec.trials = 0;
  std::ostringstream os;
  run_bench(spec, os);
  EXPECT_EQ(os.str(), std::string(kBenchHeader) + "\n");
}

TEST(Bench, OverBudgetIsNA) {
  BenchSpec spec;
  spec.n = 50;
  spec.family.x_range = 30;
  spec.trials = 1;
  spec.fixed_k = Rational(1000);
  std::ostringstream os;
  run_bench(spec, os);
  std::string row = os.str().substr(os.str().find('\n') + 1);
  EXPECT_NE(row.find(",NA,NA,"), std::string::npos) << row;
}

TEST(Bench, InvalidSpec) {
  BenchSpec spec;
  spec.n = 0;
  std::ostringstream os;
  EXPECT_THROW(run_bench(spec, os), Error);
  spec.n = 100;
  spec.family.x_range = 10;
  EXPECT_THROW(run_bench(spec, os), Error);
}

}  // namespace
}  // namespace witsen
