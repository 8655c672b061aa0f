#include <gtest/gtest.h>

#include "dimspec/errors.hpp"
#include "dimspec/oracle.hpp"
#include "dimspec/sweep.hpp"
#include "fixtures.hpp"

namespace dimspec {
namespace {

SweepReport strip_jobs(SweepReport r) {
  r.config.jobs = 1;
  return r;
}

TEST(SweepTest, ExhaustiveSmallOrdersAreClean) {
  for (int n = 1; n <= 5; ++n) {
    SweepConfig config;
    config.n = n;
    const SweepReport r = run_sweep(config);
    EXPECT_EQ(r.graphs, AllGraphs(n).count());
    EXPECT_EQ(r.total_violations(), 0u) << "n = " << n << ": "
                                        << (r.violations.empty() ? "" : r.violations.front().detail);
    EXPECT_GT(r.graphs_with_dim, 0u);
  }
}

TEST(SweepTest, CountersOnN4) {
  SweepConfig config;
  config.n = 4;
  const SweepReport r = run_sweep_serial(config);
  EXPECT_EQ(r.graphs, 64u);
  EXPECT_EQ(r.connected_graphs, 38u);
  // The diamond K2 v 2K1 is the equality case at n = 4.
  EXPECT_GT(r.index_equalities, 0u);
  EXPECT_EQ(r.evaluated[static_cast<std::size_t>(Check::LaplacianOrder)], 64u);
}

TEST(SweepTest, ParallelMatchesSerial) {
  SweepConfig config;
  config.n = 5;
  const SweepReport serial = run_sweep_serial(config);
  for (int jobs : {1, 2, 3}) {
    config.jobs = jobs;
    EXPECT_EQ(strip_jobs(run_sweep(config)), serial) << "jobs = " << jobs;
  }

  SweepConfig random;
  random.mode = SweepMode::Random;
  random.n = 8;
  random.count = 300;
  random.seed = 9;
  const SweepReport rs = run_sweep_serial(random);
  random.jobs = 2;
  EXPECT_EQ(strip_jobs(run_sweep(random)), rs);
  EXPECT_EQ(rs.total_violations(), 0u);
}

TEST(SweepTest, SingleGraphCounters) {
  SweepReport r;
  sweep_graph(testing::k2(), 0, r);
  EXPECT_EQ(r.graphs, 1u);
  EXPECT_EQ(r.graphs_with_dim, 1u);
  EXPECT_EQ(r.total_violations(), 0u);
  EXPECT_GT(r.evaluated[static_cast<std::size_t>(Check::Window)], 0u);
}

TEST(SweepTest, ConfigGuards) {
  SweepConfig config;
  config.n = 7;
  EXPECT_THROW(validate_sweep_config(config), SizeGuardError);
  EXPECT_THROW(run_sweep(config), SizeGuardError);
  config.mode = SweepMode::Random;
  EXPECT_NO_THROW(validate_sweep_config(config));
  config.n = 10;
  EXPECT_THROW(validate_sweep_config(config), SizeGuardError);
  config.n = 8;
  config.edge_probability = -0.1;
  EXPECT_THROW(validate_sweep_config(config), InputError);
  config.edge_probability = 0.5;
  config.jobs = 0;
  EXPECT_THROW(validate_sweep_config(config), InputError);
}

TEST(SweepTest, CheckNames) {
  EXPECT_EQ(to_string(Check::Window), "window");
  EXPECT_EQ(to_string(Check::RecognitionSpectral), "recognition_spectral");
}

}  // namespace
}  // namespace dimspec
