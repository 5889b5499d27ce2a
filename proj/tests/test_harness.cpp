#include <gtest/gtest.h>

#include <algorithm>
#include <cmath>
#include <sstream>

#include "setchrome/harness.hpp"

using namespace setchrome;
using namespace setchrome::harness;

namespace {

std::size_t config_error_line(const std::string& text) {
  try {
    parse_config(text);
  } catch (const ParseError& e) {
    return e.line();
  }
  ADD_FAILURE() << "no error for: " << text;
  return 0;
}

}  // namespace

TEST(Config, ParsesAllKeys) {
  const auto cfg = parse_config(
      "# sweep\n"
      "n_grid = 8, 16\n"
      "p_grid = 0.3,0.5\n"
      "trials = 4\n"
      "omega = 6\n"
      "seed_base = 99\n"
      "exact_cutoff = 9\n"
      "output_path = out.csv\n");
  EXPECT_EQ(cfg.n_grid, (std::vector<std::size_t>{8, 16}));
  EXPECT_EQ(cfg.p_grid, (std::vector<double>{0.3, 0.5}));
  EXPECT_EQ(cfg.trials, 4U);
  EXPECT_EQ(cfg.omega, 6U);
  EXPECT_EQ(cfg.seed_base.value, 99U);
  EXPECT_EQ(cfg.exact_cutoff, 9U);
  EXPECT_EQ(cfg.output_path, "out.csv");
}

TEST(Config, Errors) {
  EXPECT_EQ(config_error_line("n_grid = 8\np_grid = 0.5\nbogus = 1\n"), 3U);
  EXPECT_EQ(config_error_line("n_grid = 8\nn_grid = 9\np_grid = 0.5\n"), 2U);
  EXPECT_EQ(config_error_line("n_grid = 8, x\np_grid = 0.5\n"), 1U);
  EXPECT_EQ(config_error_line("n_grid 8\n"), 1U);
  EXPECT_EQ(config_error_line("trials = -3\n"), 1U);
  EXPECT_THROW(parse_config("p_grid = 0.5\n"), ParameterError);
  EXPECT_THROW(parse_config("n_grid = 8\np_grid = 1.5\n"), ParameterError);
  EXPECT_THROW(parse_config("n_grid = 8\np_grid = 0.5\nexact_cutoff = 13\n"), ParameterError);
}

TEST(Experiment, SmallCellSandwich) {
  ExperimentConfig cfg;
  cfg.n_grid = {8};
  cfg.p_grid = {0.5};
  cfg.trials = 50;
  cfg.exact_cutoff = 8;
  cfg.seed_base = Seed{5};
  const auto rows = run_experiment(cfg, 1);
  ASSERT_EQ(rows.size(), 50U);
  for (const auto& r : rows) {
    ASSERT_TRUE(r.exact_chi && r.exact_chis);
    EXPECT_LE(*r.exact_chis, *r.exact_chi);
    EXPECT_GE(static_cast<double>(*r.exact_chis), r.trivial_lower - 1e-12);
    EXPECT_EQ(r.trivial_upper, static_cast<double>(*r.exact_chi));
    EXPECT_LE(*r.exact_chi, r.greedy_chi);
    EXPECT_FALSE(r.constructive_colours.has_value());  // 8 vertices cannot hold the blocks
  }
}

TEST(Experiment, ConstructiveCellAt1024) {
  ExperimentConfig cfg;
  cfg.n_grid = {1024};
  cfg.p_grid = {0.5};
  cfg.trials = 40;
  const auto rows = run_experiment(cfg, 0);
  int valid = 0;
  for (const auto& r : rows) {
    ASSERT_TRUE(r.constructive_colours);
    EXPECT_EQ(*r.constructive_colours, 30U);
    valid += r.constructive_valid;
    EXPECT_EQ(r.regime, theory::Regime::DenseConst);
    EXPECT_NEAR(r.envelope_lower, 20.0, 1e-9);
  }
  EXPECT_GE(valid, 38);
}

TEST(Experiment, DeterministicAcrossThreadCounts) {
  ExperimentConfig cfg;
  cfg.n_grid = {10, 200};
  cfg.p_grid = {0.2, 0.6};
  cfg.trials = 6;
  cfg.exact_cutoff = 10;
  cfg.seed_base = Seed{123};
  std::ostringstream a, b;
  write_experiment_csv(a, run_experiment(cfg, 1));
  write_experiment_csv(b, run_experiment(cfg, 4));
  const std::string text = a.str();
  EXPECT_EQ(text, b.str());
  EXPECT_EQ(text.rfind(kSchemaLine, 0), 0U);
  EXPECT_NE(text.find("infeasible"), std::string::npos);
  EXPECT_EQ(std::count(text.begin(), text.end(), '\n'), 2 + 24);
}

TEST(Experiment, SeedsFollowCellAndTrial) {
  ExperimentConfig cfg;
  cfg.n_grid = {5, 6};
  cfg.p_grid = {0.5, 0.7};
  cfg.trials = 2;
  cfg.seed_base = Seed{1};
  const auto rows = run_experiment(cfg, 1);
  ASSERT_EQ(rows.size(), 8U);
  EXPECT_EQ(rows[0].seed.value, derive_seed(Seed{1}, 0, 0).value);
  EXPECT_EQ(rows[3].seed.value, derive_seed(Seed{1}, 1, 1).value);
  EXPECT_EQ(rows[7].seed.value, derive_seed(Seed{1}, 3, 1).value);
  EXPECT_EQ(rows[5].n, 6U);
  EXPECT_EQ(rows[5].p, 0.5);
}

TEST(Domination, SetSizeAndErrors) {
  EXPECT_EQ(domination_set_size(2000, 0.3), 51U);
  EXPECT_EQ(domination_set_size(100, 0.9), 11U);
  EXPECT_EQ(domination_set_size(1000, 0.088), 157U);
  EXPECT_THROW(domination_check(50, 0.1, 1, Seed{}), ParameterError);  // m = 79 >= n
  EXPECT_THROW(domination_check(1, 0.5, 1, Seed{}), ParameterError);
  EXPECT_THROW(domination_check(100, 0.0, 1, Seed{}), ParameterError);
}

TEST(Domination, CountsAndCsv) {
  Graph star(5);
  for (Vertex v = 1; v < 5; ++v) star.add_edge(0, v);
  const std::vector<Vertex> centre{0}, leaf{1};
  EXPECT_EQ(undominated_count(star, centre), 0U);
  EXPECT_EQ(undominated_count(star, leaf), 3U);

  const auto rows = domination_check(300, 0.5, 10, Seed{4});
  ASSERT_EQ(rows.size(), 10U);
  for (const auto& r : rows) {
    EXPECT_EQ(r.set_size, domination_set_size(300, 0.5));
    EXPECT_EQ(r.pass, r.undominated_count <= r.set_size);
  }
  std::ostringstream out;
  write_domination_csv(out, rows);
  EXPECT_NE(out.str().find("trial,set_size,undominated_count,pass\n0,"), std::string::npos);
}

TEST(Domination, SampledSubsetsAreDistinct) {
  Rng rng = make_rng(Seed{3});
  for (int i = 0; i < 100; ++i) {
    auto s = sample_subset(80, 30, rng);
    std::sort(s.begin(), s.end());
    EXPECT_EQ(std::adjacent_find(s.begin(), s.end()), s.end());
    EXPECT_LT(s.back(), 80U);
  }
}

TEST(Classifier, Thresholds) {
  const Colouring c({1, 1, 1, 2, 3, 3}, 3);
  const auto a = important_colour_classifier(c, 1000, 0.5);
  EXPECT_NEAR(a.threshold, 27.631021115928547, 1e-9);
  EXPECT_EQ(a.important, (std::vector<Colour>{1, 2, 3}));
  const auto b = important_colour_classifier(c, 10, 0.25);
  EXPECT_NEAR(b.threshold, 18.420680743952367, 1e-9);
  std::vector<Colour> big(30, 1);
  big.push_back(2);
  const auto d = important_colour_classifier(Colouring(big, 2), 1000, 0.5);
  EXPECT_EQ(d.important, std::vector<Colour>{2});
  EXPECT_EQ(d.unimportant, std::vector<Colour>{1});
}

TEST(Figures, Tables) {
  const auto f = emit_figures(0.01, 0.99, 0.001);
  EXPECT_EQ(f.rows, 981U);
  EXPECT_EQ(f.r_table.rfind("p,r\n0.01,", 0), 0U);
  EXPECT_EQ(f.s_table.rfind("p,s\n0.01,", 0), 0U);
  EXPECT_NE(f.r_table.find("\n0.5,2\n"), std::string::npos);
  EXPECT_NE(f.s_table.find("\n0.5,0.5\n"), std::string::npos);
}

TEST(ParallelFor, CoversEveryIndexOnce) {
  std::vector<int> hits(1000, 0);
  parallel_for(hits.size(), 3, [&](std::size_t i) { ++hits[i]; });
  EXPECT_TRUE(std::all_of(hits.begin(), hits.end(), [](int h) { return h == 1; }));
}
