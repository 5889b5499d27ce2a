// setchrome: command-line front end for the setchrome library.
//
// Tables go out as CSV, single evaluations as one JSON object per line.
// Exit status: 0 success, 2 bad parameters or input, 3 I/O failure.

#include <CLI11.hpp>
#include <json.hpp>

#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "setchrome/setchrome.hpp"

namespace {

using json = nlohmann::json;
using namespace setchrome;

constexpr int kExitParameter = 2;
constexpr int kExitIo = 3;

// Writes to `path`, or stdout for "" and "-".
void emit(const std::string& path, const std::string& text) {
  if (path.empty() || path == "-") {
    std::cout << text;
    std::cout.flush();
    return;
  }
  std::ofstream out(path, std::ios::binary);
  if (!out) throw IoError("cannot open " + path + " for writing");
  out << text;
  if (!out) throw IoError("write to " + path + " failed");
}

json optional_json(const std::optional<double>& v) { return v ? json(*v) : json(nullptr); }

json theory_point_json(const theory::TheoryPoint& t) {
  return {{"n", t.n},
          {"p", t.p},
          {"ell0", t.ell0},
          {"s", t.s},
          {"r_const", t.r_const},
          {"r_upper", optional_json(t.r_upper)},
          {"r_lower", optional_json(t.r_lower)},
          {"alpha", t.alpha},
          {"regime", std::string(theory::regime_name(t.envelope.regime))},
          {"lower_bound", t.envelope.lower},
          {"upper_bound", t.envelope.upper},
          {"envelope", "asymptotic"},
          {"trivial_lower", optional_json(t.envelope.trivial_lower)},
          {"trivial_upper", optional_json(t.envelope.trivial_upper)},
          {"in_hypothesis_range", t.envelope.in_hypothesis_range}};
}

std::vector<std::uint64_t> to_u64(const std::vector<long long>& v) {
  std::vector<std::uint64_t> out;
  for (auto x : v) {
    if (x < 1) throw ParameterError("class sizes must be positive");
    out.push_back(static_cast<std::uint64_t>(x));
  }
  return out;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Set colourings of random graphs: parameters, constructions, exact solvers, bounds"};
  app.require_subcommand(1);
  std::function<void()> action;

  // theory
  auto* theory_cmd = app.add_subcommand("theory", "Parameter functions of (n, p)");
  theory_cmd->require_subcommand(1);
  double p_min = 0.01, p_max = 0.99, step = 0.001;
  std::optional<double> table_n;
  std::string out_path = "-";
  auto* table_cmd = theory_cmd->add_subcommand("table", "CSV of p, ell0, s, r over a p grid");
  table_cmd->add_option("--p-min", p_min)->capture_default_str();
  table_cmd->add_option("--p-max", p_max)->capture_default_str();
  table_cmd->add_option("--step", step)->capture_default_str();
  table_cmd->add_option("--n", table_n, "Also report r_upper and r_lower at this n");
  table_cmd->add_option("-o,--output", out_path)->capture_default_str();
  table_cmd->callback([&] {
    action = [&] {
      std::ostringstream out;
      theory::write_zigzag_csv(out, theory::zigzag_table(p_min, p_max, step, table_n), table_n.has_value());
      emit(out_path, out.str());
    };
  });

  double point_n = 0, point_p = 0;
  theory::RegimeThresholds thresholds;
  auto* point_cmd = theory_cmd->add_subcommand("point", "JSON of every parameter at one (n, p)");
  point_cmd->add_option("--n", point_n)->required();
  point_cmd->add_option("--p", point_p)->required();
  point_cmd->add_option("--p-const", thresholds.p_const, "p treated as constant from here")->capture_default_str();
  point_cmd->add_option("--alpha-poly", thresholds.alpha_poly, "alpha treated as polynomial from here")
      ->capture_default_str();
  point_cmd->callback([&] {
    action = [&] { emit("-", theory_point_json(theory::theory_point(point_n, point_p, thresholds)).dump() + "\n"); };
  });

  // figures
  std::string out_dir = ".";
  auto* figures_cmd = app.add_subcommand("figures", "Write r_table.csv and s_table.csv");
  figures_cmd->add_option("--p-min", p_min)->capture_default_str();
  figures_cmd->add_option("--p-max", p_max)->capture_default_str();
  figures_cmd->add_option("--step", step)->capture_default_str();
  figures_cmd->add_option("--out-dir", out_dir)->capture_default_str();
  figures_cmd->callback([&] {
    action = [&] {
      const auto figs = harness::emit_figures(p_min, p_max, step);
      const auto r_path = (std::filesystem::path(out_dir) / "r_table.csv").string();
      const auto s_path = (std::filesystem::path(out_dir) / "s_table.csv").string();
      emit(r_path, figs.r_table);
      emit(s_path, figs.s_table);
      emit("-", json{{"r_table", r_path}, {"s_table", s_path}, {"rows", figs.rows}}.dump() + "\n");
    };
  });

  // sample
  std::size_t sample_n = 0;
  double sample_p = 0;
  std::uint64_t seed = 0;
  auto* sample_cmd = app.add_subcommand("sample", "Sample G(n, p) as an edge list");
  sample_cmd->add_option("--n", sample_n)->required();
  sample_cmd->add_option("--p", sample_p)->required();
  sample_cmd->add_option("--seed", seed)->capture_default_str();
  sample_cmd->add_option("-o,--output", out_path)->capture_default_str();
  sample_cmd->callback([&] {
    action = [&] { emit(out_path, edge_list_string(sample_gnp(sample_n, sample_p, Seed{seed}))); };
  });

  // verify
  std::string graph_path, colouring_path, verify_mode = "set";
  auto* verify_cmd = app.add_subcommand("verify", "Check a colouring: prints VALID or INVALID u v");
  verify_cmd->add_option("--graph", graph_path)->required();
  verify_cmd->add_option("--colouring,--coloring", colouring_path)->required();
  verify_cmd->add_option("--mode", verify_mode)->check(CLI::IsMember({"set", "proper"}))->capture_default_str();
  verify_cmd->callback([&] {
    action = [&] {
      const Graph g = load_graph(graph_path);
      const Colouring c = load_colouring(colouring_path);
      const Verdict v = verify_mode == "set" ? is_set_colouring(g, c) : is_proper_colouring(g, c);
      emit("-", v.to_string() + "\n");
    };
  });

  // solve
  std::string solve_mode = "chis";
  SearchLimit limit;
  auto* solve_cmd = app.add_subcommand("solve", "Exact chi or chi_s of a small graph");
  solve_cmd->add_option("--graph", graph_path)->required();
  solve_cmd->add_option("--mode", solve_mode)->check(CLI::IsMember({"chi", "chis"}))->capture_default_str();
  solve_cmd->add_option("--budget", limit.node_budget, "Search nodes before giving up")->capture_default_str();
  solve_cmd->add_option("--max-n", limit.max_vertices, "Override the exact-mode vertex limit");
  solve_cmd->add_option("-o,--output", out_path, "Witness colouring file")->capture_default_str();
  solve_cmd->callback([&] {
    action = [&] {
      const Graph g = load_graph(graph_path);
      const SolveResult r = solve_mode == "chi" ? chromatic_number(g, limit) : set_chromatic_number(g, limit);
      json j{{"mode", solve_mode},
             {"status", r.exact() ? "exact" : "bounded"},
             {"value", r.exact() ? json(r.value) : json(nullptr)},
             {"lower", r.lower},
             {"upper", r.upper},
             {"nodes_explored", r.nodes_explored}};
      if (out_path.empty() || out_path == "-") {
        emit("-", j.dump() + "\n" + colouring_string(r.witness));
      } else {
        emit(out_path, colouring_string(r.witness));
        emit("-", j.dump() + "\n");
      }
    };
  });

  // color constructive
  auto* color_cmd = app.add_subcommand("color", "Colouring constructions");
  color_cmd->alias("colour");
  color_cmd->require_subcommand(1);
  ConstructiveParams cparams;
  auto* constructive_cmd = color_cmd->add_subcommand("constructive", "Block colouring with omega slack");
  constructive_cmd->add_option("--graph", graph_path)->required();
  constructive_cmd->add_option("--p", cparams.p)->required();
  constructive_cmd->add_option("--omega", cparams.omega)->capture_default_str();
  constructive_cmd->add_option("-o,--output", out_path)->capture_default_str();
  constructive_cmd->callback([&] {
    action = [&] { emit(out_path, colouring_string(constructive_set_colouring(load_graph(graph_path), cparams))); };
  });

  // bounds
  auto* bounds_cmd = app.add_subcommand("bounds", "Probability bound evaluators");
  bounds_cmd->require_subcommand(1);
  double mu = 0, delta = 0;
  std::string tail = "lower";
  auto* chernoff_cmd = bounds_cmd->add_subcommand("chernoff", "Binomial tail bounds");
  chernoff_cmd->add_option("--mu", mu)->required();
  chernoff_cmd->add_option("--delta", delta)->required();
  chernoff_cmd->add_option("--tail", tail)->check(CLI::IsMember({"lower", "upper"}))->capture_default_str();
  chernoff_cmd->callback([&] {
    action = [&] {
      const double b = tail == "lower" ? prob::chernoff_lower(mu, delta) : prob::chernoff_upper(mu, delta);
      emit("-", json{{"tail", tail}, {"mu", mu}, {"delta", delta}, {"bound", b}}.dump() + "\n");
    };
  });

  std::vector<long long> kappa;
  prob::SuenInputs suen;
  auto* suen_cmd = bounds_cmd->add_subcommand("suen", "Suen's inequality for colour-set collisions");
  suen_cmd->add_option("--kappa", kappa, "Colour class sizes")->required()->delimiter(',');
  suen_cmd->add_option("--p", suen.p)->required();
  suen_cmd->add_option("--pairs", suen.pair_count, "|I|")->required();
  suen_cmd->add_option("--max-deg", suen.max_deg)->required();
  suen_cmd->callback([&] {
    action = [&] {
      suen.kappa = to_u64(kappa);
      const auto out = prob::suen_bound(suen);
      emit("-", json{{"mu", out.mu},
                     {"delta_big", out.delta_big},
                     {"delta_small", out.delta_small},
                     {"bound", out.bound}}
                        .dump() +
                    "\n");
    };
  });

  std::vector<double> xs, betas;
  auto* hoelder_cmd = bounds_cmd->add_subcommand("hoelder", "Weighted ratio inequality check");
  hoelder_cmd->add_option("--x", xs, "Values in [1/2, 1]")->required()->delimiter(',');
  hoelder_cmd->add_option("--beta", betas, "Positive weights (default all 1)")->delimiter(',');
  hoelder_cmd->callback([&] {
    action = [&] {
      const auto out = betas.empty() ? prob::hoelder_ratio_check(xs) : prob::hoelder_ratio_check(xs, betas);
      emit("-", json{{"lhs", out.lhs}, {"rhs", out.rhs}, {"s", out.s}, {"holds", out.holds}}.dump() + "\n");
    };
  });

  // experiment
  auto* experiment_cmd = app.add_subcommand("experiment", "Monte Carlo sweeps");
  experiment_cmd->require_subcommand(1);
  std::string config_path;
  std::optional<std::string> output_override;
  unsigned threads = 0;
  auto* run_cmd = experiment_cmd->add_subcommand("run", "Run a sweep from a config file");
  run_cmd->add_option("--config", config_path)->required();
  run_cmd->add_option("-o,--output", output_override, "Overrides output_path");
  run_cmd->add_option("--threads", threads, "Worker threads (0 = all cores)")->capture_default_str();
  run_cmd->callback([&] {
    action = [&] {
      auto cfg = read_file(config_path, [](std::istream& in) { return harness::parse_config(in); });
      if (output_override) cfg.output_path = *output_override;
      std::ostringstream out;
      harness::write_experiment_csv(out, harness::run_experiment(cfg, threads));
      emit(cfg.output_path, out.str());
    };
  });

  std::size_t dom_n = 0, dom_trials = 100;
  double dom_p = 0;
  auto* dom_cmd = experiment_cmd->add_subcommand("domination", "Sampled-set domination check");
  dom_cmd->add_option("--n", dom_n)->required();
  dom_cmd->add_option("--p", dom_p)->required();
  dom_cmd->add_option("--trials", dom_trials)->capture_default_str();
  dom_cmd->add_option("--seed", seed)->capture_default_str();
  dom_cmd->add_option("--threads", threads)->capture_default_str();
  dom_cmd->add_option("-o,--output", out_path)->capture_default_str();
  dom_cmd->callback([&] {
    action = [&] {
      std::ostringstream out;
      harness::write_domination_csv(out, harness::domination_check(dom_n, dom_p, dom_trials, Seed{seed}, threads));
      emit(out_path, out.str());
    };
  });

  try {
    app.parse(argc, argv);
  } catch (const CLI::Success& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitParameter;
  }

  try {
    if (action) action();
  } catch (const IoError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitIo;
  } catch (const ParameterError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitParameter;
  }
  return 0;
}
