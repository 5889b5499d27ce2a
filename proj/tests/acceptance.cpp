// Acceptance suite: one PASS/FAIL line per criterion, exit status 1 if any fail.

#include <sys/wait.h>

#include <chrono>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <functional>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "oracles.hpp"
#include "setchrome/setchrome.hpp"

using namespace setchrome;
namespace fs = std::filesystem;

namespace {

struct Outcome {
  bool pass;
  std::string detail;
};

struct Criterion {
  int id;
  const char* name;
  double limit_seconds;
  std::function<Outcome()> run;
};

double landmark(int k) { return 1.0 - std::pow(0.5, 1.0 / k); }

std::size_t oracle_min_k(const Graph& g) {
  for (Colour k = 1;; ++k)
    if (brute_force_oracle(g, k).exists_valid) return k;
}

Outcome zigzag_landmarks() {
  double worst_s = 0, worst_r = 0;
  bool ell_ok = true;
  for (int k = 1; k <= 6; ++k) {
    const auto [s, l0] = theory::s_and_ell0(landmark(k));
    ell_ok &= l0 == static_cast<std::uint64_t>(k);
    worst_s = std::max(worst_s, std::abs(s - 0.5));
    worst_r = std::max(worst_r, std::abs(theory::r_const(landmark(k)) - 2.0));
  }
  return {ell_ok && worst_s <= 1e-12 && worst_r <= 1e-9,
          "max|s-1/2| = " + fmt12(worst_s) + ", max|r-2| = " + fmt12(worst_r)};
}

Outcome s_bounds_sweep() {
  std::size_t bad = 0, count = 0;
  for (double p : linear_grid(0.001, 0.990, 0.001)) {
    const double s = theory::s_of(p);
    const double r = theory::r_const(p);
    bad += !(s >= 0.5 && s <= (1 + p * p) / 2 && r >= 2.0);
    ++count;
  }
  const double r99 = theory::r_const(0.99);
  return {bad == 0 && count == 990 && r99 > 50,
          std::to_string(count) + " grid points, " + std::to_string(bad) + " violations, r(0.99) = " + fmt12(r99)};
}

Outcome candidate_property() {
  std::mt19937_64 rng(20260101);
  std::uniform_real_distribution<double> unif(0.001, 0.99);
  double worst = 0;
  for (int i = 0; i < 10000; ++i) {
    const double p = unif(rng);
    const auto brute = oracle::brute_force_s(p, 1000);
    const double x = std::log(0.5) / std::log(1.0 - p);
    const int fl = std::max(1, static_cast<int>(std::floor(x)));
    const int cl = std::max(1, static_cast<int>(std::ceil(x)));
    const double cand = std::min(theory::class_factor(p, fl), theory::class_factor(p, cl));
    worst = std::max({worst, std::abs(cand - brute.s), std::abs(theory::s_of(p) - brute.s)});
  }
  return {worst <= 1e-12, "10000 samples, max deviation " + fmt12(worst)};
}

Outcome solver_vs_oracle() {
  std::vector<Graph> corpus{complete_graph(2), complete_graph(3), complete_graph(4),
                            cycle_graph(5),    path_graph(4),     Graph(5)};
  std::mt19937_64 rng(4);
  for (int i = 0; i < 200; ++i) {
    const std::size_t n = 1 + rng() % 7;
    const double p = 0.1 + 0.8 * static_cast<double>(rng() % 1000) / 1000.0;
    corpus.push_back(sample_gnp(n, p, Seed{rng()}));
  }
  std::size_t mismatches = 0;
  for (const auto& g : corpus) {
    const auto r = set_chromatic_number(g);
    mismatches += !(r.exact() && r.value == oracle_min_k(g) && is_set_colouring(g, r.witness).valid());
  }
  const bool named = set_chromatic_number(complete_graph(2)).value == 2 &&
                     set_chromatic_number(complete_graph(3)).value == 3;
  return {mismatches == 0 && named,
          std::to_string(corpus.size()) + " graphs, " + std::to_string(mismatches) + " mismatches"};
}

Outcome sandwich() {
  std::mt19937_64 rng(5);
  const double ps[] = {0.3, 0.5, 0.7};
  std::size_t violations = 0, inexact = 0;
  for (int i = 0; i < 100; ++i) {
    const std::size_t n = 5 + rng() % 5;
    const Graph g = sample_gnp(n, ps[i % 3], Seed{rng()});
    const auto chi = chromatic_number(g);
    const auto chis = set_chromatic_number(g);
    inexact += !(chi.exact() && chis.exact());
    violations += !(std::log2(static_cast<double>(chi.value)) + 1 <= static_cast<double>(chis.value) + 1e-12 &&
                    chis.value <= chi.value);
  }
  return {violations == 0 && inexact == 0,
          "100 graphs, " + std::to_string(violations) + " violations, " + std::to_string(inexact) + " inexact"};
}

Outcome constructive_validity() {
  const ConstructiveParams params{10, 0.5};
  const auto plan = constructive_plan(1024, params);
  std::size_t valid = 0, wrong_k = 0;
  for (std::uint64_t s = 0; s < 100; ++s) {
    const Graph g = sample_gnp(1024, 0.5, Seed{s});
    const Colouring c = constructive_set_colouring(g, params);
    wrong_k += c.k() != 30;
    valid += is_set_colouring(g, c).valid();
  }
  return {valid >= 95 && wrong_k == 0 && plan.colours == 30,
          std::to_string(valid) + "/100 valid, " + std::to_string(plan.colours) + " colours"};
}

Outcome proper_implies_set() {
  std::mt19937_64 rng(7);
  std::size_t violations = 0;
  for (int i = 0; i < 500; ++i) {
    const std::size_t n = 1 + rng() % 200;
    const double p = 0.02 + 0.96 * static_cast<double>(rng() % 1000) / 1000.0;
    const Graph g = sample_gnp(n, p, Seed{rng()});
    const Colouring c = greedy_proper_colouring(g);
    violations += !(is_proper_colouring(g, c).valid() && is_set_colouring(g, c).valid());
  }
  return {violations == 0, "500 pairs, " + std::to_string(violations) + " violations"};
}

Outcome hoelder_tuples() {
  std::mt19937_64 rng(8);
  std::uniform_real_distribution<double> xs(0.5, 1.0), ws(0.01, 10.0);
  std::size_t bad = 0, bad_eq = 0;
  double worst_eq = 0;
  for (int i = 0; i < 100000; ++i) {
    const std::size_t k = 1 + rng() % 20;
    std::vector<double> x(k), beta(k, 1.0);
    for (auto& v : x) v = xs(rng);
    if (i % 2) for (auto& v : beta) v = ws(rng);
    const auto r = prob::hoelder_ratio_check(x, beta);
    bad += !(r.lhs <= r.rhs + 1e-12);
    if (i % 10 == 0) {
      std::fill(x.begin(), x.end(), x[0]);
      const auto e = prob::hoelder_ratio_check(x, beta);
      worst_eq = std::max(worst_eq, std::abs(e.lhs - e.rhs));
      bad_eq += !(std::abs(e.lhs - e.rhs) <= 1e-12);
    }
  }
  return {bad == 0 && bad_eq == 0,
          "100000 tuples, " + std::to_string(bad) + " violations, max equality gap " + fmt12(worst_eq)};
}

Outcome collision_simulation() {
  const std::vector<std::uint64_t> kappa{2, 3};
  const double formula = prob::collision_probability(kappa, 0.4);
  const int trials = 1000000;
  const double sim = oracle::simulate_collision({2, 3}, 0.4, 2, trials, 2718);
  const double se = std::sqrt(formula * (1 - formula) / trials);
  const double z = std::abs(sim - formula) / se;
  return {z <= 3.0, "formula " + fmt12(formula) + ", simulated " + fmt12(sim) + ", z = " + fmt12(z)};
}

Outcome domination() {
  const auto rows = harness::domination_check(2000, 0.3, 100, Seed{31415}, 0);
  std::size_t pass = 0, worst = 0;
  for (const auto& r : rows) {
    pass += r.pass;
    worst = std::max(worst, r.undominated_count);
  }
  const std::size_t m = harness::domination_set_size(2000, 0.3);
  return {m == 51 && pass == 100,
          "m = " + std::to_string(m) + ", " + std::to_string(pass) + "/100 pass, max undominated " +
              std::to_string(worst)};
}

std::string slurp(const fs::path& file) {
  std::ifstream in(file, std::ios::binary);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

int shell(const std::string& cmd) {
  const int raw = std::system(cmd.c_str());
  return WIFEXITED(raw) ? WEXITSTATUS(raw) : -1;
}

Outcome determinism() {
  const fs::path dir = fs::temp_directory_path() / "setchrome_acceptance";
  fs::remove_all(dir);
  fs::create_directories(dir);
  const std::string cli = SETCHROME_CLI;
  const std::string graph = (dir / "graph.txt").string();
  const std::string config = (dir / "sweep.cfg").string();
  std::ofstream(config) << "n_grid = 9, 128\np_grid = 0.3, 0.6\ntrials = 4\nexact_cutoff = 9\nseed_base = 77\n";
  if (shell(cli + " sample --n 9 --p 0.5 --seed 1 -o " + graph) != 0) return {false, "sample failed"};

  const std::vector<std::string> commands{
      "sample --n 500 --p 0.3 --seed 42",
      "theory table --p-min 0.01 --p-max 0.99 --step 0.01 --n 100000",
      "theory point --n 1048576 --p 0.5",
      "solve --graph " + graph + " --mode chis",
      "colour constructive --graph " + graph + " --p 0.5 --omega 1",
      "bounds suen --kappa 1,1,2 --p 0.5 --pairs 100 --max-deg 4",
      "experiment run --config " + config + " --threads 2",
      "experiment domination --n 400 --p 0.3 --trials 10 --seed 9",
  };
  std::size_t differing = 0, failed = 0;
  for (std::size_t i = 0; i < commands.size(); ++i) {
    const fs::path a = dir / ("a" + std::to_string(i)), b = dir / ("b" + std::to_string(i));
    failed += shell(cli + " " + commands[i] + " > " + a.string()) != 0;
    failed += shell(cli + " " + commands[i] + " > " + b.string()) != 0;
    differing += slurp(a) != slurp(b) || slurp(a).empty();
  }
  const fs::path f1 = dir / "f1", f2 = dir / "f2";
  fs::create_directories(f1);
  fs::create_directories(f2);
  failed += shell(cli + " figures --out-dir " + f1.string() + " > /dev/null") != 0;
  failed += shell(cli + " figures --out-dir " + f2.string() + " > /dev/null") != 0;
  differing += slurp(f1 / "r_table.csv") != slurp(f2 / "r_table.csv");
  differing += slurp(f1 / "s_table.csv") != slurp(f2 / "s_table.csv");
  fs::remove_all(dir);
  return {differing == 0 && failed == 0, std::to_string(commands.size() + 1) + " commands, " +
                                             std::to_string(differing) + " differing, " + std::to_string(failed) +
                                             " failed"};
}

}  // namespace

int main() {
  const std::vector<Criterion> criteria{
      {1, "zigzag landmarks", 1, zigzag_landmarks},
      {2, "s bounds sweep", 1, s_bounds_sweep},
      {3, "two-candidate minimiser", 10, candidate_property},
      {4, "exact solver vs oracle", 300, solver_vs_oracle},
      {5, "sandwich bound", 600, sandwich},
      {6, "constructive validity", 120, constructive_validity},
      {7, "proper implies set", 60, proper_implies_set},
      {8, "ratio inequality", 30, hoelder_tuples},
      {9, "collision simulation", 30, collision_simulation},
      {10, "domination", 60, domination},
      {11, "determinism", 60, determinism},
  };
  int failures = 0;
  for (const auto& c : criteria) {
    const auto t0 = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = c.run();
    } catch (const std::exception& e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    const bool in_time = secs < c.limit_seconds;
    const bool pass = o.pass && in_time;
    failures += !pass;
    std::printf("%s %2d %-26s %8.3fs (limit %gs)  %s%s\n", pass ? "PASS" : "FAIL", c.id, c.name, secs,
                c.limit_seconds, o.detail.c_str(), in_time ? "" : "  [over time limit]");
    std::fflush(stdout);
  }
  std::printf("%d/%zu criteria passed\n", static_cast<int>(criteria.size()) - failures, criteria.size());
  return failures == 0 ? 0 : 1;
}
