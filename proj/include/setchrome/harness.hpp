#pragma once

// Monte Carlo sweeps over (n, p), the domination check on sampled sets, the
// important-colour classifier and the r(p) / s(p) figure tables.

#include <algorithm>
#include <bit>
#include <cmath>
#include <cstddef>
#include <cstdint>
#include <istream>
#include <map>
#include <optional>
#include <ostream>
#include <span>
#include <sstream>
#include <stdexcept>
#include <string>
#include <thread>
#include <type_traits>
#include <vector>

#include "setchrome/colouring.hpp"
#include "setchrome/error.hpp"
#include "setchrome/exact.hpp"
#include "setchrome/format.hpp"
#include "setchrome/graph.hpp"
#include "setchrome/random.hpp"
#include "setchrome/theory.hpp"

namespace setchrome::harness {

inline constexpr const char* kSchemaLine = "# setchrome-v1";

// Runs fn(i) for i in [0, count) on up to `threads` workers. Callers write into
// per-index slots, so results do not depend on scheduling.
template <typename Fn>
void parallel_for(std::size_t count, unsigned threads, Fn&& fn) {
  if (threads == 0) threads = std::max(1U, std::thread::hardware_concurrency());
  threads = static_cast<unsigned>(std::min<std::size_t>(threads, count));
  if (threads <= 1) {
    for (std::size_t i = 0; i < count; ++i) fn(i);
    return;
  }
  std::vector<std::jthread> pool;
  for (unsigned t = 0; t < threads; ++t)
    pool.emplace_back([&, t] {
      for (std::size_t i = t; i < count; i += threads) fn(i);
    });
}

struct ExperimentConfig {
  std::vector<std::size_t> n_grid;
  std::vector<double> p_grid;
  std::size_t trials = 1;
  std::uint64_t omega = 10;
  Seed seed_base{0};
  std::size_t exact_cutoff = 0;  // exact chi and chi_s for n <= this
  std::string output_path = "-";
};

inline void validate(const ExperimentConfig& cfg) {
  if (cfg.n_grid.empty()) throw ParameterError("config: n_grid is empty");
  if (cfg.p_grid.empty()) throw ParameterError("config: p_grid is empty");
  if (cfg.trials < 1) throw ParameterError("config: trials must be at least 1");
  if (cfg.omega < 1) throw ParameterError("config: omega must be at least 1");
  if (cfg.exact_cutoff > 12) throw ParameterError("config: exact_cutoff may not exceed 12");
  for (auto n : cfg.n_grid)
    if (n < 1) throw ParameterError("config: every n must be positive");
  for (auto p : cfg.p_grid)
    if (!(p > 0.0 && p < 1.0)) throw ParameterError("config: every p must lie in (0, 1)");
}

namespace detail {

inline std::string trim(const std::string& s) {
  const auto a = s.find_first_not_of(" \t\r");
  if (a == std::string::npos) return {};
  const auto b = s.find_last_not_of(" \t\r");
  return s.substr(a, b - a + 1);
}

template <typename T>
T parse_number(const std::string& text, std::size_t line) {
  const std::string t = trim(text);
  std::size_t used = 0;
  T value{};
  try {
    if constexpr (std::is_floating_point_v<T>) {
      value = static_cast<T>(std::stod(t, &used));
    } else {
      if (!t.empty() && t[0] == '-') throw std::invalid_argument("negative");
      value = static_cast<T>(std::stoull(t, &used));
    }
  } catch (const std::exception&) {
    throw ParseError(line, "not a number: \"" + t + "\"");
  }
  if (used != t.size()) throw ParseError(line, "not a number: \"" + t + "\"");
  return value;
}

template <typename T>
std::vector<T> parse_list(const std::string& text, std::size_t line) {
  std::vector<T> out;
  std::stringstream ss(text);
  for (std::string item; std::getline(ss, item, ',');) out.push_back(parse_number<T>(item, line));
  return out;
}

}  // namespace detail

// Flat "key = value" lines; '#' starts a comment line. Lists are
// comma-separated. Unknown or repeated keys are errors.
inline ExperimentConfig parse_config(std::istream& in) {
  ExperimentConfig cfg;
  std::map<std::string, std::size_t> seen;
  std::string line;
  for (std::size_t no = 1; std::getline(in, line); ++no) {
    const std::string t = detail::trim(line);
    if (t.empty() || t[0] == '#') continue;
    const auto eq = t.find('=');
    if (eq == std::string::npos) throw ParseError(no, "expected key = value");
    const std::string key = detail::trim(t.substr(0, eq));
    const std::string value = detail::trim(t.substr(eq + 1));
    if (!seen.emplace(key, no).second) throw ParseError(no, "repeated key " + key);
    if (key == "n_grid") {
      cfg.n_grid = detail::parse_list<std::size_t>(value, no);
    } else if (key == "p_grid") {
      cfg.p_grid = detail::parse_list<double>(value, no);
    } else if (key == "trials") {
      cfg.trials = detail::parse_number<std::size_t>(value, no);
    } else if (key == "omega") {
      cfg.omega = detail::parse_number<std::uint64_t>(value, no);
    } else if (key == "seed_base") {
      cfg.seed_base = Seed{detail::parse_number<std::uint64_t>(value, no)};
    } else if (key == "exact_cutoff") {
      cfg.exact_cutoff = detail::parse_number<std::size_t>(value, no);
    } else if (key == "output_path") {
      cfg.output_path = value;
    } else {
      throw ParseError(no, "unknown key " + key);
    }
  }
  validate(cfg);
  return cfg;
}

inline ExperimentConfig parse_config(const std::string& text) {
  std::istringstream in(text);
  return parse_config(in);
}

struct ExperimentRecord {
  std::size_t n = 0;
  double p = 0.0;
  Seed seed{};
  std::optional<Colour> constructive_colours;  // empty when infeasible
  bool constructive_valid = false;
  std::size_t greedy_chi = 0;
  std::optional<std::size_t> exact_chi;
  std::optional<std::size_t> exact_chis;
  std::optional<theory::Regime> regime;  // empty for n < 3
  double envelope_lower = std::nan("");
  double envelope_upper = std::nan("");
  // lg chi + 1 and chi, with chi exact when available; otherwise a greedy
  // clique and first-fit colouring stand in, so both remain rigorous.
  double trivial_lower = 0.0;
  double trivial_upper = 0.0;
};

inline ExperimentRecord run_trial(std::size_t n, double p, Seed seed, const ExperimentConfig& cfg) {
  ExperimentRecord rec;
  rec.n = n;
  rec.p = p;
  rec.seed = seed;
  const Graph g = sample_gnp(n, p, seed);

  try {
    const Colouring c = constructive_set_colouring(g, ConstructiveParams{cfg.omega, p});
    rec.constructive_colours = c.k();
    rec.constructive_valid = is_set_colouring(g, c).valid();
  } catch (const ParameterError&) {
    // infeasible, or n^2 p <= 1
  }

  const Colouring greedy = greedy_proper_colouring(g);
  rec.greedy_chi = greedy.k();

  if (n <= cfg.exact_cutoff) {
    const SolveResult chi = chromatic_number(g);
    const SolveResult chis = set_chromatic_number(g);
    if (chi.exact()) rec.exact_chi = chi.value;
    if (chis.exact()) rec.exact_chis = chis.value;
  }
  if (rec.exact_chi) {
    rec.trivial_lower = std::log2(static_cast<double>(*rec.exact_chi)) + 1.0;
    rec.trivial_upper = static_cast<double>(*rec.exact_chi);
  } else {
    rec.trivial_lower = std::log2(static_cast<double>(greedy_clique_size(g))) + 1.0;
    rec.trivial_upper = static_cast<double>(rec.greedy_chi);
  }

  if (n >= 3) {
    const auto env = theory::theorem_envelope(static_cast<double>(n), p);
    rec.regime = env.regime;
    rec.envelope_lower = env.lower;
    rec.envelope_upper = env.upper;
  }
  return rec;
}

// Rows are ordered by (n, p, trial); cell index = n-index * |p_grid| + p-index
// and the trial seed is derive_seed(seed_base, cell, trial).
inline std::vector<ExperimentRecord> run_experiment(const ExperimentConfig& cfg, unsigned threads = 0) {
  validate(cfg);
  std::vector<ExperimentRecord> rows;
  std::uint64_t cell = 0;
  for (std::size_t n : cfg.n_grid) {
    for (double p : cfg.p_grid) {
      std::vector<ExperimentRecord> cell_rows(cfg.trials);
      parallel_for(cfg.trials, threads, [&](std::size_t t) {
        cell_rows[t] = run_trial(n, p, derive_seed(cfg.seed_base, cell, t), cfg);
      });
      rows.insert(rows.end(), cell_rows.begin(), cell_rows.end());
      ++cell;
    }
  }
  return rows;
}

inline void write_experiment_csv(std::ostream& out, const std::vector<ExperimentRecord>& rows) {
  out << kSchemaLine << '\n'
      << "n,p,seed,constructive_colours,constructive_valid,greedy_chi,exact_chi,exact_chis,regime,"
         "envelope_lower,envelope_upper,trivial_lower,trivial_upper\n";
  for (const auto& r : rows) {
    out << r.n << ',' << fmt12(r.p) << ',' << r.seed.value << ','
        << (r.constructive_colours ? std::to_string(*r.constructive_colours) : "infeasible") << ','
        << (r.constructive_valid ? "true" : "false") << ',' << r.greedy_chi << ','
        << (r.exact_chi ? std::to_string(*r.exact_chi) : "") << ','
        << (r.exact_chis ? std::to_string(*r.exact_chis) : "") << ','
        << (r.regime ? std::string(theory::regime_name(*r.regime)) : "") << ',' << fmt12(r.envelope_lower)
        << ',' << fmt12(r.envelope_upper) << ',' << fmt12(r.trivial_lower) << ',' << fmt12(r.trivial_upper)
        << '\n';
  }
}

struct DominationRow {
  std::size_t trial;
  std::size_t set_size;
  std::size_t undominated_count;
  bool pass;
};

inline std::size_t domination_set_size(std::size_t n, double p) {
  return static_cast<std::size_t>(std::ceil(2.0 * std::log(static_cast<double>(n)) / p));
}

// Number of vertices outside s with no neighbour in s.
inline std::size_t undominated_count(const Graph& g, std::span<const Vertex> s) {
  const std::size_t words = g.words_per_row();
  std::vector<Graph::Word> covered(words, 0);
  for (Vertex v : s) {
    auto row = g.row(v);
    for (std::size_t w = 0; w < words; ++w) covered[w] |= row[w];
  }
  for (Vertex v : s) covered[v / 64] |= Graph::Word{1} << (v % 64);
  std::size_t hit = 0;
  for (auto w : covered) hit += static_cast<std::size_t>(std::popcount(w));
  return g.n() - hit;
}

// Uniform m-subset of 0..n-1 by partial Fisher-Yates.
inline std::vector<Vertex> sample_subset(std::size_t n, std::size_t m, Rng& rng) {
  std::vector<Vertex> pool(n);
  for (Vertex v = 0; v < n; ++v) pool[v] = v;
  for (std::size_t i = 0; i < m; ++i) {
    const std::size_t j = i + uniform_below(rng, n - i);
    std::swap(pool[i], pool[j]);
  }
  pool.resize(m);
  return pool;
}

// Per trial: G(n, p) from derive_seed(seed, 0, trial), a uniform set S of
// m = ceil(2 log n / p) vertices from derive_seed(seed, 1, trial); the trial
// passes when at most m vertices outside S have no neighbour in S.
// One sampled S per graph, not every m-set.
inline std::vector<DominationRow> domination_check(std::size_t n, double p, std::size_t trials, Seed seed,
                                                   unsigned threads = 0) {
  if (n < 2) throw ParameterError("domination_check: n must be at least 2");
  if (!(p > 0.0 && p < 1.0)) throw ParameterError("domination_check: p must lie in (0, 1)");
  const std::size_t m = domination_set_size(n, p);
  if (m >= n)
    throw ParameterError("domination_check: set size " + std::to_string(m) + " is not below n = " +
                         std::to_string(n));
  std::vector<DominationRow> rows(trials);
  parallel_for(trials, threads, [&](std::size_t t) {
    const Graph g = sample_gnp(n, p, derive_seed(seed, 0, t));
    Rng rng = make_rng(derive_seed(seed, 1, t));
    const auto s = sample_subset(n, m, rng);
    const std::size_t missed = undominated_count(g, s);
    rows[t] = {t, m, missed, missed <= m};
  });
  return rows;
}

inline void write_domination_csv(std::ostream& out, const std::vector<DominationRow>& rows) {
  out << kSchemaLine << '\n' << "# monte-carlo: one uniformly sampled set per trial\n";
  out << "trial,set_size,undominated_count,pass\n";
  for (const auto& r : rows)
    out << r.trial << ',' << r.set_size << ',' << r.undominated_count << ',' << (r.pass ? "true" : "false")
        << '\n';
}

struct ColourClassification {
  double threshold;
  std::vector<Colour> important;
  std::vector<Colour> unimportant;
};

// A colour is important when its class has at most 2 log n / p vertices.
inline ColourClassification important_colour_classifier(const Colouring& c, std::size_t n, double p) {
  if (!(p > 0.0 && p < 1.0)) throw ParameterError("important_colour_classifier: p must lie in (0, 1)");
  if (n < 1) throw ParameterError("important_colour_classifier: n must be positive");
  ColourClassification out{2.0 * std::log(static_cast<double>(n)) / p, {}, {}};
  const auto sizes = c.class_sizes();
  for (Colour col = 1; col <= c.k(); ++col)
    (static_cast<double>(sizes[col - 1]) <= out.threshold ? out.important : out.unimportant).push_back(col);
  return out;
}

struct Figures {
  std::string r_table;  // "p,r"
  std::string s_table;  // "p,s"
  std::size_t rows;
};

inline Figures emit_figures(double p_min, double p_max, double step) {
  const auto rows = theory::zigzag_table(p_min, p_max, step);
  std::ostringstream r_out, s_out;
  r_out << "p,r\n";
  s_out << "p,s\n";
  for (const auto& row : rows) {
    r_out << fmt12(row.p) << ',' << fmt12(row.r) << '\n';
    s_out << fmt12(row.p) << ',' << fmt12(row.s) << '\n';
  }
  return {r_out.str(), s_out.str(), rows.size()};
}

}  // namespace setchrome::harness
