#pragma once

// Exact chi(G) and chi_s(G) for small graphs, and the exhaustive oracle the
// set-colouring search is tested against.

#include <algorithm>
#include <bit>
#include <cmath>
#include <cstddef>
#include <cstdint>
#include <numeric>
#include <optional>
#include <string>
#include <vector>

#include "setchrome/colouring.hpp"
#include "setchrome/error.hpp"
#include "setchrome/graph.hpp"

namespace setchrome {

struct SearchLimit {
  std::uint64_t node_budget = 200'000'000;
  // Largest n accepted; 0 selects the solver's default (64 for chi, 12 for chi_s).
  std::size_t max_vertices = 0;
};

struct SolveResult {
  enum class Status { Exact, Bounded };

  Status status = Status::Exact;
  // Exact value, or the proven lower bound when the budget ran out.
  std::size_t value = 0;
  std::size_t lower = 0;
  std::size_t upper = 0;
  // Colouring with `upper` colours that passes the matching verifier.
  Colouring witness;
  std::uint64_t nodes_explored = 0;

  bool exact() const noexcept { return status == Status::Exact; }
};

inline std::size_t greedy_clique_size(const Graph& g) {
  std::vector<Vertex> order(g.n());
  std::iota(order.begin(), order.end(), Vertex{0});
  std::stable_sort(order.begin(), order.end(),
                   [&](Vertex a, Vertex b) { return g.degree(a) > g.degree(b); });
  std::vector<Vertex> clique;
  for (Vertex v : order)
    if (std::all_of(clique.begin(), clique.end(), [&](Vertex u) { return g.has_edge(u, v); }))
      clique.push_back(v);
  return clique.size();
}

namespace detail {

inline void check_size(const Graph& g, const SearchLimit& limit, std::size_t fallback, const char* who) {
  const std::size_t cap = limit.max_vertices ? limit.max_vertices : fallback;
  if (g.n() > cap)
    throw ParameterError(std::string(who) + ": n = " + std::to_string(g.n()) + " exceeds the exact-mode limit " +
                         std::to_string(cap));
}

// k-colourability by backtracking over vertices in decreasing-degree order.
// The first vertex takes colour 1 and a vertex may open at most one colour
// beyond those already used, so each partition into colour classes is tried once.
class ProperSearch {
 public:
  ProperSearch(const Graph& g, std::uint64_t& nodes, std::uint64_t budget)
      : g_(g), nodes_(nodes), budget_(budget), order_(g.n()), colour_(g.n(), 0) {
    std::iota(order_.begin(), order_.end(), Vertex{0});
    std::stable_sort(order_.begin(), order_.end(),
                     [&](Vertex a, Vertex b) { return g.degree(a) > g.degree(b); });
  }

  enum class Outcome { Found, None, OutOfBudget };

  Outcome run(Colour k) {
    k_ = k;
    const std::size_t words = g_.words_per_row();
    classes_.assign(static_cast<std::size_t>(k) * words, 0);
    std::fill(colour_.begin(), colour_.end(), 0);
    return extend(0, 0);
  }

  Colouring witness() const { return Colouring(colour_, k_); }

 private:
  bool conflicts(Vertex v, Colour c) const {
    const std::size_t words = g_.words_per_row();
    const Graph::Word* cls = classes_.data() + static_cast<std::size_t>(c - 1) * words;
    auto row = g_.row(v);
    for (std::size_t w = 0; w < words; ++w)
      if (row[w] & cls[w]) return true;
    return false;
  }

  void toggle(Vertex v, Colour c) {
    classes_[static_cast<std::size_t>(c - 1) * g_.words_per_row() + v / 64] ^= Graph::Word{1} << (v % 64);
  }

  Outcome extend(std::size_t pos, Colour used) {
    if (pos == order_.size()) return Outcome::Found;
    const Vertex v = order_[pos];
    const Colour limit = std::min<Colour>(k_, used + 1);
    for (Colour c = 1; c <= limit; ++c) {
      if (++nodes_ > budget_) return Outcome::OutOfBudget;
      if (conflicts(v, c)) continue;
      colour_[v] = c;
      toggle(v, c);
      const Outcome r = extend(pos + 1, std::max(used, c));
      if (r != Outcome::None) return r;
      toggle(v, c);
      colour_[v] = 0;
    }
    return Outcome::None;
  }

  const Graph& g_;
  std::uint64_t& nodes_;
  std::uint64_t budget_;
  std::vector<Vertex> order_;
  std::vector<Colour> colour_;
  std::vector<Graph::Word> classes_;
  Colour k_ = 1;
};

// Set colourings using exactly k colours, enumerated as restricted growth
// strings over vertices 0..n-1 (first occurrences of colours increase).
//
// C(v) only grows as vertices are coloured, and two equal partial sets may
// still diverge, so an edge uv is tested once both N(u) and N(v) are fully
// coloured: after the vertex at the larger of their last-neighbour positions.
class SetSearch {
 public:
  SetSearch(const Graph& g, std::uint64_t& nodes, std::uint64_t budget)
      : g_(g), nodes_(nodes), budget_(budget), colour_(g.n(), 0), check_at_(g.n()) {
    const std::size_t n = g.n();
    std::vector<std::size_t> done(n, 0);
    for (Vertex v = 0; v < n; ++v) {
      nbrs_.push_back(g.neighbours(v));
      if (!nbrs_.back().empty()) done[v] = nbrs_.back().back();
    }
    for (auto [u, v] : edges(g)) check_at_[std::max(done[u], done[v])].push_back({u, v});
  }

  enum class Outcome { Found, None, OutOfBudget };

  Outcome run(Colour k) {
    if (k > 64) throw ParameterError("set colouring search supports at most 64 colours");
    k_ = k;
    std::fill(colour_.begin(), colour_.end(), 0);
    return extend(0, 0);
  }

  Colouring witness() const { return Colouring(colour_, k_); }

 private:
  std::uint64_t colour_set(Vertex v) const {
    std::uint64_t mask = 0;
    for (Vertex u : nbrs_[v]) mask |= std::uint64_t{1} << (colour_[u] - 1);
    return mask;
  }

  bool separated_at(std::size_t pos) const {
    for (auto [u, v] : check_at_[pos])
      if (colour_set(u) == colour_set(v)) return false;
    return true;
  }

  Outcome extend(std::size_t pos, Colour used) {
    const std::size_t n = colour_.size();
    if (pos == n) return used == k_ ? Outcome::Found : Outcome::None;
    // Every colour must still be reachable by the remaining vertices.
    if (k_ - used > n - pos) return Outcome::None;
    const Colour limit = std::min<Colour>(k_, used + 1);
    for (Colour c = 1; c <= limit; ++c) {
      if (++nodes_ > budget_) return Outcome::OutOfBudget;
      colour_[pos] = c;
      if (!separated_at(pos)) continue;
      const Outcome r = extend(pos + 1, std::max(used, c));
      if (r != Outcome::None) return r;
    }
    colour_[pos] = 0;
    return Outcome::None;
  }

  const Graph& g_;
  std::uint64_t& nodes_;
  std::uint64_t budget_;
  std::vector<Colour> colour_;
  std::vector<std::vector<Vertex>> nbrs_;
  std::vector<std::vector<Edge>> check_at_;
  Colour k_ = 1;
};

}  // namespace detail

// chi(G) by iterative deepening from a greedy clique bound up to a first-fit
// colouring; the budget counts colour assignments tried.
inline SolveResult chromatic_number(const Graph& g, SearchLimit limit = {}) {
  detail::check_size(g, limit, 64, "chromatic_number");
  SolveResult res;
  if (g.n() == 0) {
    res.witness = Colouring({}, 1);
    res.value = res.lower = res.upper = 0;
    return res;
  }
  res.witness = greedy_proper_colouring(g);
  res.upper = res.witness.k();
  res.lower = std::max<std::size_t>(1, greedy_clique_size(g));

  detail::ProperSearch search(g, res.nodes_explored, limit.node_budget);
  while (res.lower < res.upper) {
    const auto outcome = search.run(static_cast<Colour>(res.lower));
    if (outcome == detail::ProperSearch::Outcome::Found) {
      res.witness = search.witness();
      res.upper = res.lower;
    } else if (outcome == detail::ProperSearch::Outcome::None) {
      ++res.lower;
    } else {
      res.status = SolveResult::Status::Bounded;
      res.value = res.lower;
      return res;
    }
  }
  res.value = res.upper;
  return res;
}

// Smallest integer at least lg(chi) + 1.
inline std::size_t trivial_set_lower_bound(std::size_t chi) {
  if (chi <= 1) return 1;
  return 1 + static_cast<std::size_t>(std::bit_width(chi - 1));
}

// chi_s(G): k runs upward from ceil(lg chi + 1); a proper chi-colouring closes
// the range from above, since every proper colouring is a set colouring.
inline SolveResult set_chromatic_number(const Graph& g, SearchLimit limit = {}) {
  detail::check_size(g, limit, 12, "set_chromatic_number");
  SolveResult chi = chromatic_number(g, SearchLimit{limit.node_budget, std::max<std::size_t>(g.n(), 1)});
  SolveResult res;
  res.nodes_explored = chi.nodes_explored;
  if (g.n() == 0) {
    res.witness = chi.witness;
    return res;
  }
  res.witness = chi.witness;
  res.upper = chi.upper;
  res.lower = trivial_set_lower_bound(chi.lower);
  if (!chi.exact()) {
    res.status = SolveResult::Status::Bounded;
    res.value = res.lower;
    return res;
  }

  detail::SetSearch search(g, res.nodes_explored, limit.node_budget);
  while (res.lower < res.upper) {
    const auto outcome = search.run(static_cast<Colour>(res.lower));
    if (outcome == detail::SetSearch::Outcome::Found) {
      res.witness = search.witness();
      res.upper = res.lower;
    } else if (outcome == detail::SetSearch::Outcome::None) {
      ++res.lower;
    } else {
      res.status = SolveResult::Status::Bounded;
      res.value = res.lower;
      return res;
    }
  }
  res.value = res.upper;
  return res;
}

struct OracleResult {
  bool exists_valid = false;
  std::uint64_t count_valid = 0;
};

// Tries all k^n maps V -> [k] with is_set_colouring.
inline OracleResult brute_force_oracle(const Graph& g, Colour k, std::uint64_t cap = 100'000'000) {
  if (k == 0) throw ParameterError("brute_force_oracle: k must be positive");
  double total = std::pow(static_cast<double>(k), static_cast<double>(g.n()));
  if (total > static_cast<double>(cap))
    throw ParameterError("brute_force_oracle: k^n = " + fmt12(total) + " exceeds the cap " + std::to_string(cap));
  OracleResult res;
  std::vector<Colour> assign(g.n(), 1);
  for (;;) {
    if (is_set_colouring(g, Colouring(assign, k))) {
      res.exists_valid = true;
      ++res.count_valid;
    }
    std::size_t i = 0;
    while (i < assign.size() && assign[i] == k) assign[i++] = 1;
    if (i == assign.size()) break;
    ++assign[i];
  }
  return res;
}

}  // namespace setchrome
