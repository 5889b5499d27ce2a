#pragma once

#include <algorithm>
#include <bit>
#include <cmath>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "setchrome/error.hpp"
#include "setchrome/graph.hpp"
#include "setchrome/theory.hpp"

namespace setchrome {

using Colour = std::uint32_t;

// Total map c : V -> [k]; colours are 1-based.
class Colouring {
 public:
  Colouring() = default;
  Colouring(std::vector<Colour> colours, Colour k) : colours_(std::move(colours)), k_(k) {
    if (k_ == 0) throw ParameterError("colouring: k must be at least 1");
    for (Colour c : colours_) {
      if (c < 1 || c > k_) throw ParameterError("colouring: colour " + std::to_string(c) + " outside 1.." + std::to_string(k_));
    }
  }

  // k = largest colour used (1 for an empty vertex set).
  static Colouring from_colours(std::vector<Colour> colours) {
    Colour k = 1;
    for (Colour c : colours) k = std::max(k, c);
    return Colouring(std::move(colours), k);
  }

  std::size_t size() const noexcept { return colours_.size(); }
  Colour k() const noexcept { return k_; }
  Colour operator[](Vertex v) const noexcept { return colours_[v]; }
  std::span<const Colour> colours() const noexcept { return colours_; }

  // Sizes of the colour classes, index i holding colour i+1.
  std::vector<std::size_t> class_sizes() const {
    std::vector<std::size_t> sizes(k_, 0);
    for (Colour c : colours_) ++sizes[c - 1];
    return sizes;
  }

  friend bool operator==(const Colouring&, const Colouring&) = default;

 private:
  std::vector<Colour> colours_;
  Colour k_ = 1;
};

// Subset of [k] as a packed bitset; bit i-1 stands for colour i.
class ColourSet {
 public:
  ColourSet() = default;
  explicit ColourSet(Colour k) : words_((k + 63) / 64, 0) {}

  void insert(Colour c) { words_[(c - 1) / 64] |= std::uint64_t{1} << ((c - 1) % 64); }
  bool contains(Colour c) const { return (words_[(c - 1) / 64] >> ((c - 1) % 64)) & 1U; }
  bool empty() const {
    return std::all_of(words_.begin(), words_.end(), [](auto w) { return w == 0; });
  }
  std::size_t count() const {
    std::size_t n = 0;
    for (auto w : words_) n += static_cast<std::size_t>(std::popcount(w));
    return n;
  }
  std::vector<Colour> members() const {
    std::vector<Colour> out;
    for (std::size_t i = 0; i < words_.size(); ++i)
      for (auto w = words_[i]; w != 0; w &= w - 1)
        out.push_back(static_cast<Colour>(i * 64 + std::countr_zero(w) + 1));
    return out;
  }

  friend bool operator==(const ColourSet&, const ColourSet&) = default;

 private:
  std::vector<std::uint64_t> words_;
};

inline void require_matching(const Graph& g, const Colouring& c) {
  if (c.size() != g.n())
    throw ParameterError("colouring has " + std::to_string(c.size()) + " entries for a graph on " +
                         std::to_string(g.n()) + " vertices");
}

// C(v) = { c(u) : uv in E } for every v.
//
// Two scans give the same sets: with few colours each C(v) is a masked-row
// test per colour class (k * n/64 word operations per vertex); otherwise the
// neighbours of v are walked directly.
inline std::vector<ColourSet> neighbourhood_colour_sets(const Graph& g, const Colouring& c) {
  require_matching(g, c);
  const std::size_t n = g.n();
  const std::size_t words = g.words_per_row();
  const Colour k = c.k();
  std::vector<ColourSet> sets(n, ColourSet(k));
  const std::size_t avg_degree = n == 0 ? 0 : 2 * edge_count(g) / n;

  if (static_cast<std::size_t>(k) * words <= words + avg_degree) {
    std::vector<Graph::Word> masks(static_cast<std::size_t>(k) * words, 0);
    for (Vertex v = 0; v < n; ++v)
      masks[(c[v] - 1) * words + v / 64] |= Graph::Word{1} << (v % 64);
    for (Vertex v = 0; v < n; ++v) {
      auto row = g.row(v);
      for (Colour col = 0; col < k; ++col) {
        const Graph::Word* mask = masks.data() + static_cast<std::size_t>(col) * words;
        for (std::size_t w = 0; w < words; ++w) {
          if (row[w] & mask[w]) {
            sets[v].insert(col + 1);
            break;
          }
        }
      }
    }
  } else {
    for (Vertex v = 0; v < n; ++v) {
      auto row = g.row(v);
      for (std::size_t w = 0; w < words; ++w)
        for (Graph::Word bits = row[w]; bits != 0; bits &= bits - 1)
          sets[v].insert(c[static_cast<Vertex>(w * 64 + std::countr_zero(bits))]);
    }
  }
  return sets;
}

// Outcome of a verifier: valid, or the lexicographically smallest offending edge.
struct Verdict {
  std::optional<Edge> violation;

  bool valid() const noexcept { return !violation.has_value(); }
  explicit operator bool() const noexcept { return valid(); }

  std::string to_string() const {
    if (valid()) return "VALID";
    return "INVALID " + std::to_string(violation->first) + " " + std::to_string(violation->second);
  }
};

inline Verdict is_set_colouring(const Graph& g, const Colouring& c) {
  const auto sets = neighbourhood_colour_sets(g, c);
  for (Vertex u = 0; u < g.n(); ++u)
    for (Vertex v : g.neighbours(u))
      if (u < v && sets[u] == sets[v]) return {Edge{u, v}};
  return {};
}

inline Verdict is_proper_colouring(const Graph& g, const Colouring& c) {
  require_matching(g, c);
  for (Vertex u = 0; u < g.n(); ++u)
    for (Vertex v : g.neighbours(u))
      if (u < v && c[u] == c[v]) return {Edge{u, v}};
  return {};
}

inline void require_permutation(std::span<const Vertex> order, std::size_t n) {
  if (order.size() != n) throw ParameterError("order is not a permutation of the vertex set");
  std::vector<bool> seen(n, false);
  for (Vertex v : order) {
    if (v >= n || seen[v]) throw ParameterError("order is not a permutation of the vertex set");
    seen[v] = true;
  }
}

// First-fit in the given order.
inline Colouring greedy_proper_colouring(const Graph& g, std::span<const Vertex> order) {
  require_permutation(order, g.n());
  std::vector<Colour> colour(g.n(), 0);
  std::vector<char> taken;
  for (Vertex v : order) {
    const auto nbrs = g.neighbours(v);
    taken.assign(nbrs.size() + 2, 0);
    for (Vertex u : nbrs)
      if (colour[u] != 0 && colour[u] < taken.size()) taken[colour[u]] = 1;
    Colour pick = 1;
    while (taken[pick]) ++pick;
    colour[v] = pick;
  }
  return Colouring::from_colours(std::move(colour));
}

inline Colouring greedy_proper_colouring(const Graph& g) {
  std::vector<Vertex> order(g.n());
  for (Vertex v = 0; v < g.n(); ++v) order[v] = v;
  return greedy_proper_colouring(g, order);
}

struct ConstructiveParams {
  std::uint64_t omega = 10;
  double p = 0.5;
};

struct ConstructivePlan {
  std::uint64_t ell0;
  double r;                // r_upper(n, p)
  std::uint64_t blocks;    // B = ceil(r lg n + omega)
  Colour colours;          // B + 1
};

// Ceiling that treats values within 1e-9 (relative) of an integer as that
// integer, so r lg n landing on 19 - 1ulp still gives 19.
inline double stable_ceil(double x) {
  const double near = std::round(x);
  if (std::abs(x - near) <= 1e-9 * std::max(1.0, std::abs(x))) return near;
  return std::ceil(x);
}

// Block layout for n vertices; depends only on (n, p, omega).
inline ConstructivePlan constructive_plan(std::size_t n, const ConstructiveParams& params) {
  if (params.omega < 1) throw ParameterError("constructive colouring: omega must be at least 1");
  const auto ell0 = theory::s_and_ell0(params.p).ell0;
  const double nd = static_cast<double>(n);
  const double r = theory::r_upper(nd, params.p);
  const double lg_n_r = theory::r_upper_lg_n(nd, params.p);
  const auto blocks = static_cast<std::uint64_t>(stable_ceil(lg_n_r + static_cast<double>(params.omega)));
  if (blocks * ell0 > n)
    throw InfeasibleError("constructive colouring needs " + std::to_string(blocks) + " blocks of " +
                          std::to_string(ell0) + " vertices but n = " + std::to_string(n));
  return {ell0, r, blocks, static_cast<Colour>(blocks + 1)};
}

// Vertices 0..B*l0-1 form B consecutive blocks of l0 vertices, block b taking
// colour b+1; every other vertex takes colour B+1. Edges are never consulted.
inline Colouring constructive_set_colouring(std::size_t n, const ConstructiveParams& params) {
  const auto plan = constructive_plan(n, params);
  std::vector<Colour> colours(n, plan.colours);
  for (std::uint64_t v = 0; v < plan.blocks * plan.ell0; ++v)
    colours[v] = static_cast<Colour>(v / plan.ell0 + 1);
  return Colouring(std::move(colours), plan.colours);
}

inline Colouring constructive_set_colouring(const Graph& g, const ConstructiveParams& params) {
  return constructive_set_colouring(g.n(), params);
}

// C(n,2) p s^{r lg n + omega - 2}: expected number of edges whose endpoints the
// constructive colouring fails to separate, bounded through the B - 2 blocks
// containing neither endpoint.
inline double expected_undistinguished_pairs(std::size_t n, double p, std::uint64_t omega) {
  const double nd = static_cast<double>(n);
  const double s = theory::s_of(p);
  const double exponent = theory::r_upper_lg_n(nd, p) + static_cast<double>(omega) - 2.0;
  return std::exp(std::log(nd * (nd - 1.0) / 2.0) + std::log(p) + exponent * std::log(s));
}

}  // namespace setchrome
