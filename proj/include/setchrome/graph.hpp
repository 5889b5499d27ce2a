#pragma once

#include <algorithm>
#include <bit>
#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "setchrome/error.hpp"
#include "setchrome/random.hpp"

namespace setchrome {

using Vertex = std::uint32_t;
using Edge = std::pair<Vertex, Vertex>;

// Undirected simple graph on 0..n-1. Row v is a packed bitset of N(v);
// bit (v,u) and bit (u,v) are always equal and the diagonal is clear.
class Graph {
 public:
  using Word = std::uint64_t;
  static constexpr std::size_t kWordBits = 64;

  Graph() = default;
  explicit Graph(std::size_t n)
      : n_(n), words_((n + kWordBits - 1) / kWordBits), bits_(n * words_, 0) {}

  std::size_t n() const noexcept { return n_; }
  std::size_t words_per_row() const noexcept { return words_; }

  std::span<const Word> row(Vertex v) const noexcept {
    return {bits_.data() + static_cast<std::size_t>(v) * words_, words_};
  }

  bool has_edge(Vertex u, Vertex v) const noexcept {
    return (bits_[static_cast<std::size_t>(u) * words_ + v / kWordBits] >> (v % kWordBits)) & 1U;
  }

  // Throws ParameterError on loops and out-of-range endpoints.
  void add_edge(Vertex u, Vertex v) {
    if (u == v) throw ParameterError("loop at vertex " + std::to_string(u));
    if (u >= n_ || v >= n_) throw ParameterError("vertex out of range");
    set_bit(u, v);
    set_bit(v, u);
  }

  std::size_t degree(Vertex v) const noexcept {
    std::size_t d = 0;
    for (Word w : row(v)) d += static_cast<std::size_t>(std::popcount(w));
    return d;
  }

  std::size_t max_degree() const noexcept {
    std::size_t best = 0;
    for (Vertex v = 0; v < n_; ++v) best = std::max(best, degree(v));
    return best;
  }

  // Neighbours of v in increasing order.
  std::vector<Vertex> neighbours(Vertex v) const {
    std::vector<Vertex> out;
    auto r = row(v);
    for (std::size_t w = 0; w < r.size(); ++w) {
      for (Word bits = r[w]; bits != 0; bits &= bits - 1) {
        out.push_back(static_cast<Vertex>(w * kWordBits + std::countr_zero(bits)));
      }
    }
    return out;
  }

  friend bool operator==(const Graph&, const Graph&) = default;

 private:
  void set_bit(Vertex u, Vertex v) {
    bits_[static_cast<std::size_t>(u) * words_ + v / kWordBits] |= Word{1} << (v % kWordBits);
  }

  std::size_t n_ = 0;
  std::size_t words_ = 0;
  std::vector<Word> bits_;
};

inline std::size_t edge_count(const Graph& g) {
  std::size_t twice = 0;
  for (Vertex v = 0; v < g.n(); ++v) twice += g.degree(v);
  return twice / 2;
}

// Edges (u, v) with u < v in lexicographic order.
inline std::vector<Edge> edges(const Graph& g) {
  std::vector<Edge> out;
  out.reserve(edge_count(g));
  for (Vertex u = 0; u < g.n(); ++u) {
    for (Vertex v : g.neighbours(u)) {
      if (u < v) out.emplace_back(u, v);
    }
  }
  return out;
}

// G(n, p). Pairs (u, v), u < v, are visited in lexicographic order and each
// consumes exactly one draw of make_rng(seed); the pair is an edge iff
// uniform_unit < p. So p = 0 gives the empty graph and p = 1 gives K_n.
inline Graph sample_gnp(std::size_t n, double p, Seed seed) {
  if (n == 0) throw ParameterError("sample_gnp: n must be positive");
  if (!(p >= 0.0 && p <= 1.0)) throw ParameterError("sample_gnp: p must lie in [0, 1]");
  Graph g(n);
  Rng rng = make_rng(seed);
  for (Vertex u = 0; u + 1 < n; ++u) {
    for (Vertex v = u + 1; v < n; ++v) {
      if (bernoulli(rng, p)) g.add_edge(u, v);
    }
  }
  return g;
}

inline Graph complete_graph(std::size_t n) {
  Graph g(n);
  for (Vertex u = 0; u < n; ++u)
    for (Vertex v = u + 1; v < n; ++v) g.add_edge(u, v);
  return g;
}

inline Graph path_graph(std::size_t n) {
  Graph g(n);
  for (Vertex v = 0; v + 1 < n; ++v) g.add_edge(v, v + 1);
  return g;
}

inline Graph cycle_graph(std::size_t n) {
  Graph g = path_graph(n);
  if (n >= 3) g.add_edge(static_cast<Vertex>(n - 1), 0);
  return g;
}

// Graph with vertex v renamed perm[v].
inline Graph relabel(const Graph& g, std::span<const Vertex> perm) {
  if (perm.size() != g.n()) throw ParameterError("relabel: permutation length mismatch");
  Graph h(g.n());
  for (auto [u, v] : edges(g)) h.add_edge(perm[u], perm[v]);
  return h;
}

}  // namespace setchrome
