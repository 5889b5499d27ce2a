#pragma once

// Text formats. Both are newline-delimited, 0-indexed, and skip blank lines
// and lines whose first non-blank character is '#'.
//
//   edge list:  "n m" then m lines "u v"       (u != v, each pair once)
//   colouring:  "n k" then n lines "v c(v)"    (every v once, 1 <= c(v) <= k)

#include <charconv>
#include <cstdint>
#include <fstream>
#include <istream>
#include <ostream>
#include <set>
#include <sstream>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "setchrome/colouring.hpp"
#include "setchrome/error.hpp"
#include "setchrome/graph.hpp"

namespace setchrome {

namespace detail {

// Reads the next content line, splitting it into exactly two unsigned fields.
class PairReader {
 public:
  explicit PairReader(std::istream& in) : in_(in) {}

  // False at end of input.
  bool next(std::uint64_t& a, std::uint64_t& b) {
    std::string line;
    while (std::getline(in_, line)) {
      ++line_no_;
      if (!line.empty() && line.back() == '\r') line.pop_back();
      const auto first = line.find_first_not_of(" \t");
      if (first == std::string::npos || line[first] == '#') continue;
      std::string_view rest(line);
      rest.remove_prefix(first);
      if (!field(rest, a) || !field(rest, b) || !rest.empty())
        throw ParseError(line_no_, "expected two non-negative integers, got \"" + line + "\"");
      return true;
    }
    return false;
  }

  std::size_t line() const noexcept { return line_no_; }

 private:
  static bool field(std::string_view& s, std::uint64_t& out) {
    const auto start = s.find_first_not_of(" \t");
    if (start == std::string_view::npos) return false;
    s.remove_prefix(start);
    auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), out);
    if (ec != std::errc{} || (ptr != s.data() + s.size() && *ptr != ' ' && *ptr != '\t')) return false;
    s.remove_prefix(static_cast<std::size_t>(ptr - s.data()));
    const auto tail = s.find_first_not_of(" \t");
    s.remove_prefix(tail == std::string_view::npos ? s.size() : tail);
    return true;
  }

  std::istream& in_;
  std::size_t line_no_ = 0;
};

}  // namespace detail

inline Graph read_edge_list(std::istream& in) {
  detail::PairReader reader(in);
  std::uint64_t n = 0, m = 0;
  if (!reader.next(n, m)) throw ParseError(reader.line(), "missing header \"n m\"");
  if (n == 0) throw ParseError(reader.line(), "vertex count must be positive");
  Graph g(n);
  std::uint64_t read = 0;
  std::uint64_t u = 0, v = 0;
  while (reader.next(u, v)) {
    const auto line = reader.line();
    if (++read > m) throw ParseError(line, "more than the declared " + std::to_string(m) + " edges");
    if (u >= n || v >= n) throw ParseError(line, "vertex out of range 0.." + std::to_string(n - 1));
    if (u == v) throw ParseError(line, "loop at vertex " + std::to_string(u));
    if (g.has_edge(static_cast<Vertex>(u), static_cast<Vertex>(v)))
      throw ParseError(line, "duplicate edge " + std::to_string(u) + " " + std::to_string(v));
    g.add_edge(static_cast<Vertex>(u), static_cast<Vertex>(v));
  }
  if (read < m)
    throw ParseError(reader.line(), "declared " + std::to_string(m) + " edges, found " + std::to_string(read));
  return g;
}

// Canonical form: edges as "u v" with u < v, sorted lexicographically.
inline void write_edge_list(std::ostream& out, const Graph& g) {
  const auto es = edges(g);
  out << g.n() << ' ' << es.size() << '\n';
  for (auto [u, v] : es) out << u << ' ' << v << '\n';
}

inline std::string edge_list_string(const Graph& g) {
  std::ostringstream out;
  write_edge_list(out, g);
  return out.str();
}

inline Graph parse_edge_list(const std::string& text) {
  std::istringstream in(text);
  return read_edge_list(in);
}

inline Colouring read_colouring(std::istream& in) {
  detail::PairReader reader(in);
  std::uint64_t n = 0, k = 0;
  if (!reader.next(n, k)) throw ParseError(reader.line(), "missing header \"n k\"");
  if (k == 0) throw ParseError(reader.line(), "colour count must be positive");
  std::vector<Colour> colours(n, 0);
  std::uint64_t v = 0, c = 0;
  while (reader.next(v, c)) {
    const auto line = reader.line();
    if (v >= n) throw ParseError(line, "vertex out of range 0.." + std::to_string(n == 0 ? 0 : n - 1));
    if (c < 1 || c > k) throw ParseError(line, "colour outside 1.." + std::to_string(k));
    if (colours[v] != 0) throw ParseError(line, "vertex " + std::to_string(v) + " coloured twice");
    colours[v] = static_cast<Colour>(c);
  }
  for (std::uint64_t w = 0; w < n; ++w)
    if (colours[w] == 0) throw ParseError(reader.line(), "vertex " + std::to_string(w) + " has no colour");
  return Colouring(std::move(colours), static_cast<Colour>(k));
}

inline void write_colouring(std::ostream& out, const Colouring& c) {
  out << c.size() << ' ' << c.k() << '\n';
  for (Vertex v = 0; v < c.size(); ++v) out << v << ' ' << c[v] << '\n';
}

inline std::string colouring_string(const Colouring& c) {
  std::ostringstream out;
  write_colouring(out, c);
  return out.str();
}

inline Colouring parse_colouring(const std::string& text) {
  std::istringstream in(text);
  return read_colouring(in);
}

template <typename Reader>
auto read_file(const std::string& path, Reader reader) {
  std::ifstream in(path);
  if (!in) throw IoError("cannot open " + path + " for reading");
  return reader(in);
}

inline Graph load_graph(const std::string& path) {
  return read_file(path, [](std::istream& in) { return read_edge_list(in); });
}

inline Colouring load_colouring(const std::string& path) {
  return read_file(path, [](std::istream& in) { return read_colouring(in); });
}

}  // namespace setchrome
