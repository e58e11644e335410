#pragma once

#include <algorithm>
#include <cstddef>
#include <istream>
#include <ostream>
#include <span>
#include <sstream>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "powerdom/vertex_set.hpp"

namespace powerdom {

struct Arc {
  Vertex from;
  Vertex to;
  friend bool operator==(const Arc&, const Arc&) = default;
  friend auto operator<=>(const Arc&, const Arc&) = default;
};

/// Immutable directed graph without parallel arcs. Loops are allowed.
///
/// Adjacency is stored in compressed rows for both directions; every row is
/// strictly ascending and the in-rows are the exact transpose of the out-rows.
class Digraph {
 public:
  Digraph() = default;

  /// Builds from an arbitrary arc list. Duplicate arcs collapse to one.
  static Digraph build(std::size_t vertex_count, std::span<const Arc> arcs) {
    std::vector<Arc> sorted(arcs.begin(), arcs.end());
    for (const Arc& a : sorted) {
      if (a.from >= vertex_count || a.to >= vertex_count)
        throw std::out_of_range("arc (" + std::to_string(a.from) + "," + std::to_string(a.to) +
                                ") has an endpoint outside 0.." +
                                std::to_string(vertex_count == 0 ? 0 : vertex_count - 1) +
                                " (vertex count " + std::to_string(vertex_count) + ")");
    }
    std::sort(sorted.begin(), sorted.end());
    sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());

    Digraph g;
    g.n_ = vertex_count;
    g.out_offsets_.assign(vertex_count + 1, 0);
    g.in_offsets_.assign(vertex_count + 1, 0);
    for (const Arc& a : sorted) {
      ++g.out_offsets_[a.from + 1];
      ++g.in_offsets_[a.to + 1];
    }
    for (std::size_t v = 0; v < vertex_count; ++v) {
      g.out_offsets_[v + 1] += g.out_offsets_[v];
      g.in_offsets_[v + 1] += g.in_offsets_[v];
    }
    g.out_targets_.resize(sorted.size());
    g.in_sources_.resize(sorted.size());
    std::vector<std::size_t> out_pos(g.out_offsets_.begin(), g.out_offsets_.end() - 1);
    std::vector<std::size_t> in_pos(g.in_offsets_.begin(), g.in_offsets_.end() - 1);
    // Arcs are sorted by (from, to), so both fills come out ascending.
    for (const Arc& a : sorted) {
      g.out_targets_[out_pos[a.from]++] = a.to;
      g.in_sources_[in_pos[a.to]++] = a.from;
    }
    return g;
  }

  static Digraph build(std::size_t vertex_count, std::initializer_list<Arc> arcs) {
    return build(vertex_count, std::span<const Arc>(arcs.begin(), arcs.size()));
  }

  [[nodiscard]] std::size_t vertex_count() const noexcept { return n_; }
  [[nodiscard]] std::size_t arc_count() const noexcept { return out_targets_.size(); }

  [[nodiscard]] std::span<const Vertex> out_neighbors(Vertex v) const {
    check(v);
    return {out_targets_.data() + out_offsets_[v], out_offsets_[v + 1] - out_offsets_[v]};
  }

  [[nodiscard]] std::span<const Vertex> in_neighbors(Vertex v) const {
    check(v);
    return {in_sources_.data() + in_offsets_[v], in_offsets_[v + 1] - in_offsets_[v]};
  }

  [[nodiscard]] bool has_arc(Vertex u, Vertex v) const {
    const auto row = out_neighbors(u);
    return std::binary_search(row.begin(), row.end(), v);
  }

  /// All arcs sorted by (from, to).
  [[nodiscard]] std::vector<Arc> arcs() const {
    std::vector<Arc> out;
    out.reserve(arc_count());
    for (Vertex u = 0; u < n_; ++u)
      for (Vertex v : out_neighbors(u)) out.push_back({u, v});
    return out;
  }

  [[nodiscard]] Digraph transposed() const {
    std::vector<Arc> rev;
    rev.reserve(arc_count());
    for (const Arc& a : arcs()) rev.push_back({a.to, a.from});
    return build(n_, rev);
  }

  friend bool operator==(const Digraph&, const Digraph&) = default;

 private:
  void check(Vertex v) const {
    if (v >= n_)
      throw std::out_of_range("vertex " + std::to_string(v) + " out of range for graph with " +
                              std::to_string(n_) + " vertices");
  }

  std::size_t n_ = 0;
  std::vector<std::size_t> out_offsets_{0};
  std::vector<Vertex> out_targets_;
  std::vector<std::size_t> in_offsets_{0};
  std::vector<Vertex> in_sources_;
};

/// N_out(S): union of the out-neighborhoods of the members of S. Does not add S itself.
inline VertexSet out_neighborhood(const Digraph& g, const VertexSet& s) {
  if (s.universe() != g.vertex_count()) throw std::invalid_argument("vertex set universe does not match graph");
  VertexSet out(g.vertex_count());
  s.for_each([&](Vertex v) {
    for (Vertex w : g.out_neighbors(v)) out.insert(w);
  });
  return out;
}

// Arc-list text format:
//   n <vertex_count>
//   <u> <v>
//   ...
// Blank lines and anything after '#' are ignored. The header must precede arcs.

inline Digraph read_arc_list(std::istream& in) {
  std::string line;
  std::size_t line_no = 0;
  bool have_header = false;
  std::size_t count = 0;
  std::vector<Arc> arcs;
  auto fail = [&](const std::string& why) {
    throw std::invalid_argument("arc list line " + std::to_string(line_no) + ": " + why);
  };
  while (std::getline(in, line)) {
    ++line_no;
    if (const auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    std::istringstream fields(line);
    std::string first;
    if (!(fields >> first)) continue;
    if (!have_header) {
      long long value = -1;
      if (first != "n" || !(fields >> value) || value < 0) fail("expected header 'n <vertex_count>'");
      count = static_cast<std::size_t>(value);
      have_header = true;
    } else {
      long long u = -1;
      long long v = -1;
      try {
        std::size_t used = 0;
        u = std::stoll(first, &used);
        if (used != first.size()) fail("malformed vertex '" + first + "'");
      } catch (const std::logic_error&) {
        fail("malformed vertex '" + first + "'");
      }
      if (!(fields >> v)) fail("expected two vertex indices");
      if (u < 0 || v < 0) fail("negative vertex index");
      arcs.push_back({static_cast<Vertex>(u), static_cast<Vertex>(v)});
    }
    std::string extra;
    if (fields >> extra) fail("unexpected trailing token '" + extra + "'");
  }
  if (!have_header) throw std::invalid_argument("arc list: missing header 'n <vertex_count>'");
  return Digraph::build(count, arcs);
}

inline void write_arc_list(std::ostream& out, const Digraph& g) {
  out << "n " << g.vertex_count() << '\n';
  for (const Arc& a : g.arcs()) out << a.from << ' ' << a.to << '\n';
}

}  // namespace powerdom
