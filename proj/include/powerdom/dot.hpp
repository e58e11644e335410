#pragma once

#include <algorithm>
#include <ostream>
#include <string>
#include <vector>

#include "powerdom/propagation.hpp"
#include "powerdom/topologies.hpp"

namespace powerdom {

/// Writes G in Graphviz DOT. Nodes carry label=<word> for classic families and
/// the index otherwise. Arcs that appear as force events in `trace` are drawn
/// with color=blue; members of the traced closure are filled.
inline void write_dot(std::ostream& out, const Digraph& g, const FamilySpec* spec = nullptr,
                      const ForceTrace* trace = nullptr) {
  std::vector<std::vector<Vertex>> forced_by(g.vertex_count());
  std::vector<char> blue(g.vertex_count(), 0);
  if (trace != nullptr) {
    trace->initial_set.for_each([&](Vertex v) { blue[v] = 1; });
    for (const auto& e : trace->events) {
      forced_by[e.forcer].push_back(e.forced);
      blue[e.forced] = 1;
    }
  }
  out << "digraph G {\n";
  for (Vertex v = 0; v < g.vertex_count(); ++v) {
    const std::string label = spec != nullptr ? vertex_label(*spec, v) : std::to_string(v);
    out << "  " << v << " [label=\"" << label << "\"";
    if (trace != nullptr && blue[v] != 0) out << ", style=filled, fillcolor=lightblue";
    out << "];\n";
  }
  for (Vertex u = 0; u < g.vertex_count(); ++u) {
    for (Vertex w : g.out_neighbors(u)) {
      out << "  " << u << " -> " << w;
      const auto& f = forced_by[u];
      if (std::find(f.begin(), f.end(), w) != f.end()) out << " [color=blue]";
      out << ";\n";
    }
  }
  out << "}\n";
}

}  // namespace powerdom
