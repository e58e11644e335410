#pragma once

#include <algorithm>
#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string_view>
#include <vector>

#include "powerdom/digraph.hpp"

namespace powerdom {

/// Who may act as the forcer u in "w is the only red out-neighbor of u".
///
/// `any_forcer` places no color constraint on u; u may be red and may force
/// itself through a loop. `blue_only` requires u to be blue already.
enum class ForcerRule { any_forcer, blue_only };

enum class Problem { power_domination, zero_forcing };

inline std::string_view to_string(ForcerRule r) { return r == ForcerRule::any_forcer ? "any" : "blue"; }
inline std::string_view to_string(Problem p) { return p == Problem::zero_forcing ? "zf" : "pd"; }

inline ForcerRule parse_rule(std::string_view s) {
  if (s == "any" || s == "any-forcer") return ForcerRule::any_forcer;
  if (s == "blue" || s == "blue-only") return ForcerRule::blue_only;
  throw std::invalid_argument("unknown forcer rule '" + std::string(s) + "'");
}

inline Problem parse_problem(std::string_view s) {
  if (s == "zf" || s == "Z") return Problem::zero_forcing;
  if (s == "pd" || s == "gamma_p") return Problem::power_domination;
  throw std::invalid_argument("unknown problem '" + std::string(s) + "'");
}

struct ForceEvent {
  std::size_t round;
  Vertex forcer;
  Vertex forced;
  friend bool operator==(const ForceEvent&, const ForceEvent&) = default;
};

/// Ordered log of the forces that grew `initial_set` into a closure.
/// For monitored sets the domination step is logged as round 1.
struct ForceTrace {
  VertexSet initial_set;
  std::vector<ForceEvent> events;

  /// Index of the last round that changed anything; 0 when nothing was forced.
  [[nodiscard]] std::size_t rounds() const { return events.empty() ? 0 : events.back().round; }

  [[nodiscard]] VertexSet replay() const {
    VertexSet s = initial_set;
    for (const auto& e : events) s.insert(e.forced);
    return s;
  }
};

struct Closure {
  VertexSet closed;
  ForceTrace trace;
};

namespace detail {

inline void require_universe(const Digraph& g, const VertexSet& s) {
  if (s.universe() != g.vertex_count())
    throw std::invalid_argument("vertex set universe " + std::to_string(s.universe()) +
                                " does not match graph with " + std::to_string(g.vertex_count()) + " vertices");
}

// Synchronous color-change fixpoint. Each round fires every force applicable
// to the blue set at the start of the round; when several vertices could
// force the same w, the least-index forcer is logged. Rounds are numbered
// from first_round.
inline void run_forcing(const Digraph& g, VertexSet& blue, ForcerRule rule, std::size_t first_round,
                        std::vector<ForceEvent>* events) {
  const std::size_t n = g.vertex_count();
  std::vector<std::size_t> red_out(n, 0);
  for (Vertex u = 0; u < n; ++u)
    for (Vertex w : g.out_neighbors(u))
      if (!blue.contains(w)) ++red_out[u];

  std::vector<Vertex> candidates(n);
  for (Vertex u = 0; u < n; ++u) candidates[u] = u;
  std::vector<char> forced_now(n, 0);
  std::vector<Vertex> forced;
  std::vector<Vertex> next;

  for (std::size_t round = first_round; !candidates.empty(); ++round) {
    forced.clear();
    // A vertex that can force but is not a candidate would have fired in an
    // earlier round, so scanning only vertices touched last round is complete.
    for (Vertex u : candidates) {
      if (red_out[u] != 1) continue;
      if (rule == ForcerRule::blue_only && !blue.contains(u)) continue;
      Vertex target = 0;
      for (Vertex w : g.out_neighbors(u)) {
        if (!blue.contains(w)) {
          target = w;
          break;
        }
      }
      if (forced_now[target] != 0) continue;
      forced_now[target] = 1;
      forced.push_back(target);
      if (events != nullptr) events->push_back({round, u, target});
    }
    if (forced.empty()) break;

    next.clear();
    for (Vertex w : forced) {
      forced_now[w] = 0;
      blue.insert(w);
      next.push_back(w);
      for (Vertex p : g.in_neighbors(w)) {
        --red_out[p];
        next.push_back(p);
      }
    }
    std::sort(next.begin(), next.end());
    next.erase(std::unique(next.begin(), next.end()), next.end());
    candidates.swap(next);
  }
}

}  // namespace detail

/// S together with its out-neighborhood.
inline VertexSet dominate(const Digraph& g, const VertexSet& s) {
  detail::require_universe(g, s);
  return s | out_neighborhood(g, s);
}

/// Least fixpoint of the color-change rule starting from blue set `s`.
inline Closure zf_closure(const Digraph& g, const VertexSet& s, ForcerRule rule = ForcerRule::any_forcer) {
  detail::require_universe(g, s);
  Closure result{s, ForceTrace{s, {}}};
  detail::run_forcing(g, result.closed, rule, 1, &result.trace.events);
  return result;
}

/// M(S): round 1 adds N_out(S) to S, later rounds apply the blue-only rule.
inline Closure monitored_set(const Digraph& g, const VertexSet& s) {
  detail::require_universe(g, s);
  Closure result{s, ForceTrace{s, {}}};
  auto& events = result.trace.events;
  s.for_each([&](Vertex u) {
    for (Vertex w : g.out_neighbors(u)) {
      if (result.closed.contains(w)) continue;
      result.closed.insert(w);
      events.push_back({1, u, w});
    }
  });
  // Members of S are visited in ascending order, so each w is credited to its least dominator.
  std::sort(events.begin(), events.end(),
            [](const ForceEvent& a, const ForceEvent& b) { return a.forced < b.forced; });
  detail::run_forcing(g, result.closed, ForcerRule::blue_only, 2, &events);
  return result;
}

inline bool is_zero_forcing(const Digraph& g, const VertexSet& s, ForcerRule rule = ForcerRule::any_forcer) {
  detail::require_universe(g, s);
  VertexSet blue = s;
  detail::run_forcing(g, blue, rule, 1, nullptr);
  return blue.is_full();
}

inline bool is_power_dominating(const Digraph& g, const VertexSet& s) {
  VertexSet blue = dominate(g, s);
  detail::run_forcing(g, blue, ForcerRule::blue_only, 2, nullptr);
  return blue.is_full();
}

/// Synchronous rounds until the closure reaches V (the domination step counts
/// as one round for power domination); nullopt when the closure never does.
inline std::optional<std::size_t> propagation_time(const Digraph& g, const VertexSet& s, Problem problem,
                                                   ForcerRule rule = ForcerRule::any_forcer) {
  const Closure c = problem == Problem::zero_forcing ? zf_closure(g, s, rule) : monitored_set(g, s);
  if (!c.closed.is_full()) return std::nullopt;
  return c.trace.rounds();
}

}  // namespace powerdom
