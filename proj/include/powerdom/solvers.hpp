#pragma once

#include <algorithm>
#include <atomic>
#include <bit>
#include <chrono>
#include <cstdint>
#include <limits>
#include <mutex>
#include <optional>
#include <span>
#include <thread>
#include <vector>

#include "powerdom/propagation.hpp"
#include "powerdom/topologies.hpp"

namespace powerdom {

/// Exploration caps. Exceeding either one ends the search with bounds only.
struct Budget {
  std::uint64_t max_nodes = 50'000'000;
  std::chrono::milliseconds max_time{120'000};
};

struct SolveOptions {
  /// A proven lower bound; the cardinality sweep starts here.
  std::optional<std::size_t> lower_bound_hint;
  Budget budget;
  unsigned workers = 1;
};

enum class SolveStatus { exact, budget_exhausted };

struct SolveResult {
  Problem quantity = Problem::zero_forcing;
  ForcerRule rule = ForcerRule::any_forcer;
  SolveStatus status = SolveStatus::exact;
  /// Set only when status is exact.
  std::optional<std::size_t> minimum;
  std::size_t lower_bound = 0;
  std::size_t upper_bound = 0;
  /// Lexicographically least minimum witness when exact; best known set otherwise.
  VertexSet witness;
  /// Candidate sets preceding and including the witness in search order
  /// (deterministic); the number actually evaluated when the budget ran out.
  std::uint64_t nodes_explored = 0;
  std::chrono::milliseconds elapsed{0};

  [[nodiscard]] bool exact() const { return status == SolveStatus::exact; }
};

namespace detail {

inline std::uint64_t binomial(std::uint64_t n, std::uint64_t k) {
  if (k > n) return 0;
  k = std::min(k, n - k);
  unsigned __int128 r = 1;
  for (std::uint64_t i = 1; i <= k; ++i) {
    r = r * (n - k + i) / i;
    if (r > std::numeric_limits<std::uint64_t>::max()) return std::numeric_limits<std::uint64_t>::max();
  }
  return static_cast<std::uint64_t>(r);
}

inline std::uint64_t saturating_add(std::uint64_t a, std::uint64_t b) {
  return a > std::numeric_limits<std::uint64_t>::max() - b ? std::numeric_limits<std::uint64_t>::max() : a + b;
}

// The rank-th k-subset of {0..n-1} in lexicographic order.
inline void unrank_combination(std::uint64_t n, std::uint64_t k, std::uint64_t rank, std::vector<Vertex>& out) {
  out.resize(k);
  Vertex c = 0;
  for (std::uint64_t i = 0; i < k; ++i) {
    for (;; ++c) {
      const auto with_c = binomial(n - c - 1, k - i - 1);
      if (rank < with_c) break;
      rank -= with_c;
    }
    out[i] = c++;
  }
}

inline bool next_combination(std::vector<Vertex>& c, std::uint64_t n) {
  const std::size_t k = c.size();
  std::size_t i = k;
  while (i > 0) {
    --i;
    if (c[i] < n - k + i) {
      ++c[i];
      for (std::size_t j = i + 1; j < k; ++j) c[j] = c[j - 1] + 1;
      return true;
    }
  }
  return false;
}

/// Closure-covers-V predicate over explicit vertex lists. Graphs of at most
/// 64 vertices use a word-parallel fixpoint; larger graphs go through the
/// general engines.
class Feasibility {
 public:
  Feasibility(const Digraph& g, Problem problem, ForcerRule rule)
      : g_(&g), problem_(problem), rule_(problem == Problem::power_domination ? ForcerRule::blue_only : rule) {
    n_ = g.vertex_count();
    if (n_ <= 64) {
      out_.assign(n_, 0);
      for (Vertex v = 0; v < n_; ++v)
        for (Vertex w : g.out_neighbors(v)) out_[v] |= std::uint64_t{1} << w;
      all_ = n_ == 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << n_) - 1;
    }
  }

  bool operator()(std::span<const Vertex> set) const {
    if (n_ > 64) {
      VertexSet s(n_);
      for (Vertex v : set) s.insert(v);
      return problem_ == Problem::zero_forcing ? is_zero_forcing(*g_, s, rule_) : is_power_dominating(*g_, s);
    }
    std::uint64_t blue = 0;
    for (Vertex v : set) {
      blue |= std::uint64_t{1} << v;
      if (problem_ == Problem::power_domination) blue |= out_[v];
    }
    bool changed = true;
    while (changed && blue != all_) {
      changed = false;
      for (std::size_t u = 0; u < n_; ++u) {
        if (rule_ == ForcerRule::blue_only && ((blue >> u) & 1u) == 0) continue;
        const std::uint64_t red = out_[u] & ~blue;
        if (red != 0 && (red & (red - 1)) == 0) {
          blue |= red;
          changed = true;
        }
      }
    }
    return blue == all_;
  }

 private:
  const Digraph* g_;
  Problem problem_;
  ForcerRule rule_;
  std::size_t n_ = 0;
  std::vector<std::uint64_t> out_;
  std::uint64_t all_ = 0;
};

inline VertexSet closure_of(const Digraph& g, const VertexSet& s, Problem problem, ForcerRule rule) {
  return problem == Problem::zero_forcing ? zf_closure(g, s, rule).closed : monitored_set(g, s).closed;
}

}  // namespace detail

/// A valid, not necessarily minimum, set: repeatedly add the vertex whose
/// addition grows the closure most (least index on ties).
inline VertexSet greedy_upper_bound(const Digraph& g, Problem problem, ForcerRule rule = ForcerRule::any_forcer) {
  const std::size_t n = g.vertex_count();
  VertexSet s(n);
  VertexSet closed = detail::closure_of(g, s, problem, rule);
  while (!closed.is_full()) {
    std::optional<Vertex> best;
    std::size_t best_size = closed.size();
    VertexSet best_closure;
    for (Vertex v = 0; v < n; ++v) {
      if (s.contains(v)) continue;
      VertexSet trial = s;
      trial.insert(v);
      VertexSet c = detail::closure_of(g, trial, problem, rule);
      if (c.size() > best_size) {
        best = v;
        best_size = c.size();
        best_closure = std::move(c);
      }
    }
    if (!best) {
      // No growth anywhere: add the least uncovered vertex.
      const auto uncovered = closed.complement().members();
      best = uncovered.front();
      s.insert(*best);
      closed = detail::closure_of(g, s, problem, rule);
      continue;
    }
    s.insert(*best);
    closed = std::move(best_closure);
  }
  return s;
}

namespace detail {

inline SolveResult solve_minimum(const Digraph& g, Problem problem, ForcerRule rule, const SolveOptions& options) {
  using clock = std::chrono::steady_clock;
  const auto start = clock::now();
  const std::uint64_t n = g.vertex_count();
  const Feasibility feasible(g, problem, rule);

  SolveResult result;
  result.quantity = problem;
  result.rule = problem == Problem::power_domination ? ForcerRule::blue_only : rule;

  constexpr std::uint64_t chunk_size = 1 << 12;
  const unsigned workers = std::max(1u, options.workers);
  std::atomic<std::uint64_t> evaluated{0};
  std::atomic<bool> aborted{false};
  std::uint64_t preceding = 0;
  const std::size_t first_k = std::min<std::size_t>(options.lower_bound_hint.value_or(0), n);

  for (std::size_t k = first_k; k <= n; ++k) {
    const std::uint64_t total = binomial(n, k);
    const std::uint64_t chunks = total / chunk_size + (total % chunk_size != 0 ? 1 : 0);
    std::atomic<std::uint64_t> next_chunk{0};
    std::atomic<std::uint64_t> best_chunk{std::numeric_limits<std::uint64_t>::max()};
    std::mutex found_mutex;
    std::vector<Vertex> found;
    std::uint64_t found_rank = 0;

    auto work = [&] {
      std::vector<Vertex> combo;
      std::uint64_t local = 0;
      auto flush = [&] {
        const auto seen = evaluated.fetch_add(local) + local;
        local = 0;
        if (seen >= options.budget.max_nodes || clock::now() - start >= options.budget.max_time) aborted = true;
      };
      for (;;) {
        const std::uint64_t c = next_chunk.fetch_add(1);
        // Chunks are claimed in order, so every chunk below best_chunk is finished by someone.
        if (c >= chunks || c > best_chunk.load() || aborted.load()) break;
        const std::uint64_t first = c * chunk_size;
        const std::uint64_t last = std::min(total, first + chunk_size);
        unrank_combination(n, k, first, combo);
        for (std::uint64_t r = first; r < last; ++r) {
          if (r != first) next_combination(combo, n);
          ++local;
          if (local >= 256) {
            flush();
            if (aborted.load()) break;
          }
          if (feasible(combo)) {
            std::lock_guard lock(found_mutex);
            if (c < best_chunk.load()) {
              best_chunk = c;
              found = combo;
              found_rank = r;
            }
            break;
          }
        }
        flush();
      }
    };

    if (workers == 1) {
      work();
    } else {
      std::vector<std::jthread> pool;
      for (unsigned i = 0; i < workers; ++i) pool.emplace_back(work);
    }

    if (aborted.load()) {
      result.status = SolveStatus::budget_exhausted;
      result.lower_bound = k;
      if (!found.empty() || (k == 0 && best_chunk.load() == 0)) {
        result.upper_bound = k;
        result.witness = VertexSet::from_indices(n, found);
      } else {
        result.witness = greedy_upper_bound(g, problem, result.rule);
        result.upper_bound = result.witness.size();
      }
      result.nodes_explored = evaluated.load();
      break;
    }
    if (best_chunk.load() != std::numeric_limits<std::uint64_t>::max()) {
      result.status = SolveStatus::exact;
      result.minimum = k;
      result.lower_bound = k;
      result.upper_bound = k;
      result.witness = VertexSet::from_indices(n, found);
      result.nodes_explored = saturating_add(preceding, found_rank + 1);
      break;
    }
    preceding = saturating_add(preceding, total);
  }
  result.elapsed = std::chrono::duration_cast<std::chrono::milliseconds>(clock::now() - start);
  return result;
}

}  // namespace detail

/// Exact Z(G) under `rule`: subsets in increasing cardinality, lexicographic
/// within a cardinality; the first feasible one is the witness.
inline SolveResult min_zero_forcing(const Digraph& g, ForcerRule rule = ForcerRule::any_forcer,
                                    const SolveOptions& options = {}) {
  return detail::solve_minimum(g, Problem::zero_forcing, rule, options);
}

/// Exact gamma_p(G), same search order as min_zero_forcing.
inline SolveResult min_power_dominating(const Digraph& g, const SolveOptions& options = {}) {
  return detail::solve_minimum(g, Problem::power_domination, ForcerRule::blue_only, options);
}

inline SolveResult solve(const Digraph& g, Problem problem, ForcerRule rule, const SolveOptions& options = {}) {
  return problem == Problem::zero_forcing ? min_zero_forcing(g, rule, options) : min_power_dominating(g, options);
}

struct OpenProblemRow {
  FamilySpec spec;
  std::size_t arc_count = 0;
  SolveResult gamma_p;
  SolveResult z_any;
  SolveResult z_blue;
};

/// Exact small values of gamma_p and Z (both forcer rules) for the
/// generalized families, in (d, m) ascending order.
inline std::vector<OpenProblemRow> open_problem_table(Family family, int d_first, int d_last, int m_first, int m_last,
                                                      const Budget& budget = {}) {
  if (family != Family::gen_debruijn && family != Family::gen_kautz)
    throw std::invalid_argument("open problem tables cover gen-debruijn and gen-kautz only");
  std::vector<OpenProblemRow> rows;
  SolveOptions options;
  options.budget = budget;
  for (int d = d_first; d <= d_last; ++d) {
    for (int m = m_first; m <= m_last; ++m) {
      OpenProblemRow row;
      row.spec = {family, d, m};
      const Digraph g = generate(row.spec);
      row.arc_count = g.arc_count();
      row.gamma_p = min_power_dominating(g, options);
      row.z_any = min_zero_forcing(g, ForcerRule::any_forcer, options);
      row.z_blue = min_zero_forcing(g, ForcerRule::blue_only, options);
      rows.push_back(std::move(row));
    }
  }
  return rows;
}

}  // namespace powerdom
