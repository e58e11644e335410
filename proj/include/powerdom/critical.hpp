#pragma once

#include <algorithm>
#include <bit>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "powerdom/propagation.hpp"
#include "powerdom/topologies.hpp"

namespace powerdom {

enum class CriticalKind { strong, weak };

inline std::string_view to_string(CriticalKind k) { return k == CriticalKind::strong ? "strong" : "weak"; }

inline CriticalKind parse_critical_kind(std::string_view s) {
  if (s == "strong") return CriticalKind::strong;
  if (s == "weak") return CriticalKind::weak;
  throw std::invalid_argument("unknown critical kind '" + std::string(s) + "'");
}

/// Raised when an exhaustive enumeration would exceed its vertex ceiling.
class SizeLimitError : public std::length_error {
 public:
  SizeLimitError(std::size_t vertices, std::size_t limit)
      : std::length_error("exhaustive enumeration refused: graph has " + std::to_string(vertices) +
                          " vertices, limit is " + std::to_string(limit)) {}
};

namespace detail {

// Counts |N_out(v) ∩ W| for every v with at least one out-neighbor in W, by
// walking in-arcs of W. Returns true iff some relevant v hits exactly one.
inline bool has_single_hitter(const Digraph& g, std::span<const Vertex> w, bool skip_members) {
  std::vector<Vertex> hitters;
  for (Vertex x : w)
    for (Vertex p : g.in_neighbors(x)) hitters.push_back(p);
  std::sort(hitters.begin(), hitters.end());
  std::vector<Vertex> sorted_w(w.begin(), w.end());
  std::sort(sorted_w.begin(), sorted_w.end());
  for (std::size_t i = 0; i < hitters.size();) {
    std::size_t j = i;
    while (j < hitters.size() && hitters[j] == hitters[i]) ++j;
    if (j - i == 1 && !(skip_members && std::binary_search(sorted_w.begin(), sorted_w.end(), hitters[i]))) return true;
    i = j;
  }
  return false;
}

inline std::vector<std::uint64_t> out_masks(const Digraph& g) {
  std::vector<std::uint64_t> masks(g.vertex_count(), 0);
  for (Vertex v = 0; v < g.vertex_count(); ++v)
    for (Vertex w : g.out_neighbors(v)) masks[v] |= std::uint64_t{1} << w;
  return masks;
}

inline bool critical_mask(std::span<const std::uint64_t> out, std::uint64_t w, CriticalKind kind) {
  for (std::size_t v = 0; v < out.size(); ++v) {
    if (kind == CriticalKind::weak && ((w >> v) & 1u) != 0) continue;
    if (std::popcount(out[v] & w) == 1) return false;
  }
  return true;
}

// True iff every nonempty critical set of the given kind meets `hit`. Only
// subsets of the complement of `hit` can be missed, so only those are visited.
inline bool mask_cover(const Digraph& g, std::uint64_t hit, CriticalKind kind, std::size_t limit) {
  const std::size_t n = g.vertex_count();
  if (n > limit) throw SizeLimitError(n, limit);
  if (n > 63) throw SizeLimitError(n, 63);
  const auto out = out_masks(g);
  const std::uint64_t all = n == 0 ? 0 : (std::uint64_t{1} << n) - 1;
  const std::uint64_t free = all & ~hit;
  for (std::uint64_t w = free; w != 0; w = (w - 1) & free)
    if (critical_mask(out, w, kind)) return false;
  return true;
}

}  // namespace detail

/// Nonempty W such that no vertex of G has exactly one out-neighbor in W.
inline bool is_strongly_critical(const Digraph& g, const VertexSet& w) {
  detail::require_universe(g, w);
  if (w.empty()) throw std::invalid_argument("criticality is defined for nonempty sets only");
  const auto members = w.members();
  return !detail::has_single_hitter(g, members, false);
}

/// Nonempty W such that no vertex outside W has exactly one out-neighbor in W.
inline bool is_weakly_critical(const Digraph& g, const VertexSet& w) {
  detail::require_universe(g, w);
  if (w.empty()) throw std::invalid_argument("criticality is defined for nonempty sets only");
  const auto members = w.members();
  return !detail::has_single_hitter(g, members, true);
}

inline bool is_critical(const Digraph& g, const VertexSet& w, CriticalKind kind) {
  return kind == CriticalKind::strong ? is_strongly_critical(g, w) : is_weakly_critical(g, w);
}

inline constexpr std::size_t default_cover_limit = 20;
inline constexpr std::size_t default_enumeration_limit = 14;

/// S meets every nonempty strongly critical set. Exhaustive.
inline bool check_zf_cover(const Digraph& g, const VertexSet& s, std::size_t limit = default_cover_limit) {
  detail::require_universe(g, s);
  return detail::mask_cover(g, s.mask(), CriticalKind::strong, limit);
}

/// S ∪ N_out(S) meets every nonempty weakly critical set. Exhaustive.
inline bool check_pd_cover(const Digraph& g, const VertexSet& s, std::size_t limit = default_cover_limit) {
  detail::require_universe(g, s);
  if (g.vertex_count() > limit) throw SizeLimitError(g.vertex_count(), limit);
  return detail::mask_cover(g, dominate(g, s).mask(), CriticalKind::weak, limit);
}

/// The cells X(a_1..a_(n-1)) ordered by prefix index. Under both word codecs
/// the last symbol is the least significant base-d digit, so cell p is the
/// index range [p*d, p*d + d).
inline std::vector<VertexSet> x_partition(const FamilySpec& spec) {
  if (!is_classic(spec.family)) throw std::invalid_argument("the X-partition exists only for debruijn and kautz");
  const auto count = vertex_count(spec);
  const auto d = static_cast<std::uint64_t>(spec.d);
  std::vector<VertexSet> cells;
  cells.reserve(count / d);
  for (std::uint64_t p = 0; p < count / d; ++p) {
    VertexSet cell(count);
    for (std::uint64_t r = 0; r < d; ++r) cell.insert(static_cast<Vertex>(p * d + r));
    cells.push_back(std::move(cell));
  }
  return cells;
}

/// counts[k] = number of X-cells meeting S in exactly k vertices, k = 0..d.
struct PartitionProfile {
  std::vector<std::size_t> counts;
  std::size_t cell_count = 0;

  [[nodiscard]] std::size_t weighted_total() const {
    std::size_t t = 0;
    for (std::size_t k = 0; k < counts.size(); ++k) t += k * counts[k];
    return t;
  }
};

inline PartitionProfile partition_profile(const FamilySpec& spec, const VertexSet& s) {
  if (!is_classic(spec.family)) throw std::invalid_argument("the X-partition exists only for debruijn and kautz");
  const auto count = vertex_count(spec);
  if (s.universe() != count) throw std::invalid_argument("vertex set universe does not match the family size");
  const auto d = static_cast<std::uint64_t>(spec.d);
  PartitionProfile profile{std::vector<std::size_t>(d + 1, 0), count / d};
  for (std::uint64_t p = 0; p < count / d; ++p) {
    std::size_t k = 0;
    for (std::uint64_t r = 0; r < d; ++r) k += s.contains(static_cast<Vertex>(p * d + r)) ? 1 : 0;
    ++profile.counts[k];
  }
  return profile;
}

enum class CertificateKind { zf_partition_bound, pd_partition_necessity };

inline std::string_view to_string(CertificateKind k) {
  return k == CertificateKind::zf_partition_bound ? "zf-partition-bound" : "pd-partition-necessity";
}

struct CellFailure {
  std::size_t cell;
  /// The offending 2-subset (zf) or the covered part of the cell (pd).
  std::vector<Vertex> vertices;
};

/// Checkable content of the partition lower-bound arguments.
///
/// zf-partition-bound: every 2-subset of every cell is strongly critical, so
/// any zero forcing set has at least d-1 vertices per cell and `bound` is
/// (d-1) * cells. pd-partition-necessity: S ∪ N_out(S) meets every cell in at
/// least d-1 vertices; `bound` is that per-cell threshold.
struct Certificate {
  CertificateKind kind = CertificateKind::zf_partition_bound;
  std::uint64_t bound = 0;
  std::size_t verified_cells = 0;
  std::size_t cells_checked = 0;
  std::vector<CellFailure> witness_failures;

  [[nodiscard]] bool valid() const { return witness_failures.empty(); }
};

inline Certificate zf_partition_bound(const FamilySpec& spec) {
  if (!is_classic(spec.family)) throw std::invalid_argument("partition certificates exist only for debruijn and kautz");
  const Digraph g = generate(spec);
  const auto d = static_cast<Vertex>(spec.d);
  const auto cells = static_cast<Vertex>(g.vertex_count() / d);
  Certificate cert;
  cert.kind = CertificateKind::zf_partition_bound;
  cert.cells_checked = cells;
  for (Vertex p = 0; p < cells; ++p) {
    bool ok = true;
    for (Vertex i = 0; i < d; ++i) {
      for (Vertex j = i + 1; j < d; ++j) {
        const Vertex pair[2] = {p * d + i, p * d + j};
        if (detail::has_single_hitter(g, pair, false)) {
          ok = false;
          cert.witness_failures.push_back({p, {pair[0], pair[1]}});
        }
      }
    }
    if (ok) ++cert.verified_cells;
  }
  cert.bound = static_cast<std::uint64_t>(spec.d - 1) * cells;
  return cert;
}

inline Certificate pd_partition_necessity(const FamilySpec& spec, const VertexSet& s) {
  if (!is_classic(spec.family)) throw std::invalid_argument("partition certificates exist only for debruijn and kautz");
  const Digraph g = generate(spec);
  const VertexSet z = dominate(g, s);
  const auto d = static_cast<Vertex>(spec.d);
  const auto cells = static_cast<Vertex>(g.vertex_count() / d);
  Certificate cert;
  cert.kind = CertificateKind::pd_partition_necessity;
  cert.bound = static_cast<std::uint64_t>(spec.d - 1);
  cert.cells_checked = cells;
  for (Vertex p = 0; p < cells; ++p) {
    std::vector<Vertex> covered;
    for (Vertex r = 0; r < d; ++r)
      if (z.contains(p * d + r)) covered.push_back(p * d + r);
    if (covered.size() + 1 >= d)
      ++cert.verified_cells;
    else
      cert.witness_failures.push_back({p, std::move(covered)});
  }
  return cert;
}

/// All nonempty critical sets with no critical proper nonempty subset, in
/// lexicographic order of their member lists.
inline std::vector<VertexSet> enumerate_minimal_critical(const Digraph& g, CriticalKind kind,
                                                         std::size_t max_vertices = default_enumeration_limit) {
  const std::size_t n = g.vertex_count();
  if (n > max_vertices) throw SizeLimitError(n, max_vertices);
  if (n > 30) throw SizeLimitError(n, 30);
  const auto out = detail::out_masks(g);
  const std::uint64_t subsets = std::uint64_t{1} << n;
  std::vector<char> critical(subsets, 0);
  for (std::uint64_t w = 1; w < subsets; ++w) critical[w] = detail::critical_mask(out, w, kind) ? 1 : 0;

  std::vector<VertexSet> result;
  for (std::uint64_t w = 1; w < subsets; ++w) {
    if (critical[w] == 0) continue;
    bool minimal = true;
    for (std::uint64_t sub = (w - 1) & w; sub != 0; sub = (sub - 1) & w) {
      if (critical[sub] != 0) {
        minimal = false;
        break;
      }
    }
    if (minimal) result.push_back(VertexSet::from_mask(n, w));
  }
  std::sort(result.begin(), result.end(), VertexSet::lex_less);
  return result;
}

}  // namespace powerdom
