#pragma once

#include <cstdint>
#include <limits>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "powerdom/digraph.hpp"

namespace powerdom {

enum class Family { debruijn, kautz, gen_debruijn, gen_kautz };

inline std::string_view to_string(Family f) {
  switch (f) {
    case Family::debruijn: return "debruijn";
    case Family::kautz: return "kautz";
    case Family::gen_debruijn: return "gen-debruijn";
    case Family::gen_kautz: return "gen-kautz";
  }
  return "?";
}

inline Family parse_family(std::string_view name) {
  if (name == "debruijn") return Family::debruijn;
  if (name == "kautz") return Family::kautz;
  if (name == "gen-debruijn") return Family::gen_debruijn;
  if (name == "gen-kautz") return Family::gen_kautz;
  throw std::invalid_argument("unknown family '" + std::string(name) + "'");
}

inline bool is_classic(Family f) { return f == Family::debruijn || f == Family::kautz; }

/// Largest vertex count any generator will produce.
inline constexpr std::uint64_t max_generated_vertices = std::uint64_t{1} << 26;

/// Parameters of one graph family member. For the classic families `n` is the
/// word length; for the generalized families it is the vertex count m.
struct FamilySpec {
  Family family = Family::debruijn;
  int d = 2;
  int n = 2;

  friend bool operator==(const FamilySpec&, const FamilySpec&) = default;
};

namespace detail {

// Saturates at max_generated_vertices + 1 so callers can reject oversized specs.
inline std::uint64_t bounded_pow(std::uint64_t base, int exp) {
  std::uint64_t r = 1;
  for (int i = 0; i < exp; ++i) {
    if (r > max_generated_vertices / base) return max_generated_vertices + 1;
    r *= base;
  }
  return r;
}

}  // namespace detail

inline void validate(const FamilySpec& spec) {
  if (spec.d < 2) throw std::invalid_argument("degree parameter d must be at least 2 (got " + std::to_string(spec.d) + ")");
  if (is_classic(spec.family)) {
    if (spec.n < 2) throw std::invalid_argument("word length n must be at least 2 (got " + std::to_string(spec.n) + ")");
  } else if (spec.n < 1) {
    throw std::invalid_argument("vertex count m must be at least 1 (got " + std::to_string(spec.n) + ")");
  }
}

/// Size of the symbol alphabet: d for de Bruijn, d+1 for Kautz.
inline int alphabet_size(const FamilySpec& spec) { return spec.family == Family::kautz ? spec.d + 1 : spec.d; }

inline std::uint64_t vertex_count(const FamilySpec& spec) {
  validate(spec);
  const auto d = static_cast<std::uint64_t>(spec.d);
  std::uint64_t count = 0;
  switch (spec.family) {
    case Family::debruijn: count = detail::bounded_pow(d, spec.n); break;
    case Family::kautz: {
      const auto p = detail::bounded_pow(d, spec.n - 1);
      count = p > max_generated_vertices / (d + 1) ? max_generated_vertices + 1 : (d + 1) * p;
      break;
    }
    default: count = static_cast<std::uint64_t>(spec.n); break;
  }
  if (count > max_generated_vertices)
    throw std::length_error("graph would exceed " + std::to_string(max_generated_vertices) + " vertices");
  return count;
}

/// A de Bruijn or Kautz vertex as its symbol sequence (a_1, ..., a_n).
struct WordVertex {
  Family family = Family::debruijn;
  int d = 2;
  std::vector<int> symbols;

  friend bool operator==(const WordVertex&, const WordVertex&) = default;
};

inline void validate(const WordVertex& w) {
  if (!is_classic(w.family)) throw std::invalid_argument("words exist only for debruijn and kautz vertices");
  if (w.d < 2) throw std::invalid_argument("degree parameter d must be at least 2");
  if (w.symbols.empty()) throw std::invalid_argument("empty word");
  const int alpha = w.family == Family::kautz ? w.d + 1 : w.d;
  for (std::size_t i = 0; i < w.symbols.size(); ++i) {
    if (w.symbols[i] < 0 || w.symbols[i] >= alpha)
      throw std::invalid_argument("symbol " + std::to_string(w.symbols[i]) + " at position " + std::to_string(i + 1) +
                                  " outside alphabet of size " + std::to_string(alpha));
    if (w.family == Family::kautz && i > 0 && w.symbols[i] == w.symbols[i - 1])
      throw std::invalid_argument("kautz word repeats symbol " + std::to_string(w.symbols[i]) + " at positions " +
                                  std::to_string(i) + "," + std::to_string(i + 1));
  }
}

/// de Bruijn: base-d positional value, a_1 most significant.
/// Kautz: a_1 * d^(n-1) plus, for i >= 2, the rank of a_i among Z_{d+1} \ {a_(i-1)} as a base-d digit.
inline Vertex word_to_index(const WordVertex& w) {
  validate(w);
  std::uint64_t index = 0;
  if (w.family == Family::debruijn) {
    for (int a : w.symbols) index = index * static_cast<std::uint64_t>(w.d) + static_cast<std::uint64_t>(a);
  } else {
    index = static_cast<std::uint64_t>(w.symbols[0]);
    for (std::size_t i = 1; i < w.symbols.size(); ++i) {
      const int a = w.symbols[i];
      const int rank = a < w.symbols[i - 1] ? a : a - 1;
      index = index * static_cast<std::uint64_t>(w.d) + static_cast<std::uint64_t>(rank);
    }
  }
  if (index > std::numeric_limits<Vertex>::max()) throw std::length_error("word index overflows vertex type");
  return static_cast<Vertex>(index);
}

inline WordVertex index_to_word(const FamilySpec& spec, Vertex index) {
  if (!is_classic(spec.family)) throw std::invalid_argument("words exist only for debruijn and kautz vertices");
  const auto count = vertex_count(spec);
  if (index >= count)
    throw std::out_of_range("index " + std::to_string(index) + " outside 0.." + std::to_string(count - 1));
  WordVertex w{spec.family, spec.d, std::vector<int>(static_cast<std::size_t>(spec.n))};
  std::uint64_t rest = index;
  // Peel base-d digits from the least significant end; the Kautz leading symbol is what remains.
  std::vector<int> digits(static_cast<std::size_t>(spec.n));
  for (int i = spec.n - 1; i >= 1; --i) {
    digits[static_cast<std::size_t>(i)] = static_cast<int>(rest % static_cast<std::uint64_t>(spec.d));
    rest /= static_cast<std::uint64_t>(spec.d);
  }
  digits[0] = static_cast<int>(rest);
  if (spec.family == Family::debruijn) {
    w.symbols = digits;
  } else {
    w.symbols[0] = digits[0];
    for (std::size_t i = 1; i < digits.size(); ++i) {
      const int rank = digits[i];
      w.symbols[i] = rank < w.symbols[i - 1] ? rank : rank + 1;
    }
  }
  return w;
}

/// Digit string when the alphabet fits in one decimal digit, otherwise a parenthesized tuple.
inline std::string format_word(const WordVertex& w) {
  const int alpha = w.family == Family::kautz ? w.d + 1 : w.d;
  std::string out;
  if (alpha <= 10) {
    for (int a : w.symbols) out.push_back(static_cast<char>('0' + a));
    return out;
  }
  out = "(";
  for (std::size_t i = 0; i < w.symbols.size(); ++i) {
    if (i > 0) out += ",";
    out += std::to_string(w.symbols[i]);
  }
  return out + ")";
}

/// Vertex label: the word for classic families, the index otherwise.
inline std::string vertex_label(const FamilySpec& spec, Vertex v) {
  if (!is_classic(spec.family)) return std::to_string(v);
  return format_word(index_to_word(spec, v));
}

inline Digraph debruijn(int d, int n) {
  const FamilySpec spec{Family::debruijn, d, n};
  const auto count = vertex_count(spec);
  std::vector<Arc> arcs;
  arcs.reserve(count * static_cast<std::uint64_t>(d));
  for (std::uint64_t v = 0; v < count; ++v) {
    const std::uint64_t shifted = (v * static_cast<std::uint64_t>(d)) % count;
    for (int b = 0; b < d; ++b)
      arcs.push_back({static_cast<Vertex>(v), static_cast<Vertex>(shifted + static_cast<std::uint64_t>(b))});
  }
  return Digraph::build(count, arcs);
}

inline Digraph kautz(int d, int n) {
  const FamilySpec spec{Family::kautz, d, n};
  const auto count = vertex_count(spec);
  std::vector<Arc> arcs;
  arcs.reserve(count * static_cast<std::uint64_t>(d));
  WordVertex next{Family::kautz, d, std::vector<int>(static_cast<std::size_t>(n))};
  for (std::uint64_t v = 0; v < count; ++v) {
    const auto word = index_to_word(spec, static_cast<Vertex>(v));
    std::copy(word.symbols.begin() + 1, word.symbols.end(), next.symbols.begin());
    for (int b = 0; b <= d; ++b) {
      if (b == word.symbols.back()) continue;
      next.symbols.back() = b;
      arcs.push_back({static_cast<Vertex>(v), word_to_index(next)});
    }
  }
  return Digraph::build(count, arcs);
}

/// GB(d, m): x -> d*x + i (mod m), 0 <= i < d. Coincident arcs collapse.
inline Digraph gen_debruijn(int d, int m) {
  const auto count = vertex_count({Family::gen_debruijn, d, m});
  std::vector<Arc> arcs;
  for (std::uint64_t x = 0; x < count; ++x)
    for (int i = 0; i < d; ++i)
      arcs.push_back({static_cast<Vertex>(x),
                      static_cast<Vertex>((static_cast<std::uint64_t>(d) * x + static_cast<std::uint64_t>(i)) % count)});
  return Digraph::build(count, arcs);
}

/// GK(d, m): x -> -d*x - i (mod m), 1 <= i <= d, residues in 0..m-1. Coincident arcs collapse.
inline Digraph gen_kautz(int d, int m) {
  const auto count = vertex_count({Family::gen_kautz, d, m});
  const auto mod = static_cast<std::int64_t>(count);
  std::vector<Arc> arcs;
  for (std::int64_t x = 0; x < mod; ++x) {
    for (int i = 1; i <= d; ++i) {
      std::int64_t y = (-static_cast<std::int64_t>(d) * x - i) % mod;
      if (y < 0) y += mod;
      arcs.push_back({static_cast<Vertex>(x), static_cast<Vertex>(y)});
    }
  }
  return Digraph::build(count, arcs);
}

inline Digraph generate(const FamilySpec& spec) {
  switch (spec.family) {
    case Family::debruijn: return debruijn(spec.d, spec.n);
    case Family::kautz: return kautz(spec.d, spec.n);
    case Family::gen_debruijn: return gen_debruijn(spec.d, spec.n);
    case Family::gen_kautz: return gen_kautz(spec.d, spec.n);
  }
  throw std::invalid_argument("unknown family");
}

}  // namespace powerdom
