#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <stdexcept>
#include <vector>

#include "powerdom/propagation.hpp"
#include "powerdom/topologies.hpp"

namespace powerdom {

namespace detail {

inline VertexSet collect_words(const FamilySpec& spec, const std::function<bool(const std::vector<int>&)>& keep) {
  const auto count = vertex_count(spec);
  VertexSet s(count);
  for (std::uint64_t v = 0; v < count; ++v) {
    const auto word = index_to_word(spec, static_cast<Vertex>(v));
    if (keep(word.symbols)) s.insert(static_cast<Vertex>(v));
  }
  return s;
}

inline void require_family(const FamilySpec& spec, Family family) {
  validate(spec);
  if (spec.family != family) throw std::invalid_argument("construction expects family " + std::string(to_string(family)));
}

inline std::int64_t ipow(std::int64_t base, int exp) {
  std::int64_t r = 1;
  for (int i = 0; i < exp; ++i) r *= base;
  return r;
}

}  // namespace detail

/// Words with a_1 != a_n; a zero forcing set of B(d, n) of size (d-1)d^(n-1).
inline VertexSet debruijn_zf_set(int d, int n) {
  const FamilySpec spec{Family::debruijn, d, n};
  detail::require_family(spec, Family::debruijn);
  return detail::collect_words(spec, [](const std::vector<int>& a) { return a.front() != a.back(); });
}

/// Power dominating set of B(d, n) of size (d-1)d^(n-2). Arithmetic is mod d.
///
///   n = 2:  (0,1), ..., (0,d-1)
///   n = 3:  a_2 = a_1 and a_3 != a_1
///   n >= 4: a_(n-1) = a_1 + a_(n-2) and a_n != a_1 + a_2 + a_(n-2)
inline VertexSet debruijn_pd_set(int d, int n) {
  const FamilySpec spec{Family::debruijn, d, n};
  detail::require_family(spec, Family::debruijn);
  if (n == 2) return detail::collect_words(spec, [](const std::vector<int>& a) { return a[0] == 0 && a[1] != 0; });
  if (n == 3) return detail::collect_words(spec, [](const std::vector<int>& a) { return a[1] == a[0] && a[2] != a[0]; });
  return detail::collect_words(spec, [d, n](const std::vector<int>& a) {
    // a[i] holds a_(i+1).
    const auto at = [&](int i) { return a[static_cast<std::size_t>(i - 1)]; };
    return at(n - 1) == (at(1) + at(n - 2)) % d && at(n) != (at(1) + at(2) + at(n - 2)) % d;
  });
}

/// Zero forcing set of K(d, n) of size (d-1)(d+1)d^(n-2). Arithmetic is mod d+1.
///
///   n = 2:  a_2 != a_1 + 1
///   n >= 3: a_n != a_(n-2)
inline VertexSet kautz_zf_set(int d, int n) {
  const FamilySpec spec{Family::kautz, d, n};
  detail::require_family(spec, Family::kautz);
  if (n == 2) return detail::collect_words(spec, [d](const std::vector<int>& a) { return a[1] != (a[0] + 1) % (d + 1); });
  return detail::collect_words(spec, [n](const std::vector<int>& a) {
    return a[static_cast<std::size_t>(n - 1)] != a[static_cast<std::size_t>(n - 3)];
  });
}

/// Power dominating set of K(d, n). Arithmetic is mod d+1.
///
///   n = 2:  (0,1), ..., (0,d)                      size d (outside the theorem's range)
///   n = 3:  a_2 = a_1 + 1 and a_3 != a_1 + 2
///   n = 4:  a_3 = a_1 and a_4 != a_2
///   n >= 5: ((a_(n-2), a_(n-1)) = (a_1, a_2) and a_n != a_3) or (a_(n-1) = a_1 and a_n != a_2)
inline VertexSet kautz_pd_set(int d, int n) {
  const FamilySpec spec{Family::kautz, d, n};
  detail::require_family(spec, Family::kautz);
  const int q = d + 1;
  if (n == 2) return detail::collect_words(spec, [](const std::vector<int>& a) { return a[0] == 0; });
  if (n == 3)
    return detail::collect_words(spec, [q](const std::vector<int>& a) {
      return a[1] == (a[0] + 1) % q && a[2] != (a[0] + 2) % q;
    });
  if (n == 4) return detail::collect_words(spec, [](const std::vector<int>& a) { return a[2] == a[0] && a[3] != a[1]; });
  return detail::collect_words(spec, [n](const std::vector<int>& a) {
    const auto at = [&](int i) { return a[static_cast<std::size_t>(i - 1)]; };
    const bool repeats_head = at(n - 2) == at(1) && at(n - 1) == at(2) && at(n) != at(3);
    const bool returns_to_first = at(n - 1) == at(1) && at(n) != at(2);
    return repeats_head || returns_to_first;
  });
}

/// s_k via s_2 = 0, s_k = (d+1)d^(k-2) - s_(k-1): closed Kautz-style words of length k.
inline std::int64_t s_k(int d, int k) {
  if (d < 2) throw std::invalid_argument("s_k requires d >= 2");
  if (k < 2) throw std::invalid_argument("s_k requires k >= 2");
  if (k > 40) throw std::out_of_range("s_k limited to k <= 40");
  std::int64_t s = 0;
  for (int j = 3; j <= k; ++j) s = (d + 1) * detail::ipow(d, j - 2) - s;
  return s;
}

/// d^(k-1) - (-1)^k d.
inline std::int64_t s_k_closed_form(int d, int k) {
  if (d < 2) throw std::invalid_argument("s_k requires d >= 2");
  if (k < 2) throw std::invalid_argument("s_k requires k >= 2");
  if (k > 40) throw std::out_of_range("s_k limited to k <= 40");
  return detail::ipow(d, k - 1) - (k % 2 == 0 ? d : -d);
}

struct TheoremValue {
  Family family;
  int d;
  int n;
  Problem quantity;
  std::uint64_t value;
};

/// Closed-form Z or gamma_p from the main theorems; nullopt when the theorem
/// does not cover the parameters (gamma_p of K(d, 2), generalized families,
/// d or n below 2).
inline std::optional<TheoremValue> theorem_value(Family family, int d, int n, Problem quantity) {
  if (!is_classic(family) || d < 2 || n < 2) return std::nullopt;
  const auto dd = static_cast<std::uint64_t>(d);
  auto pw = [](std::uint64_t b, int e) {
    std::uint64_t r = 1;
    for (int i = 0; i < e; ++i) r *= b;
    return r;
  };
  std::uint64_t value = 0;
  if (family == Family::debruijn) {
    value = quantity == Problem::zero_forcing ? (dd - 1) * pw(dd, n - 1) : (dd - 1) * pw(dd, n - 2);
  } else if (quantity == Problem::zero_forcing) {
    value = (dd - 1) * (dd + 1) * pw(dd, n - 2);
  } else {
    if (n < 3) return std::nullopt;
    value = (dd - 1) * (dd + 1) * pw(dd, n - 3);
  }
  return TheoremValue{family, d, n, quantity, value};
}

/// The explicit construction for the given classic family and problem.
inline VertexSet construction(const FamilySpec& spec, Problem problem) {
  validate(spec);
  switch (spec.family) {
    case Family::debruijn:
      return problem == Problem::zero_forcing ? debruijn_zf_set(spec.d, spec.n) : debruijn_pd_set(spec.d, spec.n);
    case Family::kautz:
      return problem == Problem::zero_forcing ? kautz_zf_set(spec.d, spec.n) : kautz_pd_set(spec.d, spec.n);
    default:
      throw std::invalid_argument("no explicit construction for family " + std::string(to_string(spec.family)));
  }
}

}  // namespace powerdom
