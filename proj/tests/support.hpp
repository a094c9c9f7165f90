#pragma once

// Seeded instance generators and naive reference oracles shared by the unit
// tests and the acceptance runner. The oracles only use beats()/color() and
// plain loops so they stay independent of the library's bitset kernels.

#include "transdom/colorsearch.hpp"
#include "transdom/error.hpp"
#include "transdom/core.hpp"
#include "transdom/geometry.hpp"
#include "transdom/paley.hpp"

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <optional>
#include <random>
#include <stdexcept>
#include <vector>

namespace transdom::testing {

using Rng = std::mt19937_64;

template <class F>
std::optional<ErrorCode> error_of(F&& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.code();
  }
  return std::nullopt;
}

inline int uniform_int(Rng& rng, int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng); }

inline Tournament random_tournament(int n, Rng& rng) {
  return Tournament::from_rule(n, [&](int, int) { return (rng() & 1U) != 0; });
}

/// Tournament on n vertices from the low n(n-1)/2 bits of `code`, pair order (0,1),(0,2),...
inline Tournament tournament_from_code(int n, std::uint64_t code) {
  int bit = 0;
  return Tournament::from_rule(n, [&](int, int) { return ((code >> bit++) & 1U) != 0; });
}

inline ColoredTournament random_coloring(const Tournament& t, int k, Rng& rng) {
  return ColoredTournament::from_rule(t, k, [&](int, int) { return uniform_int(rng, 1, k); });
}

inline std::vector<int> random_order(int n, Rng& rng) {
  std::vector<int> v(n);
  std::iota(v.begin(), v.end(), 0);
  std::shuffle(v.begin(), v.end(), rng);
  return v;
}

inline ColoredTournament relabel(const ColoredTournament& ct, const std::vector<int>& perm) {
  std::vector<ColoredEdge> edges;
  for (const auto& e : ct.edges()) edges.push_back({perm[e.from], perm[e.to], e.color});
  return ColoredTournament::from_edges(ct.size(), ct.colors(), edges);
}

inline ColoredTournament recolor(const ColoredTournament& ct, int k, const std::vector<int>& palette) {
  return ColoredTournament::from_rule(ct.base(), k, [&](int u, int v) { return palette[ct.color(u, v) - 1]; });
}

/// Small transitively coloured building block using colours from 1..k (k <= 3).
inline ColoredTournament random_block(int k, Rng& rng) {
  std::vector<int> palette{1, 2, 3};
  std::shuffle(palette.begin(), palette.end(), rng);
  const int kind = uniform_int(rng, 0, k >= 3 ? 5 : (k == 2 ? 2 : 1));
  switch (kind) {
    case 0:
      return ColoredTournament::uniform(Tournament::transitive(1), k);
    case 1: {
      const int n = uniform_int(rng, 2, 4);
      return ColoredTournament::uniform(Tournament::transitive(n), k, std::min(palette[0], k));
    }
    case 2: {
      std::vector<int> values(uniform_int(rng, 2, 5));
      std::iota(values.begin(), values.end(), 1);
      std::shuffle(values.begin(), values.end(), rng);
      auto pt = permutation_tournament(Permutation::make(values));
      std::vector<int> pal{palette[0], palette[1]};
      if (k == 2) pal = {1, 2};
      return recolor(pt, k, pal);
    }
    case 3:
      return recolor(three_colored_triangle(), k, palette);
    case 4: {
      const int a = uniform_int(rng, 1, 3), b = uniform_int(rng, 1, 3);
      std::vector<std::pair<int, int>> cross;
      for (int i = 0; i < a; ++i)
        for (int j = 0; j < b; ++j)
          if (rng() & 1U) cross.emplace_back(i, j);
      return recolor(bipartite_example(a, b, cross), k, palette);
    }
    default:
      return recolor(pt7_example_coloring(), k, palette);
  }
}

/// Random transitively k-coloured tournament (k <= 3) with roughly `target` vertices,
/// assembled by repeated substitution of transitive blocks, then scrambled and relabelled.
inline ColoredTournament random_transitive_coloring(int target, int k, Rng& rng) {
  ColoredTournament ct = random_block(k, rng);
  while (ct.size() < target) {
    auto h = random_block(k, rng);
    if (ct.size() + h.size() - 1 > target + 2) h = ColoredTournament::uniform(Tournament::transitive(2), k, 1);
    ct = substitute(ct, uniform_int(rng, 0, ct.size() - 1), h);
  }
  ct = scramble(ct, ScramblingMask{static_cast<std::uint32_t>(rng() & ((1U << k) - 1))});
  ct = relabel(ct, random_order(ct.size(), rng));
  if (!verify_transitive_coloring(ct)) throw std::logic_error("generator produced a non-transitive colouring");
  return ct;
}

/// n points in general position: every axis carries a random permutation of 1..n.
inline std::vector<std::vector<int>> random_grid_points(int n, int d, Rng& rng) {
  std::vector<std::vector<int>> pts(n, std::vector<int>(d));
  for (int axis = 0; axis < d; ++axis) {
    auto order = random_order(n, rng);
    for (int i = 0; i < n; ++i) pts[i][axis] = order[i] + 1;
  }
  return pts;
}

inline PointSet random_pointset(int n, int d, Rng& rng) { return PointSet::from_integers(random_grid_points(n, d, rng)); }

inline VertexSet random_subset(int n, Rng& rng, double p = 0.5) {
  VertexSet s;
  std::bernoulli_distribution keep(p);
  for (int v = 0; v < n; ++v)
    if (keep(rng)) s.push_back(v);
  return s;
}

// ---- naive oracles -------------------------------------------------------

inline bool naive_dominates(const Tournament& t, const VertexSet& s) {
  for (int v = 0; v < t.size(); ++v) {
    if (std::find(s.begin(), s.end(), v) != s.end()) continue;
    bool hit = false;
    for (int w : s) hit = hit || t.beats(w, v);
    if (!hit) return false;
  }
  return true;
}

/// All subsets of size k of 0..n-1 in lexicographic order; stops when `f` returns true.
template <class F>
bool for_each_subset(int n, int k, F&& f) {
  std::vector<int> idx(k);
  std::iota(idx.begin(), idx.end(), 0);
  if (k > n) return false;
  while (true) {
    if (f(idx)) return true;
    int i = k - 1;
    while (i >= 0 && idx[i] == n - k + i) --i;
    if (i < 0) return false;
    ++idx[i];
    for (int j = i + 1; j < k; ++j) idx[j] = idx[j - 1] + 1;
  }
}

inline int naive_dom(const Tournament& t) {
  for (int k = 1; k <= t.size(); ++k)
    if (for_each_subset(t.size(), k, [&](const std::vector<int>& s) { return naive_dominates(t, s); })) return k;
  return t.size();
}

inline bool naive_is_transitive(const ColoredTournament& ct) {
  const int n = ct.size();
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      for (int c = 0; c < n; ++c) {
        if (a == b || b == c || a == c) continue;
        if (ct.beats(a, b) && ct.beats(b, c) && ct.color(a, b) == ct.color(b, c)) {
          if (!ct.beats(a, c) || ct.color(a, c) != ct.color(a, b)) return false;
        }
      }
  return true;
}

inline bool naive_is_enclosure(const ColoredTournament& ct, const VertexSet& s) {
  for (int b = 0; b < ct.size(); ++b) {
    if (std::find(s.begin(), s.end(), b) != s.end()) continue;
    bool between = false;
    for (int a : s)
      for (int c : s)
        if (a != c && ct.beats(a, b) && ct.beats(b, c) && ct.color(a, b) == ct.color(b, c)) between = true;
    if (!between) return false;
  }
  return true;
}

inline int naive_min_enclosure(const ColoredTournament& ct) {
  for (int k = 1; k <= ct.size(); ++k)
    if (for_each_subset(ct.size(), k, [&](const std::vector<int>& s) { return naive_is_enclosure(ct, s); })) return k;
  return ct.size();
}

inline bool naive_box_covered(const std::vector<std::vector<int>>& pts, const VertexSet& cover) {
  for (int x = 0; x < static_cast<int>(pts.size()); ++x) {
    if (std::find(cover.begin(), cover.end(), x) != cover.end()) continue;
    bool inside = false;
    for (int p : cover)
      for (int q : cover) {
        bool ok = true;
        for (std::size_t i = 0; i < pts[x].size(); ++i)
          ok = ok && std::min(pts[p][i], pts[q][i]) <= pts[x][i] && pts[x][i] <= std::max(pts[p][i], pts[q][i]);
        inside = inside || ok;
      }
    if (!inside) return false;
  }
  return true;
}

/// Tries every k-colouring of the edges (k^(n(n-1)/2) of them).
inline bool brute_has_transitive_coloring(const Tournament& t, int k) {
  const int n = t.size();
  const int m = n * (n - 1) / 2;
  std::vector<int> digits(m, 1);
  while (true) {
    int idx = 0;
    std::vector<int> color(n * n, 0);
    for (int u = 0; u < n; ++u)
      for (int v = u + 1; v < n; ++v) color[u * n + v] = color[v * n + u] = digits[idx++];
    auto ct = ColoredTournament::from_rule(t, k, [&](int u, int v) { return color[u * n + v]; });
    if (naive_is_transitive(ct)) return true;
    int i = 0;
    while (i < m && digits[i] == k) digits[i++] = 1;
    if (i == m) return false;
    ++digits[i];
  }
}

}  // namespace transdom::testing
