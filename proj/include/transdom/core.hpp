#pragma once

#include "transdom/bitset.hpp"

#include <compare>
#include <cstdint>
#include <initializer_list>
#include <optional>
#include <span>
#include <vector>

namespace transdom {

/// Sorted, duplicate-free list of vertex labels.
using VertexSet = std::vector<int>;

struct DirectedEdge {
  int from = 0;
  int to = 0;
  auto operator<=>(const DirectedEdge&) const = default;
};

struct ColoredEdge {
  int from = 0;
  int to = 0;
  int color = 1;
  auto operator<=>(const ColoredEdge&) const = default;
};

/// Complete antisymmetric orientation on vertices 0..n-1, stored as out- and
/// in-neighbourhood bit rows.
class Tournament {
 public:
  Tournament() = default;

  /// Validates that `edges` orients every unordered pair exactly once.
  /// Throws MissingPair, DuplicatePair, SelfLoop or OutOfRange naming the pair.
  static Tournament from_edges(int n, std::span<const DirectedEdge> edges);

  /// Builds the tournament where, for u < v, u beats v iff `u_beats_v(u, v)`.
  template <class Rule>
  static Tournament from_rule(int n, Rule&& u_beats_v) {
    Tournament t(n);
    for (int u = 0; u < n; ++u)
      for (int v = u + 1; v < n; ++v) {
        if (u_beats_v(u, v))
          t.orient(u, v);
        else
          t.orient(v, u);
      }
    return t;
  }

  /// Transitive tournament 0 -> 1 -> ... -> n-1.
  static Tournament transitive(int n);
  /// Cyclic triangle 0 -> 1 -> 2 -> 0.
  static Tournament cyclic_triangle();

  int size() const noexcept { return static_cast<int>(out_.size()); }
  bool beats(int u, int v) const { return out_[u].test(v); }
  const Bitset& out(int v) const { return out_[v]; }
  const Bitset& in(int v) const { return in_[v]; }
  int out_degree(int v) const { return static_cast<int>(out_[v].count()); }
  int in_degree(int v) const { return static_cast<int>(in_[v].count()); }

  /// One directed edge per unordered pair {u < v}, in lexicographic pair order.
  std::vector<DirectedEdge> edges() const;
  Tournament reversed() const;
  bool is_acyclic() const;

  bool operator==(const Tournament&) const = default;

 private:
  explicit Tournament(int n);
  void orient(int winner, int loser);

  std::vector<Bitset> out_;
  std::vector<Bitset> in_;

  friend class ColoredTournament;
};

inline Tournament build_tournament(int n, std::span<const DirectedEdge> edges) {
  return Tournament::from_edges(n, edges);
}

/// Tournament plus a total edge colouring into colours 1..k. Empty colour
/// classes are allowed.
class ColoredTournament {
 public:
  ColoredTournament() = default;
  /// `pair_color(u, v)` is called once per unordered pair u < v.
  template <class ColorRule>
  static ColoredTournament from_rule(Tournament base, int k, ColorRule&& pair_color) {
    const int n = base.size();
    std::vector<std::uint16_t> colors(static_cast<std::size_t>(n) * n, 0);
    for (int u = 0; u < n; ++u)
      for (int v = u + 1; v < n; ++v) {
        const auto c = static_cast<std::uint16_t>(pair_color(u, v));
        colors[u * n + v] = c;
        colors[v * n + u] = c;
      }
    return ColoredTournament(std::move(base), k, std::move(colors));
  }

  static ColoredTournament from_edges(int n, int k, std::span<const ColoredEdge> edges);
  static ColoredTournament uniform(Tournament base, int k = 1, int color = 1);

  const Tournament& base() const noexcept { return base_; }
  int size() const noexcept { return base_.size(); }
  int colors() const noexcept { return k_; }
  bool beats(int u, int v) const { return base_.beats(u, v); }
  /// Colour of the edge between u and v, whichever way it points.
  int color(int u, int v) const { return colors_[static_cast<std::size_t>(u) * size() + v]; }

  /// Out/in-neighbourhood of v inside colour class T(c).
  const Bitset& class_out(int c, int v) const { return class_out_[c - 1][v]; }
  const Bitset& class_in(int c, int v) const { return class_in_[c - 1][v]; }

  std::vector<ColoredEdge> edges() const;
  /// Edges of colour c.
  std::vector<DirectedEdge> color_class(int c) const;

  bool operator==(const ColoredTournament& o) const {
    return k_ == o.k_ && base_ == o.base_ && colors_ == o.colors_;
  }

 private:
  ColoredTournament(Tournament base, int k, std::vector<std::uint16_t> colors);

  Tournament base_;
  int k_ = 0;
  std::vector<std::uint16_t> colors_;
  std::vector<std::vector<Bitset>> class_out_;
  std::vector<std::vector<Bitset>> class_in_;

};

/// Subset I of the colours 1..k (k <= 32).
struct ScramblingMask {
  std::uint32_t bits = 0;

  static ScramblingMask of(std::initializer_list<int> colors);
  bool contains(int color) const noexcept { return (bits >> (color - 1)) & 1U; }
  int size() const noexcept;
  std::vector<int> colors() const;
  auto operator<=>(const ScramblingMask&) const = default;
};

/// Domination hypergraph: edge v is {v} together with every in-neighbour of v.
struct Hypergraph {
  int vertices = 0;
  std::vector<Bitset> edges;
};

/// Throws OutOfRange if a member is not a vertex, InvalidArgument if unsorted or repeated.
void check_vertex_set(int n, const VertexSet& s);

/// True iff ab, bc in `edges` imply ac in `edges`.
bool is_transitive_digraph(const Tournament& t, std::span<const DirectedEdge> edges);

/// First (a, b, c) with ab, bc in one colour class but ac missing from it.
struct TransitivityViolation {
  int a, b, c, color;
};
std::optional<TransitivityViolation> find_transitivity_violation(const ColoredTournament& ct);
bool verify_transitive_coloring(const ColoredTournament& ct);

/// Reverses every edge whose colour is in `mask`; colours are preserved.
ColoredTournament scramble(const ColoredTournament& ct, ScramblingMask mask);

bool dominates(const Tournament& t, const VertexSet& s);
bool is_enclosure(const ColoredTournament& ct, const VertexSet& s);

Hypergraph domination_hypergraph(const Tournament& t);
bool is_transversal(const Hypergraph& h, const VertexSet& s);

}  // namespace transdom
