#pragma once

#include "transdom/core.hpp"

#include <cstdint>
#include <optional>
#include <span>
#include <utility>
#include <vector>

namespace transdom {

/// Bijection on 1..n given as the sequence x_1..x_n.
struct Permutation {
  std::vector<int> values;

  /// Throws InvalidArgument unless `values` is a permutation of 1..n.
  static Permutation make(std::vector<int> values);
  static Permutation identity(int n);
  int size() const noexcept { return static_cast<int>(values.size()); }
  bool operator==(const Permutation&) const = default;
};

struct ColorSearchOptions {
  std::uint64_t node_budget = 50'000'000;
  /// Reject instances beyond n <= 12, or n <= 20 with k <= 3.
  bool enforce_ceiling = true;
};

/// Some transitive k-colouring of t, or nothing when exhaustive search proves
/// none exists. Throws BudgetExhausted when the node budget runs out first.
std::optional<ColoredTournament> find_transitive_coloring(const Tournament& t, int k,
                                                          const ColorSearchOptions& options = {});

/// T(pi): i -> j for positions i < j; colour 1 if x_i < x_j, colour 2 otherwise.
ColoredTournament permutation_tournament(const Permutation& pi);

struct RecoveredPermutation {
  Permutation permutation;
  /// position_vertex[i] is the vertex at position i + 1 of the base order.
  std::vector<int> position_vertex;
};

/// Inverse of permutation_tournament on transitively 2-coloured tournaments.
/// Returns nothing if the value relation is cyclic. Throws NotTwoColored or
/// NotTransitivelyColored.
std::optional<RecoveredPermutation> recover_permutation(const ColoredTournament& ct);

/// Replaces vertex v of t by a copy of h. Vertices before v keep their labels,
/// h occupies v..v+|h|-1, later vertices shift up. The palette is max(k_t, k_h).
ColoredTournament substitute(const ColoredTournament& t, int v, const ColoredTournament& h);

/// Cyclic triangle 0 -> 1 -> 2 -> 0 with colours 1, 2, 3.
ColoredTournament three_colored_triangle();

/// The 3-coloured triangle substituted into each of its own vertices (9 vertices).
ColoredTournament blowup_c3();

/// A = 0..a_size-1, B = a_size..a_size+b_size-1. Colour 1: `cross` pairs (local
/// indices) from A to B; colour 2: the remaining A-B pairs from B to A; colour 3:
/// index order inside A and inside B.
ColoredTournament bipartite_example(int a_size, int b_size, std::span<const std::pair<int, int>> cross);

struct MajorityTournament {
  Tournament tournament;
  /// Edge x -> y coloured by the set of orders that put x before y.
  ColoredTournament colored;
  /// color_sets[c - 1] is the order-index bitmask behind colour c.
  std::vector<std::uint32_t> color_sets;
};

/// `orders` are 2k-1 linear orders, each listing the vertices 0..n-1 first to last.
/// Throws EvenOrderCount or MismatchedDomains.
MajorityTournament majority_tournament(const std::vector<std::vector<int>>& orders);

}  // namespace transdom
