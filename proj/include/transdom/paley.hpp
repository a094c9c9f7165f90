#pragma once

#include "transdom/core.hpp"
#include "transdom/rational.hpp"

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace transdom {

bool is_prime(std::int64_t q);

/// Prime q = 3 (mod 4) with its nonzero quadratic residues.
struct PaleyParams {
  int q = 0;
  std::vector<int> residues;      // sorted
  std::vector<bool> is_residue;   // indexed 0..q-1

  /// Throws NotPrime or WrongResidueClass.
  static PaleyParams make(int q);
};

/// x -> y iff y - x is a nonzero square mod q.
Tournament paley_tournament(int q);

/// The transitive 3-colouring of PT_7 listed with vertices 1..7, relabelled to 0..6.
ColoredTournament pt7_example_coloring();

/// e(A, B) - e(B, A) over pairs with distinct endpoints.
long discrepancy(const Tournament& t, const VertexSet& a, const VertexSet& b);

struct VertexType {
  std::uint32_t in_colors = 0;   // bit i-1 set iff in-degree in colour i >= nu * q
  std::uint32_t out_colors = 0;
  auto operator<=>(const VertexType&) const = default;
};

struct TypeReport {
  Rational nu;
  std::vector<VertexType> types;
  std::vector<std::vector<int>> in_degree;   // [v][colour-1]
  std::vector<std::vector<int>> out_degree;
  VertexSet largest_class;
  /// |largest class| >= q / 2^(2k)
  bool large_class_bound = false;
};

TypeReport vertex_types(const ColoredTournament& ct, const Rational& nu);

struct RefutationReport {
  /// 0: colouring not transitive; 1: no vertex with a shared in/out colour;
  /// 2: neighbourhoods chosen; 3: orientation and discrepancy checks done.
  int step = 0;
  bool contradiction = false;
  std::string reason;
  int q = 0;
  int k = 0;
  Rational nu;
  BigInt threshold;
  bool above_threshold = false;
  std::optional<int> vertex;
  std::optional<int> color;
  VertexSet in_neighbors;   // A
  VertexSet out_neighbors;  // B
  long discrepancy = 0;
  bool all_edges_forward = false;
  /// |A||B| <= q, which the discrepancy bound forces when every A-B edge points forward.
  bool product_within_q = true;
};

/// Runs the non-transitivity argument for Paley tournaments step by step on a concrete
/// colouring. `threshold` defaults to (2^(2k+1))^2. Throws NotPaleyBase.
RefutationReport refute_transitive_coloring(const ColoredTournament& ct,
                                            std::optional<BigInt> threshold = std::nullopt);

/// True iff no k-subset dominates t. Throws InstanceTooLarge when C(n, k) > budget.
bool is_k_paradoxical(const Tournament& t, int k, std::uint64_t budget = 200'000'000, bool parallel = true);

namespace serial {

bool is_k_paradoxical(const Tournament& t, int k, std::uint64_t budget = 200'000'000);

}  // namespace serial

}  // namespace transdom
