#pragma once

#include "transdom/core.hpp"
#include "transdom/rational.hpp"

#include <optional>
#include <string>
#include <vector>

namespace transdom {

struct DominationCertificate {
  VertexSet set;
  int size = 0;
  bool optimal = false;
  /// Which lower bound closed the search, e.g. "lp ceil(tau*)=2".
  std::string lower_bound_used;
};

struct DominationOptions {
  int exact_ceiling = 100;
  /// Stop once every set of size <= limit is ruled out.
  std::optional<int> limit;
  /// Use ceil(tau*) as a root bound when n <= 40.
  bool lp_bound = true;
  bool parallel = true;
};

/// Result of min_dominating_set: either a certificate, or the proof that
/// dom(T) > limit (in which case `certificate` is empty).
struct DominationOutcome {
  std::optional<DominationCertificate> certificate;
  int lower_bound = 0;

  bool within_limit() const noexcept { return certificate.has_value(); }
};

/// Exact minimum dominating set by iterative deepening over the set-cover
/// form of H(T): branch on the undominated vertex with the fewest dominators.
DominationOutcome min_dominating_set(const Tournament& t, const DominationOptions& options = {});

/// Convenience wrapper: the optimal certificate, throwing if a limit cut it off.
DominationCertificate exact_dominating_set(const Tournament& t, int exact_ceiling = 100);

/// Greedy max-coverage dominating set, ties broken by lowest index.
VertexSet greedy_dominating_set(const Tournament& t);

enum class LpMode { Exact, Approximate };

struct FractionalSolution {
  LpMode mode = LpMode::Exact;
  /// Exact weights and value (exact mode only).
  std::vector<Rational> exact_weights;
  Rational exact_value;
  /// Optimal fractional matching found by the independent dual solve (exact mode).
  std::vector<Rational> exact_matching;
  /// Float view, populated in both modes.
  std::vector<double> weights;
  double value = 0.0;
  /// Certified |primal - dual| (0 in exact mode).
  double gap = 0.0;
};

inline constexpr int kExactLpCeiling = 40;

/// tau*(H): min sum x subject to sum_{w in e} x_w >= 1 for every hyperedge e.
/// Solves the covering LP and the dual packing LP separately and checks that the
/// optimal values coincide (exactly, or within 1e-9 in approximate mode).
FractionalSolution fractional_transversal(const Hypergraph& h, LpMode mode = LpMode::Exact);

/// nu*(H): max sum y subject to sum_{e containing w} y_e <= 1 for every vertex w.
Rational fractional_matching_value(const Hypergraph& h);

bool is_feasible_transversal(const Hypergraph& h, const std::vector<Rational>& weights);
bool is_feasible_matching(const Hypergraph& h, const std::vector<Rational>& weights);

inline constexpr int kEnclosureCeiling = 25;

/// Minimum-cardinality enclosure set by exhaustive search in increasing size.
VertexSet min_enclosure_set(const ColoredTournament& ct, bool parallel = true);

struct EnclosureOptions {
  bool greedy = false;
  DominationOptions domination{};
  bool parallel = true;
};

struct ScramblingEnclosure {
  VertexSet enclosure;
  /// Dominating set chosen for each mask, indexed by mask bits.
  std::vector<VertexSet> per_mask;
  int size_sum = 0;
  int size_max = 0;
};

/// Union of dominating sets of all 2^k scramblings; always an enclosure set.
ScramblingEnclosure enclosure_via_scramblings(const ColoredTournament& ct, const EnclosureOptions& options = {});

namespace serial {

/// Reference implementations kept for cross-checking the parallel kernels.
DominationOutcome min_dominating_set(const Tournament& t, const DominationOptions& options = {});
VertexSet min_enclosure_set(const ColoredTournament& ct);

}  // namespace serial

}  // namespace transdom
