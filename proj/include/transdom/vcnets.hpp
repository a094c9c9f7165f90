#pragma once

#include "transdom/core.hpp"
#include "transdom/rational.hpp"
#include "transdom/solvers.hpp"

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace transdom {

struct ShatterReport {
  int vc = 0;
  VertexSet witness;
  /// shattered_sets[h] = number of shattered h-subsets found.
  std::vector<std::uint64_t> shattered_sets;
  bool exact = true;
};

inline constexpr int kExactVcCeiling = 22;

/// Largest shattered vertex subset, by level-wise exhaustive search (n <= 22).
ShatterReport vc_dimension(const Hypergraph& h);

/// Random-subset lower bound instead of the exhaustive maximum.
struct ShatterSampling {
  std::uint64_t seed = 0;
  std::uint64_t trials = 1000;
};

/// max over n-subsets S of |{S & F : F in H}|. Exact mode enumerates C(|V|, n)
/// subsets (budget-limited); sampled mode returns a lower bound.
std::uint64_t shatter_function(const Hypergraph& h, int n, std::optional<ShatterSampling> sampling = std::nullopt,
                               std::uint64_t budget = 20'000'000);

/// As shatter_function, counting only traces with exactly k elements.
std::uint64_t shatter_function_k(const Hypergraph& h, int n, int k,
                                 std::optional<ShatterSampling> sampling = std::nullopt,
                                 std::uint64_t budget = 20'000'000);

/// ((n+1)^3 - C(k+2,3) - C(n-k+1,3)) / 2, rounded down.
BigInt pi_k_upper_bound(unsigned n, unsigned k);

enum class FeasibilityVariant { Cube, Halved, Refined };
std::string to_string(FeasibilityVariant v);
FeasibilityVariant parse_variant(const std::string& s);

struct FeasibilityReport {
  unsigned a = 0;
  unsigned b = 0;
  FeasibilityVariant variant = FeasibilityVariant::Refined;
  Rational lhs;
  Rational rhs;
  /// lhs / rhs.
  Rational ratio;
  bool feasible = false;
  /// m <= a whenever feasible.
  unsigned implied_bound = 0;
  /// Both binomial evaluations (Pascal and multiplicative) agreed.
  bool paths_agree = false;
};

/// With n = a + b:
///   cube:    2^b (n+1)^3          vs C(n, b)
///   halved:  2^b ceil((n+1)^3/2)  vs C(n, b)
///   refined: pi_k_upper_bound(n,b) vs C(n, b) / 2^b
/// feasible iff lhs < rhs.
FeasibilityReport appendix_feasibility(unsigned a, unsigned b, FeasibilityVariant variant);

std::vector<FeasibilityReport> appendix_scan(unsigned max_a, unsigned max_b, FeasibilityVariant variant);

struct EpsNetReport {
  std::uint64_t trials = 0;
  std::uint64_t successes = 0;
  double rate = 0.0;
  std::uint64_t seed = 0;
  int net_size = 0;
  int tail_size = 0;
};

/// Draws net_size + tail_size vertices i.i.d. from the normalised weights
/// (trial t uses mt19937_64(seed + t); u = (draw >> 11) * 2^-53, inverse CDF) and
/// counts trials where the first net_size draws meet every hyperedge of
/// normalised weight >= 1/2. Throws InfeasibleWeights.
EpsNetReport epsnet_sample(const Hypergraph& h, const std::vector<double>& weights, int net_size, int tail_size,
                           std::uint64_t trials, std::uint64_t seed, bool parallel = true);

inline EpsNetReport epsnet_sample(const Hypergraph& h, const FractionalSolution& weights, int net_size,
                                  int tail_size, std::uint64_t trials, std::uint64_t seed, bool parallel = true) {
  return epsnet_sample(h, weights.weights, net_size, tail_size, trials, seed, parallel);
}

namespace serial {

EpsNetReport epsnet_sample(const Hypergraph& h, const std::vector<double>& weights, int net_size, int tail_size,
                           std::uint64_t trials, std::uint64_t seed);

}  // namespace serial

}  // namespace transdom
