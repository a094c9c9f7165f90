#include "transdom/vcnets.hpp"

#include "transdom/error.hpp"

#include <algorithm>
#include <bit>
#include <numeric>
#include <random>

namespace transdom {

namespace {

std::vector<std::uint64_t> edge_masks(const Hypergraph& h) {
  if (h.vertices > 64) throw Error(ErrorCode::InstanceTooLarge, "trace computations support at most 64 vertices");
  std::vector<std::uint64_t> out;
  out.reserve(h.edges.size());
  for (const Bitset& e : h.edges) {
    std::uint64_t m = 0;
    for (auto v = e.find_first(); v != Bitset::npos; v = e.find_next(v)) m |= 1ULL << v;
    out.push_back(m);
  }
  return out;
}

std::uint64_t distinct_traces(const std::vector<std::uint64_t>& edges, std::uint64_t subset, int exact_size = -1) {
  std::vector<std::uint64_t> traces;
  traces.reserve(edges.size());
  for (std::uint64_t e : edges) {
    const std::uint64_t t = e & subset;
    if (exact_size < 0 || std::popcount(t) == exact_size) traces.push_back(t);
  }
  std::sort(traces.begin(), traces.end());
  return static_cast<std::uint64_t>(std::unique(traces.begin(), traces.end()) - traces.begin());
}

VertexSet mask_members(std::uint64_t m) {
  VertexSet s;
  while (m) {
    s.push_back(std::countr_zero(m));
    m &= m - 1;
  }
  return s;
}

}  // namespace

ShatterReport vc_dimension(const Hypergraph& h) {
  if (h.vertices > kExactVcCeiling)
    throw Error(ErrorCode::InstanceTooLarge, "exhaustive VC dimension supports n <= " +
                                                 std::to_string(kExactVcCeiling));
  const std::vector<std::uint64_t> edges = edge_masks(h);
  ShatterReport r;
  if (edges.empty()) return r;
  // Shattering is hereditary, so every shattered set extends a shattered set
  // by an element above its maximum.
  std::vector<std::uint64_t> level{0};
  r.shattered_sets.push_back(1);
  for (int size = 1; size <= h.vertices; ++size) {
    if (edges.size() < (1ULL << size)) break;
    std::vector<std::uint64_t> next;
    for (std::uint64_t s : level) {
      const int start = s ? 64 - std::countl_zero(s) : 0;
      for (int v = start; v < h.vertices; ++v) {
        const std::uint64_t t = s | (1ULL << v);
        if (distinct_traces(edges, t) == (1ULL << size)) next.push_back(t);
      }
    }
    if (next.empty()) break;
    r.vc = size;
    r.witness = mask_members(next.front());
    r.shattered_sets.push_back(next.size());
    level = std::move(next);
  }
  return r;
}

namespace {

template <class Visit>
void for_each_subset(int universe, int size, Visit&& visit) {
  std::vector<int> idx(size);
  std::iota(idx.begin(), idx.end(), 0);
  for (;;) {
    std::uint64_t m = 0;
    for (int i : idx) m |= 1ULL << i;
    visit(m);
    int i = size - 1;
    while (i >= 0 && idx[i] == universe - size + i) --i;
    if (i < 0) return;
    ++idx[i];
    for (int j = i + 1; j < size; ++j) idx[j] = idx[j - 1] + 1;
  }
}

std::uint64_t max_traces(const Hypergraph& h, int n, int exact_size, std::optional<ShatterSampling> sampling,
                         std::uint64_t budget) {
  if (n < 0 || n > h.vertices) throw Error(ErrorCode::InvalidArgument, "subset size out of range");
  const std::vector<std::uint64_t> edges = edge_masks(h);
  std::uint64_t best = 0;
  if (sampling) {
    std::mt19937_64 rng(sampling->seed);
    std::vector<int> verts(h.vertices);
    std::iota(verts.begin(), verts.end(), 0);
    for (std::uint64_t t = 0; t < sampling->trials; ++t) {
      std::uint64_t m = 0;
      for (int i = 0; i < n; ++i) {
        std::uniform_int_distribution<int> pick(i, h.vertices - 1);
        std::swap(verts[i], verts[pick(rng)]);
        m |= 1ULL << verts[i];
      }
      best = std::max(best, distinct_traces(edges, m, exact_size));
    }
    return best;
  }
  if (binomial_multiplicative(static_cast<unsigned>(h.vertices), static_cast<unsigned>(n)) >
      BigInt(std::to_string(budget)))
    throw Error(ErrorCode::InstanceTooLarge, "C(" + std::to_string(h.vertices) + "," + std::to_string(n) +
                                                 ") subsets exceed the budget");
  if (n == 0) return distinct_traces(edges, 0, exact_size);
  for_each_subset(h.vertices, n, [&](std::uint64_t m) { best = std::max(best, distinct_traces(edges, m, exact_size)); });
  return best;
}

}  // namespace

std::uint64_t shatter_function(const Hypergraph& h, int n, std::optional<ShatterSampling> sampling,
                               std::uint64_t budget) {
  return max_traces(h, n, -1, sampling, budget);
}

std::uint64_t shatter_function_k(const Hypergraph& h, int n, int k, std::optional<ShatterSampling> sampling,
                                 std::uint64_t budget) {
  if (k < 0) throw Error(ErrorCode::InvalidArgument, "trace size must be >= 0");
  return max_traces(h, n, k, sampling, budget);
}

namespace {

BigInt cube(unsigned x) {
  BigInt c = x;
  return c * c * c;
}

BigInt pi_k_bound_with(unsigned n, unsigned k, BigInt (*binom)(unsigned, unsigned)) {
  const BigInt numerator = cube(n + 1) - binom(k + 2, 3) - binom(n - k + 1, 3);
  BigInt half;
  mpz_fdiv_q_ui(half.get_mpz_t(), numerator.get_mpz_t(), 2);
  return half;
}

}  // namespace

BigInt pi_k_upper_bound(unsigned n, unsigned k) {
  if (k > n) throw Error(ErrorCode::InvalidArgument, "need 0 <= k <= n");
  return pi_k_bound_with(n, k, &binomial_pascal);
}

std::string to_string(FeasibilityVariant v) {
  switch (v) {
    case FeasibilityVariant::Cube: return "cube";
    case FeasibilityVariant::Halved: return "halved";
    case FeasibilityVariant::Refined: return "refined";
  }
  return "unknown";
}

FeasibilityVariant parse_variant(const std::string& s) {
  if (s == "cube") return FeasibilityVariant::Cube;
  if (s == "halved") return FeasibilityVariant::Halved;
  if (s == "refined") return FeasibilityVariant::Refined;
  throw Error(ErrorCode::InvalidArgument, "unknown variant '" + s + "' (cube|halved|refined)");
}

namespace {

struct Sides {
  Rational lhs, rhs;
};

Sides evaluate(unsigned a, unsigned b, FeasibilityVariant variant, BigInt (*binom)(unsigned, unsigned)) {
  const unsigned n = a + b;
  BigInt two_b;
  mpz_ui_pow_ui(two_b.get_mpz_t(), 2, b);
  const BigInt choose = binom(n, b);
  switch (variant) {
    case FeasibilityVariant::Cube: return {Rational(two_b * cube(n + 1)), Rational(choose)};
    case FeasibilityVariant::Halved: {
      BigInt half;
      mpz_cdiv_q_ui(half.get_mpz_t(), cube(n + 1).get_mpz_t(), 2);
      return {Rational(two_b * half), Rational(choose)};
    }
    case FeasibilityVariant::Refined: {
      Rational rhs(choose, two_b);
      rhs.canonicalize();
      return {Rational(pi_k_bound_with(n, b, binom)), rhs};
    }
  }
  return {};
}

}  // namespace

FeasibilityReport appendix_feasibility(unsigned a, unsigned b, FeasibilityVariant variant) {
  if (a < 1 || b < 1) throw Error(ErrorCode::InvalidArgument, "a and b must be >= 1");
  const Sides pascal = evaluate(a, b, variant, &binomial_pascal);
  const Sides product = evaluate(a, b, variant, &binomial_multiplicative);
  FeasibilityReport r;
  r.a = a;
  r.b = b;
  r.variant = variant;
  r.lhs = pascal.lhs;
  r.rhs = pascal.rhs;
  r.paths_agree = pascal.lhs == product.lhs && pascal.rhs == product.rhs;
  if (!r.paths_agree) throw Error(ErrorCode::InvariantViolation, "binomial evaluations disagree");
  r.ratio = r.lhs / r.rhs;
  r.feasible = r.lhs < r.rhs;
  r.implied_bound = a;
  return r;
}

std::vector<FeasibilityReport> appendix_scan(unsigned max_a, unsigned max_b, FeasibilityVariant variant) {
  std::vector<FeasibilityReport> out;
  for (unsigned a = 1; a <= max_a; ++a)
    for (unsigned b = 1; b <= max_b; ++b) out.push_back(appendix_feasibility(a, b, variant));
  return out;
}

namespace {

struct NetSampler {
  std::vector<double> cumulative;
  std::vector<Bitset> heavy;
  int vertices = 0;
  int last_positive = 0;

  NetSampler(const Hypergraph& h, const std::vector<double>& weights) : vertices(h.vertices) {
    if (static_cast<int>(weights.size()) != h.vertices)
      throw Error(ErrorCode::InfeasibleWeights, "weight vector has the wrong length");
    double total = 0;
    for (double w : weights) {
      if (!(w >= -1e-12)) throw Error(ErrorCode::InfeasibleWeights, "negative weight");
      total += std::max(w, 0.0);
    }
    if (!(total > 0)) throw Error(ErrorCode::InfeasibleWeights, "weights sum to zero");
    for (const Bitset& e : h.edges) {
      double sum = 0;
      for (auto v = e.find_first(); v != Bitset::npos; v = e.find_next(v)) sum += std::max(weights[v], 0.0);
      if (sum < 1 - 1e-9) throw Error(ErrorCode::InfeasibleWeights, "a hyperedge has weight below 1");
      if (sum / total >= 0.5 - 1e-12) heavy.push_back(e);
    }
    double running = 0;
    for (int v = 0; v < h.vertices; ++v) {
      running += std::max(weights[v], 0.0) / total;
      cumulative.push_back(running);
      if (weights[v] > 0) last_positive = v;
    }
  }

  bool trial(std::uint64_t seed, int net_size, int tail_size) const {
    std::mt19937_64 rng(seed);
    Bitset net(vertices);
    for (int i = 0; i < net_size + tail_size; ++i) {
      const double u = static_cast<double>(rng() >> 11) * 0x1.0p-53;
      int v = static_cast<int>(std::upper_bound(cumulative.begin(), cumulative.end(), u) - cumulative.begin());
      v = std::min(v, last_positive);
      if (i < net_size) net.set(v);
    }
    return std::all_of(heavy.begin(), heavy.end(), [&](const Bitset& e) { return e.intersects(net); });
  }
};

void check_sizes(int net_size, int tail_size, std::uint64_t trials) {
  if (net_size < 1 || tail_size < 0 || trials < 1)
    throw Error(ErrorCode::InvalidArgument, "need net_size >= 1, tail_size >= 0, trials >= 1");
}

EpsNetReport make_report(std::uint64_t trials, std::uint64_t successes, std::uint64_t seed, int a, int b) {
  return {trials, successes, static_cast<double>(successes) / static_cast<double>(trials), seed, a, b};
}

}  // namespace

EpsNetReport epsnet_sample(const Hypergraph& h, const std::vector<double>& weights, int net_size, int tail_size,
                           std::uint64_t trials, std::uint64_t seed, bool parallel) {
  if (!parallel) return serial::epsnet_sample(h, weights, net_size, tail_size, trials, seed);
  check_sizes(net_size, tail_size, trials);
  const NetSampler sampler(h, weights);
  std::uint64_t successes = 0;
  const auto count = static_cast<std::int64_t>(trials);
#pragma omp parallel for reduction(+ : successes) schedule(static)
  for (std::int64_t t = 0; t < count; ++t)
    successes += sampler.trial(seed + static_cast<std::uint64_t>(t), net_size, tail_size) ? 1 : 0;
  return make_report(trials, successes, seed, net_size, tail_size);
}

namespace serial {

EpsNetReport epsnet_sample(const Hypergraph& h, const std::vector<double>& weights, int net_size, int tail_size,
                           std::uint64_t trials, std::uint64_t seed) {
  check_sizes(net_size, tail_size, trials);
  const NetSampler sampler(h, weights);
  std::uint64_t successes = 0;
  for (std::uint64_t t = 0; t < trials; ++t) successes += sampler.trial(seed + t, net_size, tail_size) ? 1 : 0;
  return make_report(trials, successes, seed, net_size, tail_size);
}

}  // namespace serial

}  // namespace transdom
