#include "transdom/paley.hpp"

#include "transdom/error.hpp"

#include <algorithm>
#include <atomic>
#include <bit>
#include <map>

namespace transdom {

bool is_prime(std::int64_t q) {
  if (q < 2) return false;
  for (std::int64_t d = 2; d * d <= q; ++d)
    if (q % d == 0) return false;
  return true;
}

PaleyParams PaleyParams::make(int q) {
  if (!is_prime(q)) throw Error(ErrorCode::NotPrime, "q=" + std::to_string(q) + " is not prime");
  if (q % 4 != 3) throw Error(ErrorCode::WrongResidueClass, "q=" + std::to_string(q) + " is not 3 mod 4");
  PaleyParams p;
  p.q = q;
  p.is_residue.assign(q, false);
  for (std::int64_t x = 1; x <= (q - 1) / 2; ++x) p.is_residue[(x * x) % q] = true;
  for (int r = 1; r < q; ++r)
    if (p.is_residue[r]) p.residues.push_back(r);
  return p;
}

Tournament paley_tournament(int q) {
  const PaleyParams p = PaleyParams::make(q);
  return Tournament::from_rule(q, [&](int u, int v) { return p.is_residue[(v - u + q) % q]; });
}

ColoredTournament pt7_example_coloring() {
  // Listed with vertices 1..7.
  const int classes[3][7][2] = {
      {{1, 2}, {1, 5}, {3, 4}, {3, 5}, {3, 7}, {4, 5}, {6, 7}},
      {{1, 3}, {2, 3}, {2, 4}, {2, 6}, {4, 6}, {5, 6}, {5, 7}},
      {{4, 1}, {5, 2}, {6, 3}, {6, 1}, {7, 1}, {7, 2}, {7, 4}},
  };
  std::vector<ColoredEdge> edges;
  for (int c = 0; c < 3; ++c)
    for (const auto& e : classes[c]) edges.push_back({e[0] - 1, e[1] - 1, c + 1});
  return ColoredTournament::from_edges(7, 3, edges);
}

long discrepancy(const Tournament& t, const VertexSet& a, const VertexSet& b) {
  check_vertex_set(t.size(), a);
  check_vertex_set(t.size(), b);
  const Bitset bs = bitset_of(t.size(), b);
  long forward = 0, backward = 0;
  for (int u : a) {
    forward += static_cast<long>((t.out(u) & bs).count());
    backward += static_cast<long>((t.in(u) & bs).count());
  }
  return forward - backward;
}

namespace {

// Compares d >= nu * q exactly.
bool at_least(int degree, const Rational& nu, int q) { return Rational(degree) >= nu * q; }

void require_paley_base(const ColoredTournament& ct) {
  const int q = ct.size();
  if (!is_prime(q) || q % 4 != 3 || !(ct.base() == paley_tournament(q)))
    throw Error(ErrorCode::NotPaleyBase, "base tournament on " + std::to_string(q) + " vertices is not PT_q");
}

}  // namespace

TypeReport vertex_types(const ColoredTournament& ct, const Rational& nu) {
  if (nu <= 0 || nu >= 1) throw Error(ErrorCode::InvalidArgument, "nu must lie in (0, 1)");
  const int q = ct.size();
  const int k = ct.colors();
  if (k > 32) throw Error(ErrorCode::InvalidArgument, "types support k <= 32");
  TypeReport r;
  r.nu = nu;
  r.types.resize(q);
  r.in_degree.assign(q, std::vector<int>(k));
  r.out_degree.assign(q, std::vector<int>(k));
  std::map<VertexType, VertexSet> classes;
  for (int v = 0; v < q; ++v) {
    for (int c = 1; c <= k; ++c) {
      r.in_degree[v][c - 1] = static_cast<int>(ct.class_in(c, v).count());
      r.out_degree[v][c - 1] = static_cast<int>(ct.class_out(c, v).count());
      if (at_least(r.in_degree[v][c - 1], nu, q)) r.types[v].in_colors |= 1U << (c - 1);
      if (at_least(r.out_degree[v][c - 1], nu, q)) r.types[v].out_colors |= 1U << (c - 1);
    }
    classes[r.types[v]].push_back(v);
  }
  for (auto& [_, members] : classes)
    if (members.size() > r.largest_class.size()) r.largest_class = members;
  // |A| >= q / 2^(2k)  <=>  |A| * 2^(2k) >= q
  BigInt scale;
  mpz_ui_pow_ui(scale.get_mpz_t(), 2, 2 * static_cast<unsigned>(k));
  r.large_class_bound = BigInt(static_cast<long>(r.largest_class.size())) * scale >= q;
  return r;
}

RefutationReport refute_transitive_coloring(const ColoredTournament& ct, std::optional<BigInt> threshold) {
  require_paley_base(ct);
  RefutationReport r;
  r.q = ct.size();
  r.k = ct.colors();
  const unsigned k = static_cast<unsigned>(r.k);
  BigInt two_pow;
  mpz_ui_pow_ui(two_pow.get_mpz_t(), 2, 2 * k + 2);
  r.nu = Rational(1, two_pow);
  if (threshold) {
    r.threshold = *threshold;
  } else {
    BigInt base;
    mpz_ui_pow_ui(base.get_mpz_t(), 2, 2 * k + 1);
    r.threshold = base * base;
  }
  r.above_threshold = BigInt(r.q) > r.threshold;

  if (auto v = find_transitivity_violation(ct)) {
    r.step = 0;
    r.contradiction = true;
    r.vertex = v->b;
    r.color = v->color;
    r.reason = "colour " + std::to_string(v->color) + " is not transitive: " + std::to_string(v->a) + "->" +
               std::to_string(v->b) + "->" + std::to_string(v->c) + " without " + std::to_string(v->a) + "->" +
               std::to_string(v->c);
    return r;
  }

  const TypeReport types = vertex_types(ct, r.nu);
  for (int v = 0; v < r.q && !r.vertex; ++v) {
    const std::uint32_t shared = types.types[v].in_colors & types.types[v].out_colors;
    if (shared) {
      r.vertex = v;
      r.color = std::countr_zero(shared) + 1;
    }
  }
  if (!r.vertex) {
    r.step = 1;
    r.reason = "no vertex has a colour with both in- and out-degree >= nu*q";
    return r;
  }

  r.step = 2;
  const int w = *r.vertex, c = *r.color;
  r.in_neighbors = members_of(ct.class_in(c, w));
  r.out_neighbors = members_of(ct.class_out(c, w));

  r.step = 3;
  r.all_edges_forward = true;
  for (int a : r.in_neighbors)
    for (int b : r.out_neighbors)
      if (!ct.beats(a, b) || ct.color(a, b) != c) r.all_edges_forward = false;
  r.discrepancy = discrepancy(ct.base(), r.in_neighbors, r.out_neighbors);
  const long product = static_cast<long>(r.in_neighbors.size() * r.out_neighbors.size());
  r.product_within_q = product <= r.q;
  if (!r.all_edges_forward) {
    r.contradiction = true;
    r.reason = "an edge between the colour-" + std::to_string(c) + " neighbourhoods of " + std::to_string(w) +
               " is not forward in that colour";
  } else if (!r.product_within_q) {
    r.contradiction = true;
    r.reason = "|A||B|=" + std::to_string(product) + " exceeds q, contradicting the discrepancy bound";
  } else {
    r.reason = "|A||B|=" + std::to_string(product) + " <= q; no contradiction at this order";
  }
  return r;
}

namespace {

BigInt subset_count(int n, int k) {
  if (k < 0 || k > n) return 0;
  return binomial_multiplicative(static_cast<unsigned>(n), static_cast<unsigned>(k));
}

void check_budget(int n, int k, std::uint64_t budget) {
  if (k < 0) throw Error(ErrorCode::InvalidArgument, "k must be >= 0");
  if (subset_count(n, k) > BigInt(std::to_string(budget)))
    throw Error(ErrorCode::InstanceTooLarge, "C(" + std::to_string(n) + "," + std::to_string(k) +
                                                 ") subsets exceed the budget");
}

// Is there a dominating set made of `chosen` plus `left` vertices drawn from [from, n)?
bool dominated_by_some(const std::vector<Bitset>& cover, const Bitset& covered, int from, int left) {
  if (left == 0) return covered.all();
  const int n = static_cast<int>(cover.size());
  for (int v = from; v <= n - left; ++v)
    if (dominated_by_some(cover, covered | cover[v], v + 1, left - 1)) return true;
  return false;
}

std::vector<Bitset> closed_out(const Tournament& t) {
  std::vector<Bitset> cover;
  for (int v = 0; v < t.size(); ++v) {
    Bitset c = t.out(v);
    c.set(v);
    cover.push_back(std::move(c));
  }
  return cover;
}

}  // namespace

bool is_k_paradoxical(const Tournament& t, int k, std::uint64_t budget, bool parallel) {
  if (!parallel) return serial::is_k_paradoxical(t, k, budget);
  check_budget(t.size(), k, budget);
  const int n = t.size();
  if (k == 0) return n > 0;
  if (k >= n) return false;
  const std::vector<Bitset> cover = closed_out(t);
  std::atomic<bool> dominated{false};
#pragma omp parallel for schedule(dynamic, 1)
  for (int first = 0; first <= n - k; ++first) {
    if (dominated.load(std::memory_order_relaxed)) continue;
    if (dominated_by_some(cover, cover[first], first + 1, k - 1)) dominated.store(true);
  }
  return !dominated.load();
}

namespace serial {

bool is_k_paradoxical(const Tournament& t, int k, std::uint64_t budget) {
  check_budget(t.size(), k, budget);
  const int n = t.size();
  if (k == 0) return n > 0;
  if (k >= n) return false;
  return !dominated_by_some(closed_out(t), Bitset(n), 0, k);
}

}  // namespace serial

}  // namespace transdom
