#include "transdom/solvers.hpp"

#include "transdom/error.hpp"
#include "transdom/lp.hpp"

#include <algorithm>
#include <atomic>
#include <bit>
#include <cmath>
#include <cstdint>
#include <exception>
#include <functional>
#include <numeric>

namespace transdom {

namespace {

struct CoverContext {
  int n = 0;
  std::vector<Bitset> cover;       // closed out-neighbourhood of w
  std::vector<Bitset> dominators;  // closed in-neighbourhood of v
  std::vector<int> dominator_count;
};

CoverContext make_context(const Tournament& t) {
  CoverContext ctx;
  ctx.n = t.size();
  for (int v = 0; v < ctx.n; ++v) {
    Bitset c = t.out(v);
    c.set(v);
    ctx.cover.push_back(std::move(c));
    Bitset d = t.in(v);
    d.set(v);
    ctx.dominator_count.push_back(static_cast<int>(d.count()));
    ctx.dominators.push_back(std::move(d));
  }
  return ctx;
}

// Smallest r such that the r largest gains can cover `need` vertices.
int cover_bound(std::vector<int>& gains, std::size_t need) {
  std::sort(gains.begin(), gains.end(), std::greater<>());
  std::size_t total = 0;
  int r = 0;
  for (int g : gains) {
    if (total >= need) break;
    total += static_cast<std::size_t>(g);
    ++r;
  }
  return total >= need ? r : std::numeric_limits<int>::max();
}

int pick_branch_vertex(const CoverContext& ctx, const Bitset& uncovered) {
  int best = -1;
  for (auto v = uncovered.find_first(); v != Bitset::npos; v = uncovered.find_next(v))
    if (best < 0 || ctx.dominator_count[v] < ctx.dominator_count[best]) best = static_cast<int>(v);
  return best;
}

std::vector<int> ordered_candidates(const CoverContext& ctx, int v, const Bitset& uncovered) {
  std::vector<std::pair<int, int>> scored;
  for (auto w = ctx.dominators[v].find_first(); w != Bitset::npos; w = ctx.dominators[v].find_next(w))
    scored.emplace_back(-static_cast<int>((ctx.cover[w] & uncovered).count()), static_cast<int>(w));
  std::sort(scored.begin(), scored.end());
  std::vector<int> out;
  for (auto& [_, w] : scored) out.push_back(w);
  return out;
}

// Depth-first search for a dominating set extending `chosen` with at most `remaining` more vertices.
bool extend(const CoverContext& ctx, const Bitset& covered, int remaining, std::vector<int>& chosen,
            const std::atomic<bool>* stop) {
  if (covered.all()) return true;
  if (remaining == 0) return false;
  if (stop && stop->load(std::memory_order_relaxed)) return false;
  const Bitset uncovered = ~covered;
  std::vector<int> gains(ctx.n);
  for (int w = 0; w < ctx.n; ++w) gains[w] = static_cast<int>((ctx.cover[w] & uncovered).count());
  if (cover_bound(gains, uncovered.count()) > remaining) return false;

  const int v = pick_branch_vertex(ctx, uncovered);
  for (int w : ordered_candidates(ctx, v, uncovered)) {
    chosen.push_back(w);
    if (extend(ctx, covered | ctx.cover[w], remaining - 1, chosen, stop)) return true;
    chosen.pop_back();
  }
  return false;
}

std::optional<VertexSet> search_size(const CoverContext& ctx, int size, bool parallel) {
  const Bitset empty(ctx.n);
  if (!parallel) {
    std::vector<int> chosen;
    if (extend(ctx, empty, size, chosen, nullptr)) {
      std::sort(chosen.begin(), chosen.end());
      return chosen;
    }
    return std::nullopt;
  }

  // Split on the root branch; every subtree is an independent serial search and
  // the lowest successful root wins, so the result does not depend on scheduling.
  const Bitset uncovered = ~empty;
  const int v = pick_branch_vertex(ctx, uncovered);
  const std::vector<int> roots = ordered_candidates(ctx, v, uncovered);
  const int root_count = static_cast<int>(roots.size());
  std::atomic<int> best_root{root_count};
  std::vector<std::optional<VertexSet>> found(root_count);
#pragma omp parallel for schedule(dynamic, 1)
  for (int i = 0; i < root_count; ++i) {
    if (i > best_root.load()) continue;
    std::vector<int> chosen{roots[i]};
    if (extend(ctx, ctx.cover[roots[i]], size - 1, chosen, nullptr)) {
      std::sort(chosen.begin(), chosen.end());
      found[i] = std::move(chosen);
      int cur = best_root.load();
      while (i < cur && !best_root.compare_exchange_weak(cur, i)) {
      }
    }
  }
  const int best = best_root.load();
  if (best < root_count) return found[best];
  return std::nullopt;
}

double approximate_tau_star(const Tournament& t) {
  return fractional_transversal(domination_hypergraph(t), LpMode::Approximate).value;
}

DominationOutcome solve_domination(const Tournament& t, const DominationOptions& options, bool parallel) {
  const int n = t.size();
  if (n > options.exact_ceiling)
    throw Error(ErrorCode::InstanceTooLarge,
                "n=" + std::to_string(n) + " exceeds exact ceiling " + std::to_string(options.exact_ceiling));
  if (n == 0) return {DominationCertificate{{}, 0, true, "empty tournament"}, 0};

  const CoverContext ctx = make_context(t);
  const VertexSet greedy = greedy_dominating_set(t);
  const int upper = static_cast<int>(greedy.size());

  std::vector<int> sizes(n);
  for (int w = 0; w < n; ++w) sizes[w] = static_cast<int>(ctx.cover[w].count());
  int lower = cover_bound(sizes, static_cast<std::size_t>(n));
  std::string bound_name = "coverage";
  if (options.lp_bound && n <= kExactLpCeiling) {
    const int lp = static_cast<int>(std::ceil(approximate_tau_star(t) - 1e-9));
    if (lp > lower) {
      lower = lp;
      bound_name = "lp ceil(tau*)";
    }
  }

  auto certificate = [&](VertexSet set, const std::string& how) {
    DominationCertificate c;
    c.size = static_cast<int>(set.size());
    c.set = std::move(set);
    c.optimal = true;
    c.lower_bound_used = how;
    return c;
  };

  const int last = options.limit ? std::min(*options.limit, upper - 1) : upper - 1;
  if (options.limit && lower > *options.limit) return {std::nullopt, lower};
  for (int s = lower; s <= last; ++s) {
    if (auto found = search_size(ctx, s, parallel)) {
      const std::string how = s == lower ? bound_name + "=" + std::to_string(lower)
                                         : "exhausted size " + std::to_string(s - 1);
      return {certificate(std::move(*found), how), s};
    }
  }
  if (!options.limit || upper <= *options.limit) {
    const std::string how = upper == lower ? bound_name + "=" + std::to_string(lower)
                                           : "exhausted size " + std::to_string(upper - 1);
    return {certificate(greedy, how), upper};
  }
  return {std::nullopt, *options.limit + 1};
}

}  // namespace

DominationOutcome min_dominating_set(const Tournament& t, const DominationOptions& options) {
  return solve_domination(t, options, options.parallel);
}

DominationCertificate exact_dominating_set(const Tournament& t, int exact_ceiling) {
  DominationOptions options;
  options.exact_ceiling = exact_ceiling;
  return *min_dominating_set(t, options).certificate;
}

VertexSet greedy_dominating_set(const Tournament& t) {
  const int n = t.size();
  Bitset covered(n);
  VertexSet chosen;
  while (!covered.all()) {
    int best = -1;
    std::size_t best_gain = 0;
    for (int w = 0; w < n; ++w) {
      Bitset c = t.out(w);
      c.set(w);
      const std::size_t gain = (c - covered).count();
      if (gain > best_gain) {
        best = w;
        best_gain = gain;
      }
    }
    chosen.push_back(best);
    covered |= t.out(best);
    covered.set(best);
  }
  std::sort(chosen.begin(), chosen.end());
  return chosen;
}

namespace {

template <class Scalar>
lp::Problem<Scalar> covering_lp(const Hypergraph& h) {
  lp::Problem<Scalar> p;
  p.variables = h.vertices;
  p.objective.assign(h.vertices, Scalar(1));
  for (const Bitset& e : h.edges) {
    std::vector<Scalar> row(h.vertices, Scalar(0));
    for (auto w = e.find_first(); w != Bitset::npos; w = e.find_next(w)) row[w] = 1;
    p.rows.push_back(std::move(row));
    p.senses.push_back(lp::Sense::GreaterEqual);
    p.rhs.push_back(Scalar(1));
  }
  return p;
}

template <class Scalar>
lp::Problem<Scalar> packing_lp(const Hypergraph& h) {
  lp::Problem<Scalar> p;
  const int m = static_cast<int>(h.edges.size());
  p.variables = m;
  p.maximize = true;
  p.objective.assign(m, Scalar(1));
  for (int w = 0; w < h.vertices; ++w) {
    std::vector<Scalar> row(m, Scalar(0));
    for (int e = 0; e < m; ++e)
      if (h.edges[e].test(w)) row[e] = 1;
    p.rows.push_back(std::move(row));
    p.senses.push_back(lp::Sense::LessEqual);
    p.rhs.push_back(Scalar(1));
  }
  return p;
}

void require_optimal(lp::Status status, const char* which) {
  if (status == lp::Status::Optimal) return;
  throw Error(status == lp::Status::IterationLimit ? ErrorCode::NonConvergence : ErrorCode::InvariantViolation,
              std::string(which) + " LP did not reach an optimum");
}

}  // namespace

bool is_feasible_transversal(const Hypergraph& h, const std::vector<Rational>& weights) {
  if (static_cast<int>(weights.size()) != h.vertices) return false;
  for (const auto& w : weights)
    if (w < 0 || w > 1) return false;
  for (const Bitset& e : h.edges) {
    Rational sum = 0;
    for (auto v = e.find_first(); v != Bitset::npos; v = e.find_next(v)) sum += weights[v];
    if (sum < 1) return false;
  }
  return true;
}

bool is_feasible_matching(const Hypergraph& h, const std::vector<Rational>& weights) {
  if (weights.size() != h.edges.size()) return false;
  for (const auto& w : weights)
    if (w < 0) return false;
  for (int v = 0; v < h.vertices; ++v) {
    Rational sum = 0;
    for (std::size_t e = 0; e < h.edges.size(); ++e)
      if (h.edges[e].test(v)) sum += weights[e];
    if (sum > 1) return false;
  }
  return true;
}

FractionalSolution fractional_transversal(const Hypergraph& h, LpMode mode) {
  FractionalSolution out;
  out.mode = mode;
  if (mode == LpMode::Exact) {
    if (h.vertices > kExactLpCeiling)
      throw Error(ErrorCode::InstanceTooLarge, "exact LP supports n <= " + std::to_string(kExactLpCeiling));
    auto primal = lp::solve(covering_lp<Rational>(h));
    require_optimal(primal.status, "covering");
    auto dual = lp::solve(packing_lp<Rational>(h));
    require_optimal(dual.status, "packing");
    if (primal.value != dual.value)
      throw Error(ErrorCode::InvariantViolation, "tau*=" + to_fraction_string(primal.value) +
                                                     " differs from nu*=" + to_fraction_string(dual.value));
    if (!is_feasible_transversal(h, primal.x) || !is_feasible_matching(h, dual.x))
      throw Error(ErrorCode::InvariantViolation, "LP solution infeasible");
    out.exact_weights = std::move(primal.x);
    out.exact_matching = std::move(dual.x);
    out.exact_value = primal.value;
    for (const auto& w : out.exact_weights) out.weights.push_back(w.get_d());
    out.value = out.exact_value.get_d();
    return out;
  }

  // The packing side needs no phase 1; its row duals are a fractional transversal.
  auto dual = lp::solve(packing_lp<double>(h), 100000);
  require_optimal(dual.status, "packing");
  std::vector<double> weights = std::move(dual.duals);
  // Weak duality: any feasible matching value bounds tau* from below.
  for (auto& w : weights) w = std::clamp(w, 0.0, 1.0);
  double primal_value = std::accumulate(weights.begin(), weights.end(), 0.0);
  double worst_cover = std::numeric_limits<double>::infinity();
  for (const Bitset& e : h.edges) {
    double sum = 0;
    for (auto v = e.find_first(); v != Bitset::npos; v = e.find_next(v)) sum += weights[v];
    worst_cover = std::min(worst_cover, sum);
  }
  double worst_load = 0;
  for (int v = 0; v < h.vertices; ++v) {
    double sum = 0;
    for (std::size_t e = 0; e < h.edges.size(); ++e)
      if (h.edges[e].test(v)) sum += std::max(dual.x[e], 0.0);
    worst_load = std::max(worst_load, sum);
  }
  // Rescale both to exact feasibility before measuring the gap.
  const double upper = worst_cover > 0 ? primal_value / std::min(worst_cover, 1.0) : HUGE_VAL;
  const double dual_value = std::accumulate(dual.x.begin(), dual.x.end(), 0.0, [](double a, double y) {
    return a + std::max(y, 0.0);
  });
  const double lower = worst_load > 1 ? dual_value / worst_load : dual_value;
  out.gap = upper - lower;
  if (!(out.gap <= 1e-9))
    throw Error(ErrorCode::NonConvergence, "primal/dual gap " + std::to_string(out.gap) + " exceeds 1e-9");
  out.weights = std::move(weights);
  out.value = primal_value;
  return out;
}

Rational fractional_matching_value(const Hypergraph& h) {
  auto dual = lp::solve(packing_lp<Rational>(h));
  require_optimal(dual.status, "packing");
  return dual.value;
}

namespace {

struct EnclosureMasks {
  int n = 0;
  int k = 0;
  std::vector<std::uint32_t> in;   // [c * n + b]
  std::vector<std::uint32_t> out;  // [c * n + b]

  explicit EnclosureMasks(const ColoredTournament& ct) : n(ct.size()), k(ct.colors()) {
    in.assign(static_cast<std::size_t>(k) * n, 0);
    out.assign(static_cast<std::size_t>(k) * n, 0);
    for (int c = 1; c <= k; ++c)
      for (int b = 0; b < n; ++b) {
        for (int a : members_of(ct.class_in(c, b))) in[(c - 1) * n + b] |= 1U << a;
        for (int a : members_of(ct.class_out(c, b))) out[(c - 1) * n + b] |= 1U << a;
      }
  }

  bool encloses(std::uint32_t s) const {
    for (int b = 0; b < n; ++b) {
      if ((s >> b) & 1U) continue;
      bool between = false;
      for (int c = 0; c < k && !between; ++c) between = (in[c * n + b] & s) && (out[c * n + b] & s);
      if (!between) return false;
    }
    return true;
  }
};

std::uint32_t next_combination(std::uint32_t x) {
  const std::uint32_t c = x & -x;
  const std::uint32_t r = x + c;
  return (((r ^ x) >> 2) / c) | r;
}

VertexSet to_set(std::uint32_t mask) {
  VertexSet s;
  for (int v = 0; mask; ++v, mask >>= 1)
    if (mask & 1U) s.push_back(v);
  return s;
}

void check_enclosure_size(const ColoredTournament& ct) {
  if (ct.size() > kEnclosureCeiling)
    throw Error(ErrorCode::InstanceTooLarge, "enclosure search supports n <= " + std::to_string(kEnclosureCeiling));
}

}  // namespace

VertexSet min_enclosure_set(const ColoredTournament& ct, bool parallel) {
  if (!parallel) return serial::min_enclosure_set(ct);
  check_enclosure_size(ct);
  const int n = ct.size();
  if (n == 0) return {};
  const EnclosureMasks masks(ct);
  for (int size = 1; size <= n; ++size) {
    // Partition by the lowest member; the smallest lowest member that works wins.
    std::atomic<int> best_first{n};
    std::vector<std::uint32_t> found(n, 0);
#pragma omp parallel for schedule(dynamic, 1)
    for (int first = 0; first <= n - size; ++first) {
      if (first > best_first.load()) continue;
      const int rest = size - 1;
      const int span = n - first - 1;
      const std::uint32_t head = 1U << first;
      if (rest == 0) {
        if (masks.encloses(head)) found[first] = head;
      } else {
        const std::uint64_t limit = 1ULL << span;
        for (std::uint32_t tail = (1U << rest) - 1; tail < limit; tail = next_combination(tail)) {
          if (first > best_first.load(std::memory_order_relaxed)) break;
          const std::uint32_t s = head | (tail << (first + 1));
          if (masks.encloses(s)) {
            found[first] = s;
            break;
          }
        }
      }
      if (found[first]) {
        int cur = best_first.load();
        while (first < cur && !best_first.compare_exchange_weak(cur, first)) {
        }
      }
    }
    if (best_first.load() < n) return to_set(found[best_first.load()]);
  }
  throw Error(ErrorCode::InvariantViolation, "the full vertex set is always an enclosure set");
}

ScramblingEnclosure enclosure_via_scramblings(const ColoredTournament& ct, const EnclosureOptions& options) {
  const int k = ct.colors();
  if (k > 8) throw Error(ErrorCode::InstanceTooLarge, "scrambling enumeration supports k <= 8");
  const int masks = 1 << k;
  ScramblingEnclosure out;
  out.per_mask.resize(masks);
  DominationOptions inner = options.domination;
  inner.parallel = options.parallel ? false : inner.parallel;

  std::vector<std::exception_ptr> failures(masks);
  auto solve_mask = [&](int m) {
    try {
      const ColoredTournament scrambled = scramble(ct, ScramblingMask{static_cast<std::uint32_t>(m)});
      if (options.greedy) {
        out.per_mask[m] = greedy_dominating_set(scrambled.base());
      } else {
        DominationOptions o = inner;
        o.limit.reset();
        out.per_mask[m] = min_dominating_set(scrambled.base(), o).certificate->set;
      }
    } catch (...) {
      failures[m] = std::current_exception();
    }
  };
  if (options.parallel) {
#pragma omp parallel for schedule(dynamic, 1)
    for (int m = 0; m < masks; ++m) solve_mask(m);
  } else {
    for (int m = 0; m < masks; ++m) solve_mask(m);
  }
  for (const auto& failure : failures)
    if (failure) std::rethrow_exception(failure);

  Bitset united(ct.size());
  for (const VertexSet& s : out.per_mask) {
    for (int v : s) united.set(v);
    out.size_sum += static_cast<int>(s.size());
    out.size_max = std::max(out.size_max, static_cast<int>(s.size()));
  }
  out.enclosure = members_of(united);
  if (!is_enclosure(ct, out.enclosure))
    throw Error(ErrorCode::InvariantViolation, "union of scrambling dominating sets is not an enclosure set");
  if (static_cast<int>(out.enclosure.size()) > out.size_sum)
    throw Error(ErrorCode::InvariantViolation, "union larger than the sum of its parts");
  return out;
}

namespace serial {

DominationOutcome min_dominating_set(const Tournament& t, const DominationOptions& options) {
  return solve_domination(t, options, false);
}

VertexSet min_enclosure_set(const ColoredTournament& ct) {
  check_enclosure_size(ct);
  const int n = ct.size();
  if (n == 0) return {};
  const EnclosureMasks masks(ct);
  const std::uint64_t limit = 1ULL << n;
  for (int size = 1; size <= n; ++size)
    for (std::uint32_t s = (1U << size) - 1; s < limit; s = next_combination(s))
      if (masks.encloses(s)) return to_set(s);
  throw Error(ErrorCode::InvariantViolation, "the full vertex set is always an enclosure set");
}

}  // namespace serial

}  // namespace transdom
