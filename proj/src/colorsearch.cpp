#include "transdom/colorsearch.hpp"

#include "transdom/error.hpp"

#include <algorithm>
#include <bit>
#include <map>
#include <numeric>

namespace transdom {

Permutation Permutation::make(std::vector<int> values) {
  const int n = static_cast<int>(values.size());
  std::vector<bool> seen(n + 1, false);
  for (int x : values) {
    if (x < 1 || x > n || seen[x])
      throw Error(ErrorCode::InvalidArgument, "not a permutation of 1.." + std::to_string(n));
    seen[x] = true;
  }
  return Permutation{std::move(values)};
}

Permutation Permutation::identity(int n) {
  std::vector<int> v(n);
  std::iota(v.begin(), v.end(), 1);
  return Permutation{std::move(v)};
}

namespace {

// Constraint model: one variable per unordered pair, domain = bitmask of colours.
// Within a colour, a path a->b->c forces a->c in the same colour; on a cyclic
// triangle that is impossible, so its three edges need pairwise distinct colours.
class ColoringSearch {
 public:
  ColoringSearch(const Tournament& t, int k, std::uint64_t budget)
      : t_(t), n_(t.size()), k_(k), budget_(budget), id_(static_cast<std::size_t>(n_) * n_, -1) {
    for (int u = 0; u < n_; ++u)
      for (int v = u + 1; v < n_; ++v) {
        const int e = static_cast<int>(from_.size());
        id_[u * n_ + v] = id_[v * n_ + u] = e;
        from_.push_back(t.beats(u, v) ? u : v);
        to_.push_back(t.beats(u, v) ? v : u);
      }
    const std::uint32_t full = k_ >= 32 ? ~0U : (1U << k_) - 1;
    domain_.assign(from_.size(), full);
    // Static tie-break: edges between high-score endpoints first.
    rank_.resize(from_.size());
    std::vector<int> order(from_.size());
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(), [&](int a, int b) {
      return t.out_degree(from_[a]) * t.out_degree(to_[a]) > t.out_degree(from_[b]) * t.out_degree(to_[b]);
    });
    for (std::size_t r = 0; r < order.size(); ++r) rank_[order[r]] = static_cast<int>(r);
  }

  bool run() {
    for (int e = 0; e < static_cast<int>(domain_.size()); ++e)
      if (std::has_single_bit(domain_[e])) queue_.push_back(e);
    if (!propagate()) return false;
    return search();
  }

  ColoredTournament result() const {
    return ColoredTournament::from_rule(t_, k_, [&](int u, int v) {
      return std::countr_zero(domain_[id_[u * n_ + v]]) + 1;
    });
  }

 private:
  static bool single(std::uint32_t d) { return std::has_single_bit(d); }

  bool restrict_to(int e, std::uint32_t d) {
    d &= domain_[e];
    if (d == domain_[e]) return true;
    if (d == 0) return false;
    trail_.emplace_back(e, domain_[e]);
    domain_[e] = d;
    if (single(d)) queue_.push_back(e);
    return true;
  }

  // Not (p1 = p2 != shortcut) on a transitive triangle p1 -> p2 with shortcut s.
  bool transitive_triangle(int p1, int p2, int s) {
    const std::uint32_t a = domain_[p1], b = domain_[p2], c = domain_[s];
    if (single(a) && a == b && !restrict_to(s, a)) return false;
    if (single(a) && single(c) && a != c && !restrict_to(p2, ~a)) return false;
    if (single(b) && single(c) && b != c && !restrict_to(p1, ~b)) return false;
    return true;
  }

  bool cyclic_triangle(int x, int y, int z) {
    for (int e : {x, y, z}) {
      const std::uint32_t d = domain_[e];
      if (!single(d)) continue;
      for (int f : {x, y, z})
        if (f != e && !restrict_to(f, ~d)) return false;
    }
    return true;
  }

  bool propagate() {
    while (!queue_.empty()) {
      const int e = queue_.back();
      queue_.pop_back();
      const int u = from_[e], v = to_[e];
      for (int w = 0; w < n_; ++w) {
        if (w == u || w == v) continue;
        const int f = id_[u * n_ + w], g = id_[v * n_ + w];
        const bool u_w = t_.beats(u, w), v_w = t_.beats(v, w);
        bool ok;
        if (!u_w && v_w)
          ok = cyclic_triangle(e, f, g);  // u->v->w->u
        else if (u_w && !v_w)
          ok = transitive_triangle(f, g, e);  // u->w->v
        else if (!u_w && !v_w)
          ok = transitive_triangle(f, e, g);  // w->u->v
        else
          ok = transitive_triangle(e, g, f);  // u->v->w
        if (!ok) {
          queue_.clear();
          return false;
        }
      }
    }
    return true;
  }

  void undo(std::size_t mark) {
    while (trail_.size() > mark) {
      domain_[trail_.back().first] = trail_.back().second;
      trail_.pop_back();
    }
  }

  bool search() {
    if (++nodes_ > budget_)
      throw Error(ErrorCode::BudgetExhausted, "colour search exceeded " + std::to_string(budget_) + " nodes");
    int branch = -1;
    int highest_used = 0;
    for (int e = 0; e < static_cast<int>(domain_.size()); ++e) {
      const int size = std::popcount(domain_[e]);
      if (size == 1) {
        highest_used = std::max(highest_used, std::countr_zero(domain_[e]) + 1);
        continue;
      }
      if (branch < 0 || size < std::popcount(domain_[branch]) ||
          (size == std::popcount(domain_[branch]) && rank_[e] < rank_[branch]))
        branch = e;
    }
    if (branch < 0) return true;

    // Colours above highest_used + 1 are interchangeable with highest_used + 1.
    for (int c = 1; c <= std::min(k_, highest_used + 1); ++c) {
      const std::uint32_t bit = 1U << (c - 1);
      if (!(domain_[branch] & bit)) continue;
      const std::size_t mark = trail_.size();
      if (restrict_to(branch, bit) && propagate() && search()) return true;
      undo(mark);
    }
    return false;
  }

  const Tournament& t_;
  int n_;
  int k_;
  std::uint64_t budget_;
  std::uint64_t nodes_ = 0;
  std::vector<int> id_;
  std::vector<int> from_, to_, rank_;
  std::vector<std::uint32_t> domain_;
  std::vector<std::pair<int, std::uint32_t>> trail_;
  std::vector<int> queue_;
};

}  // namespace

std::optional<ColoredTournament> find_transitive_coloring(const Tournament& t, int k,
                                                          const ColorSearchOptions& options) {
  if (k < 1 || k > 32) throw Error(ErrorCode::InvalidArgument, "k must lie in 1..32");
  const int n = t.size();
  if (options.enforce_ceiling && !(n <= 12 || (k <= 3 && n <= 20)))
    throw Error(ErrorCode::InstanceTooLarge, "colour search supports n <= 12, or n <= 20 with k <= 3");
  ColoringSearch search(t, k, options.node_budget);
  if (!search.run()) return std::nullopt;
  ColoredTournament ct = search.result();
  if (!verify_transitive_coloring(ct))
    throw Error(ErrorCode::InvariantViolation, "colour search produced a non-transitive colouring");
  return ct;
}

ColoredTournament permutation_tournament(const Permutation& pi) {
  const int n = pi.size();
  return ColoredTournament::from_rule(Tournament::transitive(n), 2,
                                      [&](int i, int j) { return pi.values[i] < pi.values[j] ? 1 : 2; });
}

std::optional<RecoveredPermutation> recover_permutation(const ColoredTournament& ct) {
  if (ct.colors() > 2) throw Error(ErrorCode::NotTwoColored, "k=" + std::to_string(ct.colors()));
  if (!verify_transitive_coloring(ct)) throw Error(ErrorCode::NotTransitivelyColored, "colouring is not transitive");
  const int n = ct.size();
  if (!ct.base().is_acyclic()) return std::nullopt;

  RecoveredPermutation out;
  out.position_vertex.resize(n);
  for (int v = 0; v < n; ++v) out.position_vertex[n - 1 - ct.base().out_degree(v)] = v;

  // less[i][j]: value at position i is below value at position j.
  auto less = [&](int i, int j) {
    const int a = out.position_vertex[std::min(i, j)], b = out.position_vertex[std::max(i, j)];
    const bool lower_first = ct.color(a, b) == 1;
    return i < j ? lower_first : !lower_first;
  };
  std::vector<int> values(n, 1);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      if (i != j && less(j, i)) ++values[i];
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      if (i != j && less(i, j) != (values[i] < values[j])) return std::nullopt;
  out.permutation = Permutation::make(std::move(values));
  return out;
}

ColoredTournament substitute(const ColoredTournament& t, int v, const ColoredTournament& h) {
  if (v < 0 || v >= t.size())
    throw Error(ErrorCode::VertexNotFound, "vertex " + std::to_string(v) + " with n=" + std::to_string(t.size()));
  const int m = h.size();
  const int n = t.size() + m - 1;
  // Map a new label to (is_inside_h, original label).
  auto origin = [&](int x) -> std::pair<bool, int> {
    if (x < v) return {false, x};
    if (x < v + m) return {true, x - v};
    return {false, x - m + 1};
  };
  auto old_label = [&](std::pair<bool, int> o) { return o.first ? v : o.second; };
  Tournament base = Tournament::from_rule(n, [&](int x, int y) {
    const auto ox = origin(x), oy = origin(y);
    if (ox.first && oy.first) return h.beats(ox.second, oy.second);
    return t.beats(old_label(ox), old_label(oy));
  });
  return ColoredTournament::from_rule(std::move(base), std::max(t.colors(), h.colors()), [&](int x, int y) {
    const auto ox = origin(x), oy = origin(y);
    if (ox.first && oy.first) return h.color(ox.second, oy.second);
    return t.color(old_label(ox), old_label(oy));
  });
}

ColoredTournament three_colored_triangle() {
  const ColoredEdge edges[] = {{0, 1, 1}, {1, 2, 2}, {2, 0, 3}};
  return ColoredTournament::from_edges(3, 3, edges);
}

ColoredTournament blowup_c3() {
  const ColoredTournament c3 = three_colored_triangle();
  ColoredTournament t = c3;
  for (int v = 2; v >= 0; --v) t = substitute(t, v, c3);
  return t;
}

ColoredTournament bipartite_example(int a_size, int b_size, std::span<const std::pair<int, int>> cross) {
  if (a_size < 1 || b_size < 1) throw Error(ErrorCode::InvalidArgument, "both parts need at least one vertex");
  const int n = a_size + b_size;
  std::vector<bool> forward(static_cast<std::size_t>(a_size) * b_size, false);
  for (const auto& [a, b] : cross) {
    if (a < 0 || a >= a_size || b < 0 || b >= b_size)
      throw Error(ErrorCode::OutOfRange, "cross edge (" + std::to_string(a) + "," + std::to_string(b) + ")");
    forward[a * b_size + b] = true;
  }
  auto in_a = [&](int x) { return x < a_size; };
  auto is_forward = [&](int x, int y) -> bool { return forward[x * b_size + (y - a_size)]; };
  Tournament base = Tournament::from_rule(n, [&](int x, int y) {
    if (in_a(x) == in_a(y)) return true;  // index order inside each part
    return is_forward(x, y);              // x in A, y in B since x < y
  });
  return ColoredTournament::from_rule(std::move(base), 3, [&](int x, int y) {
    if (in_a(x) == in_a(y)) return 3;
    return is_forward(x, y) ? 1 : 2;
  });
}

MajorityTournament majority_tournament(const std::vector<std::vector<int>>& orders) {
  const int m = static_cast<int>(orders.size());
  if (m == 0 || m % 2 == 0)
    throw Error(ErrorCode::EvenOrderCount, "need an odd number of orders, got " + std::to_string(m));
  if (m > 31) throw Error(ErrorCode::InvalidArgument, "at most 31 orders are supported");
  const int n = static_cast<int>(orders.front().size());
  std::vector<std::vector<int>> pos(m, std::vector<int>(n, -1));
  for (int i = 0; i < m; ++i) {
    if (static_cast<int>(orders[i].size()) != n)
      throw Error(ErrorCode::MismatchedDomains, "order " + std::to_string(i) + " has a different length");
    for (int p = 0; p < n; ++p) {
      const int x = orders[i][p];
      if (x < 0 || x >= n || pos[i][x] >= 0)
        throw Error(ErrorCode::MismatchedDomains, "order " + std::to_string(i) + " is not a permutation of 0.." +
                                                      std::to_string(n - 1));
      pos[i][x] = p;
    }
  }
  const int k = (m + 1) / 2;
  auto before_set = [&](int x, int y) {
    std::uint32_t s = 0;
    for (int i = 0; i < m; ++i)
      if (pos[i][x] < pos[i][y]) s |= 1U << i;
    return s;
  };
  Tournament t = Tournament::from_rule(n, [&](int x, int y) { return std::popcount(before_set(x, y)) >= k; });

  std::map<std::uint32_t, int> color_of;
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y)
      if (x != y && t.beats(x, y)) color_of.emplace(before_set(x, y), 0);
  MajorityTournament out;
  for (auto& [set, c] : color_of) {
    out.color_sets.push_back(set);
    c = static_cast<int>(out.color_sets.size());
  }
  const int palette = std::max<int>(1, static_cast<int>(out.color_sets.size()));
  out.colored = ColoredTournament::from_rule(t, palette, [&](int x, int y) {
    return t.beats(x, y) ? color_of.at(before_set(x, y)) : color_of.at(before_set(y, x));
  });
  out.tournament = std::move(t);
  return out;
}

}  // namespace transdom
