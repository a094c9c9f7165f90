#include "transdom/core.hpp"

#include "transdom/error.hpp"

#include <algorithm>
#include <bit>
#include <string>

namespace transdom {

namespace {

std::string pair_name(int u, int v) { return "(" + std::to_string(u) + "," + std::to_string(v) + ")"; }

}  // namespace

Tournament::Tournament(int n) : out_(n, Bitset(n)), in_(n, Bitset(n)) {}

void Tournament::orient(int winner, int loser) {
  out_[winner].set(loser);
  in_[loser].set(winner);
}

Tournament Tournament::from_edges(int n, std::span<const DirectedEdge> edges) {
  if (n < 0) throw Error(ErrorCode::OutOfRange, "negative vertex count");
  Tournament t(n);
  for (const auto& e : edges) {
    if (e.from < 0 || e.from >= n || e.to < 0 || e.to >= n)
      throw Error(ErrorCode::OutOfRange, "edge " + pair_name(e.from, e.to) + " with n=" + std::to_string(n));
    if (e.from == e.to) throw Error(ErrorCode::SelfLoop, "edge " + pair_name(e.from, e.to));
    if (t.beats(e.from, e.to) || t.beats(e.to, e.from))
      throw Error(ErrorCode::DuplicatePair, "pair " + pair_name(std::min(e.from, e.to), std::max(e.from, e.to)));
    t.orient(e.from, e.to);
  }
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v)
      if (!t.beats(u, v) && !t.beats(v, u)) throw Error(ErrorCode::MissingPair, "pair " + pair_name(u, v));
  return t;
}

Tournament Tournament::transitive(int n) {
  return from_rule(n, [](int, int) { return true; });
}

Tournament Tournament::cyclic_triangle() {
  const DirectedEdge edges[] = {{0, 1}, {1, 2}, {2, 0}};
  return from_edges(3, edges);
}

std::vector<DirectedEdge> Tournament::edges() const {
  std::vector<DirectedEdge> out;
  const int n = size();
  out.reserve(static_cast<std::size_t>(n) * (n - 1) / 2);
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v) out.push_back(beats(u, v) ? DirectedEdge{u, v} : DirectedEdge{v, u});
  return out;
}

Tournament Tournament::reversed() const {
  Tournament t;
  t.out_ = in_;
  t.in_ = out_;
  return t;
}

bool Tournament::is_acyclic() const {
  // A tournament is acyclic iff its score sequence is 0, 1, ..., n-1.
  const int n = size();
  std::vector<int> scores(n);
  for (int v = 0; v < n; ++v) scores[v] = out_degree(v);
  std::sort(scores.begin(), scores.end());
  for (int i = 0; i < n; ++i)
    if (scores[i] != i) return false;
  return true;
}

ColoredTournament::ColoredTournament(Tournament base, int k, std::vector<std::uint16_t> colors)
    : base_(std::move(base)), k_(k), colors_(std::move(colors)) {
  const int n = base_.size();
  if (k_ < 1) throw Error(ErrorCode::InvalidArgument, "colour count must be >= 1");
  class_out_.assign(k_, std::vector<Bitset>(n, Bitset(n)));
  class_in_.assign(k_, std::vector<Bitset>(n, Bitset(n)));
  for (int u = 0; u < n; ++u)
    for (int v = 0; v < n; ++v) {
      if (u == v || !base_.beats(u, v)) continue;
      const int c = colors_[static_cast<std::size_t>(u) * n + v];
      if (c < 1 || c > k_)
        throw Error(ErrorCode::OutOfRange,
                    "colour " + std::to_string(c) + " on edge " + pair_name(u, v) + " with k=" + std::to_string(k_));
      class_out_[c - 1][u].set(v);
      class_in_[c - 1][v].set(u);
    }
}

ColoredTournament ColoredTournament::from_edges(int n, int k, std::span<const ColoredEdge> edges) {
  std::vector<DirectedEdge> plain;
  plain.reserve(edges.size());
  for (const auto& e : edges) plain.push_back({e.from, e.to});
  Tournament base = Tournament::from_edges(n, plain);
  std::vector<std::uint16_t> colors(static_cast<std::size_t>(n) * n, 0);
  for (const auto& e : edges) {
    if (e.color < 1 || e.color > k)
      throw Error(ErrorCode::OutOfRange, "colour " + std::to_string(e.color) + " on edge " + pair_name(e.from, e.to) +
                                             " with k=" + std::to_string(k));
    colors[static_cast<std::size_t>(e.from) * n + e.to] = static_cast<std::uint16_t>(e.color);
    colors[static_cast<std::size_t>(e.to) * n + e.from] = static_cast<std::uint16_t>(e.color);
  }
  return ColoredTournament(std::move(base), k, std::move(colors));
}

ColoredTournament ColoredTournament::uniform(Tournament base, int k, int color) {
  return from_rule(std::move(base), k, [color](int, int) { return color; });
}

std::vector<ColoredEdge> ColoredTournament::edges() const {
  std::vector<ColoredEdge> out;
  for (const auto& e : base_.edges()) out.push_back({e.from, e.to, color(e.from, e.to)});
  return out;
}

std::vector<DirectedEdge> ColoredTournament::color_class(int c) const {
  std::vector<DirectedEdge> out;
  for (const auto& e : base_.edges())
    if (color(e.from, e.to) == c) out.push_back(e);
  return out;
}

ScramblingMask ScramblingMask::of(std::initializer_list<int> colors) {
  ScramblingMask m;
  for (int c : colors) m.bits |= 1U << (c - 1);
  return m;
}

int ScramblingMask::size() const noexcept { return std::popcount(bits); }

std::vector<int> ScramblingMask::colors() const {
  std::vector<int> out;
  for (int c = 1; c <= 32; ++c)
    if (contains(c)) out.push_back(c);
  return out;
}

void check_vertex_set(int n, const VertexSet& s) {
  for (std::size_t i = 0; i < s.size(); ++i) {
    if (s[i] < 0 || s[i] >= n)
      throw Error(ErrorCode::OutOfRange, "vertex " + std::to_string(s[i]) + " with n=" + std::to_string(n));
    if (i > 0 && s[i - 1] >= s[i]) throw Error(ErrorCode::InvalidArgument, "vertex set must be sorted and distinct");
  }
}

bool is_transitive_digraph(const Tournament& t, std::span<const DirectedEdge> edges) {
  const int n = t.size();
  std::vector<Bitset> out(n, Bitset(n));
  for (const auto& e : edges) out[e.from].set(e.to);
  for (int a = 0; a < n; ++a)
    for (auto b = out[a].find_first(); b != Bitset::npos; b = out[a].find_next(b))
      if (!out[b].is_subset_of(out[a])) return false;
  return true;
}

std::optional<TransitivityViolation> find_transitivity_violation(const ColoredTournament& ct) {
  const int n = ct.size();
  for (int c = 1; c <= ct.colors(); ++c)
    for (int a = 0; a < n; ++a) {
      const Bitset& out_a = ct.class_out(c, a);
      for (auto b = out_a.find_first(); b != Bitset::npos; b = out_a.find_next(b)) {
        const Bitset missing = ct.class_out(c, static_cast<int>(b)) - out_a;
        if (missing.any())
          return TransitivityViolation{a, static_cast<int>(b), static_cast<int>(missing.find_first()), c};
      }
    }
  return std::nullopt;
}

bool verify_transitive_coloring(const ColoredTournament& ct) { return !find_transitivity_violation(ct).has_value(); }

ColoredTournament scramble(const ColoredTournament& ct, ScramblingMask mask) {
  Tournament base = Tournament::from_rule(ct.size(), [&](int u, int v) {
    return ct.beats(u, v) != mask.contains(ct.color(u, v));
  });
  return ColoredTournament::from_rule(std::move(base), ct.colors(), [&](int u, int v) { return ct.color(u, v); });
}

bool dominates(const Tournament& t, const VertexSet& s) {
  check_vertex_set(t.size(), s);
  Bitset covered(t.size());
  for (int w : s) {
    covered |= t.out(w);
    covered.set(w);
  }
  return covered.all();
}

bool is_enclosure(const ColoredTournament& ct, const VertexSet& s) {
  const int n = ct.size();
  check_vertex_set(n, s);
  const Bitset members = bitset_of(n, s);
  for (int b = 0; b < n; ++b) {
    if (members.test(b)) continue;
    bool between = false;
    for (int c = 1; c <= ct.colors() && !between; ++c)
      between = ct.class_in(c, b).intersects(members) && ct.class_out(c, b).intersects(members);
    if (!between) return false;
  }
  return true;
}

Hypergraph domination_hypergraph(const Tournament& t) {
  Hypergraph h{t.size(), {}};
  h.edges.reserve(t.size());
  for (int v = 0; v < t.size(); ++v) {
    Bitset e = t.in(v);
    e.set(v);
    h.edges.push_back(std::move(e));
  }
  return h;
}

bool is_transversal(const Hypergraph& h, const VertexSet& s) {
  check_vertex_set(h.vertices, s);
  const Bitset members = bitset_of(h.vertices, s);
  return std::all_of(h.edges.begin(), h.edges.end(), [&](const Bitset& e) { return e.intersects(members); });
}

}  // namespace transdom
