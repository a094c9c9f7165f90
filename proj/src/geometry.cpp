#include "transdom/geometry.hpp"

#include "transdom/error.hpp"
#include "transdom/solvers.hpp"

#include <algorithm>
#include <atomic>
#include <exception>
#include <numeric>

namespace transdom {

namespace {

std::vector<int> axis_ranks(const std::vector<std::vector<Rational>>& points, int axis) {
  std::vector<int> order(points.size());
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(),
                   [&](int a, int b) { return points[a][axis] < points[b][axis]; });
  std::vector<int> rank(points.size());
  for (std::size_t r = 0; r < order.size(); ++r) rank[order[r]] = static_cast<int>(r);
  return rank;
}

}  // namespace

PointSet::PointSet(std::vector<std::vector<Rational>> points) : points_(std::move(points)) {
  if (points_.empty()) throw Error(ErrorCode::InvalidArgument, "point set is empty");
  dimension_ = static_cast<int>(points_.front().size());
  if (dimension_ < 1) throw Error(ErrorCode::InvalidArgument, "dimension must be >= 1");
  for (std::size_t i = 0; i < points_.size(); ++i)
    if (static_cast<int>(points_[i].size()) != dimension_)
      throw Error(ErrorCode::DimensionMismatch, "point " + std::to_string(i) + " has " +
                                                    std::to_string(points_[i].size()) + " coordinates, expected " +
                                                    std::to_string(dimension_));
  for (auto& p : points_)
    for (auto& c : p) c.canonicalize();

  const int n = size();
  ranks_.assign(static_cast<std::size_t>(n) * dimension_, 0);
  for (int axis = 0; axis < dimension_; ++axis) {
    const std::vector<int> rank = axis_ranks(points_, axis);
    std::vector<int> by_rank(n);
    for (int i = 0; i < n; ++i) {
      ranks_[static_cast<std::size_t>(i) * dimension_ + axis] = rank[i];
      by_rank[rank[i]] = i;
    }
    for (int r = 1; r < n; ++r)
      if (points_[by_rank[r - 1]][axis] == points_[by_rank[r]][axis]) {
        const int a = std::min(by_rank[r - 1], by_rank[r]);
        const int b = std::max(by_rank[r - 1], by_rank[r]);
        throw Error(ErrorCode::GeneralPositionViolation, "points " + std::to_string(a) + " and " + std::to_string(b) +
                                                             " share coordinate " + points_[a][axis].get_str() +
                                                             " on axis " + std::to_string(axis + 1));
      }
  }
}

PointSet PointSet::rank_relabeled(const std::vector<std::vector<Rational>>& points) {
  if (points.empty()) throw Error(ErrorCode::InvalidArgument, "point set is empty");
  const std::size_t d = points.front().size();
  for (std::size_t i = 0; i < points.size(); ++i)
    if (points[i].size() != d)
      throw Error(ErrorCode::DimensionMismatch, "point " + std::to_string(i) + " has " +
                                                    std::to_string(points[i].size()) + " coordinates, expected " +
                                                    std::to_string(d));
  std::vector<std::vector<Rational>> relabeled(points.size(), std::vector<Rational>(d));
  for (std::size_t axis = 0; axis < d; ++axis) {
    const std::vector<int> rank = axis_ranks(points, static_cast<int>(axis));
    for (std::size_t i = 0; i < points.size(); ++i) relabeled[i][axis] = rank[i];
  }
  return PointSet(std::move(relabeled));
}

bool PointSet::in_box(int p, int q, int x) const {
  for (int axis = 0; axis < dimension_; ++axis) {
    const int a = rank(p, axis), b = rank(q, axis), c = rank(x, axis);
    if (c < std::min(a, b) || c > std::max(a, b)) return false;
  }
  return true;
}

SignPattern SignPattern::of_color(int color, int dimension) {
  SignPattern s;
  for (int j = 0; j < dimension - 1; ++j) s.negative.push_back(((color - 1) >> j) & 1);
  return s;
}

int SignPattern::color() const {
  int c = 0;
  for (std::size_t j = 0; j < negative.size(); ++j)
    if (negative[j]) c |= 1 << j;
  return c + 1;
}

std::string SignPattern::to_string() const {
  std::string s;
  for (bool neg : negative) s += neg ? '-' : '+';
  return s;
}

bool box_contains(std::span<const Rational> p, std::span<const Rational> q, std::span<const Rational> x) {
  if (p.size() != q.size() || p.size() != x.size())
    throw Error(ErrorCode::DimensionMismatch, "box_contains needs points of equal dimension");
  for (std::size_t i = 0; i < p.size(); ++i) {
    const Rational& lo = std::min(p[i], q[i]);
    const Rational& hi = std::max(p[i], q[i]);
    if (x[i] < lo || x[i] > hi) return false;
  }
  return true;
}

ColoredTournament coordinate_tournament(const PointSet& s) {
  const int d = s.dimension();
  if (d > 6) throw Error(ErrorCode::InstanceTooLarge, "coordinate tournaments support d <= 6");
  Tournament base = Tournament::from_rule(s.size(), [&](int u, int v) { return s.rank(u, 0) < s.rank(v, 0); });
  return ColoredTournament::from_rule(std::move(base), 1 << (d - 1), [&](int u, int v) {
    const int lo = s.rank(u, 0) < s.rank(v, 0) ? u : v;
    const int hi = lo == u ? v : u;
    int bits = 0;
    for (int axis = 1; axis < d; ++axis)
      if (s.rank(hi, axis) < s.rank(lo, axis)) bits |= 1 << (axis - 1);
    return bits + 1;
  });
}

std::vector<std::pair<ScramblingMask, ColoredTournament>> all_scramblings(const PointSet& s) {
  if (s.dimension() > 4)
    throw Error(ErrorCode::InstanceTooLarge, "scrambling enumeration supports d <= 4, got d=" +
                                                 std::to_string(s.dimension()));
  const ColoredTournament ct = coordinate_tournament(s);
  const std::uint32_t masks = 1U << ct.colors();
  std::vector<std::pair<ScramblingMask, ColoredTournament>> out;
  out.reserve(masks);
  for (std::uint32_t m = 0; m < masks; ++m) out.emplace_back(ScramblingMask{m}, scramble(ct, ScramblingMask{m}));
  return out;
}

std::string ScramblingClass::name() const {
  switch (kind) {
    case Kind::Dictatorship: return "dictatorship";
    case Kind::TwoMajority: return "two_majority";
    case Kind::Parity: return "parity";
  }
  return "unknown";
}

std::string ScramblingClass::describe() const {
  switch (kind) {
    case Kind::Dictatorship:
      return "dictatorship(axis " + std::to_string(axis) + (ascending ? ", ascending)" : ", descending)");
    case Kind::TwoMajority: {
      std::string s = "two_majority(";
      for (int j = 0; j < 3; ++j) s += orientation[j] > 0 ? '<' : '>';
      return s + ")";
    }
    case Kind::Parity: return even ? "parity(even)" : "parity(odd)";
  }
  return "unknown";
}

bool ScramblingClass::beats(std::span<const int> u, std::span<const int> v) const {
  switch (kind) {
    case Kind::Dictatorship: {
      const int a = axis - 1;
      return ascending ? u[a] < v[a] : u[a] > v[a];
    }
    case Kind::TwoMajority: {
      int wins = 0;
      for (int j = 0; j < 3; ++j) wins += orientation[j] * (u[j] - v[j]) < 0;
      return wins >= 2;
    }
    case Kind::Parity: {
      int bigger = 0;
      for (int j = 0; j < 3; ++j) bigger += u[j] > v[j];
      return (bigger % 2 == 0) == even;
    }
  }
  return false;
}

namespace {

std::vector<ScramblingClass> candidate_classes() {
  std::vector<ScramblingClass> out;
  for (int axis = 1; axis <= 3; ++axis)
    for (bool asc : {true, false}) {
      ScramblingClass c;
      c.kind = ScramblingClass::Kind::Dictatorship;
      c.axis = axis;
      c.ascending = asc;
      out.push_back(c);
    }
  for (int flips = 0; flips < 8; ++flips) {
    ScramblingClass c;
    c.kind = ScramblingClass::Kind::TwoMajority;
    for (int j = 0; j < 3; ++j) c.orientation[j] = (flips >> j) & 1 ? -1 : 1;
    out.push_back(c);
  }
  for (bool even : {true, false}) {
    ScramblingClass c;
    c.kind = ScramblingClass::Kind::Parity;
    c.even = even;
    out.push_back(c);
  }
  return out;
}

}  // namespace

ScramblingClass classify_scrambling_3d(ScramblingMask mask) {
  if (mask.bits >= 16) throw Error(ErrorCode::InvalidArgument, "d=3 masks range over 4 sign patterns");
  // A representative pair per sign pattern: p = (0,1,1), q = (1, 1 +- 1, 1 +- 1).
  for (const ScramblingClass& candidate : candidate_classes()) {
    bool matches = true;
    for (int color = 1; color <= 4 && matches; ++color) {
      const SignPattern sign = SignPattern::of_color(color, 3);
      const int p[3] = {0, 1, 1};
      const int q[3] = {1, sign.negative[0] ? 0 : 2, sign.negative[1] ? 0 : 2};
      const bool p_wins = !mask.contains(color);
      matches = candidate.beats(p, q) == p_wins && candidate.beats(q, p) == !p_wins;
    }
    if (matches) return candidate;
  }
  throw Error(ErrorCode::InvariantViolation, "mask " + std::to_string(mask.bits) + " matched no class");
}

std::optional<BoxWitness> find_box_witness(const PointSet& s, const VertexSet& cover, int point) {
  for (std::size_t i = 0; i < cover.size(); ++i)
    for (std::size_t j = i; j < cover.size(); ++j)
      if (s.in_box(cover[i], cover[j], point)) return BoxWitness{point, cover[i], cover[j]};
  return std::nullopt;
}

namespace {

int extreme_vertex(const Tournament& t) {
  for (int v = 0; v < t.size(); ++v)
    if (t.out_degree(v) == t.size() - 1) return v;
  return -1;
}

}  // namespace

BoxCoverCertificate box_cover(const PointSet& s, const BoxCoverOptions& options) {
  const int d = s.dimension();
  if (d > 4) throw Error(ErrorCode::InstanceTooLarge, "box cover supports d <= 4");
  const ColoredTournament ct = coordinate_tournament(s);
  const int masks = 1 << ct.colors();
  BoxCoverCertificate cert;
  cert.per_mask.resize(masks);
  std::vector<std::exception_ptr> failures(masks);

  auto solve_mask = [&](int m) {
    try {
      MaskDomination& md = cert.per_mask[m];
      md.mask = ScramblingMask{static_cast<std::uint32_t>(m)};
      md.class_name = d == 3 ? classify_scrambling_3d(md.mask).name() : "mask";
      const Tournament scrambled = scramble(ct, md.mask).base();
      if (d == 3 && options.dictatorship_shortcut && md.class_name == "dictatorship") {
        const int v = extreme_vertex(scrambled);
        if (v < 0) throw Error(ErrorCode::InvariantViolation, "dictatorship scrambling is not transitive");
        md.dominating_set = {v};
      } else if (options.greedy || s.size() > options.exact_ceiling) {
        md.dominating_set = greedy_dominating_set(scrambled);
        md.exact = false;
      } else {
        DominationOptions dom;
        dom.exact_ceiling = options.exact_ceiling;
        dom.parallel = !options.parallel;
        md.dominating_set = min_dominating_set(scrambled, dom).certificate->set;
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
  for (const auto& f : failures)
    if (f) std::rethrow_exception(f);

  Bitset united(s.size());
  for (const auto& md : cert.per_mask)
    for (int v : md.dominating_set) united.set(v);
  cert.cover = members_of(united);

  const int n = s.size();
  std::vector<std::optional<BoxWitness>> witnesses(n);
#pragma omp parallel for schedule(dynamic, 16) if (options.parallel)
  for (int x = 0; x < n; ++x)
    if (!united.test(x)) witnesses[x] = find_box_witness(s, cert.cover, x);
  for (int x = 0; x < n; ++x) {
    if (united.test(x)) continue;
    if (!witnesses[x])
      throw Error(ErrorCode::InvariantViolation, "point " + std::to_string(x) + " is not covered by any box");
    cert.witnesses.push_back(*witnesses[x]);
  }
  return cert;
}

bool verify_box_cover(const PointSet& s, const VertexSet& cover) {
  check_vertex_set(s.size(), cover);
  const Bitset members = bitset_of(s.size(), cover);
  std::atomic<bool> ok{true};
#pragma omp parallel for schedule(dynamic, 16)
  for (int x = 0; x < s.size(); ++x) {
    if (!ok.load(std::memory_order_relaxed) || members.test(x)) continue;
    if (!find_box_witness(s, cover, x)) ok.store(false);
  }
  return ok.load();
}

PointSet extremal_pointset(int dimension) {
  std::vector<std::vector<long>> pts;
  switch (dimension) {
    case 1: pts = {{0}, {1}}; break;
    case 2: pts = {{1, 2}, {2, 1}, {3, 4}, {4, 3}}; break;
    case 3: {
      // Blocks of four, decreasing inside a block and increasing across blocks on
      // axis 2; axis 3 follows the 2,1,4,3 pattern both across and inside blocks.
      // Axis-2 monotone triples are exactly the in-block and one-per-block triples,
      // and the 2143 pattern has no monotone triple, so axis 3 breaks all of them.
      constexpr int sigma[4] = {1, 0, 3, 2};
      for (int a = 0; a < 4; ++a)
        for (int b = 0; b < 4; ++b) pts.push_back({4 * a + b + 1, 4 * a + (3 - b) + 1, 4 * sigma[a] + sigma[b] + 1});
      break;
    }
    default:
      throw Error(ErrorCode::InvalidArgument, "extremal point sets are provided for d <= 3");
  }
  PointSet s = PointSet::from_integers(pts);
  if (auto t = exists_point_in_box(s))
    throw Error(ErrorCode::InvariantViolation, "extremal configuration has a point in a box");
  return s;
}

std::optional<BoxTriple> exists_point_in_box(const PointSet& s) {
  const int n = s.size();
  std::vector<std::optional<BoxTriple>> found(n);
  std::atomic<int> first_hit{n};
#pragma omp parallel for schedule(dynamic, 4)
  for (int x = 0; x < n; ++x) {
    if (x > first_hit.load(std::memory_order_relaxed)) continue;
    for (int p = 0; p < n && !found[x]; ++p)
      for (int q = p + 1; q < n; ++q)
        if (p != x && q != x && s.in_box(p, q, x)) {
          found[x] = BoxTriple{p, q, x};
          int cur = first_hit.load();
          while (x < cur && !first_hit.compare_exchange_weak(cur, x)) {
          }
          break;
        }
  }
  const int hit = first_hit.load();
  if (hit < n) return found[hit];
  return std::nullopt;
}

namespace serial {

std::optional<BoxTriple> exists_point_in_box(const PointSet& s) {
  const int n = s.size();
  for (int x = 0; x < n; ++x)
    for (int p = 0; p < n; ++p)
      for (int q = p + 1; q < n; ++q)
        if (p != x && q != x && s.in_box(p, q, x)) return BoxTriple{p, q, x};
  return std::nullopt;
}

bool verify_box_cover(const PointSet& s, const VertexSet& cover) {
  check_vertex_set(s.size(), cover);
  const Bitset members = bitset_of(s.size(), cover);
  for (int x = 0; x < s.size(); ++x)
    if (!members.test(x) && !find_box_witness(s, cover, x)) return false;
  return true;
}

}  // namespace serial

}  // namespace transdom
