#pragma once

#include "transdom/core.hpp"
#include "transdom/rational.hpp"

#include <array>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

namespace transdom {

/// Finite point set in R^d with pairwise distinct coordinates on every axis.
/// Coordinates are exact; per-axis ranks are cached for the combinatorial work.
class PointSet {
 public:
  /// Throws DimensionMismatch for ragged input, InvalidArgument for an empty set or d = 0,
  /// GeneralPositionViolation naming the axis and both points when coordinates clash.
  explicit PointSet(std::vector<std::vector<Rational>> points);

  /// Replaces every coordinate by its rank on its axis, ties broken by point index.
  static PointSet rank_relabeled(const std::vector<std::vector<Rational>>& points);

  template <class Int>
  static PointSet from_integers(const std::vector<std::vector<Int>>& points) {
    std::vector<std::vector<Rational>> exact;
    for (const auto& p : points) {
      std::vector<Rational> row;
      for (Int c : p) row.emplace_back(static_cast<long>(c));
      exact.push_back(std::move(row));
    }
    return PointSet(std::move(exact));
  }

  int dimension() const noexcept { return dimension_; }
  int size() const noexcept { return static_cast<int>(points_.size()); }
  const std::vector<Rational>& point(int i) const { return points_[i]; }
  /// 0-based position of point i along `axis` (0-based).
  int rank(int i, int axis) const { return ranks_[static_cast<std::size_t>(i) * dimension_ + axis]; }
  /// Point i lies in box(p, q); works on ranks.
  bool in_box(int p, int q, int x) const;

  bool operator==(const PointSet& o) const { return points_ == o.points_; }

 private:
  int dimension_ = 0;
  std::vector<std::vector<Rational>> points_;
  std::vector<int> ranks_;
};

/// Colour of the pair (p, q) in the coordinate tournament, p having the smaller
/// first coordinate: bit j of (colour - 1) is set iff q is smaller than p on axis j + 2.
struct SignPattern {
  std::vector<bool> negative;  // axes 2..d

  static SignPattern of_color(int color, int dimension);
  int color() const;
  std::string to_string() const;  // e.g. "+-"
};

bool box_contains(std::span<const Rational> p, std::span<const Rational> q, std::span<const Rational> x);

ColoredTournament coordinate_tournament(const PointSet& s);

/// All 2^(2^(d-1)) scramblings of the coordinate tournament, indexed by mask bits.
std::vector<std::pair<ScramblingMask, ColoredTournament>> all_scramblings(const PointSet& s);

/// The three kinds of 3-coordinate scramblings.
struct ScramblingClass {
  enum class Kind { Dictatorship, TwoMajority, Parity };
  Kind kind = Kind::Dictatorship;
  /// Dictatorship: deciding axis (1-based) and whether the smaller coordinate wins.
  int axis = 1;
  bool ascending = true;
  /// TwoMajority: per axis, +1 if "smaller wins" on that axis, -1 if reversed.
  std::array<int, 3> orientation{1, 1, 1};
  /// Parity: u beats v iff the number of axes where u is bigger is even.
  bool even = true;

  std::string name() const;  // "dictatorship", "two_majority", "parity"
  std::string describe() const;
  /// Closed-form rule: does the point with coordinates `u` beat `v`?
  bool beats(std::span<const int> u, std::span<const int> v) const;

  bool operator==(const ScramblingClass&) const = default;
};

/// Classifies a mask over the four sign patterns of d = 3
/// (colour 1 = (+,+), 2 = (-,+), 3 = (+,-), 4 = (-,-)).
ScramblingClass classify_scrambling_3d(ScramblingMask mask);

struct BoxWitness {
  int point = 0;
  int p = 0;
  int q = 0;
};

struct MaskDomination {
  ScramblingMask mask;
  std::string class_name;  // d = 3 only; "mask" otherwise
  VertexSet dominating_set;
  bool exact = true;
};

struct BoxCoverCertificate {
  VertexSet cover;
  std::vector<BoxWitness> witnesses;
  std::vector<MaskDomination> per_mask;
};

struct BoxCoverOptions {
  bool greedy = false;
  /// Exact domination is used per scrambling while n stays at or under this.
  int exact_ceiling = 256;
  /// Dictatorship scramblings are dominated by their extreme point (d = 3).
  bool dictatorship_shortcut = true;
  bool parallel = true;
};

/// Selects a cover P of S (every point of S lies in box(p, q) for some p, q in P)
/// as the union of dominating sets of all coordinate scramblings; witnesses are checked.
BoxCoverCertificate box_cover(const PointSet& s, const BoxCoverOptions& options = {});

bool verify_box_cover(const PointSet& s, const VertexSet& cover);
std::optional<BoxWitness> find_box_witness(const PointSet& s, const VertexSet& cover, int point);

/// 2^(2^(d-1)) points, none inside the box of two others (d <= 3).
PointSet extremal_pointset(int dimension);

struct BoxTriple {
  int p = 0;
  int q = 0;
  int x = 0;
};

/// Some x in box(p, q) with x distinct from p and q, or nothing.
std::optional<BoxTriple> exists_point_in_box(const PointSet& s);

namespace serial {

std::optional<BoxTriple> exists_point_in_box(const PointSet& s);
bool verify_box_cover(const PointSet& s, const VertexSet& cover);

}  // namespace serial

}  // namespace transdom
