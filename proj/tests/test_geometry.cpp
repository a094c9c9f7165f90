#include "doctest.h"
#include "support.hpp"

#include "transdom/error.hpp"
#include "transdom/geometry.hpp"
#include "transdom/solvers.hpp"

#include <map>

using namespace transdom;
using namespace transdom::testing;

namespace {

std::vector<Rational> pt(std::initializer_list<int> c) {
  std::vector<Rational> out;
  for (int x : c) out.emplace_back(x);
  return out;
}

std::vector<int> ranks_of(const PointSet& s, int i) {
  std::vector<int> r(s.dimension());
  for (int a = 0; a < s.dimension(); ++a) r[a] = s.rank(i, a);
  return r;
}

}  // namespace

TEST_CASE("box_contains") {
  auto p = pt({0, 0}), q = pt({2, 2});
  CHECK(box_contains(p, q, pt({1, 1})));
  CHECK_FALSE(box_contains(p, q, pt({1, 3})));
  CHECK(box_contains(p, q, p));
  CHECK(box_contains(q, p, pt({2, 0})));
  CHECK(error_of([&] { box_contains(p, q, pt({1})); }) == ErrorCode::DimensionMismatch);
}

TEST_CASE("point sets validate their input") {
  CHECK(error_of([] { PointSet({pt({1, 2}), pt({3})}); }) == ErrorCode::DimensionMismatch);
  CHECK(error_of([] { PointSet({}); }) == ErrorCode::InvalidArgument);
  CHECK(error_of([] { PointSet({pt({1, 2}), pt({3, 2})}); }) == ErrorCode::GeneralPositionViolation);
  try {
    PointSet({pt({1, 2}), pt({3, 4}), pt({0, 2})});
  } catch (const Error& e) {
    const std::string msg = e.what();
    CHECK(msg.find("axis 2") != std::string::npos);
  }
  auto relabeled = PointSet::rank_relabeled({pt({5, 1}), pt({5, 0})});
  CHECK(relabeled.point(0)[0] == 0);
  CHECK(relabeled.point(1)[0] == 1);
}

TEST_CASE("coordinate tournaments") {
  auto line = PointSet::from_integers(std::vector<std::vector<int>>{{3}, {1}, {2}});
  auto ct1 = coordinate_tournament(line);
  CHECK(ct1.colors() == 1);
  CHECK(ct1.beats(1, 2));
  CHECK(ct1.beats(2, 0));
  CHECK(ct1.base().is_acyclic());

  auto perm = extremal_pointset(2);
  auto ct2 = coordinate_tournament(perm);
  CHECK(ct2.colors() == 2);
  std::vector<DirectedEdge> plus = ct2.color_class(1), minus = ct2.color_class(2);
  CHECK(plus == std::vector<DirectedEdge>{{0, 2}, {0, 3}, {1, 2}, {1, 3}});
  CHECK(minus == std::vector<DirectedEdge>{{0, 1}, {2, 3}});

  Rng rng(41);
  for (int trial = 0; trial < 20; ++trial) {
    const int d = uniform_int(rng, 1, 4);
    auto ct = coordinate_tournament(random_pointset(20, d, rng));
    CHECK(ct.colors() == (1 << (d - 1)));
    CHECK(verify_transitive_coloring(ct));
  }
}

TEST_CASE("sign patterns") {
  CHECK(SignPattern::of_color(1, 3).to_string() == "++");
  CHECK(SignPattern::of_color(2, 3).to_string() == "-+");
  CHECK(SignPattern::of_color(3, 3).to_string() == "+-");
  CHECK(SignPattern::of_color(4, 3).to_string() == "--");
  for (int c = 1; c <= 8; ++c) CHECK(SignPattern::of_color(c, 4).color() == c);
}

TEST_CASE("all scramblings") {
  Rng rng(42);
  CHECK(all_scramblings(random_pointset(5, 1, rng)).size() == 2);
  CHECK(all_scramblings(random_pointset(5, 2, rng)).size() == 4);
  CHECK(all_scramblings(random_pointset(5, 3, rng)).size() == 16);
  CHECK(all_scramblings(random_pointset(5, 4, rng)).size() == 256);
  CHECK(error_of([&] { all_scramblings(random_pointset(5, 5, rng)); }) == ErrorCode::InstanceTooLarge);
  auto one = all_scramblings(random_pointset(6, 1, rng));
  CHECK(one[1].second.base() == one[0].second.base().reversed());
}

TEST_CASE("three-dimensional classification") {
  auto none = classify_scrambling_3d({});
  CHECK(none.kind == ScramblingClass::Kind::Dictatorship);
  CHECK(none.axis == 1);
  CHECK(none.ascending);
  auto full = classify_scrambling_3d({15});
  CHECK(full.kind == ScramblingClass::Kind::Dictatorship);
  CHECK(full.axis == 1);
  CHECK_FALSE(full.ascending);

  auto parity = classify_scrambling_3d(ScramblingMask::of({2, 3}));
  CHECK(parity.kind == ScramblingClass::Kind::Parity);
  CHECK(parity.even);
  CHECK(classify_scrambling_3d(ScramblingMask::of({1, 4})).kind == ScramblingClass::Kind::Parity);

  auto corner = classify_scrambling_3d(ScramblingMask::of({4}));
  CHECK(corner.kind == ScramblingClass::Kind::TwoMajority);
  const int small[3] = {0, 0, 5}, big[3] = {1, 1, 0};
  CHECK(corner.beats(small, big));

  // colours 2 and 4 flip the pairs where the later point is smaller on axis 2
  auto axis2 = classify_scrambling_3d(ScramblingMask::of({2, 4}));
  CHECK(axis2.kind == ScramblingClass::Kind::Dictatorship);
  CHECK(axis2.axis == 2);
  CHECK(axis2.ascending);
  auto axis3 = classify_scrambling_3d(ScramblingMask::of({1, 2}));
  CHECK(axis3.kind == ScramblingClass::Kind::Dictatorship);
  CHECK(axis3.axis == 3);
  CHECK_FALSE(axis3.ascending);

  std::map<ScramblingClass::Kind, int> counts;
  for (std::uint32_t m = 0; m < 16; ++m) {
    ScramblingMask mask{m};
    auto c = classify_scrambling_3d(mask);
    ++counts[c.kind];
    if (mask.size() % 2 == 1) CHECK(c.kind == ScramblingClass::Kind::TwoMajority);
    CHECK_FALSE(c.describe().empty());
  }
  CHECK(counts[ScramblingClass::Kind::Dictatorship] == 6);
  CHECK(counts[ScramblingClass::Kind::TwoMajority] == 8);
  CHECK(counts[ScramblingClass::Kind::Parity] == 2);
  CHECK(error_of([] { classify_scrambling_3d({16}); }) == ErrorCode::InvalidArgument);
}

TEST_CASE("closed-form rules reproduce every scrambled orientation") {
  Rng rng(43);
  for (int trial = 0; trial < 10; ++trial) {
    auto s = random_pointset(25, 3, rng);
    for (const auto& [mask, ct] : all_scramblings(s)) {
      auto cls = classify_scrambling_3d(mask);
      for (int i = 0; i < s.size(); ++i)
        for (int j = 0; j < s.size(); ++j)
          if (i != j) CHECK(ct.beats(i, j) == cls.beats(ranks_of(s, i), ranks_of(s, j)));
    }
  }
}

TEST_CASE("class-wise domination bounds") {
  Rng rng(44);
  for (int trial = 0; trial < 6; ++trial) {
    auto s = random_pointset(uniform_int(rng, 10, 40), 3, rng);
    for (const auto& [mask, ct] : all_scramblings(s)) {
      const int dom = exact_dominating_set(ct.base()).size;
      switch (classify_scrambling_3d(mask).kind) {
        case ScramblingClass::Kind::Dictatorship: CHECK(dom == 1); break;
        case ScramblingClass::Kind::TwoMajority: CHECK(dom <= 3); break;
        case ScramblingClass::Kind::Parity: CHECK(dom <= 17); break;
      }
    }
  }
}

TEST_CASE("box covers") {
  Rng rng(45);
  auto line = random_pointset(12, 1, rng);
  auto c1 = box_cover(line);
  REQUIRE(c1.cover.size() == 2);
  for (int v : c1.cover) CHECK((line.rank(v, 0) == 0 || line.rank(v, 0) == 11));

  auto ext = box_cover(extremal_pointset(2));
  CHECK(ext.cover == VertexSet{0, 1, 2, 3});
  CHECK(ext.witnesses.empty());

  for (int trial = 0; trial < 4; ++trial) {
    auto grid = random_grid_points(200, 3, rng);
    auto s = PointSet::from_integers(grid);
    auto cert = box_cover(s);
    CHECK(cert.cover.size() <= 64);
    CHECK(verify_box_cover(s, cert.cover));
    CHECK(naive_box_covered(grid, cert.cover));
    CHECK(cert.per_mask.size() == 16);
    CHECK(cert.witnesses.size() + cert.cover.size() == 200);
    for (const auto& w : cert.witnesses) CHECK(box_contains(s.point(w.p), s.point(w.q), s.point(w.point)));
  }

  auto s = random_pointset(60, 2, rng);
  BoxCoverOptions greedy;
  greedy.greedy = true;
  CHECK(verify_box_cover(s, box_cover(s, greedy).cover));
  BoxCoverOptions serial_opts;
  serial_opts.parallel = false;
  CHECK(box_cover(s).cover == box_cover(s, serial_opts).cover);
  auto s4 = random_pointset(20, 4, rng);
  CHECK(verify_box_cover(s4, box_cover(s4).cover));
}

TEST_CASE("verify_box_cover") {
  Rng rng(46);
  auto s = random_pointset(9, 2, rng);
  VertexSet all(9);
  for (int i = 0; i < 9; ++i) all[i] = i;
  CHECK(verify_box_cover(s, all));

  auto line = PointSet::from_integers(std::vector<std::vector<int>>{{1}, {5}, {3}, {4}});
  CHECK(verify_box_cover(line, {0, 1}));
  CHECK_FALSE(verify_box_cover(line, {0, 2}));

  auto perm = extremal_pointset(2);
  CHECK_FALSE(verify_box_cover(perm, {0, 1, 2}));
  CHECK_FALSE(verify_box_cover(perm, {0, 1, 3}));
  CHECK_FALSE(verify_box_cover(perm, {0, 2, 3}));
  CHECK_FALSE(verify_box_cover(perm, {1, 2, 3}));

  for (int trial = 0; trial < 100; ++trial) {
    auto grid = random_grid_points(uniform_int(rng, 1, 14), uniform_int(rng, 1, 3), rng);
    auto ps = PointSet::from_integers(grid);
    auto p = random_subset(ps.size(), rng, 0.4);
    CHECK(verify_box_cover(ps, p) == naive_box_covered(grid, p));
    CHECK(serial::verify_box_cover(ps, p) == verify_box_cover(ps, p));
  }
}

TEST_CASE("extremal point sets and the pigeonhole witness") {
  CHECK(extremal_pointset(1).size() == 2);
  CHECK(extremal_pointset(2).size() == 4);
  CHECK(extremal_pointset(3).size() == 16);
  for (int d = 1; d <= 3; ++d) {
    CHECK_FALSE(exists_point_in_box(extremal_pointset(d)));
    CHECK_FALSE(serial::exists_point_in_box(extremal_pointset(d)));
  }
  CHECK(error_of([] { extremal_pointset(4); }) == ErrorCode::InvalidArgument);

  auto line = PointSet::from_integers(std::vector<std::vector<int>>{{1}, {2}, {3}});
  auto w = exists_point_in_box(line);
  REQUIRE(w);
  CHECK(w->p == 0);
  CHECK(w->q == 2);
  CHECK(w->x == 1);

  Rng rng(47);
  for (int trial = 0; trial < 500; ++trial) {
    auto s = random_pointset(5, 2, rng);
    auto hit = exists_point_in_box(s);
    REQUIRE(hit);
    CHECK(s.in_box(hit->p, hit->q, hit->x));
  }
  for (int trial = 0; trial < 100; ++trial) {
    auto s = random_pointset(uniform_int(rng, 3, 17), 3, rng);
    auto a = exists_point_in_box(s), b = serial::exists_point_in_box(s);
    CHECK(a.has_value() == b.has_value());
    if (a && b) CHECK(a->x == b->x);
  }
}

TEST_CASE("betweenness in the coordinate tournament is box containment") {
  Rng rng(48);
  for (int trial = 0; trial < 200; ++trial) {
    const int d = uniform_int(rng, 1, 3);
    auto s = random_pointset(uniform_int(rng, 2, 16), d, rng);
    auto p = random_subset(s.size(), rng, 0.35);
    CHECK(is_enclosure(coordinate_tournament(s), p) == verify_box_cover(s, p));
  }
}
