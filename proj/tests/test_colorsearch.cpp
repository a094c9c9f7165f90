#include "doctest.h"
#include "support.hpp"

#include "transdom/colorsearch.hpp"
#include "transdom/error.hpp"
#include "transdom/geometry.hpp"
#include "transdom/paley.hpp"
#include "transdom/solvers.hpp"
#include "transdom/vcnets.hpp"

#include <algorithm>

using namespace transdom;
using namespace transdom::testing;

TEST_CASE("colour search examples") {
  CHECK_FALSE(find_transitive_coloring(Tournament::cyclic_triangle(), 2));
  auto mono = find_transitive_coloring(Tournament::transitive(6), 1);
  REQUIRE(mono);
  for (const auto& e : mono->edges()) CHECK(e.color == 1);

  auto pt7 = find_transitive_coloring(paley_tournament(7), 3);
  REQUIRE(pt7);
  CHECK(pt7->base() == paley_tournament(7));
  CHECK(naive_is_transitive(*pt7));
  CHECK_FALSE(find_transitive_coloring(paley_tournament(7), 2));
  CHECK(find_transitive_coloring(blowup_c3().base(), 3));
}

TEST_CASE("colour search limits") {
  ColorSearchOptions tiny;
  tiny.node_budget = 10;
  CHECK(error_of([&] { find_transitive_coloring(paley_tournament(11), 3, tiny); }) == ErrorCode::BudgetExhausted);
  CHECK(error_of([] { find_transitive_coloring(Tournament::transitive(13), 4); }) == ErrorCode::InstanceTooLarge);
  CHECK(error_of([] { find_transitive_coloring(Tournament::transitive(21), 2); }) == ErrorCode::InstanceTooLarge);
  ColorSearchOptions open;
  open.enforce_ceiling = false;
  CHECK(find_transitive_coloring(Tournament::transitive(25), 2, open));
}

TEST_CASE("one and two colours suffice exactly for acyclic tournaments") {
  for (int n = 1; n <= 6; ++n)
    for (std::uint64_t code = 0; code < (1ULL << (n * (n - 1) / 2)); ++code) {
      auto t = tournament_from_code(n, code);
      const bool acyclic = t.is_acyclic();
      CHECK(find_transitive_coloring(t, 1).has_value() == acyclic);
      CHECK(find_transitive_coloring(t, 2).has_value() == acyclic);
    }
}

TEST_CASE("three-colour search agrees with brute force on four vertices") {
  for (std::uint64_t code = 0; code < 64; ++code) {
    auto t = tournament_from_code(4, code);
    CHECK(find_transitive_coloring(t, 3).has_value() == brute_has_transitive_coloring(t, 3));
  }
}

TEST_CASE("searches on generated transitive colourings succeed") {
  Rng rng(61);
  for (int trial = 0; trial < 40; ++trial) {
    const int k = uniform_int(rng, 1, 3);
    auto ct = random_transitive_coloring(uniform_int(rng, 3, 11), k, rng);
    auto found = find_transitive_coloring(ct.base(), k);
    REQUIRE(found);
    CHECK(verify_transitive_coloring(*found));
  }
}

TEST_CASE("permutation tournaments") {
  auto id = permutation_tournament(Permutation::identity(5));
  for (const auto& e : id.edges()) CHECK(e.color == 1);
  auto rev = permutation_tournament(Permutation::make({5, 4, 3, 2, 1}));
  for (const auto& e : rev.edges()) CHECK(e.color == 2);

  auto p = permutation_tournament(Permutation::make({2, 1, 4, 3}));
  CHECK(p.color_class(1) == std::vector<DirectedEdge>{{0, 2}, {0, 3}, {1, 2}, {1, 3}});
  CHECK(p.color_class(2) == std::vector<DirectedEdge>{{0, 1}, {2, 3}});
  CHECK(verify_transitive_coloring(p));
  CHECK(p.base().is_acyclic());

  CHECK(error_of([] { Permutation::make({1, 3}); }) == ErrorCode::InvalidArgument);
}

TEST_CASE("permutation recovery round-trips") {
  auto two = recover_permutation(permutation_tournament(Permutation::make({2, 1, 4, 3})));
  REQUIRE(two);
  CHECK(two->permutation == Permutation::make({2, 1, 4, 3}));
  auto mono = recover_permutation(ColoredTournament::uniform(Tournament::transitive(4)));
  REQUIRE(mono);
  CHECK(mono->permutation == Permutation::identity(4));

  for (int n = 1; n <= 8; ++n) {
    std::vector<int> values(n);
    for (int i = 0; i < n; ++i) values[i] = i + 1;
    do {
      auto back = recover_permutation(permutation_tournament(Permutation::make(values)));
      REQUIRE(back);
      CHECK(back->permutation.values == values);
    } while (std::next_permutation(values.begin(), values.end()));
  }

  Rng rng(62);
  for (int trial = 0; trial < 200; ++trial) {
    const int n = uniform_int(rng, 1, 50);
    std::vector<int> values(n);
    for (int i = 0; i < n; ++i) values[i] = i + 1;
    std::shuffle(values.begin(), values.end(), rng);
    auto pt = permutation_tournament(Permutation::make(values));
    // hide the position order behind a vertex relabelling
    auto order = random_order(n, rng);
    auto hidden = relabel(pt, order);
    auto back = recover_permutation(hidden);
    REQUIRE(back);
    CHECK(back->permutation.values == values);
    for (int i = 0; i < n; ++i) CHECK(back->position_vertex[i] == order[i]);
  }
}

TEST_CASE("permutation recovery rejects bad input") {
  CHECK(error_of([] { recover_permutation(three_colored_triangle()); }) == ErrorCode::NotTwoColored);
  auto cyc = ColoredTournament::from_rule(Tournament::cyclic_triangle(), 2, [](int, int) { return 1; });
  CHECK(error_of([&] { recover_permutation(cyc); }) == ErrorCode::NotTransitivelyColored);
}

TEST_CASE("substitution") {
  auto dot = ColoredTournament::uniform(Tournament::transitive(1));
  CHECK(substitute(dot, 0, dot) == dot);
  auto tri = three_colored_triangle();
  CHECK(substitute(tri, 1, dot) == tri);

  auto five = substitute(tri, 0, tri);
  CHECK(five.size() == 5);
  CHECK(verify_transitive_coloring(five));
  // copy of the triangle on 0..2, old vertices 1, 2 become 3, 4
  CHECK(five.beats(0, 1));
  CHECK(five.color(0, 1) == 1);
  for (int w = 0; w < 3; ++w) {
    CHECK(five.beats(w, 3));
    CHECK(five.color(w, 3) == 1);
    CHECK(five.beats(4, w));
    CHECK(five.color(w, 4) == 3);
  }
  CHECK(five.beats(3, 4));
  CHECK(five.color(3, 4) == 2);

  CHECK(error_of([&] { substitute(tri, 3, dot); }) == ErrorCode::VertexNotFound);

  auto blow = blowup_c3();
  CHECK(blow == substitute(substitute(substitute(tri, 2, tri), 1, tri), 0, tri));
}

TEST_CASE("the nine-vertex blow-up") {
  auto blow = blowup_c3();
  CHECK(blow.size() == 9);
  CHECK(blow.colors() == 3);
  CHECK(verify_transitive_coloring(blow));
  const int dom = exact_dominating_set(blow.base()).size;
  CHECK(dom >= 3);
  CHECK(dom == naive_dom(blow.base()));
}

TEST_CASE("bipartite examples") {
  const std::pair<int, int> one[] = {{0, 0}};
  auto tiny = bipartite_example(1, 1, one);
  CHECK(tiny.size() == 2);
  CHECK(tiny.beats(0, 1));
  CHECK(tiny.color(0, 1) == 1);
  CHECK(error_of([] { bipartite_example(0, 2, {}); }) == ErrorCode::InvalidArgument);

  Rng rng(63);
  for (int trial = 0; trial < 40; ++trial) {
    const int a = uniform_int(rng, 1, 8), b = uniform_int(rng, 1, 8);
    std::vector<std::pair<int, int>> cross;
    for (int i = 0; i < a; ++i)
      for (int j = 0; j < b; ++j)
        if (rng() & 1U) cross.emplace_back(i, j);
    auto ct = bipartite_example(a, b, cross);
    CHECK(verify_transitive_coloring(ct));
    CHECK(exact_dominating_set(ct.base()).size <= 2);
    CHECK(static_cast<int>(ct.color_class(1).size()) == static_cast<int>(cross.size()));
  }
}

TEST_CASE("majority tournaments") {
  auto same = majority_tournament({{0, 1, 2, 3}, {0, 1, 2, 3}, {0, 1, 2, 3}});
  CHECK(same.tournament == Tournament::transitive(4));
  CHECK(same.color_sets.size() == 1);

  auto condorcet = majority_tournament({{0, 1, 2}, {1, 2, 0}, {2, 0, 1}});
  CHECK(condorcet.tournament == Tournament::cyclic_triangle());
  CHECK(verify_transitive_coloring(condorcet.colored));

  CHECK(error_of([] { majority_tournament({{0, 1}, {1, 0}}); }) == ErrorCode::EvenOrderCount);
  CHECK(error_of([] { majority_tournament({{0, 1}, {1, 0}, {0, 1, 2}}); }) == ErrorCode::MismatchedDomains);
  CHECK(error_of([] { majority_tournament({{0, 0}}); }) == ErrorCode::MismatchedDomains);

  Rng rng(64);
  for (int trial = 0; trial < 60; ++trial) {
    const int m = trial % 2 ? 5 : 3;
    const int n = uniform_int(rng, 1, 12);
    std::vector<std::vector<int>> orders;
    for (int i = 0; i < m; ++i) orders.push_back(random_order(n, rng));
    auto maj = majority_tournament(orders);
    CHECK(verify_transitive_coloring(maj.colored));
    CHECK(naive_is_transitive(maj.colored));
    CHECK(static_cast<int>(maj.color_sets.size()) <= (1 << (m - 1)));
  }
}

TEST_CASE("three-order majority tournaments are coordinate tournaments") {
  Rng rng(65);
  for (int trial = 0; trial < 50; ++trial) {
    const int n = uniform_int(rng, 1, 10);
    std::vector<std::vector<int>> orders;
    for (int i = 0; i < 3; ++i) orders.push_back(random_order(n, rng));
    std::vector<std::vector<int>> pts(n, std::vector<int>(3));
    for (int i = 0; i < 3; ++i)
      for (int p = 0; p < n; ++p) pts[orders[i][p]][i] = p;
    auto s = PointSet::from_integers(pts);
    // smaller on at least two axes wins
    auto scrambled = scramble(coordinate_tournament(s), ScramblingMask::of({4}));
    CHECK(scrambled.base() == majority_tournament(orders).tournament);
  }
}

TEST_CASE("bipartite examples reach larger VC dimension with richer cross edges") {
  // cross edges encoding all subsets of a 3-element part give H(T) a shattered set
  const int a = 3, b = 8;
  std::vector<std::pair<int, int>> cross;
  for (int j = 0; j < b; ++j)
    for (int i = 0; i < a; ++i)
      if ((j >> i) & 1) cross.emplace_back(i, j);
  auto rich = bipartite_example(a, b, cross);
  auto none = bipartite_example(a, b, {});
  CHECK(vc_dimension(domination_hypergraph(rich.base())).vc >
        vc_dimension(domination_hypergraph(none.base())).vc);
}
