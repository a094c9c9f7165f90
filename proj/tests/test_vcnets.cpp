#include "doctest.h"
#include "support.hpp"

#include "transdom/error.hpp"
#include "transdom/geometry.hpp"
#include "transdom/solvers.hpp"
#include "transdom/vcnets.hpp"

#include <cmath>
#include <set>

using namespace transdom;
using namespace transdom::testing;

namespace {

Hypergraph parity_hypergraph(const PointSet& s) {
  return domination_hypergraph(scramble(coordinate_tournament(s), ScramblingMask::of({2, 3})).base());
}

}  // namespace

TEST_CASE("VC dimension") {
  auto chain = vc_dimension(domination_hypergraph(Tournament::transitive(8)));
  CHECK(chain.vc == 1);
  CHECK(chain.exact);
  CHECK(chain.witness.size() == 1);
  CHECK(vc_dimension(domination_hypergraph(Tournament::cyclic_triangle())).vc == 1);
  CHECK(error_of([] { vc_dimension(domination_hypergraph(Tournament::transitive(23))); }) ==
        ErrorCode::InstanceTooLarge);

  Rng rng(71);
  for (int trial = 0; trial < 6; ++trial) {
    const int d = 2 + trial % 2;
    auto s = random_pointset(uniform_int(rng, 8, 16), d, rng);
    for (const auto& [mask, ct] : all_scramblings(s)) {
      auto r = vc_dimension(domination_hypergraph(ct.base()));
      CHECK(std::pow(r.vc + 1, d) >= std::pow(2, r.vc));
      // the witness really is shattered
      auto h = domination_hypergraph(ct.base());
      std::set<std::vector<int>> traces;
      for (const auto& e : h.edges) {
        std::vector<int> t;
        for (int v : r.witness)
          if (e.test(v)) t.push_back(v);
        traces.insert(t);
      }
      CHECK(traces.size() == (std::size_t{1} << r.vc));
    }
  }
}

TEST_CASE("shatter functions") {
  auto c3 = domination_hypergraph(Tournament::cyclic_triangle());
  CHECK(shatter_function(c3, 0) == 1);
  CHECK(shatter_function(c3, 2) == 3);
  CHECK(shatter_function_k(c3, 2, 0) == 0);
  CHECK(shatter_function_k(c3, 2, 1) == 2);
  CHECK(shatter_function_k(c3, 2, 2) == 1);

  Rng rng(72);
  auto s = random_pointset(18, 3, rng);
  auto h = parity_hypergraph(s);
  std::uint64_t previous = 0;
  for (int n = 0; n <= 10; ++n) {
    const auto value = shatter_function(h, n);
    CHECK(value >= previous);
    CHECK(value <= static_cast<std::uint64_t>((n + 1) * (n + 1) * (n + 1)));
    for (int k = 0; k <= n; ++k) {
      const auto vk = shatter_function_k(h, n, k);
      CHECK(vk <= value);
      if (n > 0) CHECK(BigInt(static_cast<unsigned long>(vk)) <= pi_k_upper_bound(n, k));
    }
    CHECK(shatter_function(h, n, ShatterSampling{5, 200}) <= value);
    previous = value;
  }
  CHECK(error_of([&] { shatter_function(h, 9, std::nullopt, 100); }) == ErrorCode::InstanceTooLarge);
}

TEST_CASE("pi_k bound") {
  CHECK(pi_k_upper_bound(31, 14) == 15696);
  for (unsigned n = 0; n <= 50; ++n) {
    const BigInt cube = BigInt(n + 1) * (n + 1) * (n + 1);
    CHECK(pi_k_upper_bound(n, 0) == (cube - binomial_pascal(n + 1, 3)) / 2);
    for (unsigned k = 0; k <= n; ++k) CHECK(pi_k_upper_bound(n, k) <= (cube + 1) / 2);
  }
  CHECK(error_of([] { pi_k_upper_bound(3, 4); }) == ErrorCode::InvalidArgument);
}

TEST_CASE("appendix feasibility") {
  auto refined = appendix_feasibility(17, 14, FeasibilityVariant::Refined);
  CHECK(refined.lhs == 15696);
  CHECK(refined.rhs == Rational(BigInt("265182525"), BigInt(16384)));
  CHECK(refined.feasible);
  CHECK(refined.implied_bound == 17);
  CHECK(refined.paths_agree);

  auto cube = appendix_feasibility(19, 19, FeasibilityVariant::Cube);
  CHECK(cube.ratio == Rational(BigInt("1295843328"), BigInt("1472719325")));
  CHECK(cube.ratio < 1);
  CHECK(cube.feasible);
  CHECK(cube.paths_agree);

  auto smallest = appendix_feasibility(1, 1, FeasibilityVariant::Refined);
  CHECK(smallest.lhs == 13);
  CHECK(smallest.rhs == Rational(1));
  CHECK_FALSE(smallest.feasible);

  auto halved = appendix_feasibility(18, 10, FeasibilityVariant::Halved);
  CHECK(halved.feasible);

  for (auto variant : {FeasibilityVariant::Cube, FeasibilityVariant::Halved, FeasibilityVariant::Refined})
    CHECK(parse_variant(to_string(variant)) == variant);
  CHECK(error_of([] { parse_variant("square"); }) == ErrorCode::InvalidArgument);
}

TEST_CASE("appendix scan minima") {
  auto min_feasible_a = [](FeasibilityVariant v) {
    unsigned best = 1000;
    for (const auto& r : appendix_scan(40, 40, v))
      if (r.feasible) best = std::min(best, r.a);
    return best;
  };
  CHECK(min_feasible_a(FeasibilityVariant::Cube) == 19);
  CHECK(min_feasible_a(FeasibilityVariant::Halved) == 18);
  CHECK(min_feasible_a(FeasibilityVariant::Refined) == 17);
  CHECK(appendix_scan(3, 4, FeasibilityVariant::Cube).size() == 12);
}

TEST_CASE("epsilon-net sampling") {
  auto chain = domination_hypergraph(Tournament::transitive(5));
  auto wchain = fractional_transversal(chain);
  auto rc = epsnet_sample(chain, wchain, 1, 3, 500, 7);
  CHECK(rc.rate == 1.0);

  // exact success probability for H(C3) with two draws, by enumerating all draws
  auto c3 = domination_hypergraph(Tournament::cyclic_triangle());
  auto wc3 = fractional_transversal(c3);
  double exact = 0.0;
  for (int a = 0; a < 3; ++a)
    for (int b = 0; b < 3; ++b) {
      VertexSet net = a == b ? VertexSet{a} : VertexSet{std::min(a, b), std::max(a, b)};
      if (is_transversal(c3, net)) exact += 1.0 / 9.0;
    }
  CHECK(exact == doctest::Approx(2.0 / 3.0));
  auto r = epsnet_sample(c3, wc3, 2, 1, 20000, 99);
  CHECK(r.rate > 0.0);
  CHECK(r.rate < 1.0);
  CHECK(std::abs(r.rate - exact) < 0.02);

  auto again = epsnet_sample(c3, wc3, 2, 1, 20000, 99);
  CHECK(again.successes == r.successes);
  CHECK(serial::epsnet_sample(c3, wc3.weights, 2, 1, 20000, 99).successes == r.successes);
  CHECK(epsnet_sample(c3, wc3, 2, 1, 20000, 100).successes != r.successes);

  CHECK(error_of([&] { epsnet_sample(c3, std::vector<double>{0.1, 0.1, 0.1}, 2, 1, 10, 1); }) ==
        ErrorCode::InfeasibleWeights);
  CHECK(error_of([&] { epsnet_sample(c3, std::vector<double>{1.0, -1.0, 1.0}, 2, 1, 10, 1); }) ==
        ErrorCode::InfeasibleWeights);
}

TEST_CASE("nets on parity hypergraphs") {
  Rng rng(73);
  for (int trial = 0; trial < 3; ++trial) {
    auto s = random_pointset(uniform_int(rng, 20, 31), 3, rng);
    auto h = parity_hypergraph(s);
    auto w = fractional_transversal(h);
    CHECK(w.exact_value < 2);
    auto r = epsnet_sample(h, w, 17, 14, 2000, 1234 + trial);
    CHECK(r.successes > 0);
    CHECK(exact_dominating_set(scramble(coordinate_tournament(s), ScramblingMask::of({2, 3})).base()).size <= 17);
  }
}
