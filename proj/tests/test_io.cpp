#include "doctest.h"
#include "support.hpp"

#include "transdom/error.hpp"
#include "transdom/io.hpp"
#include "transdom/rational.hpp"

#include <sstream>

using namespace transdom;
using namespace transdom::testing;

namespace {

template <class F>
std::string parse_message(F&& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.what();
  }
  return {};
}

}  // namespace

TEST_CASE("parse_decimal is exact") {
  CHECK(parse_decimal("3.25") == Rational(13, 4));
  CHECK(parse_decimal("-0.1") == Rational(-1, 10));
  CHECK(parse_decimal(".5") == Rational(1, 2));
  CHECK(parse_decimal("1.5e-3") == Rational(3, 2000));
  CHECK(parse_decimal("2E2") == Rational(200));
  CHECK(parse_decimal("+7") == Rational(7));
  for (const char* bad : {"", "-", "1.2.3", "abc", "1e", "0x10", "1,5"})
    CHECK(error_of([&] { parse_decimal(bad); }) == ErrorCode::ParseError);
}

TEST_CASE("fraction strings round-trip") {
  CHECK(to_fraction_string(Rational(3, 2)) == "3/2");
  CHECK(to_fraction_string(Rational(4)) == "4/1");
  CHECK(parse_fraction("6/4") == Rational(3, 2));
  CHECK(parse_fraction("-5") == Rational(-5));
}

TEST_CASE("binomials agree on both evaluation paths") {
  CHECK(binomial_pascal(31, 14) == BigInt("265182525"));
  CHECK(binomial_multiplicative(31, 14) == BigInt("265182525"));
  for (unsigned n = 0; n <= 60; ++n)
    for (unsigned k = 0; k <= n + 1; ++k) CHECK(binomial_pascal(n, k) == binomial_multiplicative(n, k));
}

TEST_CASE("tournament files with comments") {
  std::istringstream in("# cyclic triangle\n3\n0 1\n1 2  # second\n\n2 0\n");
  CHECK(read_tournament(in) == Tournament::cyclic_triangle());
}

TEST_CASE("parse errors carry line numbers") {
  std::istringstream bad_edge("3\n0 1\n1 x\n2 0\n");
  auto msg = parse_message([&] { read_tournament(bad_edge); });
  CHECK(msg.find("line 3") != std::string::npos);

  std::istringstream short_line("3 3\n0 1 1\n1 2\n2 0 3\n");
  CHECK(error_of([&] { read_colored_tournament(short_line); }) == ErrorCode::ParseError);

  std::istringstream ragged("1 2\n3\n");
  msg = parse_message([&] { read_points(ragged); });
  CHECK(msg.find("line 2") != std::string::npos);

  std::istringstream not_decimal("1 2\n3 q\n");
  CHECK(error_of([&] { read_points(not_decimal); }) == ErrorCode::ParseError);

  std::istringstream empty("# nothing\n");
  CHECK(error_of([&] { read_tournament(empty); }) == ErrorCode::ParseError);

  std::istringstream missing("3\n0 1\n1 2\n");
  CHECK(error_of([&] { read_tournament(missing); }) == ErrorCode::MissingPair);
}

TEST_CASE("points keep exact coordinates and reject ties") {
  std::istringstream in("0.1 2\n0.25 -1.5\n");
  auto s = read_points(in);
  CHECK(s.point(0)[0] == Rational(1, 10));
  CHECK(s.point(1)[1] == Rational(-3, 2));
  CHECK(to_text(s) == "0.1 2\n0.25 -1.5\n");

  std::istringstream tie("1 5\n2 5\n");
  CHECK(error_of([&] { read_points(tie); }) == ErrorCode::GeneralPositionViolation);

  std::istringstream tie2("1 5\n2 5\n0 7\n");
  auto relabeled = read_points(tie2, true);
  CHECK(relabeled.rank(0, 1) == 0);
  CHECK(relabeled.rank(1, 1) == 1);
  CHECK(relabeled.rank(2, 1) == 2);
  CHECK(relabeled.rank(2, 0) == 0);
}

TEST_CASE("permutations") {
  std::istringstream in("2 1 4 3\n");
  CHECK(read_permutation(in) == Permutation::make({2, 1, 4, 3}));
  std::istringstream bad("2 2 1\n");
  CHECK(error_of([&] { read_permutation(bad); }) == ErrorCode::ParseError);
  std::ostringstream out;
  write_permutation(out, Permutation::make({3, 1, 2}));
  CHECK(out.str() == "3 1 2\n");
}

TEST_CASE("writers round-trip through readers") {
  Rng rng(21);
  for (int trial = 0; trial < 50; ++trial) {
    auto t = random_tournament(uniform_int(rng, 0, 12), rng);
    std::istringstream in(to_text(t));
    CHECK(read_tournament(in) == t);

    auto ct = random_coloring(random_tournament(uniform_int(rng, 1, 12), rng), uniform_int(rng, 1, 4), rng);
    std::istringstream cin(to_text(ct));
    CHECK(read_colored_tournament(cin) == ct);

    std::vector<std::vector<Rational>> raw;
    const int n = uniform_int(rng, 1, 10), d = uniform_int(rng, 1, 4);
    auto grid = random_grid_points(n, d, rng);
    for (auto& p : grid) {
      std::vector<Rational> row;
      for (int c : p) row.emplace_back(Rational(c * 7 - 30, 8));
      raw.push_back(row);
    }
    PointSet s(raw);
    std::istringstream pin(to_text(s));
    CHECK(read_points(pin) == s);
  }
}
