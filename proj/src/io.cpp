#include "transdom/io.hpp"

#include "transdom/error.hpp"

#include <charconv>
#include <istream>
#include <ostream>
#include <sstream>

namespace transdom {

namespace {

struct Line {
  int number = 0;
  std::vector<std::string> tokens;
};

std::vector<Line> tokenize(std::istream& in) {
  std::vector<Line> lines;
  std::string raw;
  int number = 0;
  while (std::getline(in, raw)) {
    ++number;
    if (auto hash = raw.find('#'); hash != std::string::npos) raw.erase(hash);
    std::istringstream fields(raw);
    Line line{number, {}};
    for (std::string tok; fields >> tok;) line.tokens.push_back(tok);
    if (!line.tokens.empty()) lines.push_back(std::move(line));
  }
  return lines;
}

[[noreturn]] void fail(int line, const std::string& message) {
  throw Error(ErrorCode::ParseError, "line " + std::to_string(line) + ": " + message);
}

int to_int(const Line& line, std::size_t i) {
  const std::string& tok = line.tokens[i];
  int value = 0;
  auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), value);
  if (ec != std::errc() || ptr != tok.data() + tok.size()) fail(line.number, "expected an integer, got '" + tok + "'");
  return value;
}

void expect_fields(const Line& line, std::size_t count, const char* what) {
  if (line.tokens.size() != count)
    fail(line.number, std::string("expected ") + what + " (" + std::to_string(count) + " fields), got " +
                          std::to_string(line.tokens.size()));
}

}  // namespace

Tournament read_tournament(std::istream& in) {
  const auto lines = tokenize(in);
  if (lines.empty()) fail(0, "empty input");
  expect_fields(lines[0], 1, "header 'n'");
  const int n = to_int(lines[0], 0);
  if (n < 0) fail(lines[0].number, "negative vertex count");
  std::vector<DirectedEdge> edges;
  for (std::size_t i = 1; i < lines.size(); ++i) {
    expect_fields(lines[i], 2, "edge 'u v'");
    edges.push_back({to_int(lines[i], 0), to_int(lines[i], 1)});
  }
  return Tournament::from_edges(n, edges);
}

ColoredTournament read_colored_tournament(std::istream& in) {
  const auto lines = tokenize(in);
  if (lines.empty()) fail(0, "empty input");
  expect_fields(lines[0], 2, "header 'n k'");
  const int n = to_int(lines[0], 0);
  const int k = to_int(lines[0], 1);
  if (n < 0) fail(lines[0].number, "negative vertex count");
  if (k < 1) fail(lines[0].number, "colour count must be >= 1");
  std::vector<ColoredEdge> edges;
  for (std::size_t i = 1; i < lines.size(); ++i) {
    expect_fields(lines[i], 3, "edge 'u v c'");
    edges.push_back({to_int(lines[i], 0), to_int(lines[i], 1), to_int(lines[i], 2)});
  }
  return ColoredTournament::from_edges(n, k, edges);
}

PointSet read_points(std::istream& in, bool rank_relabel) {
  const auto lines = tokenize(in);
  if (lines.empty()) fail(0, "no points");
  std::vector<std::vector<Rational>> points;
  for (const Line& line : lines) {
    if (line.tokens.size() != lines.front().tokens.size())
      fail(line.number, "expected " + std::to_string(lines.front().tokens.size()) + " coordinates, got " +
                            std::to_string(line.tokens.size()));
    std::vector<Rational> p;
    for (const auto& tok : line.tokens) {
      try {
        p.push_back(parse_decimal(tok));
      } catch (const Error&) {
        fail(line.number, "not a decimal literal: '" + tok + "'");
      }
    }
    points.push_back(std::move(p));
  }
  if (rank_relabel) return PointSet::rank_relabeled(points);
  return PointSet(std::move(points));
}

Permutation read_permutation(std::istream& in) {
  const auto lines = tokenize(in);
  if (lines.size() != 1) fail(lines.empty() ? 0 : lines[1].number, "expected one line of values");
  std::vector<int> values;
  for (std::size_t i = 0; i < lines[0].tokens.size(); ++i) values.push_back(to_int(lines[0], i));
  try {
    return Permutation::make(std::move(values));
  } catch (const Error& e) {
    fail(lines[0].number, e.what());
  }
}

void write_tournament(std::ostream& out, const Tournament& t) {
  out << t.size() << '\n';
  for (const auto& e : t.edges()) out << e.from << ' ' << e.to << '\n';
}

void write_colored_tournament(std::ostream& out, const ColoredTournament& ct) {
  out << ct.size() << ' ' << ct.colors() << '\n';
  for (const auto& e : ct.edges()) out << e.from << ' ' << e.to << ' ' << e.color << '\n';
}

namespace {

// Exact decimal rendering; every parsed coordinate has a denominator of the form 2^a 5^b.
std::string decimal_string(const Rational& r) {
  if (r.get_den() == 1) return r.get_num().get_str();
  BigInt den = r.get_den();
  unsigned twos = 0, fives = 0;
  while (mpz_divisible_ui_p(den.get_mpz_t(), 2)) den /= 2, ++twos;
  while (mpz_divisible_ui_p(den.get_mpz_t(), 5)) den /= 5, ++fives;
  if (den != 1) throw Error(ErrorCode::InvalidArgument, "coordinate " + r.get_str() + " has no finite decimal form");
  const unsigned digits = std::max(twos, fives);
  BigInt scale;
  mpz_ui_pow_ui(scale.get_mpz_t(), 10, digits);
  BigInt scaled = r.get_num() * scale / r.get_den();
  const bool negative = scaled < 0;
  if (negative) scaled = -scaled;
  std::string s = scaled.get_str();
  if (s.size() <= digits) s.insert(0, digits + 1 - s.size(), '0');
  s.insert(s.size() - digits, ".");
  return negative ? "-" + s : s;
}

}  // namespace

void write_points(std::ostream& out, const PointSet& s) {
  for (int i = 0; i < s.size(); ++i) {
    for (int a = 0; a < s.dimension(); ++a) out << (a ? " " : "") << decimal_string(s.point(i)[a]);
    out << '\n';
  }
}

void write_permutation(std::ostream& out, const Permutation& pi) {
  for (int i = 0; i < pi.size(); ++i) out << (i ? " " : "") << pi.values[i];
  out << '\n';
}

std::string to_text(const Tournament& t) {
  std::ostringstream s;
  write_tournament(s, t);
  return s.str();
}

std::string to_text(const ColoredTournament& ct) {
  std::ostringstream s;
  write_colored_tournament(s, ct);
  return s.str();
}

std::string to_text(const PointSet& p) {
  std::ostringstream s;
  write_points(s, p);
  return s.str();
}

}  // namespace transdom
