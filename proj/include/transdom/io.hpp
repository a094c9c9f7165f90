#pragma once

// Whitespace-separated ASCII formats; '#' starts a comment.
//   tournament:          "n", then one "u v" line per directed edge
//   coloured tournament: "n k", then one "u v c" line per directed edge
//   points:              one point per line, d decimal literals
//   permutation:         the values x_1 .. x_n on one line

#include "transdom/colorsearch.hpp"
#include "transdom/core.hpp"
#include "transdom/geometry.hpp"

#include <iosfwd>
#include <string>

namespace transdom {

Tournament read_tournament(std::istream& in);
ColoredTournament read_colored_tournament(std::istream& in);
/// With `rank_relabel`, tied coordinates are replaced by ranks instead of rejected.
PointSet read_points(std::istream& in, bool rank_relabel = false);
Permutation read_permutation(std::istream& in);

void write_tournament(std::ostream& out, const Tournament& t);
void write_colored_tournament(std::ostream& out, const ColoredTournament& ct);
void write_points(std::ostream& out, const PointSet& s);
void write_permutation(std::ostream& out, const Permutation& pi);

std::string to_text(const Tournament& t);
std::string to_text(const ColoredTournament& ct);
std::string to_text(const PointSet& s);

}  // namespace transdom
