#pragma once

#include "lextri/gkz.hpp"

#include <iosfwd>
#include <set>
#include <string>

namespace lextri {

// Text formats are ASCII with LF line endings; rationals print in lowest
// terms, "p/q" only when the denominator is not 1.

Rational parse_rational(const std::string& token);  // integer or "p/q", q > 0
std::string format_rational(const Rational& q);

// Points file: optional '#' comment lines, header "d n", then n lines of d
// rationals. The parsed set must satisfy the PointSet invariants.
PointSet parse_points(std::istream& in);

// Cell file: header "m", then m lines of ascending 1-based indices. Lines
// of a triangulation have exactly d+1 entries; the subdivision reader
// accepts any positive length (validation decides).
std::vector<Cell> parse_cells(std::istream& in, int n_points);

// Script file: one "pull K" or "push K" per line, no repeated index.
LexScript parse_script(std::istream& in, int n_points);

// GKZ file: n whitespace/newline-separated rationals.
GKZVector parse_gkz(std::istream& in, int n_points);

void write_cells(std::ostream& out, const std::set<Cell>& cells);
void write_script(std::ostream& out, const LexScript& script);
void write_gkz(std::ostream& out, const GKZVector& z);

std::string format_script_entry(const ScriptEntry& e);
std::string format_hyperplane(const Hyperplane& h);  // "a1 ... ad | alpha"

}  // namespace lextri
