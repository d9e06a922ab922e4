#pragma once

#include <iosfwd>
#include <string>

#include "antipodes/finite_metric.hpp"
#include "antipodes/geometry.hpp"

namespace antipodes {

// Text format: a header line `d n`, then n lines of d whitespace-separated
// decimal coordinates. Blank lines and lines starting with '#' are ignored.
// Parse failures raise InputError naming the line and column.
PointSet read_point_set(std::istream& in);
PointSet read_point_set_file(const std::string& path);

// Writes 17 significant digits per coordinate.
void write_point_set(std::ostream& out, const PointSet& ps);
void write_point_set_file(const std::string& path, const PointSet& ps);

// Finite metrics use the same layout with header `n n` and n rows of n
// distances.
FiniteMetric read_metric(std::istream& in);
void write_metric(std::ostream& out, const FiniteMetric& m);

// Shortest decimal form that reads back to the same double ("%.17g").
std::string format_double(double v);

}  // namespace antipodes
