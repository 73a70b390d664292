#pragma once

// The starter base-value table, compiled in so the tools work without a data
// directory. Kept identical to data/starter_table.txt (a test checks this).

#include "aktangent/base_table.hpp"

#include <sstream>
#include <string_view>

namespace aktangent {

inline constexpr std::string_view kStarterTableText = R"TABLE(# Starter base-value table.
#
# N  d=<d> profile=<profile> value=<N_d(profile)>
# NL d=<d> profile=<profile> cond=A<i> value=<N_d(profile; L_{A_i})>
#
# Cuspidal cubics through 7 points, and those whose cusp lies on a fixed line.
N d=3 profile=A2 value=24
NL d=3 profile=A2 cond=A2 value=12

# One node. N_d(A1) = 3(d-1)^2 is the degree of the discriminant of degree-d
# curves (the plain Severi degree with one node). For a node on a fixed
# line: the singular points of members of the net through the remaining
# points sweep out its Jacobian curve, of degree 3(d-1), which meets the
# line in 3(d-1) points.
N d=3 profile=A1 value=12
NL d=3 profile=A1 cond=A1 value=6
N d=4 profile=A1 value=27
NL d=4 profile=A1 cond=A1 value=9
N d=5 profile=A1 value=48
NL d=5 profile=A1 cond=A1 value=12
N d=6 profile=A1 value=75
NL d=6 profile=A1 cond=A1 value=15
)TABLE";

inline BaseValueTable starter_table() {
  std::istringstream in{std::string(kStarterTableText)};
  return BaseValueTable::parse(in, "<starter table>");
}

}  // namespace aktangent
