#pragma once

#include <string>

#include "cohom1/diagram.hpp"

namespace cohom1 {

struct ParseError : std::runtime_error {
  int line = 1;
  int column = 1;
  ParseError(std::string msg, int l, int c)
      : std::runtime_error(std::move(msg)), line(l), column(c) {}
};

// Text form of a group diagram:
//   interval:  (G, H, K-, K+)        e.g. (SO3, O2, SO3, SO3)
//   circle:    (G, H; circle[:k])    e.g. (T2, e; circle)
//
// Subgroup tokens: e | 1 | Zn | Z<m> | Z2n | Dn | D<m> | D2n | Dn* | D<m>* |
// T | O | I | T* | O* | I* | Q8 | SO2 | O2 | SO3 | SU2 | SO4 | O3 | Pin2 |
// circle(p,q[,r]) | z<m>(a/b,...) | T2 | T3, products joined with "x".
// Axis annotations: "@axis:z" (rotation subgroups); Pin2 parses to the
// transverse position, "Pin2@axis:z" to the aligned one.
GroupDiagram parse_diagram(const std::string& text);

// Canonical re-serialization; parse(serialize(d)) == d on canonical forms.
std::string serialize_diagram(const GroupDiagram& d);

}  // namespace cohom1
