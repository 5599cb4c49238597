#pragma once

#include <string>
#include <vector>

#include "cohom1/topology.hpp"

namespace cohom1 {

struct OutOfScope : CatalogError {
  using CatalogError::CatalogError;
};

enum class RowFilter { All, NonManifold, Manifold };

struct TableRow {
  GroupDiagram diagram;  // family representative; symbolic where applicable
  SpaceDescription realization;
  bool manifold = false;
  std::string realization_str;
  std::string provenance;  // table label ("Thm C row 3") or "enumerated"
  std::string note;        // constraints, flags, cross-references
};

struct ClassificationTable {
  int dimension = 0;
  std::vector<GroupSpec> groups;
  std::vector<TableRow> rows;
};

// Groups acting (almost) effectively by cohomogeneity one in this dimension,
// derived from the orbit-dimension bound and effectiveness constraints.
std::vector<GroupSpec> admissible_groups(int dim);

ClassificationTable enumerate_diagrams(int dim, const GroupSpec& group,
                                       RowFilter filter);

ClassificationTable theorem_b_table();
ClassificationTable theorem_c_table();

struct TorusOrbitType {
  std::string orbit;   // "T^3", "T^3/Z_2", "T^2"
  GroupSpec isotropy;  // {e}, Z_2, T^1
};

std::vector<TorusOrbitType> torus_orbit_types(int n);

struct CorollaryBEntry {
  std::string base;   // one of the eight 3-dimensional families
  std::string total;  // "T^{n-3} x base"
};

std::vector<CorollaryBEntry> corollary_b_list(int n);

}  // namespace cohom1
