#pragma once

#include <string>
#include <vector>

#include "cohom1/diagram.hpp"

namespace cohom1 {

// Join of spheres and named positively curved pieces, kept in normal form:
// all sphere factors merge into one S^s (s = -1 is the empty set, the join
// identity), named factors stay sorted.
struct JoinSpace {
  int sphere_dim = -1;
  std::vector<HomogeneousSpace> named;

  static JoinSpace sphere(int d);
  static JoinSpace of(const HomogeneousSpace& h);

  int dim() const;
  bool is_sphere() const { return named.empty(); }
  std::string str() const;
  // catalog class label, e.g. "SU(2)/Gamma" for any 3-form factor
  std::string class_str() const;
  friend bool operator==(const JoinSpace&, const JoinSpace&);
};

JoinSpace join(const JoinSpace& a, const JoinSpace& b);

enum class Side { Minus, Plus };

// Space of directions at a singular orbit: S^{dim(G/K)-1} * (K/H).
JoinSpace space_of_directions(const GroupDiagram& d, Side side);

bool is_manifold(const GroupDiagram& d);

// All spaces of directions possible for a cohomogeneity one Alexandrov
// space of dimension k (3 <= k <= 6), from the positively curved catalog.
std::vector<JoinSpace> directions_catalog(int k);

struct SpaceDescription {
  enum class Kind {
    Suspension,       // Sigma(space)
    ConeBundleUnion,  // C(fiber-)[base-] U[principal] D(base+)/C(fiber+)[base+]
    BundleOverCircle, // space-bundle over S^1 with the given structure group
    Product,
    Named,
    Fibration,        // bundle over `space` with fiber sub[0]
  };
  enum class Triviality { Trivial, Twisted, Unknown };

  Kind kind = Kind::Named;
  HomogeneousSpace space;  // Suspension / BundleOverCircle fiber / Fibration base
  HomogeneousSpace fiber_minus, base_minus, fiber_plus, base_plus, principal;
  GroupSpec structure;
  Triviality trivial = Triviality::Unknown;
  std::vector<SpaceDescription> sub;
  std::string label;
  bool manifold = false;
  std::vector<std::string> notes;  // flagged discrepancies, provenance

  static SpaceDescription suspension(HomogeneousSpace h);
  static SpaceDescription named(std::string label, bool manifold);
  static SpaceDescription product_of(std::vector<SpaceDescription> fs);

  std::string str() const;
  SpaceDescription instantiate(std::int64_t n) const;
  // structural equality; notes and display overrides are ignored
  friend bool operator==(const SpaceDescription&, const SpaceDescription&);
  friend bool operator!=(const SpaceDescription& a, const SpaceDescription& b) {
    return !(a == b);
  }
};

// Structural realization of a valid diagram.
SpaceDescription realize(const GroupDiagram& d);

enum class FixedSetShape { IntervalShape, CircleShape, Empty };

// Shape of the fixed point set of a circle subgroup acting on a
// 3-dimensional diagram's space.
FixedSetShape fixed_set_shape(const GroupDiagram& d,
                              const std::optional<EmbeddedSubgroup>& circle =
                                  std::nullopt);

}  // namespace cohom1
