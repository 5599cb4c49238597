#pragma once

#include <optional>
#include <vector>

#include "cohom1/subgroups.hpp"

namespace cohom1 {

struct UnrepresentableSubgroup : CatalogError {
  UnrepresentableSubgroup() : CatalogError("generated subgroup is outside the catalog") {}
};
struct UnsupportedWitness : CatalogError {
  UnsupportedWitness() : CatalogError("conjugation witness not representable") {}
};

// Containment of sub in sup, tag-exact with respect to relative position.
bool lattice_contains(const EmbeddedSubgroup& sub, const EmbeddedSubgroup& sup);

// Smallest closed subgroup of the common parent containing both.
EmbeddedSubgroup subgroup_generated(const EmbeddedSubgroup& a,
                                    const EmbeddedSubgroup& b);

struct NormalizerInfo {
  EmbeddedSubgroup normalizer;
  EmbeddedSubgroup identity_component;
  GroupSpec weyl_like_quotient;  // N(h)/h as an abstract catalog group
};

NormalizerInfo normalizer(const EmbeddedSubgroup& h);

// Symbolic conjugation witnesses: enough to express axis moves, normalizer
// component representatives, and concrete oracle elements.
struct ConjugationWitness {
  enum class Kind { Identity, AxisTurn, Element, Components } kind = Kind::Identity;
  Ax axis = Ax::Z;        // AxisTurn: rotation about this axis
  int quarter_turns = 0;  // 1 = 90 degrees, 2 = 180 degrees
  oracle::Quat q;         // Element
  std::vector<ConjugationWitness> parts;  // Components (product parents)

  static ConjugationWitness identity() { return {}; }
  static ConjugationWitness axis_turn(Ax a, int quarters) {
    ConjugationWitness w;
    w.kind = Kind::AxisTurn;
    w.axis = a;
    w.quarter_turns = quarters;
    return w;
  }
  static ConjugationWitness element(const oracle::Quat& q) {
    ConjugationWitness w;
    w.kind = Kind::Element;
    w.q = q;
    return w;
  }
  static ConjugationWitness components(std::vector<ConjugationWitness> parts) {
    ConjugationWitness w;
    w.kind = Kind::Components;
    w.parts = std::move(parts);
    return w;
  }
  bool is_identity() const { return kind == Kind::Identity; }
};

EmbeddedSubgroup conjugate(const EmbeddedSubgroup& sub,
                           const ConjugationWitness& by);

// Largest normal subgroup of g contained in h, as an abstract group.
GroupSpec normal_core(const GroupSpec& g, const EmbeddedSubgroup& h);

enum class Effectiveness { Effective, AlmostEffective, Ineffective };
Effectiveness effectiveness_class(const GroupSpec& g, const EmbeddedSubgroup& h);

// One witness per component of N(h); first entry is the identity.
std::vector<ConjugationWitness> normalizer_component_witnesses(
    const EmbeddedSubgroup& h);

}  // namespace cohom1
