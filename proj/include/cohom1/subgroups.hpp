#pragma once

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "cohom1/groups.hpp"
#include "cohom1/intlat.hpp"
#include "cohom1/quat_oracle.hpp"

namespace cohom1 {

using oracle::Ax;

struct CatalogError : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct ParentMismatch : CatalogError {
  ParentMismatch() : CatalogError("subgroups have different parent groups") {}
};

enum class EmbKind {
  Full,     // the parent itself
  Rot,      // subgroup of SU(2) or SO(3) with axis tags
  TorusSub, // closed subgroup of T^k, stored by its character annihilator
  ProductSub,
  GraphSub, // (base x 1) . Delta(L) inside G1 x (L / (L cap H1))
};

// A catalog subgroup of a catalog parent, with enough embedding data to
// decide containment, conjugacy class, and quotient identification.
// Continuous pieces use canonical axes (main Z, secondary X); a subgroup
// whose tags differ only by a rotation is the same conjugacy class.
struct EmbeddedSubgroup {
  GroupSpec parent;
  GroupSpec group;
  EmbKind kind = EmbKind::Full;
  Ax main = Ax::Z;
  Ax sec = Ax::X;
  intlat::Mat ann;                      // TorusSub
  std::vector<EmbeddedSubgroup> parts;  // ProductSub factors;
                                        // GraphSub: {base, ell, ell_cap_h1}

  // --- constructors ---
  static EmbeddedSubgroup full(const GroupSpec& g);
  static EmbeddedSubgroup trivial_in(const GroupSpec& g);
  // finite or 1-dimensional subgroup of SU(2)/SO(3)
  static EmbeddedSubgroup rot(const GroupSpec& parent, const GroupSpec& sub,
                              Ax main = Ax::Z, Ax sec = Ax::X);
  static EmbeddedSubgroup torus_circle(int k, std::vector<std::int64_t> slope);
  // cyclic subgroup generated by the rational point num/den
  static EmbeddedSubgroup torus_cyclic(int k, std::vector<std::int64_t> num,
                                       std::int64_t den);
  static EmbeddedSubgroup torus_sub(int k, intlat::Mat annihilator);
  static EmbeddedSubgroup product(const GroupSpec& parent,
                                  std::vector<EmbeddedSubgroup> factor_subs);
  static EmbeddedSubgroup graph(EmbeddedSubgroup base, EmbeddedSubgroup ell,
                                EmbeddedSubgroup ell_cap_h1);

  // --- structure ---
  int dim() const;
  bool is_finite() const { return dim() == 0; }
  std::optional<SymInt> order() const;
  bool is_connected() const;
  int component_count() const;  // -1 when symbolic
  EmbeddedSubgroup identity_component() const;
  bool has_symbolic_param() const;
  EmbeddedSubgroup instantiate(std::int64_t n) const;

  bool is_full() const { return kind == EmbKind::Full; }
  // True when the subgroup is all of its parent, in any representation.
  bool covers_parent() const;
  bool is_trivial() const;

  // primitive slope of a 1-dimensional connected torus subgroup
  std::vector<std::int64_t> circle_slope() const;

  std::string str() const;

  // Conjugacy-class equality (axis tags of rotation subgroups are
  // class-irrelevant on their own; torus data is exact).
  friend bool operator==(const EmbeddedSubgroup& a, const EmbeddedSubgroup& b);
  friend bool operator!=(const EmbeddedSubgroup& a, const EmbeddedSubgroup& b) {
    return !(a == b);
  }
  // Exact embedding-tag equality; used for joint canonical forms.
  bool exact_equal(const EmbeddedSubgroup& o) const;
  bool less_than(const EmbeddedSubgroup& o) const;
};

// Materialize a Rot subgroup through the oracle, respecting its parent:
// SU(2) subgroups as themselves, SO(3) subgroups as their binary lifts.
oracle::QuatSet materialize(const EmbeddedSubgroup& s);

// Identify an oracle result back into the given parent's catalog.
EmbeddedSubgroup identify_in_parent(const GroupSpec& parent,
                                    const oracle::QuatSet& s);

}  // namespace cohom1
