#pragma once

#include <optional>
#include <string>
#include <vector>

#include "cohom1/lattice_ops.hpp"

namespace cohom1 {

// Canonical abelian data: free rank plus invariant factors (>= 2, each
// dividing the next). Symbolic torsion stays in a single symbolic slot.
struct FundamentalGroup {
  enum class Tag {
    Trivial,
    CyclicZ,
    FreeAbelian,
    LatticeQuotient,  // Z^rank modulo the rows of rel
    CatalogFinite,
    Product,
  };
  Tag tag = Tag::Trivial;
  SymInt n = SymInt::concrete(1);  // CyclicZ
  int rank = 0;                    // FreeAbelian / LatticeQuotient
  intlat::Mat rel;                 // LatticeQuotient
  GroupSpec finite;                // CatalogFinite
  std::vector<FundamentalGroup> factors;

  static FundamentalGroup trivial() { return {}; }
  static FundamentalGroup cyclic(SymInt n);
  static FundamentalGroup free_abelian(int k);
  static FundamentalGroup lattice_quotient(int k, intlat::Mat rel);
  static FundamentalGroup catalog_finite(GroupSpec g);
  static FundamentalGroup product(std::vector<FundamentalGroup> fs);

  // Normal form: lattice quotients are reduced by Smith normal form to
  // free rank + invariant factors; nested products flatten.
  FundamentalGroup canonical() const;
  bool is_trivial() const;
  std::string str() const;
  friend bool operator==(const FundamentalGroup& a, const FundamentalGroup& b);
  friend bool operator!=(const FundamentalGroup& a, const FundamentalGroup& b) {
    return !(a == b);
  }
};

enum class SpaceName {
  Sphere,
  RealProjective,
  ComplexProjective2,
  Lens,
  SpaceForm3,  // S^3/Gamma; presented as SU(2)/Gamma* or SO(3)/Gamma
  SpaceForm5,
  TorusSpace,
  Point,
  FiniteSet,   // m >= 3 points (two points canonicalize to Sphere(0))
  ProductSpace,
  Unidentified,
};

struct HomogeneousSpace {
  SpaceName name = SpaceName::Point;
  int dim = 0;
  SymInt p = SymInt::concrete(0), q = SymInt::concrete(0);  // Lens / FiniteSet
  GroupSpec gamma;          // SpaceForm3: the SO(3)-side group
  GroupSpec gamma_star;     // SpaceForm3: the binary lift (= pi1)
  bool presented_su2 = true;
  bool generic_gamma = false;  // render the family symbol instead of gamma
  std::string display_override;  // alternate token, e.g. "SU(2)/<i>"
  std::vector<HomogeneousSpace> factors;

  static HomogeneousSpace sphere(int d);
  static HomogeneousSpace real_projective(int d);
  static HomogeneousSpace cp2();
  static HomogeneousSpace lens(SymInt p, SymInt q);
  static HomogeneousSpace space_form3_su2(GroupSpec gamma_star);
  static HomogeneousSpace space_form3_so3(GroupSpec gamma);
  static HomogeneousSpace space_form5_generic();
  static HomogeneousSpace torus_space(int k);
  static HomogeneousSpace point();
  static HomogeneousSpace finite_set(SymInt count);
  static HomogeneousSpace product_of(std::vector<HomogeneousSpace> fs);
  static HomogeneousSpace unidentified(int dim);

  bool is_sphere() const { return name == SpaceName::Sphere; }
  bool positively_curved() const;
  bool simply_connected() const;
  bool is_connected() const;
  FundamentalGroup pi1() const;

  HomogeneousSpace instantiate(std::int64_t n) const;
  std::string str() const;
  friend bool operator==(const HomogeneousSpace&, const HomogeneousSpace&);
  friend bool operator!=(const HomogeneousSpace& a, const HomogeneousSpace& b) {
    return !(a == b);
  }
};

struct ContainmentError : CatalogError {
  using CatalogError::CatalogError;
};
struct UnsupportedQuotient : CatalogError {
  using CatalogError::CatalogError;
};

// Identify G/H against the named catalog; dim = dim G - dim H always.
HomogeneousSpace identify_quotient(const GroupSpec& g, const EmbeddedSubgroup& h);

// Identify the coset space K/H for nested catalog subgroups H <= K of a
// common parent (the fibers K_pm/H of a diagram).
HomogeneousSpace quotient_space(const EmbeddedSubgroup& k,
                                const EmbeddedSubgroup& h);

// Membership in the positively curved homogeneous catalog (dims <= 5).
bool is_admissible_fiber(const HomogeneousSpace& space);

// pi1(G/H); torus parents get a LatticeQuotient presentation.
FundamentalGroup pi1_of_quotient(const GroupSpec& g, const EmbeddedSubgroup& h);

}  // namespace cohom1
