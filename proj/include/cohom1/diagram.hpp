#pragma once

#include <optional>
#include <string>
#include <vector>

#include "cohom1/quotients.hpp"

namespace cohom1 {

struct WitnessError : CatalogError {
  using CatalogError::CatalogError;
};
struct ExtensionError : CatalogError {
  using CatalogError::CatalogError;
};

enum class OrbitSpaceKind { Interval, Circle };

// The group diagram (G, H, K-, K+) of a cohomogeneity one action, or the
// (G, H) pair with a gluing class when the orbit space is a circle.
struct GroupDiagram {
  GroupSpec g;
  EmbeddedSubgroup h;
  EmbeddedSubgroup k_minus;
  EmbeddedSubgroup k_plus;
  OrbitSpaceKind orbit = OrbitSpaceKind::Interval;
  int gluing_component = 0;  // Circle: index into pi_0(N(H)/H)
  std::optional<SymInt> parameter;

  static GroupDiagram interval(GroupSpec g, EmbeddedSubgroup h,
                               EmbeddedSubgroup km, EmbeddedSubgroup kp,
                               std::optional<SymInt> param = std::nullopt);
  static GroupDiagram circle(GroupSpec g, EmbeddedSubgroup h, int gluing = 0);

  bool has_symbolic_param() const;
  GroupDiagram instantiate(std::int64_t n) const;
  int space_dim() const;  // dim G - dim H + 1
  std::string str() const;
};

struct ValidationReport {
  bool accepted = false;
  std::vector<std::string> reasons;  // reject reasons; empty when accepted
  bool containment_ok = false;
  std::optional<HomogeneousSpace> fiber_minus, fiber_plus;
  bool fibers_admissible = false;
  Effectiveness effectiveness = Effectiveness::Effective;
  int space_dim = 0;
  bool dim_ok = true;

  std::string summary() const;
};

ValidationReport validate(const GroupDiagram& d,
                          std::optional<int> requested_dim = std::nullopt);

struct EquivalenceMove {
  enum class Kind { SwapPlusMinus, ConjugateAll, TwistMinus };
  Kind kind = Kind::SwapPlusMinus;
  ConjugationWitness witness;

  static EquivalenceMove swap() { return {}; }
  static EquivalenceMove conjugate_all(ConjugationWitness w) {
    return {Kind::ConjugateAll, std::move(w)};
  }
  static EquivalenceMove twist_minus(ConjugationWitness w) {
    return {Kind::TwistMinus, std::move(w)};
  }
};

GroupDiagram apply_move(const GroupDiagram& d, const EquivalenceMove& m);

// Canonical form under the three moves; equivalent() compares these.
GroupDiagram canonical_form(const GroupDiagram& d);
bool equivalent(const GroupDiagram& a, const GroupDiagram& b);

struct Pi1Result {
  std::optional<FundamentalGroup> group;  // nullopt: not applicable
  std::string reason;                     // why, when not applicable
  bool applicable() const { return group.has_value(); }
};

// pi1(X) = pi1(G/H) / N- N+ for interval diagrams whose fibers K/H are
// spheres of dimension >= 1; NotApplicable otherwise.
Pi1Result fundamental_group(const GroupDiagram& d);

struct ReduceResult {
  std::optional<GroupDiagram> reduced;
  std::string reason;
};

// Reduction along G = G1 x G2 with pi_2(H) = G2 (last factor; for torus
// parents the last coordinate circle).
ReduceResult reduce(const GroupDiagram& d);

// Normal extension by a connected L inside N(H) and both N(K).
GroupDiagram normal_extension(const GroupDiagram& d, const EmbeddedSubgroup& l);

struct PrimitivityResult {
  bool primitive = false;
  std::optional<EmbeddedSubgroup> obstruction;  // proper L containing K+-
};

PrimitivityResult is_primitive(const GroupDiagram& d);

// Intersection of two catalog subgroups of a common parent.
EmbeddedSubgroup intersect_subgroups(const EmbeddedSubgroup& a,
                                     const EmbeddedSubgroup& b);

}  // namespace cohom1
