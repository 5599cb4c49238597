#pragma once

#include <optional>
#include <string>
#include <vector>

#include "cohom1/symint.hpp"

namespace cohom1 {

// Closed catalog of compact groups appearing in the dimension <= 4
// classification. Product covers both plain products (SO(3) x S^1) and
// finite-extension products (O(2) x Z_2).
enum class Family {
  Trivial,
  Cyclic,            // Z_n
  Dihedral,          // D_n in SO(3), order 2n
  BinaryDihedral,    // D*_n in SU(2), order 4n; D*_2 is the quaternion group Q8
  Tetrahedral,       // T, order 12
  Octahedral,        // O, order 24
  Icosahedral,       // I, order 60
  BinaryTetrahedral, // T*, order 24
  BinaryOctahedral,  // O*, order 48
  BinaryIcosahedral, // I*, order 120
  Circle,            // SO(2) / S^1 / T^1
  O2,                // O(2)
  Pin2,              // {e^{j t}} u {i e^{j t}} inside SU(2)
  Torus,             // T^k, k >= 2
  SU2,
  SO3,
  SO4,
  O3,                // O(3), embeds in SO(4) as A -> (A, det A)
  Product,
};

struct GroupSpec {
  Family family = Family::Trivial;
  SymInt param = SymInt::concrete(0);  // Cyclic/Dihedral/BinaryDihedral: n; Torus: k
  std::vector<GroupSpec> factors;      // Product only

  static GroupSpec trivial() { return {Family::Trivial}; }
  static GroupSpec cyclic(SymInt n) { return {Family::Cyclic, n}; }
  static GroupSpec cyclic(std::int64_t n) { return cyclic(SymInt::concrete(n)); }
  static GroupSpec dihedral(SymInt n) { return {Family::Dihedral, n}; }
  static GroupSpec dihedral(std::int64_t n) { return dihedral(SymInt::concrete(n)); }
  static GroupSpec binary_dihedral(SymInt n) { return {Family::BinaryDihedral, n}; }
  static GroupSpec binary_dihedral(std::int64_t n) {
    return binary_dihedral(SymInt::concrete(n));
  }
  static GroupSpec quaternion8() { return binary_dihedral(2); }
  static GroupSpec tetrahedral() { return {Family::Tetrahedral}; }
  static GroupSpec octahedral() { return {Family::Octahedral}; }
  static GroupSpec icosahedral() { return {Family::Icosahedral}; }
  static GroupSpec binary_tetrahedral() { return {Family::BinaryTetrahedral}; }
  static GroupSpec binary_octahedral() { return {Family::BinaryOctahedral}; }
  static GroupSpec binary_icosahedral() { return {Family::BinaryIcosahedral}; }
  static GroupSpec circle() { return {Family::Circle}; }
  static GroupSpec o2() { return {Family::O2}; }
  static GroupSpec pin2() { return {Family::Pin2}; }
  static GroupSpec torus(int k) { return {Family::Torus, SymInt::concrete(k)}; }
  static GroupSpec su2() { return {Family::SU2}; }
  static GroupSpec so3() { return {Family::SO3}; }
  static GroupSpec so4() { return {Family::SO4}; }
  static GroupSpec o3() { return {Family::O3}; }
  static GroupSpec product(std::vector<GroupSpec> fs) {
    GroupSpec g{Family::Product};
    g.factors = std::move(fs);
    return g;
  }
  static GroupSpec so3_x_s1() { return product({so3(), circle()}); }

  int dim() const;
  bool is_finite() const;
  // Order of a finite group; nullopt for positive-dimensional ones.
  std::optional<SymInt> order() const;
  int component_count_bound() const;  // pi_0 size for concrete groups
  bool is_connected() const;
  bool is_abelian() const;
  bool has_symbolic_param() const;

  GroupSpec instantiate(std::int64_t n) const;

  std::string str() const;  // e.g. "SO(3)", "Z_n", "O(2) x Z_2"

  friend bool operator==(const GroupSpec&, const GroupSpec&);
  friend bool operator!=(const GroupSpec& a, const GroupSpec& b) {
    return !(a == b);
  }
  bool less_than(const GroupSpec& o) const;  // deterministic total order
};

}  // namespace cohom1
