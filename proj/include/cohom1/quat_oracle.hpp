#pragma once

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "cohom1/groups.hpp"

namespace cohom1::oracle {

// Unit quaternion w + x i + y j + z k.
struct Quat {
  double w = 1, x = 0, y = 0, z = 0;

  Quat operator*(const Quat& o) const {
    return Quat{w * o.w - x * o.x - y * o.y - z * o.z,
                w * o.x + x * o.w + y * o.z - z * o.y,
                w * o.y - x * o.z + y * o.w + z * o.x,
                w * o.z + x * o.y - y * o.x + z * o.w};
  }
  Quat conj() const { return Quat{w, -x, -y, -z}; }
  Quat operator-() const { return Quat{-w, -x, -y, -z}; }
  Quat normalized() const;

  static Quat one() { return Quat{1, 0, 0, 0}; }
  static Quat i() { return Quat{0, 1, 0, 0}; }
  static Quat j() { return Quat{0, 0, 1, 0}; }
  static Quat k() { return Quat{0, 0, 0, 1}; }
  // cos(t) + sin(t) * u for a pure unit u.
  static Quat exp_axis(const std::array<double, 3>& u, double t);
};

bool quat_close(const Quat& a, const Quat& b, double tol = 1e-7);

// Rotation of R^3 induced by conjugation v -> q v q^-1.
std::array<double, 3> rotate(const Quat& q, const std::array<double, 3>& v);

// Finite subset of SU(2), deduplicated; grows via group closure.
class QuatSet {
 public:
  void insert(const Quat& q);
  bool contains(const Quat& q) const;
  size_t size() const { return elems_.size(); }
  const std::vector<Quat>& elements() const { return elems_; }

  friend bool set_equal(const QuatSet& a, const QuatSet& b);
  friend bool subset(const QuatSet& a, const QuatSet& b);

 private:
  std::vector<Quat> elems_;
};

// Closed group generated by gens; nullopt if it exceeds the cap (infinite
// for our catalog, where the largest finite closures stay far below it).
std::optional<QuatSet> closure(const std::vector<Quat>& gens, size_t cap = 400);

QuatSet conjugate_set(const QuatSet& s, const Quat& g);

// Axes used by the standard embeddings. X is the i-axis, Z the k-axis; the
// catalog's canonical main axis is Z.
enum class Ax { X, Y, Z };
std::array<double, 3> axis_vec(Ax a);

// Materializes a finite catalog subgroup of SU(2) as explicit quaternions,
// or a finite subgroup of SO(3) as its full binary lift (pairs +-q).
// Throws std::domain_error for non-finite or symbolic input.
// main/sec: main rotation axis and dihedral half-turn axis.
QuatSet materialize_su2(const GroupSpec& g, Ax main = Ax::Z, Ax sec = Ax::X);
QuatSet materialize_so3_lift(const GroupSpec& g, Ax main = Ax::Z, Ax sec = Ax::X);

struct Identified {
  GroupSpec group;             // abstract family (SU(2) convention)
  std::optional<Ax> main_axis; // set when axis-aligned with a named axis
  std::optional<Ax> sec_axis;
};

// Identify a closed finite subgroup of SU(2).
Identified identify_su2(const QuatSet& s);
// Identify the SO(3) image of a binary-lifted set (must contain -1).
Identified identify_so3(const QuatSet& lift);

// Continuous subgroup kinds a finite-generation closure can escape into.
enum class ContKind { CircleAxis, Pin2Axis, O2Axis, FullGroup };

struct GeneratedResult {
  bool finite = false;
  QuatSet set;                         // finite case
  ContKind cont = ContKind::FullGroup; // infinite case
  std::array<double, 3> axis{0, 0, 1};
};

// Closure of a union of two groups, classifying infinite escapes.
GeneratedResult generated(const QuatSet& a, const QuatSet& b);

struct NormalizerResult {
  bool finite = false;
  QuatSet set;        // finite normalizer (as SU(2) lift)
  ContKind cont = ContKind::FullGroup;
  std::array<double, 3> axis{0, 0, 1};
};

// Brute-force normalizer of a finite subgroup (given as SU(2) set / lift)
// inside SU(2), via the symmetry group of its signed axis-angle
// configuration.
NormalizerResult normalizer_su2(const QuatSet& h);

// Membership in continuous catalog subgroups of SU(2).
bool in_circle(const Quat& q, const std::array<double, 3>& axis);
bool in_pin2(const Quat& q, const std::array<double, 3>& axis);

// Quotient group H/N for normal N in H; identifies the abstract type
// (cyclic, dihedral-like, or a polyhedral catalog group by order).
GroupSpec quotient_type(const QuatSet& h, const QuatSet& n);

// One representative per coset of n in h.
std::vector<Quat> coset_reps(const QuatSet& h, const QuatSet& n);

// Debug dump: one element per line as a 4-tuple.
std::string dump(const QuatSet& s);

// Oracle parameter bound; reads COHOM1_ORACLE_BOUND, default 12.
int oracle_bound();

}  // namespace cohom1::oracle
