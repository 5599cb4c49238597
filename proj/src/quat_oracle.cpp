#include "cohom1/quat_oracle.hpp"

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <numbers>
#include <sstream>
#include <stdexcept>

namespace cohom1::oracle {

namespace {

constexpr double kTol = 1e-7;
constexpr double kPi = std::numbers::pi;

double dot3(const std::array<double, 3>& a, const std::array<double, 3>& b) {
  return a[0] * b[0] + a[1] * b[1] + a[2] * b[2];
}

std::array<double, 3> cross3(const std::array<double, 3>& a,
                             const std::array<double, 3>& b) {
  return {a[1] * b[2] - a[2] * b[1], a[2] * b[0] - a[0] * b[2],
          a[0] * b[1] - a[1] * b[0]};
}

double norm3(const std::array<double, 3>& a) { return std::sqrt(dot3(a, a)); }

std::array<double, 3> unit3(const std::array<double, 3>& a) {
  double n = norm3(a);
  return {a[0] / n, a[1] / n, a[2] / n};
}

bool parallel_lines(const std::array<double, 3>& a,
                    const std::array<double, 3>& b, double tol = 1e-6) {
  return norm3(cross3(a, b)) < tol;
}

}  // namespace

Quat Quat::normalized() const {
  double n = std::sqrt(w * w + x * x + y * y + z * z);
  return Quat{w / n, x / n, y / n, z / n};
}

Quat Quat::exp_axis(const std::array<double, 3>& u, double t) {
  auto v = unit3(u);
  double s = std::sin(t);
  return Quat{std::cos(t), s * v[0], s * v[1], s * v[2]};
}

bool quat_close(const Quat& a, const Quat& b, double tol) {
  return std::abs(a.w - b.w) < tol && std::abs(a.x - b.x) < tol &&
         std::abs(a.y - b.y) < tol && std::abs(a.z - b.z) < tol;
}

std::array<double, 3> rotate(const Quat& q, const std::array<double, 3>& v) {
  Quat p{0, v[0], v[1], v[2]};
  Quat r = q * p * q.conj();
  return {r.x, r.y, r.z};
}

void QuatSet::insert(const Quat& q) {
  if (!contains(q)) elems_.push_back(q.normalized());
}

bool QuatSet::contains(const Quat& q) const {
  for (const auto& e : elems_)
    if (quat_close(e, q)) return true;
  return false;
}

bool set_equal(const QuatSet& a, const QuatSet& b) {
  return a.size() == b.size() && subset(a, b);
}

bool subset(const QuatSet& a, const QuatSet& b) {
  for (const auto& e : a.elems_)
    if (!b.contains(e)) return false;
  return true;
}

std::optional<QuatSet> closure(const std::vector<Quat>& gens, size_t cap) {
  QuatSet s;
  s.insert(Quat::one());
  for (const auto& g : gens) s.insert(g);
  size_t frontier_start = 0;
  while (true) {
    size_t before = s.size();
    if (before > cap) return std::nullopt;
    std::vector<Quat> fresh;
    for (size_t i = frontier_start; i < before; ++i)
      for (size_t j = 0; j < before; ++j) {
        Quat p = s.elements()[i] * s.elements()[j];
        if (!s.contains(p)) {
          s.insert(p);
          if (s.size() > cap) return std::nullopt;
        }
        if (i != j) {
          Quat q = s.elements()[j] * s.elements()[i];
          if (!s.contains(q)) {
            s.insert(q);
            if (s.size() > cap) return std::nullopt;
          }
        }
      }
    if (s.size() == before) break;
    frontier_start = before;
    // products of new elements among themselves still pending; loop again
    frontier_start = 0;
  }
  return s;
}

QuatSet conjugate_set(const QuatSet& s, const Quat& g) {
  QuatSet out;
  for (const auto& e : s.elements()) out.insert(g * e * g.conj());
  return out;
}

std::array<double, 3> axis_vec(Ax a) {
  switch (a) {
    case Ax::X: return {1, 0, 0};
    case Ax::Y: return {0, 1, 0};
    case Ax::Z: return {0, 0, 1};
  }
  return {0, 0, 1};
}

namespace {

QuatSet polyhedral_binary(Family f) {
  QuatSet s;
  auto add = [&s](double w, double x, double y, double z) {
    s.insert(Quat{w, x, y, z});
  };
  // Binary tetrahedral: the 24 Hurwitz units.
  for (int sign = -1; sign <= 1; sign += 2) {
    add(sign, 0, 0, 0);
    add(0, sign, 0, 0);
    add(0, 0, sign, 0);
    add(0, 0, 0, sign);
  }
  for (int a = -1; a <= 1; a += 2)
    for (int b = -1; b <= 1; b += 2)
      for (int c = -1; c <= 1; c += 2)
        for (int d = -1; d <= 1; d += 2) add(a / 2.0, b / 2.0, c / 2.0, d / 2.0);
  if (f == Family::BinaryTetrahedral) return s;
  if (f == Family::BinaryOctahedral) {
    const double r = 1.0 / std::sqrt(2.0);
    double c[4];
    for (int i = 0; i < 4; ++i)
      for (int j = i + 1; j < 4; ++j)
        for (int si = -1; si <= 1; si += 2)
          for (int sj = -1; sj <= 1; sj += 2) {
            c[0] = c[1] = c[2] = c[3] = 0;
            c[i] = si * r;
            c[j] = sj * r;
            add(c[0], c[1], c[2], c[3]);
          }
    return s;
  }
  // Binary icosahedral: Hurwitz units plus even permutations of
  // (±phi, ±1, ±1/phi, 0)/2.
  const double phi = (1.0 + std::sqrt(5.0)) / 2.0;
  const double base[4] = {phi / 2.0, 0.5, 1.0 / (2.0 * phi), 0.0};
  static const int even_perms[12][4] = {
      {0, 1, 2, 3}, {0, 2, 3, 1}, {0, 3, 1, 2}, {1, 0, 3, 2},
      {1, 2, 0, 3}, {1, 3, 2, 0}, {2, 0, 1, 3}, {2, 1, 3, 0},
      {2, 3, 0, 1}, {3, 0, 2, 1}, {3, 1, 0, 2}, {3, 2, 1, 0}};
  for (const auto& p : even_perms)
    for (int s1 = -1; s1 <= 1; s1 += 2)
      for (int s2 = -1; s2 <= 1; s2 += 2)
        for (int s3 = -1; s3 <= 1; s3 += 2) {
          double v[4];
          v[p[0]] = s1 * base[0];
          v[p[1]] = s2 * base[1];
          v[p[2]] = s3 * base[2];
          v[p[3]] = 0.0;
          add(v[0], v[1], v[2], v[3]);
        }
  return s;
}

}  // namespace

QuatSet materialize_su2(const GroupSpec& g, Ax main, Ax sec) {
  if (g.has_symbolic_param())
    throw std::domain_error("oracle not applicable: symbolic parameter");
  auto u = axis_vec(main);
  auto v = axis_vec(sec);
  switch (g.family) {
    case Family::Trivial: {
      QuatSet s;
      s.insert(Quat::one());
      return s;
    }
    case Family::Cyclic: {
      auto n = g.param.value();
      if (n < 1) throw std::domain_error("oracle: bad cyclic order");
      auto c = closure({Quat::exp_axis(u, 2.0 * kPi / static_cast<double>(n))});
      return *c;
    }
    case Family::BinaryDihedral: {
      auto n = g.param.value();
      if (n < 1) throw std::domain_error("oracle: bad dihedral order");
      auto c = closure({Quat::exp_axis(u, kPi / static_cast<double>(n)),
                        Quat{0, v[0], v[1], v[2]}});
      return *c;
    }
    case Family::BinaryTetrahedral:
    case Family::BinaryOctahedral:
    case Family::BinaryIcosahedral:
      return polyhedral_binary(g.family);
    default:
      throw std::domain_error("oracle not applicable: " + g.str());
  }
}

QuatSet materialize_so3_lift(const GroupSpec& g, Ax main, Ax sec) {
  if (g.has_symbolic_param())
    throw std::domain_error("oracle not applicable: symbolic parameter");
  auto u = axis_vec(main);
  switch (g.family) {
    case Family::Trivial:
      return materialize_su2(GroupSpec::cyclic(2), main, sec);
    case Family::Cyclic:
      // Rotation by 2pi/n lifts to exp(pi/n); the lift is Z_{2n}.
      return materialize_su2(GroupSpec::cyclic(2 * g.param.value()), main, sec);
    case Family::Dihedral:
      return materialize_su2(GroupSpec::binary_dihedral(g.param), main, sec);
    case Family::Tetrahedral:
      return polyhedral_binary(Family::BinaryTetrahedral);
    case Family::Octahedral:
      return polyhedral_binary(Family::BinaryOctahedral);
    case Family::Icosahedral:
      return polyhedral_binary(Family::BinaryIcosahedral);
    default:
      throw std::domain_error("oracle not applicable: " + g.str());
  }
}

namespace {

struct ConfigPoint {
  std::array<double, 3> u;
  double theta;
};

// Signed axis-angle configuration of the non-central elements.
std::vector<ConfigPoint> config_of(const QuatSet& s) {
  std::vector<ConfigPoint> cfg;
  for (const auto& q : s.elements()) {
    double im = std::sqrt(q.x * q.x + q.y * q.y + q.z * q.z);
    if (im < kTol) continue;  // +-1
    double theta = std::atan2(im, q.w);
    cfg.push_back({{q.x / im, q.y / im, q.z / im}, theta});
  }
  return cfg;
}

std::optional<Ax> match_axis(const std::array<double, 3>& u) {
  for (Ax a : {Ax::X, Ax::Y, Ax::Z}) {
    auto v = axis_vec(a);
    if (parallel_lines(u, v)) return a;
  }
  return std::nullopt;
}

int element_order(const Quat& q, int cap = 300) {
  Quat p = q;
  for (int k = 1; k <= cap; ++k) {
    if (quat_close(p, Quat::one())) return k;
    p = (p * q).normalized();
  }
  return -1;
}

}  // namespace

Identified identify_su2(const QuatSet& s) {
  size_t n = s.size();
  if (n == 1) return {GroupSpec::trivial(), std::nullopt, std::nullopt};
  auto cfg = config_of(s);
  if (cfg.empty()) {
    // {+-1}
    return {GroupSpec::cyclic(2), std::nullopt, std::nullopt};
  }
  // Cyclic: all axes on one line.
  bool one_line = true;
  for (const auto& p : cfg)
    if (!parallel_lines(p.u, cfg[0].u)) {
      one_line = false;
      break;
    }
  if (one_line)
    return {GroupSpec::cyclic(static_cast<std::int64_t>(n)),
            match_axis(cfg[0].u), std::nullopt};
  // Binary dihedral: a cyclic half on a main line, half-turns (w = 0)
  // perpendicular to it.
  if (n % 4 == 0) {
    for (const auto& cand : cfg) {
      size_t on_line = 2;  // +-1
      size_t half_turns_perp = 0;
      std::optional<std::array<double, 3>> sec;
      for (const auto& q : s.elements()) {
        double im = std::sqrt(q.x * q.x + q.y * q.y + q.z * q.z);
        if (im < kTol) continue;
        std::array<double, 3> u{q.x / im, q.y / im, q.z / im};
        if (parallel_lines(u, cand.u)) {
          ++on_line;
        } else if (std::abs(q.w) < kTol &&
                   std::abs(dot3(u, cand.u)) < 1e-6) {
          ++half_turns_perp;
          if (!sec) sec = u;
        }
      }
      if (on_line == n / 2 && half_turns_perp == n / 2) {
        auto main = match_axis(cand.u);
        // Prefer the Z axis as main when several lines qualify (Q8).
        if (n == 8 && main != Ax::Z) continue;
        return {GroupSpec::binary_dihedral(static_cast<std::int64_t>(n / 4)),
                main, sec ? match_axis(*sec) : std::nullopt};
      }
    }
    if (n == 8) {
      // Q8 with no Z-aligned line; fall back to the first qualifying line.
      for (const auto& cand : cfg) {
        size_t on_line = 2, perp = 0;
        for (const auto& p : cfg) {
          if (parallel_lines(p.u, cand.u)) ++on_line;
          else if (std::abs(dot3(p.u, cand.u)) < 1e-6) ++perp;
        }
        if (on_line == 4 && perp == 4)
          return {GroupSpec::quaternion8(), match_axis(cand.u), std::nullopt};
      }
    }
  }
  if (n == 24) return {GroupSpec::binary_tetrahedral(), std::nullopt, std::nullopt};
  if (n == 48) return {GroupSpec::binary_octahedral(), std::nullopt, std::nullopt};
  if (n == 120) return {GroupSpec::binary_icosahedral(), std::nullopt, std::nullopt};
  throw std::domain_error("identify_su2: not a catalog subgroup, order " +
                          std::to_string(n));
}

Identified identify_so3(const QuatSet& lift) {
  if (!lift.contains(-Quat::one()))
    throw std::domain_error("identify_so3: set is not a binary lift");
  Identified up = identify_su2(lift);
  Identified out = up;
  switch (up.group.family) {
    case Family::Cyclic: {
      auto m = up.group.param.value();
      if (m == 2) out.group = GroupSpec::trivial();
      else if (m % 2 == 0) out.group = GroupSpec::cyclic(m / 2);
      else throw std::domain_error("identify_so3: odd-order lift");
      // A lifted half-turn Z_2 shows up as Z_4 about its axis.
      break;
    }
    case Family::BinaryDihedral:
      out.group = GroupSpec::dihedral(up.group.param);
      break;
    case Family::BinaryTetrahedral: out.group = GroupSpec::tetrahedral(); break;
    case Family::BinaryOctahedral: out.group = GroupSpec::octahedral(); break;
    case Family::BinaryIcosahedral: out.group = GroupSpec::icosahedral(); break;
    default:
      throw std::domain_error("identify_so3: unexpected lift type");
  }
  return out;
}

GeneratedResult generated(const QuatSet& a, const QuatSet& b) {
  std::vector<Quat> gens;
  for (const auto& q : a.elements()) gens.push_back(q);
  for (const auto& q : b.elements()) gens.push_back(q);
  auto c = closure(gens);
  GeneratedResult r;
  if (c) {
    r.finite = true;
    r.set = *c;
    return r;
  }
  r.finite = false;
  // Look for a common preserved line; rational generators make every
  // line-preserving closure finite, so this is defensive only.
  std::vector<std::array<double, 3>> candidates;
  for (const auto& q : gens) {
    double im = std::sqrt(q.x * q.x + q.y * q.y + q.z * q.z);
    if (im > kTol) candidates.push_back({q.x / im, q.y / im, q.z / im});
  }
  for (const auto& L : candidates) {
    bool ok = true;
    for (const auto& g : gens) {
      auto img = rotate(g, L);
      if (!parallel_lines(img, L)) {
        ok = false;
        break;
      }
    }
    if (ok) {
      r.cont = ContKind::Pin2Axis;
      r.axis = L;
      return r;
    }
  }
  r.cont = ContKind::FullGroup;
  return r;
}

NormalizerResult normalizer_su2(const QuatSet& h) {
  NormalizerResult res;
  auto cfg = config_of(h);
  if (cfg.empty()) {
    res.finite = false;
    res.cont = ContKind::FullGroup;
    return res;
  }
  bool one_line = true;
  for (const auto& p : cfg)
    if (!parallel_lines(p.u, cfg[0].u)) {
      one_line = false;
      break;
    }
  if (one_line) {
    res.finite = false;
    res.cont = ContKind::Pin2Axis;
    res.axis = cfg[0].u;
    return res;
  }
  // Finite normalizer: symmetries of the signed axis-angle configuration.
  auto level_of = [&cfg](double theta) {
    std::vector<std::array<double, 3>> pts;
    for (const auto& p : cfg)
      if (std::abs(p.theta - theta) < 1e-6) pts.push_back(p.u);
    return pts;
  };
  auto in_config = [&cfg](const std::array<double, 3>& u, double theta) {
    for (const auto& p : cfg)
      if (std::abs(p.theta - theta) < 1e-6 && norm3(cross3(p.u, u)) < 1e-6 &&
          dot3(p.u, u) > 0)
        return true;
    return false;
  };
  // Reference pair: p from the smallest level, q non-collinear with p.
  std::vector<double> thetas;
  for (const auto& p : cfg) {
    bool seen = false;
    for (double t : thetas)
      if (std::abs(t - p.theta) < 1e-6) seen = true;
    if (!seen) thetas.push_back(p.theta);
  }
  double best_theta = thetas[0];
  size_t best_size = level_of(thetas[0]).size();
  for (double t : thetas) {
    size_t sz = level_of(t).size();
    if (sz < best_size) {
      best_size = sz;
      best_theta = t;
    }
  }
  auto lp = level_of(best_theta);
  std::array<double, 3> p = lp[0];
  std::array<double, 3> qv{};
  double q_theta = 0;
  bool found_q = false;
  for (const auto& c : cfg)
    if (!parallel_lines(c.u, p)) {
      qv = c.u;
      q_theta = c.theta;
      found_q = true;
      break;
    }
  if (!found_q) throw std::logic_error("normalizer: degenerate configuration");
  auto lq = level_of(q_theta);
  double ref_dot = dot3(p, qv);

  auto rotation_taking = [](const std::array<double, 3>& from,
                            const std::array<double, 3>& to) -> Quat {
    double d = dot3(from, to);
    if (d > 1 - 1e-9) return Quat::one();
    std::array<double, 3> ax;
    if (d < -1 + 1e-9) {
      // pick any perpendicular axis
      ax = std::abs(from[0]) < 0.9 ? cross3(from, {1, 0, 0})
                                   : cross3(from, {0, 1, 0});
      return Quat::exp_axis(ax, kPi / 2);
    }
    ax = cross3(from, to);
    double angle = std::acos(std::clamp(d, -1.0, 1.0));
    return Quat::exp_axis(ax, angle / 2);
  };

  QuatSet norm;
  for (const auto& p2 : lp)
    for (const auto& q2 : lq) {
      if (std::abs(dot3(p2, q2) - ref_dot) > 1e-6) continue;
      Quat r1 = rotation_taking(p, p2);
      auto q_mid = rotate(r1, qv);
      // rotate about p2 to bring q_mid onto q2
      auto a1 = unit3(cross3(p2, q_mid)), a2 = unit3(cross3(p2, q2));
      double c = std::clamp(dot3(a1, a2), -1.0, 1.0);
      double ang = std::acos(c);
      if (dot3(cross3(a1, a2), p2) < 0) ang = -ang;
      Quat r2 = Quat::exp_axis(p2, ang / 2);
      Quat cand = (r2 * r1).normalized();
      bool ok = true;
      for (const auto& cp : cfg)
        if (!in_config(rotate(cand, cp.u), cp.theta)) {
          ok = false;
          break;
        }
      if (ok) {
        norm.insert(cand);
        norm.insert(-cand);
      }
    }
  res.finite = true;
  res.set = norm;
  return res;
}

bool in_circle(const Quat& q, const std::array<double, 3>& axis) {
  double im = std::sqrt(q.x * q.x + q.y * q.y + q.z * q.z);
  if (im < kTol) return true;  // +-1
  return parallel_lines({q.x / im, q.y / im, q.z / im}, axis);
}

bool in_pin2(const Quat& q, const std::array<double, 3>& axis) {
  if (in_circle(q, axis)) return true;
  double im = std::sqrt(q.x * q.x + q.y * q.y + q.z * q.z);
  if (std::abs(q.w) > kTol || im < kTol) return false;
  return std::abs(dot3({q.x / im, q.y / im, q.z / im}, axis)) < 1e-6;
}

std::vector<Quat> coset_reps(const QuatSet& h, const QuatSet& n) {
  std::vector<Quat> reps;
  QuatSet covered;
  for (const auto& g : h.elements()) {
    if (covered.contains(g)) continue;
    reps.push_back(g);
    for (const auto& m : n.elements()) covered.insert(g * m);
  }
  return reps;
}

GroupSpec quotient_type(const QuatSet& h, const QuatSet& n) {
  auto reps = coset_reps(h, n);
  size_t q = reps.size();
  if (q == 1) return GroupSpec::trivial();
  auto coset_order = [&](const Quat& g) {
    Quat p = g;
    for (size_t k = 1; k <= q; ++k) {
      if (n.contains(p)) return static_cast<int>(k);
      p = (p * g).normalized();
    }
    return -1;
  };
  int max_ord = 0;
  int order2 = 0;
  for (const auto& g : reps) {
    int o = coset_order(g);
    max_ord = std::max(max_ord, o);
    if (o == 2) ++order2;
  }
  if (max_ord == static_cast<int>(q))
    return GroupSpec::cyclic(static_cast<std::int64_t>(q));
  if (q == 4 && order2 == 3) return GroupSpec::dihedral(2);
  if (q % 2 == 0 && max_ord == static_cast<int>(q / 2) &&
      order2 >= static_cast<int>(q / 2))
    return GroupSpec::dihedral(static_cast<std::int64_t>(q / 2));
  if (q == 12) return GroupSpec::tetrahedral();
  if (q == 24) return GroupSpec::octahedral();
  if (q == 60) return GroupSpec::icosahedral();
  throw std::domain_error("quotient_type: unidentified quotient of order " +
                          std::to_string(q));
}

std::string dump(const QuatSet& s) {
  std::ostringstream os;
  for (const auto& q : s.elements())
    os << q.w << " " << q.x << " " << q.y << " " << q.z << "\n";
  return os.str();
}

int oracle_bound() {
  if (const char* e = std::getenv("COHOM1_ORACLE_BOUND")) {
    int v = std::atoi(e);
    if (v >= 1) return v;
  }
  return 12;
}

}  // namespace cohom1::oracle
