#include "cohom1/topology.hpp"

#include <algorithm>

namespace cohom1 {

JoinSpace JoinSpace::sphere(int d) {
  JoinSpace j;
  j.sphere_dim = d;
  return j;
}

JoinSpace JoinSpace::of(const HomogeneousSpace& h) {
  if (h.is_sphere()) return sphere(h.dim);
  JoinSpace j;
  j.sphere_dim = -1;
  j.named.push_back(h);
  return j;
}

int JoinSpace::dim() const {
  int d = sphere_dim;
  for (const auto& f : named) d += f.dim + 1;
  return d;
}

JoinSpace join(const JoinSpace& a, const JoinSpace& b) {
  JoinSpace j;
  j.sphere_dim = a.sphere_dim + b.sphere_dim + 1;
  j.named = a.named;
  for (const auto& f : b.named) j.named.push_back(f);
  std::sort(j.named.begin(), j.named.end(),
            [](const HomogeneousSpace& x, const HomogeneousSpace& y) {
              return x.str() < y.str();
            });
  return j;
}

std::string JoinSpace::str() const {
  if (named.empty()) return "S^" + std::to_string(sphere_dim);
  std::string inner;
  for (size_t i = 0; i < named.size(); ++i) {
    if (i) inner += "*";
    inner += named[i].str();
  }
  if (sphere_dim == -1) return inner;
  if (sphere_dim == 0) return "Sigma(" + inner + ")";
  return "S^" + std::to_string(sphere_dim) + "*" + inner;
}

std::string JoinSpace::class_str() const {
  if (named.empty()) return "S^" + std::to_string(sphere_dim);
  auto class_of = [](const HomogeneousSpace& h) {
    switch (h.name) {
      case SpaceName::SpaceForm3: return std::string("SU(2)/Gamma");
      case SpaceName::SpaceForm5: return std::string("S^5/Gamma");
      case SpaceName::Lens: return std::string("SU(2)/Gamma");
      default: return h.str();
    }
  };
  std::string inner;
  for (size_t i = 0; i < named.size(); ++i) {
    if (i) inner += "*";
    inner += class_of(named[i]);
  }
  if (sphere_dim == -1) return inner;
  if (sphere_dim == 0) return "Sigma(" + inner + ")";
  return "S^" + std::to_string(sphere_dim) + "*" + inner;
}

bool operator==(const JoinSpace& a, const JoinSpace& b) {
  if (a.sphere_dim != b.sphere_dim || a.named.size() != b.named.size())
    return false;
  for (size_t i = 0; i < a.named.size(); ++i)
    if (a.named[i] != b.named[i]) return false;
  return true;
}

JoinSpace space_of_directions(const GroupDiagram& d, Side side) {
  if (d.orbit != OrbitSpaceKind::Interval)
    throw CatalogError("space of directions: circle orbit space has no sides");
  const EmbeddedSubgroup& k = side == Side::Minus ? d.k_minus : d.k_plus;
  HomogeneousSpace fiber = quotient_space(k, d.h);
  int orbit_dim = d.g.dim() - k.dim();
  return join(JoinSpace::sphere(orbit_dim - 1), JoinSpace::of(fiber));
}

bool is_manifold(const GroupDiagram& d) {
  if (d.orbit == OrbitSpaceKind::Circle) return true;
  return quotient_space(d.k_minus, d.h).is_sphere() &&
         quotient_space(d.k_plus, d.h).is_sphere();
}

std::vector<JoinSpace> directions_catalog(int k) {
  if (k < 3 || k > 6) throw CatalogError("directions catalog covers dims 3..6");
  std::vector<HomogeneousSpace> pieces;
  for (int df = 0; df <= k - 1 && df <= 5; ++df) {
    pieces.push_back(HomogeneousSpace::sphere(df));
    if (df == 2) pieces.push_back(HomogeneousSpace::real_projective(2));
    if (df == 3) {
      auto f = HomogeneousSpace::space_form3_su2(GroupSpec::cyclic(5));
      f.generic_gamma = true;
      pieces.push_back(f);
    }
    if (df == 4) {
      pieces.push_back(HomogeneousSpace::real_projective(4));
      pieces.push_back(HomogeneousSpace::cp2());
    }
    if (df == 5) {
      pieces.push_back(HomogeneousSpace::real_projective(5));
      pieces.push_back(HomogeneousSpace::space_form5_generic());
    }
  }
  std::vector<JoinSpace> out;
  for (const auto& f : pieces) {
    int m = k - 2 - f.dim;
    if (m < -1) continue;
    JoinSpace j = join(JoinSpace::sphere(m), JoinSpace::of(f));
    if (std::find(out.begin(), out.end(), j) == out.end()) out.push_back(j);
  }
  std::sort(out.begin(), out.end(),
            [](const JoinSpace& a, const JoinSpace& b) { return a.str() < b.str(); });
  return out;
}

// ---------------------------------------------------------------------------

SpaceDescription SpaceDescription::suspension(HomogeneousSpace h) {
  SpaceDescription s;
  if (h.is_sphere()) {
    // the suspension of a sphere is the next sphere
    s.kind = Kind::Named;
    s.space = HomogeneousSpace::sphere(h.dim + 1);
    s.label = s.space.str();
    s.manifold = true;
    return s;
  }
  s.kind = Kind::Suspension;
  s.manifold = false;
  s.space = std::move(h);
  return s;
}

SpaceDescription SpaceDescription::named(std::string label, bool manifold) {
  SpaceDescription s;
  s.kind = Kind::Named;
  s.label = std::move(label);
  s.manifold = manifold;
  return s;
}

SpaceDescription SpaceDescription::product_of(std::vector<SpaceDescription> fs) {
  SpaceDescription s;
  s.kind = Kind::Product;
  s.manifold = true;
  for (auto& f : fs) s.manifold = s.manifold && f.manifold;
  s.sub = std::move(fs);
  return s;
}

namespace {

SpaceDescription plain_space(HomogeneousSpace h) {
  SpaceDescription s;
  s.kind = SpaceDescription::Kind::Named;
  s.label = h.str();
  s.manifold = true;
  s.space = std::move(h);
  return s;
}

}  // namespace

std::string SpaceDescription::str() const {
  switch (kind) {
    case Kind::Suspension:
      return "Sigma(" + space.str() + ")";
    case Kind::ConeBundleUnion: {
      auto side = [](const HomogeneousSpace& fiber, const HomogeneousSpace& base) {
        if (fiber.is_sphere()) {
          if (base.name == SpaceName::Point)
            return "D^" + std::to_string(fiber.dim + 1);
          return "D(" + base.str() + ")";
        }
        std::string s = "C(" + fiber.str() + ")";
        if (base.name != SpaceName::Point) s += "[" + base.str() + "]";
        return s;
      };
      return side(fiber_minus, base_minus) + " U[" + principal.str() + "] " +
             side(fiber_plus, base_plus);
    }
    case Kind::BundleOverCircle: {
      if (trivial == Triviality::Trivial) {
        // merge tori: a trivial torus bundle over the circle is a torus
        if (space.name == SpaceName::TorusSpace)
          return "T^" + std::to_string(space.dim + 1);
        if (space.name == SpaceName::Sphere && space.dim == 1) return "T^2";
        return space.str() + " x S^1";
      }
      if (trivial == Triviality::Twisted) return space.str() + " x~ S^1";
      return space.str() + "-bundle/S^1[" + structure.str() + "]";
    }
    case Kind::Product: {
      bool all_tori = true;
      int rank = 0;
      for (const auto& f : sub) {
        if (f.kind == Kind::Named && f.space.name == SpaceName::TorusSpace)
          rank += f.space.dim;
        else if (f.kind == Kind::Named && f.space.name == SpaceName::Sphere &&
                 f.space.dim == 1)
          rank += 1;
        else
          all_tori = false;
      }
      if (all_tori && !sub.empty()) return "T^" + std::to_string(rank);
      std::string s;
      for (size_t i = 0; i < sub.size(); ++i) {
        if (i) s += " x ";
        s += sub[i].str();
      }
      return s;
    }
    case Kind::Named:
      return label;
    case Kind::Fibration:
      return "(" + sub[0].str() + ")[" + space.str() + "]";
  }
  return "?";
}

SpaceDescription SpaceDescription::instantiate(std::int64_t n) const {
  SpaceDescription s = *this;
  s.space = space.instantiate(n);
  s.fiber_minus = fiber_minus.instantiate(n);
  s.base_minus = base_minus.instantiate(n);
  s.fiber_plus = fiber_plus.instantiate(n);
  s.base_plus = base_plus.instantiate(n);
  s.principal = principal.instantiate(n);
  for (auto& f : s.sub) f = f.instantiate(n);
  if (s.kind == Kind::Named && !s.label.empty() && s.space.name != SpaceName::Point)
    s.label = s.space.str();
  return s;
}

bool operator==(const SpaceDescription& a, const SpaceDescription& b) {
  if (a.kind != b.kind) return false;
  switch (a.kind) {
    case SpaceDescription::Kind::Suspension: return a.space == b.space;
    case SpaceDescription::Kind::ConeBundleUnion:
      return a.fiber_minus == b.fiber_minus && a.base_minus == b.base_minus &&
             a.fiber_plus == b.fiber_plus && a.base_plus == b.base_plus &&
             a.principal == b.principal;
    case SpaceDescription::Kind::BundleOverCircle:
      return a.space == b.space && a.structure == b.structure &&
             a.trivial == b.trivial;
    case SpaceDescription::Kind::Named:
      return a.label == b.label;
    case SpaceDescription::Kind::Product:
    case SpaceDescription::Kind::Fibration: {
      if (!(a.space == b.space) || a.sub.size() != b.sub.size()) return false;
      for (size_t i = 0; i < a.sub.size(); ++i)
        if (a.sub[i] != b.sub[i]) return false;
      return true;
    }
  }
  return false;
}

// ---------------------------------------------------------------------------

namespace {

// Lens-space parameters of the T^2 diagram with circle isotropies v, w.
// p is the pair's lattice index; q is derived metadata, normalized to the
// unoriented convention q ~ -q ~ q^{-1} (mod p).
std::pair<std::int64_t, std::int64_t> lens_params(std::vector<std::int64_t> v,
                                                  std::vector<std::int64_t> w) {
  std::int64_t det = v[0] * w[1] - v[1] * w[0];
  std::int64_t p = det < 0 ? -det : det;
  // complete v to a basis (v, u) with det(v,u) = 1
  std::int64_t a = v[0], b = v[1];
  std::int64_t x = 0, y = 0;
  for (std::int64_t t = -200; t <= 200 && !(a * y - b * x == 1); ++t)
    for (std::int64_t s = -200; s <= 200; ++s)
      if (a * t - b * s == 1) {
        x = s;
        y = t;
        break;
      }
  std::int64_t alpha = w[0] * y - w[1] * x;  // det(w, u)
  std::int64_t q = ((alpha % p) + p) % p;
  // unoriented normalization
  std::int64_t best = q;
  auto consider = [&](std::int64_t c) {
    c = ((c % p) + p) % p;
    if (c != 0 && c < best) best = c;
  };
  consider(p - q);
  for (std::int64_t inv = 1; inv < p; ++inv)
    if ((inv * q) % p == 1) {
      consider(inv);
      consider(p - inv);
    }
  return {p, best};
}

// One K's contribution to the span of the singular directions: the slope
// of a circle isotropy, or twice a torsion generator.
std::optional<std::vector<std::int64_t>> torus_direction(
    const EmbeddedSubgroup& s) {
  if (s.dim() == 1 && s.is_connected()) return s.circle_slope();
  auto o = s.order();
  if (s.dim() == 0 && o && o->is_concrete() && o->value() == 2) {
    // generator of the annihilator-dual: a vector t with 2t integral
    intlat::Mat gens = intlat::kernel(s.ann);  // rank 0: no slopes
    (void)gens;
    // the 2-torsion point doubles to a primitive-ish lattice vector; fish it
    // out of the annihilator: pick x in (1/2)Z^k with <a,x> in Z for all a.
    int k = s.ann.cols;
    for (std::int64_t mask = 1; mask < (1 << k); ++mask) {
      std::vector<std::int64_t> two_t(k, 0);
      for (int c = 0; c < k; ++c) two_t[c] = (mask >> c) & 1;
      bool ok = true;
      for (int r = 0; r < s.ann.rows && ok; ++r) {
        std::int64_t dot = 0;
        for (int c = 0; c < k; ++c) dot += s.ann.at(r, c) * two_t[c];
        ok = dot % 2 == 0;
      }
      // x = two_t/2 must generate the subgroup: check it is not integral
      if (ok) {
        auto probe = EmbeddedSubgroup::torus_cyclic(k, two_t, 2);
        if (probe.exact_equal(s)) return two_t;
      }
    }
    return std::nullopt;
  }
  return std::nullopt;
}

// Family name of the 3-manifold given by a T^2 diagram in coordinates
// where the singular data is (slope or half-point, slope or half-point).
std::string t2_family_name(const EmbeddedSubgroup& km,
                           const EmbeddedSubgroup& kp) {
  auto is_circle = [](const EmbeddedSubgroup& s) {
    return s.dim() == 1 && s.is_connected();
  };
  if (is_circle(km) && is_circle(kp)) {
    auto v = km.circle_slope(), w = kp.circle_slope();
    std::int64_t det = v[0] * w[1] - v[1] * w[0];
    if (det < 0) det = -det;
    if (det == 0) return "S^2 x S^1";
    if (det == 1) return "S^3";
    auto [p, q] = lens_params(v, w);
    return "L(" + std::to_string(p) + "," + std::to_string(q) + ")";
  }
  if (is_circle(km) || is_circle(kp)) {
    const auto& c = is_circle(km) ? km : kp;
    const auto& t = is_circle(km) ? kp : km;
    return lattice_contains(t, c) ? "RP^2 x S^1" : "S^2 x~ S^1";
  }
  return km.exact_equal(kp) ? "Kl x S^1" : "A";
}

std::optional<SpaceDescription> torus_named(const GroupDiagram& d) {
  if (d.g.family != Family::Torus && d.g.family != Family::Circle)
    return std::nullopt;
  if (!d.h.is_trivial()) return std::nullopt;
  int k = d.g.dim();
  auto dm = torus_direction(d.k_minus);
  auto dp = torus_direction(d.k_plus);
  if (!dm || !dp) return std::nullopt;
  intlat::Mat span(2, k);
  for (int c = 0; c < k; ++c) {
    span.at(0, c) = (*dm)[c];
    span.at(1, c) = (*dp)[c];
  }
  // saturated subtorus containing both isotropies; its complement acts freely
  intlat::Mat sat = intlat::kernel(intlat::kernel(span));
  int r = sat.rows;
  int free_rank = k - r;
  std::string base;
  if (r == 1) {
    // both isotropies sit in one circle; the fiber datum is full or half
    auto half = [&](const EmbeddedSubgroup& s) { return s.dim() == 0; };
    bool hm = half(d.k_minus), hp = half(d.k_plus);
    if (!hm && !hp) base = "S^2";
    else if (hm && hp) base = "Kl";
    else base = "RP^2";
  } else {
    // rewrite both isotropies in coordinates on the rank-2 subtorus
    auto xm = intlat::coordinates_in(sat, *dm);
    auto xp = intlat::coordinates_in(sat, *dp);
    if (!xm || !xp) return std::nullopt;
    auto rebuild = [&](const EmbeddedSubgroup& s,
                       const std::vector<std::int64_t>& x) {
      if (s.dim() == 1) return EmbeddedSubgroup::torus_circle(2, x);
      return EmbeddedSubgroup::torus_cyclic(2, x, 2);
    };
    EmbeddedSubgroup km2 = rebuild(d.k_minus, *xm);
    EmbeddedSubgroup kp2 = rebuild(d.k_plus, *xp);
    base = t2_family_name(km2, kp2);
  }
  if (free_rank == 0) return SpaceDescription::named(base, true);
  std::string suffix = free_rank == 1 ? " x S^1" : " x T^" + std::to_string(free_rank);
  return SpaceDescription::named(base + suffix, true);
}

bool pin2_across(const GroupDiagram& d) {
  if (d.g.family != Family::SU2 || !(d.h.group == GroupSpec::cyclic(4)))
    return false;
  for (const auto* k : {&d.k_minus, &d.k_plus})
    if (k->kind == EmbKind::Rot && k->group.family == Family::Pin2 &&
        k->main != d.h.main)
      return true;
  return false;
}

}  // namespace

SpaceDescription realize(const GroupDiagram& d_in) {
  // equivalent diagrams realize identically
  GroupDiagram d = canonical_form(d_in);
  if (d.orbit == OrbitSpaceKind::Circle) {
    auto n = normalizer(d.h);
    SpaceDescription s;
    s.kind = SpaceDescription::Kind::BundleOverCircle;
    s.space = identify_quotient(d.g, d.h);
    s.structure = n.weyl_like_quotient;
    s.manifold = true;
    if (n.weyl_like_quotient.is_connected())
      s.trivial = SpaceDescription::Triviality::Trivial;
    else
      s.trivial = SpaceDescription::Triviality::Unknown;
    return s;
  }

  if (auto named = torus_named(d)) return *named;

  HomogeneousSpace fm = quotient_space(d.k_minus, d.h);
  HomogeneousSpace fp = quotient_space(d.k_plus, d.h);
  HomogeneousSpace bm = identify_quotient(d.g, d.k_minus);
  HomogeneousSpace bp = identify_quotient(d.g, d.k_plus);
  HomogeneousSpace pr = identify_quotient(d.g, d.h);
  bool manifold = fm.is_sphere() && fp.is_sphere();

  if (pin2_across(d)) {
    std::string tok = "SU(2)/<i>";
    if (pr.name == SpaceName::SpaceForm3) pr.display_override = tok;
    if (fm.name == SpaceName::SpaceForm3) fm.display_override = tok;
    if (fp.name == SpaceName::SpaceForm3) fp.display_override = tok;
  }

  bool minus_full = d.k_minus.covers_parent();
  bool plus_full = d.k_plus.covers_parent();
  if (minus_full && plus_full) {
    auto s = SpaceDescription::suspension(pr);
    s.manifold = manifold;
    return s;
  }

  // K+ >= K- > H: a bundle over G/K+ with cohomogeneity one fiber
  if (!minus_full && !plus_full) {
    const EmbeddedSubgroup* big = nullptr;
    const EmbeddedSubgroup* small = nullptr;
    if (lattice_contains(d.k_minus, d.k_plus)) {
      big = &d.k_plus;
      small = &d.k_minus;
    } else if (lattice_contains(d.k_plus, d.k_minus)) {
      big = &d.k_minus;
      small = &d.k_plus;
    }
    if (big && !small->is_trivial()) {
      HomogeneousSpace base = identify_quotient(d.g, *big);
      if (small->exact_equal(*big)) {
        // equal case: the fiber is the suspension of K/H
        SpaceDescription fiber =
            SpaceDescription::suspension(quotient_space(*big, d.h));
        fiber.manifold = manifold;
        auto weyl = normalizer(d.h).weyl_like_quotient;
        if (base.name == SpaceName::Sphere && base.dim == 1 &&
            weyl.is_connected()) {
          // over a circle base with connected N(H)/H the bundle is trivial
          auto prod = SpaceDescription::product_of(
              {fiber, plain_space(HomogeneousSpace::sphere(1))});
          prod.manifold = manifold;
          return prod;
        }
        SpaceDescription s;
        s.kind = SpaceDescription::Kind::Fibration;
        s.space = base;
        s.sub.push_back(fiber);
        s.manifold = manifold;
        return s;
      }
      SpaceDescription s;
      s.kind = SpaceDescription::Kind::Fibration;
      s.space = base;
      GroupDiagram sub_diagram = d;
      s.sub.push_back(SpaceDescription::named(
          "cohom1(K+, H, K-, K+) fiber of " + d.str(), manifold));
      s.manifold = manifold;
      (void)sub_diagram;
      return s;
    }
  }

  SpaceDescription s;
  s.kind = SpaceDescription::Kind::ConeBundleUnion;
  s.fiber_minus = fm;
  s.base_minus = bm;
  s.fiber_plus = fp;
  s.base_plus = bp;
  s.principal = pr;
  s.manifold = manifold;
  // flagged discrepancies with the printed table
  if (d.g.family == Family::SO3 && d.h.group.family == Family::Cyclic &&
      d.k_plus.group.family == Family::Cyclic &&
      d.h.group.param.times(2) == d.k_plus.group.param)
    s.notes.push_back(
        "printed table shows D(SO(3)/Z_n); the diagram gives D(SO(3)/Z_2n)");
  if (pin2_across(d))
    s.notes.push_back(
        "printed table shows D(S^2); SU(2)/Pin2 is RP^2");
  return s;
}

FixedSetShape fixed_set_shape(const GroupDiagram& d,
                              const std::optional<EmbeddedSubgroup>& circle) {
  if (d.space_dim() != 3)
    throw CatalogError("fixed point shapes apply to 3-dimensional spaces");
  EmbeddedSubgroup s = [&] {
    if (circle) return *circle;
    auto km0 = d.k_minus.identity_component();
    if (km0.dim() == 1 && km0.is_connected()) return km0;
    if (d.g.family == Family::SO3)
      return EmbeddedSubgroup::rot(d.g, GroupSpec::circle());
    if (d.g.family == Family::Torus)
      return EmbeddedSubgroup::torus_circle(d.g.dim(), {1, 0});
    throw CatalogError("no default circle subgroup");
  }();
  if (s.dim() != 1 || !s.is_connected())
    throw CatalogError("fixed sets are computed for circle subgroups");

  // a circle has fixed points in G/K iff it is subconjugate to K
  auto subconj = [&](const EmbeddedSubgroup& k) {
    if (k.covers_parent()) return true;
    if (d.g.family == Family::Torus || d.g.family == Family::Circle)
      return lattice_contains(s, k);
    if (k.kind == EmbKind::Rot)
      return k.group.family == Family::Circle || k.group.family == Family::O2 ||
             k.group.family == Family::Pin2;
    return false;
  };
  if (d.orbit == OrbitSpaceKind::Circle)
    return subconj(d.h) ? FixedSetShape::CircleShape : FixedSetShape::Empty;
  bool minus = subconj(d.k_minus);
  bool plus = subconj(d.k_plus);
  if (!minus && !plus) return FixedSetShape::Empty;
  if (minus && plus && d.k_minus.covers_parent() &&
      d.k_plus.covers_parent()) {
    // fixed endpoints; the arc closes up only through manifold points
    bool nonmanifold_ends = !quotient_space(d.k_minus, d.h).is_sphere() &&
                            !quotient_space(d.k_plus, d.h).is_sphere();
    if (nonmanifold_ends) return FixedSetShape::IntervalShape;
  }
  return FixedSetShape::CircleShape;
}

}  // namespace cohom1
