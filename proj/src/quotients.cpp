#include "cohom1/quotients.hpp"

#include <algorithm>

namespace cohom1 {

FundamentalGroup FundamentalGroup::cyclic(SymInt n) {
  if (n.is_concrete() && n.value() == 1) return trivial();
  FundamentalGroup f;
  f.tag = Tag::CyclicZ;
  f.n = n;
  return f;
}

FundamentalGroup FundamentalGroup::free_abelian(int k) {
  if (k == 0) return trivial();
  FundamentalGroup f;
  f.tag = Tag::FreeAbelian;
  f.rank = k;
  return f;
}

FundamentalGroup FundamentalGroup::lattice_quotient(int k, intlat::Mat rel) {
  FundamentalGroup f;
  f.tag = Tag::LatticeQuotient;
  f.rank = k;
  f.rel = std::move(rel);
  return f;
}

FundamentalGroup FundamentalGroup::catalog_finite(GroupSpec g) {
  if (g.family == Family::Trivial) return trivial();
  if (g.family == Family::Cyclic) return cyclic(g.param);
  FundamentalGroup f;
  f.tag = Tag::CatalogFinite;
  f.finite = std::move(g);
  return f;
}

FundamentalGroup FundamentalGroup::product(std::vector<FundamentalGroup> fs) {
  std::vector<FundamentalGroup> flat;
  for (auto& f : fs) {
    auto c = f.canonical();
    if (c.tag == Tag::Trivial) continue;
    if (c.tag == Tag::Product)
      for (auto& g : c.factors) flat.push_back(g);
    else
      flat.push_back(c);
  }
  if (flat.empty()) return trivial();
  if (flat.size() == 1) return flat[0];
  FundamentalGroup f;
  f.tag = Tag::Product;
  f.factors = std::move(flat);
  return f;
}

FundamentalGroup FundamentalGroup::canonical() const {
  switch (tag) {
    case Tag::Trivial:
    case Tag::CatalogFinite:
      return *this;
    case Tag::CyclicZ:
      if (n.is_concrete() && n.value() == 1) return trivial();
      return *this;
    case Tag::FreeAbelian:
      return rank == 0 ? trivial() : *this;
    case Tag::LatticeQuotient: {
      auto inv = intlat::snf_invariants(rel);
      int free_rank = rank - static_cast<int>(inv.size());
      std::vector<FundamentalGroup> fs;
      if (free_rank > 0) fs.push_back(free_abelian(free_rank));
      for (auto d : inv)
        if (d == 0) fs.push_back(free_abelian(1));
        else if (d > 1) fs.push_back(cyclic(SymInt::concrete(d)));
      return product(std::move(fs));
    }
    case Tag::Product: {
      std::vector<FundamentalGroup> fs = factors;
      // merge free ranks, sort torsion
      int free_rank = 0;
      std::vector<FundamentalGroup> rest;
      for (auto& f : fs) {
        auto c = f.canonical();
        if (c.tag == Tag::FreeAbelian) free_rank += c.rank;
        else if (c.tag != Tag::Trivial) rest.push_back(c);
      }
      std::sort(rest.begin(), rest.end(),
                [](const FundamentalGroup& a, const FundamentalGroup& b) {
                  if (a.tag != b.tag) return a.tag < b.tag;
                  if (a.tag == Tag::CyclicZ) return a.n < b.n;
                  return a.finite.less_than(b.finite);
                });
      std::vector<FundamentalGroup> out;
      if (free_rank) out.push_back(free_abelian(free_rank));
      for (auto& r : rest) out.push_back(r);
      if (out.empty()) return trivial();
      if (out.size() == 1) return out[0];
      FundamentalGroup f;
      f.tag = Tag::Product;
      f.factors = std::move(out);
      return f;
    }
  }
  return *this;
}

bool FundamentalGroup::is_trivial() const {
  return canonical().tag == Tag::Trivial;
}

std::string FundamentalGroup::str() const {
  auto c = canonical();
  switch (c.tag) {
    case Tag::Trivial: return "1";
    case Tag::CyclicZ: return "Z_" + c.n.str();
    case Tag::FreeAbelian:
      return c.rank == 1 ? "Z" : "Z^" + std::to_string(c.rank);
    case Tag::CatalogFinite: return c.finite.str();
    case Tag::Product: {
      std::string s;
      for (size_t i = 0; i < c.factors.size(); ++i) {
        if (i) s += " x ";
        s += c.factors[i].str();
      }
      return s;
    }
    case Tag::LatticeQuotient: return "lattice";  // unreachable after canonical
  }
  return "?";
}

bool operator==(const FundamentalGroup& a, const FundamentalGroup& b) {
  auto ca = a.canonical(), cb = b.canonical();
  if (ca.tag != cb.tag) return false;
  switch (ca.tag) {
    case FundamentalGroup::Tag::Trivial: return true;
    case FundamentalGroup::Tag::CyclicZ: return ca.n == cb.n;
    case FundamentalGroup::Tag::FreeAbelian: return ca.rank == cb.rank;
    case FundamentalGroup::Tag::CatalogFinite: return ca.finite == cb.finite;
    case FundamentalGroup::Tag::Product: {
      if (ca.factors.size() != cb.factors.size()) return false;
      for (size_t i = 0; i < ca.factors.size(); ++i)
        if (ca.factors[i] != cb.factors[i]) return false;
      return true;
    }
    default: return false;
  }
}

// ---------------------------------------------------------------------------

HomogeneousSpace HomogeneousSpace::sphere(int d) {
  HomogeneousSpace s;
  s.name = SpaceName::Sphere;
  s.dim = d;
  return s;
}

HomogeneousSpace HomogeneousSpace::real_projective(int d) {
  HomogeneousSpace s;
  s.name = SpaceName::RealProjective;
  s.dim = d;
  return s;
}

HomogeneousSpace HomogeneousSpace::cp2() {
  HomogeneousSpace s;
  s.name = SpaceName::ComplexProjective2;
  s.dim = 4;
  return s;
}

HomogeneousSpace HomogeneousSpace::lens(SymInt p, SymInt q) {
  HomogeneousSpace s;
  s.name = SpaceName::Lens;
  s.dim = 3;
  s.p = p;
  s.q = q;
  return s;
}

namespace {
GroupSpec binary_lift_of(const GroupSpec& gamma) {
  switch (gamma.family) {
    case Family::Trivial: return GroupSpec::cyclic(2);
    case Family::Cyclic: return GroupSpec::cyclic(gamma.param.times(2));
    case Family::Dihedral: return GroupSpec::binary_dihedral(gamma.param);
    case Family::Tetrahedral: return GroupSpec::binary_tetrahedral();
    case Family::Octahedral: return GroupSpec::binary_octahedral();
    case Family::Icosahedral: return GroupSpec::binary_icosahedral();
    default: throw CatalogError("no binary lift for " + gamma.str());
  }
}
}  // namespace

HomogeneousSpace HomogeneousSpace::space_form3_su2(GroupSpec gamma_star) {
  if (gamma_star.family == Family::Trivial ||
      (gamma_star.family == Family::Cyclic && gamma_star.param.is_concrete() &&
       gamma_star.param.value() == 1))
    return sphere(3);
  HomogeneousSpace s;
  s.name = SpaceName::SpaceForm3;
  s.dim = 3;
  s.presented_su2 = true;
  s.gamma_star = std::move(gamma_star);
  return s;
}

HomogeneousSpace HomogeneousSpace::space_form3_so3(GroupSpec gamma) {
  HomogeneousSpace s;
  s.name = SpaceName::SpaceForm3;
  s.dim = 3;
  s.presented_su2 = false;
  if (gamma.family == Family::Cyclic && gamma.param.is_concrete() &&
      gamma.param.value() == 1)
    gamma = GroupSpec::trivial();
  s.gamma_star = binary_lift_of(gamma);
  s.gamma = std::move(gamma);
  return s;
}

HomogeneousSpace HomogeneousSpace::space_form5_generic() {
  HomogeneousSpace s;
  s.name = SpaceName::SpaceForm5;
  s.dim = 5;
  s.generic_gamma = true;
  return s;
}

HomogeneousSpace HomogeneousSpace::torus_space(int k) {
  if (k == 0) return point();
  if (k == 1) return sphere(1);
  HomogeneousSpace s;
  s.name = SpaceName::TorusSpace;
  s.dim = k;
  return s;
}

HomogeneousSpace HomogeneousSpace::point() { return {}; }

HomogeneousSpace HomogeneousSpace::finite_set(SymInt count) {
  if (count.is_concrete() && count.value() == 1) return point();
  if (count.is_concrete() && count.value() == 2) return sphere(0);
  HomogeneousSpace s;
  s.name = SpaceName::FiniteSet;
  s.dim = 0;
  s.p = count;
  return s;
}

HomogeneousSpace HomogeneousSpace::product_of(std::vector<HomogeneousSpace> fs) {
  std::vector<HomogeneousSpace> flat;
  for (auto& f : fs) {
    if (f.name == SpaceName::Point) continue;
    if (f.name == SpaceName::ProductSpace)
      for (auto& g : f.factors) flat.push_back(g);
    else
      flat.push_back(f);
  }
  if (flat.empty()) return point();
  if (flat.size() == 1) return flat[0];
  HomogeneousSpace s;
  s.name = SpaceName::ProductSpace;
  for (const auto& f : flat) s.dim += f.dim;
  s.factors = std::move(flat);
  return s;
}

HomogeneousSpace HomogeneousSpace::unidentified(int dim) {
  HomogeneousSpace s;
  s.name = SpaceName::Unidentified;
  s.dim = dim;
  return s;
}

bool HomogeneousSpace::positively_curved() const {
  switch (name) {
    case SpaceName::Sphere: return true;  // S^0 included, per the catalog
    case SpaceName::RealProjective: return dim >= 2;  // RP^3, RP^5 are forms
    case SpaceName::ComplexProjective2: return true;
    case SpaceName::Lens: return true;
    case SpaceName::SpaceForm3:
    case SpaceName::SpaceForm5: return true;
    default: return false;
  }
}

bool HomogeneousSpace::simply_connected() const {
  switch (name) {
    case SpaceName::Sphere: return dim >= 2;
    case SpaceName::ComplexProjective2: return true;
    case SpaceName::Point: return true;
    case SpaceName::ProductSpace:
      for (const auto& f : factors)
        if (!f.simply_connected()) return false;
      return true;
    default: return false;
  }
}

bool HomogeneousSpace::is_connected() const {
  switch (name) {
    case SpaceName::Sphere: return dim >= 1;
    case SpaceName::Point: return true;
    case SpaceName::FiniteSet: return false;
    case SpaceName::ProductSpace:
      for (const auto& f : factors)
        if (!f.is_connected()) return false;
      return true;
    case SpaceName::Unidentified: return false;  // fail closed
    default: return true;
  }
}

FundamentalGroup HomogeneousSpace::pi1() const {
  switch (name) {
    case SpaceName::Sphere:
      return dim == 1 ? FundamentalGroup::free_abelian(1)
                      : FundamentalGroup::trivial();
    case SpaceName::RealProjective:
      return dim >= 2 ? FundamentalGroup::cyclic(SymInt::concrete(2))
                      : FundamentalGroup::free_abelian(1);
    case SpaceName::ComplexProjective2:
    case SpaceName::Point:
      return FundamentalGroup::trivial();
    case SpaceName::Lens: return FundamentalGroup::cyclic(p);
    case SpaceName::SpaceForm3: return FundamentalGroup::catalog_finite(gamma_star);
    case SpaceName::SpaceForm5: return FundamentalGroup::catalog_finite(gamma_star);
    case SpaceName::TorusSpace: return FundamentalGroup::free_abelian(dim);
    case SpaceName::FiniteSet: return FundamentalGroup::trivial();
    case SpaceName::ProductSpace: {
      std::vector<FundamentalGroup> fs;
      for (const auto& f : factors) fs.push_back(f.pi1());
      return FundamentalGroup::product(std::move(fs));
    }
    case SpaceName::Unidentified:
      throw UnsupportedQuotient("pi1 of unidentified space");
  }
  return FundamentalGroup::trivial();
}

HomogeneousSpace HomogeneousSpace::instantiate(std::int64_t n) const {
  HomogeneousSpace s = *this;
  if (!s.p.is_concrete()) s.p = SymInt::concrete(p.instantiate(n));
  if (!s.q.is_concrete()) s.q = SymInt::concrete(q.instantiate(n));
  s.gamma = gamma.instantiate(n);
  s.gamma_star = gamma_star.instantiate(n);
  for (auto& f : s.factors) f = f.instantiate(n);
  if (s.name == SpaceName::SpaceForm3 && s.presented_su2)
    return space_form3_su2(s.gamma_star);  // re-canonicalize S^3
  return s;
}

std::string HomogeneousSpace::str() const {
  if (!display_override.empty()) return display_override;
  switch (name) {
    case SpaceName::Sphere: return "S^" + std::to_string(dim);
    case SpaceName::RealProjective: return "RP^" + std::to_string(dim);
    case SpaceName::ComplexProjective2: return "CP^2";
    case SpaceName::Lens: return "L(" + p.str() + "," + q.str() + ")";
    case SpaceName::SpaceForm3: {
      if (generic_gamma)
        return presented_su2 ? "SU(2)/Gamma" : "SO(3)/Gamma";
      if (presented_su2) return "SU(2)/" + gamma_star.str();
      if (gamma.family == Family::Trivial) return "SO(3)/Z_1";
      return "SO(3)/" + gamma.str();
    }
    case SpaceName::SpaceForm5: return "S^5/Gamma";
    case SpaceName::TorusSpace: return "T^" + std::to_string(dim);
    case SpaceName::Point: return "pt";
    case SpaceName::FiniteSet: return p.str() + " points";
    case SpaceName::ProductSpace: {
      std::string s;
      for (size_t i = 0; i < factors.size(); ++i) {
        if (i) s += " x ";
        s += factors[i].str();
      }
      return s;
    }
    case SpaceName::Unidentified:
      return "unidentified^" + std::to_string(dim);
  }
  return "?";
}

bool operator==(const HomogeneousSpace& a, const HomogeneousSpace& b) {
  if (a.name != b.name || a.dim != b.dim) return false;
  switch (a.name) {
    case SpaceName::Lens: return a.p == b.p && a.q == b.q;
    case SpaceName::FiniteSet: return a.p == b.p;
    case SpaceName::SpaceForm3:
      if (a.generic_gamma != b.generic_gamma) return false;
      if (a.generic_gamma) return true;
      return a.gamma_star == b.gamma_star;  // presentation-independent space
    case SpaceName::ProductSpace: {
      if (a.factors.size() != b.factors.size()) return false;
      for (size_t i = 0; i < a.factors.size(); ++i)
        if (a.factors[i] != b.factors[i]) return false;
      return true;
    }
    default: return true;
  }
}

// ---------------------------------------------------------------------------

namespace {

// order ratio |K| / |H| for finite symbolic orders, when exactly divisible
std::optional<SymInt> order_ratio(const SymInt& k, const SymInt& h) {
  if (h.is_concrete() && k.is_concrete()) {
    if (h.value() == 0 || k.value() % h.value()) return std::nullopt;
    return SymInt::concrete(k.value() / h.value());
  }
  if (!h.divides(k)) return std::nullopt;
  if (h.is_concrete()) {
    if (k.coeff % h.value() || k.offset % h.value()) return std::nullopt;
    return SymInt{k.coeff / h.value(), k.offset / h.value(), k.min_param};
  }
  // both symbolic with h | k: the quotient is the constant k.coeff/h.coeff
  return SymInt::concrete(k.coeff / h.coeff);
}

bool meets_both_components(const EmbeddedSubgroup& k, const EmbeddedSubgroup& h) {
  // h <= k, k an O(2)/Pin2-type subgroup: does h hit the non-identity part?
  return !lattice_contains(h, k.identity_component());
}

HomogeneousSpace rot_quotient(const GroupSpec& parent, const EmbeddedSubgroup& h) {
  bool su2 = parent.family == Family::SU2;
  switch (h.group.family) {
    case Family::Trivial:
      return su2 ? HomogeneousSpace::sphere(3)
                 : HomogeneousSpace::space_form3_so3(GroupSpec::trivial());
    case Family::Cyclic:
    case Family::Dihedral:
    case Family::BinaryDihedral:
    case Family::Tetrahedral:
    case Family::Octahedral:
    case Family::Icosahedral:
    case Family::BinaryTetrahedral:
    case Family::BinaryOctahedral:
    case Family::BinaryIcosahedral:
      return su2 ? HomogeneousSpace::space_form3_su2(h.group)
                 : HomogeneousSpace::space_form3_so3(h.group);
    case Family::Circle:
      return HomogeneousSpace::sphere(2);
    case Family::O2:
    case Family::Pin2:
      return HomogeneousSpace::real_projective(2);
    case Family::SU2:
    case Family::SO3:
      return HomogeneousSpace::point();
    default:
      throw UnsupportedQuotient("quotient " + parent.str() + "/" + h.group.str());
  }
}

}  // namespace

HomogeneousSpace identify_quotient(const GroupSpec& g, const EmbeddedSubgroup& h) {
  if (h.parent != g) throw ContainmentError("subgroup has a different parent");
  if (h.is_full() || h.group == g) return HomogeneousSpace::point();
  switch (g.family) {
    case Family::SU2:
    case Family::SO3:
      return rot_quotient(g, h);
    case Family::SO4:
      if (h.group.family == Family::SO3) return HomogeneousSpace::sphere(3);
      if (h.group.family == Family::O3) return HomogeneousSpace::real_projective(3);
      throw UnsupportedQuotient("SO(4)/" + h.group.str());
    case Family::Circle:
    case Family::Torus: {
      int k = h.ann.cols;
      return HomogeneousSpace::torus_space(k - h.dim());
    }
    case Family::Product: {
      if (h.kind == EmbKind::GraphSub) {
        // (G1 x G2)/((K x 1).Delta L) has the same orbits as G1/K
        return identify_quotient(g.factors[0], h.parts[0]);
      }
      std::vector<HomogeneousSpace> fs;
      for (size_t i = 0; i < h.parts.size(); ++i)
        fs.push_back(identify_quotient(g.factors[i], h.parts[i]));
      return HomogeneousSpace::product_of(std::move(fs));
    }
    default:
      throw UnsupportedQuotient("quotient of " + g.str());
  }
}

HomogeneousSpace quotient_space(const EmbeddedSubgroup& k,
                                const EmbeddedSubgroup& h) {
  if (k.parent != h.parent) throw ParentMismatch();
  if (!lattice_contains(h, k))
    throw ContainmentError("fiber: H is not contained in K");
  if (k.is_full() || (k.kind == EmbKind::TorusSub && k.dim() == k.ann.cols))
    return identify_quotient(k.parent, h);

  switch (k.kind) {
    case EmbKind::Rot: {
      if (k.group.dim() == 0) {
        auto ko = k.order(), ho = h.order();
        if (!ko || !ho) throw UnsupportedQuotient("fiber of infinite order");
        auto r = order_ratio(*ko, *ho);
        if (!r) throw UnsupportedQuotient("fiber index is not constant");
        return HomogeneousSpace::finite_set(*r);
      }
      switch (k.group.family) {
        case Family::Circle:
          return HomogeneousSpace::sphere(1);
        case Family::O2:
        case Family::Pin2: {
          if (h.dim() == 1)  // circle or the whole group
            return h.group.dim() == 1 && h.group.is_connected()
                       ? HomogeneousSpace::sphere(0)
                       : HomogeneousSpace::point();
          return meets_both_components(k, h) ? HomogeneousSpace::sphere(1)
                                             : HomogeneousSpace::unidentified(1);
        }
        case Family::SO3:  // SO(3) block inside SO(4)
          if (k.parent.family == Family::SO4)
            return h.is_trivial() ? HomogeneousSpace::space_form3_so3(GroupSpec::trivial())
                                  : HomogeneousSpace::unidentified(3 - h.dim());
          throw UnsupportedQuotient("fiber " + k.group.str());
        case Family::O3: {
          // O(3)/SO(3) = S^0; finer cases are outside the catalog's needs
          if (h.group.family == Family::SO3) return HomogeneousSpace::sphere(0);
          return HomogeneousSpace::unidentified(3 - h.dim());
        }
        default:
          throw UnsupportedQuotient("fiber " + k.group.str());
      }
    }
    case EmbKind::TorusSub: {
      // quotient of a closed torus subgroup by a closed subgroup
      int d = k.dim() - h.dim();
      if (d == 0) {
        auto ko = k.order(), ho = h.order();
        if (ko && ho) {
          auto r = order_ratio(*ko, *ho);
          if (r) return HomogeneousSpace::finite_set(*r);
        }
        // equal dimension, infinite: component count ratio
        int ck = k.component_count(), ch = h.component_count();
        if (ck > 0 && ch > 0 && ck % ch == 0)
          return HomogeneousSpace::finite_set(SymInt::concrete(ck / ch));
        throw UnsupportedQuotient("torus fiber");
      }
      return HomogeneousSpace::torus_space(d);
    }
    case EmbKind::ProductSub: {
      if (h.kind != EmbKind::ProductSub)
        throw UnsupportedQuotient("mixed product fiber");
      std::vector<HomogeneousSpace> fs;
      for (size_t i = 0; i < k.parts.size(); ++i)
        fs.push_back(quotient_space(k.parts[i], h.parts[i]));
      return HomogeneousSpace::product_of(std::move(fs));
    }
    case EmbKind::GraphSub: {
      if (h.kind == EmbKind::GraphSub)
        return quotient_space(k.parts[0], h.parts[0]);
      throw UnsupportedQuotient("graph fiber");
    }
    default:
      throw UnsupportedQuotient("fiber of full group");
  }
}

bool is_admissible_fiber(const HomogeneousSpace& space) {
  return space.positively_curved() && space.dim <= 5;
}

FundamentalGroup pi1_of_quotient(const GroupSpec& g, const EmbeddedSubgroup& h) {
  switch (g.family) {
    case Family::Circle:
    case Family::Torus: {
      int k = h.ann.cols;
      if (h.dim() == 0 && h.is_trivial())
        return FundamentalGroup::free_abelian(k);
      // pi1(T^k/S) is free of rank k - dim S; expose it as a lattice
      // quotient of Z^k by the slopes of S's identity component.
      auto s0 = h.identity_component();
      intlat::Mat slopes = intlat::kernel(s0.ann);
      return FundamentalGroup::lattice_quotient(k, slopes);
    }
    default: {
      auto space = identify_quotient(g, h);
      return space.pi1();
    }
  }
}

}  // namespace cohom1
