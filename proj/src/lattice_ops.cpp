#include "cohom1/lattice_ops.hpp"

#include <algorithm>
#include <cassert>

namespace cohom1 {

namespace {

bool even_sym(const SymInt& s) { return s.coeff % 2 == 0 && s.offset % 2 == 0; }

bool concrete_eq(const SymInt& s, std::int64_t v) {
  return s.is_concrete() && s.value() == v;
}

bool is_su2(const GroupSpec& g) { return g.family == Family::SU2; }

// containment among rotation subgroups of a common SU(2) parent
bool rot_contains_su2(const EmbeddedSubgroup& a, const EmbeddedSubgroup& b) {
  const GroupSpec &ga = a.group, &gb = b.group;
  if (gb.family == Family::SU2) return true;
  switch (gb.family) {
    case Family::Cyclic:
      if (ga.family != Family::Cyclic) return false;
      if (concrete_eq(ga.param, 2)) return ga.param.divides(gb.param);  // center
      return a.main == b.main && ga.param.divides(gb.param);
    case Family::BinaryDihedral: {
      if (ga.family == Family::Cyclic) {
        if (concrete_eq(ga.param, 2)) return true;  // -1 is always present
        if (a.main == b.main) return ga.param.divides(gb.param.times(2));
        if (concrete_eq(ga.param, 4))
          return a.main == b.sec || even_sym(gb.param);
        return false;
      }
      if (ga.family == Family::BinaryDihedral) {
        if (a.main != b.main || !ga.param.divides(gb.param)) return false;
        return a.sec == b.sec || even_sym(gb.param);
      }
      return false;
    }
    case Family::BinaryTetrahedral:
    case Family::BinaryIcosahedral: {
      if (ga.family == Family::Cyclic)
        return concrete_eq(ga.param, 2) || concrete_eq(ga.param, 4);
      if (ga.family == Family::BinaryDihedral) return concrete_eq(ga.param, 2);
      if (gb.family == Family::BinaryIcosahedral)
        return ga.family == Family::BinaryTetrahedral;
      return false;
    }
    case Family::BinaryOctahedral: {
      if (ga.family == Family::Cyclic)
        return concrete_eq(ga.param, 2) || concrete_eq(ga.param, 4) ||
               concrete_eq(ga.param, 8);
      if (ga.family == Family::BinaryDihedral)
        return concrete_eq(ga.param, 2) || concrete_eq(ga.param, 4);
      return ga.family == Family::BinaryTetrahedral;
    }
    case Family::Circle:
      if (ga.family != Family::Cyclic) return ga.family == Family::Circle && a.main == b.main;
      return concrete_eq(ga.param, 2) || a.main == b.main;
    case Family::Pin2: {
      if (ga.family == Family::Cyclic) {
        if (concrete_eq(ga.param, 2)) return true;
        if (a.main == b.main) return true;
        return concrete_eq(ga.param, 4);  // order-4 across the components
      }
      if (ga.family == Family::BinaryDihedral) return a.main == b.main;
      if (ga.family == Family::Circle) return a.main == b.main;
      if (ga.family == Family::Pin2) return a.main == b.main;
      return false;
    }
    default:
      return false;
  }
}

// containment among rotation subgroups of a common SO(3) parent
bool rot_contains_so3(const EmbeddedSubgroup& a, const EmbeddedSubgroup& b) {
  const GroupSpec &ga = a.group, &gb = b.group;
  if (gb.family == Family::SO3) return true;
  switch (gb.family) {
    case Family::Cyclic:
      return ga.family == Family::Cyclic && a.main == b.main &&
             ga.param.divides(gb.param);
    case Family::Dihedral: {
      if (ga.family == Family::Cyclic) {
        if (a.main == b.main) return ga.param.divides(gb.param);
        if (concrete_eq(ga.param, 2))
          return a.main == b.sec || even_sym(gb.param);
        return false;
      }
      if (ga.family == Family::Dihedral) {
        if (a.main != b.main || !ga.param.divides(gb.param)) return false;
        return a.sec == b.sec || even_sym(gb.param);
      }
      return false;
    }
    case Family::Tetrahedral:
    case Family::Icosahedral: {
      if (ga.family == Family::Cyclic) return concrete_eq(ga.param, 2);
      if (ga.family == Family::Dihedral) return concrete_eq(ga.param, 2);
      if (gb.family == Family::Icosahedral)
        return ga.family == Family::Tetrahedral;
      return false;
    }
    case Family::Octahedral: {
      if (ga.family == Family::Cyclic)
        return concrete_eq(ga.param, 2) || concrete_eq(ga.param, 4);
      if (ga.family == Family::Dihedral)
        return concrete_eq(ga.param, 2) || concrete_eq(ga.param, 4);
      return ga.family == Family::Tetrahedral;
    }
    case Family::Circle:
      return ga.family == Family::Cyclic ? a.main == b.main
                                         : (ga.family == Family::Circle &&
                                            a.main == b.main);
    case Family::O2: {
      if (ga.family == Family::Cyclic) {
        if (a.main == b.main) return true;
        return concrete_eq(ga.param, 2);  // half-turn about a perpendicular axis
      }
      if (ga.family == Family::Dihedral) return a.main == b.main;
      if (ga.family == Family::Circle || ga.family == Family::O2)
        return a.main == b.main;
      return false;
    }
    default:
      return false;
  }
}

bool rot_contains_so4(const EmbeddedSubgroup& a, const EmbeddedSubgroup& b) {
  if (b.group.family == Family::SO4) return true;
  if (a.group.family == Family::Trivial) return true;
  if (b.group.family == Family::O3)
    return a.group.family == Family::SO3 || a.group.family == Family::O3;
  if (b.group.family == Family::SO3) return a.group.family == Family::SO3;
  return false;
}

}  // namespace

bool lattice_contains(const EmbeddedSubgroup& sub, const EmbeddedSubgroup& sup) {
  if (sub.parent != sup.parent) throw ParentMismatch();
  if (sup.kind == EmbKind::Full && sup.parent.family != Family::Torus) return true;
  if (sub.is_trivial()) {
    if (sup.kind == EmbKind::GraphSub) return sub.dim() == 0;
    return true;
  }
  if (sub.kind == EmbKind::Full && sub.parent.family != Family::Torus)
    return sup.kind == EmbKind::Full;

  switch (sub.parent.family) {
    case Family::SU2:
    case Family::SO3: {
      const auto& p = sub.parent;
      EmbeddedSubgroup s = sub, t = sup;
      if (s.kind == EmbKind::Full) s.group = p;
      if (t.kind == EmbKind::Full) t.group = p;
      return is_su2(p) ? rot_contains_su2(s, t) : rot_contains_so3(s, t);
    }
    case Family::SO4:
      return rot_contains_so4(sub, sup);
    case Family::Circle:
    case Family::Torus:
      return intlat::lattice_subset(sup.ann, sub.ann);
    case Family::Product: {
      if (sub.kind == EmbKind::ProductSub && sup.kind == EmbKind::ProductSub) {
        for (size_t i = 0; i < sub.parts.size(); ++i)
          if (!lattice_contains(sub.parts[i], sup.parts[i])) return false;
        return true;
      }
      if (sub.kind == EmbKind::GraphSub && sup.kind == EmbKind::GraphSub) {
        if (!sub.parts[1].exact_equal(sup.parts[1]) ||
            !sub.parts[2].exact_equal(sup.parts[2]))
          throw CatalogError("graph containment needs matching extensions");
        return lattice_contains(sub.parts[0], sup.parts[0]);
      }
      if (sub.kind == EmbKind::ProductSub && sup.kind == EmbKind::GraphSub) {
        // (A x B) in (K x 1)Delta(L) forces B trivial and A in K
        for (size_t i = 1; i < sub.parts.size(); ++i)
          if (!sub.parts[i].is_trivial()) return false;
        return lattice_contains(sub.parts[0], sup.parts[0]);
      }
      if (sub.kind == EmbKind::GraphSub && sup.kind == EmbKind::ProductSub) {
        // (K x 1)Delta(L) in (A x B): K.L in A and the quotient image in B
        EmbeddedSubgroup kl = subgroup_generated(sub.parts[0], sub.parts[1]);
        if (!lattice_contains(kl, sup.parts[0])) return false;
        for (size_t i = 1; i < sup.parts.size(); ++i)
          if (!sup.parts[i].is_full() &&
              !(sup.parts[i].kind == EmbKind::TorusSub &&
                sup.parts[i].dim() == sup.parts[i].parent.dim()))
            return false;
        return true;
      }
      throw CatalogError("unsupported product containment");
    }
    default:
      throw CatalogError("containment: unsupported parent " + sub.parent.str());
  }
}

namespace {

std::optional<EmbeddedSubgroup> rot_generated_rules(const EmbeddedSubgroup& a,
                                                    const EmbeddedSubgroup& b) {
  const GroupSpec& p = a.parent;
  const bool su2 = is_su2(p);
  const GroupSpec &ga = a.group, &gb = b.group;
  // aligned cyclic pair
  if (ga.family == Family::Cyclic && gb.family == Family::Cyclic) {
    bool central_a = su2 && concrete_eq(ga.param, 2);
    bool central_b = su2 && concrete_eq(gb.param, 2);
    if (a.main == b.main || central_a || central_b) {
      Ax main = central_a ? b.main : a.main;
      auto l = ga.param.lcm(gb.param);
      if (l) return EmbeddedSubgroup::rot(p, GroupSpec::cyclic(*l), main);
      return std::nullopt;
    }
    if (!su2 && concrete_eq(gb.param, 2))
      return EmbeddedSubgroup::rot(p, GroupSpec::dihedral(ga.param), a.main, b.main);
    if (!su2 && concrete_eq(ga.param, 2))
      return EmbeddedSubgroup::rot(p, GroupSpec::dihedral(gb.param), b.main, a.main);
    if (su2 && concrete_eq(gb.param, 4)) {
      // <Z_k about one axis, an order-4 element about a perpendicular axis>
      const SymInt& k = ga.param;
      if (even_sym(k))
        return EmbeddedSubgroup::rot(
            p, GroupSpec::binary_dihedral(SymInt{k.coeff / 2, k.offset / 2, k.min_param}),
            a.main, b.main);
      if (k.coeff % 2 == 0)  // odd for every n
        return EmbeddedSubgroup::rot(p, GroupSpec::binary_dihedral(k), a.main, b.main);
      return std::nullopt;
    }
    if (su2 && concrete_eq(ga.param, 4)) {
      EmbeddedSubgroup b2 = b, a2 = a;
      return rot_generated_rules(b2, a2);
    }
    return std::nullopt;
  }
  // cyclic with dihedral, same main axis
  auto dihedral_fam = su2 ? Family::BinaryDihedral : Family::Dihedral;
  if (ga.family == Family::Cyclic && gb.family == dihedral_fam &&
      a.main == b.main) {
    SymInt circle_b = su2 ? gb.param.times(2) : gb.param;
    auto l = ga.param.lcm(circle_b);
    if (!l) return std::nullopt;
    SymInt n = su2 ? SymInt{l->coeff / 2, l->offset / 2, l->min_param} : *l;
    if (su2 && (l->coeff % 2 != 0 || l->offset % 2 != 0)) return std::nullopt;
    return EmbeddedSubgroup::rot(p, GroupSpec{dihedral_fam, n}, b.main, b.sec);
  }
  if (gb.family == Family::Cyclic && ga.family == dihedral_fam)
    return rot_generated_rules(b, a);
  // aligned dihedral pair
  if (ga.family == dihedral_fam && gb.family == dihedral_fam &&
      a.main == b.main && a.sec == b.sec) {
    auto l = ga.param.lcm(gb.param);
    if (!l) return std::nullopt;
    return EmbeddedSubgroup::rot(p, GroupSpec{dihedral_fam, *l}, a.main, a.sec);
  }
  // continuous cases
  auto line_fam = su2 ? Family::Pin2 : Family::O2;
  auto is_line_group = [&](const GroupSpec& g) {
    return g.family == Family::Circle || g.family == line_fam;
  };
  if (is_line_group(ga) || is_line_group(gb)) {
    const EmbeddedSubgroup& cont = is_line_group(ga) ? a : b;
    const EmbeddedSubgroup& other = is_line_group(ga) ? b : a;
    EmbeddedSubgroup line = EmbeddedSubgroup::rot(p, GroupSpec{line_fam}, cont.main);
    if (lattice_contains(other, line)) {
      if (lattice_contains(other, cont)) return cont;  // should have been caught
      return line;  // adding anything of O(2)-type outside the circle gives O(2)
    }
    return EmbeddedSubgroup::full(p);  // no common invariant line
  }
  return std::nullopt;
}

}  // namespace

EmbeddedSubgroup subgroup_generated(const EmbeddedSubgroup& a,
                                    const EmbeddedSubgroup& b) {
  if (a.parent != b.parent) throw ParentMismatch();
  if (lattice_contains(a, b)) return b;
  if (lattice_contains(b, a)) return a;

  switch (a.parent.family) {
    case Family::SU2:
    case Family::SO3: {
      if (auto r = rot_generated_rules(a, b)) return *r;
      if (!a.has_symbolic_param() && !b.has_symbolic_param() &&
          a.group.dim() == 0 && b.group.dim() == 0) {
        auto res = oracle::generated(materialize(a), materialize(b));
        if (res.finite) return identify_in_parent(a.parent, res.set);
        if (res.cont == oracle::ContKind::FullGroup)
          return EmbeddedSubgroup::full(a.parent);
        throw UnrepresentableSubgroup();
      }
      throw UnrepresentableSubgroup();
    }
    case Family::SO4: {
      // catalog pairs: blocks generate at most O(3) or SO(4)
      if ((a.group.family == Family::SO3 && b.group.family == Family::O3) ||
          (a.group.family == Family::O3 && b.group.family == Family::SO3))
        return EmbeddedSubgroup::rot(a.parent, GroupSpec::o3());
      return EmbeddedSubgroup::full(a.parent);
    }
    case Family::Circle:
    case Family::Torus:
      return EmbeddedSubgroup::torus_sub(
          a.ann.cols, intlat::lattice_intersect(a.ann, b.ann));
    case Family::Product: {
      if (a.kind == EmbKind::ProductSub && b.kind == EmbKind::ProductSub) {
        std::vector<EmbeddedSubgroup> fs;
        for (size_t i = 0; i < a.parts.size(); ++i)
          fs.push_back(subgroup_generated(a.parts[i], b.parts[i]));
        return EmbeddedSubgroup::product(a.parent, std::move(fs));
      }
      if (a.kind == EmbKind::GraphSub && b.kind == EmbKind::GraphSub &&
          a.parts[1].exact_equal(b.parts[1]) && a.parts[2].exact_equal(b.parts[2]))
        return EmbeddedSubgroup::graph(subgroup_generated(a.parts[0], b.parts[0]),
                                       a.parts[1], a.parts[2]);
      throw UnrepresentableSubgroup();
    }
    default:
      throw UnrepresentableSubgroup();
  }
}

NormalizerInfo normalizer(const EmbeddedSubgroup& h) {
  const GroupSpec& p = h.parent;
  auto full = EmbeddedSubgroup::full(p);
  auto triv = EmbeddedSubgroup::trivial_in(p);

  if (h.kind == EmbKind::Full && p.family != Family::Torus) {
    EmbeddedSubgroup n0 = p.is_connected() ? full : full.identity_component();
    return {full, p.is_connected() ? full : n0, GroupSpec::trivial()};
  }

  switch (p.family) {
    case Family::SO3: {
      switch (h.group.family) {
        case Family::Trivial:
          return {full, full, GroupSpec::so3()};
        case Family::Cyclic: {
          auto o2 = EmbeddedSubgroup::rot(p, GroupSpec::o2(), h.main);
          auto so2 = EmbeddedSubgroup::rot(p, GroupSpec::circle(), h.main);
          return {o2, so2, GroupSpec::o2()};  // O(2)/Z_n is again O(2)
        }
        case Family::Dihedral: {
          if (concrete_eq(h.group.param, 2))
            return {EmbeddedSubgroup::rot(p, GroupSpec::octahedral()), triv,
                    GroupSpec::dihedral(3)};
          auto n = EmbeddedSubgroup::rot(
              p, GroupSpec::dihedral(h.group.param.times(2)), h.main, h.sec);
          return {n, triv, GroupSpec::cyclic(2)};
        }
        case Family::Tetrahedral:
          return {EmbeddedSubgroup::rot(p, GroupSpec::octahedral()), triv,
                  GroupSpec::cyclic(2)};
        case Family::Octahedral:
          return {EmbeddedSubgroup::rot(p, GroupSpec::octahedral()), triv,
                  GroupSpec::trivial()};
        case Family::Icosahedral:
          return {EmbeddedSubgroup::rot(p, GroupSpec::icosahedral()), triv,
                  GroupSpec::trivial()};
        case Family::Circle: {
          auto o2 = EmbeddedSubgroup::rot(p, GroupSpec::o2(), h.main);
          auto so2 = EmbeddedSubgroup::rot(p, GroupSpec::circle(), h.main);
          return {o2, so2, GroupSpec::cyclic(2)};
        }
        case Family::O2: {
          auto o2 = EmbeddedSubgroup::rot(p, GroupSpec::o2(), h.main);
          auto so2 = EmbeddedSubgroup::rot(p, GroupSpec::circle(), h.main);
          return {o2, so2, GroupSpec::trivial()};
        }
        default:
          throw CatalogError("normalizer: unsupported SO(3) subgroup");
      }
    }
    case Family::SU2: {
      switch (h.group.family) {
        case Family::Trivial:
          return {full, full, GroupSpec::su2()};
        case Family::Cyclic: {
          if (concrete_eq(h.group.param, 2)) return {full, full, GroupSpec::so3()};
          auto pin = EmbeddedSubgroup::rot(p, GroupSpec::pin2(), h.main);
          auto cir = EmbeddedSubgroup::rot(p, GroupSpec::circle(), h.main);
          return {pin, cir, GroupSpec::o2()};  // Pin2/Z_n is abstractly O(2)
        }
        case Family::BinaryDihedral: {
          if (concrete_eq(h.group.param, 2))
            return {EmbeddedSubgroup::rot(p, GroupSpec::binary_octahedral()), triv,
                    GroupSpec::dihedral(3)};
          auto n = EmbeddedSubgroup::rot(
              p, GroupSpec::binary_dihedral(h.group.param.times(2)), h.main, h.sec);
          return {n, triv, GroupSpec::cyclic(2)};
        }
        case Family::BinaryTetrahedral:
          return {EmbeddedSubgroup::rot(p, GroupSpec::binary_octahedral()), triv,
                  GroupSpec::cyclic(2)};
        case Family::BinaryOctahedral:
          return {EmbeddedSubgroup::rot(p, GroupSpec::binary_octahedral()), triv,
                  GroupSpec::trivial()};
        case Family::BinaryIcosahedral:
          return {EmbeddedSubgroup::rot(p, GroupSpec::binary_icosahedral()), triv,
                  GroupSpec::trivial()};
        case Family::Circle: {
          auto pin = EmbeddedSubgroup::rot(p, GroupSpec::pin2(), h.main);
          auto cir = EmbeddedSubgroup::rot(p, GroupSpec::circle(), h.main);
          return {pin, cir, GroupSpec::cyclic(2)};
        }
        case Family::Pin2: {
          auto pin = EmbeddedSubgroup::rot(p, GroupSpec::pin2(), h.main);
          auto cir = EmbeddedSubgroup::rot(p, GroupSpec::circle(), h.main);
          return {pin, cir, GroupSpec::trivial()};
        }
        default:
          throw CatalogError("normalizer: unsupported SU(2) subgroup");
      }
    }
    case Family::SO4: {
      // N(SO(3)) = N(O(3)) = O(3) embedded; quotient O(3)/SO(3) = Z_2
      if (h.group.family == Family::SO3)
        return {EmbeddedSubgroup::rot(p, GroupSpec::o3()),
                EmbeddedSubgroup::rot(p, GroupSpec::so3()), GroupSpec::cyclic(2)};
      if (h.group.family == Family::O3)
        return {EmbeddedSubgroup::rot(p, GroupSpec::o3()),
                EmbeddedSubgroup::rot(p, GroupSpec::so3()), GroupSpec::trivial()};
      if (h.group.family == Family::Trivial) return {full, full, GroupSpec::so4()};
      throw CatalogError("normalizer: unsupported SO(4) subgroup");
    }
    case Family::Circle:
    case Family::Torus: {
      int k = h.ann.cols;
      int d = k - h.dim();
      GroupSpec weyl = d == 0 ? GroupSpec::trivial()
                              : (d == 1 ? GroupSpec::circle() : GroupSpec::torus(d));
      return {full, full, weyl};
    }
    case Family::Product: {
      if (h.kind != EmbKind::ProductSub)
        throw CatalogError("normalizer: unsupported product subgroup");
      std::vector<EmbeddedSubgroup> ns, n0s;
      std::vector<GroupSpec> weyls;
      for (const auto& part : h.parts) {
        auto ni = normalizer(part);
        ns.push_back(ni.normalizer);
        n0s.push_back(ni.identity_component);
        if (ni.weyl_like_quotient.family != Family::Trivial)
          weyls.push_back(ni.weyl_like_quotient);
      }
      GroupSpec weyl = weyls.empty()
                           ? GroupSpec::trivial()
                           : (weyls.size() == 1 ? weyls[0] : GroupSpec::product(weyls));
      return {EmbeddedSubgroup::product(p, std::move(ns)),
              EmbeddedSubgroup::product(p, std::move(n0s)), weyl};
    }
    default:
      throw CatalogError("normalizer: unsupported parent " + p.str());
  }
}

EmbeddedSubgroup conjugate(const EmbeddedSubgroup& sub,
                           const ConjugationWitness& by) {
  switch (by.kind) {
    case ConjugationWitness::Kind::Identity:
      return sub;
    case ConjugationWitness::Kind::AxisTurn: {
      if (sub.parent.family == Family::Torus ||
          sub.parent.family == Family::Circle)
        return sub;  // abelian parent
      if (sub.parent.family == Family::SO4) return sub;    // blocks are stable
      auto map_axis = [&by](Ax a) {
        if (by.quarter_turns % 2 == 0 || a == by.axis) return a;
        // quarter turn about one axis swaps the two other coordinate lines
        switch (by.axis) {
          case Ax::X: return a == Ax::Y ? Ax::Z : Ax::Y;
          case Ax::Y: return a == Ax::X ? Ax::Z : Ax::X;
          case Ax::Z: return a == Ax::X ? Ax::Y : Ax::X;
        }
        return a;
      };
      EmbeddedSubgroup out = sub;
      if (out.kind == EmbKind::Rot) {
        out.main = map_axis(out.main);
        out.sec = map_axis(out.sec);
      }
      return out;
    }
    case ConjugationWitness::Kind::Element: {
      if (sub.parent.family == Family::Torus ||
          sub.parent.family == Family::Circle)
        return sub;
      if (sub.kind != EmbKind::Rot || sub.has_symbolic_param())
        throw UnsupportedWitness();
      if (sub.group.dim() > 0) {
        // conjugating a circle-type subgroup moves its axis line
        auto img = oracle::rotate(by.q, oracle::axis_vec(sub.main));
        for (Ax a : {Ax::X, Ax::Y, Ax::Z}) {
          auto v = oracle::axis_vec(a);
          double cx = img[1] * v[2] - img[2] * v[1];
          double cy = img[2] * v[0] - img[0] * v[2];
          double cz = img[0] * v[1] - img[1] * v[0];
          if (cx * cx + cy * cy + cz * cz < 1e-10) {
            EmbeddedSubgroup out = sub;
            out.main = a;
            return out;
          }
        }
        throw UnsupportedWitness();
      }
      auto set = oracle::conjugate_set(materialize(sub), by.q);
      auto out = identify_in_parent(sub.parent, set);
      if (out.kind == EmbKind::Rot && out.group.dim() == 0 &&
          !set_equal(materialize(out), set))
        throw UnsupportedWitness();
      return out;
    }
    case ConjugationWitness::Kind::Components: {
      if (sub.kind == EmbKind::ProductSub) {
        std::vector<EmbeddedSubgroup> fs;
        for (size_t i = 0; i < sub.parts.size(); ++i)
          fs.push_back(conjugate(sub.parts[i], by.parts[i]));
        return EmbeddedSubgroup::product(sub.parent, std::move(fs));
      }
      if (sub.kind == EmbKind::GraphSub)
        return EmbeddedSubgroup::graph(conjugate(sub.parts[0], by.parts[0]),
                                       conjugate(sub.parts[1], by.parts[0]),
                                       conjugate(sub.parts[2], by.parts[0]));
      throw UnsupportedWitness();
    }
  }
  throw UnsupportedWitness();
}

GroupSpec normal_core(const GroupSpec& g, const EmbeddedSubgroup& h) {
  switch (g.family) {
    case Family::SO3:
      return h.is_full() ? GroupSpec::so3() : GroupSpec::trivial();
    case Family::SU2: {
      if (h.is_full()) return GroupSpec::su2();
      switch (h.group.family) {
        case Family::Cyclic: {
          const SymInt& n = h.group.param;
          if (n.is_concrete())
            return n.value() % 2 == 0 ? GroupSpec::cyclic(2) : GroupSpec::trivial();
          if (even_sym(n)) return GroupSpec::cyclic(2);
          if (n.coeff % 2 == 0) return GroupSpec::trivial();  // odd for all n
          return GroupSpec::cyclic(2);  // parity unknown: at most the center
        }
        case Family::Trivial:
          return GroupSpec::trivial();
        default:
          // every other catalog subgroup of SU(2) contains -1
          return GroupSpec::cyclic(2);
      }
    }
    case Family::SO4:
      if (h.is_full()) return GroupSpec::so4();
      if (h.group.family == Family::O3) return GroupSpec::cyclic(2);  // {+-I}
      return GroupSpec::trivial();
    case Family::Circle:
    case Family::Torus:
      return h.group;  // abelian: the subgroup itself
    case Family::Product: {
      if (h.kind == EmbKind::GraphSub) return GroupSpec::trivial();
      std::vector<GroupSpec> cores;
      for (size_t i = 0; i < h.parts.size(); ++i) {
        GroupSpec c = normal_core(g.factors[i], h.parts[i]);
        if (c.family != Family::Trivial) cores.push_back(c);
      }
      if (cores.empty()) return GroupSpec::trivial();
      return cores.size() == 1 ? cores[0] : GroupSpec::product(cores);
    }
    default:
      return h.group;  // abelian-ish small parents
  }
}

Effectiveness effectiveness_class(const GroupSpec& g, const EmbeddedSubgroup& h) {
  GroupSpec core = normal_core(g, h);
  if (core.family == Family::Trivial) return Effectiveness::Effective;
  if (core.is_finite()) return Effectiveness::AlmostEffective;
  return Effectiveness::Ineffective;
}

std::vector<ConjugationWitness> normalizer_component_witnesses(
    const EmbeddedSubgroup& h) {
  std::vector<ConjugationWitness> out;
  out.push_back(ConjugationWitness::identity());
  if (h.parent.family == Family::Torus || h.parent.family == Family::Circle)
    return out;
  if (h.parent.family == Family::Product) {
    if (h.kind != EmbKind::ProductSub) return out;
    std::vector<std::vector<ConjugationWitness>> per;
    for (const auto& part : h.parts) per.push_back(normalizer_component_witnesses(part));
    // cartesian product
    std::vector<ConjugationWitness> res;
    std::vector<size_t> idx(per.size(), 0);
    while (true) {
      std::vector<ConjugationWitness> tuple;
      for (size_t i = 0; i < per.size(); ++i) tuple.push_back(per[i][idx[i]]);
      res.push_back(ConjugationWitness::components(tuple));
      size_t i = 0;
      while (i < per.size() && ++idx[i] == per[i].size()) idx[i++] = 0;
      if (i == per.size()) break;
    }
    return res;
  }
  NormalizerInfo n = normalizer(h);
  if (n.normalizer.is_full() || n.normalizer.kind != EmbKind::Rot) {
    // connected full parents contribute only the identity
    if (n.normalizer.parent.is_connected()) return out;
  }
  if (n.normalizer.kind == EmbKind::Rot && n.normalizer.group.dim() == 1) {
    // O(2)/Pin2-type normalizer: one extra component, a half-turn about a
    // perpendicular axis
    if (n.normalizer.group.family != Family::Circle) {
      Ax perp = n.normalizer.main == Ax::Z ? Ax::X
                                           : (n.normalizer.main == Ax::X ? Ax::Y : Ax::Z);
      out.push_back(ConjugationWitness::axis_turn(perp, 2));
    }
    return out;
  }
  if (n.normalizer.kind == EmbKind::Rot && n.normalizer.group.dim() == 0 &&
      !n.normalizer.has_symbolic_param() && !h.has_symbolic_param()) {
    auto nset = materialize(n.normalizer);
    auto hset = h.is_trivial()
                    ? oracle::materialize_su2(GroupSpec::trivial())
                    : materialize(h);
    out.clear();
    for (const auto& q : oracle::coset_reps(nset, hset))
      out.push_back(oracle::quat_close(q, oracle::Quat::one())
                        ? ConjugationWitness::identity()
                        : ConjugationWitness::element(q));
    return out;
  }
  return out;
}

}  // namespace cohom1
