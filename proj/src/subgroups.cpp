#include "cohom1/subgroups.hpp"

#include <algorithm>
#include <cassert>
#include <functional>

namespace cohom1 {

namespace {

bool is_rot_parent(const GroupSpec& g) {
  return g.family == Family::SU2 || g.family == Family::SO3;
}

std::string axis_name(Ax a) {
  switch (a) {
    case Ax::X: return "x";
    case Ax::Y: return "y";
    case Ax::Z: return "z";
  }
  return "?";
}

}  // namespace

namespace {
int torus_rank_of(const GroupSpec& g) {
  if (g.family == Family::Circle) return 1;
  if (g.family == Family::Torus) return static_cast<int>(g.param.value());
  return -1;
}
}  // namespace

EmbeddedSubgroup EmbeddedSubgroup::full(const GroupSpec& g) {
  EmbeddedSubgroup s;
  s.parent = g;
  s.group = g;
  if (int k = torus_rank_of(g); k > 0) {
    s.kind = EmbKind::TorusSub;
    s.ann = intlat::Mat(0, k);
  } else {
    s.kind = EmbKind::Full;
  }
  return s;
}

EmbeddedSubgroup EmbeddedSubgroup::trivial_in(const GroupSpec& g) {
  if (int k = torus_rank_of(g); k > 0) {
    intlat::Mat id(k, k);
    for (int i = 0; i < k; ++i) id.at(i, i) = 1;
    return torus_sub(k, id);
  }
  if (g.family == Family::Product) {
    std::vector<EmbeddedSubgroup> fs;
    for (const auto& f : g.factors) fs.push_back(trivial_in(f));
    return product(g, std::move(fs));
  }
  EmbeddedSubgroup s;
  s.parent = g;
  s.group = GroupSpec::trivial();
  s.kind = EmbKind::Rot;
  return s;
}

EmbeddedSubgroup EmbeddedSubgroup::rot(const GroupSpec& parent,
                                       const GroupSpec& sub, Ax main, Ax sec) {
  if (parent.family == Family::SO4) {
    // standard blocks only: SO(3) upper block and O(3) as (A, det A)
    if (sub.family != Family::SO3 && sub.family != Family::O3 &&
        sub.family != Family::Trivial)
      throw CatalogError("SO(4) subgroup outside the catalog");
  } else if (!is_rot_parent(parent) && parent.family != Family::Circle &&
             parent.family != Family::O2 && parent.family != Family::Pin2)
    throw CatalogError("rot subgroup needs an SU(2)/SO(3)-type parent");
  EmbeddedSubgroup s;
  s.parent = parent;
  s.group = sub;
  s.kind = EmbKind::Rot;
  s.main = main;
  s.sec = sec;
  if (sub == parent) s.kind = EmbKind::Full;
  // Canonical degenerate forms: D_1 is the half-turn group about the
  // secondary axis; D*_1 is the order-4 cyclic group about it.
  if (sub.family == Family::Dihedral && sub.param.is_concrete() &&
      sub.param.value() == 1) {
    s.group = GroupSpec::cyclic(2);
    s.main = sec;
  } else if (sub.family == Family::BinaryDihedral && sub.param.is_concrete() &&
             sub.param.value() == 1) {
    s.group = GroupSpec::cyclic(4);
    s.main = sec;
  } else if (sub.family == Family::Cyclic && sub.param.is_concrete() &&
             sub.param.value() == 1) {
    s.group = GroupSpec::trivial();
  }
  if (main == sec && (s.group.family == Family::Dihedral ||
                      s.group.family == Family::BinaryDihedral))
    throw CatalogError("dihedral subgroup needs distinct axes");
  return s;
}

EmbeddedSubgroup EmbeddedSubgroup::torus_sub(int k, intlat::Mat annihilator) {
  EmbeddedSubgroup s;
  s.parent = k == 1 ? GroupSpec::circle() : GroupSpec::torus(k);
  s.kind = EmbKind::TorusSub;
  s.ann = intlat::hnf(std::move(annihilator));
  auto inv = intlat::snf_invariants(s.ann);
  int r = static_cast<int>(inv.size());
  std::int64_t torsion = 1;
  for (auto d : inv) torsion *= d;
  int dim = k - r;
  if (dim == 0) {
    if (torsion == 1) s.group = GroupSpec::trivial();
    else s.group = GroupSpec::cyclic(torsion);  // cyclic or a product; order-true
  } else if (dim == 1 && torsion == 1) {
    s.group = GroupSpec::circle();
  } else if (dim == k) {
    s.group = GroupSpec::torus(k);
  } else {
    s.group = torsion == 1 ? (dim == 1 ? GroupSpec::circle() : GroupSpec::torus(dim))
                           : GroupSpec::product({dim == 1 ? GroupSpec::circle()
                                                          : GroupSpec::torus(dim),
                                                 GroupSpec::cyclic(torsion)});
  }
  return s;
}

EmbeddedSubgroup EmbeddedSubgroup::torus_circle(int k,
                                                std::vector<std::int64_t> slope) {
  std::int64_t g = 0;
  for (auto v : slope) g = intlat::gcd(g, v);
  if (g == 0) throw CatalogError("zero circle slope");
  for (auto& v : slope) v /= g;
  // canonical sign: first nonzero entry positive
  for (auto v : slope) {
    if (v == 0) continue;
    if (v < 0)
      for (auto& w : slope) w = -w;
    break;
  }
  intlat::Mat m(1, k);
  for (int c = 0; c < k; ++c) m.at(0, c) = slope[c];
  return torus_sub(k, intlat::kernel(m));
}

EmbeddedSubgroup EmbeddedSubgroup::torus_cyclic(int k,
                                                std::vector<std::int64_t> num,
                                                std::int64_t den) {
  // annihilator = { a : <a, num> = 0 mod den }
  intlat::Mat row(1, k + 1);
  for (int c = 0; c < k; ++c) row.at(0, c) = num[c];
  row.at(0, k) = den;
  intlat::Mat ker = intlat::kernel(row);
  intlat::Mat proj(ker.rows, k);
  for (int r = 0; r < ker.rows; ++r)
    for (int c = 0; c < k; ++c) proj.at(r, c) = ker.at(r, c);
  return torus_sub(k, proj);
}

EmbeddedSubgroup EmbeddedSubgroup::product(const GroupSpec& parent,
                                           std::vector<EmbeddedSubgroup> fs) {
  assert(parent.family == Family::Product);
  assert(parent.factors.size() == fs.size());
  EmbeddedSubgroup s;
  s.parent = parent;
  s.kind = EmbKind::ProductSub;
  s.parts = std::move(fs);
  std::vector<GroupSpec> nontrivial;
  for (const auto& p : s.parts)
    if (!(p.group.family == Family::Trivial)) nontrivial.push_back(p.group);
  if (nontrivial.empty()) s.group = GroupSpec::trivial();
  else if (nontrivial.size() == 1) s.group = nontrivial[0];
  else s.group = GroupSpec::product(nontrivial);
  return s;
}

EmbeddedSubgroup EmbeddedSubgroup::graph(EmbeddedSubgroup base,
                                         EmbeddedSubgroup ell,
                                         EmbeddedSubgroup ell_cap_h1) {
  EmbeddedSubgroup s;
  s.kind = EmbKind::GraphSub;
  GroupSpec g1 = base.parent;
  int qdim = ell.dim() - ell_cap_h1.dim();
  GroupSpec g2 = qdim == 0 ? GroupSpec::trivial()
                           : (qdim == 1 ? GroupSpec::circle() : GroupSpec::torus(qdim));
  s.parent = GroupSpec::product({g1, g2});
  s.group = qdim == 0 ? base.group : GroupSpec::product({base.group, g2});
  s.parts = {std::move(base), std::move(ell), std::move(ell_cap_h1)};
  return s;
}

int EmbeddedSubgroup::dim() const {
  switch (kind) {
    case EmbKind::Full: return parent.dim();
    case EmbKind::Rot: return group.dim();
    case EmbKind::TorusSub:
      return ann.cols - intlat::rank(ann);
    case EmbKind::ProductSub: {
      int d = 0;
      for (const auto& p : parts) d += p.dim();
      return d;
    }
    case EmbKind::GraphSub:
      return parts[0].dim() + parts[1].dim() - parts[2].dim();
  }
  return 0;
}

std::optional<SymInt> EmbeddedSubgroup::order() const {
  if (kind == EmbKind::TorusSub) {
    if (dim() > 0) return std::nullopt;
    auto inv = intlat::snf_invariants(ann);
    std::int64_t t = 1;
    for (auto d : inv) t *= d;
    return SymInt::concrete(t);
  }
  if (kind == EmbKind::ProductSub) {
    SymInt o = SymInt::concrete(1);
    for (const auto& p : parts) {
      auto po = p.order();
      if (!po) return std::nullopt;
      if (po->is_concrete()) o = o.is_concrete()
                                     ? SymInt::concrete(o.value() * po->value())
                                     : o.times(po->value());
      else if (o.is_concrete()) o = po->times(o.value());
      else return std::nullopt;
    }
    return o;
  }
  return group.order();
}

bool EmbeddedSubgroup::is_connected() const {
  switch (kind) {
    case EmbKind::Full: return parent.is_connected();
    case EmbKind::Rot: return group.is_connected();
    case EmbKind::TorusSub: {
      auto inv = intlat::snf_invariants(ann);
      for (auto d : inv)
        if (d > 1) return false;
      return true;
    }
    case EmbKind::ProductSub:
      for (const auto& p : parts)
        if (!p.is_connected()) return false;
      return true;
    case EmbKind::GraphSub:
      return parts[0].is_connected();
  }
  return true;
}

int EmbeddedSubgroup::component_count() const {
  switch (kind) {
    case EmbKind::Full: return parent.component_count_bound();
    case EmbKind::Rot: return group.component_count_bound();
    case EmbKind::TorusSub: {
      auto inv = intlat::snf_invariants(ann);
      std::int64_t t = 1;
      for (auto d : inv) t *= d;
      return static_cast<int>(t);
    }
    case EmbKind::ProductSub: {
      int c = 1;
      for (const auto& p : parts) {
        int pc = p.component_count();
        if (pc < 0) return -1;
        c *= pc;
      }
      return c;
    }
    case EmbKind::GraphSub:
      return parts[0].component_count();
  }
  return 1;
}

EmbeddedSubgroup EmbeddedSubgroup::identity_component() const {
  switch (kind) {
    case EmbKind::Full: {
      if (parent.is_connected()) return *this;
      if (parent.family == Family::O2 || parent.family == Family::Pin2)
        return rot(parent, GroupSpec::circle(), main, sec);
      throw CatalogError("identity component: unsupported parent");
    }
    case EmbKind::Rot: {
      switch (group.family) {
        case Family::Circle: return *this;
        case Family::O2:
        case Family::Pin2:
          return rot(parent, GroupSpec::circle(), main, sec);
        default:
          return trivial_in(parent);
      }
    }
    case EmbKind::TorusSub:
      // saturation of the annihilator cuts the subtorus part
      return torus_sub(ann.cols, intlat::kernel(intlat::kernel(ann)));
    case EmbKind::ProductSub: {
      std::vector<EmbeddedSubgroup> fs;
      for (const auto& p : parts) fs.push_back(p.identity_component());
      return product(parent, std::move(fs));
    }
    case EmbKind::GraphSub:
      return graph(parts[0].identity_component(), parts[1], parts[2]);
  }
  return *this;
}

bool EmbeddedSubgroup::has_symbolic_param() const {
  if (group.has_symbolic_param()) return true;
  for (const auto& p : parts)
    if (p.has_symbolic_param()) return true;
  return false;
}

EmbeddedSubgroup EmbeddedSubgroup::instantiate(std::int64_t n) const {
  EmbeddedSubgroup s = *this;
  s.parent = parent.instantiate(n);
  s.group = group.instantiate(n);
  for (auto& p : s.parts) p = p.instantiate(n);
  // re-canonicalize degenerate dihedral instantiations
  if (s.kind == EmbKind::Rot) return rot(s.parent, s.group, s.main, s.sec);
  return s;
}

bool EmbeddedSubgroup::is_trivial() const {
  auto o = order();
  return o && o->is_concrete() && o->value() == 1;
}

bool EmbeddedSubgroup::covers_parent() const {
  switch (kind) {
    case EmbKind::Full: return true;
    case EmbKind::TorusSub: return ann.rows == 0;
    case EmbKind::ProductSub:
      for (const auto& p : parts)
        if (!p.covers_parent()) return false;
      return true;
    default: return false;
  }
}

std::vector<std::int64_t> EmbeddedSubgroup::circle_slope() const {
  if (kind != EmbKind::TorusSub || dim() != 1 || !is_connected())
    throw CatalogError("circle_slope: not a torus circle");
  intlat::Mat gen = intlat::kernel(ann);
  assert(gen.rows == 1);
  auto v = gen.row(0);
  for (auto c : v) {
    if (c == 0) continue;
    if (c < 0)
      for (auto& w : v) w = -w;
    break;
  }
  return v;
}

std::string EmbeddedSubgroup::str() const {
  switch (kind) {
    case EmbKind::Full: return group.str();
    case EmbKind::Rot: {
      std::string s = group.str();
      if (group.family == Family::Circle &&
          (parent.family == Family::SO3 || parent.family == Family::SO4))
        s = "SO(2)";
      if (group.dim() == 0 && group.family != Family::Trivial &&
          (group.family == Family::Cyclic || group.family == Family::Dihedral ||
           group.family == Family::BinaryDihedral) &&
          main != Ax::Z)
        s += "@" + axis_name(main);
      if ((group.family == Family::Circle || group.family == Family::O2 ||
           group.family == Family::Pin2) &&
          main != Ax::Z)
        s += "@" + axis_name(main);
      return s;
    }
    case EmbKind::TorusSub: {
      if (covers_parent()) return group.str();
      if (dim() == 1 && is_connected()) {
        auto v = circle_slope();
        std::string s = "circle(";
        for (size_t i = 0; i < v.size(); ++i) {
          if (i) s += ",";
          s += std::to_string(v[i]);
        }
        return s + ")";
      }
      if (is_trivial()) return "{e}";
      if (dim() == 0) {
        auto inv = intlat::snf_invariants(ann);
        std::vector<intlat::i64> nontrivial;
        for (auto d : inv)
          if (d > 1) nontrivial.push_back(d);
        if (nontrivial.size() == 1 && ann.cols == 1)
          return "Z_" + std::to_string(nontrivial[0]);
        if (nontrivial.size() == 1) {
          // cyclic: show a generator point
          std::int64_t den = nontrivial[0];
          int k = ann.cols;
          std::vector<std::int64_t> gen(k, 0);
          std::function<bool(int)> search = [&](int idx) {
            if (idx == k) {
              bool nonzero = false;
              for (auto g : gen) nonzero = nonzero || g != 0;
              if (!nonzero) return false;
              return torus_cyclic(k, gen, den).exact_equal(*this);
            }
            for (std::int64_t v = 0; v < den; ++v) {
              gen[idx] = v;
              if (search(idx + 1)) return true;
            }
            gen[idx] = 0;
            return false;
          };
          if (search(0)) {
            std::string s = "Z_" + std::to_string(den) + "(";
            for (int i = 0; i < k; ++i) {
              if (i) s += ",";
              std::int64_t g = intlat::gcd(gen[i], den);
              if (gen[i] == 0) s += "0";
              else s += std::to_string(gen[i] / g) + "/" + std::to_string(den / g);
            }
            return s + ")";
          }
        }
        std::string s = "tor(";
        for (size_t i = 0; i < nontrivial.size(); ++i) {
          if (i) s += "x";
          s += "Z_" + std::to_string(nontrivial[i]);
        }
        return s + ")";
      }
      return group.str();
    }
    case EmbKind::ProductSub: {
      std::vector<std::string> shown;
      for (const auto& p : parts)
        if (!p.is_trivial()) shown.push_back(p.str());
      if (shown.empty()) return "{e}";
      std::string s;
      for (size_t i = 0; i < shown.size(); ++i) {
        if (i) s += " x ";
        s += shown[i];
      }
      return s;
    }
    case EmbKind::GraphSub:
      return "(" + parts[0].str() + " x 1).Delta(" + parts[1].str() + ")";
  }
  return "?";
}

bool operator==(const EmbeddedSubgroup& a, const EmbeddedSubgroup& b) {
  if (a.parent != b.parent || a.kind != b.kind) return false;
  switch (a.kind) {
    case EmbKind::Full: return true;
    case EmbKind::Rot:
      // one conjugacy class per (family, param) for standalone subgroups
      return a.group == b.group;
    case EmbKind::TorusSub: return a.ann == b.ann;
    case EmbKind::ProductSub:
    case EmbKind::GraphSub: {
      if (a.parts.size() != b.parts.size()) return false;
      for (size_t i = 0; i < a.parts.size(); ++i)
        if (a.parts[i] != b.parts[i]) return false;
      return true;
    }
  }
  return false;
}

bool EmbeddedSubgroup::exact_equal(const EmbeddedSubgroup& o) const {
  if (parent != o.parent || kind != o.kind || group != o.group) return false;
  switch (kind) {
    case EmbKind::Full: return true;
    case EmbKind::Rot: {
      bool need_main = group.dim() > 0 || group.family == Family::Cyclic ||
                       group.family == Family::Dihedral ||
                       group.family == Family::BinaryDihedral;
      bool need_sec = group.family == Family::Dihedral ||
                      group.family == Family::BinaryDihedral;
      if (need_main && main != o.main) return false;
      if (need_sec && sec != o.sec) return false;
      return true;
    }
    case EmbKind::TorusSub: return ann == o.ann;
    default: {
      if (parts.size() != o.parts.size()) return false;
      for (size_t i = 0; i < parts.size(); ++i)
        if (!parts[i].exact_equal(o.parts[i])) return false;
      return true;
    }
  }
}

bool EmbeddedSubgroup::less_than(const EmbeddedSubgroup& o) const {
  if (kind != o.kind) return static_cast<int>(kind) < static_cast<int>(o.kind);
  if (group != o.group) return group.less_than(o.group);
  if (kind == EmbKind::Rot) {
    if (main != o.main) return main < o.main;
    if (sec != o.sec) return sec < o.sec;
  }
  if (kind == EmbKind::TorusSub && !(ann == o.ann)) {
    if (ann.rows != o.ann.rows) return ann.rows < o.ann.rows;
    return ann.a < o.ann.a;
  }
  if (parts.size() != o.parts.size()) return parts.size() < o.parts.size();
  for (size_t i = 0; i < parts.size(); ++i)
    if (!parts[i].exact_equal(o.parts[i])) return parts[i].less_than(o.parts[i]);
  return false;
}

oracle::QuatSet materialize(const EmbeddedSubgroup& s) {
  if (s.has_symbolic_param())
    throw CatalogError("oracle not applicable: symbolic parameter");
  if (s.kind == EmbKind::Full) {
    if (s.parent.is_finite())
      throw CatalogError("oracle: full parent is not finite-materializable");
    throw CatalogError("oracle not applicable: continuous group");
  }
  if (s.kind != EmbKind::Rot)
    throw CatalogError("oracle not applicable: not a rotation subgroup");
  if (s.group.dim() > 0)
    throw CatalogError("oracle not applicable: continuous subgroup");
  if (s.parent.family == Family::SU2)
    return oracle::materialize_su2(s.group, s.main, s.sec);
  return oracle::materialize_so3_lift(s.group, s.main, s.sec);
}

EmbeddedSubgroup identify_in_parent(const GroupSpec& parent,
                                    const oracle::QuatSet& s) {
  oracle::Identified id = parent.family == Family::SU2 ? oracle::identify_su2(s)
                                                       : oracle::identify_so3(s);
  Ax main = id.main_axis.value_or(Ax::Z);
  Ax sec = id.sec_axis.value_or(main == Ax::X ? Ax::Y : Ax::X);
  if (parent == id.group) return EmbeddedSubgroup::full(parent);
  return EmbeddedSubgroup::rot(parent, id.group, main, sec);
}

}  // namespace cohom1
