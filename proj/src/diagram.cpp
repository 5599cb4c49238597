#include "cohom1/diagram.hpp"

#include <algorithm>
#include <cassert>
#include <map>

namespace cohom1 {

GroupDiagram GroupDiagram::interval(GroupSpec g, EmbeddedSubgroup h,
                                    EmbeddedSubgroup km, EmbeddedSubgroup kp,
                                    std::optional<SymInt> param) {
  GroupDiagram d;
  d.g = std::move(g);
  d.h = std::move(h);
  d.k_minus = std::move(km);
  d.k_plus = std::move(kp);
  d.orbit = OrbitSpaceKind::Interval;
  d.parameter = param;
  return d;
}

GroupDiagram GroupDiagram::circle(GroupSpec g, EmbeddedSubgroup h, int gluing) {
  GroupDiagram d;
  d.g = std::move(g);
  d.h = std::move(h);
  d.k_minus = d.h;
  d.k_plus = d.h;
  d.orbit = OrbitSpaceKind::Circle;
  d.gluing_component = gluing;
  return d;
}

bool GroupDiagram::has_symbolic_param() const {
  return g.has_symbolic_param() || h.has_symbolic_param() ||
         k_minus.has_symbolic_param() || k_plus.has_symbolic_param();
}

GroupDiagram GroupDiagram::instantiate(std::int64_t n) const {
  GroupDiagram d = *this;
  d.g = g.instantiate(n);
  d.h = h.instantiate(n);
  d.k_minus = k_minus.instantiate(n);
  d.k_plus = k_plus.instantiate(n);
  if (parameter && !parameter->is_concrete())
    d.parameter = SymInt::concrete(parameter->instantiate(n));
  return d;
}

int GroupDiagram::space_dim() const { return g.dim() - h.dim() + 1; }

std::string GroupDiagram::str() const {
  auto sub_str = [this](const EmbeddedSubgroup& s) {
    // the order-4 cyclic group paired with a transverse Pin2 is the
    // quaternion <i>; the transverse Pin2 itself prints without a tag
    if (g.family == Family::SU2 && s.group == GroupSpec::cyclic(4) &&
        ((k_minus.group.family == Family::Pin2 && k_minus.main != s.main) ||
         (k_plus.group.family == Family::Pin2 && k_plus.main != s.main)))
      return std::string("<i>");
    if (g.family == Family::SU2 && s.group.family == Family::Pin2 &&
        s.main != h.main)
      return std::string("Pin2");
    return s.str();
  };
  if (orbit == OrbitSpaceKind::Circle)
    return "(" + g.str() + ", " + h.str() + "; circle:" +
           std::to_string(gluing_component) + ")";
  return "(" + g.str() + ", " + sub_str(h) + ", " + sub_str(k_minus) + ", " +
         sub_str(k_plus) + ")";
}

std::string ValidationReport::summary() const {
  if (accepted) return "accepted";
  std::string s = "rejected";
  for (const auto& r : reasons) s += "; " + r;
  return s;
}

ValidationReport validate(const GroupDiagram& d, std::optional<int> requested_dim) {
  ValidationReport rep;
  rep.space_dim = d.space_dim();
  if (requested_dim && *requested_dim != rep.space_dim) {
    rep.dim_ok = false;
    rep.reasons.push_back("cohomogeneity: dim G - dim H = " +
                          std::to_string(d.g.dim() - d.h.dim()) +
                          " but requested space dimension " +
                          std::to_string(*requested_dim));
  }
  if (d.h.parent != d.g) {
    rep.reasons.push_back("H has a different parent group");
    return rep;
  }
  rep.effectiveness = effectiveness_class(d.g, d.h);
  if (rep.effectiveness == Effectiveness::Ineffective)
    rep.reasons.push_back("ineffective: normal core of H is infinite");

  if (d.orbit == OrbitSpaceKind::Circle) {
    auto n = normalizer(d.h);
    int comps = n.weyl_like_quotient.component_count_bound();
    if (comps > 0 && d.gluing_component >= comps)
      rep.reasons.push_back("gluing component out of range");
    rep.containment_ok = true;
    rep.fibers_admissible = true;
    rep.accepted = rep.reasons.empty() && rep.dim_ok;
    return rep;
  }

  try {
    bool c_minus = lattice_contains(d.h, d.k_minus);
    bool c_plus = lattice_contains(d.h, d.k_plus);
    rep.containment_ok = c_minus && c_plus;
    if (!c_minus) rep.reasons.push_back("H is not contained in K-");
    if (!c_plus) rep.reasons.push_back("H is not contained in K+");
  } catch (const CatalogError& e) {
    rep.reasons.push_back(std::string("containment: ") + e.what());
    return rep;
  }
  if (!rep.containment_ok) {
    rep.accepted = false;
    return rep;
  }
  rep.fiber_minus = quotient_space(d.k_minus, d.h);
  rep.fiber_plus = quotient_space(d.k_plus, d.h);
  bool adm_minus = is_admissible_fiber(*rep.fiber_minus);
  bool adm_plus = is_admissible_fiber(*rep.fiber_plus);
  rep.fibers_admissible = adm_minus && adm_plus;
  if (!adm_minus)
    rep.reasons.push_back("K-/H = " + rep.fiber_minus->str() +
                          " is not a positively curved homogeneous space");
  if (!adm_plus)
    rep.reasons.push_back("K+/H = " + rep.fiber_plus->str() +
                          " is not a positively curved homogeneous space");
  rep.accepted = rep.reasons.empty() && rep.dim_ok;
  return rep;
}

// ---------------------------------------------------------------------------
// moves and canonical forms

namespace {

bool witness_in_identity_component(const ConjugationWitness& w,
                                   const EmbeddedSubgroup& n0) {
  if (w.is_identity()) return true;
  if (n0.parent.family == Family::Torus || n0.parent.family == Family::Circle)
    return true;  // abelian parent: twists act trivially anyway
  switch (w.kind) {
    case ConjugationWitness::Kind::AxisTurn:
      if (n0.covers_parent()) return true;
      return n0.kind == EmbKind::Rot && n0.group.dim() >= 1 && w.axis == n0.main;
    case ConjugationWitness::Kind::Element: {
      if (n0.covers_parent()) return true;
      if (n0.kind != EmbKind::Rot) return false;
      if (n0.group.dim() >= 1)
        return oracle::in_circle(w.q, oracle::axis_vec(n0.main));
      return false;
    }
    case ConjugationWitness::Kind::Components: {
      if (n0.kind != EmbKind::ProductSub || w.parts.size() != n0.parts.size())
        return false;
      for (size_t i = 0; i < w.parts.size(); ++i)
        if (!witness_in_identity_component(w.parts[i], n0.parts[i])) return false;
      return true;
    }
    default:
      return true;
  }
}

}  // namespace

GroupDiagram apply_move(const GroupDiagram& d, const EquivalenceMove& m) {
  GroupDiagram out = d;
  switch (m.kind) {
    case EquivalenceMove::Kind::SwapPlusMinus:
      if (d.orbit == OrbitSpaceKind::Interval)
        std::swap(out.k_minus, out.k_plus);
      return out;
    case EquivalenceMove::Kind::ConjugateAll:
      out.h = conjugate(d.h, m.witness);
      if (d.orbit == OrbitSpaceKind::Interval) {
        out.k_minus = conjugate(d.k_minus, m.witness);
        out.k_plus = conjugate(d.k_plus, m.witness);
      }
      return out;
    case EquivalenceMove::Kind::TwistMinus: {
      if (d.orbit != OrbitSpaceKind::Interval)
        throw WitnessError("twist requires an interval orbit space");
      auto n0 = normalizer(d.h).identity_component;
      if (!witness_in_identity_component(m.witness, n0))
        throw WitnessError("twist witness is not in N(H)_0");
      out.k_minus = conjugate(d.k_minus, m.witness);
      return out;
    }
  }
  return out;
}

namespace {

using Key = std::vector<std::int64_t>;

int family_rank(Family f) { return static_cast<int>(f); }

void append_group_key(Key& k, const GroupSpec& g) {
  k.push_back(family_rank(g.family));
  k.push_back(g.param.coeff);
  k.push_back(g.param.offset);
  k.push_back(static_cast<std::int64_t>(g.factors.size()));
  for (const auto& f : g.factors) append_group_key(k, f);
}

void append_subgroup_key(Key& k, const EmbeddedSubgroup& s) {
  k.push_back(static_cast<int>(s.kind));
  append_group_key(k, s.group);
  if (s.kind == EmbKind::Rot) {
    bool need_main = s.group.dim() > 0 || s.group.family == Family::Cyclic ||
                     s.group.family == Family::Dihedral ||
                     s.group.family == Family::BinaryDihedral;
    bool need_sec = s.group.family == Family::Dihedral ||
                    s.group.family == Family::BinaryDihedral;
    k.push_back(need_main ? static_cast<int>(s.main) : -1);
    k.push_back(need_sec ? static_cast<int>(s.sec) : -1);
  }
  if (s.kind == EmbKind::TorusSub) {
    k.push_back(s.ann.rows);
    k.push_back(s.ann.cols);
    for (auto v : s.ann.a) k.push_back(v);
  }
  k.push_back(static_cast<std::int64_t>(s.parts.size()));
  for (const auto& p : s.parts) append_subgroup_key(k, p);
}

// Sort key for the (K-, K+) pair: cone side (non-sphere fiber) first, then
// descending dimension and size. Mirrors the table layout of the source
// classification.
Key side_key(const GroupDiagram& d, const EmbeddedSubgroup& k) {
  Key key;
  bool sphere_fiber = true;
  try {
    auto f = quotient_space(k, d.h);
    sphere_fiber = f.is_sphere();
  } catch (const CatalogError&) {
    sphere_fiber = true;
  }
  key.push_back(sphere_fiber ? 1 : 0);
  key.push_back(-k.dim());
  auto o = k.order();
  key.push_back(o ? -(o->coeff * 1000 + o->offset) : 0);
  append_subgroup_key(key, k);
  return key;
}

struct AxisPerm {
  Ax img[3];
  Ax operator()(Ax a) const { return img[static_cast<int>(a)]; }
};

const AxisPerm kAllPerms[6] = {
    {{Ax::X, Ax::Y, Ax::Z}}, {{Ax::X, Ax::Z, Ax::Y}}, {{Ax::Y, Ax::X, Ax::Z}},
    {{Ax::Y, Ax::Z, Ax::X}}, {{Ax::Z, Ax::X, Ax::Y}}, {{Ax::Z, Ax::Y, Ax::X}}};

EmbeddedSubgroup apply_perm(const EmbeddedSubgroup& s, const AxisPerm& p) {
  EmbeddedSubgroup out = s;
  if (s.kind == EmbKind::Rot) {
    out.main = p(s.main);
    out.sec = p(s.sec);
  }
  for (auto& part : out.parts) part = apply_perm(part, p);
  return out;
}

// Does this subgroup's embedding carry a main-axis tag at all?
bool has_axis(const EmbeddedSubgroup& s) {
  if (s.kind != EmbKind::Rot) return false;
  switch (s.group.family) {
    case Family::Cyclic:
    case Family::Dihedral:
    case Family::BinaryDihedral:
    case Family::Circle:
    case Family::O2:
    case Family::Pin2:
      return true;
    default:
      return false;
  }
}

bool has_sec_axis(const EmbeddedSubgroup& s) {
  return s.kind == EmbKind::Rot && (s.group.family == Family::Dihedral ||
                                    s.group.family == Family::BinaryDihedral);
}

// N(H)_0 contains the rotations about H's main axis exactly when H is a
// single-axis subgroup; dihedral and polyhedral H have no continuous twists.
std::optional<Ax> free_rotation_axis(const EmbeddedSubgroup& h) {
  if (h.is_trivial()) return std::nullopt;  // handled as full freedom
  if (h.kind != EmbKind::Rot) return std::nullopt;
  switch (h.group.family) {
    case Family::Cyclic:
    case Family::Circle:
    case Family::O2:
    case Family::Pin2:
      return h.main;
    default:
      return std::nullopt;
  }
}

// Relabel the perpendicular axes of one K in traversal order, fixing `fixed`.
EmbeddedSubgroup relabel_perp(const EmbeddedSubgroup& s, Ax fixed) {
  std::map<Ax, Ax> map{{fixed, fixed}};
  std::vector<Ax> pool;
  for (Ax a : {Ax::X, Ax::Y, Ax::Z})
    if (a != fixed) pool.push_back(a);
  size_t next = 0;
  auto assign = [&](Ax a) {
    auto it = map.find(a);
    if (it != map.end()) return it->second;
    Ax img = pool[next++];
    map[a] = img;
    return img;
  };
  EmbeddedSubgroup out = s;
  if (s.kind == EmbKind::Rot) {
    if (has_axis(s)) out.main = assign(s.main);
    if (has_sec_axis(s)) out.sec = assign(s.sec);
  }
  for (auto& part : out.parts) {
    if (part.kind == EmbKind::Rot) {
      if (has_axis(part)) part.main = assign(part.main);
      if (has_sec_axis(part)) part.sec = assign(part.sec);
    }
  }
  return out;
}

// Snap one K to its standalone canonical axes (main Z, secondary X).
EmbeddedSubgroup relabel_free(const EmbeddedSubgroup& s) {
  std::map<Ax, Ax> map;
  std::vector<Ax> pool{Ax::Z, Ax::X, Ax::Y};
  size_t next = 0;
  auto assign = [&](Ax a) {
    auto it = map.find(a);
    if (it != map.end()) return it->second;
    Ax img = pool[next++];
    map[a] = img;
    return img;
  };
  EmbeddedSubgroup out = s;
  if (s.kind == EmbKind::Rot) {
    if (has_axis(s)) out.main = assign(s.main);
    if (has_sec_axis(s)) out.sec = assign(s.sec);
  }
  for (auto& part : out.parts) {
    if (part.kind == EmbKind::Rot) {
      if (has_axis(part)) part.main = assign(part.main);
      if (has_sec_axis(part)) part.sec = assign(part.sec);
    }
  }
  return out;
}

// H-part used for canonical snapping: for products, the rotation factor.
const EmbeddedSubgroup& rot_part(const EmbeddedSubgroup& h) {
  if (h.kind == EmbKind::ProductSub)
    for (const auto& p : h.parts)
      if (p.kind == EmbKind::Rot || p.kind == EmbKind::Full) return p;
  return h;
}

EmbeddedSubgroup twist_normalize(const GroupDiagram& d,
                                 const EmbeddedSubgroup& k) {
  const EmbeddedSubgroup& hr = rot_part(d.h);
  if (hr.is_trivial() || (hr.kind == EmbKind::Full && d.g.is_connected()))
    return relabel_free(k);
  if (auto ax = free_rotation_axis(hr)) return relabel_perp(k, *ax);
  return k;
}

Key diagram_key(const GroupDiagram& d) {
  Key key;
  key.push_back(d.orbit == OrbitSpaceKind::Interval ? 0 : 1);
  append_group_key(key, d.g);
  append_subgroup_key(key, d.h);
  if (d.orbit == OrbitSpaceKind::Circle) {
    key.push_back(d.gluing_component);
    return key;
  }
  append_subgroup_key(key, d.k_minus);
  append_subgroup_key(key, d.k_plus);
  return key;
}

}  // namespace

GroupDiagram canonical_form(const GroupDiagram& d) {
  std::optional<GroupDiagram> best;
  Key best_key;
  for (const auto& perm : kAllPerms) {
    GroupDiagram cand = d;
    cand.h = apply_perm(d.h, perm);
    cand.k_minus = apply_perm(d.k_minus, perm);
    cand.k_plus = apply_perm(d.k_plus, perm);
    // require H in canonical position when it carries axes
    const EmbeddedSubgroup& hr = rot_part(cand.h);
    if (has_axis(hr) && hr.main != Ax::Z) continue;
    if (has_sec_axis(hr) && hr.sec != Ax::X) continue;
    if (cand.orbit == OrbitSpaceKind::Interval) {
      cand.k_minus = twist_normalize(cand, cand.k_minus);
      cand.k_plus = twist_normalize(cand, cand.k_plus);
      if (side_key(cand, cand.k_plus) < side_key(cand, cand.k_minus))
        std::swap(cand.k_minus, cand.k_plus);
    }
    Key k = diagram_key(cand);
    if (!best || k < best_key) {
      best = cand;
      best_key = std::move(k);
    }
  }
  if (!best) return d;  // no admissible perm (should not happen)
  return *best;
}

bool equivalent(const GroupDiagram& a, const GroupDiagram& b) {
  if (a.g != b.g || a.orbit != b.orbit) return false;
  return diagram_key(canonical_form(a)) == diagram_key(canonical_form(b));
}

// ---------------------------------------------------------------------------
// fundamental group

namespace {

enum class ImagePart { Full, CyclicHalf, Center };

// Image N = ker(pi1(G/H) -> pi1(G/K)) for a rotation-group factor, in terms
// of the binary lift of H. Requires the factor fiber to be connected.
ImagePart rot_image(const GroupSpec& g1, const EmbeddedSubgroup& h,
                    const EmbeddedSubgroup& k) {
  if (k.covers_parent() || k.group == g1) return ImagePart::Full;
  // K is O(2)/SO(2)/Pin2/Circle about its axis; the kernel is the
  // intersection of lift(H) with the lifted circle.
  switch (h.group.family) {
    case Family::Trivial:
      return ImagePart::Full;  // lift {+-1} lies in every lifted circle
    case Family::Cyclic:
      if (g1.family == Family::SU2 && h.group.param.is_concrete() &&
          h.group.param.value() <= 2)
        return ImagePart::Full;  // central
      if (h.main == k.main) return ImagePart::Full;
      return ImagePart::Center;  // half-turn/order-4 across the components
    case Family::Dihedral:
    case Family::BinaryDihedral:
      if (h.main != k.main)
        throw UnsupportedQuotient("pi1 image: transverse dihedral");
      return ImagePart::CyclicHalf;  // lift(H) meets the circle in Z_{2n}
    default:
      throw UnsupportedQuotient("pi1 image for H = " + h.group.str());
  }
}

FundamentalGroup rot_pi1_quotient(const GroupSpec& g1, const EmbeddedSubgroup& h,
                                  const std::vector<ImagePart>& images) {
  for (auto i : images)
    if (i == ImagePart::Full) return FundamentalGroup::trivial();
  if (images.empty()) {
    // no singular contribution: pi1(G/H) itself
    return pi1_of_quotient(g1, h);
  }
  bool su2 = g1.family == Family::SU2;
  switch (h.group.family) {
    case Family::Cyclic: {
      // quotient of Z_n (or its lift) by the center {+-1}
      SymInt n = su2 ? h.group.param : h.group.param.times(2);
      for (auto i : images)
        if (i != ImagePart::Center)
          throw UnsupportedQuotient("pi1: unexpected image");
      if (n.coeff % 2 || n.offset % 2)
        throw UnsupportedQuotient("pi1: odd order with central image");
      return FundamentalGroup::cyclic(SymInt{n.coeff / 2, n.offset / 2, n.min_param});
    }
    case Family::Dihedral:
    case Family::BinaryDihedral:
      // D*_n modulo the normal closure of its cyclic part
      return FundamentalGroup::cyclic(SymInt::concrete(2));
    default:
      throw UnsupportedQuotient("pi1 quotient for H = " + h.group.str());
  }
}

}  // namespace

Pi1Result fundamental_group(const GroupDiagram& d) {
  if (d.orbit != OrbitSpaceKind::Interval)
    return {std::nullopt, "circle orbit space"};
  HomogeneousSpace fm = quotient_space(d.k_minus, d.h);
  HomogeneousSpace fp = quotient_space(d.k_plus, d.h);
  for (const auto* f : {&fm, &fp}) {
    if (!f->is_sphere() || f->dim < 1)
      return {std::nullopt,
              "fiber " + f->str() + " is not a sphere of dimension >= 1"};
  }
  switch (d.g.family) {
    case Family::Circle:
    case Family::Torus: {
      int k = d.h.ann.cols;
      if (!d.h.is_trivial())
        return {std::nullopt, "torus diagram with nontrivial principal isotropy"};
      auto sm = d.k_minus.circle_slope();
      auto sp = d.k_plus.circle_slope();
      intlat::Mat rel(2, k);
      for (int c = 0; c < k; ++c) {
        rel.at(0, c) = sm[c];
        rel.at(1, c) = sp[c];
      }
      return {FundamentalGroup::lattice_quotient(k, rel).canonical(), ""};
    }
    case Family::SU2:
    case Family::SO3: {
      std::vector<ImagePart> images;
      for (const auto* k : {&d.k_minus, &d.k_plus})
        images.push_back(rot_image(d.g, d.h, *k));
      return {rot_pi1_quotient(d.g, d.h, images).canonical(), ""};
    }
    case Family::SO4:
      // sphere fibers force K = SO(4) over SO(3); pi1(S^3) is trivial
      return {FundamentalGroup::trivial(), ""};
    case Family::Product: {
      if (d.h.kind != EmbKind::ProductSub || d.k_minus.kind != EmbKind::ProductSub ||
          d.k_plus.kind != EmbKind::ProductSub)
        return {std::nullopt, "unsupported product diagram shape"};
      // factorwise: rotation factors via image rules, torus factors via
      // slope lattices
      std::vector<FundamentalGroup> parts;
      for (size_t i = 0; i < d.g.factors.size(); ++i) {
        const GroupSpec& gf = d.g.factors[i];
        const auto& hf = d.h.parts[i];
        const auto& kmf = d.k_minus.parts[i];
        const auto& kpf = d.k_plus.parts[i];
        if (gf.family == Family::Torus || gf.family == Family::Circle) {
          int k = hf.ann.cols;
          intlat::Mat rel(0, k);
          for (const auto* kf : {&kmf, &kpf}) {
            auto k0 = kf->identity_component();
            rel = intlat::lattice_sum(rel, intlat::kernel(k0.ann));
          }
          if (!hf.is_trivial())
            return {std::nullopt, "torus factor with nontrivial isotropy"};
          parts.push_back(FundamentalGroup::lattice_quotient(k, rel));
        } else {
          std::vector<ImagePart> images;
          for (const auto* kf : {&kmf, &kpf}) {
            if (kf->exact_equal(hf)) continue;  // point fiber in this factor
            images.push_back(rot_image(gf, hf, *kf));
          }
          parts.push_back(rot_pi1_quotient(gf, hf, images));
        }
      }
      return {FundamentalGroup::product(std::move(parts)).canonical(), ""};
    }
    default:
      return {std::nullopt, "unsupported parent group"};
  }
}

// ---------------------------------------------------------------------------
// reduction and extension

namespace {

EmbeddedSubgroup torus_drop_last(const EmbeddedSubgroup& s) {
  int k = s.ann.cols;
  intlat::Mat proj(s.ann.rows, k - 1);
  for (int r = 0; r < s.ann.rows; ++r)
    for (int c = 0; c + 1 < k; ++c) proj.at(r, c) = s.ann.at(r, c);
  return EmbeddedSubgroup::torus_sub(k - 1, proj);
}

bool torus_last_projection_full(const EmbeddedSubgroup& s) {
  int k = s.ann.cols;
  intlat::Mat last(1, k);
  last.at(0, k - 1) = 1;
  return intlat::lattice_intersect(s.ann, last).rows == 0;
}

}  // namespace

ReduceResult reduce(const GroupDiagram& d) {
  if (d.orbit != OrbitSpaceKind::Interval)
    return {std::nullopt, "reduction applies to interval orbit spaces"};
  if (d.g.family == Family::Torus) {
    if (!torus_last_projection_full(d.h))
      return {std::nullopt, "pi_2(H) is not the last circle factor"};
    GroupDiagram out = GroupDiagram::interval(
        torus_drop_last(d.h).parent, torus_drop_last(d.h),
        torus_drop_last(d.k_minus), torus_drop_last(d.k_plus), d.parameter);
    if (out.space_dim() != d.space_dim())
      return {std::nullopt, "reduction changes the orbit structure"};
    return {out, ""};
  }
  if (d.g.family != Family::Product || d.g.factors.size() != 2)
    return {std::nullopt, "G is not a product"};
  const GroupSpec& g1 = d.g.factors[0];
  if (d.h.kind == EmbKind::GraphSub) {
    // (H1 x 1)Delta(L) cap (G1 x 1) = H1, and likewise for K
    if (d.k_minus.kind != EmbKind::GraphSub || d.k_plus.kind != EmbKind::GraphSub)
      return {std::nullopt, "mixed graph diagram"};
    return {GroupDiagram::interval(g1, d.h.parts[0], d.k_minus.parts[0],
                                   d.k_plus.parts[0], d.parameter),
            ""};
  }
  if (d.h.kind == EmbKind::ProductSub) {
    if (!d.h.parts[1].covers_parent())
      return {std::nullopt, "pi_2(H) is not all of G_2"};
    return {GroupDiagram::interval(g1, d.h.parts[0], d.k_minus.parts[0],
                                   d.k_plus.parts[0], d.parameter),
            ""};
  }
  return {std::nullopt, "unsupported subgroup shape"};
}

EmbeddedSubgroup intersect_subgroups(const EmbeddedSubgroup& a,
                                     const EmbeddedSubgroup& b) {
  if (a.parent != b.parent) throw ParentMismatch();
  if (lattice_contains(a, b)) return a;
  if (lattice_contains(b, a)) return b;
  switch (a.parent.family) {
    case Family::Circle:
    case Family::Torus:
      return EmbeddedSubgroup::torus_sub(a.ann.cols,
                                         intlat::lattice_sum(a.ann, b.ann));
    case Family::SO3:
    case Family::SU2: {
      const bool su2 = a.parent.family == Family::SU2;
      const GroupSpec& p = a.parent;
      auto third_axis = [](Ax u, Ax v) {
        for (Ax w : {Ax::X, Ax::Y, Ax::Z})
          if (w != u && w != v) return w;
        return Ax::Z;
      };
      auto is_even = [](const SymInt& n) {
        return n.coeff % 2 == 0 && n.offset % 2 == 0;
      };
      // both one-dimensional about distinct axes
      if (a.group.dim() == 1 && b.group.dim() == 1 && a.main != b.main) {
        bool ap = a.group.family != Family::Circle;
        bool bp = b.group.family != Family::Circle;
        if (su2) {
          if (ap && bp)
            return EmbeddedSubgroup::rot(p, GroupSpec::quaternion8(), a.main, b.main);
          if (ap || bp)
            return EmbeddedSubgroup::rot(p, GroupSpec::cyclic(4), ap ? b.main : a.main);
          return EmbeddedSubgroup::rot(p, GroupSpec::cyclic(2));
        }
        if (ap && bp)
          return EmbeddedSubgroup::rot(p, GroupSpec::dihedral(2), a.main, b.main);
        if (ap || bp)
          return EmbeddedSubgroup::rot(p, GroupSpec::cyclic(2), ap ? b.main : a.main);
        return EmbeddedSubgroup::trivial_in(p);
      }
      // one-dimensional meets finite
      if (a.group.dim() + b.group.dim() == 1) {
        const EmbeddedSubgroup& cont = a.group.dim() == 1 ? a : b;
        const EmbeddedSubgroup& fin = a.group.dim() == 1 ? b : a;
        bool perp = cont.group.family != Family::Circle;
        switch (fin.group.family) {
          case Family::Cyclic: {
            // same-axis cases were caught by containment above
            if (!perp) return su2 ? EmbeddedSubgroup::rot(p, GroupSpec::cyclic(
                                        is_even(fin.group.param) ? 2 : 1))
                                  : EmbeddedSubgroup::trivial_in(p);
            if (su2)
              return EmbeddedSubgroup::rot(
                  p,
                  GroupSpec::cyclic(fin.group.param.coeff % 4 == 0 ||
                                            (fin.group.param.is_concrete() &&
                                             fin.group.param.value() % 4 == 0)
                                        ? 4
                                        : (is_even(fin.group.param) ? 2 : 1)),
                  fin.main);
            return EmbeddedSubgroup::rot(
                p, GroupSpec::cyclic(is_even(fin.group.param) ? 2 : 1), fin.main);
          }
          case Family::Dihedral:
            if (fin.main == cont.main)
              return EmbeddedSubgroup::rot(p, GroupSpec::cyclic(fin.group.param),
                                           cont.main);
            break;
          case Family::BinaryDihedral:
            if (fin.main == cont.main)
              return EmbeddedSubgroup::rot(
                  p, GroupSpec::cyclic(fin.group.param.times(2)), cont.main);
            break;
          case Family::Tetrahedral:
          case Family::Icosahedral:
            return perp ? EmbeddedSubgroup::rot(p, GroupSpec::dihedral(2),
                                                cont.main, third_axis(cont.main, cont.main))
                        : EmbeddedSubgroup::rot(p, GroupSpec::cyclic(2), cont.main);
          case Family::Octahedral:
            return perp ? EmbeddedSubgroup::rot(p, GroupSpec::dihedral(4),
                                                cont.main, third_axis(cont.main, cont.main))
                        : EmbeddedSubgroup::rot(p, GroupSpec::cyclic(4), cont.main);
          case Family::BinaryTetrahedral:
          case Family::BinaryIcosahedral:
            return perp ? EmbeddedSubgroup::rot(p, GroupSpec::quaternion8(),
                                                cont.main, third_axis(cont.main, cont.main))
                        : EmbeddedSubgroup::rot(p, GroupSpec::cyclic(4), cont.main);
          case Family::BinaryOctahedral:
            return perp ? EmbeddedSubgroup::rot(p, GroupSpec::binary_dihedral(4),
                                                cont.main, third_axis(cont.main, cont.main))
                        : EmbeddedSubgroup::rot(p, GroupSpec::cyclic(8), cont.main);
          default:
            break;
        }
        throw CatalogError("intersection outside the catalog rules");
      }
      if (a.group.dim() == 0 && b.group.dim() == 0 &&
          !a.has_symbolic_param() && !b.has_symbolic_param()) {
        // oracle: elementwise intersection
        auto sa = materialize(a), sb = materialize(b);
        oracle::QuatSet inter;
        for (const auto& q : sa.elements())
          if (sb.contains(q)) inter.insert(q);
        return identify_in_parent(a.parent, inter);
      }
      throw CatalogError("intersection outside the catalog rules");
    }
    case Family::Product: {
      if (a.kind == EmbKind::ProductSub && b.kind == EmbKind::ProductSub) {
        std::vector<EmbeddedSubgroup> fs;
        for (size_t i = 0; i < a.parts.size(); ++i)
          fs.push_back(intersect_subgroups(a.parts[i], b.parts[i]));
        return EmbeddedSubgroup::product(a.parent, std::move(fs));
      }
      throw CatalogError("intersection of graph subgroups is unsupported");
    }
    default:
      throw CatalogError("intersection: unsupported parent");
  }
}

GroupDiagram normal_extension(const GroupDiagram& d, const EmbeddedSubgroup& l) {
  if (d.orbit != OrbitSpaceKind::Interval)
    throw ExtensionError("extension applies to interval orbit spaces");
  if (l.parent != d.g) throw ExtensionError("L must be a subgroup of G");
  if (!l.is_connected()) throw ExtensionError("L must be connected");
  for (const auto* s : {&d.h, &d.k_minus, &d.k_plus}) {
    auto n = normalizer(*s);
    if (!lattice_contains(l, n.normalizer))
      throw ExtensionError("L does not normalize " + s->str());
  }
  EmbeddedSubgroup cap = intersect_subgroups(l, d.h);
  if (l.dim() - cap.dim() == 0) return d;  // L/(L cap H) is trivial
  GroupDiagram out;
  out.g = EmbeddedSubgroup::graph(d.h, l, cap).parent;
  out.h = EmbeddedSubgroup::graph(d.h, l, cap);
  out.k_minus = EmbeddedSubgroup::graph(d.k_minus, l, cap);
  out.k_plus = EmbeddedSubgroup::graph(d.k_plus, l, cap);
  out.orbit = OrbitSpaceKind::Interval;
  out.parameter = d.parameter;
  return out;
}

// ---------------------------------------------------------------------------

PrimitivityResult is_primitive(const GroupDiagram& d) {
  if (d.orbit != OrbitSpaceKind::Interval) return {true, std::nullopt};
  if (d.k_minus.covers_parent() || d.k_plus.covers_parent())
    return {true, std::nullopt};
  PrimitivityResult res{true, std::nullopt};
  for (const auto& w : normalizer_component_witnesses(d.h)) {
    EmbeddedSubgroup conj_kp = conjugate(d.k_plus, w);
    EmbeddedSubgroup gen = subgroup_generated(d.k_minus, conj_kp);
    if (!gen.covers_parent()) {
      res.primitive = false;
      if (!res.obstruction || w.is_identity()) res.obstruction = gen;
      if (w.is_identity()) break;
    }
  }
  return res;
}

}  // namespace cohom1
