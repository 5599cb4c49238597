#include "cohom1/classify.hpp"

#include <algorithm>

namespace cohom1 {

namespace {

// --- admissible group derivation -------------------------------------------

// Candidate pool: connected catalog groups up to the dimension bound.
std::vector<GroupSpec> candidate_groups(int orbit_dim) {
  std::vector<GroupSpec> cs;
  for (int k = 1; k <= 6; ++k)
    cs.push_back(k == 1 ? GroupSpec::circle() : GroupSpec::torus(k));
  cs.push_back(GroupSpec::su2());
  cs.push_back(GroupSpec::so3());
  cs.push_back(GroupSpec::so4());
  cs.push_back(GroupSpec::product({GroupSpec::su2(), GroupSpec::circle()}));
  cs.push_back(GroupSpec::product({GroupSpec::so3(), GroupSpec::circle()}));
  cs.push_back(GroupSpec::product({GroupSpec::su2(), GroupSpec::torus(2)}));
  cs.push_back(GroupSpec::product({GroupSpec::so3(), GroupSpec::torus(2)}));
  cs.push_back(GroupSpec::product({GroupSpec::su2(), GroupSpec::su2()}));
  cs.push_back(GroupSpec::product({GroupSpec::su2(), GroupSpec::so3()}));
  cs.push_back(GroupSpec::product({GroupSpec::so3(), GroupSpec::so3()}));
  (void)orbit_dim;
  return cs;
}

// Can g act (almost) effectively with principal orbits of this dimension?
bool group_admissible(const GroupSpec& g, int orbit_dim) {
  int hdim = g.dim() - orbit_dim;
  if (hdim < 0) return false;
  if (g.dim() > orbit_dim * (orbit_dim + 1) / 2) return false;
  switch (g.family) {
    case Family::Circle:
    case Family::Torus:
      // abelian: principal isotropy acts trivially everywhere, so it must be
      // trivial; the torus must have exactly the orbit dimension
      return hdim == 0;
    case Family::SO3:
      return true;  // centerless; any isotropy dimension works
    case Family::SU2: {
      // a positive-dimensional H contains the center, so only finite H
      // (almost effective, by the SU(2) listing convention) is allowed
      return hdim == 0;
    }
    case Family::SO4:
      // center {+-I} is finite: almost effective by convention
      return true;
    case Family::Product: {
      // simple x torus products: H of positive dimension must avoid central
      // subtori; two nonabelian factors re-present as almost effective
      // actions of the covering catalog group (SO(4) for SO(3)xSO(3)), so
      // they are listed there
      int nonabelian = 0, torus_rank = 0;
      for (const auto& f : g.factors) {
        if (f.family == Family::SU2 || f.family == Family::SO3) ++nonabelian;
        else if (f.family == Family::Circle) torus_rank += 1;
        else if (f.family == Family::Torus) torus_rank += f.dim();
        else return false;
      }
      if (nonabelian >= 2) return false;
      if (nonabelian == 0) return hdim == 0;
      const GroupSpec& g1 = g.factors[0];
      // H needs dimension hdim inside G1 x T^r with no central circle and
      // no finite core from the G1-factor (effectiveness of the product):
      // a circle of SU(2) always contains -1, so SU(2) x T^r fails.
      if (g1.family == Family::SU2 && hdim > 0) return false;
      if (hdim > 0 && torus_rank >= 2) return false;  // H would meet the center
      // dimension feasibility inside the SO(3) factor: dim H <= 1
      return hdim <= 1;
    }
    default:
      return false;
  }
}

// --- subgroup candidate tables ---------------------------------------------

EmbeddedSubgroup rot_sub(const GroupSpec& p, GroupSpec s, Ax main = Ax::Z,
                         Ax sec = Ax::X) {
  return EmbeddedSubgroup::rot(p, std::move(s), main, sec);
}

struct HCase {
  EmbeddedSubgroup h;
  std::vector<EmbeddedSubgroup> ks;
};

SymInt sym_n(std::int64_t min = 1) { return SymInt::param(1, 0, min); }
SymInt sym_2n(std::int64_t min = 1) { return SymInt::param(2, 0, min); }

std::vector<HCase> h_cases(int dim, const GroupSpec& g) {
  std::vector<HCase> out;
  const int orbit = dim - 1;
  if (g.family == Family::Torus || g.family == Family::Circle) {
    int k = g.dim();
    if (k != orbit) return out;
    HCase c{EmbeddedSubgroup::trivial_in(g), {}};
    // circle and two-torsion representatives; families collapse by the
    // realization invariants
    std::vector<std::vector<std::int64_t>> slopes;
    if (k == 2) slopes = {{1, 0}, {0, 1}, {1, 1}, {1, 2}, {1, 3}, {2, 3}};
    if (k == 3)
      slopes = {{1, 0, 0}, {0, 1, 0}, {0, 0, 1}, {1, 1, 0}, {1, 2, 0}, {0, 1, 1}};
    for (auto& v : slopes) c.ks.push_back(EmbeddedSubgroup::torus_circle(k, v));
    std::vector<std::vector<std::int64_t>> torsion;
    if (k == 2) torsion = {{1, 0}, {0, 1}, {1, 1}};
    if (k == 3) torsion = {{1, 0, 0}, {0, 1, 0}, {0, 0, 1}, {1, 1, 0}, {1, 0, 1}};
    for (auto& t : torsion) c.ks.push_back(EmbeddedSubgroup::torus_cyclic(k, t, 2));
    out.push_back(std::move(c));
    return out;
  }
  if (g.family == Family::SO3) {
    if (dim == 3) {
      out.push_back({rot_sub(g, GroupSpec::circle()),
                     {EmbeddedSubgroup::full(g), rot_sub(g, GroupSpec::o2())}});
      out.push_back({rot_sub(g, GroupSpec::o2()), {EmbeddedSubgroup::full(g)}});
      return out;
    }
    // dim 4: finite principal isotropy
    out.push_back({rot_sub(g, GroupSpec::cyclic(sym_n())),
                   {EmbeddedSubgroup::full(g),
                    rot_sub(g, GroupSpec::cyclic(sym_2n())),
                    rot_sub(g, GroupSpec::dihedral(sym_n())),
                    rot_sub(g, GroupSpec::circle())}});
    out.push_back({rot_sub(g, GroupSpec::dihedral(sym_n(2))),
                   {EmbeddedSubgroup::full(g),
                    rot_sub(g, GroupSpec::dihedral(sym_2n(2))),
                    rot_sub(g, GroupSpec::o2())}});
    out.push_back({rot_sub(g, GroupSpec::tetrahedral()),
                   {EmbeddedSubgroup::full(g), rot_sub(g, GroupSpec::octahedral())}});
    out.push_back({rot_sub(g, GroupSpec::octahedral()), {EmbeddedSubgroup::full(g)}});
    out.push_back({rot_sub(g, GroupSpec::icosahedral()), {EmbeddedSubgroup::full(g)}});
    return out;
  }
  if (g.family == Family::SU2) {
    if (dim != 4) return out;
    // Parker's convention: cyclic principal isotropy with K in
    // {SU(2), Z_2n, S^1}, plus the transverse Pin2 and the quaternion group
    // for the <i> cases
    out.push_back({rot_sub(g, GroupSpec::cyclic(sym_n())),
                   {EmbeddedSubgroup::full(g),
                    rot_sub(g, GroupSpec::cyclic(sym_2n())),
                    rot_sub(g, GroupSpec::circle()),
                    rot_sub(g, GroupSpec::pin2(), Ax::X),
                    rot_sub(g, GroupSpec::quaternion8())}});
    return out;
  }
  if (g.family == Family::SO4) {
    if (dim != 4) return out;
    out.push_back({rot_sub(g, GroupSpec::so3()),
                   {EmbeddedSubgroup::full(g), rot_sub(g, GroupSpec::o3())}});
    out.push_back({rot_sub(g, GroupSpec::o3()), {EmbeddedSubgroup::full(g)}});
    return out;
  }
  if (g.family == Family::Product) {
    if (dim != 4) return out;
    // SO(3) x S^1 with irreducible principal isotropy in the first factor
    const GroupSpec s1 = GroupSpec::circle();
    auto triv1 = EmbeddedSubgroup::trivial_in(s1);
    auto full1 = EmbeddedSubgroup::full(s1);
    auto z2_1 = EmbeddedSubgroup::torus_cyclic(1, {1}, 2);
    const GroupSpec so3 = g.factors[0];
    auto mk = [&](EmbeddedSubgroup a, EmbeddedSubgroup b) {
      return EmbeddedSubgroup::product(g, {std::move(a), std::move(b)});
    };
    auto so2 = rot_sub(so3, GroupSpec::circle());
    auto o2 = rot_sub(so3, GroupSpec::o2());
    auto so3f = EmbeddedSubgroup::full(so3);
    out.push_back({mk(so2, triv1),
                   {mk(so3f, triv1), mk(o2, triv1), mk(so2, z2_1), mk(so2, full1)}});
    out.push_back({mk(o2, triv1),
                   {mk(so3f, triv1), mk(o2, z2_1), mk(o2, full1)}});
    return out;
  }
  return out;
}

// Circle-orbit rows: one per component class of N(H)/H.
void add_circle_rows(int dim, const GroupSpec& g, RowFilter filter,
                     std::vector<TableRow>& rows) {
  std::vector<EmbeddedSubgroup> hs;
  if (g.family == Family::Torus || g.family == Family::Circle) {
    if (g.dim() == dim - 1) hs.push_back(EmbeddedSubgroup::trivial_in(g));
  } else if (g.family == Family::SO3 && dim == 3) {
    hs.push_back(rot_sub(g, GroupSpec::circle()));
    hs.push_back(rot_sub(g, GroupSpec::o2()));
  } else if (g.family == Family::SU2 && dim == 4) {
    hs.push_back(rot_sub(g, GroupSpec::cyclic(sym_n())));
  } else if (g.family == Family::SO3 && dim == 4) {
    hs.push_back(rot_sub(g, GroupSpec::cyclic(sym_n())));
    hs.push_back(rot_sub(g, GroupSpec::dihedral(sym_n(2))));
    hs.push_back(rot_sub(g, GroupSpec::tetrahedral()));
    hs.push_back(rot_sub(g, GroupSpec::octahedral()));
    hs.push_back(rot_sub(g, GroupSpec::icosahedral()));
  } else if (g.family == Family::SO4 && dim == 4) {
    hs.push_back(rot_sub(g, GroupSpec::so3()));
    hs.push_back(rot_sub(g, GroupSpec::o3()));
  } else if (g.family == Family::Product && dim == 4) {
    const GroupSpec so3 = g.factors[0];
    auto triv1 = EmbeddedSubgroup::trivial_in(GroupSpec::circle());
    hs.push_back(EmbeddedSubgroup::product(g, {rot_sub(so3, GroupSpec::circle()), triv1}));
    hs.push_back(EmbeddedSubgroup::product(g, {rot_sub(so3, GroupSpec::o2()), triv1}));
  }
  if (filter == RowFilter::NonManifold) return;  // circle rows are manifolds
  for (const auto& h : hs) {
    auto n = normalizer(h);
    int comps = n.weyl_like_quotient.component_count_bound();
    if (comps < 1) comps = 1;
    if (comps > 2) comps = 2;  // catalog: at most two component classes
    for (int c = 0; c < comps; ++c) {
      GroupDiagram d = GroupDiagram::circle(g, h, c);
      if (!validate(d, dim + 0).accepted) continue;
      TableRow row;
      row.diagram = d;
      row.realization = realize(d);
      if (c == 1 && row.realization.kind == SpaceDescription::Kind::BundleOverCircle)
        row.note = "non-identity gluing class";
      row.manifold = true;
      row.realization_str = row.realization.str();
      row.provenance = "enumerated";
      rows.push_back(std::move(row));
    }
  }
}

bool row_instance_nonmanifold(const GroupDiagram& d, std::int64_t n) {
  GroupDiagram inst = d.has_symbolic_param() ? d.instantiate(n) : d;
  if (!validate(inst).accepted) return false;
  return !is_manifold(inst);
}

bool row_instance_valid(const GroupDiagram& d, std::int64_t n) {
  GroupDiagram inst = d.has_symbolic_param() ? d.instantiate(n) : d;
  return validate(inst).accepted;
}

// Equivalence between (possibly symbolic) rows, sampled over 1..12.
bool rows_collide(const GroupDiagram& a, std::int64_t na, const GroupDiagram& b,
                  std::int64_t max_param) {
  GroupDiagram ia = a.has_symbolic_param() ? a.instantiate(na) : a;
  if (!b.has_symbolic_param())
    return validate(ia).accepted && equivalent(ia, b);
  for (std::int64_t m = 1; m <= max_param; ++m) {
    GroupDiagram ib = b.instantiate(m);
    if (!validate(ib).accepted) continue;
    if (equivalent(ia, ib)) return true;
  }
  return false;
}

std::string genericize_lens(const std::string& s) {
  if (s.rfind("L(", 0) == 0) {
    auto rest = s.substr(s.find(')') + 1);
    return "L(p,q)" + rest;
  }
  return s;
}

}  // namespace

std::vector<GroupSpec> admissible_groups(int dim) {
  if (dim != 3 && dim != 4)
    throw OutOfScope("classification covers dimensions 3 and 4 only");
  std::vector<GroupSpec> out;
  for (const auto& g : candidate_groups(dim - 1))
    if (group_admissible(g, dim - 1)) out.push_back(g);
  // deterministic order: tori first, then by dimension
  std::stable_sort(out.begin(), out.end(), [](const GroupSpec& a, const GroupSpec& b) {
    bool ta = a.family == Family::Torus || a.family == Family::Circle;
    bool tb = b.family == Family::Torus || b.family == Family::Circle;
    if (ta != tb) return ta;
    if (a.dim() != b.dim()) return a.dim() < b.dim();
    return a.less_than(b);
  });
  return out;
}

ClassificationTable enumerate_diagrams(int dim, const GroupSpec& group,
                                       RowFilter filter) {
  auto groups = admissible_groups(dim);
  if (std::find(groups.begin(), groups.end(), group) == groups.end())
    throw OutOfScope("group " + group.str() + " is not admissible in dimension " +
                     std::to_string(dim));
  const std::int64_t max_param = oracle::oracle_bound();
  ClassificationTable table;
  table.dimension = dim;
  table.groups = {group};

  bool torus_like =
      group.family == Family::Torus || group.family == Family::Circle;
  std::vector<TableRow> rows;
  std::vector<std::string> torus_seen;  // family labels already emitted

  for (const auto& hc : h_cases(dim, group)) {
    for (size_t i = 0; i < hc.ks.size(); ++i) {
      for (size_t j = i; j < hc.ks.size(); ++j) {
        GroupDiagram d0 = GroupDiagram::interval(group, hc.h, hc.ks[i], hc.ks[j]);
        if (d0.has_symbolic_param()) d0.parameter = sym_n();
        // Parker's convention: with a space-form fiber on one side, the
        // quaternion group stays in the SO(3) listing
        if (group.family == Family::SU2) {
          bool has_full = hc.ks[i].covers_parent() || hc.ks[j].covers_parent();
          bool has_q8 = hc.ks[i].group == GroupSpec::quaternion8() ||
                        hc.ks[j].group == GroupSpec::quaternion8();
          if (has_full && has_q8) continue;
        }
        std::vector<GroupDiagram> emit;
        auto dup_of_earlier = [&](const GroupDiagram& cand, std::int64_t n) {
          for (const auto& prev : rows)
            if (prev.diagram.orbit == OrbitSpaceKind::Interval &&
                rows_collide(cand, n, prev.diagram, max_param))
              return true;
          for (const auto& e : emit)
            if (rows_collide(cand, n, e, max_param)) return true;
          return false;
        };
        if (d0.has_symbolic_param() && validate(d0).accepted) {
          // a genuine one-parameter family: find its smallest parameter
          std::int64_t min_n = -1;
          for (std::int64_t n = 1; n <= max_param && min_n < 0; ++n) {
            if (!row_instance_valid(d0, n)) continue;
            if (filter == RowFilter::NonManifold && !row_instance_nonmanifold(d0, n))
              continue;
            if (filter == RowFilter::Manifold && row_instance_nonmanifold(d0, n))
              continue;
            if (!dup_of_earlier(d0, n)) min_n = n;
          }
          if (min_n < 0) continue;
          GroupDiagram bounded = d0;
          auto bump = [min_n](SymInt s) {
            return s.is_concrete() ? s : SymInt{s.coeff, s.offset, min_n};
          };
          auto fix = [&bump](auto&& self, EmbeddedSubgroup& s) -> void {
            s.group.param = bump(s.group.param);
            for (auto& p : s.parts) self(self, p);
          };
          fix(fix, bounded.h);
          fix(fix, bounded.k_minus);
          fix(fix, bounded.k_plus);
          bounded.parameter = SymInt::param(1, 0, min_n);
          emit.push_back(bounded);
        } else if (d0.has_symbolic_param()) {
          // valid only at isolated parameters: emit those concretely
          for (std::int64_t n = 1; n <= max_param; ++n) {
            GroupDiagram inst = d0.instantiate(n);
            if (!validate(inst).accepted) continue;
            if (filter == RowFilter::NonManifold && is_manifold(inst)) continue;
            if (filter == RowFilter::Manifold && !is_manifold(inst)) continue;
            if (dup_of_earlier(inst, 0)) continue;
            emit.push_back(inst);
          }
        } else {
          if (!validate(d0).accepted) continue;
          if (filter == RowFilter::NonManifold && is_manifold(d0)) continue;
          if (filter == RowFilter::Manifold && !is_manifold(d0)) continue;
          if (!dup_of_earlier(d0, 0)) emit.push_back(d0);
        }
        for (auto& d : emit) {
          d = canonical_form(d);
          TableRow row;
          row.diagram = d;
          row.realization = realize(d);
          row.manifold = is_manifold(d);
          if (filter == RowFilter::Manifold && !row.manifold) continue;
          if (filter == RowFilter::NonManifold && row.manifold) continue;
          row.realization_str = row.realization.str();
          row.provenance = "enumerated";
          if (d.parameter && !d.parameter->is_concrete() &&
              d.parameter->min_param > 1)
            row.note = "n >= " + std::to_string(d.parameter->min_param);
          if (group.family == Family::SU2 &&
              d.h.group == GroupSpec::cyclic(4) && row.manifold &&
              ((d.k_minus.group.family == Family::Pin2 &&
                d.k_minus.main != d.h.main) ||
               (d.k_plus.group.family == Family::Pin2 &&
                d.k_plus.main != d.h.main)))
            row.note = "missing from Parker's manifold classification "
                       "(Hoelscher's correction)";
          if (torus_like) {
            std::string fam = genericize_lens(row.realization_str);
            if (std::find(torus_seen.begin(), torus_seen.end(), fam) !=
                torus_seen.end())
              continue;
            torus_seen.push_back(fam);
            if (fam != row.realization_str) {
              row.note = "lens family; representative " + row.realization_str;
              row.realization_str = fam;
            }
          }
          rows.push_back(std::move(row));
        }
      }
    }
  }

  // merge suspension rows over one group into a single Gamma-row
  {
    std::vector<size_t> susp;
    for (size_t i = 0; i < rows.size(); ++i)
      if (rows[i].diagram.orbit == OrbitSpaceKind::Interval &&
          rows[i].diagram.k_minus.covers_parent() &&
          rows[i].diagram.k_plus.covers_parent() &&
          rows[i].diagram.h.is_finite() && !rows[i].diagram.h.is_trivial())
        susp.push_back(i);
    if (susp.size() > 1) {
      TableRow merged = rows[susp[0]];
      std::string families;
      for (size_t idx : susp) {
        const auto& hg = rows[idx].diagram.h.group;
        if (!families.empty()) families += ", ";
        families += hg.str();
        if (rows[idx].diagram.parameter &&
            rows[idx].diagram.parameter->min_param > 1)
          families += " (n >= " +
                      std::to_string(rows[idx].diagram.parameter->min_param) + ")";
      }
      if (merged.realization.kind == SpaceDescription::Kind::Suspension) {
        merged.realization.space.generic_gamma = true;
        merged.realization.space.display_override.clear();
      }
      merged.realization_str = merged.realization.str();
      merged.note = "Gamma in {" + families + "}";
      std::vector<TableRow> kept;
      for (size_t i = 0; i < rows.size(); ++i) {
        if (i == susp[0]) kept.push_back(merged);
        else if (std::find(susp.begin(), susp.end(), i) == susp.end())
          kept.push_back(rows[i]);
      }
      rows = std::move(kept);
    }
  }

  add_circle_rows(dim, group, filter, rows);
  table.rows = std::move(rows);
  return table;
}

ClassificationTable theorem_b_table() {
  ClassificationTable table;
  table.dimension = 3;
  table.groups = admissible_groups(3);
  for (const auto& g : table.groups) {
    auto t = enumerate_diagrams(3, g, RowFilter::All);
    for (auto& r : t.rows) table.rows.push_back(std::move(r));
  }
  return table;
}

ClassificationTable theorem_c_table() {
  ClassificationTable table;
  table.dimension = 4;
  table.groups = admissible_groups(4);
  static const char* kPaperRows[] = {
      "Thm C row 1",  "Thm C row 2",  "Thm C row 3",  "Thm C row 4",
      "Thm C row 5",  "Thm C row 6",  "Thm C row 7",  "Thm C row 8",
      "Thm C row 9",  "Thm C row 10", "Thm C row 11", "Thm C row 12",
      "Thm C row 13", "Thm C row 14", "Thm C row 15"};
  // paper order: SU(2), SO(3), SO(3) x S^1, SO(4)
  std::vector<GroupSpec> order = {GroupSpec::su2(), GroupSpec::so3(),
                                  GroupSpec::so3_x_s1(), GroupSpec::so4()};
  size_t label = 0;
  for (const auto& g : order) {
    auto t = enumerate_diagrams(4, g, RowFilter::NonManifold);
    for (auto& r : t.rows) {
      if (label < std::size(kPaperRows)) r.provenance = kPaperRows[label++];
      table.rows.push_back(std::move(r));
    }
  }
  // T^3 contributes no non-manifold rows; keep it in the group list
  auto t3 = enumerate_diagrams(4, GroupSpec::torus(3), RowFilter::NonManifold);
  for (auto& r : t3.rows) table.rows.push_back(std::move(r));
  return table;
}

std::vector<TorusOrbitType> torus_orbit_types(int n) {
  if (n < 2) throw OutOfScope("torus orbit types need n >= 2");
  // A torus acts transitively and effectively only on a circle, and its
  // only finite subgroup acting freely-transitively on a sphere is Z_2 on
  // S^0; hence the three orbit types.
  std::vector<TorusOrbitType> out;
  out.push_back({"T^" + std::to_string(n - 1), GroupSpec::trivial()});
  out.push_back({"T^" + std::to_string(n - 1) + "/Z_2", GroupSpec::cyclic(2)});
  out.push_back({"T^" + std::to_string(n - 2), GroupSpec::circle()});
  return out;
}

std::vector<CorollaryBEntry> corollary_b_list(int n) {
  if (n < 4) throw OutOfScope("Corollary B needs n >= 4");
  auto t2 = enumerate_diagrams(3, GroupSpec::torus(2), RowFilter::All);
  // paper order of the eight families
  static const char* kOrder[] = {"T^3",       "S^3",        "L(p,q)",
                                 "S^2 x S^1", "S^2 x~ S^1", "Kl x S^1",
                                 "RP^2 x S^1", "A"};
  std::vector<CorollaryBEntry> out;
  std::string prefix = "T^" + std::to_string(n - 3) + " x ";
  for (const char* fam : kOrder) {
    bool found = false;
    for (const auto& r : t2.rows)
      if (r.realization_str == fam) found = true;
    if (!found) throw CatalogError(std::string("missing T^2 family: ") + fam);
    out.push_back({fam, prefix + fam});
  }
  return out;
}

}  // namespace cohom1
