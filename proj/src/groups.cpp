#include "cohom1/groups.hpp"

#include <stdexcept>

namespace cohom1 {

int GroupSpec::dim() const {
  switch (family) {
    case Family::Trivial:
    case Family::Cyclic:
    case Family::Dihedral:
    case Family::BinaryDihedral:
    case Family::Tetrahedral:
    case Family::Octahedral:
    case Family::Icosahedral:
    case Family::BinaryTetrahedral:
    case Family::BinaryOctahedral:
    case Family::BinaryIcosahedral:
      return 0;
    case Family::Circle:
    case Family::O2:
    case Family::Pin2:
      return 1;
    case Family::Torus:
      return static_cast<int>(param.value());
    case Family::SU2:
    case Family::SO3:
    case Family::O3:
      return 3;
    case Family::SO4:
      return 6;
    case Family::Product: {
      int d = 0;
      for (const auto& f : factors) d += f.dim();
      return d;
    }
  }
  return 0;
}

bool GroupSpec::is_finite() const {
  if (family == Family::Product) {
    for (const auto& f : factors)
      if (!f.is_finite()) return false;
    return true;
  }
  return dim() == 0;
}

std::optional<SymInt> GroupSpec::order() const {
  switch (family) {
    case Family::Trivial: return SymInt::concrete(1);
    case Family::Cyclic: return param;
    case Family::Dihedral: return param.times(2);
    case Family::BinaryDihedral: return param.times(4);
    case Family::Tetrahedral: return SymInt::concrete(12);
    case Family::Octahedral: return SymInt::concrete(24);
    case Family::Icosahedral: return SymInt::concrete(60);
    case Family::BinaryTetrahedral: return SymInt::concrete(24);
    case Family::BinaryOctahedral: return SymInt::concrete(48);
    case Family::BinaryIcosahedral: return SymInt::concrete(120);
    case Family::Product: {
      SymInt o = SymInt::concrete(1);
      for (const auto& f : factors) {
        auto fo = f.order();
        if (!fo) return std::nullopt;
        if (fo->is_concrete())
          o = o.is_concrete() ? SymInt::concrete(o.value() * fo->value())
                              : o.times(fo->value());
        else if (o.is_concrete())
          o = fo->times(o.value());
        else
          return std::nullopt;  // two symbolic factors: outside the catalog
      }
      return o;
    }
    default: return std::nullopt;
  }
}

int GroupSpec::component_count_bound() const {
  switch (family) {
    case Family::O2:
    case Family::Pin2:
    case Family::O3:
      return 2;
    case Family::Circle:
    case Family::Torus:
    case Family::SU2:
    case Family::SO3:
    case Family::SO4:
      return 1;
    case Family::Product: {
      int c = 1;
      for (const auto& f : factors) c *= f.component_count_bound();
      return c;
    }
    default: {
      auto o = order();
      return o && o->is_concrete() ? static_cast<int>(o->value()) : -1;
    }
  }
}

bool GroupSpec::is_connected() const {
  if (family == Family::Trivial) return true;
  if (is_finite()) {
    auto o = order();
    return o && o->is_concrete() && o->value() == 1;
  }
  switch (family) {
    case Family::Circle:
    case Family::Torus:
    case Family::SU2:
    case Family::SO3:
    case Family::SO4:
      return true;
    case Family::O2:
    case Family::Pin2:
    case Family::O3:
      return false;
    case Family::Product:
      for (const auto& f : factors)
        if (!f.is_connected()) return false;
      return true;
    default:
      return false;
  }
}

bool GroupSpec::is_abelian() const {
  switch (family) {
    case Family::Trivial:
    case Family::Cyclic:
    case Family::Circle:
    case Family::Torus:
      return true;
    case Family::Dihedral:
      return param.is_concrete() && param.value() <= 1;
    case Family::Product:
      for (const auto& f : factors)
        if (!f.is_abelian()) return false;
      return true;
    default:
      return false;
  }
}

bool GroupSpec::has_symbolic_param() const {
  if (!param.is_concrete()) return true;
  for (const auto& f : factors)
    if (f.has_symbolic_param()) return true;
  return false;
}

GroupSpec GroupSpec::instantiate(std::int64_t n) const {
  GroupSpec g = *this;
  if (!g.param.is_concrete()) g.param = SymInt::concrete(param.instantiate(n));
  for (auto& f : g.factors) f = f.instantiate(n);
  return g;
}

std::string GroupSpec::str() const {
  switch (family) {
    case Family::Trivial: return "{e}";
    case Family::Cyclic: return "Z_" + param.str();
    case Family::Dihedral: return "D_" + param.str();
    case Family::BinaryDihedral:
      if (param.is_concrete() && param.value() == 2) return "Q8";
      return "D*_" + param.str();
    case Family::Tetrahedral: return "T";
    case Family::Octahedral: return "O";
    case Family::Icosahedral: return "I";
    case Family::BinaryTetrahedral: return "T*";
    case Family::BinaryOctahedral: return "O*";
    case Family::BinaryIcosahedral: return "I*";
    case Family::Circle: return "S^1";
    case Family::O2: return "O(2)";
    case Family::Pin2: return "Pin2";
    case Family::Torus: return "T^" + param.str();
    case Family::SU2: return "SU(2)";
    case Family::SO3: return "SO(3)";
    case Family::SO4: return "SO(4)";
    case Family::O3: return "O(3)";
    case Family::Product: {
      std::string s;
      for (size_t i = 0; i < factors.size(); ++i) {
        if (i) s += " x ";
        s += factors[i].str();
      }
      return s;
    }
  }
  return "?";
}

bool operator==(const GroupSpec& a, const GroupSpec& b) {
  if (a.family != b.family) return false;
  if (a.family == Family::Product) {
    if (a.factors.size() != b.factors.size()) return false;
    for (size_t i = 0; i < a.factors.size(); ++i)
      if (a.factors[i] != b.factors[i]) return false;
    return true;
  }
  switch (a.family) {
    case Family::Cyclic:
    case Family::Dihedral:
    case Family::BinaryDihedral:
    case Family::Torus:
      return a.param == b.param;
    default:
      return true;
  }
}

bool GroupSpec::less_than(const GroupSpec& o) const {
  if (family != o.family) return static_cast<int>(family) < static_cast<int>(o.family);
  if (param != o.param) return param < o.param;
  if (factors.size() != o.factors.size()) return factors.size() < o.factors.size();
  for (size_t i = 0; i < factors.size(); ++i) {
    if (factors[i] != o.factors[i]) return factors[i].less_than(o.factors[i]);
  }
  return false;
}

}  // namespace cohom1
