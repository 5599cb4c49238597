#include "cohom1/parse.hpp"

#include <cctype>
#include <numeric>

namespace cohom1 {

namespace {

struct Cursor {
  const std::string& s;
  size_t pos = 0;

  [[noreturn]] void fail(const std::string& msg) const {
    throw ParseError(msg, 1, static_cast<int>(pos) + 1);
  }
  void skip_ws() {
    while (pos < s.size() && std::isspace(static_cast<unsigned char>(s[pos])))
      ++pos;
  }
  bool eat(char c) {
    skip_ws();
    if (pos < s.size() && s[pos] == c) {
      ++pos;
      return true;
    }
    return false;
  }
  void expect(char c) {
    if (!eat(c)) fail(std::string("expected '") + c + "'");
  }
  // token up to a delimiter at paren depth 0
  std::string until_delims(const std::string& delims) {
    skip_ws();
    size_t start = pos;
    int depth = 0;
    while (pos < s.size()) {
      char c = s[pos];
      if (c == '(') ++depth;
      if (c == ')') {
        if (depth == 0) break;
        --depth;
      }
      if (depth == 0 && delims.find(c) != std::string::npos) break;
      ++pos;
    }
    std::string tok = s.substr(start, pos - start);
    while (!tok.empty() && std::isspace(static_cast<unsigned char>(tok.back())))
      tok.pop_back();
    return tok;
  }
};

Ax parse_axis(const std::string& a, Cursor& cur) {
  if (a == "x") return Ax::X;
  if (a == "y") return Ax::Y;
  if (a == "z") return Ax::Z;
  cur.fail("unknown axis '" + a + "'");
}

struct SubToken {
  std::string name;
  std::optional<Ax> axis, sec;
};

SubToken split_annotations(std::string tok, Cursor& cur) {
  SubToken t;
  size_t at = tok.find('@');
  t.name = tok.substr(0, at);
  while (at != std::string::npos) {
    size_t next = tok.find('@', at + 1);
    std::string anno = tok.substr(at + 1, next == std::string::npos
                                              ? std::string::npos
                                              : next - at - 1);
    if (anno.rfind("axis:", 0) == 0)
      t.axis = parse_axis(anno.substr(5), cur);
    else if (anno.rfind("sec:", 0) == 0)
      t.sec = parse_axis(anno.substr(4), cur);
    else
      cur.fail("unknown annotation '@" + anno + "'");
    at = next;
  }
  return t;
}

std::optional<SymInt> parse_param(const std::string& digits) {
  // "4" -> concrete, "n" -> n, "2n" -> 2n
  if (digits == "n") return SymInt::param(1, 0, 1);
  if (digits.size() > 1 && digits.back() == 'n') {
    std::string c = digits.substr(0, digits.size() - 1);
    for (char ch : c)
      if (!std::isdigit(static_cast<unsigned char>(ch))) return std::nullopt;
    return SymInt::param(std::stoll(c), 0, 1);
  }
  for (char ch : digits)
    if (!std::isdigit(static_cast<unsigned char>(ch))) return std::nullopt;
  if (digits.empty()) return std::nullopt;
  return SymInt::concrete(std::stoll(digits));
}

std::vector<std::string> split_top_x(const std::string& tok) {
  std::vector<std::string> parts;
  int depth = 0;
  std::string cur;
  for (char c : tok) {
    if (c == '(') ++depth;
    if (c == ')') --depth;
    if (c == 'x' && depth == 0) {
      parts.push_back(cur);
      cur.clear();
    } else {
      cur += c;
    }
  }
  parts.push_back(cur);
  return parts;
}

GroupSpec parse_group(const std::string& tok, Cursor& cur) {
  auto parts = split_top_x(tok);
  if (parts.size() > 1) {
    std::vector<GroupSpec> fs;
    for (const auto& p : parts) fs.push_back(parse_group(p, cur));
    return GroupSpec::product(std::move(fs));
  }
  if (tok == "SO3") return GroupSpec::so3();
  if (tok == "SU2") return GroupSpec::su2();
  if (tok == "SO4") return GroupSpec::so4();
  if (tok == "S1" || tok == "T1") return GroupSpec::circle();
  if (tok.size() == 2 && tok[0] == 'T' && std::isdigit((unsigned char)tok[1])) {
    int k = tok[1] - '0';
    return k == 1 ? GroupSpec::circle() : GroupSpec::torus(k);
  }
  cur.fail("unknown group '" + tok + "'");
}

// rational list "1/2,0,3/4" -> numerators over a common denominator
std::pair<std::vector<std::int64_t>, std::int64_t> parse_rationals(
    const std::string& body, Cursor& cur) {
  std::vector<std::pair<std::int64_t, std::int64_t>> fracs;
  std::string item;
  auto flush = [&] {
    if (item.empty()) cur.fail("empty coordinate");
    size_t slash = item.find('/');
    std::int64_t num = std::stoll(item.substr(0, slash));
    std::int64_t den = slash == std::string::npos
                           ? 1
                           : std::stoll(item.substr(slash + 1));
    if (den <= 0) cur.fail("bad denominator");
    fracs.push_back({num, den});
    item.clear();
  };
  for (char c : body) {
    if (c == ',') flush();
    else if (!std::isspace(static_cast<unsigned char>(c))) item += c;
  }
  flush();
  std::int64_t den = 1;
  for (auto& f : fracs) den = std::lcm(den, f.second);
  std::vector<std::int64_t> nums;
  for (auto& f : fracs) nums.push_back(f.first * (den / f.second));
  return {nums, den};
}

EmbeddedSubgroup parse_torus_sub(const GroupSpec& parent, const std::string& tok,
                                 Cursor& cur) {
  int k = parent.dim();
  if (tok == "e" || tok == "1") return EmbeddedSubgroup::trivial_in(parent);
  if (tok == "S1" || tok == "T1" || tok == "T2" || tok == "T3") {
    GroupSpec g = parse_group(tok, cur);
    if (g.dim() != k) cur.fail("subtorus token does not match the parent");
    return EmbeddedSubgroup::full(parent);
  }
  if (tok.rfind("circle(", 0) == 0 && tok.back() == ')') {
    auto [nums, den] = parse_rationals(tok.substr(7, tok.size() - 8), cur);
    if (den != 1) cur.fail("circle slopes are integers");
    if (static_cast<int>(nums.size()) != k) cur.fail("slope arity mismatch");
    return EmbeddedSubgroup::torus_circle(k, nums);
  }
  if ((tok[0] == 'z' || tok[0] == 'Z') && tok.find('(') != std::string::npos &&
      tok.back() == ')') {
    size_t open = tok.find('(');
    auto ord = parse_param(tok.substr(1, open - 1));
    if (!ord || !ord->is_concrete()) cur.fail("finite torus subgroup needs a concrete order");
    auto [nums, den] = parse_rationals(tok.substr(open + 1, tok.size() - open - 2), cur);
    if (static_cast<int>(nums.size()) != k) cur.fail("point arity mismatch");
    // the point p/den must have order ord
    std::int64_t m = ord->value();
    std::vector<std::int64_t> scaled(nums.size());
    // generator = point itself: subgroup generated by (nums/den)
    (void)m;
    return EmbeddedSubgroup::torus_cyclic(k, nums, den);
  }
  if ((tok[0] == 'z' || tok[0] == 'Z') && k == 1) {
    auto ord = parse_param(tok.substr(1));
    if (ord && ord->is_concrete())
      return EmbeddedSubgroup::torus_cyclic(1, {1}, ord->value());
  }
  cur.fail("unknown torus subgroup '" + tok + "'");
}

EmbeddedSubgroup parse_rot_sub(const GroupSpec& parent, const SubToken& t,
                               Cursor& cur) {
  const std::string& n = t.name;
  Ax main = t.axis.value_or(Ax::Z);
  Ax sec = t.sec.value_or(main == Ax::X ? Ax::Y : Ax::X);
  auto rot = [&](GroupSpec g) {
    return EmbeddedSubgroup::rot(parent, std::move(g), main, sec);
  };
  if (n == "e" || n == "1") return EmbeddedSubgroup::trivial_in(parent);
  if (n == "SO3" || n == "SU2" || n == "SO4") {
    GroupSpec g = parse_group(n, cur);
    if (g == parent) return EmbeddedSubgroup::full(parent);
    if (parent.family == Family::SO4 && g.family == Family::SO3)
      return rot(GroupSpec::so3());
    cur.fail("'" + n + "' is not a subgroup of " + parent.str());
  }
  if (n == "O3") {
    if (parent.family != Family::SO4) cur.fail("O3 embeds in SO4 only");
    return rot(GroupSpec::o3());
  }
  if (n == "SO2" || n == "circle" || n == "S1") return rot(GroupSpec::circle());
  if (n == "O2") return rot(GroupSpec::o2());
  if (n == "Pin2") {
    if (parent.family != Family::SU2) cur.fail("Pin2 lives in SU2");
    // default: the transverse position (the only one admitting cyclic H
    // across the components); @axis overrides
    Ax a = t.axis.value_or(Ax::X);
    return EmbeddedSubgroup::rot(parent, GroupSpec::pin2(), a);
  }
  if (n == "Q8") {
    if (parent.family != Family::SU2) cur.fail("Q8 lives in SU2");
    return rot(GroupSpec::quaternion8());
  }
  if (n == "T" || n == "O" || n == "I" || n == "T*" || n == "O*" || n == "I*") {
    bool binary = n.back() == '*';
    if (binary && parent.family != Family::SU2)
      cur.fail("binary polyhedral groups live in SU2");
    if (!binary && parent.family != Family::SO3)
      cur.fail("polyhedral groups live in SO3");
    char c = n[0];
    if (c == 'T')
      return rot(binary ? GroupSpec::binary_tetrahedral() : GroupSpec::tetrahedral());
    if (c == 'O')
      return rot(binary ? GroupSpec::binary_octahedral() : GroupSpec::octahedral());
    return rot(binary ? GroupSpec::binary_icosahedral() : GroupSpec::icosahedral());
  }
  if (n == "<i>") {
    if (parent.family != Family::SU2) cur.fail("<i> lives in SU2");
    return rot(GroupSpec::cyclic(4));
  }
  if (n[0] == 'Z' || n[0] == 'D') {
    bool binary = n.back() == '*';
    std::string digits = n.substr(1, n.size() - 1 - (binary ? 1 : 0));
    auto p = parse_param(digits);
    if (!p) cur.fail("bad subscript in '" + n + "'");
    if (n[0] == 'Z') {
      if (binary) cur.fail("'" + n + "': cyclic groups have no binary form");
      return rot(GroupSpec::cyclic(*p));
    }
    if (parent.family == Family::SU2 && !binary)
      cur.fail("plain dihedral groups live in SO3; use D" + digits + "*");
    if (parent.family == Family::SO3 && binary)
      cur.fail("binary dihedral groups live in SU2");
    return rot(binary ? GroupSpec::binary_dihedral(*p) : GroupSpec::dihedral(*p));
  }
  cur.fail("unknown subgroup '" + n + "'");
}

EmbeddedSubgroup parse_sub(const GroupSpec& parent, const std::string& tok,
                           Cursor& cur) {
  if (tok.empty()) cur.fail("empty subgroup token");
  if (parent.family == Family::Torus || parent.family == Family::Circle)
    return parse_torus_sub(parent, tok, cur);
  if (parent.family == Family::Product) {
    auto parts = split_top_x(tok);
    std::vector<EmbeddedSubgroup> subs;
    if (parts.size() == parent.factors.size()) {
      for (size_t i = 0; i < parts.size(); ++i)
        subs.push_back(parse_sub(parent.factors[i], parts[i], cur));
    } else if (parts.size() == 1) {
      // shorthand: a first-factor subgroup, trivial elsewhere
      subs.push_back(parse_sub(parent.factors[0], parts[0], cur));
      for (size_t i = 1; i < parent.factors.size(); ++i)
        subs.push_back(EmbeddedSubgroup::trivial_in(parent.factors[i]));
    } else {
      cur.fail("product subgroup arity mismatch");
    }
    return EmbeddedSubgroup::product(parent, std::move(subs));
  }
  return parse_rot_sub(parent, split_annotations(tok, cur), cur);
}

}  // namespace

GroupDiagram parse_diagram(const std::string& text) {
  Cursor cur{text};
  cur.expect('(');
  std::string gtok = cur.until_delims(",;");
  GroupSpec g = parse_group(gtok, cur);
  cur.expect(',');
  std::string htok = cur.until_delims(",;");
  EmbeddedSubgroup h = parse_sub(g, htok, cur);
  cur.skip_ws();
  if (cur.eat(';')) {
    std::string rest = cur.until_delims(")");
    int gluing = 0;
    if (rest.rfind("circle", 0) != 0) cur.fail("expected 'circle' orbit tag");
    if (rest.size() > 6) {
      if (rest[6] != ':') cur.fail("expected ':' after circle");
      gluing = std::stoi(rest.substr(7));
    }
    cur.expect(')');
    cur.skip_ws();
    if (cur.pos != text.size()) cur.fail("trailing input");
    return GroupDiagram::circle(g, h, gluing);
  }
  cur.expect(',');
  std::string km = cur.until_delims(",");
  EmbeddedSubgroup k_minus = parse_sub(g, km, cur);
  cur.expect(',');
  std::string kp = cur.until_delims(")");
  EmbeddedSubgroup k_plus = parse_sub(g, kp, cur);
  cur.expect(')');
  cur.skip_ws();
  if (cur.pos != text.size()) cur.fail("trailing input");
  GroupDiagram d = GroupDiagram::interval(g, h, k_minus, k_plus);
  if (d.has_symbolic_param()) d.parameter = SymInt::param(1, 0, 1);
  return d;
}

namespace {

std::string group_token(const GroupSpec& g) {
  switch (g.family) {
    case Family::SO3: return "SO3";
    case Family::SU2: return "SU2";
    case Family::SO4: return "SO4";
    case Family::Circle: return "S1";
    case Family::Torus: return "T" + std::to_string(g.dim());
    case Family::Product: {
      std::string s;
      for (size_t i = 0; i < g.factors.size(); ++i) {
        if (i) s += "x";
        s += group_token(g.factors[i]);
      }
      return s;
    }
    default: throw CatalogError("unserializable group " + g.str());
  }
}

std::string param_token(const SymInt& p) {
  if (p.is_concrete()) return std::to_string(p.value());
  if (p.coeff == 1 && p.offset == 0) return "n";
  if (p.offset == 0) return std::to_string(p.coeff) + "n";
  throw CatalogError("unserializable parameter " + p.str());
}

std::string axis_token(Ax a) {
  return a == Ax::X ? "x" : (a == Ax::Y ? "y" : "z");
}

std::string sub_token(const EmbeddedSubgroup& s) {
  switch (s.kind) {
    case EmbKind::Full: return group_token(s.parent);
    case EmbKind::Rot: {
      std::string base;
      bool axed = false, secd = false;
      switch (s.group.family) {
        case Family::Trivial: return "e";
        case Family::Cyclic: base = "Z" + param_token(s.group.param); axed = true; break;
        case Family::Dihedral:
          base = "D" + param_token(s.group.param);
          axed = secd = true;
          break;
        case Family::BinaryDihedral:
          base = "D" + param_token(s.group.param) + "*";
          axed = secd = true;
          break;
        case Family::Tetrahedral: return "T";
        case Family::Octahedral: return "O";
        case Family::Icosahedral: return "I";
        case Family::BinaryTetrahedral: return "T*";
        case Family::BinaryOctahedral: return "O*";
        case Family::BinaryIcosahedral: return "I*";
        case Family::Circle: base = "SO2"; axed = true; break;
        case Family::O2: base = "O2"; axed = true; break;
        case Family::Pin2:
          // default parse position is transverse (x)
          return s.main == Ax::X ? "Pin2" : "Pin2@axis:" + axis_token(s.main);
        case Family::SO3: return "SO3";
        case Family::O3: return "O3";
        default: throw CatalogError("unserializable subgroup");
      }
      if (axed && s.main != Ax::Z) base += "@axis:" + axis_token(s.main);
      if (secd && s.sec != Ax::X) base += "@sec:" + axis_token(s.sec);
      return base;
    }
    case EmbKind::TorusSub: {
      if (s.covers_parent()) return group_token(s.parent);
      if (s.is_trivial()) return "e";
      if (s.dim() == 1 && s.is_connected()) {
        auto v = s.circle_slope();
        std::string out = "circle(";
        for (size_t i = 0; i < v.size(); ++i) {
          if (i) out += ",";
          out += std::to_string(v[i]);
        }
        return out + ")";
      }
      // finite cyclic with generator, via the display form Z_d(...)
      std::string disp = s.str();
      if (disp.rfind("Z_", 0) == 0) {
        std::string out = "z" + disp.substr(2);
        return out;
      }
      throw CatalogError("unserializable torus subgroup " + disp);
    }
    case EmbKind::ProductSub: {
      std::string out;
      for (size_t i = 0; i < s.parts.size(); ++i) {
        if (i) out += "x";
        out += sub_token(s.parts[i]);
      }
      return out;
    }
    default:
      throw CatalogError("unserializable subgroup kind");
  }
}

}  // namespace

std::string serialize_diagram(const GroupDiagram& d) {
  std::string g = group_token(d.g);
  if (d.orbit == OrbitSpaceKind::Circle)
    return "(" + g + ", " + sub_token(d.h) + "; circle:" +
           std::to_string(d.gluing_component) + ")";
  return "(" + g + ", " + sub_token(d.h) + ", " + sub_token(d.k_minus) + ", " +
         sub_token(d.k_plus) + ")";
}

}  // namespace cohom1
