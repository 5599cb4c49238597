#pragma once

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>

namespace cohom1 {

// Linear expression c*n + o in a single nonnegative family parameter n,
// with a lower bound on n. Concrete values have c == 0.
struct SymInt {
  std::int64_t coeff = 0;
  std::int64_t offset = 0;
  std::int64_t min_param = 1;  // n >= min_param (ignored when concrete)

  constexpr SymInt() = default;
  constexpr SymInt(std::int64_t c, std::int64_t o, std::int64_t mp = 1)
      : coeff(c), offset(o), min_param(mp) {}

  static constexpr SymInt concrete(std::int64_t v) { return SymInt{0, v}; }
  static constexpr SymInt param(std::int64_t c = 1, std::int64_t o = 0,
                                std::int64_t mp = 1) {
    return SymInt{c, o, mp};
  }

  bool is_concrete() const { return coeff == 0; }
  std::int64_t value() const {
    if (!is_concrete()) throw std::logic_error("SymInt: symbolic value");
    return offset;
  }

  std::int64_t instantiate(std::int64_t n) const { return coeff * n + offset; }

  // Smallest value this expression can take.
  std::int64_t min_value() const { return coeff * min_param + offset; }

  SymInt times(std::int64_t k) const {
    return SymInt{coeff * k, offset * k, min_param};
  }

  // Family-level equality: n and 2n are distinct; bounds do not matter.
  friend bool operator==(const SymInt& a, const SymInt& b) {
    return a.coeff == b.coeff && a.offset == b.offset;
  }
  friend bool operator!=(const SymInt& a, const SymInt& b) { return !(a == b); }
  friend bool operator<(const SymInt& a, const SymInt& b) {
    if (a.coeff != b.coeff) return a.coeff < b.coeff;
    return a.offset < b.offset;
  }

  // True when this divides rhs for every admissible parameter value.
  bool divides(const SymInt& rhs) const {
    if (is_concrete()) {
      if (offset == 0) return rhs.is_concrete() && rhs.offset == 0;
      return rhs.coeff % offset == 0 && rhs.offset % offset == 0;
    }
    // c*n + o | c'*n + o' for all n iff the quotient is a constant integer k.
    if (coeff == 0) return false;
    if (rhs.coeff % coeff != 0) return false;
    std::int64_t k = rhs.coeff / coeff;
    return k > 0 && rhs.offset == k * offset;
  }

  // lcm only for the aligned cases used by the catalog (a | b or b | a).
  std::optional<SymInt> lcm(const SymInt& rhs) const {
    if (divides(rhs)) return rhs;
    if (rhs.divides(*this)) return *this;
    if (is_concrete() && rhs.is_concrete()) {
      std::int64_t a = offset, b = rhs.offset;
      if (a == 0 || b == 0) return concrete(0);
      std::int64_t g = a, h = b;
      while (h) { std::int64_t t = g % h; g = h; h = t; }
      return concrete(a / g * b);
    }
    return std::nullopt;
  }

  std::string str(const std::string& name = "n") const {
    if (is_concrete()) return std::to_string(offset);
    std::string s;
    if (coeff == -1) s = "-" + name;
    else if (coeff == 1) s = name;
    else s = std::to_string(coeff) + name;
    if (offset > 0) s += "+" + std::to_string(offset);
    if (offset < 0) s += std::to_string(offset);
    return s;
  }
};

}  // namespace cohom1
