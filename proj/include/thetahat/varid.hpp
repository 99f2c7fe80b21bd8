#pragma once

#include <compare>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <variant>
#include <vector>

namespace thetahat {

// Chart variable of the connection space: a base coordinate x^i or a fiber
// coordinate G^a_{i b}.  Fiber lower indices are stored with i <= b; the
// bundle is torsion free, so G^a_{i b} and G^a_{b i} are the same variable.
// Indices are 1-based.  Ordering: all base variables before all fiber
// variables, lexicographic within each kind.
class VarId {
 public:
  static VarId base(int i) {
    check_index(i);
    VarId v;
    v.fiber_ = false;
    v.i_ = static_cast<std::uint16_t>(i);
    return v;
  }

  static VarId fiber(int a, int i, int b) {
    check_index(a);
    check_index(i);
    check_index(b);
    if (i > b) std::swap(i, b);
    VarId v;
    v.fiber_ = true;
    v.a_ = static_cast<std::uint16_t>(a);
    v.i_ = static_cast<std::uint16_t>(i);
    v.b_ = static_cast<std::uint16_t>(b);
    return v;
  }

  bool is_base() const { return !fiber_; }
  bool is_fiber() const { return fiber_; }

  int index() const { return i_; }  // base index x^i, or first lower index of G
  int alpha() const { return a_; }
  int beta() const { return b_; }

  auto operator<=>(const VarId&) const = default;

  std::string name() const {
    if (!fiber_) return "x" + std::to_string(i_);
    return "G[" + std::to_string(a_) + "][" + std::to_string(i_) + "][" + std::to_string(b_) + "]";
  }

 private:
  static void check_index(int i) {
    if (i < 1 || i > 0xffff) throw std::invalid_argument("variable index out of range");
  }

  bool fiber_ = false;
  std::uint16_t a_ = 0, i_ = 0, b_ = 0;
};

// Opaque smooth function of the base coordinates, together with a formal
// derivative record.  Mixed partials commute, so the multiset is kept
// sorted; only base variables can appear in it.
struct FuncSym {
  std::string name;
  std::vector<VarId> partials;  // sorted multiset of base VarIds

  FuncSym() = default;
  explicit FuncSym(std::string n) : name(std::move(n)) {}

  FuncSym differentiated(VarId v) const {
    FuncSym d = *this;
    auto it = std::lower_bound(d.partials.begin(), d.partials.end(), v);
    d.partials.insert(it, v);
    return d;
  }

  auto operator<=>(const FuncSym&) const = default;
};

// A multiplicand in a monomial: a chart variable or an opaque function
// symbol.  Variables order before function symbols.
using Atom = std::variant<VarId, FuncSym>;

inline std::strong_ordering atom_cmp(const Atom& a, const Atom& b) {
  if (a.index() != b.index()) return a.index() <=> b.index();
  if (a.index() == 0) return std::get<VarId>(a) <=> std::get<VarId>(b);
  return std::get<FuncSym>(a) <=> std::get<FuncSym>(b);
}

inline bool atom_less(const Atom& a, const Atom& b) { return atom_cmp(a, b) < 0; }

inline std::string atom_name(const Atom& a) {
  if (std::holds_alternative<VarId>(a)) return std::get<VarId>(a).name();
  const FuncSym& f = std::get<FuncSym>(a);
  std::string s = f.name + "(";
  for (std::size_t k = 0; k < f.partials.size(); ++k) {
    if (k) s += ",";
    s += f.partials[k].name();
  }
  return s + ")";
}

}  // namespace thetahat
