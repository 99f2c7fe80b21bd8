#pragma once

#include <map>
#include <optional>
#include <vector>

#include "thetahat/rational.hpp"
#include "thetahat/varid.hpp"

namespace thetahat {

// Power product over atoms, with an integer power of pi.  Atom exponents are
// >= 1 and the factor list is strictly sorted by atom; pi is a Laurent unit
// and may carry any integer exponent.
struct Monomial {
  std::vector<std::pair<Atom, int>> factors;
  int pi_pow = 0;

  static Monomial one() { return {}; }
  static Monomial atom(Atom a, int e = 1) {
    Monomial m;
    if (e != 0) m.factors.emplace_back(std::move(a), e);
    return m;
  }
  static Monomial pi(int e) {
    Monomial m;
    m.pi_pow = e;
    return m;
  }

  bool is_one() const { return factors.empty() && pi_pow == 0; }
  int degree() const {
    int d = 0;
    for (auto& [a, e] : factors) d += e;
    return d;
  }
  int degree_of(const Atom& a) const {
    for (auto& [b, e] : factors)
      if (atom_cmp(b, a) == 0) return e;
    return 0;
  }

  Monomial operator*(const Monomial& o) const;
  // Atom-wise divisibility; pi is always divisible.
  bool divisible_by(const Monomial& o) const;
  Monomial operator/(const Monomial& o) const;  // requires divisible_by
};

// Lexicographic monomial order on dense exponent vectors (atoms ascending,
// pi last); compatible with multiplication, which the division algorithm
// relies on.  Greater in this order = leading.
inline std::strong_ordering mono_cmp(const Monomial& a, const Monomial& b) {
  std::size_t i = 0, j = 0;
  while (i < a.factors.size() && j < b.factors.size()) {
    auto c = atom_cmp(a.factors[i].first, b.factors[j].first);
    if (c == 0) {
      if (a.factors[i].second != b.factors[j].second)
        return a.factors[i].second <=> b.factors[j].second;
      ++i, ++j;
    } else if (c < 0) {
      return std::strong_ordering::greater;  // a has the earlier atom with exp > 0
    } else {
      return std::strong_ordering::less;
    }
  }
  if (i < a.factors.size()) return std::strong_ordering::greater;
  if (j < b.factors.size()) return std::strong_ordering::less;
  return a.pi_pow <=> b.pi_pow;
}

struct MonoLess {
  bool operator()(const Monomial& a, const Monomial& b) const { return mono_cmp(a, b) < 0; }
};

// Sparse multivariate polynomial over Gaussian rationals, Laurent in pi.
// Canonical: no zero coefficients stored.
class Poly {
 public:
  using Map = std::map<Monomial, GaussRat, MonoLess>;

  Poly() = default;

  static Poly zero() { return {}; }
  static Poly constant(GaussRat c);
  static Poly scalar(const Scalar& s);
  static Poly variable(VarId v) { return term(Monomial::atom(Atom(v)), GaussRat(1)); }
  static Poly func(FuncSym f) { return term(Monomial::atom(Atom(std::move(f))), GaussRat(1)); }
  static Poly term(Monomial m, GaussRat c);

  bool is_zero() const { return t_.empty(); }
  bool is_constant() const;  // single monomial "1" (any pi power counts as non-constant)
  bool is_one() const;
  std::size_t term_count() const { return t_.size(); }
  const Map& terms() const { return t_; }

  const Monomial& leading_monomial() const;
  const GaussRat& leading_coeff() const;

  void add_term(const Monomial& m, const GaussRat& c);  // canonicalizing accumulate

  Poly operator-() const;
  Poly operator+(const Poly& o) const;
  Poly operator-(const Poly& o) const;
  Poly operator*(const Poly& o) const;
  Poly mul_term(const Monomial& m, const GaussRat& c) const;
  Poly mul_coeff(const GaussRat& c) const;

  bool operator==(const Poly& o) const { return t_ == o.t_; }

  Poly partial(VarId v) const;
  Poly conj() const;  // conjugate all coefficients (atoms untouched)

  // Collects every atom that occurs.
  std::vector<Atom> atoms() const;
  bool has_funcsym() const;
  int min_pi_pow() const;        // 0 for the zero polynomial
  Poly shift_pi(int delta) const;

  // Exact division: returns nullopt if o does not divide *this.
  std::optional<Poly> divide_exact(const Poly& o) const;

  // Termwise division by a monomial dividing every term.
  Poly div_monomial(const Monomial& m) const;

  // Degree in a single atom.
  int degree_in(const Atom& a) const;

 private:
  Map t_;
};

// Multivariate gcd (monic, pi-free).  gcd(0,0) = 0; otherwise the result
// divides both arguments exactly and any common divisor divides it.
Poly poly_gcd(const Poly& a, const Poly& b);

}  // namespace thetahat
