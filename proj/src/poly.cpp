#include "thetahat/poly.hpp"

#include <algorithm>
#include <stdexcept>

namespace thetahat {

Monomial Monomial::operator*(const Monomial& o) const {
  Monomial r;
  r.pi_pow = pi_pow + o.pi_pow;
  r.factors.reserve(factors.size() + o.factors.size());
  std::size_t i = 0, j = 0;
  while (i < factors.size() && j < o.factors.size()) {
    auto c = atom_cmp(factors[i].first, o.factors[j].first);
    if (c == 0) {
      r.factors.emplace_back(factors[i].first, factors[i].second + o.factors[j].second);
      ++i, ++j;
    } else if (c < 0) {
      r.factors.push_back(factors[i++]);
    } else {
      r.factors.push_back(o.factors[j++]);
    }
  }
  for (; i < factors.size(); ++i) r.factors.push_back(factors[i]);
  for (; j < o.factors.size(); ++j) r.factors.push_back(o.factors[j]);
  return r;
}

bool Monomial::divisible_by(const Monomial& o) const {
  std::size_t i = 0;
  for (auto& [a, e] : o.factors) {
    while (i < factors.size() && atom_cmp(factors[i].first, a) < 0) ++i;
    if (i >= factors.size() || atom_cmp(factors[i].first, a) != 0 || factors[i].second < e)
      return false;
  }
  return true;
}

Monomial Monomial::operator/(const Monomial& o) const {
  Monomial r;
  r.pi_pow = pi_pow - o.pi_pow;
  std::size_t j = 0;
  for (auto& [a, e] : factors) {
    int rem = e;
    if (j < o.factors.size() && atom_cmp(o.factors[j].first, a) == 0) {
      rem -= o.factors[j].second;
      ++j;
    }
    if (rem < 0) throw std::invalid_argument("monomial division not exact");
    if (rem > 0) r.factors.emplace_back(a, rem);
  }
  if (j != o.factors.size()) throw std::invalid_argument("monomial division not exact");
  return r;
}

Poly Poly::constant(GaussRat c) { return term(Monomial::one(), std::move(c)); }

Poly Poly::scalar(const Scalar& s) { return term(Monomial::pi(s.pi_pow), s.value); }

Poly Poly::term(Monomial m, GaussRat c) {
  Poly p;
  if (!c.is_zero()) p.t_.emplace(std::move(m), std::move(c));
  return p;
}

bool Poly::is_constant() const {
  return t_.empty() || (t_.size() == 1 && t_.begin()->first.is_one());
}

bool Poly::is_one() const {
  return t_.size() == 1 && t_.begin()->first.is_one() && t_.begin()->second.is_one();
}

const Monomial& Poly::leading_monomial() const {
  if (t_.empty()) throw std::invalid_argument("leading term of zero polynomial");
  return t_.rbegin()->first;
}

const GaussRat& Poly::leading_coeff() const {
  if (t_.empty()) throw std::invalid_argument("leading term of zero polynomial");
  return t_.rbegin()->second;
}

void Poly::add_term(const Monomial& m, const GaussRat& c) {
  if (c.is_zero()) return;
  auto [it, fresh] = t_.try_emplace(m, c);
  if (!fresh) {
    it->second += c;
    if (it->second.is_zero()) t_.erase(it);
  }
}

Poly Poly::operator-() const {
  Poly r;
  for (auto& [m, c] : t_) r.t_.emplace(m, -c);
  return r;
}

Poly Poly::operator+(const Poly& o) const {
  Poly r = *this;
  for (auto& [m, c] : o.t_) r.add_term(m, c);
  return r;
}

Poly Poly::operator-(const Poly& o) const {
  Poly r = *this;
  for (auto& [m, c] : o.t_) r.add_term(m, -c);
  return r;
}

Poly Poly::operator*(const Poly& o) const {
  Poly r;
  for (auto& [m, c] : t_)
    for (auto& [m2, c2] : o.t_) r.add_term(m * m2, c * c2);
  return r;
}

Poly Poly::mul_term(const Monomial& m, const GaussRat& c) const {
  Poly r;
  if (c.is_zero()) return r;
  for (auto& [m2, c2] : t_) r.t_.emplace(m2 * m, c2 * c);
  return r;
}

Poly Poly::mul_coeff(const GaussRat& c) const {
  Poly r;
  if (c.is_zero()) return r;
  for (auto& [m, c2] : t_) r.t_.emplace(m, c2 * c);
  return r;
}

Poly Poly::partial(VarId v) const {
  Poly r;
  const Atom va(v);
  for (auto& [m, c] : t_) {
    for (std::size_t k = 0; k < m.factors.size(); ++k) {
      const auto& [a, e] = m.factors[k];
      if (std::holds_alternative<VarId>(a)) {
        if (std::get<VarId>(a) != v) continue;
        Monomial dm = m;
        if (e == 1)
          dm.factors.erase(dm.factors.begin() + static_cast<std::ptrdiff_t>(k));
        else
          dm.factors[k].second = e - 1;
        r.add_term(dm, c * GaussRat(e));
      } else {
        // Opaque functions depend on base coordinates only.
        if (!v.is_base()) continue;
        const FuncSym& f = std::get<FuncSym>(a);
        Monomial dm = m;
        if (e == 1)
          dm.factors.erase(dm.factors.begin() + static_cast<std::ptrdiff_t>(k));
        else
          dm.factors[k].second = e - 1;
        Poly rest = term(dm, c * GaussRat(e));
        r = r + rest.mul_term(Monomial::atom(Atom(f.differentiated(v))), GaussRat(1));
      }
    }
  }
  return r;
}

Poly Poly::conj() const {
  Poly r;
  for (auto& [m, c] : t_) r.t_.emplace(m, c.conj());
  return r;
}

std::vector<Atom> Poly::atoms() const {
  std::vector<Atom> out;
  for (auto& [m, c] : t_)
    for (auto& [a, e] : m.factors) {
      auto it = std::lower_bound(out.begin(), out.end(), a, atom_less);
      if (it == out.end() || atom_cmp(*it, a) != 0) out.insert(it, a);
    }
  return out;
}

bool Poly::has_funcsym() const {
  for (auto& [m, c] : t_)
    for (auto& [a, e] : m.factors)
      if (std::holds_alternative<FuncSym>(a)) return true;
  return false;
}

int Poly::min_pi_pow() const {
  int p = 0;
  bool first = true;
  for (auto& [m, c] : t_) {
    if (first || m.pi_pow < p) p = m.pi_pow;
    first = false;
  }
  return p;
}

Poly Poly::shift_pi(int delta) const {
  if (delta == 0) return *this;
  Poly r;
  for (auto& [m, c] : t_) {
    Monomial m2 = m;
    m2.pi_pow += delta;
    r.t_.emplace(std::move(m2), c);
  }
  return r;
}

std::optional<Poly> Poly::divide_exact(const Poly& o) const {
  if (o.is_zero()) throw DivisionByZero();
  Poly q, r = *this;
  const Monomial& lm = o.leading_monomial();
  const GaussRat lc_inv = o.leading_coeff().inverse();
  while (!r.is_zero()) {
    const Monomial& rm = r.leading_monomial();
    if (!rm.divisible_by(lm)) return std::nullopt;
    Monomial t = rm / lm;
    GaussRat c = r.leading_coeff() * lc_inv;
    q.add_term(t, c);
    r = r - o.mul_term(t, c);
  }
  return q;
}

Poly Poly::div_monomial(const Monomial& m) const {
  Poly r;
  for (auto& [mm, c] : t_) r.t_.emplace(mm / m, c);
  return r;
}

int Poly::degree_in(const Atom& a) const {
  int d = 0;
  for (auto& [m, c] : t_) d = std::max(d, m.degree_of(a));
  return d;
}

}  // namespace thetahat
