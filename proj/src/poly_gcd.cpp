#include <algorithm>
#include <cstdint>
#include <map>
#include <vector>

#include "thetahat/poly.hpp"

// Multivariate gcd via recursive content / primitive-part reduction with a
// primitive pseudo-remainder sequence.  A specialization-based coprimality
// certificate handles the common case (reduced fractions stay reduced)
// without entering the recursion.

namespace thetahat {

namespace {

Monomial monomial_content(const Poly& p) {
  Monomial c;
  bool first = true;
  for (auto& [m, coeff] : p.terms()) {
    if (first) {
      c = m;
      first = false;
      continue;
    }
    Monomial merged;
    merged.pi_pow = std::min(c.pi_pow, m.pi_pow);
    std::size_t i = 0, j = 0;
    while (i < c.factors.size() && j < m.factors.size()) {
      auto cmp = atom_cmp(c.factors[i].first, m.factors[j].first);
      if (cmp == 0) {
        merged.factors.emplace_back(c.factors[i].first,
                                    std::min(c.factors[i].second, m.factors[j].second));
        ++i, ++j;
      } else if (cmp < 0) {
        ++i;
      } else {
        ++j;
      }
    }
    c = std::move(merged);
    if (c.factors.empty() && c.pi_pow == 0) break;
  }
  return c;
}

Monomial monomial_gcd(const Monomial& a, const Monomial& b) {
  Monomial g;
  g.pi_pow = std::min(a.pi_pow, b.pi_pow);
  std::size_t i = 0, j = 0;
  while (i < a.factors.size() && j < b.factors.size()) {
    auto cmp = atom_cmp(a.factors[i].first, b.factors[j].first);
    if (cmp == 0) {
      g.factors.emplace_back(a.factors[i].first, std::min(a.factors[i].second, b.factors[j].second));
      ++i, ++j;
    } else if (cmp < 0) {
      ++i;
    } else {
      ++j;
    }
  }
  return g;
}

// Univariate view in atom v: exponent -> coefficient polynomial.
std::map<int, Poly> univariate(const Poly& p, const Atom& v) {
  std::map<int, Poly> out;
  for (auto& [m, c] : p.terms()) {
    int e = m.degree_of(v);
    Monomial rest = e == 0 ? m : m / Monomial::atom(v, e);
    out[e].add_term(rest, c);
  }
  return out;
}

Poly from_univariate(const std::map<int, Poly>& u, const Atom& v) {
  Poly out;
  for (auto& [e, coeff] : u) {
    Poly t = coeff.mul_term(Monomial::atom(v, e), GaussRat(1));
    out = out + t;
  }
  return out;
}

Poly lc_in(const Poly& p, const Atom& v, int deg) {
  Poly out;
  for (auto& [m, c] : p.terms())
    if (m.degree_of(v) == deg) out.add_term(m / Monomial::atom(v, deg), c);
  return out;
}

// Dense univariate gcd over GaussRat (used by both the pi base case and the
// coprimality certificate).
std::vector<GaussRat> uni_gcd(std::vector<GaussRat> a, std::vector<GaussRat> b) {
  auto trim = [](std::vector<GaussRat>& p) {
    while (!p.empty() && p.back().is_zero()) p.pop_back();
  };
  trim(a);
  trim(b);
  while (!b.empty()) {
    // a mod b, with b monic-ized on the fly
    GaussRat lb = b.back().inverse();
    while (a.size() >= b.size()) {
      GaussRat f = a.back() * lb;
      std::size_t off = a.size() - b.size();
      for (std::size_t i = 0; i < b.size(); ++i) a[off + i] -= f * b[i];
      trim(a);
      if (a.empty()) break;
    }
    std::swap(a, b);
  }
  if (!a.empty()) {
    GaussRat la = a.back().inverse();
    for (auto& c : a) c *= la;
  }
  return a;
}

struct Specializer {
  std::vector<std::pair<Atom, GaussRat>> values;

  GaussRat value_of(const Atom& a) const {
    for (auto& [b, v] : values)
      if (atom_cmp(a, b) == 0) return v;
    return GaussRat(0);
  }

  // Collapse p to a dense univariate polynomial in v.
  std::vector<GaussRat> project(const Poly& p, const Atom& v, const GaussRat& pi_value) const {
    std::vector<GaussRat> out;
    for (auto& [m, c] : p.terms()) {
      int e = m.degree_of(v);
      GaussRat val = c * pi_value.pow(m.pi_pow);
      for (auto& [a, k] : m.factors) {
        if (atom_cmp(a, v) == 0) continue;
        val *= value_of(a).pow(k);
      }
      if (out.size() <= static_cast<std::size_t>(e)) out.resize(e + 1);
      out[e] += val;
    }
    while (!out.empty() && out.back().is_zero()) out.pop_back();
    return out;
  }
};

// Certified coprimality test: for every shared atom v, specialize the other
// atoms (and pi) to integer points with nonvanishing leading coefficients and
// take a univariate gcd.  Constant projected gcds certify that the true gcd
// is free of v.  Retries a few points; any doubt returns false.
bool certified_coprime(const Poly& a, const Poly& b, const std::vector<Atom>& shared,
                       const std::vector<Atom>& all) {
  std::uint64_t state = 0x9e3779b97f4a7c15ull;
  auto next = [&state]() {
    state ^= state << 13;
    state ^= state >> 7;
    state ^= state << 17;
    return state;
  };
  for (const Atom& v : shared) {
    bool certified = false;
    for (int attempt = 0; attempt < 4 && !certified; ++attempt) {
      Specializer sp;
      for (const Atom& w : all)
        if (atom_cmp(w, v) != 0) sp.values.emplace_back(w, GaussRat(static_cast<long>(next() % 23 + 2)));
      GaussRat pi_value(static_cast<long>(next() % 19 + 2));
      int da = a.degree_in(v), db = b.degree_in(v);
      auto pa = sp.project(a, v, pi_value);
      auto pb = sp.project(b, v, pi_value);
      if (pa.size() != static_cast<std::size_t>(da) + 1 || pb.size() != static_cast<std::size_t>(db) + 1)
        continue;  // a leading coefficient vanished; certificate invalid at this point
      auto g = uni_gcd(std::move(pa), std::move(pb));
      if (g.size() <= 1) certified = true;
    }
    if (!certified) return false;
  }
  return true;
}

Poly gcd_rec(const Poly& a, const Poly& b);

Poly content_in(const std::map<int, Poly>& u) {
  Poly c;
  for (auto& [e, coeff] : u) {
    c = gcd_rec(c, coeff);
    if (c.is_one()) break;
  }
  return c;
}

// Pseudo-remainder of a by b in v, up to a scalar polynomial factor (the
// caller re-primitivizes, so the lc^delta normalization is dropped).
Poly prem(Poly a, const Poly& b, const Atom& v) {
  int db = b.degree_in(v);
  Poly lcb = lc_in(b, v, db);
  int da = a.degree_in(v);
  while (!a.is_zero() && (da = a.degree_in(v)) >= db && db >= 0) {
    Poly lca = lc_in(a, v, da);
    Poly shift = Poly::term(Monomial::atom(v, da - db), GaussRat(1));
    a = a * lcb - b * lca * shift;
    if (a.degree_in(v) == da) break;  // defensive; cannot happen
  }
  return a;
}

Poly make_monic(Poly p) {
  if (p.is_zero()) return p;
  int shift = p.min_pi_pow();
  if (shift != 0) p = p.shift_pi(-shift);
  const GaussRat& lc = p.leading_coeff();
  if (!lc.is_one()) p = p.mul_coeff(lc.inverse());
  return p;
}

Poly gcd_rec(const Poly& a, const Poly& b) {
  if (a.is_zero()) return b;
  if (b.is_zero()) return a;

  Monomial mc = monomial_gcd(monomial_content(a), monomial_content(b));
  Poly pa = a.div_monomial(monomial_content(a));
  Poly pb = b.div_monomial(monomial_content(b));
  Poly unit = Poly::term(mc, GaussRat(1));

  if (pa.is_constant() || pb.is_constant()) return unit;
  if (pa == pb) return unit * pa;

  std::vector<Atom> aa = pa.atoms(), ba = pb.atoms();
  std::vector<Atom> shared, all = aa;
  for (const Atom& x : ba) {
    auto it = std::lower_bound(all.begin(), all.end(), x, atom_less);
    if (it == all.end() || atom_cmp(*it, x) != 0) all.insert(it, x);
    if (std::binary_search(aa.begin(), aa.end(), x,
                           [](const Atom& p, const Atom& q) { return atom_less(p, q); }))
      shared.push_back(x);
  }

  if (aa.empty() && ba.empty()) {
    // Laurent polynomials in pi alone: univariate gcd over the rationals.
    Specializer sp;
    Atom pi_atom = Atom(VarId::base(1));  // placeholder; project池 below uses pi directly
    (void)pi_atom;
    // Dense in pi: exponent -> coefficient.
    auto dense = [](const Poly& p) {
      std::vector<GaussRat> out;
      for (auto& [m, c] : p.terms()) {
        int e = m.pi_pow;
        if (out.size() <= static_cast<std::size_t>(e)) out.resize(e + 1);
        out[e] += c;
      }
      while (!out.empty() && out.back().is_zero()) out.pop_back();
      return out;
    };
    auto g = uni_gcd(dense(pa), dense(pb));
    Poly gp;
    for (std::size_t e = 0; e < g.size(); ++e)
      if (!g[e].is_zero()) gp.add_term(Monomial::pi(static_cast<int>(e)), g[e]);
    return unit * make_monic(gp);
  }

  if (shared.empty()) return unit;
  if (certified_coprime(pa, pb, shared, all)) return unit;

  // Main variable: the shared atom of least combined degree.
  Atom v = shared.front();
  int best = pa.degree_in(v) + pb.degree_in(v);
  for (const Atom& w : shared) {
    int d = pa.degree_in(w) + pb.degree_in(w);
    if (d < best) {
      best = d;
      v = w;
    }
  }

  auto ua = univariate(pa, v), ub = univariate(pb, v);
  Poly ca = content_in(ua), cb = content_in(ub);
  Poly cg = gcd_rec(ca, cb);
  Poly A = *pa.divide_exact(ca);
  Poly B = *pb.divide_exact(cb);
  if (A.degree_in(v) < B.degree_in(v)) std::swap(A, B);

  while (true) {
    Poly r = prem(A, B, v);
    if (r.is_zero()) break;
    if (r.degree_in(v) == 0) {
      B = Poly::constant(GaussRat(1));
      break;
    }
    Poly rc = content_in(univariate(r, v));
    A = std::move(B);
    B = *r.divide_exact(rc);
  }
  if (B.degree_in(v) > 0) {
    Poly bc = content_in(univariate(B, v));
    B = *B.divide_exact(bc);
  } else {
    B = Poly::constant(GaussRat(1));
  }
  return unit * cg * B;
}

}  // namespace

Poly poly_gcd(const Poly& a, const Poly& b) {
  if (a.is_zero() && b.is_zero()) return Poly::zero();
  Poly pa = a.shift_pi(-a.min_pi_pow());
  Poly pb = b.shift_pi(-b.min_pi_pow());
  Poly g = gcd_rec(pa, pb);
  // pi is a unit: never part of the gcd.
  Poly out;
  for (auto& [m, c] : g.terms()) {
    Monomial m2 = m;
    m2.pi_pow = 0;
    out.add_term(m2, c);
  }
  return make_monic(out);
}

}  // namespace thetahat
