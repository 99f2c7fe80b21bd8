#pragma once

#include <gmpxx.h>

#include <complex>
#include <stdexcept>
#include <string>

namespace thetahat {

using Int = mpz_class;
using Rat = mpq_class;

struct DivisionByZero : std::invalid_argument {
  DivisionByZero() : std::invalid_argument("zero denominator") {}
};

// Exact complex rational re + im*I.
struct GaussRat {
  Rat re, im;

  GaussRat() : re(0), im(0) {}
  GaussRat(long r) : re(r), im(0) {}
  GaussRat(const Rat& r) : re(r), im(0) {}
  GaussRat(Rat r, Rat i) : re(std::move(r)), im(std::move(i)) {}

  static GaussRat imag_unit() { return GaussRat(Rat(0), Rat(1)); }
  static GaussRat of(long num, long den) {
    if (den == 0) throw DivisionByZero();
    Rat q(num, den);
    q.canonicalize();
    return GaussRat(q);
  }

  bool is_zero() const { return re == 0 && im == 0; }
  bool is_one() const { return re == 1 && im == 0; }
  bool is_real() const { return im == 0; }

  GaussRat conj() const { return GaussRat(re, Rat(-im)); }
  Rat norm() const { return re * re + im * im; }

  GaussRat operator-() const { return GaussRat(Rat(-re), Rat(-im)); }
  GaussRat operator+(const GaussRat& o) const { return GaussRat(re + o.re, im + o.im); }
  GaussRat operator-(const GaussRat& o) const { return GaussRat(re - o.re, im - o.im); }
  GaussRat operator*(const GaussRat& o) const {
    return GaussRat(re * o.re - im * o.im, re * o.im + im * o.re);
  }
  GaussRat inverse() const {
    if (is_zero()) throw DivisionByZero();
    Rat n = norm();
    return GaussRat(re / n, Rat(-im) / n);
  }
  GaussRat operator/(const GaussRat& o) const { return *this * o.inverse(); }

  GaussRat& operator+=(const GaussRat& o) { re += o.re; im += o.im; return *this; }
  GaussRat& operator-=(const GaussRat& o) { re -= o.re; im -= o.im; return *this; }
  GaussRat& operator*=(const GaussRat& o) { *this = *this * o; return *this; }

  bool operator==(const GaussRat& o) const { return re == o.re && im == o.im; }
  bool operator!=(const GaussRat& o) const { return !(*this == o); }

  GaussRat pow(int e) const {
    if (e < 0) return inverse().pow(-e);
    GaussRat r(1), b = *this;
    while (e > 0) {
      if (e & 1) r *= b;
      b *= b;
      e >>= 1;
    }
    return r;
  }

  std::complex<double> to_complex() const { return {re.get_d(), im.get_d()}; }
};

// A constant q * pi^pi_pow with q a Gaussian rational.
struct Scalar {
  GaussRat value;
  int pi_pow = 0;

  Scalar() = default;
  Scalar(GaussRat v, int p = 0) : value(std::move(v)), pi_pow(p) {}

  // (sqrt(-1))/(2*pi), the prefactor of the characteristic forms.
  static Scalar i_over_2pi() { return Scalar(GaussRat(Rat(0), Rat(1, 2)), -1); }

  bool is_zero() const { return value.is_zero(); }
  Scalar pow(int e) const { return Scalar(value.pow(e), pi_pow * e); }
  Scalar operator*(const Scalar& o) const { return Scalar(value * o.value, pi_pow + o.pi_pow); }

  std::complex<double> to_complex() const {
    double p = 1.0;
    const double pi = 3.14159265358979323846264338327950288;
    int e = pi_pow >= 0 ? pi_pow : -pi_pow;
    for (int k = 0; k < e; ++k) p *= pi;
    if (pi_pow < 0) p = 1.0 / p;
    return value.to_complex() * p;
  }
};

}  // namespace thetahat
