#pragma once

#include <gmpxx.h>

#include <string>
#include <utility>
#include <vector>

namespace discplane {

using Integer = mpz_class;
using Rational = mpq_class;

// Dense univariate polynomial over Q; coefficient i multiplies x^i.
// Trailing zero coefficients are always stripped, so the zero polynomial
// has an empty coefficient vector and degree -1.
class QPoly {
 public:
  QPoly() = default;
  explicit QPoly(std::vector<Rational> coeffs);
  static QPoly constant(const Rational& c);
  static QPoly monomial(const Rational& c, int degree);

  int degree() const { return static_cast<int>(c_.size()) - 1; }
  bool is_zero() const { return c_.empty(); }
  bool is_constant() const { return c_.size() <= 1; }
  Rational coeff(int i) const;
  const std::vector<Rational>& coeffs() const { return c_; }
  const Rational& leading() const { return c_.back(); }

  QPoly operator-() const;
  QPoly& operator+=(const QPoly& o);
  QPoly& operator-=(const QPoly& o);
  QPoly& operator*=(const Rational& s);
  friend QPoly operator+(QPoly a, const QPoly& b) { return a += b; }
  friend QPoly operator-(QPoly a, const QPoly& b) { return a -= b; }
  friend QPoly operator*(const QPoly& a, const QPoly& b);
  friend QPoly operator*(QPoly a, const Rational& s) { return a *= s; }
  friend bool operator==(const QPoly& a, const QPoly& b) { return a.c_ == b.c_; }

  Rational eval(const Rational& x) const;
  QPoly derivative() const;
  QPoly monic() const;
  std::string to_string(const std::string& var = "x") const;

 private:
  void trim();
  std::vector<Rational> c_;
};

// Quotient and remainder of a by nonzero b.
std::pair<QPoly, QPoly> divmod(const QPoly& a, const QPoly& b);
QPoly operator%(const QPoly& a, const QPoly& b);

// Monic gcd (zero if both inputs are zero).
QPoly gcd(const QPoly& a, const QPoly& b);

// Returns g = gcd(a, b) (monic) and sets s, t with s*a + t*b = g.
QPoly ext_gcd(const QPoly& a, const QPoly& b, QPoly& s, QPoly& t);

// f(g(x)) reduced modulo m (m nonzero); pass an empty m to skip reduction.
QPoly compose(const QPoly& f, const QPoly& g, const QPoly& m = QPoly());

// Polynomial with integer coefficients, same conventions as QPoly.
class ZPoly {
 public:
  ZPoly() = default;
  explicit ZPoly(std::vector<Integer> coeffs);

  int degree() const { return static_cast<int>(c_.size()) - 1; }
  bool is_zero() const { return c_.empty(); }
  Integer coeff(int i) const;
  const std::vector<Integer>& coeffs() const { return c_; }
  const Integer& leading() const { return c_.back(); }

  QPoly to_q() const;
  Integer content() const;
  friend ZPoly operator*(const ZPoly& a, const ZPoly& b);
  friend bool operator==(const ZPoly& a, const ZPoly& b) { return a.c_ == b.c_; }
  friend bool operator<(const ZPoly& a, const ZPoly& b);
  std::string to_string(const std::string& var = "x") const;

 private:
  void trim();
  std::vector<Integer> c_;
};

// Scales a nonzero rational polynomial to a primitive integer polynomial with
// positive leading coefficient.
ZPoly primitive_part(const QPoly& f);

// Primitive squarefree part of a nonzero polynomial.
ZPoly squarefree_part(const ZPoly& f);

// Irreducible factors over Z of a primitive squarefree polynomial of
// degree >= 1, each primitive with positive leading coefficient, sorted.
std::vector<ZPoly> factor_squarefree(const ZPoly& f);

// Sturm sequence of a squarefree polynomial.
std::vector<QPoly> sturm_sequence(const QPoly& f);

// Number of distinct real roots in the half-open interval (a, b].
int count_roots(const std::vector<QPoly>& sturm, const Rational& a, const Rational& b);

}  // namespace discplane
