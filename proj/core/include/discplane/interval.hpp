#pragma once

#include <mpfr.h>

#include <string>

#include "discplane/polynomial.hpp"

namespace discplane {

// Closed interval with MPFR endpoints and outward (directed) rounding.
class Interval {
 public:
  explicit Interval(mpfr_prec_t prec = 128);
  Interval(const Rational& q, mpfr_prec_t prec);
  Interval(const Rational& lo, const Rational& hi, mpfr_prec_t prec);
  static Interval pi(mpfr_prec_t prec);

  Interval(const Interval& o);
  Interval(Interval&& o) noexcept;
  Interval& operator=(const Interval& o);
  Interval& operator=(Interval&& o) noexcept;
  ~Interval();

  mpfr_prec_t precision() const { return mpfr_get_prec(lo_); }
  mpfr_srcptr lo() const { return lo_; }
  mpfr_srcptr hi() const { return hi_; }
  double lo_double() const;  // rounded down
  double hi_double() const;  // rounded up

  friend Interval operator+(const Interval& a, const Interval& b);
  friend Interval operator-(const Interval& a, const Interval& b);
  friend Interval operator*(const Interval& a, const Interval& b);
  Interval operator-() const;
  Interval scaled(const Rational& q) const;

  // +1 or -1 when the interval excludes zero, 0 otherwise.
  int sign() const;
  bool contains(const Interval& inner) const;
  bool intersects(const Interval& o) const;
  // Width as a double rounded up.
  double width() const;
  // Midpoint to the given number of significant decimal digits.
  std::string midpoint_decimal(int digits) const;

 private:
  mpfr_t lo_, hi_;
};

}  // namespace discplane
