#pragma once

#include <memory>
#include <mutex>
#include <utility>
#include <vector>

#include "discplane/interval.hpp"
#include "discplane/polynomial.hpp"

namespace discplane {

// Real number field Q(theta), theta a real root of an irreducible integer
// polynomial of degree >= 2, pinned down by a rational isolating interval.
// Fields are interned: the same (minimal polynomial, root) pair always yields
// the same object, so pointer equality means "same field, same generator".
class NumberField {
 public:
  // minpoly must be irreducible over Q with degree >= 2 and (lo, hi] must
  // contain exactly one of its roots.
  static std::shared_ptr<const NumberField> make(const ZPoly& minpoly, const Rational& lo,
                                                 const Rational& hi);

  int degree() const { return minpoly_.degree(); }
  const ZPoly& minpoly() const { return minpoly_; }
  // Monic minimal polynomial over Q.
  const QPoly& modulus() const { return modulus_; }

  // Isolating interval of width at most 2^-bits.
  std::pair<Rational, Rational> isolating_interval(unsigned bits) const;
  // Enclosure of the generator with endpoints accurate to roughly prec bits.
  Interval enclose_generator(mpfr_prec_t prec) const;

  // Sign of g(theta); g is reduced modulo the minimal polynomial first.
  int sign_of(const QPoly& g) const;
  // Enclosure of g(theta).
  Interval enclose(const QPoly& g, mpfr_prec_t prec) const;

  NumberField(const ZPoly& minpoly, const Rational& lo, const Rational& hi);

 private:
  ZPoly minpoly_;
  QPoly modulus_;
  std::vector<QPoly> sturm_;
  int sign_at_lo_;
  mutable std::mutex mutex_;
  mutable Rational lo_, hi_;
};

using FieldPtr = std::shared_ptr<const NumberField>;

// Common field containing both generators, with each generator expressed as a
// polynomial in the new generator (coefficients reduced mod its minpoly).
struct Compositum {
  FieldPtr field;
  QPoly first;
  QPoly second;
};

// Throws DegreeTooLarge when the tensor product would exceed kMaxFieldDegree.
Compositum compositum(const FieldPtr& a, const FieldPtr& b);

inline constexpr int kMaxFieldDegree = 64;

// Description of a real algebraic number by any polynomial with a rational
// isolating interval. The polynomial need not be irreducible or squarefree.
struct RealRoot {
  bool rational = false;
  Rational value;          // when rational
  FieldPtr field;          // otherwise: value is the field generator
};
RealRoot isolate_root(const QPoly& f, const Rational& lo, const Rational& hi);

}  // namespace discplane
