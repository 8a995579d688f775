#pragma once

#include <array>
#include <cstdint>
#include <map>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "discplane/interval.hpp"
#include "discplane/number_field.hpp"
#include "discplane/polynomial.hpp"

namespace discplane {

enum class ScalarKind { Rational, Algebraic, IntervalReal };
enum class Cmp { Less, Equal, Greater, Undecidable };

// Precision cap (bits) for interval-based comparisons.
inline constexpr mpfr_prec_t kDefaultMaxBits = 8192;

// value = poly(theta) with theta the field generator; poly has degree below
// the field degree and is never constant (constants are demoted to Rational).
struct AlgebraicValue {
  FieldPtr field;
  QPoly poly;
};

// Generators of the symbolic layer: pi, or the generator of a number field.
struct Generator {
  bool is_pi = false;
  FieldPtr field;
};
std::uint32_t pi_generator();
std::uint32_t field_generator(const FieldPtr& field);
Generator generator(std::uint32_t id);

// Sorted (generator id, exponent) pairs.
using Monomial = std::vector<std::pair<std::uint32_t, std::uint32_t>>;

// Real number given as a rational polynomial in generators, kept in a normal
// form where each field generator appears with exponent below its degree.
// Distinct normal forms can still denote the same real when several field
// generators are mixed; comparisons then fall back to interval evaluation.
struct SymbolicValue {
  std::map<Monomial, Rational> terms;
};

class Scalar {
 public:
  Scalar() : rep_(Rational(0)) {}
  Scalar(long v) : rep_(Rational(v)) {}  // NOLINT: implicit by design
  Scalar(int v) : rep_(Rational(v)) {}   // NOLINT
  Scalar(const Rational& q);             // NOLINT
  static Scalar from_field(const FieldPtr& field, const QPoly& poly);
  static Scalar generator_of(const FieldPtr& field);
  static Scalar pi();

  ScalarKind kind() const;
  bool is_rational() const { return kind() == ScalarKind::Rational; }
  const Rational& rational() const { return std::get<Rational>(rep_); }
  const AlgebraicValue& algebraic() const { return std::get<AlgebraicValue>(rep_); }
  const SymbolicValue& symbolic() const { return std::get<SymbolicValue>(rep_); }

  Scalar operator-() const;
  friend Scalar operator+(const Scalar& a, const Scalar& b);
  friend Scalar operator-(const Scalar& a, const Scalar& b);
  friend Scalar operator*(const Scalar& a, const Scalar& b);
  friend Scalar operator/(const Scalar& a, const Scalar& b);
  Scalar& operator+=(const Scalar& o) { return *this = *this + o; }
  Scalar& operator-=(const Scalar& o) { return *this = *this - o; }
  Scalar& operator*=(const Scalar& o) { return *this = *this * o; }
  Scalar times(long k) const;
  Scalar pow(int e) const;
  Scalar inverse() const;

  // Exact zero test for Rational/Algebraic; for symbolic values only the
  // normal form is inspected.
  bool is_zero() const;
  // Sign; throws UndecidableComparison if it cannot be settled within max_bits.
  int sign(mpfr_prec_t max_bits = kDefaultMaxBits) const;
  Interval enclose(mpfr_prec_t prec) const;

  // Exact textual form (re-parseable for Rational; descriptive otherwise).
  std::string to_string() const;
  // Text accepted by parse_scalar that denotes the same value; field
  // generators are spelled out as algebraic(...) atoms.
  std::string expression() const;
  std::string decimal(int digits = 30) const;

  // Number field the value lives in (null for Rational and symbolic values).
  FieldPtr field() const;

 private:
  explicit Scalar(SymbolicValue s);
  static Scalar normalize(SymbolicValue s);
  static Scalar binary(int op, const Scalar& a, const Scalar& b);
  SymbolicValue to_symbolic() const;
  std::string render(bool parseable) const;

  std::variant<Rational, AlgebraicValue, SymbolicValue> rep_;
};

Cmp compare(const Scalar& a, const Scalar& b, mpfr_prec_t max_bits = kDefaultMaxBits);
// Exact ordering; throws UndecidableComparison when compare() cannot decide.
bool operator<(const Scalar& a, const Scalar& b);
bool operator<=(const Scalar& a, const Scalar& b);
bool operator>(const Scalar& a, const Scalar& b);
bool operator>=(const Scalar& a, const Scalar& b);
bool operator==(const Scalar& a, const Scalar& b);
bool operator!=(const Scalar& a, const Scalar& b);
Scalar abs(const Scalar& a);
Scalar max(const Scalar& a, const Scalar& b);
Scalar min(const Scalar& a, const Scalar& b);

// Rewrites all Algebraic entries over one common field (Rational entries are
// left alone). Symbolic entries are untouched.
void unify_fields(std::vector<Scalar>& values);

// Canonical key: two Rational/Algebraic values over the same field have equal
// keys iff they are equal.
std::string canonical_key(const Scalar& s);

// Dimension of the Q-span; Rational and Algebraic inputs only.
int rational_dimension(const std::vector<Scalar>& values);

// Same, also accepting values involving pi by treating pi as transcendental:
// the monomials pi^a theta^b (b below the field degree) are then independent
// over Q. At most one number field generator may occur; UnsupportedScalar otherwise.
int rational_dimension_with_pi(const std::vector<Scalar>& values);

// Largest g with a, b in Z*g, for inputs spanning a Q-space of dimension <= 1.
Scalar gcd_ext(const Scalar& a, const Scalar& b);

// Integer lattice point.
using IVec3 = std::array<std::int64_t, 3>;

// Real vector with exact coordinates, indexed 0..2 for coordinates 1..3.
class Vec3 {
 public:
  Vec3() = default;
  Vec3(Scalar a, Scalar b, Scalar c);
  const Scalar& operator[](int i) const { return c_[i]; }
  Scalar& operator[](int i) { return c_[i]; }
  const std::array<Scalar, 3>& coords() const { return c_; }
  Scalar dot(const IVec3& x) const;
  Scalar norm1() const;
  Scalar norm_inf() const;
  bool is_sorted_nonnegative() const;
  std::string to_string() const;
  friend bool operator==(const Vec3& a, const Vec3& b);

 private:
  std::array<Scalar, 3> c_;
};

}  // namespace discplane
