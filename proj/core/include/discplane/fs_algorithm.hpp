#pragma once

#include <array>
#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

#include "discplane/errors.hpp"
#include "discplane/scalar.hpp"

namespace discplane {

using IMat3 = std::array<std::array<std::int64_t, 3>, 3>;

IMat3 identity_matrix();
IMat3 operator*(const IMat3& a, const IMat3& b);
IVec3 operator*(const IMat3& m, const IVec3& x);
Vec3 operator*(const IMat3& m, const Vec3& v);
IMat3 transpose(const IMat3& m);
std::int64_t determinant(const IMat3& m);
// Exact inverse of a matrix with determinant +-1; throws NotUnimodular otherwise.
IMat3 unimodular_inverse(const IMat3& m);

// M_i of the ordered fully subtractive algorithm, i in {1,2,3}: v = M_i F(v).
const IMat3& fs_matrix(int i);
// Product M_{w[0]} ... M_{w[n-1]}.
IMat3 fs_product(const std::vector<int>& word);

inline constexpr std::size_t kDefaultBudget = 1000;

struct FsStep {
  int digit;
  Vec3 next;
};

// One step of the ordered fully subtractive map. Requires 0 <= v1 <= v2 <= v3,
// v != 0. Ties follow the case order: v1 <= v2-v1 is case 1, then v1 <= v3-v1
// is case 2, else case 3.
FsStep fs_step(const Vec3& v);

struct ExpansionStatus {
  enum Kind { Halted, Periodic, BudgetExhausted };
  Kind kind = BudgetExhausted;
  std::size_t halted_at = 0;  // Halted: first n with v1+v2 <= v3
  std::size_t preperiod = 0;  // Periodic: v^(preperiod+period) is proportional to v^(preperiod)
  std::size_t period = 0;
};

struct Expansion {
  // iterates[0] = v; iterates[n] = v^(n); digits[n-1] = i_n.
  std::vector<Vec3> iterates;
  std::vector<int> digits;
  ExpansionStatus status;

  std::size_t steps() const { return digits.size(); }
  // Digit i_n for n >= 1; periodic expansions are extended cyclically.
  int digit(std::size_t n) const;
  // Whether digit(n) is defined (i.e. the expansion has not halted before n).
  bool has_digit(std::size_t n) const;
  // First n digits; throws ExpansionTooShort when unavailable.
  std::vector<int> word(std::size_t n) const;
};

// Iterates F until halting, projective recurrence, or budget steps. The
// recurrence test is exact and only runs for Rational/Algebraic coordinates.
Expansion expand(const Vec3& v, std::size_t budget = kDefaultBudget);

class BudgetExhaustedError : public Error {
 public:
  BudgetExhaustedError(const std::string& what, Scalar lower, Scalar upper)
      : Error(what), lower(std::move(lower)), upper(std::move(upper)) {}
  Scalar lower;  // sum of first coordinates so far
  Scalar upper;  // lower + |v^(budget)|_1
};

struct Thickness {
  Scalar omega;
  Expansion trace;
};

// Value of the connecting-thickness recursion: if v1+v2 <= v3 return v3,
// otherwise v1 + (value at F(v)); the infinite (periodic) case sums to |v|_1/2.
Thickness connecting_thickness(const Vec3& v, std::size_t budget = kDefaultBudget);

struct F3Verdict {
  enum Kind { InF3, NotInF3, Unknown };
  Kind kind = Unknown;
  std::size_t step = 0;  // NotInF3: first halting step
  std::size_t preperiod = 0;
  std::size_t period = 0;
  std::vector<int> cycle;  // InF3: repeating digits
  std::size_t budget = 0;
};

F3Verdict classify_f3(const Vec3& v, std::size_t budget = kDefaultBudget);

// Smallest nonzero |v_i|.
Scalar xi(const Vec3& v);
// |v|_inf + xi(v).
Scalar omega_upper_bound(const Vec3& v);

// Sorts coordinates ascending; perm[k] is the original index of sorted coordinate k.
Vec3 sort_coordinates(const Vec3& v, std::array<int, 3>* perm = nullptr);

// Positive vector whose expansion is the periodic word w w w ..., normalized
// with first coordinate 1. The word must contain a 3 and the product matrix
// must have a simple irrational dominant eigenvalue.
Vec3 periodic_word_vector(const std::vector<int>& word);

std::vector<int> parse_word(const std::string& digits);
std::string word_string(const std::vector<int>& word);

}  // namespace discplane
