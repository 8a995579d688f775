#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "discplane/discrete_plane.hpp"
#include "discplane/fs_algorithm.hpp"

namespace discplane {

// Whether P(v, Omega(v)) is 2-connected, with the case that decided it.
struct Verdict {
  enum Kind { Connected, NotConnected, Unknown };
  enum Reason {
    InF3,                // periodic expansion, never halts
    ZeroFirstCoordDim2,  // v1^(n) = 0 and dim_Q(v2^(n), v3^(n)) = 2
    RationalDim1,        // only one nonzero coordinate remains
    PositiveNonF3,       // halts at n and the first coordinate never reaches 0
    ZeroFirstCoordDim1,  // v1^(n) = 0 and v2^(n), v3^(n) commensurable
    BudgetExhausted,
  };
  Kind kind = Unknown;
  Reason reason = BudgetExhausted;
  std::size_t step = 0;
  std::size_t budget = 0;
  std::vector<int> digits;      // digits consumed before the decision
  std::vector<Vec3> iterates;   // v^(0) ... v^(step)
  std::optional<Scalar> omega;  // Omega(v)
  // Omega(v^(n)) = v3^(n) + gcd(v1^(n), v2^(n)) for the zero-first-coordinate cases.
  std::optional<Scalar> stage_omega;

  std::string to_string() const;
  // 0 Connected, 1 NotConnected, 2 Unknown.
  int exit_code() const;
};

std::string to_string(Verdict::Reason r);

// Requires 0 <= v1 <= v2 <= v3, v != 0. Iterates F (past the halting step when
// needed) until one of the cases applies or the budget runs out.
Verdict decide_critical_connectedness(const Vec3& v, std::size_t budget = kDefaultBudget);

struct WindowedCrossCheck {
  bool performed = false;
  bool consistent = true;
  std::string note;
  WindowedConnectivity windowed;
};

// Compares a verdict with the windowed BFS at omega = Omega(v): Connected must
// give ConnectedAtAll, NotConnected must not.
WindowedCrossCheck windowed_cross_check(const Vec3& v, const Verdict& verdict,
                                        const std::vector<std::int64_t>& radii = {6, 10},
                                        std::int64_t halo = -1);

}  // namespace discplane
