#include "discplane/decision.hpp"

#include <algorithm>
#include <unordered_map>

#include "discplane/errors.hpp"

namespace discplane {

std::string to_string(Verdict::Reason r) {
  switch (r) {
    case Verdict::InF3:
      return "InF3";
    case Verdict::ZeroFirstCoordDim2:
      return "ZeroFirstCoordDim2";
    case Verdict::RationalDim1:
      return "RationalDim1";
    case Verdict::PositiveNonF3:
      return "PositiveNonF3";
    case Verdict::ZeroFirstCoordDim1:
      return "ZeroFirstCoordDim1";
    default:
      return "BudgetExhausted";
  }
}

std::string Verdict::to_string() const {
  if (kind == Unknown) return "Unknown(budget " + std::to_string(budget) + ")";
  std::string r = discplane::to_string(reason);
  if (reason == ZeroFirstCoordDim2 || reason == ZeroFirstCoordDim1 || reason == PositiveNonF3)
    r += "(" + std::to_string(step) + ")";
  return (kind == Connected ? "Connected(" : "NotConnected(") + r + ")";
}

int Verdict::exit_code() const { return kind == Connected ? 0 : kind == NotConnected ? 1 : 2; }

namespace {

bool exact(const Vec3& v) {
  for (const auto& c : v.coords())
    if (c.kind() == ScalarKind::IntervalReal) return false;
  return true;
}

}  // namespace

Verdict decide_critical_connectedness(const Vec3& v, std::size_t budget) {
  if (!v.is_sorted_nonnegative())
    throw NotSorted("decide expects 0 <= v1 <= v2 <= v3, got " + v.to_string());
  if (v[2].is_zero()) throw ZeroVector("decide on the zero vector");
  Verdict d;
  d.budget = budget;
  d.iterates.push_back(v);
  if (v[1].is_zero()) {
    d.kind = Verdict::NotConnected;
    d.reason = Verdict::RationalDim1;
    d.omega = Scalar(0);
    return d;
  }
  const bool track = exact(v);
  std::unordered_map<std::string, std::size_t> seen;
  bool halted = false;
  Scalar sum(0);
  for (std::size_t n = 0;; ++n) {
    const Vec3& cur = d.iterates.back();
    d.step = n;
    if (cur[0].is_zero()) {
      if (cur[1].is_zero()) {
        d.kind = Verdict::NotConnected;
        d.reason = Verdict::RationalDim1;
        d.omega = sum;
      } else if (rational_dimension_with_pi({cur[1], cur[2]}) == 2) {
        d.kind = Verdict::Connected;
        d.reason = Verdict::ZeroFirstCoordDim2;
        d.stage_omega = cur[2] + cur[1];
        d.omega = sum + *d.stage_omega;
      } else {
        d.kind = Verdict::NotConnected;
        d.reason = Verdict::ZeroFirstCoordDim1;
        Scalar g = gcd_ext(cur[1], cur[2]);
        d.stage_omega = cur[2] + g;
        // Critical thickness of a 2D line with commensurable normal (a, b): a + b - gcd(a, b).
        d.omega = sum + cur[1] + cur[2] - g;
      }
      return d;
    }
    if (!halted && cur[0] + cur[1] <= cur[2]) {
      halted = true;
      // From here on F runs a subtractive Euclid on (v1, v2); it reaches 0 iff they are commensurable.
      if (rational_dimension_with_pi({cur[0], cur[1]}) == 2) {
        d.kind = Verdict::NotConnected;
        d.reason = Verdict::PositiveNonF3;
        d.omega = sum + cur[2];
        return d;
      }
    }
    if (!halted && track) {
      Scalar inv = cur[2].inverse();
      std::string key = canonical_key(cur[0] * inv) + "|" + canonical_key(cur[1] * inv);
      auto [it, fresh] = seen.emplace(key, n);
      if (!fresh) {
        if (std::find(d.digits.begin() + it->second, d.digits.end(), 3) == d.digits.end())
          throw InternalInconsistency("periodic non-halting expansion without digit 3");
        if (rational_dimension({v[0], v[1], v[2]}) != 3)
          throw InternalInconsistency("periodic expansion for a vector of rational dimension < 3");
        d.kind = Verdict::Connected;
        d.reason = Verdict::InF3;
        d.omega = (v[0] + v[1] + v[2]) * Scalar(Rational(1, 2));
        return d;
      }
    }
    if (n == budget) {
      d.kind = Verdict::Unknown;
      d.reason = Verdict::BudgetExhausted;
      return d;
    }
    sum += cur[0];
    FsStep s = fs_step(cur);
    d.digits.push_back(s.digit);
    d.iterates.push_back(std::move(s.next));
  }
}

WindowedCrossCheck windowed_cross_check(const Vec3& v, const Verdict& verdict,
                                        const std::vector<std::int64_t>& radii, std::int64_t halo) {
  WindowedCrossCheck c;
  if (verdict.kind == Verdict::Unknown || !verdict.omega) {
    c.note = "no verdict to compare";
    return c;
  }
  if (verdict.omega->sign() <= 0) {
    c.note = "P(v, 0) is empty";
    c.consistent = verdict.kind == Verdict::NotConnected;
    return c;
  }
  c.performed = true;
  c.windowed = is_connected_windowed(PlaneSpec{v, *verdict.omega}, radii, halo);
  bool all = c.windowed.kind == WindowedConnectivity::ConnectedAtAll;
  c.consistent = verdict.kind == Verdict::Connected ? all : !all;
  c.note = to_string(c.windowed.kind);
  return c;
}

}  // namespace discplane
