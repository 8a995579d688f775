#include "discplane/fs_algorithm.hpp"

#include <algorithm>
#include <cmath>
#include <unordered_map>

namespace discplane {

IMat3 identity_matrix() { return IMat3{{{1, 0, 0}, {0, 1, 0}, {0, 0, 1}}}; }

IMat3 operator*(const IMat3& a, const IMat3& b) {
  IMat3 r{};
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j)
      for (int k = 0; k < 3; ++k) r[i][j] += a[i][k] * b[k][j];
  return r;
}

IVec3 operator*(const IMat3& m, const IVec3& x) {
  IVec3 r{};
  for (int i = 0; i < 3; ++i) r[i] = m[i][0] * x[0] + m[i][1] * x[1] + m[i][2] * x[2];
  return r;
}

Vec3 operator*(const IMat3& m, const Vec3& v) {
  Scalar r[3];
  for (int i = 0; i < 3; ++i) r[i] = v[0].times(m[i][0]) + v[1].times(m[i][1]) + v[2].times(m[i][2]);
  return Vec3(r[0], r[1], r[2]);
}

IMat3 transpose(const IMat3& m) {
  IMat3 r{};
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) r[i][j] = m[j][i];
  return r;
}

std::int64_t determinant(const IMat3& m) {
  return m[0][0] * (m[1][1] * m[2][2] - m[1][2] * m[2][1]) -
         m[0][1] * (m[1][0] * m[2][2] - m[1][2] * m[2][0]) +
         m[0][2] * (m[1][0] * m[2][1] - m[1][1] * m[2][0]);
}

IMat3 unimodular_inverse(const IMat3& m) {
  std::int64_t d = determinant(m);
  if (d != 1 && d != -1) throw NotUnimodular("matrix determinant is " + std::to_string(d));
  IMat3 adj{};
  for (int i = 0; i < 3; ++i) {
    for (int j = 0; j < 3; ++j) {
      int r0 = (j + 1) % 3, r1 = (j + 2) % 3, c0 = (i + 1) % 3, c1 = (i + 2) % 3;
      adj[i][j] = m[r0][c0] * m[r1][c1] - m[r0][c1] * m[r1][c0];
    }
  }
  for (auto& row : adj)
    for (auto& e : row) e *= d;
  return adj;
}

const IMat3& fs_matrix(int i) {
  static const IMat3 m[3] = {
      IMat3{{{1, 0, 0}, {1, 1, 0}, {1, 0, 1}}},
      IMat3{{{0, 1, 0}, {1, 1, 0}, {0, 1, 1}}},
      IMat3{{{0, 0, 1}, {1, 0, 1}, {0, 1, 1}}},
  };
  if (i < 1 || i > 3) throw DomainError("digit must be 1, 2 or 3");
  return m[i - 1];
}

IMat3 fs_product(const std::vector<int>& word) {
  IMat3 r = identity_matrix();
  for (int d : word) r = r * fs_matrix(d);
  return r;
}

FsStep fs_step(const Vec3& v) {
  if (v[0].sign() < 0 || v[1] < v[0] || v[2] < v[1])
    throw NotSorted("fs_step expects 0 <= v1 <= v2 <= v3, got " + v.to_string());
  if (v[2].is_zero()) throw ZeroVector("fs_step on the zero vector");
  Scalar a = v[1] - v[0], b = v[2] - v[0];
  if (v[0] <= a) return {1, Vec3(v[0], a, b)};
  if (v[0] <= b) return {2, Vec3(a, v[0], b)};
  return {3, Vec3(a, b, v[0])};
}

int Expansion::digit(std::size_t n) const {
  if (n == 0) throw DomainError("digits are indexed from 1");
  if (n <= digits.size()) return digits[n - 1];
  if (status.kind != ExpansionStatus::Periodic)
    throw ExpansionTooShort("expansion has only " + std::to_string(digits.size()) + " digits");
  std::size_t k = (n - 1 - status.preperiod) % status.period;
  return digits[status.preperiod + k];
}

bool Expansion::has_digit(std::size_t n) const {
  return n >= 1 && (n <= digits.size() || status.kind == ExpansionStatus::Periodic);
}

std::vector<int> Expansion::word(std::size_t n) const {
  std::vector<int> w;
  for (std::size_t k = 1; k <= n; ++k) {
    if (!has_digit(k))
      throw ExpansionTooShort("need " + std::to_string(n) + " digits, expansion " +
                              (status.kind == ExpansionStatus::Halted ? "halted" : "stopped") +
                              " after " + std::to_string(digits.size()));
    w.push_back(digit(k));
  }
  return w;
}

namespace {

bool halts(const Vec3& v) { return v[0] + v[1] <= v[2]; }

bool exact_coords(const Vec3& v) {
  for (const auto& c : v.coords())
    if (c.kind() == ScalarKind::IntervalReal) return false;
  return true;
}

std::string projective_key(const Vec3& v) {
  Scalar inv = v[2].inverse();
  return canonical_key(v[0] * inv) + "|" + canonical_key(v[1] * inv);
}

}  // namespace

Expansion expand(const Vec3& v, std::size_t budget) {
  Expansion e;
  e.iterates.push_back(v);
  if (v[0].sign() < 0 || v[1] < v[0] || v[2] < v[1])
    throw NotSorted("expand expects 0 <= v1 <= v2 <= v3, got " + v.to_string());
  if (v[2].is_zero()) throw ZeroVector("expand on the zero vector");
  bool track = exact_coords(v);
  std::unordered_map<std::string, std::size_t> seen;
  for (std::size_t n = 0;; ++n) {
    const Vec3& cur = e.iterates.back();
    if (halts(cur)) {
      e.status.kind = ExpansionStatus::Halted;
      e.status.halted_at = n;
      return e;
    }
    if (track) {
      auto [it, fresh] = seen.emplace(projective_key(cur), n);
      if (!fresh) {
        e.status.kind = ExpansionStatus::Periodic;
        e.status.preperiod = it->second;
        e.status.period = n - it->second;
        // Keep exactly one full cycle of digits after the preperiod.
        return e;
      }
    }
    if (n == budget) {
      e.status.kind = ExpansionStatus::BudgetExhausted;
      return e;
    }
    FsStep s = fs_step(cur);
    e.digits.push_back(s.digit);
    e.iterates.push_back(std::move(s.next));
  }
}

Thickness connecting_thickness(const Vec3& v, std::size_t budget) {
  Thickness t{Scalar(0), expand(v, budget)};
  const Expansion& e = t.trace;
  switch (e.status.kind) {
    case ExpansionStatus::Halted: {
      Scalar sum(0);
      for (std::size_t k = 0; k < e.status.halted_at; ++k) sum += e.iterates[k][0];
      t.omega = sum + e.iterates[e.status.halted_at][2];
      return t;
    }
    case ExpansionStatus::Periodic:
      t.omega = (v[0] + v[1] + v[2]) * Scalar(Rational(1, 2));
      return t;
    default: {
      Scalar sum(0);
      for (std::size_t k = 0; k < e.steps(); ++k) sum += e.iterates[k][0];
      const Vec3& last = e.iterates.back();
      Scalar upper = sum + last[0] + last[1] + last[2];
      throw BudgetExhaustedError("connecting_thickness: no halt or recurrence within " +
                                     std::to_string(budget) + " steps; bounds [" + sum.decimal(20) +
                                     ", " + upper.decimal(20) + "]",
                                 sum, upper);
    }
  }
}

F3Verdict classify_f3(const Vec3& v, std::size_t budget) {
  F3Verdict r;
  r.budget = budget;
  Expansion e = expand(v, budget);
  switch (e.status.kind) {
    case ExpansionStatus::Halted:
      r.kind = F3Verdict::NotInF3;
      r.step = e.status.halted_at;
      return r;
    case ExpansionStatus::Periodic: {
      r.kind = F3Verdict::InF3;
      r.preperiod = e.status.preperiod;
      r.period = e.status.period;
      r.cycle.assign(e.digits.begin() + r.preperiod, e.digits.end());
      if (std::find(r.cycle.begin(), r.cycle.end(), 3) == r.cycle.end())
        throw InternalInconsistency("periodic non-halting expansion without digit 3");
      int dim = rational_dimension({v[0], v[1], v[2]});
      if (dim != 3)
        throw InternalInconsistency("vector certified in F3 has rational dimension " +
                                    std::to_string(dim));
      return r;
    }
    default:
      r.kind = F3Verdict::Unknown;
      return r;
  }
}

Scalar xi(const Vec3& v) {
  Scalar best;
  bool found = false;
  for (const auto& c : v.coords()) {
    if (c.is_zero()) continue;
    Scalar a = abs(c);
    if (!found || a < best) best = a;
    found = true;
  }
  if (!found) throw ZeroVector("xi of the zero vector");
  return best;
}

Scalar omega_upper_bound(const Vec3& v) { return v.norm_inf() + xi(v); }

Vec3 sort_coordinates(const Vec3& v, std::array<int, 3>* perm) {
  std::array<int, 3> p{0, 1, 2};
  std::stable_sort(p.begin(), p.end(), [&](int a, int b) { return v[a] < v[b]; });
  if (perm) *perm = p;
  return Vec3(v[p[0]], v[p[1]], v[p[2]]);
}

Vec3 periodic_word_vector(const std::vector<int>& word) {
  if (std::find(word.begin(), word.end(), 3) == word.end())
    throw PreconditionFailed("periodic word must contain the digit 3");
  IMat3 m = fs_product(word);
  // Dominant eigenvalue estimate by power iteration.
  double x[3] = {1, 1, 1}, lambda = 0;
  for (int it = 0; it < 2000; ++it) {
    double y[3];
    for (int i = 0; i < 3; ++i) y[i] = m[i][0] * x[0] + m[i][1] * x[1] + m[i][2] * x[2];
    double n = std::max({y[0], y[1], y[2]});
    lambda = n / std::max({x[0], x[1], x[2]});
    for (int i = 0; i < 3; ++i) x[i] = y[i] / n;
  }
  std::int64_t tr = m[0][0] + m[1][1] + m[2][2];
  std::int64_t c2 = m[0][0] * m[1][1] - m[0][1] * m[1][0] + m[0][0] * m[2][2] -
                    m[0][2] * m[2][0] + m[1][1] * m[2][2] - m[1][2] * m[2][1];
  std::int64_t det = determinant(m);
  QPoly charpoly({Rational(-det), Rational(c2), Rational(-tr), Rational(1)});
  mpq_class approx(lambda);
  Rational rel(1, 1000000);
  RealRoot root;
  for (int attempt = 0;; ++attempt) {
    try {
      root = isolate_root(charpoly, approx * (1 - rel), approx * (1 + rel));
      break;
    } catch (const DomainError&) {
      if (attempt > 6) throw;
      rel /= 100;
    }
  }
  if (root.rational)
    throw PreconditionFailed("dominant eigenvalue of word " + word_string(word) + " is rational");
  Scalar lam = Scalar::generator_of(root.field);
  Scalar a[3][3];
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) a[i][j] = Scalar(m[i][j]) - (i == j ? lam : Scalar(0));
  for (auto [r0, r1] : {std::pair{0, 1}, std::pair{0, 2}, std::pair{1, 2}}) {
    Scalar c[3] = {a[r0][1] * a[r1][2] - a[r0][2] * a[r1][1],
                   a[r0][2] * a[r1][0] - a[r0][0] * a[r1][2],
                   a[r0][0] * a[r1][1] - a[r0][1] * a[r1][0]};
    if (c[0].is_zero() && c[1].is_zero() && c[2].is_zero()) continue;
    if (c[0].is_zero()) throw PreconditionFailed("dominant eigenvector has a zero coordinate");
    Scalar inv = c[0].inverse();
    Vec3 v(Scalar(1), c[1] * inv, c[2] * inv);
    if (!v.is_sorted_nonnegative())
      throw InternalInconsistency("dominant eigenvector is not sorted: " + v.to_string());
    return v;
  }
  throw InternalInconsistency("dominant eigenvalue has a degenerate eigenspace");
}

std::vector<int> parse_word(const std::string& digits) {
  std::vector<int> w;
  for (char c : digits) {
    if (c < '1' || c > '3') throw ParseError("word digits must be 1, 2 or 3: \"" + digits + "\"");
    w.push_back(c - '0');
  }
  return w;
}

std::string word_string(const std::vector<int>& word) {
  std::string s;
  for (int d : word) s += static_cast<char>('0' + d);
  return s;
}

}  // namespace discplane
