#include "discplane/polynomial.hpp"

#include <algorithm>
#include <sstream>

#include "discplane/errors.hpp"

namespace discplane {

QPoly::QPoly(std::vector<Rational> coeffs) : c_(std::move(coeffs)) {
  for (auto& q : c_) q.canonicalize();
  trim();
}

QPoly QPoly::constant(const Rational& c) { return QPoly({c}); }

QPoly QPoly::monomial(const Rational& c, int degree) {
  std::vector<Rational> v(degree + 1);
  v[degree] = c;
  return QPoly(std::move(v));
}

void QPoly::trim() {
  while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

Rational QPoly::coeff(int i) const {
  if (i < 0 || i >= static_cast<int>(c_.size())) return 0;
  return c_[i];
}

QPoly QPoly::operator-() const {
  QPoly r = *this;
  for (auto& q : r.c_) q = -q;
  return r;
}

QPoly& QPoly::operator+=(const QPoly& o) {
  if (o.c_.size() > c_.size()) c_.resize(o.c_.size());
  for (size_t i = 0; i < o.c_.size(); ++i) c_[i] += o.c_[i];
  trim();
  return *this;
}

QPoly& QPoly::operator-=(const QPoly& o) {
  if (o.c_.size() > c_.size()) c_.resize(o.c_.size());
  for (size_t i = 0; i < o.c_.size(); ++i) c_[i] -= o.c_[i];
  trim();
  return *this;
}

QPoly& QPoly::operator*=(const Rational& s) {
  if (s == 0) {
    c_.clear();
    return *this;
  }
  for (auto& q : c_) q *= s;
  return *this;
}

QPoly operator*(const QPoly& a, const QPoly& b) {
  if (a.is_zero() || b.is_zero()) return QPoly();
  std::vector<Rational> r(a.c_.size() + b.c_.size() - 1);
  for (size_t i = 0; i < a.c_.size(); ++i) {
    if (a.c_[i] == 0) continue;
    for (size_t j = 0; j < b.c_.size(); ++j) r[i + j] += a.c_[i] * b.c_[j];
  }
  return QPoly(std::move(r));
}

Rational QPoly::eval(const Rational& x) const {
  Rational acc = 0;
  for (size_t i = c_.size(); i-- > 0;) acc = acc * x + c_[i];
  return acc;
}

QPoly QPoly::derivative() const {
  if (c_.size() <= 1) return QPoly();
  std::vector<Rational> r(c_.size() - 1);
  for (size_t i = 1; i < c_.size(); ++i) r[i - 1] = c_[i] * static_cast<long>(i);
  return QPoly(std::move(r));
}

QPoly QPoly::monic() const {
  if (is_zero()) return *this;
  Rational inv = 1 / leading();
  return *this * inv;
}

std::string QPoly::to_string(const std::string& var) const {
  if (c_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (size_t i = c_.size(); i-- > 0;) {
    if (c_[i] == 0) continue;
    Rational q = c_[i];
    if (!first) {
      os << (q < 0 ? " - " : " + ");
      q = abs(q);
    } else if (q < 0) {
      os << "-";
      q = -q;
    }
    first = false;
    if (i == 0 || q != 1) os << q.get_str();
    if (i > 0) {
      if (q != 1) os << "*";
      os << var;
      if (i > 1) os << "^" << i;
    }
  }
  return os.str();
}

std::pair<QPoly, QPoly> divmod(const QPoly& a, const QPoly& b) {
  if (b.is_zero()) throw DomainError("polynomial division by zero");
  std::vector<Rational> rem = a.coeffs();
  int db = b.degree();
  int da = a.degree();
  if (da < db) return {QPoly(), a};
  std::vector<Rational> quo(da - db + 1);
  Rational inv = 1 / b.leading();
  for (int i = da; i >= db; --i) {
    if (rem[i] == 0) continue;
    Rational f = rem[i] * inv;
    quo[i - db] = f;
    for (int j = 0; j <= db; ++j) rem[i - db + j] -= f * b.coeffs()[j];
  }
  rem.resize(db);
  return {QPoly(std::move(quo)), QPoly(std::move(rem))};
}

QPoly operator%(const QPoly& a, const QPoly& b) {
  if (a.degree() < b.degree()) return a;
  return divmod(a, b).second;
}

QPoly gcd(const QPoly& a, const QPoly& b) {
  QPoly x = a, y = b;
  while (!y.is_zero()) {
    QPoly r = x % y;
    x = std::move(y);
    y = r.monic();
  }
  return x.monic();
}

QPoly ext_gcd(const QPoly& a, const QPoly& b, QPoly& s, QPoly& t) {
  QPoly r0 = a, r1 = b;
  QPoly s0 = QPoly::constant(1), s1;
  QPoly t0, t1 = QPoly::constant(1);
  while (!r1.is_zero()) {
    auto [q, r] = divmod(r0, r1);
    r0 = std::move(r1);
    r1 = std::move(r);
    QPoly s2 = s0 - q * s1;
    s0 = std::move(s1);
    s1 = std::move(s2);
    QPoly t2 = t0 - q * t1;
    t0 = std::move(t1);
    t1 = std::move(t2);
  }
  if (r0.is_zero()) {
    s = QPoly();
    t = QPoly();
    return r0;
  }
  Rational inv = 1 / r0.leading();
  s = s0 * inv;
  t = t0 * inv;
  return r0 * inv;
}

QPoly compose(const QPoly& f, const QPoly& g, const QPoly& m) {
  QPoly acc;
  for (int i = f.degree(); i >= 0; --i) {
    acc = acc * g + QPoly::constant(f.coeffs()[i]);
    if (!m.is_zero()) acc = acc % m;
  }
  return acc;
}

ZPoly::ZPoly(std::vector<Integer> coeffs) : c_(std::move(coeffs)) { trim(); }

void ZPoly::trim() {
  while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

Integer ZPoly::coeff(int i) const {
  if (i < 0 || i >= static_cast<int>(c_.size())) return 0;
  return c_[i];
}

QPoly ZPoly::to_q() const {
  std::vector<Rational> r;
  r.reserve(c_.size());
  for (const auto& z : c_) r.emplace_back(z);
  return QPoly(std::move(r));
}

Integer ZPoly::content() const {
  Integer g = 0;
  for (const auto& z : c_) mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), z.get_mpz_t());
  return g;
}

ZPoly operator*(const ZPoly& a, const ZPoly& b) {
  if (a.is_zero() || b.is_zero()) return ZPoly();
  std::vector<Integer> r(a.c_.size() + b.c_.size() - 1);
  for (size_t i = 0; i < a.c_.size(); ++i)
    for (size_t j = 0; j < b.c_.size(); ++j) r[i + j] += a.c_[i] * b.c_[j];
  return ZPoly(std::move(r));
}

bool operator<(const ZPoly& a, const ZPoly& b) {
  if (a.c_.size() != b.c_.size()) return a.c_.size() < b.c_.size();
  for (size_t i = a.c_.size(); i-- > 0;)
    if (a.c_[i] != b.c_[i]) return a.c_[i] < b.c_[i];
  return false;
}

std::string ZPoly::to_string(const std::string& var) const { return to_q().to_string(var); }

ZPoly primitive_part(const QPoly& f) {
  if (f.is_zero()) throw DomainError("primitive part of zero polynomial");
  Integer den = 1;
  for (const auto& q : f.coeffs()) mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), q.get_den_mpz_t());
  std::vector<Integer> c;
  c.reserve(f.coeffs().size());
  for (const auto& q : f.coeffs()) c.emplace_back(q.get_num() * (den / q.get_den()));
  Integer g = ZPoly(c).content();
  if (c.back() < 0) g = -g;
  for (auto& z : c) z /= g;
  return ZPoly(std::move(c));
}

ZPoly squarefree_part(const ZPoly& f) {
  QPoly q = f.to_q();
  QPoly g = gcd(q, q.derivative());
  return primitive_part(divmod(q, g).first);
}

std::vector<QPoly> sturm_sequence(const QPoly& f) {
  std::vector<QPoly> seq{f, f.derivative()};
  while (!seq.back().is_zero()) {
    QPoly r = -(seq[seq.size() - 2] % seq.back());
    if (r.is_zero()) break;
    // Positive rescaling keeps sign patterns while bounding coefficient growth.
    seq.push_back(r * (1 / abs(r.leading())));
  }
  if (seq.back().is_zero()) seq.pop_back();
  return seq;
}

namespace {

int sign_changes(const std::vector<QPoly>& seq, const Rational& x) {
  int changes = 0, prev = 0;
  for (const auto& p : seq) {
    int s = sgn(p.eval(x));
    if (s == 0) continue;
    if (prev != 0 && s != prev) ++changes;
    prev = s;
  }
  return changes;
}

}  // namespace

int count_roots(const std::vector<QPoly>& sturm, const Rational& a, const Rational& b) {
  if (b <= a) return 0;
  return sign_changes(sturm, a) - sign_changes(sturm, b);
}

}  // namespace discplane
