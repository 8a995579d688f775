#include "discplane/scalar.hpp"

#include <algorithm>
#include <mutex>
#include <set>
#include <sstream>

#include "discplane/errors.hpp"

namespace discplane {

// ---------------------------------------------------------------------------
// Generator registry for the symbolic layer.

namespace {

struct Registry {
  std::mutex mutex;
  std::vector<Generator> gens{Generator{true, nullptr}};
};

Registry& registry() {
  static Registry r;
  return r;
}

}  // namespace

std::uint32_t pi_generator() { return 0; }

std::uint32_t field_generator(const FieldPtr& field) {
  auto& r = registry();
  std::lock_guard<std::mutex> lock(r.mutex);
  for (std::uint32_t i = 1; i < r.gens.size(); ++i)
    if (r.gens[i].field == field) return i;
  r.gens.push_back(Generator{false, field});
  return static_cast<std::uint32_t>(r.gens.size() - 1);
}

Generator generator(std::uint32_t id) {
  auto& r = registry();
  std::lock_guard<std::mutex> lock(r.mutex);
  return r.gens.at(id);
}

// ---------------------------------------------------------------------------
// Symbolic polynomial helpers.

namespace {

Monomial mul_monomials(const Monomial& a, const Monomial& b) {
  Monomial r;
  size_t i = 0, j = 0;
  while (i < a.size() || j < b.size()) {
    if (j == b.size() || (i < a.size() && a[i].first < b[j].first)) {
      r.push_back(a[i++]);
    } else if (i == a.size() || b[j].first < a[i].first) {
      r.push_back(b[j++]);
    } else {
      r.emplace_back(a[i].first, a[i].second + b[j].second);
      ++i;
      ++j;
    }
  }
  return r;
}

void add_term(SymbolicValue& s, const Monomial& m, const Rational& c) {
  if (c == 0) return;
  auto [it, inserted] = s.terms.emplace(m, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) s.terms.erase(it);
  }
}

// Reduces field-generator exponents below the field degree.
SymbolicValue reduce_symbolic(SymbolicValue s) {
  for (;;) {
    auto it = std::find_if(s.terms.begin(), s.terms.end(), [](const auto& t) {
      for (auto [g, e] : t.first) {
        if (g == pi_generator()) continue;
        if (static_cast<int>(e) >= generator(g).field->degree()) return true;
      }
      return false;
    });
    if (it == s.terms.end()) return s;
    Monomial m = it->first;
    Rational c = it->second;
    s.terms.erase(it);
    for (auto& [g, e] : m) {
      if (g == pi_generator()) continue;
      const auto& mod = generator(g).field->modulus();
      int d = mod.degree();
      if (static_cast<int>(e) < d) continue;
      std::uint32_t base = e - d;
      for (int i = 0; i < d; ++i) {
        Monomial mi;
        for (auto [g2, e2] : m) {
          if (g2 != g) {
            mi.emplace_back(g2, e2);
          } else if (base + i > 0) {
            mi.emplace_back(g2, base + i);
          }
        }
        add_term(s, mi, -c * mod.coeffs()[i]);
      }
      break;
    }
  }
}

SymbolicValue symbolic_from_field(const FieldPtr& field, const QPoly& poly) {
  SymbolicValue s;
  std::uint32_t g = field_generator(field);
  for (int i = 0; i <= poly.degree(); ++i) {
    Monomial m;
    if (i > 0) m.emplace_back(g, i);
    add_term(s, m, poly.coeffs()[i]);
  }
  return s;
}

Interval enclose_symbolic(const SymbolicValue& s, mpfr_prec_t prec) {
  std::map<std::uint32_t, Interval> gens;
  Interval acc(Rational(0), prec);
  for (const auto& [m, c] : s.terms) {
    Interval t(c, prec);
    for (auto [g, e] : m) {
      auto it = gens.find(g);
      if (it == gens.end()) {
        Generator info = generator(g);
        it = gens.emplace(g, info.is_pi ? Interval::pi(prec) : info.field->enclose_generator(prec))
                 .first;
      }
      for (std::uint32_t k = 0; k < e; ++k) t = t * it->second;
    }
    acc = acc + t;
  }
  return acc;
}

QPoly embed(const AlgebraicValue& v, const Compositum& c, bool first) {
  return compose(v.poly, first ? c.first : c.second, c.field->modulus());
}

}  // namespace

// ---------------------------------------------------------------------------
// Scalar.

Scalar::Scalar(const Rational& q) : rep_(q) { std::get<Rational>(rep_).canonicalize(); }

Scalar::Scalar(SymbolicValue s) : rep_(std::move(s)) {}

Scalar Scalar::from_field(const FieldPtr& field, const QPoly& poly) {
  QPoly r = poly % field->modulus();
  Scalar s;
  if (r.is_constant()) {
    s.rep_ = r.coeff(0);
  } else {
    s.rep_ = AlgebraicValue{field, std::move(r)};
  }
  return s;
}

Scalar Scalar::generator_of(const FieldPtr& field) {
  return from_field(field, QPoly::monomial(1, 1));
}

Scalar Scalar::pi() {
  SymbolicValue s;
  s.terms[Monomial{{pi_generator(), 1}}] = 1;
  return Scalar(std::move(s));
}

ScalarKind Scalar::kind() const {
  switch (rep_.index()) {
    case 0:
      return ScalarKind::Rational;
    case 1:
      return ScalarKind::Algebraic;
    default:
      return ScalarKind::IntervalReal;
  }
}

FieldPtr Scalar::field() const {
  if (kind() == ScalarKind::Algebraic) return algebraic().field;
  return nullptr;
}

SymbolicValue Scalar::to_symbolic() const {
  switch (kind()) {
    case ScalarKind::Rational: {
      SymbolicValue s;
      add_term(s, Monomial{}, rational());
      return s;
    }
    case ScalarKind::Algebraic:
      return symbolic_from_field(algebraic().field, algebraic().poly);
    default:
      return symbolic();
  }
}

// Demotes a symbolic value to Algebraic/Rational when it mentions at most one
// field generator and no pi.
Scalar Scalar::normalize(SymbolicValue s) {
  s = reduce_symbolic(std::move(s));
  std::set<std::uint32_t> used;
  for (const auto& [m, c] : s.terms)
    for (auto [g, e] : m) used.insert(g);
  if (used.empty()) {
    auto it = s.terms.find(Monomial{});
    return Scalar(it == s.terms.end() ? Rational(0) : it->second);
  }
  if (used.size() == 1 && *used.begin() != pi_generator()) {
    std::uint32_t g = *used.begin();
    FieldPtr f = generator(g).field;
    std::vector<Rational> coeffs(f->degree());
    for (const auto& [m, c] : s.terms) coeffs[m.empty() ? 0 : m[0].second] += c;
    return from_field(f, QPoly(std::move(coeffs)));
  }
  return Scalar(std::move(s));
}

Scalar Scalar::operator-() const {
  switch (kind()) {
    case ScalarKind::Rational:
      return Scalar(Rational(-rational()));
    case ScalarKind::Algebraic:
      return from_field(algebraic().field, -algebraic().poly);
    default: {
      SymbolicValue s = symbolic();
      for (auto& [m, c] : s.terms) c = -c;
      return Scalar(std::move(s));
    }
  }
}

namespace {

enum class Op { Add, Sub, Mul };

Rational apply(Op op, const Rational& a, const Rational& b) {
  switch (op) {
    case Op::Add:
      return a + b;
    case Op::Sub:
      return a - b;
    default:
      return a * b;
  }
}

QPoly apply(Op op, const QPoly& a, const QPoly& b, const QPoly& mod) {
  switch (op) {
    case Op::Add:
      return a + b;
    case Op::Sub:
      return a - b;
    default:
      return (a * b) % mod;
  }
}

QPoly as_poly(const Scalar& s) {
  if (s.is_rational()) return QPoly::constant(s.rational());
  return s.algebraic().poly;
}

}  // namespace

Scalar operator+(const Scalar& a, const Scalar& b) { return Scalar::binary(0, a, b); }
Scalar operator-(const Scalar& a, const Scalar& b) { return Scalar::binary(1, a, b); }
Scalar operator*(const Scalar& a, const Scalar& b) { return Scalar::binary(2, a, b); }

Scalar Scalar::binary(int code, const Scalar& a, const Scalar& b) {
  Op op = static_cast<Op>(code);
  ScalarKind ka = a.kind(), kb = b.kind();
  if (ka == ScalarKind::Rational && kb == ScalarKind::Rational)
    return Scalar(apply(op, a.rational(), b.rational()));
  if (ka == ScalarKind::IntervalReal || kb == ScalarKind::IntervalReal) {
    SymbolicValue sa = a.to_symbolic(), sb = b.to_symbolic();
    SymbolicValue r;
    if (op == Op::Mul) {
      for (const auto& [ma, ca] : sa.terms)
        for (const auto& [mb, cb] : sb.terms) add_term(r, mul_monomials(ma, mb), ca * cb);
    } else {
      r = sa;
      for (const auto& [mb, cb] : sb.terms) add_term(r, mb, op == Op::Add ? cb : Rational(-cb));
    }
    return normalize(std::move(r));
  }
  FieldPtr fa = a.field(), fb = b.field();
  if (!fa || !fb || fa == fb) {
    FieldPtr f = fa ? fa : fb;
    return Scalar::from_field(f, apply(op, as_poly(a), as_poly(b), f->modulus()));
  }
  Compositum c = compositum(fa, fb);
  QPoly pa = embed(a.algebraic(), c, true);
  QPoly pb = embed(b.algebraic(), c, false);
  return Scalar::from_field(c.field, apply(op, pa, pb, c.field->modulus()));
}

Scalar Scalar::times(long k) const {
  switch (kind()) {
    case ScalarKind::Rational:
      return Scalar(Rational(rational() * k));
    case ScalarKind::Algebraic:
      if (k == 0) return Scalar(0);
      return from_field(algebraic().field, algebraic().poly * Rational(k));
    default: {
      if (k == 0) return Scalar(0);
      SymbolicValue s = symbolic();
      for (auto& [m, c] : s.terms) c *= k;
      return Scalar(std::move(s));
    }
  }
}

Scalar Scalar::inverse() const {
  switch (kind()) {
    case ScalarKind::Rational:
      if (rational() == 0) throw DomainError("division by zero");
      return Scalar(Rational(1 / rational()));
    case ScalarKind::Algebraic: {
      const auto& v = algebraic();
      QPoly s, t;
      QPoly g = ext_gcd(v.poly, v.field->modulus(), s, t);
      if (g.degree() != 0) throw InternalInconsistency("non-invertible nonzero field element");
      return from_field(v.field, s);
    }
    default:
      throw UnsupportedScalar("division by a value involving pi is not supported");
  }
}

Scalar operator/(const Scalar& a, const Scalar& b) {
  if (b.kind() != ScalarKind::IntervalReal && b.is_zero()) throw DomainError("division by zero");
  return a * b.inverse();
}

Scalar Scalar::pow(int e) const {
  if (e < 0) return inverse().pow(-e);
  Scalar r(1), base = *this;
  while (e) {
    if (e & 1) r = r * base;
    base = base * base;
    e >>= 1;
  }
  return r;
}

bool Scalar::is_zero() const {
  switch (kind()) {
    case ScalarKind::Rational:
      return rational() == 0;
    case ScalarKind::Algebraic:
      return false;  // constants are demoted, so an Algebraic value is never zero
    default:
      return symbolic().terms.empty();
  }
}

int Scalar::sign(mpfr_prec_t max_bits) const {
  switch (kind()) {
    case ScalarKind::Rational:
      return sgn(rational());
    case ScalarKind::Algebraic:
      return algebraic().field->sign_of(algebraic().poly);
    default: {
      if (symbolic().terms.empty()) return 0;
      for (mpfr_prec_t prec = 128; prec <= max_bits; prec *= 2) {
        int s = enclose_symbolic(symbolic(), prec).sign();
        if (s != 0) return s;
      }
      throw UndecidableComparison("sign of " + to_string() + " undecided at " +
                                  std::to_string(max_bits) + " bits");
    }
  }
}

Interval Scalar::enclose(mpfr_prec_t prec) const {
  switch (kind()) {
    case ScalarKind::Rational:
      return Interval(rational(), prec);
    case ScalarKind::Algebraic:
      return algebraic().field->enclose(algebraic().poly, prec);
    default:
      return enclose_symbolic(symbolic(), prec);
  }
}

namespace {

std::string generator_name(std::uint32_t g) {
  if (g == pi_generator()) return "pi";
  return "t" + std::to_string(g);
}

std::string field_description(const FieldPtr& f, const std::string& name) {
  auto [lo, hi] = f->isolating_interval(32);
  Interval e = f->enclose_generator(64);
  return name + " = root of " + f->minpoly().to_string() + " near " + e.midpoint_decimal(12);
}

}  // namespace

std::string Scalar::render(bool parseable) const {
  auto name_of = [&](std::uint32_t g) {
    if (!parseable || g == pi_generator()) return generator_name(g);
    const FieldPtr& f = generator(g).field;
    auto [lo, hi] = f->isolating_interval(32);
    std::string s = "(algebraic(";
    const auto& c = f->minpoly().coeffs();
    for (std::size_t k = 0; k < c.size(); ++k) s += (k ? "," : "") + c[k].get_str();
    return s + "; " + lo.get_str() + "," + hi.get_str() + "))";
  };
  switch (kind()) {
    case ScalarKind::Rational:
      return rational().get_str();
    case ScalarKind::Algebraic: {
      std::uint32_t g = field_generator(algebraic().field);
      std::string body = algebraic().poly.to_string(name_of(g));
      if (parseable) return body;
      return body + " [" + field_description(algebraic().field, generator_name(g)) + "]";
    }
    default: {
      std::ostringstream os;
      bool first = true;
      std::set<std::uint32_t> gens;
      for (auto it = symbolic().terms.rbegin(); it != symbolic().terms.rend(); ++it) {
        const auto& [m, c] = *it;
        Rational q = c;
        if (!first) {
          os << (q < 0 ? " - " : " + ");
          q = abs(q);
        } else if (q < 0) {
          os << "-";
          q = -q;
        }
        first = false;
        bool unit = m.empty() || q != 1;
        if (unit) os << q.get_str();
        bool need_star = unit;
        for (auto [g, e] : m) {
          gens.insert(g);
          if (need_star) os << "*";
          os << name_of(g);
          if (e > 1) os << "^" << e;
          need_star = true;
        }
      }
      if (first) os << "0";
      if (parseable) return os.str();
      std::string tail;
      for (auto g : gens) {
        if (g == pi_generator()) continue;
        tail += (tail.empty() ? " [" : "; ") + field_description(generator(g).field, generator_name(g));
      }
      if (!tail.empty()) tail += "]";
      return os.str() + tail;
    }
  }
}

std::string Scalar::to_string() const { return render(false); }

std::string Scalar::expression() const { return render(true); }

std::string Scalar::decimal(int digits) const {
  mpfr_prec_t prec = static_cast<mpfr_prec_t>(digits * 3.33) + 64;
  return enclose(prec).midpoint_decimal(digits);
}

// ---------------------------------------------------------------------------
// Comparison.

Cmp compare(const Scalar& a, const Scalar& b, mpfr_prec_t max_bits) {
  if (a.is_rational() && b.is_rational()) {
    int c = cmp(a.rational(), b.rational());
    return c < 0 ? Cmp::Less : (c > 0 ? Cmp::Greater : Cmp::Equal);
  }
  Scalar d = a - b;
  try {
    int s = d.sign(max_bits);
    return s < 0 ? Cmp::Less : (s > 0 ? Cmp::Greater : Cmp::Equal);
  } catch (const UndecidableComparison&) {
    return Cmp::Undecidable;
  }
}

namespace {

Cmp checked(const Scalar& a, const Scalar& b) {
  Cmp c = compare(a, b);
  if (c == Cmp::Undecidable)
    throw UndecidableComparison("cannot compare " + a.to_string() + " with " + b.to_string() +
                                " within " + std::to_string(kDefaultMaxBits) + " bits");
  return c;
}

}  // namespace

bool operator<(const Scalar& a, const Scalar& b) { return checked(a, b) == Cmp::Less; }
bool operator<=(const Scalar& a, const Scalar& b) { return checked(a, b) != Cmp::Greater; }
bool operator>(const Scalar& a, const Scalar& b) { return checked(a, b) == Cmp::Greater; }
bool operator>=(const Scalar& a, const Scalar& b) { return checked(a, b) != Cmp::Less; }
bool operator==(const Scalar& a, const Scalar& b) { return checked(a, b) == Cmp::Equal; }
bool operator!=(const Scalar& a, const Scalar& b) { return checked(a, b) != Cmp::Equal; }

Scalar abs(const Scalar& a) { return a.sign() < 0 ? -a : a; }
Scalar max(const Scalar& a, const Scalar& b) { return a < b ? b : a; }
Scalar min(const Scalar& a, const Scalar& b) { return b < a ? b : a; }

// ---------------------------------------------------------------------------
// Field-level helpers.

void unify_fields(std::vector<Scalar>& values) {
  FieldPtr common;
  for (const auto& v : values) {
    if (v.kind() != ScalarKind::Algebraic) continue;
    if (!common)
      common = v.field();
    else if (v.field() != common)
      common = compositum(common, v.field()).field;
  }
  if (!common) return;
  for (auto& v : values) {
    if (v.kind() != ScalarKind::Algebraic || v.field() == common) continue;
    Compositum c = compositum(common, v.field());
    if (c.field != common) throw InternalInconsistency("common field is not closed");
    v = Scalar::from_field(common, embed(v.algebraic(), c, false));
  }
}

std::string canonical_key(const Scalar& s) {
  switch (s.kind()) {
    case ScalarKind::Rational:
      return "q:" + s.rational().get_str();
    case ScalarKind::Algebraic: {
      std::ostringstream os;
      os << "a" << s.field().get() << ":";
      for (const auto& c : s.algebraic().poly.coeffs()) os << c.get_str() << ",";
      return os.str();
    }
    default: {
      std::ostringstream os;
      os << "s:";
      for (const auto& [m, c] : s.symbolic().terms) {
        for (auto [g, e] : m) os << g << "^" << e << ".";
        os << "=" << c.get_str() << ",";
      }
      return os.str();
    }
  }
}

int rational_dimension(const std::vector<Scalar>& values) {
  if (values.empty()) throw DomainError("rational_dimension of an empty list");
  for (const auto& v : values)
    if (v.kind() == ScalarKind::IntervalReal)
      throw UnsupportedScalar("rational dimension is undecidable for values involving pi");
  std::vector<Scalar> vals = values;
  unify_fields(vals);
  int d = 1;
  for (const auto& v : vals)
    if (v.kind() == ScalarKind::Algebraic) d = v.field()->degree();
  std::vector<std::vector<Rational>> rows;
  for (const auto& v : vals) {
    std::vector<Rational> row(d);
    if (v.is_rational())
      row[0] = v.rational();
    else
      for (int i = 0; i <= v.algebraic().poly.degree(); ++i) row[i] = v.algebraic().poly.coeffs()[i];
    rows.push_back(std::move(row));
  }
  int rank = 0;
  for (int col = 0; col < d && rank < static_cast<int>(rows.size()); ++col) {
    size_t piv = rank;
    while (piv < rows.size() && rows[piv][col] == 0) ++piv;
    if (piv == rows.size()) continue;
    std::swap(rows[piv], rows[rank]);
    for (size_t r = rank + 1; r < rows.size(); ++r) {
      if (rows[r][col] == 0) continue;
      Rational f = rows[r][col] / rows[rank][col];
      for (int k = col; k < d; ++k) rows[r][k] -= f * rows[rank][k];
    }
    ++rank;
  }
  return rank;
}

int rational_dimension_with_pi(const std::vector<Scalar>& values) {
  bool any_pi = false;
  for (const auto& v : values) any_pi = any_pi || v.kind() == ScalarKind::IntervalReal;
  if (!any_pi) return rational_dimension(values);
  std::vector<Scalar> vals = values;
  unify_fields(vals);
  std::vector<std::map<Monomial, Rational>> coords;
  std::map<Monomial, std::size_t> basis;
  std::uint32_t field_gen = 0;
  bool have_field = false;
  auto note_field = [&](std::uint32_t id) {
    if (have_field && id != field_gen)
      throw UnsupportedScalar("rational dimension with pi needs a single number field");
    have_field = true;
    field_gen = id;
  };
  for (const auto& v : vals) {
    std::map<Monomial, Rational> c;
    switch (v.kind()) {
      case ScalarKind::Rational:
        c[Monomial{}] = v.rational();
        break;
      case ScalarKind::Algebraic: {
        std::uint32_t id = field_generator(v.field());
        note_field(id);
        const auto& co = v.algebraic().poly.coeffs();
        for (std::size_t i = 0; i < co.size(); ++i)
          if (co[i] != 0) c[i == 0 ? Monomial{} : Monomial{{id, static_cast<std::uint32_t>(i)}}] = co[i];
        break;
      }
      default:
        for (const auto& [m, q] : v.symbolic().terms) {
          for (const auto& [id, e] : m)
            if (!generator(id).is_pi) note_field(id);
          c[m] = q;
        }
    }
    for (const auto& [m, q] : c) basis.emplace(m, basis.size());
    coords.push_back(std::move(c));
  }
  const std::size_t d = basis.size();
  std::vector<std::vector<Rational>> rows;
  for (const auto& c : coords) {
    std::vector<Rational> row(d);
    for (const auto& [m, q] : c) row[basis[m]] = q;
    rows.push_back(std::move(row));
  }
  int rank = 0;
  for (std::size_t col = 0; col < d && rank < static_cast<int>(rows.size()); ++col) {
    std::size_t piv = rank;
    while (piv < rows.size() && rows[piv][col] == 0) ++piv;
    if (piv == rows.size()) continue;
    std::swap(rows[piv], rows[rank]);
    for (std::size_t r = rank + 1; r < rows.size(); ++r) {
      if (rows[r][col] == 0) continue;
      Rational f = rows[r][col] / rows[rank][col];
      for (std::size_t k = col; k < d; ++k) rows[r][k] -= f * rows[rank][k];
    }
    ++rank;
  }
  return rank;
}

Scalar gcd_ext(const Scalar& a, const Scalar& b) {
  if (a.sign() < 0 || b.sign() < 0) throw DomainError("gcd_ext expects nonnegative inputs");
  if (a.is_zero() && b.is_zero()) throw DomainError("gcd_ext of two zeros");
  if (a.is_zero()) return b;
  if (b.is_zero()) return a;
  if (rational_dimension({a, b}) > 1)
    throw IncommensurableInputs("gcd_ext: " + a.to_string() + " and " + b.to_string() +
                                " are linearly independent over Q");
  Scalar ratio = b / a;
  if (!ratio.is_rational()) throw InternalInconsistency("commensurable ratio is not rational");
  // gcd(a, (p/q) a) = a * gcd(q, p) / q = a / q for p/q in lowest terms.
  return a * Scalar(Rational(1, 1) / Rational(ratio.rational().get_den()));
}

// ---------------------------------------------------------------------------
// Vec3.

Vec3::Vec3(Scalar a, Scalar b, Scalar c) {
  std::vector<Scalar> v{std::move(a), std::move(b), std::move(c)};
  unify_fields(v);
  c_ = {v[0], v[1], v[2]};
}

Scalar Vec3::dot(const IVec3& x) const {
  return c_[0].times(x[0]) + c_[1].times(x[1]) + c_[2].times(x[2]);
}

Scalar Vec3::norm1() const { return abs(c_[0]) + abs(c_[1]) + abs(c_[2]); }

Scalar Vec3::norm_inf() const { return max(abs(c_[0]), max(abs(c_[1]), abs(c_[2]))); }

bool Vec3::is_sorted_nonnegative() const {
  return c_[0].sign() >= 0 && c_[0] <= c_[1] && c_[1] <= c_[2];
}

std::string Vec3::to_string() const {
  return "(" + c_[0].to_string() + ", " + c_[1].to_string() + ", " + c_[2].to_string() + ")";
}

bool operator==(const Vec3& a, const Vec3& b) {
  return a[0] == b[0] && a[1] == b[1] && a[2] == b[2];
}

}  // namespace discplane
