#include "discplane/number_field.hpp"

#include <map>
#include <string>

#include "discplane/errors.hpp"

namespace discplane {

NumberField::NumberField(const ZPoly& minpoly, const Rational& lo, const Rational& hi)
    : minpoly_(minpoly), modulus_(minpoly.to_q().monic()), lo_(lo), hi_(hi) {
  if (minpoly_.degree() < 2) throw DomainError("number field needs degree >= 2");
  sturm_ = sturm_sequence(modulus_);
  if (count_roots(sturm_, lo_, hi_) != 1)
    throw DomainError("interval does not isolate a single root of " + minpoly_.to_string());
  sign_at_lo_ = sgn(modulus_.eval(lo_));
}

std::shared_ptr<const NumberField> NumberField::make(const ZPoly& minpoly, const Rational& lo,
                                                     const Rational& hi) {
  static std::mutex registry_mutex;
  static std::map<std::string, std::vector<std::weak_ptr<const NumberField>>> registry;
  auto fresh = std::make_shared<const NumberField>(minpoly, lo, hi);
  std::lock_guard<std::mutex> lock(registry_mutex);
  auto& bucket = registry[minpoly.to_string()];
  for (auto it = bucket.begin(); it != bucket.end();) {
    auto existing = it->lock();
    if (!existing) {
      it = bucket.erase(it);
      continue;
    }
    auto [elo, ehi] = existing->isolating_interval(0);
    Rational a = std::max(elo, lo), b = std::min(ehi, hi);
    // Both intervals isolate one root; they name the same root iff their
    // intersection still contains one.
    if (a < b && count_roots(fresh->sturm_, a, b) == 1) return existing;
    ++it;
  }
  bucket.push_back(fresh);
  return fresh;
}

std::pair<Rational, Rational> NumberField::isolating_interval(unsigned bits) const {
  std::lock_guard<std::mutex> lock(mutex_);
  Rational eps = 1;
  mpq_div_2exp(eps.get_mpq_t(), eps.get_mpq_t(), bits);
  while (hi_ - lo_ > eps) {
    Rational mid = (lo_ + hi_) / 2;
    int s = sgn(modulus_.eval(mid));
    if (s == sign_at_lo_)
      lo_ = mid;
    else
      hi_ = mid;
  }
  return {lo_, hi_};
}

Interval NumberField::enclose_generator(mpfr_prec_t prec) const {
  auto [lo, hi] = isolating_interval(static_cast<unsigned>(prec) + 4);
  return Interval(lo, hi, prec);
}

Interval NumberField::enclose(const QPoly& g, mpfr_prec_t prec) const {
  QPoly r = g % modulus_;
  Interval theta = enclose_generator(prec);
  Interval acc(Rational(0), prec);
  for (int i = r.degree(); i >= 0; --i) acc = acc * theta + Interval(r.coeffs()[i], prec);
  return acc;
}

int NumberField::sign_of(const QPoly& g) const {
  QPoly r = g % modulus_;
  if (r.is_zero()) return 0;
  if (r.is_constant()) return sgn(r.coeffs()[0]);
  // r(theta) != 0 because r is a nonzero polynomial of degree below the
  // minimal polynomial's, so refinement terminates.
  for (mpfr_prec_t prec = 64; prec <= (mpfr_prec_t(1) << 22); prec *= 2) {
    int s = enclose(r, prec).sign();
    if (s != 0) return s;
  }
  throw InternalInconsistency("sign of nonzero field element not resolved");
}

namespace {

using Vec = std::vector<Rational>;

// Solves M X = R for square M (columns given) with several right-hand sides.
// Returns false when M is singular.
bool solve(std::vector<Vec> cols, std::vector<Vec>& rhs) {
  size_t n = cols.size();
  // Work on rows: a[row][col] with augmented rhs columns.
  size_t m = rhs.size();
  std::vector<Vec> a(n, Vec(n + m));
  for (size_t j = 0; j < n; ++j)
    for (size_t i = 0; i < n; ++i) a[i][j] = cols[j][i];
  for (size_t j = 0; j < m; ++j)
    for (size_t i = 0; i < n; ++i) a[i][n + j] = rhs[j][i];
  for (size_t c = 0; c < n; ++c) {
    size_t piv = c;
    while (piv < n && a[piv][c] == 0) ++piv;
    if (piv == n) return false;
    std::swap(a[piv], a[c]);
    Rational inv = 1 / a[c][c];
    for (size_t k = c; k < n + m; ++k) a[c][k] *= inv;
    for (size_t r = 0; r < n; ++r) {
      if (r == c || a[r][c] == 0) continue;
      Rational f = a[r][c];
      for (size_t k = c; k < n + m; ++k) a[r][k] -= f * a[c][k];
    }
  }
  for (size_t j = 0; j < m; ++j)
    for (size_t i = 0; i < n; ++i) rhs[j][i] = a[i][n + j];
  return true;
}

// Multiplication by a generator in Q[y1, y2] / (f1(y1), f2(y2)).
Vec times_generator(const Vec& v, int which, const QPoly& f1, const QPoly& f2) {
  int d1 = f1.degree(), d2 = f2.degree();
  Vec r(v.size());
  for (int a = 0; a < d1; ++a) {
    for (int b = 0; b < d2; ++b) {
      const Rational& c = v[a * d2 + b];
      if (c == 0) continue;
      if (which == 0) {
        if (a + 1 < d1)
          r[(a + 1) * d2 + b] += c;
        else
          for (int i = 0; i < d1; ++i) r[i * d2 + b] -= c * f1.coeffs()[i];
      } else {
        if (b + 1 < d2)
          r[a * d2 + b + 1] += c;
        else
          for (int i = 0; i < d2; ++i) r[a * d2 + i] -= c * f2.coeffs()[i];
      }
    }
  }
  return r;
}

Compositum compute_compositum(const FieldPtr& fa, const FieldPtr& fb) {
  const QPoly& f1 = fa->modulus();
  const QPoly& f2 = fb->modulus();
  int d1 = f1.degree(), d2 = f2.degree();
  int dim = d1 * d2;
  if (dim > kMaxFieldDegree)
    throw DegreeTooLarge("compositum degree " + std::to_string(dim) + " exceeds cap " +
                         std::to_string(kMaxFieldDegree));
  for (int k : {1, 2, -1, 3, -2, 4, -3, 5, -4, 6, -5, 7}) {
    // Powers of theta = y1 + k*y2; they form a basis iff theta generates the algebra.
    std::vector<Vec> powers;
    Vec p(dim);
    p[0] = 1;
    for (int j = 0; j <= dim; ++j) {
      powers.push_back(p);
      Vec t1 = times_generator(p, 0, f1, f2);
      Vec t2 = times_generator(p, 1, f1, f2);
      for (int i = 0; i < dim; ++i) t1[i] += k * t2[i];
      p = std::move(t1);
    }
    Vec top = powers.back();
    powers.pop_back();
    Vec y1(dim), y2(dim);
    y1[d2] = 1;  // index of y1^1 y2^0
    y2[1] = 1;   // index of y1^0 y2^1
    std::vector<Vec> rhs{top, y1, y2};
    if (!solve(powers, rhs)) continue;

    std::vector<Rational> mc(dim + 1);
    for (int i = 0; i < dim; ++i) mc[i] = -rhs[0][i];
    mc[dim] = 1;
    QPoly minpoly_theta(mc);
    QPoly first(rhs[1]), second(rhs[2]);
    auto factors = factor_squarefree(primitive_part(minpoly_theta));

    std::vector<std::vector<QPoly>> sturms;
    for (const auto& h : factors) sturms.push_back(sturm_sequence(h.to_q()));
    for (unsigned bits = 32;; bits += 32) {
      auto [alo, ahi] = fa->isolating_interval(bits);
      auto [blo, bhi] = fb->isolating_interval(bits);
      Rational lo = alo + k * (k > 0 ? blo : bhi);
      Rational hi = ahi + k * (k > 0 ? bhi : blo);
      int hits = 0;
      size_t chosen = 0;
      bool clean = true;
      for (size_t i = 0; i < factors.size(); ++i) {
        int c = count_roots(sturms[i], lo, hi);
        if (c > 1) clean = false;
        if (c >= 1) {
          ++hits;
          chosen = i;
        }
      }
      if (hits == 1 && clean) {
        const ZPoly& h = factors[chosen];
        if (h.degree() < 2) throw InternalInconsistency("compositum generator is rational");
        auto field = NumberField::make(h, lo, hi);
        return {field, first % field->modulus(), second % field->modulus()};
      }
      if (bits > 1u << 16) throw InternalInconsistency("compositum root selection did not converge");
    }
  }
  throw InternalInconsistency("no primitive element found for compositum");
}

// When g (a polynomial in the generator of c) generates the degree-d field c,
// returns P with generator(c) = P(g).
QPoly generator_in_terms_of(const FieldPtr& c, const QPoly& g) {
  int d = c->degree();
  std::vector<Vec> cols;
  QPoly p = QPoly::constant(1);
  for (int j = 0; j < d; ++j) {
    Vec col(d);
    for (int i = 0; i <= p.degree(); ++i) col[i] = p.coeffs()[i];
    cols.push_back(std::move(col));
    p = (p * g) % c->modulus();
  }
  Vec target(d);
  target[1] = 1;
  std::vector<Vec> rhs{target};
  if (!solve(cols, rhs)) throw InternalInconsistency("element does not generate the field");
  return QPoly(rhs[0]);
}

// Re-expresses a compositum over one of its inputs when that input already
// is the whole field, so that e.g. Q(sqrt2) and Q(sqrt8) combine into Q(sqrt2).
Compositum prefer_input_field(const Compositum& c, const FieldPtr& a, const FieldPtr& b) {
  if (c.field->degree() == a->degree()) {
    QPoly x = generator_in_terms_of(c.field, c.first);
    return {a, QPoly::monomial(1, 1), compose(c.second, x, a->modulus())};
  }
  if (c.field->degree() == b->degree()) {
    QPoly x = generator_in_terms_of(c.field, c.second);
    return {b, compose(c.first, x, b->modulus()), QPoly::monomial(1, 1)};
  }
  return c;
}

}  // namespace

Compositum compositum(const FieldPtr& a, const FieldPtr& b) {
  if (a == b) {
    QPoly x = QPoly::monomial(1, 1);
    return {a, x, x};
  }
  static std::mutex cache_mutex;
  static std::map<std::pair<const NumberField*, const NumberField*>,
                  std::pair<std::pair<FieldPtr, FieldPtr>, Compositum>>
      cache;
  {
    std::lock_guard<std::mutex> lock(cache_mutex);
    auto it = cache.find({a.get(), b.get()});
    if (it != cache.end()) return it->second.second;
  }
  Compositum c = prefer_input_field(compute_compositum(a, b), a, b);
  std::lock_guard<std::mutex> lock(cache_mutex);
  cache.emplace(std::make_pair(a.get(), b.get()), std::make_pair(std::make_pair(a, b), c));
  return c;
}

RealRoot isolate_root(const QPoly& f, const Rational& lo, const Rational& hi) {
  if (f.is_zero()) throw DomainError("zero polynomial has no isolated root");
  if (hi < lo) throw DomainError("empty isolating interval");
  ZPoly sq = squarefree_part(primitive_part(f));
  QPoly sq_q = sq.to_q();
  auto sturm = sturm_sequence(sq_q);
  bool lo_root = sq_q.eval(lo) == 0;
  int count = count_roots(sturm, lo, hi) + (lo_root ? 1 : 0);
  if (count != 1)
    throw DomainError("interval [" + lo.get_str() + ", " + hi.get_str() + "] contains " +
                      std::to_string(count) + " roots of " + f.to_string() + ", expected 1");
  RealRoot out;
  if (lo_root) {
    out.rational = true;
    out.value = lo;
    return out;
  }
  for (const auto& h : factor_squarefree(sq)) {
    if (count_roots(sturm_sequence(h.to_q()), lo, hi) != 1) continue;
    if (h.degree() == 1) {
      out.rational = true;
      out.value = Rational(-h.coeffs()[0], h.coeffs()[1]);
      out.value.canonicalize();
      return out;
    }
    out.field = NumberField::make(h, lo, hi);
    return out;
  }
  throw InternalInconsistency("isolated root not found among irreducible factors");
}

}  // namespace discplane
