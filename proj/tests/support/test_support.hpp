#pragma once

#include <mpfr.h>

#include <string>
#include <vector>

#include "discplane/parse.hpp"
#include "discplane/stepped.hpp"
#include "reference_patterns.hpp"

namespace testsupport {

inline discplane::Pattern to_pattern(const std::vector<reference::RefFace>& faces) {
  std::vector<discplane::UnitFace> out;
  for (const auto& f : faces) out.push_back({f.x, f.type});
  return discplane::Pattern(std::move(out));
}

// Faces taken modulo (1,1,1), represented with third coordinate 0.
inline discplane::Pattern to_projected_pattern(const std::vector<reference::RefFace>& faces) {
  std::vector<discplane::UnitFace> out;
  for (const auto& f : faces) out.push_back({{f.x[0] - f.x[2], f.x[1] - f.x[2], 0}, f.type});
  return discplane::Pattern(std::move(out));
}

inline discplane::Scalar S(const std::string& text, const discplane::Bindings& b = {}) {
  return discplane::parse_scalar(text, b);
}

inline discplane::Vec3 V(const std::string& text, const discplane::Bindings& b = {}) {
  return discplane::parse_vec3(text, b);
}

// The real root of x^3 + x^2 + x - 1 in (1/2, 3/5).
inline discplane::Bindings alpha_bindings() {
  discplane::Bindings b;
  discplane::parse_binding("a=algebraic(-1,1,1,1; 1/2,3/5)", b);
  return b;
}

// Closed interval with MPFR endpoints and outward rounding; used as an
// independent shadow of exact arithmetic.
class Shadow {
 public:
  static constexpr mpfr_prec_t kPrec = 256;
  Shadow() {
    mpfr_init2(lo_, kPrec);
    mpfr_init2(hi_, kPrec);
    mpfr_set_zero(lo_, 1);
    mpfr_set_zero(hi_, 1);
  }
  explicit Shadow(long q) : Shadow() {
    mpfr_set_si(lo_, q, MPFR_RNDD);
    mpfr_set_si(hi_, q, MPFR_RNDU);
  }
  Shadow(const Shadow& o) : Shadow() {
    mpfr_set(lo_, o.lo_, MPFR_RNDD);
    mpfr_set(hi_, o.hi_, MPFR_RNDU);
  }
  Shadow& operator=(const Shadow& o) {
    mpfr_set(lo_, o.lo_, MPFR_RNDD);
    mpfr_set(hi_, o.hi_, MPFR_RNDU);
    return *this;
  }
  ~Shadow() {
    mpfr_clear(lo_);
    mpfr_clear(hi_);
  }

  static Shadow rational(long p, long q) {
    Shadow s(p), d(q);
    return s / d;
  }
  static Shadow root(long n, unsigned long k) {
    Shadow s;
    mpfr_set_si(s.lo_, n, MPFR_RNDD);
    mpfr_set_si(s.hi_, n, MPFR_RNDU);
    mpfr_rootn_ui(s.lo_, s.lo_, k, MPFR_RNDD);
    mpfr_rootn_ui(s.hi_, s.hi_, k, MPFR_RNDU);
    return s;
  }
  static Shadow pi() {
    Shadow s;
    mpfr_const_pi(s.lo_, MPFR_RNDD);
    mpfr_const_pi(s.hi_, MPFR_RNDU);
    return s;
  }
  // Root of the increasing function c0 + c1 x + ... on [lo, hi] by bisection.
  static Shadow bisect_increasing(const std::vector<long>& c, double lo, double hi) {
    mpfr_t a, b, m, v, t;
    for (auto* p : {&a, &b, &m, &v, &t}) mpfr_init2(*p, kPrec + 32);
    mpfr_set_d(a, lo, MPFR_RNDN);
    mpfr_set_d(b, hi, MPFR_RNDN);
    for (int it = 0; it < static_cast<int>(kPrec) + 16; ++it) {
      mpfr_add(m, a, b, MPFR_RNDN);
      mpfr_div_2ui(m, m, 1, MPFR_RNDN);
      mpfr_set_zero(v, 1);
      for (std::size_t k = c.size(); k-- > 0;) {
        mpfr_mul(v, v, m, MPFR_RNDN);
        mpfr_add_si(v, v, c[k], MPFR_RNDN);
      }
      if (mpfr_sgn(v) > 0)
        mpfr_set(b, m, MPFR_RNDN);
      else
        mpfr_set(a, m, MPFR_RNDN);
    }
    Shadow s;
    mpfr_set(s.lo_, a, MPFR_RNDD);
    mpfr_set(s.hi_, b, MPFR_RNDU);
    // Bisection endpoints carry evaluation error; widen by a few ulps.
    mpfr_nextbelow(s.lo_);
    mpfr_nextabove(s.hi_);
    for (auto* p : {&a, &b, &m, &v, &t}) mpfr_clear(*p);
    return s;
  }

  friend Shadow operator+(const Shadow& a, const Shadow& b) {
    Shadow r;
    mpfr_add(r.lo_, a.lo_, b.lo_, MPFR_RNDD);
    mpfr_add(r.hi_, a.hi_, b.hi_, MPFR_RNDU);
    return r;
  }
  friend Shadow operator-(const Shadow& a, const Shadow& b) {
    Shadow r;
    mpfr_sub(r.lo_, a.lo_, b.hi_, MPFR_RNDD);
    mpfr_sub(r.hi_, a.hi_, b.lo_, MPFR_RNDU);
    return r;
  }
  friend Shadow operator*(const Shadow& a, const Shadow& b) {
    Shadow r;
    mpfr_t p;
    mpfr_init2(p, kPrec);
    bool first = true;
    for (auto* x : {&a.lo_, &a.hi_})
      for (auto* y : {&b.lo_, &b.hi_}) {
        mpfr_mul(p, *x, *y, MPFR_RNDD);
        if (first || mpfr_less_p(p, r.lo_)) mpfr_set(r.lo_, p, MPFR_RNDD);
        mpfr_mul(p, *x, *y, MPFR_RNDU);
        if (first || mpfr_greater_p(p, r.hi_)) mpfr_set(r.hi_, p, MPFR_RNDU);
        first = false;
      }
    mpfr_clear(p);
    return r;
  }
  // Requires 0 outside b.
  friend Shadow operator/(const Shadow& a, const Shadow& b) {
    Shadow inv;
    mpfr_ui_div(inv.lo_, 1, b.hi_, MPFR_RNDD);
    mpfr_ui_div(inv.hi_, 1, b.lo_, MPFR_RNDU);
    return a * inv;
  }

  bool straddles_zero() const { return mpfr_sgn(lo_) <= 0 && mpfr_sgn(hi_) >= 0; }
  double width() const {
    mpfr_t w;
    mpfr_init2(w, kPrec);
    mpfr_sub(w, hi_, lo_, MPFR_RNDU);
    double d = mpfr_get_d(w, MPFR_RNDU);
    mpfr_clear(w);
    return d;
  }
  double mid() const { return (mpfr_get_d(lo_, MPFR_RNDN) + mpfr_get_d(hi_, MPFR_RNDN)) / 2; }
  mpfr_srcptr lo() const { return lo_; }
  mpfr_srcptr hi() const { return hi_; }

 private:
  mpfr_t lo_, hi_;
};

}  // namespace testsupport
