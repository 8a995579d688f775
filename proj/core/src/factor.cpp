// Factorization of squarefree integer polynomials (Zassenhaus): factor modulo
// a small prime, Hensel-lift to a modulus beyond the coefficient bound, then
// recombine lifted factors by trial division.

#include <algorithm>
#include <cstdint>
#include <random>

#include "discplane/errors.hpp"
#include "discplane/polynomial.hpp"

namespace discplane {

namespace {

using u64 = std::uint64_t;
using ModPoly = std::vector<u64>;

struct Zp {
  u64 p;
  u64 add(u64 a, u64 b) const { return (a + b) % p; }
  u64 sub(u64 a, u64 b) const { return (a + p - b) % p; }
  u64 mul(u64 a, u64 b) const { return (a * b) % p; }
  u64 pow(u64 a, u64 e) const {
    u64 r = 1;
    while (e) {
      if (e & 1) r = mul(r, a);
      a = mul(a, a);
      e >>= 1;
    }
    return r;
  }
  u64 inv(u64 a) const { return pow(a, p - 2); }
};

void trim(ModPoly& a) {
  while (!a.empty() && a.back() == 0) a.pop_back();
}

int deg(const ModPoly& a) { return static_cast<int>(a.size()) - 1; }

ModPoly add(const Zp& f, const ModPoly& a, const ModPoly& b) {
  ModPoly r(std::max(a.size(), b.size()), 0);
  for (size_t i = 0; i < r.size(); ++i)
    r[i] = f.add(i < a.size() ? a[i] : 0, i < b.size() ? b[i] : 0);
  trim(r);
  return r;
}

ModPoly sub(const Zp& f, const ModPoly& a, const ModPoly& b) {
  ModPoly r(std::max(a.size(), b.size()), 0);
  for (size_t i = 0; i < r.size(); ++i)
    r[i] = f.sub(i < a.size() ? a[i] : 0, i < b.size() ? b[i] : 0);
  trim(r);
  return r;
}

ModPoly mul(const Zp& f, const ModPoly& a, const ModPoly& b) {
  if (a.empty() || b.empty()) return {};
  ModPoly r(a.size() + b.size() - 1, 0);
  for (size_t i = 0; i < a.size(); ++i) {
    if (!a[i]) continue;
    for (size_t j = 0; j < b.size(); ++j) r[i + j] = f.add(r[i + j], f.mul(a[i], b[j]));
  }
  trim(r);
  return r;
}

void divmod(const Zp& f, const ModPoly& a, const ModPoly& b, ModPoly& q, ModPoly& r) {
  r = a;
  if (deg(a) < deg(b)) {
    q.clear();
    return;
  }
  q.assign(a.size() - b.size() + 1, 0);
  u64 inv = f.inv(b.back());
  for (int i = deg(a); i >= deg(b); --i) {
    if (!r[i]) continue;
    u64 c = f.mul(r[i], inv);
    q[i - deg(b)] = c;
    for (int j = 0; j <= deg(b); ++j) r[i - deg(b) + j] = f.sub(r[i - deg(b) + j], f.mul(c, b[j]));
  }
  trim(q);
  trim(r);
}

ModPoly rem(const Zp& f, const ModPoly& a, const ModPoly& b) {
  ModPoly q, r;
  divmod(f, a, b, q, r);
  return r;
}

ModPoly quo(const Zp& f, const ModPoly& a, const ModPoly& b) {
  ModPoly q, r;
  divmod(f, a, b, q, r);
  return q;
}

ModPoly monic(const Zp& f, ModPoly a) {
  if (a.empty()) return a;
  u64 inv = f.inv(a.back());
  for (auto& c : a) c = f.mul(c, inv);
  return a;
}

ModPoly gcd(const Zp& f, ModPoly a, ModPoly b) {
  while (!b.empty()) {
    ModPoly r = rem(f, a, b);
    a = std::move(b);
    b = std::move(r);
  }
  return monic(f, std::move(a));
}

// s*a + t*b = gcd(a, b), gcd monic.
ModPoly ext_gcd(const Zp& f, const ModPoly& a, const ModPoly& b, ModPoly& s, ModPoly& t) {
  ModPoly r0 = a, r1 = b, s0{1}, s1, t0, t1{1};
  while (!r1.empty()) {
    ModPoly q, r;
    divmod(f, r0, r1, q, r);
    r0 = std::move(r1);
    r1 = std::move(r);
    ModPoly s2 = sub(f, s0, mul(f, q, s1));
    s0 = std::move(s1);
    s1 = std::move(s2);
    ModPoly t2 = sub(f, t0, mul(f, q, t1));
    t0 = std::move(t1);
    t1 = std::move(t2);
  }
  u64 inv = f.inv(r0.back());
  for (auto& c : s0) c = f.mul(c, inv);
  for (auto& c : t0) c = f.mul(c, inv);
  s = s0;
  t = t0;
  return monic(f, r0);
}

ModPoly powmod(const Zp& f, ModPoly base, const Integer& e, const ModPoly& m) {
  ModPoly r{1};
  base = rem(f, base, m);
  size_t bits = mpz_sizeinbase(e.get_mpz_t(), 2);
  for (size_t i = bits; i-- > 0;) {
    r = rem(f, mul(f, r, r), m);
    if (mpz_tstbit(e.get_mpz_t(), i)) r = rem(f, mul(f, r, base), m);
  }
  return r;
}

ModPoly derivative(const Zp& f, const ModPoly& a) {
  if (a.size() <= 1) return {};
  ModPoly r(a.size() - 1);
  for (size_t i = 1; i < a.size(); ++i) r[i - 1] = f.mul(a[i], i % f.p);
  trim(r);
  return r;
}

ModPoly reduce(const ZPoly& a, u64 p) {
  ModPoly r(a.coeffs().size());
  for (size_t i = 0; i < r.size(); ++i) {
    Integer m = a.coeffs()[i] % static_cast<unsigned long>(p);
    if (m < 0) m += static_cast<unsigned long>(p);
    r[i] = m.get_ui();
  }
  trim(r);
  return r;
}

// Equal-degree splitting (Cantor-Zassenhaus) of a monic product of degree-d factors.
void split_equal_degree(const Zp& f, const ModPoly& g, int d, std::mt19937_64& rng,
                        std::vector<ModPoly>& out) {
  if (deg(g) == d) {
    out.push_back(g);
    return;
  }
  Integer e;
  mpz_ui_pow_ui(e.get_mpz_t(), f.p, d);
  e = (e - 1) / 2;
  std::uniform_int_distribution<u64> coin(0, f.p - 1);
  for (;;) {
    ModPoly a(deg(g));
    for (auto& c : a) c = coin(rng);
    trim(a);
    if (deg(a) < 1) continue;
    ModPoly b = sub(f, powmod(f, a, e, g), ModPoly{1});
    ModPoly h = gcd(f, g, b);
    if (deg(h) > 0 && deg(h) < deg(g)) {
      split_equal_degree(f, h, d, rng, out);
      split_equal_degree(f, quo(f, g, h), d, rng, out);
      return;
    }
  }
}

// Monic irreducible factors of a monic squarefree polynomial mod p.
std::vector<ModPoly> factor_mod(const Zp& f, ModPoly g) {
  std::vector<ModPoly> out;
  std::mt19937_64 rng(0x5eed + f.p);
  ModPoly x{0, 1};
  ModPoly h = x;
  for (int d = 1; 2 * d <= deg(g); ++d) {
    h = powmod(f, h, Integer(static_cast<unsigned long>(f.p)), g);
    ModPoly part = gcd(f, g, sub(f, h, x));
    if (deg(part) > 0) {
      split_equal_degree(f, part, d, rng, out);
      g = quo(f, g, part);
      h = rem(f, h, g);
    }
  }
  if (deg(g) > 0) out.push_back(g);
  return out;
}

using IntPoly = std::vector<Integer>;

IntPoly to_int(const ModPoly& a) {
  IntPoly r;
  r.reserve(a.size());
  for (u64 c : a) r.emplace_back(static_cast<unsigned long>(c));
  return r;
}

IntPoly mul_mod(const IntPoly& a, const IntPoly& b, const Integer& m) {
  if (a.empty() || b.empty()) return {};
  IntPoly r(a.size() + b.size() - 1);
  for (size_t i = 0; i < a.size(); ++i)
    for (size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
  for (auto& c : r) {
    c %= m;
    if (c < 0) c += m;
  }
  return r;
}

// Lifts g*h = target (mod p) with g, h monic to a factorization mod p^k.
void hensel_lift(const IntPoly& target, const ModPoly& g0, const ModPoly& h0, const Zp& f, int k,
                 IntPoly& g_out, IntPoly& h_out) {
  ModPoly s, t;
  ext_gcd(f, g0, h0, s, t);
  IntPoly g = to_int(g0), h = to_int(h0);
  Integer pj = static_cast<unsigned long>(f.p);
  Integer pk;
  mpz_ui_pow_ui(pk.get_mpz_t(), f.p, k);
  for (int j = 1; j < k; ++j) {
    IntPoly gh = mul_mod(g, h, pk);
    ModPoly e(std::max(target.size(), gh.size()), 0);
    for (size_t i = 0; i < e.size(); ++i) {
      Integer d = (i < target.size() ? target[i] : Integer(0)) - (i < gh.size() ? gh[i] : Integer(0));
      d %= pk;
      if (d < 0) d += pk;
      d /= pj;
      d %= static_cast<unsigned long>(f.p);
      e[i] = d.get_ui();
    }
    trim(e);
    ModPoly te = mul(f, t, e);
    ModPoly q, dg;
    divmod(f, te, g0, q, dg);
    ModPoly dh = add(f, mul(f, s, e), mul(f, q, h0));
    for (size_t i = 0; i < dg.size(); ++i) g[i] += pj * static_cast<unsigned long>(dg[i]);
    if (h.size() < dh.size()) h.resize(dh.size());
    for (size_t i = 0; i < dh.size(); ++i) h[i] += pj * static_cast<unsigned long>(dh[i]);
    pj *= static_cast<unsigned long>(f.p);
  }
  g_out = g;
  h_out = h;
}

bool is_prime(u64 n) {
  if (n < 2) return false;
  for (u64 d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

bool divides(const ZPoly& g, const ZPoly& f, ZPoly& quotient) {
  auto [q, r] = divmod(f.to_q(), g.to_q());
  if (!r.is_zero()) return false;
  for (const auto& c : q.coeffs())
    if (c.get_den() != 1) return false;
  std::vector<Integer> qc;
  for (const auto& c : q.coeffs()) qc.push_back(c.get_num());
  quotient = ZPoly(std::move(qc));
  return true;
}

constexpr size_t kMaxRecombinationSubsets = 2'000'000;

}  // namespace

std::vector<ZPoly> factor_squarefree(const ZPoly& f) {
  if (f.degree() < 1) throw DomainError("factor_squarefree: degree must be >= 1");
  if (f.degree() == 1) return {f};

  // Pick, among a few admissible primes, the one with the fewest modular factors.
  u64 best_p = 0;
  std::vector<ModPoly> best;
  int tried = 0;
  for (u64 p = 3; tried < 4 && p < 100000; p += 2) {
    if (!is_prime(p)) continue;
    if (f.leading() % static_cast<unsigned long>(p) == 0) continue;
    Zp zp{p};
    ModPoly fp = reduce(f, p);
    if (deg(gcd(zp, fp, derivative(zp, fp))) != 0) continue;
    auto facs = factor_mod(zp, monic(zp, fp));
    ++tried;
    if (best_p == 0 || facs.size() < best.size()) {
      best_p = p;
      best = std::move(facs);
    }
    if (best.size() == 1) break;
  }
  if (best_p == 0) throw InternalInconsistency("factor_squarefree: no admissible prime");
  if (best.size() == 1) return {f};

  Zp zp{best_p};
  // Coefficients of lc(f) * (any factor) are bounded by |lc| * 2^n * ||f||_2.
  Integer norm2 = 0;
  for (const auto& c : f.coeffs()) norm2 += c * c;
  Integer norm;
  mpz_sqrt(norm.get_mpz_t(), norm2.get_mpz_t());
  norm += 1;
  Integer bound = abs(f.leading()) * norm;
  mpz_mul_2exp(bound.get_mpz_t(), bound.get_mpz_t(), f.degree());
  bound = 2 * bound + 1;
  int k = 1;
  Integer pk = static_cast<unsigned long>(best_p);
  while (pk <= bound) {
    pk *= static_cast<unsigned long>(best_p);
    ++k;
  }

  // Monic target f / lc(f) mod p^k.
  Integer lc_inv;
  mpz_invert(lc_inv.get_mpz_t(), f.leading().get_mpz_t(), pk.get_mpz_t());
  IntPoly current;
  for (const auto& c : f.coeffs()) {
    Integer v = (c * lc_inv) % pk;
    if (v < 0) v += pk;
    current.push_back(v);
  }

  std::vector<IntPoly> lifted;
  for (size_t i = 0; i + 1 < best.size(); ++i) {
    ModPoly rest{1};
    for (size_t j = i + 1; j < best.size(); ++j) rest = mul(zp, rest, best[j]);
    IntPoly g, h;
    hensel_lift(current, best[i], rest, zp, k, g, h);
    lifted.push_back(g);
    current = h;
  }
  lifted.push_back(current);

  std::vector<ZPoly> result;
  ZPoly cur = f;
  size_t s = 1;
  size_t subsets_tried = 0;
  while (2 * s <= lifted.size()) {
    bool found = false;
    std::vector<size_t> idx(s);
    for (size_t i = 0; i < s; ++i) idx[i] = i;
    for (;;) {
      if (++subsets_tried > kMaxRecombinationSubsets)
        throw DegreeTooLarge("factor_squarefree: recombination search too large");
      IntPoly prod{Integer(cur.leading() % pk)};
      for (size_t i : idx) prod = mul_mod(prod, lifted[i], pk);
      Integer half = pk / 2;
      std::vector<Integer> sym;
      for (auto c : prod) {
        if (c > half) c -= pk;
        sym.push_back(c);
      }
      ZPoly cand(sym);
      if (cand.degree() >= 1) {
        ZPoly g = primitive_part(cand.to_q());
        ZPoly q;
        if (divides(g, cur, q)) {
          result.push_back(g);
          cur = q;
          for (size_t i = s; i-- > 0;) lifted.erase(lifted.begin() + idx[i]);
          found = true;
          break;
        }
      }
      // Next combination in lexicographic order.
      size_t i = s;
      while (i > 0 && idx[i - 1] == lifted.size() - s + i - 1) --i;
      if (i == 0) break;
      ++idx[i - 1];
      for (size_t j = i; j < s; ++j) idx[j] = idx[j - 1] + 1;
    }
    if (!found) ++s;
  }
  if (cur.degree() >= 1) result.push_back(primitive_part(cur.to_q()));
  std::sort(result.begin(), result.end());
  return result;
}

}  // namespace discplane
