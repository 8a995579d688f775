#include "discplane/generation.hpp"

#include <algorithm>

#include "discplane/errors.hpp"

namespace discplane {

FsOrbit fs_orbit(const Vec3& v, std::size_t n) {
  FsOrbit o;
  o.iterates.push_back(v);
  for (std::size_t k = 0; k < n; ++k) {
    const Vec3& cur = o.iterates.back();
    if (cur[0] + cur[1] <= cur[2])
      throw ExpansionTooShort("expansion of " + v.to_string() + " halts after " +
                              std::to_string(k) + " digits, " + std::to_string(n) + " requested");
    FsStep s = fs_step(cur);
    o.digits.push_back(s.digit);
    o.iterates.push_back(std::move(s.next));
  }
  return o;
}

TnSequence generate_tn(const std::vector<int>& word) {
  TnSequence seq;
  seq.word = word;
  std::vector<IVec3> pts{{0, 0, 0}};
  seq.levels.emplace_back(pts);
  IMat3 prefix = identity_matrix();
  for (int d : word) {
    IMat3 lin = unimodular_inverse(transpose(prefix));
    IVec3 t{lin[0][0], lin[1][0], lin[2][0]};
    seq.translations.push_back(t);
    std::size_t m = pts.size();
    for (std::size_t k = 0; k < m; ++k) pts.push_back(pts[k] + t);
    seq.levels.emplace_back(pts);
    prefix = prefix * fs_matrix(d);
  }
  return seq;
}

TnSequence generate_tn(const Vec3& v, std::size_t n) { return generate_tn(fs_orbit(v, n).digits); }

namespace {

void require_in_f3(const Vec3& v) {
  F3Verdict f = classify_f3(v);
  if (f.kind != F3Verdict::InF3)
    throw PreconditionFailed("property checks need a vector certified in F3; " + v.to_string() +
                             (f.kind == F3Verdict::NotInF3 ? " halts at step " + std::to_string(f.step)
                                                           : " was not classified"));
}

}  // namespace

PropertyCheck check_tn_in_critical_plane(const Vec3& v, const TnSequence& seq) {
  require_in_f3(v);
  std::size_t n = seq.n();
  FsOrbit o = fs_orbit(v, n);
  if (o.digits != seq.word) throw PreconditionFailed("T_n was generated from a different word");
  Scalar bound(0);
  for (std::size_t i = 0; i <= n; ++i) bound += o.iterates[i][0];
  Scalar omega = connecting_thickness(v).omega;
  PropertyCheck r;
  if (bound > omega) {
    r.ok = false;
    r.detail = "partial sum " + bound.decimal(20) + " exceeds Omega " + omega.decimal(20);
    return r;
  }
  for (const auto& x : seq.levels.back()) {
    Scalar h = v.dot(x);
    if (h.sign() < 0 || !(h < bound)) {
      r.ok = false;
      r.witness = x;
      r.detail = "point " + to_string(x) + " has height " + h.decimal(20) + " outside [0, " +
                 bound.decimal(20) + ")";
      return r;
    }
  }
  return r;
}

PropertyCheck check_tn_in_critical_plane(const Vec3& v, std::size_t n) {
  require_in_f3(v);
  return check_tn_in_critical_plane(v, generate_tn(v, n));
}

ConnectivityReport check_tn_connected(const Vec3& v, std::size_t n) {
  require_in_f3(v);
  return connectivity(generate_tn(v, n).levels.back());
}

PropertyCheck check_pn_in_tn(const Vec3& v, std::size_t n) {
  require_in_f3(v);
  FsOrbit o = fs_orbit(v, n);
  PointSet pv = distinguished_vertices(generate_pn(o.digits));
  PointSet tn = generate_tn(o.digits).levels.back();
  PropertyCheck r;
  auto miss = pv.missing_from(tn);
  if (!miss.empty()) {
    r.ok = false;
    r.witness = miss.front();
    r.detail = std::to_string(miss.size()) + " vertices of P_n are not in T_n, first " +
               to_string(miss.front());
  }
  return r;
}

PropertyCheck check_translation_heights(const Vec3& v, const TnSequence& seq) {
  FsOrbit o = fs_orbit(v, seq.n());
  PropertyCheck r;
  for (std::size_t k = 0; k < seq.n(); ++k) {
    if (v.dot(seq.translations[k]) != o.iterates[k][0]) {
      r.ok = false;
      r.witness = seq.translations[k];
      r.detail = "<t_" + std::to_string(k) + ", v> differs from v1^(" + std::to_string(k) + ")";
      return r;
    }
  }
  return r;
}

PropertyCheck check_adjacency_ladder(const Vec3& v, const TnSequence& seq) {
  static const IVec3 e[3] = {{1, 0, 0}, {0, 1, 0}, {0, 0, 1}};
  PropertyCheck r;
  for (std::size_t k = 1; k <= seq.n(); ++k) {
    const PointSet& level = seq.levels[k];
    IVec3 top = level.points().front();
    Scalar best = v.dot(top);
    for (const auto& x : level) {
      Scalar h = v.dot(x);
      if (h > best) {
        best = h;
        top = x;
      }
    }
    bool adjacent = false;
    for (const auto& d : e) adjacent = adjacent || seq.levels[k - 1].contains(top - d);
    if (!adjacent) {
      r.ok = false;
      r.witness = top;
      r.detail = "top point " + to_string(top) + " of T_" + std::to_string(k) +
                 " has no neighbour x - e_j in T_" + std::to_string(k - 1);
      return r;
    }
  }
  return r;
}

namespace {

FillResult compare_with_naive(const Vec3& v, const Pattern& pn, std::size_t n,
                              const PointSet& naive_window, const SlabTest& naive) {
  PointSet verts = distinguished_vertices(pn);
  for (const auto& x : verts)
    if (!naive(x))
      throw InternalInconsistency("vertex " + to_string(x) + " of P_" + std::to_string(n) +
                                  " lies outside the naive plane of " + v.to_string());
  FillResult r;
  r.n = n;
  r.missing = naive_window.missing_from(verts);
  r.filled = r.missing.empty();
  return r;
}

}  // namespace

FillResult check_pn_fills_naive(const Vec3& v, std::size_t n, std::int64_t radius) {
  require_in_f3(v);
  Scalar top = v.norm_inf();
  SlabTest naive(v, top);
  PointSet window = enumerate(PlaneSpec{v, top}, Window{radius});
  return compare_with_naive(v, generate_pn(fs_orbit(v, n).digits), n, window, naive);
}

FillResult grow_until_filled(const Vec3& v, std::int64_t radius, std::size_t max_n) {
  require_in_f3(v);
  Scalar top = v.norm_inf();
  SlabTest naive(v, top);
  PointSet window = enumerate(PlaneSpec{v, top}, Window{radius});
  PnBuilder b(fs_orbit(v, max_n).digits);
  for (;;) {
    FillResult r = compare_with_naive(v, b.current(), b.level(), window, naive);
    if (r.filled || !b.advance()) return r;
  }
}

}  // namespace discplane
