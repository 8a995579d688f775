#include "discplane/discrete_plane.hpp"

#include <algorithm>
#include <cfloat>
#include <cmath>
#include <deque>
#include <numeric>
#include <sstream>
#include <unordered_map>

#include "discplane/errors.hpp"

namespace discplane {

PointSet::PointSet(std::vector<IVec3> points) : points_(std::move(points)) {
  std::sort(points_.begin(), points_.end());
  points_.erase(std::unique(points_.begin(), points_.end()), points_.end());
}

bool PointSet::contains(const IVec3& x) const {
  return std::binary_search(points_.begin(), points_.end(), x);
}

std::ptrdiff_t PointSet::index_of(const IVec3& x) const {
  auto it = std::lower_bound(points_.begin(), points_.end(), x);
  if (it == points_.end() || *it != x) return -1;
  return it - points_.begin();
}

bool PointSet::is_subset_of(const PointSet& o) const {
  return std::includes(o.points_.begin(), o.points_.end(), points_.begin(), points_.end());
}

std::vector<IVec3> PointSet::missing_from(const PointSet& o) const {
  std::vector<IVec3> r;
  std::set_difference(points_.begin(), points_.end(), o.points_.begin(), o.points_.end(),
                      std::back_inserter(r));
  return r;
}

IVec3 operator+(const IVec3& a, const IVec3& b) { return {a[0] + b[0], a[1] + b[1], a[2] + b[2]}; }
IVec3 operator-(const IVec3& a, const IVec3& b) { return {a[0] - b[0], a[1] - b[1], a[2] - b[2]}; }

std::int64_t norm1(const IVec3& x) { return std::llabs(x[0]) + std::llabs(x[1]) + std::llabs(x[2]); }

std::int64_t norm_inf(const IVec3& x) {
  return std::max({std::llabs(x[0]), std::llabs(x[1]), std::llabs(x[2])});
}

std::string to_string(const IVec3& x) {
  return "(" + std::to_string(x[0]) + "," + std::to_string(x[1]) + "," + std::to_string(x[2]) + ")";
}

bool Window::contains(const IVec3& x) const { return norm_inf(x - anchor) <= radius; }

SlabTest::SlabTest(const Vec3& v, const Scalar& upper) : v_(v), upper_(upper) {
  for (int i = 0; i < 3; ++i) {
    Interval e = v[i].enclose(128);
    lo_[i] = e.lo_double();
    hi_[i] = e.hi_double();
    mag_[i] = std::max(std::fabs(lo_[i]), std::fabs(hi_[i]));
  }
  Interval u = upper.enclose(128);
  upper_lo_ = u.lo_double();
  upper_hi_ = u.hi_double();
}

bool SlabTest::operator()(const IVec3& x) const {
  double lo = 0, hi = 0, scale = 0;
  for (int i = 0; i < 3; ++i) {
    double c = static_cast<double>(x[i]);
    if (c >= 0) {
      lo += c * lo_[i];
      hi += c * hi_[i];
    } else {
      lo += c * hi_[i];
      hi += c * lo_[i];
    }
    scale += std::fabs(c) * mag_[i];
  }
  // Rounding error of the double sums is far below this margin.
  double eps = 16 * DBL_EPSILON * scale + DBL_MIN;
  lo -= eps;
  hi += eps;
  if (hi < 0 || lo >= upper_hi_) return false;
  if (lo >= 0 && hi < upper_lo_) return true;
  Scalar d = v_.dot(x);
  return d.sign() >= 0 && d < upper_;
}

bool contains(const PlaneSpec& spec, const IVec3& x) {
  Scalar d = spec.v.dot(x);
  return d.sign() >= 0 && d < spec.omega;
}

PointSet enumerate(const PlaneSpec& spec, const Window& w, std::uint64_t cap) {
  if (w.radius < 0) throw DomainError("window radius must be nonnegative");
  const std::int64_t r = w.radius;
  const std::uint64_t side = static_cast<std::uint64_t>(2 * r + 1);
  SlabTest test(spec.v, spec.omega);
  // Scan columns along the coordinate with the largest |v_k|; only a short
  // range of that coordinate can satisfy the slab inequality.
  int k = 0;
  double vk = 0;
  for (int i = 0; i < 3; ++i) {
    double d = std::fabs(spec.v[i].enclose(64).lo_double());
    if (d > vk) {
      vk = d;
      k = i;
    }
  }
  const int i1 = (k + 1) % 3, i2 = (k + 2) % 3;
  double vd[3], om = spec.omega.enclose(64).hi_double();
  for (int i = 0; i < 3; ++i) vd[i] = spec.v[i].enclose(64).lo_double();
  double column = vk > 0 ? std::min<double>(side, std::ceil(std::max(om, 0.0) / vk) + 3) : side;
  if (side > 1000000 || static_cast<double>(side) * side * column > static_cast<double>(cap))
    throw WindowTooLarge("window of radius " + std::to_string(r) + " exceeds the cap of " +
                         std::to_string(cap) + " candidate points");
  std::vector<IVec3> pts;
  for (std::int64_t a = -r; a <= r; ++a)
    for (std::int64_t b = -r; b <= r; ++b) {
      IVec3 x{};
      x[i1] = w.anchor[i1] + a;
      x[i2] = w.anchor[i2] + b;
      std::int64_t lo = w.anchor[k] - r, hi = w.anchor[k] + r;
      if (vk > 0) {
        // Approximate solution range of 0 <= s + t*v_k < omega, widened by 2.
        double s = x[i1] * vd[i1] + x[i2] * vd[i2];
        double t0 = -s / vd[k], t1 = (om - s) / vd[k];
        if (t0 > t1) std::swap(t0, t1);
        lo = std::max<std::int64_t>(lo, static_cast<std::int64_t>(std::floor(t0)) - 2);
        hi = std::min<std::int64_t>(hi, static_cast<std::int64_t>(std::ceil(t1)) + 2);
      }
      for (std::int64_t c = lo; c <= hi; ++c) {
        x[k] = c;
        if (test(x)) pts.push_back(x);
      }
    }
  return PointSet(std::move(pts));
}

ConnectivityReport connectivity(const PointSet& points) {
  ConnectivityReport rep;
  const auto& pts = points.points();
  const std::size_t none = static_cast<std::size_t>(-1);
  rep.labels.assign(pts.size(), none);
  std::unordered_map<IVec3, std::size_t, IVec3Hash> index;
  index.reserve(pts.size() * 2);
  for (std::size_t k = 0; k < pts.size(); ++k) index.emplace(pts[k], k);
  static const IVec3 steps[6] = {{1, 0, 0}, {-1, 0, 0}, {0, 1, 0}, {0, -1, 0}, {0, 0, 1}, {0, 0, -1}};
  std::deque<std::size_t> queue;
  for (std::size_t s = 0; s < pts.size(); ++s) {
    if (rep.labels[s] != none) continue;
    std::size_t comp = rep.component_count++;
    rep.sizes.push_back(0);
    rep.representatives.push_back(pts[s]);
    rep.labels[s] = comp;
    queue.push_back(s);
    while (!queue.empty()) {
      std::size_t k = queue.front();
      queue.pop_front();
      ++rep.sizes[comp];
      for (const auto& d : steps) {
        auto it = index.find(pts[k] + d);
        if (it != index.end() && rep.labels[it->second] == none) {
          rep.labels[it->second] = comp;
          queue.push_back(it->second);
        }
      }
    }
  }
  auto o = points.index_of({0, 0, 0});
  if (o >= 0) {
    rep.contains_origin = true;
    rep.origin_component = static_cast<std::ptrdiff_t>(rep.labels[o]);
  }
  return rep;
}

std::string to_string(WindowedConnectivity::Kind k) {
  switch (k) {
    case WindowedConnectivity::ConnectedAtAll:
      return "ConnectedAtAll";
    case WindowedConnectivity::DisconnectedStable:
      return "DisconnectedStable";
    default:
      return "Inconclusive";
  }
}

namespace {

struct CoreView {
  PointSet outer;
  ConnectivityReport rep;
  std::vector<std::size_t> core_labels;  // distinct component ids touching the core
};

CoreView core_view(const PlaneSpec& spec, std::int64_t radius, std::int64_t halo,
                   const IVec3& anchor) {
  CoreView cv;
  cv.outer = enumerate(spec, Window{radius + halo, anchor});
  cv.rep = connectivity(cv.outer);
  Window core{radius, anchor};
  const auto& pts = cv.outer.points();
  for (std::size_t k = 0; k < pts.size(); ++k)
    if (core.contains(pts[k])) cv.core_labels.push_back(cv.rep.labels[k]);
  std::sort(cv.core_labels.begin(), cv.core_labels.end());
  cv.core_labels.erase(std::unique(cv.core_labels.begin(), cv.core_labels.end()),
                       cv.core_labels.end());
  return cv;
}

}  // namespace

WindowedConnectivity is_connected_windowed(const PlaneSpec& spec,
                                           const std::vector<std::int64_t>& radii,
                                           std::int64_t halo, const IVec3& anchor) {
  if (radii.size() < 2) throw DomainError("is_connected_windowed needs at least two radii");
  if (!std::is_sorted(radii.begin(), radii.end()) || radii.front() < 1)
    throw DomainError("radii must be positive and increasing");
  if (spec.omega.sign() <= 0) throw DomainError("thickness must be positive");
  WindowedConnectivity res;
  res.radii = radii;
  std::vector<CoreView> views;
  bool all_one = true;
  for (auto r : radii) {
    views.push_back(core_view(spec, r, halo < 0 ? r : halo, anchor));
    res.core_components.push_back(views.back().core_labels.size());
    if (views.back().core_labels.size() != 1) all_one = false;
  }
  if (all_one) {
    res.kind = WindowedConnectivity::ConnectedAtAll;
    return res;
  }
  const CoreView& first = views.front();
  if (first.core_labels.size() < 2) return res;
  // Smallest core point of each core component at the first radius.
  Window core{radii.front(), anchor};
  std::unordered_map<std::size_t, std::pair<std::size_t, IVec3>> info;  // label -> (core size, min point)
  const auto& pts = first.outer.points();
  for (std::size_t k = 0; k < pts.size(); ++k) {
    if (!core.contains(pts[k])) continue;
    auto [it, fresh] = info.emplace(first.rep.labels[k], std::make_pair(std::size_t{0}, pts[k]));
    ++it->second.first;
    (void)fresh;
  }
  std::vector<std::pair<std::size_t, IVec3>> comps;
  for (auto& [label, p] : info) comps.push_back(p);
  std::sort(comps.begin(), comps.end(), [](const auto& a, const auto& b) {
    if (a.first != b.first) return a.first > b.first;
    return a.second < b.second;
  });
  IVec3 a = comps[0].second, b = comps[1].second;
  if (b < a) std::swap(a, b);
  for (const auto& cv : views) {
    auto ia = cv.outer.index_of(a), ib = cv.outer.index_of(b);
    if (ia < 0 || ib < 0) return res;
    if (cv.rep.labels[ia] == cv.rep.labels[ib]) return res;
  }
  res.kind = WindowedConnectivity::DisconnectedStable;
  res.witness = std::make_pair(a, b);
  return res;
}

std::string to_xyz(const PointSet& points) {
  std::ostringstream os;
  for (const auto& p : points) os << p[0] << ' ' << p[1] << ' ' << p[2] << '\n';
  return os.str();
}

}  // namespace discplane
