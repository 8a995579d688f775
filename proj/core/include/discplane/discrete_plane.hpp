#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "discplane/scalar.hpp"

namespace discplane {

// Finite set of integer points, kept sorted lexicographically and duplicate free.
class PointSet {
 public:
  PointSet() = default;
  explicit PointSet(std::vector<IVec3> points);

  const std::vector<IVec3>& points() const { return points_; }
  std::size_t size() const { return points_.size(); }
  bool empty() const { return points_.empty(); }
  bool contains(const IVec3& x) const;
  // Index of x in points(), or -1.
  std::ptrdiff_t index_of(const IVec3& x) const;
  bool is_subset_of(const PointSet& o) const;
  std::vector<IVec3> missing_from(const PointSet& o) const;  // points of *this not in o

  auto begin() const { return points_.begin(); }
  auto end() const { return points_.end(); }
  bool operator==(const PointSet& o) const { return points_ == o.points_; }

 private:
  std::vector<IVec3> points_;
};

struct IVec3Hash {
  std::size_t operator()(const IVec3& x) const noexcept {
    std::uint64_t h = 0x9e3779b97f4a7c15ULL;
    for (auto c : x) {
      h ^= static_cast<std::uint64_t>(c) + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
    }
    return static_cast<std::size_t>(h);
  }
};

IVec3 operator+(const IVec3& a, const IVec3& b);
IVec3 operator-(const IVec3& a, const IVec3& b);
std::int64_t norm1(const IVec3& x);
std::int64_t norm_inf(const IVec3& x);
std::string to_string(const IVec3& x);

// P(v, omega) = { x in Z^3 : 0 <= <x,v> < omega }.
struct PlaneSpec {
  Vec3 v;
  Scalar omega;
};

// Box anchor + [-radius, radius]^3.
struct Window {
  std::int64_t radius = 1;
  IVec3 anchor{0, 0, 0};
  bool contains(const IVec3& x) const;
};

// Decides 0 <= <x,v> < upper. A double-precision enclosure with a rigorous
// error margin settles most points; the rest are decided exactly.
class SlabTest {
 public:
  SlabTest(const Vec3& v, const Scalar& upper);
  bool operator()(const IVec3& x) const;

 private:
  Vec3 v_;
  Scalar upper_;
  double lo_[3], hi_[3], mag_[3];
  double upper_lo_, upper_hi_;
};

bool contains(const PlaneSpec& spec, const IVec3& x);

inline constexpr std::uint64_t kDefaultEnumerationCap = 100000000;

// Points of the plane inside the window, in lexicographic order. Throws
// WindowTooLarge when the box has more than cap candidate points.
PointSet enumerate(const PlaneSpec& spec, const Window& w,
                   std::uint64_t cap = kDefaultEnumerationCap);

struct ConnectivityReport {
  std::size_t component_count = 0;
  std::vector<std::size_t> sizes;        // per component
  std::vector<IVec3> representatives;    // lexicographically smallest point per component
  std::vector<std::size_t> labels;       // component of points()[k]
  bool contains_origin = false;
  std::ptrdiff_t origin_component = -1;
  bool connected() const { return component_count == 1; }
};

// Components under 6-adjacency (l1 distance 1). Components are numbered in
// order of their smallest point.
ConnectivityReport connectivity(const PointSet& points);

struct WindowedConnectivity {
  enum Kind { ConnectedAtAll, DisconnectedStable, Inconclusive };
  Kind kind = Inconclusive;
  std::optional<std::pair<IVec3, IVec3>> witness;  // DisconnectedStable
  std::vector<std::int64_t> radii;
  std::vector<std::size_t> core_components;        // per radius
};

std::string to_string(WindowedConnectivity::Kind k);

// Semi-decision on growing windows. For each radius R, components are computed
// on the box of radius R + halo and only the partition they induce on the
// points of the radius-R box is inspected, so that core points are not cut off
// by the truncation. halo < 0 means halo = R. ConnectedAtAll if every core is
// one component; DisconnectedStable if the smallest points of the two largest
// core components at the first radius stay separated at every radius.
WindowedConnectivity is_connected_windowed(const PlaneSpec& spec,
                                           const std::vector<std::int64_t>& radii,
                                           std::int64_t halo = -1, const IVec3& anchor = {0, 0, 0});

// One "x y z" line per point.
std::string to_xyz(const PointSet& points);

}  // namespace discplane
