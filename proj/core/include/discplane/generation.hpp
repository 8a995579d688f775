#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "discplane/discrete_plane.hpp"
#include "discplane/fs_algorithm.hpp"
#include "discplane/stepped.hpp"

namespace discplane {

// First n digits of the F-orbit of v with iterates v^(0) ... v^(n). Unlike
// expand(), periodic vectors are iterated for real so the iterates are exact.
// Throws ExpansionTooShort when the expansion halts before n digits.
struct FsOrbit {
  std::vector<int> digits;
  std::vector<Vec3> iterates;
};
FsOrbit fs_orbit(const Vec3& v, std::size_t n);

// T_0 = {0}, T_{k+1} = T_k u (T_k + t_k) with t_k the first column of the
// inverse transpose of M_{i_1} ... M_{i_k} (so t_0 = e1).
struct TnSequence {
  std::vector<int> word;
  std::vector<PointSet> levels;      // T_0 ... T_n
  std::vector<IVec3> translations;   // t_0 ... t_{n-1}
  std::size_t n() const { return word.size(); }
};

TnSequence generate_tn(const std::vector<int>& word);
TnSequence generate_tn(const Vec3& v, std::size_t n);

struct PropertyCheck {
  bool ok = true;
  std::string detail;
  std::optional<IVec3> witness;
};

// For every x in T_n: 0 <= <x,v> < sum_{i<=n} v1^(i), and that sum is at most
// Omega(v) = |v|_1/2. Requires a periodic (InF3) certificate for v.
PropertyCheck check_tn_in_critical_plane(const Vec3& v, std::size_t n);
PropertyCheck check_tn_in_critical_plane(const Vec3& v, const TnSequence& seq);

ConnectivityReport check_tn_connected(const Vec3& v, std::size_t n);

// Distinguished vertices of P_n lie in T_n.
PropertyCheck check_pn_in_tn(const Vec3& v, std::size_t n);

// <t_k, v> = v1^(k) for every k < n.
PropertyCheck check_translation_heights(const Vec3& v, const TnSequence& seq);

// For k >= 1 the point of T_k with largest <x,v> is adjacent to T_{k-1}:
// x - e_j lies in T_{k-1} for some j.
PropertyCheck check_adjacency_ladder(const Vec3& v, const TnSequence& seq);

struct FillResult {
  bool filled = false;
  std::size_t n = 0;
  std::vector<IVec3> missing;  // naive-plane points of the window not yet reached
};

// Compares the distinguished vertices of P_n with the naive plane P(v,|v|_inf)
// on the window of radius R. Vertices outside the naive plane raise
// InternalInconsistency. Requires an InF3 certificate.
FillResult check_pn_fills_naive(const Vec3& v, std::size_t n, std::int64_t radius);

// Smallest n <= max_n at which check_pn_fills_naive reports Filled; the last
// attempt is returned otherwise.
FillResult grow_until_filled(const Vec3& v, std::int64_t radius, std::size_t max_n = 30);

}  // namespace discplane
