#pragma once

#include <array>
#include <cstddef>
#include <string>
#include <vector>

#include "discplane/discrete_plane.hpp"
#include "discplane/fs_algorithm.hpp"

namespace discplane {

// Unit face [x,i]: the unit square at x spanned by the two basis vectors other than e_i.
struct UnitFace {
  IVec3 x{0, 0, 0};
  int type = 1;

  bool operator==(const UnitFace& o) const { return type == o.type && x == o.x; }
  bool operator!=(const UnitFace& o) const { return !(*this == o); }
  // Ordered by (type, x).
  bool operator<(const UnitFace& o) const { return type != o.type ? type < o.type : x < o.x; }
};

UnitFace operator+(const IVec3& t, const UnitFace& f);
std::string to_string(const UnitFace& f);
// The four corners of the closed square.
std::array<IVec3, 4> face_corners(const UnitFace& f);

struct UnitFaceHash {
  std::size_t operator()(const UnitFace& f) const noexcept {
    return IVec3Hash{}(f.x) * 31 + static_cast<std::size_t>(f.type);
  }
};

// Finite set of unit faces in canonical (type, x) order, duplicate free.
class Pattern {
 public:
  Pattern() = default;
  Pattern(std::initializer_list<UnitFace> faces);
  explicit Pattern(std::vector<UnitFace> faces);

  const std::vector<UnitFace>& faces() const { return faces_; }
  std::size_t size() const { return faces_.size(); }
  bool empty() const { return faces_.empty(); }
  bool contains(const UnitFace& f) const;
  bool contains_all(const Pattern& o) const;

  Pattern translated(const IVec3& t) const;
  Pattern united(const Pattern& o) const;
  Pattern minus(const Pattern& o) const;
  Pattern intersected(const Pattern& o) const;
  bool disjoint_from(const Pattern& o) const;

  auto begin() const { return faces_.begin(); }
  auto end() const { return faces_.end(); }
  bool operator==(const Pattern& o) const { return faces_ == o.faces_; }
  bool operator!=(const Pattern& o) const { return faces_ != o.faces_; }

 private:
  std::vector<UnitFace> faces_;
};

std::string to_string(const Pattern& p);

// The three faces of the lower unit cube corner at the origin: [0,1] u [0,2] u [0,3].
Pattern unit_corner();

// Morphism of the free monoid on {1,2,3}; images[j-1] = sigma(j).
struct Substitution {
  std::array<std::vector<int>, 3> images;

  static Substitution parse(const std::string& a, const std::string& b, const std::string& c);
  static Substitution identity();
  std::string to_string() const;
};

// sigma_i of the fully subtractive algorithm: 1->1, 2->21, 3->31 for i = 1,
// 1->2, 2->12, 3->32 for i = 2, 1->3, 2->13, 3->23 for i = 3.
const Substitution& fs_substitution(int i);

// m[i][j] = occurrences of letter i+1 in sigma(j+1). Throws NotUnimodular when
// require_unimodular and |det| != 1.
IMat3 incidence_matrix(const Substitution& s, bool require_unimodular = true);

// Composition (s o t)(j) = s(t(j)).
Substitution compose(const Substitution& s, const Substitution& t);

// Face rules of a dual substitution: E1*(s)([x,i]) = M^-1 x + union of [M^-1 l(suffix), j]
// over the occurrences sigma(j) = prefix . i . suffix.
class DualSubstitution {
 public:
  explicit DualSubstitution(const Substitution& s);

  const IMat3& inverse_matrix() const { return inv_; }
  const IMat3& matrix() const { return m_; }

  void apply_face(const UnitFace& f, std::vector<UnitFace>& out) const;
  Pattern apply(const Pattern& p) const;
  // All g with f in apply({g}).
  Pattern preimage(const UnitFace& f) const;

 private:
  struct Rule {
    IVec3 offset;
    int type;
  };
  IMat3 m_, inv_;
  std::array<std::vector<Rule>, 3> rules_;
};

Pattern dual_apply(const Substitution& s, const Pattern& p);
// Sigma_i = E1*(sigma_i) with precomputed rules.
Pattern sigma_fs(int i, const Pattern& p);
Pattern dual_preimage(int i, const UnitFace& f);
// Sigma_{w[0]} o ... o Sigma_{w[n-1]} applied to p (the last letter acts first).
Pattern sigma_word(const std::vector<int>& word, const Pattern& p);

// P_n = Sigma_{i_1} ... Sigma_{i_n}(U) for the first n digits of the expansion of v.
// Throws ExpansionTooShort when the expansion halts before n digits.
Pattern generate_pn(const Vec3& v, std::size_t n, std::size_t budget = kDefaultBudget);
Pattern generate_pn(const std::vector<int>& word);

// P_0 ... P_n for a digit word, built level by level from the images of the
// three origin faces: with A_n^j = Phi_n([0,j]) and L_n the linear part of Phi_n,
// A_{n+1}^j = union over [y,k] in Sigma_{i_{n+1}}([0,j]) of L_n y + A_n^k.
std::vector<Pattern> generate_pn_levels(const std::vector<int>& word);

// The same construction one level at a time.
class PnBuilder {
 public:
  explicit PnBuilder(std::vector<int> word);
  std::size_t level() const { return level_; }
  const Pattern& current() const { return current_; }
  // Moves to the next level; false once the word is exhausted.
  bool advance();

 private:
  std::vector<int> word_;
  std::size_t level_ = 0;
  IMat3 prefix_;
  std::array<Pattern, 3> images_;
  Pattern current_;
};

// Transpose of M_{i_1} ... M_{i_n}, inverted; the linear part of the composed dual map.
IMat3 dual_linear_part(const std::vector<int>& word);

PointSet distinguished_vertices(const Pattern& p);

// 0 <= <x,v> < v_i.
bool face_in_plane(const Vec3& v, const UnitFace& f);

// All faces of the stepped plane of v whose distinguished vertex lies in the window.
Pattern stepped_faces(const Vec3& v, const Window& w);
// Same for an integer normal vector.
Pattern stepped_faces(const IVec3& v, const Window& w);

// Closed squares intersect (share at least a vertex).
bool faces_touch(const UnitFace& a, const UnitFace& b);
// Closed squares share a full edge.
bool faces_share_edge(const UnitFace& a, const UnitFace& b);

// OFF mesh with one quad per face.
std::string to_off(const Pattern& p);

}  // namespace discplane
