#include "discplane/stepped.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <sstream>

#include "discplane/errors.hpp"

namespace discplane {

UnitFace operator+(const IVec3& t, const UnitFace& f) { return {t + f.x, f.type}; }

std::string to_string(const UnitFace& f) {
  return "[" + to_string(f.x) + "," + std::to_string(f.type) + "]";
}

std::array<IVec3, 4> face_corners(const UnitFace& f) {
  int a = f.type == 1 ? 1 : 0;
  int b = f.type == 3 ? 1 : 2;
  IVec3 u{0, 0, 0}, w{0, 0, 0};
  u[a] = 1;
  w[b] = 1;
  return {f.x, f.x + u, f.x + u + w, f.x + w};
}

Pattern::Pattern(std::initializer_list<UnitFace> faces) : Pattern(std::vector<UnitFace>(faces)) {}

Pattern::Pattern(std::vector<UnitFace> faces) : faces_(std::move(faces)) {
  for (const auto& f : faces_)
    if (f.type < 1 || f.type > 3) throw DomainError("face type must be 1, 2 or 3");
  std::sort(faces_.begin(), faces_.end());
  faces_.erase(std::unique(faces_.begin(), faces_.end()), faces_.end());
}

bool Pattern::contains(const UnitFace& f) const {
  return std::binary_search(faces_.begin(), faces_.end(), f);
}

bool Pattern::contains_all(const Pattern& o) const {
  return std::includes(faces_.begin(), faces_.end(), o.faces_.begin(), o.faces_.end());
}

Pattern Pattern::translated(const IVec3& t) const {
  Pattern r;
  r.faces_.reserve(faces_.size());
  for (const auto& f : faces_) r.faces_.push_back(t + f);  // order is preserved
  return r;
}

Pattern Pattern::united(const Pattern& o) const {
  Pattern r;
  std::set_union(faces_.begin(), faces_.end(), o.faces_.begin(), o.faces_.end(),
                 std::back_inserter(r.faces_));
  return r;
}

Pattern Pattern::minus(const Pattern& o) const {
  Pattern r;
  std::set_difference(faces_.begin(), faces_.end(), o.faces_.begin(), o.faces_.end(),
                      std::back_inserter(r.faces_));
  return r;
}

Pattern Pattern::intersected(const Pattern& o) const {
  Pattern r;
  std::set_intersection(faces_.begin(), faces_.end(), o.faces_.begin(), o.faces_.end(),
                        std::back_inserter(r.faces_));
  return r;
}

bool Pattern::disjoint_from(const Pattern& o) const { return intersected(o).empty(); }

std::string to_string(const Pattern& p) {
  std::string s = "{";
  for (const auto& f : p) {
    if (s.size() > 1) s += ", ";
    s += to_string(f);
  }
  return s + "}";
}

Pattern unit_corner() { return Pattern{{{0, 0, 0}, 1}, {{0, 0, 0}, 2}, {{0, 0, 0}, 3}}; }

Substitution Substitution::parse(const std::string& a, const std::string& b, const std::string& c) {
  Substitution s;
  s.images = {parse_word(a), parse_word(b), parse_word(c)};
  for (const auto& w : s.images)
    if (w.empty()) throw ParseError("substitution images must be nonempty");
  return s;
}

Substitution Substitution::identity() { return parse("1", "2", "3"); }

std::string Substitution::to_string() const {
  return "1->" + word_string(images[0]) + ", 2->" + word_string(images[1]) + ", 3->" +
         word_string(images[2]);
}

const Substitution& fs_substitution(int i) {
  static const Substitution s[3] = {Substitution::parse("1", "21", "31"),
                                    Substitution::parse("2", "12", "32"),
                                    Substitution::parse("3", "13", "23")};
  if (i < 1 || i > 3) throw DomainError("digit must be 1, 2 or 3");
  return s[i - 1];
}

IMat3 incidence_matrix(const Substitution& s, bool require_unimodular) {
  IMat3 m{};
  for (int j = 0; j < 3; ++j)
    for (int letter : s.images[j]) ++m[letter - 1][j];
  if (require_unimodular) {
    auto d = determinant(m);
    if (d != 1 && d != -1)
      throw NotUnimodular("substitution " + s.to_string() + " has incidence determinant " +
                          std::to_string(d));
  }
  return m;
}

Substitution compose(const Substitution& s, const Substitution& t) {
  Substitution r;
  for (int j = 0; j < 3; ++j)
    for (int letter : t.images[j])
      r.images[j].insert(r.images[j].end(), s.images[letter - 1].begin(), s.images[letter - 1].end());
  return r;
}

DualSubstitution::DualSubstitution(const Substitution& s)
    : m_(incidence_matrix(s)), inv_(unimodular_inverse(m_)) {
  for (int j = 0; j < 3; ++j) {
    const auto& w = s.images[j];
    IVec3 parikh{0, 0, 0};
    for (std::size_t k = w.size(); k-- > 0;) {
      // parikh holds the letter counts of the suffix after position k.
      rules_[w[k] - 1].push_back({inv_ * parikh, j + 1});
      ++parikh[w[k] - 1];
    }
  }
}

void DualSubstitution::apply_face(const UnitFace& f, std::vector<UnitFace>& out) const {
  IVec3 base = inv_ * f.x;
  for (const auto& r : rules_[f.type - 1]) out.push_back({base + r.offset, r.type});
}

Pattern DualSubstitution::apply(const Pattern& p) const {
  std::vector<UnitFace> out;
  out.reserve(p.size() * 3);
  for (const auto& f : p) apply_face(f, out);
  return Pattern(std::move(out));
}

Pattern DualSubstitution::preimage(const UnitFace& f) const {
  std::vector<UnitFace> out;
  for (int t = 0; t < 3; ++t)
    for (const auto& r : rules_[t])
      if (r.type == f.type) out.push_back({m_ * (f.x - r.offset), t + 1});
  return Pattern(std::move(out));
}

Pattern dual_apply(const Substitution& s, const Pattern& p) { return DualSubstitution(s).apply(p); }

namespace {

const DualSubstitution& fs_dual(int i) {
  static const DualSubstitution d[3] = {DualSubstitution(fs_substitution(1)),
                                        DualSubstitution(fs_substitution(2)),
                                        DualSubstitution(fs_substitution(3))};
  if (i < 1 || i > 3) throw DomainError("digit must be 1, 2 or 3");
  return d[i - 1];
}

}  // namespace

Pattern sigma_fs(int i, const Pattern& p) { return fs_dual(i).apply(p); }

Pattern dual_preimage(int i, const UnitFace& f) { return fs_dual(i).preimage(f); }

Pattern sigma_word(const std::vector<int>& word, const Pattern& p) {
  Pattern r = p;
  for (std::size_t k = word.size(); k-- > 0;) r = sigma_fs(word[k], r);
  return r;
}

Pattern generate_pn(const std::vector<int>& word) { return sigma_word(word, unit_corner()); }

Pattern generate_pn(const Vec3& v, std::size_t n, std::size_t budget) {
  Expansion e = expand(v, std::max(budget, n));
  return generate_pn(e.word(n));
}

IMat3 dual_linear_part(const std::vector<int>& word) {
  return unimodular_inverse(transpose(fs_product(word)));
}

PnBuilder::PnBuilder(std::vector<int> word)
    : word_(std::move(word)),
      prefix_(identity_matrix()),
      images_{Pattern{{{0, 0, 0}, 1}}, Pattern{{{0, 0, 0}, 2}}, Pattern{{{0, 0, 0}, 3}}},
      current_(unit_corner()) {}

bool PnBuilder::advance() {
  if (level_ >= word_.size()) return false;
  int d = word_[level_];
  IMat3 lin = unimodular_inverse(transpose(prefix_));
  std::array<Pattern, 3> next;
  for (int j = 1; j <= 3; ++j) {
    std::vector<UnitFace> faces;
    for (const auto& g : sigma_fs(d, Pattern{{{0, 0, 0}, j}})) {
      IVec3 shift = lin * g.x;
      for (const auto& f : images_[g.type - 1]) faces.push_back(shift + f);
    }
    next[j - 1] = Pattern(std::move(faces));
  }
  images_ = std::move(next);
  prefix_ = prefix_ * fs_matrix(d);
  current_ = images_[0].united(images_[1]).united(images_[2]);
  ++level_;
  return true;
}

std::vector<Pattern> generate_pn_levels(const std::vector<int>& word) {
  PnBuilder b(word);
  std::vector<Pattern> levels{b.current()};
  while (b.advance()) levels.push_back(b.current());
  return levels;
}

PointSet distinguished_vertices(const Pattern& p) {
  std::vector<IVec3> pts;
  pts.reserve(p.size());
  for (const auto& f : p) pts.push_back(f.x);
  return PointSet(std::move(pts));
}

bool face_in_plane(const Vec3& v, const UnitFace& f) {
  Scalar d = v.dot(f.x);
  return d.sign() >= 0 && d < v[f.type - 1];
}

Pattern stepped_faces(const Vec3& v, const Window& w) {
  std::vector<UnitFace> faces;
  for (int i = 1; i <= 3; ++i) {
    if (v[i - 1].sign() <= 0) continue;
    for (const auto& x : enumerate(PlaneSpec{v, v[i - 1]}, w)) faces.push_back({x, i});
  }
  return Pattern(std::move(faces));
}

Pattern stepped_faces(const IVec3& v, const Window& w) {
  int k = 0;
  for (int i = 1; i < 3; ++i)
    if (std::llabs(v[i]) > std::llabs(v[k])) k = i;
  if (v[k] == 0) throw ZeroVector("stepped plane of the zero vector");
  const int i1 = (k + 1) % 3, i2 = (k + 2) % 3;
  const std::int64_t r = w.radius;
  auto floor_div = [](std::int64_t a, std::int64_t b) {
    std::int64_t q = a / b;
    if ((a % b != 0) && ((a < 0) != (b < 0))) --q;
    return q;
  };
  std::vector<UnitFace> faces;
  for (int i = 1; i <= 3; ++i) {
    std::int64_t upper = v[i - 1];
    if (upper <= 0) continue;
    for (std::int64_t a = -r; a <= r; ++a)
      for (std::int64_t b = -r; b <= r; ++b) {
        IVec3 x{};
        x[i1] = w.anchor[i1] + a;
        x[i2] = w.anchor[i2] + b;
        std::int64_t s = x[i1] * v[i1] + x[i2] * v[i2];
        // 0 <= s + t*v_k < upper, solved for t up to one unit, then filtered exactly.
        std::int64_t t0 = floor_div(-s, v[k]) - 1, t1 = floor_div(upper - s, v[k]) + 1;
        if (t0 > t1) std::swap(t0, t1);
        t0 = std::max(t0, w.anchor[k] - r);
        t1 = std::min(t1, w.anchor[k] + r);
        for (std::int64_t t = t0; t <= t1; ++t) {
          std::int64_t d = s + t * v[k];
          if (d >= 0 && d < upper) {
            x[k] = t;
            faces.push_back({x, i});
          }
        }
      }
  }
  return Pattern(std::move(faces));
}

bool faces_touch(const UnitFace& a, const UnitFace& b) {
  if (norm_inf(a.x - b.x) > 1) return false;
  auto ca = face_corners(a), cb = face_corners(b);
  for (const auto& p : ca)
    for (const auto& q : cb)
      if (p == q) return true;
  return false;
}

bool faces_share_edge(const UnitFace& a, const UnitFace& b) {
  if (a == b || norm_inf(a.x - b.x) > 1) return false;
  auto ca = face_corners(a), cb = face_corners(b);
  int shared = 0;
  for (const auto& p : ca)
    for (const auto& q : cb)
      if (p == q) ++shared;
  return shared >= 2;
}

std::string to_off(const Pattern& p) {
  std::map<IVec3, std::size_t> index;
  std::vector<IVec3> verts;
  std::vector<std::array<std::size_t, 4>> quads;
  for (const auto& f : p) {
    std::array<std::size_t, 4> q{};
    auto cs = face_corners(f);
    for (int k = 0; k < 4; ++k) {
      auto [it, fresh] = index.emplace(cs[k], verts.size());
      if (fresh) verts.push_back(cs[k]);
      q[k] = it->second;
    }
    quads.push_back(q);
  }
  std::ostringstream os;
  os << "OFF\n" << verts.size() << ' ' << quads.size() << " 0\n";
  for (const auto& v : verts) os << v[0] << ' ' << v[1] << ' ' << v[2] << '\n';
  for (const auto& q : quads) os << "4 " << q[0] << ' ' << q[1] << ' ' << q[2] << ' ' << q[3] << '\n';
  return os.str();
}

}  // namespace discplane
