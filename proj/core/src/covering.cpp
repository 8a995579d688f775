#include "discplane/covering.hpp"

#include <algorithm>
#include <deque>
#include <numeric>
#include <set>
#include <unordered_map>
#include <unordered_set>

#include "discplane/errors.hpp"

namespace discplane {

namespace {

struct DisjointSets {
  std::vector<std::size_t> parent;
  explicit DisjointSets(std::size_t n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }
  std::size_t find(std::size_t x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  }
  void unite(std::size_t a, std::size_t b) { parent[find(a)] = find(b); }
};

std::ptrdiff_t face_index(const Pattern& p, const UnitFace& f) {
  const auto& v = p.faces();
  auto it = std::lower_bound(v.begin(), v.end(), f);
  if (it == v.end() || *it != f) return -1;
  return it - v.begin();
}

UnitFace F(std::int64_t x, std::int64_t y, std::int64_t z, int t) { return {{x, y, z}, t}; }

}  // namespace

Pattern normalize_translation(const Pattern& p) {
  if (p.empty()) return p;
  IVec3 m = p.faces().front().x;
  return p.translated({-m[0], -m[1], -m[2]});
}

bool realizable_in_positive_plane(const Pattern& p) {
  // Some v > 0 and height h with 0 <= h + <x,v> < v_i for every face [x,i].
  // The condition is open in v, so it suffices to sample integer normals.
  const std::int64_t n = 12;
  for (std::int64_t a = 1; a <= n; ++a)
    for (std::int64_t b = 1; b <= n; ++b)
      for (std::int64_t c = 1; c <= n; ++c) {
        IVec3 v{a, b, c};
        std::int64_t lo = INT64_MIN, hi = INT64_MAX;
        for (const auto& f : p) {
          std::int64_t d = f.x[0] * a + f.x[1] * b + f.x[2] * c;
          lo = std::max(lo, -d);
          hi = std::min(hi, v[f.type - 1] - d);
        }
        if (lo < hi) return true;
      }
  return false;
}

std::vector<Pattern> all_edge_pairs() {
  std::vector<Pattern> out;
  for (int i = 1; i <= 3; ++i)
    for (int j = 1; j <= 3; ++j)
      for (std::int64_t a = -1; a <= 1; ++a)
        for (std::int64_t b = -1; b <= 1; ++b)
          for (std::int64_t c = -1; c <= 1; ++c) {
            UnitFace e{{0, 0, 0}, i}, f{{a, b, c}, j};
            if (!faces_share_edge(e, f)) continue;
            Pattern q = normalize_translation(Pattern{e, f});
            if (std::find(out.begin(), out.end(), q) == out.end()) out.push_back(q);
          }
  std::sort(out.begin(), out.end(), [](const Pattern& x, const Pattern& y) { return x.faces() < y.faces(); });
  return out;
}

const TemplateSet& l_edge() {
  static const TemplateSet s = [] {
    TemplateSet t{"L_edge", {}};
    for (auto& q : all_edge_pairs())
      if (realizable_in_positive_plane(q)) t.patterns.push_back(q);
    if (t.patterns.size() != 12)
      throw InternalInconsistency("expected 12 realizable edge-connected pairs, found " +
                                  std::to_string(t.patterns.size()));
    return t;
  }();
  return s;
}

const TemplateSet& l_fs() {
  static const TemplateSet s{
      "L_FS",
      {
          normalize_translation(Pattern{F(0, 0, 0, 2), F(0, 0, 0, 1)}),
          normalize_translation(Pattern{F(0, 0, 0, 1), F(-1, 1, 0, 2)}),
          normalize_translation(Pattern{F(0, 0, 0, 1), F(0, 0, 0, 3)}),
          normalize_translation(Pattern{F(0, 0, 0, 1), F(-1, 0, 1, 3)}),
          normalize_translation(Pattern{F(0, 0, 0, 2), F(0, 0, 0, 3)}),
          normalize_translation(Pattern{F(0, -1, 1, 3), F(0, 0, 0, 2)}),
          normalize_translation(Pattern{F(0, 0, 0, 2), F(1, 0, 0, 2), F(0, 0, 0, 3)}),
          normalize_translation(Pattern{F(0, 0, 0, 3), F(1, 0, 0, 3), F(0, 0, 0, 2)}),
          normalize_translation(Pattern{F(0, 0, 0, 3), F(0, 1, 0, 3), F(0, 0, 0, 1)}),
      }};
  return s;
}

const TemplateSet& forbidden4() {
  static const TemplateSet s{"Forbidden4",
                             {
                                 Pattern{F(0, 0, 0, 1), F(0, 1, 0, 1)},
                                 Pattern{F(0, 0, 0, 1), F(0, 0, 1, 1)},
                                 Pattern{F(0, 0, 0, 2), F(0, 0, 1, 2)},
                                 Pattern{F(0, 0, 0, 3), F(1, 1, 0, 3)},
                             }};
  return s;
}

std::vector<Placement> placements(const Pattern& p, const TemplateSet& templates) {
  std::vector<Placement> out;
  for (std::size_t k = 0; k < templates.patterns.size(); ++k) {
    const Pattern& q = templates.patterns[k];
    if (q.empty()) continue;
    const UnitFace& anchor = q.faces().front();
    for (const auto& f : p) {
      if (f.type != anchor.type) continue;
      IVec3 t = f.x - anchor.x;
      bool inside = true;
      for (const auto& g : q)
        if (!p.contains(t + g)) {
          inside = false;
          break;
        }
      if (inside) out.push_back({k, t});
    }
  }
  return out;
}

std::optional<std::vector<Placement>> CoverReport::chain(const UnitFace& e, const UnitFace& f) const {
  if (!templates) return std::nullopt;
  // Placements containing each face.
  std::unordered_map<UnitFace, std::vector<std::size_t>, UnitFaceHash> by_face;
  for (std::size_t k = 0; k < placements.size(); ++k)
    for (const auto& g : templates->patterns[placements[k].template_index])
      by_face[placements[k].translation + g].push_back(k);
  auto starts = by_face.find(e);
  if (starts == by_face.end() || !by_face.count(f)) return std::nullopt;
  const std::size_t none = static_cast<std::size_t>(-1);
  std::vector<std::size_t> prev(placements.size(), none);
  std::vector<bool> seen(placements.size(), false);
  std::deque<std::size_t> queue;
  for (auto k : starts->second) {
    seen[k] = true;
    queue.push_back(k);
  }
  while (!queue.empty()) {
    std::size_t k = queue.front();
    queue.pop_front();
    const Pattern& q = templates->patterns[placements[k].template_index];
    bool has_f = false;
    for (const auto& g : q) has_f = has_f || placements[k].translation + g == f;
    if (has_f) {
      std::vector<Placement> path;
      for (std::size_t c = k; c != none; c = prev[c]) path.push_back(placements[c]);
      std::reverse(path.begin(), path.end());
      return path;
    }
    for (const auto& g : q)
      for (auto n : by_face[placements[k].translation + g])
        if (!seen[n]) {
          seen[n] = true;
          prev[n] = k;
          queue.push_back(n);
        }
  }
  return std::nullopt;
}

CoverReport is_covered(const Pattern& p, const TemplateSet& templates, const Pattern& exempt) {
  CoverReport r;
  r.templates = &templates;
  r.pattern = p;
  r.placements = placements(p, templates);
  DisjointSets ds(p.size());
  std::vector<bool> in_placement(p.size(), false);
  for (const auto& pl : r.placements) {
    const Pattern& q = templates.patterns[pl.template_index];
    std::ptrdiff_t first = -1;
    for (const auto& g : q) {
      auto idx = face_index(p, pl.translation + g);
      in_placement[idx] = true;
      if (first < 0)
        first = idx;
      else
        ds.unite(static_cast<std::size_t>(first), static_cast<std::size_t>(idx));
    }
  }
  std::unordered_set<std::size_t> roots;
  for (std::size_t k = 0; k < p.size(); ++k) {
    const UnitFace& f = p.faces()[k];
    if (exempt.contains(f)) continue;
    if (!in_placement[k]) r.uncovered.push_back(f);
    roots.insert(ds.find(k));
  }
  r.components = roots.size();
  r.covered = r.uncovered.empty() && r.components <= 1;
  return r;
}

StrongCoverReport is_strongly_covered(const Pattern& p) {
  StrongCoverReport r;
  r.cover = is_covered(p, l_fs());
  // Face pairs that lie together in some L_FS placement inside p.
  std::set<std::pair<UnitFace, UnitFace>> completed;
  for (const auto& pl : r.cover.placements) {
    const auto& q = l_fs().patterns[pl.template_index].faces();
    for (std::size_t a = 0; a < q.size(); ++a)
      for (std::size_t b = 0; b < q.size(); ++b)
        if (a != b) completed.emplace(pl.translation + q[a], pl.translation + q[b]);
  }
  for (const auto& pl : placements(p, l_edge())) {
    const auto& q = l_edge().patterns[pl.template_index].faces();
    UnitFace a = pl.translation + q[0], b = pl.translation + q[1];
    if (!completed.count({a, b})) {
      r.violation = Pattern{a, b};
      break;
    }
  }
  r.strongly_covered = r.cover.covered && !r.violation;
  return r;
}

bool AmbientWindow::near_boundary(const UnitFace& f) const {
  return norm_inf(f.x - window.anchor) > window.radius - margin;
}

AmbientWindow ambient_window(const IVec3& normal, const Window& w, std::int64_t margin) {
  return AmbientWindow{stepped_faces(normal, w), w, margin};
}

AmbientWindow ambient_window(const Vec3& normal, const Window& w, std::int64_t margin) {
  return AmbientWindow{stepped_faces(normal, w), w, margin};
}

std::int64_t annulus_window_radius(const Pattern& p) {
  std::int64_t diam = 0, far = 0;
  for (const auto& f : p) {
    far = std::max(far, norm_inf(f.x));
    for (const auto& g : p) diam = std::max(diam, norm_inf(f.x - g.x));
  }
  return std::max(diam, far) + 4;
}

AnnulusReport check_annulus(const Pattern& p, const Pattern& a, const AmbientWindow& ambient) {
  AnnulusReport r;
  r.ambient_faces = ambient.faces.size();
  r.window_radius = ambient.window.radius;
  Pattern u = p.united(a);
  for (const auto& f : u) {
    if (!ambient.faces.contains(f))
      throw PreconditionFailed("face " + to_string(f) + " is not in the ambient stepped plane");
    if (ambient.near_boundary(f))
      throw WindowTooSmall("face " + to_string(f) + " reaches the boundary band of the window of radius " +
                           std::to_string(ambient.window.radius));
  }
  Pattern complement = ambient.faces.minus(u);
  std::vector<UnitFace> band;
  for (const auto& f : complement)
    if (ambient.near_boundary(f)) band.push_back(f);
  Pattern exempt(std::move(band));

  auto cp = is_covered(p, l_fs());
  r.p_covered = cp.covered;
  if (!cp.covered) r.witnesses.push_back("P is not L_FS-covered");
  auto cu = is_covered(u, l_fs());
  r.union_covered = cu.covered;
  if (!cu.covered) r.witnesses.push_back("A u P is not L_FS-covered");
  auto cc = is_covered(complement, l_fs(), exempt);
  r.complement_covered = cc.covered;
  if (!cc.covered)
    r.witnesses.push_back("complement is not L_FS-covered: " + std::to_string(cc.uncovered.size()) +
                          " uncovered faces, " + std::to_string(cc.components) + " components");
  auto sc = is_strongly_covered(a);
  r.annulus_strongly_covered = sc.strongly_covered;
  if (!sc.strongly_covered)
    r.witnesses.push_back(sc.violation ? "edge pair without completion in A: " + to_string(*sc.violation)
                                       : "A is not L_FS-covered");
  Pattern common = a.intersected(p);
  r.disjoint = common.empty();
  if (!r.disjoint) r.witnesses.push_back("A and P share " + to_string(common.faces().front()));
  r.closure_separated = true;
  for (const auto& f : p) {
    for (std::int64_t dx = -1; dx <= 1 && r.closure_separated; ++dx)
      for (std::int64_t dy = -1; dy <= 1 && r.closure_separated; ++dy)
        for (std::int64_t dz = -1; dz <= 1 && r.closure_separated; ++dz)
          for (int t = 1; t <= 3; ++t) {
            UnitFace g{f.x + IVec3{dx, dy, dz}, t};
            if (complement.contains(g) && faces_touch(f, g)) {
              r.closure_separated = false;
              r.witnesses.push_back("P face " + to_string(f) + " touches outside face " + to_string(g));
              break;
            }
          }
  }
  return r;
}

AnnulusReport check_annulus_levels(const std::vector<int>& word, std::size_t k, std::size_t l) {
  if (k + l > word.size()) throw ExpansionTooShort("word is shorter than k + l");
  std::vector<int> prefix(word.begin(), word.begin() + static_cast<std::ptrdiff_t>(k + l));
  PnBuilder b(prefix);
  Pattern inner;
  while (b.level() < l) b.advance();
  inner = b.current();
  while (b.advance()) {
  }
  Pattern outer = b.current();
  IVec3 normal = fs_product(prefix) * IVec3{1, 1, 1};
  Window w{annulus_window_radius(outer), {0, 0, 0}};
  return check_annulus(inner, outer.minus(inner), ambient_window(normal, w));
}

AnnulusReport check_annulus_base(const std::vector<int>& word) {
  return check_annulus_levels(word, word.size(), 0);
}

std::vector<ForbiddenHit> scan_forbidden(const Pattern& faces) {
  std::vector<ForbiddenHit> hits;
  for (const auto& pl : placements(faces, forbidden4())) hits.push_back({pl.template_index, pl.translation});
  return hits;
}

std::vector<ImageCoverCase> image_cover_cases(int i) {
  std::vector<ImageCoverCase> out;
  const auto& ts = l_fs().patterns;
  for (std::size_t k = 0; k < ts.size(); ++k) {
    ImageCoverCase c;
    c.template_index = k;
    c.image = sigma_fs(i, ts[k]);
    c.covered = is_covered(c.image, l_fs()).covered;
    out.push_back(std::move(c));
  }
  return out;
}

bool image_covered_lemma_check(int i) {
  for (const auto& c : image_cover_cases(i))
    if (!c.covered) return false;
  return true;
}

std::int64_t combinatorial_radius(const Pattern& p, const AmbientWindow& ambient) {
  const Pattern& g = ambient.faces;
  std::vector<std::int64_t> dist(g.size(), -1);
  std::deque<std::size_t> queue;
  for (const auto& f : unit_corner()) {
    auto idx = face_index(g, f);
    if (idx < 0) throw PreconditionFailed("ambient plane does not contain the origin faces");
    if (!p.contains(f)) return 0;
    dist[idx] = 0;
    queue.push_back(static_cast<std::size_t>(idx));
  }
  while (!queue.empty()) {
    std::size_t k = queue.front();
    queue.pop_front();
    const UnitFace& f = g.faces()[k];
    if (!p.contains(f)) return dist[k];
    if (ambient.near_boundary(f)) throw WindowTooSmall("combinatorial radius reaches the window boundary");
    for (std::int64_t dx = -1; dx <= 1; ++dx)
      for (std::int64_t dy = -1; dy <= 1; ++dy)
        for (std::int64_t dz = -1; dz <= 1; ++dz)
          for (int t = 1; t <= 3; ++t) {
            UnitFace h{f.x + IVec3{dx, dy, dz}, t};
            auto idx = face_index(g, h);
            if (idx >= 0 && dist[idx] < 0 && faces_share_edge(f, h)) {
              dist[idx] = dist[k] + 1;
              queue.push_back(static_cast<std::size_t>(idx));
            }
          }
  }
  throw WindowTooSmall("no face outside the pattern inside the window");
}

}  // namespace discplane
