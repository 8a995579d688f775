#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "discplane/stepped.hpp"

namespace discplane {

// Patterns considered up to translation; each representative is translated so
// that its smallest face sits at the origin.
struct TemplateSet {
  std::string name;
  std::vector<Pattern> patterns;
};

Pattern normalize_translation(const Pattern& p);

// Two-face patterns sharing a full edge that occur in some stepped plane with
// positive normal (12 classes). Throws InternalInconsistency on any other count.
const TemplateSet& l_edge();
// The 9 templates of the fully subtractive covering.
const TemplateSet& l_fs();
// The four patterns that never occur in Sigma_i(Gamma) for planes avoiding them.
const TemplateSet& forbidden4();

// Every two-face pattern sharing an edge, realizable or not (18 classes).
std::vector<Pattern> all_edge_pairs();
// Whether some stepped plane with positive normal contains a translate of p.
bool realizable_in_positive_plane(const Pattern& p);

struct Placement {
  std::size_t template_index = 0;
  IVec3 translation{0, 0, 0};
};

// Translates t of templates.patterns[k] with t + Q inside p.
std::vector<Placement> placements(const Pattern& p, const TemplateSet& templates);

struct CoverReport {
  bool covered = false;
  std::vector<UnitFace> uncovered;  // faces in no placement
  std::size_t components = 0;       // classes of faces linked by overlapping placements
  std::vector<Placement> placements;
  // Chain of placements Q_1 ... Q_n with e in Q_1, f in Q_n and consecutive
  // placements sharing a face; empty optional if none exists.
  std::optional<std::vector<Placement>> chain(const UnitFace& e, const UnitFace& f) const;

  const TemplateSet* templates = nullptr;
  Pattern pattern;
};

// Every pair of faces of p is linked by a chain of template placements inside
// p. Faces listed in exempt need not be covered and do not count as separate
// components on their own (they are only used as links).
CoverReport is_covered(const Pattern& p, const TemplateSet& templates,
                       const Pattern& exempt = Pattern());

struct StrongCoverReport {
  bool strongly_covered = false;
  CoverReport cover;
  std::optional<Pattern> violation;  // an L_edge occurrence without a completion
};

// L_FS-covered, and every L_edge occurrence X inside p extends to a translate
// Y of an L_FS template with X in Y inside p.
StrongCoverReport is_strongly_covered(const Pattern& p);

// Faces of the stepped plane with the given normal inside a window, plus the
// band of faces near the window boundary that is exempt from coverage.
struct AmbientWindow {
  Pattern faces;
  Window window;
  std::int64_t margin = 2;
  bool near_boundary(const UnitFace& f) const;
};

AmbientWindow ambient_window(const IVec3& normal, const Window& w, std::int64_t margin = 2);
AmbientWindow ambient_window(const Vec3& normal, const Window& w, std::int64_t margin = 2);
// Window radius used for annulus checks: diameter of the pattern plus 4.
std::int64_t annulus_window_radius(const Pattern& p);

struct AnnulusReport {
  bool p_covered = false;
  bool union_covered = false;
  bool complement_covered = false;
  bool annulus_strongly_covered = false;
  bool disjoint = false;
  bool closure_separated = false;

  bool condition1() const { return p_covered && union_covered && complement_covered; }
  bool condition2() const { return annulus_strongly_covered; }
  bool condition3() const { return disjoint; }
  bool condition4() const { return closure_separated; }
  bool passed() const { return condition1() && condition2() && condition3() && condition4(); }

  std::vector<std::string> witnesses;
  std::size_t ambient_faces = 0;
  std::int64_t window_radius = 0;
};

// Checks that a is an L_FS-annulus of p inside the windowed stepped plane.
// Throws PreconditionFailed if p or a leave the ambient plane and
// WindowTooSmall if they reach the exempt boundary band.
AnnulusReport check_annulus(const Pattern& p, const Pattern& a, const AmbientWindow& ambient);

// Annulus check of Sigma_w(U) \ U against U in Sigma_w(Gamma_(1,1,1)).
AnnulusReport check_annulus_base(const std::vector<int>& word);

// Annulus check of P_{k+l} \ P_l against P_l in Sigma_{i_1} ... Sigma_{i_{k+l}}(Gamma_(1,1,1)).
AnnulusReport check_annulus_levels(const std::vector<int>& word, std::size_t k, std::size_t l);

struct ForbiddenHit {
  std::size_t pattern_index = 0;
  IVec3 translation{0, 0, 0};
};

std::vector<ForbiddenHit> scan_forbidden(const Pattern& faces);

// For each Q in L_FS, Sigma_i(Q) is L_FS-covered.
struct ImageCoverCase {
  std::size_t template_index = 0;
  Pattern image;
  bool covered = false;
};
std::vector<ImageCoverCase> image_cover_cases(int i);
bool image_covered_lemma_check(int i);

// Length of the shortest path of edge-connected faces of the ambient plane from
// the origin faces to a face outside p (0 if U is not inside p).
std::int64_t combinatorial_radius(const Pattern& p, const AmbientWindow& ambient);

}  // namespace discplane
