#pragma once

#include <string>

#include "discplane/covering.hpp"
#include "discplane/decision.hpp"
#include "discplane/discrete_plane.hpp"
#include "discplane/fs_algorithm.hpp"
#include "discplane/generation.hpp"
#include "discplane/stepped.hpp"

namespace discplane {

// JSON text for library values. indent < 0 gives a single line.
//
// Scalar: {"kind": "rational"|"algebraic"|"interval_real", "expr": <parseable
// text>, "decimal": <30 significant digits>}; algebraic values also carry
// "minpoly" (integer coefficients, constant first), "interval" (rational
// isolating interval of the field generator) and "poly" (coordinates in the
// power basis of the generator).
std::string to_json(const Scalar& s, int indent = -1);
std::string to_json(const Vec3& v, int indent = -1);
// {"digits": [...], "iterates": [[s,s,s], ...], "status": {...}}
std::string to_json(const Expansion& e, int indent = -1);
// [{"x": [x,y,z], "type": i}, ...]
std::string to_json(const Pattern& p, int indent = -1);
// [[x,y,z], ...]
std::string to_json(const PointSet& p, int indent = -1);
// {"levels": [[[x,y,z], ...], ...], "translations": [[x,y,z], ...]}
std::string to_json(const TnSequence& t, int indent = -1);
std::string to_json(const AnnulusReport& r, int indent = -1);
std::string to_json(const Verdict& v, int indent = -1);
std::string to_json(const F3Verdict& v, int indent = -1);
std::string to_json(const WindowedConnectivity& w, int indent = -1);

// Inverses of the exporters above. Throw ParseError on malformed input.
Scalar scalar_from_json(const std::string& text);
Vec3 vec3_from_json(const std::string& text);
Expansion expansion_from_json(const std::string& text);
Pattern pattern_from_json(const std::string& text);
PointSet pointset_from_json(const std::string& text);

}  // namespace discplane
