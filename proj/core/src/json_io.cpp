#include "discplane/json_io.hpp"

#include <json.hpp>

#include "discplane/errors.hpp"
#include "discplane/parse.hpp"

namespace discplane {

using nlohmann::json;

namespace {

std::string dump(const json& j, int indent) { return j.dump(indent); }

json ivec(const IVec3& x) { return json::array({x[0], x[1], x[2]}); }

json scalar_json(const Scalar& s) {
  json j;
  switch (s.kind()) {
    case ScalarKind::Rational:
      j["kind"] = "rational";
      break;
    case ScalarKind::Algebraic: {
      j["kind"] = "algebraic";
      const auto& f = s.algebraic().field;
      json mp = json::array();
      for (const auto& c : f->minpoly().coeffs()) mp.push_back(c.get_str());
      j["minpoly"] = mp;
      auto [lo, hi] = f->isolating_interval(32);
      j["interval"] = json::array({lo.get_str(), hi.get_str()});
      json poly = json::array();
      for (const auto& c : s.algebraic().poly.coeffs()) poly.push_back(c.get_str());
      j["poly"] = poly;
      break;
    }
    default:
      j["kind"] = "interval_real";
  }
  j["expr"] = s.expression();
  j["decimal"] = s.decimal(30);
  return j;
}

json vec_json(const Vec3& v) { return json::array({scalar_json(v[0]), scalar_json(v[1]), scalar_json(v[2])}); }

json status_json(const ExpansionStatus& s) {
  switch (s.kind) {
    case ExpansionStatus::Halted:
      return {{"kind", "halted"}, {"step", s.halted_at}};
    case ExpansionStatus::Periodic:
      return {{"kind", "periodic"}, {"preperiod", s.preperiod}, {"period", s.period}};
    default:
      return {{"kind", "budget_exhausted"}};
  }
}

json pattern_json(const Pattern& p) {
  json a = json::array();
  for (const auto& f : p) a.push_back({{"x", ivec(f.x)}, {"type", f.type}});
  return a;
}

json points_json(const PointSet& p) {
  json a = json::array();
  for (const auto& x : p) a.push_back(ivec(x));
  return a;
}

json parse_text(const std::string& text) {
  try {
    return json::parse(text);
  } catch (const json::exception& e) {
    throw ParseError(std::string("invalid JSON: ") + e.what());
  }
}

Scalar scalar_from(const json& j) {
  if (!j.is_object() || !j.contains("expr") || !j["expr"].is_string())
    throw ParseError("scalar JSON needs a string field \"expr\"");
  return parse_scalar(j["expr"].get<std::string>());
}

Vec3 vec_from(const json& j) {
  if (!j.is_array() || j.size() != 3) throw ParseError("vector JSON must be an array of three scalars");
  return Vec3(scalar_from(j[0]), scalar_from(j[1]), scalar_from(j[2]));
}

IVec3 ivec_from(const json& j) {
  if (!j.is_array() || j.size() != 3) throw ParseError("point JSON must be an array of three integers");
  IVec3 x;
  for (int i = 0; i < 3; ++i) {
    if (!j[i].is_number_integer()) throw ParseError("point coordinates must be integers");
    x[i] = j[i].get<std::int64_t>();
  }
  return x;
}

}  // namespace

std::string to_json(const Scalar& s, int indent) { return dump(scalar_json(s), indent); }

std::string to_json(const Vec3& v, int indent) { return dump(vec_json(v), indent); }

std::string to_json(const Expansion& e, int indent) {
  json it = json::array();
  for (const auto& v : e.iterates) it.push_back(vec_json(v));
  return dump({{"digits", e.digits}, {"iterates", it}, {"status", status_json(e.status)}}, indent);
}

std::string to_json(const Pattern& p, int indent) { return dump(pattern_json(p), indent); }

std::string to_json(const PointSet& p, int indent) { return dump(points_json(p), indent); }

std::string to_json(const TnSequence& t, int indent) {
  json levels = json::array(), tr = json::array();
  for (const auto& l : t.levels) levels.push_back(points_json(l));
  for (const auto& x : t.translations) tr.push_back(ivec(x));
  return dump({{"word", word_string(t.word)}, {"levels", levels}, {"translations", tr}}, indent);
}

std::string to_json(const AnnulusReport& r, int indent) {
  json j{{"passed", r.passed()},
         {"condition1", r.condition1()},
         {"condition2", r.condition2()},
         {"condition3", r.condition3()},
         {"condition4", r.condition4()},
         {"p_covered", r.p_covered},
         {"union_covered", r.union_covered},
         {"complement_covered", r.complement_covered},
         {"annulus_strongly_covered", r.annulus_strongly_covered},
         {"disjoint", r.disjoint},
         {"closure_separated", r.closure_separated},
         {"witnesses", r.witnesses},
         {"ambient_faces", r.ambient_faces},
         {"window_radius", r.window_radius}};
  return dump(j, indent);
}

std::string to_json(const Verdict& v, int indent) {
  static const char* kinds[] = {"Connected", "NotConnected", "Unknown"};
  json j{{"verdict", kinds[v.kind]},
         {"reason", to_string(v.reason)},
         {"step", v.step},
         {"budget", v.budget},
         {"digits", v.digits},
         {"summary", v.to_string()}};
  if (v.omega) j["omega"] = scalar_json(*v.omega);
  if (v.stage_omega) j["stage_omega"] = scalar_json(*v.stage_omega);
  json it = json::array();
  for (const auto& x : v.iterates) it.push_back(vec_json(x));
  j["iterates"] = it;
  return dump(j, indent);
}

std::string to_json(const F3Verdict& v, int indent) {
  static const char* kinds[] = {"InF3", "NotInF3", "Unknown"};
  json j{{"kind", kinds[v.kind]}, {"budget", v.budget}};
  if (v.kind == F3Verdict::InF3) {
    j["preperiod"] = v.preperiod;
    j["period"] = v.period;
    j["cycle"] = word_string(v.cycle);
  } else if (v.kind == F3Verdict::NotInF3) {
    j["step"] = v.step;
  }
  return dump(j, indent);
}

std::string to_json(const WindowedConnectivity& w, int indent) {
  json j{{"kind", to_string(w.kind)}, {"radii", w.radii}, {"core_components", w.core_components}};
  if (w.witness) j["witness"] = json::array({ivec(w.witness->first), ivec(w.witness->second)});
  return dump(j, indent);
}

Scalar scalar_from_json(const std::string& text) { return scalar_from(parse_text(text)); }

Vec3 vec3_from_json(const std::string& text) { return vec_from(parse_text(text)); }

Expansion expansion_from_json(const std::string& text) {
  json j = parse_text(text);
  if (!j.is_object() || !j.contains("digits") || !j.contains("iterates") || !j.contains("status"))
    throw ParseError("expansion JSON needs digits, iterates and status");
  Expansion e;
  try {
    e.digits = j["digits"].get<std::vector<int>>();
    for (const auto& v : j["iterates"]) e.iterates.push_back(vec_from(v));
    const json& s = j["status"];
    std::string kind = s.at("kind").get<std::string>();
    if (kind == "halted") {
      e.status.kind = ExpansionStatus::Halted;
      e.status.halted_at = s.at("step").get<std::size_t>();
    } else if (kind == "periodic") {
      e.status.kind = ExpansionStatus::Periodic;
      e.status.preperiod = s.at("preperiod").get<std::size_t>();
      e.status.period = s.at("period").get<std::size_t>();
    } else if (kind == "budget_exhausted") {
      e.status.kind = ExpansionStatus::BudgetExhausted;
    } else {
      throw ParseError("unknown expansion status " + kind);
    }
  } catch (const json::exception& ex) {
    throw ParseError(std::string("malformed expansion JSON: ") + ex.what());
  }
  if (e.iterates.size() != e.digits.size() + 1)
    throw ParseError("expansion JSON must have one more iterate than digits");
  return e;
}

Pattern pattern_from_json(const std::string& text) {
  json j = parse_text(text);
  if (!j.is_array()) throw ParseError("pattern JSON must be an array of faces");
  std::vector<UnitFace> faces;
  for (const auto& f : j) {
    if (!f.is_object() || !f.contains("x") || !f.contains("type") || !f["type"].is_number_integer())
      throw ParseError("face JSON needs \"x\" and an integer \"type\"");
    int t = f["type"].get<int>();
    if (t < 1 || t > 3) throw ParseError("face type must be 1, 2 or 3");
    faces.push_back({ivec_from(f["x"]), t});
  }
  return Pattern(std::move(faces));
}

PointSet pointset_from_json(const std::string& text) {
  json j = parse_text(text);
  if (!j.is_array()) throw ParseError("point set JSON must be an array of points");
  std::vector<IVec3> pts;
  for (const auto& x : j) pts.push_back(ivec_from(x));
  return PointSet(std::move(pts));
}

}  // namespace discplane
