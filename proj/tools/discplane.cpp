#include <CLI11.hpp>
#include <json.hpp>

#include <fstream>
#include <iostream>
#include <map>
#include <optional>
#include <sstream>
#include <set>
#include <string>
#include <vector>

#include "discplane/covering.hpp"
#include "discplane/decision.hpp"
#include "discplane/errors.hpp"
#include "discplane/generation.hpp"
#include "discplane/json_io.hpp"
#include "discplane/lemma_suite.hpp"
#include "discplane/parse.hpp"

using namespace discplane;
using nlohmann::json;

namespace {

constexpr int kExitInput = 3;

struct Globals {
  std::vector<std::string> lets;
  bool sort = false;
  bool quiet = false;
  std::uint64_t seed = 1;
  std::size_t steps = kDefaultBudget;
};

struct Context {
  Globals g;
  json doc = json::object();
  std::ostringstream text;

  void line(const std::string& s) { text << s << '\n'; }
};

Bindings bindings(const Globals& g) {
  Bindings b;
  for (const auto& l : g.lets) parse_binding(l, b);
  return b;
}

json j(const std::string& s) { return json::parse(s); }

// Parses a vector, sorting it when --sort is given.
Vec3 read_vector(Context& ctx, const std::string& text) {
  Vec3 v = parse_vec3(text, bindings(ctx.g));
  for (int i = 0; i < 3; ++i)
    if (v[i].sign() < 0) throw DomainError("coordinates must be nonnegative");
  if (ctx.g.sort) {
    std::array<int, 3> perm{};
    v = sort_coordinates(v, &perm);
    ctx.doc["permutation"] = perm;
    ctx.line("sorted frame: coordinates (" + std::to_string(perm[0] + 1) + "," + std::to_string(perm[1] + 1) +
             "," + std::to_string(perm[2] + 1) + ") of the input");
  } else if (!v.is_sorted_nonnegative()) {
    throw NotSorted("vector " + v.to_string() + " is not sorted ascending; pass --sort");
  }
  ctx.doc["v"] = j(to_json(v));
  return v;
}

std::string status_text(const ExpansionStatus& s) {
  switch (s.kind) {
    case ExpansionStatus::Halted:
      return "halted at step " + std::to_string(s.halted_at);
    case ExpansionStatus::Periodic:
      return "periodic, preperiod " + std::to_string(s.preperiod) + ", period " + std::to_string(s.period);
    default:
      return "budget exhausted";
  }
}

int cmd_expand(Context& ctx, const std::string& vt) {
  Vec3 v = read_vector(ctx, vt);
  Expansion e = expand(v, ctx.g.steps);
  ctx.doc["expansion"] = j(to_json(e));
  ctx.line("digits: " + (e.digits.empty() ? std::string("(none)") : word_string(e.digits)));
  for (std::size_t n = 0; n < e.iterates.size(); ++n)
    ctx.line("v(" + std::to_string(n) + ") = " + e.iterates[n].to_string());
  ctx.line("status: " + status_text(e.status));
  return e.status.kind == ExpansionStatus::BudgetExhausted ? 2 : 0;
}

int cmd_omega(Context& ctx, const std::string& vt) {
  Vec3 v = read_vector(ctx, vt);
  try {
    Thickness t = connecting_thickness(v, ctx.g.steps);
    ctx.doc["omega"] = j(to_json(t.omega));
    ctx.doc["expansion"] = j(to_json(t.trace));
    ctx.line("Omega = " + t.omega.to_string());
    ctx.line("      ~ " + t.omega.decimal(30));
    ctx.line("expansion: " + status_text(t.trace.status) + ", digits " +
             (t.trace.digits.empty() ? std::string("(none)") : word_string(t.trace.digits)));
    for (std::size_t n = 1; n < t.trace.iterates.size(); ++n)
      ctx.line("v(" + std::to_string(n) + ") = " + t.trace.iterates[n].to_string());
    return 0;
  } catch (const BudgetExhaustedError& e) {
    ctx.doc["error"] = e.what();
    ctx.doc["lower"] = j(to_json(e.lower));
    ctx.doc["upper"] = j(to_json(e.upper));
    ctx.line(std::string(e.what()));
    ctx.line("Omega in [" + e.lower.decimal(20) + ", " + e.upper.decimal(20) + "]");
    return 2;
  }
}

int cmd_classify(Context& ctx, const std::string& vt) {
  Vec3 v = read_vector(ctx, vt);
  F3Verdict c = classify_f3(v, ctx.g.steps);
  ctx.doc["classification"] = j(to_json(c));
  switch (c.kind) {
    case F3Verdict::InF3:
      ctx.line("InF3: cycle " + word_string(c.cycle) + ", preperiod " + std::to_string(c.preperiod) +
               ", period " + std::to_string(c.period));
      return 0;
    case F3Verdict::NotInF3:
      ctx.line("NotInF3: halts at step " + std::to_string(c.step));
      return 1;
    default:
      ctx.line("Unknown after " + std::to_string(c.budget) + " steps");
      return 2;
  }
}

int cmd_decide(Context& ctx, const std::string& vt, bool cross, std::vector<std::int64_t> radii) {
  Vec3 v = read_vector(ctx, vt);
  Verdict verdict = decide_critical_connectedness(v, ctx.g.steps);
  ctx.doc["verdict"] = j(to_json(verdict));
  ctx.line(verdict.to_string());
  if (verdict.omega) ctx.line("Omega = " + verdict.omega->to_string() + " ~ " + verdict.omega->decimal(20));
  if (verdict.stage_omega) ctx.line("stage Omega = " + verdict.stage_omega->to_string());
  if (cross) {
    WindowedCrossCheck cc = windowed_cross_check(v, verdict, radii);
    ctx.doc["cross_check"] = {{"performed", cc.performed}, {"consistent", cc.consistent}, {"note", cc.note}};
    if (cc.performed) ctx.doc["cross_check"]["windowed"] = j(to_json(cc.windowed));
    ctx.line("windowed cross-check: " + std::string(cc.consistent ? "consistent" : "CONTRADICTION") +
             (cc.note.empty() ? "" : " (" + cc.note + ")"));
    if (!cc.consistent) return 1;
  }
  return verdict.exit_code();
}

void emit(Context& ctx, const std::string& payload, const std::string& out) {
  if (!out.empty()) {
    std::ofstream f(out);
    if (!f) throw DomainError("cannot write " + out);
    f << payload;
    ctx.doc["out"] = out;
    ctx.line("wrote " + out);
  } else if (ctx.g.quiet) {
    ctx.doc["payload"] = payload;
  } else {
    ctx.text << payload;
  }
}

int cmd_gen(Context& ctx, const std::string& what, const std::string& vt, const std::string& word_text,
            std::size_t n, const std::string& format, const std::string& out) {
  std::vector<int> word;
  std::optional<Vec3> v;
  if (!word_text.empty()) {
    word = parse_word(word_text);
  } else {
    if (vt.empty()) throw DomainError("gen needs a vector or --word");
    v = read_vector(ctx, vt);
    word = fs_orbit(*v, n).digits;
  }
  if (word_text.empty() && word.size() != n) throw ExpansionTooShort("expansion is shorter than n");
  if (!word_text.empty() && n > 0 && n < word.size()) word.resize(n);
  ctx.doc["word"] = word_string(word);
  if (what == "pn") {
    Pattern p = generate_pn(word);
    ctx.doc["faces"] = p.size();
    if (!out.empty() || ctx.g.quiet || format != "json") ctx.line("P_" + std::to_string(word.size()) + ": " +
                                                                    std::to_string(p.size()) + " faces");
    if (format == "json") emit(ctx, to_json(p) + "\n", out);
    else if (format == "off") emit(ctx, to_off(p), out);
    else emit(ctx, to_xyz(distinguished_vertices(p)), out);
    return 0;
  }
  if (format == "off") throw DomainError("T_n is a point set; use --format json or xyz");
  TnSequence t = generate_tn(word);
  ctx.doc["points"] = t.levels.back().size();
  if (format == "json") emit(ctx, to_json(t) + "\n", out);
  else emit(ctx, to_xyz(t.levels.back()), out);
  return 0;
}

int cmd_connectivity(Context& ctx, const std::string& vt, const std::string& omega_text,
                     const std::vector<std::int64_t>& radii, std::int64_t halo) {
  Vec3 v = parse_vec3(vt, bindings(ctx.g));
  ctx.doc["v"] = j(to_json(v));
  Scalar omega = parse_scalar(omega_text, bindings(ctx.g));
  ctx.doc["omega"] = j(to_json(omega));
  WindowedConnectivity w = is_connected_windowed(PlaneSpec{v, omega}, radii, halo);
  ctx.doc["windowed"] = j(to_json(w));
  std::string comps;
  for (std::size_t k = 0; k < w.radii.size(); ++k)
    comps += (k ? ", " : "") + ("R=" + std::to_string(w.radii[k]) + ": " + std::to_string(w.core_components[k]));
  ctx.line(to_string(w.kind) + " (core components " + comps + ")");
  if (w.witness)
    ctx.line("separated points " + to_string(w.witness->first) + " and " + to_string(w.witness->second));
  return w.kind == WindowedConnectivity::ConnectedAtAll ? 0 : w.kind == WindowedConnectivity::DisconnectedStable ? 1 : 2;
}

void report_annulus(Context& ctx, const AnnulusReport& r, const std::string& label) {
  ctx.line(label + ": " + (r.passed() ? "pass" : "fail") + " [cover " + (r.condition1() ? "ok" : "no") +
           ", strong " + (r.condition2() ? "ok" : "no") + ", disjoint " + (r.condition3() ? "ok" : "no") +
           ", separated " + (r.condition4() ? "ok" : "no") + "]");
  for (const auto& w : r.witnesses) ctx.line("  " + w);
}

int cmd_annulus(Context& ctx, const std::string& word_text, std::size_t k, std::size_t l) {
  std::vector<int> w = parse_word(word_text);
  if (k + l == 0) throw DomainError("k + l must be positive");
  while (w.size() < k + l) w.push_back(w[w.size() % parse_word(word_text).size()]);
  AnnulusReport r = check_annulus_levels(w, k, l);
  ctx.doc["word"] = word_string(w);
  ctx.doc["report"] = j(to_json(r));
  report_annulus(ctx, r, "P_" + std::to_string(k + l) + " \\ P_" + std::to_string(l) + " around P_" + std::to_string(l));
  return r.passed() ? 0 : 1;
}

int cmd_props(Context& ctx, const std::string& vt, const std::string& word_text, std::size_t n,
              std::int64_t radius, std::size_t max_n) {
  Vec3 v = word_text.empty() ? read_vector(ctx, vt) : periodic_word_vector(parse_word(word_text));
  if (!word_text.empty()) ctx.doc["v"] = j(to_json(v));
  bool ok = true;
  json results = json::array();
  auto record = [&](const std::string& name, bool pass, const std::string& detail) {
    ok = ok && pass;
    results.push_back({{"name", name}, {"ok", pass}, {"detail", detail}});
    ctx.line((pass ? "ok    " : "FAIL  ") + name + (detail.empty() ? "" : ": " + detail));
  };
  TnSequence seq = generate_tn(v, n);
  ConnectivityReport conn = check_tn_connected(v, n);
  record("T_n connected", conn.connected(), std::to_string(conn.component_count) + " components");
  auto in_plane = check_tn_in_critical_plane(v, seq);
  record("T_n inside P(v, Omega)", in_plane.ok, in_plane.detail);
  auto heights = check_translation_heights(v, seq);
  record("translation heights", heights.ok, heights.detail);
  auto ladder = check_adjacency_ladder(v, seq);
  record("adjacency ladder", ladder.ok, ladder.detail);
  auto pt = check_pn_in_tn(v, n);
  record("P_n inside T_n", pt.ok, pt.detail);
  Pattern p = generate_pn(v, n, ctx.g.steps);
  std::size_t off = 0;
  for (const auto& f : p) off += face_in_plane(v, f) ? 0 : 1;
  record("P_n inside stepped plane", off == 0, std::to_string(off) + " of " + std::to_string(p.size()) + " faces outside");
  FillResult fill = grow_until_filled(v, radius, max_n);
  record("P_n fills naive plane at R=" + std::to_string(radius), fill.filled,
         fill.filled ? "n = " + std::to_string(fill.n) : std::to_string(fill.missing.size()) + " points missing");
  ctx.doc["checks"] = results;
  return ok ? 0 : 1;
}

int cmd_lemmas(Context& ctx) {
  LemmaSuiteOptions opt;
  opt.seed = ctx.g.seed;
  LemmaSuiteReport r = run_lemma_suite(opt);
  json cases = json::array();
  std::size_t covered = 0, total = 0;
  for (int i = 0; i < 3; ++i)
    for (const auto& c : r.image_cases[i]) {
      ++total;
      covered += c.covered;
      cases.push_back({{"i", i + 1}, {"template", c.template_index}, {"covered", c.covered}, {"image", j(to_json(c.image))}});
    }
  ctx.doc["image_cover"] = {{"ok", r.image_cover_ok()}, {"cases", cases}};
  ctx.line(std::string(r.image_cover_ok() ? "ok    " : "FAIL  ") + "Sigma_i(Q) covered for " + std::to_string(covered) +
           "/" + std::to_string(total) + " template images");

  std::size_t clean = 0;
  json ftrials = json::array();
  for (const auto& t : r.forbidden) {
    clean += t.hits.empty();
    ftrials.push_back({{"v", j(to_json(t.v))}, {"i", t.substitution}, {"faces", t.faces}, {"hits", t.hits.size()}});
  }
  ctx.doc["forbidden"] = {{"ok", r.forbidden_ok()}, {"trials", ftrials}};
  ctx.line(std::string(r.forbidden_ok() ? "ok    " : "FAIL  ") + "no forbidden pattern in " + std::to_string(clean) + "/" +
           std::to_string(r.forbidden.size()) + " images of random stepped planes");

  std::size_t req = 0, req_pass = 0, opt_total = 0;
  std::array<std::size_t, 4> cond{};
  std::array<std::size_t, 2> len4{};
  std::set<std::vector<int>> len4_seen;
  json base = json::array();
  for (const auto& c : r.annulus) {
    base.push_back({{"word", word_string(c.word)}, {"required", c.required}, {"report", j(to_json(c.report))}});
    if (c.word.size() == 4 && len4_seen.insert(c.word).second) {
      ++len4[0];
      len4[1] += c.report.passed();
    }
    if (c.required) {
      ++req;
      req_pass += c.report.passed();
    } else {
      ++opt_total;
      cond[0] += c.report.condition1();
      cond[1] += c.report.condition2();
      cond[2] += c.report.condition3();
      cond[3] += c.report.condition4();
    }
  }
  ctx.doc["annulus_base"] = {{"ok", r.annulus_ok()}, {"cases", base}};
  ctx.line(std::string(r.annulus_ok() ? "ok    " : "FAIL  ") + "Sigma_w(U) \\ U is an annulus of U for " +
           std::to_string(req_pass) + "/" + std::to_string(req) + " words with at least four 3s");
  ctx.line("      length-4 words passing: " + std::to_string(len4[1]) + "/" + std::to_string(len4[0]));
  ctx.line("      words with at most three 3s (" + std::to_string(opt_total) + "): cover " + std::to_string(cond[0]) +
           ", strong " + std::to_string(cond[1]) + ", disjoint " + std::to_string(cond[2]) + ", separated " +
           std::to_string(cond[3]));
  return r.passed() ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Fully subtractive expansions, connecting thickness and discrete plane patterns"};
  app.require_subcommand(1);
  Context ctx;
  auto& g = ctx.g;
  app.add_option("--let", g.lets, "Bind a name for later expressions, e.g. a=algebraic(-1,1,1,1; 0.5,0.6)");
  app.add_flag("--sort", g.sort, "Sort coordinates ascending and report the permutation");
  app.add_flag("--quiet", g.quiet, "Emit a single JSON document");
  app.add_option("--seed", g.seed, "Seed for randomized suites");
  app.add_option("--steps", g.steps, "Expansion step budget");
  app.fallthrough();

  std::string vec, word, omega_text, format = "json", out;
  std::size_t n = 0, k = 0, l = 0, max_n = 30;
  std::int64_t halo = -1, radius = 3;
  std::vector<std::int64_t> radii{6, 10};
  bool cross = false;

  auto* expand_cmd = app.add_subcommand("expand", "Fully subtractive expansion of v");
  expand_cmd->add_option("v", vec, "Vector, e.g. 1,sqrt(13),sqrt(17)")->required();
  auto* omega_cmd = app.add_subcommand("omega", "Connecting thickness of v");
  omega_cmd->add_option("v", vec)->required();
  auto* classify_cmd = app.add_subcommand("classify", "Whether the expansion of v never halts");
  classify_cmd->add_option("v", vec)->required();
  auto* decide_cmd = app.add_subcommand("decide", "Whether P(v, Omega(v)) is 2-connected");
  decide_cmd->add_option("v", vec)->required();
  decide_cmd->add_flag("--cross-check", cross, "Compare with windowed connectivity");
  decide_cmd->add_option("--radius", radii, "Window radii for the cross-check");

  auto* gen_cmd = app.add_subcommand("gen", "Generate P_n or T_n");
  gen_cmd->require_subcommand(1);
  for (const char* what : {"pn", "tn"}) {
    auto* sub = gen_cmd->add_subcommand(what, std::string(what) == "pn" ? "Pattern P_n" : "Point set T_n");
    sub->add_option("v", vec);
    sub->add_option("--word", word, "Digit word instead of a vector");
    sub->add_option("--n", n, "Number of digits");
    sub->add_option("--format", format)->check(CLI::IsMember({"json", "off", "xyz"}));
    sub->add_option("--out", out, "Output file");
  }

  auto* check_cmd = app.add_subcommand("check", "Verification suites");
  check_cmd->require_subcommand(1);
  auto* conn_cmd = check_cmd->add_subcommand("connectivity", "Windowed connectivity of P(v, omega)");
  conn_cmd->add_option("v", vec)->required();
  conn_cmd->add_option("--omega", omega_text)->required();
  conn_cmd->add_option("--radius", radii, "Increasing window radii");
  conn_cmd->add_option("--halo", halo, "Halo around each window (default: the radius)");
  auto* ann_cmd = check_cmd->add_subcommand("annulus", "Whether P_{k+l} \\ P_l is an annulus of P_l");
  ann_cmd->add_option("--word", word)->required();
  ann_cmd->add_option("--k", k)->required();
  ann_cmd->add_option("--l", l)->required();
  auto* props_cmd = check_cmd->add_subcommand("props", "T_n / P_n cross-checks for a periodic vector");
  props_cmd->add_option("v", vec);
  props_cmd->add_option("--word", word, "Periodic word instead of a vector");
  props_cmd->add_option("--n", n)->required();
  props_cmd->add_option("--fill-radius", radius, "Window radius for the naive-plane fill check");
  props_cmd->add_option("--max-n", max_n, "Largest level tried by the fill check");
  auto* lemmas_cmd = check_cmd->add_subcommand("lemmas", "Covering, forbidden-pattern and annulus suites");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : kExitInput;
  }

  int code = 0;
  try {
    if (*expand_cmd) code = cmd_expand(ctx, vec);
    else if (*omega_cmd) code = cmd_omega(ctx, vec);
    else if (*classify_cmd) code = cmd_classify(ctx, vec);
    else if (*decide_cmd) code = cmd_decide(ctx, vec, cross, radii);
    else if (*gen_cmd) {
      std::string what = gen_cmd->get_subcommands().front()->get_name();
      if (word.empty() && n == 0) throw DomainError("gen needs --n or --word");
      code = cmd_gen(ctx, what, vec, word, n, format, out);
    } else if (*conn_cmd) code = cmd_connectivity(ctx, vec, omega_text, radii, halo);
    else if (*ann_cmd) code = cmd_annulus(ctx, word, k, l);
    else if (*props_cmd) {
      if (vec.empty() == word.empty()) throw DomainError("check props needs exactly one of a vector or --word");
      code = cmd_props(ctx, vec, word, n, radius, max_n);
    } else if (*lemmas_cmd) code = cmd_lemmas(ctx);
  } catch (const UndecidableComparison& e) {
    ctx.doc["error"] = e.what();
    ctx.line(std::string("undecided: ") + e.what());
    code = 2;
  } catch (const BudgetExhaustedError& e) {
    ctx.doc["error"] = e.what();
    ctx.line(std::string("budget exhausted: ") + e.what());
    code = 2;
  } catch (const Error& e) {
    ctx.doc["error"] = e.what();
    if (!g.quiet) std::cerr << "error: " << e.what() << '\n';
    code = kExitInput;
  }
  ctx.doc["exit_code"] = code;
  if (g.quiet) std::cout << ctx.doc.dump() << '\n';
  else std::cout << ctx.text.str() << std::flush;
  return code;
}
