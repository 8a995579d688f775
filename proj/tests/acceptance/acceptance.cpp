#include <algorithm>
#include <chrono>
#include <cstdio>
#include <functional>
#include <map>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "discplane/covering.hpp"
#include "discplane/decision.hpp"
#include "discplane/errors.hpp"
#include "discplane/fs_algorithm.hpp"
#include "discplane/generation.hpp"
#include "discplane/lemma_suite.hpp"
#include "discplane/stepped.hpp"
#include "reference_patterns.hpp"
#include "test_support.hpp"

using namespace discplane;
using testsupport::S;
using testsupport::Shadow;
using testsupport::V;

namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point t0) { return std::chrono::duration<double>(Clock::now() - t0).count(); }

// Every expansion computed here is kept for the l1 conservation check.
std::vector<Expansion> g_expansions;

Expansion record(const Expansion& e) {
  g_expansions.push_back(e);
  return e;
}

struct Outcome {
  bool pass = true;
  std::ostringstream note;
  void require(bool ok, const std::string& what) {
    if (!ok) {
      if (!pass) note << "; ";
      else note.str("");
      note << what;
      pass = false;
    }
  }
};

Vec3 eigenvector() { return V("1,1+a,1+a+a^2", testsupport::alpha_bindings()); }

Outcome criterion1() {
  Outcome o;
  auto t0 = Clock::now();
  Vec3 v = V("1,sqrt(13),sqrt(17)");
  Thickness t = connecting_thickness(v);
  record(t.trace);
  o.require(t.omega == S("8-sqrt(13)"), "omega is " + t.omega.to_string());
  o.require(t.trace.status.kind == ExpansionStatus::Halted && t.trace.digits.size() == 5,
            "expected a halt after 5 steps, got " + std::to_string(t.trace.digits.size()));
  std::vector<Vec3> expected{V("1,sqrt(13)-1,sqrt(17)-1"), V("1,sqrt(13)-2,sqrt(17)-2"),
                             V("sqrt(13)-3,1,sqrt(17)-3"), V("4-sqrt(13),sqrt(17)-sqrt(13),sqrt(13)-3"),
                             V("sqrt(17)-4,2*sqrt(13)-7,4-sqrt(13)")};
  for (std::size_t n = 1; n <= expected.size(); ++n) {
    bool ok = n < t.trace.iterates.size() && t.trace.iterates[n] == expected[n - 1];
    o.require(ok, "iterate " + std::to_string(n) + " differs");
  }
  double s = seconds_since(t0);
  o.require(s < 1.0, "took " + std::to_string(s) + " s");
  if (o.pass) o.note << "omega = 8-sqrt(13), 5 steps, " << s << " s";
  return o;
}

Outcome criterion2() {
  Outcome o;
  auto t0 = Clock::now();
  Thickness t = connecting_thickness(V("1,root(10,3),pi"));
  record(t.trace);
  o.require(t.trace.status.kind == ExpansionStatus::Halted && t.trace.digits.size() == 19,
            "expected a halt after 19 steps, got " + std::to_string(t.trace.digits.size()));
  Interval diff = (t.omega - S("2*pi-98*root(10,3)+208")).enclose(256);
  bool close = mpfr_cmp_d(diff.lo(), -1e-12) > 0 && mpfr_cmp_d(diff.hi(), 1e-12) < 0;
  o.require(close, "omega is " + t.omega.decimal(20));
  double s = seconds_since(t0);
  o.require(s < 1.0, "took " + std::to_string(s) + " s");
  if (o.pass) o.note << "19 steps, omega = " << t.omega.decimal(20) << ", " << s << " s";
  return o;
}

Outcome criterion3() {
  Outcome o;
  auto t0 = Clock::now();
  auto b = testsupport::alpha_bindings();
  Scalar a = S("a", b);
  Vec3 v = eigenvector();
  // Oracle: a^3 + a^2 + a - 1 = 0 and M3 v = v / a.
  o.require((a * a * a + a * a + a - Scalar(1)).is_zero(), "alpha is not a root of x^3+x^2+x-1");
  o.require(a > S("1/2") && a < S("3/5"), "alpha is outside (1/2, 3/5)");
  Vec3 m3v = fs_matrix(3) * v;
  for (int k = 0; k < 3; ++k) o.require(m3v[k] * a == v[k], "M3 v != v / alpha");
  F3Verdict f = classify_f3(v);
  o.require(f.kind == F3Verdict::InF3 && f.cycle == std::vector<int>{3}, "classification is not InF3 with cycle 3");
  Thickness t = connecting_thickness(v);
  record(t.trace);
  o.require(t.omega == (v[0] + v[1] + v[2]) / Scalar(2), "omega is " + t.omega.to_string());
  double s = seconds_since(t0);
  o.require(s < 1.0, "took " + std::to_string(s) + " s");
  if (o.pass) o.note << "InF3 cycle 3, omega = |v|_1/2, " << s << " s";
  return o;
}

Outcome criterion4() {
  Outcome o;
  auto t0 = Clock::now();
  LemmaSuiteReport r = run_lemma_suite();
  // Frozen image table, keyed by normalized template.
  std::vector<std::pair<Pattern, const reference::ImageRow*>> rows;
  for (const auto& row : reference::kImageTable)
    rows.emplace_back(normalize_translation(testsupport::to_pattern(*row.tmpl)), &row);
  std::size_t cases = 0;
  for (int i = 1; i <= 3; ++i)
    for (const auto& c : r.image_cases[i - 1]) {
      ++cases;
      Pattern q = normalize_translation(l_fs().patterns[c.template_index]);
      auto it = std::find_if(rows.begin(), rows.end(), [&](const auto& row) { return row.first == q; });
      if (it == rows.end()) {
        o.require(false, "template " + std::to_string(c.template_index) + " missing from the frozen table");
        continue;
      }
      Pattern expected = normalize_translation(testsupport::to_pattern(*it->second->images[i - 1]));
      o.require(normalize_translation(c.image) == expected,
                "image of template " + std::to_string(c.template_index) + " under " + std::to_string(i));
      o.require(c.covered, "image of template " + std::to_string(c.template_index) + " under " +
                               std::to_string(i) + " is not covered");
    }
  o.require(cases == 27, std::to_string(cases) + " image cases");
  std::size_t hits = 0;
  for (const auto& f : r.forbidden) hits += f.hits.size();
  o.require(r.forbidden.size() == 20 && r.forbidden_ok(), std::to_string(hits) + " forbidden occurrences");
  std::size_t required = 0, required_ok = 0, optional = 0, optional_ok = 0;
  for (const auto& c : r.annulus) {
    if (c.required) {
      ++required;
      required_ok += c.report.passed();
    } else {
      ++optional;
      optional_ok += c.report.passed();
    }
  }
  o.require(required == required_ok, std::to_string(required - required_ok) + " required annulus cases fail");
  double s = seconds_since(t0);
  o.require(s < 120.0, "took " + std::to_string(s) + " s");
  if (o.pass)
    o.note << "27 image cases, " << r.forbidden.size() << " forbidden scans clean, annulus " << required_ok << "/"
           << required << " required, " << optional_ok << "/" << optional << " others, " << s << " s";
  return o;
}

Outcome criterion5() {
  Outcome o;
  auto t0 = Clock::now();
  const std::vector<std::string> words{"3", "31", "13", "23", "123", "132", "313", "1123", "2233", "3312"};
  const std::size_t n = 10;
  for (const auto& w : words) {
    Vec3 v = periodic_word_vector(parse_word(w));
    record(expand(v, 40));
    for (std::size_t k = 0; k <= n; ++k)
      o.require(check_tn_connected(v, k).connected(), w + ": T_" + std::to_string(k) + " disconnected");
    o.require(check_tn_in_critical_plane(v, n).ok, w + ": T_n leaves the critical plane");
    o.require(check_pn_in_tn(v, n).ok, w + ": P_n not inside T_n");
    bool in_plane = true;
    for (const auto& f : generate_pn(v, n)) in_plane = in_plane && face_in_plane(v, f);
    o.require(in_plane, w + ": P_n has a face outside the stepped plane");
    FillResult fill = grow_until_filled(v, 3, 30);
    o.require(fill.filled, w + ": naive plane not filled at radius 3 by n = 30");
  }
  double s = seconds_since(t0);
  o.require(s < 300.0, "took " + std::to_string(s) + " s");
  if (o.pass) o.note << words.size() << " periodic words, n <= " << n << ", " << s << " s";
  return o;
}

Outcome criterion6() {
  Outcome o;
  auto t0 = Clock::now();
  struct Case {
    Vec3 v;
    std::string name;
    Verdict::Kind kind;
    Verdict::Reason reason;
  };
  std::vector<Case> cases{
      {eigenvector(), "(1,1+a,1+a+a^2)", Verdict::Connected, Verdict::InF3},
      {V("0,1,sqrt(2)"), "(0,1,sqrt(2))", Verdict::Connected, Verdict::ZeroFirstCoordDim2},
      {V("1,2,4"), "(1,2,4)", Verdict::NotConnected, Verdict::ZeroFirstCoordDim1},
      {V("1,1,1"), "(1,1,1)", Verdict::NotConnected, Verdict::RationalDim1},
      {V("1,sqrt(13),sqrt(17)"), "(1,sqrt(13),sqrt(17))", Verdict::NotConnected, Verdict::PositiveNonF3},
  };
  for (const auto& c : cases) {
    record(expand(c.v));
    Verdict d = decide_critical_connectedness(c.v);
    o.require(d.kind == c.kind && d.reason == c.reason, c.name + ": " + d.to_string());
    WindowedCrossCheck x = windowed_cross_check(c.v, d, {6, 10});
    o.require(x.performed && x.consistent, c.name + ": windowed check " + x.note);
  }
  double s = seconds_since(t0);
  o.require(s < 120.0, "took " + std::to_string(s) + " s");
  if (o.pass) o.note << cases.size() << " verdicts consistent with windowed BFS at radii 6 and 10, " << s << " s";
  return o;
}

Outcome criterion7() {
  Outcome o;
  auto t0 = Clock::now();
  // Preimage coordinates are M x plus a letter offset, and M has column sums up to 3.
  const int box = 16;
  std::array<std::map<UnitFace, std::vector<UnitFace>>, 3> inverse;
  for (int i = 1; i <= 3; ++i) {
    DualSubstitution d(fs_substitution(i));
    std::vector<UnitFace> out;
    for (int x = -box; x <= box; ++x)
      for (int y = -box; y <= box; ++y)
        for (int z = -box; z <= box; ++z)
          for (int t = 1; t <= 3; ++t) {
            UnitFace g{{x, y, z}, t};
            out.clear();
            d.apply_face(g, out);
            for (const auto& f : out) inverse[i - 1][f].push_back(g);
          }
  }
  std::mt19937_64 rng(7);
  std::uniform_int_distribution<int> c(-5, 5), t(1, 3);
  for (int k = 0; k < 500; ++k) {
    UnitFace f{{c(rng), c(rng), c(rng)}, t(rng)};
    for (int i = 1; i <= 3; ++i) {
      Pattern pre = dual_preimage(i, f);
      auto it = inverse[i - 1].find(f);
      Pattern brute = it == inverse[i - 1].end() ? Pattern() : Pattern(it->second);
      o.require(pre == brute, "preimage of " + to_string(f) + " under " + std::to_string(i));
      o.require(sigma_fs(i, pre).contains(f), to_string(f) + " not in the image of its preimage");
    }
  }
  double s = seconds_since(t0);
  o.require(s < 30.0, "took " + std::to_string(s) + " s");
  if (o.pass) o.note << "500 faces x 3 substitutions, " << s << " s";
  return o;
}

Outcome criterion8() {
  Outcome o;
  auto t0 = Clock::now();
  struct Slot {
    Scalar x;
    Shadow s;
  };
  auto b = testsupport::alpha_bindings();
  // Each pool lives in one number field so the shadow tracks a single generator.
  std::vector<std::vector<Slot>> base{
      {{S("sqrt(13)"), Shadow::root(13, 2)}, {S("sqrt(17)"), Shadow::root(17, 2)}, {S("3/7"), Shadow::rational(3, 7)}},
      {{S("root(10,3)"), Shadow::root(10, 3)}, {S("-5/2"), Shadow::rational(-5, 2)}},
      {{S("a", b), Shadow::bisect_increasing({-1, 1, 1, 1}, 0.5, 0.6)}, {S("2/3"), Shadow::rational(2, 3)}},
  };
  auto pools = base;
  std::mt19937_64 rng(3);
  std::size_t checked = 0, mismatched = 0;
  for (int k = 0; k < 1000; ++k) {
    auto& pool = pools[k % pools.size()];
    const auto& seed = base[k % base.size()];
    std::uniform_int_distribution<std::size_t> pick(0, pool.size() - 1);
    const Slot& p = pool[pick(rng)];
    const Slot& q = pool[pick(rng)];
    int op = static_cast<int>(rng() % 4);
    if (op == 3 && q.s.straddles_zero()) op = 2;
    Slot r = op == 0   ? Slot{p.x + q.x, p.s + q.s}
             : op == 1 ? Slot{p.x - q.x, p.s - q.s}
             : op == 2 ? Slot{p.x * q.x, p.s * q.s}
                       : Slot{p.x / q.x, p.s / q.s};
    Interval e = r.x.enclose(256);
    ++checked;
    if (mpfr_cmp(e.lo(), r.s.hi()) > 0 || mpfr_cmp(r.s.lo(), e.hi()) > 0) ++mismatched;
    // Keep magnitudes and coefficient heights moderate.
    double m = std::abs(r.s.mid());
    if (m > 1e6 || m < 1e-6 || r.s.width() > 1e-40 * (1 + m) || r.x.to_string().size() > 400)
      r = seed[rng() % seed.size()];
    if (pool.size() < 8)
      pool.push_back(r);
    else
      pool[pick(rng)] = r;
  }
  o.require(mismatched == 0, std::to_string(mismatched) + " of " + std::to_string(checked) + " ops disagree");
  std::size_t steps = 0;
  for (const auto& e : g_expansions)
    for (std::size_t n = 0; n + 1 < e.iterates.size(); ++n) {
      const Vec3& a = e.iterates[n];
      const Vec3& c = e.iterates[n + 1];
      ++steps;
      o.require(c[0] + c[1] + c[2] + Scalar(2) * a[0] == a[0] + a[1] + a[2], "l1 conservation fails");
    }
  double s = seconds_since(t0);
  o.require(s < 30.0, "took " + std::to_string(s) + " s");
  if (o.pass)
    o.note << checked << " ops agree with the 256-bit shadow, l1 conserved over " << steps << " steps in "
           << g_expansions.size() << " expansions, " << s << " s";
  return o;
}

}  // namespace

int main() {
  const std::vector<std::pair<std::string, std::function<Outcome()>>> criteria{
      {"worked example (1,sqrt(13),sqrt(17))", criterion1},
      {"worked example (1,root(10,3),pi)", criterion2},
      {"eigenvector loop", criterion3},
      {"lemma suite", criterion4},
      {"T_n and P_n properties", criterion5},
      {"decision with windowed cross-check", criterion6},
      {"dual substitution round trip", criterion7},
      {"exactness guard", criterion8},
  };
  int failed = 0;
  for (std::size_t k = 0; k < criteria.size(); ++k) {
    Outcome o;
    try {
      o = criteria[k].second();
    } catch (const std::exception& e) {
      o.pass = false;
      o.note.str(std::string("exception: ") + e.what());
    }
    failed += !o.pass;
    std::printf("%s %zu %s: %s\n", o.pass ? "PASS" : "FAIL", k + 1, criteria[k].first.c_str(), o.note.str().c_str());
    std::fflush(stdout);
  }
  return failed == 0 ? 0 : 1;
}
