#include <gtest/gtest.h>

#include "discplane/decision.hpp"
#include "discplane/errors.hpp"
#include "test_support.hpp"

using namespace discplane;
using testsupport::S;
using testsupport::V;

namespace {

Vec3 eigenvector() { return V("1,1+a,1+a+a^2", testsupport::alpha_bindings()); }

// Smallest omega (on a 1/100 grid) at which the windowed plane is connected.
double windowed_threshold(const Vec3& v, double lo, double hi) {
  for (int k = static_cast<int>(lo * 100); k <= static_cast<int>(hi * 100); ++k) {
    Scalar w(Rational(k, 100));
    if (w.sign() <= 0) continue;
    if (is_connected_windowed(PlaneSpec{v, w}, {5, 8}).kind == WindowedConnectivity::ConnectedAtAll)
      return k / 100.0;
  }
  return -1;
}

}  // namespace

TEST(Decide, Connected) {
  Verdict a = decide_critical_connectedness(eigenvector());
  EXPECT_EQ(a.kind, Verdict::Connected);
  EXPECT_EQ(a.reason, Verdict::InF3);
  EXPECT_EQ(*a.omega, eigenvector().norm1() / Scalar(2));
  Verdict b = decide_critical_connectedness(V("0,1,sqrt(2)"));
  EXPECT_EQ(b.kind, Verdict::Connected);
  EXPECT_EQ(b.reason, Verdict::ZeroFirstCoordDim2);
  EXPECT_EQ(b.step, 0u);
  EXPECT_EQ(a.exit_code(), 0);
}

TEST(Decide, NotConnected) {
  Verdict a = decide_critical_connectedness(V("1,2,4"));
  EXPECT_EQ(a.kind, Verdict::NotConnected);
  EXPECT_EQ(a.reason, Verdict::ZeroFirstCoordDim1);
  EXPECT_EQ(a.step, 2u);
  EXPECT_EQ(*a.omega, S("4"));
  EXPECT_EQ(*a.stage_omega, S("3"));
  Verdict b = decide_critical_connectedness(V("1,1,1"));
  EXPECT_EQ(b.reason, Verdict::RationalDim1);
  EXPECT_EQ(*b.omega, S("1"));
  Verdict c = decide_critical_connectedness(V("1,sqrt(13),sqrt(17)"));
  EXPECT_EQ(c.kind, Verdict::NotConnected);
  EXPECT_EQ(c.reason, Verdict::PositiveNonF3);
  EXPECT_EQ(c.step, 5u);
  Verdict d = decide_critical_connectedness(V("1,root(10,3),pi"));
  EXPECT_EQ(d.reason, Verdict::PositiveNonF3);
  EXPECT_EQ(d.step, 19u);
  Verdict e = decide_critical_connectedness(V("0,0,1"));
  EXPECT_EQ(e.reason, Verdict::RationalDim1);
  EXPECT_EQ(*e.omega, S("0"));
  EXPECT_EQ(c.exit_code(), 1);
}

TEST(Decide, UnknownOnBudget) {
  Vec3 v = eigenvector();
  Scalar pi = S("pi");
  Verdict u = decide_critical_connectedness(Vec3(v[0] * pi, v[1] * pi, v[2] * pi), 20);
  EXPECT_EQ(u.kind, Verdict::Unknown);
  EXPECT_EQ(u.exit_code(), 2);
}

TEST(Decide, Preconditions) {
  EXPECT_THROW(decide_critical_connectedness(V("2,1,3")), NotSorted);
  EXPECT_THROW(decide_critical_connectedness(V("0,0,0")), ZeroVector);
}

TEST(Decide, CrossCheckedByWindows) {
  for (const char* s : {"0,1,sqrt(2)", "1,2,4", "1,1,1", "1,sqrt(13),sqrt(17)", "1,root(10,3),pi", "0,0,1"}) {
    Vec3 v = V(s);
    Verdict verdict = decide_critical_connectedness(v);
    auto cc = windowed_cross_check(v, verdict);
    EXPECT_TRUE(cc.consistent) << s << ": " << cc.note;
  }
  auto e = windowed_cross_check(eigenvector(), decide_critical_connectedness(eigenvector()));
  EXPECT_TRUE(e.consistent) << e.note;
}

TEST(Decide, OmegaMatchesWindowedThreshold) {
  // The windowed plane disconnects just below Omega and connects at Omega.
  for (const char* s : {"1,2,4", "2,3,7", "0,2,3"}) {
    Vec3 v = V(s);
    Verdict verdict = decide_critical_connectedness(v);
    double omega = std::stod(verdict.omega->decimal(10));
    double t = windowed_threshold(v, omega - 0.3, omega + 0.3);
    EXPECT_NEAR(t, omega + 0.01, 0.011) << s;
  }
}

TEST(Decide, ToString) {
  EXPECT_EQ(decide_critical_connectedness(V("1,2,4")).to_string(), "NotConnected(ZeroFirstCoordDim1(2))");
  EXPECT_EQ(to_string(Verdict::InF3), "InF3");
}
