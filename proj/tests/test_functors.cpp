#include <gtest/gtest.h>

#include "pervpn/functors.hpp"
#include "pervpn/objects.hpp"

using namespace pervpn;

namespace {

IsoStatus iso(const ProjComplex& a, const ProjComplex& b) {
  auto r = complexes_iso(a, b, 1);
  if (r.certificate) EXPECT_TRUE(verify_certificate(*r.certificate));
  return r.status;
}

}  // namespace

TEST(Serre, ProjectivesGoToInjectives) {
  for (int n = 1; n <= 3; ++n) {
    Session s(n);
    for (int k = 0; k <= n; ++k)
      EXPECT_EQ(iso(serre(stalk(s.algebra(), {k})), *s.complex(inj(k))), IsoStatus::certified) << n << " " << k;
  }
}

TEST(Serre, InverseIsInverse) {
  for (int n = 1; n <= 2; ++n) {
    Session s(n);
    for (const auto& t : s.census()) {
      const auto& x = *s.complex(t);
      EXPECT_EQ(iso(serre(inverse_serre(x)), x), IsoStatus::certified) << t.str();
      EXPECT_EQ(iso(inverse_serre(serre(x)), x), IsoStatus::certified) << t.str();
    }
  }
}

TEST(Serre, CommutesWithShift) {
  Session s(2);
  const auto& x = *s.complex(zplus(2, 0));
  EXPECT_EQ(iso(serre(shift(x, 3)), shift(serre(x), 3)), IsoStatus::certified);
}

TEST(Serre, DualityDimensions) {
  Session s(2);
  for (const auto& x : s.census())
    for (const auto& y : s.census()) {
      auto c = serre_duality_check(s.complex(x), s.complex(y));
      EXPECT_TRUE(c.ok) << x.str() << " " << y.str();
    }
}

TEST(Serre, WrongShiftSignIsDetected) {
  // Hom(X, Y[r]) against Hom(Y, S X[r]) instead of [-r] must disagree somewhere
  Session s(1);
  auto x = s.complex(ic(1));
  auto sx = std::make_shared<const ProjComplex>(serre(*x));
  auto lhs = hom_dims(x, x, -2, 2);
  auto rhs = hom_dims(x, sx, -2, 2);
  EXPECT_NE(lhs, rhs);
}

TEST(PTwist, TopSimpleShiftsDown) {
  for (int n = 1; n <= 3; ++n) {
    Session s(n);
    auto ctx = PTwistContext::for_top_simple(s.algebra());
    auto e = s.complex(ic(n));
    PTwistTrace trace;
    auto tw = p_twist(ctx, e, &trace);
    EXPECT_GT(trace.hom_dim, 0);
    EXPECT_EQ(iso(tw, shift(*e, -2 * n)), IsoStatus::certified) << n;
  }
}

TEST(PTwist, InjectivesGoToProjectives) {
  for (int n = 1; n <= 3; ++n) {
    Session s(n);
    auto ctx = PTwistContext::for_top_simple(s.algebra());
    for (int k = 0; k <= n; ++k)
      EXPECT_EQ(iso(p_twist(ctx, s.complex(inj(k))), stalk(s.algebra(), {k})), IsoStatus::certified) << n << " " << k;
  }
}

TEST(PTwist, OrthogonalObjectsAreFixed) {
  // Hom(IC_n, P_k[*]) = 0 for k < n, so the twist is the identity there
  Session s(2);
  auto ctx = PTwistContext::for_top_simple(s.algebra());
  for (int d : hom_dims(ctx.e(), s.complex(proj(0)), -4, 4)) EXPECT_EQ(d, 0);
  EXPECT_EQ(iso(p_twist(ctx, s.complex(proj(0))), *s.complex(proj(0))), IsoStatus::certified);
}

TEST(PTwist, AgreesWithInverseSerre) {
  for (int n = 1; n <= 2; ++n) {
    Session s(n);
    auto ctx = PTwistContext::for_top_simple(s.algebra());
    for (const auto& t : s.census())
      EXPECT_EQ(iso(p_twist(ctx, s.complex(t)), inverse_serre(*s.complex(t))), IsoStatus::certified) << t.str();
  }
}

TEST(PTwist, RejectsNonClosedGenerator) {
  Session s(1);
  auto e = s.complex(ic(1));
  EXPECT_THROW(PTwistContext(e, zero_map(e, e, 1), 1), std::invalid_argument);
}

TEST(CalabiYau, TopSimpleAndProjectives) {
  for (int n = 1; n <= 3; ++n) {
    Session s(n);
    auto top = cy_check(s.complex(ic(n)), 2 * n);
    EXPECT_EQ(top.status, CyStatus::yes) << n;
    EXPECT_EQ(top.route, "pairing");
    for (int k = 0; k < n; ++k) {
      auto p = cy_check(s.complex(proj(k)), 0);
      EXPECT_EQ(p.status, CyStatus::yes);
      EXPECT_EQ(p.route, "serre");  // End(P_k) is two-dimensional
    }
    for (int k = 0; k < n; ++k) EXPECT_EQ(cy_check(s.complex(ic(k)), 2 * k).status, CyStatus::no) << n << " " << k;
    EXPECT_EQ(cy_check(s.complex(delta(n)), 0).status, CyStatus::no);
  }
}
