#include <gtest/gtest.h>

#include "oracles.hpp"
#include "pervpn/module.hpp"
#include "pervpn/objects.hpp"

using namespace pervpn;

TEST(Modules, ProjectiveDimVectors) {
  auto a1 = build_An(1);
  EXPECT_EQ(projective(a1, 0).dims(), (std::vector<int>{2, 1}));
  EXPECT_EQ(projective(a1, 1).dims(), (std::vector<int>{1, 1}));
  EXPECT_EQ(projective(build_An(2), 1).dims(), (std::vector<int>{1, 2, 1}));
}

TEST(Modules, StandardAndString) {
  auto a2 = build_An(2);
  EXPECT_EQ(standard(a2, 2).dims(), (std::vector<int>{0, 1, 1}));
  EXPECT_EQ(string_object(a2, +1, 2, 0).dims(), (std::vector<int>{1, 1, 1}));
}

TEST(Modules, HomBetweenProjectives) {
  auto a1 = build_An(1);
  EXPECT_EQ(hom_space(projective(a1, 1), projective(a1, 0)).size(), 1u);
  EXPECT_EQ(hom_space(projective(a1, 0), projective(a1, 0)).size(), 2u);
}

TEST(Modules, KernelOfCoverOfTopSimpleAtZero) {
  auto a1 = build_An(1);
  auto cover = projective_cover(simple(a1, 0));
  ASSERT_EQ(cover.vertices, std::vector<int>{0});
  auto k = kernel(cover.map).module;
  EXPECT_EQ(isomorphic(k, projective(a1, 1)), Tri::yes);
}

TEST(Modules, ProjectiveInjectiveBelowTop) {
  for (int n = 1; n <= 3; ++n) {
    auto alg = build_An(n);
    for (int k = 0; k < n; ++k) {
      auto p = projective(alg, k);
      EXPECT_EQ(isomorphic(p, injective(alg, k)), Tri::yes) << n << " " << k;
      EXPECT_EQ(isomorphic(top(p).module, simple(alg, k)), Tri::yes);
      EXPECT_EQ(isomorphic(socle(p).module, simple(alg, k)), Tri::yes);
    }
    EXPECT_EQ(isomorphic(projective(alg, n), injective(alg, n)), Tri::no);
  }
}

TEST(Modules, CompositionFactorsMatchCartan) {
  for (int n = 1; n <= 3; ++n) {
    auto alg = build_An(n);
    auto c = alg->cartan_matrix();
    for (int k = 0; k <= n; ++k)
      for (int l = 0; l <= n; ++l) EXPECT_EQ(projective(alg, k).dim(l), c[l][k]);
  }
}

TEST(Modules, StringRecursionMatchesDirectConstruction) {
  for (int n = 1; n <= 4; ++n) {
    auto alg = build_An(n);
    for (int a = 0; a <= n; ++a)
      for (int b = 0; b <= a; ++b)
        for (int sign : {+1, -1}) {
          auto rec = string_object(alg, sign, a, b);
          auto dir = oracle::direct_string(alg, sign, a, b);
          EXPECT_EQ(isomorphic(rec, dir), Tri::yes) << "n=" << n << " sign=" << sign << " a=" << a << " b=" << b;
        }
  }
}

TEST(Modules, NamedObjectsAreIndecomposable) {
  for (int n = 1; n <= 3; ++n) {
    Session s(n);
    for (const auto& t : s.named_objects()) EXPECT_TRUE(is_indecomposable(*s.module(t))) << t.str();
  }
}

TEST(Modules, DecomposeRegularAndSums) {
  auto a2 = build_An(2);
  auto parts = decompose(regular_module(a2));
  ASSERT_EQ(parts.size(), 3u);
  std::vector<int> seen(3, 0);
  for (const auto& p : parts)
    for (int k = 0; k < 3; ++k)
      if (isomorphic(p, projective(a2, k)) == Tri::yes) ++seen[k];
  EXPECT_EQ(seen, (std::vector<int>{1, 1, 1}));
  auto a1 = build_An(1);
  EXPECT_EQ(decompose(direct_sum(projective(a1, 0), simple(a1, 1))).size(), 2u);
  EXPECT_FALSE(is_indecomposable(direct_sum(simple(a1, 0), simple(a1, 0))));
}

TEST(Modules, DualityIsAnInvolution) {
  for (int n = 1; n <= 3; ++n) {
    Session s(n);
    for (const auto& t : s.named_objects()) {
      const auto& m = *s.module(t);
      EXPECT_EQ(isomorphic(dual(dual(m)), m), Tri::yes) << t.str();
    }
    for (int k = 0; k <= n; ++k) {
      EXPECT_EQ(isomorphic(dual(simple(s.algebra(), k)), simple(s.algebra(), k)), Tri::yes);
      EXPECT_EQ(isomorphic(dual(standard(s.algebra(), k)), costandard(s.algebra(), k)), Tri::yes);
    }
  }
}

TEST(Modules, JsonRoundTrip) {
  auto a2 = build_An(2);
  auto m = string_object(a2, -1, 2, 0);
  auto back = Module::from_json(a2, m.to_json());
  EXPECT_EQ(back.dims(), m.dims());
  for (std::size_t i = 0; i < m.actions().size(); ++i) EXPECT_EQ(back.action(i), m.action(i));
}

TEST(Modules, RelationViolationIsRejected) {
  auto a1 = build_An(1);
  // a1 b1 = 0 at vertex 1 fails for the all-ones representation on (1,1)
  std::vector<Matrix> act{Matrix::from_rows({{1}}), Matrix::from_rows({{1}})};
  EXPECT_THROW(Module(a1, {1, 1}, act), std::invalid_argument);
}

TEST(Objects, TagParsing) {
  for (const char* s : {"IC1", "D2", "N0", "P0", "I1", "Z+(2,0)", "Z-(3,1)"})
    EXPECT_EQ(ObjectTag::parse(s).str(), s);
  EXPECT_THROW(ObjectTag::parse("X3"), std::invalid_argument);
}
