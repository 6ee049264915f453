#include <gtest/gtest.h>

#include <set>

#include "rees/complex.hpp"

using namespace rees;

namespace {

// words with n x's and k y's whose every prefix has #y - #x < m
mpz_class trapezoid_paths(long m, long n, long k) {
  std::vector<std::vector<mpz_class>> w(static_cast<std::size_t>(n + 1), std::vector<mpz_class>(static_cast<std::size_t>(k + 1), 0));
  w[0][0] = 1;
  for (long i = 0; i <= n; ++i)
    for (long j = 0; j <= k; ++j) {
      if (i == 0 && j == 0) continue;
      if (j - i >= m) continue;
      mpz_class v = 0;
      if (i > 0) v += w[static_cast<std::size_t>(i - 1)][static_cast<std::size_t>(j)];
      if (j > 0) v += w[static_cast<std::size_t>(i)][static_cast<std::size_t>(j - 1)];
      w[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] = v;
    }
  return w[static_cast<std::size_t>(n)][static_cast<std::size_t>(k)];
}

bool noncrossing(const Face& f) {
  for (std::size_t i = 0; i < f.size(); ++i)
    for (std::size_t j = i + 1; j < f.size(); ++j)
      if (crossing(f[i], f[j])) return false;
  return true;
}

Face face_of(std::initializer_list<std::pair<int, int>> ivs) {
  Face f;
  for (auto [a, b] : ivs) f.push_back(make_interval(a, b));
  return canonical_face(f);
}

}  // namespace

TEST(Complex, Intervals) {
  EXPECT_TRUE(crossing({1, 3}, {2, 4}));
  EXPECT_FALSE(crossing({1, 4}, {2, 3}));
  EXPECT_FALSE(crossing({1, 2}, {2, 3}));
  EXPECT_FALSE(crossing({1, 2}, {3, 4}));
  EXPECT_THROW(make_interval(3, 3), Error);
}

TEST(Complex, NonFacesMatchLeadingMonomialShapes) {
  const ScrollRing r(parse_partition("1,2,2,3"));
  const NonFaces nf = minimal_nonfaces(r);
  EXPECT_EQ(nf.dagger.size(), 70u);  // one crossing pair per 4-subset of [8]
  ASSERT_EQ(nf.ddagger.size(), 1u);  // one per 4-subset of [c-d]
  EXPECT_EQ(nf.ddagger[0], (IntervalPair{{1, 2}, {4, 5}}));
}

TEST(Complex, SmallCounts) {
  EXPECT_EQ(facets_clique(ScrollRing(parse_partition("5"))).size(), 10u);
  EXPECT_EQ(facets_clique(ScrollRing(parse_partition("2,4"))).size(), 28u);
  EXPECT_EQ(facet_count_formula(parse_partition("2,4")), 28);
  EXPECT_EQ(facet_count_formula(parse_partition("5")), 10);
}

TEST(Complex, CatalanNumbers) {
  const std::vector<long> want{1, 1, 2, 5, 14, 42, 132, 429, 1430};
  for (long n = 0; n < static_cast<long>(want.size()); ++n) EXPECT_EQ(catalan(n), want[static_cast<std::size_t>(n)]);
}

TEST(Complex, GrassmannCountsAreCatalan) {
  for (const auto& s : partitions_up_to(10)) {
    if (!s.grassmann() || s.c() < 2) continue;
    const ScrollRing r(s);
    EXPECT_EQ(mpz_class(static_cast<unsigned long>(facets_clique(r).size())), catalan(s.c() - 2)) << s.to_string();
  }
}

TEST(Complex, CliqueEqualsTreeUpToTen) {
  for (const auto& s : partitions_up_to(10)) {
    if (s.c() < 2) continue;
    const ScrollRing r(s);
    const auto clique = facets_clique(r);
    const auto tree = facets_tree(r);
    EXPECT_EQ(clique, tree) << s.to_string();
    EXPECT_EQ(mpz_class(static_cast<unsigned long>(tree.size())), facet_count_formula(s)) << s.to_string();
    const std::size_t size = s.grassmann() ? static_cast<std::size_t>(2 * s.c() - 3) : static_cast<std::size_t>(s.c() + s.d());
    for (const Face& f : tree) {
      EXPECT_EQ(f.size(), size);
      EXPECT_TRUE(noncrossing(f));
    }
  }
}

TEST(Complex, FacetsAreMaximalFaces) {
  const ScrollRing r(parse_partition("1,2,4"));
  for (const Face& f : facets_tree(r)) {
    EXPECT_TRUE(is_face(r, f));
    EXPECT_TRUE(is_facet(r, f));
    Face smaller(f.begin() + 1, f.end());
    EXPECT_TRUE(is_face(r, smaller));
    EXPECT_FALSE(is_facet(r, smaller));
  }
}

TEST(Complex, ExampleFacets) {
  const Face grass = face_of({{1, 2}, {2, 3}, {3, 4}, {4, 5}, {5, 6}, {6, 7}, {7, 8}, {8, 9},
                              {2, 4}, {5, 7}, {1, 4}, {5, 8}, {1, 5}, {5, 9}, {1, 9}});
  EXPECT_TRUE(is_facet(ScrollRing(parse_partition("1,1,1,2,2,2")), grass));

  const ScrollRing r(parse_partition("2,2,4,4"));
  const Face f = face_of({{2, 3}, {3, 4}, {4, 5}, {5, 6}, {10, 11}, {11, 12}, {1, 3}, {5, 7},
                          {9, 11}, {1, 4}, {5, 8}, {8, 11}, {1, 5}, {8, 12}, {5, 12}, {1, 12}});
  EXPECT_EQ(f.size(), 16u);
  EXPECT_TRUE(is_facet(r, f));
  // its leftmost unit is (2,3), so it comes from the alpha = 2 coloring
  const auto part = colored_trees(r.c(), facet_coloring(r, 2));
  EXPECT_NE(std::find(part.begin(), part.end(), f), part.end());
}

TEST(Complex, FacetCountTwentyTwoFourFour) {
  const ScrollRing r(parse_partition("2,2,4,4"));
  EXPECT_EQ(facet_count_formula(r.spec()), 20696);
  EXPECT_EQ(facets_tree(r).size(), 20696u);
}

TEST(Complex, CliqueCap) {
  const ScrollRing r(parse_partition("13"));
  try {
    facets_clique(r);
    ADD_FAILURE();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), Errc::BoundExceeded);
  }
  EXPECT_THROW(facets_clique(ScrollRing(parse_partition("6")), {12, 3}), Error);
}

TEST(Complex, TrapezoidMatchesPathCount) {
  for (long m = 1; m <= 6; ++m)
    for (long n = 0; n <= 8; ++n)
      for (long k = 0; k <= 12; ++k) EXPECT_EQ(catalan_trapezoid(m, n, k), trapezoid_paths(m, n, k)) << m << " " << n << " " << k;
}

TEST(Complex, SigmaCountsExhaustive) {
  int signatures = 0;
  for (int total = 1; total <= 9; ++total)
    for (int a = 0; a <= total; ++a)
      for (int b1 = 1; a + b1 <= total; ++b1)
        for (int g = 0; a + b1 + g <= total; ++g) {
          const int b2 = total - a - b1 - g;
          if (g == 0 && b2 != 0) continue;
          ++signatures;
          EXPECT_EQ(mpz_class(static_cast<unsigned long>(sigma_count(a, b1, g, b2))), sigma_count_formula(a, b1, g, b2))
              << a << " " << b1 << " " << g << " " << b2;
        }
  EXPECT_GT(signatures, 100);
}

TEST(Complex, SigmaLatticePaths) {
  for (int a = 0; a <= 5; ++a)
    for (int g = 0; g <= 5; ++g) EXPECT_EQ(mpz_class(static_cast<unsigned long>(sigma_count(a, 1, g, 0))), binomial(a + g, a));
}

TEST(Complex, SigmaRejectsBadSignatures) {
  EXPECT_THROW(sigma_enumerate(1, 0, 1, 1), Error);
  EXPECT_THROW(sigma_enumerate(1, 1, 0, 2), Error);
  EXPECT_THROW(sigma_enumerate(-1, 1, 1, 1), Error);
}
