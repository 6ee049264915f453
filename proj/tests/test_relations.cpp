#include <gtest/gtest.h>

#include <algorithm>

#include "rees/relations.hpp"
#include "rees/term_order.hpp"

using namespace rees;

namespace {

long choose(int n, int k) {
  if (k < 0 || k > n) return 0;
  long r = 1;
  for (int i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

}  // namespace

TEST(Relations, QExample) {
  const ScrollRing r(parse_partition("1,2,2,3"));
  EXPECT_EQ(to_text(gen_Q(r, 1, 2, 3, 4)),
            "T[1,2]*T[4,5] + T[1,3]*T[5,6] - T[1,4]*T[4,6] - T[2,3]*T[5,7] + T[2,4]*T[4,7] - T[3,4]*T[6,7]");
}

TEST(Relations, LExample) {
  const ScrollRing r(parse_partition("1,2,2,3"));
  EXPECT_EQ(to_text(gen_L(r, 1, 2, 3)), "x[2,0]*T[2,3] - x[3,0]*T[1,3] + x[4,0]*T[1,2]");
}

TEST(Relations, FamilySizes) {
  for (const auto& s : partitions_up_to(9)) {
    const ScrollRing r(s);
    const auto g = generators<Rational>(r, Target::Rees);
    EXPECT_EQ(static_cast<long>(g.count(Family::P)), choose(r.c(), 4));
    EXPECT_EQ(static_cast<long>(g.count(Family::Q)), choose(r.c_minus_d(), 4));
    EXPECT_EQ(static_cast<long>(g.count(Family::L)), choose(r.c(), 3));
    EXPECT_EQ(static_cast<long>(g.count(Family::M)), choose(r.c(), 3));
    const auto f = generators<Rational>(r, Target::Fiber);
    EXPECT_EQ(f.items.size(), g.count(Family::P) + g.count(Family::Q));
  }
}

TEST(Relations, CanonicalOrdering) {
  const ScrollRing r(parse_partition("2,3,3"));
  const auto g = generators<Rational>(r, Target::Rees);
  auto key = [](const Generator<Rational>& x) {
    const int f = x.family == Family::P ? 0 : x.family == Family::Q ? 1 : x.family == Family::L ? 2 : 3;
    return std::pair{f, x.indices};
  };
  EXPECT_TRUE(std::is_sorted(g.items.begin(), g.items.end(), [&](const auto& a, const auto& b) { return key(a) < key(b); }));
}

TEST(Relations, KernelMembership) {
  for (const auto& s : partitions_up_to(8)) {
    const ScrollRing r(s);
    for (const auto& g : generators<Rational>(r, Target::Rees).items)
      EXPECT_TRUE(pi_substitute(r, g.poly).is_zero()) << s.to_string() << " " << g.label();
  }
}

TEST(Relations, QWithReversedBarsVanishes) {
  // Q generators where bar(gamma) > bar(delta) go through the signed T
  int seen = 0;
  for (const auto& s : partitions_up_to(10)) {
    const ScrollRing r(s);
    for (const auto& g : family<Rational>(r, Family::Q)) {
      if (r.bar(g.indices[2]) < r.bar(g.indices[3])) continue;
      ++seen;
      EXPECT_TRUE(pi_substitute(r, g.poly).is_zero()) << s.to_string() << " " << g.label();
    }
  }
  EXPECT_GT(seen, 0);
}

TEST(Relations, Antisymmetry) {
  const ScrollRing r(parse_partition("1,2,3,3"));
  for (Family f : {Family::L, Family::M, Family::P, Family::Q}) {
    const int k = (f == Family::L || f == Family::M) ? 3 : 4;
    const int hi = f == Family::Q ? r.c_minus_d() : r.c();
    for (const auto& idx : subsets(1, hi, k)) {
      const QPoly base = signed_generator<Rational>(r, f, idx);
      std::vector<int> p = idx;
      std::swap(p[0], p[1]);
      EXPECT_EQ(signed_generator<Rational>(r, f, p), -base);
      std::rotate(p.begin(), p.begin() + 1, p.end());
      EXPECT_EQ(signed_generator<Rational>(r, f, p), k == 3 ? -base : base);
      std::vector<int> rep = idx;
      rep[1] = rep[0];
      EXPECT_TRUE(signed_generator<Rational>(r, f, rep).is_zero());
    }
  }
}

TEST(Relations, Bidegrees) {
  const ScrollRing r(parse_partition("1,1,3"));
  for (const auto& g : generators<Rational>(r, Target::Rees).items) {
    const auto want = (g.family == Family::L || g.family == Family::M) ? std::pair{1, 1} : std::pair{0, 2};
    EXPECT_EQ(g.poly.bidegrees(), (std::vector<std::pair<int, int>>{want})) << g.label();
  }
}

TEST(Relations, BadIndices) {
  const ScrollRing r(parse_partition("1,2,2,3"));
  auto code = [](auto&& fn) {
    try {
      fn();
    } catch (const Error& e) {
      return e.code();
    }
    return Errc::Overflow;
  };
  EXPECT_EQ(code([&] { gen_L(r, 2, 1, 3); }), Errc::BadIndices);
  EXPECT_EQ(code([&] { gen_M(r, 1, 2, 9); }), Errc::BadIndices);
  EXPECT_EQ(code([&] { gen_P(r, 1, 1, 2, 3); }), Errc::BadIndices);
  EXPECT_EQ(code([&] { gen_Q(r, 1, 2, 3, 5); }), Errc::BadIndices);
  EXPECT_EQ(code([&] { signed_generator<Rational>(r, Family::L, {1, 2}); }), Errc::BadIndices);
}

TEST(Relations, SignedT) {
  const auto u = Universe::scroll(parse_partition("3"));
  EXPECT_EQ(signed_t_poly<Rational>(u, 3, 1), -QPoly::variable(u, VarRef::t(1, 3)));
  EXPECT_TRUE(signed_t_poly<Rational>(u, 2, 2).is_zero());
}

TEST(Relations, XPresentationMatchesXSideRelations) {
  for (const auto& s : partitions_up_to(8)) {
    const ScrollRing r(s);
    const auto xs = to_x_presentation(r, generators<Rational>(r, Target::Rees));
    EXPECT_EQ(xs.presentation, Presentation::X);
    for (const auto& g : xs.items) {
      EXPECT_EQ(g.poly, x_relation<Rational>(r, g.family, g.indices)) << s.to_string() << " " << g.label();
      EXPECT_TRUE(pi_substitute(r, g.poly).is_zero());
    }
  }
}

TEST(Relations, XSideQRejectsTerminalColumns) {
  const ScrollRing r(parse_partition("1,5"));
  // X column 1 is the whole first block, hence block-terminal
  EXPECT_THROW(x_relation<Rational>(r, Family::Q, {1, 2, 3, 4}), Error);
  EXPECT_NO_THROW(x_relation<Rational>(r, Family::Q, {2, 3, 4, 5}));
}

TEST(Relations, ModPAgreesWithRationals) {
  const ScrollRing r(parse_partition("2,2,3"));
  const auto q = generators<Rational>(r, Target::Rees);
  const auto p = generators<Zp>(r, Target::Rees);
  ASSERT_EQ(q.items.size(), p.items.size());
  for (std::size_t k = 0; k < q.items.size(); ++k) {
    EXPECT_EQ(q.items[k].poly.size(), p.items[k].poly.size());
    EXPECT_TRUE(pi_substitute(r, p.items[k].poly).is_zero());
  }
}
