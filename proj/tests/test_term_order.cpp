#include <gtest/gtest.h>

#include <random>

#include "rees/term_order.hpp"

using namespace rees;

namespace {

Monomial random_monomial(std::mt19937& rng, const Universe& u, int max_factors) {
  std::uniform_int_distribution<int> var(0, static_cast<int>(u.size()) - 1), count(0, max_factors);
  Monomial m;
  for (int k = count(rng); k > 0; --k) m = m * Monomial::variable(u, static_cast<VarId>(var(rng)));
  return m;
}

Monomial mono(const Universe& u, std::initializer_list<VarRef> vs) {
  Monomial m;
  for (const auto& v : vs) m = m * Monomial::variable(u, v);
  return m;
}

template <class O>
void check_monomial_order(const O& order, const Universe& u, unsigned seed) {
  std::mt19937 rng(seed);
  for (int trial = 0; trial < 400; ++trial) {
    const Monomial a = random_monomial(rng, u, 3), b = random_monomial(rng, u, 3), c = random_monomial(rng, u, 3);
    const auto ab = order.compare(a, b);
    EXPECT_EQ(ab == 0, a == b);
    EXPECT_EQ(order.compare(b, a), 0 <=> ab);
    if (ab > 0 && order.compare(b, c) > 0) EXPECT_TRUE(order.compare(a, c) > 0);
    EXPECT_EQ(order.compare(a * c, b * c), ab);
  }
}

}  // namespace

TEST(ScrollOrder, IsMonomialOrderForAllSmallScrolls) {
  unsigned seed = 1;
  for (const auto& s : partitions_up_to(7)) {
    const ScrollRing r(s);
    check_monomial_order(OrderContext(r), *r.universe(), seed++);
  }
}

TEST(ScrollOrder, VariableChain) {
  const ScrollRing r(parse_partition("1,2,2,3"));
  const OrderContext ctx(r);
  std::string got;
  for (VarId v : ctx.descending_variables()) {
    if (r.universe()->var(v).kind != VarKind::X) break;
    got += r.universe()->var(v).name() + " ";
  }
  // x_{1,0} > ... > x_{d,0}, then the second row of M from left to right
  std::string want;
  for (int i = 1; i <= r.d(); ++i) want += VarRef::x(i, 0).name() + " ";
  for (int a = 1; a <= r.c(); ++a) want += VarRef::x(r.mu(2, a)).name() + " ";
  EXPECT_EQ(got, want);
  EXPECT_EQ(ctx.variable_rank(VarRef::t(1, 2)), ctx.variable_rank(VarRef::t(1, 3)) + 1);
}

TEST(ScrollOrder, TopRowHasNoTerminals) {
  for (const auto& s : partitions_up_to(9)) {
    const ScrollRing r(s);
    for (int a = 1; a <= r.c(); ++a)
      EXPECT_NE(r.mu(1, a).row, s.n(r.mu(1, a).block)) << "top row entry is block-terminal";
  }
}

TEST(ScrollOrder, Gradings) {
  const ScrollRing r(parse_partition("2,3"));
  const OrderContext ctx(r);
  const auto& u = *r.universe();
  const VarId t = u.id(VarRef::t(2, 4));
  std::vector<int> want(static_cast<std::size_t>(r.c() + r.d()), 0);
  want[static_cast<std::size_t>(2 + r.d() - 1)] = 1;
  want[static_cast<std::size_t>(4 + r.d() - 1)] = 1;
  EXPECT_EQ(ctx.mdeg(t), want);
  EXPECT_EQ(ctx.sdeg(t), r.c() - 2);
  EXPECT_EQ(ctx.sdeg(u.id(VarRef::x(1, 0))), 0);
  // mdeg of mu_{2,g} is e_{g+d}
  for (int g = 1; g <= r.c(); ++g) {
    std::vector<int> e(static_cast<std::size_t>(r.c() + r.d()), 0);
    e[static_cast<std::size_t>(g + r.d() - 1)] = 1;
    EXPECT_EQ(ctx.mdeg(u.id(VarRef::x(r.mu(2, g)))), e);
  }
}

TEST(ScrollOrder, PluckerLeadingTerm) {
  const ScrollRing r(parse_partition("5"));
  const OrderContext ctx(r);
  const auto& u = r.universe();
  auto T = [&](int a, int b) { return QPoly::variable(u, VarRef::t(a, b)); };
  const QPoly p = T(1, 2) * T(3, 4) - T(1, 3) * T(2, 4) + T(1, 4) * T(2, 3);
  EXPECT_EQ(leading_monomial(ctx, p), mono(*u, {VarRef::t(1, 3), VarRef::t(2, 4)}));
  const auto terms = sorted_terms(ctx, p);
  ASSERT_EQ(terms.size(), 3u);
  EXPECT_EQ(terms[1].first, mono(*u, {VarRef::t(1, 4), VarRef::t(2, 3)}));
  EXPECT_THROW(leading_term(ctx, QPoly(u)), Error);
}

TEST(PlainOrders, AreMonomialOrders) {
  const auto u = Universe::scroll(parse_partition("2,2"));
  check_monomial_order(GradedLex{}, *u, 99);
  check_monomial_order(GradedRevLex{}, *u, 98);
  std::vector<VarId> desc;
  for (VarId v = static_cast<VarId>(u->size()); v-- > 0;) desc.push_back(v);
  check_monomial_order(GradedLex(desc), *u, 97);
  check_monomial_order(GradedRevLex(desc), *u, 96);
}

TEST(PlainOrders, RevLexDiffersFromLex) {
  // x0*x2^... in three variables: x1^2 vs x0*x2
  const Universe u({VarRef::x(1, 0), VarRef::x(1, 1), VarRef::x(1, 2)});
  const Monomial a = Monomial::variable(u, 1, 2), b = Monomial::variable(u, 0) * Monomial::variable(u, 2);
  EXPECT_TRUE(GradedLex{}.compare(a, b) < 0);
  EXPECT_TRUE(GradedRevLex{}.compare(a, b) > 0);
}
