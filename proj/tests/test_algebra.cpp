#include <gtest/gtest.h>

#include <random>

#include "hilbcount/algebra.hpp"
#include "hilbcount/errors.hpp"

using namespace hilbcount;

namespace {

Monomial mono(std::vector<Exponent> e) { return Monomial(std::move(e)); }

Monomial random_monomial(std::mt19937_64& rng, std::size_t n, Exponent max_exp) {
  std::uniform_int_distribution<Exponent> d(0, max_exp);
  std::vector<Exponent> e(n);
  for (auto& x : e) x = d(rng);
  return Monomial(std::move(e));
}

std::vector<TermOrder> all_orders() {
  return {TermOrder::lex(), TermOrder::graded_lex(), TermOrder::graded_rev_lex(),
          TermOrder::block(2, OrderKind::Lex, OrderKind::Lex),
          TermOrder::block(1, OrderKind::GradedLex, OrderKind::GradedRevLex)};
}

}  // namespace

TEST(VariableSet, RejectsDuplicates) {
  EXPECT_THROW(VariableSet({"x", "y", "x"}), InputError);
  auto v = VariableSet::indexed("y", 3);
  ASSERT_EQ(v.size(), 3u);
  EXPECT_EQ(v.name(2), "y3");
  EXPECT_EQ(v.index_of("y2"), 1u);
  EXPECT_FALSE(v.index_of("z").has_value());
  auto w = VariableSet({"t"}).concat(v);
  EXPECT_EQ(w.name(0), "t");
  EXPECT_EQ(w.suffix(1), v);
}

TEST(Compare, Examples) {
  auto x1 = mono({1, 0}), x2 = mono({0, 1});
  EXPECT_EQ(compare(TermOrder::lex(), x1, x2), std::strong_ordering::greater);
  EXPECT_EQ(compare(TermOrder::graded_lex(), mono({0, 3}), mono({2, 0})), std::strong_ordering::greater);
  for (const auto& o : all_orders()) EXPECT_EQ(compare(o, mono({1, 2, 3}), mono({1, 2, 3})), std::strong_ordering::equal);
  EXPECT_THROW(compare(TermOrder::lex(), mono({1}), mono({1, 0})), ContractError);
}

TEST(Compare, RevLexBreaksTiesOnLastVariable) {
  // x1*x3 vs x2^2: same degree; grevlex makes the one with the smaller last
  // exponent bigger, grlex compares x1 first.
  auto a = mono({1, 0, 1}), b = mono({0, 2, 0});
  EXPECT_EQ(compare(TermOrder::graded_lex(), a, b), std::strong_ordering::greater);
  EXPECT_EQ(compare(TermOrder::graded_rev_lex(), a, b), std::strong_ordering::less);
}

TEST(Compare, OrderAxiomsOnRandomTriples) {
  std::mt19937_64 rng(20240611);
  for (const auto& order : all_orders()) {
    for (int trial = 0; trial < 1000; ++trial) {
      auto a = random_monomial(rng, 4, 3), b = random_monomial(rng, 4, 3), c = random_monomial(rng, 4, 3);
      auto ab = compare(order, a, b), ba = compare(order, b, a);
      ASSERT_EQ(ab, 0 <=> (ba <=> 0)) << order.describe();
      if (ab == 0) ASSERT_EQ(a, b);
      if (order.less(a, b) && order.less(b, c)) ASSERT_TRUE(order.less(a, c));
      ASSERT_EQ(compare(order, multiply(a, c), multiply(b, c)), ab) << order.describe();
      ASSERT_FALSE(order.less(a, Monomial(4)));
    }
  }
}

TEST(Compare, BlockOrderEliminatesFront) {
  std::mt19937_64 rng(7);
  auto order = TermOrder::block(2, OrderKind::Lex, OrderKind::GradedLex);
  EXPECT_TRUE(order.eliminates(2));
  EXPECT_FALSE(order.eliminates(3));
  for (int trial = 0; trial < 1000; ++trial) {
    auto m = random_monomial(rng, 5, 3);
    if (m[0] == 0 && m[1] == 0) m = m.with(trial % 2, 1);
    auto free = random_monomial(rng, 5, 6).with(0, 0).with(1, 0);
    ASSERT_EQ(compare(order, m, free), std::strong_ordering::greater);
  }
  EXPECT_EQ(order.restricted_after(2), TermOrder::graded_lex());
}

TEST(MonomialOps, Examples) {
  EXPECT_EQ(lcm(mono({2, 1}), mono({1, 3})), mono({2, 3}));
  EXPECT_EQ(gcd(mono({2, 1}), mono({1, 3})), mono({1, 1}));
  EXPECT_TRUE(divides(mono({1, 0}), mono({1, 1})));
  EXPECT_FALSE(divides(mono({1, 1}), mono({1, 0})));
  EXPECT_EQ(divide(mono({1, 2}), mono({0, 1})), mono({1, 1}));
  EXPECT_THROW(divide(mono({1, 0}), mono({0, 1})), ContractError);
  EXPECT_TRUE(coprime(mono({2, 0, 1}), mono({0, 3, 0})));
  EXPECT_EQ(mono({2, 0, 3}).degree(), 5u);
  EXPECT_EQ(mono({2, 0, 3}).support(), (std::vector<std::size_t>{0, 2}));
}

TEST(MonomialOps, OverflowThrows) {
  auto big = mono({std::numeric_limits<Exponent>::max(), 0});
  EXPECT_THROW(multiply(big, mono({1, 0})), std::overflow_error);
}

TEST(MonomialOps, LcmGcdProperties) {
  std::mt19937_64 rng(99);
  for (int trial = 0; trial < 1000; ++trial) {
    auto a = random_monomial(rng, 5, 4), b = random_monomial(rng, 5, 4);
    auto l = lcm(a, b), g = gcd(a, b);
    ASSERT_TRUE(divides(a, l) && divides(b, l));
    ASSERT_TRUE(divides(g, a) && divides(g, b));
    ASSERT_EQ(multiply(l, g), multiply(a, b));
    ASSERT_EQ(coprime(a, b), g.is_one());
    ASSERT_EQ(divide(multiply(a, b), b), a);
  }
}

TEST(Grading, MultidegreeExamples) {
  // x11 y23 on a 2x2-square toy: x's in degree (1,0), y's in (0,1).
  Grading g(2, {MultiDegree({1, 0}), MultiDegree({1, 0}), MultiDegree({0, 1}), MultiDegree({0, 1})});
  EXPECT_EQ(multidegree_of(mono({1, 0, 0, 1}), g), MultiDegree({1, 1}));
  EXPECT_EQ(multidegree_of(Monomial(4), g), MultiDegree::zero(2));
  EXPECT_EQ(multidegree_of(mono({3}), Grading::standard(1)), MultiDegree({3}));
  EXPECT_THROW(Grading(2, {MultiDegree({1})}), InputError);
}

TEST(Binomial, NormalizedByOrder) {
  auto order = TermOrder::graded_lex();
  EXPECT_FALSE(Binomial::make(mono({1, 1}), mono({1, 1}), order).has_value());
  auto b = Binomial::make(Monomial(2), mono({1, 1}), order);
  ASSERT_TRUE(b);
  EXPECT_EQ(b->lead(), mono({1, 1}));
  EXPECT_EQ(b->trail(), Monomial(2));
}

TEST(Text, RoundTrip) {
  auto vars = VariableSet::indexed("y", 4);
  std::mt19937_64 rng(3);
  for (int trial = 0; trial < 500; ++trial) {
    auto m = random_monomial(rng, 4, 5);
    ASSERT_EQ(parse_monomial(format_monomial(m, vars), vars), m);
  }
  EXPECT_EQ(format_monomial(mono({2, 0, 1, 0}), vars), "y1^2*y3");
  EXPECT_EQ(format_monomial(Monomial(4), vars), "1");
  EXPECT_EQ(parse_monomial(" y2 * y2^3 ", vars), mono({0, 4, 0, 0}));
  EXPECT_THROW(parse_monomial("z1", vars), InputError);
  EXPECT_THROW(parse_monomial("y1^", vars), InputError);
  EXPECT_THROW(parse_monomial("", vars), InputError);
  auto b = parse_binomial("y1*y2 - 1", vars, TermOrder::graded_lex());
  ASSERT_TRUE(b);
  EXPECT_EQ(format_binomial(*b, vars), "y1*y2 - 1");
}

TEST(Orders, ParseKinds) {
  EXPECT_EQ(parse_order_kind("lex"), OrderKind::Lex);
  EXPECT_EQ(parse_order_kind("grlex"), OrderKind::GradedLex);
  EXPECT_EQ(parse_order_kind("grevlex"), OrderKind::GradedRevLex);
  EXPECT_THROW(parse_order_kind("banana"), InputError);
  EXPECT_TRUE(TermOrder::graded_rev_lex().is_graded());
  EXPECT_FALSE(TermOrder::lex().is_graded());
}
