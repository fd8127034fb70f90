#include <gtest/gtest.h>

#include <algorithm>
#include <random>

#include "hilbcount/errors.hpp"
#include "hilbcount/groebner.hpp"
#include "hilbcount/walks.hpp"

using namespace hilbcount;

namespace {

Monomial mono(std::vector<Exponent> e) { return Monomial(std::move(e)); }

Binomial bin(const std::string& text, const VariableSet& vars, const TermOrder& order) {
  return *parse_binomial(text, vars, order);
}

std::vector<Binomial> random_generators(std::mt19937_64& rng, std::size_t n, const TermOrder& order) {
  std::uniform_int_distribution<int> count(1, 4), ex(0, 3);
  std::vector<Binomial> out;
  int want = count(rng);
  while (static_cast<int>(out.size()) < want) {
    std::vector<Exponent> a(n), b(n);
    for (std::size_t i = 0; i < n; ++i) {
      a[i] = static_cast<Exponent>(ex(rng));
      b[i] = static_cast<Exponent>(ex(rng));
      // Pure difference binomials in reduced form have disjoint supports.
      if (a[i] && b[i]) (rng() & 1 ? a[i] : b[i]) = 0;
    }
    if (auto g = Binomial::make(Monomial(a), Monomial(b), order)) out.push_back(*g);
  }
  return out;
}

std::vector<TermOrder> orders() {
  return {TermOrder::lex(), TermOrder::graded_lex(), TermOrder::graded_rev_lex(),
          TermOrder::block(1, OrderKind::Lex, OrderKind::GradedLex)};
}

}  // namespace

TEST(NormalForm, Examples) {
  auto vars = VariableSet::indexed("y", 2);
  auto order = TermOrder::graded_lex();
  BinomialBasis basis{vars, order, {bin("y1 - y2", vars, order)}, true};
  EXPECT_FALSE(normal_form(bin("y1^2 - y1*y2", vars, order), basis).has_value());
  BinomialBasis empty{vars, order, {}, true};
  auto f = bin("y1^2 - y2", vars, order);
  ASSERT_TRUE(normal_form(f, empty).has_value());
  EXPECT_EQ(*normal_form(f, empty), f);
  EXPECT_EQ(reduce_monomial(mono({3, 1}), basis), mono({0, 4}));
}

TEST(Buchberger, SmallExamples) {
  auto vars = VariableSet::indexed("y", 2);
  auto order = TermOrder::graded_lex();
  auto g = bin("y1*y2 - 1", vars, order);
  auto gb = buchberger(vars, {g}, order);
  ASSERT_EQ(gb.size(), 1u);
  EXPECT_EQ(gb.elements[0], g);
  EXPECT_TRUE(gb.reduced);
  EXPECT_TRUE(buchberger(vars, {}, order).empty());
}

TEST(Buchberger, RejectsUnnormalizedGenerators) {
  auto vars = VariableSet::indexed("y", 2);
  auto g = bin("y1 - y2^5", vars, TermOrder::lex());
  EXPECT_THROW(buchberger(vars, {g}, TermOrder::graded_lex()), ContractError);
}

TEST(Buchberger, RandomIdealsSatisfyCriterionAndMembership) {
  std::mt19937_64 rng(424242);
  for (const auto& order : orders()) {
    for (int trial = 0; trial < 60; ++trial) {
      const std::size_t n = 2 + trial % 3;
      auto vars = VariableSet::indexed("y", n);
      auto gens = random_generators(rng, n, order);
      BuchbergerStats stats;
      auto gb = buchberger(vars, gens, order, &stats);
      ASSERT_TRUE(satisfies_buchberger_criterion(gb)) << order.describe();
      ASSERT_TRUE(is_reduced(gb));
      for (const auto& g : gens) ASSERT_FALSE(normal_form(g, gb).has_value()) << format_binomial(g, vars);

      // The reduced basis is unique, so generator order cannot matter.
      auto shuffled = gens;
      std::shuffle(shuffled.begin(), shuffled.end(), rng);
      auto again = buchberger(vars, shuffled, order);
      ASSERT_EQ(format_basis(again), format_basis(gb));
    }
  }
}

TEST(Buchberger, Deterministic) {
  auto pres = presentation_ideal(StepSet::knight());
  auto a = buchberger(pres.ambient, pres.generators, pres.order);
  auto b = buchberger(pres.ambient, pres.generators, pres.order);
  EXPECT_EQ(format_basis(a), format_basis(b));
  EXPECT_TRUE(satisfies_buchberger_criterion(a));
}

TEST(Eliminate, Examples) {
  auto vars = VariableSet::indexed("y", 2);
  auto order = TermOrder::graded_lex();
  auto gb = buchberger(vars, {bin("y1*y2 - 1", vars, order)}, order);
  auto same = eliminate(gb, 0);
  EXPECT_EQ(format_basis(same), format_basis(gb));

  auto bvars = VariableSet({"u", "y1"});
  auto border = TermOrder::block(1);
  auto only_front = buchberger(bvars, {bin("u*y1 - 1", bvars, border)}, border);
  EXPECT_TRUE(eliminate(only_front, 1).empty());
  EXPECT_THROW(eliminate(gb, 1), ContractError);
}

TEST(Eliminate, ToricKernelsDecideEqualImages) {
  // In a lattice ideal y^a - y^b is a member exactly when both monomials
  // map to the same lattice point, so normal forms must separate images.
  std::mt19937_64 rng(5150);
  std::uniform_int_distribution<int> coord(-2, 2), nsteps(2, 4);
  for (int trial = 0; trial < 25; ++trial) {
    const std::size_t dim = 1 + trial % 2;
    std::vector<Step> steps;
    while (steps.size() < static_cast<std::size_t>(nsteps(rng))) {
      Step s(dim);
      for (auto& c : s) c = coord(rng);
      if (std::all_of(s.begin(), s.end(), [](auto c) { return c == 0; })) continue;
      if (std::find(steps.begin(), steps.end(), s) == steps.end()) steps.push_back(s);
    }
    StepSet W(dim, steps);
    auto kernel = toric_kernel(W);
    ASSERT_TRUE(satisfies_buchberger_criterion(kernel));
    const std::size_t n = W.size();

    std::vector<Monomial> monos;
    std::vector<Exponent> e(n, 0);
    auto rec = [&](auto&& self, std::size_t v, int left) -> void {
      if (v == n) {
        monos.emplace_back(e);
        return;
      }
      for (int k = 0; k <= left; ++k) {
        e[v] = static_cast<Exponent>(k);
        self(self, v + 1, left - k);
      }
      e[v] = 0;
    };
    rec(rec, 0, 3);
    auto image = [&](const Monomial& m) {
      Step p(dim, 0);
      for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < dim; ++j) p[j] += static_cast<std::int64_t>(m[i]) * W.step(i)[j];
      return p;
    };
    for (const auto& a : monos)
      for (const auto& b : monos)
        ASSERT_EQ(image(a) == image(b), reduce_monomial(a, kernel) == reduce_monomial(b, kernel));
  }
}

TEST(Homogenize, Examples) {
  auto vars = VariableSet::indexed("y", 2);
  auto order = TermOrder::graded_lex();
  auto gb = buchberger(vars, {bin("y1*y2 - 1", vars, order)}, order);
  auto h = homogenize(gb);
  ASSERT_EQ(h.ambient.name(0), "t");
  ASSERT_EQ(h.size(), 1u);
  // t sits in the front block, so t^2 leads; as a binomial this is y1*y2 - t^2.
  EXPECT_EQ(h.elements[0], *Binomial::make(mono({0, 1, 1}), mono({2, 0, 0}), h.order));
  EXPECT_EQ(format_binomial(h.elements[0], h.ambient), "t^2 - y1*y2");

  auto homog = buchberger(vars, {bin("y1^2 - y2^2", vars, order)}, order);
  auto hh = homogenize(homog);
  EXPECT_EQ(hh.elements[0].lead()[0] + hh.elements[0].trail()[0], 0u);
  EXPECT_THROW(homogenize(BinomialBasis{vars, TermOrder::lex(), {}, true}), ContractError);
}

TEST(Homogenize, RoundTripRecoversInput) {
  std::mt19937_64 rng(77);
  auto order = TermOrder::graded_lex();
  for (int trial = 0; trial < 40; ++trial) {
    auto vars = VariableSet::indexed("y", 3);
    auto gb = buchberger(vars, random_generators(rng, 3, order), order);
    auto back = dehomogenize(homogenize(gb), order);
    ASSERT_EQ(back.elements, gb.elements);
  }
}

TEST(InitialIdeal, Examples) {
  auto vars = VariableSet::indexed("y", 2);
  auto order = TermOrder::graded_lex();
  auto gb = buchberger(vars, {bin("y1*y2 - 1", vars, order)}, order);
  auto in = initial_ideal(gb);
  ASSERT_EQ(in.size(), 1u);
  EXPECT_EQ(in.generators()[0], mono({1, 1}));
  EXPECT_TRUE(initial_ideal(BinomialBasis{vars, order, {}, true}).is_zero());
}

TEST(Text, BasisRoundTripAndLineNumbers) {
  auto pres = presentation_ideal(StepSet::knight());
  auto gb = buchberger(pres.ambient, pres.generators, pres.order);
  auto parsed = parse_basis(format_basis(gb), gb.ambient, gb.order);
  EXPECT_EQ(parsed.elements, gb.elements);
  try {
    parse_basis("# header\ny1 - y2\ny1 - q\n", VariableSet::indexed("y", 2), TermOrder::lex());
    FAIL() << "expected a parse error";
  } catch (const InputError& e) {
    EXPECT_NE(std::string(e.what()).find("line 3"), std::string::npos) << e.what();
  }
}
