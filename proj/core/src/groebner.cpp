#include "hilbcount/groebner.hpp"

#include <algorithm>
#include <sstream>

#include "hilbcount/errors.hpp"

namespace hilbcount {

namespace {

// Index of the first element whose lead divides m, or npos.
std::size_t first_divisor(const std::vector<Binomial>& elems, const Monomial& m) {
  for (std::size_t i = 0; i < elems.size(); ++i)
    if (divides(elems[i].lead(), m)) return i;
  return static_cast<std::size_t>(-1);
}

constexpr std::size_t npos = static_cast<std::size_t>(-1);

Monomial rewrite(Monomial m, const std::vector<Binomial>& elems) {
  for (std::size_t i; (i = first_divisor(elems, m)) != npos;)
    m = multiply(divide(m, elems[i].lead()), elems[i].trail());
  return m;
}

std::optional<Binomial> reduce(const Binomial& f, const std::vector<Binomial>& elems, const TermOrder& order) {
  Monomial a = f.lead();
  Monomial b = f.trail();
  while (true) {
    if (std::size_t i = first_divisor(elems, a); i != npos) {
      a = multiply(divide(a, elems[i].lead()), elems[i].trail());
    } else if (std::size_t j = first_divisor(elems, b); j != npos) {
      b = multiply(divide(b, elems[j].lead()), elems[j].trail());
    } else {
      return Binomial::make(std::move(a), std::move(b), order);
    }
    auto c = order.compare(a, b);
    if (c == 0) return std::nullopt;
    if (c < 0) std::swap(a, b);
  }
}

void check_ambient(const Binomial& f, const BinomialBasis& basis) {
  if (f.size() != basis.ambient.size())
    throw ContractError("binomial and basis live over different variable sets");
}

struct Pair {
  std::size_t i;
  std::size_t j;
  Monomial lcm;
};

}  // namespace

Monomial reduce_monomial(Monomial m, const BinomialBasis& basis) {
  if (m.size() != basis.ambient.size()) throw ContractError("monomial and basis differ in variable count");
  return rewrite(std::move(m), basis.elements);
}

std::optional<Binomial> normal_form(const Binomial& f, const BinomialBasis& basis) {
  check_ambient(f, basis);
  return reduce(f, basis.elements, basis.order);
}

std::optional<Binomial> s_binomial(const Binomial& f, const Binomial& g, const TermOrder& order) {
  Monomial l = lcm(f.lead(), g.lead());
  // (l/lf)(lf - tf) - (l/lg)(lg - tg) = (l/lg) tg - (l/lf) tf
  return Binomial::make(multiply(divide(l, g.lead()), g.trail()), multiply(divide(l, f.lead()), f.trail()),
                        order);
}

BinomialBasis buchberger(const VariableSet& ambient, const std::vector<Binomial>& generators,
                         const TermOrder& order, BuchbergerStats* stats) {
  BuchbergerStats local;
  BuchbergerStats& st = stats ? *stats : local;
  for (const auto& g : generators) {
    if (g.size() != ambient.size()) throw ContractError("generator over the wrong variable count");
    if (order.compare(g.lead(), g.trail()) <= 0)
      throw ContractError("generator is not normalized under " + order.describe());
  }

  std::vector<Binomial> basis;
  std::vector<Pair> pairs;

  auto add = [&](Binomial h) {
    const Monomial& hl = h.lead();
    // Chain criterion: (i, j) is redundant once h's lead divides lcm(i, j)
    // and both (i, h), (j, h) have strictly smaller lcms.
    std::erase_if(pairs, [&](const Pair& p) {
      if (!divides(hl, p.lcm)) return false;
      bool drop = lcm(basis[p.i].lead(), hl) != p.lcm && lcm(basis[p.j].lead(), hl) != p.lcm;
      if (drop) ++st.pairs_skipped_chain;
      return drop;
    });
    const std::size_t k = basis.size();
    for (std::size_t i = 0; i < k; ++i) {
      if (coprime(basis[i].lead(), hl)) {
        ++st.pairs_skipped_coprime;
        continue;
      }
      pairs.push_back(Pair{i, k, lcm(basis[i].lead(), hl)});
    }
    basis.push_back(std::move(h));
  };

  for (const auto& g : generators)
    if (auto r = reduce(g, basis, order)) add(std::move(*r));

  while (!pairs.empty()) {
    auto best = std::min_element(pairs.begin(), pairs.end(), [](const Pair& a, const Pair& b) {
      if (a.lcm.degree() != b.lcm.degree()) return a.lcm.degree() < b.lcm.degree();
      if (a.i != b.i) return a.i < b.i;
      return a.j < b.j;
    });
    Pair p = std::move(*best);
    pairs.erase(best);
    ++st.pairs_considered;
    auto s = s_binomial(basis[p.i], basis[p.j], order);
    if (!s) {
      ++st.reductions_to_zero;
      continue;
    }
    if (auto r = reduce(*s, basis, order))
      add(std::move(*r));
    else
      ++st.reductions_to_zero;
  }

  // Interreduce: keep minimal leads (a divisor of a lead is never larger),
  // then bring every trail to normal form.
  std::sort(basis.begin(), basis.end(),
            [&](const Binomial& a, const Binomial& b) { return order.less(a.lead(), b.lead()); });
  std::vector<Binomial> minimal;
  for (auto& b : basis)
    if (first_divisor(minimal, b.lead()) == npos) minimal.push_back(std::move(b));

  BinomialBasis out{ambient, order, {}, true};
  out.elements.reserve(minimal.size());
  for (const auto& b : minimal) {
    auto r = Binomial::make(b.lead(), rewrite(b.trail(), minimal), order);
    if (!r || r->lead() != b.lead()) throw ContractError("interreduction changed a lead term");
    out.elements.push_back(std::move(*r));
  }
  return out;
}

BinomialBasis eliminate(const BinomialBasis& basis, std::size_t front_block_size) {
  if (!basis.order.eliminates(front_block_size))
    throw ContractError(basis.order.describe() + " is not an elimination order for the first " +
                        std::to_string(front_block_size) + " variables");
  if (front_block_size > basis.ambient.size()) throw ContractError("front block larger than the ring");
  BinomialBasis out{basis.ambient.suffix(front_block_size), basis.order.restricted_after(front_block_size), {},
                    basis.reduced};
  auto tail = [&](const Monomial& m) -> std::optional<Monomial> {
    for (std::size_t i = 0; i < front_block_size; ++i)
      if (m[i] != 0) return std::nullopt;
    auto e = m.exponents().subspan(front_block_size);
    return Monomial(std::vector<Exponent>(e.begin(), e.end()));
  };
  for (const auto& b : basis.elements) {
    auto lead = tail(b.lead());
    auto trail = tail(b.trail());
    if (!lead || !trail) continue;
    auto r = Binomial::make(std::move(*lead), std::move(*trail), out.order);
    if (!r || r->lead() != *tail(b.lead())) throw ContractError("elimination changed a lead term");
    out.elements.push_back(std::move(*r));
  }
  return out;
}

BinomialBasis homogenize(const BinomialBasis& basis, const std::string& t_name, OrderKind back_order) {
  if (basis.order.kind() != OrderKind::GradedLex)
    throw ContractError("homogenize expects a graded-lex basis, got " + basis.order.describe());
  BinomialBasis out{VariableSet({t_name}).concat(basis.ambient), TermOrder::block(1, OrderKind::Lex, back_order),
                    {}, false};
  auto lift = [](const Monomial& m, Exponent t) {
    std::vector<Exponent> e;
    e.reserve(m.size() + 1);
    e.push_back(t);
    e.insert(e.end(), m.exponents().begin(), m.exponents().end());
    return Monomial(std::move(e));
  };
  for (const auto& b : basis.elements) {
    auto gap = static_cast<Exponent>(b.lead().degree() - b.trail().degree());
    auto h = Binomial::make(lift(b.lead(), 0), lift(b.trail(), gap), out.order);
    if (!h) throw ContractError("homogenization collapsed a binomial");
    out.elements.push_back(std::move(*h));
  }
  return out;
}

BinomialBasis dehomogenize(const BinomialBasis& basis, const TermOrder& order) {
  if (basis.ambient.empty()) throw ContractError("nothing to dehomogenize");
  BinomialBasis out{basis.ambient.suffix(1), order, {}, false};
  auto drop = [](const Monomial& m) {
    auto e = m.exponents().subspan(1);
    return Monomial(std::vector<Exponent>(e.begin(), e.end()));
  };
  for (const auto& b : basis.elements)
    if (auto r = Binomial::make(drop(b.lead()), drop(b.trail()), order)) out.elements.push_back(std::move(*r));
  return out;
}

MonomialIdeal initial_ideal(const BinomialBasis& basis) {
  std::vector<Monomial> leads;
  leads.reserve(basis.size());
  for (const auto& b : basis.elements) leads.push_back(b.lead());
  return MonomialIdeal(basis.ambient, std::move(leads));
}

bool satisfies_buchberger_criterion(const BinomialBasis& basis) {
  const auto& e = basis.elements;
  for (std::size_t i = 0; i < e.size(); ++i)
    for (std::size_t j = i + 1; j < e.size(); ++j) {
      auto s = s_binomial(e[i], e[j], basis.order);
      if (s && reduce(*s, e, basis.order)) return false;
    }
  return true;
}

bool is_reduced(const BinomialBasis& basis) {
  const auto& e = basis.elements;
  for (std::size_t i = 0; i < e.size(); ++i) {
    if (basis.order.compare(e[i].lead(), e[i].trail()) <= 0) return false;
    for (std::size_t j = 0; j < e.size(); ++j) {
      if (i != j && divides(e[j].lead(), e[i].lead())) return false;
      if (divides(e[j].lead(), e[i].trail())) return false;
    }
  }
  return true;
}

bool is_homogeneous(const Binomial& b) { return b.lead().degree() == b.trail().degree(); }

std::string format_basis(const BinomialBasis& basis) {
  std::string out;
  for (const auto& b : basis.elements) out += format_binomial(b, basis.ambient) + '\n';
  return out;
}

BinomialBasis parse_basis(const std::string& text, const VariableSet& ambient, const TermOrder& order) {
  BinomialBasis out{ambient, order, {}, false};
  std::istringstream in(text);
  std::string line;
  std::size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
    try {
      if (auto b = parse_binomial(line, ambient, order)) out.elements.push_back(std::move(*b));
    } catch (const InputError& e) {
      throw InputError("line " + std::to_string(lineno) + ": " + e.what());
    }
  }
  return out;
}

}  // namespace hilbcount
