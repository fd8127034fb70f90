#pragma once

// Buchberger's algorithm for ideals generated by pure difference binomials.
// Reducing m1 - m2 by l - r only ever replaces a monomial by another one, so
// every intermediate object is either zero or again a binomial m1 - m2 and no
// coefficients are needed: the results are valid over any field.

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "hilbcount/algebra.hpp"
#include "hilbcount/hilbert.hpp"

namespace hilbcount {

struct BinomialBasis {
  VariableSet ambient;
  TermOrder order = TermOrder::graded_lex();
  std::vector<Binomial> elements;
  /// Set when the elements form the reduced Groebner basis.
  bool reduced = false;

  std::size_t size() const { return elements.size(); }
  bool empty() const { return elements.empty(); }
};

/// Rewrite a monomial with the basis until no lead divides it. Uses the
/// lowest-index applicable element at every step.
Monomial reduce_monomial(Monomial m, const BinomialBasis& basis);

/// Normal form of f; nullopt stands for zero.
std::optional<Binomial> normal_form(const Binomial& f, const BinomialBasis& basis);

/// The S-binomial of f and g (nullopt when its two monomials coincide).
std::optional<Binomial> s_binomial(const Binomial& f, const Binomial& g, const TermOrder& order);

struct BuchbergerStats {
  std::uint64_t pairs_considered = 0;
  std::uint64_t pairs_skipped_coprime = 0;
  std::uint64_t pairs_skipped_chain = 0;
  std::uint64_t reductions_to_zero = 0;
};

/// Reduced Groebner basis of the ideal generated by `generators`. Pairs are
/// processed by the normal strategy (smallest lcm degree, then index pair).
BinomialBasis buchberger(const VariableSet& ambient, const std::vector<Binomial>& generators,
                         const TermOrder& order, BuchbergerStats* stats = nullptr);

/// Elements free of the first `front_block_size` variables, moved into the
/// ring of the remaining ones with the induced order.
BinomialBasis eliminate(const BinomialBasis& basis, std::size_t front_block_size);

/// Homogenize w.r.t. a new variable placed first: x^a - x^b with
/// deg a >= deg b becomes x^a - t^{deg a - deg b} x^b. The result lives under
/// the block order eliminating t (lex inside each block unless told otherwise).
BinomialBasis homogenize(const BinomialBasis& basis, const std::string& t_name = "t",
                         OrderKind back_order = OrderKind::Lex);

/// Set the first variable to 1 and renormalize under `order`.
BinomialBasis dehomogenize(const BinomialBasis& basis, const TermOrder& order);

/// Ideal generated by the leads.
MonomialIdeal initial_ideal(const BinomialBasis& basis);

/// Every S-binomial reduces to zero.
bool satisfies_buchberger_criterion(const BinomialBasis& basis);
/// Leads form an antichain and no trail is divisible by any lead.
bool is_reduced(const BinomialBasis& basis);
bool is_homogeneous(const Binomial& b);

std::string format_basis(const BinomialBasis& basis);
BinomialBasis parse_basis(const std::string& text, const VariableSet& ambient, const TermOrder& order);

}  // namespace hilbcount
