#pragma once

// Monomials, gradings and term orders shared by the Groebner, Hilbert, walk
// and board modules. Polynomials never appear as such: every ideal handled
// here is generated by monomials or by pure difference binomials m1 - m2.

#include <compare>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace hilbcount {

using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

using Exponent = std::uint32_t;

/// Ordered list of distinct variable names; a variable's index is its position.
class VariableSet {
 public:
  VariableSet() = default;
  explicit VariableSet(std::vector<std::string> names);

  /// `prefix1 .. prefix<count>`, e.g. indexed("y", 3) is y1, y2, y3.
  static VariableSet indexed(std::string_view prefix, std::size_t count);

  std::size_t size() const { return names_.size(); }
  bool empty() const { return names_.empty(); }
  const std::string& name(std::size_t i) const { return names_.at(i); }
  const std::vector<std::string>& names() const { return names_; }
  std::optional<std::size_t> index_of(std::string_view name) const;

  VariableSet concat(const VariableSet& tail) const;
  /// The variables from position `first` on.
  VariableSet suffix(std::size_t first) const;

  bool operator==(const VariableSet&) const = default;

 private:
  std::vector<std::string> names_;
};

/// Exponent vector of a monomial over some VariableSet. The defaulted
/// comparison is plain container order, used for map keys and sorting only;
/// term orders live in TermOrder.
class Monomial {
 public:
  Monomial() = default;
  /// The constant monomial 1 in `nvars` variables.
  explicit Monomial(std::size_t nvars) : exps_(nvars, 0) {}
  explicit Monomial(std::vector<Exponent> exps);

  static Monomial variable(std::size_t nvars, std::size_t index, Exponent power = 1);

  std::size_t size() const { return exps_.size(); }
  Exponent operator[](std::size_t i) const { return exps_[i]; }
  std::span<const Exponent> exponents() const { return exps_; }
  std::uint64_t degree() const { return degree_; }
  bool is_one() const { return degree_ == 0; }
  /// Index set of variables with a positive exponent.
  std::vector<std::size_t> support() const;

  /// Copy with exponent of variable `i` replaced.
  Monomial with(std::size_t i, Exponent e) const;

  bool operator==(const Monomial& o) const { return exps_ == o.exps_; }
  std::strong_ordering operator<=>(const Monomial& o) const { return exps_ <=> o.exps_; }

 private:
  std::vector<Exponent> exps_;
  std::uint64_t degree_ = 0;
};

Monomial multiply(const Monomial& a, const Monomial& b);
/// True iff `a` divides `b`.
bool divides(const Monomial& a, const Monomial& b);
/// `b / a`; throws ContractError unless `a` divides `b`.
Monomial divide(const Monomial& b, const Monomial& a);
Monomial lcm(const Monomial& a, const Monomial& b);
Monomial gcd(const Monomial& a, const Monomial& b);
bool coprime(const Monomial& a, const Monomial& b);

struct MultiDegree {
  std::vector<std::uint64_t> components;

  MultiDegree() = default;
  explicit MultiDegree(std::vector<std::uint64_t> c) : components(std::move(c)) {}
  static MultiDegree zero(std::size_t rank) { return MultiDegree(std::vector<std::uint64_t>(rank, 0)); }

  std::size_t rank() const { return components.size(); }
  bool is_zero() const;

  MultiDegree& operator+=(const MultiDegree& o);
  friend MultiDegree operator+(MultiDegree a, const MultiDegree& b) { return a += b; }
  bool operator==(const MultiDegree&) const = default;
  auto operator<=>(const MultiDegree&) const = default;
};

/// Assignment of a degree in N^rank to each variable.
class Grading {
 public:
  Grading(std::size_t rank, std::vector<MultiDegree> degrees);

  /// Every variable has degree 1 in N.
  static Grading standard(std::size_t nvars);

  std::size_t rank() const { return rank_; }
  std::size_t size() const { return degrees_.size(); }
  const MultiDegree& degree(std::size_t var) const { return degrees_.at(var); }
  const std::vector<MultiDegree>& degrees() const { return degrees_; }

  bool operator==(const Grading&) const = default;

 private:
  std::size_t rank_;
  std::vector<MultiDegree> degrees_;
};

MultiDegree multidegree_of(const Monomial& m, const Grading& g);

enum class OrderKind { Lex, GradedLex, GradedRevLex, BlockElimination };

/// Multiplicative well-order on monomials. Block elimination orders compare
/// the first `front_size` variables with one order and break ties on the
/// remaining ones with another, so any monomial touching the front block
/// beats every monomial free of it.
class TermOrder {
 public:
  static TermOrder lex() { return TermOrder(OrderKind::Lex); }
  static TermOrder graded_lex() { return TermOrder(OrderKind::GradedLex); }
  static TermOrder graded_rev_lex() { return TermOrder(OrderKind::GradedRevLex); }
  static TermOrder block(std::size_t front_size, OrderKind front = OrderKind::Lex,
                         OrderKind back = OrderKind::Lex);
  static TermOrder of_kind(OrderKind simple_kind);

  OrderKind kind() const { return kind_; }
  std::size_t front_size() const { return front_size_; }
  OrderKind front_inner() const { return front_; }
  OrderKind back_inner() const { return back_; }

  /// Total degree is the first criterion.
  bool is_graded() const;
  /// Whether this order is an elimination order for the first `front` variables.
  bool eliminates(std::size_t front) const;
  /// The order induced on the variables after the first `front` ones.
  TermOrder restricted_after(std::size_t front) const;

  std::strong_ordering compare(const Monomial& a, const Monomial& b) const;
  bool less(const Monomial& a, const Monomial& b) const { return compare(a, b) < 0; }

  std::string describe() const;
  bool operator==(const TermOrder&) const = default;

 private:
  explicit TermOrder(OrderKind k) : kind_(k) {}

  OrderKind kind_;
  std::size_t front_size_ = 0;
  OrderKind front_ = OrderKind::Lex;
  OrderKind back_ = OrderKind::Lex;
};

/// Free-function spelling of TermOrder::compare. Throws ContractError on a
/// length mismatch.
std::strong_ordering compare(const TermOrder& order, const Monomial& a, const Monomial& b);

std::string to_string(OrderKind k);
/// Accepts lex, grlex, grevlex (and the long spellings).
OrderKind parse_order_kind(std::string_view s);

/// lead - trail with lead > trail in the order it was built under.
class Binomial {
 public:
  /// The normalized binomial a - b (or b - a), or nullopt when a == b.
  static std::optional<Binomial> make(Monomial a, Monomial b, const TermOrder& order);

  const Monomial& lead() const { return lead_; }
  const Monomial& trail() const { return trail_; }
  std::size_t size() const { return lead_.size(); }

  bool operator==(const Binomial&) const = default;

 private:
  Binomial(Monomial lead, Monomial trail) : lead_(std::move(lead)), trail_(std::move(trail)) {}

  Monomial lead_;
  Monomial trail_;
};

// Text syntax: `x1^2*y3`, implicit exponent 1, constant monomial `1`.
std::string format_monomial(const Monomial& m, const VariableSet& vars);
Monomial parse_monomial(std::string_view text, const VariableSet& vars);
/// `lead - trail`.
std::string format_binomial(const Binomial& b, const VariableSet& vars);
std::optional<Binomial> parse_binomial(std::string_view text, const VariableSet& vars,
                                       const TermOrder& order);

}  // namespace hilbcount
