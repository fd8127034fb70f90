#pragma once

// Hilbert series of quotients S/I by monomial ideals, in any N^rank grading,
// plus the univariate post-processing that turns a series into a Hilbert
// polynomial with a finite table of early exceptions.

#include <cstddef>
#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "hilbcount/algebra.hpp"

namespace hilbcount {

/// Monomial ideal with a minimal (divisibility antichain) generating set,
/// kept sorted so equal ideals compare equal.
class MonomialIdeal {
 public:
  MonomialIdeal() = default;
  /// Minimalizes `gens`.
  MonomialIdeal(VariableSet ambient, std::vector<Monomial> gens);

  const VariableSet& ambient() const { return ambient_; }
  const std::vector<Monomial>& generators() const { return gens_; }
  std::size_t size() const { return gens_.size(); }
  bool is_zero() const { return gens_.empty(); }
  /// Membership of a monomial.
  bool contains(const Monomial& m) const;

  bool operator==(const MonomialIdeal&) const = default;

 private:
  VariableSet ambient_;
  std::vector<Monomial> gens_;
};

MonomialIdeal minimalize(VariableSet ambient, std::vector<Monomial> gens);

/// Integer polynomial in t_1..t_rank, sparse, exponents keyed by MultiDegree.
class IntPolynomial {
 public:
  IntPolynomial() = default;
  explicit IntPolynomial(std::size_t rank) : rank_(rank) {}
  static IntPolynomial constant(std::size_t rank, const BigInt& c);
  /// Univariate polynomial from dense coefficients (index = power of t).
  static IntPolynomial from_coefficients(const std::vector<BigInt>& coeffs);

  std::size_t rank() const { return rank_; }
  bool is_zero() const { return terms_.empty(); }
  const std::map<MultiDegree, BigInt>& terms() const { return terms_; }
  BigInt coefficient(const MultiDegree& d) const;

  void add_term(const MultiDegree& d, const BigInt& c);
  IntPolynomial& operator+=(const IntPolynomial& o);
  IntPolynomial& operator-=(const IntPolynomial& o);
  /// Multiply by t^d.
  IntPolynomial shifted(const MultiDegree& d) const;
  /// Multiply by (1 - t^d).
  IntPolynomial times_one_minus(const MultiDegree& d) const;
  friend IntPolynomial operator*(const IntPolynomial& a, const IntPolynomial& b);

  // Univariate helpers.
  std::vector<BigInt> coefficients() const;
  std::uint64_t degree() const;
  BigInt value_at_one() const;
  /// Exact division by (1 - t); throws ContractError when P(1) != 0.
  IntPolynomial divided_by_one_minus_t() const;

  bool operator==(const IntPolynomial&) const = default;

 private:
  std::size_t rank_ = 1;
  std::map<MultiDegree, BigInt> terms_;
};

/// numerator / prod_i (1 - t^{denominator[i]}).
struct HilbertSeriesRational {
  Grading grading = Grading::standard(0);
  IntPolynomial numerator;
  std::vector<MultiDegree> denominator;

  std::size_t rank() const { return grading.rank(); }
  /// Number of (1 - t) factors; meaningful in the univariate case.
  std::size_t unit_factor_count() const;
  bool operator==(const HilbertSeriesRational&) const = default;
};

struct HilbertOptions {
  /// Recursion nodes before BudgetExceeded; 0 means unlimited.
  std::uint64_t max_nodes = 0;
  /// Memo table entries kept; further subproblems are recomputed.
  std::size_t memo_capacity = std::size_t{1} << 18;
};

/// Hilbert series of S/I under `grading` via the pivot recursion
/// HS(S/J) = HS(S/(J + p)) + t^{deg p} HS(S/(J : p)).
/// The denominator carries one factor per variable.
HilbertSeriesRational hilbert_numerator(const MonomialIdeal& ideal, const Grading& grading,
                                        const HilbertOptions& options = {});

/// Dense power-series coefficients for all degrees componentwise <= bound,
/// row-major with the last component varying fastest.
std::vector<BigInt> expand(const HilbertSeriesRational& series, const MultiDegree& bound);

/// Coefficient of t^a in the expansion.
BigInt hf_at(const HilbertSeriesRational& series, const MultiDegree& a);
BigInt hf_at(const HilbertSeriesRational& series, std::uint64_t d);

/// Univariate: cancel (1 - t) factors until the numerator is nonzero at t = 1.
HilbertSeriesRational canonicalize(const HilbertSeriesRational& series);

/// Eventually-polynomial description of a univariate Hilbert function.
struct HilbertClosedForm {
  /// Coefficients of the Hilbert polynomial in d, lowest power first.
  std::vector<Rational> polynomial;
  /// Exact values for every d < stable_from.
  std::map<std::uint64_t, BigInt> exceptions;
  std::uint64_t stable_from = 0;

  Rational polynomial_at(const BigInt& d) const;
  BigInt value(std::uint64_t d) const;
  /// Nonzero value(d) - HP(d) for d < stable_from; the correction series.
  std::map<std::uint64_t, BigInt> deviations() const;
};

/// Requires a canonical univariate series whose factors are all (1 - t).
HilbertClosedForm closed_form(const HilbertSeriesRational& series);

/// Brute-force count of monomials of degree `a` outside the ideal.
BigInt standard_monomial_count(const MonomialIdeal& ideal, const MultiDegree& a,
                               const Grading& grading);

// Rendering.
std::string format_polynomial(const IntPolynomial& p, const std::vector<std::string>& var_names);
std::string format_series(const HilbertSeriesRational& series);
std::string format_rational_polynomial(const std::vector<Rational>& coeffs, const std::string& var);
/// Brace layout: one line per exception then the polynomial range.
std::string format_piecewise(const HilbertClosedForm& cf, const std::string& fname);

}  // namespace hilbcount
