#pragma once

// Exact closed forms for walk counts on Z^m with a fixed step set W:
//   f(d) = number of endpoints of walks with exactly d steps,
//   g(d) = number of lattice points at step distance exactly d.
// f is the Hilbert function of S/H (H the largest homogeneous subideal of the
// toric kernel), g that of S/in(kernel) under a degree-refining order. A
// sumset enumeration provides the independent check.

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

#include "hilbcount/algebra.hpp"
#include "hilbcount/groebner.hpp"
#include "hilbcount/hilbert.hpp"

namespace hilbcount {

using Step = std::vector<std::int64_t>;

/// Finite set of distinct nonzero steps in Z^dimension.
class StepSet {
 public:
  /// Throws InputError on a zero step, a duplicate, or a length mismatch.
  StepSet(std::size_t dimension, std::vector<Step> steps);

  /// The eight knight moves, ordered like the y-variables of the classic
  /// presentation: (1,2), (2,1), (-1,2), (-2,1), (1,-2), (2,-1), (-1,-2), (-2,-1).
  static StepSet knight();

  std::size_t dimension() const { return dimension_; }
  std::size_t size() const { return steps_.size(); }
  const Step& step(std::size_t i) const { return steps_.at(i); }
  const std::vector<Step>& steps() const { return steps_; }

  bool operator==(const StepSet&) const = default;

 private:
  std::size_t dimension_;
  std::vector<Step> steps_;
};

/// Generators over (u, x1..xm, y1..yN): u*x1*...*xm - 1 and
/// y_i * x^{w_i^-} - x^{w_i^+}, normalized under the block order with the
/// (u, x) block in front.
struct PresentationIdeal {
  VariableSet ambient;
  TermOrder order;
  std::vector<Binomial> generators;
};

PresentationIdeal presentation_ideal(const StepSet& steps, OrderKind inner = OrderKind::Lex);

/// Reduced Groebner basis of the kernel of y_i -> x^{w_i}, in y1..yN under
/// `graded_order`. The elimination itself runs under the block order with
/// `inner` inside the blocks.
BinomialBasis toric_kernel(const StepSet& steps, OrderKind graded_order = OrderKind::GradedLex,
                           OrderKind inner = OrderKind::Lex);

/// Reduced Groebner basis (under `inner`) of the ideal of all homogeneous
/// elements of the kernel. Needs the graded-lex kernel basis.
BinomialBasis largest_homogeneous_subideal(const BinomialBasis& kernel_grlex, OrderKind inner = OrderKind::Lex);

struct OracleRow {
  std::uint64_t d = 0;
  std::uint64_t f = 0;
  std::uint64_t g = 0;
  bool operator==(const OracleRow&) const = default;
};

/// Iterated sumsets M^d = M^{d-1} + W from the origin. Throws BudgetExceeded
/// when more than `point_cap` lattice points would be held.
std::vector<OracleRow> walk_oracle(const StepSet& steps, std::uint64_t dmax,
                                   std::size_t point_cap = std::size_t{1} << 26);

/// dim_K (S/H)_d computed by reducing every degree-d monomial against GB(H)
/// and counting distinct results.
std::uint64_t distinct_normal_forms(const BinomialBasis& basis, std::uint64_t degree);

struct WalkOptions {
  OrderKind kernel_inner = OrderKind::Lex;
  OrderKind homogeneous_inner = OrderKind::Lex;
  /// Order defining in(kernel) for g; must refine total degree.
  OrderKind g_order = OrderKind::GradedLex;
  std::uint64_t cross_check_limit = 10;
  std::size_t oracle_point_cap = std::size_t{1} << 26;
  /// Monomials enumerated per degree in the normal-form count before the
  /// Macaulay check stops early.
  std::uint64_t macaulay_monomial_budget = 2'000'000;
  HilbertOptions hilbert;
};

struct WalkCountReport {
  explicit WalkCountReport(StepSet s) : steps(std::move(s)) {}

  StepSet steps;
  std::uint64_t cross_check_limit = 0;

  BinomialBasis presentation_basis;  // GB of the presentation ideal
  BinomialBasis kernel_basis;        // GB of the kernel under the g order
  BinomialBasis homogeneous_basis;   // GB of H

  HilbertSeriesRational f_series;
  HilbertSeriesRational g_series;
  HilbertClosedForm f_closed;
  HilbertClosedForm g_closed;

  std::vector<OracleRow> oracle_prefix;
  /// dim (S/H)_d from distinct normal forms, d = 0, 1, ...
  std::vector<std::uint64_t> normal_form_counts;
};

/// Full pipeline; throws SoundnessError naming the first degree where the
/// algebra disagrees with the oracle or with the normal-form count.
WalkCountReport analyze(const StepSet& steps, const WalkOptions& options = {});

std::string format_step(const Step& s);

}  // namespace hilbcount
