#include "hilbcount/walks.hpp"

#include <algorithm>
#include <set>
#include <unordered_set>

#include "hilbcount/errors.hpp"

namespace hilbcount {

StepSet::StepSet(std::size_t dimension, std::vector<Step> steps)
    : dimension_(dimension), steps_(std::move(steps)) {
  if (dimension_ == 0) throw InputError("step set dimension must be at least 1");
  std::set<Step> seen;
  for (const auto& s : steps_) {
    if (s.size() != dimension_)
      throw InputError("step " + format_step(s) + " has length " + std::to_string(s.size()) + ", expected " +
                       std::to_string(dimension_));
    if (std::all_of(s.begin(), s.end(), [](auto c) { return c == 0; }))
      throw InputError("step set contains the zero vector");
    if (!seen.insert(s).second) throw InputError("duplicate step " + format_step(s));
  }
}

StepSet StepSet::knight() {
  return StepSet(2, {{1, 2}, {2, 1}, {-1, 2}, {-2, 1}, {1, -2}, {2, -1}, {-1, -2}, {-2, -1}});
}

std::string format_step(const Step& s) {
  std::string out = "(";
  for (std::size_t i = 0; i < s.size(); ++i) out += (i ? "," : "") + std::to_string(s[i]);
  return out + ")";
}

PresentationIdeal presentation_ideal(const StepSet& steps, OrderKind inner) {
  const std::size_t m = steps.dimension();
  const std::size_t n = steps.size();
  VariableSet vars = VariableSet({"u"}).concat(VariableSet::indexed("x", m)).concat(VariableSet::indexed("y", n));
  PresentationIdeal out{vars, TermOrder::block(m + 1, inner, inner), {}};
  const std::size_t total = vars.size();

  std::vector<Exponent> sat(total, 0);
  for (std::size_t i = 0; i <= m; ++i) sat[i] = 1;
  out.generators.push_back(*Binomial::make(Monomial(sat), Monomial(total), out.order));

  for (std::size_t i = 0; i < n; ++i) {
    std::vector<Exponent> lhs(total, 0);  // y_i * x^{w^-}
    std::vector<Exponent> rhs(total, 0);  // x^{w^+}
    lhs[1 + m + i] = 1;
    for (std::size_t j = 0; j < m; ++j) {
      std::int64_t c = steps.step(i)[j];
      if (c > 0)
        rhs[1 + j] = static_cast<Exponent>(c);
      else
        lhs[1 + j] = static_cast<Exponent>(-c);
    }
    out.generators.push_back(*Binomial::make(Monomial(lhs), Monomial(rhs), out.order));
  }
  return out;
}

namespace {

BinomialBasis reorder(const BinomialBasis& basis, const TermOrder& order) {
  std::vector<Binomial> gens;
  for (const auto& b : basis.elements)
    if (auto r = Binomial::make(b.lead(), b.trail(), order)) gens.push_back(std::move(*r));
  return buchberger(basis.ambient, gens, order);
}

BinomialBasis eliminated_kernel(const StepSet& steps, OrderKind inner, BinomialBasis* presentation_gb) {
  auto pres = presentation_ideal(steps, inner);
  auto gb = buchberger(pres.ambient, pres.generators, pres.order);
  auto kernel = eliminate(gb, steps.dimension() + 1);
  if (presentation_gb) *presentation_gb = std::move(gb);
  return kernel;
}

}  // namespace

BinomialBasis toric_kernel(const StepSet& steps, OrderKind graded_order, OrderKind inner) {
  auto order = TermOrder::of_kind(graded_order);
  if (!order.is_graded()) throw InputError("kernel order must refine total degree, got " + order.describe());
  return reorder(eliminated_kernel(steps, inner, nullptr), order);
}

BinomialBasis largest_homogeneous_subideal(const BinomialBasis& kernel_grlex, OrderKind inner) {
  auto homog = homogenize(kernel_grlex, "t", inner);
  auto gb = buchberger(homog.ambient, homog.elements, homog.order);
  return eliminate(gb, 1);
}

std::vector<OracleRow> walk_oracle(const StepSet& steps, std::uint64_t dmax, std::size_t point_cap) {
  struct PointHash {
    std::size_t operator()(const Step& p) const noexcept {
      std::size_t h = 0x9e3779b97f4a7c15ull;
      for (auto c : p) h = (h ^ static_cast<std::size_t>(c)) * 0x100000001b3ull + (h >> 29);
      return h;
    }
  };
  using PointSet = std::unordered_set<Step, PointHash>;

  std::vector<OracleRow> rows{{0, 1, 1}};
  PointSet layer{Step(steps.dimension(), 0)};
  PointSet seen = layer;
  for (std::uint64_t d = 1; d <= dmax; ++d) {
    PointSet next;
    for (const auto& p : layer) {
      for (const auto& w : steps.steps()) {
        Step q = p;
        for (std::size_t j = 0; j < q.size(); ++j) q[j] += w[j];
        next.insert(std::move(q));
        if (next.size() + seen.size() > point_cap)
          throw BudgetExceeded("walk oracle exceeded its point cap of " + std::to_string(point_cap) +
                               " lattice points at d = " + std::to_string(d));
      }
    }
    std::uint64_t fresh = 0;
    for (const auto& q : next)
      if (seen.insert(q).second) ++fresh;
    rows.push_back({d, next.size(), fresh});
    layer = std::move(next);
  }
  return rows;
}

std::uint64_t distinct_normal_forms(const BinomialBasis& basis, std::uint64_t degree) {
  const std::size_t n = basis.ambient.size();
  std::set<Monomial> forms;
  std::vector<Exponent> e(n, 0);
  auto rec = [&](auto&& self, std::size_t v, std::uint64_t left) -> void {
    if (v + 1 == n || n == 0) {
      if (n != 0) e[v] = static_cast<Exponent>(left);
      if (n != 0 || left == 0) forms.insert(reduce_monomial(Monomial(e), basis));
      return;
    }
    for (std::uint64_t k = 0; k <= left; ++k) {
      e[v] = static_cast<Exponent>(k);
      self(self, v + 1, left - k);
    }
    e[v] = 0;
  };
  rec(rec, 0, degree);
  return forms.size();
}

namespace {

BigInt monomial_count(std::size_t nvars, std::uint64_t degree) {
  // C(degree + nvars - 1, nvars - 1)
  if (nvars == 0) return degree == 0 ? 1 : 0;
  BigInt c = 1;
  for (std::uint64_t i = 1; i < nvars; ++i) c = c * (degree + i) / i;
  return c;
}

}  // namespace

WalkCountReport analyze(const StepSet& steps, const WalkOptions& options) {
  auto g_order = TermOrder::of_kind(options.g_order);
  if (!g_order.is_graded())
    throw InputError("g needs an order refining total degree; " + g_order.describe() + " does not");

  WalkCountReport report(steps);
  report.cross_check_limit = options.cross_check_limit;
  auto eliminated = eliminated_kernel(steps, options.kernel_inner, &report.presentation_basis);
  report.kernel_basis = reorder(eliminated, g_order);
  BinomialBasis kernel_grlex = options.g_order == OrderKind::GradedLex
                                   ? report.kernel_basis
                                   : reorder(eliminated, TermOrder::graded_lex());
  report.homogeneous_basis = largest_homogeneous_subideal(kernel_grlex, options.homogeneous_inner);
  for (const auto& b : report.homogeneous_basis.elements)
    if (!is_homogeneous(b))
      throw SoundnessError("GB(H) element " + format_binomial(b, report.homogeneous_basis.ambient) +
                           " is not homogeneous");

  const std::size_t n = steps.size();
  const Grading standard = Grading::standard(n);
  report.g_series = canonicalize(hilbert_numerator(initial_ideal(report.kernel_basis), standard, options.hilbert));
  report.f_series =
      canonicalize(hilbert_numerator(initial_ideal(report.homogeneous_basis), standard, options.hilbert));
  report.g_closed = closed_form(report.g_series);
  report.f_closed = closed_form(report.f_series);

  const std::uint64_t limit = options.cross_check_limit;
  report.oracle_prefix = walk_oracle(steps, limit, options.oracle_point_cap);
  for (const auto& row : report.oracle_prefix) {
    if (report.f_closed.value(row.d) != row.f)
      throw SoundnessError("f mismatch at d = " + std::to_string(row.d) + ": algebra " +
                           report.f_closed.value(row.d).str() + ", oracle " + std::to_string(row.f));
    if (report.g_closed.value(row.d) != row.g)
      throw SoundnessError("g mismatch at d = " + std::to_string(row.d) + ": algebra " +
                           report.g_closed.value(row.d).str() + ", oracle " + std::to_string(row.g));
  }

  // dim (S/H)_d two ways: standard monomials of in(H) versus distinct
  // normal forms modulo H.
  auto f_values = expand(report.f_series, MultiDegree({limit}));
  for (std::uint64_t d = 0; d <= limit; ++d) {
    if (monomial_count(n, d) > options.macaulay_monomial_budget) break;
    std::uint64_t forms = distinct_normal_forms(report.homogeneous_basis, d);
    if (f_values[d] != forms)
      throw SoundnessError("dim (S/H)_" + std::to_string(d) + " = " + std::to_string(forms) +
                           " by normal forms but " + f_values[d].str() + " from in(H)");
    report.normal_form_counts.push_back(forms);
  }
  return report;
}

}  // namespace hilbcount
