#include "hilbcount/hilbert.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>
#include <unordered_map>

#include "hilbcount/errors.hpp"

namespace hilbcount {

// ---------------------------------------------------------------------------
// MonomialIdeal

namespace {

std::vector<Monomial> minimal_generators(std::vector<Monomial> gens) {
  std::sort(gens.begin(), gens.end(), [](const Monomial& a, const Monomial& b) {
    if (a.degree() != b.degree()) return a.degree() < b.degree();
    return a < b;
  });
  std::vector<Monomial> kept;
  for (auto& g : gens) {
    bool redundant = std::any_of(kept.begin(), kept.end(), [&](const Monomial& k) { return divides(k, g); });
    if (!redundant) kept.push_back(std::move(g));
  }
  std::sort(kept.begin(), kept.end());
  return kept;
}

}  // namespace

MonomialIdeal::MonomialIdeal(VariableSet ambient, std::vector<Monomial> gens)
    : ambient_(std::move(ambient)) {
  for (const auto& g : gens)
    if (g.size() != ambient_.size()) throw ContractError("ideal generator over the wrong variables");
  gens_ = minimal_generators(std::move(gens));
}

bool MonomialIdeal::contains(const Monomial& m) const {
  return std::any_of(gens_.begin(), gens_.end(), [&](const Monomial& g) { return divides(g, m); });
}

MonomialIdeal minimalize(VariableSet ambient, std::vector<Monomial> gens) {
  return MonomialIdeal(std::move(ambient), std::move(gens));
}

// ---------------------------------------------------------------------------
// IntPolynomial

IntPolynomial IntPolynomial::constant(std::size_t rank, const BigInt& c) {
  IntPolynomial p(rank);
  p.add_term(MultiDegree::zero(rank), c);
  return p;
}

IntPolynomial IntPolynomial::from_coefficients(const std::vector<BigInt>& coeffs) {
  IntPolynomial p(1);
  for (std::size_t i = 0; i < coeffs.size(); ++i) p.add_term(MultiDegree({i}), coeffs[i]);
  return p;
}

BigInt IntPolynomial::coefficient(const MultiDegree& d) const {
  auto it = terms_.find(d);
  return it == terms_.end() ? BigInt(0) : it->second;
}

void IntPolynomial::add_term(const MultiDegree& d, const BigInt& c) {
  if (d.rank() != rank_) throw ContractError("polynomial term of the wrong rank");
  if (c == 0) return;
  auto [it, inserted] = terms_.try_emplace(d, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

IntPolynomial& IntPolynomial::operator+=(const IntPolynomial& o) {
  for (const auto& [d, c] : o.terms_) add_term(d, c);
  return *this;
}

IntPolynomial& IntPolynomial::operator-=(const IntPolynomial& o) {
  for (const auto& [d, c] : o.terms_) add_term(d, -c);
  return *this;
}

IntPolynomial IntPolynomial::shifted(const MultiDegree& d) const {
  IntPolynomial out(rank_);
  for (const auto& [e, c] : terms_) out.terms_.emplace(e + d, c);
  return out;
}

IntPolynomial IntPolynomial::times_one_minus(const MultiDegree& d) const {
  IntPolynomial out = *this;
  out -= shifted(d);
  return out;
}

IntPolynomial operator*(const IntPolynomial& a, const IntPolynomial& b) {
  IntPolynomial out(a.rank());
  for (const auto& [da, ca] : a.terms_)
    for (const auto& [db, cb] : b.terms_) out.add_term(da + db, ca * cb);
  return out;
}

std::vector<BigInt> IntPolynomial::coefficients() const {
  if (rank_ != 1) throw ContractError("coefficients() needs a univariate polynomial");
  if (terms_.empty()) return {};
  std::vector<BigInt> out(degree() + 1);
  for (const auto& [d, c] : terms_) out[d.components[0]] = c;
  return out;
}

std::uint64_t IntPolynomial::degree() const {
  if (rank_ != 1) throw ContractError("degree() needs a univariate polynomial");
  return terms_.empty() ? 0 : terms_.rbegin()->first.components[0];
}

BigInt IntPolynomial::value_at_one() const {
  BigInt s = 0;
  for (const auto& [d, c] : terms_) s += c;
  return s;
}

IntPolynomial IntPolynomial::divided_by_one_minus_t() const {
  if (value_at_one() != 0) throw ContractError("polynomial is not divisible by (1 - t)");
  // P = (1 - t) Q  gives q_i = sum_{j <= i} p_j.
  auto p = coefficients();
  std::vector<BigInt> q(p.empty() ? 0 : p.size() - 1);
  BigInt running = 0;
  for (std::size_t i = 0; i < q.size(); ++i) {
    running += p[i];
    q[i] = running;
  }
  return from_coefficients(q);
}

std::size_t HilbertSeriesRational::unit_factor_count() const {
  return static_cast<std::size_t>(std::count_if(denominator.begin(), denominator.end(), [](const MultiDegree& d) {
    return d.rank() == 1 && d.components[0] == 1;
  }));
}

// ---------------------------------------------------------------------------
// Pivot recursion

namespace {

struct VecHash {
  std::size_t operator()(const std::vector<Exponent>& v) const noexcept {
    std::size_t h = 0xcbf29ce484222325ull;
    for (Exponent e : v) h = (h ^ e) * 0x100000001b3ull;
    return h;
  }
};

class NumeratorSolver {
 public:
  NumeratorSolver(const Grading& grading, const HilbertOptions& options)
      : grading_(grading), options_(options) {}

  IntPolynomial solve(std::vector<Monomial> gens) {
    ++nodes_;
    if (options_.max_nodes != 0 && nodes_ > options_.max_nodes)
      throw BudgetExceeded("Hilbert recursion exceeded its budget of " +
                           std::to_string(options_.max_nodes) + " subproblems");

    const std::size_t rank = grading_.rank();
    IntPolynomial factor = IntPolynomial::constant(rank, 1);
    if (gens.empty()) return factor;
    const std::size_t nvars = gens.front().size();

    // Pull out pure powers whose variable occurs in no other generator, and
    // finish directly when all generators are pairwise coprime.
    std::vector<std::uint32_t> occurrences(nvars, 0);
    for (const auto& g : gens)
      for (std::size_t v = 0; v < nvars; ++v)
        if (g[v] != 0) ++occurrences[v];
    std::vector<Monomial> rest;
    rest.reserve(gens.size());
    bool all_isolated = true;
    for (auto& g : gens) {
      bool isolated = true;
      for (std::size_t v = 0; v < nvars && isolated; ++v)
        if (g[v] != 0 && occurrences[v] > 1) isolated = false;
      if (isolated)
        factor = factor.times_one_minus(multidegree_of(g, grading_));
      else {
        all_isolated = false;
        rest.push_back(std::move(g));
      }
    }
    if (all_isolated) return factor;

    auto components = split_components(rest, nvars);
    if (components.size() > 1) {
      for (auto& c : components) factor = factor * solve(std::move(c));
      return factor;
    }
    return factor * solve_connected(std::move(rest), occurrences);
  }

  std::uint64_t nodes() const { return nodes_; }

 private:
  static std::vector<std::vector<Monomial>> split_components(const std::vector<Monomial>& gens,
                                                             std::size_t nvars) {
    std::vector<std::size_t> parent(nvars);
    std::iota(parent.begin(), parent.end(), 0);
    auto find = [&](std::size_t x) {
      while (parent[x] != x) x = parent[x] = parent[parent[x]];
      return x;
    };
    for (const auto& g : gens) {
      std::size_t first = nvars;
      for (std::size_t v = 0; v < nvars; ++v) {
        if (g[v] == 0) continue;
        if (first == nvars)
          first = v;
        else
          parent[find(v)] = find(first);
      }
    }
    std::map<std::size_t, std::vector<Monomial>> by_root;
    for (const auto& g : gens) by_root[find(g.support().front())].push_back(g);
    std::vector<std::vector<Monomial>> out;
    for (auto& [root, part] : by_root) out.push_back(std::move(part));
    return out;
  }

  IntPolynomial solve_connected(std::vector<Monomial> gens, const std::vector<std::uint32_t>& occurrences) {
    std::sort(gens.begin(), gens.end());
    std::vector<Exponent> key;
    key.reserve(gens.size() * gens.front().size());
    for (const auto& g : gens) key.insert(key.end(), g.exponents().begin(), g.exponents().end());
    if (auto it = memo_.find(key); it != memo_.end()) return it->second;

    // Pivot on the variable occurring in the most generators, at its
    // smallest positive exponent: then J + p drops every generator in that
    // variable and J : p lowers them.
    const std::size_t nvars = gens.front().size();
    std::size_t pivot = static_cast<std::size_t>(
        std::max_element(occurrences.begin(), occurrences.end()) - occurrences.begin());
    Exponent power = 0;
    for (const auto& g : gens)
      if (g[pivot] != 0 && (power == 0 || g[pivot] < power)) power = g[pivot];
    Monomial p = Monomial::variable(nvars, pivot, power);

    std::vector<Monomial> sum_gens;
    std::vector<Monomial> quotient_gens;
    for (const auto& g : gens) {
      if (g[pivot] == 0) {
        sum_gens.push_back(g);
        quotient_gens.push_back(g);
      } else {
        quotient_gens.push_back(g.with(pivot, g[pivot] - power));
      }
    }
    sum_gens.push_back(p);

    IntPolynomial result = solve(minimal_generators(std::move(sum_gens)));
    result += solve(minimal_generators(std::move(quotient_gens))).shifted(multidegree_of(p, grading_));

    if (memo_.size() < options_.memo_capacity) memo_.emplace(std::move(key), result);
    return result;
  }

  const Grading& grading_;
  const HilbertOptions& options_;
  std::uint64_t nodes_ = 0;
  std::unordered_map<std::vector<Exponent>, IntPolynomial, VecHash> memo_;
};

}  // namespace

HilbertSeriesRational hilbert_numerator(const MonomialIdeal& ideal, const Grading& grading,
                                        const HilbertOptions& options) {
  if (grading.size() != ideal.ambient().size())
    throw ContractError("grading covers " + std::to_string(grading.size()) + " variables, ideal has " +
                        std::to_string(ideal.ambient().size()));
  NumeratorSolver solver(grading, options);
  HilbertSeriesRational hs{grading, solver.solve(ideal.generators()), grading.degrees()};
  return hs;
}

// ---------------------------------------------------------------------------
// Expansion

std::vector<BigInt> expand(const HilbertSeriesRational& series, const MultiDegree& bound) {
  const std::size_t rank = series.rank();
  if (bound.rank() != rank) throw ContractError("degree bound has the wrong rank");
  std::vector<std::size_t> stride(rank, 1);
  std::size_t total = 1;
  for (std::size_t i = rank; i-- > 0;) {
    stride[i] = total;
    total *= static_cast<std::size_t>(bound.components[i] + 1);
    if (total > (std::size_t{1} << 28)) throw BudgetExceeded("series expansion box too large");
  }
  std::vector<BigInt> c(total);
  auto flat = [&](const MultiDegree& d) -> std::optional<std::size_t> {
    std::size_t idx = 0;
    for (std::size_t i = 0; i < rank; ++i) {
      if (d.components[i] > bound.components[i]) return std::nullopt;
      idx += static_cast<std::size_t>(d.components[i]) * stride[i];
    }
    return idx;
  };
  for (const auto& [d, coef] : series.numerator.terms())
    if (auto idx = flat(d)) c[*idx] += coef;

  // Multiply by 1/(1 - t^d) for each factor: c[x] += c[x - d], in increasing
  // row-major order so c[x - d] is already final.
  std::vector<std::uint64_t> x(rank);
  for (const auto& d : series.denominator) {
    if (d.is_zero()) throw ContractError("denominator factor of degree zero: infinite Hilbert function");
    std::size_t offset = 0;
    for (std::size_t i = 0; i < rank; ++i) offset += static_cast<std::size_t>(d.components[i]) * stride[i];
    std::fill(x.begin(), x.end(), 0);
    for (std::size_t idx = 0; idx < total; ++idx) {
      bool fits = true;
      for (std::size_t i = 0; i < rank && fits; ++i) fits = x[i] >= d.components[i];
      if (fits) c[idx] += c[idx - offset];
      for (std::size_t i = rank; i-- > 0;) {
        if (++x[i] <= bound.components[i]) break;
        x[i] = 0;
      }
    }
  }
  return c;
}

BigInt hf_at(const HilbertSeriesRational& series, const MultiDegree& a) {
  return expand(series, a).back();
}

BigInt hf_at(const HilbertSeriesRational& series, std::uint64_t d) {
  return hf_at(series, MultiDegree({d}));
}

HilbertSeriesRational canonicalize(const HilbertSeriesRational& series) {
  if (series.rank() != 1) throw ContractError("canonicalize needs a univariate series");
  HilbertSeriesRational out = series;
  if (out.numerator.is_zero()) {
    out.denominator.clear();
    return out;
  }
  while (out.numerator.value_at_one() == 0) {
    auto unit = std::find(out.denominator.begin(), out.denominator.end(), MultiDegree({1}));
    if (unit == out.denominator.end()) break;
    out.numerator = out.numerator.divided_by_one_minus_t();
    out.denominator.erase(unit);
  }
  std::sort(out.denominator.begin(), out.denominator.end());
  return out;
}

// ---------------------------------------------------------------------------
// Closed forms

namespace {

// Coefficients of prod (d + r_j), lowest power first.
std::vector<Rational> poly_from_roots(const std::vector<Rational>& shifts) {
  std::vector<Rational> p{Rational(1)};
  for (const auto& r : shifts) {
    std::vector<Rational> next(p.size() + 1, Rational(0));
    for (std::size_t i = 0; i < p.size(); ++i) {
      next[i] += p[i] * r;
      next[i + 1] += p[i];
    }
    p = std::move(next);
  }
  return p;
}

Rational eval(const std::vector<Rational>& p, const Rational& x) {
  Rational acc = 0;
  for (std::size_t i = p.size(); i-- > 0;) acc = acc * x + p[i];
  return acc;
}

}  // namespace

Rational HilbertClosedForm::polynomial_at(const BigInt& d) const { return eval(polynomial, Rational(d)); }

BigInt HilbertClosedForm::value(std::uint64_t d) const {
  if (d < stable_from) return exceptions.at(d);
  Rational v = polynomial_at(BigInt(d));
  if (denominator(v) != 1) throw ContractError("Hilbert polynomial is not integer valued at " + std::to_string(d));
  return numerator(v);
}

std::map<std::uint64_t, BigInt> HilbertClosedForm::deviations() const {
  std::map<std::uint64_t, BigInt> out;
  for (const auto& [d, v] : exceptions) {
    Rational diff = Rational(v) - polynomial_at(BigInt(d));
    if (diff != 0) out.emplace(d, numerator(diff));
  }
  return out;
}

HilbertClosedForm closed_form(const HilbertSeriesRational& series) {
  if (series.rank() != 1) throw ContractError("closed_form needs a univariate series");
  if (series.unit_factor_count() != series.denominator.size())
    throw ContractError("closed_form needs every denominator factor to be (1 - t)");
  HilbertClosedForm cf;
  if (series.numerator.is_zero()) return cf;

  const std::uint64_t dim = series.denominator.size();
  const std::uint64_t deg = series.numerator.degree();
  const auto p = series.numerator.coefficients();

  if (dim == 0) {
    cf.stable_from = deg + 1;
  } else {
    // HP(d) = sum_i p_i C(d - i + D - 1, D - 1).
    BigInt fact = 1;
    for (std::uint64_t j = 2; j < dim; ++j) fact *= j;
    cf.polynomial.assign(dim, Rational(0));
    for (std::uint64_t i = 0; i < p.size(); ++i) {
      if (p[i] == 0) continue;
      std::vector<Rational> shifts;
      for (std::uint64_t j = 0; j + 1 < dim; ++j)
        shifts.emplace_back(static_cast<std::int64_t>(dim) - 1 - static_cast<std::int64_t>(i) -
                            static_cast<std::int64_t>(j));
      auto term = poly_from_roots(shifts);
      for (std::size_t k = 0; k < term.size(); ++k) cf.polynomial[k] += term[k] * Rational(p[i]) / Rational(fact);
    }
    while (!cf.polynomial.empty() && cf.polynomial.back() == 0) cf.polynomial.pop_back();
    cf.stable_from = deg + 1 > dim ? deg + 1 - dim : 0;
  }
  if (cf.stable_from > 0) {
    auto values = expand(series, MultiDegree({cf.stable_from - 1}));
    for (std::uint64_t d = 0; d < cf.stable_from; ++d) cf.exceptions.emplace(d, values[d]);
  }
  return cf;
}

// ---------------------------------------------------------------------------
// Brute force

BigInt standard_monomial_count(const MonomialIdeal& ideal, const MultiDegree& a, const Grading& grading) {
  const std::size_t n = grading.size();
  if (n != ideal.ambient().size()) throw ContractError("grading and ideal disagree on variable count");
  if (a.rank() != grading.rank()) throw ContractError("degree has the wrong rank");
  for (std::size_t v = 0; v < n; ++v)
    if (grading.degree(v).is_zero())
      throw ContractError("variable " + std::to_string(v) + " has degree zero: infinitely many monomials per degree");

  std::uint64_t count = 0;
  std::vector<Exponent> exps(n, 0);
  std::vector<std::uint64_t> remaining = a.components;
  const auto& gens = ideal.generators();

  // Divisibility only needs checking once a generator's support is fully assigned.
  auto hits_ideal = [&](std::size_t assigned) {
    for (const auto& g : gens) {
      bool divisible = true;
      for (std::size_t v = 0; v < n && divisible; ++v)
        if (g[v] > (v < assigned ? exps[v] : 0)) divisible = false;
      if (divisible) return true;
    }
    return false;
  };

  auto walk = [&](auto&& self, std::size_t v) -> void {
    if (v == n) {
      if (std::all_of(remaining.begin(), remaining.end(), [](auto r) { return r == 0; })) ++count;
      return;
    }
    const auto& d = grading.degree(v).components;
    Exponent e = 0;
    while (true) {
      exps[v] = e;
      if (hits_ideal(v + 1)) break;  // larger exponents stay in the ideal
      self(self, v + 1);
      bool fits = true;
      for (std::size_t j = 0; j < d.size(); ++j) fits = fits && remaining[j] >= d[j];
      if (!fits) break;
      for (std::size_t j = 0; j < d.size(); ++j) remaining[j] -= d[j];
      ++e;
    }
    for (std::size_t j = 0; j < d.size(); ++j) remaining[j] += std::uint64_t{e} * d[j];
    exps[v] = 0;
  };
  walk(walk, 0);
  return BigInt(count);
}

// ---------------------------------------------------------------------------
// Rendering

std::string format_polynomial(const IntPolynomial& p, const std::vector<std::string>& var_names) {
  if (p.is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [d, c] : p.terms()) {
    std::string mono;
    for (std::size_t i = 0; i < d.rank(); ++i) {
      if (d.components[i] == 0) continue;
      if (!mono.empty()) mono += '*';
      mono += var_names.at(i);
      if (d.components[i] != 1) mono += '^' + std::to_string(d.components[i]);
    }
    BigInt mag = c < 0 ? BigInt(-c) : c;
    if (c < 0)
      os << '-';
    else if (!first)
      os << '+';
    if (mono.empty())
      os << mag;
    else if (mag != 1)
      os << mag << mono;
    else
      os << mono;
    first = false;
  }
  return os.str();
}

namespace {

std::vector<std::string> series_var_names(std::size_t rank) {
  if (rank == 1) return {"t"};
  std::vector<std::string> names;
  for (std::size_t i = 1; i <= rank; ++i) names.push_back("t" + std::to_string(i));
  return names;
}

}  // namespace

std::string format_series(const HilbertSeriesRational& series) {
  auto names = series_var_names(series.rank());
  std::string num = format_polynomial(series.numerator, names);
  std::map<MultiDegree, std::size_t> grouped;
  for (const auto& d : series.denominator) ++grouped[d];
  if (grouped.empty()) return num;
  std::string den;
  for (const auto& [d, mult] : grouped) {
    IntPolynomial mono(series.rank());
    mono.add_term(d, 1);
    if (!den.empty()) den += '*';
    den += "(1-" + format_polynomial(mono, names) + ")";
    if (mult > 1) den += '^' + std::to_string(mult);
  }
  return "(" + num + ")/" + (grouped.size() > 1 ? "(" + den + ")" : den);
}

std::string format_rational_polynomial(const std::vector<Rational>& coeffs, const std::string& var) {
  std::ostringstream os;
  bool first = true;
  for (std::size_t i = coeffs.size(); i-- > 0;) {
    const Rational& c = coeffs[i];
    if (c == 0) continue;
    Rational mag = c < 0 ? Rational(-c) : c;
    if (c < 0)
      os << '-';
    else if (!first)
      os << '+';
    bool integral = denominator(mag) == 1;
    std::string coef = integral ? numerator(mag).str() : "(" + mag.str() + ")";
    std::string mono = i == 0 ? "" : (i == 1 ? var : var + "^" + std::to_string(i));
    if (mono.empty())
      os << coef;
    else if (mag != 1)
      os << coef << mono;
    else
      os << mono;
    first = false;
  }
  return first ? "0" : os.str();
}

std::string format_piecewise(const HilbertClosedForm& cf, const std::string& fname) {
  std::vector<std::pair<std::string, std::string>> rows;
  for (const auto& [d, v] : cf.exceptions) rows.emplace_back(v.str(), "d = " + std::to_string(d));
  rows.emplace_back(format_rational_polynomial(cf.polynomial, "d"), "d >= " + std::to_string(cf.stable_from));
  std::size_t width = 0;
  for (const auto& r : rows) width = std::max(width, r.first.size());
  std::ostringstream os;
  os << fname << "(d) = {\n";
  for (const auto& [value, cond] : rows) os << "  " << value << std::string(width - value.size() + 4, ' ') << cond << '\n';
  os << "}\n";
  return os.str();
}

}  // namespace hilbcount
