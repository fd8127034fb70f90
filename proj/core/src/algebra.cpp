#include "hilbcount/algebra.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <limits>
#include <numeric>
#include <sstream>
#include <stdexcept>
#include <unordered_set>

#include "hilbcount/errors.hpp"

namespace hilbcount {

namespace {

Exponent checked_add(Exponent a, Exponent b) {
  if (a > std::numeric_limits<Exponent>::max() - b)
    throw std::overflow_error("exponent overflow while multiplying monomials");
  return a + b;
}

void require_same_length(const Monomial& a, const Monomial& b) {
  if (a.size() != b.size())
    throw ContractError("monomials over different variable counts (" + std::to_string(a.size()) +
                        " vs " + std::to_string(b.size()) + ")");
}

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

// Compare two slices [first, last) of exponent vectors under a non-block order.
std::strong_ordering compare_range(OrderKind kind, std::span<const Exponent> a,
                                   std::span<const Exponent> b) {
  if (kind == OrderKind::GradedLex || kind == OrderKind::GradedRevLex) {
    std::uint64_t da = std::accumulate(a.begin(), a.end(), std::uint64_t{0});
    std::uint64_t db = std::accumulate(b.begin(), b.end(), std::uint64_t{0});
    if (da != db) return da <=> db;
  }
  if (kind == OrderKind::GradedRevLex) {
    // Same degree: the smaller exponent in the last differing variable wins.
    for (std::size_t i = a.size(); i-- > 0;)
      if (a[i] != b[i]) return b[i] <=> a[i];
    return std::strong_ordering::equal;
  }
  for (std::size_t i = 0; i < a.size(); ++i)
    if (a[i] != b[i]) return a[i] <=> b[i];
  return std::strong_ordering::equal;
}

}  // namespace

// ---------------------------------------------------------------------------
// VariableSet

VariableSet::VariableSet(std::vector<std::string> names) : names_(std::move(names)) {
  std::unordered_set<std::string> seen;
  for (const auto& n : names_) {
    if (n.empty()) throw InputError("empty variable name");
    if (!seen.insert(n).second) throw InputError("duplicate variable name '" + n + "'");
  }
}

VariableSet VariableSet::indexed(std::string_view prefix, std::size_t count) {
  std::vector<std::string> names;
  names.reserve(count);
  for (std::size_t i = 1; i <= count; ++i) names.push_back(std::string(prefix) + std::to_string(i));
  return VariableSet(std::move(names));
}

std::optional<std::size_t> VariableSet::index_of(std::string_view name) const {
  auto it = std::find(names_.begin(), names_.end(), name);
  if (it == names_.end()) return std::nullopt;
  return static_cast<std::size_t>(it - names_.begin());
}

VariableSet VariableSet::concat(const VariableSet& tail) const {
  std::vector<std::string> names = names_;
  names.insert(names.end(), tail.names_.begin(), tail.names_.end());
  return VariableSet(std::move(names));
}

VariableSet VariableSet::suffix(std::size_t first) const {
  if (first > names_.size()) throw ContractError("suffix start past the end of the variable set");
  return VariableSet(std::vector<std::string>(names_.begin() + static_cast<std::ptrdiff_t>(first),
                                              names_.end()));
}

// ---------------------------------------------------------------------------
// Monomial

Monomial::Monomial(std::vector<Exponent> exps) : exps_(std::move(exps)) {
  for (Exponent e : exps_) degree_ += e;
}

Monomial Monomial::variable(std::size_t nvars, std::size_t index, Exponent power) {
  if (index >= nvars) throw ContractError("variable index out of range");
  std::vector<Exponent> e(nvars, 0);
  e[index] = power;
  return Monomial(std::move(e));
}

std::vector<std::size_t> Monomial::support() const {
  std::vector<std::size_t> s;
  for (std::size_t i = 0; i < exps_.size(); ++i)
    if (exps_[i] != 0) s.push_back(i);
  return s;
}

Monomial Monomial::with(std::size_t i, Exponent e) const {
  std::vector<Exponent> v = exps_;
  v.at(i) = e;
  return Monomial(std::move(v));
}

Monomial multiply(const Monomial& a, const Monomial& b) {
  require_same_length(a, b);
  std::vector<Exponent> e(a.size());
  for (std::size_t i = 0; i < e.size(); ++i) e[i] = checked_add(a[i], b[i]);
  return Monomial(std::move(e));
}

bool divides(const Monomial& a, const Monomial& b) {
  require_same_length(a, b);
  if (a.degree() > b.degree()) return false;
  for (std::size_t i = 0; i < a.size(); ++i)
    if (a[i] > b[i]) return false;
  return true;
}

Monomial divide(const Monomial& b, const Monomial& a) {
  if (!divides(a, b)) throw ContractError("divide: divisor does not divide the monomial");
  std::vector<Exponent> e(a.size());
  for (std::size_t i = 0; i < e.size(); ++i) e[i] = b[i] - a[i];
  return Monomial(std::move(e));
}

Monomial lcm(const Monomial& a, const Monomial& b) {
  require_same_length(a, b);
  std::vector<Exponent> e(a.size());
  for (std::size_t i = 0; i < e.size(); ++i) e[i] = std::max(a[i], b[i]);
  return Monomial(std::move(e));
}

Monomial gcd(const Monomial& a, const Monomial& b) {
  require_same_length(a, b);
  std::vector<Exponent> e(a.size());
  for (std::size_t i = 0; i < e.size(); ++i) e[i] = std::min(a[i], b[i]);
  return Monomial(std::move(e));
}

bool coprime(const Monomial& a, const Monomial& b) {
  require_same_length(a, b);
  for (std::size_t i = 0; i < a.size(); ++i)
    if (a[i] != 0 && b[i] != 0) return false;
  return true;
}

// ---------------------------------------------------------------------------
// Degrees

bool MultiDegree::is_zero() const {
  return std::all_of(components.begin(), components.end(), [](auto c) { return c == 0; });
}

MultiDegree& MultiDegree::operator+=(const MultiDegree& o) {
  if (o.rank() != rank()) throw ContractError("adding multidegrees of different rank");
  for (std::size_t i = 0; i < components.size(); ++i) components[i] += o.components[i];
  return *this;
}

Grading::Grading(std::size_t rank, std::vector<MultiDegree> degrees)
    : rank_(rank), degrees_(std::move(degrees)) {
  for (const auto& d : degrees_)
    if (d.rank() != rank_) throw InputError("grading: variable degree has the wrong rank");
}

Grading Grading::standard(std::size_t nvars) {
  return Grading(1, std::vector<MultiDegree>(nvars, MultiDegree({1})));
}

MultiDegree multidegree_of(const Monomial& m, const Grading& g) {
  if (m.size() != g.size()) throw ContractError("grading does not match the monomial's variables");
  MultiDegree out = MultiDegree::zero(g.rank());
  for (std::size_t i = 0; i < m.size(); ++i) {
    if (m[i] == 0) continue;
    const auto& d = g.degree(i).components;
    for (std::size_t j = 0; j < out.rank(); ++j) out.components[j] += std::uint64_t{m[i]} * d[j];
  }
  return out;
}

// ---------------------------------------------------------------------------
// Term orders

TermOrder TermOrder::block(std::size_t front_size, OrderKind front, OrderKind back) {
  if (front == OrderKind::BlockElimination || back == OrderKind::BlockElimination)
    throw ContractError("block order inner orders must be simple");
  TermOrder o(OrderKind::BlockElimination);
  o.front_size_ = front_size;
  o.front_ = front;
  o.back_ = back;
  return o;
}

TermOrder TermOrder::of_kind(OrderKind simple_kind) {
  if (simple_kind == OrderKind::BlockElimination)
    throw ContractError("of_kind needs a simple order kind");
  return TermOrder(simple_kind);
}

bool TermOrder::is_graded() const {
  if (kind_ == OrderKind::GradedLex || kind_ == OrderKind::GradedRevLex) return true;
  // A block order with an empty front block is just its back order.
  return kind_ == OrderKind::BlockElimination && front_size_ == 0 && back_ != OrderKind::Lex;
}

bool TermOrder::eliminates(std::size_t front) const {
  if (front == 0) return true;
  if (kind_ == OrderKind::Lex) return true;
  return kind_ == OrderKind::BlockElimination && front_size_ == front;
}

TermOrder TermOrder::restricted_after(std::size_t front) const {
  if (front == 0) return *this;
  if (kind_ == OrderKind::Lex) return lex();
  if (kind_ == OrderKind::BlockElimination && front == front_size_) return TermOrder(back_);
  throw ContractError("order " + describe() + " does not eliminate the first " +
                      std::to_string(front) + " variables");
}

std::strong_ordering TermOrder::compare(const Monomial& a, const Monomial& b) const {
  require_same_length(a, b);
  auto ea = a.exponents();
  auto eb = b.exponents();
  if (kind_ != OrderKind::BlockElimination) return compare_range(kind_, ea, eb);
  std::size_t f = std::min(front_size_, a.size());
  auto c = compare_range(front_, ea.first(f), eb.first(f));
  if (c != 0) return c;
  return compare_range(back_, ea.subspan(f), eb.subspan(f));
}

std::string TermOrder::describe() const {
  if (kind_ != OrderKind::BlockElimination) return to_string(kind_);
  return "block(" + std::to_string(front_size_) + ";" + to_string(front_) + "," + to_string(back_) +
         ")";
}

std::strong_ordering compare(const TermOrder& order, const Monomial& a, const Monomial& b) {
  return order.compare(a, b);
}

std::string to_string(OrderKind k) {
  switch (k) {
    case OrderKind::Lex: return "lex";
    case OrderKind::GradedLex: return "grlex";
    case OrderKind::GradedRevLex: return "grevlex";
    case OrderKind::BlockElimination: return "block";
  }
  return "?";
}

OrderKind parse_order_kind(std::string_view s) {
  if (s == "lex") return OrderKind::Lex;
  if (s == "grlex" || s == "graded-lex" || s == "deglex") return OrderKind::GradedLex;
  if (s == "grevlex" || s == "graded-reverse-lex" || s == "degrevlex") return OrderKind::GradedRevLex;
  throw InputError("unknown term order '" + std::string(s) + "'");
}

std::optional<Binomial> Binomial::make(Monomial a, Monomial b, const TermOrder& order) {
  auto c = order.compare(a, b);
  if (c == 0) return std::nullopt;
  if (c > 0) return Binomial(std::move(a), std::move(b));
  return Binomial(std::move(b), std::move(a));
}

// ---------------------------------------------------------------------------
// Text syntax

std::string format_monomial(const Monomial& m, const VariableSet& vars) {
  if (m.size() != vars.size()) throw ContractError("monomial and variable set differ in length");
  std::string out;
  for (std::size_t i = 0; i < m.size(); ++i) {
    if (m[i] == 0) continue;
    if (!out.empty()) out += '*';
    out += vars.name(i);
    if (m[i] != 1) out += '^' + std::to_string(m[i]);
  }
  return out.empty() ? "1" : out;
}

Monomial parse_monomial(std::string_view text, const VariableSet& vars) {
  text = trim(text);
  if (text.empty()) throw InputError("empty monomial");
  std::vector<Exponent> e(vars.size(), 0);
  if (text == "1") return Monomial(std::move(e));
  std::size_t pos = 0;
  while (pos <= text.size()) {
    std::size_t star = text.find('*', pos);
    std::string_view factor = trim(text.substr(pos, star == std::string_view::npos ? star : star - pos));
    if (factor.empty()) throw InputError("empty factor in monomial '" + std::string(text) + "'");
    std::string_view name = factor;
    Exponent power = 1;
    if (auto caret = factor.find('^'); caret != std::string_view::npos) {
      name = trim(factor.substr(0, caret));
      std::string_view num = trim(factor.substr(caret + 1));
      auto [ptr, ec] = std::from_chars(num.data(), num.data() + num.size(), power);
      if (ec != std::errc() || ptr != num.data() + num.size() || num.empty())
        throw InputError("bad exponent in factor '" + std::string(factor) + "'");
    }
    if (name != "1") {
      auto idx = vars.index_of(name);
      if (!idx) throw InputError("unknown variable '" + std::string(name) + "'");
      e[*idx] = checked_add(e[*idx], power);
    }
    if (star == std::string_view::npos) break;
    pos = star + 1;
  }
  return Monomial(std::move(e));
}

std::string format_binomial(const Binomial& b, const VariableSet& vars) {
  return format_monomial(b.lead(), vars) + " - " + format_monomial(b.trail(), vars);
}

std::optional<Binomial> parse_binomial(std::string_view text, const VariableSet& vars,
                                       const TermOrder& order) {
  auto minus = text.find('-');
  if (minus == std::string_view::npos)
    throw InputError("binomial '" + std::string(text) + "' needs the form 'lead - trail'");
  return Binomial::make(parse_monomial(text.substr(0, minus), vars),
                        parse_monomial(text.substr(minus + 1), vars), order);
}

}  // namespace hilbcount
