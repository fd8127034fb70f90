// Acceptance suite: one PASS/FAIL line per criterion, exit status 1 if any fail.

#include <sys/wait.h>

#include <array>
#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <random>
#include <sstream>
#include <string>

#include "hilbcount/boards.hpp"
#include "hilbcount/errors.hpp"
#include "hilbcount/hilbert.hpp"
#include "hilbcount/walks.hpp"
#include "oracles.hpp"

using namespace hilbcount;

namespace {

// Wall-clock limits, seconds.
constexpr double kKnightLimit = 60;
constexpr double kConcordanceLimit = 300;
constexpr double kQueensLimit = 900;
constexpr double kRoutesLimit = 300;
constexpr double kHilbertLimit = 120;
constexpr std::uint64_t kConcordanceDepth = 10;
constexpr std::uint64_t kMacaulayDepth = 10;

struct Outcome {
  bool ok = true;
  std::ostringstream note;

  void expect(bool cond, const std::string& what) {
    if (!cond && ok) note << what;
    ok = ok && cond;
  }
};

struct Corpus {
  std::string name;
  StepSet steps;
};

std::vector<Corpus> walk_corpus() {
  return {
      {"knight", StepSet::knight()},
      {"line", StepSet(1, {{1}, {-1}})},
      {"king", StepSet(2, {{1, 0}, {-1, 0}, {0, 1}, {0, -1}, {1, 1}, {1, -1}, {-1, 1}, {-1, -1}})},
      {"singleton", StepSet(2, {{2, 1}})},
      {"tetra3d", StepSet(3, {{1, 0, 0}, {0, 1, 0}, {0, 0, 1}, {-1, -1, -1}})},
  };
}

// Criteria 1-3 and 7-8 share the knight run.
const WalkCountReport& knight() {
  static const WalkCountReport report = analyze(StepSet::knight());
  return report;
}

Outcome knight_f() {
  Outcome o;
  const auto& r = knight();
  o.expect(format_series(r.f_series) == "(1+5t+12t^2-8t^4+4t^5)/(1-t)^3", "series " + format_series(r.f_series));
  o.expect(format_rational_polynomial(r.f_closed.polynomial, "d") == "7d^2+4d+1", "polynomial");
  o.expect(r.f_closed.exceptions == std::map<std::uint64_t, BigInt>{{0, 1}, {1, 8}, {2, 33}}, "exceptions");
  o.expect(r.f_closed.stable_from == 3, "stable_from");
  return o;
}

Outcome knight_g() {
  Outcome o;
  const auto& r = knight();
  const std::vector<BigInt> want{1, 6, 17, 12, -8, -4, 4};
  o.expect(r.g_series.denominator.size() == 2, "denominator");
  for (std::size_t i = 0; i < want.size(); ++i)
    o.expect(r.g_series.numerator.coefficient(MultiDegree({i})) == want[i], "numerator t^" + std::to_string(i));
  o.expect(r.g_series.numerator.terms().size() == want.size(), "numerator length");
  o.expect(format_rational_polynomial(r.g_closed.polynomial, "d") == "28d-20", "polynomial");
  o.expect(r.g_closed.exceptions == std::map<std::uint64_t, BigInt>{{0, 1}, {1, 8}, {2, 32}, {3, 68}, {4, 96}},
           "exceptions");
  o.expect(r.g_closed.stable_from == 5, "stable_from");

  WalkOptions rev;
  rev.g_order = OrderKind::GradedRevLex;
  auto other = analyze(StepSet::knight(), rev);
  for (std::uint64_t d = 0; d <= 30; ++d)
    o.expect(other.g_closed.value(d) == r.g_closed.value(d), "grevlex g(" + std::to_string(d) + ")");
  return o;
}

Outcome concordance() {
  Outcome o;
  for (const auto& c : walk_corpus()) {
    WalkOptions opts;
    opts.cross_check_limit = kConcordanceDepth;
    auto r = analyze(c.steps, opts);
    auto ref = oracle::walks(c.steps.steps(), c.steps.dimension(), kConcordanceDepth);
    for (std::uint64_t d = 0; d <= kConcordanceDepth; ++d) {
      o.expect(r.f_closed.value(d) == ref[d].f, c.name + " f(" + std::to_string(d) + ")");
      o.expect(r.g_closed.value(d) == ref[d].g, c.name + " g(" + std::to_string(d) + ")");
    }
  }
  return o;
}

#ifdef HILBCOUNT_CLI
std::pair<int, std::string> run_cli(const std::string& args) {
  std::string cmd = std::string(HILBCOUNT_CLI) + " " + args + " 2>&1";
  FILE* pipe = popen(cmd.c_str(), "r");
  if (!pipe) return {-1, ""};
  std::string out;
  std::array<char, 4096> buf;
  std::size_t got;
  while ((got = std::fread(buf.data(), 1, buf.size(), pipe)) > 0) out.append(buf.data(), got);
  int raw = pclose(pipe);
  return {WIFEXITED(raw) ? WEXITSTATUS(raw) : -1, out};
}
#endif

Outcome queens_headline() {
  Outcome o;
  std::vector<std::string> matching;
  for (auto mode : {OwnSquareMode::PaperLiteral, OwnSquareMode::ExcludeOccupied}) {
    auto g = attack_graph({8, Piece::Queen, {}, mode});
    auto r = phi_table(g, 8, 8);
    bool hit = r.mu.front() == 11 && r.phi.contains(8, 11) && r.phi.at(8, 11) == 48;
    if (hit) matching.push_back(to_string(mode));
  }
  o.expect(!matching.empty(), "no semantics gives mu=11, Phi=48");
  o.note << "matching semantics:";
  for (const auto& m : matching) o.note << ' ' << m;
#ifdef HILBCOUNT_CLI
  auto [status, out] = run_cli("queens --n 8 --k 8 --format csv");
  o.expect(status == 0, "; cli exit " + std::to_string(status));
  o.expect(out.find("\n8,11,48\n") != std::string::npos && out.find("\n8,12,") == std::string::npos,
           "; cli output lacks 8,11,48 as the top row");
#endif
  return o;
}

Outcome routes() {
  Outcome o;
  for (std::size_t n = 2; n <= 4; ++n)
    for (auto piece : {Piece::Queen, Piece::Rook, Piece::Knight}) {
      auto g = attack_graph({n, piece, {}, OwnSquareMode::PaperLiteral});
      const std::size_t P = n * n;
      const std::string tag = to_string(piece) + " n=" + std::to_string(n);
      auto dense = expand(hilbert_route(g), MultiDegree({P, P}));
      auto result = phi_table(g, 0, P);
      for (std::size_t k = 0; k <= P; ++k) {
        auto profile = free_profile(g, k, 0, {0, false, 1});
        BigInt row = 0;
        for (std::size_t u = 0; u <= P; ++u) {
          BigInt hf = hf_bigraded(g, k, u);
          o.expect(dense[k * (P + 1) + u] == hf, tag + " hilbert_route");
          o.expect(aggregate_profile(profile, u) == hf, tag + " aggregation");
          auto it = profile.counts.find(u);
          BigInt direct = it == profile.counts.end() ? BigInt(0) : it->second;
          BigInt inverted = result.phi.contains(k, u) ? result.phi.at(k, u) : BigInt(0);
          o.expect(inverted == direct, tag + " inversion");
          row += direct;
        }
        o.expect(row == binomial(P, k), tag + " row sum");
      }
    }
  return o;
}

Outcome hilbert_oracle() {
  Outcome o;
  std::mt19937_64 rng(20260101);
  std::uniform_int_distribution<std::size_t> nv(1, 5), ng(0, 6);
  std::uniform_int_distribution<Exponent> ex(0, 4);
  for (int trial = 0; trial < 200; ++trial) {
    const std::size_t n = nv(rng), count = ng(rng);
    std::vector<std::vector<Exponent>> gens;
    std::vector<Monomial> monos;
    for (std::size_t i = 0; i < count; ++i) {
      std::vector<Exponent> e(n);
      for (auto& x : e) x = ex(rng);
      gens.push_back(e);
      monos.emplace_back(e);
    }
    auto series = hilbert_numerator(MonomialIdeal(VariableSet::indexed("x", n), monos), Grading::standard(n));
    auto values = expand(series, MultiDegree({10}));
    std::vector<std::vector<std::uint64_t>> degs(n, {1});
    for (std::uint64_t d = 0; d <= 10; ++d)
      o.expect(values[d] == oracle::standard_count(gens, degs, {d}), "trial " + std::to_string(trial));
    auto canon = canonicalize(series);
    if (!canon.denominator.empty()) o.expect(canon.numerator.value_at_one() != 0, "P(1) = 0");
  }
  return o;
}

Monomial pad_front(const Monomial& m, std::size_t zeros) {
  std::vector<Exponent> e(zeros, 0);
  for (std::size_t i = 0; i < m.size(); ++i) e.push_back(m[i]);
  return Monomial(std::move(e));
}

void check_walk_bases(Outcome& o, const std::string& name, const StepSet& steps, const WalkCountReport& r) {
  auto pres = presentation_ideal(steps);
  for (const auto* b : {&r.presentation_basis, &r.kernel_basis, &r.homogeneous_basis}) {
    o.expect(satisfies_buchberger_criterion(*b), name + " criterion");
    o.expect(is_reduced(*b), name + " reduced");
  }
  for (const auto& g : pres.generators)
    o.expect(!normal_form(g, r.presentation_basis).has_value(), name + " generator");
  // Kernel elements lie in the presentation ideal.
  const std::size_t front = 1 + steps.dimension();
  for (const auto& k : r.kernel_basis.elements) {
    auto lifted = Binomial::make(pad_front(k.lead(), front), pad_front(k.trail(), front), r.presentation_basis.order);
    o.expect(lifted && !normal_form(*lifted, r.presentation_basis).has_value(), name + " kernel element");
  }
  for (const auto& h : r.homogeneous_basis.elements) {
    o.expect(is_homogeneous(h), name + " homogeneous");
    auto again = Binomial::make(h.lead(), h.trail(), r.kernel_basis.order);
    o.expect(again && !normal_form(*again, r.kernel_basis).has_value(), name + " H in kernel");
  }
}

Outcome groebner_soundness() {
  Outcome o;
  check_walk_bases(o, "knight", StepSet::knight(), knight());
  for (const auto& c : walk_corpus()) {
    WalkOptions opts;
    opts.cross_check_limit = kConcordanceDepth;
    check_walk_bases(o, c.name, c.steps, analyze(c.steps, opts));
  }
  return o;
}

Outcome macaulay() {
  Outcome o;
  const auto& r = knight();
  // Distinct normal forms against GB(H) versus the Hilbert series of in(H).
  auto series = expand(r.f_series, MultiDegree({kMacaulayDepth}));
  for (std::uint64_t d = 0; d <= kMacaulayDepth; ++d) {
    auto direct = distinct_normal_forms(r.homogeneous_basis, d);
    o.expect(series[d] == direct, "d=" + std::to_string(d));
  }
  return o;
}

}  // namespace

int main() {
  struct Criterion {
    int id;
    const char* title;
    double limit;
    std::function<Outcome()> run;
  };
  const std::vector<Criterion> criteria{
      {1, "knight f-pipeline", kKnightLimit, knight_f},
      {2, "knight g-pipeline", kKnightLimit, knight_g},
      {3, "walk oracle concordance", kConcordanceLimit, concordance},
      {4, "queens headline", kQueensLimit, queens_headline},
      {5, "board route agreement", kRoutesLimit, routes},
      {6, "monomial Hilbert oracle", kHilbertLimit, hilbert_oracle},
      {7, "Groebner soundness", kConcordanceLimit, groebner_soundness},
      {8, "Macaulay equality", kKnightLimit, macaulay},
  };
  int failures = 0;
  for (const auto& c : criteria) {
    auto start = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = c.run();
    } catch (const std::exception& e) {
      o.ok = false;
      o.note << "exception: " << e.what();
    }
    double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (secs > c.limit) {
      o.ok = false;
      o.note << " (over " << c.limit << " s)";
    }
    if (!o.ok) ++failures;
    std::printf("%s criterion %d: %s [%.2f s] %s\n", o.ok ? "PASS" : "FAIL", c.id, c.title, secs,
                o.note.str().c_str());
    std::fflush(stdout);
  }
  return failures == 0 ? 0 : 1;
}
