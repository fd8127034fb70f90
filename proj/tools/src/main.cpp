// hilbcount: walk-count closed forms, queens tables and raw Hilbert series.
//
// Exit codes: 0 ok, 1 bad input, 2 work budget exhausted, 3 two independent
// computations disagreed. Every failure prints one line "error[<kind>]: ...".

#include <CLI11.hpp>

#include <cstdlib>
#include <functional>
#include <iomanip>
#include <iostream>
#include <sstream>

#include "hilbcount/errors.hpp"
#include "io.hpp"

namespace {

using namespace hilbcount;
using nlohmann::json;

std::uint64_t env_budget(const char* name) {
  const char* v = std::getenv(name);
  if (!v || !*v) return 0;
  char* end = nullptr;
  auto n = std::strtoull(v, &end, 10);
  if (*end) throw InputError(std::string(name) + " must be a nonnegative integer");
  return n;
}

struct Output {
  std::string format = "pretty";
  std::string path;

  void emit(const std::string& text) const {
    if (path.empty())
      std::cout << text << std::flush;
    else
      io::write_file(path, text);
  }
};

void add_format(CLI::App* cmd, Output& out, std::vector<std::string> formats) {
  cmd->add_option("--format", out.format, "Output format")->check(CLI::IsMember(formats));
  cmd->add_option("--out", out.path, "Write the result here instead of stdout");
}

// ---------------------------------------------------------------------------
// Boards

struct GraphArgs {
  std::size_t n = 8;
  std::string piece = "queen";
  std::string piece_file;
  std::string graph;
  std::string mode = "paper-literal";
  std::uint64_t budget = 0;
  unsigned workers = 0;
  bool no_symmetry = false;

  EnumerationOptions options() const { return {budget, !no_symmetry, workers}; }
};

void add_graph_options(CLI::App* cmd, GraphArgs& a) {
  cmd->add_option("--n", a.n, "Board side")->check(CLI::Range(1, 16));
  cmd->add_option("--piece", a.piece, "queen, rook, bishop, knight or king");
  cmd->add_option("--piece-file", a.piece_file, "Custom piece JSON");
  cmd->add_option("--graph", a.graph, "Edge-list graph file (replaces the board)");
  cmd->add_option("--mode", a.mode, "Own-square semantics: paper-literal or exclude-occupied");
  cmd->add_option("--budget", a.budget, "Search-node cap (0 = none; default $HILBCOUNT_NODE_BUDGET)");
  cmd->add_option("--workers", a.workers, "Worker threads (0 = all cores)");
  cmd->add_flag("--no-symmetry", a.no_symmetry, "Disable board-symmetry reduction");
}

struct BuiltGraph {
  IncompatibilityGraph graph;
  std::string description;
};

BuiltGraph build_graph(const GraphArgs& a) {
  if (!a.graph.empty()) {
    auto g = io::parse_edge_list(io::read_file(a.graph));
    return {g, "graph " + a.graph};
  }
  BoardSpec spec{a.n, Piece::Queen, {}, parse_own_square_mode(a.mode)};
  std::string name;
  if (!a.piece_file.empty()) {
    spec.piece = Piece::Custom;
    spec.custom = io::parse_move_set(io::read_file(a.piece_file));
    name = "custom piece";
  } else {
    spec.piece = parse_piece(a.piece);
    name = to_string(spec.piece);
  }
  auto g = attack_graph(spec);
  return {g, name + " on " + std::to_string(a.n) + "x" + std::to_string(a.n) + " (" + to_string(spec.mode) + ")"};
}

struct QueensArgs {
  GraphArgs graph;
  std::optional<std::size_t> k, kmin, kmax;
  std::size_t umin = 0;
  bool dense = false;
  bool hf = false;
  Output out;
};

struct QueensRow {
  std::size_t k;
  std::size_t mu;
  std::map<std::size_t, BigInt> phi;
  std::map<std::size_t, BigInt> hf;
};

std::string render_queens(const QueensArgs& a, const BuiltGraph& bg, const std::vector<QueensRow>& rows,
                          bool partial) {
  std::ostringstream os;
  const auto& g = bg.graph;
  if (a.out.format == "json") {
    json jrows = json::array();
    for (const auto& r : rows) {
      json phi = json::object(), hf = json::object();
      for (const auto& [u, v] : r.phi) phi[std::to_string(u)] = io::big_to_json(v);
      json row{{"k", r.k}, {"mu", r.mu}, {"phi", phi}};
      if (a.hf) {
        for (const auto& [u, v] : r.hf) hf[std::to_string(u)] = io::big_to_json(v);
        row["hf"] = hf;
      }
      jrows.push_back(row);
    }
    json doc{{"graph",
              {{"description", bg.description},
               {"placements", g.placement_count()},
               {"targets", g.target_count()},
               {"symmetries", g.symmetries().size()}}},
             {"umin", a.umin},
             {"rows", jrows},
             {"partial", partial}};
    os << doc.dump(2) << '\n';
    return os.str();
  }

  if (a.out.format == "csv" && a.dense) {
    std::size_t umax = a.umin;
    for (const auto& r : rows)
      if (!r.phi.empty()) umax = std::max(umax, r.phi.rbegin()->first);
    os << 'k';
    for (std::size_t u = a.umin; u <= umax; ++u) os << ",u" << u;
    os << '\n';
    for (const auto& r : rows) {
      os << r.k;
      for (std::size_t u = a.umin; u <= umax; ++u) {
        auto it = r.phi.find(u);
        os << ',' << (it == r.phi.end() ? BigInt(0) : it->second);
      }
      os << '\n';
    }
    return os.str();
  }

  if (a.out.format == "csv") {
    os << (a.hf ? "k,u,phi,hf\n" : "k,u,phi\n");
    for (const auto& r : rows)
      for (const auto& [u, v] : r.phi) {
        if (v == 0 && (!a.hf || r.hf.at(u) == 0)) continue;
        os << r.k << ',' << u << ',' << v;
        if (a.hf) os << ',' << r.hf.at(u);
        os << '\n';
      }
    return os.str();
  }

  os << bg.description << ": " << g.placement_count() << " placements, " << g.target_count() << " targets, "
     << g.symmetries().size() << " symmetries\n";
  for (const auto& r : rows) {
    os << "\nk = " << r.k << "   mu = " << r.mu << '\n';
    os << (a.hf ? "  u    Phi(k,u)    HF(k,u)\n" : "  u    Phi(k,u)\n");
    for (auto it = r.phi.rbegin(); it != r.phi.rend(); ++it) {
      os << "  " << std::left << std::setw(5) << it->first;
      if (a.hf)
        os << std::setw(12) << it->second << r.hf.at(it->first);
      else
        os << it->second;
      os << '\n';
    }
  }
  if (partial) os << "\n(partial: work budget exhausted)\n";
  return os.str();
}

int cmd_queens(QueensArgs& a) {
  if (a.k) a.kmin = a.kmax = *a.k;
  if (!a.kmax) throw InputError("give --k or --kmax");
  std::size_t kmin = a.kmin.value_or(0), kmax = *a.kmax;
  if (kmin > kmax) throw InputError("--kmin exceeds --kmax");
  auto bg = build_graph(a.graph);
  if (kmax > bg.graph.placement_count())
    throw InputError("k = " + std::to_string(kmax) + " exceeds the " +
                     std::to_string(bg.graph.placement_count()) + " placements");

  auto opts = a.graph.options();
  std::vector<QueensRow> rows;
  try {
    for (std::size_t k = kmin; k <= kmax; ++k) {
      auto res = phi_table(bg.graph, k, k, a.umin, opts);
      QueensRow row{k, res.mu.front(), {}, {}};
      for (std::size_t u = res.phi.umin(); u <= res.phi.umax(); ++u) {
        if (res.phi.at(k, u) != 0) row.phi[u] = res.phi.at(k, u);
        row.hf[u] = res.hf.at(k, u);
      }
      if (row.phi.empty()) row.mu = mu(bg.graph, k, opts);
      if (a.hf) {
        // Zero Phi cells with nonzero HF still belong in the table.
        for (const auto& [u, v] : row.hf)
          if (v != 0) row.phi.try_emplace(u, 0);
      }
      rows.push_back(std::move(row));
    }
  } catch (const BudgetExceeded&) {
    a.out.emit(render_queens(a, bg, rows, true));
    throw;
  }
  a.out.emit(render_queens(a, bg, rows, false));
  return 0;
}

// ---------------------------------------------------------------------------
// Walks

struct WalksArgs {
  std::string steps = "knight";
  std::uint64_t limit = 10;
  std::string g_order = "grlex";
  std::string export_initial;
  std::uint64_t budget = 0;
  Output out;
};

int cmd_walks(const WalksArgs& a) {
  auto steps = io::load_step_set(a.steps);
  WalkOptions opts;
  opts.g_order = parse_order_kind(a.g_order);
  opts.cross_check_limit = a.limit;
  opts.hilbert.max_nodes = a.budget;
  auto report = analyze(steps, opts);
  if (!a.export_initial.empty()) io::write_file(a.export_initial, io::format_ideal(initial_ideal(report.kernel_basis)));

  if (a.out.format == "json") {
    a.out.emit(io::to_json(report).dump(2) + "\n");
    return 0;
  }
  std::ostringstream os;
  os << "steps:";
  for (const auto& s : steps.steps()) os << ' ' << format_step(s);
  os << "\nGroebner bases: presentation " << report.presentation_basis.size() << ", kernel "
     << report.kernel_basis.size() << " (" << report.kernel_basis.order.describe() << "), homogeneous part "
     << report.homogeneous_basis.size() << "\n\n";
  os << "HS(S/in(H)) = " << format_series(report.f_series) << '\n' << format_piecewise(report.f_closed, "f") << '\n';
  os << "HS(S/in(kernel)) = " << format_series(report.g_series) << '\n'
     << format_piecewise(report.g_closed, "g") << '\n';
  os << "oracle agrees for d <= " << a.limit << "; normal forms agree for d <= "
     << (report.normal_form_counts.empty() ? std::string("-") : std::to_string(report.normal_form_counts.size() - 1))
     << '\n';
  a.out.emit(os.str());
  return 0;
}

// ---------------------------------------------------------------------------
// Hilbert

struct HilbertArgs {
  std::string ideal;
  std::string grading;
  std::uint64_t terms = 10;
  std::uint64_t budget = 0;
  Output out;
};

int cmd_hilbert(const HilbertArgs& a) {
  auto ideal = io::parse_ideal(io::read_file(a.ideal));
  const std::size_t n = ideal.ambient().size();
  Grading grading = a.grading.empty() ? Grading::standard(n) : io::parse_grading(io::read_file(a.grading), n);
  auto series = hilbert_numerator(ideal, grading, HilbertOptions{a.budget});

  bool standard = grading.rank() == 1 &&
                  std::all_of(grading.degrees().begin(), grading.degrees().end(),
                              [](const MultiDegree& d) { return d.components[0] == 1; });
  std::optional<HilbertClosedForm> cf;
  if (standard) {
    series = canonicalize(series);
    cf = closed_form(series);
  }
  std::vector<BigInt> values;
  if (grading.rank() == 1) values = expand(series, MultiDegree({a.terms}));

  if (a.out.format == "json") {
    json doc{{"variables", ideal.ambient().names()}, {"generators", ideal.size()}, {"series", io::to_json(series)}};
    if (cf) doc["closed_form"] = io::to_json(*cf);
    if (!values.empty()) {
      json v = json::array();
      for (const auto& x : values) v.push_back(io::big_to_json(x));
      doc["values"] = v;
    }
    a.out.emit(doc.dump(2) + "\n");
    return 0;
  }
  std::ostringstream os;
  os << "HS = " << format_series(series) << '\n';
  if (cf) os << "HP(d) = " << format_rational_polynomial(cf->polynomial, "d") << '\n' << format_piecewise(*cf, "HF");
  if (!values.empty()) {
    os << "HF(0.." << a.terms << "):";
    for (const auto& v : values) os << ' ' << v;
    os << '\n';
  }
  a.out.emit(os.str());
  return 0;
}

// ---------------------------------------------------------------------------
// Oracles

struct OracleWalksArgs {
  std::string steps = "knight";
  std::uint64_t dmax = 10;
  Output out;
};

int cmd_oracle_walks(const OracleWalksArgs& a) {
  auto rows = walk_oracle(io::load_step_set(a.steps), a.dmax);
  if (a.out.format == "json") {
    a.out.emit(io::to_json(rows).dump(2) + "\n");
    return 0;
  }
  std::ostringstream os;
  os << "d,f,g\n";
  for (const auto& r : rows) os << r.d << ',' << r.f << ',' << r.g << '\n';
  a.out.emit(os.str());
  return 0;
}

struct OracleQueensArgs {
  GraphArgs graph;
  std::size_t k = 1;
  Output out;
};

int cmd_oracle_queens(OracleQueensArgs& a) {
  auto bg = build_graph(a.graph);
  if (a.k > bg.graph.placement_count()) throw InputError("k exceeds the number of placements");
  auto opts = a.graph.options();
  opts.use_symmetry = false;
  auto profile = free_profile(bg.graph, a.k, 0, opts);
  if (a.out.format == "json") {
    json c = json::object();
    for (const auto& [s, v] : profile.counts) c[std::to_string(s)] = io::big_to_json(v);
    a.out.emit(json{{"k", a.k}, {"profile", c}}.dump(2) + "\n");
    return 0;
  }
  std::ostringstream os;
  os << "free,count\n";
  for (auto it = profile.counts.rbegin(); it != profile.counts.rend(); ++it)
    os << it->first << ',' << it->second << '\n';
  a.out.emit(os.str());
  return 0;
}

int report(const char* kind, const std::exception& e, int code) {
  std::string msg = e.what();
  std::replace(msg.begin(), msg.end(), '\n', ' ');
  std::cerr << "error[" << kind << "]: " << msg << '\n';
  return code;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact counting with Hilbert functions: lattice walks and attacked squares"};
  app.require_subcommand(1);
  std::function<int()> run;

  QueensArgs qa;
  WalksArgs wa;
  HilbertArgs ha;
  OracleWalksArgs owa;
  OracleQueensArgs oqa;
  try {
    qa.graph.budget = oqa.graph.budget = env_budget("HILBCOUNT_NODE_BUDGET");
    wa.budget = ha.budget = env_budget("HILBCOUNT_HILBERT_BUDGET");
  } catch (const InputError& e) {
    return report("input", e, 1);
  }

  auto* queens = app.add_subcommand("queens", "Phi(k,u) table: k-placements leaving exactly u targets unattacked");
  add_graph_options(queens, qa.graph);
  queens->add_option("--k", qa.k, "Single number of pieces");
  queens->add_option("--kmin", qa.kmin, "Smallest k (default 0)");
  queens->add_option("--kmax", qa.kmax, "Largest k");
  queens->add_option("--umin", qa.umin, "Smallest u reported (larger values prune harder)");
  queens->add_flag("--dense", qa.dense, "CSV as a k-by-u matrix");
  queens->add_flag("--hf", qa.hf, "Also report HF(k,u)");
  add_format(queens, qa.out, {"csv", "json", "pretty"});
  queens->callback([&] { run = [&] { return cmd_queens(qa); }; });

  auto* walks = app.add_subcommand("walks", "Closed forms for f(d) and g(d) of a step set");
  walks->add_option("--steps", wa.steps, "Step-set JSON file or builtin name");
  walks->add_option("--limit", wa.limit, "Check against the sumset oracle up to this d");
  walks->add_option("--g-order", wa.g_order, "Degree-refining order for g: grlex or grevlex");
  walks->add_option("--export-initial", wa.export_initial, "Write in(kernel) as an ideal file");
  walks->add_option("--budget", wa.budget, "Hilbert recursion node cap (default $HILBCOUNT_HILBERT_BUDGET)");
  add_format(walks, wa.out, {"json", "pretty"});
  walks->callback([&] { run = [&] { return cmd_walks(wa); }; });

  auto* hilbert = app.add_subcommand("hilbert", "Hilbert series of S/I for a monomial ideal I");
  hilbert->add_option("--ideal", ha.ideal, "Ideal file")->required();
  hilbert->add_option("--grading", ha.grading, "Grading JSON (default: standard)");
  hilbert->add_option("--terms", ha.terms, "Print HF(0..terms) in the univariate case");
  hilbert->add_option("--budget", ha.budget, "Recursion node cap (default $HILBCOUNT_HILBERT_BUDGET)");
  add_format(hilbert, ha.out, {"json", "pretty"});
  hilbert->callback([&] { run = [&] { return cmd_hilbert(ha); }; });

  auto* oracle = app.add_subcommand("oracle", "Brute-force reference counts, no algebra");
  oracle->require_subcommand(1);
  auto* ow = oracle->add_subcommand("walks", "Sumset layers f(d), g(d)");
  ow->add_option("--steps", owa.steps, "Step-set JSON file or builtin name");
  ow->add_option("--dmax", owa.dmax, "Largest d");
  add_format(ow, owa.out, {"csv", "json"});
  owa.out.format = "csv";
  ow->callback([&] { run = [&] { return cmd_oracle_walks(owa); }; });
  auto* oq = oracle->add_subcommand("queens", "Free-count profile by plain enumeration");
  add_graph_options(oq, oqa.graph);
  oq->add_option("--k", oqa.k, "Number of pieces");
  add_format(oq, oqa.out, {"csv", "json"});
  oqa.out.format = "csv";
  oq->callback([&] { run = [&] { return cmd_oracle_queens(oqa); }; });

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) return app.exit(e);
    return report("input", e, 1);
  }

  try {
    return run();
  } catch (const InputError& e) {
    return report("input", e, 1);
  } catch (const BudgetExceeded& e) {
    return report("budget", e, 2);
  } catch (const SoundnessError& e) {
    return report("soundness", e, 3);
  } catch (const ContractError& e) {
    return report("input", e, 1);
  } catch (const std::exception& e) {
    return report("internal", e, 1);
  }
}
