#include "io.hpp"

#include <algorithm>
#include <cctype>
#include <fstream>
#include <limits>
#include <sstream>

#include "hilbcount/errors.hpp"

namespace hilbcount::io {

using nlohmann::json;

std::string read_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InputError("cannot read '" + path.string() + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_file(const std::filesystem::path& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw InputError("cannot write '" + path.string() + "'");
  out << text;
}

namespace {

json parse_json(const std::string& text, std::string_view what) {
  try {
    return json::parse(text);
  } catch (const json::parse_error& e) {
    throw InputError(std::string(what) + ": " + e.what());
  }
}

template <class T>
T get_as(const json& j, std::string_view what) {
  try {
    return j.get<T>();
  } catch (const json::exception&) {
    throw InputError(std::string(what) + " has the wrong type");
  }
}

std::string strip_comment(std::string line) {
  if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
  return line;
}

bool blank(const std::string& s) { return s.find_first_not_of(" \t\r") == std::string::npos; }

}  // namespace

StepSet parse_step_set(const std::string& json_text) {
  json j = parse_json(json_text, "step set");
  if (!j.is_object() || !j.contains("steps")) throw InputError("step set needs a \"steps\" array");
  auto steps = get_as<std::vector<Step>>(j["steps"], "\"steps\"");
  std::size_t dim = j.contains("dimension") ? get_as<std::size_t>(j["dimension"], "\"dimension\"")
                                            : (steps.empty() ? 0 : steps.front().size());
  return StepSet(dim, std::move(steps));
}

std::optional<StepSet> builtin_step_set(std::string_view name) {
  if (name == "knight") return StepSet::knight();
  if (name == "king") return StepSet(2, {{1, 0}, {-1, 0}, {0, 1}, {0, -1}, {1, 1}, {1, -1}, {-1, 1}, {-1, -1}});
  if (name == "line") return StepSet(1, {{1}, {-1}});
  if (name == "rook1") return StepSet(2, {{1, 0}, {-1, 0}, {0, 1}, {0, -1}});
  return std::nullopt;
}

StepSet load_step_set(const std::string& spec) {
  if (std::filesystem::exists(spec)) return parse_step_set(read_file(spec));
  if (auto b = builtin_step_set(spec)) return *b;
  throw InputError("'" + spec + "' is neither a step-set file nor a builtin (knight, king, line, rook1)");
}

MoveSet parse_move_set(const std::string& json_text) {
  json j = parse_json(json_text, "piece");
  if (!j.is_object() || !j.contains("moves")) throw InputError("piece needs a \"moves\" array");
  MoveSet out;
  for (const auto& m : j["moves"]) {
    auto v = get_as<std::vector<int>>(m, "move");
    if (v.size() != 2) throw InputError("every move needs exactly two components");
    out.moves.emplace_back(v[0], v[1]);
  }
  if (j.contains("sliding")) out.sliding = get_as<bool>(j["sliding"], "\"sliding\"");
  return out;
}

IncompatibilityGraph parse_edge_list(const std::string& text) {
  std::istringstream in(text);
  std::string line;
  std::size_t lineno = 0;
  std::optional<std::size_t> vertices;
  std::vector<std::pair<std::size_t, std::size_t>> edges;
  while (std::getline(in, line)) {
    ++lineno;
    line = strip_comment(line);
    if (blank(line)) continue;
    std::istringstream ls(line);
    long long a = -1, b = -1;
    std::string extra;
    if (!vertices) {
      if (!(ls >> a) || a < 0 || (ls >> extra))
        throw InputError("line " + std::to_string(lineno) + ": expected the vertex count");
      vertices = static_cast<std::size_t>(a);
      continue;
    }
    if (!(ls >> a >> b) || a < 0 || b < 0 || (ls >> extra))
      throw InputError("line " + std::to_string(lineno) + ": expected an edge 'i j'");
    if (static_cast<std::size_t>(std::max(a, b)) >= *vertices)
      throw InputError("line " + std::to_string(lineno) + ": vertex out of range (declared " +
                       std::to_string(*vertices) + ")");
    edges.emplace_back(static_cast<std::size_t>(a), static_cast<std::size_t>(b));
  }
  if (!vertices) throw InputError("graph file declares no vertex count");
  return IncompatibilityGraph::from_edges(*vertices, edges);
}

MonomialIdeal parse_ideal(const std::string& text) {
  std::istringstream in(text);
  std::string line;
  std::size_t lineno = 0;
  std::optional<VariableSet> vars;
  std::vector<Monomial> gens;
  while (std::getline(in, line)) {
    ++lineno;
    line = strip_comment(line);
    if (blank(line)) continue;
    const std::string where = "line " + std::to_string(lineno) + ": ";
    if (!vars) {
      std::istringstream ls(line);
      std::string kw;
      ls >> kw;
      if (kw != "vars") throw InputError(where + "the first entry must be a 'vars' directive");
      std::vector<std::string> names;
      for (std::string name; ls >> name;) names.push_back(name);
      if (names.size() == 1 && std::all_of(names[0].begin(), names[0].end(), ::isdigit)) {
        vars = VariableSet::indexed("x", std::stoul(names[0]));
      } else {
        try {
          vars = VariableSet(names);
        } catch (const InputError& e) {
          throw InputError(where + e.what());
        }
      }
      continue;
    }
    try {
      gens.push_back(parse_monomial(line, *vars));
    } catch (const InputError& e) {
      throw InputError(where + e.what());
    }
  }
  if (!vars) throw InputError("ideal file has no 'vars' directive");
  return MonomialIdeal(*vars, std::move(gens));
}

std::string format_ideal(const MonomialIdeal& ideal) {
  std::string out = "vars";
  for (const auto& n : ideal.ambient().names()) out += ' ' + n;
  out += '\n';
  for (const auto& g : ideal.generators()) out += format_monomial(g, ideal.ambient()) + '\n';
  return out;
}

Grading parse_grading(const std::string& json_text, std::size_t nvars) {
  json j = parse_json(json_text, "grading");
  if (!j.is_object() || !j.contains("degrees")) throw InputError("grading needs a \"degrees\" array");
  auto rows = get_as<std::vector<std::vector<std::uint64_t>>>(j["degrees"], "\"degrees\"");
  if (rows.size() != nvars)
    throw InputError("grading has " + std::to_string(rows.size()) + " rows for " + std::to_string(nvars) +
                     " variables");
  if (rows.empty()) return Grading::standard(0);
  std::vector<MultiDegree> degrees;
  for (auto& r : rows) {
    if (r.size() != rows.front().size()) throw InputError("grading rows differ in length");
    degrees.emplace_back(std::move(r));
  }
  return Grading(degrees.front().rank(), std::move(degrees));
}

json big_to_json(const BigInt& v) {
  if (v >= std::numeric_limits<std::int64_t>::min() && v <= std::numeric_limits<std::int64_t>::max())
    return static_cast<std::int64_t>(v);
  return v.str();
}

json to_json(const HilbertSeriesRational& series) {
  json terms = json::array();
  for (const auto& [d, c] : series.numerator.terms())
    terms.push_back({{"degree", d.components}, {"coefficient", big_to_json(c)}});
  json den = json::array();
  for (const auto& d : series.denominator) den.push_back(d.components);
  json out{{"text", format_series(series)}, {"numerator", terms}, {"denominator", den}};
  if (series.rank() == 1) {
    json dense = json::array();
    for (const auto& c : series.numerator.coefficients()) dense.push_back(big_to_json(c));
    out["numerator_coefficients"] = dense;
  }
  return out;
}

json to_json(const HilbertClosedForm& cf) {
  json coeffs = json::array();
  for (const auto& c : cf.polynomial) coeffs.push_back(c.str());
  json exceptions = json::object();
  for (const auto& [d, v] : cf.exceptions) exceptions[std::to_string(d)] = big_to_json(v);
  json deviations = json::object();
  for (const auto& [d, v] : cf.deviations()) deviations[std::to_string(d)] = big_to_json(v);
  return {{"polynomial", format_rational_polynomial(cf.polynomial, "d")},
          {"polynomial_coefficients", coeffs},
          {"stable_from", cf.stable_from},
          {"exceptions", exceptions},
          {"deviations", deviations}};
}

json to_json(const std::vector<OracleRow>& rows) {
  json out = json::array();
  for (const auto& r : rows) out.push_back({{"d", r.d}, {"f", r.f}, {"g", r.g}});
  return out;
}

json to_json(const WalkCountReport& report) {
  json steps = json::array();
  for (const auto& s : report.steps.steps()) steps.push_back(s);
  return {{"dimension", report.steps.dimension()},
          {"steps", steps},
          {"kernel_order", report.kernel_basis.order.describe()},
          {"basis_sizes",
           {{"presentation", report.presentation_basis.size()},
            {"kernel", report.kernel_basis.size()},
            {"homogeneous", report.homogeneous_basis.size()}}},
          {"f", {{"series", to_json(report.f_series)}, {"closed_form", to_json(report.f_closed)}}},
          {"g", {{"series", to_json(report.g_series)}, {"closed_form", to_json(report.g_closed)}}},
          {"cross_check_limit", report.cross_check_limit},
          {"oracle", to_json(report.oracle_prefix)},
          {"normal_form_counts", report.normal_form_counts}};
}

}  // namespace hilbcount::io
