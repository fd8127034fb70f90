#pragma once

// File formats shared by the command-line tool and its tests.
//
//   step set     {"dimension": 2, "steps": [[1,2],[2,1],...]}
//   custom piece {"moves": [[dx,dy],...], "sliding": false}
//   graph        first token the vertex count, then one "i j" pair per edge
//   ideal        "vars x y z" or "vars 8" (x1..x8), then one monomial per line
//   grading      {"degrees": [[1,0],[0,1],...]}, one row per variable
//
// '#' starts a comment in the line-oriented formats.

#include <filesystem>
#include <string>
#include <string_view>

#include <nlohmann/json.hpp>

#include "hilbcount/boards.hpp"
#include "hilbcount/hilbert.hpp"
#include "hilbcount/walks.hpp"

namespace hilbcount::io {

std::string read_file(const std::filesystem::path& path);
void write_file(const std::filesystem::path& path, const std::string& text);

StepSet parse_step_set(const std::string& json_text);
/// knight, king, line (the two unit steps on Z), or rook1 (the four unit steps on Z^2).
std::optional<StepSet> builtin_step_set(std::string_view name);
/// A path to a step-set file, or a builtin name when no such file exists.
StepSet load_step_set(const std::string& spec);

MoveSet parse_move_set(const std::string& json_text);
IncompatibilityGraph parse_edge_list(const std::string& text);

MonomialIdeal parse_ideal(const std::string& text);
std::string format_ideal(const MonomialIdeal& ideal);
Grading parse_grading(const std::string& json_text, std::size_t nvars);

/// Fits in int64: a JSON number; otherwise a decimal string.
nlohmann::json big_to_json(const BigInt& v);

nlohmann::json to_json(const HilbertSeriesRational& series);
nlohmann::json to_json(const HilbertClosedForm& cf);
nlohmann::json to_json(const std::vector<OracleRow>& rows);
nlohmann::json to_json(const WalkCountReport& report);

}  // namespace hilbcount::io
