#pragma once

#include <string>
#include <utility>
#include <vector>

#include "dnt/dnumbers.hpp"
#include "dnt/dst.hpp"
#include "dnt/errors.hpp"
#include "dnt/fuzzy.hpp"
#include "dnt/game.hpp"
#include "dnt/pipeline.hpp"

namespace dnt::io {

/// What a document's top-level keys say it is.
enum class DocumentKind { scale, dnumbers, nonexcl_matrix, scenario, game, unknown };

DocumentKind detect_kind(const std::string& text);

// Parsers validate every type invariant and throw ParseError with the path
// of the offending field. Triangles serialize as [a1, a2, a3] everywhere.

LinguisticScale parse_scale(const std::string& text);
std::pair<DFrame, std::vector<DNumber>> parse_dnumbers(const std::string& text);
NonExclusivityMatrix parse_nonexcl_matrix(const std::string& text);
BasicProbabilityAssignment parse_bpa(const std::string& text);
ScenarioSpec parse_scenario(const std::string& text);
BimatrixGame parse_game(const std::string& text);

std::string serialize_scale(const LinguisticScale& scale, int indent = 2);
std::string serialize_dnumbers(const DFrame& frame, const std::vector<DNumber>& ds,
                               int indent = 2);
std::string serialize_nonexcl_matrix(const NonExclusivityMatrix& m, int indent = 2);
std::string serialize_bpa(const BasicProbabilityAssignment& m, int indent = 2);
std::string serialize_scenario(const ScenarioSpec& spec, int indent = 2);
std::string serialize_game(const BimatrixGame& game, int indent = 2);
std::string serialize_report(const Report& report, int indent = 2);

/// Focal sets of a D number as (labels-with-X-last, mass) rows in ascending
/// bitset order. The shared building block of rendering and serialization.
std::vector<std::pair<std::string, double>> dnumber_rows(const DNumber& d);

std::string read_file(const std::string& path);
void write_file(const std::string& path, const std::string& content);

}  // namespace dnt::io
