#pragma once

#include "stacky/analysis.hpp"

#include <json.hpp>

#include <stdexcept>
#include <string>
#include <vector>

namespace stacky {

/// Malformed JSON or a document that does not match the wire schema.
class DocumentError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct ParsedDocument {
  StackyFanDocument document;
  std::vector<std::string> warnings;
};

/// Wire format:
///   {"group": {"rank": d, "torsion": [q...]},
///    "beta": [[...], ...],          // n columns of rank + |torsion| integers
///    "max_cones": [[i, ...], ...],  // 0-based ray indices
///    "offsets": ["p/q", ...]}       // optional, switches to polytope mode
/// Integers may be JSON numbers or decimal strings. A torsion list that is
/// not in invariant-factor form is canonicalized (beta is rewritten to
/// match) and a warning is recorded. Throws DocumentError.
ParsedDocument parse_document(const nlohmann::json& j);
ParsedDocument parse_document_text(const std::string& text);

nlohmann::json to_json(const StackyFanDocument& doc);
nlohmann::json to_json(const FgAbGroup& g);
nlohmann::json to_json(const std::vector<Violation>& violations);

nlohmann::json report_to_json(const AnalysisReport& report);
/// Inverse of report_to_json. Throws DocumentError.
AnalysisReport report_from_json(const nlohmann::json& j);

/// Human-readable report with 1-based ray indices.
std::string pretty_report(const AnalysisReport& report, bool color);

}  // namespace stacky
