#pragma once

#include "fachom/excision.hpp"
#include "fachom/lie.hpp"
#include "fachom/simplicial.hpp"

#include <json.hpp>

#include <string>

namespace fachom {

/// Reads a whole file; Input on failure.
std::string read_text(const std::string& path);
/// Parses JSON text; Input with the byte offset on failure.
nlohmann::json parse_json(const std::string& text, const std::string& origin = "input");

/// Presentation file:
///   {"kind": "algebra" | "lie", "generators": [{"name", "degree", "weight"}],
///    "commutative": bool, "relations": [[{"word": [...], "coef": "p/q"}]],
///    "brackets": [{"left", "right", "value": {"name": "p/q"}}]}
/// `expected_kind` is "algebra" or "lie"; a file of the other kind is an
/// Input error.
GradedSpacePresentation presentation_from_json(const nlohmann::json& j, const std::string& expected_kind);
nlohmann::json presentation_to_json(const GradedSpacePresentation& p, const std::string& kind);

/// Generator list: [{"name", "degree", "weight"}] or {"generators": [...]}.
GradedSpacePresentation generators_from_json(const nlohmann::json& j);

/// {"name", "basis": [{"label", "degree"}], "products": [{"left", "right", "value": {...}}]}
CommutativeModel commutative_model_from_json(const nlohmann::json& j);

/// A preset name or a path to a JSON file.
WgAlgebra load_algebra(const std::string& spec, int max_weight);
WgLieAlgebra load_lie(const std::string& spec, int max_weight);
CommutativeModel load_commutative_model(const std::string& spec);
/// Built-in name or JSON file; the space_tensor entry point takes care of
/// level counts for built-ins.
FiniteSimplicialSet load_simplicial(const std::string& spec, std::size_t level_count);
/// "x1,x2" style specs are not accepted; a count "k" gives k degree-0
/// weight-1 generators, otherwise a JSON generator file.
GradedSpacePresentation load_generators(const std::string& spec);

/// {"A": "poly", "B": {"algebra": <preset or presentation>},
///  "M": {"module": "regular" | "trivial", "over": "A"}}
/// Every algebra is validated; Validation names the offending tuple.
CoefficientAssignment bindings_from_json(const nlohmann::json& j, int max_weight);

}  // namespace fachom
