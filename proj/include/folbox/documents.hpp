#ifndef FOLBOX_DOCUMENTS_HPP_
#define FOLBOX_DOCUMENTS_HPP_

#include <filesystem>
#include <optional>
#include <string>

#include "json.hpp"

#include "folbox/kripke.hpp"

namespace folbox {

// Structure file layout (JSON, one object per file):
//
//   {
//     "worlds": ["w0", "w1"],
//     "domains": {"w0": ["a", "b"], "w1": ["a"]},
//     "interpretation": {"P/1": {"w0": [["a"]], "w1": []}},
//     "valuation": {"w0": {"x": "a"}},      // optional
//     "world": "w0"                         // optional, countermodels only
//   }
//
// Worlds missing from a predicate's map have an empty extension there.
struct StructureDoc {
  Structure structure;
  std::optional<Valuation> valuation;
  std::optional<WorldId> world;
};

// Throws DocumentError (shape), UnknownWorld, DomainError, ArityError.
StructureDoc parse_structure(const nlohmann::json& doc);

nlohmann::json structure_to_json(const Structure& s);
nlohmann::json pointed_to_json(const PointedModel& m);
// Requires both the "world" and "valuation" keys.
PointedModel parse_pointed(const nlohmann::json& doc);

// Throws DocumentError when the file cannot be read or is not JSON.
nlohmann::json read_json_file(const std::filesystem::path& path);

// Element names used by generated structures: a, b, ..., z, e26, e27, ...
std::string element_name(std::size_t i);

}  // namespace folbox

#endif  // FOLBOX_DOCUMENTS_HPP_
