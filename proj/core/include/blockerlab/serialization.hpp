#pragma once

// JSON and text forms of edge sets, paths, descriptors and reports.
//
//   edge set    {"n": 15, "edges": [[1, 2], [2, 3]]}
//   path        [4, 5, 3, 6, ...]
//   descriptor  {"class": "A", "m": 8, "k": 0, "alpha": 2, "delta": 1,
//                "eps": [3, 1], "xi": [2]}   (Class B adds beta, gamma, eta)
//   edge list   "1-2,2-3,14-2"

#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>

#include <nlohmann/json.hpp>

#include "blockerlab/blocker_families.hpp"
#include "blockerlab/exhaustive.hpp"
#include "blockerlab/geometry.hpp"
#include "blockerlab/ham_paths.hpp"

namespace blockerlab {

/// Malformed textual input; `position` is the 0-based byte offset of the problem.
class ParseError : public std::invalid_argument {
 public:
  ParseError(const std::string& what, std::size_t position)
      : std::invalid_argument(what + " at position " + std::to_string(position)), position_(position) {}
  std::size_t position() const { return position_; }

 private:
  std::size_t position_;
};

/// Parses "a-b,c-d,..." into an edge set of CK(n). Whitespace around tokens is
/// ignored; an empty string is the empty set.
EdgeSet parse_edge_list(int n, std::string_view text);
std::string format_edge_list(const EdgeSet& s);

/// nlohmann::json::parse with syntax errors rethrown as ParseError.
nlohmann::json parse_json(std::string_view text);

nlohmann::json to_json(const EdgeSet& s);
EdgeSet edge_set_from_json(const nlohmann::json& j);

nlohmann::json to_json(const Path& p);

nlohmann::json to_json(const BlockerDescriptor& d);
/// Throws std::invalid_argument on missing or mistyped fields (the values
/// themselves are checked by validate, not here).
BlockerDescriptor descriptor_from_json(const nlohmann::json& j);

nlohmann::json to_json(const CharacterizationReport& r);
nlohmann::json to_json(const MinBlockingResult& r);

}  // namespace blockerlab
