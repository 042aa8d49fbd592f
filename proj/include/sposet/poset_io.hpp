#pragma once

#include <filesystem>
#include <string>

#include <json.hpp>

#include "sposet/poset.hpp"

namespace sposet {

// { "elements": ["<label>", ...], "covers": [["<lower>", "<upper>"], ...] }
// Elements and covers are emitted in canonical order.  Parsing is strict:
// the covers must be transitively reduced.
nlohmann::json poset_to_json(const Poset& p);
Poset poset_from_json(const nlohmann::json& j);

// Graphviz digraph, one node per element and one edge per cover, with nodes
// of equal atom-support size (longest-chain height when there is no unique
// minimum) on the same rank.
std::string poset_to_dot(const Poset& p);

// Helpers shared by the CLI and the tests.  Both throw ParseError.
nlohmann::json read_json_file(const std::filesystem::path& path);
nlohmann::json parse_json_text(const std::string& text);
void write_text_file(const std::filesystem::path& path, const std::string& text);

// Pretty-printed JSON followed by a newline.
std::string dump_json(const nlohmann::json& j);

}  // namespace sposet
