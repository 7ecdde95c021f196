#pragma once

#include <string>
#include <vector>

#include "mincut/pipeline.hpp"

namespace mincut {

std::string side_bitstring(const std::vector<bool>& side);

// "value <w>\nside <bits>\n"
std::string format_text(const CutResult& r);

// {"value": "<w>", "side": "<bits>", "edges": [...], "tree": i, "stats": {...}}
// with the weight as a string so 64-bit values survive any JSON consumer.
std::string format_json(const CutResult& r, const TwoRespectStats* stats = nullptr);

// Inverse of format_json (stats are ignored). Throws ParseError.
CutResult parse_json_result(const std::string& text);

// Tree file: one line per tree, whitespace-separated 0-based edge ids.
std::vector<std::vector<EdgeId>> parse_trees(const std::string& text);
std::string serialize_trees(const std::vector<std::vector<EdgeId>>& trees);

}  // namespace mincut
