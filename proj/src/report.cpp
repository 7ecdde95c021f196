#include "mincut/report.hpp"

#include <charconv>
#include <json.hpp>
#include <sstream>

#include "mincut/errors.hpp"

namespace mincut {

using nlohmann::json;

std::string side_bitstring(const std::vector<bool>& side) {
  std::string bits;
  bits.reserve(side.size());
  for (bool b : side) bits.push_back(b ? '1' : '0');
  return bits;
}

std::string format_text(const CutResult& r) {
  return "value " + to_string(r.value) + "\nside " + side_bitstring(r.side) + "\n";
}

std::string format_json(const CutResult& r, const TwoRespectStats* stats) {
  json out = json::object();
  out["value"] = to_string(r.value);
  out["side"] = side_bitstring(r.side);
  out["edges"] = r.witness.edges;
  out["tree"] = r.tree_index;
  json s = json::object();
  if (stats) {
    s["frontier_predicates"] = stats->frontier_predicates;
    s["frontier_rect_queries"] = stats->frontier_rect_queries;
    s["rect_queries"] = stats->rect_queries;
    s["range_nodes_visited"] = stats->range_nodes_visited;
    s["same_path_evaluations"] = stats->same_path_evaluations;
    s["smawk_calls"] = stats->smawk_calls;
    s["smawk_evaluations"] = stats->smawk_evaluations;
    s["smawk_dimension_sum"] = stats->smawk_dimension_sum;
    s["smawk_max_ratio_violations"] = stats->smawk_max_ratio_violations;
    s["interesting_pairs"] = stats->interesting_pairs;
    s["pair_list_total"] = stats->pair_list_total;
    s["heavy_paths"] = stats->heavy_paths;
  }
  out["stats"] = std::move(s);
  return out.dump() + "\n";
}

CutResult parse_json_result(const std::string& text) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::parse_error& e) {
    throw ParseError(1, std::string("invalid JSON: ") + e.what());
  }
  try {
    CutResult r;
    const auto value = parse_weight(doc.at("value").get<std::string>());
    if (!value) throw ParseError(1, "invalid value");
    r.value = *value;
    for (char c : doc.at("side").get<std::string>()) {
      if (c != '0' && c != '1') throw ParseError(1, "side must be a bitstring");
      r.side.push_back(c == '1');
    }
    r.witness.edges = doc.at("edges").get<std::vector<EdgeId>>();
    r.witness.value = r.value;
    r.tree_index = doc.at("tree").get<int>();
    return r;
  } catch (const json::exception& e) {
    throw ParseError(1, std::string("unexpected result record: ") + e.what());
  }
}

std::vector<std::vector<EdgeId>> parse_trees(const std::string& text) {
  std::vector<std::vector<EdgeId>> trees;
  std::istringstream in(text);
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    std::istringstream words(line);
    std::string word;
    std::vector<EdgeId> tree;
    bool comment = false;
    while (words >> word) {
      if (tree.empty() && (word == "c" || word[0] == '#')) {
        comment = true;
        break;
      }
      EdgeId id = 0;
      const auto [end, ec] = std::from_chars(word.data(), word.data() + word.size(), id);
      if (ec != std::errc() || end != word.data() + word.size() || id < 0) {
        throw ParseError(line_no, "expected an edge id, got '" + word + "'");
      }
      tree.push_back(id);
    }
    if (!comment && !tree.empty()) trees.push_back(std::move(tree));
  }
  return trees;
}

std::string serialize_trees(const std::vector<std::vector<EdgeId>>& trees) {
  std::string out;
  for (const auto& tree : trees) {
    for (std::size_t i = 0; i < tree.size(); ++i) {
      if (i > 0) out.push_back(' ');
      out += std::to_string(tree[i]);
    }
    out.push_back('\n');
  }
  return out;
}

}  // namespace mincut
