#include "mincut/graph.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <fstream>
#include <map>
#include <numeric>
#include <sstream>

#include "mincut/errors.hpp"

namespace mincut {

Graph::Graph(VertexId vertex_count, std::vector<Edge> edges) : n_(vertex_count), edges_(std::move(edges)) {
  if (n_ < 0) throw ArgumentError("negative vertex count");
  for (std::size_t i = 0; i < edges_.size(); ++i) {
    const Edge& e = edges_[i];
    if (e.u < 0 || e.u >= n_ || e.v < 0 || e.v >= n_) {
      throw ArgumentError("edge " + std::to_string(i) + ": endpoint out of range");
    }
    if (e.u == e.v) throw ArgumentError("edge " + std::to_string(i) + ": self-loop");
    if (e.w < Weight(0)) throw ArgumentError("edge " + std::to_string(i) + ": negative weight");
  }
}

Weight Graph::total_weight() const {
  Weight total(0);
  for (const Edge& e : edges_) total += e.w;
  return total;
}

bool Graph::is_connected() const {
  if (n_ <= 1) return true;
  std::vector<VertexId> parent(static_cast<std::size_t>(n_));
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&parent](VertexId x) {
    while (parent[static_cast<std::size_t>(x)] != x) {
      parent[static_cast<std::size_t>(x)] = parent[static_cast<std::size_t>(parent[static_cast<std::size_t>(x)])];
      x = parent[static_cast<std::size_t>(x)];
    }
    return x;
  };
  VertexId components = n_;
  for (const Edge& e : edges_) {
    const VertexId a = find(e.u);
    const VertexId b = find(e.v);
    if (a != b) {
      parent[static_cast<std::size_t>(a)] = b;
      --components;
    }
  }
  return components == 1;
}

namespace {

std::vector<std::string_view> split_ws(std::string_view line) {
  std::vector<std::string_view> out;
  std::size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && std::isspace(static_cast<unsigned char>(line[i]))) ++i;
    std::size_t j = i;
    while (j < line.size() && !std::isspace(static_cast<unsigned char>(line[j]))) ++j;
    if (j > i) out.push_back(line.substr(i, j - i));
    i = j;
  }
  return out;
}

template <class Int>
bool to_int(std::string_view s, Int& out) {
  const auto* end = s.data() + s.size();
  const auto [ptr, ec] = std::from_chars(s.data(), end, out);
  return ec == std::errc() && ptr == end;
}

}  // namespace

Graph parse_graph(std::istream& in) {
  std::string line;
  std::size_t lineno = 0;
  bool have_header = false;
  std::int64_t n = 0;
  std::int64_t m = 0;
  std::vector<Edge> edges;

  while (std::getline(in, line)) {
    ++lineno;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    const auto tok = split_ws(line);
    if (tok.empty() || tok[0] == "c") continue;
    if (!have_header) {
      if (tok[0] != "p" || tok.size() != 3) throw ParseError(lineno, "expected 'p <n> <m>'");
      if (!to_int(tok[1], n) || !to_int(tok[2], m) || n < 1 || m < 0 || n > (1LL << 30) ||
          m > (1LL << 30)) {
        throw ParseError(lineno, "bad problem line");
      }
      have_header = true;
      edges.reserve(static_cast<std::size_t>(m));
      continue;
    }
    if (tok[0] != "e" || tok.size() != 4) throw ParseError(lineno, "expected 'e <u> <v> <w>'");
    if (static_cast<std::int64_t>(edges.size()) == m) throw ParseError(lineno, "more edges than declared");
    std::int64_t u = 0;
    std::int64_t v = 0;
    if (!to_int(tok[1], u) || !to_int(tok[2], v)) throw ParseError(lineno, "bad vertex id");
    if (u < 1 || u > n || v < 1 || v > n) throw ParseError(lineno, "vertex id out of range");
    if (u == v) throw ParseError(lineno, "self-loop");
    if (!tok[3].empty() && tok[3][0] == '-') throw ParseError(lineno, "negative weight");
    const auto w = parse_weight(tok[3]);
    if (!w) throw ParseError(lineno, "bad weight");
    edges.push_back({static_cast<VertexId>(u - 1), static_cast<VertexId>(v - 1), *w});
  }
  if (!have_header) throw ParseError(lineno + 1, "missing problem line");
  if (static_cast<std::int64_t>(edges.size()) != m) {
    throw ParseError(lineno + 1, "expected " + std::to_string(m) + " edges, found " +
                                     std::to_string(edges.size()));
  }
  return Graph(static_cast<VertexId>(n), std::move(edges));
}

Graph parse_graph_string(std::string_view text) {
  std::istringstream in{std::string(text)};
  return parse_graph(in);
}

Graph load_graph(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open " + path);
  return parse_graph(in);
}

std::string serialize_graph(const Graph& g) {
  std::string out = "p " + std::to_string(g.vertex_count()) + " " + std::to_string(g.edge_count()) + "\n";
  for (const Edge& e : g.edges()) {
    out += "e " + std::to_string(e.u + 1) + " " + std::to_string(e.v + 1) + " " + to_string(e.w) + "\n";
  }
  return out;
}

Graph collapse_parallel_edges(const Graph& g) {
  std::map<std::pair<VertexId, VertexId>, std::size_t> slot;
  std::vector<Edge> out;
  for (const Edge& e : g.edges()) {
    const auto key = std::minmax(e.u, e.v);
    const auto [it, inserted] = slot.try_emplace({key.first, key.second}, out.size());
    if (inserted) {
      out.push_back(e);
    } else {
      out[it->second].w += e.w;
    }
  }
  return Graph(g.vertex_count(), std::move(out));
}

}  // namespace mincut
