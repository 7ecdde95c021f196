#include "cli.hpp"

#include <CLI11.hpp>
#include <json.hpp>
#include <algorithm>
#include <chrono>
#include <filesystem>
#include <fstream>
#include <iomanip>
#include <sstream>

#include "mincut/errors.hpp"
#include "mincut/generators.hpp"
#include "mincut/graph.hpp"
#include "mincut/pipeline.hpp"
#include "mincut/report.hpp"

namespace mincut::cli {

namespace fs = std::filesystem;

namespace {

constexpr std::uint64_t kDefaultSeed = 0x5eed;
constexpr VertexId kBruteForceLimit = 256;

class InputError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct Common {
  std::string backend = "merge";
  double epsilon = 0.25;
  int trees = 0;
  std::uint64_t seed = kDefaultSeed;
  std::string format = "text";
  int threads = 1;
  bool collapse = false;
  bool oracle = false;
};

void add_solver_flags(CLI::App& cmd, Common& c, bool backend_flag = true) {
  if (backend_flag) {
    cmd.add_option("--backend", c.backend, "Range counting backend: merge or grid")
        ->check(CLI::IsMember({"merge", "merge-tree", "grid", "grid-fanout"}))
        ->capture_default_str();
  }
  cmd.add_option("--epsilon", c.epsilon, "Grid fan-out exponent, in (0, 1)")
      ->check(CLI::Range(0.0, 1.0))
      ->capture_default_str();
  cmd.add_option("--trees", c.trees, "Spanning trees to pack (0 = ceil(log2 n)^2)")
      ->check(CLI::NonNegativeNumber)
      ->capture_default_str();
  cmd.add_option("--seed", c.seed, "Seed for every random choice")->capture_default_str();
  cmd.add_option("--threads", c.threads, "Trees solved in parallel")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();
  cmd.add_flag("--collapse", c.collapse, "Merge parallel edges before solving");
}

void add_format_flag(CLI::App& cmd, Common& c) {
  cmd.add_option("--format", c.format, "Output format: text or json")
      ->check(CLI::IsMember({"text", "json"}))
      ->capture_default_str();
}

PackingConfig packing(const Common& c) {
  PackingConfig cfg;
  cfg.tree_count = c.trees;
  cfg.seed = c.seed;
  cfg.threads = c.threads;
  cfg.backend.kind = parse_backend(c.backend);
  cfg.backend.epsilon = c.epsilon;
  if (!(c.epsilon > 0.0 && c.epsilon < 1.0)) throw ArgumentError("--epsilon must lie in (0, 1)");
  return cfg;
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InputError("cannot open '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

Graph read_graph(const std::string& path, bool collapse) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot open '" + path + "'");
  Graph g = parse_graph(in);
  return collapse ? collapse_parallel_edges(g) : g;
}

std::string format_result(const CutResult& r, const Common& c, const TwoRespectStats* stats,
                          const std::vector<std::string>& extra) {
  if (c.format == "json") {
    auto doc = nlohmann::json::parse(format_json(r, stats));
    for (const auto& line : extra) {
      const auto space = line.find(' ');
      const std::string key = line.substr(0, space);
      const std::string value = line.substr(space + 1);
      if (key == "seed") {
        doc["stats"]["seed"] = c.seed;
      } else {
        doc[key] = value;
      }
    }
    return doc.dump() + "\n";
  }
  std::string out = format_text(r);
  for (const auto& line : extra) out += line + "\n";
  return out;
}

int cmd_mincut(const std::string& path, const Common& c, std::ostream& out, std::ostream& err) {
  const PackingConfig cfg = packing(c);
  const Graph g = read_graph(path, c.collapse);
  PipelineStats stats;
  const CutResult r = min_cut(g, cfg, &stats);
  std::vector<std::string> extra{"seed " + std::to_string(c.seed)};
  int code = kOk;
  if (c.oracle) {
    const CutResult sw = stoer_wagner(g);
    extra.push_back("oracle " + to_string(sw.value));
    if (r.value < sw.value) {
      err << "error: cut value below the exact minimum\n";
      code = kMismatch;
    }
  }
  out << format_result(r, c, &stats.two_respect, extra);
  return code;
}

int cmd_tworespect(const std::string& graph_path, const std::string& tree_path, int tree_index,
                   const Common& c, std::ostream& out, std::ostream& err) {
  const PackingConfig cfg = packing(c);
  const Graph g = read_graph(graph_path, c.collapse);
  const auto trees = parse_trees(read_file(tree_path));
  if (tree_index < 0 || tree_index >= static_cast<int>(trees.size())) {
    throw StructuralError("tree file has no tree " + std::to_string(tree_index));
  }
  const auto& tree_edges = trees[static_cast<std::size_t>(tree_index)];
  TwoRespectStats stats;
  const CutCandidate cand = two_respect_min(g, tree_edges, cfg.backend, &stats);
  const RootedTree tree(g, tree_edges, 0);
  CutResult r{cand.value, extract_partition(tree, cand), cand, tree_index};

  std::vector<std::string> extra;
  int code = kOk;
  if (c.oracle) {
    const CutCandidate brute = brute_force_two_respect(g, tree_edges);
    extra.push_back("oracle " + to_string(brute.value));
    if (brute.value != cand.value) {
      err << "error: brute force found " << to_string(brute.value) << "\n";
      code = kMismatch;
    }
  }
  out << format_result(r, c, &stats, extra);
  return code;
}

struct FileReport {
  std::string line;
  bool error = false;
  bool mismatch = false;
  int trees = 0;
  int tree_matches = 0;
  bool sw_equal = false;
};

FileReport verify_file(const fs::path& path, const Common& c) {
  FileReport rep;
  std::ostringstream line;
  line << path.filename().string();
  try {
    const Graph g = read_graph(path.string(), c.collapse);
    if (g.vertex_count() < 2 || !g.is_connected()) throw StructuralError("graph is not a connected graph on n >= 2");
    PackingConfig cfg = packing(c);
    auto trees = greedy_tree_packing(g, cfg);
    std::vector<std::vector<EdgeId>> companion;
    if (fs::path tp = fs::path(path).replace_extension(".tree"); fs::exists(tp)) {
      companion = parse_trees(read_file(tp.string()));
    }

    BackendConfig merge{BackendKind::kMergeTree, c.epsilon};
    BackendConfig grid{BackendKind::kGridFanout, c.epsilon};
    bool backends_agree = true;
    auto check_tree = [&](const std::vector<EdgeId>& t) {
      ++rep.trees;
      const CutCandidate a = two_respect_min(g, t, merge);
      const CutCandidate b = two_respect_min(g, t, grid);
      if (!(a == b)) backends_agree = false;
      bool ok = a == b;
      if (g.vertex_count() <= kBruteForceLimit) ok = ok && brute_force_two_respect(g, t).value == a.value;
      if (ok) ++rep.tree_matches;
    };
    for (const auto& t : trees) check_tree(t);
    for (const auto& t : companion) check_tree(t);

    cfg.backend = merge;
    const CutResult via_merge = min_cut_with_trees(g, trees, cfg);
    cfg.backend = grid;
    const CutResult via_grid = min_cut_with_trees(g, trees, cfg);
    if (via_merge.value != via_grid.value || via_merge.side != via_grid.side ||
        !(via_merge.witness == via_grid.witness) || via_merge.tree_index != via_grid.tree_index) {
      backends_agree = false;
    }
    const CutResult sw = stoer_wagner(g);
    rep.sw_equal = via_merge.value == sw.value;
    bool sound = !(via_merge.value < sw.value) && boundary_weight(g, via_merge.side) == via_merge.value;
    bool planted_ok = true;
    if (!companion.empty()) {
      cfg.backend = merge;
      planted_ok = min_cut_with_trees(g, companion, cfg).value == sw.value;
    }

    rep.mismatch = rep.tree_matches != rep.trees || !backends_agree || !sound || !planted_ok;
    line << " n=" << g.vertex_count() << " m=" << g.edge_count() << " trees=" << rep.trees
         << " tree_match=" << rep.tree_matches << "/" << rep.trees
         << " backends=" << (backends_agree ? "same" : "DIFFER") << " mincut=" << to_string(via_merge.value)
         << " stoer_wagner=" << to_string(sw.value);
    if (!companion.empty()) line << " companion=" << (planted_ok ? "exact" : "MISSED");
    line << " status=" << (rep.mismatch ? "MISMATCH" : rep.sw_equal ? "ok" : "above");
  } catch (const std::exception& e) {
    rep.error = true;
    line << " status=error " << e.what();
  }
  rep.line = line.str();
  return rep;
}

int cmd_verify(const std::string& dir, const Common& c, std::ostream& out) {
  if (!fs::is_directory(dir)) throw InputError("'" + dir + "' is not a directory");
  std::vector<fs::path> files;
  for (const auto& entry : fs::directory_iterator(dir)) {
    if (entry.is_regular_file() && entry.path().extension() == ".graph") files.push_back(entry.path());
  }
  std::sort(files.begin(), files.end());

  int trees = 0;
  int tree_matches = 0;
  int errors = 0;
  int checked = 0;
  int sw_equal = 0;
  bool mismatch = false;
  for (const auto& f : files) {
    const FileReport rep = verify_file(f, c);
    out << rep.line << "\n";
    if (rep.error) {
      ++errors;
      continue;
    }
    ++checked;
    trees += rep.trees;
    tree_matches += rep.tree_matches;
    sw_equal += rep.sw_equal ? 1 : 0;
    mismatch = mismatch || rep.mismatch;
  }
  auto rate = [](int a, int b) {
    std::ostringstream s;
    s << std::fixed << std::setprecision(1) << (b == 0 ? 100.0 : 100.0 * a / b) << "%";
    return s.str();
  };
  out << "files " << files.size() << " checked " << checked << " errors " << errors << "\n";
  out << "per-tree " << tree_matches << "/" << trees << " " << rate(tree_matches, trees) << "\n";
  out << "mincut=stoer_wagner " << sw_equal << "/" << checked << " " << rate(sw_equal, checked) << "\n";
  out << "seed " << c.seed << "\n";
  return mismatch ? kMismatch : kOk;
}

struct GenArgs {
  std::string family;
  VertexId n = 0;
  EdgeId m = 0;
  std::int64_t max_weight = 1;
  std::int64_t cut_weight = 3;
  VertexId side_size = 0;
  VertexId cols = 0;
  std::string companion;
};

int cmd_gen(const GenArgs& a, std::uint64_t seed, std::ostream& out) {
  if (a.n <= 0) throw ArgumentError("gen needs a positive n");
  if (a.family == "random") {
    out << serialize_graph(gen::random_connected(a.n, a.m, a.max_weight, seed));
  } else if (a.family == "cycle") {
    out << serialize_graph(gen::cycle(a.n));
  } else if (a.family == "dumbbell") {
    out << serialize_graph(gen::dumbbell(a.n));
  } else if (a.family == "grid") {
    out << serialize_graph(gen::grid(a.n, a.cols > 0 ? a.cols : a.n, a.max_weight, seed));
  } else {
    const VertexId side = a.side_size > 0 ? a.side_size : a.n / 2;
    const auto p = gen::planted(a.n, a.m, a.cut_weight, side, a.max_weight, seed);
    out << serialize_graph(p.graph);
    if (!a.companion.empty()) {
      std::ofstream tree(a.companion + ".tree");
      std::ofstream part(a.companion + ".side");
      if (!tree || !part) throw InputError("cannot write companion files '" + a.companion + ".*'");
      tree << serialize_trees({p.tree});
      part << "value " << p.cut_weight << "\nside " << side_bitstring(p.side) << "\n";
    }
  }
  return kOk;
}

void print_stats(std::ostream& out, const TwoRespectStats& s) {
  out << "  seconds " << std::fixed << std::setprecision(3) << s.seconds << std::defaultfloat << "\n"
      << "  rect_queries " << s.rect_queries << "\n"
      << "  range_nodes_visited " << s.range_nodes_visited << "\n"
      << "  frontier_predicates " << s.frontier_predicates << "\n"
      << "  frontier_rect_queries " << s.frontier_rect_queries << "\n"
      << "  same_path_evaluations " << s.same_path_evaluations << "\n"
      << "  heavy_paths " << s.heavy_paths << "\n"
      << "  interesting_pairs " << s.interesting_pairs << "\n"
      << "  pair_list_total " << s.pair_list_total << "\n"
      << "  smawk_calls " << s.smawk_calls << "\n"
      << "  smawk_evaluations " << s.smawk_evaluations << "\n";
}

// Returns false when a budget is exceeded.
bool check_budgets(std::ostream& out, const TwoRespectStats& s) {
  const std::uint64_t limit = 8 * s.pair_list_total;
  const bool total_ok = s.smawk_evaluations <= limit;
  const bool per_call_ok = s.smawk_max_ratio_violations == 0;
  out << "  budget smawk_evaluations " << s.smawk_evaluations << " <= " << limit << " "
      << (total_ok ? "ok" : "EXCEEDED") << "\n"
      << "  budget calls_over_8(rows+cols) " << s.smawk_max_ratio_violations << " "
      << (per_call_ok ? "ok" : "EXCEEDED") << "\n";
  return total_ok && per_call_ok;
}

std::vector<BackendKind> bench_backends(const std::string& name) {
  if (name == "both") return {BackendKind::kMergeTree, BackendKind::kGridFanout};
  return {parse_backend(name)};
}

int cmd_bench(const std::vector<std::string>& files, const std::string& backend, const std::vector<EdgeId>& scale,
              bool assert_budgets, const Common& c, std::ostream& out) {
  if (files.empty() && scale.empty()) throw ArgumentError("bench needs graph files or --scale");
  const auto kinds = bench_backends(backend);
  PackingConfig cfg = packing(c);
  bool within = true;

  for (const auto& path : files) {
    const Graph g = read_graph(path, c.collapse);
    for (BackendKind kind : kinds) {
      cfg.backend.kind = kind;
      PipelineStats stats;
      const auto start = std::chrono::steady_clock::now();
      const CutResult r = min_cut(g, cfg, &stats);
      const double wall = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
      out << "file " << fs::path(path).filename().string() << " n " << g.vertex_count() << " m "
          << g.edge_count() << " backend " << to_string(kind) << " trees " << stats.trees << "\n"
          << "  value " << to_string(r.value) << "\n"
          << "  wall_seconds " << std::fixed << std::setprecision(3) << wall << std::defaultfloat << "\n";
      print_stats(out, stats.two_respect);
      if (assert_budgets) within = check_budgets(out, stats.two_respect) && within;
    }
  }

  // Scaling check: one random spanning tree per size. The vertex count stays
  // at (smallest m) / 20 so only m varies.
  const EdgeId smallest = scale.empty() ? 0 : *std::min_element(scale.begin(), scale.end());
  const VertexId scale_n = std::max<VertexId>(2, smallest / 20);
  for (BackendKind kind : scale.empty() ? std::vector<BackendKind>{} : kinds) {
    double previous = 0.0;
    EdgeId previous_m = 0;
    for (EdgeId m : scale) {
      const VertexId n = scale_n;
      const Graph g = gen::random_connected(n, m, 100, c.seed);
      const auto tree = gen::random_spanning_tree(g, c.seed);
      TwoRespectStats stats;
      const auto start = std::chrono::steady_clock::now();
      two_respect_min(g, tree, {kind, c.epsilon}, &stats);
      const double wall = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
      out << "scale backend " << to_string(kind) << " n " << n << " m " << m << "\n"
          << "  wall_seconds " << std::fixed << std::setprecision(3) << wall << std::defaultfloat << "\n";
      print_stats(out, stats);
      if (assert_budgets) within = check_budgets(out, stats) && within;
      if (previous > 0.0) {
        out << "  time_ratio_vs_m" << previous_m << " " << std::fixed << std::setprecision(2)
            << wall / previous << std::defaultfloat << "\n";
      }
      previous = wall;
      previous_m = m;
    }
  }
  return within ? kOk : kMismatch;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact global minimum cut via 2-respecting spanning trees"};
  app.name("mincut");
  app.require_subcommand(1);
  app.set_version_flag("--version", "mincut 1.0");

  Common c;
  std::string graph_path;
  std::string tree_path;
  std::string dir;
  int tree_index = 0;
  GenArgs gen_args;
  std::vector<std::string> bench_files;
  std::string bench_backend = "both";
  std::vector<EdgeId> scale;
  bool assert_budgets = false;

  auto* mincut = app.add_subcommand("mincut", "Minimum cut of a graph file");
  mincut->add_option("graph", graph_path, "Graph file")->required();
  add_solver_flags(*mincut, c);
  add_format_flag(*mincut, c);
  mincut->add_flag("--oracle", c.oracle, "Also run Stoer-Wagner and print its value");

  auto* two = app.add_subcommand("tworespect", "Minimum cut 2-respecting one given spanning tree");
  two->add_option("graph", graph_path, "Graph file")->required();
  two->add_option("tree-file", tree_path, "Tree file: one tree per line, 0-based edge ids")->required();
  two->add_option("--tree-index", tree_index, "Line of the tree file to use")->capture_default_str();
  add_solver_flags(*two, c);
  add_format_flag(*two, c);
  two->add_flag("--oracle", c.oracle, "Also run the brute-force search and compare");

  auto* verify = app.add_subcommand("verify", "Check every *.graph file of a directory against the oracles");
  verify->add_option("dir", dir, "Corpus directory")->required();
  add_solver_flags(*verify, c);

  auto* gen = app.add_subcommand("gen", "Write a generated graph to standard output");
  gen->add_option("family", gen_args.family, "random, planted, dumbbell, cycle or grid")
      ->required()
      ->check(CLI::IsMember({"random", "planted", "dumbbell", "cycle", "grid"}));
  gen->add_option("n", gen_args.n, "Vertices (dumbbell: clique size, grid: rows)")->required();
  gen->add_option("m", gen_args.m, "Edges (random, planted)");
  gen->add_option("--max-weight", gen_args.max_weight, "Largest random weight")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();
  gen->add_option("--cut-weight", gen_args.cut_weight, "Planted cut weight")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();
  gen->add_option("--side-size", gen_args.side_size, "Planted side size (default n / 2)");
  gen->add_option("--cols", gen_args.cols, "Grid columns (default n)");
  gen->add_option("--companion", gen_args.companion,
                  "Planted only: write <prefix>.tree and <prefix>.side next to the graph");
  gen->add_option("--seed", c.seed, "Seed")->capture_default_str();

  auto* bench = app.add_subcommand("bench", "Timing and counter report");
  bench->add_option("graphs", bench_files, "Graph files");
  add_solver_flags(*bench, c, false);
  bench->add_option("--backend", bench_backend, "merge, grid or both")
      ->check(CLI::IsMember({"merge", "merge-tree", "grid", "grid-fanout", "both"}))
      ->capture_default_str();
  bench->add_option("--scale", scale, "Edge counts for the random-graph scaling check")
      ->delimiter(',')
      ->check(CLI::Range(20, 50000000));
  bench->add_flag("--assert-budgets", assert_budgets, "Exit 4 if an evaluation budget is exceeded");

  std::vector<const char*> argv{"mincut"};
  for (const auto& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kOk : kUsage;
  }

  try {
    if (mincut->parsed()) return cmd_mincut(graph_path, c, out, err);
    if (two->parsed()) return cmd_tworespect(graph_path, tree_path, tree_index, c, out, err);
    if (verify->parsed()) return cmd_verify(dir, c, out);
    if (gen->parsed()) return cmd_gen(gen_args, c.seed, out);
    if (bench->parsed()) return cmd_bench(bench_files, bench_backend, scale, assert_budgets, c, out);
  } catch (const ParseError& e) {
    err << "parse error: " << e.what() << "\n";
    return kParse;
  } catch (const InputError& e) {
    err << "input error: " << e.what() << "\n";
    return kParse;
  } catch (const StructuralError& e) {
    err << "structural error: " << e.what() << "\n";
    return kStructural;
  } catch (const CandidacyError& e) {
    err << "structural error: " << e.what() << "\n";
    return kStructural;
  } catch (const ArgumentError& e) {
    err << "usage error: " << e.what() << "\n";
    return kUsage;
  }
  return kUsage;
}

}  // namespace mincut::cli
