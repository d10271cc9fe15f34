#include "cli.hpp"

#include <fstream>
#include <functional>
#include <iostream>
#include <iterator>
#include <sstream>

#include "CLI11.hpp"
#include "json.hpp"

#include "hang/blocks.hpp"
#include "hang/embedding.hpp"
#include "hang/explorer.hpp"
#include "hang/generators.hpp"
#include "hang/io.hpp"
#include "hang/metrics.hpp"
#include "hang/products.hpp"

namespace hang::cli {

namespace {

using json = nlohmann::ordered_json;

struct Globals {
  std::string format = "text";
  bool quiet = false;
  std::uint64_t budget = kDefaultSubsetBudget;
};

std::string read_all(std::istream& in) {
  return {std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
}

// "-" is standard input, "family:params" a generator, anything else a path.
Graph load(const std::string& source, std::istream& in) {
  if (source == "-") return parse_graph(read_all(in));
  if (gen::looks_like_expression(source)) return gen::from_expression(source);
  std::ifstream file(source);
  if (!file) throw GraphError("cannot open '" + source + "'");
  return parse_graph(read_all(file));
}

std::string set_text(const std::vector<Vertex>& vs, const Graph& g) {
  std::string s = "{";
  for (std::size_t i = 0; i < vs.size(); ++i) {
    if (i) s += ',';
    s += g.label(vs[i]);
  }
  return s + "}";
}

json labels_json(const std::vector<Vertex>& vs, const Graph& g) {
  json a = json::array();
  for (Vertex v : vs) a.push_back(g.label(v));
  return a;
}

json graph_json(const Graph& g) {
  json j;
  j["n"] = g.vertex_count();
  j["m"] = g.edge_count();
  json edges = json::array();
  for (auto [u, v] : g.edges()) edges.push_back({u, v});
  j["edges"] = std::move(edges);
  if (g.has_labels()) j["labels"] = g.labels();
  j["graph6"] = to_graph6(g);
  return j;
}

// Writes a graph in the selected format. In text mode `notes` become comment
// lines after the edge list, so the output stays parseable; in graph6 mode
// they go to `err` so stdout carries only the code.
void emit_graph(const Graph& g, const Globals& opts, const std::vector<std::string>& notes,
                std::ostream& out, std::ostream& err) {
  if (opts.format == "graph6") {
    out << to_graph6(g) << '\n';
    if (!opts.quiet)
      for (const auto& n : notes) err << n << '\n';
    return;
  }
  out << to_edge_list(g);
  if (!opts.quiet)
    for (const auto& n : notes) out << "# " << n << '\n';
}

// ---- analyze ----

int cmd_analyze(const std::string& source, const Globals& opts, std::istream& in, std::ostream& out) {
  if (opts.format == "graph6") throw CLI::ValidationError("--format", "analyze supports text or structured");
  const Graph g = load(source, in);
  const auto dist = all_pairs_distances(g);
  const auto profile = metric_profile(dist);
  const auto report = check_hangable(dist, profile, true);
  const auto triples = check_hangable_triples(dist, profile);
  if (report.hangable != triples.hangable) {
    throw std::logic_error("hangability checkers disagree; please report this input");
  }
  const int code = report.hangable ? kOk : kNotHangable;
  if (opts.quiet) return code;

  if (opts.format == "structured") {
    json j;
    j["n"] = g.vertex_count();
    j["m"] = g.edge_count();
    json vertices = json::array();
    for (Vertex v = 0; v < g.vertex_count(); ++v) {
      vertices.push_back({{"id", v},
                          {"label", g.label(v)},
                          {"eccentricity", profile.eccentricity[v]},
                          {"periphery", labels_json(profile.vertex_periphery[v], g)}});
    }
    j["vertices"] = std::move(vertices);
    j["diameter"] = profile.diameter;
    j["radius"] = profile.radius;
    j["periphery"] = labels_json(profile.graph_periphery, g);
    j["self_centered"] = is_self_centered(profile);
    j["hangable"] = report.hangable;
    j["witness"] = report.witness
                       ? json{{"v", g.label(report.witness->v)}, {"u", g.label(report.witness->u)}}
                       : json(nullptr);
    json triple;
    triple["hangable"] = triples.hangable;
    triple["witness"] = triples.triple_witness ? json{{"v", g.label(triples.triple_witness->v)},
                                                      {"u", g.label(triples.triple_witness->u)},
                                                      {"w", g.label(triples.triple_witness->w)}}
                                               : json(nullptr);
    j["triple_check"] = std::move(triple);
    out << j.dump(2) << '\n';
    return code;
  }

  out << "n = " << g.vertex_count() << ", m = " << g.edge_count() << '\n';
  for (Vertex v = 0; v < g.vertex_count(); ++v) {
    out << "e(" << g.label(v) << ") = " << profile.eccentricity[v] << ", P(" << g.label(v)
        << ") = " << set_text(profile.vertex_periphery[v], g) << '\n';
  }
  out << "diameter: " << profile.diameter << '\n';
  out << "radius: " << profile.radius << '\n';
  out << "P(G) = " << set_text(profile.graph_periphery, g) << '\n';
  out << "self-centered: " << (is_self_centered(profile) ? "yes" : "no") << '\n';
  out << "hangable: " << (report.hangable ? "yes" : "no") << '\n';
  if (!report.hangable) {
    const auto [v, u] = *report.witness;
    out << "witness: v = " << g.label(v) << ", u = " << g.label(u) << " (u in P(v), e(u) = "
        << profile.eccentricity[u] << " < " << profile.diameter << ")\n";
    const auto [tv, tu, tw] = *triples.triple_witness;
    out << "triple witness: v = " << g.label(tv) << ", u = " << g.label(tu) << ", w = " << g.label(tw)
        << ", d(u,w) = " << dist(tu, tw) << " < " << profile.diameter << '\n';
  }
  return code;
}

// ---- product ----

struct OracleLine {
  std::string statement;
  std::string status;  // PASS, FAIL or ERROR
  std::string detail;
};

OracleLine compare(std::string statement, std::size_t mismatches) {
  if (mismatches == 0) return {std::move(statement), "PASS", {}};
  return {std::move(statement), "FAIL", std::to_string(mismatches) + " mismatch(es)"};
}

std::vector<OracleLine> check_corona(const Graph& g, const Graph& h, const ProductGraph& p) {
  const std::vector<std::string> names = {"corona distance", "corona diameter", "corona vertex periphery",
                                          "corona periphery"};
  std::string problem;
  if (g.vertex_count() < 2) {
    problem = "precondition: first factor must have order at least two";
  } else if (!is_connected(g)) {
    problem = "precondition: first factor must be connected";
  } else if (h.vertex_count() == 0) {
    problem = "precondition: second factor must be nonempty";
  }
  std::vector<OracleLine> lines;
  if (!problem.empty()) {
    for (const auto& n : names) lines.push_back({n, "ERROR", problem});
    return lines;
  }
  const auto dist_g = all_pairs_distances(g);
  const auto truth_dist = all_pairs_distances(p.graph);
  const auto truth = metric_profile(truth_dist);
  const auto oracle = corona_metric_oracle(metric_profile(dist_g), h.vertex_count());

  std::size_t bad_dist = 0;
  std::size_t bad_vp = 0;
  const int n = p.graph.vertex_count();
  for (Vertex a = 0; a < n; ++a) {
    for (Vertex b = 0; b < n; ++b)
      if (corona_distance_oracle(dist_g, h, p.map, a, b) != truth_dist(a, b)) ++bad_dist;
    if (oracle.vertex_periphery[a] != truth.vertex_periphery[a]) ++bad_vp;
  }
  lines.push_back(compare(names[0], bad_dist));
  lines.push_back(compare(names[1], oracle.diameter == truth.diameter ? 0 : 1));
  lines.push_back(compare(names[2], bad_vp));
  lines.push_back(compare(names[3], oracle.graph_periphery == truth.graph_periphery ? 0 : 1));
  return lines;
}

std::vector<OracleLine> check_cartesian(const Graph& g, const Graph& h, const ProductGraph& p) {
  const std::vector<std::string> names = {"cartesian distance", "cartesian eccentricity",
                                          "cartesian diameter", "cartesian vertex periphery",
                                          "cartesian periphery"};
  std::string problem;
  if (g.vertex_count() == 0 || h.vertex_count() == 0) {
    problem = "precondition: factors must be nonempty";
  } else if (!is_connected(g) || !is_connected(h)) {
    problem = "precondition: factors must be connected";
  }
  std::vector<OracleLine> lines;
  if (!problem.empty()) {
    for (const auto& n : names) lines.push_back({n, "ERROR", problem});
    return lines;
  }
  const auto oracle = cartesian_metric_oracle(g, h);
  const auto truth_dist = all_pairs_distances(p.graph);
  const auto truth = metric_profile(truth_dist);
  std::size_t bad[4] = {0, 0, 0, 0};
  const int n = p.graph.vertex_count();
  for (Vertex a = 0; a < n; ++a) {
    for (Vertex b = 0; b < n; ++b)
      if (oracle.distance(a, b) != truth_dist(a, b)) ++bad[0];
    if (oracle.eccentricity(a) != truth.eccentricity[a]) ++bad[1];
    if (oracle.vertex_periphery(a) != truth.vertex_periphery[a]) ++bad[2];
  }
  bad[3] = oracle.graph_periphery() == truth.graph_periphery ? 0 : 1;
  lines.push_back(compare(names[0], bad[0]));
  lines.push_back(compare(names[1], bad[1]));
  lines.push_back(compare(names[2], oracle.diameter() == truth.diameter ? 0 : 1));
  lines.push_back(compare(names[3], bad[2]));
  lines.push_back(compare(names[4], bad[3]));
  return lines;
}

std::vector<OracleLine> check_join(const Graph& g, const Graph& h, const ProductGraph& p) {
  const std::string name = "join hangability criterion";
  if (g.vertex_count() == 0 || h.vertex_count() == 0) {
    return {{name, "ERROR", "precondition: factors must be nonempty"}};
  }
  const bool predicted = join_hangability_predicate(g, h);
  const bool actual = check_hangable(p.graph).hangable;
  return {compare(name, predicted == actual ? 0 : 1)};
}

int cmd_product(const std::string& kind, const std::string& g_src, const std::string& h_src,
                bool oracle_check, const Globals& opts, std::istream& in, std::ostream& out,
                std::ostream& err) {
  if (g_src == "-" && h_src == "-") throw CLI::ValidationError("inputs", "only one factor may come from stdin");
  const Graph g = load(g_src, in);
  const Graph h = load(h_src, in);
  ProductGraph p;
  if (kind == "corona") {
    p = corona(g, h);
  } else if (kind == "cartesian") {
    p = cartesian(g, h);
  } else {
    p = join(g, h);
  }

  std::vector<OracleLine> checks;
  if (oracle_check) {
    if (kind == "corona") checks = check_corona(g, h, p);
    if (kind == "cartesian") checks = check_cartesian(g, h, p);
    if (kind == "join") checks = check_join(g, h, p);
  }
  int code = kOk;
  for (const auto& c : checks) {
    if (c.status == "FAIL") code = kNotHangable;
    if (c.status == "ERROR" && code == kOk) code = kRefused;
  }

  if (opts.format == "structured") {
    if (opts.quiet) return code;
    json j;
    j["kind"] = kind;
    j["graph"] = graph_json(p.graph);
    json map = json::array();
    for (Vertex id = 0; id < p.map.size(); ++id) map.push_back({{"id", id}, {"vertex", p.map.describe(id, g, h)}});
    j["vertex_map"] = std::move(map);
    if (oracle_check) {
      json lines = json::array();
      for (const auto& c : checks) lines.push_back({{"statement", c.statement}, {"status", c.status}, {"detail", c.detail}});
      j["oracle"] = std::move(lines);
    }
    out << j.dump(2) << '\n';
    return code;
  }

  std::vector<std::string> notes;
  notes.push_back("vertex map:");
  std::istringstream map_text(p.map.to_text(g, h));
  for (std::string line; std::getline(map_text, line);) notes.push_back(line);
  for (const auto& c : checks) {
    notes.push_back(c.status + " " + c.statement + (c.detail.empty() ? "" : ": " + c.detail));
  }
  emit_graph(p.graph, opts, notes, out, err);
  return code;
}

// ---- embed ----

int cmd_embed(const std::string& source, const Globals& opts, std::istream& in, std::ostream& out,
              std::ostream& err) {
  const Graph h = load(source, in);
  const auto result = hangable_embedding(h);
  if (opts.format == "structured") {
    if (opts.quiet) return kOk;
    json j;
    j["branch"] = std::string(to_string(result.branch));
    j["supergraph"] = graph_json(result.supergraph);
    json inj = json::array();
    for (Vertex v = 0; v < h.vertex_count(); ++v) {
      inj.push_back({{"vertex", h.label(v)}, {"image", result.injection[v]}});
    }
    j["injection"] = std::move(inj);
    out << j.dump(2) << '\n';
    return kOk;
  }
  std::vector<std::string> notes;
  notes.push_back("branch: " + std::string(to_string(result.branch)));
  notes.push_back("injection:");
  for (Vertex v = 0; v < h.vertex_count(); ++v) {
    notes.push_back(h.label(v) + " ↦ " + std::to_string(result.injection[v]));
  }
  emit_graph(result.supergraph, opts, notes, out, err);
  return kOk;
}

// ---- power ----

int cmd_power(const std::string& source, int k, bool smallest, const Globals& opts, std::istream& in,
              std::ostream& out, std::ostream& err) {
  const Graph g = load(source, in);
  if (smallest) {
    const int best = smallest_hangable_power(g);
    if (opts.quiet) return kOk;
    if (opts.format == "structured") {
      out << json{{"smallest_power", best}}.dump(2) << '\n';
    } else {
      out << "k = " << best << '\n';
    }
    return kOk;
  }
  const Graph p = power(g, k);
  if (opts.format == "structured") {
    if (!opts.quiet) out << graph_json(p).dump(2) << '\n';
    return kOk;
  }
  emit_graph(p, opts, {}, out, err);
  return kOk;
}

// ---- blocks ----

int cmd_blocks(const std::string& source, const Globals& opts, std::istream& in, std::ostream& out) {
  if (opts.format == "graph6") throw CLI::ValidationError("--format", "blocks supports text or structured");
  const Graph g = load(source, in);
  const auto d = biconnected_components(g);
  const bool block_graph = is_block_graph(g, d);
  const bool tree = is_tree(g);
  if (opts.quiet) return kOk;
  if (opts.format == "structured") {
    json j;
    json blocks = json::array();
    for (const auto& b : d.blocks) blocks.push_back(labels_json(b, g));
    j["blocks"] = std::move(blocks);
    j["cut_vertices"] = labels_json(d.cut_vertices, g);
    j["block_graph"] = block_graph;
    j["tree"] = tree;
    out << j.dump(2) << '\n';
    return kOk;
  }
  out << to_text(d, g);
  out << "block graph: " << (block_graph ? "yes" : "no") << '\n';
  out << "tree: " << (tree ? "yes" : "no") << '\n';
  return kOk;
}

// ---- classify ----

int cmd_classify(const std::vector<std::string>& sources, unsigned jobs, const Globals& opts,
                 std::istream& in, std::ostream& out) {
  if (opts.format == "graph6") throw CLI::ValidationError("--format", "classify supports text or structured");
  const bool tsv = opts.format == "text";
  if (tsv && !opts.quiet) out << tsv_header() << '\n';
  std::size_t offset = 0;
  auto run_one = [&](std::istream& stream) {
    std::size_t last = 0;
    classify_stream(
        stream,
        [&](const StreamRecord& r) {
          StreamRecord shifted = r;
          shifted.index += offset;
          last = shifted.index;
          if (!opts.quiet) out << (tsv ? to_tsv(shifted) : to_json_line(shifted)) << '\n';
        },
        jobs);
    out.flush();
    if (last > 0) offset = last;
  };
  const std::vector<std::string> inputs = sources.empty() ? std::vector<std::string>{"-"} : sources;
  for (const auto& src : inputs) {
    if (src == "-") {
      run_one(in);
      continue;
    }
    std::ifstream file(src);
    if (!file) throw GraphError("cannot open '" + src + "'");
    run_one(file);
  }
  return kOk;
}

// ---- generate ----

int cmd_generate(const std::vector<std::string>& words, const Globals& opts, std::ostream& out,
                 std::ostream& err) {
  std::string expr = words.at(0);
  if (expr.find(':') == std::string::npos) {
    expr += ':';
    for (std::size_t i = 1; i < words.size(); ++i) {
      if (i > 1) expr += 'x';
      expr += words[i];
    }
  } else if (words.size() > 1) {
    throw CLI::ValidationError("generate", "give either 'family:params' or 'family p1 p2'");
  }
  const Graph g = gen::from_expression(expr);
  if (opts.format == "structured") {
    if (!opts.quiet) out << graph_json(g).dump(2) << '\n';
    return kOk;
  }
  emit_graph(g, opts, {}, out, err);
  return kOk;
}

// ---- subgraph-search ----

int cmd_subgraph_search(const std::string& source, int max_vertices, const std::string& mode_name, bool emit,
                        const Globals& opts, std::istream& in, std::ostream& out) {
  if (opts.format == "graph6") throw CLI::ValidationError("--format", "subgraph-search supports text or structured");
  const Graph host = load(source, in);
  const auto mode = mode_name == "induced" ? SubgraphMode::induced : SubgraphMode::connected_induced;
  const auto report = search_hangable_subgraphs(host, max_vertices, mode, emit, opts.budget);
  if (opts.quiet) return kOk;
  if (opts.format == "structured") {
    json j;
    j["mode"] = mode_name;
    json sizes = json::array();
    for (const auto& s : report.per_size) {
      sizes.push_back({{"size", s.size}, {"subsets", s.subsets}, {"connected", s.connected}, {"hangable", s.hangable}});
    }
    j["sizes"] = std::move(sizes);
    if (emit) {
      json found = json::array();
      for (std::size_t i = 0; i < report.hangable_sets.size(); ++i) {
        found.push_back({{"vertices", labels_json(report.hangable_sets[i], host)},
                         {"graph6", report.hangable_graph6[i]}});
      }
      j["hangable"] = std::move(found);
    }
    out << j.dump(2) << '\n';
    return kOk;
  }
  out << "mode: " << mode_name << '\n';
  out << "size\tsubsets\tconnected\thangable\n";
  for (const auto& s : report.per_size) {
    out << s.size << '\t' << s.subsets << '\t' << s.connected << '\t' << s.hangable << '\n';
  }
  for (std::size_t i = 0; i < report.hangable_sets.size(); ++i) {
    out << "hangable " << set_text(report.hangable_sets[i], host) << ' ' << report.hangable_graph6[i] << '\n';
  }
  return kOk;
}

}  // namespace

int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err) {
  CLI::App app{"Eccentricity, periphery and hangability tools for finite simple graphs"};
  app.name(args.empty() ? "hangable" : args[0]);
  app.require_subcommand(1);
  Globals opts;
  app.add_option("--format", opts.format, "Output format")
      ->check(CLI::IsMember({"text", "structured", "graph6"}));
  app.add_flag("--quiet,-q", opts.quiet, "Suppress normal output");
  app.add_option("--budget", opts.budget, "Subset budget for enumerations");

  std::function<int()> action;
  auto sub = [&](const char* name, const char* help) {
    auto* s = app.add_subcommand(name, help);
    s->fallthrough();
    return s;
  };
  const std::string input_help = "Graph file, '-' for stdin, or a generator such as grid:3x4";

  std::string source;
  auto* analyze = sub("analyze", "Eccentricities, peripheries and the hangability verdict");
  analyze->add_option("input", source, input_help)->required();
  analyze->callback([&] { action = [&] { return cmd_analyze(source, opts, in, out); }; });

  std::string kind;
  std::string h_source;
  bool oracle_check = false;
  auto* product = sub("product", "Build a corona, cartesian product or join");
  product->add_option("kind", kind)->required()->check(CLI::IsMember({"corona", "cartesian", "join"}));
  product->add_option("first", source, input_help)->required();
  product->add_option("second", h_source, input_help)->required();
  product->add_flag("--oracle-check", oracle_check, "Compare closed forms with BFS on the product");
  product->callback([&] {
    action = [&] { return cmd_product(kind, source, h_source, oracle_check, opts, in, out, err); };
  });

  auto* embed = sub("embed", "Embed a graph as an induced subgraph of a hangable graph");
  embed->add_option("input", source, input_help)->required();
  embed->callback([&] { action = [&] { return cmd_embed(source, opts, in, out, err); }; });

  int k = 0;
  bool smallest = false;
  auto* pow = sub("power", "Graph power G^k, or the smallest k making it hangable");
  pow->add_option("input", source, input_help)->required();
  auto* k_opt = pow->add_option("-k", k, "Exponent")->check(CLI::PositiveNumber);
  auto* s_opt = pow->add_flag("--smallest", smallest, "Report the smallest hangable power");
  k_opt->excludes(s_opt);
  pow->callback([&] {
    if (!smallest && k_opt->count() == 0) throw CLI::RequiredError("-k or --smallest");
    action = [&] { return cmd_power(source, k, smallest, opts, in, out, err); };
  });

  auto* blocks = sub("blocks", "Blocks and cut vertices");
  blocks->add_option("input", source, input_help)->required();
  blocks->callback([&] { action = [&] { return cmd_blocks(source, opts, in, out); }; });

  std::vector<std::string> sources;
  unsigned jobs = 1;
  auto* classify = sub("classify", "Classify graph6 lines (one record per line)");
  classify->add_option("inputs", sources, "graph6 files; default stdin");
  classify->add_option("--jobs,-j", jobs, "Worker threads (0 = all cores)");
  classify->callback([&] { action = [&] { return cmd_classify(sources, jobs, opts, in, out); }; });

  std::vector<std::string> words;
  auto* generate = sub("generate", "Emit a named family: path, cycle, complete, bipartite, hypercube, grid, empty");
  generate->add_option("family", words, "e.g. 'grid 3 4' or 'grid:3x4'")->required();
  generate->callback([&] { action = [&] { return cmd_generate(words, opts, out, err); }; });

  int max_vertices = 0;
  std::string mode = "induced";
  bool emit = false;
  auto* search = sub("subgraph-search", "Enumerate hangable induced subgraphs of a host");
  search->add_option("host", source, input_help)->required();
  search->add_option("--max-vertices,-m", max_vertices, "Largest subset size")->required();
  search->add_option("--mode", mode)->check(CLI::IsMember({"induced", "connected-induced"}));
  search->add_flag("--emit", emit, "List every hangable subset with its graph6 code");
  search->callback([&] {
    action = [&] { return cmd_subgraph_search(source, max_vertices, mode, emit, opts, in, out); };
  });

  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kOk : kBadInput;
  }

  try {
    return action();
  } catch (const CLI::Error& e) {
    err << "error: " << e.what() << '\n';
    return kBadInput;
  } catch (const DisconnectedError& e) {
    err << "error: " << e.what() << '\n';
    return kDisconnected;
  } catch (const PreconditionError& e) {
    err << "error: " << e.what() << '\n';
    return kRefused;
  } catch (const ParseError& e) {
    err << "parse error at offset " << e.offset() << ": " << e.what() << '\n';
    return kBadInput;
  } catch (const GraphError& e) {
    err << "error: " << e.what() << '\n';
    return kBadInput;
  }
}

}  // namespace hang::cli
