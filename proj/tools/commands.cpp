#include "commands.hpp"

#include <chrono>
#include <optional>
#include <sstream>

#include "CLI11.hpp"
#include "packdom/constructor.hpp"
#include "packdom/errors.hpp"
#include "packdom/generators.hpp"
#include "packdom/io.hpp"
#include "packdom/orientation.hpp"
#include "packdom/packing.hpp"
#include "packdom/search.hpp"
#include "packdom/serialize.hpp"
#include "packdom/trace_check.hpp"

namespace packdom::cli {

namespace {

struct Options {
  std::string graph;
  std::string set;
  std::string out;
  bool greedy = false;
  std::uint64_t seed = 1;
  bool json = false;
  bool timing = false;

  std::string stat;
  std::size_t max_vertices = OracleLimits{}.max_vertices;
  std::string kind;

  std::string mode = "tight3";
  std::size_t max_n = 8;
  std::size_t budget = 1000;
  std::size_t workers = 0;

  std::string name;
  std::size_t random_n = 0;
  std::size_t max_degree = 3;
  std::size_t multigraph_n = 0;
  std::size_t edges = 0;
  std::size_t enumerate_n = 0;
  std::string format = "dimacs";
};

class Session {
 public:
  Session(const Options& opt, std::ostream& out) : opt_(opt), out_(out) {}

  /// Emits `text` to --out when given, else to stdout.
  void emit(const std::string& text) const {
    if (opt_.out.empty()) {
      out_ << text;
    } else {
      write_file(opt_.out, text);
    }
  }

  void emit_report(const std::string& command, const std::string& digest,
                   Json results) const {
    Json report;
    report["command"] = command;
    report["input_digest"] = digest;
    report["seed"] = opt_.seed;
    report["results"] = std::move(results);
    if (opt_.timing) {
      report["elapsed_ms"] = std::chrono::duration<double, std::milli>(
                                 std::chrono::steady_clock::now() - start_)
                                 .count();
    }
    emit(report.dump(2) + "\n");
  }

 private:
  const Options& opt_;
  std::ostream& out_;
  std::chrono::steady_clock::time_point start_ = std::chrono::steady_clock::now();
};

Graph load_graph(const Options& opt, std::string& digest_input) {
  if (opt.graph.empty()) throw InvalidInput("--graph is required");
  auto text = read_file(opt.graph);
  digest_input += text;
  return parse_graph(text);
}

int cmd_construct(const Options& opt, const Session& session) {
  std::string bytes;
  Graph g = load_graph(opt, bytes);
  VertexSet s;
  if (opt.greedy) {
    s = greedy_maximal_packing(g, opt.seed);
  } else if (!opt.set.empty()) {
    auto text = read_file(opt.set);
    bytes += '\0' + text;
    s = parse_vertex_set(text, g.order());
  } else {
    throw InvalidInput("construct needs --set FILE or --greedy");
  }

  auto result = construct(g, s);
  auto violations = check_result(g, result);
  if (!violations.empty()) {
    std::string all;
    for (const auto& v : violations) all += v + "\n";
    throw ConsistencyError("trace check failed", all + to_json(result).dump(2));
  }

  Json results;
  results["packing"] = to_json(s);
  results["a_hat"] = to_json(result.a_hat);
  results["size"] = result.a_hat.size();
  results["bound"] = 3 * s.size();
  results["certificate"] = make_certificate(g, SetKind::independent_dominating,
                                            result.a_hat, 3 * s.size());
  results["trace"] = to_json(result);
  session.emit_report("construct", content_digest(bytes), std::move(results));
  return kOk;
}

int cmd_oracle(const Options& opt, const Session& session, std::ostream& out) {
  std::string bytes;
  Graph g = load_graph(opt, bytes);
  OracleLimits limits{opt.max_vertices};
  VertexSet witness;
  if (opt.stat == "i") {
    witness = minimum_independent_dominating_set(g, limits);
  } else if (opt.stat == "gamma") {
    witness = minimum_dominating_set(g, limits);
  } else if (opt.stat == "rho") {
    witness = maximum_packing(g, limits);
  } else {
    throw InvalidInput("--stat must be one of i, gamma, rho");
  }
  if (opt.json || !opt.out.empty()) {
    Json results;
    results["stat"] = opt.stat;
    results["value"] = witness.size();
    results["witness"] = to_json(witness);
    session.emit_report("oracle", content_digest(bytes), std::move(results));
  } else {
    out << witness.size() << "\n";
  }
  return kOk;
}

int cmd_verify(const Options& opt, const Session& session, std::ostream& out) {
  std::string bytes;
  Graph g = load_graph(opt, bytes);
  auto kind = parse_set_kind(opt.kind);
  if (!kind) throw InvalidInput("--kind must be packing, maximal-packing, idom or dom");
  if (opt.set.empty()) throw InvalidInput("--set is required");
  auto text = read_file(opt.set);
  bytes += '\0' + text;
  auto members = parse_vertex_set(text, g.order());
  const bool holds = verify_set(g, *kind, members);
  if (opt.json || !opt.out.empty()) {
    Json results;
    results["kind"] = to_string(*kind);
    results["holds"] = holds;
    results["certificate"] = make_certificate(g, *kind, members);
    session.emit_report("verify", content_digest(bytes), std::move(results));
  } else {
    out << (holds ? "true" : "false") << "\n";
  }
  return holds ? kOk : kPropertyFalse;
}

Json hit_json(const SearchHit& h) {
  Json j;
  j["graph6"] = h.graph6;
  j["n"] = h.order;
  j["max_degree"] = h.max_degree;
  j["rho"] = h.rho;
  j["gamma"] = h.gamma;
  j["i"] = h.i;
  j["name"] = h.catalog_name ? Json(*h.catalog_name) : Json(nullptr);
  return j;
}

int cmd_search(const Options& opt, const Session& session) {
  auto mode = parse_search_mode(opt.mode);
  if (!mode) throw InvalidInput("--mode must be tight3, conj2rho or delta4");
  SearchOptions so;
  so.mode = *mode;
  so.max_n = opt.max_n;
  so.seed = opt.seed;
  so.budget = opt.budget;
  so.workers = opt.workers;
  auto report = run_search(so);

  Json results;
  results["mode"] = to_string(report.mode);
  results["max_n"] = report.max_n;
  if (report.mode == SearchMode::delta4) results["budget"] = opt.budget;
  results["examined"] = report.examined;
  Json hits = Json::array();
  for (const auto& h : report.hits) hits.push_back(hit_json(h));
  results["hits"] = std::move(hits);
  if (report.mode == SearchMode::conj2rho) {
    Json excluded = Json::array();
    for (const auto& h : report.excluded) excluded.push_back(hit_json(h));
    results["excluded"] = std::move(excluded);
  }
  std::ostringstream key;
  key << "search " << opt.mode << " " << opt.max_n << " " << opt.budget;
  session.emit_report("search", content_digest(key.str()), std::move(results));
  return kOk;
}

int cmd_orient(const Options& opt, const Session& session) {
  if (opt.graph.empty()) throw InvalidInput("--graph is required");
  auto text = read_file(opt.graph);
  auto m = parse_dimacs_multigraph(text);
  auto oriented = orient_no_sources(m);
  const bool source_free = sources(oriented.orientation).empty();
  if (opt.json) {
    Json results;
    Json arcs = Json::array();
    for (auto [t, h] : oriented.orientation.arcs()) arcs.push_back(Json::array({t, h}));
    results["arcs"] = std::move(arcs);
    Json steps = Json::array();
    for (const auto& s : oriented.steps) {
      steps.push_back(Json{{"source", s.source}, {"target", s.target},
                           {"reversed_path", s.reversed_path}});
    }
    results["steps"] = std::move(steps);
    results["sources"] = to_json(sources(oriented.orientation));
    session.emit_report("orient", content_digest(text), std::move(results));
  } else {
    session.emit(format_arcs(oriented.orientation));
  }
  if (!source_free) throw ConsistencyError("orientation still has sources");
  return kOk;
}

int cmd_catalog(const Options& opt, const Session& session) {
  auto render = [&](const Graph& g) {
    if (opt.format == "graph6") return format_graph6(g) + "\n";
    if (opt.format == "dimacs") return format_dimacs(g);
    throw InvalidInput("--format must be dimacs or graph6");
  };
  if (!opt.name.empty()) {
    session.emit(render(named(opt.name)));
  } else if (opt.random_n > 0) {
    session.emit(render(random_connected_bounded_degree(opt.random_n, opt.max_degree, opt.seed)));
  } else if (opt.multigraph_n > 0) {
    session.emit(format_dimacs(random_multigraph_min2(opt.multigraph_n, opt.edges, opt.seed)));
  } else if (opt.enumerate_n > 0) {
    std::string all;
    for (const auto& g : enumerate_connected_subcubic(opt.enumerate_n)) {
      all += format_graph6(g) + "\n";
    }
    session.emit(all);
  } else {
    throw InvalidInput("catalog needs --name, --random, --multigraph or --enumerate");
  }
  return kOk;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  Options opt;
  CLI::App app{"Independent domination from maximal packings in subcubic graphs"};
  app.require_subcommand(1);

  auto* construct_cmd = app.add_subcommand(
      "construct", "Build an independent dominating set of size <= 3|S|");
  construct_cmd->add_option("--graph", opt.graph, "Graph file (DIMACS or graph6)")->required();
  construct_cmd->add_option("--set", opt.set, "Maximal packing file");
  construct_cmd->add_flag("--greedy", opt.greedy, "Use a greedy maximal packing");

  auto* oracle_cmd = app.add_subcommand("oracle", "Exact i, gamma or rho by exhaustive search");
  oracle_cmd->add_option("--graph", opt.graph)->required();
  oracle_cmd->add_option("--stat", opt.stat, "i, gamma or rho")->required();
  oracle_cmd->add_option("--max-vertices", opt.max_vertices, "Size guard");

  auto* verify_cmd = app.add_subcommand("verify", "Check a vertex set property");
  verify_cmd->add_option("--graph", opt.graph)->required();
  verify_cmd->add_option("--set", opt.set)->required();
  verify_cmd->add_option("--kind", opt.kind, "packing, maximal-packing, idom or dom")->required();

  auto* search_cmd = app.add_subcommand("search", "Desk-scale searches over small graphs");
  search_cmd->add_option("--mode", opt.mode, "tight3, conj2rho or delta4");
  search_cmd->add_option("--max-n", opt.max_n, "Largest order examined");
  search_cmd->add_option("--budget", opt.budget, "Samples for delta4");
  search_cmd->add_option("--workers", opt.workers, "Worker threads (0 = all cores)");

  auto* orient_cmd = app.add_subcommand("orient", "Source-free orientation of a multigraph");
  orient_cmd->add_option("--graph", opt.graph, "Multigraph file")->required();

  auto* catalog_cmd = app.add_subcommand("catalog", "Write named or generated graphs");
  catalog_cmd->add_option("--name", opt.name, "h1, wagner, petersen, k33, c<n>, p<n>");
  catalog_cmd->add_option("--random", opt.random_n, "Random connected graph on N vertices");
  catalog_cmd->add_option("--max-degree", opt.max_degree, "Degree cap for --random");
  catalog_cmd->add_option("--multigraph", opt.multigraph_n,
                          "Random multigraph on N vertices with min degree 2");
  catalog_cmd->add_option("--edges", opt.edges, "Edge count for --multigraph");
  catalog_cmd->add_option("--enumerate", opt.enumerate_n,
                          "All connected subcubic graphs on N vertices (graph6)");
  catalog_cmd->add_option("--format", opt.format, "dimacs or graph6");

  for (auto* cmd : {construct_cmd, oracle_cmd, verify_cmd, search_cmd, orient_cmd, catalog_cmd}) {
    cmd->add_option("--seed", opt.seed, "Seed for every randomized choice");
    cmd->add_option("--out", opt.out, "Write the report to FILE");
    cmd->add_flag("--json", opt.json, "Emit a JSON report");
    cmd->add_flag("--timing", opt.timing, "Add elapsed time to JSON reports");
  }

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << "packdom: " << e.what() << "\n";
    return kBadInput;
  }

  Session session(opt, out);
  try {
    if (*construct_cmd) return cmd_construct(opt, session);
    if (*oracle_cmd) return cmd_oracle(opt, session, out);
    if (*verify_cmd) return cmd_verify(opt, session, out);
    if (*search_cmd) return cmd_search(opt, session);
    if (*orient_cmd) return cmd_orient(opt, session);
    if (*catalog_cmd) return cmd_catalog(opt, session);
  } catch (const InvalidInput& e) {
    err << "packdom: invalid input: " << e.what() << "\n";
    return kBadInput;
  } catch (const GuardExceeded& e) {
    err << "packdom: " << e.what() << "\n";
    return kGuard;
  } catch (const ConsistencyError& e) {
    err << "packdom: internal consistency failure: " << e.what() << "\n";
    if (!e.dump().empty()) err << e.dump() << "\n";
    return kInternal;
  }
  return kBadInput;
}

}  // namespace packdom::cli
