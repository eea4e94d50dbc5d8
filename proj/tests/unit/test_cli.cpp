#include <algorithm>
#include <sstream>

#include "commands.hpp"
#include "doctest.h"
#include "packdom/generators.hpp"
#include "packdom/io.hpp"
#include "packdom/packing.hpp"
#include "packdom/serialize.hpp"

using namespace packdom;

namespace {

struct Outcome {
  int code;
  std::string out;
  std::string err;
};

Outcome run(std::vector<std::string> args) {
  std::ostringstream out, err;
  int code = cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

std::string file(const std::string& name, const std::string& contents) {
  std::string path = std::string(PACKDOM_TEST_TMPDIR) + "/cli_" + name;
  write_file(path, contents);
  return path;
}

std::string graph_file(const std::string& name) {
  return file(name + ".dimacs", format_dimacs(named(name)));
}

}  // namespace

TEST_CASE("construct") {
  auto pet = graph_file("petersen");
  auto r = run({"construct", "--graph", pet, "--set", file("s0", "0\n")});
  REQUIRE(r.code == cli::kOk);
  auto j = Json::parse(r.out);
  CHECK(j["command"] == "construct");
  CHECK(j["results"]["size"] == 3);
  CHECK(j["results"]["bound"] == 3);
  CHECK(j["results"]["certificate"]["flags"]["independent"] == true);
  CHECK(j["results"]["certificate"]["flags"]["dominating"] == true);

  auto k33 = graph_file("k33");
  auto rk = run({"construct", "--graph", k33, "--set", file("s0", "0\n")});
  CHECK(rk.code == cli::kOk);
  CHECK(Json::parse(rk.out)["results"]["size"] == 3);

  CHECK(run({"construct", "--graph", k33, "--set", file("s01", "0 1\n")}).code == cli::kBadInput);
  CHECK(run({"construct", "--graph", k33}).code == cli::kBadInput);
  CHECK(run({"construct", "--graph", file("bad", "p edge 2 1\n")}).code == cli::kBadInput);

  Graph star(5, {{{0, 1}, {0, 2}, {0, 3}, {0, 4}}});
  auto rs = run({"construct", "--graph", file("star.dimacs", format_dimacs(star)), "--greedy"});
  CHECK(rs.code == cli::kBadInput);
}

TEST_CASE("construct with a greedy packing agrees with verify") {
  Graph g = random_subcubic(40, 11);
  auto gf = file("r40.dimacs", format_dimacs(g));
  auto r = run({"construct", "--graph", gf, "--greedy", "--seed", "3"});
  REQUIRE(r.code == cli::kOk);
  auto j = Json::parse(r.out);
  CHECK(j["seed"] == 3);
  auto cert = file("cert.json", j["results"]["certificate"].dump());
  CHECK(run({"verify", "--graph", gf, "--set", cert, "--kind", "idom"}).code == cli::kOk);
  CHECK(j["results"]["size"].get<std::size_t>() <=
        3 * greedy_maximal_packing(g, 3).size());
  CHECK(run({"construct", "--graph", gf, "--greedy", "--seed", "3"}).out == r.out);
}

TEST_CASE("oracle") {
  CHECK(run({"oracle", "--graph", graph_file("petersen"), "--stat", "rho"}).out == "1\n");
  CHECK(run({"oracle", "--graph", graph_file("k33"), "--stat", "i"}).out == "3\n");
  CHECK(run({"oracle", "--graph", graph_file("h1"), "--stat", "gamma"}).out == "3\n");

  auto j = Json::parse(run({"oracle", "--graph", graph_file("k33"), "--stat", "gamma", "--json"}).out);
  CHECK(j["results"]["value"] == 2);

  auto big = file("big.dimacs", format_dimacs(random_subcubic(30, 1)));
  CHECK(run({"oracle", "--graph", big, "--stat", "i"}).code == cli::kGuard);
  CHECK(run({"oracle", "--graph", big, "--stat", "x"}).code == cli::kBadInput);
}

TEST_CASE("verify") {
  CHECK(run({"verify", "--graph", graph_file("petersen"), "--set", file("s0", "0\n"),
             "--kind", "maximal-packing"}).code == cli::kOk);
  CHECK(run({"verify", "--graph", graph_file("k33"), "--set", file("side", "0 1 2\n"),
             "--kind", "idom"}).code == cli::kOk);
  auto c5 = run({"verify", "--graph", graph_file("c5"), "--set", file("s01", "0 1\n"),
                 "--kind", "packing"});
  CHECK(c5.code == cli::kPropertyFalse);
  CHECK(c5.out == "false\n");
  CHECK(run({"verify", "--graph", graph_file("c5"), "--set", file("s9", "9\n"),
             "--kind", "packing"}).code == cli::kBadInput);
  CHECK(run({"verify", "--graph", graph_file("c5"), "--set", file("s0", "0\n"),
             "--kind", "clique"}).code == cli::kBadInput);
}

TEST_CASE("search") {
  auto r = run({"search", "--mode", "tight3", "--max-n", "6"});
  REQUIRE(r.code == cli::kOk);
  auto j = Json::parse(r.out);
  bool k33 = false;
  for (const auto& h : j["results"]["hits"]) k33 = k33 || h["name"] == "k33";
  CHECK(k33);
  CHECK(run({"search", "--mode", "tight3", "--max-n", "11"}).code == cli::kGuard);
  CHECK(run({"search", "--mode", "bogus"}).code == cli::kBadInput);
}

TEST_CASE("orient") {
  auto tri = run({"orient", "--graph", file("tri", "p edge 3 3\ne 1 2\ne 2 3\ne 1 3\n")});
  REQUIRE(tri.code == cli::kOk);
  auto d = parse_arcs(tri.out);
  CHECK(d.arcs().size() == 3);

  auto dbl = run({"orient", "--graph", file("dbl", "p edge 2 2\ne 1 2\ne 1 2\n"), "--json"});
  REQUIRE(dbl.code == cli::kOk);
  auto j = Json::parse(dbl.out);
  auto arcs = j["results"]["arcs"].get<std::vector<std::pair<int, int>>>();
  std::sort(arcs.begin(), arcs.end());
  CHECK(arcs == std::vector<std::pair<int, int>>{{0, 1}, {1, 0}});
  CHECK(j["results"]["sources"].empty());

  auto rnd = file("rnd", format_dimacs(random_multigraph_min2(20, 30, 8)));
  CHECK(run({"orient", "--graph", rnd}).code == cli::kOk);
  CHECK(run({"orient", "--graph", file("path", "p edge 2 1\ne 1 2\n")}).code == cli::kBadInput);
}

TEST_CASE("catalog") {
  auto r = run({"catalog", "--name", "petersen"});
  CHECK(parse_dimacs(r.out) == named("petersen"));
  CHECK(run({"catalog", "--name", "k33", "--format", "graph6"}).out == "EFz_\n");
  auto rnd = run({"catalog", "--random", "30", "--seed", "4"});
  CHECK(parse_dimacs(rnd.out) == random_subcubic(30, 4));
  auto en = run({"catalog", "--enumerate", "5"});
  CHECK(static_cast<std::size_t>(std::count(en.out.begin(), en.out.end(), '\n')) ==
        enumerate_connected_subcubic(5).size());
  CHECK(run({"catalog", "--name", "unknown"}).code == cli::kBadInput);
  CHECK(run({"catalog"}).code == cli::kBadInput);
}

TEST_CASE("argument errors") {
  CHECK(run({}).code == cli::kBadInput);
  CHECK(run({"frobnicate"}).code == cli::kBadInput);
  CHECK(run({"oracle", "--graph"}).code == cli::kBadInput);
  CHECK(run({"construct", "--graph", "/nonexistent/file", "--greedy"}).code == cli::kBadInput);
  CHECK(run({"--help"}).code == cli::kOk);
}

TEST_CASE("out flag writes the report to a file") {
  std::string path = std::string(PACKDOM_TEST_TMPDIR) + "/cli_report.json";
  auto r = run({"construct", "--graph", graph_file("k33"), "--greedy", "--out", path});
  CHECK(r.code == cli::kOk);
  CHECK(r.out.empty());
  CHECK(Json::parse(read_file(path))["command"] == "construct");
}
