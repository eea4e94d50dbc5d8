#include "packdom/io.hpp"

#include <cctype>
#include <cstdio>
#include <fstream>
#include <sstream>
#include <string>

#include "packdom/errors.hpp"
#include "packdom/serialize.hpp"

namespace packdom {

namespace {

constexpr int kGraph6Offset = 63;

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

std::vector<std::string_view> lines_of(std::string_view text) {
  std::vector<std::string_view> out;
  while (!text.empty()) {
    auto pos = text.find('\n');
    out.push_back(text.substr(0, pos));
    if (pos == std::string_view::npos) break;
    text.remove_prefix(pos + 1);
  }
  return out;
}

bool is_comment(std::string_view line) {
  return line.empty() ||
         (line[0] == 'c' &&
          (line.size() == 1 || std::isspace(static_cast<unsigned char>(line[1]))));
}

struct DimacsEdges {
  std::size_t n = 0;
  std::vector<std::pair<Vertex, Vertex>> edges;
};

/// Shared reader for the edge and arc dialects.
DimacsEdges read_dimacs(std::string_view text, std::string_view kind, char tag) {
  DimacsEdges out;
  bool have_header = false;
  std::size_t declared = 0;
  std::size_t line_no = 0;
  for (auto raw : lines_of(text)) {
    ++line_no;
    auto line = trim(raw);
    if (is_comment(line)) continue;
    std::istringstream in{std::string(line)};
    std::string head;
    in >> head;
    auto fail = [&](const std::string& why) {
      throw InvalidInput("line " + std::to_string(line_no) + ": " + why);
    };
    if (head == "p") {
      std::string fmt;
      long long n = -1, m = -1;
      if (have_header) fail("second header");
      if (!(in >> fmt >> n >> m) || fmt != kind || n < 0 || m < 0) {
        fail("expected `p " + std::string(kind) + " <n> <m>`");
      }
      out.n = static_cast<std::size_t>(n);
      declared = static_cast<std::size_t>(m);
      have_header = true;
    } else if (head.size() == 1 && head[0] == tag) {
      long long u = 0, v = 0;
      if (!have_header) fail("edge before header");
      if (!(in >> u >> v)) fail("expected two endpoints");
      if (u < 1 || v < 1 || static_cast<std::size_t>(u) > out.n ||
          static_cast<std::size_t>(v) > out.n) {
        fail("endpoint out of range 1.." + std::to_string(out.n));
      }
      out.edges.emplace_back(static_cast<Vertex>(u - 1), static_cast<Vertex>(v - 1));
    } else {
      fail("unrecognised line");
    }
    std::string extra;
    if (in >> extra) fail("trailing tokens");
  }
  if (!have_header) throw InvalidInput("missing `p " + std::string(kind) + "` header");
  if (out.edges.size() != declared) {
    throw InvalidInput("header declares " + std::to_string(declared) +
                       " edges, found " + std::to_string(out.edges.size()));
  }
  return out;
}

}  // namespace

Graph parse_dimacs(std::string_view text) {
  auto raw = read_dimacs(text, "edge", 'e');
  Graph g(raw.n);
  for (auto [u, v] : raw.edges) g.add_edge(u, v);
  return g;
}

std::string format_dimacs(const Graph& g) {
  std::string out = "p edge " + std::to_string(g.order()) + " " +
                    std::to_string(g.size()) + "\n";
  for (auto [u, v] : g.edges()) {
    out += "e " + std::to_string(u + 1) + " " + std::to_string(v + 1) + "\n";
  }
  return out;
}

Multigraph parse_dimacs_multigraph(std::string_view text) {
  auto raw = read_dimacs(text, "edge", 'e');
  Multigraph m(raw.n);
  for (auto [u, v] : raw.edges) m.add_edge(u, v);
  return m;
}

std::string format_dimacs(const Multigraph& m) {
  std::string out = "p edge " + std::to_string(m.order()) + " " +
                    std::to_string(m.size()) + "\n";
  for (const auto& e : m.edges()) {
    out += "e " + std::to_string(e.u + 1) + " " + std::to_string(e.v + 1) + "\n";
  }
  return out;
}

std::string format_arcs(const Orientation& d) {
  const auto& m = d.base();
  std::string out = "p arc " + std::to_string(m.order()) + " " +
                    std::to_string(m.size()) + "\n";
  for (auto [t, h] : d.arcs()) {
    out += "a " + std::to_string(t + 1) + " " + std::to_string(h + 1) + "\n";
  }
  return out;
}

Orientation parse_arcs(std::string_view text) {
  auto raw = read_dimacs(text, "arc", 'a');
  Multigraph m(raw.n);
  for (auto [u, v] : raw.edges) m.add_edge(u, v);
  return Orientation(std::move(m), std::vector<bool>(raw.edges.size(), true));
}

Graph parse_graph6(std::string_view line) {
  line = trim(line);
  if (line.starts_with(">>graph6<<")) line.remove_prefix(10);
  std::size_t pos = 0;
  auto next = [&]() -> int {
    if (pos >= line.size()) throw InvalidInput("graph6: truncated input");
    int c = static_cast<unsigned char>(line[pos++]);
    if (c < kGraph6Offset || c > 126) throw InvalidInput("graph6: invalid byte");
    return c - kGraph6Offset;
  };
  std::size_t n = 0;
  if (line.empty()) throw InvalidInput("graph6: empty input");
  if (static_cast<unsigned char>(line[0]) == 126) {
    ++pos;
    if (line.size() > 1 && static_cast<unsigned char>(line[1]) == 126) {
      throw InvalidInput("graph6: orders above 258047 are not supported");
    }
    for (int i = 0; i < 3; ++i) n = (n << 6) | static_cast<std::size_t>(next());
  } else {
    n = static_cast<std::size_t>(next());
  }
  Graph g(n);
  int bits = 0;
  int chunk = 0;
  for (std::size_t j = 1; j < n; ++j) {
    for (std::size_t i = 0; i < j; ++i) {
      if (bits == 0) {
        chunk = next();
        bits = 6;
      }
      --bits;
      if ((chunk >> bits) & 1) g.add_edge(static_cast<Vertex>(i), static_cast<Vertex>(j));
    }
  }
  if (pos != line.size()) throw InvalidInput("graph6: trailing bytes");
  return g;
}

std::string format_graph6(const Graph& g) {
  const std::size_t n = g.order();
  std::string out;
  if (n <= 62) {
    out.push_back(static_cast<char>(n + kGraph6Offset));
  } else if (n <= 258047) {
    out.push_back(static_cast<char>(126));
    for (int shift = 12; shift >= 0; shift -= 6) {
      out.push_back(static_cast<char>(((n >> shift) & 63) + kGraph6Offset));
    }
  } else {
    throw InvalidInput("graph6: orders above 258047 are not supported");
  }
  int bits = 0;
  int chunk = 0;
  for (std::size_t j = 1; j < n; ++j) {
    for (std::size_t i = 0; i < j; ++i) {
      chunk = (chunk << 1) | (g.adjacent(static_cast<Vertex>(i), static_cast<Vertex>(j)) ? 1 : 0);
      if (++bits == 6) {
        out.push_back(static_cast<char>(chunk + kGraph6Offset));
        bits = 0;
        chunk = 0;
      }
    }
  }
  if (bits > 0) out.push_back(static_cast<char>((chunk << (6 - bits)) + kGraph6Offset));
  return out;
}

Graph parse_graph(std::string_view text) {
  for (auto raw : lines_of(text)) {
    auto line = trim(raw);
    if (line.starts_with("p ") || line.starts_with("e ") ||
        (line.starts_with("c") && is_comment(line))) {
      return parse_dimacs(text);
    }
  }
  for (auto raw : lines_of(text)) {
    auto line = trim(raw);
    if (!line.empty()) return parse_graph6(line);
  }
  throw InvalidInput("empty graph input");
}

VertexSet parse_vertex_set(std::string_view text, std::size_t universe) {
  auto body = trim(text);
  std::vector<Vertex> members;
  auto take = [&](long long v) {
    if (v < 0 || static_cast<std::size_t>(v) >= universe) {
      throw InvalidInput("set member " + std::to_string(v) + " out of range 0.." +
                         std::to_string(universe == 0 ? 0 : universe - 1));
    }
    members.push_back(static_cast<Vertex>(v));
  };
  if (!body.empty() && (body.front() == '{' || body.front() == '[')) {
    Json doc;
    try {
      doc = Json::parse(body);
    } catch (const Json::exception& e) {
      throw InvalidInput(std::string("set file: ") + e.what());
    }
    const Json& arr = doc.is_object() ? doc["members"] : doc;
    if (!arr.is_array()) throw InvalidInput("set file: expected a members array");
    for (const auto& item : arr) {
      if (!item.is_number_integer()) throw InvalidInput("set file: non-integer member");
      take(item.get<long long>());
    }
    return VertexSet(universe, std::move(members));
  }
  for (auto raw : lines_of(text)) {
    auto line = trim(raw);
    if (is_comment(line) || line.starts_with("#")) continue;
    std::istringstream in{std::string(line)};
    std::string tok;
    while (in >> tok) {
      std::size_t used = 0;
      long long v = 0;
      try {
        v = std::stoll(tok, &used);
      } catch (const std::exception&) {
        used = 0;
      }
      if (used != tok.size()) throw InvalidInput("set file: bad token `" + tok + "`");
      take(v);
    }
  }
  return VertexSet(universe, std::move(members));
}

std::string content_digest(std::string_view bytes) {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (unsigned char c : bytes) {
    h ^= c;
    h *= 0x100000001b3ULL;
  }
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
  return buf;
}

std::string graph_digest(const Graph& g) { return content_digest(format_dimacs(g)); }

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InvalidInput("cannot read " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

void write_file(const std::string& path, std::string_view contents) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw InvalidInput("cannot write " + path);
  out << contents;
}

}  // namespace packdom
