#include "misrecon/io.hpp"

#include <fstream>
#include <sstream>
#include <vector>

#include "misrecon/errors.hpp"

namespace misrecon {

namespace {

std::vector<std::string> lines_of(const std::string& text) {
  std::vector<std::string> out;
  std::string cur;
  for (char ch : text) {
    if (ch == '\n') {
      out.push_back(cur);
      cur.clear();
    } else if (ch != '\r') {
      cur += ch;
    }
  }
  if (!cur.empty()) out.push_back(cur);
  return out;
}

std::string strip_comment(const std::string& line) {
  auto p = line.find('#');
  return p == std::string::npos ? line : line.substr(0, p);
}

[[noreturn]] void fail(std::size_t line, const std::string& what) {
  throw InputError("line " + std::to_string(line) + ": " + what);
}

long long to_int(const std::string& tok, std::size_t line) {
  std::size_t used = 0;
  long long v = 0;
  try {
    v = std::stoll(tok, &used);
  } catch (const std::exception&) {
    fail(line, "expected an integer, got '" + tok + "'");
  }
  if (used != tok.size()) fail(line, "expected an integer, got '" + tok + "'");
  return v;
}

NodeId to_id(const std::string& tok, std::size_t line) {
  long long v = to_int(tok, line);
  if (v < 0 || v > 2147483647LL) fail(line, "node id out of range: " + tok);
  return static_cast<NodeId>(v);
}

std::vector<std::string> tokens(const std::string& s) {
  std::istringstream is(s);
  std::vector<std::string> out;
  std::string t;
  while (is >> t) out.push_back(t);
  return out;
}

std::string join_ids(const VertexSet& s) {
  std::string out;
  for (NodeId v : s) {
    if (!out.empty()) out += ' ';
    out += std::to_string(v);
  }
  return out;
}

}  // namespace

Graph parse_graph(const std::string& text) {
  std::vector<NodeId> nodes;
  VertexSet declared;
  std::vector<Edge> edges;
  auto ls = lines_of(text);
  for (std::size_t i = 0; i < ls.size(); ++i) {
    auto t = tokens(strip_comment(ls[i]));
    if (t.empty()) continue;
    if (t[0] == "node") {
      if (t.size() != 2) fail(i + 1, "expected 'node <id>'");
      NodeId v = to_id(t[1], i + 1);
      if (declared.insert(v).second) nodes.push_back(v);
    } else if (t[0] == "edge") {
      if (t.size() != 3) fail(i + 1, "expected 'edge <id> <id>'");
      NodeId u = to_id(t[1], i + 1), v = to_id(t[2], i + 1);
      if (!declared.count(u) || !declared.count(v)) fail(i + 1, "edge names an undeclared node");
      if (u == v) fail(i + 1, "self-loop on node " + std::to_string(u));
      edges.emplace_back(u, v);
    } else {
      fail(i + 1, "unknown record '" + t[0] + "'");
    }
  }
  return Graph(nodes, edges);
}

std::string format_graph(const Graph& g) {
  std::string out;
  for (NodeId v : g.nodes()) out += "node " + std::to_string(v) + "\n";
  for (auto [u, v] : g.edges()) out += "edge " + std::to_string(u) + " " + std::to_string(v) + "\n";
  return out;
}

VertexSet parse_vertex_set(const std::string& text) {
  VertexSet s;
  auto ls = lines_of(text);
  for (std::size_t i = 0; i < ls.size(); ++i)
    for (const auto& t : tokens(strip_comment(ls[i]))) s.insert(to_id(t, i + 1));
  return s;
}

std::string format_vertex_set(const VertexSet& s) { return join_ids(s) + "\n"; }

Schedule parse_schedule(const std::string& text) {
  Schedule s;
  auto ls = lines_of(text);
  for (std::size_t i = 0; i < ls.size(); ++i) {
    VertexSet step;
    for (const auto& t : tokens(ls[i])) step.insert(to_id(t, i + 1));
    s.steps.push_back(std::move(step));
  }
  return s;
}

std::string format_schedule(const Schedule& s) {
  std::string out;
  for (const auto& step : s.steps) out += join_ids(step) + "\n";
  return out;
}

std::map<NodeId, int> parse_coloring(const std::string& text) {
  std::map<NodeId, int> c;
  auto ls = lines_of(text);
  for (std::size_t i = 0; i < ls.size(); ++i) {
    auto t = tokens(strip_comment(ls[i]));
    if (t.empty()) continue;
    if (t[0] != "color" || t.size() != 3) fail(i + 1, "expected 'color <id> <int>'");
    NodeId v = to_id(t[1], i + 1);
    long long col = to_int(t[2], i + 1);
    if (col < 0 || col > 1'000'000) fail(i + 1, "color out of range");
    if (c.count(v)) fail(i + 1, "node " + std::to_string(v) + " colored twice");
    c[v] = static_cast<int>(col);
  }
  return c;
}

std::string format_coloring(const std::map<NodeId, int>& c) {
  std::string out;
  for (const auto& [v, col] : c) out += "color " + std::to_string(v) + " " + std::to_string(col) + "\n";
  return out;
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InputError("cannot open " + path);
  std::ostringstream os;
  os << in.rdbuf();
  return os.str();
}

void write_file(const std::string& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw InputError("cannot write " + path);
  out << text;
}

std::string export_dot(const Graph& g, const DotOptions& opt) {
  const VertexSet* in_set = nullptr;
  if (opt.step) {
    if (!opt.schedule) throw InputError("a step index needs a schedule");
    if (*opt.step >= opt.schedule->steps.size())
      throw InputError("step " + std::to_string(*opt.step) + " out of range");
    in_set = &opt.schedule->steps[*opt.step];
  }
  std::string out = "graph G {\n  node [style=filled, fillcolor=white];\n";
  for (NodeId v : g.nodes()) {
    std::string attrs;
    auto add = [&](const std::string& a) { attrs += (attrs.empty() ? "" : ", ") + a; };
    if (opt.alpha || opt.beta) {
      bool a = opt.alpha && opt.alpha->count(v), b = opt.beta && opt.beta->count(v);
      if (b && !a) add("fillcolor=grey");
      else if (!a && !b) add("fillcolor=black, fontcolor=white");
    }
    if (in_set && in_set->count(v)) add("color=red, penwidth=3");
    out += "  " + std::to_string(v) + (attrs.empty() ? "" : " [" + attrs + "]") + ";\n";
  }
  for (auto [u, v] : g.edges()) out += "  " + std::to_string(u) + " -- " + std::to_string(v) + ";\n";
  out += "}\n";
  return out;
}

}  // namespace misrecon
