#pragma once

#include <map>
#include <optional>
#include <string>

#include "misrecon/graph.hpp"
#include "misrecon/schedule.hpp"

namespace misrecon {

// Text formats. Parse errors are InputError with "line N: ..." text.
//
//   graph     `node <id>` and `edge <u> <v>` records, `#` comments
//   set       whitespace-separated ids, `#` comments
//   schedule  one line per step, sorted ids joined by single spaces
//   coloring  `color <id> <int>` records, `#` comments

Graph parse_graph(const std::string& text);
std::string format_graph(const Graph& g);

VertexSet parse_vertex_set(const std::string& text);
std::string format_vertex_set(const VertexSet& s);

Schedule parse_schedule(const std::string& text);
std::string format_schedule(const Schedule& s);

std::map<NodeId, int> parse_coloring(const std::string& text);
std::string format_coloring(const std::map<NodeId, int>& c);

std::string read_file(const std::string& path);
void write_file(const std::string& path, const std::string& text);

// Graphviz rendering: alpha white, beta grey, epsilon black, and the set of
// the chosen step outlined in red.
struct DotOptions {
  const VertexSet* alpha = nullptr;
  const VertexSet* beta = nullptr;
  const Schedule* schedule = nullptr;
  std::optional<std::size_t> step;
};

std::string export_dot(const Graph& g, const DotOptions& opt = {});

}  // namespace misrecon
