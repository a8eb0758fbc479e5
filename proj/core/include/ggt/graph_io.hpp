#pragma once

#include <optional>
#include <string>
#include <vector>

#include "ggt/graph.hpp"

namespace ggt {

// Optional edge-class annotation carried alongside a graph document
// (e.g. a hyperplane decomposition).
struct EdgeClassAnnotation {
  std::string mode;            // "median" or "quasi-median"
  std::vector<int> edge_class; // per edge, indexed like FiniteGraph::edges()
};

struct GraphDocument {
  FiniteGraph graph;
  std::optional<EdgeClassAnnotation> edge_classes;
};

// Graph exchange format: a JSON document with a "vertices" array
// (id, optional label, optional cardinality class "2"/"3+") and an
// "edges" array of id pairs. Extra comment fields are preserved on write
// via the `meta` lines (written as "#"-prefixed keys is not valid JSON,
// so metadata goes into a "meta" object instead).
std::string write_graph_json(const GraphDocument& doc,
                             const std::vector<std::pair<std::string, std::string>>& meta = {});
GraphDocument read_graph_json(const std::string& text);

void write_graph_file(const std::string& path, const GraphDocument& doc,
                      const std::vector<std::pair<std::string, std::string>>& meta = {});
GraphDocument read_graph_file(const std::string& path);

std::string read_text_file(const std::string& path);
void write_text_file(const std::string& path, const std::string& text);

}  // namespace ggt
