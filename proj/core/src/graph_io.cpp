#include "ggt/graph_io.hpp"

#include <fstream>
#include <sstream>
#include <stdexcept>

#include <json.hpp>

namespace ggt {

using nlohmann::json;

namespace {

std::string class_to_string(GroupClass c) {
  return c == GroupClass::order_two ? "2" : "3+";
}

GroupClass class_from_string(const std::string& s) {
  if (s == "2") return GroupClass::order_two;
  if (s == "3+") return GroupClass::order_three_plus;
  throw std::invalid_argument("graph document: unknown cardinality class '" +
                              s + "'");
}

}  // namespace

std::string write_graph_json(
    const GraphDocument& doc,
    const std::vector<std::pair<std::string, std::string>>& meta) {
  const FiniteGraph& g = doc.graph;
  json j;
  j["format"] = "ggt-graph";
  j["version"] = 1;
  json verts = json::array();
  for (int v = 0; v < g.vertex_count(); ++v) {
    json jv;
    jv["id"] = v;
    if (!g.labels().empty() && !g.labels()[v].empty())
      jv["label"] = g.labels()[v];
    if (!g.classes().empty()) jv["class"] = class_to_string(g.classes()[v]);
    verts.push_back(jv);
  }
  j["vertices"] = verts;
  json edges = json::array();
  for (auto [u, v] : g.edges()) edges.push_back(json::array({u, v}));
  j["edges"] = edges;
  if (doc.edge_classes) {
    j["edge_classes"] = {{"mode", doc.edge_classes->mode},
                         {"class", doc.edge_classes->edge_class}};
  }
  if (!meta.empty()) {
    json m;
    for (const auto& [k, v] : meta) m[k] = v;
    j["meta"] = m;
  }
  return j.dump(2) + "\n";
}

GraphDocument read_graph_json(const std::string& text) {
  json j = json::parse(text);
  if (!j.contains("vertices") || !j.contains("edges"))
    throw std::invalid_argument(
        "graph document: 'vertices' and 'edges' arrays required");

  int n = static_cast<int>(j["vertices"].size());
  std::vector<std::string> labels(n);
  std::vector<GroupClass> classes;
  bool any_label = false, any_class = false;
  std::vector<std::optional<GroupClass>> raw_classes(n);
  int next_implicit = 0;
  for (const auto& jv : j["vertices"]) {
    int id;
    if (jv.is_number_integer()) {
      id = jv.get<int>();
    } else {
      id = jv.contains("id") ? jv["id"].get<int>() : next_implicit;
    }
    next_implicit = id + 1;
    if (id < 0 || id >= n)
      throw std::invalid_argument("graph document: vertex ids must be dense 0..n-1");
    if (jv.is_object() && jv.contains("label")) {
      labels[id] = jv["label"].get<std::string>();
      any_label = true;
    }
    if (jv.is_object() && jv.contains("class") && !jv["class"].is_null()) {
      raw_classes[id] = class_from_string(jv["class"].get<std::string>());
      any_class = true;
    }
  }
  std::vector<std::pair<int, int>> edges;
  for (const auto& je : j["edges"])
    edges.emplace_back(je.at(0).get<int>(), je.at(1).get<int>());

  GraphDocument doc;
  doc.graph = FiniteGraph(n, std::move(edges));
  if (any_label) doc.graph.set_labels(std::move(labels));
  if (any_class) {
    classes.reserve(n);
    for (int v = 0; v < n; ++v) {
      if (!raw_classes[v])
        throw std::invalid_argument(
            "graph document: cardinality class must be set on all vertices or none");
      classes.push_back(*raw_classes[v]);
    }
    doc.graph.set_classes(std::move(classes));
  }
  if (j.contains("edge_classes")) {
    EdgeClassAnnotation ann;
    ann.mode = j["edge_classes"].value("mode", std::string("median"));
    ann.edge_class = j["edge_classes"]["class"].get<std::vector<int>>();
    if (static_cast<int>(ann.edge_class.size()) != doc.graph.edge_count())
      throw std::invalid_argument(
          "graph document: edge_classes length must match edge count");
    doc.edge_classes = std::move(ann);
  }
  return doc;
}

void write_graph_file(
    const std::string& path, const GraphDocument& doc,
    const std::vector<std::pair<std::string, std::string>>& meta) {
  write_text_file(path, write_graph_json(doc, meta));
}

GraphDocument read_graph_file(const std::string& path) {
  return read_graph_json(read_text_file(path));
}

std::string read_text_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_text_file(const std::string& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot write " + path);
  out << text;
}

}  // namespace ggt
