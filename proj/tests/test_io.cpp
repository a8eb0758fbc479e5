#include <doctest.h>

#include "ggt/graph_io.hpp"
#include "ggt/median.hpp"

using namespace ggt;

TEST_CASE("graph documents round-trip") {
  GraphDocument doc;
  doc.graph = cycle_graph(4);
  doc.graph.set_labels({"a", "b", "c", "d"});
  doc.graph.set_classes({GroupClass::order_two, GroupClass::order_three_plus,
                         GroupClass::order_two, GroupClass::order_three_plus});
  auto dec = median::hyperplanes(doc.graph, median::HyperplaneMode::median);
  doc.edge_classes = EdgeClassAnnotation{"median", dec.edge_class};

  auto text = write_graph_json(doc, {{"seed", "7"}});
  auto back = read_graph_json(text);
  CHECK(back.graph.vertex_count() == 4);
  CHECK(back.graph.edges() == doc.graph.edges());
  CHECK(back.graph.labels() == doc.graph.labels());
  CHECK(back.graph.classes() == doc.graph.classes());
  REQUIRE(back.edge_classes.has_value());
  CHECK(back.edge_classes->edge_class == dec.edge_class);
}

TEST_CASE("plain documents without payloads") {
  auto text = write_graph_json({path_graph(3), std::nullopt});
  auto back = read_graph_json(text);
  CHECK(back.graph.vertex_count() == 3);
  CHECK(back.graph.labels().empty());
  CHECK(back.graph.classes().empty());
}

TEST_CASE("malformed documents are rejected") {
  CHECK_THROWS(read_graph_json("{}"));
  CHECK_THROWS(read_graph_json(
      R"({"vertices":[{"id":0,"class":"weird"}],"edges":[]})"));
  CHECK_THROWS(read_graph_json(
      R"({"vertices":[{"id":0},{"id":1}],"edges":[[0,5]]})"));
}
