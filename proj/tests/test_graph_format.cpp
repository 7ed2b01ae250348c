#include <doctest.h>

#include <fstream>
#include <sstream>

#include "generators.hpp"
#include "lpalie/families.hpp"
#include "lpalie/graph_format.hpp"

using namespace lpalie;

namespace {

bool same_graph(const Graph& a, const Graph& b) {
  if (a.vertex_count() != b.vertex_count() || a.edge_count() != b.edge_count()) return false;
  for (std::size_t i = 0; i < a.vertex_count(); ++i) {
    if (a.vertex(i).label != b.vertex(i).label) return false;
  }
  for (std::size_t e = 0; e < a.edge_count(); ++e) {
    const auto& x = a.edge(e);
    const auto& y = b.edge(e);
    if (x.label != y.label || x.source != y.source || x.target != y.target) return false;
  }
  return true;
}

std::size_t error_line(const std::string& text) {
  try {
    parse_graph(text);
  } catch (const ParseError& e) {
    return e.line();
  }
  return 0;
}

}  // namespace

TEST_CASE("DSL parsing") {
  const Graph g = parse_graph("# two vertices\nvertex a\nvertex b\n\nedge a b 2\nedge-label loop b b\n");
  CHECK(g.vertex_count() == 2);
  CHECK(g.edge_count() == 3);
  CHECK(g.edge(0).label == "a_b_1");
  CHECK(g.edge(1).label == "a_b_2");
  CHECK(g.edge(2).label == "loop");
  CHECK(g.edge(2).source == 1);
}

TEST_CASE("DSL errors carry positions") {
  CHECK(error_line("vertex a\nedge a b\n") == 2);
  CHECK(error_line("vertex a\nvertex a\n") == 2);
  CHECK(error_line("vertex a\nedge a a 0\n") == 2);
  CHECK(error_line("vertex a\nedge a a x\n") == 2);
  CHECK(error_line("vertex a\nfoo\n") == 2);
  CHECK(error_line("vertex a\nedge-label e a a\nedge-label e a a\n") == 3);
  CHECK(error_line("vertex\n") == 1);
  CHECK_THROWS_AS(parse_graph("# nothing\n"), ParseError);
  CHECK_THROWS_AS(parse_graph(""), ParseError);
}

TEST_CASE("structured input") {
  const Graph g = read_graph(R"({"vertices": ["a", "b"], "adjacency": [[1, 2], [0, 0]]})");
  CHECK(g.edge_count() == 3);
  CHECK(g.is_sink(1));
  CHECK_THROWS_AS(read_graph(R"({"vertices": ["a"], "adjacency": [[1, 2]]})"), ParseError);
  CHECK_THROWS_AS(read_graph(R"({"vertices": ["a"], "adjacency": [[-1]]})"), ParseError);
  CHECK_THROWS_AS(read_graph(R"({"vertices": ["a"]})"), ParseError);
  CHECK_THROWS_AS(read_graph("{not json"), ParseError);
}

TEST_CASE("serialization round-trips") {
  testing::Rng rng(51);
  for (int trial = 0; trial < 200; ++trial) {
    const Graph g = testing::random_graph(rng, 6, 3, 0.5);
    CHECK(same_graph(parse_graph(serialize_graph(g)), g));
  }
  // Hand-named edges that collide with automatic labels.
  const Graph tricky = parse_graph("vertex a\nedge-label a_a_2 a a\nedge a a 2\nedge-label x a a\n");
  CHECK(same_graph(parse_graph(serialize_graph(tricky)), tricky));
  for (const Graph& g : {example4(), prime_set(6), two_vertex(2, 3, 2), matrix_rose(3, 2)}) {
    CHECK(same_graph(parse_graph(serialize_graph(g)), g));
  }
}

TEST_CASE("sample graph files parse") {
  for (const char* name : {"example4.g", "rose-1.g", "rose-3.g", "two_vertex-2-2-2.g", "single-vertex.g",
                           "two-sinks.json"}) {
    std::ifstream in(std::string(LPALIE_GRAPHS_DIR) + "/" + name);
    REQUIRE(in);
    std::stringstream buf;
    buf << in.rdbuf();
    CHECK_NOTHROW(read_graph(buf.str()));
  }
}
