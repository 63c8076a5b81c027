#include <doctest.h>

#include <random>
#include <sstream>

#include "cagraph/graph.hpp"
#include "cagraph/graph_file.hpp"
#include "cagraph/models.hpp"
#include "cagraph/reduction.hpp"
#include "enumerate.hpp"
#include "fixtures.hpp"

using namespace cagraph;
using namespace cagraph::testing;

TEST_CASE("closed neighborhoods contain the vertex itself")
{
  const Graph g = banner_graph();
  CHECK(closed_neighborhood(g, 0) == ids1({1, 2}));
  CHECK(closed_neighborhood(g, 1) == ids1({1, 2, 3, 5}));
  CHECK(g.degree(1) == 3);
  CHECK(g.adjacent(1, 4));
  CHECK_FALSE(g.adjacent(0, 2));
}

TEST_CASE("add_edge rejects loops and unknown vertices")
{
  Graph g(3);
  CHECK_THROWS_AS(g.add_edge(1, 1), std::invalid_argument);
  CHECK_THROWS_AS(g.add_edge(0, 3), std::out_of_range);
}

TEST_CASE("common and exclusive neighborhoods")
{
  const Graph g = banner_graph();
  CHECK(common_neighborhood(g, ids1({2, 3})) == ids1({2, 3}));
  CHECK(common_neighborhood(g, ids1({4})) == ids1({3, 4, 5}));
  CHECK_THROWS(common_neighborhood(g, {}));

  // Vertices outside {2,4} seeing 2 but not 4.
  CHECK(exclusive_neighborhood(g, ids1({2, 4}), ids1({2})) == ids1({1}));
  CHECK(exclusive_neighborhood(g, ids1({2, 4}), ids1({2, 4})) == ids1({3, 5}));
  CHECK_THROWS(exclusive_neighborhood(g, ids1({2}), ids1({3})));
}

TEST_CASE("twin classes respect colors")
{
  Graph g = complete(3);
  CHECK(twin_classes(g) == std::vector<VertexSet>{{0, 1, 2}});
  g.set_color(1, 5);
  CHECK(twin_classes(g) == std::vector<VertexSet>{{0, 2}, {1}});
  CHECK(twin_classes(path(4)).size() == 4);
}

TEST_CASE("permuted and induced graphs")
{
  Graph g = path(3);
  g.set_color(0, 9);
  const std::vector<Vertex> perm{2, 0, 1};
  const Graph h = g.permuted(perm);
  CHECK(h.adjacent(2, 0));
  CHECK(h.adjacent(0, 1));
  CHECK_FALSE(h.adjacent(2, 1));
  CHECK(h.color(2) == 9);

  const Graph sub = banner_graph().induced(ids1({2, 3, 5}));
  CHECK(sub.size() == 3);
  CHECK(sub.edges() == std::vector<std::pair<Vertex, Vertex>>{{0, 1}, {0, 2}});
}

TEST_CASE("reduce removes twins, then universal vertices")
{
  // K2 joined to a P3 whose middle vertex becomes universal after collapsing.
  Graph g(5);
  g.add_edge(0, 1);
  g.add_edge(0, 2);
  g.add_edge(1, 2);
  g.add_edge(2, 3);
  g.add_edge(2, 4);
  const Reduction r = reduce(g);
  CHECK(r.record.twin_rep == std::map<Vertex, Vertex>{{1, 0}});
  CHECK(r.record.universals == std::vector<std::pair<Vertex, Color>>{{2, 0}});
  CHECK(r.record.survivors == VertexSet{0, 3, 4});
  CHECK(r.record.multiplicity.at(0) == 2);
  CHECK(r.graph.size() == 3);
  CHECK(r.graph.edges().empty());
  // Multiplicity 2 ranks above multiplicity 1 for equal input colors.
  CHECK(r.graph.color(0) == 1);
  CHECK(r.graph.color(1) == 0);
  CHECK_FALSE(r.record.is_identity());

  const Reduction again = reduce(r.graph);
  CHECK(again.record.is_identity());
  CHECK(again.graph == r.graph);
}

TEST_CASE("reduce on P2 leaves nothing")
{
  const Reduction r = reduce(path(2));
  CHECK(r.graph.size() == 0);
  CHECK(r.record.universals.size() == 1);
  CHECK(r.record.twins_of(0) == std::vector<Vertex>{1});
}

TEST_CASE("reduced graphs are twin-free and universal-free")
{
  for (int n = 1; n <= 6; ++n)
    for (const Graph &g : nonisomorphic_graphs(n)) {
      const Reduction r = reduce(g);
      for (const VertexSet &cls : twin_classes(r.graph))
        REQUIRE(cls.size() == 1);
      for (Vertex v = 0; v < r.graph.size(); ++v)
        REQUIRE_FALSE(is_universal(r.graph, v));
    }
}

TEST_CASE("expanding a reduced representation restores the graph")
{
  std::mt19937_64 rng(17);
  for (int round = 0; round < 200; ++round) {
    const int n = 1 + static_cast<int>(rng() % 9);
    const ArcModel model = random_interval_model(n, rng);
    const Graph g = graph_of_model(model);
    const Reduction r = reduce(g);
    // Restricting the model to the survivors represents the reduced graph.
    std::vector<Event> kept;
    std::vector<int> index(n, -1);
    for (std::size_t i = 0; i < r.record.survivors.size(); ++i)
      index[r.record.survivors[i]] = static_cast<int>(i);
    for (const Event &e : model.events())
      if (index[e.arc] >= 0)
        kept.push_back({index[e.arc], e.side});
    std::vector<int> assign(r.record.survivors.size());
    for (std::size_t i = 0; i < assign.size(); ++i)
      assign[i] = static_cast<int>(i);
    const Representation reduced{ArcModel(kept), assign};
    REQUIRE(graph_of_model(reduced).edges() == r.graph.edges());
    REQUIRE(graph_of_model(expand_representation(reduced, r.record)) == g);
  }
}

TEST_CASE("graph file round trip")
{
  Graph g = banner_graph();
  g.set_color(2, 4);
  const std::string text = write_graph_file(g);
  std::istringstream in(text);
  CHECK(read_graph_file(in) == g);
}

TEST_CASE("graph file parsing")
{
  std::istringstream ok("# a path\np ca 3 2\ne 1 2\n\ne 2 3\nc 3 7\n");
  const Graph g = read_graph_file(ok);
  CHECK(g == [] {
    Graph p = path(3);
    p.set_color(2, 7);
    return p;
  }());

  const auto error_line = [](const std::string &text) {
    std::istringstream in(text);
    try {
      read_graph_file(in);
    } catch (const ParseError &e) {
      return e.line();
    }
    return -1;
  };
  CHECK(error_line("p cx 3 0\n") == 1);
  CHECK(error_line("e 1 2\n") == 1);
  CHECK(error_line("p ca 3 1\ne 1 1\n") == 2);
  CHECK(error_line("p ca 3 2\ne 1 2\ne 2 1\n") == 3);
  CHECK(error_line("p ca 3 1\ne 1 4\n") == 2);
  CHECK(error_line("p ca 3 2\ne 1 2\n") >= 0);
  CHECK(error_line("p ca 2 1\ne 1 2\nc 2 x\n") == 3);
  CHECK(error_line("") == 0);
}
