#ifndef CAGRAPH_TESTS_FIXTURES_HPP
#define CAGRAPH_TESTS_FIXTURES_HPP

#include <cstdint>
#include <initializer_list>
#include <random>
#include <utility>
#include <vector>

#include "cagraph/graph.hpp"
#include "cagraph/models.hpp"

namespace cagraph::testing
{

/// Graph from 1-based edge pairs.
Graph graph1(int n, std::initializer_list<std::pair<int, int>> edges);

/// 0-based vertex set from 1-based ids.
VertexSet ids1(std::initializer_list<int> ids);

Graph path(int n);
Graph cycle(int n);
Graph complete(int n);
Graph edgeless(int n);

/// The banner: C4 on 2, 3, 4, 5 with a pendant 1 at 2.
Graph banner_graph();
/// A model of the banner, arc i - 1 for vertex i.
Representation banner_representation();

/// Triangle a, b, c with pendants a', b', c'. Ids: a=0 b=1 c=2 a'=3 b'=4 c'=5.
namespace net
{
inline constexpr Vertex a = 0, b = 1, c = 2, a2 = 3, b2 = 4, c2 = 5;
}
Graph net_graph();

/// Complement of three disjoint edges aa', bb', cc'. Same ids as the net.
namespace oct
{
inline constexpr Vertex a = 0, b = 1, c = 2, a2 = 3, b2 = 4, c2 = 5;
}
Graph octahedron();

/// Interval graph of u=[0,10] m=[5,15] w=[8,22] x=[1,2] p=[6,7] q=[13,14]
/// y=[20,21] d=[30,31].
namespace g7
{
inline constexpr Vertex u = 0, m = 1, w = 2, x = 3, p = 4, q = 5, y = 6, d = 7;
}
Graph g7_graph();
Representation g7_representation();

/// K3 on 1,2,3 with a pendant 4 attached to 1.
Graph paw();

Graph c4_plus_c4();

/// A twin-free, universal-free CA graph on 9 vertices with |K_G| = 4 (the graph
/// of random_model(9, 114204)).
Graph budget_graph();
inline constexpr int budget_graph_k = 4;

/// Interval model from closed integer intervals with distinct endpoints.
Representation interval_representation(const std::vector<std::pair<int, int>> &intervals);

std::vector<Vertex> random_permutation(int n, std::mt19937_64 &rng);

/// Random model with every arc's left event before its right one.
ArcModel random_interval_model(int n, std::mt19937_64 &rng);

/// Whether the arcs of a, b, c pairwise intersect without a common point and
/// together cover the circle.
bool non_helly_triangle(const ArcModel &model, int a, int b, int c);

} // namespace cagraph::testing

#endif
