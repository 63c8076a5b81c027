#ifndef CAGRAPH_GRAPH_HPP
#define CAGRAPH_GRAPH_HPP

#include <cstdint>
#include <span>
#include <utility>
#include <vector>

#include <boost/dynamic_bitset.hpp>

namespace cagraph
{

/// Vertices are 0-based internally. File formats and CLI output are 1-based.
using Vertex = int;
using Color = std::uint64_t;

/// Sorted, duplicate-free list of vertices.
using VertexSet = std::vector<Vertex>;

using Bitset = boost::dynamic_bitset<>;

VertexSet to_vertex_set(const Bitset &bits);
Bitset to_bitset(const VertexSet &set, int n);

/// Colored, undirected, loop-free graph on the vertices 0..n-1.
///
/// Closed neighborhoods are stored as bitsets; N[v] always contains v.
class Graph
{
public:
  Graph() = default;
  explicit Graph(int n);

  static Graph from_edges(int n, std::span<const std::pair<Vertex, Vertex>> edges,
                          std::vector<Color> colors = {});

  int size() const { return static_cast<int>(closed_.size()); }

  void add_edge(Vertex u, Vertex v);
  bool adjacent(Vertex u, Vertex v) const;

  Color color(Vertex v) const;
  void set_color(Vertex v, Color c);
  const std::vector<Color> &colors() const { return colors_; }

  /// N[v] as a bitset over 0..n-1.
  const Bitset &closed_row(Vertex v) const;

  int degree(Vertex v) const;
  std::vector<std::pair<Vertex, Vertex>> edges() const;

  /// Relabels vertex v as perm[v]; colors travel with their vertex.
  Graph permuted(std::span<const Vertex> perm) const;

  /// Subgraph induced by `keep`; vertex keep[i] becomes vertex i.
  Graph induced(const VertexSet &keep) const;

  bool operator==(const Graph &other) const = default;

private:
  void check(Vertex v) const;

  std::vector<Bitset> closed_;
  std::vector<Color> colors_;
};

VertexSet closed_neighborhood(const Graph &g, Vertex v);

/// Intersection of N[v] over v in S. Throws on empty S.
VertexSet common_neighborhood(const Graph &g, const VertexSet &s);

/// Vertices outside S adjacent to all of `sub` and to none of S \ sub.
VertexSet exclusive_neighborhood(const Graph &g, const VertexSet &s, const VertexSet &sub);

/// Classes of the relation N[u] = N[v] and color(u) = color(v). Each class is
/// sorted and the classes are ordered by their minimum vertex.
std::vector<VertexSet> twin_classes(const Graph &g);

bool is_universal(const Graph &g, Vertex v);

Graph disjoint_union(const Graph &a, const Graph &b);

} // namespace cagraph

#endif // CAGRAPH_GRAPH_HPP
