#include "cagraph/graph.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>
#include <string>

namespace cagraph
{

VertexSet to_vertex_set(const Bitset &bits)
{
  VertexSet out;
  for (auto i = bits.find_first(); i != Bitset::npos; i = bits.find_next(i))
    out.push_back(static_cast<Vertex>(i));
  return out;
}

Bitset to_bitset(const VertexSet &set, int n)
{
  Bitset bits(n);
  for (Vertex v : set) {
    if (v < 0 || v >= n)
      throw std::out_of_range("vertex " + std::to_string(v) + " out of range");
    bits.set(v);
  }
  return bits;
}

Graph::Graph(int n)
{
  if (n < 0)
    throw std::invalid_argument("negative vertex count");
  closed_.assign(n, Bitset(n));
  for (int v = 0; v < n; ++v)
    closed_[v].set(v);
  colors_.assign(n, 0);
}

Graph Graph::from_edges(int n, std::span<const std::pair<Vertex, Vertex>> edges,
                        std::vector<Color> colors)
{
  Graph g(n);
  for (auto [u, v] : edges)
    g.add_edge(u, v);
  if (!colors.empty()) {
    if (static_cast<int>(colors.size()) != n)
      throw std::invalid_argument("color vector size differs from vertex count");
    g.colors_ = std::move(colors);
  }
  return g;
}

void Graph::check(Vertex v) const
{
  if (v < 0 || v >= size())
    throw std::out_of_range("unknown vertex id " + std::to_string(v));
}

void Graph::add_edge(Vertex u, Vertex v)
{
  check(u);
  check(v);
  if (u == v)
    throw std::invalid_argument("self-loop on vertex " + std::to_string(u));
  closed_[u].set(v);
  closed_[v].set(u);
}

bool Graph::adjacent(Vertex u, Vertex v) const
{
  check(u);
  check(v);
  return u != v && closed_[u].test(v);
}

Color Graph::color(Vertex v) const
{
  check(v);
  return colors_[v];
}

void Graph::set_color(Vertex v, Color c)
{
  check(v);
  colors_[v] = c;
}

const Bitset &Graph::closed_row(Vertex v) const
{
  check(v);
  return closed_[v];
}

int Graph::degree(Vertex v) const
{
  return static_cast<int>(closed_row(v).count()) - 1;
}

std::vector<std::pair<Vertex, Vertex>> Graph::edges() const
{
  std::vector<std::pair<Vertex, Vertex>> out;
  for (Vertex u = 0; u < size(); ++u)
    for (auto v = closed_[u].find_next(u); v != Bitset::npos; v = closed_[u].find_next(v))
      out.emplace_back(u, static_cast<Vertex>(v));
  return out;
}

Graph Graph::permuted(std::span<const Vertex> perm) const
{
  const int n = size();
  if (static_cast<int>(perm.size()) != n)
    throw std::invalid_argument("permutation size differs from vertex count");
  Graph h(n);
  for (auto [u, v] : edges())
    h.add_edge(perm[u], perm[v]);
  for (Vertex v = 0; v < n; ++v)
    h.colors_[perm[v]] = colors_[v];
  return h;
}

Graph Graph::induced(const VertexSet &keep) const
{
  Graph h(static_cast<int>(keep.size()));
  for (std::size_t i = 0; i < keep.size(); ++i) {
    h.colors_[i] = color(keep[i]);
    for (std::size_t j = i + 1; j < keep.size(); ++j)
      if (adjacent(keep[i], keep[j]))
        h.add_edge(static_cast<Vertex>(i), static_cast<Vertex>(j));
  }
  return h;
}

VertexSet closed_neighborhood(const Graph &g, Vertex v)
{
  return to_vertex_set(g.closed_row(v));
}

VertexSet common_neighborhood(const Graph &g, const VertexSet &s)
{
  if (s.empty())
    throw std::invalid_argument("common neighborhood of an empty set");
  Bitset acc = g.closed_row(s.front());
  for (Vertex v : s)
    acc &= g.closed_row(v);
  return to_vertex_set(acc);
}

VertexSet exclusive_neighborhood(const Graph &g, const VertexSet &s, const VertexSet &sub)
{
  const int n = g.size();
  const Bitset in_s = to_bitset(s, n);
  const Bitset in_sub = to_bitset(sub, n);
  if (!in_sub.is_subset_of(in_s))
    throw std::invalid_argument("exclusive neighborhood: S' is not a subset of S");

  VertexSet out;
  for (Vertex x = 0; x < n; ++x) {
    if (in_s.test(x))
      continue;
    const Bitset &row = g.closed_row(x);
    if (in_sub.is_subset_of(row) && !(in_s - in_sub).intersects(row))
      out.push_back(x);
  }
  return out;
}

std::vector<VertexSet> twin_classes(const Graph &g)
{
  std::map<std::pair<Bitset, Color>, VertexSet> buckets;
  for (Vertex v = 0; v < g.size(); ++v)
    buckets[{g.closed_row(v), g.color(v)}].push_back(v);

  std::vector<VertexSet> out;
  out.reserve(buckets.size());
  for (auto &[key, cls] : buckets)
    out.push_back(std::move(cls));
  std::sort(out.begin(), out.end());
  return out;
}

bool is_universal(const Graph &g, Vertex v)
{
  return g.closed_row(v).all();
}

Graph disjoint_union(const Graph &a, const Graph &b)
{
  const int na = a.size();
  Graph g(na + b.size());
  for (auto [u, v] : a.edges())
    g.add_edge(u, v);
  for (auto [u, v] : b.edges())
    g.add_edge(u + na, v + na);
  for (Vertex v = 0; v < na; ++v)
    g.set_color(v, a.color(v));
  for (Vertex v = 0; v < b.size(); ++v)
    g.set_color(v + na, b.color(v));
  return g;
}

} // namespace cagraph
