#include "fixtures.hpp"

#include <algorithm>
#include <map>
#include <numeric>

namespace cagraph::testing
{

Graph graph1(int n, std::initializer_list<std::pair<int, int>> edges)
{
  Graph g(n);
  for (auto [u, v] : edges)
    g.add_edge(u - 1, v - 1);
  return g;
}

VertexSet ids1(std::initializer_list<int> ids)
{
  VertexSet out;
  for (int id : ids)
    out.push_back(id - 1);
  std::sort(out.begin(), out.end());
  return out;
}

Graph path(int n)
{
  Graph g(n);
  for (int v = 0; v + 1 < n; ++v)
    g.add_edge(v, v + 1);
  return g;
}

Graph cycle(int n)
{
  Graph g = path(n);
  g.add_edge(n - 1, 0);
  return g;
}

Graph complete(int n)
{
  Graph g(n);
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v)
      g.add_edge(u, v);
  return g;
}

Graph edgeless(int n)
{
  return Graph(n);
}

Graph banner_graph()
{
  return graph1(5, {{1, 2}, {2, 3}, {3, 4}, {4, 5}, {2, 5}});
}

Representation banner_representation()
{
  // Clockwise from the left endpoint of A1.
  const std::vector<Event> events{{0, Side::left},  {0, Side::right}, {4, Side::left}, {1, Side::right},
                                  {3, Side::left},  {4, Side::right}, {2, Side::left}, {3, Side::right},
                                  {1, Side::left},  {2, Side::right}};
  return Representation{ArcModel(events), {0, 1, 2, 3, 4}};
}

Graph net_graph()
{
  using namespace net;
  Graph g(6);
  g.add_edge(a, b);
  g.add_edge(b, c);
  g.add_edge(a, c);
  g.add_edge(a, a2);
  g.add_edge(b, b2);
  g.add_edge(c, c2);
  return g;
}

Graph octahedron()
{
  using namespace oct;
  Graph g = complete(6);
  Graph h(6);
  for (auto [u, v] : g.edges())
    if (!((u == a && v == a2) || (u == b && v == b2) || (u == c && v == c2)))
      h.add_edge(u, v);
  return h;
}

Representation interval_representation(const std::vector<std::pair<int, int>> &intervals)
{
  std::map<int, Event> at;
  for (std::size_t i = 0; i < intervals.size(); ++i) {
    at.emplace(intervals[i].first, Event{static_cast<int>(i), Side::left});
    at.emplace(intervals[i].second, Event{static_cast<int>(i), Side::right});
  }
  std::vector<Event> events;
  for (auto &[pos, e] : at)
    events.push_back(e);
  std::vector<int> assign(intervals.size());
  std::iota(assign.begin(), assign.end(), 0);
  return Representation{ArcModel(std::move(events)), std::move(assign)};
}

Representation g7_representation()
{
  return interval_representation(
      {{0, 10}, {5, 15}, {8, 22}, {1, 2}, {6, 7}, {13, 14}, {20, 21}, {30, 31}});
}

Graph g7_graph()
{
  using namespace g7;
  Graph g(8);
  g.add_edge(u, m);
  g.add_edge(u, w);
  g.add_edge(m, w);
  g.add_edge(x, u);
  g.add_edge(p, u);
  g.add_edge(p, m);
  g.add_edge(q, m);
  g.add_edge(q, w);
  g.add_edge(y, w);
  return g;
}

Graph paw()
{
  return graph1(4, {{1, 2}, {2, 3}, {1, 3}, {1, 4}});
}

Graph c4_plus_c4()
{
  return disjoint_union(cycle(4), cycle(4));
}

Graph budget_graph()
{
  return graph1(9, {{1, 3}, {1, 4}, {1, 5}, {1, 7}, {1, 9}, {2, 3}, {2, 4}, {2, 5}, {2, 6}, {2, 8},
                    {2, 9}, {3, 5}, {3, 7}, {3, 8}, {3, 9}, {4, 5}, {5, 9}, {6, 8}, {6, 9},
                    {8, 9}});
}

std::vector<Vertex> random_permutation(int n, std::mt19937_64 &rng)
{
  std::vector<Vertex> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  std::shuffle(perm.begin(), perm.end(), rng);
  return perm;
}

ArcModel random_interval_model(int n, std::mt19937_64 &rng)
{
  std::vector<int> slots(2 * n);
  for (int i = 0; i < 2 * n; ++i)
    slots[i] = i / 2;
  std::shuffle(slots.begin(), slots.end(), rng);
  std::vector<bool> seen(n, false);
  std::vector<Event> events;
  for (int arc : slots) {
    events.push_back({arc, seen[arc] ? Side::right : Side::left});
    seen[arc] = true;
  }
  return ArcModel(std::move(events));
}

bool non_helly_triangle(const ArcModel &model, int a, int b, int c)
{
  if (classify_arc_pair(model, a, b) == IntersectionType::di ||
      classify_arc_pair(model, b, c) == IntersectionType::di ||
      classify_arc_pair(model, a, c) == IntersectionType::di)
    return false;
  for (int pos = 0; pos < static_cast<int>(model.events().size()); ++pos) {
    const VertexSet over = model.arcs_over_gap(pos);
    const auto has = [&](int arc) { return std::binary_search(over.begin(), over.end(), arc); };
    const int count = has(a) + has(b) + has(c);
    if (count == 0 || count == 3)
      return false;
  }
  return true;
}

} // namespace cagraph::testing
