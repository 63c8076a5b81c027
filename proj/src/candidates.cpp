#include "cagraph/candidates.hpp"

#include <algorithm>
#include <map>

#include "cagraph/interval_canon.hpp"

namespace cagraph
{

using IT = IntersectionType;

BudgetExceeded::BudgetExceeded(int k, int k_max)
    : std::runtime_error("budget exceeded: |K_G| = " + std::to_string(k) +
                         " is larger than k_max = " + std::to_string(k_max)),
      k_(k), k_max_(k_max)
{
}

std::string_view to_string(CandidateSource s)
{
  switch (s) {
  case CandidateSource::hca:
    return "hca";
  case CandidateSource::uniform:
    return "uniform";
  case CandidateSource::nonuniform:
    return "nonuniform";
  case CandidateSource::fallback:
    return "fallback";
  }
  return "?";
}

namespace
{

bool distinct(Vertex a, Vertex b, Vertex c)
{
  return a != b && b != c && a != c;
}

/// Collects candidates by vertex set, keeping the smallest provenance.
class CandidateCollector
{
public:
  void add(VertexSet vertices, Provenance p)
  {
    auto [it, inserted] = sets_.try_emplace(std::move(vertices), p);
    if (!inserted && p < it->second)
      it->second = std::move(p);
  }

  std::vector<CandidateSet> take() &&
  {
    std::vector<CandidateSet> out;
    out.reserve(sets_.size());
    for (auto &[vertices, p] : sets_)
      out.push_back({vertices, std::move(p)});
    return out;
  }

  void merge(std::vector<CandidateSet> cands)
  {
    for (auto &c : cands)
      add(std::move(c.vertices), std::move(c.provenance));
  }

private:
  std::map<VertexSet, Provenance> sets_;
};

} // namespace

GraphAnalysis::GraphAnalysis(Graph g) : graph_(std::move(g)), lambda_(neighborhood_matrix(graph_))
{
  const int n = graph_.size();
  for (Vertex a = 0; a < n; ++a)
    for (Vertex b = a + 1; b < n; ++b) {
      if (type(a, b) != IT::ov)
        continue;
      for (Vertex c = b + 1; c < n; ++c)
        if (is_ov_triangle(a, b, c) && in_delta(a, b, c))
          delta_.push_back({a, b, c});
    }
}

VertexSet GraphAnalysis::alpha_neighborhood(Vertex u, IntersectionType alpha) const
{
  if (alpha == IT::di)
    throw std::invalid_argument("alpha neighborhood is undefined for di");
  if (u < 0 || u >= graph_.size())
    throw std::out_of_range("unknown vertex id " + std::to_string(u));
  VertexSet out;
  for (Vertex v = 0; v < graph_.size(); ++v)
    if (v != u && type(u, v) == alpha)
      out.push_back(v);
  return out;
}

bool GraphAnalysis::is_ov_triangle(Vertex a, Vertex b, Vertex c) const
{
  if (!distinct(a, b, c))
    throw std::invalid_argument("an ov-triangle needs three distinct vertices");
  return type(a, b) == IT::ov && type(b, c) == IT::ov && type(a, c) == IT::ov;
}

VertexSet GraphAnalysis::exclusive(const OvTriangle &t, std::initializer_list<Vertex> sub) const
{
  VertexSet s(t.begin(), t.end());
  std::sort(s.begin(), s.end());
  VertexSet ss(sub);
  std::sort(ss.begin(), ss.end());
  return exclusive_neighborhood(graph_, s, ss);
}

bool GraphAnalysis::in_delta(Vertex a, Vertex b, Vertex c) const
{
  if (!is_ov_triangle(a, b, c))
    throw std::invalid_argument("Delta_G membership is only defined for ov-triangles");
  if (!(graph_.closed_row(a) | graph_.closed_row(b) | graph_.closed_row(c)).all())
    return false;
  const OvTriangle t{a, b, c};
  for (Vertex x : t)
    for (Vertex v : exclusive(t, {x}))
      if (type(v, x) != IT::cd)
        return false;
  return true;
}

bool GraphAnalysis::in_between(Vertex u, Vertex v, Vertex w) const
{
  if (!is_ov_triangle(u, v, w))
    throw std::invalid_argument("in-between is only defined for ov-triangles");
  if (in_delta(u, v, w))
    throw std::invalid_argument("in-between is only defined for triangles outside Delta_G");
  const OvTriangle t{u, v, w};
  if (!exclusive(t, {u}).empty() && !exclusive(t, {w}).empty())
    return true;
  for (Vertex z : exclusive(t, {u, w}))
    if (is_ov_triangle(u, w, z) && in_delta(u, w, z))
      return true;
  return false;
}

bool GraphAnalysis::sim(Vertex u, Vertex x, Vertex y) const
{
  if (x == u || y == u || type(u, x) != IT::ov || type(u, y) != IT::ov)
    throw std::invalid_argument("sim needs two vertices overlapping u");
  if (x == y)
    return true;
  const IT t = type(x, y);
  if (t == IT::cd || t == IT::cs)
    return true;
  if (t != IT::ov)
    return false;
  return !in_delta(x, y, u) && !in_between(x, u, y);
}

GammaPartition GraphAnalysis::gamma_partition(Vertex u, Vertex v, Vertex w) const
{
  if (!is_ov_triangle(u, v, w) || !in_delta(u, v, w))
    throw std::invalid_argument("gamma partition needs a triangle in Delta_G");
  GammaPartition p;
  for (Vertex x = 0; x < graph_.size(); ++x) {
    if (x == u || x == v || x == w)
      continue;
    const IT xu = type(x, u), xv = type(x, v), xw = type(x, w);
    const auto any = [&](IT t) { return xu == t || xv == t || xw == t; };
    if (xu == IT::ov && xv == IT::ov && xw == IT::di)
      p.ov_u.push_back(x);
    if (xv == IT::ov && xw == IT::ov && xu == IT::di)
      p.ov_w.push_back(x);
    if ((xu == IT::ov && xw == IT::ov && xv == IT::di) || any(IT::cc))
      p.cc.push_back(x);
    if ((xu == IT::ov && xw == IT::ov && xv == IT::cs) || any(IT::cd))
      p.cd.push_back(x);
    if (xu == IT::ov && xv == IT::ov && xw == IT::ov)
      p.omega.push_back(x);
  }
  return p;
}

VertexSet GraphAnalysis::k_set() const
{
  VertexSet out;
  for (Vertex x = 0; x < graph_.size(); ++x)
    for (const OvTriangle &t : delta_) {
      if (x == t[0] || x == t[1] || x == t[2])
        continue;
      if (type(x, t[0]) == IT::ov && type(x, t[1]) == IT::ov && type(x, t[2]) == IT::ov) {
        out.push_back(x);
        break;
      }
    }
  return out;
}

bool is_flip_set(const GraphAnalysis &a, const VertexSet &x)
{
  if (x.empty())
    throw std::invalid_argument("a flip set is non-empty");
  return realize_interval(flip_matrix(a.lambda(), x)).has_value();
}

bool is_flip_set(const Graph &g, const VertexSet &x)
{
  return is_flip_set(GraphAnalysis(g), x);
}

VertexSet alpha_neighborhood(const Graph &g, Vertex u, IntersectionType alpha)
{
  return GraphAnalysis(g).alpha_neighborhood(u, alpha);
}

bool is_ov_triangle(const Graph &g, Vertex a, Vertex b, Vertex c)
{
  return GraphAnalysis(g).is_ov_triangle(a, b, c);
}

bool delta_membership(const Graph &g, Vertex a, Vertex b, Vertex c)
{
  return GraphAnalysis(g).in_delta(a, b, c);
}

bool in_between(const Graph &g, Vertex u, Vertex v, Vertex w)
{
  return GraphAnalysis(g).in_between(u, v, w);
}

bool sim(const Graph &g, Vertex u, Vertex x, Vertex y)
{
  return GraphAnalysis(g).sim(u, x, y);
}

GammaPartition gamma_partition(const Graph &g, Vertex u, Vertex v, Vertex w)
{
  return GraphAnalysis(g).gamma_partition(u, v, w);
}

VertexSet k_set(const Graph &g)
{
  return GraphAnalysis(g).k_set();
}

std::vector<CandidateSet> f_hca(const GraphAnalysis &a)
{
  const Graph &g = a.graph();
  CandidateCollector out;
  for (Vertex u = 0; u < g.size(); ++u)
    for (Vertex v = u; v < g.size(); ++v) {
      VertexSet common = to_vertex_set(g.closed_row(u) & g.closed_row(v));
      if (!common.empty())
        out.add(std::move(common), {CandidateSource::hca, {u, v}, {}});
    }
  return std::move(out).take();
}

std::vector<CandidateSet> f_uniform(const GraphAnalysis &a)
{
  const Graph &g = a.graph();
  CandidateCollector out;
  for (Vertex u = 0; u < g.size(); ++u) {
    const VertexSet overlapping = a.alpha_neighborhood(u, IT::ov);
    if (overlapping.empty())
      continue;
    VertexSet base = a.alpha_neighborhood(u, IT::cd);
    const VertexSet cover = a.alpha_neighborhood(u, IT::cc);
    base.insert(base.end(), cover.begin(), cover.end());
    base.push_back(u);
    for (Vertex x : overlapping) {
      VertexSet set = base;
      for (Vertex y : overlapping)
        if (a.sim(u, x, y))
          set.push_back(y);
      std::sort(set.begin(), set.end());
      out.add(std::move(set), {CandidateSource::uniform, {u, x}, {}});
    }
  }
  return std::move(out).take();
}

std::vector<CandidateSet> f_nonuniform(const GraphAnalysis &a, int k_max)
{
  if (k_max < 0)
    throw std::invalid_argument("k_max must be non-negative");
  const int k = static_cast<int>(a.k_set().size());
  if (k > k_max)
    throw BudgetExceeded(k, k_max);

  CandidateCollector out;
  for (const OvTriangle &t : a.delta_triangles()) {
    OvTriangle order = t;
    do {
      const auto [u, v, w] = order;
      const GammaPartition p = a.gamma_partition(u, v, w);
      VertexSet base = p.ov_u;
      base.insert(base.end(), p.cc.begin(), p.cc.end());
      const std::size_t subsets = std::size_t{1} << p.omega.size();
      for (std::size_t mask = 0; mask < subsets; ++mask) {
        VertexSet set = base;
        VertexSet chosen;
        for (std::size_t i = 0; i < p.omega.size(); ++i)
          if (mask >> i & 1U)
            chosen.push_back(p.omega[i]);
        set.insert(set.end(), chosen.begin(), chosen.end());
        std::sort(set.begin(), set.end());
        set.erase(std::unique(set.begin(), set.end()), set.end());
        if (!set.empty())
          out.add(std::move(set), {CandidateSource::nonuniform, {u, v, w}, std::move(chosen)});
      }
    } while (std::next_permutation(order.begin(), order.end()));
  }
  return std::move(out).take();
}

std::vector<CandidateSet> all_candidates(const GraphAnalysis &a, int k_max)
{
  CandidateCollector out;
  out.merge(f_hca(a));
  out.merge(f_uniform(a));
  out.merge(f_nonuniform(a, k_max));
  out.add({}, {CandidateSource::fallback, {}, {}});
  return std::move(out).take();
}

std::vector<CandidateSet> f_hca(const Graph &g)
{
  return f_hca(GraphAnalysis(g));
}

std::vector<CandidateSet> f_uniform(const Graph &g)
{
  return f_uniform(GraphAnalysis(g));
}

std::vector<CandidateSet> f_nonuniform(const Graph &g, int k_max)
{
  return f_nonuniform(GraphAnalysis(g), k_max);
}

std::vector<CandidateSet> all_candidates(const Graph &g, int k_max)
{
  return all_candidates(GraphAnalysis(g), k_max);
}

} // namespace cagraph
