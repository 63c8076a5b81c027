#ifndef CAGRAPH_CANDIDATES_HPP
#define CAGRAPH_CANDIDATES_HPP

#include <array>
#include <stdexcept>
#include <string>
#include <vector>

#include "cagraph/graph.hpp"
#include "cagraph/intersection.hpp"

namespace cagraph
{

inline constexpr int default_k_max = 20;

/// Raised when |K_G| exceeds the caller's budget for the Omega-subset sweep.
class BudgetExceeded : public std::runtime_error
{
public:
  BudgetExceeded(int k, int k_max);

  int k() const { return k_; }
  int k_max() const { return k_max_; }

private:
  int k_;
  int k_max_;
};

enum class CandidateSource { hca, uniform, nonuniform, fallback };

std::string_view to_string(CandidateSource s);

/// Which generator produced a candidate and with which parameters:
/// (u, v) for hca, (u, x) for uniform, (u, v, w) plus the chosen Omega
/// subset for nonuniform, nothing for fallback.
struct Provenance
{
  CandidateSource source = CandidateSource::fallback;
  std::vector<Vertex> parameters;
  VertexSet omega_subset;

  auto operator<=>(const Provenance &) const = default;
};

struct CandidateSet
{
  VertexSet vertices;
  Provenance provenance;
};

/// Ordered triple of pairwise-overlapping vertices; `middle` is v.
using OvTriangle = std::array<Vertex, 3>;

struct GammaPartition
{
  VertexSet ov_u;
  VertexSet ov_w;
  VertexSet cc;
  VertexSet cd;
  VertexSet omega;
};

/// A graph with its neighborhood matrix; the predicates of the candidate
/// generators are evaluated against it.
class GraphAnalysis
{
public:
  explicit GraphAnalysis(Graph g);

  const Graph &graph() const { return graph_; }
  const IntersectionMatrix &lambda() const { return lambda_; }
  IntersectionType type(Vertex u, Vertex v) const { return lambda_.at(u, v); }

  /// {v : lambda(u, v) = alpha}; alpha must not be di.
  VertexSet alpha_neighborhood(Vertex u, IntersectionType alpha) const;

  bool is_ov_triangle(Vertex a, Vertex b, Vertex c) const;

  /// Membership of an ov-triangle in Delta_G. Throws if {a,b,c} is not an
  /// ov-triangle.
  bool in_delta(Vertex a, Vertex b, Vertex c) const;

  /// Whether v is in-between u and w. Requires {u,v,w} to be an ov-triangle
  /// outside Delta_G.
  bool in_between(Vertex u, Vertex v, Vertex w) const;

  /// x ~_u y. Requires x, y to overlap u.
  bool sim(Vertex u, Vertex x, Vertex y) const;

  /// Requires (u, v, w) to be in Delta_G.
  GammaPartition gamma_partition(Vertex u, Vertex v, Vertex w) const;

  /// Unordered Delta_G triangles as sorted triples, in ascending order.
  const std::vector<OvTriangle> &delta_triangles() const { return delta_; }

  VertexSet k_set() const;

private:
  VertexSet exclusive(const OvTriangle &t, std::initializer_list<Vertex> sub) const;

  Graph graph_;
  IntersectionMatrix lambda_;
  std::vector<OvTriangle> delta_;
};

/// Whether flipping x turns the neighborhood matrix into an interval matrix.
/// Throws std::invalid_argument for an empty x.
bool is_flip_set(const Graph &g, const VertexSet &x);
bool is_flip_set(const GraphAnalysis &a, const VertexSet &x);

VertexSet alpha_neighborhood(const Graph &g, Vertex u, IntersectionType alpha);
bool is_ov_triangle(const Graph &g, Vertex a, Vertex b, Vertex c);
bool delta_membership(const Graph &g, Vertex a, Vertex b, Vertex c);
bool in_between(const Graph &g, Vertex u, Vertex v, Vertex w);
bool sim(const Graph &g, Vertex u, Vertex x, Vertex y);
GammaPartition gamma_partition(const Graph &g, Vertex u, Vertex v, Vertex w);
VertexSet k_set(const Graph &g);

/// Generators return candidates sorted by vertex set, one per distinct set.
std::vector<CandidateSet> f_hca(const GraphAnalysis &a);
std::vector<CandidateSet> f_uniform(const GraphAnalysis &a);
/// Throws BudgetExceeded when |K_G| > k_max.
std::vector<CandidateSet> f_nonuniform(const GraphAnalysis &a, int k_max);

/// Union of the three generators plus the empty fallback set.
std::vector<CandidateSet> all_candidates(const GraphAnalysis &a, int k_max);

std::vector<CandidateSet> f_hca(const Graph &g);
std::vector<CandidateSet> f_uniform(const Graph &g);
std::vector<CandidateSet> f_nonuniform(const Graph &g, int k_max);
std::vector<CandidateSet> all_candidates(const Graph &g, int k_max);

} // namespace cagraph

#endif // CAGRAPH_CANDIDATES_HPP
