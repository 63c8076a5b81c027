#ifndef CAGRAPH_REDUCTION_HPP
#define CAGRAPH_REDUCTION_HPP

#include <map>
#include <utility>
#include <vector>

#include "cagraph/graph.hpp"
#include "cagraph/models.hpp"

namespace cagraph
{

/// What `reduce` removed, in terms of the original vertex ids.
struct ReductionRecord
{
  int original_size = 0;

  /// Reduced vertex i is original vertex survivors[i].
  std::vector<Vertex> survivors;

  /// Removed twin -> surviving representative.
  std::map<Vertex, Vertex> twin_rep;

  /// Representative -> size of its twin class. Covers universal
  /// representatives as well as survivors.
  std::map<Vertex, int> multiplicity;

  /// Representatives removed as universal vertices with their original color,
  /// ordered by color (outermost arc first on expansion).
  std::vector<std::pair<Vertex, Color>> universals;

  /// Survivor -> color of its reduced vertex (rank of the pair
  /// (original color, multiplicity) among all survivors' pairs).
  std::map<Vertex, Color> composed_color;

  /// Removed twins of a representative in ascending id order.
  std::vector<Vertex> twins_of(Vertex rep) const;

  bool is_identity() const;
};

struct Reduction
{
  Graph graph;
  ReductionRecord record;
};

/// Collapses colored twin classes to one representative each, then removes
/// every universal vertex of the collapsed graph.
Reduction reduce(const Graph &g);

/// Representation of the original graph built from one of the reduced graph.
/// Twin copies become nested arcs directly inside their representative;
/// universal vertices become arcs spanning the whole event sequence.
/// Arc ids of the result equal the original vertex ids.
Representation expand_representation(const Representation &reduced, const ReductionRecord &rec);

} // namespace cagraph

#endif // CAGRAPH_REDUCTION_HPP
