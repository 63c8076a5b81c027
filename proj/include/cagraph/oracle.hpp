#ifndef CAGRAPH_ORACLE_HPP
#define CAGRAPH_ORACLE_HPP

#include <cstdint>
#include <functional>
#include <optional>
#include <set>
#include <vector>

#include "cagraph/graph.hpp"
#include "cagraph/models.hpp"

namespace cagraph
{

// Exhaustive ground truth for small graphs. Every search enumerates circular
// event sequences starting with the left endpoint of vertex 0 (one
// representative per rotation); reflections are enumerated separately.

inline constexpr int default_oracle_limit = 8;

/// Some representation of g (arc id = vertex), found by backtracking.
std::optional<Representation> oracle_realize(const Graph &g, int limit = default_oracle_limit);

bool oracle_is_ca(const Graph &g, int limit = default_oracle_limit);

/// Calls `visit` for every model whose intersection matrix equals the
/// neighborhood matrix of g exactly (arc id = vertex), in lexicographic event
/// order. Stops early when `visit` returns false. Requires g to be twin-free
/// and without universal vertices.
void oracle_normalized_models(const Graph &g, const std::function<bool(const Representation &)> &visit,
                              int limit = default_oracle_limit);

std::vector<Representation> oracle_normalized_models(const Graph &g, int limit = default_oracle_limit);

/// Every non-empty set of vertices whose arcs share a point in some
/// normalized model.
std::set<VertexSet> oracle_flip_sets(const Graph &g, int limit = default_oracle_limit);

/// Uniformly random order of the 2n endpoints, deterministic per seed.
ArcModel random_model(int n, std::uint64_t seed);

} // namespace cagraph

#endif // CAGRAPH_ORACLE_HPP
