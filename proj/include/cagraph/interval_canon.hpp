#ifndef CAGRAPH_INTERVAL_CANON_HPP
#define CAGRAPH_INTERVAL_CANON_HPP

#include <optional>
#include <vector>

#include "cagraph/intersection.hpp"
#include "cagraph/models.hpp"

namespace cagraph
{

struct CanonicalInterval
{
  /// Linear event sequence with arcs numbered by the order of their left
  /// events; left tokens carry the vertex colors.
  TokenString tokens;
  Representation representation;
};

/// Some interval representation of m (the model's sequence starts at a hole),
/// or nothing when m has a cc entry or is not an interval matrix.
std::optional<Representation> realize_interval(const IntersectionMatrix &m);

/// The lexicographically smallest token string over all interval
/// realizations of m, with colors[v] attached to the left token of v's arc.
///
/// Isomorphic colored matrices give identical strings. The search places
/// events left to right, always trying the smallest next token first, and
/// memoizes on (closed vertices, open arcs); worst case is exponential.
std::optional<CanonicalInterval> canonical_interval(const IntersectionMatrix &m,
                                                    const std::vector<Color> &colors);

} // namespace cagraph

#endif // CAGRAPH_INTERVAL_CANON_HPP
