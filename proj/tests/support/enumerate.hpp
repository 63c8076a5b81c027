#ifndef CAGRAPH_TESTS_ENUMERATE_HPP
#define CAGRAPH_TESTS_ENUMERATE_HPP

#include <vector>

#include "cagraph/graph.hpp"

namespace cagraph::testing
{

/// One graph per isomorphism class on exactly n vertices (n <= 7), built by
/// vertex addition and deduplicated with a canonical adjacency key.
std::vector<Graph> nonisomorphic_graphs(int n);

/// Smallest adjacency bit string over all relabelings that keep vertices
/// sorted by degree. Equal keys iff isomorphic (for uncolored graphs).
std::vector<bool> canonical_key(const Graph &g);

/// Uncolored graph isomorphism by brute force over degree-respecting bijections.
bool brute_isomorphic(const Graph &a, const Graph &b);

} // namespace cagraph::testing

#endif
