#ifndef CAGRAPH_INTERSECTION_HPP
#define CAGRAPH_INTERSECTION_HPP

#include <array>
#include <optional>
#include <string_view>
#include <vector>

#include "cagraph/graph.hpp"

namespace cagraph
{

/// How two arcs a, b relate. `cd`: a is contained in b. `cs`: a contains b.
/// `cc`: a and b jointly cover the circle. `ov`: any other overlap.
enum class IntersectionType : std::uint8_t { di, ov, cd, cs, cc };

inline constexpr std::array<IntersectionType, 5> all_intersection_types{
    IntersectionType::di, IntersectionType::ov, IntersectionType::cd, IntersectionType::cs,
    IntersectionType::cc};

IntersectionType dual(IntersectionType t);
std::string_view to_string(IntersectionType t);

/// Square matrix of intersection types over the vertices 0..n-1. The diagonal
/// holds `di` and carries no meaning.
class IntersectionMatrix
{
public:
  IntersectionMatrix() = default;
  explicit IntersectionMatrix(int n);

  int size() const { return n_; }

  IntersectionType at(Vertex u, Vertex v) const { return cells_[index(u, v)]; }

  /// Sets (u,v) to t and (v,u) to dual(t).
  void set(Vertex u, Vertex v, IntersectionType t);

  bool contains(IntersectionType t) const;
  bool dual_symmetric() const;

  /// Entry (perm[u], perm[v]) of the result equals entry (u, v) of this matrix.
  IntersectionMatrix permuted(std::span<const Vertex> perm) const;

  bool operator==(const IntersectionMatrix &other) const = default;

private:
  std::size_t index(Vertex u, Vertex v) const
  {
    return static_cast<std::size_t>(u) * static_cast<std::size_t>(n_) + static_cast<std::size_t>(v);
  }

  int n_ = 0;
  std::vector<IntersectionType> cells_;
};

/// The neighborhood matrix of g: the first of di, cd, cs, cc, ov whose
/// neighborhood condition holds for the pair.
IntersectionMatrix neighborhood_matrix(const Graph &g);

/// Rewrites the entries of m as if the arcs of the vertices in x had their
/// endpoints swapped.
IntersectionMatrix flip_matrix(const IntersectionMatrix &m, const VertexSet &x);

/// Bijection pi with a(u,v) = b(pi[u], pi[v]) for all u != v, if any.
/// Backtracking with refinement pruning; exponential in the worst case and
/// meant for test-sized inputs.
std::optional<std::vector<Vertex>> matrices_isomorphic(const IntersectionMatrix &a,
                                                       const IntersectionMatrix &b);

} // namespace cagraph

#endif // CAGRAPH_INTERSECTION_HPP
