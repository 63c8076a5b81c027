#ifndef CAGRAPH_MODELS_HPP
#define CAGRAPH_MODELS_HPP

#include <compare>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "cagraph/graph.hpp"
#include "cagraph/intersection.hpp"

namespace cagraph
{

enum class Side : std::uint8_t { left, right };

struct Event
{
  int arc;
  Side side;

  bool operator==(const Event &) const = default;
};

/// A circular-arc model as the clockwise sequence of its 2n endpoints. Arc ids
/// are 0..n-1; the start of the sequence is an arbitrary anchor.
///
/// An arc runs clockwise from its left to its right event. A right event that
/// precedes the left one in the sequence means the arc wraps past the anchor.
class ArcModel
{
public:
  ArcModel() = default;

  /// Throws std::invalid_argument unless every arc id 0..n-1 has exactly one
  /// left and one right event.
  explicit ArcModel(std::vector<Event> events);

  int arc_count() const { return static_cast<int>(left_.size()); }
  const std::vector<Event> &events() const { return events_; }
  int left_position(int arc) const { return left_.at(arc); }
  int right_position(int arc) const { return right_.at(arc); }

  /// Whether the endpoint at `position` lies strictly inside `arc`.
  bool covers(int arc, int position) const;

  /// Arcs containing the gap that follows the event at `position`.
  VertexSet arcs_over_gap(int position) const;

  bool operator==(const ArcModel &other) const { return events_ == other.events_; }

private:
  std::vector<Event> events_;
  std::vector<int> left_, right_;
};

/// A model together with the bijection vertex -> arc id.
struct Representation
{
  ArcModel model;
  std::vector<int> assign;

  /// Inverse of `assign`: arc id -> vertex.
  std::vector<Vertex> owners() const;
};

/// One token of a model string, e.g. `l3:7` or `r2`. Colors only appear on
/// left tokens.
struct Token
{
  Side side = Side::left;
  int index = 1;
  std::optional<Color> color;

  auto operator<=>(const Token &) const = default;
};

using TokenString = std::vector<Token>;

std::string to_string(const Token &t);
std::string to_string(const TokenString &tokens);

/// Parses the space-separated token grammar `[lr][1-9][0-9]*(:[0-9]+)?`.
TokenString parse_tokens(std::string_view text);

/// Rebuilds the model described by a token string (arc i is token index i-1)
/// together with the per-arc colors, if any.
std::pair<ArcModel, std::vector<std::optional<Color>>> model_from_tokens(const TokenString &tokens);

IntersectionType classify_arc_pair(const ArcModel &model, int a, int b);

IntersectionMatrix matrix_of_model(const Representation &rep);
IntersectionMatrix matrix_of_model(const ArcModel &model);

Graph graph_of_model(const Representation &rep);
Graph graph_of_model(const ArcModel &model);

/// Result of the minimum-rotation encoding.
struct ModelString
{
  TokenString tokens;
  /// The model rotated to the winning start and relabeled so that arc i has
  /// token index i+1.
  ArcModel model;
  /// Old arc id -> new arc id.
  std::vector<int> relabel;
};

/// For each arc as start, relabel arcs by the clockwise order of their left
/// endpoints and emit the tokens; returns the smallest. `colors` is indexed
/// by arc id and may be empty.
ModelString model_string(const ArcModel &model, const std::vector<Color> &colors = {});
ModelString model_string(const Representation &rep, const std::vector<Color> &vertex_colors = {});

ArcModel flip_arcs_in_model(const ArcModel &model, const VertexSet &arcs);

bool has_hole(const ArcModel &model);

} // namespace cagraph

#endif // CAGRAPH_MODELS_HPP
