#ifndef CAGRAPH_CANONIZER_HPP
#define CAGRAPH_CANONIZER_HPP

#include <optional>
#include <string>
#include <vector>

#include "cagraph/candidates.hpp"
#include "cagraph/graph.hpp"
#include "cagraph/models.hpp"
#include "cagraph/reduction.hpp"

namespace cagraph
{

enum class Verdict { ca, not_ca, budget_exceeded };

std::string_view to_string(Verdict v);

struct CanonicalForm
{
  /// Minimum-rotation token string of the expanded model, colored with the
  /// input colors.
  TokenString tokens;
  std::string text;
  /// Representation of the input graph; its model is the one `tokens`
  /// describes, so assign[v] + 1 is v's token index.
  Representation representation;
};

/// Intermediate results of the winning candidate, kept for inspection.
struct CanonTrace
{
  Reduction reduction;
  /// Interval representation of the flipped matrix, before flipping back.
  Representation interval_representation;
  /// Representation of the reduced graph after flipping back.
  Representation reduced_representation;
  /// Minimum-rotation string of the reduced model with composed colors.
  TokenString reduced_tokens;
  int k = 0;
};

struct CanonOutcome
{
  Verdict verdict = Verdict::not_ca;
  std::optional<CanonicalForm> canonical;
  std::optional<CandidateSet> winning_candidate;
  std::optional<CanonTrace> trace;
  /// Set for budget_exceeded.
  int k = 0;
  int k_max = 0;
};

/// Reduce, flip each candidate into an interval matrix, canonize it, flip
/// back and keep the smallest model string.
CanonOutcome canonical_representation(const Graph &g, int k_max = default_k_max);

/// Throws BudgetExceeded when the budget is too small.
std::optional<std::string> canonical_string(const Graph &g, int k_max = default_k_max);

/// Throws BudgetExceeded when the budget is too small.
bool recognize(const Graph &g, int k_max = default_k_max);

/// Thrown by `isomorphic` for an input that is not a CA graph.
class NotCircularArc : public std::invalid_argument
{
public:
  using std::invalid_argument::invalid_argument;
};

bool isomorphic(const Graph &g, const Graph &h, int k_max = default_k_max);

} // namespace cagraph

#endif // CAGRAPH_CANONIZER_HPP
