#include "cagraph/canonizer.hpp"

#include "cagraph/interval_canon.hpp"

namespace cagraph
{

std::string_view to_string(Verdict v)
{
  switch (v) {
  case Verdict::ca:
    return "CA";
  case Verdict::not_ca:
    return "NOT-CA";
  case Verdict::budget_exceeded:
    return "BUDGET-EXCEEDED";
  }
  return "?";
}

namespace
{

struct Attempt
{
  ModelString reduced;
  Representation interval;
  Representation flipped_back;
};

std::optional<Attempt> try_candidate(const GraphAnalysis &a, const CandidateSet &cand)
{
  const Graph &g = a.graph();
  const int n = g.size();
  const Bitset in_x = to_bitset(cand.vertices, n);

  // Mark X in the colors so that flipping back only depends on the string.
  std::vector<Color> marked(n);
  for (Vertex v = 0; v < n; ++v)
    marked[v] = g.color(v) * 2 + (in_x.test(v) ? 1 : 0);

  auto interval = canonical_interval(flip_matrix(a.lambda(), cand.vertices), marked);
  if (!interval)
    return std::nullopt;

  VertexSet arcs;
  for (Vertex v : cand.vertices)
    arcs.push_back(interval->representation.assign[v]);
  Representation back{flip_arcs_in_model(interval->representation.model, arcs),
                      interval->representation.assign};
  ModelString ms = model_string(back, g.colors());
  return Attempt{std::move(ms), std::move(interval->representation), std::move(back)};
}

Representation relabeled(const Representation &rep, const ModelString &ms)
{
  Representation out{ms.model, {}};
  out.assign.reserve(rep.assign.size());
  for (int arc : rep.assign)
    out.assign.push_back(ms.relabel[arc]);
  return out;
}

} // namespace

CanonOutcome canonical_representation(const Graph &g, int k_max)
{
  CanonOutcome out;
  out.k_max = k_max;

  Reduction red = reduce(g);
  const GraphAnalysis analysis(red.graph);

  std::vector<CandidateSet> candidates;
  try {
    candidates = all_candidates(analysis, k_max);
  } catch (const BudgetExceeded &e) {
    out.verdict = Verdict::budget_exceeded;
    out.k = e.k();
    return out;
  }
  out.k = static_cast<int>(analysis.k_set().size());

  std::optional<Attempt> best;
  const CandidateSet *winner = nullptr;
  for (const CandidateSet &cand : candidates) {
    auto attempt = try_candidate(analysis, cand);
    if (attempt && (!best || attempt->reduced.tokens < best->reduced.tokens)) {
      best = std::move(attempt);
      winner = &cand;
    }
  }
  if (!best) {
    out.verdict = Verdict::not_ca;
    return out;
  }

  const Representation reduced_rep = relabeled(best->flipped_back, best->reduced);
  const Representation expanded = expand_representation(reduced_rep, red.record);
  const ModelString final_string = model_string(expanded, g.colors());

  out.verdict = Verdict::ca;
  out.winning_candidate = *winner;
  out.canonical = CanonicalForm{final_string.tokens, to_string(final_string.tokens),
                                relabeled(expanded, final_string)};
  out.trace = CanonTrace{std::move(red), std::move(best->interval), reduced_rep,
                         best->reduced.tokens, out.k};
  return out;
}

std::optional<std::string> canonical_string(const Graph &g, int k_max)
{
  CanonOutcome o = canonical_representation(g, k_max);
  if (o.verdict == Verdict::budget_exceeded)
    throw BudgetExceeded(o.k, k_max);
  if (o.verdict == Verdict::not_ca)
    return std::nullopt;
  return o.canonical->text;
}

bool recognize(const Graph &g, int k_max)
{
  return canonical_string(g, k_max).has_value();
}

bool isomorphic(const Graph &g, const Graph &h, int k_max)
{
  const auto sg = canonical_string(g, k_max);
  const auto sh = canonical_string(h, k_max);
  if (!sg || !sh)
    throw NotCircularArc("isomorphism test needs two circular-arc graphs");
  return *sg == *sh;
}

} // namespace cagraph
