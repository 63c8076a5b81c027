#include "cagraph/reduction.hpp"

#include <algorithm>
#include <set>
#include <tuple>
#include <stdexcept>

namespace cagraph
{

std::vector<Vertex> ReductionRecord::twins_of(Vertex rep) const
{
  std::vector<Vertex> out;
  for (auto [twin, r] : twin_rep)
    if (r == rep)
      out.push_back(twin);
  return out;
}

bool ReductionRecord::is_identity() const
{
  return twin_rep.empty() && universals.empty() &&
         static_cast<int>(survivors.size()) == original_size;
}

Reduction reduce(const Graph &g)
{
  ReductionRecord rec;
  rec.original_size = g.size();

  VertexSet reps;
  for (const VertexSet &cls : twin_classes(g)) {
    const Vertex rep = cls.front();
    reps.push_back(rep);
    rec.multiplicity[rep] = static_cast<int>(cls.size());
    for (std::size_t i = 1; i < cls.size(); ++i)
      rec.twin_rep[cls[i]] = rep;
  }
  std::sort(reps.begin(), reps.end());

  // Removing a universal vertex changes every other closed neighborhood by
  // the same vertex, so twins and universals stay as they are: one pass.
  const Graph collapsed = g.induced(reps);
  for (std::size_t i = 0; i < reps.size(); ++i) {
    if (is_universal(collapsed, static_cast<Vertex>(i)))
      rec.universals.emplace_back(reps[i], g.color(reps[i]));
    else
      rec.survivors.push_back(reps[i]);
  }
  std::sort(rec.universals.begin(), rec.universals.end(),
            [](const auto &a, const auto &b) { return std::tie(a.second, a.first) < std::tie(b.second, b.first); });

  std::set<std::pair<Color, int>> pairs;
  for (Vertex s : rec.survivors)
    pairs.emplace(g.color(s), rec.multiplicity[s]);
  const std::vector<std::pair<Color, int>> ranked(pairs.begin(), pairs.end());

  Graph reduced = g.induced(rec.survivors);
  for (std::size_t i = 0; i < rec.survivors.size(); ++i) {
    const Vertex s = rec.survivors[i];
    const auto it = std::lower_bound(ranked.begin(), ranked.end(),
                                     std::pair<Color, int>(g.color(s), rec.multiplicity[s]));
    const Color composed = static_cast<Color>(it - ranked.begin());
    rec.composed_color[s] = composed;
    reduced.set_color(static_cast<Vertex>(i), composed);
  }
  return {std::move(reduced), std::move(rec)};
}

Representation expand_representation(const Representation &reduced, const ReductionRecord &rec)
{
  const int k = static_cast<int>(rec.survivors.size());
  if (static_cast<int>(reduced.assign.size()) != k || reduced.model.arc_count() != k)
    throw std::invalid_argument("reduction record does not match the reduced representation");

  const std::vector<Vertex> owner = reduced.owners();
  std::vector<Event> events;
  events.reserve(2 * static_cast<std::size_t>(rec.original_size));

  const auto open = [&](Vertex rep) {
    events.push_back({rep, Side::left});
    for (Vertex t : rec.twins_of(rep))
      events.push_back({t, Side::left});
  };
  const auto close = [&](Vertex rep) {
    const std::vector<Vertex> twins = rec.twins_of(rep);
    for (auto it = twins.rbegin(); it != twins.rend(); ++it)
      events.push_back({*it, Side::right});
    events.push_back({rep, Side::right});
  };

  for (auto [u, color] : rec.universals)
    open(u);
  for (const Event &e : reduced.model.events()) {
    const Vertex original = rec.survivors.at(owner[e.arc]);
    if (e.side == Side::left)
      open(original);
    else
      close(original);
  }
  for (auto it = rec.universals.rbegin(); it != rec.universals.rend(); ++it)
    close(it->first);

  if (static_cast<int>(events.size()) != 2 * rec.original_size)
    throw std::invalid_argument("reduction record is inconsistent with its original size");

  Representation out{ArcModel(std::move(events)), {}};
  out.assign.resize(rec.original_size);
  for (int v = 0; v < rec.original_size; ++v)
    out.assign[v] = v;
  return out;
}

} // namespace cagraph
