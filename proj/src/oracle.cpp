#include "cagraph/oracle.hpp"

#include <random>
#include <stdexcept>
#include <string>

#include "cagraph/intersection.hpp"

namespace cagraph
{

namespace
{

void check_limit(const Graph &g, int limit)
{
  if (g.size() > limit)
    throw std::invalid_argument("graph has " + std::to_string(g.size()) +
                                " vertices, above the oracle limit of " + std::to_string(limit));
}

/// Places the 2n events one position at a time. A pair is rejected as soon
/// as its arcs are known to intersect while the target says disjoint, and
/// checked in full once both arcs are complete.
class CircularSearch
{
public:
  CircularSearch(const Graph &g, const IntersectionMatrix *target)
      : g_(g), target_(target), n_(g.size()), left_(n_, -1), right_(n_, -1)
  {
  }

  void run(const std::function<bool(const Representation &)> &visit)
  {
    visit_ = &visit;
    stop_ = false;
    if (n_ == 0) {
      (*visit_)(Representation{});
      return;
    }
    left_[0] = 0;
    seq_.push_back({0, Side::left});
    place();
    seq_.pop_back();
    left_[0] = -1;
  }

private:
  int len() const { return 2 * n_; }

  bool disjoint_required(Vertex a, Vertex b) const
  {
    return target_ ? target_->at(a, b) == IntersectionType::di : !g_.adjacent(a, b);
  }

  // Whether position p (already placed) lies strictly inside b given what is
  // known about b so far. Positions after the last placed one are unknown.
  bool known_inside(Vertex b, int p) const
  {
    const int l = left_[b], r = right_[b];
    if (l >= 0 && r >= 0) {
      if (l < r)
        return p > l && p < r;
      return p > l || p < r;
    }
    if (l >= 0)
      return p > l;
    return false;
  }

  bool covers(Vertex a, int p) const
  {
    const int l = left_[a], r = right_[a];
    const int offset = (p - l + len()) % len();
    const int span = (r - l + len()) % len();
    return offset > 0 && offset < span;
  }

  IntersectionType classify(Vertex a, Vertex b) const
  {
    const int bits = (covers(b, left_[a]) << 3) | (covers(b, right_[a]) << 2) |
                     (covers(a, left_[b]) << 1) | static_cast<int>(covers(a, right_[b]));
    switch (bits) {
    case 0b0000:
      return IntersectionType::di;
    case 0b1100:
      return IntersectionType::cd;
    case 0b0011:
      return IntersectionType::cs;
    case 0b1111:
      return IntersectionType::cc;
    default:
      return IntersectionType::ov;
    }
  }

  bool consistent(Vertex a, Side side, int p) const
  {
    const bool wraps_back = side == Side::right && left_[a] < 0;
    for (Vertex b = 0; b < n_; ++b) {
      if (b == a || (left_[b] < 0 && right_[b] < 0))
        continue;
      // A right endpoint placed before its left one covers everything so far.
      if ((known_inside(b, p) || wraps_back) && disjoint_required(a, b))
        return false;
    }
    const bool completes = side == Side::left ? right_[a] >= 0 : left_[a] >= 0;
    if (!completes)
      return true;
    for (Vertex b = 0; b < n_; ++b) {
      if (b == a || left_[b] < 0 || right_[b] < 0)
        continue;
      const IntersectionType t = classify(a, b);
      if (target_) {
        if (t != target_->at(a, b))
          return false;
      } else if ((t != IntersectionType::di) != g_.adjacent(a, b)) {
        return false;
      }
    }
    return true;
  }

  void place()
  {
    const int p = static_cast<int>(seq_.size());
    if (p == len()) {
      Representation rep{ArcModel(seq_), std::vector<int>(n_)};
      for (Vertex v = 0; v < n_; ++v)
        rep.assign[v] = v;
      if (!(*visit_)(rep))
        stop_ = true;
      return;
    }
    for (Vertex a = 0; a < n_ && !stop_; ++a) {
      for (Side side : {Side::left, Side::right}) {
        int &slot = side == Side::left ? left_[a] : right_[a];
        if (slot >= 0)
          continue;
        slot = p;
        if (consistent(a, side, p)) {
          seq_.push_back({a, side});
          place();
          seq_.pop_back();
        }
        slot = -1;
        if (stop_)
          return;
      }
    }
  }

  const Graph &g_;
  const IntersectionMatrix *target_;
  int n_;
  std::vector<int> left_, right_;
  std::vector<Event> seq_;
  const std::function<bool(const Representation &)> *visit_ = nullptr;
  bool stop_ = false;
};

} // namespace

std::optional<Representation> oracle_realize(const Graph &g, int limit)
{
  check_limit(g, limit);
  std::optional<Representation> found;
  CircularSearch search(g, nullptr);
  search.run([&](const Representation &rep) {
    found = rep;
    return false;
  });
  return found;
}

bool oracle_is_ca(const Graph &g, int limit)
{
  return oracle_realize(g, limit).has_value();
}

void oracle_normalized_models(const Graph &g, const std::function<bool(const Representation &)> &visit,
                              int limit)
{
  check_limit(g, limit);
  for (const VertexSet &cls : twin_classes(Graph::from_edges(g.size(), g.edges())))
    if (cls.size() > 1)
      throw std::invalid_argument("normalized models are only enumerated for twin-free graphs");
  for (Vertex v = 0; v < g.size(); ++v)
    if (is_universal(g, v))
      throw std::invalid_argument("normalized models are only enumerated without universal vertices");

  const IntersectionMatrix lambda = neighborhood_matrix(g);
  CircularSearch search(g, &lambda);
  search.run(visit);
}

std::vector<Representation> oracle_normalized_models(const Graph &g, int limit)
{
  std::vector<Representation> out;
  oracle_normalized_models(
      g,
      [&](const Representation &rep) {
        out.push_back(rep);
        return true;
      },
      limit);
  return out;
}

std::set<VertexSet> oracle_flip_sets(const Graph &g, int limit)
{
  check_limit(g, limit);
  const IntersectionMatrix lambda = neighborhood_matrix(g);
  std::set<VertexSet> out;
  CircularSearch search(g, &lambda);
  search.run([&](const Representation &rep) {
    for (int pos = 0; pos < static_cast<int>(rep.model.events().size()); ++pos) {
      VertexSet stabbed = rep.model.arcs_over_gap(pos);
      if (!stabbed.empty())
        out.insert(std::move(stabbed));
    }
    return true;
  });
  return out;
}

ArcModel random_model(int n, std::uint64_t seed)
{
  if (n < 1)
    throw std::invalid_argument("random_model needs at least one arc");
  std::vector<Event> events;
  events.reserve(2 * static_cast<std::size_t>(n));
  for (int a = 0; a < n; ++a) {
    events.push_back({a, Side::left});
    events.push_back({a, Side::right});
  }
  // Plain modulo keeps the sequence identical across standard libraries.
  std::mt19937_64 rng(seed);
  for (std::size_t i = events.size() - 1; i > 0; --i)
    std::swap(events[i], events[rng() % (i + 1)]);
  return ArcModel(std::move(events));
}

} // namespace cagraph
