#include "cagraph/interval_canon.hpp"

#include <algorithm>
#include <memory>
#include <stdexcept>
#include <string>
#include <unordered_map>

namespace cagraph
{

namespace
{

struct Completion
{
  TokenString tokens;
  /// Vertex of each left token, in order.
  std::vector<Vertex> opened;
};

/// Search state. `status[v]` is 0 for unplaced, 1 for closed and 2 + i for a
/// vertex whose arc is open with token index i.
struct State
{
  std::string status;
  int placed = 0;
};

constexpr unsigned char unplaced = 0;
constexpr unsigned char closed = 1;
constexpr unsigned char open_base = 2;
constexpr int max_vertices = 250;

class IntervalSearch
{
public:
  IntervalSearch(const IntersectionMatrix &m, const std::vector<Color> *colors)
      : m_(m), colors_(colors), n_(m.size())
  {
    if (n_ > max_vertices)
      throw std::invalid_argument("interval search supports at most 250 vertices");
    if (colors_ && static_cast<int>(colors_->size()) != n_)
      throw std::invalid_argument("color vector size differs from matrix size");
  }

  const Completion *run()
  {
    State s{std::string(static_cast<std::size_t>(n_), static_cast<char>(unplaced)), 0};
    return best(s);
  }

private:
  unsigned char status(const State &s, Vertex v) const
  {
    return static_cast<unsigned char>(s.status[v]);
  }

  Color color(Vertex v) const { return colors_ ? (*colors_)[v] : 0; }

  bool can_open(const State &s, Vertex x) const
  {
    for (Vertex v = 0; v < n_; ++v) {
      if (v == x)
        continue;
      const IntersectionType t = m_.at(x, v);
      const unsigned char st = status(s, v);
      if (st == closed) {
        if (t != IntersectionType::di)
          return false;
      } else if (st >= open_base) {
        if (t != IntersectionType::cd && t != IntersectionType::ov)
          return false;
      } else if (t == IntersectionType::cd) {
        // v would have to open before x.
        return false;
      }
    }
    return true;
  }

  bool can_close(const State &s, Vertex c) const
  {
    const unsigned char own = status(s, c);
    for (Vertex v = 0; v < n_; ++v) {
      if (v == c)
        continue;
      const IntersectionType t = m_.at(c, v);
      const unsigned char st = status(s, v);
      if (st == unplaced) {
        if (t != IntersectionType::di)
          return false;
      } else if (st >= open_base) {
        const IntersectionType need = st < own ? IntersectionType::cd : IntersectionType::ov;
        if (t != need)
          return false;
      }
    }
    return true;
  }

  const Completion *best(const State &s)
  {
    if (s.placed == 2 * n_)
      return &empty_;
    if (auto it = memo_.find(s.status); it != memo_.end())
      return it->second.get();

    std::unique_ptr<Completion> result;
    const int opened_so_far = count_opened(s);

    if (opened_so_far < n_) {
      std::vector<Color> palette;
      for (Vertex v = 0; v < n_; ++v)
        if (status(s, v) == unplaced)
          palette.push_back(color(v));
      std::sort(palette.begin(), palette.end());
      palette.erase(std::unique(palette.begin(), palette.end()), palette.end());

      for (Color c : palette) {
        const Completion *winner = nullptr;
        Vertex winner_vertex = -1;
        for (Vertex x = 0; x < n_; ++x) {
          if (status(s, x) != unplaced || color(x) != c || !can_open(s, x))
            continue;
          State child = s;
          child.status[x] = static_cast<char>(open_base + opened_so_far + 1);
          ++child.placed;
          const Completion *sub = best(child);
          if (sub && (!winner || sub->tokens < winner->tokens)) {
            winner = sub;
            winner_vertex = x;
          }
        }
        if (winner) {
          Token t{Side::left, opened_so_far + 1, std::nullopt};
          if (colors_)
            t.color = c;
          result = prepend(t, winner_vertex, *winner);
          break;
        }
      }
    }

    if (!result) {
      // Close open arcs in increasing token index.
      std::vector<std::pair<int, Vertex>> open;
      for (Vertex v = 0; v < n_; ++v)
        if (status(s, v) >= open_base)
          open.emplace_back(status(s, v) - open_base, v);
      std::sort(open.begin(), open.end());
      for (auto [index, v] : open) {
        if (!can_close(s, v))
          continue;
        State child = s;
        child.status[v] = static_cast<char>(closed);
        ++child.placed;
        if (const Completion *sub = best(child)) {
          result = prepend(Token{Side::right, index, std::nullopt}, -1, *sub);
          break;
        }
      }
    }

    auto [it, inserted] = memo_.emplace(s.status, std::move(result));
    return it->second.get();
  }

  int count_opened(const State &s) const
  {
    int k = 0;
    for (Vertex v = 0; v < n_; ++v)
      if (status(s, v) != unplaced)
        ++k;
    return k;
  }

  static std::unique_ptr<Completion> prepend(const Token &t, Vertex opened, const Completion &rest)
  {
    auto out = std::make_unique<Completion>();
    out->tokens.reserve(rest.tokens.size() + 1);
    out->tokens.push_back(t);
    out->tokens.insert(out->tokens.end(), rest.tokens.begin(), rest.tokens.end());
    if (opened >= 0)
      out->opened.push_back(opened);
    out->opened.insert(out->opened.end(), rest.opened.begin(), rest.opened.end());
    return out;
  }

  const IntersectionMatrix &m_;
  const std::vector<Color> *colors_;
  int n_;
  Completion empty_;
  std::unordered_map<std::string, std::unique_ptr<Completion>> memo_;
};

Representation build_representation(const Completion &c, int n)
{
  std::vector<Event> events;
  events.reserve(c.tokens.size());
  Representation rep;
  rep.assign.assign(n, -1);
  for (const Token &t : c.tokens)
    events.push_back({t.index - 1, t.side});
  for (std::size_t i = 0; i < c.opened.size(); ++i)
    rep.assign[c.opened[i]] = static_cast<int>(i);
  rep.model = ArcModel(std::move(events));
  return rep;
}

} // namespace

std::optional<Representation> realize_interval(const IntersectionMatrix &m)
{
  if (m.contains(IntersectionType::cc))
    return std::nullopt;
  IntervalSearch search(m, nullptr);
  const Completion *c = search.run();
  if (!c)
    return std::nullopt;
  return build_representation(*c, m.size());
}

std::optional<CanonicalInterval> canonical_interval(const IntersectionMatrix &m,
                                                    const std::vector<Color> &colors)
{
  if (m.contains(IntersectionType::cc))
    return std::nullopt;
  IntervalSearch search(m, &colors);
  const Completion *c = search.run();
  if (!c)
    return std::nullopt;
  return CanonicalInterval{c->tokens, build_representation(*c, m.size())};
}

} // namespace cagraph
