#include "cagraph/models.hpp"

#include <algorithm>
#include <charconv>
#include <stdexcept>

namespace cagraph
{

ArcModel::ArcModel(std::vector<Event> events) : events_(std::move(events))
{
  if (events_.size() % 2 != 0)
    throw std::invalid_argument("arc model needs an even number of events");
  const int n = static_cast<int>(events_.size() / 2);
  left_.assign(n, -1);
  right_.assign(n, -1);
  for (int pos = 0; pos < 2 * n; ++pos) {
    const Event &e = events_[pos];
    if (e.arc < 0 || e.arc >= n)
      throw std::invalid_argument("arc id " + std::to_string(e.arc) + " out of range");
    int &slot = e.side == Side::left ? left_[e.arc] : right_[e.arc];
    if (slot != -1)
      throw std::invalid_argument("arc " + std::to_string(e.arc) + " has a repeated endpoint");
    slot = pos;
  }
}

bool ArcModel::covers(int arc, int position) const
{
  const int len = static_cast<int>(events_.size());
  const int l = left_[arc], r = right_[arc];
  const int offset = (position - l + len) % len;
  const int span = (r - l + len) % len;
  return offset > 0 && offset < span;
}

VertexSet ArcModel::arcs_over_gap(int position) const
{
  // The gap right after `position` is inside an arc iff the arc covers that
  // event strictly, or the event is the arc's own left endpoint.
  VertexSet out;
  const Event &e = events_[position];
  for (int a = 0; a < arc_count(); ++a)
    if (covers(a, position) || (e.arc == a && e.side == Side::left))
      out.push_back(a);
  return out;
}

std::vector<Vertex> Representation::owners() const
{
  std::vector<Vertex> out(assign.size(), -1);
  for (std::size_t v = 0; v < assign.size(); ++v)
    out.at(assign[v]) = static_cast<Vertex>(v);
  return out;
}

std::string to_string(const Token &t)
{
  std::string s(1, t.side == Side::left ? 'l' : 'r');
  s += std::to_string(t.index);
  if (t.color)
    s += ':' + std::to_string(*t.color);
  return s;
}

std::string to_string(const TokenString &tokens)
{
  std::string s;
  for (const Token &t : tokens) {
    if (!s.empty())
      s += ' ';
    s += to_string(t);
  }
  return s;
}

namespace
{

template <typename Int> bool parse_number(std::string_view digits, Int &out, bool allow_zero_lead)
{
  if (digits.empty())
    return false;
  if (!allow_zero_lead && digits.front() == '0')
    return false;
  auto [ptr, ec] = std::from_chars(digits.data(), digits.data() + digits.size(), out);
  return ec == std::errc{} && ptr == digits.data() + digits.size();
}

} // namespace

TokenString parse_tokens(std::string_view text)
{
  TokenString out;
  std::size_t pos = 0;
  while (pos < text.size()) {
    std::size_t end = text.find(' ', pos);
    if (end == std::string_view::npos)
      end = text.size();
    const std::string_view word = text.substr(pos, end - pos);
    if (word.size() < 2 || (word[0] != 'l' && word[0] != 'r'))
      throw std::invalid_argument("malformed token '" + std::string(word) + "'");
    Token t;
    t.side = word[0] == 'l' ? Side::left : Side::right;
    const std::size_t colon = word.find(':');
    if (!parse_number(word.substr(1, colon == std::string_view::npos ? word.npos : colon - 1),
                      t.index, false))
      throw std::invalid_argument("malformed token index in '" + std::string(word) + "'");
    if (colon != std::string_view::npos) {
      Color c = 0;
      if (!parse_number(word.substr(colon + 1), c, true))
        throw std::invalid_argument("malformed token color in '" + std::string(word) + "'");
      t.color = c;
    }
    out.push_back(t);
    pos = end + 1;
    if (end + 1 == text.size())
      throw std::invalid_argument("trailing space in token string");
  }
  return out;
}

std::pair<ArcModel, std::vector<std::optional<Color>>> model_from_tokens(const TokenString &tokens)
{
  const int n = static_cast<int>(tokens.size() / 2);
  std::vector<Event> events;
  std::vector<std::optional<Color>> colors(n);
  for (const Token &t : tokens) {
    if (t.index < 1 || t.index > n)
      throw std::invalid_argument("token index out of range: " + to_string(t));
    events.push_back({t.index - 1, t.side});
    if (t.side == Side::left)
      colors[t.index - 1] = t.color;
  }
  return {ArcModel(std::move(events)), std::move(colors)};
}

IntersectionType classify_arc_pair(const ArcModel &model, int a, int b)
{
  if (a == b)
    throw std::invalid_argument("classify_arc_pair needs two distinct arcs");
  const bool la_in_b = model.covers(b, model.left_position(a));
  const bool ra_in_b = model.covers(b, model.right_position(a));
  const bool lb_in_a = model.covers(a, model.left_position(b));
  const bool rb_in_a = model.covers(a, model.right_position(b));
  const int bits = (la_in_b << 3) | (ra_in_b << 2) | (lb_in_a << 1) | rb_in_a;
  switch (bits) {
  case 0b0000:
    return IntersectionType::di;
  case 0b1100:
    return IntersectionType::cd;
  case 0b0011:
    return IntersectionType::cs;
  case 0b1111:
    return IntersectionType::cc;
  case 0b1001:
  case 0b0110:
    return IntersectionType::ov;
  default:
    throw std::logic_error("impossible endpoint pattern for arcs " + std::to_string(a) + ", " +
                           std::to_string(b));
  }
}

IntersectionMatrix matrix_of_model(const Representation &rep)
{
  const int n = static_cast<int>(rep.assign.size());
  if (n != rep.model.arc_count())
    throw std::invalid_argument("representation size differs from model size");
  IntersectionMatrix m(n);
  for (Vertex u = 0; u < n; ++u)
    for (Vertex v = u + 1; v < n; ++v)
      m.set(u, v, classify_arc_pair(rep.model, rep.assign[u], rep.assign[v]));
  return m;
}

IntersectionMatrix matrix_of_model(const ArcModel &model)
{
  std::vector<int> identity(model.arc_count());
  for (int i = 0; i < model.arc_count(); ++i)
    identity[i] = i;
  return matrix_of_model(Representation{model, identity});
}

Graph graph_of_model(const Representation &rep)
{
  const int n = static_cast<int>(rep.assign.size());
  Graph g(n);
  for (Vertex u = 0; u < n; ++u)
    for (Vertex v = u + 1; v < n; ++v)
      if (classify_arc_pair(rep.model, rep.assign[u], rep.assign[v]) != IntersectionType::di)
        g.add_edge(u, v);
  return g;
}

Graph graph_of_model(const ArcModel &model)
{
  std::vector<int> identity(model.arc_count());
  for (int i = 0; i < model.arc_count(); ++i)
    identity[i] = i;
  return graph_of_model(Representation{model, identity});
}

ModelString model_string(const ArcModel &model, const std::vector<Color> &colors)
{
  const int n = model.arc_count();
  const int len = 2 * n;
  if (!colors.empty() && static_cast<int>(colors.size()) != n)
    throw std::invalid_argument("color vector size differs from arc count");
  const auto &events = model.events();

  ModelString best;
  std::vector<int> relabel(n);
  TokenString tokens(len);
  for (int start = 0; start < n; ++start) {
    const int origin = model.left_position(start);
    std::fill(relabel.begin(), relabel.end(), -1);
    int next = 0;
    for (int k = 0; k < len; ++k) {
      const Event &e = events[(origin + k) % len];
      if (e.side == Side::left)
        relabel[e.arc] = next++;
    }
    for (int k = 0; k < len; ++k) {
      const Event &e = events[(origin + k) % len];
      Token &t = tokens[k];
      t.side = e.side;
      t.index = relabel[e.arc] + 1;
      t.color.reset();
      if (e.side == Side::left && !colors.empty())
        t.color = colors[e.arc];
    }
    if (start == 0 || tokens < best.tokens) {
      best.tokens = tokens;
      best.relabel = relabel;
      std::vector<Event> rotated(len);
      for (int k = 0; k < len; ++k) {
        const Event &e = events[(origin + k) % len];
        rotated[k] = {relabel[e.arc], e.side};
      }
      best.model = ArcModel(std::move(rotated));
    }
  }
  return best;
}

ModelString model_string(const Representation &rep, const std::vector<Color> &vertex_colors)
{
  std::vector<Color> arc_colors;
  if (!vertex_colors.empty()) {
    if (vertex_colors.size() != rep.assign.size())
      throw std::invalid_argument("color vector size differs from vertex count");
    arc_colors.resize(vertex_colors.size());
    for (std::size_t v = 0; v < rep.assign.size(); ++v)
      arc_colors[rep.assign[v]] = vertex_colors[v];
  }
  return model_string(rep.model, arc_colors);
}

ArcModel flip_arcs_in_model(const ArcModel &model, const VertexSet &arcs)
{
  std::vector<bool> flip(model.arc_count(), false);
  for (int a : arcs)
    flip.at(a) = true;
  std::vector<Event> events = model.events();
  for (Event &e : events)
    if (flip[e.arc])
      e.side = e.side == Side::left ? Side::right : Side::left;
  return ArcModel(std::move(events));
}

bool has_hole(const ArcModel &model)
{
  const int len = static_cast<int>(model.events().size());
  if (len == 0)
    return true;
  // Coverage of the gap after position 0, then a running sweep.
  int coverage = static_cast<int>(model.arcs_over_gap(0).size());
  if (coverage == 0)
    return true;
  for (int pos = 1; pos < len; ++pos) {
    coverage += model.events()[pos].side == Side::left ? 1 : -1;
    if (coverage == 0)
      return true;
  }
  return false;
}

} // namespace cagraph
