#include "cagraph/graph_file.hpp"

#include <charconv>
#include <fstream>
#include <optional>
#include <set>
#include <sstream>
#include <vector>

namespace cagraph
{

ParseError::ParseError(int line, const std::string &message)
    : std::runtime_error(line > 0 ? "line " + std::to_string(line) + ": " + message : message),
      line_(line)
{
}

namespace
{

std::vector<std::string_view> split(std::string_view s)
{
  std::vector<std::string_view> out;
  std::size_t pos = 0;
  while (pos < s.size()) {
    while (pos < s.size() && (s[pos] == ' ' || s[pos] == '\t' || s[pos] == '\r'))
      ++pos;
    std::size_t end = pos;
    while (end < s.size() && s[end] != ' ' && s[end] != '\t' && s[end] != '\r')
      ++end;
    if (end > pos)
      out.push_back(s.substr(pos, end - pos));
    pos = end;
  }
  return out;
}

template <typename Int> Int number(std::string_view word, int line, const char *what)
{
  Int value{};
  auto [ptr, ec] = std::from_chars(word.data(), word.data() + word.size(), value);
  if (ec != std::errc{} || ptr != word.data() + word.size())
    throw ParseError(line, std::string("invalid ") + what + " '" + std::string(word) + "'");
  return value;
}

} // namespace

Graph read_graph_file(std::istream &in)
{
  std::optional<Graph> g;
  long long expected_edges = 0;
  std::set<std::pair<Vertex, Vertex>> seen;

  std::string raw;
  int line = 0;
  const auto vertex = [&](std::string_view word) {
    const long long id = number<long long>(word, line, "vertex id");
    if (id < 1 || id > g->size())
      throw ParseError(line, "vertex id " + std::string(word) + " outside 1.." + std::to_string(g->size()));
    return static_cast<Vertex>(id - 1);
  };

  while (std::getline(in, raw)) {
    ++line;
    const auto words = split(raw);
    if (words.empty() || words[0].front() == '#')
      continue;
    if (words[0] == "p") {
      if (g)
        throw ParseError(line, "duplicate header");
      if (words.size() != 4 || words[1] != "ca")
        throw ParseError(line, "expected header 'p ca <n> <m>'");
      const long long n = number<long long>(words[2], line, "vertex count");
      expected_edges = number<long long>(words[3], line, "edge count");
      if (n < 0 || expected_edges < 0 || n > 1'000'000)
        throw ParseError(line, "vertex or edge count out of range");
      g.emplace(static_cast<int>(n));
    } else if (words[0] == "e") {
      if (!g)
        throw ParseError(line, "edge before header");
      if (words.size() != 3)
        throw ParseError(line, "expected 'e <u> <v>'");
      Vertex u = vertex(words[1]), v = vertex(words[2]);
      if (u == v)
        throw ParseError(line, "self-loop on vertex " + std::to_string(u + 1));
      if (!seen.emplace(std::min(u, v), std::max(u, v)).second)
        throw ParseError(line, "duplicate edge " + std::to_string(u + 1) + " " + std::to_string(v + 1));
      g->add_edge(u, v);
    } else if (words[0] == "c") {
      if (!g)
        throw ParseError(line, "color before header");
      if (words.size() != 3)
        throw ParseError(line, "expected 'c <v> <color>'");
      g->set_color(vertex(words[1]), number<Color>(words[2], line, "color"));
    } else {
      throw ParseError(line, "unknown line type '" + std::string(words[0]) + "'");
    }
  }
  if (!g)
    throw ParseError(0, "missing header 'p ca <n> <m>'");
  if (static_cast<long long>(seen.size()) != expected_edges)
    throw ParseError(0, "header announces " + std::to_string(expected_edges) + " edges, found " +
                            std::to_string(seen.size()));
  return std::move(*g);
}

Graph read_graph_file(const std::string &path)
{
  std::ifstream in(path);
  if (!in)
    throw ParseError(0, "cannot open '" + path + "'");
  return read_graph_file(in);
}

std::string write_graph_file(const Graph &g)
{
  std::ostringstream out;
  const auto edges = g.edges();
  out << "p ca " << g.size() << ' ' << edges.size() << '\n';
  for (auto [u, v] : edges)
    out << "e " << u + 1 << ' ' << v + 1 << '\n';
  for (Vertex v = 0; v < g.size(); ++v)
    if (g.color(v) != 0)
      out << "c " << v + 1 << ' ' << g.color(v) << '\n';
  return out.str();
}

} // namespace cagraph
