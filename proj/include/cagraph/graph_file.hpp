#ifndef CAGRAPH_GRAPH_FILE_HPP
#define CAGRAPH_GRAPH_FILE_HPP

#include <istream>
#include <stdexcept>
#include <string>

#include "cagraph/graph.hpp"

namespace cagraph
{

/// Error in a graph file; `line()` is 1-based, 0 when the error is not tied
/// to a line (e.g. a missing header).
class ParseError : public std::runtime_error
{
public:
  ParseError(int line, const std::string &message);

  int line() const { return line_; }

private:
  int line_;
};

/// Reads the text format
///
///     # comment
///     p ca <n> <m>
///     e <u> <v>        (exactly m lines, 1-based ids, no duplicates)
///     c <v> <color>    (optional)
///
/// into a graph on the vertices 0..n-1.
Graph read_graph_file(std::istream &in);
Graph read_graph_file(const std::string &path);

std::string write_graph_file(const Graph &g);

} // namespace cagraph

#endif // CAGRAPH_GRAPH_FILE_HPP
