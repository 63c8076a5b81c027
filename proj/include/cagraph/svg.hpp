#ifndef CAGRAPH_SVG_HPP
#define CAGRAPH_SVG_HPP

#include <string>
#include <vector>

#include "cagraph/models.hpp"

namespace cagraph
{

/// SVG 1.1 drawing of a representation: endpoints evenly spaced clockwise
/// from the top, each arc on its own radius with dots on its endpoints and
/// labelled with labels[v] (1-based vertex ids when empty).
std::string render_svg(const Representation &rep, const std::vector<std::string> &labels = {});

} // namespace cagraph

#endif // CAGRAPH_SVG_HPP
