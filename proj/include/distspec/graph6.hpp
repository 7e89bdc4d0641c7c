#ifndef DISTSPEC_GRAPH6_HPP
#define DISTSPEC_GRAPH6_HPP

#include <cstddef>
#include <istream>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "distspec/graph.hpp"

namespace dspec {

class Graph6Error : public std::runtime_error {
 public:
  Graph6Error(const std::string& what, std::size_t offset)
      : std::runtime_error(what + " (byte " + std::to_string(offset) + ")"), offset_(offset) {}
  std::size_t offset() const { return offset_; }

 private:
  std::size_t offset_;
};

// Standard graph6 short form: header byte 63+n (1 <= n <= 62), then
// ceil(n(n-1)/2 / 6) payload bytes carrying the upper adjacency triangle in
// column-major order, 6 bits per byte, MSB first, offset 63.
Graph parse_graph6(std::string_view text);
std::string write_graph6(const Graph& g);

// One graph per line; blank lines and ">>graph6<<" headers are skipped.
// Parse failures rethrow with the 1-based line number prepended.
std::vector<Graph> read_graph6_lines(std::istream& in);

}  // namespace dspec

#endif
