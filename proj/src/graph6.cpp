#include "distspec/graph6.hpp"

namespace dspec {

Graph parse_graph6(std::string_view text) {
  if (text.empty()) throw Graph6Error("empty graph6 string", 0);
  unsigned char c0 = static_cast<unsigned char>(text[0]);
  if (c0 == ':') throw Graph6Error("sparse6 input not supported", 0);
  if (c0 == 126) throw Graph6Error("long-form graph6 header not supported (n > 62)", 0);
  if (c0 < 63 || c0 > 125) throw Graph6Error("invalid graph6 header byte", 0);
  int n = c0 - 63;
  if (n == 0) throw Graph6Error("graph of order 0 not supported", 0);
  Graph g(n);
  std::size_t bits_needed = static_cast<std::size_t>(n) * (n - 1) / 2;
  std::size_t payload = (bits_needed + 5) / 6;
  if (text.size() < 1 + payload)
    throw Graph6Error("truncated graph6 bitstream", text.size());
  if (text.size() > 1 + payload)
    throw Graph6Error("trailing garbage after graph6 payload", 1 + payload);
  std::size_t bit = 0;
  int col = 1, row = 0;
  for (std::size_t k = 0; k < payload; ++k) {
    unsigned char c = static_cast<unsigned char>(text[1 + k]);
    if (c < 63 || c > 126) throw Graph6Error("invalid graph6 payload byte", 1 + k);
    unsigned v = c - 63;
    for (int b = 5; b >= 0 && bit < bits_needed; --b, ++bit) {
      if ((v >> b) & 1u) g.add_edge(row, col);
      if (++row == col) {
        row = 0;
        ++col;
      }
    }
  }
  return g;
}

std::string write_graph6(const Graph& g) {
  int n = g.order();
  std::string out;
  out.push_back(static_cast<char>(63 + n));
  unsigned acc = 0;
  int nbits = 0;
  for (int col = 1; col < n; ++col) {
    for (int row = 0; row < col; ++row) {
      acc = (acc << 1) | (g.adjacent(row, col) ? 1u : 0u);
      if (++nbits == 6) {
        out.push_back(static_cast<char>(63 + acc));
        acc = 0;
        nbits = 0;
      }
    }
  }
  if (nbits > 0) out.push_back(static_cast<char>(63 + (acc << (6 - nbits))));
  return out;
}

std::vector<Graph> read_graph6_lines(std::istream& in) {
  std::vector<Graph> graphs;
  std::string line;
  std::size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty() || line.rfind(">>", 0) == 0) continue;
    try {
      graphs.push_back(parse_graph6(line));
    } catch (const Graph6Error& e) {
      throw Graph6Error("line " + std::to_string(lineno) + ": " + e.what(), e.offset());
    }
  }
  return graphs;
}

}  // namespace dspec
