#ifndef DISTSPEC_ENUMERATE_HPP
#define DISTSPEC_ENUMERATE_HPP

#include <vector>

#include "distspec/graph.hpp"

namespace dspec {

// One representative per isomorphism class of connected graphs on n vertices
// (1 <= n <= 6; counts 1, 1, 2, 6, 21, 112). Dedup is by minimum edge
// bitmask over all n! relabelings, so the result is deterministic. Larger
// orders must come from an external graph6 stream.
std::vector<Graph> enumerate_connected(int n);

}  // namespace dspec

#endif
