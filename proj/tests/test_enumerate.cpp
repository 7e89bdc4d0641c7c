#include <stdexcept>

#include "distspec/enumerate.hpp"
#include "distspec/graph.hpp"
#include "doctest.h"

using namespace dspec;

TEST_CASE("connected graph counts per order") {
  CHECK(enumerate_connected(1).size() == 1);
  CHECK(enumerate_connected(2).size() == 1);
  CHECK(enumerate_connected(3).size() == 2);
  CHECK(enumerate_connected(4).size() == 6);
  CHECK(enumerate_connected(5).size() == 21);
  CHECK(enumerate_connected(6).size() == 112);
  CHECK_THROWS_AS((void)enumerate_connected(7), std::invalid_argument);
  CHECK_THROWS_AS((void)enumerate_connected(0), std::invalid_argument);
}

TEST_CASE("all representatives connected and pairwise non-isomorphic") {
  for (int n = 2; n <= 5; ++n) {
    auto graphs = enumerate_connected(n);
    for (const Graph& g : graphs) CHECK(is_connected(g));
    for (size_t i = 0; i < graphs.size(); ++i)
      for (size_t j = i + 1; j < graphs.size(); ++j)
        CHECK(!is_isomorphic(graphs[i], graphs[j]));
  }
}

TEST_CASE("order 3 representatives are P3 and K3") {
  auto graphs = enumerate_connected(3);
  REQUIRE(graphs.size() == 2);
  bool has_p3 = false, has_k3 = false;
  for (const Graph& g : graphs) {
    has_p3 = has_p3 || is_isomorphic(g, path(3));
    has_k3 = has_k3 || is_isomorphic(g, complete(3));
  }
  CHECK(has_p3);
  CHECK(has_k3);
}
