#include <catch2/catch_amalgamated.hpp>

#include <set>

#include "pullstream/topology.hpp"

using namespace pullstream;

TEST_CASE("two peers with v=1 form the only possible edge") {
  const auto topo = build_topology(2, 1, 123);
  REQUIRE(topo.size() == 2);
  REQUIRE(topo.degree(0) == 1);
  CHECK(topo.neighbors[0][0] == 1);
  CHECK(topo.neighbors[1][0] == 0);
}

TEST_CASE("same seed builds the same graph") {
  const auto a = build_topology(100, 10, 7);
  const auto b = build_topology(100, 10, 7);
  CHECK(a.neighbors == b.neighbors);
  const auto c = build_topology(100, 10, 8);
  CHECK(a.neighbors != c.neighbors);
}

TEST_CASE("no self loops, duplicates, or symmetric gaps") {
  const auto topo = build_topology(60, 8, 99);
  for (int p = 0; p < topo.size(); ++p) {
    std::set<int> seen;
    for (int q : topo.neighbors[static_cast<std::size_t>(p)]) {
      CHECK(q != p);
      CHECK(seen.insert(q).second);
      CHECK(topo.adjacent(q, p));
    }
    CHECK(topo.degree(p) <= 8);
  }
}

TEST_CASE("mean degree lands within one of the target") {
  for (std::uint64_t seed = 0; seed < 100; ++seed) {
    const auto topo = build_topology(100, 10, seed);
    const double mean = topo.mean_degree();
    CHECK(mean >= 9.0);
    CHECK(mean <= 10.0);
  }
}

TEST_CASE("degenerate inputs") {
  CHECK(build_topology(5, 0, 1).mean_degree() == 0.0);
  CHECK_THROWS_AS(build_topology(5, 5, 1), std::invalid_argument);
  CHECK(build_topology(1, 0, 1).size() == 1);
}
