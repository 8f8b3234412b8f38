#include <doctest.h>

#include <algorithm>
#include <map>
#include <string>

#include "belyi/cycle_census.hpp"
#include "test_graphs.hpp"

using belyi::alpha_cap;
using belyi::Cycle;
using belyi::enumerate_cycles;
using belyi::intersection_profile;
using belyi::is_disconnecting;
using belyi::RotationGraph;

namespace {

std::vector<std::uint32_t> sorted_vertices(const Cycle& c) {
  auto v = c.vertices();
  std::sort(v.begin(), v.end());
  return v;
}

const Cycle* find_by_vertices(const std::vector<Cycle>& cycles,
                              std::vector<std::uint32_t> want) {
  std::sort(want.begin(), want.end());
  for (const auto& c : cycles)
    if (sorted_vertices(c) == want) return &c;
  return nullptr;
}

}  // namespace

TEST_CASE("alpha cap follows (1 - eps') log2 V with a small-graph floor") {
  CHECK(alpha_cap(4) == 4);
  CHECK(alpha_cap(64) == 5);
  CHECK(alpha_cap(256) == 7);
  CHECK(alpha_cap(1024) == 9);
  CHECK(alpha_cap(2000) == 10);
  CHECK(alpha_cap(4096) == 11);
  CHECK(alpha_cap(1024, 0.0) == 10);
}

TEST_CASE("cap violations name the cutoff; the unsafe flag lifts it") {
  const auto g = RotationGraph::sample(16, belyi::Seed{1});  // 32 vertices, cap 4
  CHECK_THROWS_WITH_AS(enumerate_cycles(g, 5), doctest::Contains("alpha"),
                       std::invalid_argument);
  CHECK_NOTHROW(enumerate_cycles(g, 5, {.allow_unsafe = true}));
}

TEST_CASE("K4 census: 4 triangles and 3 four-cycles, each reported once") {
  const auto g = test_graphs::k4();
  const auto cycles = enumerate_cycles(g, 4);
  std::map<std::uint32_t, int> by_len;
  for (const auto& c : cycles) ++by_len[c.length()];
  CHECK(by_len[3] == 4);
  CHECK(by_len[4] == 3);
  CHECK(cycles.size() == 7);

  // every 3-subset of vertices appears exactly once
  CHECK(find_by_vertices(cycles, {0, 1, 2}) != nullptr);
  CHECK(find_by_vertices(cycles, {0, 1, 3}) != nullptr);
  CHECK(find_by_vertices(cycles, {0, 2, 3}) != nullptr);
  CHECK(find_by_vertices(cycles, {1, 2, 3}) != nullptr);
}

TEST_CASE("canonical form: one triangle from different traversals compares equal") {
  // K4 triangle (0,1,2) entered at different starts and directions.
  const Cycle a = Cycle::from_steps({{1, 0}, {3, 4}, {7, 6}});
  const Cycle b = Cycle::from_steps({{3, 4}, {7, 6}, {1, 0}});
  const Cycle rev = Cycle::from_steps({{0, 1}, {6, 7}, {4, 3}});
  CHECK(a == b);
  CHECK(a == rev);
  CHECK(a.length() == 3);
}

TEST_CASE("loops and parallel pairs are enumerated") {
  const auto lp = test_graphs::loop_pair();
  const auto loop_cycles = enumerate_cycles(lp, 4);
  REQUIRE(loop_cycles.size() == 2);
  CHECK(loop_cycles[0].length() == 1);
  CHECK(loop_cycles[1].length() == 1);

  const auto th = test_graphs::theta();
  const auto theta_cycles = enumerate_cycles(th, 4);
  REQUIRE(theta_cycles.size() == 3);  // one 2-cycle per pair of parallel edges
  for (const auto& c : theta_cycles) CHECK(c.length() == 2);
}

TEST_CASE("intersection profiles on K4 and synthetic cycles") {
  const auto g = test_graphs::k4();
  const auto cycles = enumerate_cycles(g, 4);

  SUBCASE("two 4-cycles sharing two opposite edges: j=2, p=2") {
    std::vector<const Cycle*> quads;
    for (const auto& c : cycles)
      if (c.length() == 4) quads.push_back(&c);
    REQUIRE(quads.size() == 3);
    int seen_j2p2 = 0;
    for (std::size_t i = 0; i < quads.size(); ++i) {
      for (std::size_t j = i + 1; j < quads.size(); ++j) {
        const auto p = intersection_profile(*quads[i], *quads[j]);
        if (p.shared_edges == 2) {
          CHECK(p.components == 2);
          ++seen_j2p2;
        }
      }
    }
    CHECK(seen_j2p2 == 3);  // every pair of K4 Hamiltonian cycles shares 2 opposite edges
  }

  SUBCASE("triangles sharing one edge: j=1, p=1") {
    const auto* t1 = find_by_vertices(cycles, {0, 1, 2});
    const auto* t2 = find_by_vertices(cycles, {0, 1, 3});
    REQUIRE(t1 != nullptr);
    REQUIRE(t2 != nullptr);
    const auto p = intersection_profile(*t1, *t2);
    CHECK(p.shared_edges == 1);
    CHECK(p.components == 1);
  }

  SUBCASE("identical cycles are rejected") {
    CHECK_THROWS_AS(intersection_profile(cycles[0], cycles[0]), std::invalid_argument);
  }

  SUBCASE("disjoint synthetic cycles: j=0, p=0") {
    const Cycle a = Cycle::from_steps({{0, 1}, {6, 7}, {12, 13}});
    const Cycle b = Cycle::from_steps({{21, 22}, {24, 25}});
    const auto p = intersection_profile(a, b);
    CHECK(p.shared_edges == 0);
    CHECK(p.components == 0);
  }

  SUBCASE("synthetic cycles sharing exactly one vertex: j=0, p=1") {
    const Cycle a = Cycle::from_steps({{0, 1}, {6, 7}, {12, 13}});
    const Cycle b = Cycle::from_steps({{2, 0}});  // loop at vertex 0
    const auto p = intersection_profile(a, b);
    CHECK(p.shared_edges == 0);
    CHECK(p.components == 1);
  }
}

TEST_CASE("disconnection by vertex removal") {
  const auto g = test_graphs::barbell();
  REQUIRE(belyi::degree_check(g));
  const auto cycles = enumerate_cycles(g, 4);

  const auto* ring = find_by_vertices(cycles, {3, 4, 5, 6});
  REQUIRE(ring != nullptr);
  const Cycle ring_set[] = {*ring};
  CHECK(is_disconnecting(g, ring_set));

  const auto* end_triangle = find_by_vertices(cycles, {0, 1, 2});
  REQUIRE(end_triangle != nullptr);
  const Cycle tri_set[] = {*end_triangle};
  CHECK_FALSE(is_disconnecting(g, tri_set));

  const auto* pair_cycle = find_by_vertices(cycles, {0, 1});
  REQUIRE(pair_cycle != nullptr);
  const Cycle pair_set[] = {*pair_cycle};
  CHECK_FALSE(is_disconnecting(g, pair_set));

  SUBCASE("two-cycle sets") {
    const auto* chordal = find_by_vertices(cycles, {3, 4, 6});  // m1, m2, m4
    REQUIRE(chordal != nullptr);
    const Cycle both[] = {*pair_cycle, *chordal};
    CHECK(is_disconnecting(g, both));

    const auto* other_end = find_by_vertices(cycles, {7, 8, 9});
    REQUIRE(other_end != nullptr);
    const Cycle ends[] = {*end_triangle, *other_end};
    CHECK_FALSE(is_disconnecting(g, ends));  // the ring alone remains, connected
  }

  SUBCASE("K4: no cycle disconnects; Hamiltonian removal empties the graph") {
    const auto k4 = test_graphs::k4();
    for (const auto& c : enumerate_cycles(k4, 4)) {
      const Cycle one[] = {c};
      CHECK_FALSE(is_disconnecting(k4, one));
    }
  }
}
