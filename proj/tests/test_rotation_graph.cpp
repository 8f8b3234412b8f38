#include <doctest.h>

#include <algorithm>
#include <map>
#include <string>
#include <vector>

#include <boost/math/distributions/chi_squared.hpp>

#include "belyi/rotation_graph.hpp"

using belyi::degree_check;
using belyi::RotationGraph;
using belyi::Seed;

namespace {

// Canonical key for a matching: sorted pairs, sorted.
std::string matching_key(const RotationGraph& g) {
  std::string key;
  for (const auto& [a, b] : g.edges()) key += std::to_string(a) + "-" + std::to_string(b) + ";";
  return key;
}

double uniform_chi2_pvalue(const std::map<std::string, std::uint64_t>& counts,
                           double expected_cells, std::uint64_t total) {
  const double expected = static_cast<double>(total) / expected_cells;
  double chi2 = 0;
  std::uint64_t observed_total = 0;
  for (const auto& [k, c] : counts) {
    chi2 += (c - expected) * (c - expected) / expected;
    observed_total += c;
  }
  // cells never hit still contribute their expectation
  chi2 += (expected_cells - static_cast<double>(counts.size())) * expected;
  REQUIRE(observed_total == total);
  boost::math::chi_squared dist(expected_cells - 1);
  return boost::math::cdf(boost::math::complement(dist, chi2));
}

}  // namespace

TEST_CASE("n=1 structure is forced: 2 vertices, 3 edges, cubic") {
  for (std::uint64_t s : {0ull, 1ull, 99ull}) {
    const auto g = RotationGraph::sample(1, Seed{s});
    CHECK(g.vertex_count() == 2);
    CHECK(g.edge_count() == 3);
    CHECK(degree_check(g));
  }
}

TEST_CASE("fixed seed reproduces the sample bit for bit") {
  const auto a = RotationGraph::sample(100, Seed{77});
  const auto b = RotationGraph::sample(100, Seed{77});
  CHECK(a.partner_map() == b.partner_map());
  CHECK(a.rotation_map() == b.rotation_map());
  CHECK(a.to_json() == b.to_json());
  const auto c = RotationGraph::sample(100, Seed{78});
  CHECK(a.partner_map() != c.partner_map());
}

TEST_CASE("matching uniformity at n=1: 15 matchings, chi-square and 3-sigma") {
  constexpr std::uint64_t kSamples = 100000;
  std::map<std::string, std::uint64_t> counts;
  for (std::uint64_t s = 0; s < kSamples; ++s)
    ++counts[matching_key(RotationGraph::sample(1, Seed{s}))];
  CHECK(counts.size() == 15);

  const double p = 1.0 / 15.0;
  const double mean = kSamples * p;
  const double sigma = std::sqrt(kSamples * p * (1 - p));
  for (const auto& [k, c] : counts) {
    CHECK(std::abs(static_cast<double>(c) - mean) < 3.0 * sigma);
  }
  CHECK(uniform_chi2_pvalue(counts, 15, kSamples) > 0.01);
}

TEST_CASE("matching uniformity at n=2: chi-square over all 10395 matchings") {
  constexpr std::uint64_t kSamples = 100000;
  std::map<std::string, std::uint64_t> counts;
  for (std::uint64_t s = 0; s < kSamples; ++s)
    ++counts[matching_key(RotationGraph::sample(2, Seed{1000000 + s}))];
  CHECK(counts.size() <= 10395);
  CHECK(uniform_chi2_pvalue(counts, 10395, kSamples) > 0.01);
}

TEST_CASE("loops and parallel edges occur at small n") {
  std::uint64_t loops = 0, parallels = 0;
  for (std::uint64_t s = 0; s < 2000; ++s) {
    const auto g = RotationGraph::sample(2, Seed{s});
    std::map<std::pair<std::uint32_t, std::uint32_t>, int> edge_mult;
    for (const auto& [a, b] : g.edges()) {
      const auto u = RotationGraph::vertex_of(a), v = RotationGraph::vertex_of(b);
      if (u == v) ++loops;
      ++edge_mult[{std::min(u, v), std::max(u, v)}];
    }
    for (const auto& [e, m] : edge_mult)
      if (e.first != e.second && m >= 2) ++parallels;
  }
  CHECK(loops > 0);
  CHECK(parallels > 0);
}

TEST_CASE("degree sums and edge counts for a range of n") {
  for (std::uint32_t n : {1u, 2u, 3u, 5u, 17u}) {
    const auto g = RotationGraph::sample(n, Seed{n});
    CHECK(g.vertex_count() == 2 * n);
    CHECK(g.edge_count() == 3 * n);
    CHECK(g.stub_count() == 6 * n);
    CHECK(degree_check(g));
  }
}

TEST_CASE("degree_check rejects malformed data") {
  // self-paired stub (a "2-stub vertex" in disguise)
  {
    auto g = RotationGraph::sample(1, Seed{3});
    auto partner = g.partner_map();
    partner[0] = 0;
    RotationGraph bad(2, partner, g.rotation_map());
    CHECK_FALSE(degree_check(bad));
  }
  // non-cyclic rotation: a transposition leaves one stub fixed
  {
    auto g = RotationGraph::sample(1, Seed{3});
    auto rot = g.rotation_map();
    rot[0] = 1;
    rot[1] = 0;
    rot[2] = 2;
    RotationGraph bad(2, g.partner_map(), rot);
    CHECK_FALSE(degree_check(bad));
  }
  // rotation escaping the vertex
  {
    auto g = RotationGraph::sample(1, Seed{3});
    auto rot = g.rotation_map();
    rot[0] = 3;
    RotationGraph bad(2, g.partner_map(), rot);
    CHECK_FALSE(degree_check(bad));
  }
}

TEST_CASE("json round trip is byte exact") {
  const auto g = RotationGraph::sample(20, Seed{5});
  const std::string text = g.to_json();
  const auto back = RotationGraph::from_json(text);
  CHECK(back.to_json() == text);
  CHECK(back.partner_map() == g.partner_map());
  CHECK(back.rotation_map() == g.rotation_map());

  CHECK_THROWS(RotationGraph::from_json("{\"vertex_count\": 2, \"edges\": [], \"rotation\": []}"));
}

TEST_CASE("face count and genus of the two theta-graph embeddings") {
  // Two vertices joined by three parallel edges; stubs i and i+3 paired.
  const std::vector<std::uint32_t> partner{3, 4, 5, 0, 1, 2};
  // Same cyclic order at both ends: one face, genus 1.
  {
    RotationGraph g(2, partner, {1, 2, 0, 4, 5, 3});
    REQUIRE(degree_check(g));
    CHECK(belyi::face_count(g) == 1);
    CHECK(belyi::genus(g) == 1);
  }
  // Opposite cyclic orders: three faces, genus 0.
  {
    RotationGraph g(2, partner, {1, 2, 0, 5, 3, 4});
    REQUIRE(degree_check(g));
    CHECK(belyi::face_count(g) == 3);
    CHECK(belyi::genus(g) == 0);
  }
}
