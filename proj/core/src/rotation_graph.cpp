#include "belyi/rotation_graph.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

#include <nlohmann/json.hpp>

#include "belyi/rng.hpp"

namespace belyi {

RotationGraph RotationGraph::sample(std::uint32_t n, Seed seed) {
  if (n == 0) throw std::invalid_argument("sample: n must be >= 1");
  const std::uint32_t vertices = 2 * n;
  const std::uint32_t stubs = 3 * vertices;
  SplitMix64 root(seed.value);

  // Uniform perfect matching: shuffle all stubs, pair them sequentially.
  SplitMix64 match_rng = root.split(0);
  std::vector<std::uint32_t> order(stubs);
  std::iota(order.begin(), order.end(), 0u);
  for (std::uint32_t i = stubs - 1; i > 0; --i) {
    const auto j = static_cast<std::uint32_t>(match_rng.uniform_below(i + 1));
    std::swap(order[i], order[j]);
  }
  std::vector<std::uint32_t> partner(stubs);
  for (std::uint32_t i = 0; i < stubs; i += 2) {
    partner[order[i]] = order[i + 1];
    partner[order[i + 1]] = order[i];
  }

  // One fair coin per vertex picks between the two cyclic orders.
  SplitMix64 rot_rng = root.split(1);
  std::vector<std::uint32_t> rot(stubs);
  for (std::uint32_t v = 0; v < vertices; ++v) {
    const std::uint32_t s = 3 * v;
    if (rot_rng.coin()) {
      rot[s] = s + 1;
      rot[s + 1] = s + 2;
      rot[s + 2] = s;
    } else {
      rot[s] = s + 2;
      rot[s + 2] = s + 1;
      rot[s + 1] = s;
    }
  }
  return RotationGraph(vertices, std::move(partner), std::move(rot));
}

std::vector<std::pair<std::uint32_t, std::uint32_t>> RotationGraph::edges() const {
  std::vector<std::pair<std::uint32_t, std::uint32_t>> out;
  out.reserve(edge_count());
  for (std::uint32_t s = 0; s < stub_count(); ++s)
    if (s < partner_[s]) out.emplace_back(s, partner_[s]);
  return out;
}

std::string RotationGraph::to_json() const {
  std::string out = "{\"vertex_count\": " + std::to_string(vertex_count_) + ", \"edges\": [";
  bool first = true;
  for (const auto& [a, b] : edges()) {
    out += (first ? "[" : ", [") + std::to_string(a) + "," + std::to_string(b) + "]";
    first = false;
  }
  out += "], \"rotation\": [";
  for (std::uint32_t v = 0; v < vertex_count_; ++v) {
    const std::uint32_t s0 = 3 * v;
    out += (v ? ", [" : "[") + std::to_string(s0) + "," + std::to_string(rot_next_[s0]) +
           "," + std::to_string(rot_next_[rot_next_[s0]]) + "]";
  }
  out += "]}\n";
  return out;
}

RotationGraph RotationGraph::from_json(const std::string& text) {
  const auto j = nlohmann::json::parse(text);
  const auto vertices = j.at("vertex_count").get<std::uint32_t>();
  const std::uint32_t stubs = 3 * vertices;
  std::vector<std::uint32_t> partner(stubs, stubs);
  for (const auto& e : j.at("edges")) {
    const auto a = e.at(0).get<std::uint32_t>();
    const auto b = e.at(1).get<std::uint32_t>();
    if (a >= stubs || b >= stubs) throw std::invalid_argument("graph json: stub out of range");
    partner[a] = b;
    partner[b] = a;
  }
  std::vector<std::uint32_t> rot(stubs, stubs);
  std::uint32_t v = 0;
  for (const auto& row : j.at("rotation")) {
    if (row.size() != 3 || v >= vertices)
      throw std::invalid_argument("graph json: malformed rotation table");
    const auto s0 = row.at(0).get<std::uint32_t>();
    const auto s1 = row.at(1).get<std::uint32_t>();
    const auto s2 = row.at(2).get<std::uint32_t>();
    if (s0 >= stubs || s1 >= stubs || s2 >= stubs)
      throw std::invalid_argument("graph json: stub out of range");
    rot[s0] = s1;
    rot[s1] = s2;
    rot[s2] = s0;
    ++v;
  }
  RotationGraph g(vertices, std::move(partner), std::move(rot));
  if (!degree_check(g)) throw std::invalid_argument("graph json: invariants violated");
  return g;
}

bool degree_check(const RotationGraph& g) {
  const std::uint32_t stubs = 3 * g.vertex_count();
  const auto& partner = g.partner_map();
  const auto& rot = g.rotation_map();
  if (partner.size() != stubs || rot.size() != stubs) return false;
  for (std::uint32_t s = 0; s < stubs; ++s) {
    const std::uint32_t p = partner[s];
    if (p >= stubs || p == s || partner[p] != s) return false;
  }
  for (std::uint32_t v = 0; v < g.vertex_count(); ++v) {
    const std::uint32_t s0 = 3 * v;
    // The rotation must cycle through all three stubs of v.
    std::uint32_t seen = 0;
    std::uint32_t s = s0;
    for (int i = 0; i < 3; ++i) {
      if (s < s0 || s >= s0 + 3) return false;
      seen |= 1u << (s - s0);
      s = rot[s];
    }
    if (s != s0 || seen != 0b111u) return false;
  }
  return true;
}

std::uint32_t face_count(const RotationGraph& g) {
  const std::uint32_t stubs = g.stub_count();
  std::vector<char> visited(stubs, 0);
  std::uint32_t faces = 0;
  for (std::uint32_t s = 0; s < stubs; ++s) {
    if (visited[s]) continue;
    ++faces;
    std::uint32_t t = s;
    while (!visited[t]) {
      visited[t] = 1;
      t = g.rotation_next(g.partner(t));
    }
  }
  return faces;
}

std::uint32_t genus(const RotationGraph& g) {
  const std::int64_t v = g.vertex_count();
  const std::int64_t e = g.edge_count();
  const std::int64_t f = face_count(g);
  return static_cast<std::uint32_t>((2 - v + e - f) / 2);
}

}  // namespace belyi
