#include "belyi/cycle_census.hpp"

#include <algorithm>
#include <cmath>
#include <set>
#include <stdexcept>
#include <string>
#include <unordered_set>

namespace belyi {

namespace {

using Step = Cycle::Step;

std::vector<Step> reversed_traversal(const std::vector<Step>& steps) {
  // Reversed cycle visits the same vertices backwards; each visit swaps
  // its in and out stubs.
  const std::size_t k = steps.size();
  std::vector<Step> rev(k);
  rev[0] = {steps[0].second, steps[0].first};
  for (std::size_t j = 1; j < k; ++j) {
    const auto& [in, out] = steps[k - j];
    rev[j] = {out, in};
  }
  return rev;
}

std::vector<Step> min_rotation(const std::vector<Step>& s) {
  const std::size_t k = s.size();
  std::vector<Step> best(s);
  std::vector<Step> cand(k);
  for (std::size_t r = 1; r < k; ++r) {
    for (std::size_t j = 0; j < k; ++j) cand[j] = s[(j + r) % k];
    if (cand < best) best = cand;
  }
  return best;
}

}  // namespace

Cycle Cycle::from_steps(std::vector<Step> steps) {
  if (steps.empty()) throw std::invalid_argument("cycle: empty step sequence");
  auto fwd = min_rotation(steps);
  auto rev = min_rotation(reversed_traversal(steps));
  return Cycle(fwd < rev ? std::move(fwd) : std::move(rev));
}

std::vector<std::uint32_t> Cycle::vertices() const {
  std::vector<std::uint32_t> out;
  out.reserve(steps_.size());
  for (const auto& [in, _] : steps_) out.push_back(RotationGraph::vertex_of(in));
  return out;
}

std::vector<Cycle::Step> Cycle::edges() const {
  std::vector<Step> out;
  out.reserve(steps_.size());
  const std::size_t k = steps_.size();
  for (std::size_t j = 0; j < k; ++j) {
    const std::uint32_t a = steps_[j].second;
    const std::uint32_t b = steps_[(j + 1) % k].first;
    out.emplace_back(std::min(a, b), std::max(a, b));
  }
  return out;
}

std::strong_ordering Cycle::operator<=>(const Cycle& other) const {
  if (auto c = steps_.size() <=> other.steps_.size(); c != 0) return c;
  return steps_ <=> other.steps_;
}

std::uint32_t alpha_cap(std::uint32_t vertex_count, double epsilon_prime) {
  const double cap = (1.0 - epsilon_prime) * std::log2(static_cast<double>(vertex_count));
  const auto floored = static_cast<std::uint32_t>(std::max(0.0, std::floor(cap)));
  return std::max(floored, 4u);
}

namespace {

class CycleEnumerator {
 public:
  CycleEnumerator(const RotationGraph& g, std::uint32_t max_len)
      : g_(g), max_len_(max_len), visited_(g.vertex_count(), 0) {}

  std::vector<Cycle> run() {
    for (root_ = 0; root_ < g_.vertex_count(); ++root_) {
      for (std::uint32_t out0 = 3 * root_; out0 < 3 * root_ + 3; ++out0) {
        const std::uint32_t in_next = g_.partner(out0);
        const std::uint32_t w = RotationGraph::vertex_of(in_next);
        steps_.assign(1, {UINT32_MAX, out0});
        if (w == root_) {
          close(in_next);  // loop
        } else if (w > root_ && max_len_ >= 2) {
          visited_[w] = 1;
          extend(w, in_next);
          visited_[w] = 0;
        }
      }
    }
    return {found_.begin(), found_.end()};
  }

 private:
  void close(std::uint32_t closing_in_stub) {
    steps_[0].first = closing_in_stub;
    found_.insert(Cycle::from_steps(steps_));
  }

  void extend(std::uint32_t vertex, std::uint32_t in_stub) {
    steps_.emplace_back(in_stub, UINT32_MAX);
    for (std::uint32_t o = 3 * vertex; o < 3 * vertex + 3; ++o) {
      if (o == in_stub) continue;
      steps_.back().second = o;
      const std::uint32_t next_in = g_.partner(o);
      const std::uint32_t y = RotationGraph::vertex_of(next_in);
      if (y == root_) {
        close(next_in);
      } else if (y > root_ && !visited_[y] && steps_.size() + 1 <= max_len_) {
        visited_[y] = 1;
        extend(y, next_in);
        visited_[y] = 0;
      }
    }
    steps_.pop_back();
  }

  const RotationGraph& g_;
  std::uint32_t max_len_;
  std::uint32_t root_ = 0;
  std::vector<char> visited_;
  std::vector<Step> steps_;
  std::set<Cycle> found_;
};

}  // namespace

std::vector<Cycle> enumerate_cycles(const RotationGraph& g, std::uint32_t max_len,
                                    const EnumerateOptions& opts) {
  if (max_len == 0) throw std::invalid_argument("enumerate_cycles: max_len must be >= 1");
  const std::uint32_t cap = alpha_cap(g.vertex_count(), opts.epsilon_prime);
  if (max_len > cap && !opts.allow_unsafe) {
    throw std::invalid_argument(
        "enumerate_cycles: max_len " + std::to_string(max_len) +
        " exceeds the alpha cutoff " + std::to_string(cap) + " = (1 - " +
        std::to_string(opts.epsilon_prime) + ") * log2(" +
        std::to_string(g.vertex_count()) + "); set allow_unsafe to override");
  }
  return CycleEnumerator(g, max_len).run();
}

IntersectionProfile intersection_profile(const Cycle& c1, const Cycle& c2) {
  if (c1 == c2) throw std::invalid_argument("intersection_profile: cycles are identical");

  auto v1 = c1.vertices();
  auto v2 = c2.vertices();
  std::sort(v1.begin(), v1.end());
  std::sort(v2.begin(), v2.end());
  std::vector<std::uint32_t> shared_vertices;
  std::set_intersection(v1.begin(), v1.end(), v2.begin(), v2.end(),
                        std::back_inserter(shared_vertices));

  auto e1 = c1.edges();
  auto e2 = c2.edges();
  std::sort(e1.begin(), e1.end());
  std::sort(e2.begin(), e2.end());
  std::vector<Step> shared_edges;
  std::set_intersection(e1.begin(), e1.end(), e2.begin(), e2.end(),
                        std::back_inserter(shared_edges));

  IntersectionProfile p;
  p.shared_edges = static_cast<std::uint32_t>(shared_edges.size());
  if (shared_vertices.empty()) return p;

  // Components of the shared subgraph: union-find over shared vertices
  // joined by shared edges (both endpoints of a shared edge are shared).
  std::vector<std::uint32_t> parent(shared_vertices.size());
  for (std::uint32_t i = 0; i < parent.size(); ++i) parent[i] = i;
  auto index_of = [&](std::uint32_t v) {
    const auto it = std::lower_bound(shared_vertices.begin(), shared_vertices.end(), v);
    return static_cast<std::uint32_t>(it - shared_vertices.begin());
  };
  auto find = [&](std::uint32_t x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  for (const auto& [sa, sb] : shared_edges) {
    const std::uint32_t ra = find(index_of(RotationGraph::vertex_of(sa)));
    const std::uint32_t rb = find(index_of(RotationGraph::vertex_of(sb)));
    if (ra != rb) parent[ra] = rb;
  }
  std::uint32_t components = 0;
  for (std::uint32_t i = 0; i < parent.size(); ++i)
    if (find(i) == i) ++components;
  p.components = components;
  return p;
}

bool is_disconnecting(const RotationGraph& g, std::span<const Cycle> cycles) {
  if (cycles.empty()) throw std::invalid_argument("is_disconnecting: empty cycle set");
  std::vector<char> removed(g.vertex_count(), 0);
  for (const Cycle& c : cycles)
    for (const std::uint32_t v : c.vertices()) removed[v] = 1;

  std::uint32_t components = 0;
  std::vector<char> seen(g.vertex_count(), 0);
  std::vector<std::uint32_t> queue;
  for (std::uint32_t v0 = 0; v0 < g.vertex_count(); ++v0) {
    if (removed[v0] || seen[v0]) continue;
    ++components;
    if (components >= 2) return true;
    queue.assign(1, v0);
    seen[v0] = 1;
    while (!queue.empty()) {
      const std::uint32_t v = queue.back();
      queue.pop_back();
      for (std::uint32_t s = 3 * v; s < 3 * v + 3; ++s) {
        const std::uint32_t w = RotationGraph::vertex_of(g.partner(s));
        if (!removed[w] && !seen[w]) {
          seen[w] = 1;
          queue.push_back(w);
        }
      }
    }
  }
  return false;
}

}  // namespace belyi
