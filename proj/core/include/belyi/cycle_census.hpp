#pragma once

#include <compare>
#include <cstdint>
#include <span>
#include <utility>
#include <vector>

#include "belyi/rotation_graph.hpp"

namespace belyi {

/// Simple cycle in a rotation graph, stored as one (in_stub, out_stub)
/// pair per visited vertex. Length 1 is a loop, length 2 a parallel-edge
/// pair. The stored sequence is canonical: the lexicographic minimum over
/// all rotations of both traversal directions, so two representations of
/// the same cycle compare equal.
class Cycle {
 public:
  using Step = std::pair<std::uint32_t, std::uint32_t>;

  static Cycle from_steps(std::vector<Step> steps);

  const std::vector<Step>& steps() const { return steps_; }
  std::uint32_t length() const { return static_cast<std::uint32_t>(steps_.size()); }

  std::vector<std::uint32_t> vertices() const;
  /// Traversed edges as (min stub, max stub) pairs, in traversal order.
  std::vector<Step> edges() const;

  bool operator==(const Cycle& other) const { return steps_ == other.steps_; }
  std::strong_ordering operator<=>(const Cycle& other) const;

 private:
  explicit Cycle(std::vector<Step> steps) : steps_(std::move(steps)) {}
  std::vector<Step> steps_;
};

struct IntersectionProfile {
  std::uint32_t shared_edges = 0;  // j
  std::uint32_t components = 0;    // p
};

struct EnumerateOptions {
  double epsilon_prime = 0.02;
  bool allow_unsafe = false;  // lift the alpha cap
};

/// Length cap (1 - epsilon') * log2(vertex_count), floored, never below 4
/// so that census on toy graphs (K4 and friends) stays usable.
std::uint32_t alpha_cap(std::uint32_t vertex_count, double epsilon_prime = 0.02);

/// All distinct simple cycles of length <= max_len, each once in canonical
/// form, sorted by (length, steps). Throws std::invalid_argument naming the
/// alpha cutoff when max_len exceeds alpha_cap and allow_unsafe is not set.
std::vector<Cycle> enumerate_cycles(const RotationGraph& g, std::uint32_t max_len,
                                    const EnumerateOptions& opts = {});

/// j = number of shared edges, p = connected components of the shared
/// subgraph (shared vertices + shared edges). Throws on identical cycles.
IntersectionProfile intersection_profile(const Cycle& c1, const Cycle& c2);

/// True iff deleting all vertices of the given cycles (with incident
/// edges) leaves a remainder with two or more connected components.
/// An empty or connected remainder is not a disconnection.
bool is_disconnecting(const RotationGraph& g, std::span<const Cycle> cycles);

}  // namespace belyi
