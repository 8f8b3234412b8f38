#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

namespace belyi {

struct Seed {
  std::uint64_t value = 0;
};

/// Cubic multigraph with a cyclic order of the three stubs at each vertex.
///
/// Stubs are globally indexed: vertex v owns stubs 3v, 3v+1, 3v+2.
/// `partner` is a fixed-point-free involution pairing stubs into edges
/// (loops and parallel edges allowed). `rotation_next` maps each stub to
/// the next stub of the same vertex in that vertex's cyclic order.
/// Immutable after construction; safe to share across threads.
class RotationGraph {
 public:
  RotationGraph(std::uint32_t vertex_count, std::vector<std::uint32_t> partner,
                std::vector<std::uint32_t> rotation_next)
      : vertex_count_(vertex_count),
        partner_(std::move(partner)),
        rot_next_(std::move(rotation_next)) {}

  /// Configuration-model sample on 2n vertices: a uniform perfect matching
  /// of the 6n stubs (random shuffle, paired sequentially) plus one fair
  /// coin per vertex choosing between the two cyclic orders of its stubs.
  /// Deterministic given the seed.
  static RotationGraph sample(std::uint32_t n, Seed seed);

  std::uint32_t vertex_count() const { return vertex_count_; }
  std::uint32_t stub_count() const { return 3 * vertex_count_; }
  std::uint32_t edge_count() const { return (3 * vertex_count_) / 2; }

  std::uint32_t partner(std::uint32_t stub) const { return partner_[stub]; }
  std::uint32_t rotation_next(std::uint32_t stub) const { return rot_next_[stub]; }

  static std::uint32_t vertex_of(std::uint32_t stub) { return stub / 3; }

  /// Edges as stub pairs (a, partner(a)) with a < partner(a), ascending.
  std::vector<std::pair<std::uint32_t, std::uint32_t>> edges() const;

  /// {"vertex_count": V, "edges": [[a,b],...], "rotation": [[s0,s1,s2],...]}
  /// Canonical layout; serialize(parse(x)) == x byte for byte.
  std::string to_json() const;
  static RotationGraph from_json(const std::string& text);

  const std::vector<std::uint32_t>& partner_map() const { return partner_; }
  const std::vector<std::uint32_t>& rotation_map() const { return rot_next_; }

 private:
  std::uint32_t vertex_count_;
  std::vector<std::uint32_t> partner_;
  std::vector<std::uint32_t> rot_next_;
};

/// True iff the stored maps satisfy the structural invariants: 3 stubs per
/// vertex, partner a fixed-point-free involution, and the rotation at each
/// vertex a single 3-cycle of its own stubs.
bool degree_check(const RotationGraph& g);

/// Number of faces traced by the rotation system (orbits of
/// s -> rotation_next(partner(s)) on stubs).
std::uint32_t face_count(const RotationGraph& g);

/// Genus of the closed surface carrying the ribbon structure:
/// 2 - 2g = V - E + F.
std::uint32_t genus(const RotationGraph& g);

}  // namespace belyi
