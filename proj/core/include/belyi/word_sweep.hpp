#pragma once

#include <cstdint>

#include "belyi/turn_matrix.hpp"

namespace belyi {

/// Pre-order walk of the binary turn-word tree up to max_len letters,
/// L-branch first. The visitor is called at every node of depth >= 1 with
/// the exact 64-bit product and its depth. Visit order is fixed, so
/// floating-point accumulations over the sweep are reproducible.
template <class Visitor>
void visit_word_products(std::uint32_t max_len, Visitor&& visit) {
  struct Walker {
    std::uint32_t max_len;
    Visitor& visit;
    void descend(const TurnMatrixU64& m, std::uint32_t depth) {
      for (Turn t : {Turn::L, Turn::R}) {
        TurnMatrixU64 child = m;
        child.right_multiply(t);
        visit(child, depth + 1);
        if (depth + 1 < max_len) descend(child, depth + 1);
      }
    }
  };
  if (max_len == 0) return;
  Walker w{max_len, visit};
  w.descend(TurnMatrixU64{}, 0);
}

/// Walk the subtree under one fixed prefix (the low `prefix_len` bits of
/// `prefix`, 0 = L, bit j = letter j). Visits the prefix node itself and
/// every descendant down to max_len; nodes shallower than the prefix
/// belong to several blocks and are left to the caller. Partitioning a
/// sweep into all 2^prefix_len blocks covers each deep node exactly once
/// regardless of how blocks are assigned to threads.
template <class Visitor>
void visit_word_products_under_prefix(std::uint32_t max_len, std::uint32_t prefix,
                                      std::uint32_t prefix_len, Visitor&& visit) {
  TurnMatrixU64 m;
  for (std::uint32_t j = 0; j < prefix_len; ++j)
    m.right_multiply(((prefix >> j) & 1u) ? Turn::R : Turn::L);
  if (prefix_len > 0) visit(m, prefix_len);
  if (prefix_len >= max_len) return;
  struct Walker {
    std::uint32_t max_len;
    Visitor& visit;
    void descend(const TurnMatrixU64& node, std::uint32_t depth) {
      for (Turn t : {Turn::L, Turn::R}) {
        TurnMatrixU64 child = node;
        child.right_multiply(t);
        visit(child, depth + 1);
        if (depth + 1 < max_len) descend(child, depth + 1);
      }
    }
  };
  Walker w{max_len, visit};
  w.descend(m, prefix_len);
}

}  // namespace belyi
