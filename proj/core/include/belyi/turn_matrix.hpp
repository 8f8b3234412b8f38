#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "belyi/cycle_census.hpp"
#include "belyi/rotation_graph.hpp"

namespace belyi {

using BigInt = boost::multiprecision::cpp_int;

enum class Turn : std::uint8_t { L = 0, R = 1 };

inline Turn flipped(Turn t) { return t == Turn::L ? Turn::R : Turn::L; }

/// L/R letter sequence of a closed path, one letter per visited vertex.
struct TurnWord {
  std::vector<Turn> letters;

  std::size_t size() const { return letters.size(); }
  bool uniform() const;               // all L or all R
  std::string str() const;            // e.g. "LRL"
  static TurnWord parse(std::string_view s);
};

/// Exact product of the generator matrices
///   L = [[1,1],[0,1]],  R = [[1,0],[1,1]]
/// in word order. Entries stay nonnegative and det == 1 throughout.
struct TurnMatrix {
  BigInt a = 1, b = 0, c = 0, d = 1;

  void right_multiply(Turn t) {
    if (t == Turn::L) {  // (a b; c d) -> (a a+b; c c+d)
      b += a;
      d += c;
    } else {  // -> (a+b b; c+d d)
      a += b;
      c += d;
    }
  }

  BigInt trace() const { return a + d; }
  BigInt det() const { return a * d - b * c; }
};

/// 64-bit fast path for exhaustive sweeps. Additions are overflow-checked
/// and throw std::overflow_error; safe for words up to ~88 letters.
struct TurnMatrixU64 {
  std::uint64_t a = 1, b = 0, c = 0, d = 1;

  void right_multiply(Turn t) {
    if (t == Turn::L) {
      if (__builtin_add_overflow(b, a, &b) | __builtin_add_overflow(d, c, &d))
        throw std::overflow_error("turn word product exceeds 64 bits");
    } else {
      if (__builtin_add_overflow(a, b, &a) | __builtin_add_overflow(c, d, &c))
        throw std::overflow_error("turn word product exceeds 64 bits");
    }
  }

  std::uint64_t trace() const { return a + d; }
};

/// Turn word of a cycle, read from the canonical stub sequence: letter L
/// when the out-stub is the immediate rotation successor of the in-stub,
/// R when it is the other exit. Throws if the cycle is not a closed
/// traversal of g.
TurnWord cycle_to_word(const RotationGraph& g, const Cycle& c);

TurnMatrix word_to_matrix(const TurnWord& w);

/// 2 cosh(l/2) = trace; returns l = 2 acosh(trace / 2), exactly 0 for
/// trace 2. Asserts trace >= 2 (true for every turn word product).
double geodesic_length(const TurnMatrix& m);

/// Same formula from an already-computed trace.
double trace_to_length(double trace);
double trace_to_length(const BigInt& trace);

enum class GeodesicClass {
  nontrivial,
  cusp_trivial,           // uniform word: the path circles a cusp
  disconnecting_trivial,  // cycle disconnects the graph
};

GeodesicClass classify_geodesic(const RotationGraph& g, const Cycle& c);

const char* to_string(GeodesicClass c);

}  // namespace belyi
