#include "belyi/turn_matrix.hpp"

#include <cassert>
#include <cmath>

namespace belyi {

bool TurnWord::uniform() const {
  for (const Turn t : letters)
    if (t != letters.front()) return false;
  return !letters.empty();
}

std::string TurnWord::str() const {
  std::string s;
  s.reserve(letters.size());
  for (const Turn t : letters) s.push_back(t == Turn::L ? 'L' : 'R');
  return s;
}

TurnWord TurnWord::parse(std::string_view s) {
  TurnWord w;
  w.letters.reserve(s.size());
  for (const char ch : s) {
    if (ch == 'L' || ch == 'l')
      w.letters.push_back(Turn::L);
    else if (ch == 'R' || ch == 'r')
      w.letters.push_back(Turn::R);
    else
      throw std::invalid_argument("turn word: letters must be L or R");
  }
  return w;
}

TurnWord cycle_to_word(const RotationGraph& g, const Cycle& c) {
  const auto& steps = c.steps();
  const std::uint32_t stubs = g.stub_count();
  TurnWord w;
  w.letters.reserve(steps.size());
  const std::size_t k = steps.size();
  for (std::size_t j = 0; j < k; ++j) {
    const auto& [in, out] = steps[j];
    if (in >= stubs || out >= stubs || in == out ||
        RotationGraph::vertex_of(in) != RotationGraph::vertex_of(out) ||
        g.partner(out) != steps[(j + 1) % k].first)
      throw std::invalid_argument("cycle_to_word: cycle is not a closed traversal of this graph");
    w.letters.push_back(out == g.rotation_next(in) ? Turn::L : Turn::R);
  }
  return w;
}

TurnMatrix word_to_matrix(const TurnWord& w) {
  TurnMatrix m;
  for (const Turn t : w.letters) m.right_multiply(t);
  return m;
}

double trace_to_length(double trace) {
  assert(trace >= 2.0);
  if (trace <= 2.0) return 0.0;
  return 2.0 * std::acosh(trace / 2.0);
}

double trace_to_length(const BigInt& trace) {
  assert(trace >= 2);
  if (trace <= 2) return 0.0;
  // acosh(x) ~ ln(2x) once x is large; beyond the double range work from
  // the bit length instead of converting.
  if (trace < BigInt(1) << 512) {
    const double t = trace.convert_to<double>();
    if (t / 2.0 < 1e8) return 2.0 * std::acosh(t / 2.0);
    return 2.0 * std::log(t);
  }
  const auto bits = boost::multiprecision::msb(trace);
  const double mant = (trace >> (bits > 52 ? bits - 52 : 0)).convert_to<double>();
  const double log_t =
      std::log(mant) + static_cast<double>(bits > 52 ? bits - 52 : 0) * std::log(2.0);
  return 2.0 * log_t;
}

double geodesic_length(const TurnMatrix& m) { return trace_to_length(m.trace()); }

GeodesicClass classify_geodesic(const RotationGraph& g, const Cycle& c) {
  if (cycle_to_word(g, c).uniform()) return GeodesicClass::cusp_trivial;
  const Cycle one[] = {c};
  if (is_disconnecting(g, one)) return GeodesicClass::disconnecting_trivial;
  return GeodesicClass::nontrivial;
}

const char* to_string(GeodesicClass c) {
  switch (c) {
    case GeodesicClass::nontrivial: return "nontrivial";
    case GeodesicClass::cusp_trivial: return "cusp_trivial";
    case GeodesicClass::disconnecting_trivial: return "disconnecting_trivial";
  }
  return "?";
}

}  // namespace belyi
