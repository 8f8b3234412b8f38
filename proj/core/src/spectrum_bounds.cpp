#include "belyi/spectrum_bounds.hpp"

#include <cmath>
#include <cstdio>
#include <stdexcept>
#include <string>

#include "belyi/word_sweep.hpp"

namespace belyi {

namespace {

std::string fmt12(double v) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.12g", v);
  return buf;
}

double mean_trace_length(std::uint32_t k) {
  // 2 acosh(trace_mean / 2) with trace_mean = (3^k + 1) / 2^k.
  const double half_mean = (std::pow(3.0, k) + 1.0) / std::pow(2.0, k + 1.0);
  return 2.0 * std::acosh(half_mean);
}

SystoleSeriesTerm make_term(std::uint32_t k, double survival, WeightForm form,
                            double length_term) {
  SystoleSeriesTerm t;
  t.k = k;
  t.probability = cycle_probability(k, form);
  t.survival = survival;
  t.length_term = length_term;
  t.weighted = t.probability * survival * length_term;
  return t;
}

}  // namespace

double cycle_probability(std::uint32_t k, WeightForm form) {
  if (k < 2) throw std::invalid_argument("cycle_probability: k must be >= 2");
  const double lambda = std::pow(2.0, k) / (2.0 * k);
  const double hit = 1.0 - std::exp(-lambda);
  const double orient = form == WeightForm::printed
                            ? (std::pow(2.0, k - 2.0) - 1.0) / std::pow(2.0, k - 2.0)
                            : (std::pow(2.0, k) - 2.0) / std::pow(2.0, k);
  return orient * hit;
}

SeriesResult systole_upper(std::uint32_t k_max, WeightForm form) {
  if (k_max < 3) throw std::invalid_argument("systole_upper: k_max must be >= 3");
  SeriesResult r;
  double survival = 1.0;
  for (std::uint32_t k = 2; k <= k_max; ++k) {
    const auto t = make_term(k, survival, form, mean_trace_length(k));
    r.terms.push_back(t);
    r.value += t.weighted;
    survival *= 1.0 - t.probability;
  }
  // Tail terms die off superexponentially (survival collapses); sum on
  // until they vanish to estimate the remainder.
  double tail = 0.0;
  for (std::uint32_t k = k_max + 1; k <= k_max + 80; ++k) {
    const double w = cycle_probability(k, form) * survival * mean_trace_length(k);
    tail += w;
    survival *= 1.0 - cycle_probability(k, form);
    if (w < 1e-18) break;
  }
  r.remainder_estimate = tail;
  return r;
}

double mean_geodesic_length(std::uint32_t k, WordConditioning cond) {
  if (k == 0 || k > 24)
    throw std::invalid_argument("mean_geodesic_length: word length must be in [1, 24]");
  double total = 0.0;
  std::uint64_t words = 0, unit_trace = 0;
  visit_word_products(k, [&](const TurnMatrixU64& m, std::uint32_t depth) {
    if (depth != k) return;
    ++words;
    const std::uint64_t tr = m.trace();
    if (tr == 2) {
      ++unit_trace;  // uniform word, length 0
      return;
    }
    total += 2.0 * std::acosh(static_cast<double>(tr) / 2.0);
  });
  if (cond == WordConditioning::exclude_uniform) {
    if (words - unit_trace == 0) return 0.0;
    return total / static_cast<double>(words - unit_trace);
  }
  return total / static_cast<double>(words);
}

SeriesResult systole_lower(std::uint32_t k_max, WeightForm form, WordConditioning cond) {
  if (k_max < 3 || k_max > 24)
    throw std::invalid_argument("systole_lower: k_max must be in [3, 24]");
  SeriesResult r;
  double survival = 1.0;
  for (std::uint32_t k = 2; k <= k_max; ++k) {
    const double length_term = mean_geodesic_length(k, cond);
    const auto t = make_term(k, survival, form, length_term);
    r.terms.push_back(t);
    r.value += t.weighted;
    survival *= 1.0 - t.probability;
  }
  r.remainder_estimate = 0.0;  // truncated by construction
  return r;
}

GrowthBound growth_lower_bound(std::uint32_t block) {
  if (block == 0 || block > 20)
    throw std::invalid_argument("growth_lower_bound: block must be in [1, 20]");
  const std::uint64_t words = std::uint64_t(1) << block;
  double log_sum = 0.0;
  for (std::uint64_t w = 0; w < words; ++w) {
    // Track the pair (x, y) symbolically; bit 0 appends the tracked entry
    // update y += x, bit 1 the sibling update x += y.
    std::uint64_t px = 1, qx = 0;  // x = px*x0 + qx*y0
    std::uint64_t py = 0, qy = 1;  // y = py*x0 + qy*y0
    for (std::uint32_t j = 0; j < block; ++j) {
      if ((w >> j) & 1u) {
        px += py;
        qx += qy;
      } else {
        py += px;
        qy += qx;
      }
    }
    const std::uint64_t m_gt = py + qy;  // guaranteed multiplier when x0 > y0
    const std::uint64_t m_lt = qy;       // guaranteed multiplier when x0 < y0
    log_sum += std::log(static_cast<double>(m_gt)) + std::log(static_cast<double>(m_lt));
  }
  GrowthBound b;
  b.block = block;
  b.method = GrowthBound::Method::enumerated;
  b.factor = std::exp(log_sum / (2.0 * static_cast<double>(words) * block));
  return b;
}

std::pair<double, double> block2_doubling_fractions() {
  std::uint32_t gt = 0, lt = 0;
  for (std::uint64_t w = 0; w < 4; ++w) {
    std::uint64_t px = 1, qx = 0, py = 0, qy = 1;
    for (std::uint32_t j = 0; j < 2; ++j) {
      if ((w >> j) & 1u) {
        px += py;
        qx += qy;
      } else {
        py += px;
        qy += qx;
      }
    }
    if (py + qy >= 2) ++gt;
    if (qy >= 2) ++lt;
  }
  return {gt / 4.0, lt / 4.0};
}

double paper_radical_value() {
  return std::pow(2.0, 37.0 / 320.0) * std::pow(3.0, 1.0 / 16.0) *
         std::pow(5.0, 3.0 / 80.0) * std::pow(7.0, 1.0 / 40.0) *
         std::pow(11.0, 1.0 / 80.0) * std::pow(13.0, 1.0 / 160.0);
}

std::pair<double, double> length_window(std::uint32_t n) {
  return {n * std::log(1.43925), n * std::log(1.5)};
}

std::string series_json(const SeriesResult& r, const char* name) {
  std::string out = "{\n  \"series\": \"";
  out += name;
  out += "\",\n  \"terms\": [\n";
  for (std::size_t i = 0; i < r.terms.size(); ++i) {
    const auto& t = r.terms[i];
    out += "    {\"k\": " + std::to_string(t.k) + ", \"p\": " + fmt12(t.probability) +
           ", \"survival\": " + fmt12(t.survival) +
           ", \"length_term\": " + fmt12(t.length_term) +
           ", \"weighted\": " + fmt12(t.weighted) + "}";
    out += (i + 1 < r.terms.size()) ? ",\n" : "\n";
  }
  out += "  ],\n  \"value\": " + fmt12(r.value) +
         ",\n  \"remainder_estimate\": " + fmt12(r.remainder_estimate) + "\n}\n";
  return out;
}

}  // namespace belyi
