#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

namespace belyi {

/// Weight given to cycle length k in the systole series.
/// `printed` is (2^(k-2) - 1)/2^(k-2) * (1 - exp(-2^k / 2k));
/// `alternative` replaces the orientation factor by (2^k - 2)/2^k.
enum class WeightForm { printed, alternative };

/// How the per-length mean geodesic length E_k is taken in the lower
/// series: over all 2^k words (uniform words contribute length 0), or
/// conditioned on the 2^k - 2 non-uniform words.
enum class WordConditioning { all_words, exclude_uniform };

double cycle_probability(std::uint32_t k, WeightForm form = WeightForm::printed);

struct SystoleSeriesTerm {
  std::uint32_t k = 0;
  double probability = 0;   // p(k)
  double survival = 0;      // prod_{j<k} (1 - p(j))
  double length_term = 0;   // length factor for this k
  double weighted = 0;      // p * survival * length_term
};

struct SeriesResult {
  std::vector<SystoleSeriesTerm> terms;
  double value = 0;               // partial sum through k_max
  double remainder_estimate = 0;  // tail beyond k_max, summed to convergence
};

/// Upper series: sum over k of weight(k) * 2 acosh((3^k + 1)/2^(k+1)),
/// the length at the mean trace. Converges rapidly; ~3.085 at k_max 60.
SeriesResult systole_upper(std::uint32_t k_max = 60, WeightForm form = WeightForm::printed);

/// Lower series: the length factor is the exhaustive mean of
/// 2 acosh(trace/2) over turn words of length k. ~2.809 at k_max 20 with
/// the default policy. k_max capped at 24 (2^k sweep per term).
SeriesResult systole_lower(std::uint32_t k_max = 20, WeightForm form = WeightForm::printed,
                           WordConditioning cond = WordConditioning::all_words);

/// Exhaustive mean of 2 acosh(trace/2) over words of length k.
double mean_geodesic_length(std::uint32_t k, WordConditioning cond);

struct GrowthBound {
  enum class Method { paper_radical, enumerated };
  std::uint32_t block = 0;
  double factor = 1;
  Method method = Method::enumerated;
};

/// Certified per-step growth factor of the tracked diagonal entry.
/// Enumerates all 2^b words acting on an ordered pair; for each word the
/// tracked entry becomes p*x + q*y, whose guaranteed multiplier is p + q
/// when x > y and q when x < y. Both order states carry weight 1/2 in the
/// limit, so the bound is the geometric mean of the 2 * 2^b guaranteed
/// multipliers, taken per step. Blocks 5 and 15 give ~1.35502 and
/// ~1.43925. Throws above block 20.
GrowthBound growth_lower_bound(std::uint32_t block);

/// Doubling fractions of the block-2 table: 3 of 4 words at least double
/// the tracked entry when x > y, 1 of 4 when x < y.
std::pair<double, double> block2_doubling_fractions();

/// 2^(37/320) 3^(1/16) 5^(3/80) 7^(1/40) 11^(1/80) 13^(1/160) ~ 1.35502.
double paper_radical_value();

/// Asymptotic window (N ln 1.43925, N ln 1.5). Finite-length exhaustive
/// means l/N land near twice the window (l ~ 2 ln trace); the window is
/// the ln-trace scale. Reported, not asserted, against measurements.
std::pair<double, double> length_window(std::uint32_t n);

std::string series_json(const SeriesResult& r, const char* name);

}  // namespace belyi
