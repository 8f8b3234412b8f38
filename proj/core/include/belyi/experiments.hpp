#pragma once

#include <cstdint>
#include <filesystem>
#include <string>
#include <utility>
#include <vector>

#include "belyi/rotation_graph.hpp"

namespace belyi {

/// Already-formatted JSON token (number, quoted string, or bool). Reports
/// format every number once, with 12 significant digits, so the JSON and
/// CSV renderings of a report carry identical number strings and reports
/// are byte-reproducible.
struct JsonValue {
  std::string raw;
};

JsonValue jnum(double v);
JsonValue jint(std::int64_t v);
JsonValue juint(std::uint64_t v);
JsonValue jstr(std::string_view s);
JsonValue jbool(bool b);
JsonValue jraw(std::string s);  // caller-supplied JSON (exact rationals etc.)

struct Assertion {
  std::string name;
  bool pass = false;
  std::string detail;
};

/// Seeded, parameterized record of one experiment. A report is a pure
/// function of (parameters, seed); the only environment-dependent field
/// is meta.generated_at, which honors SOURCE_DATE_EPOCH.
class ExperimentReport {
 public:
  std::string experiment;
  std::uint64_t seed = 0;
  std::vector<std::pair<std::string, JsonValue>> params;
  std::vector<std::pair<std::string, JsonValue>> summary;
  std::vector<std::string> sample_columns;
  std::vector<std::vector<JsonValue>> samples;
  std::vector<Assertion> assertions;

  bool all_pass() const;
  std::string to_json() const;
  std::string samples_csv() const;
  std::string summary_csv() const;

  /// Writes <dir>/<experiment>/<seed>-<params_hash>.json plus the two CSV
  /// extracts next to it; returns the JSON path.
  std::filesystem::path save(const std::filesystem::path& results_dir) const;
};

/// Directory reports are saved under: $BELYI_RESULTS_DIR or "results".
std::filesystem::path default_results_dir();

struct StatThresholds {
  double p_value = 0.01;
  double sigma = 3.0;
};

/// Per sampled (graph, orientation): the minimum geodesic length over
/// cycles of length <= max_len classified nontrivial. Samples with no
/// such cycle are reported censored, never dropped silently.
ExperimentReport empirical_systole(std::uint32_t n, std::uint32_t samples, Seed seed,
                                   std::uint32_t max_len, unsigned threads = 0);

/// Lengths of the k shortest pairwise-compatible nontrivial geodesics per
/// sample, compatibility meaning the pairwise intersection profile has
/// p <= 1 (two cycles may touch once).
ExperimentReport ordered_geodesics(std::uint32_t n, std::uint32_t samples, Seed seed,
                                   std::uint32_t max_len, std::uint32_t k,
                                   unsigned threads = 0);

/// Cycle counts X_i per sample for i <= i_max, chi-square fits against
/// Poisson(2^i / 2i), and pairwise independence checks.
ExperimentReport poisson_fit(std::uint32_t n, std::uint32_t samples, Seed seed,
                             std::uint32_t i_max, unsigned threads = 0,
                             StatThresholds thresholds = {});

enum class TraceStatsMode { exhaustive, sampled };

/// Trace mean/variance and mean geodesic length at a fixed word length,
/// exhaustively (word_len <= 22) or over sampled words. Asserts the
/// concavity bound mean_length <= 2 acosh(trace_mean / 2) and, in
/// exhaustive mode, exact agreement of the moments with the moment-vector
/// engine.
ExperimentReport trace_stats(std::uint32_t word_len, TraceStatsMode mode,
                             std::uint32_t samples, Seed seed, unsigned threads = 0);

/// Upper-tail-pooled chi-square p-value of a count histogram against
/// Poisson(lambda). histogram[v] = number of samples with count v.
double chi_square_poisson_pvalue(const std::vector<std::uint64_t>& histogram,
                                 double lambda, std::uint64_t total_samples);

}  // namespace belyi
