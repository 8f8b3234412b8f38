#include "belyi/experiments.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <ctime>
#include <exception>
#include <fstream>
#include <mutex>
#include <thread>

#include <boost/math/distributions/chi_squared.hpp>

#include "belyi/cycle_census.hpp"
#include "belyi/rng.hpp"
#include "belyi/spectrum_bounds.hpp"
#include "belyi/stern_moments.hpp"
#include "belyi/turn_matrix.hpp"
#include "belyi/word_sweep.hpp"

namespace belyi {

namespace {

constexpr const char* kVersion = "0.1.0";

std::string fmt12(double v) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.12g", v);
  return buf;
}

std::string escape(std::string_view s) {
  std::string out;
  out.reserve(s.size() + 2);
  for (const char c : s) {
    switch (c) {
      case '"': out += "\\\""; break;
      case '\\': out += "\\\\"; break;
      case '\n': out += "\\n"; break;
      case '\t': out += "\\t"; break;
      default:
        if (static_cast<unsigned char>(c) < 0x20) {
          char buf[8];
          std::snprintf(buf, sizeof(buf), "\\u%04x", c);
          out += buf;
        } else {
          out += c;
        }
    }
  }
  return out;
}

std::uint64_t fnv1a(std::string_view s) {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (const char c : s) {
    h ^= static_cast<unsigned char>(c);
    h *= 0x100000001b3ULL;
  }
  return h;
}

std::uint64_t generated_at() {
  if (const char* e = std::getenv("SOURCE_DATE_EPOCH"))
    return std::strtoull(e, nullptr, 10);
  return static_cast<std::uint64_t>(std::time(nullptr));
}

/// Runs fn(0..count-1) on a worker pool; fn must only write to its own
/// slot so results are identical for any thread count.
template <class Fn>
void run_indexed(std::uint32_t count, unsigned threads, Fn&& fn) {
  if (threads == 0) threads = std::thread::hardware_concurrency();
  if (threads == 0) threads = 1;
  threads = std::min<unsigned>(threads, std::max<std::uint32_t>(count, 1));
  if (threads <= 1) {
    for (std::uint32_t i = 0; i < count; ++i) fn(i);
    return;
  }
  std::atomic<std::uint32_t> next{0};
  std::exception_ptr error;
  std::mutex error_mutex;
  auto worker = [&] {
    for (;;) {
      const std::uint32_t i = next.fetch_add(1);
      if (i >= count) return;
      try {
        fn(i);
      } catch (...) {
        std::lock_guard<std::mutex> lock(error_mutex);
        if (!error) error = std::current_exception();
        next.store(count);
        return;
      }
    }
  };
  std::vector<std::thread> pool;
  pool.reserve(threads);
  for (unsigned t = 0; t < threads; ++t) pool.emplace_back(worker);
  for (auto& t : pool) t.join();
  if (error) std::rethrow_exception(error);
}

std::uint64_t trial_seed(Seed seed, std::uint32_t trial) {
  return SplitMix64(seed.value).split(trial).next();
}

struct Running {
  double sum = 0, sq = 0;
  std::uint64_t n = 0;
  void add(double x) {
    sum += x;
    sq += x * x;
    ++n;
  }
  double mean() const { return n ? sum / static_cast<double>(n) : 0.0; }
  double variance() const {
    if (n < 2) return 0.0;
    const double m = mean();
    return std::max(0.0, (sq - static_cast<double>(n) * m * m) / static_cast<double>(n - 1));
  }
  double stderr_mean() const {
    return n ? std::sqrt(variance() / static_cast<double>(n)) : 0.0;
  }
};

constexpr double kZ95 = 1.959963984540054;

}  // namespace

JsonValue jnum(double v) { return {fmt12(v)}; }
JsonValue jint(std::int64_t v) { return {std::to_string(v)}; }
JsonValue juint(std::uint64_t v) { return {std::to_string(v)}; }
JsonValue jstr(std::string_view s) { return {'"' + escape(s) + '"'}; }
JsonValue jbool(bool b) { return {b ? "true" : "false"}; }
JsonValue jraw(std::string s) { return {std::move(s)}; }

bool ExperimentReport::all_pass() const {
  return std::all_of(assertions.begin(), assertions.end(),
                     [](const Assertion& a) { return a.pass; });
}

std::string ExperimentReport::to_json() const {
  std::string out = "{\n  \"experiment\": \"" + escape(experiment) + "\",\n  \"params\": {";
  for (std::size_t i = 0; i < params.size(); ++i)
    out += std::string(i ? ", " : "") + "\"" + escape(params[i].first) +
           "\": " + params[i].second.raw;
  out += "},\n  \"seed\": " + std::to_string(seed) + ",\n  \"summary\": {\n";
  for (std::size_t i = 0; i < summary.size(); ++i)
    out += "    \"" + escape(summary[i].first) + "\": " + summary[i].second.raw +
           (i + 1 < summary.size() ? ",\n" : "\n");
  out += "  },\n  \"samples\": {\n    \"columns\": [";
  for (std::size_t i = 0; i < sample_columns.size(); ++i)
    out += std::string(i ? ", " : "") + "\"" + escape(sample_columns[i]) + "\"";
  out += "],\n    \"rows\": [";
  for (std::size_t r = 0; r < samples.size(); ++r) {
    out += r ? ",\n      [" : "\n      [";
    for (std::size_t c = 0; c < samples[r].size(); ++c)
      out += std::string(c ? ", " : "") + samples[r][c].raw;
    out += "]";
  }
  out += samples.empty() ? "]\n  },\n" : "\n    ]\n  },\n";
  out += "  \"assertions\": [";
  for (std::size_t i = 0; i < assertions.size(); ++i) {
    out += i ? ",\n    {" : "\n    {";
    out += "\"name\": \"" + escape(assertions[i].name) + "\", \"pass\": " +
           (assertions[i].pass ? "true" : "false") + ", \"detail\": \"" +
           escape(assertions[i].detail) + "\"}";
  }
  out += assertions.empty() ? "],\n" : "\n  ],\n";
  out += "  \"meta\": {\"version\": \"" + std::string(kVersion) +
         "\", \"generated_at\": " + std::to_string(generated_at()) + "}\n}\n";
  return out;
}

namespace {

std::string csv_cell(const JsonValue& v) {
  if (v.raw.size() >= 2 && v.raw.front() == '"' && v.raw.back() == '"')
    return v.raw.substr(1, v.raw.size() - 2);
  return v.raw;
}

}  // namespace

std::string ExperimentReport::samples_csv() const {
  std::string out;
  for (std::size_t i = 0; i < sample_columns.size(); ++i)
    out += (i ? "," : "") + sample_columns[i];
  out += '\n';
  for (const auto& row : samples) {
    for (std::size_t i = 0; i < row.size(); ++i) out += (i ? "," : "") + csv_cell(row[i]);
    out += '\n';
  }
  return out;
}

std::string ExperimentReport::summary_csv() const {
  std::string out = "key,value\n";
  for (const auto& [k, v] : summary) out += k + ',' + csv_cell(v) + '\n';
  return out;
}

std::filesystem::path ExperimentReport::save(const std::filesystem::path& results_dir) const {
  std::string params_blob;
  for (const auto& [k, v] : params) params_blob += k + '=' + v.raw + ';';
  char hash[32];
  std::snprintf(hash, sizeof(hash), "%016llx",
                static_cast<unsigned long long>(fnv1a(params_blob)));
  const auto dir = results_dir / experiment;
  std::filesystem::create_directories(dir);
  const std::string stem = std::to_string(seed) + "-" + hash;
  const auto json_path = dir / (stem + ".json");
  std::ofstream(json_path) << to_json();
  std::ofstream(dir / (stem + ".samples.csv")) << samples_csv();
  std::ofstream(dir / (stem + ".summary.csv")) << summary_csv();
  return json_path;
}

std::filesystem::path default_results_dir() {
  if (const char* e = std::getenv("BELYI_RESULTS_DIR")) return e;
  return "results";
}

// ---------------------------------------------------------------------------
// empirical_systole
// ---------------------------------------------------------------------------

ExperimentReport empirical_systole(std::uint32_t n, std::uint32_t samples, Seed seed,
                                   std::uint32_t max_len, unsigned threads) {
  struct Row {
    std::uint32_t genus = 0;
    std::uint32_t cycles = 0;
    std::uint32_t cusp = 0;
    bool censored = true;
    double systole = 0;
  };
  std::vector<Row> rows(samples);

  run_indexed(samples, threads, [&](std::uint32_t t) {
    const RotationGraph g = RotationGraph::sample(n, Seed{trial_seed(seed, t)});
    const auto cycles = enumerate_cycles(g, max_len);
    Row r;
    r.genus = genus(g);
    r.cycles = static_cast<std::uint32_t>(cycles.size());

    // Geodesic length grows with the trace, so evaluate candidates in
    // trace order and take the first that is not trivial; disconnection
    // checks (the costly part) run only until that first hit.
    std::vector<std::pair<double, const Cycle*>> candidates;
    for (const Cycle& c : cycles) {
      const TurnWord w = cycle_to_word(g, c);
      if (w.uniform()) {
        ++r.cusp;
        continue;
      }
      candidates.emplace_back(geodesic_length(word_to_matrix(w)), &c);
    }
    std::sort(candidates.begin(), candidates.end(),
              [](const auto& x, const auto& y) { return x.first < y.first; });
    for (const auto& [len, c] : candidates) {
      const Cycle one[] = {*c};
      if (!is_disconnecting(g, one)) {
        r.censored = false;
        r.systole = len;
        break;
      }
    }
    rows[t] = r;
  });

  ExperimentReport rep;
  rep.experiment = "empirical_systole";
  rep.seed = seed.value;
  rep.params = {{"n", juint(n)},
                {"vertex_count", juint(2 * n)},
                {"samples", juint(samples)},
                {"max_len", juint(max_len)}};
  rep.sample_columns = {"trial", "genus", "cycles", "cusp_trivial", "censored", "systole"};

  Running stat;
  std::uint64_t censored = 0;
  double lo = 0, hi = 0;
  for (std::uint32_t t = 0; t < samples; ++t) {
    const Row& r = rows[t];
    if (r.censored) {
      ++censored;
    } else {
      if (stat.n == 0) lo = hi = r.systole;
      lo = std::min(lo, r.systole);
      hi = std::max(hi, r.systole);
      stat.add(r.systole);
    }
    rep.samples.push_back({juint(t), juint(r.genus), juint(r.cycles), juint(r.cusp),
                           jbool(r.censored),
                           r.censored ? jraw("null") : jnum(r.systole)});
  }
  const double se = stat.stderr_mean();
  rep.summary = {
      {"uncensored", juint(stat.n)},
      {"censored", juint(censored)},
      {"censored_fraction", jnum(samples ? static_cast<double>(censored) / samples : 0.0)},
      {"systole_mean", jnum(stat.mean())},
      {"systole_stderr", jnum(se)},
      {"ci95_low", jnum(stat.mean() - kZ95 * se)},
      {"ci95_high", jnum(stat.mean() + kZ95 * se)},
      {"systole_min", jnum(lo)},
      {"systole_max", jnum(hi)},
  };
  return rep;
}

// ---------------------------------------------------------------------------
// ordered_geodesics
// ---------------------------------------------------------------------------

ExperimentReport ordered_geodesics(std::uint32_t n, std::uint32_t samples, Seed seed,
                                   std::uint32_t max_len, std::uint32_t k,
                                   unsigned threads) {
  if (k == 0 || k > 10)
    throw std::invalid_argument("ordered_geodesics: k must be in [1, 10]");
  struct Row {
    std::uint32_t genus = 0;
    std::uint32_t cycles = 0;
    std::uint32_t nontrivial = 0;
    std::vector<double> lengths;  // selected, ascending
    bool compatible = true;
  };
  std::vector<Row> rows(samples);

  run_indexed(samples, threads, [&](std::uint32_t t) {
    const RotationGraph g = RotationGraph::sample(n, Seed{trial_seed(seed, t)});
    const auto cycles = enumerate_cycles(g, max_len);
    Row r;
    r.genus = genus(g);
    r.cycles = static_cast<std::uint32_t>(cycles.size());

    std::vector<std::pair<double, const Cycle*>> nontrivial;
    for (const Cycle& c : cycles) {
      if (classify_geodesic(g, c) != GeodesicClass::nontrivial) continue;
      nontrivial.emplace_back(geodesic_length(word_to_matrix(cycle_to_word(g, c))), &c);
    }
    r.nontrivial = static_cast<std::uint32_t>(nontrivial.size());
    std::sort(nontrivial.begin(), nontrivial.end(), [](const auto& x, const auto& y) {
      return x.first != y.first ? x.first < y.first : *x.second < *y.second;
    });

    std::vector<const Cycle*> selected;
    for (const auto& [len, c] : nontrivial) {
      if (selected.size() >= k) break;
      const bool ok = std::all_of(selected.begin(), selected.end(), [&](const Cycle* s) {
        return intersection_profile(*c, *s).components <= 1;
      });
      if (ok) {
        selected.push_back(c);
        r.lengths.push_back(len);
      }
    }
    for (std::size_t i = 0; i + 1 < selected.size(); ++i)
      for (std::size_t j = i + 1; j < selected.size(); ++j)
        if (intersection_profile(*selected[i], *selected[j]).components > 1)
          r.compatible = false;
    rows[t] = r;
  });

  ExperimentReport rep;
  rep.experiment = "ordered_geodesics";
  rep.seed = seed.value;
  rep.params = {{"n", juint(n)},
                {"vertex_count", juint(2 * n)},
                {"samples", juint(samples)},
                {"max_len", juint(max_len)},
                {"k", juint(k)}};
  rep.sample_columns = {"trial", "genus", "cycles", "nontrivial"};
  for (std::uint32_t i = 1; i <= k; ++i) rep.sample_columns.push_back("l" + std::to_string(i));

  std::vector<Running> stats(k);
  bool all_compatible = true;
  for (std::uint32_t t = 0; t < samples; ++t) {
    const Row& r = rows[t];
    std::vector<JsonValue> row{juint(t), juint(r.genus), juint(r.cycles),
                               juint(r.nontrivial)};
    for (std::uint32_t i = 0; i < k; ++i) {
      if (i < r.lengths.size()) {
        stats[i].add(r.lengths[i]);
        row.push_back(jnum(r.lengths[i]));
      } else {
        row.push_back(jraw("null"));
      }
    }
    all_compatible = all_compatible && r.compatible;
    rep.samples.push_back(std::move(row));
  }
  for (std::uint32_t i = 0; i < k; ++i) {
    const std::string tag = "l" + std::to_string(i + 1);
    rep.summary.emplace_back(tag + "_count", juint(stats[i].n));
    rep.summary.emplace_back(tag + "_mean", jnum(stats[i].mean()));
    rep.summary.emplace_back(tag + "_stderr", jnum(stats[i].stderr_mean()));
  }
  rep.assertions.push_back(
      {"selected_pairwise_compatible", all_compatible, "pairwise intersection components <= 1"});
  return rep;
}

// ---------------------------------------------------------------------------
// poisson_fit
// ---------------------------------------------------------------------------

double chi_square_poisson_pvalue(const std::vector<std::uint64_t>& histogram,
                                 double lambda, std::uint64_t total_samples) {
  // Pool adjacent cells until each bin's expected count reaches 5; an
  // under-5 leftover (including the upper tail mass) merges into the last
  // completed bin.
  double chi2 = 0;
  std::uint32_t bins = 0;
  double prev_exp = 0, prev_obs = 0;
  double cur_exp = 0, cur_obs = 0;
  auto flush_prev = [&] {
    if (prev_exp <= 0) return;
    chi2 += (prev_obs - prev_exp) * (prev_obs - prev_exp) / prev_exp;
    ++bins;
  };
  double pmf = std::exp(-lambda);
  double cdf = 0;
  for (std::size_t v = 0; v <= histogram.size(); ++v) {
    if (v < histogram.size()) {
      cur_exp += static_cast<double>(total_samples) * pmf;
      cur_obs += static_cast<double>(histogram[v]);
      cdf += pmf;
      pmf *= lambda / static_cast<double>(v + 1);
    } else {  // everything above the largest observed count
      cur_exp += static_cast<double>(total_samples) * std::max(0.0, 1.0 - cdf);
    }
    if (cur_exp >= 5.0) {
      flush_prev();
      prev_exp = cur_exp;
      prev_obs = cur_obs;
      cur_exp = cur_obs = 0;
    }
  }
  prev_exp += cur_exp;
  prev_obs += cur_obs;
  flush_prev();
  if (bins < 2) return 1.0;
  boost::math::chi_squared dist(bins - 1);
  return boost::math::cdf(boost::math::complement(dist, chi2));
}

ExperimentReport poisson_fit(std::uint32_t n, std::uint32_t samples, Seed seed,
                             std::uint32_t i_max, unsigned threads,
                             StatThresholds thresholds) {
  if (i_max == 0) throw std::invalid_argument("poisson_fit: i_max must be >= 1");
  std::vector<std::vector<std::uint32_t>> counts(samples);

  run_indexed(samples, threads, [&](std::uint32_t t) {
    const RotationGraph g = RotationGraph::sample(n, Seed{trial_seed(seed, t)});
    const auto cycles = enumerate_cycles(g, i_max);
    std::vector<std::uint32_t> x(i_max + 1, 0);
    for (const Cycle& c : cycles) ++x[c.length()];
    counts[t] = std::move(x);
  });

  ExperimentReport rep;
  rep.experiment = "poisson_fit";
  rep.seed = seed.value;
  rep.params = {{"n", juint(n)},
                {"vertex_count", juint(2 * n)},
                {"samples", juint(samples)},
                {"i_max", juint(i_max)}};
  rep.sample_columns = {"trial"};
  for (std::uint32_t i = 1; i <= i_max; ++i)
    rep.sample_columns.push_back("x" + std::to_string(i));
  for (std::uint32_t t = 0; t < samples; ++t) {
    std::vector<JsonValue> row{juint(t)};
    for (std::uint32_t i = 1; i <= i_max; ++i) row.push_back(juint(counts[t][i]));
    rep.samples.push_back(std::move(row));
  }

  for (std::uint32_t i = 1; i <= i_max; ++i) {
    const double lambda = std::pow(2.0, i) / (2.0 * i);
    Running stat;
    std::vector<std::uint64_t> hist;
    for (std::uint32_t t = 0; t < samples; ++t) {
      const std::uint32_t x = counts[t][i];
      if (x >= hist.size()) hist.resize(x + 1, 0);
      ++hist[x];
      stat.add(x);
    }
    const double p = chi_square_poisson_pvalue(hist, lambda, samples);
    const double sigma = std::sqrt(lambda / static_cast<double>(samples));
    const std::string tag = "x" + std::to_string(i);
    rep.summary.emplace_back(tag + "_mean", jnum(stat.mean()));
    rep.summary.emplace_back(tag + "_lambda", jnum(lambda));
    rep.summary.emplace_back(tag + "_chi2_pvalue", jnum(p));
    rep.assertions.push_back({tag + "_poisson_fit", p > thresholds.p_value,
                              "chi-square p=" + fmt12(p) + " vs threshold " +
                                  fmt12(thresholds.p_value)});
    rep.assertions.push_back(
        {tag + "_mean_within_3sigma", std::abs(stat.mean() - lambda) <= thresholds.sigma * sigma,
         "mean=" + fmt12(stat.mean()) + " lambda=" + fmt12(lambda) +
             " sigma=" + fmt12(sigma)});
  }

  for (std::uint32_t i = 1; i <= i_max; ++i) {
    for (std::uint32_t j = i + 1; j <= i_max; ++j) {
      double mi = 0, mj = 0;
      for (std::uint32_t t = 0; t < samples; ++t) {
        mi += counts[t][i];
        mj += counts[t][j];
      }
      mi /= samples;
      mj /= samples;
      double cov = 0, vi = 0, vj = 0;
      for (std::uint32_t t = 0; t < samples; ++t) {
        const double di = counts[t][i] - mi;
        const double dj = counts[t][j] - mj;
        cov += di * dj;
        vi += di * di;
        vj += dj * dj;
      }
      cov /= samples - 1;
      vi /= samples - 1;
      vj /= samples - 1;
      const double se = std::sqrt((vi * vj + cov * cov) / samples);
      const std::string tag = "cov_x" + std::to_string(i) + "_x" + std::to_string(j);
      rep.summary.emplace_back(tag, jnum(cov));
      rep.assertions.push_back({tag + "_within_3sigma", std::abs(cov) <= thresholds.sigma * se,
                                "cov=" + fmt12(cov) + " se=" + fmt12(se)});
    }
  }
  return rep;
}

// ---------------------------------------------------------------------------
// trace_stats
// ---------------------------------------------------------------------------

ExperimentReport trace_stats(std::uint32_t word_len, TraceStatsMode mode,
                             std::uint32_t samples, Seed seed, unsigned threads) {
  ExperimentReport rep;
  rep.experiment = "trace_stats";
  rep.seed = seed.value;

  const auto window = length_window(word_len);

  if (mode == TraceStatsMode::exhaustive) {
    if (word_len == 0 || word_len > 22)
      throw std::invalid_argument("trace_stats: exhaustive mode requires word_len in [1, 22]");
    rep.params = {{"word_len", juint(word_len)},
                  {"mode", jstr("exhaustive")},
                  {"words", juint(std::uint64_t(1) << word_len)}};

    const std::uint32_t prefix_len = std::min<std::uint32_t>(6, word_len);
    const std::uint32_t blocks = 1u << prefix_len;
    struct Block {
      unsigned __int128 trace_sum = 0;
      unsigned __int128 trace_sq_sum = 0;
      double length_sum = 0;
    };
    std::vector<Block> partial(blocks);
    run_indexed(blocks, threads, [&](std::uint32_t b) {
      Block acc;
      visit_word_products_under_prefix(word_len, b, prefix_len,
                                       [&](const TurnMatrixU64& m, std::uint32_t depth) {
                                         if (depth != word_len) return;
                                         const std::uint64_t tr = m.trace();
                                         acc.trace_sum += tr;
                                         acc.trace_sq_sum +=
                                             static_cast<unsigned __int128>(tr) * tr;
                                         if (tr > 2)
                                           acc.length_sum +=
                                               2.0 * std::acosh(static_cast<double>(tr) / 2.0);
                                       });
      partial[b] = acc;
    });
    BigInt trace_sum = 0, trace_sq_sum = 0;
    double length_sum = 0;
    for (const Block& b : partial) {
      trace_sum += BigInt(static_cast<std::uint64_t>(b.trace_sum >> 64)) << 64 |
                   BigInt(static_cast<std::uint64_t>(b.trace_sum));
      trace_sq_sum += BigInt(static_cast<std::uint64_t>(b.trace_sq_sum >> 64)) << 64 |
                      BigInt(static_cast<std::uint64_t>(b.trace_sq_sum));
      length_sum += b.length_sum;
    }

    const BigInt words = BigInt(1) << word_len;
    const Rational mean_tr(trace_sum, words);
    const Rational var_tr = Rational(trace_sq_sum, words) - mean_tr * mean_tr;
    const double mean_len = length_sum / words.convert_to<double>();
    const double jensen = trace_to_length(mean_tr.convert_to<double>());

    const MomentVector engine = moments_at(word_len);
    const bool engine_match =
        engine.trace_sum() == trace_sum && engine.trace_square_sum() == trace_sq_sum;
    const bool formula_match = mean_tr == trace_mean(word_len);

    rep.summary = {
        {"trace_mean", jnum(mean_tr.convert_to<double>())},
        {"trace_mean_exact", jstr(mean_tr.str())},
        {"trace_variance", jnum(var_tr.convert_to<double>())},
        {"mean_length", jnum(mean_len)},
        {"mean_length_per_step", jnum(mean_len / word_len)},
        {"half_mean_length_per_step", jnum(mean_len / (2.0 * word_len))},
        {"window_low_per_step", jnum(window.first / word_len)},
        {"window_high_per_step", jnum(window.second / word_len)},
        {"jensen_upper_bound", jnum(jensen)},
    };
    rep.assertions.push_back({"mean_length_le_jensen",
                              mean_len <= jensen * (1.0 + 1e-12),
                              "E(l)=" + fmt12(mean_len) + " bound=" + fmt12(jensen)});
    rep.assertions.push_back({"moments_match_engine", engine_match,
                              "exhaustive trace sums equal the moment-vector engine"});
    rep.assertions.push_back({"trace_mean_closed_form", formula_match,
                              "mean trace equals (3^N + 1)/2^N exactly"});
    return rep;
  }

  if (word_len == 0) throw std::invalid_argument("trace_stats: word_len must be >= 1");
  rep.params = {{"word_len", juint(word_len)},
                {"mode", jstr("sampled")},
                {"samples", juint(samples)}};
  struct Row {
    double trace = 0;
    double length = 0;
  };
  std::vector<Row> rows(samples);
  run_indexed(samples, threads, [&](std::uint32_t t) {
    SplitMix64 rng(trial_seed(seed, t));
    TurnMatrix m;
    for (std::uint32_t j = 0; j < word_len; ++j)
      m.right_multiply(rng.coin() ? Turn::R : Turn::L);
    rows[t].trace = m.trace().convert_to<double>();
    rows[t].length = geodesic_length(m);
  });
  rep.sample_columns = {"trial", "trace", "length"};
  Running tr, len;
  for (std::uint32_t t = 0; t < samples; ++t) {
    tr.add(rows[t].trace);
    len.add(rows[t].length);
    rep.samples.push_back({juint(t), jnum(rows[t].trace), jnum(rows[t].length)});
  }
  const double jensen = trace_to_length(tr.mean());
  rep.summary = {
      {"trace_mean", jnum(tr.mean())},
      {"trace_variance", jnum(tr.variance())},
      {"mean_length", jnum(len.mean())},
      {"mean_length_per_step", jnum(len.mean() / word_len)},
      {"half_mean_length_per_step", jnum(len.mean() / (2.0 * word_len))},
      {"window_low_per_step", jnum(window.first / word_len)},
      {"window_high_per_step", jnum(window.second / word_len)},
      {"jensen_upper_bound", jnum(jensen)},
  };
  rep.assertions.push_back({"mean_length_le_jensen", len.mean() <= jensen * (1.0 + 1e-12),
                            "E(l)=" + fmt12(len.mean()) + " bound=" + fmt12(jensen)});
  return rep;
}

}  // namespace belyi
