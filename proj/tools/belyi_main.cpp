// belyi: random cubic rotation graphs, their short geodesics, and the
// spectral-statistics toolkit around them. One subcommand per operation;
// all numerics print with 12 significant digits, seeds default to a fixed
// constant so runs are reproducible by default.

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "belyi/cycle_census.hpp"
#include "belyi/experiments.hpp"
#include "belyi/rotation_graph.hpp"
#include "belyi/spectrum_bounds.hpp"
#include "belyi/stern_moments.hpp"
#include "belyi/turn_matrix.hpp"

namespace {

constexpr std::uint64_t kDefaultSeed = 1729;

std::string fmt12(double v) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.12g", v);
  return buf;
}

void write_or_print(const std::string& text, const std::string& out_path) {
  if (out_path.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream f(out_path);
  if (!f) throw std::runtime_error("cannot open output file " + out_path);
  f << text;
}

std::string series_csv(const belyi::SeriesResult& r) {
  std::string out = "k,p,survival,length_term,weighted\n";
  for (const auto& t : r.terms)
    out += std::to_string(t.k) + ',' + fmt12(t.probability) + ',' + fmt12(t.survival) +
           ',' + fmt12(t.length_term) + ',' + fmt12(t.weighted) + '\n';
  out += "value,," + fmt12(r.value) + ",remainder," + fmt12(r.remainder_estimate) + '\n';
  return out;
}

int emit_report(const belyi::ExperimentReport& rep, const std::string& format,
                const std::string& out_path, bool save_to_results) {
  if (save_to_results) {
    const auto path = rep.save(belyi::default_results_dir());
    std::cerr << "report: " << path.string() << "\n";
  }
  write_or_print(format == "csv" ? rep.summary_csv() : rep.to_json(), out_path);
  return rep.all_pass() ? 0 : 2;
}

struct CommonFlags {
  std::uint64_t seed = kDefaultSeed;
  std::string out;
  std::string format = "json";
  unsigned threads = 0;
  bool no_save = false;

  void attach(CLI::App* cmd) {
    cmd->add_option("--seed", seed, "RNG seed (default " + std::to_string(kDefaultSeed) + ")");
    cmd->add_option("--out", out, "write output to this file instead of stdout");
    cmd->add_option("--format", format, "output format")
        ->check(CLI::IsMember({"json", "csv"}));
    cmd->add_option("--threads", threads, "worker threads (0 = hardware)");
    cmd->add_flag("--no-save", no_save, "do not persist a report under the results dir");
  }
};

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"random cubic rotation graphs and their short-geodesic statistics"};
  app.require_subcommand(1);
  CommonFlags common;

  // gen-graph
  auto* gen = app.add_subcommand("gen-graph", "sample a rotation graph (2n vertices)");
  std::uint32_t gen_n = 1;
  gen->add_option("--n", gen_n, "half the vertex count")->required()->check(CLI::PositiveNumber);
  common.attach(gen);

  // cycles
  auto* cyc = app.add_subcommand("cycles", "enumerate simple cycles as CSV");
  std::uint32_t cyc_n = 1, cyc_max_len = 4;
  std::string cyc_in;
  bool cyc_unsafe = false;
  cyc->add_option("--n", cyc_n, "half the vertex count (sampled graph)");
  cyc->add_option("--in", cyc_in, "read a graph JSON file instead of sampling");
  cyc->add_option("--max-len", cyc_max_len, "maximum cycle length")->required();
  cyc->add_flag("--unsafe", cyc_unsafe, "override the alpha length cutoff");
  common.attach(cyc);

  // poisson-check
  auto* poi = app.add_subcommand("poisson-check", "cycle counts vs Poisson(2^i/2i)");
  std::uint32_t poi_n = 1000, poi_samples = 1000, poi_imax = 5;
  poi->add_option("--n", poi_n, "half the vertex count")->required();
  poi->add_option("--samples", poi_samples, "number of sampled graphs")->required();
  poi->add_option("--imax", poi_imax, "largest cycle length checked");
  common.attach(poi);

  // systole
  auto* sys = app.add_subcommand("systole", "empirical shortest nontrivial geodesic");
  std::uint32_t sys_n = 1000, sys_samples = 1000, sys_max_len = 10;
  sys->add_option("--n", sys_n, "half the vertex count")->required();
  sys->add_option("--samples", sys_samples, "number of sampled graphs")->required();
  sys->add_option("--max-len", sys_max_len, "cycle length cap");
  common.attach(sys);

  // ordered
  auto* ord = app.add_subcommand("ordered", "k shortest pairwise-compatible geodesics");
  std::uint32_t ord_n = 500, ord_samples = 200, ord_max_len = 9, ord_k = 3;
  ord->add_option("--n", ord_n, "half the vertex count")->required();
  ord->add_option("--samples", ord_samples, "number of sampled graphs")->required();
  ord->add_option("--max-len", ord_max_len, "cycle length cap");
  ord->add_option("--k", ord_k, "how many geodesics per sample");
  common.attach(ord);

  // bounds upper|lower
  auto* bounds = app.add_subcommand("bounds", "systole expectation series");
  bounds->require_subcommand(1);
  auto* upper = bounds->add_subcommand("upper", "upper series (length at mean trace)");
  auto* lower = bounds->add_subcommand("lower", "lower series (exhaustive mean length)");
  std::uint32_t up_kmax = 60, lo_kmax = 20;
  std::string up_weight = "printed", lo_weight = "printed", lo_cond = "all";
  upper->add_option("--kmax", up_kmax, "last series term");
  upper->add_option("--weight", up_weight, "orientation weight form")
      ->check(CLI::IsMember({"printed", "alt"}));
  lower->add_option("--kmax", lo_kmax, "last series term (<= 24)");
  lower->add_option("--weight", lo_weight, "orientation weight form")
      ->check(CLI::IsMember({"printed", "alt"}));
  lower->add_option("--condition", lo_cond, "word mean over all or non-uniform words")
      ->check(CLI::IsMember({"all", "exclude-uniform"}));
  common.attach(upper);
  common.attach(lower);

  // stern
  auto* stern = app.add_subcommand("stern", "interleaved-sums row / moment table");
  std::uint32_t stern_steps = 2;
  bool stern_table = false;
  stern->add_option("--steps", stern_steps, "row index")->required();
  stern->add_flag("--table", stern_table, "print the moment table instead of the row");
  common.attach(stern);

  // trace-stats
  auto* tr = app.add_subcommand("trace-stats", "trace moments and mean length at fixed word length");
  std::uint32_t tr_len = 10, tr_samples = 10000;
  std::string tr_mode = "exhaustive";
  tr->add_option("--len", tr_len, "word length")->required();
  tr->add_option("--mode", tr_mode, "exhaustive or sampled")
      ->check(CLI::IsMember({"exhaustive", "sampled"}));
  tr->add_option("--samples", tr_samples, "words to sample (sampled mode)");
  common.attach(tr);

  // growth
  auto* gr = app.add_subcommand("growth", "certified entry growth factor per step");
  std::uint32_t gr_block = 5;
  bool gr_radical = false;
  gr->add_option("--block", gr_block, "block size (<= 20)");
  gr->add_flag("--radical", gr_radical, "print the closed-form radical instead");
  common.attach(gr);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 1;  // usage errors are always exit 1
  }

  try {
    const belyi::Seed seed{common.seed};

    if (gen->parsed()) {
      const auto g = belyi::RotationGraph::sample(gen_n, seed);
      write_or_print(g.to_json(), common.out);
      std::cerr << "graph: 2n=" << g.vertex_count() << " edges=" << g.edge_count()
                << " genus=" << belyi::genus(g) << " seed=" << common.seed << "\n";
      return 0;
    }

    if (cyc->parsed()) {
      belyi::RotationGraph g = cyc_in.empty()
                                   ? belyi::RotationGraph::sample(cyc_n, seed)
                                   : [&] {
                                       std::ifstream f(cyc_in);
                                       if (!f) throw std::runtime_error("cannot read " + cyc_in);
                                       std::stringstream ss;
                                       ss << f.rdbuf();
                                       return belyi::RotationGraph::from_json(ss.str());
                                     }();
      const auto cycles =
          belyi::enumerate_cycles(g, cyc_max_len, {.allow_unsafe = cyc_unsafe});
      std::string out = "graph_id,length,stub_sequence,disconnecting\n";
      const std::string graph_id = cyc_in.empty() ? std::to_string(common.seed) : cyc_in;
      for (const auto& c : cycles) {
        std::string stubs;
        for (const auto& [in, go] : c.steps())
          stubs += (stubs.empty() ? "" : " ") + std::to_string(in) + ">" + std::to_string(go);
        const belyi::Cycle one[] = {c};
        out += graph_id + ',' + std::to_string(c.length()) + ',' + stubs + ',' +
               (belyi::is_disconnecting(g, one) ? "1" : "0") + '\n';
      }
      write_or_print(out, common.out);
      std::cerr << "cycles: " << cycles.size() << "\n";
      return 0;
    }

    if (poi->parsed()) {
      const auto rep = belyi::poisson_fit(poi_n, poi_samples, seed, poi_imax, common.threads);
      return emit_report(rep, common.format, common.out, !common.no_save);
    }

    if (sys->parsed()) {
      const auto rep =
          belyi::empirical_systole(sys_n, sys_samples, seed, sys_max_len, common.threads);
      for (const auto& [k, v] : rep.summary)
        if (k == "systole_mean") std::cerr << "systole_mean = " << v.raw << "\n";
      return emit_report(rep, common.format, common.out, !common.no_save);
    }

    if (ord->parsed()) {
      const auto rep = belyi::ordered_geodesics(ord_n, ord_samples, seed, ord_max_len,
                                                ord_k, common.threads);
      return emit_report(rep, common.format, common.out, !common.no_save);
    }

    if (upper->parsed() || lower->parsed()) {
      const auto weight = (upper->parsed() ? up_weight : lo_weight) == "printed"
                              ? belyi::WeightForm::printed
                              : belyi::WeightForm::alternative;
      belyi::SeriesResult r;
      const char* name;
      if (upper->parsed()) {
        r = belyi::systole_upper(up_kmax, weight);
        name = "systole_upper";
      } else {
        r = belyi::systole_lower(lo_kmax, weight,
                                 lo_cond == "all" ? belyi::WordConditioning::all_words
                                                  : belyi::WordConditioning::exclude_uniform);
        name = "systole_lower";
      }
      write_or_print(common.format == "csv" ? series_csv(r) : belyi::series_json(r, name),
                     common.out);
      std::cerr << name << " = " << fmt12(r.value) << "\n";
      return 0;
    }

    if (stern->parsed()) {
      if (stern_table) {
        write_or_print(belyi::stern_table_csv(stern_steps), common.out);
      } else {
        const auto row = belyi::stern_row(stern_steps, {1, 0});
        std::string out;
        for (std::size_t i = 0; i < row.values.size(); ++i)
          out += (i ? "," : "") + std::to_string(row.values[i]);
        out += '\n';
        write_or_print(out, common.out);
      }
      return 0;
    }

    if (tr->parsed()) {
      const auto mode = tr_mode == "exhaustive" ? belyi::TraceStatsMode::exhaustive
                                                : belyi::TraceStatsMode::sampled;
      const auto rep = belyi::trace_stats(tr_len, mode, tr_samples, seed, common.threads);
      return emit_report(rep, common.format, common.out, !common.no_save);
    }

    if (gr->parsed()) {
      double value;
      std::string label;
      if (gr_radical) {
        value = belyi::paper_radical_value();
        label = "radical";
      } else {
        const auto b = belyi::growth_lower_bound(gr_block);
        value = b.factor;
        label = "block " + std::to_string(b.block);
      }
      std::string out = common.format == "csv"
                            ? "method,value\n" + label + "," + fmt12(value) + "\n"
                            : "{\"method\": \"" + label + "\", \"value\": " + fmt12(value) +
                                  "}\n";
      write_or_print(out, common.out);
      std::cerr << "growth " << label << " = " << fmt12(value) << "\n";
      return 0;
    }
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 0;
}
