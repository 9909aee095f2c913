// Copyright 2026 The goowe Authors
// SPDX-License-Identifier: Apache-2.0

#include "goowe/cli/commands.hpp"

#include <CLI11.hpp>
#include <algorithm>
#include <atomic>
#include <chrono>
#include <cstdlib>
#include <ctime>
#include <fstream>
#include <json.hpp>
#include <mutex>
#include <optional>
#include <thread>

#include "goowe/cli/descriptors.hpp"
#include "goowe/core/hash.hpp"
#include "goowe/eval/prequential.hpp"
#include "goowe/eval/stats.hpp"
#include "goowe/streams/factory.hpp"
#include "goowe/streams/readers.hpp"

namespace goowe {

namespace fs = std::filesystem;
using nlohmann::json;

fs::path default_output_dir() {
  if (const char* env = std::getenv("GOOWE_OUTPUT_DIR"); env != nullptr && *env != '\0') return env;
  return "goowe-out";
}

namespace {

std::string utc_timestamp() {
  const std::time_t t = std::time(nullptr);
  std::tm tm{};
  gmtime_r(&t, &tm);
  char buf[32];
  std::strftime(buf, sizeof buf, "%Y-%m-%dT%H:%M:%SZ", &tm);
  return buf;
}

std::ofstream open_out(const fs::path& path) {
  if (path.has_parent_path()) fs::create_directories(path.parent_path());
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error("cannot write " + path.string());
  return out;
}

// ---------------------------------------------------------------------------

struct RunRequest {
  std::string ensemble;
  std::string stream;
  std::uint64_t seed = 1;
  std::uint64_t max_instances = 0;
  std::uint64_t report_interval = 500;
};

struct RunSummary {
  std::string hash;
  double accuracy = 0.0;
  double mean_memory_mb = 0.0;
  double mean_cs_per_1k = 0.0;
};

json summary_json(const RunRequest& req, const RunTrace& trace, const std::string& hash) {
  json j;
  j["ensemble"] = req.ensemble;
  j["stream"] = req.stream;
  j["seed"] = req.seed;
  j["config_hash"] = hash;
  j["instances"] = trace.instances;
  j["correct"] = trace.correct;
  j["accuracy"] = trace.accuracy();
  j["final_memory_mb"] = trace.records.empty() ? 0.0 : trace.records.back().memory_mb;
  j["mean_memory_mb"] = trace.mean_memory_mb();
  j["mean_cs_per_1k"] = trace.mean_cs_per_1k();
  j["metadata"] = {{"wall_seconds", trace.wall_seconds}, {"finished", utc_timestamp()}};
  return j;
}

RunSummary execute_run(const RunRequest& req, const fs::path& base) {
  auto stream = open_stream(req.stream, req.seed);
  SpecString es;
  try {
    es = SpecString::parse(req.ensemble);
  } catch (const ParseError& e) {
    throw UsageError(e.what());
  }
  auto ensemble = make_ensemble(es, stream->schema());
  EvalOptions opt;
  opt.max_instances = req.max_instances;
  opt.report_interval = req.report_interval;
  RunTrace trace = test_then_train(*ensemble, *stream, opt);
  trace.stream = req.stream;
  trace.seed = req.seed;
  const std::string hash = config_hash(req.ensemble, req.stream, req.seed, req.max_instances, req.report_interval);
  {
    auto out = open_out(base.string() + ".trace.csv");
    out << "# config_hash=" << hash << '\n';
    write_trace_csv(out, trace);
  }
  {
    auto out = open_out(base.string() + ".timing.csv");
    out << "# config_hash=" << hash << '\n';
    write_timing_csv(out, trace);
  }
  auto out = open_out(base.string() + ".json");
  out << summary_json(req, trace, hash).dump(2) << '\n';
  return {hash, trace.accuracy(), trace.mean_memory_mb(), trace.mean_cs_per_1k()};
}

std::optional<RunSummary> load_summary(const fs::path& base, const std::string& hash) {
  std::ifstream in(base.string() + ".json");
  if (!in || !fs::exists(base.string() + ".trace.csv")) return std::nullopt;
  try {
    json j;
    in >> j;
    if (j.at("config_hash").get<std::string>() != hash) return std::nullopt;
    return RunSummary{hash, j.at("accuracy").get<double>(), j.at("mean_memory_mb").get<double>(),
                      j.at("mean_cs_per_1k").get<double>()};
  } catch (const json::exception&) {
    return std::nullopt;
  }
}

// ---------------------------------------------------------------------------

int cmd_generate(const std::string& stream_spec, std::uint64_t count, std::uint64_t seed, fs::path out_path,
                 std::ostream& out) {
  auto stream = open_stream(stream_spec, seed);
  if (out_path.empty()) out_path = default_output_dir() / (SpecString::parse(stream_spec).name + ".csv");
  auto file = open_out(out_path);
  CsvWriter writer(file, stream->schema());
  std::uint64_t written = 0;
  while (written < count) {
    auto inst = stream->next();
    if (!inst) break;
    writer.write(*inst);
    ++written;
  }
  file.close();
  write_sidecar(sidecar_path(out_path), stream->schema());
  out << "wrote " << written << " instances to " << out_path.string() << '\n';
  return kExitOk;
}

int cmd_run(RunRequest req, const fs::path& out_dir, std::ostream& out) {
  const RunSummary s = execute_run(req, out_dir / "run");
  out << "ensemble " << req.ensemble << "  stream " << req.stream << "  seed " << req.seed << '\n';
  char buf[160];
  std::snprintf(buf, sizeof buf, "accuracy %.3f%%  memory %.4f MB  time %.3f CS/1k\n", s.accuracy, s.mean_memory_mb,
                s.mean_cs_per_1k);
  out << buf;
  out << "outputs in " << out_dir.string() << " (config " << s.hash << ")\n";
  return kExitOk;
}

void print_friedman(const ResultMatrix& m, const FriedmanResult& f, double alpha, std::ostream& out) {
  out << "Friedman test: " << f.k << " algorithms, " << f.n << " datasets\n";
  out << "average ranks (higher is better):\n";
  for (std::size_t j = 0; j < f.k; ++j) {
    char buf[128];
    std::snprintf(buf, sizeof buf, "  %-16s %.3f\n", m.algorithms[j].c_str(), f.mean_ranks[j]);
    out << buf;
  }
  char buf[256];
  std::snprintf(buf, sizeof buf, "chi-square = %.4f (df %zu), p = %.3g\n", f.chi_square, f.df, f.p_chi_square);
  out << buf;
  std::snprintf(buf, sizeof buf, "F_F = %.4f (df %zu, %zu), p = %.3g\n", f.f_statistic, f.df1, f.df2, f.p_f);
  out << buf;
  std::snprintf(buf, sizeof buf, "Nemenyi CD (alpha %.2g) = %.3f\n", alpha, nemenyi_cd(f.k, f.n, alpha));
  out << buf;
}

int cmd_stats(const std::string& test, const fs::path& matrix_path, const std::string& a, const std::string& b,
              bool lower_is_better, double alpha, const fs::path& json_path, std::ostream& out) {
  const ResultMatrix m = ResultMatrix::read_csv(matrix_path);
  json j;
  if (test == "friedman") {
    const FriedmanResult f = friedman(m, !lower_is_better);
    print_friedman(m, f, alpha, out);
    j["test"] = "friedman";
    for (std::size_t i = 0; i < f.k; ++i) j["mean_ranks"][m.algorithms[i]] = f.mean_ranks[i];
    j["chi_square"] = f.chi_square;
    j["p_chi_square"] = f.p_chi_square;
    j["f_statistic"] = f.f_statistic;
    j["p_f"] = f.p_f;
    j["df1"] = f.df1;
    j["df2"] = f.df2;
    j["nemenyi_cd"] = nemenyi_cd(f.k, f.n, alpha);
  } else if (test == "wilcoxon") {
    if (a.empty() || b.empty()) throw UsageError("wilcoxon needs --a and --b column names");
    std::size_t ia, ib;
    try {
      ia = m.column(a);
      ib = m.column(b);
    } catch (const ParseError& e) {
      throw UsageError(e.what());
    }
    const WilcoxonResult w = wilcoxon_signed_rank(m.column_values(ia), m.column_values(ib));
    char buf[256];
    std::snprintf(buf, sizeof buf,
                  "Wilcoxon signed-rank %s vs %s: n = %zu, positive = %zu, negative = %zu, ties dropped = %zu\n",
                  a.c_str(), b.c_str(), w.n, w.positive, w.negative, w.zeros);
    out << buf;
    std::snprintf(buf, sizeof buf, "W+ = %.1f, W- = %.1f, %s p = %.4f (two-tailed)\n", w.w_plus, w.w_minus,
                  w.exact ? "exact" : "normal approx.", w.p);
    out << buf;
    j = {{"test", "wilcoxon"}, {"a", a}, {"b", b}, {"n", w.n}, {"positive", w.positive}, {"negative", w.negative},
         {"w_plus", w.w_plus}, {"w_minus", w.w_minus}, {"z", w.z}, {"p", w.p}, {"exact", w.exact}};
  } else {
    throw UsageError("unknown test '" + test + "' (valid: friedman, wilcoxon)");
  }
  if (!json_path.empty()) open_out(json_path) << j.dump(2) << '\n';
  return kExitOk;
}

std::vector<SuiteEntry> entries_from(const std::vector<std::string>& specs) {
  std::vector<SuiteEntry> out;
  for (const auto& s : specs) out.push_back({display_name(s), s});
  return out;
}

}  // namespace

// ---------------------------------------------------------------------------

SuiteSpec read_suite(const fs::path& path) {
  std::ifstream in(path);
  if (!in) throw UsageError("cannot open suite descriptor " + path.string());
  json j;
  try {
    in >> j;
  } catch (const json::exception& e) {
    throw UsageError("suite descriptor " + path.string() + ": " + e.what());
  }
  SuiteSpec s;
  auto entries = [&](const char* key) {
    std::vector<SuiteEntry> out;
    if (!j.contains(key) || !j[key].is_array() || j[key].empty())
      throw UsageError(std::string("suite descriptor needs a non-empty '") + key + "' list");
    for (const auto& e : j[key]) {
      if (e.is_string()) {
        out.push_back({display_name(e.get<std::string>()), e.get<std::string>()});
      } else if (e.is_object() && e.contains("spec")) {
        const std::string spec = e["spec"].get<std::string>();
        out.push_back({display_name(e.value("name", spec)), spec});
      } else {
        throw UsageError(std::string("entries of '") + key + "' must be strings or {name, spec}");
      }
    }
    return out;
  };
  try {
    s.ensembles = entries("ensembles");
    s.streams = entries("streams");
    if (j.contains("seeds")) s.seeds = j["seeds"].get<std::vector<std::uint64_t>>();
    s.max_instances = j.value("max_instances", s.max_instances);
    s.report_interval = j.value("report_interval", s.report_interval);
  } catch (const json::exception& e) {
    throw UsageError("suite descriptor " + path.string() + ": " + e.what());
  }
  if (s.seeds.empty()) throw UsageError("suite needs at least one seed");
  return s;
}

SuiteOutcome run_suite(const SuiteSpec& suite, const fs::path& out_dir, std::size_t threads, bool resume,
                       std::ostream& log) {
  struct Cell {
    std::size_t e, s, k;
    RunRequest req;
    fs::path base;
    std::optional<RunSummary> result;
    std::string error;
    bool executed = false;
  };
  // Validate descriptors up front so a typo is a usage error, not a failed cell.
  for (const auto& e : suite.ensembles) {
    try {
      make_ensemble(SpecString::parse(e.spec), StreamSchema::all_numeric(1, 2));
    } catch (const ParseError& err) {
      throw UsageError(err.what());
    }
  }
  const auto kinds = stream_kinds();
  for (const auto& s : suite.streams) {
    std::string name;
    try {
      name = SpecString::parse(s.spec).name;
    } catch (const ParseError& err) {
      throw UsageError(err.what());
    }
    if (std::find(kinds.begin(), kinds.end(), name) == kinds.end())
      throw UsageError("unknown stream kind '" + name + "' in " + s.spec);
  }
  std::vector<Cell> cells;
  for (std::size_t e = 0; e < suite.ensembles.size(); ++e)
    for (std::size_t s = 0; s < suite.streams.size(); ++s)
      for (std::size_t k = 0; k < suite.seeds.size(); ++k) {
        Cell c{e, s, k, {}, {}, std::nullopt, {}, false};
        c.req = {suite.ensembles[e].spec, suite.streams[s].spec, suite.seeds[k], suite.max_instances,
                 suite.report_interval};
        c.base = out_dir / "runs" / ("e" + std::to_string(e) + "_s" + std::to_string(s) + "_seed" +
                                     std::to_string(suite.seeds[k]));
        cells.push_back(std::move(c));
      }
  fs::create_directories(out_dir / "runs");

  std::atomic<std::size_t> next{0};
  std::mutex log_mutex;
  auto worker = [&] {
    for (std::size_t i = next++; i < cells.size(); i = next++) {
      Cell& c = cells[i];
      const std::string hash =
          config_hash(c.req.ensemble, c.req.stream, c.req.seed, c.req.max_instances, c.req.report_interval);
      if (resume) c.result = load_summary(c.base, hash);
      if (c.result) continue;
      try {
        c.result = execute_run(c.req, c.base);
        c.executed = true;
      } catch (const std::exception& ex) {
        c.error = ex.what();
      }
      std::lock_guard<std::mutex> lock(log_mutex);
      log << (c.result ? "done   " : "FAILED ") << suite.ensembles[c.e].name << " | " << suite.streams[c.s].name
          << " | seed " << c.req.seed;
      if (!c.result) log << ": " << c.error;
      log << '\n';
    }
  };
  threads = std::max<std::size_t>(1, std::min(threads, cells.size()));
  std::vector<std::thread> pool;
  for (std::size_t t = 1; t < threads; ++t) pool.emplace_back(worker);
  worker();
  for (auto& t : pool) t.join();

  // Ordered reduce: rows are streams, columns ensembles, cells the mean over seeds.
  SuiteOutcome outcome;
  outcome.runs = cells.size();
  auto write_matrix = [&](const fs::path& path, auto field) {
    auto out = open_out(path);
    {
      Fnv1a h;
      for (const auto& c : cells) h.add(config_hash(c.req.ensemble, c.req.stream, c.req.seed, c.req.max_instances,
                                                    c.req.report_interval));
      char buf[17];
      std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h.value()));
      out << "# suite_hash=" << buf << '\n';
    }
    out << "dataset";
    for (const auto& e : suite.ensembles) out << ',' << e.name;
    out << '\n';
    for (std::size_t s = 0; s < suite.streams.size(); ++s) {
      out << suite.streams[s].name;
      for (std::size_t e = 0; e < suite.ensembles.size(); ++e) {
        double sum = 0.0;
        bool ok = true;
        for (const auto& c : cells)
          if (c.e == e && c.s == s) {
            if (!c.result) {
              ok = false;
              break;
            }
            sum += field(*c.result);
          }
        out << ',' << (ok ? format_double(sum / static_cast<double>(suite.seeds.size())) : std::string("NA"));
      }
      out << '\n';
    }
  };
  write_matrix(out_dir / "accuracy.csv", [](const RunSummary& r) { return r.accuracy; });
  write_matrix(out_dir / "memory.csv", [](const RunSummary& r) { return r.mean_memory_mb; });
  write_matrix(out_dir / "timing.csv", [](const RunSummary& r) { return r.mean_cs_per_1k; });

  json meta;
  meta["runs"] = json::array();
  for (const auto& c : cells) {
    if (c.executed) ++outcome.executed;
    if (!c.result) ++outcome.failed;
    meta["runs"].push_back({{"ensemble", c.req.ensemble},
                            {"stream", c.req.stream},
                            {"seed", c.req.seed},
                            {"status", c.result ? "ok" : "failed"},
                            {"error", c.error},
                            {"output", fs::relative(c.base, out_dir).string()}});
  }
  meta["metadata"] = {{"finished", utc_timestamp()}, {"threads", threads}, {"executed", outcome.executed}};
  open_out(out_dir / "suite.json") << meta.dump(2) << '\n';
  return outcome;
}

// ---------------------------------------------------------------------------

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Streaming ensemble classification with geometrically optimum online weighting", "goowe"};
  app.require_subcommand(1);
  app.set_help_all_flag("--help-all", "Show help for every subcommand");

  std::string gen_stream;
  std::uint64_t gen_count = 10000, gen_seed = 1;
  std::string gen_out;
  auto* gen = app.add_subcommand("generate", "Write a generated stream to CSV with a schema sidecar");
  gen->add_option("--stream,-s", gen_stream, "Stream descriptor, e.g. sea:noise=0.1")->required();
  gen->add_option("--count,-n", gen_count, "Number of instances")->capture_default_str();
  gen->add_option("--seed", gen_seed, "Generator seed")->capture_default_str();
  gen->add_option("--out,-o", gen_out, "Output CSV path (default: <output dir>/<stream>.csv)");

  RunRequest run_req;
  run_req.ensemble = "goowe";
  run_req.max_instances = 0;
  std::string run_config, run_out;
  auto* run = app.add_subcommand("run", "Run one test-then-train experiment");
  run->add_option("--config,-c", run_config, "JSON run descriptor; flags override its fields");
  auto* o_ens = run->add_option("--ensemble,-e", run_req.ensemble, "Ensemble descriptor")->capture_default_str();
  auto* o_str = run->add_option("--stream,-s", run_req.stream, "Stream descriptor");
  auto* o_seed = run->add_option("--seed", run_req.seed, "Stream seed")->capture_default_str();
  auto* o_inst = run->add_option("--instances,-n", run_req.max_instances, "Instance cap (0: whole stream)");
  auto* o_rep = run->add_option("--report", run_req.report_interval, "Instances per trace record")->capture_default_str();
  auto* o_out = run->add_option("--out,-o", run_out, "Output directory (default: $GOOWE_OUTPUT_DIR or goowe-out)");

  std::string suite_path, cmp_out;
  std::vector<std::string> cmp_ens, cmp_streams;
  std::vector<std::uint64_t> cmp_seeds;
  std::uint64_t cmp_instances = 0, cmp_report = 0;
  std::size_t cmp_threads = std::max(1u, std::thread::hardware_concurrency()) - 1;
  if (cmp_threads == 0) cmp_threads = 1;
  bool cmp_resume = false;
  auto* cmp = app.add_subcommand("compare", "Run an ensembles x streams x seeds suite");
  cmp->add_option("--suite", suite_path, "JSON suite descriptor");
  cmp->add_option("--ensemble,-e", cmp_ens, "Ensemble descriptor (repeatable)");
  cmp->add_option("--stream,-s", cmp_streams, "Stream descriptor (repeatable)");
  cmp->add_option("--seeds", cmp_seeds, "Seeds")->delimiter(',');
  cmp->add_option("--instances,-n", cmp_instances, "Instances per run");
  cmp->add_option("--report", cmp_report, "Instances per trace record");
  cmp->add_option("--out,-o", cmp_out, "Output directory");
  cmp->add_option("--threads,-j", cmp_threads, "Parallel runs")->capture_default_str();
  cmp->add_flag("--resume", cmp_resume, "Reuse finished runs with a matching config hash");

  std::string st_test, st_matrix, st_a, st_b, st_json;
  bool st_lower = false;
  double st_alpha = 0.05;
  auto* st = app.add_subcommand("stats", "Friedman ranks or Wilcoxon signed-rank over a result matrix");
  st->add_option("test", st_test, "friedman | wilcoxon")->required();
  st->add_option("--matrix,-m", st_matrix, "Result matrix CSV (dataset column, then algorithms)")->required();
  st->add_option("--a", st_a, "First column (wilcoxon)");
  st->add_option("--b", st_b, "Second column (wilcoxon)");
  st->add_flag("--lower-is-better", st_lower, "Rank smaller values higher (time, memory)");
  st->add_option("--alpha", st_alpha, "Significance level for the critical difference")->capture_default_str();
  st->add_option("--json", st_json, "Also write the result as JSON");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (*gen) return cmd_generate(gen_stream, gen_count, gen_seed, gen_out, out);
    if (*run) {
      RunRequest req = run_req;
      fs::path out_dir = run_out.empty() ? default_output_dir() : fs::path(run_out);
      if (!run_config.empty()) {
        std::ifstream in(run_config);
        if (!in) throw UsageError("cannot open run descriptor " + run_config);
        json j;
        try {
          in >> j;
          if (!*o_ens) req.ensemble = j.value("ensemble", req.ensemble);
          if (!*o_str) req.stream = j.value("stream", req.stream);
          if (!*o_seed) req.seed = j.value("seed", req.seed);
          if (!*o_inst) req.max_instances = j.value("max_instances", req.max_instances);
          if (!*o_rep) req.report_interval = j.value("report_interval", req.report_interval);
          if (!*o_out && j.contains("output")) out_dir = j["output"].get<std::string>();
        } catch (const json::exception& e) {
          throw UsageError("run descriptor " + run_config + ": " + e.what());
        }
      }
      if (req.stream.empty()) throw UsageError("run needs a stream (--stream or the descriptor's \"stream\")");
      if (req.report_interval == 0) throw UsageError("--report must be positive");
      return cmd_run(req, out_dir, out);
    }
    if (*cmp) {
      SuiteSpec suite;
      if (!suite_path.empty()) suite = read_suite(suite_path);
      if (!cmp_ens.empty()) suite.ensembles = entries_from(cmp_ens);
      if (!cmp_streams.empty()) suite.streams = entries_from(cmp_streams);
      if (!cmp_seeds.empty()) suite.seeds = cmp_seeds;
      if (cmp_instances) suite.max_instances = cmp_instances;
      if (cmp_report) suite.report_interval = cmp_report;
      if (suite.ensembles.empty() || suite.streams.empty())
        throw UsageError("compare needs ensembles and streams (--suite or --ensemble/--stream)");
      const fs::path out_dir = cmp_out.empty() ? default_output_dir() : fs::path(cmp_out);
      const SuiteOutcome o = run_suite(suite, out_dir, cmp_threads, cmp_resume, err);
      out << o.runs << " runs (" << o.executed << " executed, " << o.failed << " failed); matrices in "
          << out_dir.string() << '\n';
      return o.failed == 0 ? kExitOk : kExitPartial;
    }
    if (*st) return cmd_stats(st_test, st_matrix, st_a, st_b, st_lower, st_alpha, st_json, out);
  } catch (const UsageError& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kExitData;
  }
  return kExitUsage;
}

}  // namespace goowe
