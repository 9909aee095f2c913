// Copyright 2026 The goowe Authors
// SPDX-License-Identifier: Apache-2.0
//
// Acceptance checks. Prints one PASS/FAIL line per criterion and exits
// nonzero if any criterion fails.

#include <cmath>
#include <cstdio>
#include <deque>
#include <filesystem>
#include <fstream>
#include <functional>
#include <sstream>
#include <string>
#include <vector>

#include "goowe/cli/commands.hpp"
#include "goowe/cli/descriptors.hpp"
#include "goowe/core/hash.hpp"
#include "goowe/core/rng.hpp"
#include "goowe/ensemble/weight_system.hpp"
#include "goowe/ensemble/windowed_system.hpp"
#include "goowe/eval/prequential.hpp"
#include "goowe/eval/stats.hpp"
#include "goowe/learners/hoeffding_tree.hpp"
#include "goowe/streams/drift.hpp"
#include "goowe/streams/factory.hpp"
#include "goowe/streams/generators.hpp"

namespace fs = std::filesystem;
using namespace goowe;

namespace {

int failures = 0;

void report(int id, bool ok, const std::string& title, const std::string& detail) {
  std::printf("%s %2d  %s: %s\n", ok ? "PASS" : "FAIL", id, title.c_str(), detail.c_str());
  std::fflush(stdout);
  if (!ok) ++failures;
}

std::string fmt(const char* f, auto... args) {
  char buf[512];
  std::snprintf(buf, sizeof buf, f, args...);
  return buf;
}

// A window of labelled instances with m normalized score vectors each.
struct Config {
  std::size_t m, p;
  std::vector<int> labels;
  std::vector<std::vector<ScoreVector>> scores;  // [instance][component]
};

Config random_config(Rng& rng, bool deficient) {
  Config c;
  c.m = 1 + rng.below(5);
  c.p = 2 + rng.below(3);
  const std::size_t n = 1 + rng.below(20);
  if (deficient && c.m < 2) c.m = 2;
  for (std::size_t k = 0; k < n; ++k) {
    c.labels.push_back(static_cast<int>(rng.below(c.p)));
    std::vector<ScoreVector> row;
    for (std::size_t j = 0; j < c.m; ++j) {
      std::vector<double> raw(c.p);
      for (double& v : raw) v = rng.uniform();
      row.push_back(normalize_scores(raw, c.p));
    }
    if (deficient) row.back() = row.front();
    c.scores.push_back(row);
  }
  return c;
}

WeightSystem system_of(const Config& c) {
  WeightSystem s(c.m);
  for (std::size_t k = 0; k < c.labels.size(); ++k)
    s.add(c.scores[k], IdealPoint(static_cast<ClassIndex>(c.labels[k]), c.p));
  return s;
}

// Squared distance of the weighted score combination to the ideal points,
// evaluated directly from the scores.
double objective(const Config& c, std::span<const double> w) {
  double f = 0.0;
  for (std::size_t k = 0; k < c.labels.size(); ++k)
    for (std::size_t q = 0; q < c.p; ++q) {
      double v = q == static_cast<std::size_t>(c.labels[k]) ? -1.0 : 0.0;
      for (std::size_t j = 0; j < c.m; ++j) v += w[j] * c.scores[k][j][q];
      f += v * v;
    }
  return f;
}

// Optimum of the objective by projecting the target onto the span of the
// design columns, built with twice-repeated modified Gram-Schmidt.
double projection_optimum(const Config& c) {
  const std::size_t rows = c.labels.size() * c.p;
  std::vector<std::vector<double>> basis;
  std::vector<double> target(rows, 0.0);
  for (std::size_t k = 0; k < c.labels.size(); ++k) target[k * c.p + static_cast<std::size_t>(c.labels[k])] = 1.0;
  for (std::size_t j = 0; j < c.m; ++j) {
    std::vector<double> v(rows);
    for (std::size_t k = 0; k < c.labels.size(); ++k)
      for (std::size_t q = 0; q < c.p; ++q) v[k * c.p + q] = c.scores[k][j][q];
    double original = 0.0;
    for (double x : v) original += x * x;
    for (int pass = 0; pass < 2; ++pass)
      for (const auto& b : basis) {
        double dot = 0.0;
        for (std::size_t r = 0; r < rows; ++r) dot += b[r] * v[r];
        for (std::size_t r = 0; r < rows; ++r) v[r] -= dot * b[r];
      }
    double norm = 0.0;
    for (double x : v) norm += x * x;
    if (norm <= 1e-20 * std::max(original, 1.0)) continue;  // dependent column
    norm = std::sqrt(norm);
    for (double& x : v) x /= norm;
    basis.push_back(std::move(v));
  }
  std::vector<double> residual = target;
  for (int pass = 0; pass < 2; ++pass)
    for (const auto& b : basis) {
      double dot = 0.0;
      for (std::size_t r = 0; r < rows; ++r) dot += b[r] * residual[r];
      for (std::size_t r = 0; r < rows; ++r) residual[r] -= dot * b[r];
    }
  double f = 0.0;
  for (double x : residual) f += x * x;
  return f;
}

void criterion1() {
  const double a[] = {1.37, 1.11, 1.11, 1.05}, d[] = {1.61, 1.18};
  const auto w = solve_weights(WeightSystem::from_values(a, d)).w;
  const bool ok = std::abs(w[0] - 1.88) <= 0.05 && std::abs(w[1] + 0.87) <= 0.05;
  report(1, ok, "worked-example solve", fmt("w = <%.4f, %.4f>, target <1.88, -0.87> +/- 0.05", w[0], w[1]));
}

void criterion2() {
  Rng rng(20);
  double worst = 0.0;
  int deficient = 0;
  for (int t = 0; t < 200; ++t) {
    const bool def = t % 4 == 3;
    const Config c = random_config(rng, def);
    deficient += def;
    const auto w = solve_weights(system_of(c)).w;
    const double got = objective(c, w);
    const double best = projection_optimum(c);
    double target_sq = static_cast<double>(c.labels.size());
    const double rel = std::abs(got - best) / std::max(best, 1e-6 * target_sq);
    worst = std::max(worst, rel);
  }
  report(2, worst <= 1e-6, "least-squares oracle equivalence",
         fmt("200 configurations (%d rank-deficient), worst relative residual gap %.2e <= 1e-6", deficient, worst));
}

void criterion3() {
  Rng rng(30);
  double worst_fd = 0.0, worst_stationary = 0.0;
  int full_rank = 0;
  for (int t = 0; t < 100; ++t) {
    const Config c = random_config(rng, false);
    const WeightSystem s = system_of(c);
    std::vector<double> w(c.m);
    for (double& v : w) v = rng.uniform(-2.0, 2.0);
    const auto g = s.gradient(w);
    double diff = 0.0, norm = 0.0;
    for (std::size_t j = 0; j < c.m; ++j) {
      const double h = 1e-5;
      auto wp = w, wm = w;
      wp[j] += h;
      wm[j] -= h;
      const double fd = (objective(c, wp) - objective(c, wm)) / (2 * h);
      diff += (fd - g[j]) * (fd - g[j]);
      norm += g[j] * g[j];
    }
    worst_fd = std::max(worst_fd, std::sqrt(diff) / std::max(std::sqrt(norm), 1e-12));
    const auto sol = solve_weights(s);
    if (sol.rank == c.m) {
      ++full_rank;
      const auto gs = s.gradient(sol.w);
      double gn = 0.0, dn = 0.0;
      for (double v : gs) gn += v * v;
      for (double v : s.d()) dn += v * v;
      worst_stationary = std::max(worst_stationary, std::sqrt(gn) / (1.0 + std::sqrt(dn)));
    }
  }
  const bool ok = worst_fd <= 1e-4 && worst_stationary <= 1e-6;
  report(3, ok, "gradient consistency",
         fmt("finite-difference relative gap %.2e <= 1e-4; |grad|/(1+|d|) at %d full-rank solutions %.2e <= 1e-6",
             worst_fd, full_rank, worst_stationary));
}

ScoreVector pseudo_scores(ComponentId id, std::span<const double> x, std::size_t p) {
  Fnv1a h;
  h.add(static_cast<std::uint64_t>(id));
  h.add(x[0]);
  Rng rng(h.value());
  std::vector<double> raw(p);
  for (auto& v : raw) v = rng.uniform();
  return normalize_scores(raw, p);
}

void criterion4() {
  const std::size_t p = 3, n = 25, capacity = 40;
  Rng rng(40);
  WindowedWeightSystem ws(n, capacity, p);
  std::vector<ComponentId> ids{0, 1, 2, 3};
  ComponentId next = 4;
  ws.set_components(ids);
  auto scorer = [&](ComponentId id, std::span<const double> x) { return pseudo_scores(id, x, p); };
  std::deque<Instance> recent;
  double worst = 0.0;
  int replacements = 0, checks = 0;
  for (int op = 0; op < 1000; ++op) {
    if (op % 180 == 179 && replacements < 5) {
      ids.erase(ids.begin() + static_cast<long>(rng.below(ids.size())));
      ids.push_back(next++);
      ws.set_components(ids);
      ++replacements;
    }
    Instance inst;
    inst.x = {rng.uniform()};
    inst.label = static_cast<ClassIndex>(rng.below(p));
    CachedScores cached;
    for (ComponentId id : ids) cached.set(id, scorer(id, inst.x));
    ws.push(inst, cached);
    recent.push_back(inst);
    if (recent.size() > n) recent.pop_front();
    const WeightSystem& inc = ws.system(scorer);
    // From scratch: the definition summed over the latest n instances.
    const std::size_t m = ids.size();
    for (std::size_t q = 0; q < m; ++q) {
      double dq = 0.0;
      for (const auto& r : recent) dq += scorer(ids[q], r.x)[r.label];
      worst = std::max(worst, std::abs(inc.d(q) - dq));
      for (std::size_t j = 0; j < m; ++j) {
        double aqj = 0.0;
        for (const auto& r : recent) {
          const auto sq = scorer(ids[q], r.x), sj = scorer(ids[j], r.x);
          for (std::size_t c = 0; c < p; ++c) aqj += sq[c] * sj[c];
        }
        worst = std::max(worst, std::abs(inc.a(q, j) - aqj));
      }
    }
    ++checks;
  }
  report(4, worst <= 1e-8 && replacements == 5, "incremental accumulator fidelity",
         fmt("1000 pushes (%d checks, %d replacements), worst entry gap %.2e <= 1e-8", checks, replacements, worst));
}

void criterion5() {
  const auto m = ResultMatrix::read_csv(fs::path(GOOWE_FIXTURE_DIR) / "ensemble_accuracy.csv");
  const auto r = friedman(m);
  const std::vector<std::pair<std::string, double>> reference{
      {"DWM", 2.650},  {"NSE", 1.650},    {"AWE", 4.000},    {"AUE2", 6.150},     {"GOOWE", 7.650},
      {"OAUE", 6.650}, {"OzaBag", 5.250}, {"LevBag", 6.100}, {"OzaBoost", 4.900}};
  double worst = 0.0;
  for (const auto& [name, rank] : reference) worst = std::max(worst, std::abs(r.mean_ranks[m.column(name)] - rank));
  const auto w = wilcoxon_signed_rank(m.column_values(m.column("GOOWE")), m.column_values(m.column("OAUE")));
  const bool ok = worst <= 0.001 && w.positive == 13 && w.negative == 7 && std::abs(w.p - 0.014) <= 0.005;
  report(5, ok, "statistics reproduction",
         fmt("max rank deviation %.4f <= 0.001; Wilcoxon GOOWE vs OAUE %zu+/%zu-, p = %.4f (0.014 +/- 0.005)", worst,
             w.positive, w.negative, w.p));
}

double mean_accuracy(const std::string& ensemble, const std::string& stream, std::size_t instances) {
  double sum = 0.0;
  for (std::uint64_t seed = 1; seed <= 5; ++seed) {
    auto src = make_stream(stream, seed);
    auto e = make_ensemble(SpecString::parse(ensemble), src->schema());
    sum += test_then_train(*e, *src, {.report_interval = 500, .max_instances = instances}).accuracy();
  }
  return sum / 5.0;
}

void criterion6() {
  const std::string stream = "rbf_abrupt:classes=10,period=5000,width=50";
  const double g = mean_accuracy("base1:vote=goowe", stream, 50000);
  const double mv = mean_accuracy("base1:vote=mv", stream, 50000);
  report(6, g - mv >= 1.0, "drift-reaction superiority",
         fmt("%s, 50k x 5 seeds: base1 goowe %.3f%% vs mv %.3f%%, margin %.3f >= 1.0", stream.c_str(), g, mv, g - mv));
}

void criterion7() {
  const std::string stream = "rbf:classes=10";
  const double g = mean_accuracy("base1:vote=goowe", stream, 50000);
  const double mv = mean_accuracy("base1:vote=mv", stream, 50000);
  report(7, std::abs(g - mv) <= 0.5, "no-drift equivalence",
         fmt("%s, 50k x 5 seeds: base1 goowe %.3f%% vs mv %.3f%%, |gap| %.3f <= 0.5", stream.c_str(), g, mv,
             std::abs(g - mv)));
}

void criterion8() {
  SeaGenerator sea({0, 0.0}, 8);
  HoeffdingTree tree(sea.schema());
  std::size_t correct = 0;
  const std::size_t n = 10000;
  for (std::size_t i = 0; i < n; ++i) {
    const auto inst = *sea.next();
    if (tree.normalized_score(inst.x).argmax() == inst.label) ++correct;
    tree.train_on(inst);
  }
  const double acc = 100.0 * static_cast<double>(correct) / n;
  const auto schema = StreamSchema::all_numeric(4, 2);
  HoeffdingTree flat(schema);
  Rng rng(9);
  for (int i = 0; i < 20000; ++i) {
    Instance inst;
    inst.x = {1.0, 2.0, 3.0, 4.0};
    inst.label = static_cast<ClassIndex>(rng.below(2));
    flat.train_on(inst);
  }
  report(8, acc >= 90.0 && flat.node_count() == 1, "learner sanity",
         fmt("prequential accuracy on noiseless SEA after 10k %.2f%% >= 90; constant-feature tree nodes %zu (== 1)",
             acc, flat.node_count()));
}

std::uint64_t sequence_hash(StreamSource& s, std::size_t n) {
  Fnv1a h;
  for (std::size_t i = 0; i < n; ++i) {
    const auto inst = s.next();
    for (double v : inst->x) h.add(v);
    h.add(static_cast<std::uint64_t>(inst->label));
  }
  return h.value();
}

void criterion9() {
  const std::size_t n = 100000;
  SeaGenerator sea({0, 0.10}, 91);
  std::size_t flips = 0;
  for (std::size_t i = 0; i < n; ++i) {
    const auto inst = *sea.next();
    flips += inst.label != sea.label_of(inst.x);
  }
  const double sea_rate = static_cast<double>(flips) / n;

  HyperplaneGenerator hyp({.attributes = 10, .magnitude = 0.001, .noise = 0.05}, 92);
  flips = 0;
  for (std::size_t i = 0; i < n; ++i) flips += hyp.next()->label != hyp.last_clean_label();
  const double hyp_rate = static_cast<double>(flips) / n;

  LedGenerator led({0.20, 0}, 93);
  flips = 0;
  for (std::size_t i = 0; i < n; ++i) {
    const auto inst = *led.next();
    for (std::size_t s = 0; s < LedGenerator::kSegments; ++s)
      flips += inst.x[led.segment_position(s)] != LedGenerator::kSegmentTable[inst.label][s];
  }
  const double led_rate = static_cast<double>(flips) / (n * LedGenerator::kSegments);

  const double t0 = 5000, width = 2000;
  SigmoidJoin join(make_stream("sea:function=0", 1), make_stream("sea:function=1", 2), t0, width, 94);
  double worst_mix = 0.0;
  for (int w = 0; w < 10; ++w) {
    double expected = 0.0;
    std::size_t from_b = 0;
    for (int i = 0; i < 1000; ++i) {
      expected += sigmoid_probability(w * 1000 + i, t0, width);
      join.next();
      from_b += join.last_from_b();
    }
    worst_mix = std::max(worst_mix, std::abs(from_b / 1000.0 - expected / 1000.0));
  }

  bool deterministic = true;
  for (const char* spec : {"rbf:classes=4,speed=0.001", "rbf_abrupt:classes=10,period=5000,width=50", "sea:noise=0.1",
                           "hyperplane:magnitude=0.01,noise=0.05", "tree:concepts=4,period=2500", "led:noise=0.2",
                           "noise"}) {
    auto a = make_stream(spec, 7), b = make_stream(spec, 7);
    deterministic = deterministic && sequence_hash(*a, 10000) == sequence_hash(*b, 10000);
  }
  const bool ok = std::abs(sea_rate - 0.10) <= 0.01 && std::abs(hyp_rate - 0.05) <= 0.01 &&
                  std::abs(led_rate - 0.20) <= 0.01 && worst_mix <= 0.03 && deterministic;
  report(9, ok, "generator calibration",
         fmt("noise SEA %.4f (0.10), HYP %.4f (0.05), LED %.4f (0.20), each +/- 0.01; join mixing worst 1k-window gap "
             "%.4f <= 0.03; seed hashes %s",
             sea_rate, hyp_rate, led_rate, worst_mix, deterministic ? "equal" : "DIFFER"));
}

std::string slurp(const fs::path& p) {
  std::ifstream in(p, std::ios::binary);
  return {std::istreambuf_iterator<char>(in), {}};
}

void criterion10() {
  SuiteSpec suite;
  suite.ensembles = {{"goowe", "goowe:h=200,n=200"}, {"b1-mv", "base1:vote=mv,h=200,n=200"},
                     {"b2-dwm", "base2:replace=dwm,h=200,n=200"}};
  suite.streams = {{"sea", "sea:noise=0.1"}, {"rbf", "rbf_abrupt:classes=4,period=1500,width=50"}};
  suite.seeds = {1, 2};
  suite.max_instances = 3000;
  suite.report_interval = 250;
  const fs::path root = fs::temp_directory_path() / "goowe_acceptance_c10";
  fs::remove_all(root);
  std::ostringstream log;
  const auto first = run_suite(suite, root / "a", 2, false, log);
  const auto second = run_suite(suite, root / "b", 1, false, log);
  std::size_t compared = 0, differ = 0;
  auto same = [&](const fs::path& rel) {
    ++compared;
    const std::string a = slurp(root / "a" / rel), b = slurp(root / "b" / rel);
    if (a.empty() || a != b) ++differ;
  };
  same("accuracy.csv");
  same("memory.csv");
  for (const auto& e : fs::directory_iterator(root / "a" / "runs"))
    if (e.path().string().ends_with(".trace.csv")) same(fs::path("runs") / e.path().filename());
  const bool ok = first.failed == 0 && second.failed == 0 && first.runs == 12 && compared == 14 && differ == 0;
  report(10, ok, "pipeline determinism",
         fmt("3 ensembles x 2 streams x 2 seeds run twice (2 and 1 threads): %zu result files compared, %zu differ",
             compared, differ));
  fs::remove_all(root);
}

}  // namespace

int main() {
  const std::vector<std::function<void()>> criteria{criterion1, criterion2, criterion3, criterion4, criterion5,
                                                    criterion6, criterion7, criterion8, criterion9, criterion10};
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    try {
      criteria[i]();
    } catch (const std::exception& e) {
      report(static_cast<int>(i + 1), false, "criterion", std::string("exception: ") + e.what());
    }
  }
  std::printf("%d of %zu criteria failed\n", failures, criteria.size());
  return failures == 0 ? 0 : 1;
}
