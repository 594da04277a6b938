// Copyright 2026 The gqtsp Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "commands.hpp"

#include <chrono>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <random>
#include <sstream>

#include "gqtsp/gas/driver.hpp"
#include "gqtsp/oracle/clc.hpp"
#include "gqtsp/oracle/hcd.hpp"
#include "gqtsp/oracle/qubit_budget.hpp"
#include "gqtsp/sim/classical_trace.hpp"
#include "gqtsp/sim/fusion.hpp"
#include "gqtsp/synth/addressing.hpp"
#include "gqtsp/synth/mcx.hpp"
#include "gqtsp/tsp/brute_force.hpp"
#include "gqtsp/tsp/cycle.hpp"
#include "gqtsp/tsp/generator.hpp"
#include "gqtsp/tsp/graph_io.hpp"
#include "json.hpp"

namespace gqtsp::cli {

namespace {

using json = nlohmann::ordered_json;

constexpr const char* kArtifactVersion = "0.1.0";
constexpr std::size_t kBruteForceLimit = 10;
constexpr std::size_t kMaxReportedCounterexamples = 10;

std::uint64_t default_seed() {
  if (const char* env = std::getenv("GQTSP_SEED")) {
    char* end = nullptr;
    const unsigned long long v = std::strtoull(env, &end, 10);
    if (end != env && *end == '\0') return v;
  }
  return 1;
}

std::string fixed(double x, int digits = 10) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.*f", digits, x);
  return buf;
}

std::string tour_string(const std::vector<std::size_t>& tour) {
  std::string s;
  for (std::size_t c : tour) s += std::to_string(c) + "-";
  return s + "0";
}

/// Output files plus the optional manifest that lists them.
struct Outputs {
  std::string out;
  std::string manifest;
  bool timings = false;

  void add_flags(CLI::App* cmd, const std::string& what) {
    cmd->add_option("--out,-o", out, what + " (stdout when absent)");
    cmd->add_option("--manifest", manifest, "Write a run manifest to this path");
    cmd->add_flag("--timings", timings, "Record wall-clock timings in the manifest");
  }

  void emit(const std::string& text) const {
    if (out.empty()) {
      std::cout << text;
      return;
    }
    std::ofstream f(out, std::ios::binary);
    if (!f) throw tsp::GraphError("cannot write " + out);
    f << text;
  }

  void write_manifest(const std::string& command, const json& config, std::uint64_t seed,
                      double seconds) const {
    if (manifest.empty()) return;
    json m;
    m["format"] = "gqtsp-manifest";
    m["version"] = 1;
    m["artifact_version"] = kArtifactVersion;
    m["command"] = command;
    m["seed"] = seed;
    m["config"] = config;
    m["outputs"] = out.empty() ? json::array() : json::array({out});
    if (timings) m["timings"] = {{"wall_seconds", seconds}};
    std::ofstream f(manifest, std::ios::binary);
    if (!f) throw tsp::GraphError("cannot write " + manifest);
    f << m.dump(2) << "\n";
  }
};

class Stopwatch {
 public:
  double seconds() const {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - start_).count();
  }

 private:
  std::chrono::steady_clock::time_point start_ = std::chrono::steady_clock::now();
};

tsp::PhaseScaling parse_scaling(const std::string& s) {
  return s == "integer" ? tsp::PhaseScaling::kIntegerUnits : tsp::PhaseScaling::kFitRange;
}

oracle::HcdVariant parse_variant(const std::string& s) {
  if (s == "naive") return oracle::HcdVariant::kNaive;
  if (s == "improved") return oracle::HcdVariant::kImproved;
  return oracle::HcdVariant::kAnchored;
}

// ---------------------------------------------------------------- gen

struct GenOptions {
  std::size_t cities = 4;
  std::size_t degree = 3;
  std::uint64_t seed = default_seed();
  std::optional<double> integer_scale;
  bool squared = false;
  Outputs io;
};

int run_gen(const GenOptions& o) {
  const Stopwatch clock;
  tsp::GeneratorOptions gen;
  gen.integer_scale = o.integer_scale;
  if (o.squared) gen.distance = tsp::DistanceKind::kSquaredEuclidean;
  const tsp::TspGraph g = tsp::random_euclidean_graph(o.cities, o.degree, o.seed, gen);
  o.io.emit(tsp::graph_to_json(g));

  std::ostream& info = o.io.out.empty() ? std::cerr : std::cout;
  info << "cities " << g.size() << " degree " << g.max_degree() << " edges " << g.edge_count();
  if (g.size() <= kBruteForceLimit) {
    const auto best = tsp::brute_force_best(g);
    if (best.empty()) {
      info << " no Hamiltonian cycle";
    } else {
      info << " optimum " << fixed(*best.best_cost(), 6) << " tour "
           << tour_string(best.cycles.front().tour);
    }
  }
  info << "\n";
  json config = {{"cities", o.cities}, {"degree", o.degree}, {"squared", o.squared}};
  config["integer_scale"] = o.integer_scale ? json(*o.integer_scale) : json(nullptr);
  o.io.write_manifest("gen", config, o.seed, clock.seconds());
  return kOk;
}

// ---------------------------------------------------------------- solve

struct SolveOptions {
  std::string graph;
  std::size_t t = 6;
  std::size_t shots = 1024;
  std::size_t rounds = 5;
  std::optional<std::size_t> iterations;
  std::size_t initial_samples = 8;
  std::string scaling = "fit";
  std::string variant = "anchored";
  bool allow_large = false;
  std::uint64_t seed = default_seed();
  Outputs io;
};

json budget_json(const oracle::QubitBudget& b) {
  return {{"cycle", b.cycle_qubits},       {"location", b.location_qubits},
          {"checks", b.check_qubits},      {"scratch", b.scratch_qubits},
          {"results", b.result_qubits},    {"clc", b.clc_qubits},
          {"wide_choice", b.wide_choice_qubits}, {"total", b.total()}};
}

int run_solve(const SolveOptions& o) {
  const Stopwatch clock;
  gas::GasConfig config;
  config.graph = tsp::read_graph_file(o.graph);
  const std::size_t n = config.graph.size();
  if (n >= 6 && !o.allow_large) {
    throw sim::ResourceError("a full solve at N=" + std::to_string(n) +
                             " needs 31 or more simulated qubits; pass --allow-large");
  }
  config.t = o.t;
  config.scaling = parse_scaling(o.scaling);
  config.shots = o.shots;
  config.max_rounds = o.rounds;
  config.iterations = o.iterations;
  config.initial_samples = o.initial_samples;
  config.variant = parse_variant(o.variant);
  config.seed = o.seed;

  const gas::ExperimentResult r = gas::run_gqtsp(config);
  std::optional<tsp::BruteForceResult> optimum;
  if (n <= kBruteForceLimit) optimum = tsp::brute_force_best(config.graph);

  json doc;
  doc["format"] = "gqtsp-solve";
  doc["version"] = 1;
  doc["cities"] = n;
  doc["t"] = o.t;
  doc["shots"] = o.shots;
  doc["seed"] = o.seed;
  doc["qubits"] = r.qubits;
  doc["step_gates"] = r.step_gates;
  doc["step_toffoli_equivalents"] = r.step_toffoli_equivalents;
  const tsp::Encoding enc = tsp::encoding_for(config.graph);
  doc["qubit_budget"] = budget_json(oracle::optimized_budget(n, enc.m, o.t));
  doc["initial"] = {{"threshold", r.initial_threshold}, {"cost", *r.initial_cost}};
  json rounds = json::array();
  for (const gas::RoundRecord& rec : r.rounds) {
    json counts = json::object();
    for (const auto& [bits, c] : rec.counts) counts[bits] = c;
    rounds.push_back({{"threshold", rec.threshold},
                      {"iterations", rec.iterations},
                      {"best_sample_cost", rec.best_sample_cost ? json(*rec.best_sample_cost)
                                                                : json(nullptr)},
                      {"improved", rec.improved},
                      {"counts", counts}});
  }
  doc["rounds"] = rounds;
  doc["best"] = {{"tour", *r.best_tour}, {"cost", *r.best_cost}, {"word", r.best_word->choices}};

  int code = kOk;
  if (optimum && !optimum->empty()) {
    const double best = *optimum->best_cost();
    const bool optimal = std::abs(*r.best_cost - best) <= 1e-9 * std::max(1.0, std::abs(best));
    doc["optimum"] = {{"tour", optimum->cycles.front().tour}, {"cost", best}};
    doc["optimal"] = optimal;
    if (!optimal) code = kMismatch;
  } else {
    doc["optimum"] = nullptr;
    doc["optimal"] = nullptr;
  }
  o.io.emit(doc.dump(2) + "\n");
  json echo = {{"graph", o.graph},   {"t", o.t},         {"shots", o.shots},
               {"rounds", o.rounds}, {"scaling", o.scaling}, {"variant", o.variant},
               {"initial_samples", o.initial_samples}};
  echo["iterations"] = o.iterations ? json(*o.iterations) : json(nullptr);
  o.io.write_manifest("solve", echo, o.seed, clock.seconds());
  return code;
}

// ---------------------------------------------------------------- sweep

struct SweepOptions {
  std::string graph;
  std::size_t max_iterations = 16;
  std::size_t t = 6;
  std::string scaling = "fit";
  std::string variant = "anchored";
  std::optional<std::uint64_t> threshold;
  bool allow_large = false;
  std::uint64_t seed = default_seed();
  Outputs io;
};

int run_sweep(const SweepOptions& o) {
  const Stopwatch clock;
  const tsp::TspGraph g = tsp::read_graph_file(o.graph);
  if (g.size() >= 6 && !o.allow_large) {
    throw sim::ResourceError("a sweep at N=" + std::to_string(g.size()) +
                             " needs 31 or more simulated qubits; pass --allow-large");
  }
  if (g.size() > kBruteForceLimit) throw sim::ResourceError("sweep ranks cycles by brute force");
  const auto ranking = tsp::brute_force_best(g);
  if (ranking.empty()) throw gas::NoValidCycle("graph has no Hamiltonian cycle");
  const tsp::NormalizedPhases phases = tsp::normalize_phases(g, o.t, parse_scaling(o.scaling));
  gas::StepOptions step;
  step.variant = parse_variant(o.variant);
  // default: isolate the optimum, flagging buckets at or above its own
  const std::uint64_t best_bucket = phases.quantize(*ranking.best_cost());
  step.threshold = o.threshold.value_or(best_bucket == 0 ? 0 : best_bucket - 1);

  const auto curve = gas::sweep(g, phases, step, o.max_iterations);
  std::string csv = "iteration,p1,p2,p3\n";
  for (const auto& row : curve) {
    csv += std::to_string(row.iteration) + "," + fixed(row.p1) + "," + fixed(row.p2) + "," +
           fixed(row.p3) + "\n";
  }
  o.io.emit(csv);
  json echo = {{"graph", o.graph}, {"max_iterations", o.max_iterations}, {"t", o.t},
               {"scaling", o.scaling}, {"variant", o.variant}, {"threshold", step.threshold}};
  o.io.write_manifest("sweep", echo, o.seed, clock.seconds());
  return kOk;
}

// ---------------------------------------------------------------- verify

struct VerifyOptions {
  std::string suite;
  std::size_t min_n = 0;
  std::size_t max_n = 0;
  std::uint64_t seed = default_seed();
  Outputs io;
};

struct SuiteReport {
  std::size_t checked = 0;
  std::vector<std::string> failures;

  void fail(std::string what) {
    if (failures.size() < kMaxReportedCounterexamples) failures.push_back(std::move(what));
    ++failed;
  }
  std::size_t failed = 0;
};

// A d-sparse instance with 2-bit choices for the HCD sweeps.
tsp::TspGraph hcd_graph(std::size_t n, std::uint64_t seed) {
  const std::size_t d = std::min<std::size_t>(4, n - 1);
  for (std::uint64_t s = seed; s < seed + 1000; ++s) {
    try {
      return tsp::random_euclidean_graph(n, d, s);
    } catch (const tsp::GraphError&) {
    }
  }
  throw tsp::GraphError("no feasible instance for N=" + std::to_string(n));
}

void verify_hcd(std::size_t n, std::uint64_t seed, SuiteReport& report) {
  const oracle::ForwarderSpec spec = oracle::make_forwarder_spec(hcd_graph(n, seed));
  const std::size_t bits = spec.m * n;
  if (bits > 24) throw sim::ResourceError("hcd sweep limited to 24 cycle bits");
  for (auto variant : {oracle::HcdVariant::kNaive, oracle::HcdVariant::kImproved,
                       oracle::HcdVariant::kAnchored}) {
    sim::Circuit c;
    const auto cycle = c.ledger().allocate("C", bits);
    const auto r = c.ledger().allocate("R_HCD", 1);
    oracle::build_hcd(c, spec, variant, cycle, r[0]);
    const sim::ClassicalTrace trace(c);
    const char* name = variant == oracle::HcdVariant::kNaive      ? "naive"
                       : variant == oracle::HcdVariant::kImproved ? "improved"
                                                                  : "anchored";
    for (std::uint64_t v = 0; v < (std::uint64_t{1} << bits); ++v) {
      const auto w = tsp::CycleWord::from_register(v, n, spec.m);
      const bool flag = tsp::is_hamiltonian_theorem1(spec.lists, w);
      ++report.checked;
      if (trace.permute(v) != (v | (static_cast<std::uint64_t>(flag) << r[0]))) {
        report.fail(std::string(name) + " N=" + std::to_string(n) + " word " + std::to_string(v));
      }
    }
  }
}

void verify_clc(std::size_t n, std::uint64_t seed, SuiteReport& report) {
  // integer costs in [1, 8] give exact t-bit phases
  std::mt19937_64 rng(seed);
  tsp::TspGraph g(n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) g.set_edge(i, j, static_cast<double>(1 + rng() % 8));
  }
  if (n > 5) throw sim::ResourceError("clc sweep limited to N <= 5");
  oracle::ClcConfig config;
  config.phases = tsp::normalize_phases(g, 6, tsp::PhaseScaling::kIntegerUnits);
  config.threshold = rng() % 64;
  const std::size_t bits = config.phases.m * n;
  sim::Circuit c;
  const auto cycle = c.ledger().allocate("C", bits);
  const auto r = c.ledger().allocate("R_CLC", 1);
  oracle::build_clc(c, config, cycle, r[0]);
  sim::StateVector s(c.ledger().total());
  // distinct amplitudes per word make any misrouting visible
  auto a = s.mutable_amplitudes();
  const std::uint64_t words = std::uint64_t{1} << bits;
  a[0] = 0.0;
  double norm = 0.0;
  for (std::uint64_t v = 0; v < words; ++v) norm += static_cast<double>((v + 1) * (v + 1));
  for (std::uint64_t v = 0; v < words; ++v) a[v] = static_cast<double>(v + 1) / std::sqrt(norm);
  sim::CompiledCircuit(c).apply(s);
  for (std::uint64_t v = 0; v < words; ++v) {
    const auto w = tsp::CycleWord::from_register(v, n, config.phases.m);
    const bool flag = oracle::clc_flag(config, config.phases.phase_of(w));
    const double expect = static_cast<double>(v + 1) / std::sqrt(norm);
    ++report.checked;
    if (std::abs(s[v | (static_cast<std::uint64_t>(flag) << r[0])] - expect) > 1e-9) {
      report.fail("N=" + std::to_string(n) + " word " + std::to_string(v));
    }
  }
}

void verify_mcx(std::size_t k, SuiteReport& report) {
  auto check = [&](const char* name, auto&& build, std::size_t extra) {
    sim::Circuit c;
    const auto controls = c.ledger().allocate("c", k);
    const auto target = c.ledger().allocate("t", 1);
    const auto ancillas = c.ledger().allocate("a", extra);
    build(c, controls, target[0], ancillas);
    const sim::ClassicalTrace trace(c);
    const std::uint64_t all = (std::uint64_t{1} << k) - 1;
    const std::uint64_t width = k + 1 + extra;
    for (std::uint64_t in = 0; in < (std::uint64_t{1} << width); ++in) {
      if (extra == 1 && std::string(name) == "one-zeroed" && ((in >> (k + 1)) & 1U)) continue;
      const std::uint64_t expect = (in & all) == all ? in ^ (std::uint64_t{1} << k) : in;
      ++report.checked;
      if (trace.permute(in) != expect) report.fail(std::string(name) + " n=" + std::to_string(k) + " input " + std::to_string(in));
    }
  };
  check("borrowed", [](sim::Circuit& c, auto& ctl, sim::Qubit t, auto& anc) {
    synth::mcx_borrowed(c, ctl, t, anc);
  }, k - 2);
  check("one-zeroed", [](sim::Circuit& c, auto& ctl, sim::Qubit t, auto& anc) {
    synth::mcx_one_zeroed(c, ctl, t, anc);
  }, 1);
}

void verify_qaqr(std::size_t width, std::uint64_t seed, SuiteReport& report) {
  std::mt19937_64 rng(seed + width);
  const std::size_t out_bits = 2;
  const std::size_t entries = std::size_t{1} << width;
  {  // classical table
    std::vector<std::uint64_t> values(entries);
    for (auto& v : values) v = rng() % 4;
    const synth::ClassicalTable table(width, out_bits, values);
    sim::Circuit c;
    const auto address = c.ledger().allocate("a", width);
    const auto out = c.ledger().allocate("o", out_bits);
    synth::qacr(c, address, table, out);
    const sim::ClassicalTrace trace(c);
    for (std::uint64_t a = 0; a < entries; ++a) {
      ++report.checked;
      if (trace.permute(a) != (a | (values[a] << width))) {
        report.fail("qacr width " + std::to_string(width) + " address " + std::to_string(a));
      }
    }
  }
  {  // quantum data, 1-bit registers so the whole input space is enumerable
    sim::Circuit c;
    const auto address = c.ledger().allocate("a", width);
    const auto out = c.ledger().allocate("o", 1);
    std::vector<std::vector<sim::Qubit>> data;
    for (std::size_t k = 0; k < entries; ++k) data.push_back(c.ledger().allocate("d" + std::to_string(k), 1));
    synth::qaqr(c, address, data, out);
    const sim::ClassicalTrace trace(c);
    for (int trial = 0; trial < 256; ++trial) {
      const std::uint64_t a = rng() % entries;
      const std::uint64_t d = rng() & ((std::uint64_t{1} << entries) - 1);
      const std::uint64_t in = a | (d << (width + 1));
      const std::uint64_t bit = (d >> a) & 1U;
      ++report.checked;
      if (trace.permute(in) != (in | (bit << width))) {
        report.fail("qaqr width " + std::to_string(width) + " address " + std::to_string(a));
      }
    }
  }
}

int run_verify(const VerifyOptions& o) {
  const Stopwatch clock;
  std::size_t lo = o.min_n;
  std::size_t hi = o.max_n;
  auto defaults = [&](std::size_t a, std::size_t b) {
    if (lo == 0) lo = a;
    if (hi == 0) hi = b;
  };
  SuiteReport report;
  if (o.suite == "hcd") {
    defaults(4, 6);
    for (std::size_t n = std::max<std::size_t>(lo, 3); n <= hi; ++n) verify_hcd(n, o.seed, report);
  } else if (o.suite == "clc") {
    defaults(4, 4);
    for (std::size_t n = std::max<std::size_t>(lo, 3); n <= hi; ++n) verify_clc(n, o.seed, report);
  } else if (o.suite == "mcx") {
    defaults(3, 6);
    for (std::size_t k = std::max<std::size_t>(lo, 3); k <= hi; ++k) verify_mcx(k, report);
  } else if (o.suite == "qaqr") {
    defaults(1, 5);
    for (std::size_t w = std::max<std::size_t>(lo, 1); w <= hi; ++w) verify_qaqr(w, o.seed, report);
  } else {
    throw std::invalid_argument("unknown suite '" + o.suite + "'");
  }

  json doc;
  doc["format"] = "gqtsp-verify";
  doc["version"] = 1;
  doc["suite"] = o.suite;
  doc["range"] = {lo, hi};
  doc["checked"] = report.checked;
  doc["failed"] = report.failed;
  doc["counterexamples"] = report.failures;
  doc["pass"] = report.failed == 0;
  o.io.emit(doc.dump(2) + "\n");
  o.io.write_manifest("verify", {{"suite", o.suite}, {"min_n", lo}, {"max_n", hi}}, o.seed,
                      clock.seconds());
  return report.failed == 0 ? kOk : kVerifyFailed;
}

// ---------------------------------------------------------------- qubits

struct QubitsOptions {
  std::size_t min_n = 4;
  std::size_t max_n = 8;
  std::size_t degree = 4;
  std::size_t t = 6;
  std::string format = "table";
  Outputs io;
};

constexpr std::size_t kAllocatedLimit = 16;

// Circulant graph with offsets 1..floor(d/2); complete when that covers N.
tsp::TspGraph circulant(std::size_t n, std::size_t d) {
  tsp::TspGraph g(n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t s = 1; s <= std::max<std::size_t>(1, d / 2); ++s) {
      const std::size_t j = (i + s) % n;
      if (i != j && !g.has_edge(i, j)) g.set_edge(i, j, 1.0);
    }
  }
  if (g.max_degree() < std::min(d, n - 1)) g.set_sparsity(std::min(d, n - 1));
  return g;
}

std::size_t allocated_qubits(std::size_t n, std::size_t d, std::size_t t) {
  const tsp::TspGraph g = circulant(n, d);
  const auto phases = tsp::normalize_phases(g, t);
  return gas::build_grover_step(g, phases, {}).qubits();
}

int run_qubits(const QubitsOptions& o) {
  const Stopwatch clock;
  if (o.min_n < 3 || o.max_n < o.min_n) throw std::invalid_argument("need 3 <= min-n <= max-n");
  json rows = json::array();
  for (std::size_t n = o.min_n; n <= o.max_n; ++n) {
    const std::size_t ms = oracle::choice_width(n, oracle::ChoiceEncoding::kSparse, o.degree);
    const std::size_t md = oracle::choice_width(n, oracle::ChoiceEncoding::kDense, n - 1);
    const oracle::QubitBudget b = oracle::optimized_budget(n, ms, o.t);
    std::string decomposition = std::to_string(b.cycle_qubits) + "+" +
                                std::to_string(b.location_qubits) + "+" +
                                std::to_string(b.check_qubits) + "+" +
                                std::to_string(b.scratch_qubits) + "+" +
                                std::to_string(b.result_qubits);
    if (b.clc_qubits > b.hcd_set()) decomposition += "+" + std::to_string(b.clc_qubits - b.hcd_set());
    if (b.wide_choice_qubits > 0) decomposition += "+" + std::to_string(b.wide_choice_qubits);
    json row = {{"N", n},
                {"n", b.n},
                {"k", b.k},
                {"anchors", b.anchors},
                {"location_qubits", b.location_qubits},
                {"sparse_total", b.total()},
                {"dense_total", oracle::optimized_budget(n, md, o.t).total()},
                {"nonoptimized_total", oracle::nonoptimized_total(n, ms, o.t)},
                {"asymptotic", std::round(oracle::asymptotic_estimate(n, ms) * 100) / 100},
                {"decomposition", decomposition + "=" + std::to_string(b.total())}};
    row["allocated"] = n <= kAllocatedLimit && o.degree >= 2
                           ? json(allocated_qubits(n, o.degree, o.t))
                           : json(nullptr);
    rows.push_back(row);
  }

  std::string text;
  if (o.format == "json") {
    json doc = {{"format", "gqtsp-qubits"}, {"version", 1}, {"degree", o.degree},
                {"t", o.t}, {"rows", rows}};
    text = doc.dump(2) + "\n";
  } else {
    const bool csv = o.format == "csv";
    const char* sep = csv ? "," : "\t";
    const std::vector<std::string> cols = {"N", "n", "k", "anchors", "location_qubits",
                                           "sparse_total", "dense_total", "nonoptimized_total",
                                           "asymptotic", "allocated", "decomposition"};
    for (std::size_t i = 0; i < cols.size(); ++i) text += (i ? sep : "") + cols[i];
    text += "\n";
    for (const json& row : rows) {
      for (std::size_t i = 0; i < cols.size(); ++i) {
        const json& v = row[cols[i]];
        std::string cell = v.is_null()                ? "-"
                           : v.is_string()            ? v.get<std::string>()
                           : v.is_number_float()      ? fixed(v.get<double>(), 2)
                                                      : v.dump();
        text += (i ? sep : "") + cell;
      }
      text += "\n";
    }
  }
  o.io.emit(text);
  o.io.write_manifest("qubits", {{"min_n", o.min_n}, {"max_n", o.max_n}, {"degree", o.degree},
                                 {"t", o.t}, {"format", o.format}},
                      0, clock.seconds());
  return kOk;
}

}  // namespace

std::function<int()> register_commands(CLI::App& app) {
  auto gen = std::make_shared<GenOptions>();
  auto solve = std::make_shared<SolveOptions>();
  auto sweep = std::make_shared<SweepOptions>();
  auto verify = std::make_shared<VerifyOptions>();
  auto qubits = std::make_shared<QubitsOptions>();

  CLI::App* g = app.add_subcommand("gen", "Generate a random d-sparse Euclidean instance");
  g->add_option("--cities,-N", gen->cities, "Number of cities")->required()->check(CLI::Range(3, 64));
  g->add_option("--degree,-d", gen->degree, "Maximum city degree")->required();
  g->add_option("--seed", gen->seed, "Random seed (default $GQTSP_SEED or 1)");
  g->add_option("--integer-scale", gen->integer_scale, "Round scale*distance to integer costs");
  g->add_flag("--squared", gen->squared, "Use squared Euclidean distances");
  gen->io.add_flags(g, "Graph file");

  CLI::App* s = app.add_subcommand("solve", "Run the adaptive Grover search on a graph file");
  s->add_option("graph", solve->graph, "Graph file")->required()->check(CLI::ExistingFile);
  s->add_option("--t", solve->t, "QPE precision qubits")->check(CLI::Range(1, 12));
  s->add_option("--shots", solve->shots, "Measurements per round")->check(CLI::PositiveNumber);
  s->add_option("--rounds", solve->rounds, "Maximum threshold rounds")->check(CLI::PositiveNumber);
  s->add_option("--iterations", solve->iterations, "Grover iterations per round");
  s->add_option("--initial-samples", solve->initial_samples,
                "Random valid tours for the initial threshold")->check(CLI::PositiveNumber);
  s->add_option("--scaling", solve->scaling, "Phase scaling")->check(CLI::IsMember({"fit", "integer"}));
  s->add_option("--variant", solve->variant, "HCD oracle variant")
      ->check(CLI::IsMember({"naive", "improved", "anchored"}));
  s->add_flag("--allow-large", solve->allow_large, "Permit simulations of six or more cities");
  s->add_option("--seed", solve->seed, "Random seed (default $GQTSP_SEED or 1)");
  solve->io.add_flags(s, "Result JSON");

  CLI::App* w = app.add_subcommand("sweep", "Noiseless top-3 cycle probabilities per iteration");
  w->add_option("graph", sweep->graph, "Graph file")->required()->check(CLI::ExistingFile);
  w->add_option("--max-iters", sweep->max_iterations, "Last iteration to record");
  w->add_option("--t", sweep->t, "QPE precision qubits")->check(CLI::Range(1, 12));
  w->add_option("--threshold", sweep->threshold, "Comparator threshold in QPE buckets");
  w->add_option("--scaling", sweep->scaling, "Phase scaling")->check(CLI::IsMember({"fit", "integer"}));
  w->add_option("--variant", sweep->variant, "HCD oracle variant")
      ->check(CLI::IsMember({"naive", "improved", "anchored"}));
  w->add_flag("--allow-large", sweep->allow_large, "Permit simulations of six or more cities");
  w->add_option("--seed", sweep->seed, "Recorded in the manifest; the sweep is noiseless");
  sweep->io.add_flags(w, "CSV curve");

  CLI::App* v = app.add_subcommand("verify", "Exhaustive component checks");
  v->add_option("suite", verify->suite, "hcd, clc, mcx or qaqr")->required();
  v->add_option("--min-n", verify->min_n, "Smallest size (cities, controls or address bits)");
  v->add_option("--max-n", verify->max_n, "Largest size");
  v->add_option("--seed", verify->seed, "Random seed (default $GQTSP_SEED or 1)");
  verify->io.add_flags(v, "Report JSON");

  CLI::App* q = app.add_subcommand("qubits", "Qubit budget table");
  q->add_option("--min-n", qubits->min_n, "Smallest city count");
  q->add_option("--max-n", qubits->max_n, "Largest city count")->check(CLI::Range(3, 4096));
  q->add_option("--degree,-d", qubits->degree, "Sparsity d of the sparse encoding");
  q->add_option("--t", qubits->t, "QPE precision qubits");
  q->add_option("--format", qubits->format, "table, csv or json")
      ->check(CLI::IsMember({"table", "csv", "json"}));
  qubits->io.add_flags(q, "Report");

  return [=, &app]() -> int {
    if (app.got_subcommand(g)) return run_gen(*gen);
    if (app.got_subcommand(s)) return run_solve(*solve);
    if (app.got_subcommand(w)) return run_sweep(*sweep);
    if (app.got_subcommand(v)) return run_verify(*verify);
    return run_qubits(*qubits);
  };
}

int run(int argc, const char* const* argv) {
  CLI::App app{"Grover adaptive search for the travelling salesman problem"};
  app.require_subcommand(1);
  const auto action = register_commands(app);
  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e) == 0 ? kOk : kUsage;
  }
  try {
    return action();
  } catch (const sim::ResourceError& e) {
    std::cerr << "gqtsp: resource limit: " << e.what() << "\n";
    return kResource;
  } catch (const gas::NoValidCycle& e) {
    std::cerr << "gqtsp: " << e.what() << "\n";
    return kNoValidCycle;
  } catch (const tsp::GraphError& e) {
    std::cerr << "gqtsp: invalid input: " << e.what() << "\n";
    return kInputError;
  } catch (const json::exception& e) {
    std::cerr << "gqtsp: invalid input: " << e.what() << "\n";
    return kInputError;
  } catch (const std::ios_base::failure& e) {
    std::cerr << "gqtsp: i/o error: " << e.what() << "\n";
    return kInputError;
  } catch (const std::invalid_argument& e) {
    std::cerr << "gqtsp: " << e.what() << "\n";
    return kUsage;
  }
}

}  // namespace gqtsp::cli
