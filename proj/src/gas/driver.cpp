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

#include "gqtsp/gas/driver.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <random>
#include <stdexcept>

#include "gqtsp/synth/diffusion.hpp"
#include "gqtsp/tsp/cycle.hpp"

namespace gqtsp::gas {

using sim::Gate;

namespace {

double rotation_angle(std::size_t search_qubits, std::uint64_t marked) {
  if (search_qubits == 0 || search_qubits > 62) {
    throw std::invalid_argument("search register width out of range");
  }
  const double space = std::ldexp(1.0, static_cast<int>(search_qubits));
  if (marked == 0 || static_cast<double>(marked) >= space) {
    throw std::invalid_argument("marked count must lie in [1, 2^bits)");
  }
  return 2 * std::asin(std::sqrt(static_cast<double>(marked) / space));
}

bool flagged(const tsp::NormalizedPhases& phases, const StepOptions& options,
             const tsp::CycleWord& word) {
  const std::uint64_t bucket = phases.bucket_of_phase(phases.phase_of(word));
  return options.direction == synth::Direction::kGreater ? bucket > options.threshold
                                                         : bucket < options.threshold;
}

// Cheapest of `count` random valid tours, each from up to `attempts`
// random orderings of cities 1..N-1.
std::optional<std::vector<std::size_t>> sample_initial_tour(const tsp::TspGraph& graph,
                                                            std::size_t count,
                                                            std::mt19937_64& rng) {
  constexpr std::size_t kAttempts = 4096;
  const std::size_t n = graph.size();
  std::optional<std::vector<std::size_t>> best;
  double best_cost = 0.0;
  std::vector<std::size_t> tour(n);
  for (std::size_t found = 0, tries = 0; found < count && tries < kAttempts * count; ++tries) {
    for (std::size_t i = 0; i < n; ++i) tour[i] = i;
    std::shuffle(tour.begin() + 1, tour.end(), rng);
    double cost = 0.0;
    bool ok = true;
    for (std::size_t i = 0; i < n && ok; ++i) {
      const std::size_t a = tour[i];
      const std::size_t b = tour[(i + 1) % n];
      ok = graph.has_edge(a, b);
      if (ok) cost += graph.cost(a, b);
    }
    if (!ok) continue;
    ++found;
    if (!best || cost < best_cost) {
      best = tour;
      best_cost = cost;
    }
  }
  return best;
}

std::vector<DecodedSample> decode(const std::map<std::string, std::size_t>& counts,
                                  const tsp::TspGraph& graph,
                                  const tsp::AdjacencyLists& lists, std::size_t m) {
  std::vector<DecodedSample> out;
  out.reserve(counts.size());
  for (const auto& [bits, count] : counts) {
    DecodedSample s;
    s.word = tsp::CycleWord::from_register(std::stoull(bits, nullptr, 2), graph.size(), m);
    s.count = count;
    if (tsp::is_single_cycle(lists, s.word)) s.cost = tsp::cost(graph, lists, s.word);
    out.push_back(std::move(s));
  }
  return out;
}

}  // namespace

std::size_t estimate_iterations(std::size_t search_qubits, std::uint64_t marked) {
  const double theta = rotation_angle(search_qubits, marked);
  return static_cast<std::size_t>(std::llround(std::numbers::pi / (2 * theta) - 0.5));
}

std::size_t single_target_iterations(std::size_t search_qubits) {
  const double space = std::ldexp(1.0, static_cast<int>(search_qubits));
  return static_cast<std::size_t>(std::ceil(std::numbers::pi * std::sqrt(space) / 4));
}

double rotation_probability(std::size_t search_qubits, std::uint64_t marked, std::size_t k) {
  const double theta = rotation_angle(search_qubits, marked);
  const double s = std::sin((2.0 * static_cast<double>(k) + 1.0) * theta / 2);
  return s * s;
}

GroverStep build_grover_step(const tsp::TspGraph& graph, const tsp::NormalizedPhases& phases,
                             const StepOptions& options) {
  const oracle::ForwarderSpec spec = oracle::make_forwarder_spec(graph);
  if (spec.m != phases.m || phases.cities != graph.size()) {
    throw sim::CircuitError("phase tables do not match the graph encoding");
  }
  oracle::ClcConfig clc;
  clc.threshold = options.threshold;
  clc.direction = options.direction;
  clc.phases = phases;

  GroverStep s;
  auto& ledger = s.circuit.ledger();
  s.cycle = ledger.allocate("C", spec.m * graph.size());
  s.clc_result = ledger.allocate("R_CLC", 1)[0];
  s.hcd_result = ledger.allocate("R_HCD", 1)[0];
  s.result = ledger.allocate("R", 1)[0];

  oracle::build_clc(s.circuit, clc, s.cycle, s.clc_result);
  oracle::build_hcd(s.circuit, spec, options.variant, s.cycle, s.hcd_result);
  const std::size_t mark_end = s.circuit.size();
  s.circuit.append(Gate::toffoli(s.clc_result, s.hcd_result, s.result));
  s.circuit.append_mirror(0, mark_end);
  s.oracle_gates = s.circuit.size();
  synth::diffusion(s.circuit, s.cycle);
  return s;
}

sim::StateVector initial_state(const GroverStep& step) {
  sim::StateVector state(step.qubits());
  for (Qubit q : step.cycle) state.apply(Gate::h(q));
  state.apply(Gate::x(step.result));
  state.apply(Gate::h(step.result));
  return state;
}

void grover_step(sim::StateVector& state, const sim::CompiledCircuit& step,
                 std::size_t iterations) {
  for (std::size_t i = 0; i < iterations; ++i) step.apply(state);
}

std::vector<std::uint64_t> marked_words(const tsp::AdjacencyLists& lists,
                                        const tsp::NormalizedPhases& phases,
                                        const StepOptions& options) {
  std::vector<std::uint64_t> out;
  const std::size_t bits = phases.m * phases.cities;
  for (std::uint64_t v = 0; v < (std::uint64_t{1} << bits); ++v) {
    const auto w = tsp::CycleWord::from_register(v, phases.cities, phases.m);
    if (tsp::is_hamiltonian_theorem1(lists, w) && flagged(phases, options, w)) out.push_back(v);
  }
  return out;
}

std::vector<double> top_cycle_probabilities(const std::vector<double>& dist,
                                            const tsp::BruteForceResult& ranking,
                                            std::size_t count) {
  std::vector<double> p(count, 0.0);
  for (const tsp::RankedCycle& c : ranking.cycles) {
    if (c.rank < count) p[c.rank] += dist.at(c.word.to_register());
  }
  return p;
}

std::vector<IterationProbabilities> sweep(const tsp::TspGraph& graph,
                                          const tsp::NormalizedPhases& phases,
                                          const StepOptions& options,
                                          std::size_t max_iterations) {
  const tsp::BruteForceResult ranking = tsp::brute_force_best(graph);
  const auto marked = marked_words(tsp::build_adjacency_lists(graph), phases, options);
  const GroverStep step = build_grover_step(graph, phases, options);
  const sim::CompiledCircuit compiled(step.circuit);
  sim::StateVector state = initial_state(step);

  std::vector<IterationProbabilities> curve;
  for (std::size_t k = 0;; ++k) {
    const std::vector<double> dist = sim::register_distribution(state, step.cycle);
    const std::vector<double> top = top_cycle_probabilities(dist, ranking);
    IterationProbabilities row{k, top[0], top[1], top[2], 0.0};
    for (std::uint64_t v : marked) row.marked += dist[v];
    curve.push_back(row);
    if (k == max_iterations) break;
    compiled.apply(state);
  }
  return curve;
}

ThresholdUpdate threshold_update(const std::vector<DecodedSample>& samples,
                                 const tsp::NormalizedPhases& phases,
                                 const ThresholdUpdate& current) {
  ThresholdUpdate next = current;
  next.improved = false;
  next.no_valid_sample = true;
  for (const DecodedSample& s : samples) {
    if (!s.cost) continue;
    next.no_valid_sample = false;
    if (!next.incumbent_cost || *s.cost < *next.incumbent_cost) {
      next.incumbent_cost = s.cost;
      next.incumbent = s.word;
      next.threshold = phases.quantize(*s.cost);
      next.improved = true;
    }
  }
  return next;
}

void GasConfig::validate() const {
  graph.validate();
  if (t == 0 || t > 30) throw std::invalid_argument("precision t must lie in [1, 30]");
  if (shots == 0) throw std::invalid_argument("shots must be positive");
  if (max_rounds == 0) throw std::invalid_argument("max_rounds must be positive");
  if (initial_samples == 0) throw std::invalid_argument("initial_samples must be positive");
}

ExperimentResult run_gqtsp(const GasConfig& config) {
  config.validate();
  const tsp::TspGraph& graph = config.graph;
  const tsp::NormalizedPhases phases = tsp::normalize_phases(graph, config.t, config.scaling);
  const tsp::AdjacencyLists lists = tsp::build_adjacency_lists(graph);
  std::mt19937_64 rng(config.seed);

  const auto tour = sample_initial_tour(graph, config.initial_samples, rng);
  if (!tour) throw NoValidCycle("no Hamiltonian cycle found by random sampling");
  ThresholdUpdate state;
  state.incumbent = tsp::word_from_tour(lists, *tour, phases.m);
  state.incumbent_cost = tsp::cost(graph, lists, *state.incumbent);
  state.threshold = phases.quantize(*state.incumbent_cost);

  ExperimentResult result;
  result.cities = graph.size();
  result.initial_threshold = state.threshold;
  result.initial_cost = state.incumbent_cost;
  const std::size_t iterations =
      config.iterations.value_or(single_target_iterations(phases.m * graph.size()));
  const std::uint64_t top_bucket = (std::uint64_t{1} << config.t) - 1;

  for (std::size_t round = 0; round < config.max_rounds; ++round) {
    if (state.threshold >= top_bucket) break;  // nothing can be marked
    const GroverStep step = build_grover_step(graph, phases, {state.threshold,
                                                              synth::Direction::kGreater,
                                                              config.variant});
    result.qubits = step.qubits();
    result.step_gates = step.circuit.size();
    result.step_toffoli_equivalents = step.circuit.counts().toffoli_equivalents;
    const sim::CompiledCircuit compiled(step.circuit);
    sim::StateVector psi = initial_state(step);
    grover_step(psi, compiled, iterations);

    RoundRecord record;
    record.threshold = state.threshold;
    record.iterations = iterations;
    record.counts = sim::sample(psi, config.shots, step.cycle, rng());
    const auto samples = decode(record.counts, graph, lists, phases.m);
    for (const DecodedSample& s : samples) {
      if (s.cost && (!record.best_sample_cost || *s.cost < *record.best_sample_cost)) {
        record.best_sample_cost = s.cost;
      }
    }
    const ThresholdUpdate next = threshold_update(samples, phases, state);
    record.improved = next.improved;
    result.rounds.push_back(std::move(record));
    if (!next.improved) break;
    state = next;
  }

  result.best_word = state.incumbent;
  result.best_cost = state.incumbent_cost;
  result.best_tour = tsp::tour_from_word(lists, *state.incumbent);
  return result;
}

double sr99(const std::vector<std::optional<double>>& trial_costs, double optimum) {
  if (trial_costs.empty()) return 0.0;
  std::size_t hits = 0;
  for (const auto& c : trial_costs) {
    if (c && (*c <= optimum || optimum / *c >= 0.99)) ++hits;
  }
  return 100.0 * static_cast<double>(hits) / static_cast<double>(trial_costs.size());
}

}  // namespace gqtsp::gas
