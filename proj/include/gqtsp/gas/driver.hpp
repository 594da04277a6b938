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

#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "gqtsp/oracle/clc.hpp"
#include "gqtsp/oracle/hcd.hpp"
#include "gqtsp/sim/circuit.hpp"
#include "gqtsp/sim/fusion.hpp"
#include "gqtsp/sim/state_vector.hpp"
#include "gqtsp/tsp/brute_force.hpp"
#include "gqtsp/tsp/graph.hpp"
#include "gqtsp/tsp/phases.hpp"

namespace gqtsp::gas {

using sim::Qubit;

/// Closest integer to pi/(2 theta) - 1/2 with theta = 2 asin(sqrt(M / 2^bits)).
/// Throws std::invalid_argument unless 1 <= marked < 2^bits.
std::size_t estimate_iterations(std::size_t search_qubits, std::uint64_t marked);

/// ceil(pi sqrt(2^bits) / 4), independent of the marked count.
std::size_t single_target_iterations(std::size_t search_qubits);

/// Probability of the marked set after k iterations from the uniform
/// state: sin^2((2k+1) theta / 2).
double rotation_probability(std::size_t search_qubits, std::uint64_t marked, std::size_t k);

/// One Grover iteration over the cycle register: the marking oracle (CLC,
/// HCD, C^2NOT on R, HCD and CLC again) followed by diffusion.
struct GroverStep {
  sim::Circuit circuit;
  std::vector<Qubit> cycle;
  Qubit result = 0;
  Qubit clc_result = 0;
  Qubit hcd_result = 0;
  std::size_t oracle_gates = 0;  // circuit.gates()[0, oracle_gates) is the oracle

  std::size_t qubits() const { return circuit.ledger().total(); }
};

struct StepOptions {
  std::uint64_t threshold = 0;
  synth::Direction direction = synth::Direction::kGreater;
  oracle::HcdVariant variant = oracle::HcdVariant::kAnchored;
};

GroverStep build_grover_step(const tsp::TspGraph& graph, const tsp::NormalizedPhases& phases,
                             const StepOptions& options);

/// Uniform superposition on the cycle register, R = |->, ancillas |0>.
sim::StateVector initial_state(const GroverStep& step);

/// Applies `iterations` compiled steps.
void grover_step(sim::StateVector& state, const sim::CompiledCircuit& step,
                 std::size_t iterations = 1);

/// Words the oracle marks when every QPE readout is its rounded bucket.
std::vector<std::uint64_t> marked_words(const tsp::AdjacencyLists& lists,
                                        const tsp::NormalizedPhases& phases,
                                        const StepOptions& options);

/// Probabilities of the undirected cycles ranked 0..count-1, each summed
/// over both of its directed encodings. Missing ranks read 0.
std::vector<double> top_cycle_probabilities(const std::vector<double>& cycle_distribution,
                                            const tsp::BruteForceResult& ranking,
                                            std::size_t count = 3);

struct IterationProbabilities {
  std::size_t iteration = 0;
  double p1 = 0.0;
  double p2 = 0.0;
  double p3 = 0.0;
  double marked = 0.0;  // total probability on marked_words
};

/// Noiseless p1, p2, p3 after 0..max_iterations steps.
std::vector<IterationProbabilities> sweep(const tsp::TspGraph& graph,
                                          const tsp::NormalizedPhases& phases,
                                          const StepOptions& options,
                                          std::size_t max_iterations);

struct DecodedSample {
  tsp::CycleWord word;
  std::size_t count = 0;
  std::optional<double> cost;  // nullopt unless a Hamiltonian cycle
};

struct ThresholdUpdate {
  std::uint64_t threshold = 0;
  std::optional<double> incumbent_cost;
  std::optional<tsp::CycleWord> incumbent;
  bool improved = false;
  bool no_valid_sample = false;
};

/// GAS rule: the threshold becomes the bucket of the cheapest valid word
/// seen so far. An empty or all-invalid sample leaves everything unchanged
/// and sets `no_valid_sample`.
ThresholdUpdate threshold_update(const std::vector<DecodedSample>& samples,
                                 const tsp::NormalizedPhases& phases,
                                 const ThresholdUpdate& current);

struct GasConfig {
  tsp::TspGraph graph{3};
  std::size_t t = 6;
  tsp::PhaseScaling scaling = tsp::PhaseScaling::kFitRange;
  std::size_t shots = 1024;
  std::size_t max_rounds = 5;
  /// Iterations per round; single_target_iterations(mN) when absent.
  std::optional<std::size_t> iterations;
  /// Valid cycles drawn classically for the initial threshold.
  std::size_t initial_samples = 8;
  oracle::HcdVariant variant = oracle::HcdVariant::kAnchored;
  std::uint64_t seed = 1;

  void validate() const;
};

struct RoundRecord {
  std::uint64_t threshold = 0;
  std::size_t iterations = 0;
  std::map<std::string, std::size_t> counts;  // cycle register bitstrings
  std::optional<double> best_sample_cost;
  bool improved = false;
};

struct ExperimentResult {
  std::size_t cities = 0;
  std::size_t qubits = 0;
  std::size_t step_gates = 0;
  std::size_t step_toffoli_equivalents = 0;
  std::uint64_t initial_threshold = 0;
  std::optional<double> initial_cost;
  std::vector<RoundRecord> rounds;
  std::optional<tsp::CycleWord> best_word;
  std::optional<std::vector<std::size_t>> best_tour;
  std::optional<double> best_cost;
};

/// Thrown when the graph has no Hamiltonian cycle to start from.
class NoValidCycle : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Grover adaptive search: a classical initial threshold,
/// then rounds of Grover iterations, sampling and threshold updates until
/// a round brings no improvement or max_rounds is reached.
ExperimentResult run_gqtsp(const GasConfig& config);

/// Percentage of trials whose cost is within 1% of the optimum.
double sr99(const std::vector<std::optional<double>>& trial_costs, double optimum);

}  // namespace gqtsp::gas
