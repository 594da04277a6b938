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

#include "gqtsp/oracle/hcd.hpp"

#include <string>

#include "gqtsp/synth/mcx.hpp"
#include "gqtsp/tsp/cycle.hpp"

namespace gqtsp::oracle {

using sim::CircuitError;
using sim::Gate;

namespace {

std::vector<Qubit> slice(std::span<const Qubit> cycle, std::size_t i, std::size_t m) {
  return {cycle.begin() + static_cast<std::ptrdiff_t>(i * m),
          cycle.begin() + static_cast<std::ptrdiff_t>((i + 1) * m)};
}

void check_cycle(const ForwarderSpec& spec, std::span<const Qubit> cycle) {
  if (cycle.size() != spec.m * spec.cities()) {
    throw CircuitError("cycle register has " + std::to_string(cycle.size()) +
                       " qubits, expected " + std::to_string(spec.m * spec.cities()));
  }
}

}  // namespace

std::uint64_t ForwarderSpec::next(std::uint64_t index, std::uint64_t choice) const {
  if (index < lists.size() && choice < lists[index].size()) return lists[index][choice];
  return index;
}

synth::ClassicalTable ForwarderSpec::table() const {
  std::vector<std::uint64_t> values(std::size_t{1} << (n + m));
  const std::uint64_t index_mask = (std::uint64_t{1} << n) - 1;
  for (std::uint64_t a = 0; a < values.size(); ++a) values[a] = next(a & index_mask, a >> n);
  return synth::ClassicalTable(n + m, n, std::move(values));
}

synth::ClassicalTable ForwarderSpec::first_table() const {
  std::vector<std::uint64_t> values(std::size_t{1} << m);
  for (std::uint64_t s = 0; s < values.size(); ++s) values[s] = next(0, s);
  return synth::ClassicalTable(m, n, std::move(values));
}

ForwarderSpec make_forwarder_spec(const tsp::TspGraph& graph) {
  const tsp::Encoding enc = tsp::encoding_for(graph);
  return ForwarderSpec{tsp::build_adjacency_lists(graph), enc.m, enc.n};
}

ForwarderSpec make_forwarder_spec(tsp::AdjacencyLists lists, std::size_t m) {
  const std::size_t n = tsp::ceil_log2(lists.size());
  return ForwarderSpec{std::move(lists), m, n == 0 ? 1 : n};
}

void build_index_forwarder(Circuit& c, const ForwarderSpec& spec,
                           std::span<const Qubit> current, std::span<const Qubit> output,
                           std::span<const Qubit> cycle) {
  check_cycle(spec, cycle);
  if (current.size() != spec.n || output.size() != spec.n) {
    throw CircuitError("forwarder index registers must have n qubits");
  }
  std::vector<std::vector<Qubit>> data;
  for (std::size_t i = 0; i < spec.cities(); ++i) data.push_back(slice(cycle, i, spec.m));

  const std::vector<Qubit> s = c.ledger().borrow_zeroed(spec.m);
  const std::size_t start = c.size();
  synth::qaqr(c, current, data, s);
  const std::size_t end = c.size();
  std::vector<Qubit> address(current.begin(), current.end());
  address.insert(address.end(), s.begin(), s.end());
  synth::qacr(c, address, spec.table(), output);
  c.append_mirror(start, end);
  c.ledger().return_zeroed(s);
}

void build_first_forwarder(Circuit& c, const ForwarderSpec& spec,
                           std::span<const Qubit> output, std::span<const Qubit> cycle) {
  check_cycle(spec, cycle);
  if (output.size() != spec.n) throw CircuitError("forwarder output must have n qubits");
  synth::qacr(c, slice(cycle, 0, spec.m), spec.first_table(), output);
}

std::size_t k_opt(std::size_t cities) {
  if (cities < 2) throw CircuitError("k_opt needs at least two cities");
  std::size_t best = 1;
  std::size_t best_value = cities / 2 + 1;
  for (std::size_t k = 2; k < cities; ++k) {
    const std::size_t value = cities / (k + 1) + k;
    if (value < best_value) {
      best = k;
      best_value = value;
    }
  }
  return best;
}

AnchorPlan AnchorPlan::optimal(std::size_t cities) { return with_k(cities, k_opt(cities)); }

AnchorPlan AnchorPlan::with_k(std::size_t cities, std::size_t k) {
  if (k == 0 || k >= cities) {
    throw CircuitError("anchor plan needs 1 <= k < N, got k=" + std::to_string(k));
  }
  return AnchorPlan{cities, k, cities / (k + 1)};
}

HcdFootprint hcd_footprint(const ForwarderSpec& spec, HcdVariant variant,
                           const std::optional<AnchorPlan>& plan) {
  const std::size_t cities = spec.cities();
  HcdFootprint f;
  f.scratch_qubits = spec.m;
  f.check_qubits = variant == HcdVariant::kNaive ? cities - 1
                                                 : tsp::proper_divisors(cities).size();
  if (variant == HcdVariant::kAnchored) {
    f.location_qubits = spec.n * plan.value_or(AnchorPlan::optimal(cities)).location_registers();
  } else {
    f.location_qubits = spec.n * cities;
  }
  return f;
}

void build_hcd(Circuit& c, const ForwarderSpec& spec, HcdVariant variant,
               std::span<const Qubit> cycle, Qubit result,
               const std::optional<AnchorPlan>& plan_override) {
  check_cycle(spec, cycle);
  const std::size_t cities = spec.cities();
  const std::size_t n = spec.n;
  auto& ledger = c.ledger();

  std::vector<std::size_t> positions;
  if (variant == HcdVariant::kNaive) {
    for (std::size_t j = 1; j < cities; ++j) positions.push_back(j);
  } else {
    positions = tsp::proper_divisors(cities);
  }
  std::vector<int> slot(cities + 1, -1);
  for (std::size_t i = 0; i < positions.size(); ++i) slot[positions[i]] = static_cast<int>(i);

  std::vector<std::string> names{"hcd.checks"};
  const std::vector<Qubit> checks = ledger.allocate(names.back(), positions.size());
  auto alloc = [&](std::string name) {
    names.push_back(std::move(name));
    return ledger.allocate(names.back(), n);
  };
  auto forward = [&](const std::vector<Qubit>* prev, const std::vector<Qubit>& out) {
    if (prev == nullptr) {
      build_first_forwarder(c, spec, out, cycle);
    } else {
      build_index_forwarder(c, spec, *prev, out, cycle);
    }
  };
  auto check = [&](std::size_t j, const std::vector<Qubit>& reg) {
    if (j < cities && slot[j] >= 0) synth::or_gate(c, reg, checks[static_cast<std::size_t>(slot[j])]);
  };

  const std::size_t start = c.size();
  std::vector<Qubit> last;
  if (variant != HcdVariant::kAnchored) {
    std::vector<std::vector<Qubit>> regs;
    for (std::size_t j = 1; j <= cities; ++j) {
      regs.push_back(alloc("hcd.I" + std::to_string(j)));
      forward(j == 1 ? nullptr : &regs[j - 2], regs[j - 1]);
      check(j, regs[j - 1]);
    }
    last = regs.back();
  } else {
    const AnchorPlan plan = plan_override.value_or(AnchorPlan::optimal(cities));
    if (plan.cities != cities) throw CircuitError("anchor plan is for a different N");
    std::vector<std::vector<Qubit>> inter;
    std::vector<std::vector<Qubit>> anchors;
    for (std::size_t i = 0; i < plan.k; ++i) inter.push_back(alloc("hcd.X" + std::to_string(i)));
    for (std::size_t l = 0; l < plan.anchors; ++l) {
      anchors.push_back(alloc("hcd.A" + std::to_string(l + 1)));
    }
    const std::vector<Qubit>* prev = nullptr;
    std::size_t j = 0;
    for (std::size_t b = 0; b < plan.anchors; ++b) {
      std::vector<std::pair<std::size_t, std::size_t>> ranges;
      for (std::size_t i = 0; i < plan.k; ++i) {
        const std::size_t from = c.size();
        forward(prev, inter[i]);
        ranges.emplace_back(from, c.size());
        check(++j, inter[i]);
        prev = &inter[i];
      }
      forward(prev, anchors[b]);
      check(++j, anchors[b]);
      // free the intermediates from the previous anchor; checks stay set
      for (auto it = ranges.rbegin(); it != ranges.rend(); ++it) {
        c.append_mirror(it->first, it->second);
      }
      prev = &anchors[b];
    }
    for (std::size_t i = 0; i < plan.remainder(); ++i) {
      forward(prev, inter[i]);
      check(++j, inter[i]);
      prev = &inter[i];
    }
    last = *prev;
  }
  const std::size_t compute_end = c.size();

  std::vector<Qubit> controls = checks;
  controls.insert(controls.end(), last.begin(), last.end());
  for (Qubit q : last) c.append(Gate::x(q));
  c.append(Gate::mcx(controls, result));
  for (Qubit q : last) c.append(Gate::x(q));

  c.append_mirror(start, compute_end);
  for (const std::string& name : names) ledger.release(name);
}

}  // namespace gqtsp::oracle
