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

#include "gqtsp/oracle/qubit_budget.hpp"

#include <algorithm>
#include <cmath>

#include "gqtsp/oracle/hcd.hpp"
#include "gqtsp/tsp/cycle.hpp"
#include "gqtsp/tsp/graph.hpp"

namespace gqtsp::oracle {

namespace {

std::size_t index_width(std::size_t cities) { return std::max<std::size_t>(1, tsp::ceil_log2(cities)); }

}  // namespace

std::size_t choice_width(std::size_t cities, ChoiceEncoding encoding, std::size_t degree) {
  if (encoding == ChoiceEncoding::kDense) return index_width(cities);
  return std::max<std::size_t>(1, tsp::ceil_log2(degree));
}

std::size_t QubitBudget::total() const {
  return cycle_qubits + result_qubits + std::max(clc_qubits, hcd_set()) + wide_choice_qubits;
}

QubitBudget optimized_budget(std::size_t cities, std::size_t m, std::size_t t) {
  const AnchorPlan plan = AnchorPlan::optimal(cities);
  QubitBudget b;
  b.cities = cities;
  b.m = m;
  b.n = index_width(cities);
  b.t = t;
  b.k = plan.k;
  b.anchors = plan.anchors;
  b.cycle_qubits = m * cities;
  b.location_qubits = b.n * plan.location_registers();
  b.check_qubits = tsp::sigma0(cities) - 1;
  b.scratch_qubits = m;
  b.clc_qubits = 2 * t + 1;
  b.wide_choice_qubits = m > 2 ? m - 2 : 0;
  return b;
}

std::size_t nonoptimized_total(std::size_t cities, std::size_t m, std::size_t t) {
  const std::size_t n = index_width(cities);
  return m * cities + n * cities + (cities - 1) + (2 * t + 1) + m + 2;
}

double asymptotic_estimate(std::size_t cities, std::size_t m) {
  const double x = static_cast<double>(cities);
  return static_cast<double>(m) * x + 2 * std::sqrt(x) * std::log2(x) +
         static_cast<double>(tsp::sigma0(cities));
}

}  // namespace gqtsp::oracle
