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

#include "gqtsp/sim/gate.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

namespace gqtsp::sim {

namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi;
constexpr std::size_t kMaxDiagonalWidth = 24;

void require_distinct(const std::vector<Qubit>& qubits) {
  std::vector<Qubit> sorted = qubits;
  std::sort(sorted.begin(), sorted.end());
  if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) {
    throw CircuitError("gate qubits must be distinct");
  }
}

}  // namespace

std::string_view to_string(GateKind kind) {
  switch (kind) {
    case GateKind::kX: return "x";
    case GateKind::kH: return "h";
    case GateKind::kPhase: return "p";
    case GateKind::kControlledPhase: return "cp";
    case GateKind::kToffoli: return "ccx";
    case GateKind::kMultiControlledX: return "mcx";
    case GateKind::kDiagonalPhase: return "diag";
  }
  return "?";
}

GateKind gate_kind_from_string(std::string_view name) {
  for (GateKind k : {GateKind::kX, GateKind::kH, GateKind::kPhase,
                     GateKind::kControlledPhase, GateKind::kToffoli,
                     GateKind::kMultiControlledX, GateKind::kDiagonalPhase}) {
    if (to_string(k) == name) return k;
  }
  throw CircuitError("unknown gate kind '" + std::string(name) + "'");
}

double wrap_angle(double radians) {
  double r = std::fmod(radians, kTwoPi);
  if (r < 0.0) r += kTwoPi;
  // fmod can return exactly 2pi after the correction for tiny negatives.
  if (r >= kTwoPi) r -= kTwoPi;
  return r;
}

Gate::Gate(GateKind kind, std::vector<Qubit> qubits, double angle,
           std::shared_ptr<const std::vector<double>> table)
    : kind_(kind),
      qubits_(std::move(qubits)),
      angle_(wrap_angle(angle)),
      table_(std::move(table)) {
  if (qubits_.empty()) throw CircuitError("gate without qubits");
  require_distinct(qubits_);
}

Gate Gate::x(Qubit target) { return Gate(GateKind::kX, {target}); }
Gate Gate::h(Qubit target) { return Gate(GateKind::kH, {target}); }

Gate Gate::phase(Qubit target, double angle) {
  return Gate(GateKind::kPhase, {target}, angle);
}

Gate Gate::controlled_phase(Qubit control, Qubit target, double angle) {
  return Gate(GateKind::kControlledPhase, {control, target}, angle);
}

Gate Gate::toffoli(Qubit c0, Qubit c1, Qubit target) {
  return Gate(GateKind::kToffoli, {c0, c1, target});
}

Gate Gate::mcx(std::span<const Qubit> controls, Qubit target) {
  std::vector<Qubit> qubits(controls.begin(), controls.end());
  qubits.push_back(target);
  switch (controls.size()) {
    case 0: return Gate(GateKind::kX, std::move(qubits));
    case 2: return Gate(GateKind::kToffoli, std::move(qubits));
    default: return Gate(GateKind::kMultiControlledX, std::move(qubits));
  }
}

Gate Gate::cnot(Qubit control, Qubit target) {
  return Gate(GateKind::kMultiControlledX, {control, target});
}

Gate Gate::diagonal(std::span<const Qubit> reg, std::vector<double> angles) {
  if (reg.empty() || reg.size() > kMaxDiagonalWidth) {
    throw CircuitError("diagonal gate register width out of range");
  }
  if (angles.size() != (std::size_t{1} << reg.size())) {
    throw CircuitError("diagonal gate needs 2^width angles");
  }
  for (double& a : angles) a = wrap_angle(a);
  return Gate(GateKind::kDiagonalPhase, {reg.begin(), reg.end()}, 0.0,
              std::make_shared<const std::vector<double>>(std::move(angles)));
}

std::span<const Qubit> Gate::controls() const {
  switch (kind_) {
    case GateKind::kControlledPhase:
    case GateKind::kToffoli:
    case GateKind::kMultiControlledX:
      return std::span<const Qubit>(qubits_).first(qubits_.size() - 1);
    default:
      return {};
  }
}

std::span<const double> Gate::angles() const {
  if (!table_) return {};
  return *table_;
}

Gate Gate::inverse() const {
  switch (kind_) {
    case GateKind::kPhase:
    case GateKind::kControlledPhase:
      return Gate(kind_, qubits_, -angle_);
    case GateKind::kDiagonalPhase: {
      std::vector<double> negated(table_->size());
      std::transform(table_->begin(), table_->end(), negated.begin(),
                     [](double a) { return wrap_angle(-a); });
      return Gate(kind_, qubits_, 0.0,
                  std::make_shared<const std::vector<double>>(std::move(negated)));
    }
    default:
      return *this;
  }
}

bool Gate::is_classical() const {
  return kind_ == GateKind::kX || kind_ == GateKind::kToffoli ||
         kind_ == GateKind::kMultiControlledX;
}

bool Gate::is_diagonal() const {
  return kind_ == GateKind::kPhase || kind_ == GateKind::kControlledPhase ||
         kind_ == GateKind::kDiagonalPhase;
}

Qubit Gate::max_qubit() const {
  return *std::max_element(qubits_.begin(), qubits_.end());
}

bool operator==(const Gate& a, const Gate& b) {
  if (a.kind_ != b.kind_ || a.qubits_ != b.qubits_ || a.angle_ != b.angle_) {
    return false;
  }
  if (a.table_ == b.table_) return true;
  return a.table_ && b.table_ && *a.table_ == *b.table_;
}

}  // namespace gqtsp::sim
