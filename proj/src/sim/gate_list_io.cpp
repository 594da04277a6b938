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

#include "gqtsp/sim/gate_list_io.hpp"

#include <iomanip>
#include <istream>
#include <limits>
#include <ostream>
#include <sstream>
#include <string>

namespace gqtsp::sim {

namespace {

constexpr std::string_view kMagic = "gqtsp-gates";
constexpr int kVersion = 1;

[[noreturn]] void fail(std::size_t line, const std::string& what) {
  throw CircuitError("gate list line " + std::to_string(line) + ": " + what);
}

}  // namespace

void write_gate_list(std::ostream& out, const Circuit& circuit) {
  out << kMagic << ' ' << kVersion << '\n';
  out << "qubits " << circuit.ledger().total() << '\n';
  out << std::setprecision(std::numeric_limits<double>::max_digits10);
  for (const Gate& g : circuit.gates()) {
    out << to_string(g.kind()) << ' ' << g.qubits().size();
    for (Qubit q : g.qubits()) out << ' ' << q;
    if (g.kind() == GateKind::kPhase || g.kind() == GateKind::kControlledPhase) {
      out << ' ' << g.angle();
    } else if (g.kind() == GateKind::kDiagonalPhase) {
      for (double a : g.angles()) out << ' ' << a;
    }
    out << '\n';
  }
}

Circuit read_gate_list(std::istream& in) {
  std::string line;
  std::size_t line_no = 0;
  auto next_line = [&]() -> bool {
    while (std::getline(in, line)) {
      ++line_no;
      if (!line.empty() && line[0] != '#') return true;
    }
    return false;
  };

  if (!next_line()) fail(line_no, "missing header");
  {
    std::istringstream header(line);
    std::string magic;
    int version = 0;
    if (!(header >> magic >> version) || magic != kMagic || version != kVersion) {
      fail(line_no, "unsupported header '" + line + "'");
    }
  }
  if (!next_line()) fail(line_no, "missing qubit count");
  std::size_t total = 0;
  {
    std::istringstream count(line);
    std::string word;
    if (!(count >> word >> total) || word != "qubits") {
      fail(line_no, "expected 'qubits <n>'");
    }
  }

  Circuit circuit;
  if (total > 0) circuit.ledger().allocate("q", total);
  while (next_line()) {
    std::istringstream fields(line);
    std::string kind_name;
    std::size_t arity = 0;
    if (!(fields >> kind_name >> arity) || arity == 0) fail(line_no, "bad gate");
    GateKind kind{};
    try {
      kind = gate_kind_from_string(kind_name);
    } catch (const CircuitError& e) {
      fail(line_no, e.what());
    }
    std::vector<Qubit> qs(arity);
    for (Qubit& q : qs) {
      if (!(fields >> q)) fail(line_no, "missing qubit index");
    }
    std::vector<double> angles;
    double a = 0.0;
    while (fields >> a) angles.push_back(a);
    if (!fields.eof()) fail(line_no, "trailing garbage");

    auto expect = [&](std::size_t n_qubits, std::size_t n_angles) {
      if (qs.size() != n_qubits || angles.size() != n_angles) {
        fail(line_no, "wrong operand count for " + kind_name);
      }
    };
    try {
      switch (kind) {
        case GateKind::kX:
          expect(1, 0);
          circuit.append(Gate::x(qs[0]));
          break;
        case GateKind::kH:
          expect(1, 0);
          circuit.append(Gate::h(qs[0]));
          break;
        case GateKind::kPhase:
          expect(1, 1);
          circuit.append(Gate::phase(qs[0], angles[0]));
          break;
        case GateKind::kControlledPhase:
          expect(2, 1);
          circuit.append(Gate::controlled_phase(qs[0], qs[1], angles[0]));
          break;
        case GateKind::kToffoli:
          expect(3, 0);
          circuit.append(Gate::toffoli(qs[0], qs[1], qs[2]));
          break;
        case GateKind::kMultiControlledX: {
          expect(arity, 0);
          const Qubit target = qs.back();
          qs.pop_back();
          circuit.append(Gate::mcx(qs, target));
          break;
        }
        case GateKind::kDiagonalPhase:
          if (arity >= 63 || angles.size() != (std::size_t{1} << arity)) {
            fail(line_no, "diag needs 2^k angles");
          }
          circuit.append(Gate::diagonal(qs, std::move(angles)));
          break;
      }
    } catch (const CircuitError& e) {
      if (std::string_view(e.what()).starts_with("gate list line")) throw;
      fail(line_no, e.what());
    }
  }
  return circuit;
}

}  // namespace gqtsp::sim
