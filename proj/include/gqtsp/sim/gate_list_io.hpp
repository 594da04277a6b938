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

#include <iosfwd>

#include "gqtsp/sim/circuit.hpp"

namespace gqtsp::sim {

/// Plain-text gate list, version 1:
///
///   gqtsp-gates 1
///   qubits <total>
///   <kind> <qubit count> <qubits...> [<angles...>]
///
/// Kinds are x h p cp ccx mcx diag. Qubits are listed in Gate::qubits()
/// order (controls first). p and cp carry one angle, diag carries 2^k
/// angles; angles are radians printed with 17 significant digits so a
/// write/read round trip is exact.
void write_gate_list(std::ostream& out, const Circuit& circuit);

/// Parses the format above into a circuit whose ledger holds one register
/// named "q" spanning all qubits. Throws CircuitError on malformed input.
Circuit read_gate_list(std::istream& in);

}  // namespace gqtsp::sim
