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

#include "gqtsp/sim/fusion.hpp"

#include <algorithm>
#include <bit>
#include <cmath>

#include "bits.hpp"

namespace gqtsp::sim {

namespace {

using detail::deposit;
using detail::extract;

std::uint64_t bit(Qubit q) { return std::uint64_t{1} << q; }

/// A gate rewritten onto the local bit positions of a block's support.
struct LocalOp {
  std::uint64_t controls = 0;
  std::uint64_t target = 0;  // 0 for phase ops
  double angle = 0.0;
  std::vector<std::uint64_t> reg;  // DiagonalPhase register bits, local
  std::span<const double> angles;
};

LocalOp localize(const Gate& g, std::uint64_t support) {
  LocalOp op;
  auto local = [&](Qubit q) { return extract(bit(q), support); };
  switch (g.kind()) {
    case GateKind::kX:
    case GateKind::kToffoli:
    case GateKind::kMultiControlledX:
      for (Qubit q : g.controls()) op.controls |= local(q);
      op.target = local(g.target());
      break;
    case GateKind::kPhase:
    case GateKind::kControlledPhase:
      for (Qubit q : g.qubits()) op.controls |= local(q);
      op.angle = g.angle();
      break;
    case GateKind::kDiagonalPhase:
      for (Qubit q : g.qubits()) op.reg.push_back(local(q));
      op.angles = g.angles();
      break;
    case GateKind::kH:
      throw CircuitError("Hadamard inside a monomial block");
  }
  return op;
}

// Cache-tiled Walsh-Hadamard on the qubits of `mask`. Targets below kTile
// are applied chunk by chunk; higher targets pair up whole tiles of
// contiguous amplitudes so the inner loop stays unit-stride.
void apply_hadamard_layer(StateVector& state, std::uint64_t mask) {
  constexpr unsigned kChunkBits = 11;
  constexpr std::uint64_t kTile = 64;
  const double r = 1.0 / std::sqrt(2.0);
  const std::size_t n = state.qubit_count();
  auto a = state.mutable_amplitudes();
  const unsigned chunk_bits = std::min<unsigned>(kChunkBits, static_cast<unsigned>(n));
  const std::uint64_t chunk = std::uint64_t{1} << chunk_bits;
  const std::uint64_t low = mask & (chunk - 1);
  const std::uint64_t high = mask & ~(chunk - 1);

  if (low != 0) {
    for (std::uint64_t c = 0; c < a.size(); c += chunk) {
      Amplitude* v = a.data() + c;
      for (std::uint64_t h = 1; h < chunk; h <<= 1) {
        if ((low & h) == 0) continue;
        for (std::uint64_t i = 0; i < chunk; i += 2 * h) {
          for (std::uint64_t j = i; j < i + h; ++j) {
            const Amplitude x = v[j];
            const Amplitude y = v[j + h];
            v[j] = (x + y) * r;
            v[j + h] = (x - y) * r;
          }
        }
      }
    }
  }
  if (high == 0) return;

  const unsigned k = static_cast<unsigned>(std::popcount(high));
  const std::size_t width = std::size_t{1} << k;
  std::vector<std::uint64_t> offsets(width);
  for (std::uint64_t j = 0; j < width; ++j) offsets[j] = deposit(j, high);
  const std::uint64_t all = (std::uint64_t{1} << n) - 1;
  const std::uint64_t free_high = all & ~high & ~(chunk - 1);
  const std::uint64_t outer = std::uint64_t{1} << std::popcount(free_high);
  const std::uint64_t tile = std::min(kTile, chunk);
  for (std::uint64_t o = 0; o < outer; ++o) {
    const std::uint64_t base = deposit(o, free_high);
    for (std::uint64_t t = 0; t < chunk; t += tile) {
      for (std::size_t h = 1; h < width; h <<= 1) {
        for (std::size_t i = 0; i < width; i += 2 * h) {
          for (std::size_t j = i; j < i + h; ++j) {
            Amplitude* x = a.data() + (base | offsets[j]) + t;
            Amplitude* y = a.data() + (base | offsets[j + h]) + t;
            for (std::uint64_t e = 0; e < tile; ++e) {
              const Amplitude p = x[e];
              const Amplitude q = y[e];
              x[e] = (p + q) * r;
              y[e] = (p - q) * r;
            }
          }
        }
      }
    }
  }
}

}  // namespace

CompiledCircuit::CompiledCircuit(const Circuit& circuit, FusionOptions options)
    : gate_count_(circuit.size()), qubit_count_(circuit.ledger().total()) {
  if (qubit_count_ > 40) throw ResourceError("circuit too wide to compile");
  std::vector<Gate> pending;
  std::uint64_t support = 0;
  std::uint64_t layer = 0;

  auto flush_layer = [&] {
    if (layer != 0) blocks_.push_back({Block::Kind::kHadamard, layer, {}, {}});
    layer = 0;
  };
  auto flush_block = [&] {
    if (!pending.empty()) close_block(pending, support);
    pending.clear();
    support = 0;
  };

  for (const Gate& g : circuit.gates()) {
    if (g.kind() == GateKind::kH) {
      flush_block();
      const std::uint64_t b = bit(g.target());
      if ((layer & b) != 0 ||
          static_cast<std::size_t>(std::popcount(layer)) >= options.max_hadamard_layer) {
        flush_layer();
      }
      layer |= b;
      continue;
    }
    flush_layer();
    const std::uint64_t m = detail::mask_of(g.qubits());
    if (!pending.empty() && static_cast<std::size_t>(std::popcount(support | m)) >
                                options.max_block_qubits) {
      flush_block();
    }
    support |= m;
    pending.push_back(g);
  }
  flush_layer();
  flush_block();
}

void CompiledCircuit::close_block(std::vector<Gate>& pending,
                                  std::uint64_t support) {
  std::vector<LocalOp> ops;
  ops.reserve(pending.size());
  for (const Gate& g : pending) ops.push_back(localize(g, support));

  const std::size_t width = std::size_t{1} << std::popcount(support);
  std::vector<std::uint64_t> image(width);
  std::vector<double> phase(width, 0.0);
  bool permutes = false;
  bool phased = false;
  for (std::uint64_t j = 0; j < width; ++j) {
    std::uint64_t s = j;
    double ph = 0.0;
    for (const LocalOp& op : ops) {
      if (!op.reg.empty()) {
        std::uint64_t k = 0;
        for (std::size_t i = 0; i < op.reg.size(); ++i) {
          if (s & op.reg[i]) k |= std::uint64_t{1} << i;
        }
        ph += op.angles[k];
      } else if ((s & op.controls) == op.controls) {
        if (op.target != 0) {
          s ^= op.target;
        } else {
          ph += op.angle;
        }
      }
    }
    image[j] = s;
    phase[j] = wrap_angle(ph);
    permutes = permutes || s != j;
    phased = phased || phase[j] != 0.0;
  }
  if (!permutes && !phased) return;

  Block block;
  block.support = support;
  if (!permutes) {
    block.kind = Block::Kind::kDiagonal;
    block.phase.resize(width);
    for (std::size_t j = 0; j < width; ++j) block.phase[j] = std::polar(1.0, phase[j]);
  } else {
    block.kind = Block::Kind::kMonomial;
    block.source.resize(width);
    if (phased) block.phase.resize(width);
    for (std::uint64_t j = 0; j < width; ++j) {
      block.source[image[j]] = deposit(j, support);
      if (phased) block.phase[image[j]] = std::polar(1.0, phase[j]);
    }
  }
  blocks_.push_back(std::move(block));
}

void CompiledCircuit::apply(StateVector& state) const {
  if (qubit_count_ > state.qubit_count()) {
    throw CircuitError("compiled circuit needs " + std::to_string(qubit_count_) +
                       " qubits, state has " + std::to_string(state.qubit_count()));
  }
  for (const Block& b : blocks_) {
    switch (b.kind) {
      case Block::Kind::kHadamard:
        apply_hadamard_layer(state, b.support);
        break;
      case Block::Kind::kDiagonal: {
        auto a = state.mutable_amplitudes();
        for (std::uint64_t i = 0; i < a.size(); ++i) {
          a[i] *= b.phase[extract(i, b.support)];
        }
        break;
      }
      case Block::Kind::kMonomial: {
        const auto a = state.amplitudes();
        std::vector<Amplitude>& out = state.scratch();
        const std::uint64_t keep = ~b.support;
        if (b.phase.empty()) {
          for (std::uint64_t i = 0; i < a.size(); ++i) {
            out[i] = a[(i & keep) | b.source[extract(i, b.support)]];
          }
        } else {
          for (std::uint64_t i = 0; i < a.size(); ++i) {
            const std::uint64_t j = extract(i, b.support);
            out[i] = a[(i & keep) | b.source[j]] * b.phase[j];
          }
        }
        state.swap_scratch();
        break;
      }
    }
  }
}

}  // namespace gqtsp::sim
