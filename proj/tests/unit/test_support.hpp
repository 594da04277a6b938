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

#include <cmath>
#include <complex>
#include <cstdint>
#include <random>
#include <vector>

#include "gqtsp/sim/state_vector.hpp"

namespace gqtsp::testing {

using Matrix = std::vector<std::vector<std::complex<double>>>;

/// Column j is the circuit applied to basis state j, on `width` qubits.
inline Matrix unitary_of(const sim::Circuit& c, std::size_t width) {
  const std::size_t dim = std::size_t{1} << width;
  Matrix u(dim, std::vector<std::complex<double>>(dim));
  for (std::size_t j = 0; j < dim; ++j) {
    sim::StateVector s(width);
    s.set_basis_state(j);
    s.apply(c);
    for (std::size_t i = 0; i < dim; ++i) u[i][j] = s[i];
  }
  return u;
}

/// Image of a basis state under a circuit expected to permute basis
/// states; returns the index holding |amplitude| ~ 1, or -1.
inline std::int64_t basis_image(const sim::Circuit& c, std::size_t width, std::uint64_t in) {
  sim::StateVector s(width);
  s.set_basis_state(in);
  s.apply(c);
  for (std::uint64_t i = 0; i < s.dimension(); ++i) {
    if (std::abs(std::abs(s[i]) - 1.0) < 1e-9) return static_cast<std::int64_t>(i);
  }
  return -1;
}

inline double max_abs_diff(const Matrix& a, const Matrix& b) {
  double d = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) {
    for (std::size_t j = 0; j < a[i].size(); ++j) d = std::max(d, std::abs(a[i][j] - b[i][j]));
  }
  return d;
}

/// A normalized random state, deterministic in the seed.
inline sim::StateVector random_state(std::size_t width, std::uint64_t seed) {
  sim::StateVector s(width);
  std::mt19937_64 rng(seed);
  std::normal_distribution<double> g;
  auto a = s.mutable_amplitudes();
  double norm = 0.0;
  for (auto& x : a) {
    x = {g(rng), g(rng)};
    norm += std::norm(x);
  }
  for (auto& x : a) x /= std::sqrt(norm);
  return s;
}

inline sim::Circuit circuit_on(std::size_t width) {
  sim::Circuit c;
  c.ledger().allocate("q", width);
  return c;
}

}  // namespace gqtsp::testing
