/*
 * Copyright (c) 2026, The hetsample Authors.
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

#pragma once

#include <cstddef>
#include <cstdint>
#include <random>
#include <span>
#include <vector>

namespace hetsample {

/// Seeded generator used by every stochastic code path.
///
/// Wraps std::mt19937_64, whose output sequence is fixed by the standard.
/// The derived draws (bounded integers, unit reals) are implemented here
/// rather than through <random> distributions, whose algorithms vary between
/// standard library implementations. split() derives an independent stream
/// so that sub-tasks do not depend on how many draws other sub-tasks made.
class Rng {
 public:
  explicit Rng(std::uint64_t seed);

  std::uint64_t next() { return engine_(); }

  /// Uniform integer in [0, n). n must be positive.
  std::uint64_t uniform_index(std::uint64_t n);

  /// Uniform real in [0, 1) with 53 random bits.
  double uniform01() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }

  bool bernoulli(double p) { return uniform01() < p; }

  Rng split(std::uint64_t stream) const;

 private:
  std::uint64_t seed_;
  std::mt19937_64 engine_;
};

std::uint64_t splitmix64(std::uint64_t x);

/// `count` distinct indices from [0, n), uniformly, in draw order.
std::vector<std::size_t> sample_without_replacement(std::size_t n, std::size_t count, Rng& rng);

/// `count` distinct indices drawn successively with probability proportional
/// to `weights` (Efraimidis-Spirakis keys). Once every positive-weight item
/// is taken, zero-weight items follow in uniform random order.
std::vector<std::size_t> weighted_sample_without_replacement(std::span<const double> weights, std::size_t count,
                                                             Rng& rng);

}  // namespace hetsample
