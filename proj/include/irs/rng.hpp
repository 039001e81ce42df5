// Copyright 2026 The Authors.
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

#ifndef IRS_RNG_HPP_
#define IRS_RNG_HPP_

#include <complex>
#include <cstdint>
#include <random>

namespace irs {

// Seeded random source with a fully pinned output sequence.
//
// The engine is std::mt19937_64, whose output is fixed by the standard. All
// derived distributions are implemented here instead of using the
// <random> distribution classes, whose algorithms vary across standard
// libraries, so results are bit-reproducible on any toolchain.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  std::uint64_t next() { return engine_(); }

  // Uniform on [0, 1) with 53 random mantissa bits.
  double uniform();

  // Uniform integer on [0, bound). bound must be positive.
  std::uint64_t below(std::uint64_t bound);

  // Circularly-symmetric complex Gaussian with E|z|^2 = variance.
  std::complex<double> complex_normal(double variance);

 private:
  std::mt19937_64 engine_;
};

// Mixes a base seed with a stream id (splitmix64 finalizer) so independent
// experiment streams can share one user-facing seed.
std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t stream);

}  // namespace irs

#endif  // IRS_RNG_HPP_
