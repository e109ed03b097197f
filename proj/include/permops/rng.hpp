// Copyright 2026 The permops Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <complex>
#include <cstdint>
#include <random>

namespace permops::rng {

/// SplitMix64 mixing step; used to derive independent substream seeds.
std::uint64_t splitmix64(std::uint64_t x);

/// Deterministic substream: the stream for (seed, index) is a pure
/// function of both, independent of how sample indices are partitioned
/// across workers. Gaussians come from an explicit Box-Muller transform,
/// so the byte-level output does not depend on the standard library's
/// distribution implementations.
class SubStream {
  public:
    SubStream(std::uint64_t seed, std::uint64_t index);

    std::uint64_t u64() { return eng_(); }
    /// Uniform in (0, 1].
    double uniform01();
    /// Standard normal.
    double gaussian();
    /// Complex Gaussian with E|z|^2 = 1.
    std::complex<double> cgaussian();

  private:
    std::mt19937_64 eng_;
    bool have_spare_ = false;
    double spare_ = 0;
};

} // namespace permops::rng
