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

#include "permops/rng.hpp"

#include <cmath>
#include <numbers>

namespace permops::rng {

std::uint64_t splitmix64(std::uint64_t x) {
    x += 0x9E3779B97F4A7C15ULL;
    x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ULL;
    x = (x ^ (x >> 27)) * 0x94D049BB133111EBULL;
    return x ^ (x >> 31);
}

SubStream::SubStream(std::uint64_t seed, std::uint64_t index)
    : eng_(splitmix64(splitmix64(seed) ^ splitmix64(index * 0xD1B54A32D192ED03ULL + 1))) {}

double SubStream::uniform01() {
    // 53-bit mantissa, shifted into (0, 1]
    return static_cast<double>((eng_() >> 11) + 1) * 0x1.0p-53;
}

double SubStream::gaussian() {
    if (have_spare_) {
        have_spare_ = false;
        return spare_;
    }
    double u1 = uniform01();
    double u2 = uniform01();
    double r = std::sqrt(-2.0 * std::log(u1));
    double theta = 2.0 * std::numbers::pi * u2;
    spare_ = r * std::sin(theta);
    have_spare_ = true;
    return r * std::cos(theta);
}

std::complex<double> SubStream::cgaussian() {
    constexpr double inv_sqrt2 = 0.70710678118654752440;
    return {gaussian() * inv_sqrt2, gaussian() * inv_sqrt2};
}

} // namespace permops::rng
