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

#include <Eigen/Dense>
#include <complex>
#include <cstdint>

#include "permops/numeric.hpp"
#include "permops/permutation.hpp"

namespace permops::boson {

/// Permanent of a complex square matrix via Ryser's inclusion-exclusion
/// with Gray-code subset updates; O(2^n n) time, n <= 20.
std::complex<double> permanent(const Eigen::MatrixXcd& v);

struct ScalarMomentEstimate {
    double mean = 0;
    double stderr_mean = 0;
    std::size_t samples = 0;
    std::uint64_t seed = 0;
    double skewness = 0; // heavy-tail diagnostic for |Per|^{2t}
};

/// Haar-vs-Gaussian permanent moment experiment. Estimates
/// E|Per(V)|^{2t} with V the top-left n x n block of a Haar unitary on
/// C^m, and E|Per(X)|^{2t} with X i.i.d. complex Gaussian of variance
/// 1/m per entry. Requires the window hypothesis n^2 t^2 <= 2m.
struct PermanentMomentExperiment {
    int m = 0, n = 0, t = 1;
    std::size_t samples = 0;
    std::uint64_t seed = 0;
    ScalarMomentEstimate haar;
    ScalarMomentEstimate gauss;
    double ratio = 0;
    double ratio_stderr = 0;
    double window = 0;          // n^2 t^2 / m
    bool within_window = false; // ratio in [1 - window - 5 sigma, 1 + window + 5 sigma]
    // phase-invariance diagnostic: E[Per(V)] should vanish
    std::complex<double> per_mean{0, 0};
    double per_stderr = 0;
};

PermanentMomentExperiment moment_experiment(int m, int n, int t, std::size_t samples,
                                            std::uint64_t seed, int t_cap = 3);

/// E|Per(X)|^4 = (n+1) n!^2 / m^{2n}, exact.
Rat gaussian_fourth_exact(int n, int m);

/// Size of the w-statistic class {pi in S_{2n} : w(pi) = ell}
/// = n!^2 C(n, ell)^2. The sizes sum to (2n)!.
Int w_class_size(int n, int ell);

/// w(pi) = |pi({1..n}) intersect {n+1..2n}| for pi in S_{2n}.
int w_statistic(const sym::Permutation& pi_2n, int n);

/// Pairing overlap coefficient for the fourth moment (t = 2):
/// 1 / (C(n, w(pi)) m^n).
Rat alpha_overlap(const sym::Permutation& pi_2n, int n, int m);

/// Fourth moment reconstructed as the sum of alpha^2 over S_{2n};
/// exhaustive, n <= 4. Equals gaussian_fourth_exact.
Rat gaussian_fourth_via_alpha(int n, int m);

} // namespace permops::boson
