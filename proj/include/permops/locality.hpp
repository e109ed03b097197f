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

#include <cstdint>
#include <optional>
#include <vector>

#include "permops/dense_ops.hpp"
#include "permops/numeric.hpp"
#include "permops/permutation.hpp"

namespace permops::locality {

/// |pi(S) intersect complement(S)|.
int cut_value(const sym::Permutation& pi, const dense::LegSubset& S);

struct CutResult {
    dense::LegSubset subset;
    int achieved = 0; // sum over the instance of cut_value
    Rat target;       // |pi|/2 for the single-permutation construction,
                      // sum |pi_i| / 4 for the randomized one
    bool meets_target = false;
};

/// Per-cycle construction: every other element of each cycle goes into S.
/// Achieves at least ceil(|pi|/2).
CutResult deterministic_cut(const sym::Permutation& pi);

/// One subset working for several permutations simultaneously: random
/// subsets first, exhaustive sweep (n <= 12) if the trials miss. The
/// averaging argument guarantees some subset reaches sum |pi_i| / 4.
CutResult randomized_cut(const std::vector<sym::Permutation>& pis, int trials,
                         std::uint64_t seed);

struct PptCoeffRow {
    std::size_t index = 0; // enumerate(n) order
    double coeff_abs = 0;
    double bound = 0;  // (1 + n^2/sqrt(d)) d^{-|pi|/2}
    double margin = 0; // bound - coeff_abs
};

struct PptCoeffReport {
    bool applicable = false;   // the operator passed the PPT sweep
    bool hypothesis_ok = false; // n^2 <= sqrt(d)
    dense::PptResult ppt;
    std::vector<PptCoeffRow> rows;
    bool all_within = false;
};

/// Builds M = sum m_pi P(pi), sweeps the PPT condition, and when it
/// holds, checks the coefficient decay bound for every permutation.
PptCoeffReport ppt_coeff_check(const std::vector<double>& coeffs, int n, int d,
                               std::size_t cap = dense::kDenseCap);

/// Three-step upper-bound chain on the distinguishing bias of PPT
/// measurements between rotation-invariant states:
/// 2 sum_{pi != e} d^{-|pi|/2} <= 3 (e^{n^2/sqrt d} - 1) <= 6 n^2/sqrt d.
struct BoundChain {
    int n = 0;
    long d = 0;
    bool hypothesis_ok = false;      // n <= d^{1/4} (hiding), n <= d^{1/8} (product test)
    std::optional<Rat> exact_sum;    // rational when the needed root of d is integral
    double exact_sum_value = 0;      // exact_sum as double, or the double evaluation
    double exponential_bound = 0;
    double linear_bound = 0;
    bool chain_ordered = false;      // exact <= exponential <= linear
};

BoundChain hiding_bias_bound(int n, long d);

/// Product-test chain: 2((sum_pi d^{-|pi|/4})^2 - 1)
/// <= 2((e^{n^2/(2 d^{1/4})})^2 - 1) <= 4 n^2 / d^{1/4}.
BoundChain product_test_bound(int n, long d);

struct HidingMeasurement {
    std::string label;
    double identity_coeff = 0; // effect = a I + b SWAP
    double swap_coeff = 0;
    bool effect_ppt = false;      // 0 <= E^{Gamma} <= I over all subsets
    bool difference_valid = false; // -I <= (2E - I)^{Gamma} <= I over all subsets
    double bias = 0;              // tr (2E - I)(rho0 - rho1)
};

/// Two-qudit demonstration: Werner extremes rho0 (symmetric) and rho1
/// (antisymmetric), a small library of effects in span{I, SWAP} plus the
/// best grid-searched feasible effect, each checked against the exact
/// chain value 2/sqrt(d) and contrasted with the unrestricted bias 1.
struct HidingDemo {
    int d = 0;
    std::vector<HidingMeasurement> library;
    double best_feasible_bias = 0;
    double exact_chain_value = 0; // 2 d^{-1/2} at n = 2
    double unrestricted_bias = 0; // ||rho0 - rho1||_1 / 2 = 1
    bool all_below_chain = false;
};

HidingDemo hiding_demo(int d, int grid_points = 200, std::size_t cap = dense::kDenseCap);

} // namespace permops::locality
