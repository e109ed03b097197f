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

#include <vector>

#include "permops/dense_ops.hpp"
#include "permops/gram.hpp"
#include "permops/numeric.hpp"

namespace permops::gram {

/// Certified norm windows for A = sum a_pi P(pi) with real rational
/// coefficients, plus (when d^n is within the dense cap) directly
/// measured norms of the explicit operator.
struct NormWindowReport {
    int n = 0, d = 0;
    Rat epsilon;              // n^2 / d
    bool window_valid = false; // epsilon <= 1

    // exact arm
    Rat quad_form;   // <a, G a>
    Rat two_norm_sq; // ||a||_2^2
    Rat a_inf;       // ||a||_inf
    Rat a_one;       // ||a||_1
    bool two_norm_in_window = false; // quad in [1 - eps/2, e^{eps/2}] * ||a||^2

    // measured arm
    bool measured = false;
    double frobenius_sq_normalized = 0; // tr(A^dag A) / d^n; equals quad_form
    double op_norm = 0;                 // largest singular value
    double trace_norm = 0;              // sum of singular values
    bool inf_lower_certified = false;   // op_norm >= (1 - eps) ||a||_inf
    bool inf_lower_sharp = false;       // op_norm >= (1 - eps/2) ||a||_inf (observed)
    bool trace_lower_holds = false;     // trace_norm >= (1 - eps) d^n ||a||_inf
};

/// Coefficients indexed in enumerate(n) order.
NormWindowReport norm_window(const std::vector<Rat>& a, int n, int d,
                             std::size_t cap = dense::kDenseCap);

} // namespace permops::gram
