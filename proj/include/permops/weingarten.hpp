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
#include <map>
#include <vector>

#include "permops/gram.hpp"
#include "permops/numeric.hpp"
#include "permops/permutation.hpp"

namespace permops::weingarten {

/// Exact inverse of the normalized Gram matrix. Entry (p1, p2) depends
/// only on the cycle type of p1^{-1} p2, so class values are cached by
/// type. Exists iff n <= d. Immutable after construction.
class WeingartenMatrix {
  public:
    /// Fraction-free Gaussian elimination on the d^n-scaled integer
    /// matrix; throws SingularMatrixError when n > d.
    static WeingartenMatrix invert(const gram::GramMatrix& G);

    int n() const { return n_; }
    int d() const { return d_; }
    std::size_t size() const { return size_; }
    const Rat& entry(std::size_t i, std::size_t j) const { return entries_[i * size_ + j]; }
    const Rat& class_value(const sym::CycleType& t) const;
    const std::map<sym::CycleType, Rat>& class_values() const { return class_values_; }
    Eigen::MatrixXd dense() const;

  private:
    WeingartenMatrix() = default;
    int n_ = 0, d_ = 0;
    std::size_t size_ = 0;
    std::vector<Rat> entries_;
    std::map<sym::CycleType, Rat> class_values_;
};

/// k-th Catalan number (2k)! / (k! (k+1)!).
Int catalan(int k);

/// Leading large-d coefficient of the Weingarten class value: the product
/// over cycles of length l of (-1)^{l-1} C_{l-1}. The per-cycle sign is
/// the convention pinned by exact inversion at large d (see the
/// asymptotics tests); the overall sign works out to (-1)^{n - c}.
Int moebius(const sym::CycleType& t);

struct AsymptoticRow {
    int d = 0;
    Rat class_value;     // exact Wg class value at this d
    double rescaled = 0; // class_value * d^{|sigma|}
    double residual = 0; // rescaled - moebius
};

struct AsymptoticCheck {
    sym::CycleType cycle_type;
    Int moeb;
    std::vector<AsymptoticRow> rows;
    /// residual(top d) / residual(top d / 2); second-order decay gives 1/4.
    double top_ratio = 0;
    bool ratio_in_window = false; // within [0.25*0.7, 0.25*1.3]
};

/// Tracks Wg(class) * d^{|sigma|} toward its Moebius limit across a d
/// grid whose top two entries differ by a factor 2. Exact inversion at
/// every grid point; requires n <= min(d_grid).
AsymptoticCheck asymptotic_check(const sym::CycleType& t, const std::vector<int>& d_grid);

} // namespace permops::weingarten
