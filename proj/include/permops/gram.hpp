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
#include <cstdint>
#include <optional>
#include <vector>

#include "permops/numeric.hpp"
#include "permops/permutation.hpp"

namespace permops::gram {

/// Largest n! for which the dense double-precision eigensolver is run (n <= 6).
inline constexpr std::size_t kDenseEigenCap = 720;

/// The n! x n! Gram matrix of tensor-permutation operators under the
/// normalized Hilbert-Schmidt inner product. Entry (p1, p2) is
/// d^{-|p1^{-1} p2|}. Stored as the matrix of transposition distances
/// (d-independent); exact rational or integer-scaled views are derived
/// per entry. Symmetric, unit diagonal, positive semidefinite. Immutable.
class GramMatrix {
  public:
    GramMatrix(int n, int d, int cap = sym::kEnumerationCap);

    int n() const { return n_; }
    int d() const { return d_; }
    std::size_t size() const { return size_; }
    const std::vector<sym::Permutation>& permutations() const { return perms_; }

    int distance(std::size_t i, std::size_t j) const { return dist_[i * size_ + j]; }
    /// d^{-distance}, exact.
    Rat entry(std::size_t i, std::size_t j) const;
    /// d^n * entry = d^{c(p1^{-1} p2)}, an exact integer.
    Int scaled_entry(std::size_t i, std::size_t j) const;

    Rat trace() const { return Rat(factorial(static_cast<unsigned long>(n_))); }
    /// Literal sum of one row, exact.
    Rat row_sum_literal(std::size_t row) const;
    /// counts[k] = number of entries of the row at distance k; the exact
    /// multiset of the row's entries as powers of 1/d.
    std::vector<unsigned long> row_distance_histogram(std::size_t row) const;
    /// Exact row sum of a row with the given distance histogram at base b.
    static Rat row_sum_from_histogram(const std::vector<unsigned long>& counts, int b);

    Eigen::MatrixXd dense() const;

  private:
    int n_, d_;
    std::size_t size_;
    std::vector<sym::Permutation> perms_;
    std::vector<std::uint8_t> dist_;
};

struct SpectralReport {
    int n = 0;
    int d = 0;
    std::vector<double> eigenvalues; // ascending, n! of them
    Rat lambda_min_formula;          // prod_{j<n} (1 - j/d)
    Rat lambda_max_formula;          // prod_{j<n} (1 + j/d)
    double lambda_min_numeric = 0;
    double lambda_max_numeric = 0;
    double trace_distance = 0;  // ||G - I||_1 / n!
    double op_norm_distance = 0; // ||G - I||_inf = max |eig - 1|
    Rat row_sum;                 // closed form; also the 1->1 norm of G
    std::optional<Rat> cayley_bound; // nullopt when the geometric series diverges
};

/// Dense symmetric eigendecomposition plus the closed-form extremal
/// eigenvalues and distance-to-identity norms. Requires n! within
/// kDenseEigenCap. Each eigenpair is validated to residual
/// 1e-9 * ||G||_inf.
SpectralReport spectral_report(const GramMatrix& G);

Rat lambda_min_formula(int n, int d);
Rat lambda_max_formula(int n, int d);

/// prod_{j=1}^{n-1} (1 + j/d): every row of the Gram matrix sums to this.
Rat row_sum(int n, int d);

/// Geometric-series bound (1 - C(n,2)/d)^{-1} on the row sum; empty when
/// C(n,2) >= d. Dominates row_sum whenever finite.
std::optional<Rat> cayley_bound(int n, int d);

/// sum over S_n of sgn(pi) d^{c(pi)} = d (d-1) ... (d-n+1); zero whenever
/// n > d, which is why the Gram matrix is singular there.
Int antisymmetric_witness(int n, const Int& d, int cap = sym::kEnumerationCap);

} // namespace permops::gram
