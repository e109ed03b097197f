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
#include <vector>

#include "permops/numeric.hpp"
#include "permops/permutation.hpp"

namespace permops::weingarten {
class WeingartenMatrix;
}

namespace permops::dense {

/// Default cap on the side length d^legs of explicit matrices.
inline constexpr std::size_t kDenseCap = 4096;

using Matrix = Eigen::MatrixXcd;
using Vector = Eigen::VectorXcd;
using Complex = std::complex<double>;

/// Subset of the tensor legs {1..legs}, stored as a bitmask (bit k-1 for
/// leg k).
struct LegSubset {
    std::uint32_t bits = 0;
    int legs = 0;

    static LegSubset none(int legs) { return {0, legs}; }
    static LegSubset all(int legs) {
        return {static_cast<std::uint32_t>((1u << legs) - 1), legs};
    }
    static LegSubset of(int legs, const std::vector<int>& members);

    bool contains(int leg) const { return (bits >> (leg - 1)) & 1u; }
    LegSubset complement() const { return {~bits & ((1u << legs) - 1), legs}; }
    int count() const;
    std::vector<int> members() const;
    std::string to_string() const; // "{1,3}"
};

/// Complex operator on (C^d)^{tensor legs}. Basis index convention: leg 1
/// is the most significant digit of the row/column index, so
/// index(i_1..i_n) = ((i_1 d + i_2) d + ...) with 0-based digits.
class DenseOperator {
  public:
    DenseOperator(Matrix m, int d, int legs);

    static DenseOperator identity(int d, int legs);

    const Matrix& matrix() const { return mat_; }
    Matrix& matrix() { return mat_; }
    int d() const { return d_; }
    int legs() const { return legs_; }
    std::size_t side() const { return static_cast<std::size_t>(mat_.rows()); }

    /// Transpose of the row/column indices of the legs in S. An
    /// involution per subset; empty S is the identity map, the full set
    /// is the plain transpose.
    DenseOperator partial_transpose(const LegSubset& S) const;

    DenseOperator operator*(const DenseOperator& rhs) const;

  private:
    Matrix mat_;
    int d_;
    int legs_;
};

/// The tensor-leg permutation operator: maps |j_1..j_n> to the basis
/// vector with digit m equal to j_{pi^{-1}(m)}. Satisfies
/// perm_operator(p) * perm_operator(q) == perm_operator(p.compose(q)) and
/// has trace d^{c(pi)}.
DenseOperator perm_operator(const sym::Permutation& pi, int d,
                            std::size_t cap = kDenseCap);

/// Normalized Hilbert-Schmidt inner product tr(A^dag B) / d^legs.
Complex hs_inner(const DenseOperator& A, const DenseOperator& B);

struct PtLawResult {
    int k = 0;                     // |S intersect pi(complement of S)|
    std::size_t nonzero_count = 0; // d^{n-2k}
    double singular_value = 0;     // d^k
    Int trace_norm;                // d^{n-k}, exact
    bool verified = false;         // only meaningful when verify was requested
    double max_deviation = 0;      // against the explicit SVD
};

/// Singular-value law of a partially transposed permutation operator:
/// d^{n-2k} singular values equal to d^k, the rest zero. Optionally
/// verifies against the explicit SVD (atol 1e-9 * d^{n/2}).
PtLawResult pt_singular_law(const sym::Permutation& pi, const LegSubset& S, int d,
                            bool verify = true, std::size_t cap = kDenseCap);

struct PptResult {
    bool ppt = false;           // 0 <= M^{Gamma_S} <= I for every S
    bool contraction = false;   // -I <= M^{Gamma_S} <= I for every S
    double worst_min_eig = 0;   // smallest eigenvalue over all subsets
    double worst_max_eig = 0;   // largest eigenvalue over all subsets
    LegSubset worst_min_subset; // where the minimum is attained
    LegSubset worst_max_subset;
};

/// Sweeps every subset of legs, eigendecomposing each partial transpose
/// of a Hermitian M. Throws on non-Hermitian input.
PptResult ppt_check(const DenseOperator& M, double tol = 1e-9);

struct ProjectorsAndState {
    DenseOperator symmetric;      // (1/n!) sum of perm operators; trace C(d+n-1,n)
    DenseOperator antisymmetric;  // signed average; trace C(d,n)
    Vector entangled_power;       // |Phi_d>^{tensor n} on 2n legs, legs k and n+k paired
};

ProjectorsAndState projectors_and_states(int d, int n, std::size_t cap = kDenseCap);

/// |Phi_d>^{tensor n} as a vector on 2n legs of dimension d, with leg k
/// paired to leg n+k: component (i,j) = prod_k delta(i_k, j_k) / d^{n/2}.
Vector phi_power_vector(int d, int n, std::size_t cap = kDenseCap);

struct SpanProjection {
    std::vector<Complex> coefficients;   // indexed by enumerate(n) order
    double reconstruction_error = 0;     // ||M - sum m_pi P(pi)||_2 / ||M||_2
};

/// Coefficients of the orthogonal projection of M onto the span of the
/// permutation operators: m = Wg * v with v_pi = <P(pi), M>. Zero
/// reconstruction error iff M lies in the span.
SpanProjection project_to_perm_span(const DenseOperator& M,
                                    const weingarten::WeingartenMatrix& Wg);

} // namespace permops::dense
