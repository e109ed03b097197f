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
#include <vector>

#include "permops/dense_ops.hpp"
#include "permops/numeric.hpp"
#include "permops/schur.hpp"
#include "permops/weingarten.hpp"

namespace permops::moments {

/// Haar-distributed unitary: QR of a Ginibre matrix with the R diagonal
/// phases folded into Q so the factorization is the canonical one.
/// Sample i from seed s is a pure function of (s, i).
Eigen::MatrixXcd haar_unitary(int d, std::uint64_t seed, std::uint64_t index);

/// d x d matrix of i.i.d. complex Gaussians with E|g|^2 = 1/d.
Eigen::MatrixXcd ginibre(int d, std::uint64_t seed, std::uint64_t index);

/// Haar-distributed isometry (first cols columns of a Haar unitary on
/// C^rows), via economy QR of a rows x cols Ginibre block.
Eigen::MatrixXcd haar_isometry(int rows, int cols, std::uint64_t seed, std::uint64_t index);

struct SamplerSpec {
    enum class Kind { haar_unitary, ginibre };
    Kind kind = Kind::haar_unitary;
    int d = 2;
    std::uint64_t seed = 0;

    Eigen::MatrixXcd sample(std::uint64_t index) const;
};

/// Monte Carlo estimate of a matrix-valued moment: per-entry mean and
/// standard error. Deterministic in (seed, sample count).
struct MatrixMomentEstimate {
    Eigen::MatrixXcd mean;
    Eigen::MatrixXd stderr_entry;
    std::size_t samples = 0;
    std::uint64_t seed = 0;

    /// max over entries of |mean - reference| / stderr (entries with
    /// stderr below the absolute floor are compared to the floor).
    double max_sigma_deviation(const Eigen::MatrixXcd& reference,
                               double abs_floor = 1e-12) const;
};

/// E[A^{tensor n} tensor conj(A)^{tensor n}] over samples of the given
/// ensemble; a d^{2n}-dimensional operator (left legs 1..n, right legs
/// n+1..2n).
MatrixMomentEstimate mc_tensor_moment(const SamplerSpec& spec, int n, std::size_t samples,
                                      std::size_t cap = dense::kDenseCap);

/// Exact Haar moment operator E[U^{tensor n} tensor conj(U)^{tensor n}]
/// from the Weingarten expansion. Hermitian, PSD, trace n!.
dense::DenseOperator cs_unitary_exact(int n, int d, const weingarten::WeingartenMatrix& wg,
                                      std::size_t cap = dense::kDenseCap);

/// Exact Ginibre moment operator: the pairing sum, i.e. the Weingarten
/// expansion with the identity in place of Wg.
dense::DenseOperator wick_exact(int n, int d, std::size_t cap = dense::kDenseCap);

/// Monte Carlo E[psi^{tensor n}] over Haar-random pure states in C^dim.
MatrixMomentEstimate mc_pure_state_moment(int dim, int n, std::size_t samples,
                                          std::uint64_t seed, std::size_t cap = dense::kDenseCap);

/// Monte Carlo E[phi_U^{tensor n}] where phi_U = (U tensor I)|Phi_d>,
/// a random maximally entangled state on two d-dimensional halves.
MatrixMomentEstimate mc_entangled_state_moment(int d, int n, std::size_t samples,
                                               std::uint64_t seed,
                                               std::size_t cap = dense::kDenseCap);

/// Schur-block coefficients of the two state-moment operators and their
/// ratio (exact rationals). The ratio equals schur::moment_ratio.
struct StateMomentBlock {
    schur::IntegerPartition partition;
    Rat coeff_random_state; // uniform over lambda
    Rat coeff_random_mes;   // dim_p / (dim_q d^n)
    Rat ratio;              // coeff_random_state / coeff_random_mes
};

std::vector<StateMomentBlock> state_moment_operators(int n, int d);

/// Explicit check that the permutation-twirled entangled state
/// (1/n!) sum_pi |v_pi><v_pi| is isospectral to G/n!: builds the state
/// densely and compares its top n! eigenvalues with the exact spectrum.
struct PsiPiGramResult {
    std::vector<double> state_eigs;    // top n! eigenvalues, ascending
    std::vector<double> expected_eigs; // exact spectrum / n!, ascending
    double max_deviation = 0;
};

PsiPiGramResult psi_pi_gram(int n, int d, std::size_t cap = dense::kDenseCap);

} // namespace permops::moments
