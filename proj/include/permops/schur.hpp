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

#include <string>
#include <utility>
#include <vector>

#include "permops/numeric.hpp"

namespace permops::schur {

/// Integer partition lambda_1 >= lambda_2 >= ... > 0 of n. Trailing zeros
/// are dropped in storage; padding to d parts happens where formulas need it.
class IntegerPartition {
  public:
    explicit IntegerPartition(std::vector<int> parts);

    int n() const { return n_; }
    int rows() const { return static_cast<int>(parts_.size()); }
    const std::vector<int>& parts() const { return parts_; }
    bool fits(int d) const { return rows() <= d; }

    /// Young-diagram cells {(i,j) : 1 <= j <= lambda_i}, 1-based, row-major.
    std::vector<std::pair<int, int>> cells() const;

    /// lambda_i + d - i for i = 1..d (zero-padded parts); strictly
    /// decreasing. Throws if the partition has more than d rows.
    std::vector<long> padded(int d) const;

    std::string to_string() const;

    friend bool operator==(const IntegerPartition&, const IntegerPartition&) = default;

  private:
    std::vector<int> parts_;
    int n_;
};

/// Par(n,d): partitions of n with at most d rows, in reverse-lexicographic
/// order, starting at (n).
std::vector<IntegerPartition> partitions(int n, int d);

/// Dimension of the unitary-group irrep labeled by lambda (at most d rows).
Int dim_q(const IntegerPartition& lambda, int d);

/// Dimension of the symmetric-group irrep labeled by lambda.
Int dim_p(const IntegerPartition& lambda);

/// prod_{(i,j) in lambda} (d - i + j); equals n! * dim_q / dim_p.
Int content_product(const IntegerPartition& lambda, int d);

/// prod_{(i,j) in lambda} (1 + (j-i)/d): the Gram eigenvalue attached to
/// lambda, as an exact rational.
Rat gram_eigenvalue(const IntegerPartition& lambda, int d);

struct SpectrumEntry {
    IntegerPartition partition;
    Rat eigenvalue;
    Int multiplicity; // dim_p(lambda)^2
};

/// Spectrum of the n! x n! Gram matrix of permutation operators, in
/// closed form: one entry per lambda in Par(n,d). When n > d the excluded
/// partitions contribute a kernel whose dimension is reported explicitly.
struct ExactSpectrum {
    int n = 0;
    int d = 0;
    std::vector<SpectrumEntry> entries;
    Int kernel_dimension;

    Rat trace() const;            // sum of eigenvalue * multiplicity; equals n!
    Int total_multiplicity() const; // including the kernel; equals n!
    /// Eigenvalues expanded by multiplicity (kernel zeros included),
    /// ascending, converted to double for multiset comparisons.
    std::vector<double> expanded_doubles() const;
};

ExactSpectrum exact_spectrum(int n, int d);

/// Coefficient ratio between the random-pure-state and random-maximally-
/// entangled-state moment operators on the lambda block:
/// prod_{k=1}^{n-1} (1 + k/d^2)^{-1} * prod_{(i,j) in lambda} (1 + (j-i)/d).
Rat moment_ratio(const IntegerPartition& lambda, int d);

/// N = sum over all partitions of n of dim_p(lambda): the number of
/// mutually orthogonal rotation-invariant states available at d >= n.
/// Satisfies N^2 >= n!.
Int hideable_state_count(int n);

} // namespace permops::schur
