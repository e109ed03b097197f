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
#include <vector>

#include "permops/numeric.hpp"

namespace permops::setpart {

/// Enumeration stops at Bell(9) = 21147 partitions.
inline constexpr int kBellCap = 9;

/// Partition of {1..n} into disjoint nonempty blocks. Canonical form:
/// blocks sorted by minimum element, elements sorted within a block.
class SetPartition {
  public:
    explicit SetPartition(std::vector<std::vector<int>> blocks);

    int n() const { return n_; }
    int block_count() const { return static_cast<int>(blocks_.size()); }
    const std::vector<std::vector<int>>& blocks() const { return blocks_; }
    /// block_of[x-1] = index of the block containing x.
    const std::vector<int>& block_index() const { return block_of_; }
    std::string to_string() const;

    friend bool operator==(const SetPartition&, const SetPartition&) = default;

  private:
    std::vector<std::vector<int>> blocks_;
    std::vector<int> block_of_;
    int n_;
};

/// All set partitions of {1..n} in canonical (restricted-growth-string)
/// order; count equals the Bell number.
std::vector<SetPartition> enumerate_set_partitions(int n, int cap = kBellCap);

Int bell_number(int n);

/// Finest partition coarser than both: transitive closure of the union
/// of the block relations.
SetPartition join(const SetPartition& a, const SetPartition& b);

/// Gram matrix of the block-constant superposition states. The squared
/// inner product |<E_a|E_b>|^2 = d^{2 b(join) - b(a) - b(b)} is an exact
/// rational; the linear variant d^{b(join) - (b(a)+b(b))/2} involves
/// half-integer powers and is kept as an integer exponent over sqrt(d).
class PartitionGram {
  public:
    PartitionGram(int n, int d, int cap = kBellCap);

    int n() const { return n_; }
    int d() const { return d_; }
    std::size_t size() const { return parts_.size(); }
    const std::vector<SetPartition>& partitions() const { return parts_; }

    /// 2 b(join) - b(a) - b(b); always <= 0, zero iff a == b.
    int exponent(std::size_t i, std::size_t j) const { return expo_[i * size() + j]; }
    double linear_entry(std::size_t i, std::size_t j) const;
    Rat squared_entry(std::size_t i, std::size_t j) const;
    Eigen::MatrixXd linear_dense() const;
    Eigen::MatrixXd squared_dense() const;

  private:
    int n_, d_;
    std::vector<SetPartition> parts_;
    std::vector<int> expo_;
};

/// Rayleigh-quotient witness on the vector supported uniformly on the
/// single-block partition and every two-block partition. Certifies that
/// lambda_max grows with n at fixed d, unlike the permutation Gram
/// matrix.
struct BlowupWitness {
    int n = 0, d = 0;
    Int two_block_count;        // 2^{n-1} - 1
    Rat witness_bound_squared;  // exact lower bound on lambda_max (squared variant)
    double witness_bound_linear;
    double lambda_max_squared;  // numeric
    double lambda_max_linear;
};

BlowupWitness blowup_witness(int n, int d, int cap = kBellCap);

} // namespace permops::setpart
