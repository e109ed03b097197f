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

#include <compare>
#include <cstdint>
#include <string>
#include <vector>

#include "permops/numeric.hpp"

namespace permops::sym {

/// Dense S_n-indexed matrices are only built up to this n (8! = 40320 rows).
inline constexpr int kEnumerationCap = 8;

/// Cycle structure of a permutation: weakly decreasing cycle lengths
/// (fixed points included as 1-cycles) summing to n.
struct CycleType {
    std::vector<int> parts;

    int n() const;
    int cycle_count() const { return static_cast<int>(parts.size()); }
    int fixed_point_count() const;
    /// c_k: number of cycles of length k.
    int count_of_length(int k) const;
    /// n - cycle_count; the transposition metric of any permutation of this type.
    int transposition_distance() const { return n() - cycle_count(); }
    std::string to_string() const;

    friend bool operator==(const CycleType&, const CycleType&) = default;
    friend auto operator<=>(const CycleType&, const CycleType&) = default;
};

/// Element of S_n in one-line notation. Interfaces are 1-based: image(x)
/// is the image of x under the permutation, x in {1..n}. Immutable after
/// construction; safe to share across threads.
class Permutation {
  public:
    /// images[x-1] = pi(x); must be a bijection on {1..n}.
    explicit Permutation(std::vector<int> images);

    static Permutation identity(int n);
    static Permutation transposition(int n, int a, int b);
    /// Permutation with a single cycle a1 -> a2 -> ... -> ak -> a1, other
    /// points fixed.
    static Permutation from_cycle(int n, const std::vector<int>& cycle);

    int n() const { return static_cast<int>(images_.size()); }
    int image(int x) const { return images_[static_cast<std::size_t>(x) - 1]; }
    const std::vector<int>& one_line() const { return images_; }

    /// (p * q)(x) = p(q(x)); matches the matrix representation property
    /// of the tensor-permutation operators.
    Permutation compose(const Permutation& q) const;
    Permutation inverse() const;

    /// Cycle decomposition including fixed points; each cycle is listed
    /// starting at its smallest element, cycles ordered by that element.
    std::vector<std::vector<int>> cycles() const;
    CycleType cycle_type() const;
    int cycle_count() const;
    /// |pi| = n - c(pi): graph distance from the identity in the Cayley
    /// graph generated by all transpositions.
    int transposition_distance() const { return n() - cycle_count(); }
    /// (-1)^|pi|
    int sign() const { return transposition_distance() % 2 == 0 ? 1 : -1; }
    /// Number of non-fixed points; always >= transposition_distance().
    int derangement_size() const;
    bool is_identity() const;

    std::string to_string() const;

    friend bool operator==(const Permutation&, const Permutation&) = default;
    friend auto operator<=>(const Permutation&, const Permutation&) = default;

  private:
    std::vector<int> images_; // 1-based images
};

/// All n! permutations in lexicographic order of one-line notation; this
/// order is the canonical index for every matrix over S_n. Throws
/// ResourceLimitError above the cap.
std::vector<Permutation> enumerate(int n, int cap = kEnumerationCap);

/// |p^{-1} q| without materializing the composition.
int relative_distance(const Permutation& p, const Permutation& q);

} // namespace permops::sym
