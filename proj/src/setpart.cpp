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

#include "permops/setpart.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <sstream>

#include "permops/errors.hpp"

namespace permops::setpart {

SetPartition::SetPartition(std::vector<std::vector<int>> blocks) : blocks_(std::move(blocks)) {
    n_ = 0;
    for (auto& b : blocks_) {
        if (b.empty())
            throw PreconditionError("SetPartition: blocks must be nonempty");
        std::sort(b.begin(), b.end());
        n_ += static_cast<int>(b.size());
    }
    std::sort(blocks_.begin(), blocks_.end(),
              [](const auto& a, const auto& b) { return a.front() < b.front(); });
    block_of_.assign(static_cast<std::size_t>(n_), -1);
    for (std::size_t bi = 0; bi < blocks_.size(); ++bi)
        for (int x : blocks_[bi]) {
            if (x < 1 || x > n_ || block_of_[static_cast<std::size_t>(x) - 1] != -1)
                throw PreconditionError("SetPartition: blocks must partition {1..n}");
            block_of_[static_cast<std::size_t>(x) - 1] = static_cast<int>(bi);
        }
}

std::string SetPartition::to_string() const {
    std::ostringstream os;
    os << '{';
    for (std::size_t bi = 0; bi < blocks_.size(); ++bi) {
        os << (bi ? "|" : "");
        for (std::size_t k = 0; k < blocks_[bi].size(); ++k)
            os << (k ? "," : "") << blocks_[bi][k];
    }
    os << '}';
    return os.str();
}

std::vector<SetPartition> enumerate_set_partitions(int n, int cap) {
    if (n < 1)
        throw PreconditionError("enumerate_set_partitions: n must be positive");
    if (n > cap)
        throw ResourceLimitError("enumerate_set_partitions: n exceeds the Bell cap");
    // restricted growth strings: a[0] = 0, a[i] <= 1 + max(a[0..i-1])
    std::vector<SetPartition> out;
    std::vector<int> rgs(static_cast<std::size_t>(n), 0);
    auto emit = [&]() {
        int blocks = *std::max_element(rgs.begin(), rgs.end()) + 1;
        std::vector<std::vector<int>> bl(static_cast<std::size_t>(blocks));
        for (int x = 1; x <= n; ++x)
            bl[static_cast<std::size_t>(rgs[static_cast<std::size_t>(x) - 1])].push_back(x);
        out.push_back(SetPartition(std::move(bl)));
    };
    auto rec = [&](auto&& self, int i, int maxv) -> void {
        if (i == n) {
            emit();
            return;
        }
        for (int v = 0; v <= maxv + 1; ++v) {
            rgs[static_cast<std::size_t>(i)] = v;
            self(self, i + 1, std::max(maxv, v));
        }
    };
    rec(rec, 1, 0); // a[0] fixed to 0
    return out;
}

Int bell_number(int n) {
    // Bell triangle
    std::vector<Int> row{1};
    for (int i = 1; i <= n; ++i) {
        std::vector<Int> next;
        next.reserve(row.size() + 1);
        next.push_back(row.back());
        for (std::size_t j = 0; j < row.size(); ++j)
            next.push_back(next[j] + row[j]);
        row = std::move(next);
    }
    return row.front();
}

SetPartition join(const SetPartition& a, const SetPartition& b) {
    if (a.n() != b.n())
        throw SizeMismatchError("join: partitions of different ground sets");
    const int n = a.n();
    std::vector<int> parent(static_cast<std::size_t>(n));
    std::iota(parent.begin(), parent.end(), 0);
    auto find = [&](int x) {
        while (parent[static_cast<std::size_t>(x)] != x) {
            parent[static_cast<std::size_t>(x)] =
                parent[static_cast<std::size_t>(parent[static_cast<std::size_t>(x)])];
            x = parent[static_cast<std::size_t>(x)];
        }
        return x;
    };
    auto unite = [&](int x, int y) { parent[static_cast<std::size_t>(find(x))] = find(y); };
    for (const auto* part : {&a, &b})
        for (const auto& blk : part->blocks())
            for (std::size_t k = 1; k < blk.size(); ++k)
                unite(blk[0] - 1, blk[k] - 1);
    std::vector<std::vector<int>> groups(static_cast<std::size_t>(n));
    for (int x = 0; x < n; ++x)
        groups[static_cast<std::size_t>(find(x))].push_back(x + 1);
    std::vector<std::vector<int>> blocks;
    for (auto& g : groups)
        if (!g.empty())
            blocks.push_back(std::move(g));
    return SetPartition(std::move(blocks));
}

PartitionGram::PartitionGram(int n, int d, int cap) : n_(n), d_(d) {
    if (d < 2)
        throw PreconditionError("PartitionGram: d must be at least 2");
    parts_ = enumerate_set_partitions(n, cap);
    const std::size_t N = parts_.size();
    expo_.resize(N * N);
    for (std::size_t i = 0; i < N; ++i)
        for (std::size_t j = i; j < N; ++j) {
            int bj = join(parts_[i], parts_[j]).block_count();
            int e = 2 * bj - parts_[i].block_count() - parts_[j].block_count();
            expo_[i * N + j] = e;
            expo_[j * N + i] = e;
        }
}

double PartitionGram::linear_entry(std::size_t i, std::size_t j) const {
    return std::pow(static_cast<double>(d_), 0.5 * exponent(i, j));
}

Rat PartitionGram::squared_entry(std::size_t i, std::size_t j) const {
    int e = exponent(i, j);
    Rat r(1, int_pow(Int(d_), static_cast<unsigned long>(-e)));
    r.canonicalize();
    return r;
}

Eigen::MatrixXd PartitionGram::linear_dense() const {
    const std::size_t N = size();
    Eigen::MatrixXd m(static_cast<Eigen::Index>(N), static_cast<Eigen::Index>(N));
    for (std::size_t i = 0; i < N; ++i)
        for (std::size_t j = 0; j < N; ++j)
            m(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j)) = linear_entry(i, j);
    return m;
}

Eigen::MatrixXd PartitionGram::squared_dense() const {
    const std::size_t N = size();
    Eigen::MatrixXd m(static_cast<Eigen::Index>(N), static_cast<Eigen::Index>(N));
    for (std::size_t i = 0; i < N; ++i)
        for (std::size_t j = 0; j < N; ++j)
            m(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j)) =
                std::pow(static_cast<double>(d_), exponent(i, j));
    return m;
}

BlowupWitness blowup_witness(int n, int d, int cap) {
    PartitionGram g(n, d, cap);
    BlowupWitness w;
    w.n = n;
    w.d = d;
    const std::size_t N = g.size();
    // witness support: the one-block partition and every two-block partition
    std::vector<std::size_t> support;
    for (std::size_t i = 0; i < N; ++i)
        if (g.partitions()[i].block_count() <= 2)
            support.push_back(i);
    w.two_block_count = Int(static_cast<long>(support.size()) - 1);

    Rat quad = 0;
    double quad_lin = 0;
    for (std::size_t a : support)
        for (std::size_t b : support) {
            quad += g.squared_entry(a, b);
            quad_lin += g.linear_entry(a, b);
        }
    Rat norm_sq(static_cast<long>(support.size()));
    w.witness_bound_squared = quad / norm_sq;
    w.witness_bound_squared.canonicalize();
    w.witness_bound_linear = quad_lin / static_cast<double>(support.size());

    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es_l(g.linear_dense(), Eigen::EigenvaluesOnly);
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es_s(g.squared_dense(), Eigen::EigenvaluesOnly);
    w.lambda_max_linear = es_l.eigenvalues().maxCoeff();
    w.lambda_max_squared = es_s.eigenvalues().maxCoeff();
    return w;
}

} // namespace permops::setpart
