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

#include "permops/gram.hpp"

#include <cmath>

#include "permops/errors.hpp"

namespace permops::gram {

GramMatrix::GramMatrix(int n, int d, int cap) : n_(n), d_(d) {
    if (d < 1)
        throw PreconditionError("GramMatrix: d must be positive");
    perms_ = sym::enumerate(n, cap);
    size_ = perms_.size();
    dist_.resize(size_ * size_);
    // inverse images flattened once; the inner loop walks cycles of
    // p_i^{-1} p_j directly
    std::vector<int> inv(size_ * static_cast<std::size_t>(n));
    for (std::size_t i = 0; i < size_; ++i) {
        const auto& im = perms_[i].one_line();
        for (int x = 0; x < n; ++x)
            inv[i * static_cast<std::size_t>(n) + static_cast<std::size_t>(im[static_cast<std::size_t>(x)]) - 1] = x;
    }
    std::vector<char> seen(static_cast<std::size_t>(n));
    for (std::size_t i = 0; i < size_; ++i) {
        const int* pinv = &inv[i * static_cast<std::size_t>(n)];
        for (std::size_t j = 0; j < size_; ++j) {
            const auto& qim = perms_[j].one_line();
            std::fill(seen.begin(), seen.end(), 0);
            int cycles = 0;
            for (int start = 0; start < n; ++start) {
                if (seen[static_cast<std::size_t>(start)])
                    continue;
                ++cycles;
                int x = start;
                do {
                    seen[static_cast<std::size_t>(x)] = 1;
                    x = pinv[qim[static_cast<std::size_t>(x)] - 1];
                } while (x != start);
            }
            dist_[i * size_ + j] = static_cast<std::uint8_t>(n - cycles);
        }
    }
}

Rat GramMatrix::entry(std::size_t i, std::size_t j) const {
    Rat r(1, int_pow(Int(d_), distance(i, j)));
    r.canonicalize();
    return r;
}

Int GramMatrix::scaled_entry(std::size_t i, std::size_t j) const {
    return int_pow(Int(d_), static_cast<unsigned long>(n_ - distance(i, j)));
}

Rat GramMatrix::row_sum_literal(std::size_t row) const {
    return row_sum_from_histogram(row_distance_histogram(row), d_);
}

std::vector<unsigned long> GramMatrix::row_distance_histogram(std::size_t row) const {
    std::vector<unsigned long> counts(static_cast<std::size_t>(n_), 0);
    for (std::size_t j = 0; j < size_; ++j)
        ++counts[static_cast<std::size_t>(distance(row, j))];
    return counts;
}

Rat GramMatrix::row_sum_from_histogram(const std::vector<unsigned long>& counts, int b) {
    Rat s = 0;
    for (std::size_t k = 0; k < counts.size(); ++k) {
        if (!counts[k])
            continue;
        Rat term(Int(counts[k]), int_pow(Int(b), k));
        term.canonicalize();
        s += term;
    }
    return s;
}

Eigen::MatrixXd GramMatrix::dense() const {
    Eigen::MatrixXd m(static_cast<Eigen::Index>(size_), static_cast<Eigen::Index>(size_));
    std::vector<double> pw(static_cast<std::size_t>(n_));
    pw[0] = 1.0;
    for (std::size_t k = 1; k < pw.size(); ++k)
        pw[k] = pw[k - 1] / d_;
    for (std::size_t i = 0; i < size_; ++i)
        for (std::size_t j = 0; j < size_; ++j)
            m(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j)) =
                pw[static_cast<std::size_t>(distance(i, j))];
    return m;
}

SpectralReport spectral_report(const GramMatrix& G) {
    if (G.size() > kDenseEigenCap)
        throw ResourceLimitError("spectral_report: n! exceeds the dense eigensolver cap");
    SpectralReport r;
    r.n = G.n();
    r.d = G.d();
    Eigen::MatrixXd M = G.dense();
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(M);
    if (es.info() != Eigen::Success)
        throw NumericalFailureError("spectral_report: eigensolver failed to converge");
    // symmetric, so the operator norm is the extreme eigenvalue magnitude
    const double scale = std::max({1.0, std::abs(es.eigenvalues().minCoeff()),
                                   std::abs(es.eigenvalues().maxCoeff())});
    Eigen::MatrixXd resid = M * es.eigenvectors() - es.eigenvectors() * es.eigenvalues().asDiagonal();
    for (Eigen::Index k = 0; k < es.eigenvalues().size(); ++k) {
        if (resid.col(k).norm() > 1e-9 * scale)
            throw NumericalFailureError("spectral_report: eigenpair residual out of tolerance");
        r.eigenvalues.push_back(es.eigenvalues()(k));
    }
    r.lambda_min_numeric = r.eigenvalues.front();
    r.lambda_max_numeric = r.eigenvalues.back();
    r.lambda_min_formula = lambda_min_formula(G.n(), G.d());
    r.lambda_max_formula = lambda_max_formula(G.n(), G.d());
    double s1 = 0, sinf = 0;
    for (double lam : r.eigenvalues) {
        s1 += std::abs(lam - 1.0);
        sinf = std::max(sinf, std::abs(lam - 1.0));
    }
    r.trace_distance = s1 / static_cast<double>(G.size());
    r.op_norm_distance = sinf;
    r.row_sum = row_sum(G.n(), G.d());
    r.cayley_bound = cayley_bound(G.n(), G.d());
    return r;
}

Rat lambda_min_formula(int n, int d) {
    Rat r = 1;
    for (int j = 1; j <= n - 1; ++j) {
        Rat f(d - j, d);
        f.canonicalize();
        r *= f;
    }
    return r;
}

Rat lambda_max_formula(int n, int d) {
    Rat r = 1;
    for (int j = 1; j <= n - 1; ++j) {
        Rat f(d + j, d);
        f.canonicalize();
        r *= f;
    }
    return r;
}

Rat row_sum(int n, int d) {
    return lambda_max_formula(n, d);
}

std::optional<Rat> cayley_bound(int n, int d) {
    Int gens = binomial(static_cast<unsigned long>(n), 2);
    if (gens >= d)
        return std::nullopt;
    Int den = Int(d) - gens;
    Rat r(Int(d), den);
    r.canonicalize();
    return r;
}

Int antisymmetric_witness(int n, const Int& d, int cap) {
    Int sum = 0;
    for (const auto& p : sym::enumerate(n, cap)) {
        Int term = int_pow(d, static_cast<unsigned long>(p.cycle_count()));
        if (p.sign() < 0)
            sum -= term;
        else
            sum += term;
    }
    return sum;
}

} // namespace permops::gram
