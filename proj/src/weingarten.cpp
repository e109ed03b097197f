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

#include "permops/weingarten.hpp"

#include <cmath>

#include "permops/errors.hpp"

namespace permops::weingarten {

namespace {

// Fraction-free Gauss-Jordan on the augmented block [A | I]. All
// intermediate entries stay integral (divisions by the previous pivot are
// checked to be exact). On return the left block is diagonal with
// diag[i] = m[i][i], and row i of the right block equals diag[i] * A^{-1}
// restricted to that row.
void bareiss_jordan(std::vector<Int>& m, std::size_t nrows, std::size_t ncols) {
    Int prev = 1;
    for (std::size_t k = 0; k < nrows; ++k) {
        Int pivot = m[k * ncols + k];
        if (pivot == 0)
            throw SingularMatrixError("bareiss_jordan: zero pivot");
        for (std::size_t i = 0; i < nrows; ++i) {
            if (i == k)
                continue;
            Int mik = m[i * ncols + k];
            for (std::size_t j = 0; j < ncols; ++j) {
                Int v = m[i * ncols + j] * pivot - mik * m[k * ncols + j];
                if (!mpz_divisible_p(v.get_mpz_t(), prev.get_mpz_t()))
                    throw NumericalFailureError("bareiss_jordan: inexact division");
                mpz_divexact(v.get_mpz_t(), v.get_mpz_t(), prev.get_mpz_t());
                m[i * ncols + j] = std::move(v);
            }
        }
        prev = pivot;
    }
}

} // namespace

WeingartenMatrix WeingartenMatrix::invert(const gram::GramMatrix& G) {
    if (G.n() > G.d())
        throw SingularMatrixError(
            "WeingartenMatrix: Gram matrix is singular when n > d");
    const std::size_t N = G.size();
    const Int scale = int_pow(Int(G.d()), static_cast<unsigned long>(G.n()));

    // augmented [d^n G | I]
    std::vector<Int> m(N * 2 * N);
    for (std::size_t i = 0; i < N; ++i) {
        for (std::size_t j = 0; j < N; ++j)
            m[i * 2 * N + j] = G.scaled_entry(i, j);
        m[i * 2 * N + N + i] = 1;
    }
    bareiss_jordan(m, N, 2 * N);

    WeingartenMatrix w;
    w.n_ = G.n();
    w.d_ = G.d();
    w.size_ = N;
    w.entries_.resize(N * N);
    // Wg = G^{-1} = scale * (d^n G)^{-1}
    for (std::size_t i = 0; i < N; ++i) {
        const Int& diag = m[i * 2 * N + i];
        for (std::size_t j = 0; j < N; ++j) {
            Rat e(m[i * 2 * N + N + j] * scale, diag);
            e.canonicalize();
            w.entries_[i * N + j] = std::move(e);
        }
    }

    // class values read off the identity row (permutation 0 is e)
    for (std::size_t j = 0; j < N; ++j) {
        sym::CycleType t = G.permutations()[j].cycle_type();
        auto [it, inserted] = w.class_values_.emplace(t, w.entries_[j]);
        if (!inserted && it->second != w.entries_[j])
            throw NumericalFailureError("WeingartenMatrix: class-function property violated");
    }
    return w;
}

const Rat& WeingartenMatrix::class_value(const sym::CycleType& t) const {
    auto it = class_values_.find(t);
    if (it == class_values_.end())
        throw PreconditionError("class_value: cycle type not from S_n");
    return it->second;
}

Eigen::MatrixXd WeingartenMatrix::dense() const {
    Eigen::MatrixXd m(static_cast<Eigen::Index>(size_), static_cast<Eigen::Index>(size_));
    for (std::size_t i = 0; i < size_; ++i)
        for (std::size_t j = 0; j < size_; ++j)
            m(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j)) =
                to_double(entries_[i * size_ + j]);
    return m;
}

Int catalan(int k) {
    Int r;
    mpz_bin_uiui(r.get_mpz_t(), static_cast<unsigned long>(2 * k), static_cast<unsigned long>(k));
    return r / (k + 1);
}

Int moebius(const sym::CycleType& t) {
    Int r = 1;
    for (int len : t.parts) {
        r *= catalan(len - 1);
        if (len % 2 == 0)
            r = -r;
    }
    return r;
}

AsymptoticCheck asymptotic_check(const sym::CycleType& t, const std::vector<int>& d_grid) {
    const int n = t.n();
    for (int d : d_grid)
        if (n > d)
            throw PreconditionError("asymptotic_check: grid must satisfy n <= d");
    AsymptoticCheck out;
    out.cycle_type = t;
    out.moeb = moebius(t);
    const int dist = t.transposition_distance();
    for (int d : d_grid) {
        gram::GramMatrix G(n, d);
        WeingartenMatrix wg = WeingartenMatrix::invert(G);
        AsymptoticRow row;
        row.d = d;
        row.class_value = wg.class_value(t);
        Rat rescaled = row.class_value * Rat(int_pow(Int(d), static_cast<unsigned long>(dist)));
        row.rescaled = to_double(rescaled);
        row.residual = to_double(rescaled - Rat(out.moeb));
        out.rows.push_back(std::move(row));
    }
    if (out.rows.size() >= 2) {
        const auto& hi = out.rows[out.rows.size() - 1];
        const auto& lo = out.rows[out.rows.size() - 2];
        if (hi.d != 2 * lo.d)
            throw PreconditionError("asymptotic_check: top grid entries must double");
        out.top_ratio = lo.residual == 0 ? 0 : hi.residual / lo.residual;
        out.ratio_in_window = out.top_ratio >= 0.25 * 0.7 && out.top_ratio <= 0.25 * 1.3;
    }
    return out;
}

} // namespace permops::weingarten
