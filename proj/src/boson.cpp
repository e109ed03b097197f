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

#include "permops/boson.hpp"

#include <cmath>
#include <vector>

#include "permops/errors.hpp"
#include "permops/moments.hpp"
#include "permops/rng.hpp"

namespace permops::boson {

std::complex<double> permanent(const Eigen::MatrixXcd& v) {
    const int n = static_cast<int>(v.rows());
    if (v.cols() != n)
        throw SizeMismatchError("permanent: matrix must be square");
    if (n == 0)
        return 1.0;
    if (n > 20)
        throw ResourceLimitError("permanent: n > 20 is past the Ryser budget");
    // Gray-code walk over nonempty column subsets; row sums updated by
    // the single toggled column.
    std::vector<std::complex<double>> rowsum(static_cast<std::size_t>(n), 0.0);
    std::complex<double> total = 0.0;
    const std::uint64_t limit = 1ULL << n;
    std::uint64_t gray = 0;
    int popcount = 0;
    for (std::uint64_t k = 1; k < limit; ++k) {
        std::uint64_t next_gray = k ^ (k >> 1);
        std::uint64_t toggled = gray ^ next_gray;
        int col = __builtin_ctzll(toggled);
        bool added = next_gray & toggled;
        for (int i = 0; i < n; ++i) {
            if (added)
                rowsum[static_cast<std::size_t>(i)] += v(i, col);
            else
                rowsum[static_cast<std::size_t>(i)] -= v(i, col);
        }
        popcount += added ? 1 : -1;
        gray = next_gray;
        std::complex<double> prod = 1.0;
        for (int i = 0; i < n; ++i)
            prod *= rowsum[static_cast<std::size_t>(i)];
        if ((n - popcount) % 2 == 0)
            total += prod;
        else
            total -= prod;
    }
    return total;
}

namespace {

ScalarMomentEstimate summarize(const std::vector<double>& ys, std::uint64_t seed) {
    ScalarMomentEstimate e;
    e.samples = ys.size();
    e.seed = seed;
    double sum = 0;
    for (double y : ys)
        sum += y;
    e.mean = sum / static_cast<double>(ys.size());
    double m2 = 0, m3 = 0;
    for (double y : ys) {
        double c = y - e.mean;
        m2 += c * c;
        m3 += c * c * c;
    }
    m2 /= static_cast<double>(ys.size());
    m3 /= static_cast<double>(ys.size());
    e.stderr_mean = std::sqrt(m2 / static_cast<double>(ys.size()));
    e.skewness = m2 > 0 ? m3 / std::pow(m2, 1.5) : 0.0;
    return e;
}

} // namespace

PermanentMomentExperiment moment_experiment(int m, int n, int t, std::size_t samples,
                                            std::uint64_t seed, int t_cap) {
    if (n < 1 || m < n || t < 1)
        throw PreconditionError("moment_experiment: need 1 <= n <= m and t >= 1");
    if (t > t_cap)
        throw PreconditionError("moment_experiment: t exceeds the configured cap");
    if (static_cast<long>(n) * n * t * t > 2L * m)
        throw PreconditionError("moment_experiment: hypothesis n^2 t^2 <= 2m violated");
    PermanentMomentExperiment ex;
    ex.m = m;
    ex.n = n;
    ex.t = t;
    ex.samples = samples;
    ex.seed = seed;
    ex.window = static_cast<double>(n) * n * t * t / m;

    std::vector<double> haar_ys(samples), gauss_ys(samples);
    const double inv_sqrt_m = 1.0 / std::sqrt(static_cast<double>(m));
    std::complex<double> per_sum = 0;
    double per_sumsq = 0;
    for (std::size_t i = 0; i < samples; ++i) {
        // top-left n x n block of a Haar unitary on C^m; only the first n
        // columns are needed, and those form a Haar isometry
        Eigen::MatrixXcd q = moments::haar_isometry(m, n, seed, i);
        Eigen::MatrixXcd v = q.topRows(n);
        std::complex<double> per = permanent(v);
        per_sum += per;
        per_sumsq += std::norm(per);
        haar_ys[i] = std::pow(std::norm(per), t);

        rng::SubStream s(seed ^ 0x9E3779B97F4A7C15ULL, i);
        Eigen::MatrixXcd x(n, n);
        for (int r = 0; r < n; ++r)
            for (int c = 0; c < n; ++c)
                x(r, c) = s.cgaussian() * inv_sqrt_m;
        gauss_ys[i] = std::pow(std::norm(permanent(x)), t);
    }
    ex.per_mean = per_sum / static_cast<double>(samples);
    double per_var = per_sumsq / static_cast<double>(samples) - std::norm(ex.per_mean);
    ex.per_stderr = std::sqrt(std::max(per_var, 0.0) / static_cast<double>(samples));
    ex.haar = summarize(haar_ys, seed);
    ex.gauss = summarize(gauss_ys, seed ^ 0x9E3779B97F4A7C15ULL);
    ex.ratio = ex.haar.mean / ex.gauss.mean;
    double rel = std::sqrt(std::pow(ex.haar.stderr_mean / ex.haar.mean, 2) +
                           std::pow(ex.gauss.stderr_mean / ex.gauss.mean, 2));
    ex.ratio_stderr = std::abs(ex.ratio) * rel;
    ex.within_window = ex.ratio >= 1.0 - ex.window - 5.0 * ex.ratio_stderr &&
                       ex.ratio <= 1.0 + ex.window + 5.0 * ex.ratio_stderr;
    return ex;
}

Rat gaussian_fourth_exact(int n, int m) {
    Int nf = factorial(static_cast<unsigned long>(n));
    Rat r((n + 1) * nf * nf, int_pow(Int(m), static_cast<unsigned long>(2 * n)));
    r.canonicalize();
    return r;
}

Int w_class_size(int n, int ell) {
    if (ell < 0 || ell > n)
        throw PreconditionError("w_class_size: ell out of range [0, n]");
    Int nf = factorial(static_cast<unsigned long>(n));
    Int b = binomial(static_cast<unsigned long>(n), static_cast<unsigned long>(ell));
    return nf * nf * b * b;
}

int w_statistic(const sym::Permutation& pi_2n, int n) {
    if (pi_2n.n() != 2 * n)
        throw SizeMismatchError("w_statistic: permutation must act on 2n points");
    int w = 0;
    for (int x = 1; x <= n; ++x)
        if (pi_2n.image(x) > n)
            ++w;
    return w;
}

Rat alpha_overlap(const sym::Permutation& pi_2n, int n, int m) {
    int w = w_statistic(pi_2n, n);
    Int den = binomial(static_cast<unsigned long>(n), static_cast<unsigned long>(w)) *
              int_pow(Int(m), static_cast<unsigned long>(n));
    Rat r(1, den);
    r.canonicalize();
    return r;
}

Rat gaussian_fourth_via_alpha(int n, int m) {
    if (n > 4)
        throw ResourceLimitError("gaussian_fourth_via_alpha: exhaustive S_{2n} needs n <= 4");
    Rat total = 0;
    for (const auto& pi : sym::enumerate(2 * n)) {
        Rat a = alpha_overlap(pi, n, m);
        total += a * a;
    }
    return total;
}

} // namespace permops::boson
