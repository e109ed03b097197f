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

#include "permops/schur.hpp"

#include <algorithm>
#include <sstream>

#include "permops/errors.hpp"

namespace permops::schur {

IntegerPartition::IntegerPartition(std::vector<int> parts) : parts_(std::move(parts)) {
    while (!parts_.empty() && parts_.back() == 0)
        parts_.pop_back();
    n_ = 0;
    for (std::size_t i = 0; i < parts_.size(); ++i) {
        if (parts_[i] <= 0 || (i > 0 && parts_[i] > parts_[i - 1]))
            throw PreconditionError("IntegerPartition: parts must be weakly decreasing positives");
        n_ += parts_[i];
    }
}

std::vector<std::pair<int, int>> IntegerPartition::cells() const {
    std::vector<std::pair<int, int>> out;
    out.reserve(static_cast<std::size_t>(n_));
    for (int i = 1; i <= rows(); ++i)
        for (int j = 1; j <= parts_[static_cast<std::size_t>(i) - 1]; ++j)
            out.emplace_back(i, j);
    return out;
}

std::vector<long> IntegerPartition::padded(int d) const {
    if (!fits(d))
        throw PreconditionError("padded: partition has more than d rows");
    std::vector<long> out(static_cast<std::size_t>(d));
    for (int i = 1; i <= d; ++i) {
        long li = i <= rows() ? parts_[static_cast<std::size_t>(i) - 1] : 0;
        out[static_cast<std::size_t>(i) - 1] = li + d - i;
    }
    return out;
}

std::string IntegerPartition::to_string() const {
    std::ostringstream os;
    os << '(';
    for (std::size_t i = 0; i < parts_.size(); ++i)
        os << (i ? "," : "") << parts_[i];
    os << ')';
    return os.str();
}

std::vector<IntegerPartition> partitions(int n, int d) {
    if (n < 1 || d < 1)
        throw PreconditionError("partitions: n and d must be positive");
    std::vector<IntegerPartition> out;
    std::vector<int> cur;
    // descending recursive generation emits reverse-lexicographic order
    auto rec = [&](auto&& self, int remaining, int maxPart) -> void {
        if (remaining == 0) {
            out.push_back(IntegerPartition(cur));
            return;
        }
        if (static_cast<int>(cur.size()) == d)
            return;
        for (int p = std::min(remaining, maxPart); p >= 1; --p) {
            cur.push_back(p);
            self(self, remaining - p, p);
            cur.pop_back();
        }
    };
    rec(rec, n, n);
    return out;
}

Int dim_q(const IntegerPartition& lambda, int d) {
    if (!lambda.fits(d))
        throw PreconditionError("dim_q: partition has more than d rows");
    std::vector<long> pad = lambda.padded(d);
    Int num = 1;
    for (int i = 0; i < d; ++i)
        for (int j = i + 1; j < d; ++j)
            num *= pad[static_cast<std::size_t>(i)] - pad[static_cast<std::size_t>(j)];
    Int den = 1;
    for (int m = 1; m <= d - 1; ++m)
        den *= factorial(static_cast<unsigned long>(m));
    Int q = num / den;
    return q;
}

Int dim_p(const IntegerPartition& lambda) {
    // evaluate with d = number of rows; the formula is padding-invariant
    const int d = std::max(lambda.rows(), 1);
    std::vector<long> pad = lambda.padded(d);
    Int num = factorial(static_cast<unsigned long>(lambda.n()));
    for (int i = 0; i < d; ++i)
        for (int j = i + 1; j < d; ++j)
            num *= pad[static_cast<std::size_t>(i)] - pad[static_cast<std::size_t>(j)];
    Int den = 1;
    for (int i = 0; i < d; ++i)
        den *= factorial(static_cast<unsigned long>(pad[static_cast<std::size_t>(i)]));
    return num / den;
}

Int content_product(const IntegerPartition& lambda, int d) {
    if (!lambda.fits(d))
        throw PreconditionError("content_product: partition has more than d rows");
    Int r = 1;
    for (auto [i, j] : lambda.cells())
        r *= d - i + j;
    return r;
}

Rat gram_eigenvalue(const IntegerPartition& lambda, int d) {
    Rat r = 1;
    for (auto [i, j] : lambda.cells()) {
        Rat f(d + j - i, d);
        f.canonicalize();
        r *= f;
    }
    return r;
}

Rat ExactSpectrum::trace() const {
    Rat t = 0;
    for (const auto& e : entries)
        t += e.eigenvalue * Rat(e.multiplicity);
    return t;
}

Int ExactSpectrum::total_multiplicity() const {
    Int t = kernel_dimension;
    for (const auto& e : entries)
        t += e.multiplicity;
    return t;
}

std::vector<double> ExactSpectrum::expanded_doubles() const {
    std::vector<double> out;
    out.resize(kernel_dimension.get_ui(), 0.0);
    for (const auto& e : entries) {
        double v = to_double(e.eigenvalue);
        for (unsigned long k = 0; k < e.multiplicity.get_ui(); ++k)
            out.push_back(v);
    }
    std::sort(out.begin(), out.end());
    return out;
}

ExactSpectrum exact_spectrum(int n, int d) {
    ExactSpectrum s;
    s.n = n;
    s.d = d;
    s.kernel_dimension = factorial(static_cast<unsigned long>(n));
    for (const auto& lambda : partitions(n, d)) {
        Int dp = dim_p(lambda);
        SpectrumEntry e{lambda, gram_eigenvalue(lambda, d), dp * dp};
        s.kernel_dimension -= e.multiplicity;
        s.entries.push_back(std::move(e));
    }
    return s;
}

Rat moment_ratio(const IntegerPartition& lambda, int d) {
    const int n = lambda.n();
    Rat r = gram_eigenvalue(lambda, d);
    const Int d2 = Int(d) * d;
    for (int k = 1; k <= n - 1; ++k) {
        Rat f(d2, d2 + k);
        f.canonicalize();
        r *= f;
    }
    return r;
}

Int hideable_state_count(int n) {
    Int total = 0;
    for (const auto& lambda : partitions(n, n))
        total += dim_p(lambda);
    return total;
}

} // namespace permops::schur
