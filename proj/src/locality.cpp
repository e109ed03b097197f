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

#include "permops/locality.hpp"

#include <cmath>

#include "permops/errors.hpp"
#include "permops/gram.hpp"
#include "permops/rng.hpp"

namespace permops::locality {

int cut_value(const sym::Permutation& pi, const dense::LegSubset& S) {
    if (S.legs != pi.n())
        throw SizeMismatchError("cut_value: subset size does not match permutation");
    // |pi(S) ∩ S̄|: images of S landing outside S
    int v = 0;
    for (int x = 1; x <= pi.n(); ++x)
        if (S.contains(x) && !S.contains(pi.image(x)))
            ++v;
    return v;
}

CutResult deterministic_cut(const sym::Permutation& pi) {
    dense::LegSubset S{0, pi.n()};
    for (const auto& cyc : pi.cycles())
        for (std::size_t idx = 0; idx < cyc.size(); idx += 2)
            S.bits |= 1u << (cyc[idx] - 1);
    CutResult r;
    r.subset = S;
    r.achieved = cut_value(pi, S);
    r.target = Rat(pi.transposition_distance(), 2);
    r.target.canonicalize();
    r.meets_target = Rat(r.achieved) >= r.target;
    return r;
}

namespace {

int total_cut(const std::vector<sym::Permutation>& pis, const dense::LegSubset& S) {
    int total = 0;
    for (const auto& pi : pis)
        total += cut_value(pi, S);
    return total;
}

} // namespace

CutResult randomized_cut(const std::vector<sym::Permutation>& pis, int trials,
                         std::uint64_t seed) {
    if (pis.empty())
        throw PreconditionError("randomized_cut: need at least one permutation");
    const int n = pis[0].n();
    for (const auto& p : pis)
        if (p.n() != n)
            throw SizeMismatchError("randomized_cut: permutations act on different n");
    int dist_sum = 0;
    for (const auto& p : pis)
        dist_sum += p.transposition_distance();
    Rat target(dist_sum, 4);
    target.canonicalize();

    CutResult best;
    best.subset = dense::LegSubset::none(n);
    best.achieved = -1;
    rng::SubStream s(seed, 0);
    const std::uint32_t mask = (1u << n) - 1;
    for (int t = 0; t < trials; ++t) {
        dense::LegSubset S{static_cast<std::uint32_t>(s.u64()) & mask, n};
        int v = total_cut(pis, S);
        if (v > best.achieved) {
            best.achieved = v;
            best.subset = S;
        }
        if (Rat(best.achieved) >= target)
            break;
    }
    if (Rat(best.achieved) < target) {
        if (n > 12)
            throw ResourceLimitError("randomized_cut: exhaustive fallback capped at n <= 12");
        for (std::uint32_t bits = 0; bits <= mask; ++bits) {
            dense::LegSubset S{bits, n};
            int v = total_cut(pis, S);
            if (v > best.achieved) {
                best.achieved = v;
                best.subset = S;
            }
        }
    }
    best.target = target;
    best.meets_target = Rat(best.achieved) >= target;
    return best;
}

PptCoeffReport ppt_coeff_check(const std::vector<double>& coeffs, int n, int d,
                               std::size_t cap) {
    const auto perms = sym::enumerate(n);
    if (coeffs.size() != perms.size())
        throw SizeMismatchError("ppt_coeff_check: coefficient vector length is not n!");
    PptCoeffReport rep;
    rep.hypothesis_ok = static_cast<double>(n) * n <= std::sqrt(static_cast<double>(d));
    dense::Matrix m;
    for (std::size_t i = 0; i < perms.size(); ++i) {
        dense::Matrix p = dense::perm_operator(perms[i], d, cap).matrix();
        if (i == 0)
            m = coeffs[i] * p;
        else
            m += coeffs[i] * p;
    }
    dense::DenseOperator M(std::move(m), d, n);
    rep.ppt = dense::ppt_check(M);
    rep.applicable = rep.ppt.ppt;
    if (!rep.applicable)
        return rep;
    rep.all_within = true;
    const double factor = 1.0 + static_cast<double>(n) * n / std::sqrt(static_cast<double>(d));
    for (std::size_t i = 0; i < perms.size(); ++i) {
        PptCoeffRow row;
        row.index = i;
        row.coeff_abs = std::abs(coeffs[i]);
        row.bound = factor * std::pow(static_cast<double>(d),
                                      -0.5 * perms[i].transposition_distance());
        row.margin = row.bound - row.coeff_abs;
        if (row.margin < -1e-12)
            rep.all_within = false;
        rep.rows.push_back(row);
    }
    return rep;
}

namespace {

// sum over S_n of r^{-|pi|} as an exact rational: the closed-form row
// sum product; cross-checked by enumeration in the tests.
Rat perm_sum_exact(int n, long root) {
    return gram::row_sum(n, static_cast<int>(root));
}

std::optional<long> integral_root(long d, int k) {
    long r = static_cast<long>(std::llround(std::pow(static_cast<double>(d), 1.0 / k)));
    for (long c = std::max(1L, r - 2); c <= r + 2; ++c) {
        long p = 1;
        for (int i = 0; i < k; ++i)
            p *= c;
        if (p == d)
            return c;
    }
    return std::nullopt;
}

double perm_sum_double(int n, double root) {
    // product form of the row sum at non-integral root
    double s = 1;
    for (int j = 1; j <= n - 1; ++j)
        s *= 1.0 + static_cast<double>(j) / root;
    return s;
}

} // namespace

BoundChain hiding_bias_bound(int n, long d) {
    BoundChain c;
    c.n = n;
    c.d = d;
    const double sqrt_d = std::sqrt(static_cast<double>(d));
    const double y = static_cast<double>(n) * n / sqrt_d;
    c.hypothesis_ok = y <= 1.0;
    if (auto s = integral_root(d, 2)) {
        Rat sum = (perm_sum_exact(n, *s) - 1) * 2;
        c.exact_sum = sum;
        c.exact_sum_value = to_double(sum);
    } else {
        c.exact_sum_value = 2.0 * (perm_sum_double(n, sqrt_d) - 1.0);
    }
    c.exponential_bound = 3.0 * std::expm1(y);
    c.linear_bound = 6.0 * y;
    c.chain_ordered = c.exact_sum_value <= c.exponential_bound * (1 + 1e-15) &&
                      (!c.hypothesis_ok || c.exponential_bound <= c.linear_bound * (1 + 1e-15));
    return c;
}

BoundChain product_test_bound(int n, long d) {
    BoundChain c;
    c.n = n;
    c.d = d;
    const double root4 = std::pow(static_cast<double>(d), 0.25);
    const double y = static_cast<double>(n) * n / root4;
    c.hypothesis_ok = y <= 1.0;
    if (auto q = integral_root(d, 4)) {
        Rat s = perm_sum_exact(n, *q);
        Rat sum = (s * s - 1) * 2;
        c.exact_sum = sum;
        c.exact_sum_value = to_double(sum);
    } else {
        double s = perm_sum_double(n, root4);
        c.exact_sum_value = 2.0 * (s * s - 1.0);
    }
    double e = std::exp(0.5 * y);
    c.exponential_bound = 2.0 * (e * e - 1.0);
    c.linear_bound = 4.0 * y;
    c.chain_ordered = c.exact_sum_value <= c.exponential_bound * (1 + 1e-15) &&
                      (!c.hypothesis_ok || c.exponential_bound <= c.linear_bound * (1 + 1e-15));
    return c;
}

HidingDemo hiding_demo(int d, int grid_points, std::size_t cap) {
    HidingDemo demo;
    demo.d = d;
    auto proj = dense::projectors_and_states(d, 2, cap);
    const double tr_sym = proj.symmetric.matrix().real().trace();
    const double tr_anti = proj.antisymmetric.matrix().real().trace();
    dense::Matrix rho0 = proj.symmetric.matrix() / tr_sym;
    dense::Matrix rho1 = proj.antisymmetric.matrix() / tr_anti;
    dense::Matrix delta = rho0 - rho1;
    dense::Matrix swap =
        dense::perm_operator(sym::Permutation::transposition(2, 1, 2), d, cap).matrix();
    dense::Matrix ident = dense::Matrix::Identity(swap.rows(), swap.cols());

    auto evaluate = [&](const std::string& label, double a, double b) {
        HidingMeasurement m;
        m.label = label;
        m.identity_coeff = a;
        m.swap_coeff = b;
        dense::DenseOperator effect(a * ident + b * swap, d, 2);
        auto sweep = dense::ppt_check(effect);
        m.effect_ppt = sweep.ppt;
        dense::DenseOperator diff(2.0 * effect.matrix() - ident, d, 2);
        m.difference_valid = dense::ppt_check(diff).contraction;
        m.bias = ((2.0 * effect.matrix() - ident) * delta).real().trace();
        return m;
    };

    demo.library.push_back(evaluate("half_identity", 0.5, 0.0));
    demo.library.push_back(evaluate("symmetric_projector", 0.5, 0.5));
    demo.library.push_back(evaluate("damped_swap", 0.5, 0.5 / d));

    // 2-parameter grid over effects a I + b SWAP
    HidingMeasurement best;
    best.label = "grid_best";
    bool found = false;
    for (int ia = 0; ia < grid_points; ++ia) {
        double a = -2.0 + 4.0 * ia / (grid_points - 1);
        for (int ib = 0; ib < grid_points; ++ib) {
            double b = -2.0 + 4.0 * ib / (grid_points - 1);
            // eigenvalues of the effect and its single nontrivial partial
            // transpose are affine in (a, b); screen cheaply first
            double lo = std::min(a - b, std::min(a + b, std::min(a, a + b * d)));
            double hi = std::max(a - b, std::max(a + b, std::max(a, a + b * d)));
            if (lo < -1e-12 || hi > 1 + 1e-12)
                continue;
            // tr((2E - I) delta) = 2b tr(SWAP delta) = 4b for the Werner extremes
            double bias = 4.0 * b;
            if (!found || bias > best.bias) {
                best.identity_coeff = a;
                best.swap_coeff = b;
                best.bias = bias;
                found = true;
            }
        }
    }
    if (found) {
        HidingMeasurement confirmed = evaluate("grid_best", best.identity_coeff, best.swap_coeff);
        demo.library.push_back(confirmed);
        demo.best_feasible_bias = confirmed.bias;
    }
    demo.exact_chain_value = 2.0 / std::sqrt(static_cast<double>(d));
    // best unrestricted bias: half the trace norm of the difference
    Eigen::SelfAdjointEigenSolver<dense::Matrix> es(delta, Eigen::EigenvaluesOnly);
    demo.unrestricted_bias = 0.5 * es.eigenvalues().cwiseAbs().sum();
    demo.all_below_chain = true;
    for (const auto& m : demo.library)
        if (m.effect_ppt && std::abs(m.bias) > demo.exact_chain_value + 1e-9)
            demo.all_below_chain = false;
    return demo;
}

} // namespace permops::locality
