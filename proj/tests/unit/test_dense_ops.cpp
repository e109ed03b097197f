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

#include <doctest.h>

#include <Eigen/Dense>
#include <complex>

#include "permops/dense_ops.hpp"
#include "permops/errors.hpp"
#include "permops/gram.hpp"
#include "permops/rng.hpp"
#include "permops/weingarten.hpp"

using namespace permops;
using dense::DenseOperator;
using dense::LegSubset;

namespace {

// independent count: tr P(pi) = number of basis strings x with
// x_{pi(k)} = x_k for every k, counted literally
long fixed_string_count(const sym::Permutation& pi, int d) {
    const int n = pi.n();
    long side = 1;
    for (int k = 0; k < n; ++k)
        side *= d;
    long count = 0;
    std::vector<int> digits(static_cast<std::size_t>(n));
    for (long x = 0; x < side; ++x) {
        long y = x;
        for (int k = n - 1; k >= 0; --k) {
            digits[static_cast<std::size_t>(k)] = static_cast<int>(y % d);
            y /= d;
        }
        bool fixed = true;
        for (int k = 1; k <= n && fixed; ++k)
            fixed = digits[static_cast<std::size_t>(pi.image(k)) - 1] ==
                    digits[static_cast<std::size_t>(k) - 1];
        if (fixed)
            ++count;
    }
    return count;
}

} // namespace

TEST_CASE("perm operator basics") {
    auto e = sym::Permutation::identity(2);
    auto pe = dense::perm_operator(e, 3);
    CHECK(pe.matrix().isApprox(Eigen::MatrixXcd::Identity(9, 9)));
    CHECK(pe.matrix().real().trace() == doctest::Approx(9.0));

    auto swap = sym::Permutation::transposition(2, 1, 2);
    auto ps = dense::perm_operator(swap, 2);
    Eigen::MatrixXcd expect(4, 4);
    expect << 1, 0, 0, 0, 0, 0, 1, 0, 0, 1, 0, 0, 0, 0, 0, 1;
    CHECK(ps.matrix().isApprox(expect));
    CHECK(ps.matrix().real().trace() == doctest::Approx(2.0));
}

TEST_CASE("trace of a permutation operator counts cycle-constant strings") {
    for (int n = 2; n <= 4; ++n)
        for (int d = 2; d <= 3; ++d)
            for (const auto& pi : sym::enumerate(n)) {
                auto p = dense::perm_operator(pi, d);
                CHECK(p.matrix().real().trace() ==
                      doctest::Approx(static_cast<double>(fixed_string_count(pi, d))));
            }
}

TEST_CASE("representation property holds exactly") {
    for (int d = 2; d <= 3; ++d)
        for (const auto& p : sym::enumerate(3))
            for (const auto& q : sym::enumerate(3)) {
                auto lhs = dense::perm_operator(p, d) * dense::perm_operator(q, d);
                auto rhs = dense::perm_operator(p.compose(q), d);
                CHECK((lhs.matrix() - rhs.matrix()).cwiseAbs().maxCoeff() == 0.0);
            }
}

TEST_CASE("hs inner product") {
    auto i2 = DenseOperator::identity(3, 2);
    CHECK(dense::hs_inner(i2, i2) == std::complex<double>(1, 0));

    auto pe = dense::perm_operator(sym::Permutation::identity(2), 3);
    auto ps = dense::perm_operator(sym::Permutation::transposition(2, 1, 2), 3);
    CHECK(dense::hs_inner(pe, ps).real() == doctest::Approx(1.0 / 3));

    for (const auto& a : sym::enumerate(3))
        for (const auto& b : sym::enumerate(3)) {
            auto pa = dense::perm_operator(a, 2);
            auto pb = dense::perm_operator(b, 2);
            double expect = std::pow(2.0, -sym::relative_distance(a, b));
            CHECK(dense::hs_inner(pa, pb).real() == doctest::Approx(expect).epsilon(1e-12));
        }
}

TEST_CASE("partial transpose: identity, full transpose, involution, isometry") {
    rng::SubStream s(7, 0);
    const int d = 2, legs = 3;
    Eigen::MatrixXcd m(8, 8);
    for (int i = 0; i < 8; ++i)
        for (int j = 0; j < 8; ++j)
            m(i, j) = s.cgaussian();
    DenseOperator A(m, d, legs);

    CHECK(A.partial_transpose(LegSubset::none(legs)).matrix().isApprox(A.matrix()));
    CHECK(A.partial_transpose(LegSubset::all(legs)).matrix().isApprox(A.matrix().transpose()));

    for (std::uint32_t bits = 0; bits < 8; ++bits) {
        LegSubset S{bits, legs};
        auto twice = A.partial_transpose(S).partial_transpose(S);
        CHECK(twice.matrix().isApprox(A.matrix()));
        CHECK(A.partial_transpose(S).matrix().norm() == doctest::Approx(A.matrix().norm()));
    }
}

TEST_CASE("partial swap transpose gives the entangled projector") {
    const int d = 2;
    auto swap = dense::perm_operator(sym::Permutation::transposition(2, 1, 2), d);
    auto pt = swap.partial_transpose(LegSubset::of(2, {2}));
    // d * projector onto the maximally entangled vector
    Eigen::VectorXcd phi = Eigen::VectorXcd::Zero(4);
    phi(0) = phi(3) = 1.0 / std::sqrt(2.0);
    Eigen::MatrixXcd expect = 2.0 * (phi * phi.adjoint());
    CHECK(pt.matrix().isApprox(expect, 1e-12));
}

TEST_CASE("pt singular value law: examples and exhaustive sweeps") {
    // identity: k = 0 for any subset
    for (std::uint32_t bits = 0; bits < 4; ++bits) {
        auto law = dense::pt_singular_law(sym::Permutation::identity(2), {bits, 2}, 3);
        CHECK(law.k == 0);
        CHECK(law.nonzero_count == 9);
        CHECK(law.singular_value == 1.0);
        CHECK(law.verified);
    }
    // swap with S = {2}: one singular value d
    for (int d = 2; d <= 3; ++d) {
        auto law = dense::pt_singular_law(sym::Permutation::transposition(2, 1, 2),
                                          LegSubset::of(2, {2}), d);
        CHECK(law.k == 1);
        CHECK(law.nonzero_count == 1);
        CHECK(law.singular_value == doctest::Approx(d));
        CHECK(law.verified);
        CHECK(law.trace_norm == Int(d));
    }
    // exhaustive over (n, d) pairs
    for (auto [n, d] : std::vector<std::pair<int, int>>{
             {2, 2}, {2, 3}, {3, 2}, {3, 3}, {4, 2}}) {
        for (const auto& pi : sym::enumerate(n))
            for (std::uint32_t bits = 0; bits < (1u << n); ++bits) {
                auto law = dense::pt_singular_law(pi, {bits, n}, d);
                CHECK(law.verified);
                // trace norm identity d^{n-k}
                CHECK(law.trace_norm ==
                      int_pow(Int(d), static_cast<unsigned long>(n - law.k)));
            }
    }
}

TEST_CASE("ppt check on two-qudit operators") {
    const int d = 2;
    auto ident = DenseOperator::identity(d, 2);
    DenseOperator half(ident.matrix() * 0.5, d, 2);
    auto r = dense::ppt_check(half);
    CHECK(r.ppt);

    // symmetric projector violates the upper bound after transposition
    auto swap = dense::perm_operator(sym::Permutation::transposition(2, 1, 2), d);
    DenseOperator sym_proj((ident.matrix() + swap.matrix()) / 2, d, 2);
    auto rs = dense::ppt_check(sym_proj);
    CHECK(!rs.ppt);
    CHECK(rs.worst_max_eig == doctest::Approx(1.5));

    // (I + SWAP/d)/2 remains feasible at d = 2 and d = 3
    DenseOperator damped((ident.matrix() + swap.matrix() / d) / 2, d, 2);
    CHECK(dense::ppt_check(damped).ppt);
    auto ident3 = DenseOperator::identity(3, 2);
    auto swap3 = dense::perm_operator(sym::Permutation::transposition(2, 1, 2), 3);
    DenseOperator damped3((ident3.matrix() + swap3.matrix() / 3.0) / 2, 3, 2);
    CHECK(dense::ppt_check(damped3).ppt);
    DenseOperator sym3((ident3.matrix() + swap3.matrix()) / 2, 3, 2);
    CHECK(!dense::ppt_check(sym3).ppt);

    // non-Hermitian input is rejected
    Eigen::MatrixXcd bad = Eigen::MatrixXcd::Zero(4, 4);
    bad(0, 1) = 1.0;
    CHECK_THROWS_AS(dense::ppt_check(DenseOperator(bad, d, 2)), PreconditionError);
}

TEST_CASE("projectors and entangled state") {
    auto pr22 = dense::projectors_and_states(2, 2);
    CHECK(pr22.symmetric.matrix().real().trace() == doctest::Approx(3.0));
    CHECK(pr22.antisymmetric.matrix().real().trace() == doctest::Approx(1.0));
    CHECK(pr22.entangled_power.norm() == doctest::Approx(1.0));

    auto pr32 = dense::projectors_and_states(3, 2);
    CHECK(pr32.symmetric.matrix().real().trace() == doctest::Approx(6.0));
    CHECK(pr32.antisymmetric.matrix().real().trace() == doctest::Approx(3.0));

    // idempotent and orthogonal
    CHECK((pr22.symmetric * pr22.symmetric).matrix().isApprox(pr22.symmetric.matrix(), 1e-12));
    CHECK((pr22.symmetric * pr22.antisymmetric).matrix().cwiseAbs().maxCoeff() < 1e-12);
}

TEST_CASE("projection onto the permutation span") {
    const int n = 2, d = 3;
    gram::GramMatrix g(n, d);
    auto wg = weingarten::WeingartenMatrix::invert(g);

    auto swap = dense::perm_operator(sym::Permutation::transposition(2, 1, 2), d);
    auto pr = dense::project_to_perm_span(swap, wg);
    CHECK(std::abs(pr.coefficients[0]) < 1e-12);
    CHECK(std::abs(pr.coefficients[1] - 1.0) < 1e-12);
    CHECK(pr.reconstruction_error < 1e-12);

    auto projs = dense::projectors_and_states(d, n);
    auto pu = dense::project_to_perm_span(projs.symmetric, wg);
    CHECK(std::abs(pu.coefficients[0] - 0.5) < 1e-12);
    CHECK(std::abs(pu.coefficients[1] - 0.5) < 1e-12);

    // random Hermitian: error equals the distance to the span, checked
    // against an independent least-squares solve in the overlap metric
    rng::SubStream s(11, 0);
    Eigen::MatrixXcd h(9, 9);
    for (int i = 0; i < 9; ++i)
        for (int j = 0; j < 9; ++j)
            h(i, j) = s.cgaussian();
    Eigen::MatrixXcd herm = (h + h.adjoint()) / 2;
    DenseOperator M(herm, d, n);
    auto pm = dense::project_to_perm_span(M, wg);

    // normal equations G c = v solved densely
    Eigen::MatrixXd gd = g.dense();
    Eigen::VectorXcd v(2);
    auto pe = dense::perm_operator(sym::Permutation::identity(2), d);
    v(0) = dense::hs_inner(pe, M);
    v(1) = dense::hs_inner(swap, M);
    Eigen::VectorXcd c = gd.cast<std::complex<double>>().colPivHouseholderQr().solve(v);
    CHECK(std::abs(c(0) - pm.coefficients[0]) < 1e-10);
    CHECK(std::abs(c(1) - pm.coefficients[1]) < 1e-10);

    Eigen::MatrixXcd recon = c(0) * pe.matrix() + c(1) * swap.matrix();
    double expect_err = (herm - recon).norm() / herm.norm();
    CHECK(pm.reconstruction_error == doctest::Approx(expect_err).epsilon(1e-9));
}

TEST_CASE("span projection recovers random in-span coefficients") {
    const int n = 3, d = 3;
    gram::GramMatrix g(n, d);
    auto wg = weingarten::WeingartenMatrix::invert(g);
    const auto perms = sym::enumerate(n);
    rng::SubStream s(23, 0);
    for (int trial = 0; trial < 5; ++trial) {
        std::vector<std::complex<double>> c(perms.size());
        Eigen::MatrixXcd m = Eigen::MatrixXcd::Zero(27, 27);
        for (std::size_t i = 0; i < perms.size(); ++i) {
            c[i] = s.cgaussian();
            m += c[i] * dense::perm_operator(perms[i], d).matrix();
        }
        auto pr = dense::project_to_perm_span(DenseOperator(m, d, n), wg);
        CHECK(pr.reconstruction_error < 1e-10);
        for (std::size_t i = 0; i < perms.size(); ++i)
            CHECK(std::abs(pr.coefficients[i] - c[i]) < 1e-10);
    }
}
