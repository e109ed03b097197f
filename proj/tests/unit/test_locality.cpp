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

#include <cmath>

#include "permops/gram.hpp"
#include "permops/locality.hpp"

using namespace permops;

TEST_CASE("deterministic cut on simple permutations") {
    auto e = sym::Permutation::identity(4);
    auto ce = locality::deterministic_cut(e);
    CHECK(ce.achieved == 0);
    CHECK(ce.meets_target);

    auto t = sym::Permutation::transposition(4, 2, 3);
    auto ct = locality::deterministic_cut(t);
    CHECK(ct.achieved == 1);
    CHECK(ct.meets_target);

    auto c3 = sym::Permutation::from_cycle(3, {1, 2, 3});
    auto cc = locality::deterministic_cut(c3);
    CHECK(cc.achieved >= 1);
    CHECK(cc.meets_target);
}

TEST_CASE("deterministic cut: exhaustive half-distance and maximization cross-check") {
    for (int n = 1; n <= 8; ++n) {
        for (const auto& pi : sym::enumerate(n)) {
            auto cut = locality::deterministic_cut(pi);
            // the guarantee, and the rounded-up version the construction reaches
            CHECK(2 * cut.achieved >= pi.transposition_distance());
            CHECK(cut.achieved >= (pi.transposition_distance() + 1) / 2);
            if (n <= 7) {
                int best = 0;
                for (std::uint32_t bits = 0; bits < (1u << n); ++bits)
                    best = std::max(best, locality::cut_value(pi, {bits, n}));
                CHECK(cut.achieved <= best);
                CHECK(2 * best >= pi.transposition_distance());
            }
        }
    }
}

TEST_CASE("randomized cut reaches the quarter target") {
    auto t = sym::Permutation::transposition(3, 1, 2);
    auto r = locality::randomized_cut({t, t}, 32, 5);
    CHECK(r.achieved >= 1); // 2 >= (1/4)(1+1) needs achieved total >= 0.5
    CHECK(r.meets_target);

    // pairs embedded as independent halves: |(a, b)| = |a| + |b| handled
    // by summing cut values over the pair
    auto a = sym::Permutation::from_cycle(5, {1, 2, 3});
    auto b = sym::Permutation::from_cycle(5, {2, 5, 4, 3});
    auto rp = locality::randomized_cut({a, b}, 64, 9);
    CHECK(rp.meets_target);
}

TEST_CASE("ppt coefficient bound on feasible operators") {
    // identity measurement
    {
        std::vector<double> c{1.0, 0.0};
        auto rep = locality::ppt_coeff_check(c, 2, 16);
        CHECK(rep.applicable);
        CHECK(rep.hypothesis_ok);
        CHECK(rep.all_within);
    }
    // damped swap (I + SWAP/d)/2
    {
        std::vector<double> c{0.5, 0.5 / 16};
        auto rep = locality::ppt_coeff_check(c, 2, 16);
        CHECK(rep.applicable);
        CHECK(rep.all_within);
    }
    // symmetric projector is not PPT: bound not applicable
    {
        std::vector<double> c{0.5, 0.5};
        auto rep = locality::ppt_coeff_check(c, 2, 4);
        CHECK(!rep.applicable);
    }
}

TEST_CASE("hiding chain values at the worked examples") {
    auto c = locality::hiding_bias_bound(2, 256);
    REQUIRE(c.exact_sum.has_value());
    CHECK(*c.exact_sum == Rat(1, 8));
    CHECK(c.exponential_bound == doctest::Approx(3.0 * std::expm1(0.25)));
    CHECK(c.linear_bound == doctest::Approx(1.5));
    CHECK(c.hypothesis_ok);
    CHECK(c.chain_ordered);

    auto c3 = locality::hiding_bias_bound(3, 10000);
    REQUIRE(c3.exact_sum.has_value());
    // 2 (3/100 + 2/10^4)
    CHECK(*c3.exact_sum == Rat(3, 50) + Rat(1, 2500));
    CHECK(c3.chain_ordered);

    CHECK(locality::hiding_bias_bound(2, 10000).linear_bound == doctest::Approx(0.24));
}

TEST_CASE("product test chain at the worked example") {
    auto c = locality::product_test_bound(2, 256);
    REQUIRE(c.exact_sum.has_value());
    // 2 ((5/4)^2 - 1) = 9/8
    CHECK(*c.exact_sum == Rat(9, 8));
    CHECK(c.chain_ordered);
    CHECK(c.hypothesis_ok); // 2 <= 256^{1/8} = 2

    auto c1 = locality::product_test_bound(1, 16);
    CHECK(c1.exact_sum_value == 0.0);

    auto c3 = locality::product_test_bound(3, 1L << 16);
    CHECK(c3.chain_ordered);
}

TEST_CASE("bound chains are monotone decreasing in d") {
    double prev = 1e300;
    for (long s : {4L, 6L, 8L, 12L}) {
        auto c = locality::hiding_bias_bound(2, s * s);
        CHECK(c.exact_sum_value < prev);
        prev = c.exact_sum_value;
    }
}

TEST_CASE("hiding demo at d = 16") {
    auto demo = locality::hiding_demo(16);
    CHECK(demo.exact_chain_value == doctest::Approx(0.5));
    CHECK(demo.unrestricted_bias == doctest::Approx(1.0).epsilon(1e-12));
    CHECK(demo.all_below_chain);
    CHECK(demo.best_feasible_bias > 0.0);
    CHECK(demo.best_feasible_bias <= demo.exact_chain_value);
    // the analytic optimum in the span is 4/(1+d)
    CHECK(demo.best_feasible_bias == doctest::Approx(4.0 / 17).epsilon(0.05));

    bool sym_found = false;
    for (const auto& m : demo.library)
        if (m.label == "symmetric_projector") {
            sym_found = true;
            CHECK(!m.effect_ppt);
        }
    CHECK(sym_found);
}
