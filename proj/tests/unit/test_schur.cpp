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

#include "permops/errors.hpp"
#include "permops/schur.hpp"

using namespace permops;
using schur::IntegerPartition;

namespace {

// canonicalized rational literal
Rat rq(long num, long den) {
    Rat r(num, den);
    r.canonicalize();
    return r;
}

// brute-force partition count: partitions of n with parts <= maxPart and
// at most rows rows
long count_partitions(int n, int maxPart, int rows) {
    if (n == 0)
        return 1;
    if (rows == 0 || maxPart == 0)
        return 0;
    long total = 0;
    for (int p = std::min(n, maxPart); p >= 1; --p)
        total += count_partitions(n - p, p, rows - 1);
    return total;
}

} // namespace

TEST_CASE("partition enumeration") {
    auto p33 = schur::partitions(3, 3);
    REQUIRE(p33.size() == 3);
    CHECK(p33[0].parts() == std::vector<int>{3});
    CHECK(p33[1].parts() == std::vector<int>{2, 1});
    CHECK(p33[2].parts() == std::vector<int>{1, 1, 1});

    auto p32 = schur::partitions(3, 2);
    REQUIRE(p32.size() == 2);
    CHECK(p32[0].parts() == std::vector<int>{3});
    CHECK(p32[1].parts() == std::vector<int>{2, 1});

    CHECK(schur::partitions(6, 6).size() == 11);
    for (int n = 1; n <= 7; ++n)
        for (int d = 1; d <= 7; ++d)
            CHECK(static_cast<long>(schur::partitions(n, d).size()) ==
                  count_partitions(n, n, d));
}

TEST_CASE("partition cells and padding") {
    IntegerPartition lam({2, 1});
    auto cells = lam.cells();
    REQUIRE(cells.size() == 3);
    CHECK(cells[0] == std::pair<int, int>{1, 1});
    CHECK(cells[1] == std::pair<int, int>{1, 2});
    CHECK(cells[2] == std::pair<int, int>{2, 1});
    auto pad = lam.padded(3);
    CHECK(pad == std::vector<long>{4, 2, 0});
    for (std::size_t i = 1; i < pad.size(); ++i)
        CHECK(pad[i - 1] > pad[i]);
    CHECK_THROWS_AS(IntegerPartition({1, 2}), PreconditionError);
}

TEST_CASE("irrep dimensions") {
    // one-row partitions give the symmetric subspace
    for (int n = 1; n <= 5; ++n)
        for (int d = 1; d <= 5; ++d)
            CHECK(schur::dim_q(IntegerPartition({n}), d) ==
                  binomial(static_cast<unsigned long>(d + n - 1),
                           static_cast<unsigned long>(n)));
    CHECK(schur::dim_q(IntegerPartition({1, 1}), 2) == 1);
    CHECK(schur::dim_q(IntegerPartition({2, 1}), 3) == 8);
    CHECK_THROWS_AS(schur::dim_q(IntegerPartition({1, 1, 1}), 2), PreconditionError);

    CHECK(schur::dim_p(IntegerPartition({5})) == 1);
    CHECK(schur::dim_p(IntegerPartition({1, 1, 1, 1})) == 1);
    CHECK(schur::dim_p(IntegerPartition({2, 1})) == 2);
}

TEST_CASE("dimension sum rules") {
    // sum over lambda of dim_q * dim_p = d^n
    for (int n = 1; n <= 6; ++n)
        for (int d = 1; d <= 6; ++d) {
            Int total = 0;
            for (const auto& lam : schur::partitions(n, d))
                total += schur::dim_q(lam, d) * schur::dim_p(lam);
            CHECK(total == int_pow(Int(d), static_cast<unsigned long>(n)));
        }
    // sum of dim_p^2 = n!
    for (int n = 1; n <= 7; ++n) {
        Int total = 0;
        for (const auto& lam : schur::partitions(n, n))
            total += schur::dim_p(lam) * schur::dim_p(lam);
        CHECK(total == factorial(static_cast<unsigned long>(n)));
    }
}

TEST_CASE("content product equals the dimension ratio") {
    CHECK(schur::content_product(IntegerPartition({1}), 4) == 4);
    CHECK(schur::content_product(IntegerPartition({2}), 5) == 30); // d(d+1)
    CHECK(schur::content_product(IntegerPartition({2, 1}), 3) == 24);
    CHECK(Int(factorial(3) * schur::dim_q(IntegerPartition({2, 1}), 3)) /
              schur::dim_p(IntegerPartition({2, 1})) ==
          24);
    for (int n = 1; n <= 6; ++n)
        for (int d = 1; d <= 8; ++d)
            for (const auto& lam : schur::partitions(n, d)) {
                Rat lhs(schur::content_product(lam, d));
                Rat rhs(factorial(static_cast<unsigned long>(n)) * schur::dim_q(lam, d),
                        schur::dim_p(lam));
                rhs.canonicalize();
                CHECK(lhs == rhs);
            }
}

TEST_CASE("exact spectrum closed forms at n = 2, 3") {
    for (int d = 2; d <= 6; ++d) {
        auto s2 = schur::exact_spectrum(2, d);
        REQUIRE(s2.entries.size() == 2);
        CHECK(s2.entries[0].eigenvalue == rq(d + 1, d));
        CHECK(s2.entries[0].multiplicity == 1);
        CHECK(s2.entries[1].eigenvalue == rq(d - 1, d));
        CHECK(s2.entries[1].multiplicity == 1);

        auto s3 = schur::exact_spectrum(3, d);
        Rat top = rq(d + 1, d) * rq(d + 2, d);
        Rat mid = rq(d + 1, d) * rq(d - 1, d);
        Rat bot = rq(d - 1, d) * rq(d - 2, d);
        REQUIRE(s3.entries.size() == (d >= 3 ? 3 : 2));
        CHECK(s3.entries[0].eigenvalue == top);
        CHECK(s3.entries[1].eigenvalue == mid);
        CHECK(s3.entries[1].multiplicity == 4);
        if (d >= 3) {
            CHECK(s3.entries[2].eigenvalue == bot);
            CHECK(s3.trace() == 6);
        }
    }
}

TEST_CASE("spectrum kernel accounting for n > d") {
    auto s = schur::exact_spectrum(3, 2);
    CHECK(s.kernel_dimension == 1);
    Int mult = 0;
    for (const auto& e : s.entries)
        mult += e.multiplicity;
    CHECK(mult == 5);
    CHECK(s.total_multiplicity() == 6);

    // trace identity holds for every n <= 6, d >= n; listed eigenvalues
    // are strictly positive (only partitions within d rows are emitted)
    for (int n = 1; n <= 6; ++n)
        for (int d = n; d <= 8; ++d) {
            auto spec = schur::exact_spectrum(n, d);
            CHECK(spec.trace() == Rat(factorial(static_cast<unsigned long>(n))));
            for (const auto& e : spec.entries)
                CHECK(e.eigenvalue > 0);
        }
}

TEST_CASE("moment ratio values and window") {
    CHECK(schur::moment_ratio(IntegerPartition({1}), 5) == 1);
    CHECK(schur::moment_ratio(IntegerPartition({2}), 9) == rq(90, 82));
    CHECK(schur::moment_ratio(IntegerPartition({1, 1}), 9) == rq(72, 82));
    // window [1 - n^2/2d, 1 + n^2/d] whenever n^2 <= d
    for (int n = 1; n <= 5; ++n)
        for (int d = n * n; d <= n * n + 6; ++d) {
            Rat lo = Rat(1) - Rat(Int(n) * n, Int(2) * d);
            Rat hi = Rat(1) + Rat(Int(n) * n, Int(d));
            for (const auto& lam : schur::partitions(n, d)) {
                Rat r = schur::moment_ratio(lam, d);
                CHECK(r >= lo);
                CHECK(r <= hi);
            }
        }
}

TEST_CASE("hideable state count") {
    CHECK(schur::hideable_state_count(1) == 1);
    CHECK(schur::hideable_state_count(2) == 2);
    CHECK(schur::hideable_state_count(3) == 4);
    for (int n = 1; n <= 8; ++n) {
        Int N = schur::hideable_state_count(n);
        CHECK(N * N >= factorial(static_cast<unsigned long>(n)));
    }
}
