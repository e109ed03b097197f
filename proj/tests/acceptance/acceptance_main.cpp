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

// End-to-end acceptance suite. Each criterion prints one line:
//   [PASS] 01 spectrum-equivalence ...
// The process exits nonzero if any criterion fails.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <iostream>
#include <numeric>
#include <sstream>
#include <string>
#include <vector>

#include "permops/boson.hpp"
#include "permops/dense_ops.hpp"
#include "permops/gram.hpp"
#include "permops/locality.hpp"
#include "permops/moments.hpp"
#include "permops/norms.hpp"
#include "permops/pipelines.hpp"
#include "permops/rng.hpp"
#include "permops/schur.hpp"
#include "permops/setpart.hpp"
#include "permops/weingarten.hpp"

using namespace permops;

namespace {

using Clock = std::chrono::steady_clock;

struct Outcome {
    bool pass = true;
    std::ostringstream detail;
};

#define EXPECT(cond, msg)                                                     \
    do {                                                                      \
        if (!(cond)) {                                                        \
            out.pass = false;                                                 \
            out.detail << " [" << msg << "]";                                 \
        }                                                                     \
    } while (0)

double seconds_since(Clock::time_point t0) {
    return std::chrono::duration<double>(Clock::now() - t0).count();
}

// 1. numeric spectrum == closed-form multiset, rtol 1e-9, under 60 s
Outcome criterion_spectrum_equivalence() {
    Outcome out;
    auto t0 = Clock::now();
    for (int n = 2; n <= 5; ++n)
        for (int d = 2; d <= 8; ++d) {
            gram::GramMatrix G(n, d);
            auto rep = gram::spectral_report(G);
            auto expected = schur::exact_spectrum(n, d).expanded_doubles();
            EXPECT(expected.size() == rep.eigenvalues.size(), "count n=" << n << " d=" << d);
            for (std::size_t i = 0; i < expected.size(); ++i) {
                double allow = 1e-10 + 1e-9 * std::abs(expected[i]);
                EXPECT(std::abs(rep.eigenvalues[i] - expected[i]) <= allow,
                       "eig n=" << n << " d=" << d << " i=" << i);
            }
        }
    double secs = seconds_since(t0);
    EXPECT(secs < 60.0, "runtime " << secs << "s");
    out.detail << " grid n=2..5 d=2..8 in " << secs << "s";
    return out;
}

// 2. extremal eigenvalues: formulas to 1e-9 and exact rational inequalities
Outcome criterion_extremal_eigenvalues() {
    Outcome out;
    for (int n = 2; n <= 5; ++n)
        for (int d = 2; d <= 8; ++d) {
            gram::GramMatrix G(n, d);
            auto rep = gram::spectral_report(G);
            double lmin = to_double(rep.lambda_min_formula);
            double lmax = to_double(rep.lambda_max_formula);
            EXPECT(std::abs(rep.lambda_min_numeric - lmin) <= 1e-9 * std::max(1.0, lmin),
                   "min n=" << n << " d=" << d);
            EXPECT(std::abs(rep.lambda_max_numeric - lmax) <= 1e-9 * std::max(1.0, lmax),
                   "max n=" << n << " d=" << d);
            Rat lin_lo = Rat(1) - Rat(Int(n) * (n - 1), Int(2) * d);
            lin_lo.canonicalize();
            EXPECT(rep.lambda_min_formula >= lin_lo, "min-lb n=" << n << " d=" << d);
            Rat x(Int(n) * (n - 1), Int(2) * d);
            x.canonicalize();
            EXPECT(rep.lambda_max_formula <= exp_taylor_lower(x),
                   "max-ub n=" << n << " d=" << d);
        }
    out.detail << " formulas and rational windows on the full grid";
    return out;
}

// 3. (1/n!) sum |eig - 1| <= sqrt(2) n / d for n <= d, exact and numeric
Outcome criterion_trace_norm_bound() {
    Outcome out;
    for (int n = 2; n <= 5; ++n)
        for (int d = n; d <= 8; ++d) {
            auto spec = schur::exact_spectrum(n, d);
            Rat sum = Rat(spec.kernel_dimension); // |0 - 1| per kernel dimension
            for (const auto& e : spec.entries) {
                Rat dev = e.eigenvalue - 1;
                if (dev < 0)
                    dev = -dev;
                sum += dev * Rat(e.multiplicity);
            }
            Rat lhs = sum / Rat(factorial(static_cast<unsigned long>(n)));
            // compare (lhs)^2 <= 2 n^2 / d^2 in exact arithmetic
            Rat rhs_sq(Int(2) * n * n, Int(d) * d);
            rhs_sq.canonicalize();
            EXPECT(lhs * lhs <= rhs_sq, "exact n=" << n << " d=" << d);

            gram::GramMatrix G(n, d);
            auto rep = gram::spectral_report(G);
            EXPECT(rep.trace_distance <= std::sqrt(2.0) * n / d + 1e-12,
                   "numeric n=" << n << " d=" << d);
        }
    out.detail << " exact squared comparison, n <= d grid";
    return out;
}

// 4. literal row sums equal the closed-form product; Cayley bound dominates
Outcome criterion_row_sum() {
    Outcome out;
    for (int n = 2; n <= 7; ++n) {
        // distance data is d-independent; build once per n
        gram::GramMatrix G(n, 2);
        auto hist = G.row_distance_histogram(0);
        auto hist_mid = G.row_distance_histogram(G.size() / 2);
        for (int d = 2; d <= 8; ++d) {
            Rat closed = gram::row_sum(n, d);
            EXPECT(gram::GramMatrix::row_sum_from_histogram(hist, d) == closed,
                   "row0 n=" << n << " d=" << d);
            EXPECT(gram::GramMatrix::row_sum_from_histogram(hist_mid, d) == closed,
                   "rowmid n=" << n << " d=" << d);
            auto cb = gram::cayley_bound(n, d);
            if (binomial(static_cast<unsigned long>(n), 2) < d) {
                EXPECT(cb.has_value() && *cb >= closed, "cayley n=" << n << " d=" << d);
            } else {
                EXPECT(!cb.has_value(), "divergent n=" << n << " d=" << d);
            }
        }
    }
    out.detail << " exact for n <= 7, d <= 8";
    return out;
}

// 5. G * Wg = I exactly; class function property exact
Outcome criterion_weingarten_inverse() {
    Outcome out;
    for (int n = 2; n <= 4; ++n)
        for (int d = n; d <= 8; ++d) {
            gram::GramMatrix G(n, d);
            auto wg = weingarten::WeingartenMatrix::invert(G);
            const std::size_t N = G.size();
            bool ok = true;
            for (std::size_t i = 0; i < N && ok; ++i)
                for (std::size_t j = 0; j < N; ++j) {
                    Rat acc = 0;
                    for (std::size_t k = 0; k < N; ++k)
                        acc += G.entry(i, k) * wg.entry(k, j);
                    if (acc != (i == j ? Rat(1) : Rat(0))) {
                        ok = false;
                        break;
                    }
                }
            EXPECT(ok, "product n=" << n << " d=" << d);
            bool class_ok = true;
            for (std::size_t i = 0; i < N && class_ok; ++i)
                for (std::size_t j = 0; j < N; ++j) {
                    auto t = G.permutations()[i].inverse().compose(G.permutations()[j])
                                 .cycle_type();
                    if (wg.entry(i, j) != wg.class_value(t)) {
                        class_ok = false;
                        break;
                    }
                }
            EXPECT(class_ok, "class n=" << n << " d=" << d);
        }
    out.detail << " exact rational inverse, n <= 4, d in [n, 8]";
    return out;
}

// 6. Moebius asymptotics: quartering residuals; signs pinned numerically
Outcome criterion_moebius_asymptotics() {
    Outcome out;
    auto t2 = weingarten::asymptotic_check(sym::CycleType{{2}}, {25, 50, 100});
    EXPECT(t2.ratio_in_window, "transposition ratio " << t2.top_ratio);
    EXPECT(t2.moeb == -1, "transposition sign");

    auto t3 = weingarten::asymptotic_check(sym::CycleType{{3}}, {25, 50, 100});
    EXPECT(t3.ratio_in_window, "3-cycle ratio " << t3.top_ratio);
    EXPECT(t3.rows.back().rescaled > 0, "3-cycle sign from inversion");
    EXPECT(t3.moeb == 2, "3-cycle moebius value");

    // re-confirm at the 4-cycle class, n = 4, d = 64
    gram::GramMatrix G(4, 64);
    auto wg = weingarten::WeingartenMatrix::invert(G);
    Rat r = wg.class_value(sym::CycleType{{4}}) * Rat(int_pow(Int(64), 3));
    double val = to_double(r);
    EXPECT(std::abs(val + 5.0) < 0.05, "4-cycle rescaled " << val);
    EXPECT(weingarten::moebius(sym::CycleType{{4}}) == -5, "4-cycle moebius");
    out.detail << " residual ratios " << t2.top_ratio << ", " << t3.top_ratio
               << "; 4-cycle value " << val;
    return out;
}

// 7. partial-transpose singular value law, exhaustive; exact trace norms
Outcome criterion_pt_law() {
    Outcome out;
    for (auto [n, d] : std::vector<std::pair<int, int>>{
             {2, 2}, {2, 3}, {3, 2}, {3, 3}, {4, 2}}) {
        for (const auto& pi : sym::enumerate(n))
            for (std::uint32_t bits = 0; bits < (1u << n); ++bits) {
                auto law = dense::pt_singular_law(pi, {bits, n}, d, true);
                EXPECT(law.verified, "svd n=" << n << " d=" << d << " dev=" << law.max_deviation);
                EXPECT(law.trace_norm == int_pow(Int(d), static_cast<unsigned long>(n - law.k)),
                       "trace-norm n=" << n << " d=" << d);
            }
    }
    out.detail << " all permutations and subsets, five (n, d) pairs";
    return out;
}

// 8. alternating trace sum = falling factorial, n <= 7, d <= 10
Outcome criterion_falling_factorial() {
    Outcome out;
    for (int n = 2; n <= 7; ++n)
        for (int d = 1; d <= 10; ++d) {
            Int lhs = gram::antisymmetric_witness(n, Int(d));
            Int rhs = falling_factorial(Int(d), static_cast<unsigned long>(n));
            EXPECT(lhs == rhs, "n=" << n << " d=" << d);
            if (n > d)
                EXPECT(lhs == 0, "zero n=" << n << " d=" << d);
        }
    out.detail << " exact for n <= 7, d <= 10";
    return out;
}

// 9. exact moment operators match Monte Carlo entrywise at 6 stderr
Outcome criterion_moment_formulas() {
    Outcome out;
    auto t0 = Clock::now();
    const std::size_t samples = 100000;
    for (auto [n, d] : std::vector<std::pair<int, int>>{{1, 2}, {2, 2}, {2, 4}}) {
        gram::GramMatrix G(n, d);
        auto wg = weingarten::WeingartenMatrix::invert(G);
        auto cs = moments::cs_unitary_exact(n, d, wg);
        moments::SamplerSpec haar{moments::SamplerSpec::Kind::haar_unitary, d, 2026};
        auto mc = moments::mc_tensor_moment(haar, n, samples);
        double dev = mc.max_sigma_deviation(cs.matrix());
        EXPECT(dev <= 6.0, "haar n=" << n << " d=" << d << " dev=" << dev);

        auto wick = moments::wick_exact(n, d);
        moments::SamplerSpec gin{moments::SamplerSpec::Kind::ginibre, d, 4052};
        auto mcg = moments::mc_tensor_moment(gin, n, samples);
        double devg = mcg.max_sigma_deviation(wick.matrix());
        EXPECT(devg <= 6.0, "ginibre n=" << n << " d=" << d << " dev=" << devg);
    }
    double secs = seconds_since(t0);
    EXPECT(secs < 300.0, "runtime " << secs << "s");
    out.detail << " 1e5 samples per ensemble in " << secs << "s";
    return out;
}

// 10. Gaussian fourth permanent moment and w-class sizes
Outcome criterion_gaussian_permanent() {
    Outcome out;
    auto ex = boson::moment_experiment(64, 2, 2, 100000, 2026);
    double expect = to_double(boson::gaussian_fourth_exact(2, 64));
    EXPECT(std::abs(ex.gauss.mean - expect) <= 5.0 * ex.gauss.stderr_mean,
           "fourth moment dev=" << (ex.gauss.mean - expect) / ex.gauss.stderr_mean);
    for (int n = 1; n <= 4; ++n) {
        Int total = 0;
        for (int ell = 0; ell <= n; ++ell)
            total += boson::w_class_size(n, ell);
        EXPECT(total == factorial(static_cast<unsigned long>(2 * n)), "sum n=" << n);
        std::vector<long> counts(static_cast<std::size_t>(n) + 1, 0);
        for (const auto& pi : sym::enumerate(2 * n))
            ++counts[static_cast<std::size_t>(boson::w_statistic(pi, n))];
        for (int ell = 0; ell <= n; ++ell)
            EXPECT(Int(counts[static_cast<std::size_t>(ell)]) == boson::w_class_size(n, ell),
                   "count n=" << n << " l=" << ell);
    }
    out.detail << " fourth moment within " << 5.0 << " stderr; classes exact to n=4";
    return out;
}

// 11. Haar/Gaussian permanent moment ratios inside the theorem window
Outcome criterion_boson_window() {
    Outcome out;
    for (auto [n, t, m] : std::vector<std::tuple<int, int, int>>{
             {2, 1, 64}, {2, 2, 64}, {3, 1, 128}}) {
        auto ex = boson::moment_experiment(m, n, t, 100000, 2026);
        EXPECT(ex.within_window, "n=" << n << " t=" << t << " m=" << m
                                      << " ratio=" << ex.ratio);
        out.detail << " (" << n << "," << t << "," << m << ")->" << ex.ratio;
    }
    return out;
}

// 12. max-cut constructions
Outcome criterion_maxcut() {
    Outcome out;
    for (int n = 1; n <= 8; ++n)
        for (const auto& pi : sym::enumerate(n)) {
            auto cut = locality::deterministic_cut(pi);
            EXPECT(2 * cut.achieved >= pi.transposition_distance(),
                   "det n=" << n << " pi=" << pi.to_string());
        }
    rng::SubStream gen(2026, 99);
    for (int inst = 0; inst < 100; ++inst) {
        int n = 2 + static_cast<int>(gen.u64() % 7); // up to 8
        int k = 1 + static_cast<int>(gen.u64() % 4);
        std::vector<sym::Permutation> pis;
        for (int i = 0; i < k; ++i) {
            std::vector<int> im(static_cast<std::size_t>(n));
            std::iota(im.begin(), im.end(), 1);
            for (int x = n - 1; x > 0; --x)
                std::swap(im[static_cast<std::size_t>(x)],
                          im[static_cast<std::size_t>(gen.u64() %
                                                      static_cast<std::uint64_t>(x + 1))]);
            pis.push_back(sym::Permutation(im));
        }
        auto cut = locality::randomized_cut(pis, 64, 2026 + static_cast<std::uint64_t>(inst));
        EXPECT(cut.meets_target, "rand inst=" << inst);
    }
    out.detail << " exhaustive n <= 8 and 100 seeded instances";
    return out;
}

// 13. bias bound chains and coefficient margins
Outcome criterion_bound_chains() {
    Outcome out;
    for (int n = 2; n <= 6; ++n) {
        long s0 = static_cast<long>(n) * n;
        for (long s : {s0, s0 + 1, 2 * s0}) {
            auto c = locality::hiding_bias_bound(n, s * s);
            EXPECT(c.hypothesis_ok, "hiding hyp n=" << n << " d=" << s * s);
            EXPECT(c.chain_ordered, "hiding chain n=" << n << " d=" << s * s);
            EXPECT(c.exact_sum.has_value(), "hiding exact n=" << n);
        }
        for (long q : {s0, s0 + 1}) {
            long d = q * q * q * q;
            auto c = locality::product_test_bound(n, d);
            EXPECT(c.hypothesis_ok, "product hyp n=" << n << " d=" << d);
            EXPECT(c.chain_ordered, "product chain n=" << n << " d=" << d);
            EXPECT(c.exact_sum.has_value(), "product exact n=" << n);
        }
    }
    // coefficient margins across the PPT library
    struct Case {
        int n, d;
        std::vector<double> coeffs;
    };
    std::vector<Case> cases;
    cases.push_back({2, 16, {1.0, 0.0}});
    cases.push_back({2, 16, {0.5, 0.5 / 16}});
    cases.push_back({2, 4, {0.5, 0.5 / 4}});
    for (auto [n, d] : std::vector<std::pair<int, int>>{{2, 4}, {2, 16}, {3, 4}}) {
        auto perms = sym::enumerate(n);
        rng::SubStream s(2026, static_cast<std::uint64_t>(n * 1000 + d));
        std::vector<double> c(perms.size());
        for (double& v : c)
            v = s.gaussian();
        for (std::size_t i = 0; i < perms.size(); ++i) {
            auto inv = perms[i].inverse();
            for (std::size_t j = i + 1; j < perms.size(); ++j)
                if (perms[j] == inv) {
                    double avg = 0.5 * (c[i] + c[j]);
                    c[i] = avg;
                    c[j] = avg;
                }
        }
        dense::Matrix m;
        for (std::size_t i = 0; i < perms.size(); ++i) {
            dense::Matrix p = dense::perm_operator(perms[i], d).matrix();
            m = i == 0 ? dense::Matrix(c[i] * p) : dense::Matrix(m + c[i] * p);
        }
        auto sweep = dense::ppt_check(dense::DenseOperator(m, d, n));
        double scale = sweep.worst_max_eig - sweep.worst_min_eig;
        for (std::size_t i = 0; i < perms.size(); ++i) {
            c[i] /= scale;
            if (perms[i].is_identity())
                c[i] -= sweep.worst_min_eig / scale;
        }
        cases.push_back({n, d, c});
    }
    for (const auto& kase : cases) {
        auto rep = locality::ppt_coeff_check(kase.coeffs, kase.n, kase.d);
        EXPECT(rep.applicable, "library op not ppt n=" << kase.n << " d=" << kase.d);
        if (rep.applicable)
            EXPECT(rep.all_within, "margins n=" << kase.n << " d=" << kase.d);
    }
    out.detail << " chains exact on perfect-power grids; margins nonnegative";
    return out;
}

// 14. state-moment ratios and twirled-state spectra
Outcome criterion_state_moments() {
    Outcome out;
    for (int n = 1; n <= 5; ++n) {
        int d0 = std::max(n * n, 2);
        for (int d : {d0, d0 + 1, 2 * d0}) {
            Rat lo = Rat(1) - Rat(Int(n) * n, Int(2) * d);
            lo.canonicalize();
            Rat hi = Rat(1) + Rat(Int(n) * n, Int(d));
            hi.canonicalize();
            for (const auto& b : moments::state_moment_operators(n, d)) {
                EXPECT(b.ratio == schur::moment_ratio(b.partition, d),
                       "product n=" << n << " d=" << d);
                EXPECT(b.ratio >= lo && b.ratio <= hi, "window n=" << n << " d=" << d);
            }
        }
    }
    for (auto [n, d] : std::vector<std::pair<int, int>>{{2, 2}, {2, 3}, {3, 2}}) {
        auto r = moments::psi_pi_gram(n, d);
        EXPECT(r.max_deviation <= 1e-9, "isospectral n=" << n << " d=" << d
                                                         << " dev=" << r.max_deviation);
    }
    out.detail << " exact ratios for n <= 5; twirled spectra at three points";
    return out;
}

// 15. set partitions: counts, entries, and the blowup contrast
Outcome criterion_setpart_contrast() {
    Outcome out;
    for (int n = 1; n <= 8; ++n)
        EXPECT(Int(static_cast<long>(setpart::enumerate_set_partitions(n).size())) ==
                   setpart::bell_number(n),
               "bell n=" << n);
    for (int n = 2; n <= 4; ++n)
        for (int d = 2; d <= 3; ++d) {
            setpart::PartitionGram g(n, d);
            std::size_t side = 1;
            for (int i = 0; i < n; ++i)
                side *= static_cast<std::size_t>(d);
            for (std::size_t a = 0; a < g.size(); ++a)
                for (std::size_t b = 0; b < g.size(); ++b) {
                    long common = 0;
                    for (std::size_t x = 0; x < side; ++x) {
                        std::vector<int> digits(static_cast<std::size_t>(n));
                        std::size_t y = x;
                        for (int k = n - 1; k >= 0; --k) {
                            digits[static_cast<std::size_t>(k)] =
                                static_cast<int>(y % static_cast<std::size_t>(d));
                            y /= static_cast<std::size_t>(d);
                        }
                        bool ok = true;
                        for (const auto* part : {&g.partitions()[a], &g.partitions()[b]})
                            for (const auto& blk : part->blocks())
                                for (std::size_t i = 1; i < blk.size() && ok; ++i)
                                    if (digits[static_cast<std::size_t>(blk[i]) - 1] !=
                                        digits[static_cast<std::size_t>(blk[0]) - 1])
                                        ok = false;
                        if (ok)
                            ++common;
                    }
                    int ba = g.partitions()[a].block_count();
                    int bb = g.partitions()[b].block_count();
                    Rat sq(Int(common) * common,
                           int_pow(Int(d), static_cast<unsigned long>(ba + bb)));
                    sq.canonicalize();
                    EXPECT(sq == g.squared_entry(a, b), "entry n=" << n << " d=" << d);
                }
        }
    double prev_l = 0, prev_s = 0;
    for (int n = 3; n <= 6; ++n) {
        auto w = setpart::blowup_witness(n, 4);
        EXPECT(w.lambda_max_linear > prev_l && w.lambda_max_squared > prev_s,
               "growth n=" << n);
        prev_l = w.lambda_max_linear;
        prev_s = w.lambda_max_squared;
    }
    // contrast: permutation operators stay glued to the identity when
    // n^2 <= d
    for (int n = 2; n * n <= 8; ++n)
        for (int d = n * n; d <= 8; ++d) {
            Rat xe(Int(n) * n, Int(2) * d);
            xe.canonicalize();
            EXPECT(gram::lambda_max_formula(n, d) <= exp_taylor_lower(xe),
                   "contrast n=" << n << " d=" << d);
        }
    out.detail << " bell counts, string-count oracle, monotone blowup at d=4";
    return out;
}

// 16. determinism of quick verify; full verify passes under 15 minutes
Outcome criterion_determinism() {
    Outcome out;
    pipelines::RunConfig cfg;
    cfg.quick = true;
    cfg.seed = 0;
    auto r1 = pipelines::run_verify(cfg);
    auto r2 = pipelines::run_verify(cfg);
    EXPECT(r1.rows_payload() == r2.rows_payload(), "quick payload differs");
    EXPECT(r1.determinism_hash() == r2.determinism_hash(), "quick hash differs");
    EXPECT(r1.all_pass(), "quick failures: " << r1.fail_count());

    auto t0 = Clock::now();
    pipelines::RunConfig full;
    full.seed = 0;
    auto rf = pipelines::run_verify(full);
    double secs = seconds_since(t0);
    EXPECT(rf.all_pass(), "full failures: " << rf.fail_count());
    EXPECT(secs < 900.0, "full runtime " << secs << "s");
    out.detail << " quick hash " << std::hex << r1.determinism_hash() << std::dec
               << "; full verify " << rf.rows.size() << " rows in " << secs << "s";
    return out;
}

struct Criterion {
    int id;
    const char* name;
    std::function<Outcome()> run;
};

} // namespace

int main() {
    std::vector<Criterion> criteria = {
        {1, "spectrum-equivalence", criterion_spectrum_equivalence},
        {2, "extremal-eigenvalues", criterion_extremal_eigenvalues},
        {3, "trace-norm-bound", criterion_trace_norm_bound},
        {4, "row-sum-identity", criterion_row_sum},
        {5, "weingarten-exact-inverse", criterion_weingarten_inverse},
        {6, "moebius-asymptotics", criterion_moebius_asymptotics},
        {7, "pt-singular-value-law", criterion_pt_law},
        {8, "falling-factorial-witness", criterion_falling_factorial},
        {9, "moment-formula-agreement", criterion_moment_formulas},
        {10, "gaussian-permanent-moment", criterion_gaussian_permanent},
        {11, "boson-moment-window", criterion_boson_window},
        {12, "max-cut", criterion_maxcut},
        {13, "bound-chains", criterion_bound_chains},
        {14, "state-moments", criterion_state_moments},
        {15, "set-partition-contrast", criterion_setpart_contrast},
        {16, "determinism-and-runtime", criterion_determinism},
    };
    int failures = 0;
    for (auto& c : criteria) {
        auto t0 = Clock::now();
        Outcome out;
        try {
            out = c.run();
        } catch (const std::exception& e) {
            out.pass = false;
            out.detail << " [exception: " << e.what() << "]";
        }
        double secs = seconds_since(t0);
        std::printf("[%s] %02d %s (%.1fs)%s\n", out.pass ? "PASS" : "FAIL", c.id, c.name,
                    secs, out.detail.str().c_str());
        std::fflush(stdout);
        if (!out.pass)
            ++failures;
    }
    if (failures)
        std::printf("%d criterion(s) failed\n", failures);
    else
        std::printf("all %zu criteria passed\n", criteria.size());
    return failures == 0 ? 0 : 1;
}
