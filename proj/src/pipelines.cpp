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

#include "permops/pipelines.hpp"

#include <chrono>
#include <cmath>
#include <sstream>

#include "permops/boson.hpp"
#include "permops/dense_ops.hpp"
#include "permops/errors.hpp"
#include "permops/gram.hpp"
#include "permops/locality.hpp"
#include "permops/moments.hpp"
#include "permops/norms.hpp"
#include "permops/rng.hpp"
#include "permops/schur.hpp"
#include "permops/setpart.hpp"
#include "permops/weingarten.hpp"

namespace permops::pipelines {

using report::check_close;
using report::check_eq_exact;
using report::check_ge_exact;
using report::check_le;
using report::check_le_exact;
using report::check_true;
using report::format_double;
using report::format_rat;
using report::Report;

namespace {

std::string now_utc() {
    auto t = std::chrono::system_clock::to_time_t(std::chrono::system_clock::now());
    char buf[32];
    std::strftime(buf, sizeof buf, "%Y-%m-%dT%H:%M:%SZ", std::gmtime(&t));
    return buf;
}

Report make_report(const std::string& sub, const RunConfig& cfg) {
    Report r;
    r.subcommand = sub;
    r.timestamp = now_utc();
    r.config["seed"] = std::to_string(cfg.seed);
    if (cfg.n >= 0)
        r.config["n"] = std::to_string(cfg.n);
    if (cfg.d >= 0)
        r.config["d"] = std::to_string(cfg.d);
    if (cfg.m >= 0)
        r.config["m"] = std::to_string(cfg.m);
    if (cfg.t >= 0)
        r.config["t"] = std::to_string(cfg.t);
    if (cfg.samples >= 0)
        r.config["samples"] = std::to_string(cfg.samples);
    if (cfg.quick)
        r.config["quick"] = "1";
    return r;
}

int pick(int v, int fallback) {
    return v >= 0 ? v : fallback;
}

long long pick_samples(long long v, long long fallback) {
    return v >= 0 ? v : fallback;
}

struct Caps {
    int enumeration = sym::kEnumerationCap;
    std::size_t dense = dense::kDenseCap;
    int bell = setpart::kBellCap;
};

Caps caps_for(const RunConfig& cfg) {
    if (!cfg.cap_override)
        return {};
    return {10, dense::kDenseCap * 16, 11};
}

// ---------------------------------------------------------------- gram

void gram_spectral_rows(Report& rep, const gram::GramMatrix& G, double tol) {
    const int n = G.n(), d = G.d();
    auto sr = gram::spectral_report(G);
    check_close(rep, "lambda_min_vs_product", n, d, "", sr.lambda_min_numeric,
                to_double(sr.lambda_min_formula), 1e-9, tol);
    check_close(rep, "lambda_max_vs_product", n, d, "", sr.lambda_max_numeric,
                to_double(sr.lambda_max_formula), 1e-9, tol);
    check_true(rep, "psd_min_eigenvalue", n, d, "", sr.lambda_min_numeric >= -1e-9,
               format_double(sr.lambda_min_numeric));
    // lambda_min >= 1 - n(n-1)/2d, exact
    Rat lin_lo = Rat(1) - Rat(Int(n) * (n - 1), Int(2) * d);
    lin_lo.canonicalize();
    check_ge_exact(rep, "lambda_min_linear_lower", n, d, "", sr.lambda_min_formula, lin_lo);
    // lambda_max <= e^{n(n-1)/2d}, certified against a truncated Taylor
    // lower bound of the exponential
    Rat x(Int(n) * (n - 1), Int(2) * d);
    x.canonicalize();
    check_le_exact(rep, "lambda_max_exp_upper", n, d, "", sr.lambda_max_formula,
                   exp_taylor_lower(x));
    if (n <= d) {
        double s1_bound = std::sqrt(2.0) * n / d;
        check_le(rep, "trace_distance_bound", n, d, "", sr.trace_distance, s1_bound);
    }
    if (n * n <= d)
        check_le(rep, "op_distance_bound", n, d, "", sr.op_norm_distance,
                 static_cast<double>(n) * n / d);
    // ||G - I||_{1->1} = row_sum - 1 <= e^{n^2/2d} - 1
    Rat one_to_one = sr.row_sum - 1;
    Rat xe(Int(n) * n, Int(2) * d);
    xe.canonicalize();
    check_le_exact(rep, "one_to_one_distance_bound", n, d, "", one_to_one,
                   exp_taylor_lower(xe) - 1);
}

void gram_rowsum_rows(Report& rep, const gram::GramMatrix& G) {
    const int n = G.n(), d = G.d();
    Rat closed = gram::row_sum(n, d);
    check_eq_exact(rep, "row_sum_identity", n, d, "", G.row_sum_literal(0), closed);
    if (auto cb = gram::cayley_bound(n, d))
        check_ge_exact(rep, "cayley_bound_dominates", n, d, "", *cb, closed);
    else
        rep.add_info("cayley_bound_divergent", n, d, "", "divergent");
}

void witness_rows(Report& rep, int n, int d) {
    Int val = gram::antisymmetric_witness(n, Int(d));
    Int expect = falling_factorial(Int(d), static_cast<unsigned long>(n));
    check_eq_exact(rep, "alternating_trace_sum", n, d, "", Rat(val), Rat(expect));
}

void spectrum_rows(Report& rep, int n, int d, double tol) {
    auto spec = schur::exact_spectrum(n, d);
    check_eq_exact(rep, "spectrum_trace_identity", n, d, "", spec.trace(),
                   Rat(factorial(static_cast<unsigned long>(n))));
    check_eq_exact(rep, "spectrum_total_multiplicity", n, d, "",
                   Rat(spec.total_multiplicity()),
                   Rat(factorial(static_cast<unsigned long>(n))));
    gram::GramMatrix G(n, d);
    auto sr = gram::spectral_report(G);
    auto expected = spec.expanded_doubles();
    bool match = expected.size() == sr.eigenvalues.size();
    double worst = 0;
    if (match) {
        for (std::size_t i = 0; i < expected.size(); ++i) {
            double allow = 1e-10 + tol * std::abs(expected[i]);
            double dev = std::abs(sr.eigenvalues[i] - expected[i]);
            worst = std::max(worst, dev - allow);
            if (dev > allow)
                match = false;
        }
    }
    check_true(rep, "spectrum_multiset_match", n, d,
               "kernel=" + spec.kernel_dimension.get_str(), match, format_double(worst));
}

// ----------------------------------------------------------- weingarten

void weingarten_rows(Report& rep, int n, int d) {
    gram::GramMatrix G(n, d);
    auto wg = weingarten::WeingartenMatrix::invert(G);
    const std::size_t N = G.size();
    // exact product check
    bool exact = true;
    for (std::size_t i = 0; i < N && exact; ++i)
        for (std::size_t j = 0; j < N; ++j) {
            Rat acc = 0;
            for (std::size_t k = 0; k < N; ++k)
                acc += G.entry(i, k) * wg.entry(k, j);
            if (acc != (i == j ? Rat(1) : Rat(0))) {
                exact = false;
                break;
            }
        }
    check_true(rep, "exact_inverse_product", n, d, "", exact, exact ? "identity" : "mismatch");
    // class function and symmetry, exact
    bool class_fn = true, symmetric = true;
    for (std::size_t i = 0; i < N && (class_fn || symmetric); ++i)
        for (std::size_t j = 0; j < N; ++j) {
            if (wg.entry(i, j) != wg.entry(j, i))
                symmetric = false;
            sym::CycleType t =
                G.permutations()[i].inverse().compose(G.permutations()[j]).cycle_type();
            if (wg.entry(i, j) != wg.class_value(t))
                class_fn = false;
        }
    check_true(rep, "class_function_exact", n, d, "", class_fn, class_fn ? "0" : "nonzero");
    check_true(rep, "inverse_symmetric", n, d, "", symmetric, symmetric ? "yes" : "no");
    for (const auto& [t, v] : wg.class_values())
        rep.add_value("weingarten_class_value", n, d, "type=" + t.to_string(), format_rat(v));
}

void asymptotic_rows(Report& rep, const sym::CycleType& t, const std::vector<int>& grid) {
    auto chk = weingarten::asymptotic_check(t, grid);
    std::ostringstream aux;
    aux << "type=" << t.to_string() << " moebius=" << chk.moeb.get_str();
    for (const auto& row : chk.rows)
        rep.add_value("weingarten_rescaled_class", t.n(), row.d, aux.str(),
                      format_double(row.rescaled));
    check_true(rep, "moebius_residual_quartering", t.n(), grid.back(), aux.str(),
               chk.ratio_in_window, format_double(chk.top_ratio));
}

// ---------------------------------------------------------------- dense

void pt_rows(Report& rep, int n, int d, std::size_t cap = dense::kDenseCap) {
    const auto perms = sym::enumerate(n);
    bool all_ok = true;
    double worst = 0;
    for (const auto& pi : perms) {
        for (std::uint32_t bits = 0; bits < (1u << n); ++bits) {
            dense::LegSubset S{bits, n};
            auto law = dense::pt_singular_law(pi, S, d, true, cap);
            worst = std::max(worst, law.max_deviation);
            if (!law.verified)
                all_ok = false;
        }
    }
    check_true(rep, "pt_singular_value_law", n, d, "exhaustive", all_ok, format_double(worst));
}

void moment_rows(Report& rep, int n, int d, std::size_t samples, std::uint64_t seed) {
    gram::GramMatrix G(n, d);
    auto wg = weingarten::WeingartenMatrix::invert(G);
    auto cs = moments::cs_unitary_exact(n, d, wg);
    std::ostringstream aux;
    aux << "samples=" << samples;

    double trace = cs.matrix().real().trace();
    check_close(rep, "haar_moment_trace", n, d, "", trace,
                to_double(Rat(factorial(static_cast<unsigned long>(n)))), 1e-8);
    Eigen::SelfAdjointEigenSolver<dense::Matrix> es(cs.matrix(), Eigen::EigenvaluesOnly);
    check_true(rep, "haar_moment_psd", n, d, "", es.eigenvalues().minCoeff() >= -1e-9,
               format_double(es.eigenvalues().minCoeff()));

    moments::SamplerSpec haar{moments::SamplerSpec::Kind::haar_unitary, d, seed};
    auto mc = moments::mc_tensor_moment(haar, n, samples);
    double sig = mc.max_sigma_deviation(cs.matrix());
    check_le(rep, "haar_moment_mc_entrywise", n, d, aux.str(), sig, 6.0);

    auto wick = moments::wick_exact(n, d);
    moments::SamplerSpec gin{moments::SamplerSpec::Kind::ginibre, d, seed + 1};
    auto mcg = moments::mc_tensor_moment(gin, n, samples);
    double sigg = mcg.max_sigma_deviation(wick.matrix());
    check_le(rep, "wick_moment_mc_entrywise", n, d, aux.str(), sigg, 6.0);
}

void moment_gap_rows(Report& rep, int n, const std::vector<int>& ds) {
    // || wick - haar moment ||_inf equals the operator-norm distance of
    // the Gram matrix from the identity: the difference is V (I - Wg) V^dag
    // with V^dag V = G, and (I - Wg) G = G - I.
    double prev = 0;
    bool decaying = true;
    for (std::size_t k = 0; k < ds.size(); ++k) {
        gram::GramMatrix G(n, ds[k]);
        auto sr = gram::spectral_report(G);
        double gap = sr.op_norm_distance;
        rep.add_value("moment_gap_norm", n, ds[k], "", format_double(gap));
        if (k > 0 && !(gap <= prev * 0.55))
            decaying = false; // at least the 1/d rate under doubling
        prev = gap;
    }
    check_true(rep, "moment_gap_decay", n, ds.back(), "", decaying, format_double(prev));
}

// ---------------------------------------------------------------- states

void state_moment_rows(Report& rep, int n, int d) {
    auto blocks = moments::state_moment_operators(n, d);
    Rat lo = Rat(1) - Rat(Int(n) * n, Int(2) * d);
    lo.canonicalize();
    Rat hi = Rat(1) + Rat(Int(n) * n, Int(d));
    hi.canonicalize();
    bool hypothesis = Int(n) * n <= d;
    for (const auto& b : blocks) {
        std::string aux = "lambda=" + b.partition.to_string();
        check_eq_exact(rep, "state_moment_ratio_product", n, d, aux, b.ratio,
                       schur::moment_ratio(b.partition, d));
        if (hypothesis) {
            check_ge_exact(rep, "state_moment_ratio_lower", n, d, aux, b.ratio, lo);
            check_le_exact(rep, "state_moment_ratio_upper", n, d, aux, b.ratio, hi);
        }
    }
}

void psi_pi_rows(Report& rep, int n, int d, std::size_t cap = dense::kDenseCap) {
    auto res = moments::psi_pi_gram(n, d, cap);
    check_le(rep, "twirled_state_isospectral", n, d, "", res.max_deviation, 1e-9);
}

void state_mc_rows(Report& rep, int d, std::size_t samples, std::uint64_t seed) {
    // dense two-copy cross-check: block coefficients of the averaged
    // state against the closed forms, via the A-side/B-side projector
    // sandwich (n = 2 only)
    const int n = 2;
    auto blocks = moments::state_moment_operators(n, d);
    auto psi_mc = moments::mc_pure_state_moment(d * d, n, samples, seed);
    auto mes_mc = moments::mc_entangled_state_moment(d, n, samples, seed + 1);

    // A legs {1,3}, B legs {2,4} of the flattened 4-leg space
    dense::Matrix p13 =
        dense::perm_operator(sym::Permutation::transposition(4, 1, 3), d).matrix();
    dense::Matrix p24 =
        dense::perm_operator(sym::Permutation::transposition(4, 2, 4), d).matrix();
    const Eigen::Index side = p13.rows();
    dense::Matrix eye = dense::Matrix::Identity(side, side);

    for (const auto& b : blocks) {
        bool sym_block = b.partition.rows() == 1; // (2) vs (1,1)
        dense::Matrix pa = sym_block ? dense::Matrix((eye + p13) / 2)
                                     : dense::Matrix((eye - p13) / 2);
        dense::Matrix pb = sym_block ? dense::Matrix((eye + p24) / 2)
                                     : dense::Matrix((eye - p24) / 2);
        dense::Matrix sandwich = pa * pb;
        Int dq = schur::dim_q(b.partition, d);
        double denom = to_double(Rat(dq * dq));
        std::string aux = "lambda=" + b.partition.to_string();

        double psi_hat = (sandwich * psi_mc.mean).real().trace() / denom;
        // sum of |sandwich entry| * stderr bounds the coefficient error;
        // cruder but safe: use the max entry stderr times the sandwich trace norm
        double psi_err = psi_mc.stderr_entry.maxCoeff() *
                         sandwich.cwiseAbs().sum() / denom;
        check_close(rep, "state_block_coeff_random", n, d, aux, psi_hat,
                    to_double(b.coeff_random_state), 5.0 * psi_err + 1e-12);

        double mes_hat = (sandwich * mes_mc.mean).real().trace() / denom;
        double mes_err = mes_mc.stderr_entry.maxCoeff() *
                         sandwich.cwiseAbs().sum() / denom;
        check_close(rep, "state_block_coeff_entangled", n, d, aux, mes_hat,
                    to_double(b.coeff_random_mes), 5.0 * mes_err + 1e-12);
    }
}

// ---------------------------------------------------------------- boson

void boson_rows(Report& rep, int m, int n, int t, std::size_t samples, std::uint64_t seed) {
    auto ex = boson::moment_experiment(m, n, t, samples, seed);
    std::ostringstream aux;
    aux << "t=" << t << " m=" << m << " samples=" << samples;
    rep.add_value("permanent_moment_haar", n, -1, aux.str(), format_double(ex.haar.mean));
    rep.add_value("permanent_moment_gauss", n, -1, aux.str(), format_double(ex.gauss.mean));
    rep.add_value("permanent_moment_ratio", n, -1, aux.str(), format_double(ex.ratio));
    rep.add_value("permanent_moment_skew_haar", n, -1, aux.str(),
                  format_double(ex.haar.skewness));
    check_true(rep, "permanent_ratio_window", n, -1, aux.str(), ex.within_window,
               format_double(std::abs(ex.ratio - 1.0) / std::max(ex.window, 1e-300)));
    double phase = std::abs(ex.per_mean);
    check_le(rep, "permanent_phase_invariance", n, -1, aux.str(), phase,
             5.0 * ex.per_stderr + 1e-12);
    if (t == 1) {
        // E|Per(X)|^2 = n!/m^n exactly
        Rat second(factorial(static_cast<unsigned long>(n)),
                   int_pow(Int(m), static_cast<unsigned long>(n)));
        second.canonicalize();
        check_close(rep, "gaussian_second_moment", n, -1, aux.str(), ex.gauss.mean,
                    to_double(second), 5.0 * ex.gauss.stderr_mean);
    }
    if (t == 2) {
        check_close(rep, "gaussian_fourth_moment_mc", n, -1, aux.str(), ex.gauss.mean,
                    to_double(boson::gaussian_fourth_exact(n, m)),
                    5.0 * ex.gauss.stderr_mean);
    }
}

void w_class_rows(Report& rep, int n) {
    Int total = 0;
    for (int ell = 0; ell <= n; ++ell)
        total += boson::w_class_size(n, ell);
    check_eq_exact(rep, "w_class_sizes_sum", n, -1, "",
                   Rat(total), Rat(factorial(static_cast<unsigned long>(2 * n))));
    // exhaustive distribution over S_{2n}
    std::vector<Int> counts(static_cast<std::size_t>(n) + 1, Int(0));
    for (const auto& pi : sym::enumerate(2 * n))
        counts[static_cast<std::size_t>(boson::w_statistic(pi, n))] += 1;
    bool all = true;
    for (int ell = 0; ell <= n; ++ell)
        if (counts[static_cast<std::size_t>(ell)] != boson::w_class_size(n, ell))
            all = false;
    check_true(rep, "w_class_sizes_exhaustive", n, -1, "", all, all ? "match" : "mismatch");
    // fourth moment from the overlap decomposition (m = 10 is arbitrary)
    if (n <= 4)
        check_eq_exact(rep, "gaussian_fourth_via_overlaps", n, -1, "m=10",
                       boson::gaussian_fourth_via_alpha(n, 10),
                       boson::gaussian_fourth_exact(n, 10));
}

// --------------------------------------------------------------- locality

void maxcut_rows(Report& rep, int n_max, int instances, std::uint64_t seed) {
    bool det_ok = true;
    int worst_n = 0;
    for (int n = 1; n <= n_max; ++n) {
        for (const auto& pi : sym::enumerate(n)) {
            auto cut = locality::deterministic_cut(pi);
            if (!cut.meets_target) {
                det_ok = false;
                worst_n = n;
            }
            // the construction should even reach ceil(|pi|/2)
            if (2 * cut.achieved < pi.transposition_distance()) {
                det_ok = false;
                worst_n = n;
            }
        }
    }
    check_true(rep, "deterministic_cut_half_distance", n_max, -1, "exhaustive", det_ok,
               det_ok ? "all" : ("fails at n=" + std::to_string(worst_n)));

    bool rnd_ok = true;
    rng::SubStream gen(seed, 0xC0FFEE);
    for (int inst = 0; inst < instances; ++inst) {
        int n = 2 + static_cast<int>(gen.u64() % static_cast<std::uint64_t>(n_max - 1));
        int k = 1 + static_cast<int>(gen.u64() % 4);
        std::vector<sym::Permutation> pis;
        for (int i = 0; i < k; ++i) {
            std::vector<int> im(static_cast<std::size_t>(n));
            std::iota(im.begin(), im.end(), 1);
            for (int x = n - 1; x > 0; --x)
                std::swap(im[static_cast<std::size_t>(x)],
                          im[gen.u64() % static_cast<std::uint64_t>(x + 1)]);
            pis.push_back(sym::Permutation(im));
        }
        auto cut = locality::randomized_cut(pis, 64, seed + static_cast<std::uint64_t>(inst));
        if (!cut.meets_target)
            rnd_ok = false;
    }
    check_true(rep, "randomized_cut_quarter_sum", n_max, -1,
               "instances=" + std::to_string(instances), rnd_ok, rnd_ok ? "all" : "miss");

    // derangement count dominates the metric
    bool der_ok = true;
    for (int n = 1; n <= std::min(n_max, 6); ++n)
        for (const auto& pi : sym::enumerate(n))
            if (pi.derangement_size() < pi.transposition_distance())
                der_ok = false;
    check_true(rep, "derangements_dominate_distance", std::min(n_max, 6), -1, "exhaustive",
               der_ok, der_ok ? "all" : "violation");
}

void bound_chain_rows(Report& rep, bool product, int n, long d) {
    auto c = product ? locality::product_test_bound(n, d) : locality::hiding_bias_bound(n, d);
    std::ostringstream aux;
    aux << "d=" << d << (c.hypothesis_ok ? "" : " hypothesis=off");
    const char* name = product ? "product_test_chain" : "hiding_bias_chain";
    check_true(rep, name, n, static_cast<int>(std::min<long>(d, 1 << 30)), aux.str(),
               c.chain_ordered,
               format_double(c.exact_sum_value) + "<=" + format_double(c.exponential_bound) +
                   "<=" + format_double(c.linear_bound));
}

void ppt_coeff_rows(Report& rep, std::uint64_t seed) {
    struct Case {
        int n, d;
        std::vector<double> coeffs;
        std::string label;
    };
    std::vector<Case> cases;

    // identity measurement
    {
        auto perms = sym::enumerate(2);
        std::vector<double> c(perms.size(), 0.0);
        c[0] = 1.0;
        cases.push_back({2, 16, c, "identity"});
    }
    // damped swap (I + SWAP/d)/2
    for (int d : {4, 16}) {
        std::vector<double> c(2, 0.0);
        c[0] = 0.5;
        c[1] = 0.5 / d;
        cases.push_back({2, d, c, "damped_swap"});
    }
    // random Hermitian elements of the span, scaled into PPT feasibility
    for (auto [n, d] : std::vector<std::pair<int, int>>{{2, 4}, {2, 16}, {3, 4}}) {
        auto perms = sym::enumerate(n);
        rng::SubStream s(seed, static_cast<std::uint64_t>(n * 100 + d));
        std::vector<double> c(perms.size());
        for (double& v : c)
            v = s.gaussian();
        // symmetrize under inversion so the operator is Hermitian
        for (std::size_t i = 0; i < perms.size(); ++i) {
            auto inv = perms[i].inverse();
            for (std::size_t j = 0; j < perms.size(); ++j)
                if (perms[j] == inv && j > i) {
                    double avg = 0.5 * (c[i] + c[j]);
                    c[i] = avg;
                    c[j] = avg;
                }
        }
        // shift and scale so every partial transpose lands in [0, I]
        dense::Matrix m;
        for (std::size_t i = 0; i < perms.size(); ++i) {
            dense::Matrix p = dense::perm_operator(perms[i], d).matrix();
            if (i == 0)
                m = c[i] * p;
            else
                m += c[i] * p;
        }
        auto sweep = dense::ppt_check(dense::DenseOperator(m, d, n), 1e-9);
        double lo = sweep.worst_min_eig, hi = sweep.worst_max_eig;
        double scale = hi - lo;
        for (std::size_t i = 0; i < perms.size(); ++i) {
            c[i] /= scale;
            if (perms[i].is_identity())
                c[i] -= lo / scale;
        }
        cases.push_back({n, d, c, "random_scaled"});
    }

    for (const auto& kase : cases) {
        auto repregion = locality::ppt_coeff_check(kase.coeffs, kase.n, kase.d);
        std::string aux = "op=" + kase.label;
        if (!repregion.applicable) {
            check_true(rep, "ppt_coeff_bound", kase.n, kase.d, aux + " not_ppt", false,
                       "operator failed the PPT sweep");
            continue;
        }
        double worst_margin = 0;
        bool first = true;
        for (const auto& row : repregion.rows) {
            if (first || row.margin < worst_margin)
                worst_margin = row.margin;
            first = false;
        }
        check_true(rep, "ppt_coeff_bound", kase.n, kase.d,
                   aux + (repregion.hypothesis_ok ? "" : " hypothesis=off"),
                   repregion.all_within, format_double(worst_margin));
    }
}

void hiding_demo_rows(Report& rep, int d) {
    auto demo = locality::hiding_demo(d);
    for (const auto& m : demo.library) {
        std::ostringstream aux;
        aux << "effect=" << m.label << " ppt=" << (m.effect_ppt ? "yes" : "no")
            << " contraction=" << (m.difference_valid ? "yes" : "no");
        rep.add_value("hiding_measurement_bias", 2, d, aux.str(), format_double(m.bias));
    }
    check_le(rep, "hiding_best_bias_vs_chain", 2, d, "", demo.best_feasible_bias,
             demo.exact_chain_value);
    rep.add_value("hiding_unrestricted_bias", 2, d, "", format_double(demo.unrestricted_bias));
    check_true(rep, "hiding_library_below_chain", 2, d, "", demo.all_below_chain,
               format_double(demo.exact_chain_value));
    // the symmetric projector itself must fail the effect sweep: that is
    // exactly why the unrestricted test is not local
    bool sym_excluded = false;
    for (const auto& m : demo.library)
        if (m.label == "symmetric_projector")
            sym_excluded = !m.effect_ppt;
    check_true(rep, "hiding_symmetric_projector_excluded", 2, d, "", sym_excluded,
               sym_excluded ? "excluded" : "unexpectedly feasible");
}

void hideable_rows(Report& rep, int n) {
    Int N = schur::hideable_state_count(n);
    Int nf = factorial(static_cast<unsigned long>(n));
    check_ge_exact(rep, "hideable_states_squared", n, -1, "", Rat(N * N), Rat(nf));
    // informational upper bound with the approximate constant
    double upper = std::sqrt(to_double(Rat(nf))) * std::exp(1.28 * std::sqrt(n));
    rep.add_info("hideable_states_upper_estimate", n, -1,
                 "N=" + N.get_str(), format_double(upper));
}

// ---------------------------------------------------------------- setpart

void setpart_rows(Report& rep, int n, int d, bool brute, int cap = setpart::kBellCap) {
    auto parts = setpart::enumerate_set_partitions(n, cap);
    check_eq_exact(rep, "bell_count", n, -1, "", Rat(Int(static_cast<long>(parts.size()))),
                   Rat(setpart::bell_number(n)));
    if (!brute)
        return;
    setpart::PartitionGram g(n, d);
    // brute-force string counting oracle for every pair
    std::size_t total = 1;
    for (int i = 0; i < n; ++i)
        total *= static_cast<std::size_t>(d);
    bool all = true;
    for (std::size_t a = 0; a < g.size() && all; ++a)
        for (std::size_t b = 0; b < g.size(); ++b) {
            long common = 0;
            for (std::size_t x = 0; x < total; ++x) {
                // digits of x as a string; constant on blocks of both?
                bool ok = true;
                for (const auto* part : {&g.partitions()[a], &g.partitions()[b]}) {
                    const auto& bi = part->block_index();
                    std::vector<int> val(static_cast<std::size_t>(part->block_count()), -1);
                    std::size_t y = x;
                    for (int pos = n - 1; pos >= 0; --pos) {
                        int digit = static_cast<int>(y % static_cast<std::size_t>(d));
                        y /= static_cast<std::size_t>(d);
                        int blk = bi[static_cast<std::size_t>(pos)];
                        if (val[static_cast<std::size_t>(blk)] == -1)
                            val[static_cast<std::size_t>(blk)] = digit;
                        else if (val[static_cast<std::size_t>(blk)] != digit)
                            ok = false;
                    }
                    if (!ok)
                        break;
                }
                if (ok)
                    ++common;
            }
            int ba = g.partitions()[a].block_count();
            int bb = g.partitions()[b].block_count();
            Rat squared(Int(common) * common, int_pow(Int(d), static_cast<unsigned long>(ba + bb)));
            squared.canonicalize();
            if (squared != g.squared_entry(a, b)) {
                all = false;
                break;
            }
        }
    check_true(rep, "partition_gram_vs_string_count", n, d, "exhaustive", all,
               all ? "match" : "mismatch");
}

void blowup_rows(Report& rep, int d, int n_lo, int n_hi) {
    double prev_sq = 0, prev_lin = 0;
    bool increasing = true;
    for (int n = n_lo; n <= n_hi; ++n) {
        auto w = setpart::blowup_witness(n, d);
        std::ostringstream aux;
        aux << "two_block=" << w.two_block_count.get_str();
        rep.add_value("partition_lambda_max_squared", n, d, aux.str(),
                      format_double(w.lambda_max_squared));
        rep.add_value("partition_lambda_max_linear", n, d, aux.str(),
                      format_double(w.lambda_max_linear));
        check_le(rep, "partition_witness_lower_bound", n, d, "",
                 to_double(w.witness_bound_squared), w.lambda_max_squared, 1e-9);
        if (n > n_lo && (w.lambda_max_squared <= prev_sq || w.lambda_max_linear <= prev_lin))
            increasing = false;
        prev_sq = w.lambda_max_squared;
        prev_lin = w.lambda_max_linear;
    }
    check_true(rep, "partition_lambda_max_increasing", n_hi, d, "", increasing,
               increasing ? "strict" : "plateau");
    // contrast: in the stable regime the permutation Gram matrix stays
    // within its exponential window
    int n_perm = 2;
    Rat lam = gram::lambda_max_formula(n_perm, d);
    Rat xe(Int(n_perm) * n_perm, Int(2) * d);
    xe.canonicalize();
    check_le_exact(rep, "permutation_lambda_max_window_contrast", n_perm, d, "", lam,
                   exp_taylor_lower(xe));
}

void norm_rows(Report& rep, int n, int d) {
    const auto perms = sym::enumerate(n);
    const std::size_t N = perms.size();
    Int nf = factorial(static_cast<unsigned long>(n));

    auto run_case = [&](const std::string& label, const std::vector<Rat>& a) {
        auto w = gram::norm_window(a, n, d);
        std::string aux = "coeffs=" + label;
        check_true(rep, "two_norm_window", n, d, aux, w.two_norm_in_window,
                   format_rat(w.quad_form));
        if (w.measured) {
            check_close(rep, "quad_form_vs_frobenius", n, d, aux, w.frobenius_sq_normalized,
                        to_double(w.quad_form), 1e-9, 1e-9);
            check_true(rep, "op_norm_lower_certified", n, d, aux, w.inf_lower_certified,
                       format_double(w.op_norm));
            check_true(rep, "trace_norm_lower", n, d, aux, w.trace_lower_holds,
                       format_double(w.trace_norm));
            rep.add_info("op_norm_lower_sharp_observed", n, d, aux,
                         w.inf_lower_sharp ? "holds" : "violated");
        }
        return w;
    };

    std::vector<Rat> indicator(N, Rat(0));
    indicator[0] = 1;
    run_case("identity_indicator", indicator);

    std::vector<Rat> uniform(N, Rat(1, nf));
    for (auto& q : uniform)
        q.canonicalize();
    run_case("uniform", uniform);

    std::vector<Rat> signed_avg(N);
    for (std::size_t i = 0; i < N; ++i) {
        signed_avg[i] = Rat(perms[i].sign(), nf);
        signed_avg[i].canonicalize();
    }
    auto w = run_case("signed_average", signed_avg);
    if (w.measured && d >= n) {
        // the alternating combination saturates ||A||_inf = ||a||_1
        check_close(rep, "alternating_saturates_one_norm", n, d, "", w.op_norm,
                    to_double(w.a_one), 1e-9, 1e-9);
    }
}

} // namespace

// ------------------------------------------------------------ subcommands

Report run_gram(const RunConfig& cfg) {
    Report rep = make_report("gram", cfg);
    int n = pick(cfg.n, 3), d = pick(cfg.d, 3);
    gram::GramMatrix G(n, d, caps_for(cfg).enumeration);
    auto sr = gram::spectral_report(G);
    for (double ev : sr.eigenvalues)
        rep.add_value("eigenvalue", n, d, "", format_double(ev));
    gram_spectral_rows(rep, G, cfg.tol);
    gram_rowsum_rows(rep, G);
    witness_rows(rep, n, d);
    return rep;
}

Report run_spectrum(const RunConfig& cfg) {
    Report rep = make_report("spectrum", cfg);
    int n = pick(cfg.n, 4), d = pick(cfg.d, 4);
    auto spec = schur::exact_spectrum(n, d);
    for (const auto& e : spec.entries)
        rep.add_value("spectrum_entry", n, d,
                      "lambda=" + e.partition.to_string() +
                          " mult=" + e.multiplicity.get_str(),
                      format_rat(e.eigenvalue));
    rep.add_value("kernel_dimension", n, d, "", spec.kernel_dimension.get_str());
    spectrum_rows(rep, n, d, cfg.tol);
    return rep;
}

Report run_weingarten(const RunConfig& cfg) {
    Report rep = make_report("weingarten", cfg);
    int n = pick(cfg.n, 3), d = pick(cfg.d, 4);
    weingarten_rows(rep, n, d);
    if (n <= 3)
        asymptotic_rows(rep, sym::Permutation::from_cycle(n, [&] {
                                 std::vector<int> c;
                                 for (int i = 1; i <= std::min(n, 3); ++i)
                                     c.push_back(i);
                                 return c;
                             }())
                                 .cycle_type(),
                        {25, 50, 100});
    return rep;
}

Report run_norms(const RunConfig& cfg) {
    Report rep = make_report("norms", cfg);
    int n = pick(cfg.n, 2), d = pick(cfg.d, 9);
    norm_rows(rep, n, d);
    return rep;
}

Report run_states(const RunConfig& cfg) {
    Report rep = make_report("states", cfg);
    int n = pick(cfg.n, 2), d = pick(cfg.d, 3);
    state_moment_rows(rep, n, d);
    std::size_t side = 1;
    bool fits = true;
    for (int i = 0; i < 2 * n; ++i) {
        side *= static_cast<std::size_t>(d);
        if (side > caps_for(cfg).dense)
            fits = false;
    }
    if (fits)
        psi_pi_rows(rep, n, d, caps_for(cfg).dense);
    if (n == 2 && d <= 3) {
        auto samples = static_cast<std::size_t>(pick_samples(cfg.samples, 100000));
        state_mc_rows(rep, d, samples, cfg.seed);
    }
    return rep;
}

Report run_boson(const RunConfig& cfg) {
    Report rep = make_report("boson", cfg);
    int n = pick(cfg.n, 2), t = pick(cfg.t, 2), m = pick(cfg.m, 64);
    auto samples = static_cast<std::size_t>(pick_samples(cfg.samples, 100000));
    boson_rows(rep, m, n, t, samples, cfg.seed);
    if (n <= 4)
        w_class_rows(rep, n);
    return rep;
}

Report run_pt(const RunConfig& cfg) {
    Report rep = make_report("pt", cfg);
    int n = pick(cfg.n, 3), d = pick(cfg.d, 2);
    pt_rows(rep, n, d, caps_for(cfg).dense);
    return rep;
}

Report run_maxcut(const RunConfig& cfg) {
    Report rep = make_report("maxcut", cfg);
    int n = pick(cfg.n, 6);
    maxcut_rows(rep, n, 100, cfg.seed);
    return rep;
}

Report run_hiding(const RunConfig& cfg) {
    Report rep = make_report("hiding", cfg);
    int n = pick(cfg.n, 2), d = pick(cfg.d, 16);
    bound_chain_rows(rep, false, n, d);
    hideable_rows(rep, n);
    if (n == 2 && static_cast<std::size_t>(d) * d <= dense::kDenseCap)
        hiding_demo_rows(rep, d);
    ppt_coeff_rows(rep, cfg.seed);
    return rep;
}

Report run_product_test(const RunConfig& cfg) {
    Report rep = make_report("product-test", cfg);
    int n = pick(cfg.n, 2), d = pick(cfg.d, 256);
    bound_chain_rows(rep, true, n, d);
    return rep;
}

Report run_setpart(const RunConfig& cfg) {
    Report rep = make_report("setpart", cfg);
    int n = pick(cfg.n, 4), d = pick(cfg.d, 3);
    setpart_rows(rep, n, d, n <= 4 && d <= 3, caps_for(cfg).bell);
    blowup_rows(rep, 4, 3, std::max(4, std::min(n + 2, 6)));
    return rep;
}

Report run_verify(const RunConfig& cfg) {
    Report rep = make_report("verify", cfg);
    const bool quick = cfg.quick;
    const int n_hi = quick ? 3 : 5;
    const int d_hi = quick ? 3 : 8;
    auto samples = static_cast<std::size_t>(
        pick_samples(cfg.samples, quick ? 10000 : 100000));

    for (int n = 2; n <= n_hi; ++n)
        for (int d = 2; d <= d_hi; ++d) {
            gram::GramMatrix G(n, d);
            gram_spectral_rows(rep, G, cfg.tol);
            gram_rowsum_rows(rep, G);
            spectrum_rows(rep, n, d, cfg.tol);
        }

    // row sums at larger n from a single distance histogram per n
    if (!quick) {
        for (int n = n_hi + 1; n <= 7; ++n) {
            gram::GramMatrix G(n, 2);
            auto hist = G.row_distance_histogram(0);
            for (int d = 2; d <= 8; ++d)
                check_eq_exact(rep, "row_sum_identity", n, d, "histogram",
                               gram::GramMatrix::row_sum_from_histogram(hist, d),
                               gram::row_sum(n, d));
        }
    }

    for (int n = 2; n <= (quick ? 3 : 7); ++n)
        for (int d = 2; d <= (quick ? 3 : 10); ++d)
            witness_rows(rep, n, d);

    for (int n = 2; n <= (quick ? 3 : 4); ++n)
        for (int d = n; d <= (quick ? 3 : 8); ++d)
            weingarten_rows(rep, n, d);

    asymptotic_rows(rep, sym::CycleType{{2}}, {25, 50, 100});
    if (!quick) {
        asymptotic_rows(rep, sym::CycleType{{3}}, {25, 50, 100});
        asymptotic_rows(rep, sym::CycleType{{4}}, {16, 32, 64});
    }

    for (auto [n, d] : std::vector<std::pair<int, int>>{
             {2, 2}, {2, 3}, {3, 2}, {3, 3}, {4, 2}}) {
        if (quick && (n > 3 || d > 3))
            continue;
        pt_rows(rep, n, d);
    }

    if (quick) {
        moment_rows(rep, 1, 2, samples, cfg.seed);
        moment_rows(rep, 2, 2, samples, cfg.seed);
    } else {
        moment_rows(rep, 1, 2, samples, cfg.seed);
        moment_rows(rep, 2, 2, samples, cfg.seed);
        moment_rows(rep, 2, 4, samples, cfg.seed);
    }
    moment_gap_rows(rep, 2, {4, 8, 16});

    norm_rows(rep, 2, quick ? 3 : 9);
    if (!quick)
        norm_rows(rep, 3, 9);

    for (int n = 1; n <= (quick ? 3 : 5); ++n) {
        int d0 = std::max(n * n, 2);
        for (int d : {d0, d0 + 3, 2 * d0})
            state_moment_rows(rep, n, d);
    }
    psi_pi_rows(rep, 2, 2);
    if (!quick) {
        psi_pi_rows(rep, 2, 3);
        psi_pi_rows(rep, 3, 2);
    }
    state_mc_rows(rep, 2, samples, cfg.seed);

    if (quick) {
        boson_rows(rep, 64, 2, 1, samples, cfg.seed);
    } else {
        boson_rows(rep, 64, 2, 1, samples, cfg.seed);
        boson_rows(rep, 64, 2, 2, samples, cfg.seed);
        boson_rows(rep, 128, 3, 1, samples, cfg.seed);
    }
    for (int n = 1; n <= (quick ? 3 : 4); ++n)
        w_class_rows(rep, n);

    maxcut_rows(rep, quick ? 6 : 8, 100, cfg.seed);

    for (int n = 2; n <= (quick ? 3 : 6); ++n) {
        long s0 = static_cast<long>(n) * n;
        for (long s : {s0, s0 + 1, 2 * s0})
            bound_chain_rows(rep, false, n, s * s);
        for (long q : {s0, s0 + 1})
            bound_chain_rows(rep, true, n, q * q * q * q);
    }
    hideable_rows(rep, quick ? 3 : 6);
    hiding_demo_rows(rep, 16);
    ppt_coeff_rows(rep, cfg.seed);

    for (int n = 1; n <= (quick ? 4 : 8); ++n)
        setpart_rows(rep, n, 3, n <= 4);
    blowup_rows(rep, 4, 3, quick ? 5 : 6);

    return rep;
}

Report run(const std::string& subcommand, const RunConfig& cfg) {
    if (subcommand == "gram")
        return run_gram(cfg);
    if (subcommand == "spectrum")
        return run_spectrum(cfg);
    if (subcommand == "weingarten")
        return run_weingarten(cfg);
    if (subcommand == "norms")
        return run_norms(cfg);
    if (subcommand == "states")
        return run_states(cfg);
    if (subcommand == "boson")
        return run_boson(cfg);
    if (subcommand == "pt")
        return run_pt(cfg);
    if (subcommand == "maxcut")
        return run_maxcut(cfg);
    if (subcommand == "hiding")
        return run_hiding(cfg);
    if (subcommand == "product-test")
        return run_product_test(cfg);
    if (subcommand == "setpart")
        return run_setpart(cfg);
    if (subcommand == "verify")
        return run_verify(cfg);
    throw PreconditionError("run: unknown subcommand " + subcommand);
}

} // namespace permops::pipelines
