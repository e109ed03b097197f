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

#include "permops/moments.hpp"

#include <algorithm>
#include <cmath>

#include "permops/errors.hpp"
#include "permops/rng.hpp"

namespace permops::moments {

namespace {

Eigen::MatrixXcd ginibre_block(int rows, int cols, rng::SubStream& s) {
    Eigen::MatrixXcd g(rows, cols);
    for (int i = 0; i < rows; ++i)
        for (int j = 0; j < cols; ++j)
            g(i, j) = s.cgaussian();
    return g;
}

// QR with the diagonal phases of R absorbed into Q; makes Q Haar on the
// isometries rather than merely column-orthonormal.
Eigen::MatrixXcd orthonormalize_haar(const Eigen::MatrixXcd& g) {
    const int rows = static_cast<int>(g.rows());
    const int cols = static_cast<int>(g.cols());
    Eigen::HouseholderQR<Eigen::MatrixXcd> qr(g);
    Eigen::MatrixXcd thinQ =
        qr.householderQ() * Eigen::MatrixXcd::Identity(rows, cols);
    Eigen::MatrixXcd R = qr.matrixQR().topRows(cols).triangularView<Eigen::Upper>();
    for (int j = 0; j < cols; ++j) {
        std::complex<double> rjj = R(j, j);
        double mag = std::abs(rjj);
        if (mag > 0)
            thinQ.col(j) *= rjj / mag;
    }
    return thinQ;
}

std::size_t ipow(std::size_t base, int exp) {
    std::size_t r = 1;
    for (int i = 0; i < exp; ++i)
        r *= base;
    return r;
}

// A^{tensor n} with leg 1 most significant.
Eigen::MatrixXcd tensor_power(const Eigen::MatrixXcd& a, int n) {
    Eigen::MatrixXcd out = Eigen::MatrixXcd::Ones(1, 1);
    for (int k = 0; k < n; ++k) {
        Eigen::MatrixXcd next(out.rows() * a.rows(), out.cols() * a.cols());
        for (Eigen::Index i = 0; i < out.rows(); ++i)
            for (Eigen::Index j = 0; j < out.cols(); ++j)
                next.block(i * a.rows(), j * a.cols(), a.rows(), a.cols()) = out(i, j) * a;
        out = std::move(next);
    }
    return out;
}

} // namespace

Eigen::MatrixXcd haar_unitary(int d, std::uint64_t seed, std::uint64_t index) {
    rng::SubStream s(seed, index);
    return orthonormalize_haar(ginibre_block(d, d, s));
}

Eigen::MatrixXcd ginibre(int d, std::uint64_t seed, std::uint64_t index) {
    rng::SubStream s(seed, index);
    return ginibre_block(d, d, s) / std::sqrt(static_cast<double>(d));
}

Eigen::MatrixXcd haar_isometry(int rows, int cols, std::uint64_t seed, std::uint64_t index) {
    rng::SubStream s(seed, index);
    return orthonormalize_haar(ginibre_block(rows, cols, s));
}

Eigen::MatrixXcd SamplerSpec::sample(std::uint64_t index) const {
    return kind == Kind::haar_unitary ? haar_unitary(d, seed, index) : ginibre(d, seed, index);
}

double MatrixMomentEstimate::max_sigma_deviation(const Eigen::MatrixXcd& reference,
                                                 double abs_floor) const {
    double worst = 0;
    for (Eigen::Index i = 0; i < mean.rows(); ++i)
        for (Eigen::Index j = 0; j < mean.cols(); ++j) {
            double dev = std::abs(mean(i, j) - reference(i, j));
            double sd = std::max(stderr_entry(i, j), abs_floor);
            worst = std::max(worst, dev / sd);
        }
    return worst;
}

MatrixMomentEstimate mc_tensor_moment(const SamplerSpec& spec, int n, std::size_t samples,
                                      std::size_t cap) {
    const std::size_t half = ipow(static_cast<std::size_t>(spec.d), n);
    const std::size_t side = half * half;
    if (side > cap)
        throw ResourceLimitError("mc_tensor_moment: d^{2n} exceeds the dense cap");
    Eigen::MatrixXcd sum = Eigen::MatrixXcd::Zero(static_cast<Eigen::Index>(side),
                                                  static_cast<Eigen::Index>(side));
    Eigen::MatrixXd sumsq = Eigen::MatrixXd::Zero(static_cast<Eigen::Index>(side),
                                                  static_cast<Eigen::Index>(side));
    Eigen::VectorXcd colbuf(static_cast<Eigen::Index>(side));
    Eigen::VectorXcd conj2;
    for (std::size_t i = 0; i < samples; ++i) {
        Eigen::MatrixXcd a = spec.sample(i);
        Eigen::MatrixXcd tp = tensor_power(a, n);
        // column (c1,c2) of the moment term is kron(tp.col(c1), conj(tp.col(c2)))
        const Eigen::Index h = tp.rows();
        for (Eigen::Index c1 = 0; c1 < h; ++c1)
            for (Eigen::Index c2 = 0; c2 < h; ++c2) {
                const Eigen::Index col = c1 * h + c2;
                conj2 = tp.col(c2).conjugate();
                for (Eigen::Index r1 = 0; r1 < h; ++r1)
                    colbuf.segment(r1 * h, h) = tp(r1, c1) * conj2;
                sum.col(col) += colbuf;
                sumsq.col(col) += colbuf.cwiseAbs2();
            }
    }
    MatrixMomentEstimate est;
    est.samples = samples;
    est.seed = spec.seed;
    est.mean = sum / static_cast<double>(samples);
    est.stderr_entry.resize(sum.rows(), sum.cols());
    for (Eigen::Index i = 0; i < sum.rows(); ++i)
        for (Eigen::Index j = 0; j < sum.cols(); ++j) {
            double var = sumsq(i, j) / static_cast<double>(samples) - std::norm(est.mean(i, j));
            est.stderr_entry(i, j) = std::sqrt(std::max(var, 0.0) / static_cast<double>(samples));
        }
    return est;
}

dense::DenseOperator cs_unitary_exact(int n, int d, const weingarten::WeingartenMatrix& wg,
                                      std::size_t cap) {
    if (wg.n() != n || wg.d() != d)
        throw SizeMismatchError("cs_unitary_exact: Weingarten matrix does not match (n, d)");
    if (ipow(static_cast<std::size_t>(d), 2 * n) > cap)
        throw ResourceLimitError("cs_unitary_exact: d^{2n} exceeds the dense cap");
    const auto perms = sym::enumerate(n);
    const std::size_t N = perms.size();
    dense::Vector phi = dense::phi_power_vector(d, n, cap);
    const std::size_t half = ipow(static_cast<std::size_t>(d), n);
    // v_sigma = (I tensor P(sigma)) phi: right-half legs permuted
    std::vector<dense::Vector> v(N);
    for (std::size_t s = 0; s < N; ++s) {
        const Eigen::MatrixXcd P = dense::perm_operator(perms[s], d, cap).matrix();
        dense::Vector out(phi.size());
        for (std::size_t left = 0; left < half; ++left)
            out.segment(static_cast<Eigen::Index>(left * half), static_cast<Eigen::Index>(half)) =
                P * phi.segment(static_cast<Eigen::Index>(left * half),
                                static_cast<Eigen::Index>(half));
        v[s] = std::move(out);
    }
    Eigen::MatrixXcd m = Eigen::MatrixXcd::Zero(phi.size(), phi.size());
    for (std::size_t s = 0; s < N; ++s)
        for (std::size_t t = 0; t < N; ++t)
            m += to_double(wg.entry(s, t)) * (v[s] * v[t].adjoint());
    return dense::DenseOperator(std::move(m), d, 2 * n);
}

dense::DenseOperator wick_exact(int n, int d, std::size_t cap) {
    if (ipow(static_cast<std::size_t>(d), 2 * n) > cap)
        throw ResourceLimitError("wick_exact: d^{2n} exceeds the dense cap");
    const auto perms = sym::enumerate(n);
    dense::Vector phi = dense::phi_power_vector(d, n, cap);
    const std::size_t half = ipow(static_cast<std::size_t>(d), n);
    Eigen::MatrixXcd m = Eigen::MatrixXcd::Zero(phi.size(), phi.size());
    for (const auto& p : perms) {
        const Eigen::MatrixXcd P = dense::perm_operator(p, d, cap).matrix();
        dense::Vector vp(phi.size());
        for (std::size_t left = 0; left < half; ++left)
            vp.segment(static_cast<Eigen::Index>(left * half), static_cast<Eigen::Index>(half)) =
                P * phi.segment(static_cast<Eigen::Index>(left * half),
                                static_cast<Eigen::Index>(half));
        m += vp * vp.adjoint();
    }
    return dense::DenseOperator(std::move(m), d, 2 * n);
}

namespace {

MatrixMomentEstimate mc_state_power(int dim, int n, std::size_t samples, std::uint64_t seed,
                                    std::size_t cap, bool entangled, int d_half) {
    std::size_t side = ipow(static_cast<std::size_t>(dim), n);
    if (side > cap)
        throw ResourceLimitError("state moment: dim^n exceeds the dense cap");
    Eigen::MatrixXcd sum = Eigen::MatrixXcd::Zero(static_cast<Eigen::Index>(side),
                                                  static_cast<Eigen::Index>(side));
    Eigen::MatrixXd sumsq = Eigen::MatrixXd::Zero(static_cast<Eigen::Index>(side),
                                                  static_cast<Eigen::Index>(side));
    for (std::size_t i = 0; i < samples; ++i) {
        Eigen::VectorXcd psi(dim);
        if (entangled) {
            // (U tensor I)|Phi>: columns of U / sqrt(d) flattened
            Eigen::MatrixXcd u = haar_unitary(d_half, seed, i);
            const double amp = 1.0 / std::sqrt(static_cast<double>(d_half));
            for (int a = 0; a < d_half; ++a)
                for (int b = 0; b < d_half; ++b)
                    psi(a * d_half + b) = u(a, b) * amp;
        } else {
            rng::SubStream s(seed, i);
            for (int k = 0; k < dim; ++k)
                psi(k) = s.cgaussian();
            psi.normalize();
        }
        Eigen::VectorXcd power = Eigen::VectorXcd::Ones(1);
        for (int k = 0; k < n; ++k) {
            Eigen::VectorXcd next(power.size() * dim);
            for (Eigen::Index a = 0; a < power.size(); ++a)
                next.segment(a * dim, dim) = power(a) * psi;
            power = std::move(next);
        }
        for (Eigen::Index r = 0; r < power.size(); ++r)
            for (Eigen::Index c = 0; c < power.size(); ++c) {
                std::complex<double> t = power(r) * std::conj(power(c));
                sum(r, c) += t;
                sumsq(r, c) += std::norm(t);
            }
    }
    MatrixMomentEstimate est;
    est.samples = samples;
    est.seed = seed;
    est.mean = sum / static_cast<double>(samples);
    est.stderr_entry.resize(sum.rows(), sum.cols());
    for (Eigen::Index i = 0; i < sum.rows(); ++i)
        for (Eigen::Index j = 0; j < sum.cols(); ++j) {
            double var = sumsq(i, j) / static_cast<double>(samples) - std::norm(est.mean(i, j));
            est.stderr_entry(i, j) = std::sqrt(std::max(var, 0.0) / static_cast<double>(samples));
        }
    return est;
}

} // namespace

MatrixMomentEstimate mc_pure_state_moment(int dim, int n, std::size_t samples,
                                          std::uint64_t seed, std::size_t cap) {
    return mc_state_power(dim, n, samples, seed, cap, false, 0);
}

MatrixMomentEstimate mc_entangled_state_moment(int d, int n, std::size_t samples,
                                               std::uint64_t seed, std::size_t cap) {
    return mc_state_power(d * d, n, samples, seed, cap, true, d);
}

std::vector<StateMomentBlock> state_moment_operators(int n, int d) {
    std::vector<StateMomentBlock> out;
    // uniform coefficient n! / (d^2 (d^2+1) ... (d^2+n-1)) on every block
    Int denom = 1;
    const Int d2 = Int(d) * d;
    for (int k = 0; k < n; ++k)
        denom *= d2 + k;
    Rat uniform(factorial(static_cast<unsigned long>(n)), denom);
    uniform.canonicalize();
    const Int dn = int_pow(Int(d), static_cast<unsigned long>(n));
    for (const auto& lambda : schur::partitions(n, d)) {
        StateMomentBlock b{lambda, uniform, Rat(), Rat()};
        Rat mes(schur::dim_p(lambda), schur::dim_q(lambda, d) * dn);
        mes.canonicalize();
        b.coeff_random_mes = mes;
        b.ratio = b.coeff_random_state / b.coeff_random_mes;
        b.ratio.canonicalize();
        out.push_back(std::move(b));
    }
    return out;
}

PsiPiGramResult psi_pi_gram(int n, int d, std::size_t cap) {
    if (ipow(static_cast<std::size_t>(d), 2 * n) > cap)
        throw ResourceLimitError("psi_pi_gram: d^{2n} exceeds the dense cap");
    const auto perms = sym::enumerate(n);
    const std::size_t N = perms.size();
    dense::Vector phi = dense::phi_power_vector(d, n, cap);
    const std::size_t half = ipow(static_cast<std::size_t>(d), n);
    Eigen::MatrixXcd rho = Eigen::MatrixXcd::Zero(phi.size(), phi.size());
    for (const auto& p : perms) {
        const Eigen::MatrixXcd P = dense::perm_operator(p, d, cap).matrix();
        // (P(pi) tensor I) phi: left-half legs permuted
        dense::Vector vp(phi.size());
        Eigen::MatrixXcd reshaped(half, half);
        for (std::size_t left = 0; left < half; ++left)
            reshaped.row(static_cast<Eigen::Index>(left)) =
                phi.segment(static_cast<Eigen::Index>(left * half),
                            static_cast<Eigen::Index>(half)).transpose();
        Eigen::MatrixXcd moved = P * reshaped;
        for (std::size_t left = 0; left < half; ++left)
            vp.segment(static_cast<Eigen::Index>(left * half), static_cast<Eigen::Index>(half)) =
                moved.row(static_cast<Eigen::Index>(left)).transpose();
        rho += vp * vp.adjoint();
    }
    rho /= static_cast<double>(N);
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> es(rho, Eigen::EigenvaluesOnly);
    PsiPiGramResult r;
    auto spec = schur::exact_spectrum(n, d);
    std::vector<double> expected = spec.expanded_doubles();
    for (double& v : expected)
        v /= static_cast<double>(N);
    r.expected_eigs = expected;
    const Eigen::Index total = es.eigenvalues().size();
    for (Eigen::Index i = total - static_cast<Eigen::Index>(N); i < total; ++i)
        r.state_eigs.push_back(es.eigenvalues()(i));
    std::sort(r.state_eigs.begin(), r.state_eigs.end());
    for (std::size_t i = 0; i < N; ++i)
        r.max_deviation = std::max(r.max_deviation,
                                   std::abs(r.state_eigs[i] - r.expected_eigs[i]));
    return r;
}

} // namespace permops::moments
