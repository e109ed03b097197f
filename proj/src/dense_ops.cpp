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

#include "permops/dense_ops.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "permops/errors.hpp"
#include "permops/weingarten.hpp"

namespace permops::dense {

namespace {

std::size_t ipow(std::size_t base, int exp) {
    std::size_t r = 1;
    for (int i = 0; i < exp; ++i)
        r *= base;
    return r;
}

void check_cap(int d, int legs, std::size_t cap, const char* who) {
    std::size_t side = 1;
    for (int i = 0; i < legs; ++i) {
        side *= static_cast<std::size_t>(d);
        if (side > cap)
            throw ResourceLimitError(std::string(who) + ": d^legs exceeds the dense cap");
    }
}

// digits of idx in base d, most significant first
void to_digits(std::size_t idx, int d, int legs, int* out) {
    for (int k = legs - 1; k >= 0; --k) {
        out[k] = static_cast<int>(idx % static_cast<std::size_t>(d));
        idx /= static_cast<std::size_t>(d);
    }
}

std::size_t from_digits(const int* digits, int d, int legs) {
    std::size_t idx = 0;
    for (int k = 0; k < legs; ++k)
        idx = idx * static_cast<std::size_t>(d) + static_cast<std::size_t>(digits[k]);
    return idx;
}

} // namespace

LegSubset LegSubset::of(int legs, const std::vector<int>& members) {
    LegSubset s{0, legs};
    for (int m : members) {
        if (m < 1 || m > legs)
            throw PreconditionError("LegSubset: member out of range");
        s.bits |= 1u << (m - 1);
    }
    return s;
}

int LegSubset::count() const {
    return static_cast<int>(__builtin_popcount(bits));
}

std::vector<int> LegSubset::members() const {
    std::vector<int> out;
    for (int k = 1; k <= legs; ++k)
        if (contains(k))
            out.push_back(k);
    return out;
}

std::string LegSubset::to_string() const {
    std::ostringstream os;
    os << '{';
    bool first = true;
    for (int m : members()) {
        os << (first ? "" : ",") << m;
        first = false;
    }
    os << '}';
    return os.str();
}

DenseOperator::DenseOperator(Matrix m, int d, int legs) : mat_(std::move(m)), d_(d), legs_(legs) {
    std::size_t side = ipow(static_cast<std::size_t>(d), legs);
    if (static_cast<std::size_t>(mat_.rows()) != side ||
        static_cast<std::size_t>(mat_.cols()) != side)
        throw SizeMismatchError("DenseOperator: matrix side does not equal d^legs");
}

DenseOperator DenseOperator::identity(int d, int legs) {
    std::size_t side = ipow(static_cast<std::size_t>(d), legs);
    return DenseOperator(Matrix::Identity(static_cast<Eigen::Index>(side),
                                          static_cast<Eigen::Index>(side)),
                         d, legs);
}

DenseOperator DenseOperator::partial_transpose(const LegSubset& S) const {
    if (S.legs != legs_)
        throw SizeMismatchError("partial_transpose: subset is over a different leg count");
    const std::size_t side = this->side();
    Matrix out(mat_.rows(), mat_.cols());
    std::vector<int> rd(static_cast<std::size_t>(legs_)), cd(static_cast<std::size_t>(legs_));
    for (std::size_t r = 0; r < side; ++r) {
        to_digits(r, d_, legs_, rd.data());
        for (std::size_t c = 0; c < side; ++c) {
            to_digits(c, d_, legs_, cd.data());
            // swap row/column digits on the transposed legs
            std::vector<int> nr = rd, nc = cd;
            for (int k = 1; k <= legs_; ++k) {
                if (S.contains(k)) {
                    std::swap(nr[static_cast<std::size_t>(k) - 1],
                              nc[static_cast<std::size_t>(k) - 1]);
                }
            }
            out(static_cast<Eigen::Index>(from_digits(nr.data(), d_, legs_)),
                static_cast<Eigen::Index>(from_digits(nc.data(), d_, legs_))) =
                mat_(static_cast<Eigen::Index>(r), static_cast<Eigen::Index>(c));
        }
    }
    return DenseOperator(std::move(out), d_, legs_);
}

DenseOperator DenseOperator::operator*(const DenseOperator& rhs) const {
    if (d_ != rhs.d_ || legs_ != rhs.legs_)
        throw SizeMismatchError("DenseOperator: shape mismatch in product");
    return DenseOperator(mat_ * rhs.mat_, d_, legs_);
}

DenseOperator perm_operator(const sym::Permutation& pi, int d, std::size_t cap) {
    const int n = pi.n();
    check_cap(d, n, cap, "perm_operator");
    const std::size_t side = ipow(static_cast<std::size_t>(d), n);
    Matrix m = Matrix::Zero(static_cast<Eigen::Index>(side), static_cast<Eigen::Index>(side));
    // column |j> maps to row with digit m equal to j_{pi^{-1}(m)}
    std::vector<int> jd(static_cast<std::size_t>(n)), rd(static_cast<std::size_t>(n));
    std::vector<int> pinv(static_cast<std::size_t>(n));
    for (int x = 1; x <= n; ++x)
        pinv[static_cast<std::size_t>(pi.image(x)) - 1] = x;
    for (std::size_t col = 0; col < side; ++col) {
        to_digits(col, d, n, jd.data());
        for (int m_leg = 1; m_leg <= n; ++m_leg)
            rd[static_cast<std::size_t>(m_leg) - 1] =
                jd[static_cast<std::size_t>(pinv[static_cast<std::size_t>(m_leg) - 1]) - 1];
        m(static_cast<Eigen::Index>(from_digits(rd.data(), d, n)),
          static_cast<Eigen::Index>(col)) = 1.0;
    }
    return DenseOperator(std::move(m), d, n);
}

Complex hs_inner(const DenseOperator& A, const DenseOperator& B) {
    if (A.d() != B.d() || A.legs() != B.legs())
        throw SizeMismatchError("hs_inner: shape mismatch");
    Complex t = (A.matrix().adjoint() * B.matrix()).trace();
    return t / static_cast<double>(A.side());
}

PtLawResult pt_singular_law(const sym::Permutation& pi, const LegSubset& S, int d,
                            bool verify, std::size_t cap) {
    const int n = pi.n();
    if (S.legs != n)
        throw SizeMismatchError("pt_singular_law: subset is over a different leg count");
    PtLawResult r;
    // k = |S ∩ pi(S̄)|
    for (int x = 1; x <= n; ++x)
        if (!S.contains(x) && S.contains(pi.image(x)))
            ++r.k;
    r.nonzero_count = ipow(static_cast<std::size_t>(d), n - 2 * r.k);
    r.singular_value = std::pow(static_cast<double>(d), r.k);
    r.trace_norm = int_pow(Int(d), static_cast<unsigned long>(n - r.k));
    if (verify) {
        DenseOperator P = perm_operator(pi, d, cap);
        DenseOperator PT = P.partial_transpose(S);
        Eigen::JacobiSVD<Matrix> svd(PT.matrix());
        const auto& sv = svd.singularValues();
        double atol = 1e-9 * std::pow(static_cast<double>(d), 0.5 * n);
        double dev = 0;
        for (Eigen::Index i = 0; i < sv.size(); ++i) {
            double expect = static_cast<std::size_t>(i) < r.nonzero_count ? r.singular_value : 0.0;
            dev = std::max(dev, std::abs(sv(i) - expect));
        }
        r.max_deviation = dev;
        r.verified = dev <= atol;
    }
    return r;
}

PptResult ppt_check(const DenseOperator& M, double tol) {
    if ((M.matrix() - M.matrix().adjoint()).cwiseAbs().maxCoeff() > 1e-12)
        throw PreconditionError("ppt_check: operator is not Hermitian");
    PptResult r;
    r.worst_min_eig = std::numeric_limits<double>::infinity();
    r.worst_max_eig = -std::numeric_limits<double>::infinity();
    const std::uint32_t total = 1u << M.legs();
    for (std::uint32_t bits = 0; bits < total; ++bits) {
        LegSubset S{bits, M.legs()};
        DenseOperator T = M.partial_transpose(S);
        Eigen::SelfAdjointEigenSolver<Matrix> es(T.matrix(), Eigen::EigenvaluesOnly);
        double lo = es.eigenvalues().minCoeff();
        double hi = es.eigenvalues().maxCoeff();
        if (lo < r.worst_min_eig) {
            r.worst_min_eig = lo;
            r.worst_min_subset = S;
        }
        if (hi > r.worst_max_eig) {
            r.worst_max_eig = hi;
            r.worst_max_subset = S;
        }
    }
    r.ppt = r.worst_min_eig >= -tol && r.worst_max_eig <= 1 + tol;
    r.contraction = r.worst_min_eig >= -1 - tol && r.worst_max_eig <= 1 + tol;
    return r;
}

Vector phi_power_vector(int d, int n, std::size_t cap) {
    // a vector of length d^{2n} = (d^n)^2; the relevant budget is the
    // half-side d^n against the matrix cap
    check_cap(d, n, cap, "phi_power_vector");
    const std::size_t half = ipow(static_cast<std::size_t>(d), n);
    Vector v = Vector::Zero(static_cast<Eigen::Index>(half * half));
    const double amp = std::pow(static_cast<double>(d), -0.5 * n);
    for (std::size_t i = 0; i < half; ++i)
        v(static_cast<Eigen::Index>(i * half + i)) = amp;
    return v;
}

ProjectorsAndState projectors_and_states(int d, int n, std::size_t cap) {
    check_cap(d, n, cap, "projectors_and_states");
    const std::size_t side = ipow(static_cast<std::size_t>(d), n);
    Matrix sym_m = Matrix::Zero(static_cast<Eigen::Index>(side), static_cast<Eigen::Index>(side));
    Matrix anti_m = sym_m;
    const auto perms = sym::enumerate(n);
    for (const auto& p : perms) {
        Matrix P = perm_operator(p, d, cap).matrix();
        sym_m += P;
        anti_m += static_cast<double>(p.sign()) * P;
    }
    const double inv = 1.0 / static_cast<double>(perms.size());
    return ProjectorsAndState{DenseOperator(sym_m * inv, d, n),
                              DenseOperator(anti_m * inv, d, n),
                              phi_power_vector(d, n, cap)};
}

SpanProjection project_to_perm_span(const DenseOperator& M,
                                    const weingarten::WeingartenMatrix& Wg) {
    if (Wg.n() != M.legs() || Wg.d() != M.d())
        throw SizeMismatchError("project_to_perm_span: Weingarten matrix does not match");
    const auto perms = sym::enumerate(M.legs());
    const std::size_t N = perms.size();
    std::vector<Complex> v(N);
    std::vector<Matrix> pmats(N);
    for (std::size_t i = 0; i < N; ++i) {
        pmats[i] = perm_operator(perms[i], M.d()).matrix();
        // P(pi) is real 0/1, so the adjoint pairing is a plain overlap
        v[i] = (pmats[i].transpose() * M.matrix()).trace() / static_cast<double>(M.side());
    }
    SpanProjection out;
    out.coefficients.resize(N);
    for (std::size_t i = 0; i < N; ++i) {
        Complex acc = 0;
        for (std::size_t j = 0; j < N; ++j)
            acc += to_double(Wg.entry(i, j)) * v[j];
        out.coefficients[i] = acc;
    }
    Matrix recon = Matrix::Zero(M.matrix().rows(), M.matrix().cols());
    for (std::size_t i = 0; i < N; ++i)
        recon += out.coefficients[i] * pmats[i];
    double base = M.matrix().norm();
    out.reconstruction_error = base == 0 ? 0 : (M.matrix() - recon).norm() / base;
    return out;
}

} // namespace permops::dense
