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

#include "permops/norms.hpp"

#include <cmath>

#include "permops/errors.hpp"

namespace permops::gram {

NormWindowReport norm_window(const std::vector<Rat>& a, int n, int d, std::size_t cap) {
    GramMatrix G(n, d);
    if (a.size() != G.size())
        throw SizeMismatchError("norm_window: coefficient vector length is not n!");
    NormWindowReport r;
    r.n = n;
    r.d = d;
    r.epsilon = Rat(Int(n) * n, Int(d));
    r.epsilon.canonicalize();
    r.window_valid = r.epsilon <= 1;

    for (std::size_t i = 0; i < a.size(); ++i) {
        Rat absa = a[i] >= 0 ? a[i] : Rat(-a[i]);
        r.two_norm_sq += a[i] * a[i];
        r.a_one += absa;
        if (absa > r.a_inf)
            r.a_inf = absa;
        for (std::size_t j = 0; j < a.size(); ++j)
            r.quad_form += a[i] * a[j] * G.entry(i, j);
    }
    r.quad_form.canonicalize();
    r.two_norm_sq.canonicalize();

    Rat half_eps = r.epsilon / 2;
    Rat lower = (Rat(1) - half_eps) * r.two_norm_sq;
    Rat upper = exp_taylor_lower(half_eps) * r.two_norm_sq;
    r.two_norm_in_window = r.quad_form >= lower && r.quad_form <= upper;

    std::size_t side = 1;
    bool fits = true;
    for (int i = 0; i < n; ++i) {
        side *= static_cast<std::size_t>(d);
        if (side > cap) {
            fits = false;
            break;
        }
    }
    if (!fits)
        return r;

    r.measured = true;
    const auto perms = G.permutations();
    dense::Matrix m = dense::Matrix::Zero(static_cast<Eigen::Index>(side),
                                          static_cast<Eigen::Index>(side));
    for (std::size_t i = 0; i < perms.size(); ++i)
        m += to_double(a[i]) * dense::perm_operator(perms[i], d, cap).matrix();
    Eigen::JacobiSVD<dense::Matrix> svd(m);
    const auto& sv = svd.singularValues();
    r.op_norm = sv.size() ? sv(0) : 0.0;
    r.trace_norm = sv.sum();
    r.frobenius_sq_normalized = m.squaredNorm() / static_cast<double>(side);

    const double eps = to_double(r.epsilon);
    const double ainf = to_double(r.a_inf);
    const double dn = static_cast<double>(side);
    r.inf_lower_certified = r.op_norm >= (1.0 - eps) * ainf - 1e-9;
    r.inf_lower_sharp = r.op_norm >= (1.0 - eps / 2.0) * ainf - 1e-9;
    r.trace_lower_holds = r.trace_norm >= (1.0 - eps) * dn * ainf - 1e-9;
    return r;
}

} // namespace permops::gram
