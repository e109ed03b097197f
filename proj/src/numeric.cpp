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

#include "permops/numeric.hpp"

namespace permops {

Int factorial(unsigned long n) {
    Int r;
    mpz_fac_ui(r.get_mpz_t(), n);
    return r;
}

Int binomial(unsigned long n, unsigned long k) {
    if (k > n)
        return 0;
    Int r;
    mpz_bin_uiui(r.get_mpz_t(), n, k);
    return r;
}

Int falling_factorial(const Int& d, unsigned long n) {
    Int r = 1;
    for (unsigned long i = 0; i < n; ++i)
        r *= d - static_cast<long>(i);
    return r;
}

Int int_pow(const Int& base, unsigned long exp) {
    Int r;
    mpz_pow_ui(r.get_mpz_t(), base.get_mpz_t(), exp);
    return r;
}

Rat exp_taylor_lower(const Rat& x, int terms) {
    Rat sum = 1;
    Rat term = 1;
    for (int k = 1; k <= terms; ++k) {
        term *= x;
        term /= k;
        sum += term;
    }
    return sum;
}

double to_double(const Rat& q) {
    return q.get_d();
}

std::string rat_str(const Rat& q) {
    return q.get_str();
}

} // namespace permops
