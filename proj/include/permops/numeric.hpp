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

#pragma once

#include <gmpxx.h>

#include <string>

namespace permops {

// Exact arithmetic used throughout: arbitrary-precision integers and
// canonical rationals. Floating point enters only at comparison or
// eigensolver boundaries.
using Int = mpz_class;
using Rat = mpq_class;

Int factorial(unsigned long n);
Int binomial(unsigned long n, unsigned long k);

/// d * (d-1) * ... * (d-n+1); equals 0 when d is a nonnegative integer < n.
Int falling_factorial(const Int& d, unsigned long n);

Int int_pow(const Int& base, unsigned long exp);

/// Partial Taylor sum of e^x. For x >= 0 this is a strict lower bound of
/// e^x, so `q <= exp_taylor_lower(x)` certifies `q <= e^x` in exact
/// arithmetic. 40 terms leave a remainder far below any slack we test.
Rat exp_taylor_lower(const Rat& x, int terms = 40);

double to_double(const Rat& q);

/// Canonical "p/q" (or "p" when q == 1) string form.
std::string rat_str(const Rat& q);

} // namespace permops
