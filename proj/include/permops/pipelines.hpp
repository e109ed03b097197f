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

#include <cstdint>
#include <string>

#include "permops/report.hpp"

namespace permops::pipelines {

/// Parameters of a single run. Negative / zero fields pick per-subcommand
/// defaults. The default seed is 0: default runs are fully deterministic.
struct RunConfig {
    int n = -1;
    int d = -1;
    int m = -1;
    int t = -1;
    long long samples = -1;
    std::uint64_t seed = 0;
    bool quick = false;
    bool cap_override = false;
    double tol = 1e-9;
};

report::Report run_gram(const RunConfig& cfg);
report::Report run_spectrum(const RunConfig& cfg);
report::Report run_weingarten(const RunConfig& cfg);
report::Report run_norms(const RunConfig& cfg);
report::Report run_states(const RunConfig& cfg);
report::Report run_boson(const RunConfig& cfg);
report::Report run_pt(const RunConfig& cfg);
report::Report run_maxcut(const RunConfig& cfg);
report::Report run_hiding(const RunConfig& cfg);
report::Report run_product_test(const RunConfig& cfg);
report::Report run_setpart(const RunConfig& cfg);
/// The aggregated invariant suite; quick restricts to n <= 3, d <= 3 and
/// 1e4 Monte Carlo samples.
report::Report run_verify(const RunConfig& cfg);

/// Dispatch by subcommand name; throws PreconditionError on unknown names.
report::Report run(const std::string& subcommand, const RunConfig& cfg);

} // namespace permops::pipelines
