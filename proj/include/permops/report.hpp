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
#include <map>
#include <string>
#include <vector>

#include "permops/numeric.hpp"

namespace permops::report {

inline constexpr const char* kVersion = "0.1.0";

/// One named quantity or checked inequality. Checked rows carry the left
/// value, the bound it is compared against, and the margin.
struct Row {
    std::string name;  // quantity or check identifier (stable slug)
    int n = -1;
    int d = -1;
    std::string aux;   // extra parameters, "t=2 m=64" style; may be empty
    std::string value;
    std::string bound;   // empty for plain value rows
    std::string margin;  // empty for plain value rows
    std::string verdict; // "pass", "fail", "info"
};

struct Report {
    std::string subcommand;
    std::string timestamp; // metadata only; excluded from the determinism hash
    std::map<std::string, std::string> config;
    std::vector<Row> rows;

    bool all_pass() const;
    std::size_t fail_count() const;

    /// Canonical serialization of the rows alone: the domain of the
    /// determinism contract.
    std::string rows_payload() const;
    /// FNV-1a 64-bit hash of rows_payload().
    std::uint64_t determinism_hash() const;

    std::string to_csv() const;
    std::string to_json() const;

    // row builders
    void add_value(const std::string& name, int n, int d, const std::string& aux,
                   const std::string& value);
    void add_check(const std::string& name, int n, int d, const std::string& aux,
                   const std::string& value, const std::string& bound,
                   const std::string& margin, bool pass);
    void add_info(const std::string& name, int n, int d, const std::string& aux,
                  const std::string& value);
};

std::string format_double(double v);
std::string format_rat(const Rat& q);

/// pass/fail helpers asserting le/ge with a formatted margin
void check_le(Report& r, const std::string& name, int n, int d, const std::string& aux,
              double value, double bound, double tol = 0.0);
void check_le_exact(Report& r, const std::string& name, int n, int d, const std::string& aux,
                    const Rat& value, const Rat& bound);
void check_ge_exact(Report& r, const std::string& name, int n, int d, const std::string& aux,
                    const Rat& value, const Rat& bound);
void check_eq_exact(Report& r, const std::string& name, int n, int d, const std::string& aux,
                    const Rat& value, const Rat& expected);
void check_close(Report& r, const std::string& name, int n, int d, const std::string& aux,
                 double value, double expected, double atol, double rtol = 0.0);
void check_true(Report& r, const std::string& name, int n, int d, const std::string& aux,
                bool condition, const std::string& value);

} // namespace permops::report
