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

#include "permops/report.hpp"

#include <cmath>
#include <cstdio>
#include <sstream>

#include <nlohmann/json.hpp>

namespace permops::report {

namespace {

std::string csv_escape(const std::string& s) {
    if (s.find_first_of(",\"\n") == std::string::npos)
        return s;
    std::string out = "\"";
    for (char c : s) {
        if (c == '"')
            out += "\"\"";
        else
            out += c;
    }
    out += "\"";
    return out;
}

std::string row_line(const Row& r) {
    std::ostringstream os;
    os << csv_escape(r.name) << ',' << r.n << ',' << r.d << ',' << csv_escape(r.aux) << ','
       << csv_escape(r.value) << ',' << csv_escape(r.bound) << ',' << csv_escape(r.margin)
       << ',' << r.verdict;
    return os.str();
}

} // namespace

bool Report::all_pass() const {
    return fail_count() == 0;
}

std::size_t Report::fail_count() const {
    std::size_t f = 0;
    for (const auto& r : rows)
        if (r.verdict == "fail")
            ++f;
    return f;
}

std::string Report::rows_payload() const {
    std::ostringstream os;
    for (const auto& r : rows)
        os << row_line(r) << '\n';
    return os.str();
}

std::uint64_t Report::determinism_hash() const {
    std::uint64_t h = 0xcbf29ce484222325ULL;
    for (char c : rows_payload()) {
        h ^= static_cast<unsigned char>(c);
        h *= 0x100000001b3ULL;
    }
    return h;
}

std::string Report::to_csv() const {
    std::ostringstream os;
    os << "# permops " << kVersion << " subcommand=" << subcommand;
    for (const auto& [k, v] : config)
        os << " " << k << "=" << v;
    os << "\n# timestamp=" << timestamp << "\n";
    char hex[32];
    std::snprintf(hex, sizeof hex, "%016llx",
                  static_cast<unsigned long long>(determinism_hash()));
    os << "# determinism_hash=" << hex << "\n";
    os << "name,n,d,aux,value,bound,margin,verdict\n";
    os << rows_payload();
    return os.str();
}

std::string Report::to_json() const {
    nlohmann::ordered_json j;
    j["metadata"]["version"] = kVersion;
    j["metadata"]["subcommand"] = subcommand;
    j["metadata"]["timestamp"] = timestamp;
    j["metadata"]["config"] = config;
    char hex[32];
    std::snprintf(hex, sizeof hex, "%016llx",
                  static_cast<unsigned long long>(determinism_hash()));
    j["metadata"]["determinism_hash"] = hex;
    j["rows"] = nlohmann::ordered_json::array();
    for (const auto& r : rows) {
        nlohmann::ordered_json jr;
        jr["name"] = r.name;
        jr["n"] = r.n;
        jr["d"] = r.d;
        jr["aux"] = r.aux;
        jr["value"] = r.value;
        jr["bound"] = r.bound;
        jr["margin"] = r.margin;
        jr["verdict"] = r.verdict;
        j["rows"].push_back(std::move(jr));
    }
    return j.dump(2) + "\n";
}

void Report::add_value(const std::string& name, int n, int d, const std::string& aux,
                       const std::string& value) {
    rows.push_back(Row{name, n, d, aux, value, "", "", "value"});
}

void Report::add_check(const std::string& name, int n, int d, const std::string& aux,
                       const std::string& value, const std::string& bound,
                       const std::string& margin, bool pass) {
    rows.push_back(Row{name, n, d, aux, value, bound, margin, pass ? "pass" : "fail"});
}

void Report::add_info(const std::string& name, int n, int d, const std::string& aux,
                      const std::string& value) {
    rows.push_back(Row{name, n, d, aux, value, "", "", "info"});
}

std::string format_double(double v) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.12g", v);
    return buf;
}

std::string format_rat(const Rat& q) {
    return rat_str(q);
}

void check_le(Report& r, const std::string& name, int n, int d, const std::string& aux,
              double value, double bound, double tol) {
    r.add_check(name, n, d, aux, format_double(value), format_double(bound),
                format_double(bound - value), value <= bound + tol);
}

void check_le_exact(Report& r, const std::string& name, int n, int d, const std::string& aux,
                    const Rat& value, const Rat& bound) {
    Rat margin = bound - value;
    r.add_check(name, n, d, aux, format_rat(value), format_rat(bound), format_rat(margin),
                value <= bound);
}

void check_ge_exact(Report& r, const std::string& name, int n, int d, const std::string& aux,
                    const Rat& value, const Rat& bound) {
    Rat margin = value - bound;
    r.add_check(name, n, d, aux, format_rat(value), format_rat(bound), format_rat(margin),
                value >= bound);
}

void check_eq_exact(Report& r, const std::string& name, int n, int d, const std::string& aux,
                    const Rat& value, const Rat& expected) {
    r.add_check(name, n, d, aux, format_rat(value), format_rat(expected),
                format_rat(value - expected), value == expected);
}

void check_close(Report& r, const std::string& name, int n, int d, const std::string& aux,
                 double value, double expected, double atol, double rtol) {
    double dev = std::abs(value - expected);
    double allow = atol + rtol * std::abs(expected);
    r.add_check(name, n, d, aux, format_double(value), format_double(expected),
                format_double(allow - dev), dev <= allow);
}

void check_true(Report& r, const std::string& name, int n, int d, const std::string& aux,
                bool condition, const std::string& value) {
    r.add_check(name, n, d, aux, value, "", "", condition);
}

} // namespace permops::report
