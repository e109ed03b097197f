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

#include <doctest.h>

#include "permops/pipelines.hpp"
#include "permops/report.hpp"

using namespace permops;

TEST_CASE("report verdicts and payload shape") {
    report::Report r;
    r.subcommand = "test";
    r.add_value("x", 2, 3, "", "1.5");
    CHECK(r.all_pass());
    r.add_check("y", 2, 3, "", "1", "2", "1", true);
    CHECK(r.all_pass());
    r.add_check("z", 2, 3, "", "3", "2", "-1", false);
    CHECK(!r.all_pass());
    CHECK(r.fail_count() == 1);

    auto payload = r.rows_payload();
    CHECK(payload.find("x,2,3,,1.5,,,value\n") != std::string::npos);
    CHECK(payload.find("z,2,3,,3,2,-1,fail\n") != std::string::npos);

    auto csv = r.to_csv();
    CHECK(csv.find("name,n,d,aux,value,bound,margin,verdict") != std::string::npos);
    auto json = r.to_json();
    CHECK(json.find("\"determinism_hash\"") != std::string::npos);
}

TEST_CASE("csv quoting") {
    report::Report r;
    r.add_value("needs,quote", 1, 1, "a \"b\"", "v");
    auto line = r.rows_payload();
    CHECK(line.find("\"needs,quote\"") != std::string::npos);
    CHECK(line.find("\"a \"\"b\"\"\"") != std::string::npos);
}

TEST_CASE("determinism hash ignores metadata") {
    report::Report a, b;
    a.subcommand = "one";
    b.subcommand = "two";
    a.timestamp = "2000-01-01T00:00:00Z";
    b.timestamp = "2030-01-01T00:00:00Z";
    a.add_value("q", 1, 2, "", "3");
    b.add_value("q", 1, 2, "", "3");
    CHECK(a.determinism_hash() == b.determinism_hash());
    b.add_value("r", 1, 2, "", "4");
    CHECK(a.determinism_hash() != b.determinism_hash());
}

TEST_CASE("quick verify pipeline is deterministic and passes") {
    pipelines::RunConfig cfg;
    cfg.quick = true;
    cfg.samples = 2000; // keep the unit suite fast; full scale runs in acceptance
    auto r1 = pipelines::run_verify(cfg);
    auto r2 = pipelines::run_verify(cfg);
    CHECK(r1.all_pass());
    CHECK(r1.rows_payload() == r2.rows_payload());
    CHECK(r1.determinism_hash() == r2.determinism_hash());
}

TEST_CASE("subcommand dispatch") {
    pipelines::RunConfig cfg;
    cfg.n = 2;
    cfg.d = 3;
    auto rep = pipelines::run("gram", cfg);
    CHECK(rep.subcommand == "gram");
    CHECK(rep.all_pass());
    CHECK_THROWS(pipelines::run("nope", cfg));
}
