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

#include <fstream>
#include <iostream>
#include <string>

#include <CLI11.hpp>

#include "permops/errors.hpp"
#include "permops/pipelines.hpp"

namespace {

constexpr int kExitPass = 0;
constexpr int kExitAssertionFailure = 1;
constexpr int kExitPrecondition = 2;
constexpr int kExitResourceCap = 3;
constexpr int kExitUsage = 64;

struct Options {
    permops::pipelines::RunConfig cfg;
    std::string format = "csv";
    std::string out;
};

void add_common(CLI::App* sub, Options& opt) {
    sub->add_option("--n", opt.cfg.n, "number of tensor factors");
    sub->add_option("--d", opt.cfg.d, "local dimension");
    sub->add_option("--m", opt.cfg.m, "mode count (permanent experiments)");
    sub->add_option("--t", opt.cfg.t, "moment power (permanent experiments)");
    sub->add_option("--samples", opt.cfg.samples, "Monte Carlo sample count");
    sub->add_option("--seed", opt.cfg.seed, "base seed for all substreams");
    sub->add_option("--format", opt.format, "report format: csv or json")
        ->check(CLI::IsMember({"csv", "json"}));
    sub->add_option("--out", opt.out, "write the report to this path");
    sub->add_flag("--quick", opt.cfg.quick, "small-scale invariant suite");
    sub->add_flag("--cap-override", opt.cfg.cap_override,
                  "lift enumeration/dense caps (expect large memory use)");
    sub->add_option("--tol", opt.cfg.tol, "relative tolerance for spectral comparisons");
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact and numerical checks for permutation operators on qudits"};
    app.require_subcommand(1);

    const std::vector<std::pair<std::string, std::string>> subs = {
        {"gram", "Gram matrix of permutation operators: spectrum and bounds"},
        {"spectrum", "closed-form eigenvalues with multiplicities and kernel"},
        {"weingarten", "exact inverse, class values, large-d asymptotics"},
        {"norms", "certified norm windows for permutation combinations"},
        {"states", "random-state vs maximally-entangled moment coefficients"},
        {"boson", "Haar vs Gaussian permanent moment experiment"},
        {"pt", "partial-transpose singular-value law sweep"},
        {"maxcut", "cut constructions over permutation cycles"},
        {"hiding", "data-hiding bias bound chain and two-qudit demo"},
        {"product-test", "product-test bias bound chain"},
        {"setpart", "set-partition Gram matrices and norm blowup"},
        {"verify", "the aggregated invariant suite"},
    };
    Options opt;
    for (const auto& [name, blurb] : subs)
        add_common(app.add_subcommand(name, blurb), opt);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int rc = app.exit(e);
        return rc == 0 ? 0 : kExitUsage;
    }

    std::string chosen;
    for (const auto& [name, blurb] : subs)
        if (app.get_subcommand(name)->parsed())
            chosen = name;

    try {
        permops::report::Report rep = permops::pipelines::run(chosen, opt.cfg);
        std::string payload = opt.format == "json" ? rep.to_json() : rep.to_csv();
        if (opt.out.empty()) {
            std::cout << payload;
        } else {
            std::ofstream f(opt.out, std::ios::binary);
            if (!f) {
                std::cerr << "cannot open output path: " << opt.out << "\n";
                return kExitPrecondition;
            }
            f << payload;
            std::cout << "wrote " << opt.out << " (" << rep.rows.size() << " rows, "
                      << rep.fail_count() << " failures)\n";
        }
        if (opt.cfg.cap_override)
            std::cerr << "warning: caps overridden; large runs may exhaust memory\n";
        return rep.all_pass() ? kExitPass : kExitAssertionFailure;
    } catch (const permops::ResourceLimitError& e) {
        std::cerr << "resource cap: " << e.what() << "\n";
        return kExitResourceCap;
    } catch (const permops::PreconditionError& e) {
        std::cerr << "precondition: " << e.what() << "\n";
        return kExitPrecondition;
    } catch (const permops::SingularMatrixError& e) {
        std::cerr << "precondition: " << e.what() << "\n";
        return kExitPrecondition;
    } catch (const std::invalid_argument& e) {
        std::cerr << "precondition: " << e.what() << "\n";
        return kExitPrecondition;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitAssertionFailure;
    }
}
