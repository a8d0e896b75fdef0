// Copyright 2026 The LSTM-FC-VQE Authors.

// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at

//     http://www.apache.org/licenses/LICENSE-2.0

// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.
#include <catch2/catch_amalgamated.hpp>

#include <sstream>
#include <stdexcept>

#include "lstmfc/error.hpp"
#include "lstmfc/experiments.hpp"

using namespace lstmfc;

namespace {
const DatasetManifest &manifest() {
    static const DatasetManifest m =
        DatasetManifest::load_directory(LSTMFC_FIXTURES_DIR, LoadMode::Lenient);
    return m;
}
} // namespace

TEST_CASE("parallel_map keeps order and reports the first failure", "[experiments]") {
    for (std::size_t threads : {1u, 3u, 16u}) {
        const auto out = parallel_map(20, threads, [](std::size_t i) { return i * i; });
        REQUIRE(out.size() == 20);
        for (std::size_t i = 0; i < 20; ++i) {
            CHECK(out[i] == i * i);
        }
        try {
            (void)parallel_map(10, threads, [](std::size_t i) -> int {
                if (i == 4 || i == 7) {
                    throw std::runtime_error("job " + std::to_string(i));
                }
                return 0;
            });
            FAIL("expected an exception");
        } catch (const std::runtime_error &e) {
            CHECK(std::string(e.what()) == "job 4");
        }
    }
    CHECK(parallel_map(0, 4, [](std::size_t) { return 1; }).empty());
}

TEST_CASE("median", "[experiments]") {
    CHECK(median({3.0}) == 3.0);
    CHECK(median({5.0, 1.0, 3.0}) == 3.0);
    CHECK(median({4.0, 1.0, 2.0, 10.0}) == 3.0);
    CHECK_THROWS_AS(median({}), Error);
}

TEST_CASE("training pool", "[experiments]") {
    const auto pool = training_pool(manifest(), {"H2", "H3+"});
    REQUIRE(pool.size() == 2);
    CHECK(pool[1].program.molecule_tag == "H3+");
    CHECK(pool[1].program.param_split.has_value());
    CHECK_THROWS_AS(training_pool(manifest(), {"LiH"}), Error);
}

TEST_CASE("zero initialization ignores the seed", "[experiments][vqe]") {
    const auto &h2 = manifest().find("H2");
    const auto program = uccsd_program(h2);
    auto cfg = OptimizerConfig::defaults(OptimizerKind::Adam);
    cfg.max_iterations = 5;
    cfg.seed = 1;
    const auto a = run_vqe(h2, program, InitStrategy{}, cfg);
    cfg.seed = 2;
    const auto b = run_vqe(h2, program, InitStrategy{}, cfg);
    CHECK(a.energies == b.energies);

    InitStrategy random{InitKind::RandomUniform01, nullptr};
    cfg.seed = 1;
    const auto c = run_vqe(h2, program, random, cfg);
    cfg.seed = 2;
    const auto d = run_vqe(h2, program, random, cfg);
    CHECK(c.energies.front() != d.energies.front());
}

TEST_CASE("grid benchmark without models", "[experiments]") {
    Table1Request rq;
    rq.molecule = "H2";
    rq.seeds = {0, 1};
    rq.base.max_iterations = 3;
    const auto report = bench_table1(manifest(), rq);
    REQUIRE(report.rows.size() == 16);
    CHECK(report.partial);
    std::size_t unavailable = 0;
    for (const auto &r : report.rows) {
        unavailable += r.available ? 0 : 1;
        if (r.available) {
            CHECK(r.error_mha >= -1e-9);
        }
    }
    CHECK(unavailable == 8);

    std::ostringstream first, second;
    write_bench_csv(first, report);
    rq.threads = 4;
    write_bench_csv(second, bench_table1(manifest(), rq));
    CHECK(first.str() == second.str());
    CHECK(first.str().rfind("molecule,init,optimizer,schedule,", 0) == 0);
}

TEST_CASE("scan", "[experiments]") {
    CHECK_THROWS_AS(run_scan({}, ScanRequest{}), Error);
    const auto series = load_series(LSTMFC_FIXTURES_DIR, "H4", LoadMode::Lenient);
    ScanRequest rq;
    rq.vqe.max_iterations = 2;
    const std::vector<MoleculeRecord> two{series[0], series[9]};
    const auto rows = run_scan(two, rq);
    REQUIRE(rows.size() == 2);
    for (const auto &r : rows) {
        CHECK(r.e_vqe_ha >= r.e_fci_ha - 1e-9);
        CHECK(r.error_mha == Catch::Approx((r.e_vqe_ha - r.e_fci_ha) * 1000.0));
    }
}
