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

#include <limits>
#include <sstream>

#include "lstmfc/dataset.hpp"
#include "lstmfc/error.hpp"
#include "lstmfc/experiments.hpp"
#include "lstmfc/optimizer.hpp"
#include "lstmfc/vqe.hpp"

using namespace lstmfc;
using Catch::Matchers::WithinAbs;
using Catch::Matchers::WithinRel;

namespace {

const MoleculeRecord &fixture(const char *name) {
    static const DatasetManifest manifest =
        DatasetManifest::load_directory(LSTMFC_FIXTURES_DIR, LoadMode::Lenient);
    return manifest.find(name);
}

} // namespace

TEST_CASE("sgd_step", "[vqe][optimizer]") {
    CHECK(sgd_step(std::vector{0.0}, std::vector{1.0}, 0.1) == std::vector{-0.1});
    CHECK(sgd_step(std::vector{0.3, -2.0}, std::vector{0.0, 0.0}, 0.5) ==
          std::vector{0.3, -2.0});

    // Two steps on E = theta^2 from theta = 1.
    std::vector<double> theta{1.0};
    for (int k = 0; k < 2; ++k) {
        theta = sgd_step(theta, std::vector{2.0 * theta[0]}, 0.1);
    }
    CHECK_THAT(theta[0], WithinAbs(0.64, 1e-15));
    CHECK_THROWS_AS(sgd_step(std::vector{0.0}, std::vector{1.0, 2.0}, 0.1), Error);
}

TEST_CASE("adam_step", "[vqe][optimizer]") {
    AdamState s;
    std::vector<double> theta{0.0};
    adam_step(s, theta, std::vector{2.0}, 0.01, 1);
    // m_hat = 2, v_hat = 4, so the step is lr * 2 / (2 + eps).
    CHECK_THAT(theta[0], WithinRel(-0.01, 1e-8));

    AdamState idle;
    std::vector<double> still{0.7};
    adam_step(idle, still, std::vector{0.0}, 0.01, 1);
    CHECK(still[0] == 0.7);

    AdamState a, b;
    std::vector<double> x{0.1, -0.2}, y{0.1, -0.2};
    for (std::size_t t = 1; t <= 5; ++t) {
        adam_step(a, x, std::vector{0.3, 1.1}, 0.05, t);
        adam_step(b, y, std::vector{0.3, 1.1}, 0.05, t);
    }
    CHECK(x == y);
    CHECK_THROWS_AS(adam_step(a, x, std::vector{0.3, 1.1}, 0.05, 0), Error);
}

TEST_CASE("learning-rate schedules", "[vqe]") {
    auto cfg = OptimizerConfig::defaults(OptimizerKind::SGD, ScheduleKind::ExpDecay);
    CHECK(cfg.lr0 == 0.1);
    CHECK(cfg.learning_rate(0) == 0.1);
    CHECK_THAT(cfg.learning_rate(10), WithinRel(0.1 * std::pow(0.99, 10), 1e-15));
    CHECK(OptimizerConfig::defaults(OptimizerKind::Adam).learning_rate(300) == 0.05);

    cfg.decay_factor = 1.5;
    CHECK_THROWS_AS(cfg.validate(), Error);
    cfg = OptimizerConfig{};
    cfg.max_iterations = 0;
    CHECK_THROWS_AS(cfg.validate(), Error);
}

TEST_CASE("init_parameters", "[vqe]") {
    const auto &h4 = fixture("H4");
    const auto program = uccsd_program(h4);

    const auto zero = init_parameters({InitKind::AllZero, nullptr}, program, h4, 1);
    CHECK(zero == std::vector<double>(26, 0.0));
    CHECK_THAT(energy(h4.hamiltonian, program, zero), WithinAbs(h4.hf_energy_ha, 1e-10));

    const auto r1 = init_parameters({InitKind::RandomUniform01, nullptr}, program, h4, 7);
    const auto r2 = init_parameters({InitKind::RandomUniform01, nullptr}, program, h4, 7);
    const auto r3 = init_parameters({InitKind::RandomUniform01, nullptr}, program, h4, 8);
    CHECK(r1 == r2);
    CHECK(r1 != r3);
    CHECK(r1.size() == 26);
    for (double v : r1) {
        CHECK(v >= 0.0);
        CHECK(v <= 1.0);
    }

    CHECK_THROWS_AS(init_parameters({InitKind::LstmFc, nullptr}, program, h4, 0), Error);
    auto pad = std::make_shared<const MetaModel>(
        MetaModel::create(MetaMode::PadTruncate, 30, 2, 0));
    CHECK_THROWS_AS(init_parameters({InitKind::LstmFc, pad}, program, h4, 0), Error);
    CHECK(init_parameters({InitKind::LstmPadTruncate, pad}, program, h4, 0).size() == 26);
}

TEST_CASE("run_vqe", "[vqe]") {
    SECTION("H2 from the reference reaches chemical accuracy with Adam") {
        const auto &h2 = fixture("H2");
        const auto t = run_vqe(h2, uccsd_program(h2), {},
                               OptimizerConfig::defaults(OptimizerKind::Adam));
        CHECK(t.final_error_mha < 1.6);
        CHECK(t.final_error_mha >= -1e-3);
        CHECK(t.iterations_to_converge < kNotConverged);
        CHECK(t.energies.size() == t.updates() + 1);
        // Optimal parameters reproduce the exact ground state of this
        // two-electron problem.
        GroundStateOptions opts;
        opts.particle_number = 2;
        const double exact = ground_state(h2.hamiltonian, opts).energy;
        CHECK(std::abs(energy(h2.hamiltonian, uccsd_program(h2), t.best_theta) - exact) <
              1.6e-3);
    }
    SECTION("H4 from the reference with plain SGD converges below the start") {
        const auto &h4 = fixture("H4");
        const auto t = run_vqe(h4, uccsd_program(h4), {},
                               OptimizerConfig::defaults(OptimizerKind::SGD));
        CHECK(t.iterations_to_converge < kNotConverged);
        CHECK_THAT(t.energies.front(), WithinAbs(h4.hf_energy_ha, 1e-10));
        CHECK(t.final_error_mha < t.error_mha(0));
        CHECK(t.final_error_mha >= -1e-3);
    }
    SECTION("infinite tolerance converges after one update") {
        const auto &h2 = fixture("H2");
        auto cfg = OptimizerConfig::defaults(OptimizerKind::Adam);
        cfg.conv_tol = std::numeric_limits<double>::infinity();
        cfg.conv_window = 1;
        const auto t = run_vqe(h2, uccsd_program(h2), {}, cfg);
        CHECK(t.iterations_to_converge == 1);
        CHECK(t.energies.size() == 2);
    }
    SECTION("update cap reports the sentinel") {
        const auto &h2 = fixture("H2");
        auto cfg = OptimizerConfig::defaults(OptimizerKind::SGD);
        cfg.max_iterations = 3;
        const auto t = run_vqe(h2, uccsd_program(h2), {}, cfg);
        CHECK(t.iterations_to_converge == kNotConverged);
        CHECK(t.updates() == 3);
    }
    SECTION("identical settings give identical traces") {
        const auto &h2 = fixture("H2");
        auto cfg = OptimizerConfig::defaults(OptimizerKind::SGD, ScheduleKind::ExpDecay);
        cfg.seed = 3;
        const InitStrategy init{InitKind::RandomUniform01, nullptr};
        const auto a = run_vqe(h2, uccsd_program(h2), init, cfg);
        const auto b = run_vqe(h2, uccsd_program(h2), init, cfg);
        CHECK(a.energies == b.energies);
        CHECK(a.best_theta == b.best_theta);
    }
    SECTION("register mismatch") {
        CHECK_THROWS_AS(run_vqe(fixture("H2"), uccsd_program(fixture("H4")), {},
                                OptimizerConfig{}),
                        Error);
    }
}

TEST_CASE("trace output", "[vqe]") {
    const auto &h2 = fixture("H2");
    auto cfg = OptimizerConfig::defaults(OptimizerKind::Adam);
    cfg.max_iterations = 2;
    cfg.theta_stride = 1;
    const auto t = run_vqe(h2, uccsd_program(h2), {}, cfg);
    CHECK(t.thetas.size() == 3);
    CHECK(t.iterations_to(1e9) == 0);
    CHECK(t.iterations_to(-1.0) == kNotConverged);

    std::ostringstream csv;
    write_trace_csv(csv, t);
    const std::string text = csv.str();
    CHECK(text.rfind("iteration,energy_ha,error_mha\n0,", 0) == 0);
    CHECK(std::count(text.begin(), text.end(), '\n') == 4);

    const auto summary = trace_summary_json(t, cfg);
    CHECK(summary.find("\"iterations_to_converge\":501") != std::string::npos);
    CHECK(summary.find("\"molecule\":\"H2\"") != std::string::npos);
}

TEST_CASE("option names", "[vqe]") {
    CHECK(parse_init_kind("lstm-fc") == InitKind::LstmFc);
    CHECK(to_string(parse_init_kind("random")) == "random");
    CHECK(parse_optimizer("sgd") == OptimizerKind::SGD);
    CHECK(parse_schedule("decay") == ScheduleKind::ExpDecay);
    CHECK_THROWS_AS(parse_init_kind("ones"), Error);
    CHECK_THROWS_AS(parse_optimizer("lbfgs"), Error);
    CHECK_THROWS_AS(parse_schedule("cosine"), Error);
}
